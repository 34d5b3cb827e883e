"""Deconcatenation coproduct, counit, antipode and checkable Hopf axioms.

The coproduct splits a word into all prefix/suffix pairs; together with any
product from the bracket family this yields a bialgebra, and the signed
composition sum below provides the antipode. ``check_bialgebra`` and
``check_antipode`` verify the defining identities exhaustively over a
finite sample alphabet and report the first counterexample found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .products import Bracket, _star_raw, _star_words
from .words import (EMPTY_WORD, Letter, MonoidLetter, PairLetter,
                    Polynomial, Word, x, y)


class TensorPolynomial:
    """Finite combination of word pairs u (x) v, in canonical form.

    The bracket product acts componentwise:
    ``(u (x) v) * (u' (x) v') = (u * u') (x) (v * v')``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                if c == 0:
                    continue
                prev = data.get(key)
                if prev is None:
                    data[key] = c
                else:
                    prev = prev + c
                    if prev == 0:
                        del data[key]
                    else:
                        data[key] = prev
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "TensorPolynomial":
        t = object.__new__(cls)
        t.terms = data
        return t

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "TensorPolynomial") -> "TensorPolynomial":
        data = dict(self.terms)
        for key, c in other.terms.items():
            prev = data.get(key)
            if prev is None:
                data[key] = c
            else:
                prev = prev + c
                if prev == 0:
                    del data[key]
                else:
                    data[key] = prev
        return TensorPolynomial._raw(data)

    def __rmul__(self, scalar) -> "TensorPolynomial":
        if scalar == 0:
            return TensorPolynomial._raw({})
        return TensorPolynomial._raw(
            {key: scalar * c for key, c in self.terms.items()})

    __mul__ = __rmul__

    def star(self, br: Bracket, other: "TensorPolynomial") -> "TensorPolynomial":
        """Componentwise bracket product of tensors."""
        out: dict = {}
        for (u1, u2), c1 in self.terms.items():
            for (v1, v2), c2 in other.terms.items():
                c12 = c1 * c2
                left = _star_words(br, u1, v1)
                right = _star_words(br, u2, v2)
                for w1, a in left.items():
                    ca = c12 * a
                    for w2, b in right.items():
                        key = (w1, w2)
                        c = ca * b
                        prev = out.get(key)
                        out[key] = c if prev is None else prev + c
        return TensorPolynomial._raw({k: c for k, c in out.items() if c != 0})

    def left_prepended(self, letter: Letter) -> "TensorPolynomial":
        """(letter (x) 1) . T, concatenating on first components."""
        return TensorPolynomial._raw(
            {(u.prepended(letter), v): c for (u, v), c in self.terms.items()})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def __repr__(self) -> str:
        return "TensorPolynomial(%r)" % (self.terms,)


def coproduct(w: Union[Word, Polynomial]) -> TensorPolynomial:
    """Sum of all deconcatenation splittings u (x) v with uv = w,
    extended linearly to polynomials."""
    if isinstance(w, Word):
        return TensorPolynomial._raw(
            {(w[:i], w[i:]): 1 for i in range(len(w) + 1)})
    out: dict = {}
    for wd, c in w.terms.items():
        for i in range(len(wd) + 1):
            key = (wd[:i], wd[i:])
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return TensorPolynomial._raw({k: c for k, c in out.items() if c != 0})


def counit(s: Union[Word, Polynomial]):
    """Coefficient of the empty word."""
    if isinstance(s, Word):
        return 1 if len(s) == 0 else 0
    return s.coeff(EMPTY_WORD)


def compositions(n: int) -> list[tuple[int, ...]]:
    """All tuples of positive integers summing to n; 2^(n-1) of them.
    By the empty-word convention, n = 0 yields the single empty tuple."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [()]
    out = []
    # each composition corresponds to a subset of the n-1 cut points
    for mask in range(1 << (n - 1)):
        parts = []
        size = 1
        for pos in range(n - 1):
            if mask & (1 << pos):
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        out.append(tuple(parts))
    return out


def antipode(br: Bracket, w: Word) -> Polynomial:
    """Antipode as the signed composition sum

        a(x1...xn) = sum over (i1,...,ik) of (-1)^k  block1 * ... * blockk

    where the blocks cut the word into consecutive chunks of sizes
    i1,...,ik, multiplied with the bracket product; a(1) = 1.
    """
    memo = br._antipode_memo
    hit = memo.get(w)
    if hit is not None:
        return hit
    n = len(w)
    if n == 0:
        res = Polynomial.one()
    else:
        acc: dict = {}
        for comp in compositions(n):
            cur: dict = None
            pos = 0
            for size in comp:
                block = w[pos:pos + size]
                pos += size
                cur = {block: 1} if cur is None else _star_raw(br, cur, {block: 1})
            sign = -1 if len(comp) % 2 else 1
            for wd, c in cur.items():
                c = sign * c
                prev = acc.get(wd)
                acc[wd] = c if prev is None else prev + c
        res = Polynomial._raw({wd: c for wd, c in acc.items() if c != 0})
    memo[w] = res
    return res


def antipode_recursive(br: Bracket, w: Word) -> Polynomial:
    """Antipode through the characterization forced by the convolution
    axiom: summing a(prefix) * suffix over all splittings kills every
    nonempty word, hence

        a(w) = -w - sum over 0 < k < n of a(x1...xk) * x(k+1)...xn

    with a(1) = 1 (and so a(letter) = -letter)."""
    memo = br._antipode_rec_memo
    hit = memo.get(w)
    if hit is not None:
        return hit
    n = len(w)
    if n == 0:
        res = Polynomial.one()
    else:
        acc = {w: -1}
        for k in range(1, n):
            part = _star_raw(br, antipode_recursive(br, w[:k]).terms,
                             {w[k:]: 1})
            for wd, c in part.items():
                prev = acc.get(wd)
                c = -c
                acc[wd] = c if prev is None else prev + c
        res = Polynomial._raw({wd: c for wd, c in acc.items() if c != 0})
    memo[w] = res
    return res


@dataclass(frozen=True, slots=True)
class CheckReport:
    """Outcome of an exhaustive axiom check over a finite alphabet."""

    axiom: str
    ok: bool
    checked: int
    counterexample: Optional[dict] = None

    @property
    def status(self) -> str:
        return "ok" if self.ok else "counterexample"


def default_alphabet(br: Bracket) -> tuple[Letter, ...]:
    """Finite sample alphabet used by the exhaustive checks.

    The contraction brackets close over these letters (index sums and
    rational products stay representable), so checks never escape the
    alphabet kind.
    """
    name = br.name
    if name == "shuffle":
        return (x(0), x(1))
    if name in ("stuffle", "minusstuffle"):
        return (y(1), y(2), y(3))
    rationals = (Fraction(2, 3), Fraction(-1), Fraction(1, 2), Fraction(3))
    if name.startswith("mulstuffle"):
        return tuple(MonoidLetter(v) for v in rationals)
    if name.startswith("duffle"):
        return tuple(PairLetter(i + 1, v) for i, v in enumerate(rationals[:3]))
    raise ValueError(f"no default alphabet for bracket {name!r}")


def _words_of_length(alphabet: Sequence[Letter], n: int):
    for combo in itertools.product(alphabet, repeat=n):
        yield Word(combo)


def check_bialgebra(br: Bracket, maxlen: int,
                    alphabet: Optional[Sequence[Letter]] = None) -> CheckReport:
    """Verify, on all word pairs with |w1| + |w2| <= maxlen over the sample
    alphabet, that the product is commutative (where a symmetry violation
    of the bracket surfaces) and that it is compatible with the coproduct:
    coproduct(w1 * w2) = coproduct(w1) * coproduct(w2)."""
    if alphabet is None:
        alphabet = default_alphabet(br)
    checked = 0
    for total in range(maxlen + 1):
        for n1 in range(total + 1):
            for w1 in _words_of_length(alphabet, n1):
                cop1 = coproduct(w1)
                for w2 in _words_of_length(alphabet, total - n1):
                    prod = _star_words(br, w1, w2)
                    checked += 1
                    if prod != _star_words(br, w2, w1):
                        return CheckReport(
                            "bialgebra-commutativity", False, checked,
                            {"left": w1, "right": w2})
                    lhs = cop1.star(br, coproduct(w2))
                    rhs = coproduct(Polynomial._raw(prod))
                    if lhs != rhs:
                        return CheckReport(
                            "bialgebra-compatibility", False, checked,
                            {"left": w1, "right": w2})
    return CheckReport("bialgebra", True, checked)


def check_antipode(br: Bracket, maxlen: int,
                   alphabet: Optional[Sequence[Letter]] = None) -> CheckReport:
    """Verify both convolution axioms,

        sum a(u) * v = sum u * a(v) = <w|1> 1   over splittings uv = w,

    on all words of length <= maxlen over the sample alphabet."""
    if alphabet is None:
        alphabet = default_alphabet(br)
    checked = 0
    for n in range(maxlen + 1):
        for w in _words_of_length(alphabet, n):
            expect = Polynomial.one() if n == 0 else Polynomial.zero()
            left = Polynomial.zero()
            right = Polynomial.zero()
            for i in range(n + 1):
                u, v = w[:i], w[i:]
                left += Polynomial._raw(
                    _star_raw(br, antipode(br, u).terms, {v: 1}))
                right += Polynomial._raw(
                    _star_raw(br, {u: 1}, antipode(br, v).terms))
            checked += 1
            if left != expect:
                return CheckReport("antipode-left", False, checked, {"word": w})
            if right != expect:
                return CheckReport("antipode-right", False, checked, {"word": w})
    return CheckReport("antipode", True, checked)
