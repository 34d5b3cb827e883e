"""The bracketed interleaving product and its five named instances.

One recursive engine covers the whole product family: a product is selected
by a *bracket*, a symmetric associative pairing on scaled letters. The
bracket returns ``None`` for zero (plain shuffle) or a ``(coefficient,
letter)`` pair for a contraction; the recursion is

    au * bv  =  a (u * bv)  +  b (au * v)  +  [a, b] (u * v)

extended bilinearly, with the empty word as unit. Expansions are memoized
on word pairs per bracket; entries are write-once, so a shared bracket is
safe to use from several threads.
"""

from __future__ import annotations

import operator
from typing import Callable, Optional, Union

from .errors import AlphabetMismatchError
from .words import Indexed, Letter, MonoidLetter, PairLetter, Polynomial, Word

BracketResult = Optional[tuple[object, Letter]]


class Bracket:
    """A commutative, associative pairing on scaled letters.

    ``fn(a, b)`` returns ``None`` (bracket is zero) or ``(coeff, letter)``.
    ``kinds`` restricts the alphabet kinds the bracket accepts; ``None``
    accepts any kind (the pairing never inspects the letters).
    """

    __slots__ = ("name", "fn", "kinds", "_star_memo", "_antipode_memo",
                 "_antipode_rec_memo")

    def __init__(self, name: str, fn: Callable[[Letter, Letter], BracketResult],
                 kinds: Optional[tuple[str, ...]] = None):
        self.name = name
        self.fn = fn
        self.kinds = kinds
        self._star_memo: dict = {}
        self._antipode_memo: dict = {}
        self._antipode_rec_memo: dict = {}

    def apply(self, a: Letter, b: Letter) -> BracketResult:
        if self.kinds is not None and a.kind not in self.kinds:
            raise AlphabetMismatchError(
                f"bracket {self.name!r} is undefined on {a.kind!r} letters")
        return self.fn(a, b)

    def __repr__(self) -> str:
        return f"Bracket({self.name!r})"


def _star_words(br: Bracket, u: Word, v: Word) -> dict:
    """Raw expansion of u * v as a word -> coefficient dict (memoized)."""
    memo = br._star_memo
    key = (u, v)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not u.letters:
        res = {v: 1}
    elif not v.letters:
        res = {u: 1}
    else:
        a, b = u.letters[0], v.letters[0]
        acc: dict = {}
        for rest, head, factor in (
            (_star_words(br, u[1:], v), a, 1),
            (_star_words(br, u, v[1:]), b, 1),
        ):
            for w, c in rest.items():
                nw = w.prepended(head)
                c = factor * c
                prev = acc.get(nw)
                acc[nw] = c if prev is None else prev + c
        pair = br.apply(a, b)
        if pair is not None:
            factor, head = pair
            for w, c in _star_words(br, u[1:], v[1:]).items():
                nw = w.prepended(head)
                c = factor * c
                prev = acc.get(nw)
                acc[nw] = c if prev is None else prev + c
        res = {w: c for w, c in acc.items() if c != 0}
    memo[key] = res
    return res


def _star_raw(br: Bracket, left: dict, right: dict) -> dict:
    """Bilinear extension on raw term dicts."""
    out: dict = {}
    for u, cu in left.items():
        for v, cv in right.items():
            cuv = cu * cv
            for w, c in _star_words(br, u, v).items():
                c = cuv * c
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
    return {w: c for w, c in out.items() if c != 0}


def star(br: Bracket, left: Union[Word, Polynomial], right: Union[Word, Polynomial]) -> Polynomial:
    """The bracket-selected product, extended bilinearly to polynomials."""
    lt = left.terms if isinstance(left, Polynomial) else {left: 1}
    rt = right.terms if isinstance(right, Polynomial) else {right: 1}
    return Polynomial._raw(_star_raw(br, lt, rt))


def _zero_bracket(a: Letter, b: Letter) -> BracketResult:
    return None


def _stuffle_fn(a: Indexed, b: Indexed) -> BracketResult:
    if a.family != b.family:
        raise AlphabetMismatchError(
            f"cannot contract letters from families {a.family!r} and {b.family!r}")
    return (1, Indexed(a.index + b.index, a.family))


def _minus_stuffle_fn(a: Indexed, b: Indexed) -> BracketResult:
    if a.family != b.family:
        raise AlphabetMismatchError(
            f"cannot contract letters from families {a.family!r} and {b.family!r}")
    return (-1, Indexed(a.index + b.index, a.family))


def mulstuffle_bracket(combine: Callable = operator.mul,
                       name: str = "mulstuffle") -> Bracket:
    """Contraction bracket on monoid-indexed letters; the monoid operation
    is pluggable (default: multiplication, e.g. of nonzero rationals)."""

    def fn(a: MonoidLetter, b: MonoidLetter) -> BracketResult:
        return (1, MonoidLetter(combine(a.value, b.value)))

    return Bracket(name, fn, kinds=("monoid",))


def duffle_bracket(combine: Callable = operator.mul,
                   name: str = "duffle") -> Bracket:
    """Pairwise contraction on the paired alphabet: indices add, monoid
    parts combine (default: multiply)."""

    def fn(a: PairLetter, b: PairLetter) -> BracketResult:
        return (1, PairLetter(a.index + b.index, combine(a.value, b.value)))

    return Bracket(name, fn, kinds=("pair",))


SHUFFLE = Bracket("shuffle", _zero_bracket, kinds=None)
STUFFLE = Bracket("stuffle", _stuffle_fn, kinds=("indexed",))
MINUS_STUFFLE = Bracket("minusstuffle", _minus_stuffle_fn, kinds=("indexed",))
MULSTUFFLE = mulstuffle_bracket()
DUFFLE = duffle_bracket()

PRODUCTS: dict[str, Bracket] = {
    br.name: br for br in (SHUFFLE, STUFFLE, MINUS_STUFFLE, MULSTUFFLE, DUFFLE)
}


def shuffle(left, right) -> Polynomial:
    return star(SHUFFLE, left, right)


def stuffle(left, right) -> Polynomial:
    return star(STUFFLE, left, right)


def minus_stuffle(left, right) -> Polynomial:
    return star(MINUS_STUFFLE, left, right)


def mulstuffle(left, right) -> Polynomial:
    return star(MULSTUFFLE, left, right)


def duffle(left, right) -> Polynomial:
    return star(DUFFLE, left, right)


def monoid_exponents_bracket() -> Bracket:
    """Mulstuffle over the additive-integer monoid (exponents of a fixed
    root of unity)."""
    return mulstuffle_bracket(operator.add, name="mulstuffle+")
