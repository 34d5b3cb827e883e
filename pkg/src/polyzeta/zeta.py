"""Parameter-level calculus for colored, shifted nested series.

A parameter set (s, xi, t) of equal length r describes the nested sum

    sum over n1 > ... > nr > 0 of
        xi_1^n1 ... xi_r^nr / ((n1 - t_1)^s1 ... (nr - t_r)^sr)

with a composition s, nonzero colors xi and shifts t < 1. This module
provides the word encoding of such parameter sets over the ``X0``/``XForm``
alphabet, its inverse, and the two symbolic expansions of a product of two
series into a formal combination of series: through the word interleaving
of the encodings (``shuffle_expand``) and through the contraction product
on (s, xi) tuples at a common diagonal shift (``duffle_expand``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import DiagonalError, DivergenceError, ShapeError
from .products import SHUFFLE, _star_words
from .scalars import Color, Real, color_abs, color_sort_key
from .words import Word, X0, XForm

_X0 = X0()


def _as_shift(value) -> Real:
    """Shifts stay exact when given exactly; floats stay floats."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return value


@dataclass(frozen=True, slots=True)
class PolyzetaParams:
    """A parameter triple (s, xi, t) of common depth r >= 0.

    Depth 0 is the empty triple and stands for the constant 1.
    """

    s: tuple[int, ...] = ()
    xi: tuple[Color, ...] = ()
    t: tuple[Real, ...] = ()

    def __post_init__(self):
        if not (len(self.s) == len(self.xi) == len(self.t)):
            raise ValueError("s, xi and t must have equal lengths")
        if any(not isinstance(si, int) or si < 1 for si in self.s):
            raise ValueError("exponents must be positive integers")
        if any(c == 0 for c in self.xi):
            raise ValueError("colors must be nonzero")
        if any(isinstance(ti, complex) for ti in self.t):
            raise ValueError("shifts must be real")

    @classmethod
    def of(cls, s: Iterable[int], xi: Iterable[Color],
           t: Iterable[Real]) -> "PolyzetaParams":
        return cls(tuple(int(v) for v in s), tuple(xi),
                   tuple(_as_shift(v) for v in t))

    @classmethod
    def unit(cls) -> "PolyzetaParams":
        return cls()

    @property
    def depth(self) -> int:
        return len(self.s)

    @property
    def weight(self) -> int:
        return sum(self.s)

    def cumulative_colors(self) -> tuple[Color, ...]:
        out = []
        c: Color = 1
        for v in self.xi:
            c = c * v
            out.append(c)
        return tuple(out)

    def satisfies_condition_e(self) -> bool:
        """All prefix products of colors have modulus <= 1 and all
        shifts are < 1 (the convergence hypothesis of the series)."""
        return (all(color_abs(c) <= 1 for c in self.cumulative_colors())
                and all(ti < 1 for ti in self.t))

    def is_convergent(self) -> bool:
        """True when the nested sum converges: s1 > 1, or s1 = 1 with
        |xi_1| < 1 (geometric damping)."""
        if self.depth == 0:
            return True
        if self.s[0] > 1:
            return True
        return self.s[0] == 1 and color_abs(self.xi[0]) < 1

    def sort_key(self) -> tuple:
        return (self.depth, self.s,
                tuple(color_sort_key(c) for c in self.xi),
                tuple(float(v) for v in self.t))

    def pretty(self) -> str:
        s = ",".join(str(v) for v in self.s)
        xi = ",".join(str(v) for v in self.xi)
        t = ",".join(str(v) for v in self.t)
        return f"Z(s=({s}); xi=({xi}); t=({t}))"

    def __repr__(self) -> str:
        return f"PolyzetaParams(s={self.s!r}, xi={self.xi!r}, t={self.t!r})"


class LinComb:
    """Formal finite combination of hashable terms, in canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable, None] = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for term, c in items:
                if c == 0:
                    continue
                prev = data.get(term)
                if prev is None:
                    data[term] = c
                else:
                    prev = prev + c
                    if prev == 0:
                        del data[term]
                    else:
                        data[term] = prev
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "LinComb":
        lc = object.__new__(cls)
        lc.terms = data
        return lc

    @classmethod
    def single(cls, term, coeff=1) -> "LinComb":
        return cls._raw({term: coeff}) if coeff != 0 else cls._raw({})

    def coeff(self, term):
        return self.terms.get(term, 0)

    def add_term(self, term, coeff) -> None:
        # builder-style mutation; not part of the value interface
        if coeff == 0:
            return
        prev = self.terms.get(term)
        if prev is None:
            self.terms[term] = coeff
        else:
            prev = prev + coeff
            if prev == 0:
                del self.terms[term]
            else:
                self.terms[term] = prev

    def __add__(self, other: "LinComb") -> "LinComb":
        out = LinComb._raw(dict(self.terms))
        for term, c in other.terms.items():
            out.add_term(term, c)
        return out

    def __rmul__(self, scalar) -> "LinComb":
        if scalar == 0:
            return LinComb._raw({})
        return LinComb._raw({k: scalar * c for k, c in self.terms.items()})

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list:
        def key(kv):
            term = kv[0]
            return term.sort_key() if hasattr(term, "sort_key") else repr(term)
        return sorted(self.terms.items(), key=key)

    def total_mass(self):
        return sum(self.terms.values())

    def __repr__(self) -> str:
        return "LinComb(%r)" % (self.terms,)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for term, c in self.sorted_terms():
            name = term.pretty() if hasattr(term, "pretty") else repr(term)
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


def tbar(t: Sequence[Real]) -> tuple[Real, ...]:
    """Consecutive differences of the shifts: tb_i = t_i - t_(i+1) for
    i < r and tb_r = t_r, the unique map inverted by suffix sums."""
    r = len(t)
    if r == 0:
        return ()
    return tuple(t[i] - t[i + 1] for i in range(r - 1)) + (t[r - 1],)


def tbar_inverse(tb: Sequence[Real]) -> tuple[Real, ...]:
    """Suffix sums: t_i = tb_i + ... + tb_r."""
    out = []
    acc: Real = 0
    for v in reversed(tb):
        acc = v + acc
        out.append(acc)
    return tuple(reversed(out))


def encode(p: PolyzetaParams) -> Word:
    """Encoding word x0^(s1-1) X1 ... x0^(sr-1) Xr where the i-th form
    letter carries the cumulative color xi_1...xi_i and the shift
    difference tb_i. Depth 0 encodes to the empty word."""
    letters: list = []
    tb = tbar(p.t)
    for si, ci, tbi in zip(p.s, p.cumulative_colors(), tb):
        letters.extend([_X0] * (si - 1))
        letters.append(XForm(ci, tbi))
    return Word(letters)


def decode(w: Word) -> PolyzetaParams:
    """Read a word of shape (x0^* XForm)+ back into parameters.

    With cumulative colors c_1..c_r and shift differences tb_1..tb_r in
    word order: s_i = 1 + (number of x0 before the i-th form letter since
    the previous one), xi_1 = c_1, xi_i = c_i / c_(i-1), and
    t_i = tb_i + ... + tb_r.
    """
    if len(w) == 0:
        raise ShapeError("cannot decode the empty word")
    if w.kind != "encoded":
        raise ShapeError(f"cannot decode a word over the {w.kind!r} alphabet")
    if not isinstance(w.letters[-1], XForm):
        raise ShapeError("encoded word must end with a form letter")
    s: list[int] = []
    colors: list[Color] = []
    tbs: list[Real] = []
    run = 0
    for letter in w.letters:
        if isinstance(letter, X0):
            run += 1
        else:
            s.append(run + 1)
            colors.append(letter.color)
            tbs.append(letter.tbar)
            run = 0
    xi: list[Color] = []
    prev: Optional[Color] = None
    for c in colors:
        if prev is None:
            xi.append(c)
        else:
            if c == 0 or prev == 0:
                raise ShapeError("zero cumulative color in encoded word")
            xi.append(c / prev)
        prev = c
    return PolyzetaParams(tuple(s), tuple(xi), tbar_inverse(tbs))


def shuffle_expand(p: PolyzetaParams, q: PolyzetaParams) -> LinComb:
    """Expand the product of two series through the word interleaving of
    their encodings: every interleaving decodes to a parameter set, and
    the multiplicities become the coefficients.

    Both inputs must be convergent; every output term then is (the first
    form letter of an interleaving is the first form letter of one of the
    inputs, so leading exponents or leading moduli carry over).
    """
    if p.depth == 0:
        return LinComb.single(q)
    if q.depth == 0:
        return LinComb.single(p)
    for name, params in (("left", p), ("right", q)):
        if not params.is_convergent():
            raise DivergenceError(
                f"{name} factor {params.pretty()} is divergent; "
                "the interleaving expansion is defined on convergent series")
    out = LinComb()
    for wd, coeff in _star_words(SHUFFLE, encode(p), encode(q)).items():
        term = decode(wd)
        assert term.is_convergent(), "interleaving produced a divergent term"
        out.add_term(term, coeff)
    return out


def duffle_index(s: tuple[int, ...], xi: tuple[Color, ...],
                 r: tuple[int, ...], rho: tuple[Color, ...]) -> LinComb:
    """The contraction product on (composition, colors) pairs:

        (s1,s; x1,x) . (r1,r; p1,p) =
              (s1; x1) . (s,x  *  r1,r; p1,p)
            + (r1; p1) . (s1,s; x1,x  *  r,p)
            + (s1+r1; x1*p1) . (s,x  *  r,p)

    with the empty pair as unit. Terms are (s, xi) tuples; identical terms
    merge by coefficient addition.
    """
    if len(s) != len(xi) or len(r) != len(rho):
        raise ValueError("composition and color tuple lengths must match")
    if not s:
        return LinComb.single((r, rho))
    if not r:
        return LinComb.single((s, xi))
    out = LinComb()
    head_s, head_xi = s[0], xi[0]
    head_r, head_rho = r[0], rho[0]
    for (ts, txi), c in duffle_index(s[1:], xi[1:], r, rho):
        out.add_term(((head_s,) + ts, (head_xi,) + txi), c)
    for (ts, txi), c in duffle_index(s, xi, r[1:], rho[1:]):
        out.add_term(((head_r,) + ts, (head_rho,) + txi), c)
    merged = head_xi * head_rho
    for (ts, txi), c in duffle_index(s[1:], xi[1:], r[1:], rho[1:]):
        out.add_term(((head_s + head_r,) + ts, (merged,) + txi), c)
    return out


def _diagonal_shift(p: PolyzetaParams) -> Optional[Real]:
    if p.depth == 0:
        return None
    first = p.t[0]
    if any(ti != first for ti in p.t[1:]):
        raise DiagonalError(
            f"shift tuple {p.t!r} is not constant; the contraction "
            "expansion needs one common diagonal shift")
    return first


def duffle_expand(p: PolyzetaParams, q: PolyzetaParams) -> LinComb:
    """Expand the product of two series sharing one diagonal shift t
    through the contraction product on (s, xi) pairs; every output term
    carries the diagonal shift tuple of its own depth."""
    tp = _diagonal_shift(p)
    tq = _diagonal_shift(q)
    if tp is not None and tq is not None and tp != tq:
        raise DiagonalError(
            f"shifts differ between factors ({tp!r} vs {tq!r})")
    t = tp if tp is not None else tq
    if p.depth == 0:
        return LinComb.single(q)
    if q.depth == 0:
        return LinComb.single(p)
    out = LinComb()
    for (ts, txi), c in duffle_index(p.s, p.xi, q.s, q.xi):
        out.add_term(PolyzetaParams(ts, txi, (t,) * len(ts)), c)
    return out
