"""Free monoid over the parameterized alphabets, and noncommutative polynomials.

Letters come in four alphabet kinds:

* ``Indexed``      natural-number index with a display family ("x", "y", ...),
* ``MonoidLetter`` indexed by an element of a commutative monoid
                   (default: nonzero rationals under multiplication),
* ``PairLetter``   a positive index paired with a monoid element,
* ``X0`` / ``XForm``   the encoding alphabet: a plain integration slot and a
                   form letter carrying a cumulative color and a shift
                   difference.

Words are immutable; ``u + v`` concatenates and ``Word()`` is the unit.
A :class:`Polynomial` is a finite formal combination of words over any
coefficient ring whose elements support ``+``, ``*`` and ``== 0``
(int, Fraction and complex all qualify).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

from .errors import AlphabetMismatchError
from .scalars import Color, Real, color_sort_key

_SUB = str.maketrans("0123456789-", "₀₁₂₃₄₅₆₇₈₉₋")
_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _subscript(value) -> str:
    text = str(value)
    if text.lstrip("-").isdigit():
        return text.translate(_SUB)
    return "_{%s}" % text


@dataclass(frozen=True, slots=True)
class Indexed:
    """Letter indexed by a nonnegative integer, e.g. x0, x1 or y3."""

    index: int
    family: str = "x"
    kind = "indexed"

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("index must be >= 0")

    def pretty(self) -> str:
        return self.family + _subscript(self.index)

    def sort_key(self) -> tuple:
        return (self.family, self.index)


@dataclass(frozen=True, slots=True)
class MonoidLetter:
    """Letter indexed by an element of a commutative monoid."""

    value: object
    kind = "monoid"

    def pretty(self) -> str:
        return "x" + _subscript(self.value)

    def sort_key(self) -> tuple:
        return color_sort_key(self.value)


@dataclass(frozen=True, slots=True)
class PairLetter:
    """Paired letter (index, monoid element); the paired-alphabet product
    contracts indices additively and values multiplicatively."""

    index: int
    value: object
    kind = "pair"

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("pair index must be >= 1")

    def pretty(self) -> str:
        return "(y%s,e%s)" % (_subscript(self.index), _subscript(self.value))

    def sort_key(self) -> tuple:
        return (self.index,) + color_sort_key(self.value)


@dataclass(frozen=True, slots=True)
class X0:
    """The integration-slot letter of the encoding alphabet."""

    kind = "encoded"

    def pretty(self) -> str:
        return "x₀"

    def sort_key(self) -> tuple:
        return (0,)


@dataclass(frozen=True, slots=True)
class XForm:
    """Form letter of the encoding alphabet.

    Carries the *cumulative* color (the running product of the colors up to
    this position) and the shift difference attached to the position. The
    cumulative convention makes decoding well defined on arbitrary
    interleavings of encoded words.
    """

    color: Color
    tbar: Real
    kind = "encoded"

    def __post_init__(self):
        if self.color == 0:
            raise ValueError("cumulative color must be nonzero")

    def pretty(self) -> str:
        return "x_{%s;%s}" % (self.color, self.tbar)

    def sort_key(self) -> tuple:
        t = self.tbar
        tf = Fraction(t) if isinstance(t, (int, Fraction)) else t
        return (1,) + color_sort_key(self.color) + (float(tf),)


Letter = Union[Indexed, MonoidLetter, PairLetter, X0, XForm]


def x(i: int) -> Indexed:
    return Indexed(i, "x")


def y(i: int) -> Indexed:
    return Indexed(i, "y")


class Word:
    """An immutable word over a single alphabet kind.

    Words form the free monoid: ``u + v`` concatenates, ``Word()`` is the
    two-sided unit (compatible with every kind). Slicing returns words.
    """

    __slots__ = ("letters", "kind", "_hash")

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        kind = None
        for letter in letters:
            if kind is None:
                kind = letter.kind
            elif letter.kind != kind:
                raise AlphabetMismatchError(
                    f"word mixes alphabet kinds {kind!r} and {letter.kind!r}")
        self.letters = letters
        self.kind = kind
        self._hash = hash(letters)

    @classmethod
    def _make(cls, letters: tuple, kind) -> "Word":
        # internal fast path: letters already validated
        w = object.__new__(cls)
        w.letters = letters
        w.kind = kind
        w._hash = hash(letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            sub = self.letters[item]
            return Word._make(sub, self.kind if sub else None)
        return self.letters[item]

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return "Word(%s)" % (list(self.letters),)

    def prepended(self, letter: Letter) -> "Word":
        if self.kind is not None and letter.kind != self.kind:
            raise AlphabetMismatchError(
                f"cannot prepend {letter.kind!r} letter to {self.kind!r} word")
        return Word._make((letter,) + self.letters, letter.kind)

    def sort_key(self) -> tuple:
        return (len(self.letters), tuple(l.sort_key() for l in self.letters))

    def pretty(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            run = self.letters[i].pretty()
            if j - i > 1:
                run += str(j - i).translate(_SUP)
            parts.append(run)
            i = j
        return "".join(parts)


EMPTY_WORD = Word()


def word(*letters: Letter) -> Word:
    return Word(letters)


def concat(u: Word, v: Word) -> Word:
    """Concatenation, the free-monoid product. Lengths add."""
    if u.kind is not None and v.kind is not None and u.kind != v.kind:
        raise AlphabetMismatchError(
            f"cannot concatenate {u.kind!r} word with {v.kind!r} word")
    if not u.letters:
        return v
    if not v.letters:
        return u
    return Word._make(u.letters + v.letters, u.kind)


def weight(w: Word, wt: Callable[[Letter], int]) -> int:
    """Sum of letter weights; the empty word has weight 0."""
    return sum(wt(letter) for letter in w.letters)


def index_weight(letter: Letter) -> int:
    """The usual grading on index-carrying letters."""
    return letter.index


class Polynomial:
    """Finite formal linear combination of words, in canonical form.

    Stored as a word -> coefficient map with no zero coefficients, so
    structural equality is semantic equality. Coefficients may be any
    scalars supporting ``+``, ``*`` and comparison with 0.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping[Word, object], Iterable[tuple], None] = None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for w, c in items:
                if c == 0:
                    continue
                acc = data.get(w)
                if acc is None:
                    data[w] = c
                else:
                    acc = acc + c
                    if acc == 0:
                        del data[w]
                    else:
                        data[w] = acc
        self.terms = data

    @classmethod
    def _raw(cls, data: dict) -> "Polynomial":
        # internal: data already canonical (no zeros, merged)
        p = object.__new__(cls)
        p.terms = data
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({EMPTY_WORD: 1})

    @classmethod
    def monomial(cls, w: Word, coeff=1) -> "Polynomial":
        return cls._raw({w: coeff}) if coeff != 0 else cls._raw({})

    def coeff(self, w: Word):
        """The coefficient of ``w``, 0 if absent."""
        return self.terms.get(w, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        data = dict(self.terms)
        for w, c in other.terms.items():
            acc = data.get(w)
            if acc is None:
                data[w] = c
            else:
                acc = acc + c
                if acc == 0:
                    del data[w]
                else:
                    data[w] = acc
        return Polynomial._raw(data)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-1) * other

    def __neg__(self) -> "Polynomial":
        return (-1) * self

    def __rmul__(self, scalar) -> "Polynomial":
        if isinstance(scalar, Polynomial):
            raise TypeError("polynomials multiply through a bracket product, "
                            "not '*'")
        if scalar == 0:
            return Polynomial._raw({})
        return Polynomial._raw({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, scalar) -> "Polynomial":
        return self.__rmul__(scalar)

    def prepended(self, letter: Letter, factor=1) -> "Polynomial":
        """Left-multiply every word by a letter, optionally scaling."""
        if factor == 0:
            return Polynomial._raw({})
        return Polynomial._raw(
            {w.prepended(letter): factor * c for w, c in self.terms.items()})

    def support(self) -> list[Word]:
        return sorted(self.terms, key=Word.sort_key)

    def sorted_terms(self) -> list[tuple[Word, object]]:
        """Terms in graded-lexicographic word order."""
        return [(w, self.terms[w]) for w in self.support()]

    def coefficient_sum(self):
        return sum(self.terms.values())

    def __repr__(self) -> str:
        return "Polynomial(%r)" % (self.terms,)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            if isinstance(c, complex):
                coeff, sign = f"({c})", "+"
            else:
                sign = "-" if c < 0 else "+"
                mag = -c if c < 0 else c
                coeff = "" if mag == 1 and w else str(mag)
            term = (coeff + w.pretty()) if coeff else w.pretty()
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text
