"""Shuffle-family products on noncommutative words, their Hopf-algebra
structure, word encodings of colored shifted nested series, symbolic
expansion of series products, and a truncated-series numeric verifier."""

from .errors import (AlphabetMismatchError, DiagonalError, DivergenceError,
                     PolyzetaError, ShapeError)
from .hopf import (CheckReport, TensorPolynomial, antipode,
                   antipode_recursive, check_antipode, check_bialgebra,
                   compositions, coproduct, counit, default_alphabet)
from .numeric import (EvalConfig, EvalResult, VerifyReport, check_prop_M,
                      eval_di, partial_M, verify_relation)
from .products import (DUFFLE, MINUS_STUFFLE, MULSTUFFLE, PRODUCTS, SHUFFLE,
                       STUFFLE, Bracket, duffle, duffle_bracket,
                       minus_stuffle, mulstuffle, mulstuffle_bracket,
                       shuffle, star, stuffle)
from .scalars import ExactColor, exact_color, root_of_unity
from .words import (EMPTY_WORD, Indexed, Letter, MonoidLetter, PairLetter,
                    Polynomial, Word, X0, XForm, concat, index_weight,
                    weight, word, x, y)
from .zeta import (LinComb, PolyzetaParams, decode, duffle_expand,
                   duffle_index, encode, shuffle_expand, tbar, tbar_inverse)

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError", "Bracket", "CheckReport", "DiagonalError",
    "DivergenceError", "DUFFLE", "EMPTY_WORD", "EvalConfig", "EvalResult",
    "ExactColor", "Indexed", "Letter", "LinComb", "MINUS_STUFFLE",
    "MULSTUFFLE", "MonoidLetter", "PairLetter", "Polynomial",
    "PolyzetaError", "PolyzetaParams", "PRODUCTS", "SHUFFLE", "STUFFLE",
    "ShapeError", "TensorPolynomial", "VerifyReport", "Word", "X0", "XForm",
    "antipode", "antipode_recursive", "check_antipode", "check_bialgebra",
    "check_prop_M", "compositions", "concat", "coproduct", "counit",
    "decode", "default_alphabet", "duffle", "duffle_bracket",
    "duffle_expand", "duffle_index", "encode", "eval_di", "exact_color",
    "index_weight", "minus_stuffle", "mulstuffle", "mulstuffle_bracket",
    "partial_M", "root_of_unity", "shuffle", "shuffle_expand", "star",
    "stuffle", "tbar", "tbar_inverse", "verify_relation", "weight", "word",
    "x", "y",
]
