"""Truncated univariate power series over the rationals.

A :class:`TruncatedSeries` stores the coefficients of ``t^0 .. t^(N-1)``
exactly as :class:`fractions.Fraction` values; everything at or above
``t^N`` is unknown.  Binary operations keep ``min`` of the operand
precisions, differentiation drops one, so nothing is ever claimed beyond
what the inputs determine.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

from .errors import ParseError, PrecisionExhausted

__all__ = [
    "Known",
    "Undetermined",
    "Order",
    "TruncatedSeries",
    "DEFAULT_PRECISION",
    "MAX_DET_SIZE",
    "parse_polynomial",
    "parse_series",
    "series_mul",
    "series_derivative",
    "series_order",
    "series_det",
]

DEFAULT_PRECISION = 64
MAX_DET_SIZE = 9

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Known:
    """The series has a nonzero coefficient at ``t^k`` and nothing below."""

    k: int


@dataclass(frozen=True)
class Undetermined:
    """Every known coefficient vanishes; the order is at least ``precision``."""

    precision: int


Order = Union[Known, Undetermined]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]
    truncated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs precision >= 1")
        if not all(type(c) is Fraction for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------
    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar], precision: int) -> "TruncatedSeries":
        """Build from a ``{degree: coefficient}`` map, dropping degrees >= precision."""
        if precision < 1:
            raise ValueError(f"precision must be positive, got {precision}")
        coeffs = [Fraction(0)] * precision
        truncated = False
        for deg, c in terms.items():
            if deg < 0:
                raise ValueError(f"negative exponent {deg}")
            if deg >= precision:
                if c != 0:
                    truncated = True
                continue
            coeffs[deg] += Fraction(c)
        return cls(tuple(coeffs), truncated)

    @classmethod
    def constant(cls, c: Scalar, precision: int = DEFAULT_PRECISION) -> "TruncatedSeries":
        return cls.from_terms({0: c}, precision)

    @classmethod
    def monomial(cls, k: int, precision: int = DEFAULT_PRECISION, c: Scalar = 1) -> "TruncatedSeries":
        return cls.from_terms({k: c}, precision)

    @classmethod
    def zero(cls, precision: int = DEFAULT_PRECISION) -> "TruncatedSeries":
        return cls((Fraction(0),) * precision)

    # -- basic queries ------------------------------------------------
    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError(i)
        if i >= self.precision:
            raise IndexError(f"coefficient of t^{i} is beyond precision {self.precision}")
        return self.coeffs[i]

    def order(self) -> Order:
        return series_order(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise ValueError(f"cannot raise precision from {self.precision} to {precision}")
        if precision == self.precision:
            return self
        return TruncatedSeries(self.coeffs[:precision])

    def degree(self) -> int:
        """Highest index carrying a nonzero coefficient (-1 for the zero series)."""
        for i in range(self.precision - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.precision, other.precision)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSeries(tuple(a * c for a in self.coeffs))
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self) -> "TruncatedSeries":
        return series_derivative(self)

    # -- display ------------------------------------------------------
    def to_text(self, var: str = "t") -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        if not parts:
            text = "0"
        else:
            text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, body in parts[1:]:
                text += f" {sign} {body}"
        return f"{text} + O({var}^{self.precision})"

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()})"


# -- parsing -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_polynomial(text: str) -> Tuple[Dict[int, Fraction], str | None]:
    """Parse ``c``, ``c*t^k``, ``t^k``, ``t`` terms joined by ``+``/``-``.

    Returns the ``{degree: coefficient}`` map (zero coefficients dropped)
    and the variable name, or ``None`` if the text is a constant.
    Coefficients are integers or ``p/q``.
    """
    tokens = _tokenize(text)
    i = 0
    var_name = None
    terms: Dict[int, Fraction] = {}

    def peek():
        return tokens[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = tokens[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", tok[2])
        i += 1
        return tok

    def number():
        num = Fraction(int(take("num")[1]))
        if peek()[1] == "/":
            take("op", "/")
            den_tok = take("num")
            if int(den_tok[1]) == 0:
                raise ParseError("zero denominator", den_tok[2])
            num /= int(den_tok[1])
        return num

    def monomial():
        nonlocal var_name
        tok = take("var")
        if var_name is None:
            var_name = tok[1]
        elif tok[1] != var_name:
            raise ParseError(f"second variable {tok[1]!r} (already using {var_name!r})", tok[2])
        if peek()[1] == "^":
            take("op", "^")
            return int(take("num")[1])
        return 1

    sign = Fraction(1)
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = Fraction(-1) if take("op")[1] == "-" else Fraction(1)
    while True:
        kind = peek()[0]
        if kind == "num":
            coeff = number()
            deg = 0
            if peek()[1] == "*":
                take("op", "*")
                deg = monomial()
        elif kind == "var":
            coeff = Fraction(1)
            deg = monomial()
        else:
            tok = peek()
            raise ParseError(f"expected a term, got {tok[1] or 'end of input'!r}", tok[2])
        terms[deg] = terms.get(deg, Fraction(0)) + sign * coeff
        tok = peek()
        if tok[0] == "end":
            break
        if tok[1] not in ("+", "-"):
            raise ParseError(f"expected '+' or '-', got {tok[1]!r}", tok[2])
        sign = Fraction(-1) if take("op")[1] == "-" else Fraction(1)
    return {d: c for d, c in terms.items() if c}, var_name


def parse_series(text: str, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
    """Parse a polynomial expression and truncate it at ``t^precision``.

    >>> parse_series("t^2 - 1", 4).coeffs
    (Fraction(-1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1))
    """
    terms, _ = parse_polynomial(text)
    return TruncatedSeries.from_terms(terms, precision)


# -- core operations ---------------------------------------------------

def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.precision, b.precision)
    # sparse loop: multipliers and sections are mostly short polynomials
    nz_a = [(i, c) for i, c in enumerate(a.coeffs[:n]) if c]
    nz_b = [(j, c) for j, c in enumerate(b.coeffs[:n]) if c]
    out = [_ZERO] * n
    for i, ai in nz_a:
        for j, bj in nz_b:
            if i + j >= n:
                break
            out[i + j] += ai * bj
    return TruncatedSeries(tuple(out))


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """d/dt.  The result is known modulo ``t^(N-1)``; a precision-1 input raises."""
    if a.precision < 2:
        raise PrecisionExhausted("cannot differentiate a series known only modulo t^1")
    return TruncatedSeries(tuple(i * a.coeffs[i] for i in range(1, a.precision)))


def series_order(a: TruncatedSeries) -> Order:
    for k, c in enumerate(a.coeffs):
        if c:
            return Known(k)
    return Undetermined(a.precision)


def series_det(m: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Determinant of a square matrix of series, by Laplace expansion over column subsets.

    Division-free, so it stays inside the series ring even when no entry is
    a unit.  Cost is O(n 2^n) products, fine for the n <= 9 we allow.
    """
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    if n > MAX_DET_SIZE:
        raise ValueError(f"matrix size {n} exceeds the supported maximum {MAX_DET_SIZE}")
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    prec = min(e.precision for row in m for e in row)
    rows = [[e.truncate(prec) for e in row] for row in m]

    # minors[mask] = det of rows 0..k-1 restricted to the columns in mask (|mask| = k)
    minors: Dict[int, TruncatedSeries] = {0: TruncatedSeries.constant(1, prec)}
    for k in range(n):
        nxt: Dict[int, TruncatedSeries] = {}
        row = rows[k]
        for mask, minor in minors.items():
            if minor.is_zero():
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit or row[j].is_zero():
                    continue
                # sign from the number of chosen columns to the right of j
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                term = series_mul(minor, row[j])
                if sign < 0:
                    term = -term
                new = mask | bit
                nxt[new] = nxt[new] + term if new in nxt else term
        minors = nxt
    return minors.get((1 << n) - 1, TruncatedSeries.zero(prec))
