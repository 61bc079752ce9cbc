"""Exact arithmetic in the field Q(t) of rational functions in one variable.

Elements are kept in canonical form: numerator and denominator are coprime
and the denominator is monic, so two elements are equal exactly when their
stored coefficient sequences coincide.  Polynomial arithmetic and gcds are
delegated to FLINT's dense ``fmpq_poly``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

import flint

__all__ = [
    "RationalFunction",
    "PoleError",
    "t",
    "ZERO",
    "ONE",
    "q_integer",
    "q_factorial",
    "evaluate",
    "as_rf",
]

_Poly = flint.fmpq_poly


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _fraction(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def _to_fmpq(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _poly(data) -> _Poly:
    if isinstance(data, _Poly):
        return data
    if isinstance(data, (int, Fraction)):
        return _Poly([_to_fmpq(data)])
    return _Poly([_to_fmpq(c) for c in data])


Scalar = Union[int, Fraction]


class RationalFunction:
    """An element num/den of Q(t), gcd-reduced with monic denominator."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Union[Scalar, Iterable[Scalar], _Poly] = 0,
                 den: Union[Scalar, Iterable[Scalar], _Poly] = 1):
        n = _poly(num)
        d = _poly(den)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self._set(n, d)

    def _set(self, n: _Poly, d: _Poly) -> None:
        if n.is_zero():
            n, d = _Poly(), _Poly([1])
        elif not d.is_one():
            if d.degree() > 0:
                g = n.gcd(d)
                if not g.is_one():
                    n = n // g
                    d = d // g
            lc = d.leading_coefficient()
            if lc != 1:
                n = n / lc
                d = d / lc
        self._num = n
        self._den = d
        self._hash = None

    @classmethod
    def _raw(cls, n: _Poly, d: _Poly) -> "RationalFunction":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._num = n
        obj._den = d
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, n: _Poly, d: _Poly) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj._set(n, d)
        return obj

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "RationalFunction":
        """c * t^k; negative k gives c / t^|k|."""
        if k >= 0:
            return cls._make(_Poly([0] * k + [_to_fmpq(c)]), _Poly([1]))
        return cls._make(_Poly([_to_fmpq(c)]), _Poly([0] * (-k) + [1]))

    # -- inspection -------------------------------------------------------

    @property
    def numerator(self) -> tuple[Fraction, ...]:
        """Dense numerator coefficients, constant term first."""
        return tuple(_fraction(c) for c in self._num.coeffs())

    @property
    def denominator(self) -> tuple[Fraction, ...]:
        return tuple(_fraction(c) for c in self._den.coeffs())

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.is_one()

    def is_constant(self) -> bool:
        return self._den.is_one() and self._num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return _fraction(self._num.coeffs()[0]) if not self._num.is_zero() else Fraction(0)

    def monomial_exponent(self) -> int | None:
        """k if self == t^k for some k >= 0, else None."""
        if not self._den.is_one() or self._num.is_zero():
            return None
        cs = self._num.coeffs()
        k = len(cs) - 1
        if cs[k] != 1 or any(c != 0 for c in cs[:k]):
            return None
        return k

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction._raw(_Poly([_to_fmpq(other)]) if other else _Poly(), _Poly([1]))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._den.is_one() and o._den.is_one():
            return RationalFunction._raw(self._num + o._num, self._den)
        if self._den == o._den:
            return RationalFunction._make(self._num + o._num, self._den)
        return RationalFunction._make(self._num * o._den + o._num * self._den,
                                      self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self._num, self._den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self._den.is_one() and o._den.is_one():
            return RationalFunction._raw(self._num * o._num, self._den)
        return RationalFunction._make(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o._num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction._make(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if self._num.is_zero():
                raise ZeroDivisionError("zero to a negative power")
            return RationalFunction._make(self._den ** (-k), self._num ** (-k))
        return RationalFunction._raw(self._num ** k, self._den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __bool__(self):
        return not self._num.is_zero()

    # -- substitution --------------------------------------------------------

    def __call__(self, value):
        return evaluate(self, value)

    def reciprocal_substitution(self) -> "RationalFunction":
        """Return f(1/t)."""
        n = list(self._num.coeffs())
        d = list(self._den.coeffs())
        dn, dd = len(n) - 1, len(d) - 1
        # f(1/t) = t^dd * rev(n) / (t^dn * rev(d))
        if self._num.is_zero():
            return self
        num = _Poly(n[::-1]) * _Poly([0] * max(dd - dn, 0) + [1])
        den = _Poly(d[::-1]) * _Poly([0] * max(dn - dd, 0) + [1])
        return RationalFunction._make(num, den)

    # -- rendering ------------------------------------------------------------

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return self.to_text()

    def to_text(self, compact: bool = False) -> str:
        """Human-readable form such as ``(t^2 - t)/(t + 1)``.

        ``compact`` drops the spaces around binary signs, the form used
        inside rendered linear combinations.
        """
        num = _poly_text(self._num, compact)
        if self._den.is_one():
            return num
        den = _poly_text(self._den, compact)
        sign = ""
        if num.startswith("-") and not _needs_parens(-self._num):
            # a single negative term: pull the sign out front
            sign, num = "-", num[1:]
        elif _needs_parens(self._num):
            num = f"({num})"
        if _needs_parens(self._den):
            den = f"({den})"
        return f"{sign}{num}/{den}"

    def to_json(self) -> dict:
        return {"num": [str(c) for c in self.numerator],
                "den": [str(c) for c in self.denominator]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        num = [Fraction(c) for c in data["num"]]
        den = [Fraction(c) for c in data.get("den", ["1"])]
        return cls(num, den)

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        """Parse expressions in ``t`` built from rationals, + - * / ^ and parentheses."""
        return _Parser(text).parse()


def _needs_parens(p: _Poly) -> bool:
    cs = p.coeffs()
    nonzero = sum(1 for c in cs if c != 0)
    if nonzero > 1:
        return True
    # a lone negative or fractional coefficient also reads ambiguously after "/"
    return nonzero == 1 and (cs[-1] < 0 or (cs[-1].q != 1 and len(cs) > 1))


def _poly_text(p: _Poly, compact: bool) -> str:
    cs = p.coeffs()
    if not cs:
        return "0"
    parts: list[tuple[bool, str]] = []
    for k in range(len(cs) - 1, -1, -1):
        c = _fraction(cs[k])
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = str(a)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((neg, body))
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    first_neg, first = parts[0]
    out = ("-" if first_neg else "") + first
    for neg, body in parts[1:]:
        out += (minus if neg else plus) + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse rational function: {text!r}")
            self.tokens.append(m.group(m.lastindex))
            pos = m.end()
        self.i = 0
        self.text = text

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self) -> RationalFunction:
        if not self.tokens:
            raise ValueError("empty expression")
        value = self._expr()
        if self._peek() is not None:
            raise ValueError(f"trailing input in {self.text!r}")
        return value

    def _expr(self):
        tok = self._peek()
        if tok in ("+", "-"):
            self._take()
            value = self._term()
            if tok == "-":
                value = -value
        else:
            value = self._term()
        while self._peek() in ("+", "-"):
            op = self._take()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._power()
        while self._peek() in ("*", "/"):
            op = self._take()
            rhs = self._power()
            value = value * rhs if op == "*" else value / rhs
        return value

    def _power(self):
        base = self._atom()
        if self._peek() in ("^", "**"):
            self._take()
            sign = 1
            if self._peek() == "-":
                self._take()
                sign = -1
            tok = self._take()
            if tok is None or not tok.isdigit():
                raise ValueError(f"expected integer exponent in {self.text!r}")
            base = base ** (sign * int(tok))
        return base

    def _atom(self):
        tok = self._take()
        if tok is None:
            raise ValueError(f"unexpected end of {self.text!r}")
        if tok == "t":
            return t
        if tok.isdigit():
            return RationalFunction(int(tok))
        if tok == "(":
            value = self._expr()
            if self._take() != ")":
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return value
        if tok == "-":
            return -self._atom()
        raise ValueError(f"unexpected token {tok!r} in {self.text!r}")


t = RationalFunction([0, 1])
ZERO = RationalFunction(0)
ONE = RationalFunction(1)


def as_rf(x) -> RationalFunction:
    """Coerce ints, Fractions and RationalFunctions to RationalFunction."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction(x)
    if isinstance(x, str):
        return RationalFunction.parse(x)
    raise TypeError(f"cannot interpret {x!r} as a rational function")


@lru_cache(maxsize=None)
def q_integer(n: int) -> RationalFunction:
    """[n]_t = 1 + t + ... + t^(n-1)."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return RationalFunction([1] * n) if n else ZERO


@lru_cache(maxsize=None)
def q_factorial(n: int) -> RationalFunction:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = ONE
    for k in range(1, n + 1):
        out = out * q_integer(k)
    return out


def evaluate(f: RationalFunction, value) -> Fraction:
    """Substitute an exact rational for t."""
    f = as_rf(f)
    x = _to_fmpq(value)
    d = f._den(x)
    if d == 0:
        raise PoleError(f"{f} has a pole at t = {Fraction(value)}")
    return _fraction(f._num(x) / d)
