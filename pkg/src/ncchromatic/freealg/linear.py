"""Tagged linear combinations over Q(t) and their tensor squares.

Every element carries the tag of the basis it is expanded in, e.g.
``WQSym.M`` or ``Sym.S``.  Keys are tuples of positive integers whose
meaning (packed word, composition, permutation or set partition) is fixed
by the tag.  Arithmetic between different tags is refused.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from ..coeffring import ONE, ZERO, RationalFunction, as_rf
from ..partitions import canonical, is_nonnesting
from ..words import composition_str, is_packed, is_permutation, parse_composition, parse_word, word_str

__all__ = [
    "Basis", "BASES", "BasisMismatch", "LinearCombination", "Tensor",
    "register_product", "product_of", "element", "zero", "one", "from_json", "parse_element",
]

Key = tuple[int, ...]


class BasisMismatch(TypeError):
    """Two elements expanded in different bases were combined."""


@dataclass(frozen=True)
class Basis:
    tag: str
    symbol: str
    kind: str  # packed | composition | permutation | setpartition | nonnesting

    def validate(self, key) -> Key:
        k = tuple(int(a) for a in key)
        if self.kind == "composition":
            ok = all(a > 0 for a in k)
        elif self.kind == "packed":
            ok = is_packed(k)
        elif self.kind == "permutation":
            ok = is_permutation(k)
        else:
            ok = canonical(k) == k and (self.kind == "setpartition" or is_nonnesting(k))
        if not ok:
            raise ValueError(f"{k} is not a valid key for {self.tag}")
        return k

    def sort_key(self, key: Key):
        """Degree first, then lexicographic."""
        return (sum(key) if self.kind == "composition" else len(key), key)

    def render_key(self, key: Key) -> str:
        return composition_str(key) if self.kind == "composition" else word_str(key)

    def parse_key(self, text: str) -> Key:
        text = text.strip()
        if self.kind == "composition":
            return self.validate(parse_composition(text) if text else ())
        return self.validate(parse_word(text) if text else ())


BASES: dict[str, Basis] = {b.tag: b for b in [
    Basis("QSym.M", "M", "composition"),
    Basis("QSym.F", "F", "composition"),
    Basis("Sym.S", "S", "composition"),
    Basis("Sym.Lambda", "Lambda", "composition"),
    Basis("WQSym.M", "M", "packed"),
    Basis("WQSym.Phi", "Phi", "packed"),
    Basis("WQSym.PhiCheck", "PhiCheck", "packed"),
    Basis("WQSymDual.N", "N", "packed"),
    Basis("WSym.m", "m", "setpartition"),
    Basis("WSym.mt", "mt", "nonnesting"),
    Basis("FQSym.G", "G", "permutation"),
    Basis("FQSym.F", "F", "permutation"),
]}

_PRODUCTS: dict[str, Callable[[Key, Key], "LinearCombination"]] = {}


def register_product(tag: str, fn: Callable[[Key, Key], "LinearCombination"]) -> None:
    """Install the bilinear product used by ``*`` on elements tagged ``tag``."""
    _PRODUCTS[tag] = fn


def product_of(tag: str) -> Callable[[Key, Key], "LinearCombination"]:
    try:
        return _PRODUCTS[tag]
    except KeyError:
        raise TypeError(f"no product registered for {tag}") from None


def _coeff_text(c: RationalFunction) -> tuple[bool, str]:
    """(negative?, text) for a coefficient in front of a basis symbol."""
    if c == ONE:
        return False, ""
    if c == -ONE:
        return True, ""
    num = c.numerator
    nonzero = [a for a in num if a != 0]
    if c.is_polynomial() and len(nonzero) == 1:
        neg = nonzero[0] < 0
        body = (-c if neg else c).to_text(compact=True)
        return neg, body + "*"
    return False, "(" + c.to_text(compact=True) + ")*"


class LinearCombination:
    """Finite linear combination sum c_k B[k] in one tagged basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str | Basis, terms: Mapping | Iterable = (), *, _trusted=False):
        b = basis if isinstance(basis, Basis) else BASES[basis]
        self.basis = b
        if _trusted:
            self._terms = terms
            return
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Key, RationalFunction] = {}
        for k, c in items:
            k = b.validate(k)
            c = as_rf(c)
            if k in out:
                c = out[k] + c
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        self._terms = out

    @classmethod
    def _from_dict(cls, basis: Basis, terms: dict) -> "LinearCombination":
        return cls(basis, {k: c for k, c in terms.items() if c}, _trusted=True)

    @property
    def tag(self) -> str:
        return self.basis.tag

    # container protocol

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list[tuple[Key, RationalFunction]]:
        return sorted(self._terms.items(), key=lambda kc: self.basis.sort_key(kc[0]))

    def keys(self) -> list[Key]:
        return [k for k, _ in self.items()]

    def coefficient(self, key) -> RationalFunction:
        return self._terms.get(tuple(key), ZERO)

    def __getitem__(self, key):
        return self.coefficient(key)

    def terms(self) -> dict[Key, RationalFunction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degrees(self) -> set[int]:
        return {sum(k) if self.basis.kind == "composition" else len(k) for k in self._terms}

    def homogeneous_component(self, n: int) -> "LinearCombination":
        deg = (lambda k: sum(k)) if self.basis.kind == "composition" else len
        return LinearCombination._from_dict(self.basis, {k: c for k, c in self._terms.items() if deg(k) == n})

    # arithmetic

    def _check(self, other: "LinearCombination"):
        if not isinstance(other, LinearCombination):
            raise TypeError(f"cannot combine {type(other).__name__} with a linear combination")
        if other.basis != self.basis:
            raise BasisMismatch(f"{self.tag} vs {other.tag}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)) and not isinstance(other, bool):
            return self + one(self.tag) * other if as_rf(other) else self
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LinearCombination._from_dict(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return LinearCombination._from_dict(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LinearCombination":
        c = as_rf(c)
        if not c:
            return zero(self.basis)
        return LinearCombination._from_dict(self.basis, {k: c * a for k, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, LinearCombination):
            self._check(other)
            mul = product_of(self.tag)
            acc: dict[Key, RationalFunction] = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    c = c1 * c2
                    for k, a in mul(k1, k2)._terms.items():
                        acc[k] = acc.get(k, ZERO) + c * a
            return LinearCombination._from_dict(self.basis, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(ONE / as_rf(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = one(self.tag)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            return self.basis == other.basis and self._terms == other._terms
        if isinstance(other, (int, Fraction, RationalFunction)) and not isinstance(other, bool):
            return self == one(self.tag) * other
        return NotImplemented

    def __hash__(self):
        return hash((self.tag, frozenset(self._terms.items())))

    # maps

    def map_coefficients(self, f: Callable[[RationalFunction], RationalFunction]) -> "LinearCombination":
        return LinearCombination(self.basis, {k: f(c) for k, c in self._terms.items()})

    def apply(self, f: Callable[[Key], "LinearCombination"], target: str | Basis) -> "LinearCombination":
        """Extend a map on basis keys linearly."""
        tb = target if isinstance(target, Basis) else BASES[target]
        acc: dict[Key, RationalFunction] = {}
        for k, c in self._terms.items():
            img = f(k)
            if img.basis != tb:
                raise BasisMismatch(f"image in {img.tag}, expected {tb.tag}")
            for k2, a in img._terms.items():
                acc[k2] = acc.get(k2, ZERO) + c * a
        return LinearCombination._from_dict(tb, acc)

    def relabel(self, f: Callable[[Key], Key], target: str | Basis | None = None) -> "LinearCombination":
        tb = self.basis if target is None else (target if isinstance(target, Basis) else BASES[target])
        return LinearCombination(tb, [(f(k), c) for k, c in self._terms.items()])

    def evaluate_t(self, value) -> "LinearCombination":
        from ..coeffring import evaluate
        return LinearCombination(self.basis, {k: evaluate(c, value) for k, c in self._terms.items()})

    # rendering

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        sym = self.basis.symbol
        out = ""
        for idx, (k, c) in enumerate(self.items()):
            neg, coef = _coeff_text(c)
            body = f"{coef}{sym}[{self.basis.render_key(k)}]"
            if idx == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<{self.tag}: {self.to_text()}>"

    def to_json(self) -> dict:
        return {"basis": self.tag,
                "terms": [{"key": list(k), "coeff": c.to_json()} for k, c in self.items()]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def element(tag: str, key=(), coeff=1) -> LinearCombination:
    return LinearCombination(tag, {tuple(key): coeff})


def zero(tag: str | Basis) -> LinearCombination:
    return LinearCombination(tag)


def one(tag: str | Basis) -> LinearCombination:
    return LinearCombination(tag, {(): ONE})


def from_json(data: dict | str) -> LinearCombination:
    if isinstance(data, str):
        data = json.loads(data)
    tag = data["basis"]
    if tag not in BASES:
        raise ValueError(f"unknown basis {tag!r}")
    return LinearCombination(tag, [(tuple(term["key"]), RationalFunction.from_json(term["coeff"]))
                                   for term in data["terms"]])


_TERM = re.compile(r"^(?:(?P<coef>.*)\*)?(?P<sym>[A-Za-z]+)\[(?P<key>[^\]]*)\]$")


def _split_terms(text: str) -> list[tuple[int, str]]:
    parts, depth, start, sign = [], 0, 0, 1
    s = text.strip()
    for i, ch in enumerate(s):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and s[i - 1] == " ":
            parts.append((sign, s[start:i].strip()))
            sign = 1 if ch == "+" else -1
            start = i + 1
    parts.append((sign, s[start:].strip()))
    return [(sg, p) for sg, p in parts if p]


def parse_element(text: str, tag: str) -> LinearCombination:
    """Parse the text rendering (``t*M[12] + M[21]``) back into basis ``tag``."""
    basis = BASES[tag]
    text = text.strip()
    if text == "0":
        return zero(tag)
    out = zero(tag)
    for sign, part in _split_terms(text):
        neg = part.startswith("-")
        if neg:
            part = part[1:].strip()
        m = _TERM.match(part)
        if not m or m.group("sym") != basis.symbol:
            raise ValueError(f"cannot parse term {part!r} in basis {tag}")
        coef = RationalFunction.parse(m.group("coef")) if m.group("coef") else ONE
        if neg:
            coef = -coef
        out = out + element(tag, basis.parse_key(m.group("key")), coef * sign)
    return out


class Tensor:
    """Element of a tensor product of two tagged spaces."""

    __slots__ = ("left", "right", "_terms")

    def __init__(self, left: str | Basis, right: str | Basis, terms: Mapping | Iterable = ()):
        self.left = left if isinstance(left, Basis) else BASES[left]
        self.right = right if isinstance(right, Basis) else BASES[right]
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[tuple[Key, Key], RationalFunction] = {}
        for (a, b), c in items:
            k = (self.left.validate(a), self.right.validate(b))
            c = out.get(k, ZERO) + as_rf(c)
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        self._terms = out

    @classmethod
    def from_pair(cls, x: LinearCombination, y: LinearCombination) -> "Tensor":
        return cls(x.basis, y.basis, {(a, b): c * d for a, c in x._terms.items() for b, d in y._terms.items()})

    def items(self):
        return sorted(self._terms.items(), key=lambda kc: (self.left.sort_key(kc[0][0]), self.right.sort_key(kc[0][1])))

    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if not isinstance(other, Tensor) or (self.left, self.right) != (other.left, other.right):
            raise BasisMismatch("tensor bases differ")

    def __add__(self, other):
        self._check(other)
        return Tensor(self.left, self.right, list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = as_rf(c)
        return Tensor(self.left, self.right, {k: c * a for k, a in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            return self.scale(other)
        self._check(other)
        ml, mr = product_of(self.left.tag), product_of(self.right.tag)
        acc: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                c = c1 * c2
                pl, pr = ml(a1, a2), mr(b1, b2)
                for ka, x in pl._terms.items():
                    for kb, y in pr._terms.items():
                        acc[(ka, kb)] = acc.get((ka, kb), ZERO) + c * x * y
        return Tensor(self.left, self.right, acc)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.left, self.right) == (other.left, other.right) and self._terms == other._terms

    def __hash__(self):
        return hash((self.left.tag, self.right.tag, frozenset(self._terms.items())))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for idx, ((a, b), c) in enumerate(self.items()):
            neg, coef = _coeff_text(c)
            body = (f"{coef}{self.left.symbol}[{self.left.render_key(a)}]"
                    f" ⊗ {self.right.symbol}[{self.right.render_key(b)}]")
            out += (("-" if neg else "") if idx == 0 else (" - " if neg else " + ")) + body
        return out

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<{self.left.tag}⊗{self.right.tag}: {self.to_text()}>"

    def to_json(self) -> dict:
        return {"left": self.left.tag, "right": self.right.tag,
                "terms": [{"key": [list(a), list(b)], "coeff": c.to_json()} for (a, b), c in self.items()]}
