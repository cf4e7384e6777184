"""Exact coefficients: polynomials in lambda over Q, and formal sums of trees.

Text form of a polynomial uses ``L`` for lambda: ``1``, ``L^2``, ``(1 + 2*L^2)``,
``-1/2*L``.  A linear combination renders as ``poly * tree`` terms joined by
`` + `` in basis order, or ``0``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping, Union

__all__ = [
    "Rational",
    "LambdaPoly",
    "LinComb",
    "HomogeneityError",
    "ONE",
    "ZERO",
    "monomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "parse_poly",
    "lc_add",
    "lc_scale",
    "lc_equal",
    "parse_rational",
]

Rational = Fraction
Scalar = Union[int, Fraction]


def parse_rational(text: str) -> Fraction:
    """``"3"``, ``"-1/2"``; rejects floats."""
    if not re.fullmatch(r"\s*[+-]?\d+(/\d+)?\s*", text):
        raise ValueError(f"not a rational number: {text!r}")
    return Fraction(text.strip())


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class LambdaPoly:
    """Polynomial in lambda with rational coefficients; immutable and hashable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
            acc[e] = acc.get(e, 0) + Fraction(c)
        object.__setattr__(self, "_terms", tuple(sorted((e, c) for e, c in acc.items() if c)))
        object.__setattr__(self, "_hash", hash(self._terms))

    @classmethod
    def _raw(cls, terms: tuple) -> LambdaPoly:
        p = object.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", hash(terms))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """``(exponent, coefficient)`` pairs, increasing exponent, no zeros."""
        return self._terms

    def coefficient(self, e: int) -> Fraction:
        return dict(self._terms).get(e, Fraction(0))

    @property
    def degree(self) -> int:
        return self._terms[-1][0] if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly({0: other})
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: LambdaPoly | Scalar) -> LambdaPoly:
        other = _as_poly(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LambdaPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other: LambdaPoly | Scalar) -> LambdaPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> LambdaPoly:
        return _as_poly(other) - self

    def __mul__(self, other: LambdaPoly | Scalar) -> LambdaPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return LambdaPoly._raw(tuple((e, c * other) for e, c in self._terms))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        if len(other._terms) == 1 and len(self._terms) == 1:
            (e1, c1), (e2, c2) = self._terms[0], other._terms[0]
            return LambdaPoly._raw(((e1 + e2, c1 * c2),))
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LambdaPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LambdaPoly:
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, value: Scalar) -> Fraction:
        return poly_eval(self, value)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [_fmt_monomial(e, c) for e, c in self._terms]
        if len(parts) == 1:
            return parts[0]
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return f"({out})"

    def __repr__(self) -> str:
        return f"LambdaPoly({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        return {str(e): _fmt_rational(c) for e, c in self._terms}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> LambdaPoly:
        return cls({int(e): parse_rational(str(c)) for e, c in data.items()})


def _fmt_monomial(e: int, c: Fraction) -> str:
    if e == 0:
        return _fmt_rational(c)
    power = "L" if e == 1 else f"L^{e}"
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{_fmt_rational(c)}*{power}"


def _as_poly(x: LambdaPoly | Scalar) -> LambdaPoly:
    if isinstance(x, LambdaPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LambdaPoly({0: x})
    raise TypeError(f"cannot use {x!r} as a polynomial")


@lru_cache(maxsize=None)
def monomial(e: int, c: Scalar = 1) -> LambdaPoly:
    """``c * L^e``."""
    return LambdaPoly({e: c})


ONE = LambdaPoly({0: 1})
ZERO = LambdaPoly()


def poly_add(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p + q


def poly_mul(p: LambdaPoly, q: LambdaPoly) -> LambdaPoly:
    return p * q


def poly_scale(p: LambdaPoly, c: Scalar) -> LambdaPoly:
    return p * Fraction(c)


def poly_eval(p: LambdaPoly, value: Scalar) -> Fraction:
    """Exact evaluation (Horner); ``0**0`` is 1."""
    value = Fraction(value)
    acc = Fraction(0)
    prev = p.degree
    for e, c in reversed(p._terms):
        acc = acc * value ** (prev - e) + c
        prev = e
    return acc * value ** prev if p._terms else acc


_MONO_RE = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*L(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str) -> LambdaPoly:
    """Inverse of ``str(LambdaPoly)``; also accepts ``2*L + 1`` without parentheses."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s.strip():
        raise ValueError(f"empty polynomial: {text!r}")
    pos = 0
    acc: dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        m = _MONO_RE.match(s, pos)
        sign, num, lam, exp = m.groups()
        if not m.group(0).strip() or (not num and not lam) or (not first and not sign):
            raise ValueError(f"bad polynomial {text!r} near position {pos}")
        if lam and lam.lstrip().startswith("*") and not num:
            raise ValueError(f"bad polynomial {text!r} near position {pos}")
        if num and lam and not lam.lstrip().startswith("*"):
            raise ValueError(f"bad polynomial {text!r}: write 2*L, not 2L")
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if lam else 0
        acc[e] = acc.get(e, 0) + c
        pos = m.end()
        first = False
    return LambdaPoly(acc)


class HomogeneityError(ValueError):
    """Terms from different label sets / weight functions / universes mixed."""


def _signature(b: Hashable) -> Hashable:
    sig = getattr(b, "signature", None)
    if sig is not None:
        return (type(b), sig() if callable(sig) else sig)
    labels = getattr(b, "labels", None)
    weights = getattr(b, "weights", None)
    if labels is not None and callable(weights):
        return (type(b), frozenset(weights().items()))
    return (type(b),)


class LinComb:
    """Finite formal sum of basis elements (trees) with ``LambdaPoly`` coefficients.

    All terms must live in the same graded component: same basis type, same
    label set and same weight function.  Basis elements need a ``key`` used
    for ordering.
    """

    __slots__ = ("_terms", "_sig")

    def __init__(self, terms: Mapping[Any, LambdaPoly | Scalar] | Iterable[tuple[Any, LambdaPoly | Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Any, LambdaPoly] = {}
        sig = None
        for b, c in items:
            s = _signature(b)
            if sig is None:
                sig = s
            elif s != sig:
                raise HomogeneityError(f"cannot mix {b} with terms of a different component")
            acc[b] = acc.get(b, ZERO) + _as_poly(c)
        self._terms = {b: c for b, c in acc.items() if c}
        self._sig = sig if self._terms else None

    @classmethod
    def _raw(cls, terms: dict) -> LinComb:
        # no validation; caller guarantees homogeneity and nonzero coefficients
        x = object.__new__(cls)
        x._terms = terms
        x._sig = None
        return x

    @classmethod
    def basis(cls, b: Any, c: LambdaPoly | Scalar = 1) -> LinComb:
        return cls({b: c})

    def _signature(self):
        if self._sig is None and self._terms:
            self._sig = _signature(next(iter(self._terms)))
        return self._sig

    @property
    def terms(self) -> Mapping[Any, LambdaPoly]:
        return dict(self._terms)

    def items(self) -> list[tuple[Any, LambdaPoly]]:
        """Terms in basis order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].key)

    def __iter__(self) -> Iterator[tuple[Any, LambdaPoly]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, b: Any) -> bool:
        return b in self._terms

    def __getitem__(self, b: Any) -> LambdaPoly:
        return self._terms.get(b, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: LinComb) -> LinComb:
        if not isinstance(other, LinComb):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        if self._signature() != other._signature():
            raise HomogeneityError("cannot add linear combinations from different components")
        acc = dict(self._terms)
        for b, c in other._terms.items():
            s = acc.get(b)
            s = c if s is None else s + c
            if s:
                acc[b] = s
            else:
                del acc[b]
        out = LinComb._raw(acc)
        out._sig = self._sig
        return out

    def __neg__(self) -> LinComb:
        return self.scale(-1)

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def scale(self, p: LambdaPoly | Scalar) -> LinComb:
        p = _as_poly(p)
        if not p:
            return LinComb()
        if p == ONE:
            return self
        out = {}
        for b, c in self._terms.items():
            q = c * p
            if q:
                out[b] = q
        return LinComb._raw(out)

    def __rmul__(self, p: LambdaPoly | Scalar) -> LinComb:
        return self.scale(p)

    def evaluate(self, value: Scalar) -> LinComb:
        """Specialize lambda to ``value``; coefficients become constants."""
        out = {}
        for b, c in self._terms.items():
            q = poly_eval(c, value)
            if q:
                out[b] = LambdaPoly._raw(((0, q),))
        return LinComb._raw(out)

    def map_linear(self, fn: Callable[[Any], LinComb]) -> LinComb:
        """Linear extension of ``fn`` (basis element -> LinComb)."""
        acc: dict[Any, LambdaPoly] = {}
        for b, c in self._terms.items():
            for b2, c2 in fn(b)._terms.items():
                q = c * c2
                s = acc.get(b2)
                acc[b2] = q if s is None else s + q
        return LinComb._raw({b: c for b, c in acc.items() if c})

    def basis_elements(self) -> list[Any]:
        return [b for b, _ in self.items()]

    def coefficients(self) -> list[LambdaPoly]:
        return [c for _, c in self.items()]

    def render(self, fmt: Callable[[Any], str] = str) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c} * {fmt(b)}" for b, c in self.items())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LinComb({self.render()!r})"


def lc_add(x: LinComb, y: LinComb) -> LinComb:
    return x + y


def lc_scale(p: LambdaPoly | Scalar, x: LinComb) -> LinComb:
    return x.scale(p)


def lc_equal(x: LinComb, y: LinComb) -> bool:
    return x == y
