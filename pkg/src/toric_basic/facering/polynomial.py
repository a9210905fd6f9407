"""Sparse polynomials in v_1..v_m with exact coefficients.

A monomial is an exponent tuple of length m.  Its internal degree is the sum
of exponents; the cohomological degree is twice that.  Monomials compare in
graded reverse lexicographic order with v_1 > v_2 > ... > v_m.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..exactfield import format_scalar, normalize, sign

Monomial = tuple


def grevlex_key(e: Monomial) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def mono_degree(e: Monomial) -> int:
    return sum(e)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def unit(m: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(m))


def squarefree(m: int, support: Iterable[int]) -> Monomial:
    s = set(support)
    return tuple(1 if j in s else 0 for j in range(m))


def format_monomial(e: Monomial, names: list[str] | None = None) -> str:
    parts = []
    for i, x in enumerate(e):
        if x:
            name = names[i] if names else f"v{i + 1}"
            parts.append(name if x == 1 else f"{name}^{x}")
    return "*".join(parts) or "1"


class Polynomial:
    """Immutable polynomial: a mapping from monomials to nonzero scalars."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None) -> None:
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"monomial {e} has {len(e)} exponents, expected {nvars}")
            if c:
                clean[tuple(e)] = normalize(c if not isinstance(c, int) else Fraction(c))
        self.terms = clean

    @classmethod
    def monomial(cls, e: Monomial, coeff=1) -> Polynomial:
        return cls(len(e), {tuple(e): coeff})

    @classmethod
    def linear(cls, coeffs) -> Polynomial:
        m = len(coeffs)
        return cls(m, {unit(m, i): c for i, c in enumerate(coeffs) if c})

    @classmethod
    def constant(cls, nvars: int, c=1) -> Polynomial:
        return cls(nvars, {(0,) * nvars: c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: Polynomial) -> Polynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = mono_mul(e1, e2)
                    out[e] = out.get(e, 0) + c1 * c2
            return Polynomial(self.nvars, out)
        return Polynomial(self.nvars, {e: c * other for e, c in self.terms.items()})

    __rmul__ = __mul__

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def format(self, names: list[str] | None = None) -> str:
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.sorted_terms():
            mono = format_monomial(e, names)
            neg = sign(c) < 0
            mag = -c if neg else c
            cs = format_scalar(mag)
            if "sqrt" in cs and ("+" in cs or "-" in cs[1:]):
                cs = f"({cs})"
            body = mono if cs == "1" and mono != "1" else (cs if mono == "1" else f"{cs}*{mono}")
            if not out:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"

    __str__ = format
