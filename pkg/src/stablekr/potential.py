"""Univariate potentials W(x) over the rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .parse import ParseError, parse_poly
from .ring import SuperRing, Tridegree

UPoly = List[Fraction]  # coefficient of x^k at index k, no trailing zeros


def _trim(a: Sequence) -> UPoly:
    a = [Fraction(c) for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def derivative(a: Sequence) -> UPoly:
    return _trim([k * c for k, c in enumerate(a)][1:])


def udivmod(a: Sequence, b: Sequence) -> Tuple[UPoly, UPoly]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        s = len(r) - len(b)
        q[s] = c
        for i, bc in enumerate(b):
            r[s + i] -= c * bc
        r = _trim(r)
    return _trim(q), r


def exact_udiv(a: Sequence, b: Sequence) -> UPoly:
    q, r = udivmod(a, b)
    if r:
        raise ArithmeticError("univariate division is not exact")
    return q


def monic(a: Sequence) -> UPoly:
    a = _trim(a)
    return [c / a[-1] for c in a] if a else a


def univariate_gcd(a: Sequence, b: Sequence) -> UPoly:
    """Monic gcd over Q by the Euclidean algorithm."""
    a, b = _trim(a), _trim(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, udivmod(a, b)[1]
    return monic(a)


def format_upoly(a: Sequence, var: str = "x") -> str:
    a = _trim(a)
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


@lru_cache(maxsize=1)
def _x_ring() -> SuperRing:
    return SuperRing([("x", Tridegree(2, 0, 0))])


class Potential:
    """W(x) with cached dW, d2W and H = gcd(dW, d2W)."""

    def __init__(self, coeffs: Sequence):
        self.coeffs = _trim(coeffs)
        self.dW = derivative(self.coeffs)
        if not self.dW:
            raise ValueError("the derivative of the potential must be nonzero")
        self.d2W = derivative(self.dW)
        self.H = univariate_gcd(self.dW, self.d2W) if self.d2W else [Fraction(1)]

    @classmethod
    def parse(cls, text: str) -> "Potential":
        poly = parse_poly(text, _x_ring())
        coeffs = [Fraction(0)] * (max((e[0] for (e, _) in poly.terms), default=0) + 1)
        for (e, _), c in poly.terms.items():
            coeffs[e[0]] = Fraction(c)
        return cls(coeffs)

    @classmethod
    def power(cls, N: int) -> "Potential":
        """x^(N+1)/(N+1), whose derivative is x^N."""
        return cls([0] * (N + 1) + [Fraction(1, N + 1)])

    @property
    def dW_over_H(self) -> UPoly:
        return exact_udiv(self.dW, self.H)

    @property
    def d2W_over_H(self) -> UPoly:
        return exact_udiv(self.d2W, self.H) if self.d2W else []

    def homogeneous_degree(self):
        """N when dW = c x^N, else None."""
        nz = [k for k, c in enumerate(self.dW) if c]
        return nz[0] if len(nz) == 1 else None

    def __repr__(self) -> str:
        return f"Potential({format_upoly(self.coeffs)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Potential) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs))


__all__ = [
    "ParseError",
    "Potential",
    "derivative",
    "exact_udiv",
    "format_upoly",
    "monic",
    "udivmod",
    "univariate_gcd",
]
