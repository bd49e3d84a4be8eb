"""Polynomials in an auxiliary even variable ``z`` with :class:`Poly` coefficients.

``z`` has degree zero and never enters a :class:`Poly`; it only indexes
coefficient lists such as u(z) = u0 + u1 z + ... + u_{n-1} z^{n-1}.
"""

from __future__ import annotations

from typing import List, Sequence

from .ring import Poly, SuperRing


class ZPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SuperRing, coeffs: Sequence[Poly]):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.coeffs: List[Poly] = coeffs

    @classmethod
    def from_names(cls, ring: SuperRing, prefix: str, n: int) -> "ZPoly":
        """``prefix0 + prefix1 z + ... + prefix{n-1} z^{n-1}``."""
        return cls(ring, [ring.gen(f"{prefix}{k}") for k in range(n)])

    @classmethod
    def monomial(cls, ring: SuperRing, k: int, c=None) -> "ZPoly":
        c = ring.one() if c is None else c
        return cls(ring, [ring.zero()] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Poly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        parts = [f"({c})*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return "ZPoly(" + (" + ".join(parts) or "0") + ")"

    def __add__(self, other: "ZPoly") -> "ZPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(self.ring, [self[k] + other[k] for k in range(m)])

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        m = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(self.ring, [self[k] - other[k] for k in range(m)])

    def __neg__(self) -> "ZPoly":
        return ZPoly(self.ring, [-c for c in self.coeffs])

    def scale(self, c) -> "ZPoly":
        """Multiply every coefficient by a rational or by a Poly on the left."""
        if isinstance(c, Poly):
            return ZPoly(self.ring, [c * a for a in self.coeffs])
        return ZPoly(self.ring, [a.scale(c) for a in self.coeffs])

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        return self.mul(other)

    def mul(self, other: "ZPoly", below: int = None) -> "ZPoly":
        """Product, optionally dropping every power ``z^k`` with ``k >= below``."""
        if self.is_zero() or other.is_zero():
            return ZPoly(self.ring, [])
        size = len(self.coeffs) + len(other.coeffs) - 1
        if below is not None:
            size = min(size, below)
        out = [self.ring.zero() for _ in range(size)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero() or i >= size:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= size:
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
        return ZPoly(self.ring, out)

    def truncate(self, k: int) -> "ZPoly":
        """Reduce modulo z^k."""
        return ZPoly(self.ring, self.coeffs[:k])

    def derivative(self) -> "ZPoly":
        return ZPoly(self.ring, [c.scale(k) for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, value: Poly) -> Poly:
        """Substitute ``z = value`` (Horner)."""
        acc = self.ring.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def map(self, fn) -> "ZPoly":
        return ZPoly(self.ring, [fn(c) for c in self.coeffs])
