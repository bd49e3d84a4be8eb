"""Reduction modulo p(z) = prod_i (z - y_i) and the interpolation problem.

The generating polynomials u(z), xi(z) have u_k, xi_k as coefficients; the
strand values x_i = u(y_i) and theta_i = xi(y_i) determine them uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .ring import Poly, SuperRing, exact_divide, perm_sign, substitute
from .symfunc import alt, e_elementary, h_complete, hook_schur, HookShape
from .zpoly import ZPoly


class InterpolationContext:
    """Holds p(z) for a fixed strand count ``n`` inside ``ring``."""

    def __init__(self, n: int, ring: Optional[SuperRing] = None, yified: bool = True):
        self.n = n
        self.ring = SuperRing.standard(n) if ring is None else ring
        self.yified = yified
        if yified:
            coeffs = [
                e_elementary(n - k, n, self.ring).scale(-1 if (n - k) % 2 else 1)
                for k in range(n + 1)
            ]
        else:
            coeffs = [self.ring.zero()] * n + [self.ring.one()]
        self.pz = ZPoly(self.ring, coeffs)

    def y(self, i: int) -> Poly:
        return self.ring.gen(f"y{i}") if self.yified else self.ring.zero()


@lru_cache(maxsize=None)
def context(n: int, yified: bool = True, ring: Optional[SuperRing] = None) -> InterpolationContext:
    return InterpolationContext(n, ring, yified)


def long_div(f: ZPoly, ctx: InterpolationContext) -> Tuple[ZPoly, ZPoly]:
    """(quotient, remainder) of f by the monic p(z), top degree first."""
    n = ctx.n
    r = list(f.coeffs)
    if len(r) <= n:
        return ZPoly(f.ring, []), ZPoly(f.ring, r)
    p = ctx.pz.coeffs
    q = [f.ring.zero()] * (len(r) - n)
    for d in range(len(r) - 1, n - 1, -1):
        c = r[d]
        if c.is_zero():
            continue
        q[d - n] = c
        r[d] = f.ring.zero()
        for k in range(n):
            if p[k]:
                r[d - n + k] = r[d - n + k] - c * p[k]
    return ZPoly(f.ring, q), ZPoly(f.ring, r[:n])


def long_div_remainder(f: ZPoly, ctx: InterpolationContext, with_quotient: bool = False):
    q, r = long_div(f, ctx)
    return (r, q) if with_quotient else r


def remainder_closed_form(f: ZPoly, ctx: InterpolationContext) -> ZPoly:
    """r_k = f_k + (-1)^(n-1-k) sum_{j>=n} f_j s_(j-n+1, 1^(n-1-k))(y)."""
    n = ctx.n
    out = []
    for k in range(n):
        acc = f[k]
        for j in range(n, f.degree + 1):
            if f[j].is_zero():
                continue
            if ctx.yified:
                s = hook_schur(HookShape(j - n + 1, n - 1 - k), n, ctx.ring)
            else:
                s = ctx.ring.zero()
            if s:
                acc = acc + (f[j] * s if (n - 1 - k) % 2 == 0 else -(f[j] * s))
        out.append(acc)
    return ZPoly(ctx.ring, out)


def reduce_mul(a: ZPoly, b: ZPoly, ctx: InterpolationContext) -> ZPoly:
    """a(z) b(z) mod p(z)."""
    if not ctx.yified:
        return a.mul(b, below=ctx.n)
    return long_div_remainder(a * b, ctx)


def reduce_pow(a: ZPoly, N: int, ctx: InterpolationContext) -> ZPoly:
    """a(z)^N mod p(z), reducing after every multiplication."""
    acc = ZPoly(ctx.ring, [ctx.ring.one()])
    for _ in range(N):
        acc = reduce_mul(acc, a, ctx)
    return acc


def zeta_matrix(n: int, ring: Optional[SuperRing] = None) -> List[List[Poly]]:
    """Row k holds the coefficients of zeta_k = sum_i h_i(y) xi_{k+i}."""
    ring = SuperRing.standard(n) if ring is None else ring
    return [
        [h_complete(j - k, n, ring) if j >= k else ring.zero() for j in range(n)]
        for k in range(n)
    ]


def zeta_coords(r: Sequence[Poly], ctx: InterpolationContext) -> List[Poly]:
    """The combinations r_k + h_1 r_{k+1} + ... + h_{n-1-k} r_{n-1}."""
    n = ctx.n
    r = list(r.coeffs) if isinstance(r, ZPoly) else list(r)
    r += [ctx.ring.zero()] * (n - len(r))
    if len(r) > n:
        raise ValueError("z-degree must be at most n-1")
    mat = zeta_matrix(n, ctx.ring)
    out = []
    for k in range(n):
        acc = ctx.ring.zero()
        for j in range(k, n):
            if r[j]:
                acc = acc + mat[k][j] * r[j]
        out.append(acc)
    return out


def zeta_of_xi(n: int, ring: Optional[SuperRing] = None) -> List[Poly]:
    """zeta_0..zeta_{n-1} as elements of the ring."""
    ring = SuperRing.standard(n) if ring is None else ring
    xis = [ring.gen(f"xi{k}") for k in range(n)]
    return zeta_coords(xis, InterpolationContext(n, ring))


def unzeta(zetas: Sequence[Poly], ctx: InterpolationContext) -> List[Poly]:
    """Invert the unitriangular zeta transformation by back substitution."""
    n = ctx.n
    mat = zeta_matrix(n, ctx.ring)
    out = [None] * n
    for k in range(n - 1, -1, -1):
        acc = zetas[k]
        for j in range(k + 1, n):
            if out[j]:
                acc = acc - mat[k][j] * out[j]
        out[k] = acc
    return out


@dataclass(frozen=True)
class Quotient:
    """``num / den`` in the localization at the Vandermonde determinant."""

    num: Poly
    den: Poly

    def __eq__(self, other) -> bool:
        if isinstance(other, Quotient):
            return self.num * other.den == other.num * self.den
        if isinstance(other, Poly):
            return self.num == other * self.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.den)

    def to_poly(self) -> Poly:
        """Exact quotient; raises NonExactDivision if it is not a polynomial."""
        return exact_divide(self.num, self.den)

    def substitute(self, assignments) -> "Quotient":
        return Quotient(substitute(self.num, assignments), substitute(self.den, assignments))


def cramer_solve(values: Sequence[Poly], n: int) -> List[Quotient]:
    """Solve sum_k c_k y_i^k = values[i-1] for c_0..c_{n-1} by Cramer's rule.

    ``values`` are x_1..x_n or theta_1..theta_n.  The solutions live in the
    localization at the Vandermonde, so each is returned as a
    :class:`Quotient` whose numerator is an alternating sum.
    """
    if len(values) != n:
        raise ValueError("need one value per strand")
    ring = values[0].ring
    ys = [ring.gen(f"y{i}") for i in range(1, n + 1)]
    # det[y_i^k] = Alt(y_1^0 y_2^1 ... y_n^(n-1))
    det = ring.one()
    for i in range(n):
        det = det * ys[i] ** i
    det = alt(det, n)
    out = []
    for k in range(n):
        diag = values[k]
        for i in range(n):
            if i != k:
                diag = diag * ys[i] ** i
        out.append(Quotient(alt(diag, n), det))
    return out


def interpolation_substitution(ring: SuperRing, n: int) -> dict:
    """x_i -> u(y_i) and theta_i -> xi(y_i)."""
    u = ZPoly.from_names(ring, "u", n)
    xi = ZPoly.from_names(ring, "xi", n)
    out = {}
    for i in range(1, n + 1):
        y = ring.gen(f"y{i}")
        out[f"x{i}"] = u.evaluate(y)
        out[f"theta{i}"] = xi.evaluate(y)
    return out


def evaluate_at(f: ZPoly, i: int, ctx: Optional[InterpolationContext] = None) -> Poly:
    """f(y_i)."""
    n = ctx.n if ctx is not None else f.ring.n
    if not 1 <= i <= (n or i):
        raise ValueError(f"strand index {i} out of range")
    return f.evaluate(f.ring.gen(f"y{i}"))


def vandermonde_sign(n: int) -> int:
    """Alt(y^0 ... y^(n-1)) = vandermonde_sign(n) * prod_{i<j}(y_i - y_j)."""
    return perm_sign(tuple(range(n - 1, -1, -1)))
