"""Specialization phi_M, divided differences in y, and the coproduct on u."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

from .interp import InterpolationContext, long_div_remainder, remainder_closed_form
from .ring import ParityError, Poly, SuperRing, exact_divide, substitute
from .symfunc import HookShape, hook_schur, swap_y
from .zpoly import ZPoly

DEFAULT_MAX_M = 12


class OddGeneratorInDomain(ParityError):
    pass


@dataclass(frozen=True)
class Specialization:
    M: int
    n: int
    images: Dict[str, Poly]


def phi_m(M: int, n: int, max_m: int = DEFAULT_MAX_M) -> Specialization:
    """u_k -> (-1)^(n-1-k) s_(M-n+1, 1^(n-1-k))(y), so that u(z) -> z^M mod p(z)."""
    if M < n:
        raise ValueError(f"need M >= n, got M={M}, n={n}")
    if M > max_m:
        raise ValueError(f"M={M} exceeds the configured cap {max_m}")
    ring = SuperRing.standard(n)
    images = {}
    for k in range(n):
        s = hook_schur(HookShape(M - n + 1, n - 1 - k), n, ring)
        images[f"u{k}"] = -s if (n - 1 - k) % 2 else s
    return Specialization(M, n, images)


def apply_phi_m(spec: Specialization, p: Poly) -> Poly:
    """Apply phi_M to an element of Q[u, y]."""
    names = p.variables()
    odd = sorted(g for g in names if p.ring.is_odd(g))
    if odd:
        raise OddGeneratorInDomain(f"phi_M is not defined on odd generators {odd}")
    foreign = sorted(g for g in names if g[0] == "x")
    if foreign:
        raise ValueError(f"phi_M is defined on Q[u, y]; substitute {foreign} first")
    return substitute(p, spec.images)


def divided_difference(i: int, p: Poly, n: int = None) -> Poly:
    """(p - s_i p) / (y_i - y_{i+1}), with s_i swapping y_i and y_{i+1} only."""
    n = p.ring.n if n is None else n
    if not 1 <= i <= n - 1:
        raise ValueError(f"need 1 <= i <= n-1, got i={i}")
    ring = p.ring
    num = p - swap_y(p, i, i + 1)
    return exact_divide(num, ring.gen(f"y{i}") - ring.gen(f"y{i + 1}"))


def divided_difference_star(p: Poly, n: int) -> Poly:
    """d_{n-1} ... d_2 d_1 p (d_1 applied first)."""
    for i in range(1, n):
        p = divided_difference(i, p, n)
    return p


def coproduct_ring(n: int, copies: int = 2) -> SuperRing:
    names = ("u", "ut", "ub")[:copies]
    return SuperRing.standard(n, names)


def coproduct(n: int, k: int) -> Poly:
    """v_k: coefficient of z^k in u(z) ut(z) mod p(z), by the hook-Schur formula."""
    ring = coproduct_ring(n)
    acc = ring.zero()
    for i in range(n):
        for j in range(n):
            term = ring.gen(f"u{i}") * ring.gen(f"ut{j}")
            if i + j == k:
                acc = acc + term
            if i + j >= n:
                s = hook_schur(HookShape(i + j - n + 1, n - 1 - k), n, ring)
                acc = acc + (term * s if (n - k - 1) % 2 == 0 else -(term * s))
    return acc


def coproduct_by_division(n: int, ring: SuperRing = None, left: str = "u", right: str = "ut") -> List[Poly]:
    """Coefficients of left(z) right(z) mod p(z), by long division."""
    ring = coproduct_ring(n) if ring is None else ring
    ctx = InterpolationContext(n, ring)
    f = ZPoly.from_names(ring, left, n) * ZPoly.from_names(ring, right, n)
    r = long_div_remainder(f, ctx)
    return [r[k] for k in range(n)]


def coproduct_closed_via_remainder(n: int) -> List[Poly]:
    """Same coefficients by the closed remainder formula (a third route)."""
    ring = coproduct_ring(n)
    ctx = InterpolationContext(n, ring)
    f = ZPoly.from_names(ring, "u", n) * ZPoly.from_names(ring, "ut", n)
    r = remainder_closed_form(f, ctx)
    return [r[k] for k in range(n)]


def swap_copies(p: Poly, n: int, a: str = "u", b: str = "ut") -> Poly:
    ring = p.ring
    subs = {}
    for k in range(n):
        subs[f"{a}{k}"] = ring.gen(f"{b}{k}")
        subs[f"{b}{k}"] = ring.gen(f"{a}{k}")
    return substitute(p, subs)


def coassociativity(n: int) -> Dict[str, List[Poly]]:
    """Both iterated coproducts and the triple-product remainder.

    Uses alphabets u, ut, ub for the three tensor factors.
    """
    ring = coproduct_ring(n, 3)
    v = coproduct_by_division(n, ring)  # v_k(u, ut)
    # (Delta x 1) Delta: v_k(v(u, ut), ub)
    v_u_ub = [_rename_simultaneous(p, ring, n, {"ut": "ub"}) for p in v]
    left = [substitute(p, {f"u{i}": v[i] for i in range(n)}) for p in v_u_ub]
    # (1 x Delta) Delta: v_k(u, v(ut, ub))
    v_ut_ub = [_rename_simultaneous(p, ring, n, {"u": "ut", "ut": "ub"}) for p in v]
    right = [substitute(p, {f"ut{i}": v_ut_ub[i] for i in range(n)}) for p in v]
    ctx = InterpolationContext(n, ring)
    triple = ZPoly.from_names(ring, "u", n) * ZPoly.from_names(ring, "ut", n)
    triple = long_div_remainder(triple * ZPoly.from_names(ring, "ub", n), ctx)
    return {"left": left, "right": right, "triple": [triple[k] for k in range(n)]}


def _rename_simultaneous(p: Poly, ring: SuperRing, n: int, mapping: Dict[str, str]) -> Poly:
    subs = {}
    for src, dst in mapping.items():
        for k in range(n):
            subs[f"{src}{k}"] = ring.gen(f"{dst}{k}")
    return substitute(p, subs)
