"""Symmetric functions in y1..yn and antisymmetrization over S_n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Optional

from .ring import Poly, SuperRing, exact_divide, perm_sign, rename


def _ring(n: int, ring: Optional[SuperRing]) -> SuperRing:
    return SuperRing.standard(n) if ring is None else ring


def _y_indices(ring: SuperRing, n: int):
    return [ring.even_index[f"y{i}"] for i in range(1, n + 1)]


@dataclass(frozen=True)
class HookShape:
    """The partition (arm, 1^leg)."""

    arm: int
    leg: int

    def __post_init__(self):
        if self.arm < 1 or self.leg < 0:
            raise ValueError(f"invalid hook ({self.arm}, 1^{self.leg})")

    @property
    def size(self) -> int:
        return self.arm + self.leg

    def parts(self):
        return (self.arm,) + (1,) * self.leg


def h_complete(k: int, n: int, ring: Optional[SuperRing] = None) -> Poly:
    """Complete homogeneous symmetric polynomial h_k(y1..yn)."""
    return _h(k, n, _ring(n, ring))


def e_elementary(k: int, n: int, ring: Optional[SuperRing] = None) -> Poly:
    """Elementary symmetric polynomial e_k(y1..yn)."""
    return _e(k, n, _ring(n, ring))


@lru_cache(maxsize=4096)
def _h(k: int, n: int, ring: SuperRing) -> Poly:
    if k < 0:
        return ring.zero()
    idx = _y_indices(ring, n)
    terms = {}
    nv = ring.nvars
    for combo in combinations_with_replacement(idx, k):
        e = [0] * nv
        for i in combo:
            e[i] += 1
        terms[(tuple(e), 0)] = 1
    return Poly(ring, terms)


@lru_cache(maxsize=4096)
def _e(k: int, n: int, ring: SuperRing) -> Poly:
    if k < 0 or k > n:
        return ring.zero()
    idx = _y_indices(ring, n)
    terms = {}
    nv = ring.nvars
    for combo in combinations(idx, k):
        e = [0] * nv
        for i in combo:
            e[i] = 1
        terms[(tuple(e), 0)] = 1
    return Poly(ring, terms)


def hook_schur(shape: HookShape, n: int, ring: Optional[SuperRing] = None) -> Poly:
    """s_(arm, 1^leg)(y1..yn) as sum_t (-1)^t h_{arm+t} e_{leg-t}."""
    return _hook(shape.arm, shape.leg, n, _ring(n, ring))


@lru_cache(maxsize=4096)
def _hook(arm: int, leg: int, n: int, ring: SuperRing) -> Poly:
    acc = ring.zero()
    for t in range(leg + 1):
        e = _e(leg - t, n, ring)
        if e.is_zero():
            continue
        term = _h(arm + t, n, ring) * e
        acc = acc - term if t % 2 else acc + term
    return acc


def vandermonde(n: int, ring: Optional[SuperRing] = None) -> Poly:
    """prod_{i<j} (y_i - y_j)."""
    ring = _ring(n, ring)
    acc = ring.one()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            acc = acc * (ring.gen(f"y{i}") - ring.gen(f"y{j}"))
    return acc


def strand_permutation(ring: SuperRing, n: int, w) -> tuple:
    """Index maps sending strand i to w(i) on x, y, theta (0-based ``w``)."""
    even, odd = {}, {}
    for i in range(n):
        for pref in ("y", "x"):
            even[ring.even_index[f"{pref}{i + 1}"]] = ring.even_index[f"{pref}{w[i] + 1}"]
        odd[ring.odd_index[f"theta{i + 1}"]] = ring.odd_index[f"theta{w[i] + 1}"]
    return even, odd


def act(p: Poly, n: int, w) -> Poly:
    """Action of w in S_n permuting x_i, y_i, theta_i simultaneously."""
    even, odd = strand_permutation(p.ring, n, w)
    return rename(p, even, odd)


def swap_y(p: Poly, i: int, j: int) -> Poly:
    """Swap y_i and y_j only; u, xi, x, theta are fixed."""
    ring = p.ring
    a, b = ring.even_index[f"y{i}"], ring.even_index[f"y{j}"]
    return rename(p, {a: b, b: a})


def alt(p: Poly, n: int) -> Poly:
    """sum over w in S_n (lexicographic order) of sgn(w) w(p)."""
    acc = p.ring.zero()
    for w in permutations(range(n)):
        term = act(p, n, w)
        acc = acc - term if perm_sign(w) < 0 else acc + term
    return acc


def bialternant_hook(shape: HookShape, n: int, ring: Optional[SuperRing] = None) -> Poly:
    """det[y_i^(lambda_j + n - j)] / vandermonde, by Leibniz expansion.

    Independent route used to check :func:`hook_schur`.
    """
    ring = _ring(n, ring)
    lam = list(shape.parts())
    if len(lam) > n:
        return ring.zero()
    lam += [0] * (n - len(lam))
    powers = [lam[j] + n - 1 - j for j in range(n)]
    ys = _y_indices(ring, n)
    terms = {}
    for w in permutations(range(n)):
        e = [0] * ring.nvars
        for i in range(n):
            e[ys[i]] = powers[w[i]]
        terms[(tuple(e), 0)] = terms.get((tuple(e), 0), 0) + perm_sign(w)
    det = Poly(ring, {k: v for k, v in terms.items() if v})
    return exact_divide(det, vandermonde(n, ring))
