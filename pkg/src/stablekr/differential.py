"""The differentials d_N and d_dW on u, xi, y and the mu-classes.

A :class:`Differential` is determined by the images of the odd generators;
even generators are cycles and :func:`apply_derivation` extends by the
graded Leibniz rule d(fg) = d(f) g + (-1)^|f| f d(g).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Dict, List, Mapping, Optional, Union

from .interp import context, long_div_remainder, reduce_mul, reduce_pow
from .potential import Potential
from .ring import Monomial, Poly, SuperRing, Tridegree, _norm, odd_sign
from .symfunc import HookShape, hook_schur
from .zpoly import ZPoly


def dn_shift(N: int) -> Tridegree:
    """Degree of d_N: q^N a^-1."""
    return Tridegree(2 * N + 2, 0, -1)


class Differential:
    """Derivation of odd degree given by ``images`` of the odd generators."""

    def __init__(
        self,
        ring: SuperRing,
        images: Mapping[str, Poly],
        label: str,
        shift: Optional[Tridegree],
        n: int,
        yified: bool,
        N: Optional[int] = None,
    ):
        self.ring = ring
        self.images = dict(images)
        self.label = label
        self.shift = shift
        self.n = n
        self.yified = yified
        self.N = N
        self.recipe: Optional[tuple] = None  # lets worker processes rebuild it
        self._by_index: List[Optional[Poly]] = [None] * len(ring.odd)
        for name, img in self.images.items():
            if not ring.is_odd(name):
                raise ValueError(f"{name} is not an odd generator")
            if not img.is_even():
                raise ValueError(f"image of {name} must be even")
            self._by_index[ring.odd_index[name]] = img

    def image(self, name: str) -> Poly:
        return self.images.get(name, self.ring.zero())

    def xi_images(self) -> List[Poly]:
        return [self.image(f"xi{k}") for k in range(self.n)]

    def __call__(self, p: Poly) -> Poly:
        return apply_derivation(self, p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Differential)
            and self.ring == other.ring
            and {k: v for k, v in self.images.items() if v}
            == {k: v for k, v in other.images.items() if v}
        )

    def __repr__(self) -> str:
        return f"Differential({self.label}, n={self.n}, yified={self.yified})"

    def apply_monomial(self, mono: Monomial, coeff=1, out: Dict = None) -> Dict:
        """Accumulate d(coeff * mono) into ``out`` (a term dict)."""
        exps, mask = mono
        out = {} if out is None else out
        r = 0
        m = mask
        j = 0
        while m:
            if m & 1:
                img = self._by_index[j]
                if img is not None:
                    rest = mask & ~(1 << j)
                    c0 = -coeff if r & 1 else coeff
                    for (ei, mi), ci in img.terms.items():
                        if mi & rest:
                            continue
                        c = c0 * ci
                        if mi and odd_sign(mi, rest) < 0:
                            c = -c
                        k = (tuple(a + b for a, b in zip(exps, ei)), mi | rest)
                        v = out.get(k, 0) + c
                        if v:
                            out[k] = v
                        else:
                            del out[k]
                r += 1
            m >>= 1
            j += 1
        return out


def apply_derivation(d: Differential, p: Poly) -> Poly:
    if p.ring != d.ring:
        raise ValueError("ring mismatch")
    out: Dict = {}
    for mono, c in p.terms.items():
        if mono[1]:
            d.apply_monomial(mono, c, out)
    return Poly(p.ring, {k: _norm(v) for k, v in out.items()})


def _theta_images(ring: SuperRing, n: int, fn) -> Dict[str, Poly]:
    return {f"theta{i}": fn(ring.gen(f"x{i}")) for i in range(1, n + 1)}


@lru_cache(maxsize=None)
def build_dn(n: int, N: int, yified: bool = True) -> Differential:
    """d_N(xi(z)) = u(z)^N mod p(z), or mod z^n when ``yified`` is false."""
    if n < 1 or N < 1:
        raise ValueError("need n >= 1 and N >= 1")
    ring = SuperRing.standard(n)
    ctx = context(n, yified)
    r = reduce_pow(ZPoly.from_names(ring, "u", n), N, ctx)
    images = {f"xi{k}": r[k] for k in range(n)}
    images.update(_theta_images(ring, n, lambda x: x ** N))
    d = Differential(ring, images, f"d_{N}", dn_shift(N), n, yified, N)
    d.recipe = ("dn", n, N, yified)
    return d


def power_coefficients(n: int, N: int, ring: SuperRing, prefix: str = "u") -> Dict[int, Poly]:
    """Coefficient of z^j in u(z)^N as a sum over ordered tuples (j_1..j_N)."""
    counts: Dict[int, Counter] = {}
    for tup in product(range(n), repeat=N):
        counts.setdefault(sum(tup), Counter())[tuple(sorted(tup))] += 1
    out = {}
    for j, ctr in counts.items():
        terms = {}
        for tup, mult in ctr.items():
            e = [0] * ring.nvars
            for i in tup:
                e[ring.even_index[f"{prefix}{i}"]] += 1
            terms[(tuple(e), 0)] = mult
        out[j] = Poly(ring, terms)
    return out


@lru_cache(maxsize=None)
def build_dn_closed_form(n: int, N: int, yified: bool = True) -> Differential:
    """d_N via the hook-Schur double sum, independent of long division."""
    ring = SuperRing.standard(n)
    coeffs = power_coefficients(n, N, ring)
    images = {}
    for k in range(n):
        acc = coeffs.get(k, ring.zero())
        if yified:
            for j in range(n, N * (n - 1) + 1):
                s = hook_schur(HookShape(j - n + 1, n - 1 - k), n, ring)
                term = coeffs[j] * s
                acc = acc - term if (n - 1 - k) % 2 else acc + term
        images[f"xi{k}"] = acc
    images.update(_theta_images(ring, n, lambda x: x ** N))
    return Differential(ring, images, f"d_{N}", dn_shift(N), n, yified, N)


def compose_potential(coeffs, u: ZPoly, ctx) -> ZPoly:
    """P(u(z)) mod p(z) by Horner, reducing after each multiplication."""
    ring = u.ring
    acc = ZPoly(ring, [])
    for c in reversed(list(coeffs)):
        acc = reduce_mul(acc, u, ctx) + ZPoly(ring, [ring.const(c)])
    return acc


def _compose_truncated(coeffs, u: ZPoly, k: int) -> ZPoly:
    ring = u.ring
    acc = ZPoly(ring, [])
    for c in reversed(list(coeffs)):
        acc = acc.mul(u, below=k) + ZPoly(ring, [ring.const(c)])
    return acc.truncate(k)


def build_dw(n: int, W: Union[Potential, str], yified: bool = True) -> Differential:
    """d_dW(xi(z)) = dW(u(z)) mod p(z), or mod z^n when ``yified`` is false."""
    if isinstance(W, str):
        W = Potential.parse(W)
    ring = SuperRing.standard(n)
    ctx = context(n, yified)
    r = compose_potential(W.dW, ZPoly.from_names(ring, "u", n), ctx)
    images = {f"xi{k}": r[k] for k in range(n)}

    def dW_at(x: Poly) -> Poly:
        acc = ring.zero()
        for c in reversed(W.dW):
            acc = acc * x + ring.const(c)
        return acc

    images.update(_theta_images(ring, n, dW_at))
    N = W.homogeneous_degree()
    shift = dn_shift(N) if N is not None else None
    d = Differential(ring, images, f"d_dW[{W!r}]", shift, n, yified, N)
    d.recipe = ("dw", n, tuple(W.coeffs), yified)
    return d


def rebuild(recipe: tuple) -> Differential:
    kind, n, arg, yified = recipe
    if kind == "dn":
        return build_dn(n, arg, yified)
    return _build_dw_cached(n, arg, yified)


@lru_cache(maxsize=None)
def _build_dw_cached(n: int, coeffs: tuple, yified: bool) -> Differential:
    return build_dw(n, Potential(coeffs), yified)


def mu_class(n: int, N: int, k: int) -> Poly:
    """mu_k = sum_{i+j=k} (N i - j) u_i xi_j for 1 <= k <= n-1."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"mu_k needs 1 <= k <= n-1, got k={k}")
    ring = SuperRing.standard(n)
    acc = ring.zero()
    for i in range(k + 1):
        j = k - i
        c = N * i - j
        if c:
            acc = acc + (ring.gen(f"u{i}") * ring.gen(f"xi{j}")).scale(c)
    return acc


def mu_w(n: int, W: Union[Potential, str]) -> List[Poly]:
    """Coefficients mu^W_0..mu^W_{n-2} of

        (d2W/H)(u(z)) u'(z) xi(z) - (dW/H)(u(z)) xi'(z)   mod z^(n-1).

    mu^W_i corresponds to mu_{i+1} for W = x^(N+1)/(N+1).  The truncation
    is mod z^(n-1) because d(xi'(z)) = d2W(u(z)) u'(z) only holds there.
    """
    if isinstance(W, str):
        W = Potential.parse(W)
    ring = SuperRing.standard(n)
    k = n - 1
    if k <= 0:
        return []
    u = ZPoly.from_names(ring, "u", n)
    xi = ZPoly.from_names(ring, "xi", n)
    a = _compose_truncated(W.d2W_over_H, u, k)
    b = _compose_truncated(W.dW_over_H, u, k)
    first = a.mul(u.derivative(), below=k).mul(xi, below=k)
    second = b.mul(xi.derivative(), below=k)
    mu = (first - second).truncate(k)
    return [mu[i] for i in range(k)]


def mu_w_full(n: int, W: Union[Potential, str]) -> List[Poly]:
    """The same series kept mod z^n (n coefficients); the last is generally not a cycle."""
    if isinstance(W, str):
        W = Potential.parse(W)
    ring = SuperRing.standard(n)
    u = ZPoly.from_names(ring, "u", n)
    xi = ZPoly.from_names(ring, "xi", n)
    a = _compose_truncated(W.d2W_over_H, u, n)
    b = _compose_truncated(W.dW_over_H, u, n)
    mu = (a.mul(u.derivative(), below=n).mul(xi, below=n) - b.mul(xi.derivative(), below=n))
    return [mu[i] for i in range(n)]


def dn_zeta_expected(n: int, N: int, k: int) -> Poly:
    """sum_{j>=k} [z^j]u(z)^N h_{j-k}(y), the predicted d_N(zeta_k)."""
    from .symfunc import h_complete

    ring = SuperRing.standard(n)
    coeffs = power_coefficients(n, N, ring)
    acc = ring.zero()
    for j in range(k, N * (n - 1) + 1):
        if j in coeffs:
            acc = acc + coeffs[j] * h_complete(j - k, n, ring)
    return acc


__all__ = [
    "Differential",
    "apply_derivation",
    "build_dn",
    "build_dn_closed_form",
    "build_dw",
    "compose_potential",
    "dn_shift",
    "dn_zeta_expected",
    "long_div_remainder",
    "mu_class",
    "mu_w",
    "mu_w_full",
    "power_coefficients",
    "rebuild",
]
