"""Named exact identity checks over bounded parameter ranges."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional

from .differential import (
    build_dn,
    build_dn_closed_form,
    build_dw,
    dn_zeta_expected,
    mu_class,
    mu_w,
)
from .interp import (
    InterpolationContext,
    cramer_solve,
    interpolation_substitution,
    long_div_remainder,
    remainder_closed_form,
    zeta_coords,
    zeta_of_xi,
)
from .potential import Potential
from .ring import Poly, SuperRing
from .special import (
    apply_phi_m,
    coassociativity,
    coproduct,
    coproduct_by_division,
    divided_difference,
    divided_difference_star,
    phi_m,
    swap_copies,
)
from .symfunc import HookShape, bialternant_hook, h_complete, hook_schur
from .zpoly import ZPoly

SAMPLE_POTENTIALS = ("x^4/4 - x^2/2", "x^3/3", "x^5/5 - x^3")


@dataclass
class VerifyConfig:
    n_max: int = 4
    N_max: int = 4
    seed: int = 0
    trials: int = 50


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: List[str] = field(default_factory=list)

    def line(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        tail = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"{word} {self.name} ({self.cases} cases){tail}"


class _Tally:
    def __init__(self):
        self.cases = 0
        self.failures: List[str] = []

    def check(self, ok: bool, label: str):
        self.cases += 1
        if not ok:
            self.failures.append(label)


def random_product(ring: SuperRing, rng: random.Random, length: int, names: Optional[List[str]] = None) -> Poly:
    """A random coefficient times a product of ``length`` random generators."""
    names = names or [g for g, _ in ring.even] + [g for g, _ in ring.odd]
    p = ring.const(rng.choice([1, -1, 2, -3, 5]))
    for _ in range(length):
        p = p * ring.gen(rng.choice(names))
    return p


def _differentials(cfg: VerifyConfig):
    for n in range(1, cfg.n_max + 1):
        for N in range(1, cfg.N_max + 1):
            for yified in (True, False):
                yield f"d_{N} n={n} y={int(yified)}", build_dn(n, N, yified)
        for W in SAMPLE_POTENTIALS:
            for yified in (True, False):
                yield f"dW[{W}] n={n} y={int(yified)}", build_dw(n, W, yified)


# -- symmetric functions ------------------------------------------------------


def check_hook_schur_bialternant(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        for arm in range(1, 6):
            for leg in range(n):
                shape = HookShape(arm, leg)
                t.check(hook_schur(shape, n) == bialternant_hook(shape, n), f"n={n} {shape}")


def check_hook_schur_to_h(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        for k in range(n):
            for j in range(n, 9):
                lhs = SuperRing.standard(n).zero()
                for s in range(n - k):
                    term = h_complete(s, n) * hook_schur(HookShape(j - n + 1, n - 1 - k - s), n)
                    lhs = lhs + (term if (n - 1 - k - s) % 2 == 0 else -term)
                t.check(lhs == h_complete(j - k, n), f"n={n} k={k} j={j}")


# -- interpolation ------------------------------------------------------------


def check_remainder_closed_form(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        ring = SuperRing.standard(n)
        ctx = InterpolationContext(n, ring)
        for j in range(9):
            f = ZPoly.monomial(ring, j)
            t.check(long_div_remainder(f, ctx) == remainder_closed_form(f, ctx), f"n={n} z^{j}")
        u = ZPoly.from_names(ring, "u", n)
        for N in range(1, cfg.N_max + 1):
            f = u
            for _ in range(N - 1):
                f = f * u
            t.check(long_div_remainder(f, ctx) == remainder_closed_form(f, ctx), f"n={n} u^{N}")


def check_interpolation_cramer(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        ring = SuperRing.standard(n)
        subs = interpolation_substitution(ring, n)
        ys = [ring.gen(f"y{i}") for i in range(1, n + 1)]
        for name, gen in (("x", "u"), ("theta", "xi")):
            values = [ring.gen(f"{name}{i}") for i in range(1, n + 1)]
            sol = cramer_solve(values, n)
            den = sol[0].den
            for i in range(n):
                lhs = ring.zero()
                for k in range(n):
                    lhs = lhs + sol[k].num * ys[i] ** k
                t.check(lhs == values[i] * den, f"n={n} {name} cleared row {i + 1}")
            for k in range(n):
                got = sol[k].substitute(subs).to_poly()
                t.check(got == ring.gen(f"{gen}{k}"), f"n={n} {gen}{k}")


def check_evaluation_identity(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        ring = SuperRing.standard(n)
        u = ZPoly.from_names(ring, "u", n)
        for N in range(1, min(cfg.N_max, 3) + 1):
            d = build_dn(n, N)
            for i in range(1, n + 1):
                y = ring.gen(f"y{i}")
                lhs = ZPoly(ring, d.xi_images()).evaluate(y)
                t.check(lhs == u.evaluate(y) ** N, f"n={n} N={N} i={i}")


# -- differentials ------------------------------------------------------------


def check_dual_construction(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        for N in range(1, cfg.N_max + 1):
            for yified in (True, False):
                same = build_dn(n, N, yified) == build_dn_closed_form(n, N, yified)
                t.check(same, f"n={n} N={N} y={int(yified)}")


def check_zeta_images(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        ctx = InterpolationContext(n)
        for N in range(1, cfg.N_max + 1):
            z = zeta_coords(build_dn(n, N).xi_images(), ctx)
            for k in range(n):
                t.check(z[k] == dn_zeta_expected(n, N, k), f"n={n} N={N} k={k}")


def check_n2_example(cfg: VerifyConfig, t: _Tally):
    ring = SuperRing.standard(2)
    u0, u1, y1, y2 = (ring.gen(g) for g in ("u0", "u1", "y1", "y2"))
    for N in range(2, 6):
        d0 = u0 ** N
        d1 = (u0 ** (N - 1) * u1).scale(N)
        for j in range(2, N + 1):
            common = (u0 ** (N - j) * u1 ** j).scale(comb(N, j))
            d0 = d0 - y1 * y2 * common * h_complete(j - 2, 2)
            d1 = d1 + common * h_complete(j - 1, 2)
        d = build_dn(2, N)
        t.check(d.image("xi0") == d0, f"N={N} xi0")
        t.check(d.image("xi1") == d1, f"N={N} xi1")


def check_square_zero(cfg: VerifyConfig, t: _Tally):
    rng = random.Random(cfg.seed)
    for label, d in _differentials(cfg):
        ring = d.ring
        gens = [ring.gen(g) for g, _ in ring.even] + [ring.gen(g) for g, _ in ring.odd]
        for g in gens:
            t.check(not d(d(g)), f"{label} gen {g}")
        for _ in range(cfg.trials):
            p = random_product(ring, rng, rng.randint(2, 4))
            t.check(not d(d(p)), f"{label} {p}")


def check_leibniz(cfg: VerifyConfig, t: _Tally):
    rng = random.Random(cfg.seed + 1)
    for label, d in _differentials(cfg):
        ring = d.ring
        for _ in range(cfg.trials):
            a = random_product(ring, rng, rng.randint(1, 3))
            b = random_product(ring, rng, rng.randint(1, 3))
            sign = -1 if a.is_odd() else 1
            t.check(d(a * b) == d(a) * b + (a * d(b)).scale(sign), f"{label} {a} * {b}")


def check_mu_cycles(cfg: VerifyConfig, t: _Tally):
    for n in range(2, max(cfg.n_max, 5) + 1):
        for N in range(1, cfg.N_max + 1):
            d = build_dn(n, N, yified=False)
            for k in range(1, n):
                t.check(not d(mu_class(n, N, k)), f"n={n} N={N} k={k}")


def check_potential_reduction(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        for N in range(1, cfg.N_max + 1):
            for yified in (True, False):
                dw = build_dw(n, Potential.power(N), yified)
                t.check(dw == build_dn(n, N, yified), f"n={n} N={N} y={int(yified)}")


def check_mu_w_cycles(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        for W in SAMPLE_POTENTIALS:
            d = build_dw(n, W, yified=False)
            for i, mu in enumerate(mu_w(n, W)):
                t.check(not d(mu), f"n={n} W={W} i={i}")
        for N in range(1, cfg.N_max + 1):
            for i, mu in enumerate(mu_w(n, Potential.power(N))):
                t.check(mu == mu_class(n, N, i + 1), f"n={n} N={N} mu^W_{i} vs mu_{i + 1}")


# -- specialization and divided differences -----------------------------------


def check_specialization_x(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        ring = SuperRing.standard(n)
        u = ZPoly.from_names(ring, "u", n)
        for M in range(n, 6):
            spec = phi_m(M, n)
            for i in range(1, n + 1):
                y = ring.gen(f"y{i}")
                t.check(apply_phi_m(spec, u.evaluate(y)) == y ** M, f"n={n} M={M} i={i}")


def check_specialization_dn_zeta(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        ctx = InterpolationContext(n)
        for N in range(1, min(cfg.N_max, 3) + 1):
            z = zeta_coords(build_dn(n, N).xi_images(), ctx)
            for M in range(n, 6):
                spec = phi_m(M, n)
                for k in range(n):
                    t.check(apply_phi_m(spec, z[k]) == h_complete(M * N - k, n), f"n={n} N={N} M={M} k={k}")


def check_phi_homomorphism(cfg: VerifyConfig, t: _Tally):
    rng = random.Random(cfg.seed + 2)
    for n in range(1, min(cfg.n_max, 3) + 1):
        ring = SuperRing.standard(n)
        names = [f"u{k}" for k in range(n)] + [f"y{i}" for i in range(1, n + 1)]
        spec = phi_m(n + 1, n)
        for _ in range(10):
            a = random_product(ring, rng, 2, names) + random_product(ring, rng, 1, names)
            b = random_product(ring, rng, 2, names)
            t.check(apply_phi_m(spec, a * b) == apply_phi_m(spec, a) * apply_phi_m(spec, b), f"n={n}")


def check_divided_difference_power(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        y1 = SuperRing.standard(n).gen("y1")
        for k in range(8):
            t.check(divided_difference_star(y1 ** k, n) == h_complete(k - n + 1, n), f"n={n} k={k}")


def check_divided_difference_zeta(cfg: VerifyConfig, t: _Tally):
    for n in range(1, cfg.n_max + 1):
        ring = SuperRing.standard(n)
        theta1 = interpolation_substitution(ring, n)["theta1"]
        zetas = zeta_of_xi(n, ring)
        y1 = ring.gen("y1")
        for k in range(n):
            t.check(divided_difference_star(y1 ** (n - 1 - k) * theta1, n) == zetas[k], f"n={n} k={k}")


def check_divided_difference_dn_zeta(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        ring = SuperRing.standard(n)
        x1 = interpolation_substitution(ring, n)["x1"]
        y1 = ring.gen("y1")
        for N in range(1, min(cfg.N_max, 3) + 1):
            for k in range(n):
                lhs = divided_difference_star(y1 ** (n - 1 - k) * x1 ** N, n)
                t.check(lhs == dn_zeta_expected(n, N, k), f"n={n} N={N} k={k}")


def check_divided_difference_relations(cfg: VerifyConfig, t: _Tally):
    rng = random.Random(cfg.seed + 3)
    for n in range(2, cfg.n_max + 1):
        ring = SuperRing.standard(n)
        names = [f"y{i}" for i in range(1, n + 1)] + ["u0", "xi0"]
        for _ in range(10):
            p = random_product(ring, rng, rng.randint(1, 5), names) + random_product(ring, rng, 3, names)
            for i in range(1, n):
                t.check(not divided_difference(i, divided_difference(i, p)), f"n={n} i={i} square")
            for i in range(1, n - 1):
                a = divided_difference(i, divided_difference(i + 1, divided_difference(i, p)))
                b = divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, p)))
                t.check(a == b, f"n={n} i={i} braid")


# -- coproduct ----------------------------------------------------------------


def check_coproduct_closed_form(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        div = coproduct_by_division(n)
        for k in range(n):
            t.check(coproduct(n, k) == div[k], f"n={n} k={k}")


def check_coproduct_cocommutative(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        for k in range(n):
            v = coproduct(n, k)
            t.check(swap_copies(v, n) == v, f"n={n} k={k}")


def check_coproduct_coassociative(cfg: VerifyConfig, t: _Tally):
    for n in range(1, min(cfg.n_max, 3) + 1):
        res = coassociativity(n)
        for k in range(n):
            t.check(res["left"][k] == res["right"][k] == res["triple"][k], f"n={n} k={k}")


IDENTITIES: Dict[str, Callable[[VerifyConfig, _Tally], None]] = {
    "hook-schur-bialternant": check_hook_schur_bialternant,
    "hook-schur-to-h": check_hook_schur_to_h,
    "remainder-closed-form": check_remainder_closed_form,
    "interpolation-cramer": check_interpolation_cramer,
    "evaluation-identity": check_evaluation_identity,
    "dn-dual-construction": check_dual_construction,
    "dn-zeta-images": check_zeta_images,
    "dn-two-strand-example": check_n2_example,
    "square-zero": check_square_zero,
    "graded-leibniz": check_leibniz,
    "mu-cycles": check_mu_cycles,
    "potential-reduction": check_potential_reduction,
    "mu-w-cycles": check_mu_w_cycles,
    "specialization-x": check_specialization_x,
    "specialization-dn-zeta": check_specialization_dn_zeta,
    "specialization-homomorphism": check_phi_homomorphism,
    "divided-difference-power": check_divided_difference_power,
    "divided-difference-zeta": check_divided_difference_zeta,
    "divided-difference-dn-zeta": check_divided_difference_dn_zeta,
    "divided-difference-relations": check_divided_difference_relations,
    "coproduct-closed-form": check_coproduct_closed_form,
    "coproduct-cocommutative": check_coproduct_cocommutative,
    "coproduct-coassociative": check_coproduct_coassociative,
}


def run_identity(name: str, cfg: Optional[VerifyConfig] = None) -> CheckResult:
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}")
    cfg = cfg or VerifyConfig()
    t = _Tally()
    try:
        IDENTITIES[name](cfg, t)
    except Exception as exc:  # a crash is a failure of the identity, not of the suite
        t.failures.append(f"{type(exc).__name__}: {exc}")
    return CheckResult(name, not t.failures, t.cases, t.failures)


def run_all(cfg: Optional[VerifyConfig] = None, only: Optional[List[str]] = None) -> List[CheckResult]:
    names = only or list(IDENTITIES)
    return [run_identity(name, cfg) for name in names]
