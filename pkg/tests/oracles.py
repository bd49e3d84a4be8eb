"""Independent reference computations built on sympy and brute force.

Nothing here reuses the package's algorithms; only the Poly container is
converted to and from sympy expressions.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product

import sympy as sp

from stablekr.ring import Poly, SuperRing, Tridegree


def symbols_for(n):
    ys = sp.symbols(f"y1:{n + 1}")
    us = sp.symbols(f"u0:{n}")
    return ys, us


def to_sympy(p: Poly):
    """Even polynomial -> sympy expression in the generator names."""
    if p.has_odd():
        raise ValueError("only even polynomials convert")
    expr = 0
    for (exps, _), c in p.terms.items():
        term = sp.Rational(c)
        for (name, _), e in zip(p.ring.even, exps):
            if e:
                term *= sp.Symbol(name) ** e
        expr += term
    return sp.expand(expr)


def from_sympy(expr, ring: SuperRing) -> Poly:
    expr = sp.expand(expr)
    out = ring.zero()
    for term in sp.Add.make_args(expr):
        if term == 0:
            continue
        coeff, rest = term.as_coeff_Mul()
        q = sp.Rational(coeff)
        mono = ring.const(Fraction(int(q.p), int(q.q)))
        for factor in sp.Mul.make_args(rest):
            if factor == 1:
                continue
            base, e = factor.as_base_exp()
            mono = mono * ring.gen(str(base)) ** int(e)
        out = out + mono
    return out


def p_of_z(n, z):
    ys, _ = symbols_for(n)
    expr = 1
    for y in ys:
        expr *= z - y
    return sp.expand(expr)


def sympy_remainder_coeffs(f, n, z, yified=True):
    """Coefficients r_0..r_{n-1} of f mod p(z) (or mod z^n)."""
    mod = p_of_z(n, z) if yified else z ** n
    r = sp.rem(sp.expand(f), mod, z)
    poly = sp.Poly(r, z)
    return [sp.expand(poly.coeff_monomial(z ** k)) for k in range(n)]


def sympy_dn(n, N, yified=True):
    z = sp.Symbol("z")
    _, us = symbols_for(n)
    u = sum(us[k] * z ** k for k in range(n))
    return sympy_remainder_coeffs(u ** N, n, z, yified)


def sympy_dw(n, dW_coeffs, yified=True):
    z = sp.Symbol("z")
    _, us = symbols_for(n)
    u = sum(us[k] * z ** k for k in range(n))
    f = sum(sp.Rational(c) * u ** i for i, c in enumerate(dW_coeffs))
    return sympy_remainder_coeffs(f, n, z, yified)


def h_sympy(k, n):
    ys, _ = symbols_for(n)
    if k < 0:
        return sp.Integer(0)
    return sp.expand(sum(sp.Mul(*c) for c in combinations_with_replacement(ys, k)))


def e_sympy(k, n):
    ys, _ = symbols_for(n)
    if k < 0 or k > n:
        return sp.Integer(0)
    return sp.expand(sum(sp.Mul(*c) for c in combinations(ys, k)))


def schur_bialternant_sympy(parts, n):
    """det[y_i^(lambda_j + n - j)] / det[y_i^(n - j)] with sympy."""
    ys, _ = symbols_for(n)
    lam = list(parts) + [0] * (n - len(parts))
    if len(parts) > n:
        return sp.Integer(0)
    num = sp.Matrix(n, n, lambda i, j: ys[i] ** (lam[j] + n - 1 - j)).det()
    den = sp.Matrix(n, n, lambda i, j: ys[i] ** (n - 1 - j)).det()
    return sp.expand(sp.cancel(num / den))


def brute_basis(ring: SuperRing, n: int, D: Tridegree, max_u: int, max_y: int, yified=True):
    """All monomials in u, y, xi of degree D by exhaustive search over bounded exponents."""
    out = set()
    ys_range = range(max_y + 1) if yified else range(1)
    for ue in product(range(max_u + 1), repeat=n):
        if sum(ue) > max_u:
            continue
        for ye in product(ys_range, repeat=n):
            if sum(ye) > max_y:
                continue
            for mask in range(1 << n):
                mono = (tuple(ue) + tuple(ye) + (0,) * n, mask)
                if ring.monomial_degree(mono) == D:
                    out.add(mono)
    return out


def dense_matrix(d, src, tgt):
    """sympy Matrix of d from span(src) to span(tgt) (rows = tgt)."""
    index = {m: i for i, m in enumerate(tgt)}
    M = sp.zeros(len(tgt), len(src))
    for j, m in enumerate(src):
        img = d(Poly(d.ring, {m: 1}))
        for mono, c in img.terms.items():
            M[index[mono], j] = sp.Rational(c)
    return M


def dense_homology(d, D, max_u, max_y, yified):
    """dim H at D from dense sympy ranks over brute-force bases."""
    ring, n = d.ring, d.n
    here = sorted(brute_basis(ring, n, D, max_u, max_y, yified))
    below = sorted(brute_basis(ring, n, D - d.shift, max_u, max_y, yified))
    above = sorted({m for src in here for m in d(Poly(ring, {src: 1})).terms})
    r_in = dense_matrix(d, below, here).rank() if below and here else 0
    r_out = dense_matrix(d, here, above).rank() if here and above else 0
    return len(here) - r_in - r_out
