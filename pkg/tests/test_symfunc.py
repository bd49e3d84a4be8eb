import pytest

from oracles import e_sympy, h_sympy, schur_bialternant_sympy, to_sympy
from stablekr.interp import interpolation_substitution
from stablekr.ring import NonExactDivision, SuperRing, exact_divide, substitute
from stablekr.symfunc import (
    HookShape,
    act,
    alt,
    bialternant_hook,
    e_elementary,
    h_complete,
    hook_schur,
    vandermonde,
)


def ring(n):
    return SuperRing.standard(n)


def test_h_examples():
    R = ring(2)
    y1, y2 = R.gen("y1"), R.gen("y2")
    assert h_complete(0, 2) == R.one()
    assert h_complete(1, 2) == y1 + y2
    assert h_complete(2, 2) == y1 ** 2 + y1 * y2 + y2 ** 2
    assert h_complete(-1, 2).is_zero()


def test_e_examples():
    R = ring(2)
    assert e_elementary(2, 2) == R.gen("y1") * R.gen("y2")
    assert e_elementary(3, 2).is_zero()
    R3 = ring(3)
    assert e_elementary(1, 3) == R3.gen("y1") + R3.gen("y2") + R3.gen("y3")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_h_e_against_sympy(n):
    for k in range(-1, 6):
        assert to_sympy(h_complete(k, n)) == h_sympy(k, n)
        assert to_sympy(e_elementary(k, n)) == e_sympy(k, n)


def test_hook_examples():
    R = ring(2)
    assert hook_schur(HookShape(1, 0), 3) == h_complete(1, 3)
    for j in range(2, 7):
        expect = R.gen("y1") * R.gen("y2") * h_complete(j - 2, 2)
        assert hook_schur(HookShape(j - 1, 1), 2) == expect
    assert to_sympy(hook_schur(HookShape(2, 1), 3)) == schur_bialternant_sympy((2, 1), 3)


def test_hook_shape_validation():
    with pytest.raises(ValueError):
        HookShape(0, 1)
    assert HookShape(3, 2).size == 5
    assert HookShape(3, 2).parts() == (3, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hook_schur_matches_bialternant(n):
    for arm in range(1, 6):
        for leg in range(0, 4):
            shape = HookShape(arm, leg)
            assert hook_schur(shape, n) == bialternant_hook(shape, n)


@pytest.mark.parametrize("n", [2, 3])
def test_hook_schur_matches_sympy_determinant(n):
    for arm in range(1, 5):
        for leg in range(0, n + 1):
            got = to_sympy(hook_schur(HookShape(arm, leg), n))
            assert got == schur_bialternant_sympy(HookShape(arm, leg).parts(), n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hook_schur_to_h_identity(n):
    R = ring(n)
    for k in range(n):
        for j in range(n, 9):
            lhs = R.zero()
            for s in range(n - k):
                term = h_complete(s, n) * hook_schur(HookShape(j - n + 1, n - 1 - k - s), n)
                lhs = lhs + (term if (n - 1 - k - s) % 2 == 0 else -term)
            assert lhs == h_complete(j - k, n)


def test_vandermonde_examples():
    assert vandermonde(1) == ring(1).one()
    R2 = ring(2)
    assert vandermonde(2) == R2.gen("y1") - R2.gen("y2")
    R3 = ring(3)
    y1, y2, y3 = (R3.gen(f"y{i}") for i in (1, 2, 3))
    assert vandermonde(3) == (y1 - y2) * (y1 - y3) * (y2 - y3)


def test_alt_examples():
    R = ring(2)
    y1, y2, x1, x2 = (R.gen(g) for g in ("y1", "y2", "x1", "x2"))
    assert alt(y1, 2) == y1 - y2
    assert alt(y1 + y2, 2).is_zero()
    assert alt(y2 * x1, 2) == y2 * x1 - y1 * x2


def test_alt_moves_theta_with_strands():
    R = ring(2)
    t1, t2, y2 = R.gen("theta1"), R.gen("theta2"), R.gen("y2")
    assert alt(y2 * t1, 2) == y2 * t1 - R.gen("y1") * t2


@pytest.mark.parametrize("n", [2, 3])
def test_alt_is_antisymmetric(n):
    R = ring(n)
    p = R.gen("y1") ** 3 * R.gen("x2") + R.gen("y2") * R.gen(f"y{n}") ** 2 * R.gen("theta1")
    a = alt(p, n)
    for i in range(1, n):
        assert act(a, n, _transposition(n, i)) == -a


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alt_of_y_polynomial_divisible_by_vandermonde(n):
    R = ring(n)
    p = R.gen("y1") ** 4 * R.gen("y2") + R.gen(f"y{n}") ** 2 * R.gen("u0")
    a = alt(p, n)
    assert exact_divide(a, vandermonde(n)) * vandermonde(n) == a


@pytest.mark.parametrize("n", [2, 3])
def test_alt_with_strand_variables_divisible_after_interpolation(n):
    R = ring(n)
    p = R.gen("y1") ** 2 * R.gen("x2") + R.gen("y2") * R.gen("theta1")
    a = alt(p, n)
    with pytest.raises(NonExactDivision):
        exact_divide(a, vandermonde(n))
    b = substitute(a, interpolation_substitution(R, n))
    assert exact_divide(b, vandermonde(n)) * vandermonde(n) == b


def _transposition(n, i):
    w = list(range(n))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)
