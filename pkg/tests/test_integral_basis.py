from fractions import Fraction

import pytest
from hypothesis import given, settings

from lehmer_nib import linalg
from lehmer_nib.errors import WildRamification
from lehmer_nib.integral_basis import (
    T_coefficients, build_integral_basis, compute_T, compute_t, compute_u,
)
from lehmer_nib.invariants import compute_Delta, compute_delta, compute_invariants, lehmer_coeffs
from lehmer_nib.quintic_field import build_field

from conftest import tame_n


def f_at(n, x, k=0):
    """k-th derivative of f_n at x divided by k!, by binomial expansion."""
    from math import comb
    return sum(c * comb(i, k) * x ** (i - k) for i, c in enumerate(lehmer_coeffs(n)) if i >= k)


def test_compute_u():
    assert compute_u(55451) == 44361
    assert compute_u(4204181) == 3363345
    assert compute_u(11) == 9
    with pytest.raises(ValueError):
        compute_u(1775)


def test_compute_t_examples():
    assert compute_t(14, 55451, 3871, 44361) == 645583287961
    assert compute_t(44, 4204181, compute_delta(44), 3363345) == 30447786579308863


def test_T_rho3_coefficient():
    assert T_coefficients(14, 645583287961)[3] == 645583288157
    assert T_coefficients(44, 30447786579308863)[3] == 30447786579310799


@settings(max_examples=50, deadline=None)
@given(tame_n)
def test_t_congruences(n):
    D, d = compute_Delta(n), compute_delta(n)
    u = compute_u(D)
    assert (5 * u - 1) % D == 0
    t = compute_t(n, D, d, u)
    assert 0 <= t < D * d * d
    assert (t + n * n + 3 * n + 4) % (d * d) == 0
    assert (t + u * n * n) % D == 0
    assert f_at(n, t) % (D * d * d) == 0
    assert f_at(n, t, 1) % (D * d) == 0
    # k = 5 is the leading coefficient 1; integrality of phi only needs k <= 4
    for k in range(5):
        assert f_at(n, -u * n * n, k) % D == 0
    assert f_at(n, -u * n * n, 5) == 1


@settings(max_examples=25, deadline=None)
@given(tame_n)
def test_T_telescopes(n):
    ctx = build_field(n)
    D, d = compute_Delta(n), compute_delta(n)
    t = compute_t(n, D, d, compute_u(D))
    assert (ctx.rho - t) * compute_T(n, t, ctx) == ctx.one * (-f_at(n, t))


def test_basis_n14():
    ib = build_integral_basis(14)
    ctx = build_field(14)
    r = ctx.rho - ib.t
    assert ib.phi[2] == r**3 / 71
    assert ib.phi[3] == ib.T / (71 * 3871)
    assert ctx.disc_of_tuple(ib.elements) == 11**4 * 71**4


def test_basis_n44():
    ib = build_integral_basis(44)
    ctx = build_field(44)
    r = ctx.rho - ib.t
    assert ib.denominators == (1, 41, 41, 41**2 * 95311)
    assert compute_delta(44) == 95311
    assert ib.phi[1] == r**2 / 41
    assert ctx.disc_of_tuple(ib.elements) == 41**4 * 61**4


def test_basis_n1_squarefree():
    ib = build_integral_basis(1)
    ctx = build_field(1)
    r = ctx.rho - ib.t
    assert ib.phi[:3] == (r, r**2, r**3)
    assert ib.phi[3] == ib.T / 23


def test_basis_negative_delta():
    ib = build_integral_basis(-2)
    assert ib.denominators[3] == -1
    assert ib.certified


def test_wild_refused():
    with pytest.raises(WildRamification):
        build_integral_basis(10)


def basis_matrix(elements):
    """Columns are the power-basis coordinates of the given elements."""
    return [list(row) for row in zip(*(e.coords for e in elements))]


@settings(max_examples=40, deadline=None)
@given(tame_n)
def test_basis_certifies(n):
    ib = build_integral_basis(n)
    ctx = build_field(n)
    inv = compute_invariants(n)
    assert all(ctx.is_integral(x) for x in ib.elements)
    assert ctx.disc_of_tuple(ib.elements) == inv.field_disc
    # Z[rho] lies in the span of the basis
    cols = linalg.solve(basis_matrix(ib.elements), [list((ctx.rho**i).coords) for i in range(5)])
    assert all(Fraction(x).denominator == 1 for col in cols for x in col)


def test_basis_change_unimodular_n14():
    ctx = build_field(14)
    ib = build_integral_basis(14)
    # any two certified bases differ by a unimodular matrix
    other = [ctx.one, ctx.rho - 1, (ctx.rho - ib.t) ** 2 - ctx.rho, ib.phi[2] + 3 * ib.phi[3], ib.phi[3]]
    M = linalg.solve(basis_matrix(ib.elements), [list(e.coords) for e in other])
    assert abs(linalg.det(M)) == 1
