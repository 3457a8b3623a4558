from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lehmer_nib import linalg
from lehmer_nib.errors import WildRamification
from lehmer_nib.fixtures import associates
from lehmer_nib.integral_basis import build_integral_basis
from lehmer_nib.invariants import compute_Delta, compute_invariants, legendre_n5
from lehmer_nib.nib import (
    build_nib_generator, certify_nib, compute_alphas, compute_beta_m, period_factors,
    squarefree_generator,
)
from lehmer_nib.nib_enum import orbit_match
from lehmer_nib.quintic_field import build_field
from lehmer_nib.zeta5 import ONE, CycInt, cyc_norm, residue_mod_one_minus_zeta

from conftest import tame_n


def test_period_factors_examples():
    pf = period_factors(14)
    assert pf.A == CycInt.from_five([16, 0, 1, 0, 2])
    assert cyc_norm(pf.A) == 55451
    pf = period_factors(-2)
    assert pf.A == CycInt.from_five([0, 0, 1, 0, 2])
    assert pf.A * pf.B * pf.C * pf.D == CycInt(11)


def test_alphas_n14():
    a1, a2, a3 = compute_alphas(compute_invariants(14))
    assert associates(a1, CycInt(2, 1, 3, 0))
    assert associates(a2, CycInt(2, 3, 0, 1))
    assert a3 == ONE


def test_alphas_n44_norms():
    a1, a2, a3 = compute_alphas(compute_invariants(44))
    assert [cyc_norm(a) for a in (a1, a2, a3)] == [41**2, 41, 41]


def test_alphas_squarefree():
    assert compute_alphas(compute_invariants(1)) == (ONE, ONE, ONE)


def test_beta_m_n14():
    inv = compute_invariants(14)
    a1, a2, a3 = compute_alphas(inv)
    beta, m = compute_beta_m(a1 * a2 * a3, inv)
    assert beta == (6, 7, 8, 10)
    assert m == -1201 == (1 * 71 - 196 * 31) // 5


@pytest.mark.parametrize("n", [1, 2, 3, -1, 6])
def test_beta_m_squarefree(n):
    inv = compute_invariants(n)
    beta, m = compute_beta_m(ONE, inv)
    assert beta == (1, 0, 0, 0)
    assert m == (legendre_n5(n) - n * n) // 5


def test_beta_m_rejects_bad_residue():
    with pytest.raises(ValueError):
        compute_beta_m(CycInt(2), compute_invariants(14))


def test_generator_n14():
    ctx = build_field(14)
    gen = build_nib_generator(14)
    s = ctx.sigma_powers
    assert gen.alpha == (6 * s[0] + 7 * s[1] + 8 * s[2] + 10 * s[3] + 1201) / 71
    assert gen.certified


def test_generator_n1_is_rho():
    assert build_nib_generator(1).alpha == build_field(1).rho


def test_generator_n2888_orbit():
    hints = [11, 4759595441]
    ctx = build_field(2888)
    gen = build_nib_generator(2888, hints)
    assert gen.denom == 11**3
    s = ctx.sigma_powers
    printed = (-16 * s[0] - 6 * s[1] - 26 * s[2] - 41 * s[3] - 148461417) / 11**3
    assert certify_nib(ctx, printed, compute_invariants(2888, hints))
    assert orbit_match(ctx, gen.alpha, printed, 10) is not None


def test_certify_rejects():
    ctx = build_field(-1)
    inv = compute_invariants(-1)
    assert certify_nib(ctx, ctx.rho, inv)
    assert not certify_nib(ctx, ctx.one, inv)
    assert not certify_nib(ctx, ctx.rho / 2, inv)
    assert not certify_nib(ctx, 2 * ctx.rho, inv)


def test_wild_refused():
    with pytest.raises(WildRamification):
        build_nib_generator(5)
    with pytest.raises(WildRamification):
        squarefree_generator(-10)


def test_squarefree_generator_examples():
    assert squarefree_generator(-1) == build_field(-1).rho
    assert squarefree_generator(1) == build_field(1).rho
    g2 = squarefree_generator(2)
    assert g2 == 1 + build_field(2).rho
    assert certify_nib(build_field(2), g2, compute_invariants(2))
    with pytest.raises(ValueError):
        squarefree_generator(14)


@settings(max_examples=40, deadline=None)
@given(tame_n)
def test_generator_properties(n):
    inv = compute_invariants(n)
    ctx = build_field(n)
    gen = build_nib_generator(n, inv=inv, ctx=ctx)
    beta = CycInt(*gen.beta)
    assert sum(gen.beta) % 5 == 1
    assert residue_mod_one_minus_zeta(beta) == 1
    assert cyc_norm(beta) == inv.b**2 * inv.c**4 * inv.d**6 * inv.e**6
    assert ctx.trace(gen.alpha) in (1, -1)
    assert certify_nib(ctx, gen.alpha, inv)
    # conjugates of alpha and the integral basis span the same lattice
    ib = build_integral_basis(n, inv=inv, ctx=ctx)
    B = [list(r) for r in zip(*(e.coords for e in ib.elements))]
    M = linalg.solve(B, [list(c.coords) for c in ctx.conjugate_tuple(gen.alpha)])
    assert all(Fraction(x).denominator == 1 for col in M for x in col)
    assert abs(linalg.det(M)) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=-50, max_value=300).filter(lambda n: n % 5 and n != 0))
def test_squarefree_agrees_with_general(n):
    inv = compute_invariants(n)
    if not inv.squarefree:
        return
    ctx = build_field(n)
    gen = build_nib_generator(n, inv=inv, ctx=ctx)
    assert orbit_match(ctx, gen.alpha, squarefree_generator(n, ctx, inv.factorization), 3) is not None


def linear_disc(n, v, w):
    """d of the conjugates of v + w rho, in closed form."""
    return w**8 * (5 * v - w * n * n) ** 2 * compute_Delta(n) ** 4


@pytest.mark.parametrize("n,v,w", [(1, 0, 1), (3, 2, -1), (14, 7, 2), (-6, -3, 3), (2, 0, 1)])
def test_linear_disc_formula(n, v, w):
    ctx = build_field(n)
    assert ctx.disc_of_tuple(ctx.conjugate_tuple(v + w * ctx.rho)) == linear_disc(n, v, w)


def test_linear_generator_iff_squarefree():
    # a degree-1 generator needs w^8 (5v - w n^2)^2 Delta^4 = conductor^4 with v, w integers,
    # which forces |w| = 1, 5v - w n^2 = +-1 and conductor = Delta
    for n in range(1, 101):
        if n % 5 == 0:
            continue
        inv = compute_invariants(n)
        ctx = build_field(n)
        exists = inv.conductor == inv.Delta
        assert exists == inv.squarefree
        for w in (1, -1):
            v = w * (n * n - legendre_n5(n)) // 5
            assert 5 * v - w * n * n in (1, -1)
            assert certify_nib(ctx, v + w * ctx.rho, inv) == exists
