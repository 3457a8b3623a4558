import pytest
from hypothesis import given, settings, strategies as st

from lehmer_nib.errors import FactorizationIncomplete
from lehmer_nib.factor import factor_integer, is_prime, small_primes
from lehmer_nib.invariants import (
    abcde_decompose, compute_Delta, compute_delta, compute_invariants, conductor, legendre_n5,
)

from conftest import tame_n


def naive_factor(N):
    out, p = {}, 2
    while p * p <= N:
        while N % p == 0:
            out[p] = out.get(p, 0) + 1
            N //= p
        p += 1
    if N > 1:
        out[N] = out.get(N, 0) + 1
    return out


def test_small_primes():
    assert small_primes(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_is_prime_matches_sieve():
    sieve = set(small_primes(5000))
    assert all(is_prime(k) == (k in sieve) for k in range(5000))


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**61 - 1))
    assert not is_prime(3317044064679887385961981)  # strong pseudoprime to bases up to 37


def test_factor_examples():
    assert factor_integer(55451) == {11: 1, 71: 2}
    assert factor_integer(1) == {}
    assert factor_integer(compute_Delta(7721)) == {11: 5, 26501: 1, 833201: 1}


@given(st.integers(min_value=1, max_value=10**7))
def test_factor_agrees_with_naive(N):
    assert factor_integer(N) == naive_factor(N)


def test_factor_needs_rho():
    p, q = 1000003, 2**31 - 1
    assert factor_integer(p * q * q) == {p: 1, q: 2}


def test_factor_with_hint():
    p, q = 2**61 - 1, 2**89 - 1
    assert factor_integer(p * q, hints=[p]) == {p: 1, q: 1}


def test_factor_budget_exhausted():
    p, q = 2**61 - 1, 1000000000000000003
    with pytest.raises(FactorizationIncomplete) as info:
        factor_integer(p * q, trial_bound=100, rho_budget=50)
    assert info.value.cofactor == p * q


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor_integer(0)


@pytest.mark.parametrize("n,delta,Delta", [(14, 3871, 55451), (-1, 1, 11), (1, 23, 71), (-2, -1, 11)])
def test_delta_Delta(n, delta, Delta):
    assert compute_delta(n) == delta
    assert compute_Delta(n) == Delta
    assert 3871 == 7**2 * 79


@given(st.integers(min_value=-10**6, max_value=10**6))
def test_bezout_identity(n):
    d, D = compute_delta(n), compute_Delta(n)
    assert (n**3 + 5 * n**2 + 10 * n + 18) * d - (n**2 + 5 * n + 5) * D == 1


def test_abcde_examples():
    assert abcde_decompose({11: 1, 71: 2}) == (11, 71, 1, 1, 1)
    assert abcde_decompose({41: 3, 61: 1}) == (61, 1, 41, 1, 1)
    inv = compute_invariants(2888, hints=[11, 4759595441])
    assert inv.d == 11 and inv.a == 4759595441


@settings(max_examples=60, deadline=None)
@given(tame_n)
def test_abcde_recomposes(n):
    inv = compute_invariants(n)
    assert inv.a * inv.b**2 * inv.c**3 * inv.d**4 * inv.e**5 == inv.Delta
    parts = [inv.a, inv.b, inv.c, inv.d]
    for x in parts:
        assert all(x % (p * p) for p in inv.factorization)
    from math import gcd
    for i in range(4):
        for j in range(i + 1, 4):
            assert gcd(parts[i], parts[j]) == 1
    assert all(p % 5 == 1 for p in inv.factorization)
    assert all(x % 5 == 1 for x in (inv.b, inv.c, inv.d, inv.e))
    assert inv.field_disc == inv.conductor**4
    assert gcd(inv.delta, inv.Delta) == 1


def test_conductor_examples():
    assert compute_invariants(14).conductor == 781
    assert compute_invariants(7721, hints=[26501, 833201]).conductor == 26501 * 833201
    assert conductor(compute_invariants(1)) == 71


def test_conductor_wild():
    inv = compute_invariants(5)
    assert inv.Delta == 1775 == 5**2 * 71
    assert inv.conductor == 25 * 71
    assert not inv.tame


def test_legendre():
    assert legendre_n5(14) == 1
    assert legendre_n5(2) == -1
    assert legendre_n5(-1) == 1
    with pytest.raises(ValueError):
        legendre_n5(10)


@given(st.integers(min_value=-1000, max_value=1000).filter(lambda n: n % 5))
def test_legendre_euler_criterion(n):
    assert legendre_n5(n) % 5 == pow(n, 2, 5)
