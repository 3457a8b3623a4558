"""Integer factorization: hint primes, trial division, then Pollard-Brent rho."""

import random
from math import gcd, isqrt

from .errors import FactorizationIncomplete

TRIAL_BOUND = 10**6
RHO_BUDGET = 10**8

# Miller-Rabin with these bases is deterministic below this bound
# (Sorenson & Webster 2015).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981

_small_primes_cache = []


def small_primes(limit):
    if _small_primes_cache and _small_primes_cache[-1][0] >= limit:
        return [p for p in _small_primes_cache[-1][1] if p <= limit]
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    primes = [i for i, flag in enumerate(sieve) if flag]
    _small_primes_cache[:] = [(limit, primes)]
    return primes


def _strong_probable_prime(n, a):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    """Deterministic below ~3.3e24; above that, 40 extra random Miller-Rabin rounds."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(40))


def _brent(n, budget, rng):
    """One nontrivial factor of composite odd n, or None when the budget is exhausted."""
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factor_integer(N, hints=(), trial_bound=TRIAL_BOUND, rho_budget=RHO_BUDGET):
    """Complete factorization of N >= 1 as a dict {prime: multiplicity}.

    Hint primes are divided out first, then trial division up to
    ``trial_bound``, then Brent's rho with at most ``rho_budget`` iterations
    per cofactor. Raises FactorizationIncomplete on budget exhaustion.
    """
    if N < 1:
        raise ValueError(f"factor_integer needs N >= 1, got {N}")
    result = {}

    def add(p, k=1):
        result[p] = result.get(p, 0) + k

    for h in hints:
        h = int(h)
        if h > 1 and is_prime(h):
            while N % h == 0:
                N //= h
                add(h)
    for p in small_primes(trial_bound):
        if p * p > N:
            break
        while N % p == 0:
            N //= p
            add(p)
    if N == 1:
        return dict(sorted(result.items()))

    rng = random.Random(N)
    stack = [N]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        # every prime factor of m exceeds trial_bound here
        if m < trial_bound * trial_bound or is_prime(m):
            add(m)
            continue
        d = _brent(m, rho_budget, rng)
        if d is None:
            raise FactorizationIncomplete(m, rho_budget, result)
        stack.extend((d, m // d))
    return dict(sorted(result.items()))
