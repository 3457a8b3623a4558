"""Construction of a normal integral basis generator of K_n (5 not dividing n).

The generator is

    alpha = (b0 rho + b1 rho^(1) + b2 rho^(2) + b3 rho^(3) - m) / (b c^2 d^3 e^4)

where b0 + b1 z + b2 z^2 + b3 z^3 = alpha_1 alpha_2 alpha_3 in Z[zeta_5] is
assembled from prime elements dividing the period factors A_n, B_n, C_n.
"""

from dataclasses import dataclass

from . import zeta5
from .errors import CertificationFailed, NoDividingConjugate, NonIntegralM, WildRamification
from .factor import factor_integer
from .invariants import compute_invariants
from .quintic_field import build_field
from .zeta5 import CycInt


@dataclass(frozen=True)
class PeriodFactors:
    A: CycInt
    B: CycInt
    C: CycInt
    D: CycInt

    def __iter__(self):
        return iter((self.A, self.B, self.C, self.D))


def period_factors(n):
    """A_n = n+2+2z^4+z^2 and its conjugates B_n, C_n, D_n; their product is Delta_n."""
    base = n + 2
    A = CycInt.from_five([base, 0, 1, 0, 2])
    B = CycInt.from_five([base, 1, 2, 0, 0])
    C = CycInt.from_five([base, 0, 0, 2, 1])
    D = CycInt.from_five([base, 2, 0, 1, 0])
    prod = A * B * C * D
    Delta = n**4 + 5 * n**3 + 15 * n**2 + 25 * n + 25
    if prod != CycInt(Delta):
        raise ArithmeticError(f"A B C D = {prod!r} != Delta_{n}")
    return PeriodFactors(A, B, C, D)


def _select_conjugates(target, exponents, primes_cache):
    """Product of conjugates of split primes that divide ``target``, one per prime power."""
    lam = zeta5.ONE
    cof = target
    for p, k in exponents.items():
        if k == 0:
            continue
        if p not in primes_cache:
            primes_cache[p] = zeta5.split_prime(p)
        pi = primes_cache[p]
        conjs = [zeta5.galois_apply(pi, j) for j in (1, 2, 3, 4)]
        for _ in range(k):
            for c in conjs:
                if zeta5.divides(c, cof):
                    cof = zeta5.div_exact(c, cof)
                    lam = lam * c
                    break
            else:
                raise NoDividingConjugate(f"no conjugate of a prime above {p} divides {target!r}")
    return zeta5.unit_normalize(lam)


def _exponents(inv, eb, ec, ed, ee):
    """Prime exponents of b^eb c^ec d^ed e^ee, read off the factorization of Delta."""
    out = {}
    for p, mult in inv.factorization.items():
        q, r = divmod(mult, 5)
        k = q * ee + {0: 0, 1: 0, 2: eb, 3: ec, 4: ed}[r]
        if k:
            out[p] = k
    return out


def compute_alphas(inv, pf=None):
    """alpha_1 | A_n, alpha_2 | B_n, alpha_3 | C_n with norms bc^2d^3e^3, bcd^2e^2, cde."""
    if not inv.tame:
        raise WildRamification(inv.n)
    pf = pf or period_factors(inv.n)
    cache = {}
    a1 = _select_conjugates(pf.A, _exponents(inv, 1, 2, 3, 3), cache)
    a2 = _select_conjugates(pf.B, _exponents(inv, 1, 1, 2, 2), cache)
    a3 = _select_conjugates(pf.C, _exponents(inv, 0, 1, 1, 1), cache)
    return a1, a2, a3


def compute_beta_m(product, inv):
    """beta = coordinates of alpha_1 alpha_2 alpha_3, and the integer m."""
    if zeta5.residue_mod_one_minus_zeta(product) != 1:
        raise ValueError(f"{product!r} is not 1 mod (1 - zeta)")
    beta = tuple(product.c)
    num = inv.legendre_n5 * inv.nib_denominator - inv.n**2 * sum(beta)
    if num % 5:
        raise NonIntegralM(f"m = {num}/5 is not an integer for n={inv.n}")
    return beta, num // 5


def generator_element(ctx, beta, m, denom):
    rho = ctx.sigma_powers
    x = sum((b * rho[i] for i, b in enumerate(beta)), ctx.one * 0) - m
    return x / denom


@dataclass(frozen=True)
class NibGenerator:
    n: int
    beta: tuple
    m: int
    denom: int
    alpha: object
    certified: bool


def certify_nib(ctx, x, inv):
    """True iff the conjugates of x are integral and d(conjugates) = conductor^4."""
    conjs = ctx.conjugate_tuple(x)
    if not all(ctx.is_integral(c) for c in conjs):
        return False
    return ctx.disc_of_tuple(*conjs) == inv.field_disc


def build_nib_generator(n, hints=(), inv=None, ctx=None):
    if n % 5 == 0:
        raise WildRamification(n)
    inv = inv or compute_invariants(n, hints)
    ctx = ctx or build_field(n)
    a1, a2, a3 = compute_alphas(inv)
    beta, m = compute_beta_m(a1 * a2 * a3, inv)
    alpha = generator_element(ctx, beta, m, inv.nib_denominator)
    if not certify_nib(ctx, alpha, inv):
        raise CertificationFailed(f"NIB generator for n={n} failed certification")
    return NibGenerator(n=n, beta=beta, m=m, denom=inv.nib_denominator, alpha=alpha, certified=True)


def squarefree_generator(n, ctx=None, Delta_factorization=None):
    """(n^2 - (n/5))/5 + rho, valid when Delta_n is square-free."""
    if n % 5 == 0:
        raise WildRamification(n)
    fac = Delta_factorization or factor_integer(n**4 + 5 * n**3 + 15 * n**2 + 25 * n + 25)
    if any(k > 1 for k in fac.values()):
        raise ValueError(f"Delta_{n} is not square-free")
    ctx = ctx or build_field(n)
    leg = 1 if n % 5 in (1, 4) else -1
    return ctx.rho + (n * n - leg) // 5
