"""Arithmetic invariants of Emma Lehmer's quintic field K_n."""

from dataclasses import dataclass, field

from .factor import factor_integer


def compute_delta(n):
    """delta_n = n^3 + 5n^2 + 10n + 7 (may be negative)."""
    return n**3 + 5 * n**2 + 10 * n + 7


def compute_Delta(n):
    """Delta_n = n^4 + 5n^3 + 15n^2 + 25n + 25, always positive."""
    return n**4 + 5 * n**3 + 15 * n**2 + 25 * n + 25


def lehmer_coeffs(n):
    """Coefficients of f_n, constant term first."""
    return (
        1,
        n**3 + 4 * n**2 + 10 * n + 10,
        n**4 + 5 * n**3 + 11 * n**2 + 15 * n + 5,
        -(2 * n**3 + 6 * n**2 + 10 * n + 10),
        n**2,
        1,
    )


def legendre_n5(n):
    if n % 5 == 0:
        raise ValueError(f"(n/5) is undefined for 5 | n (n={n})")
    return 1 if n % 5 in (1, 4) else -1


def abcde_decompose(factorization):
    """Split Delta = a b^2 c^3 d^4 e^5 with a, b, c, d square-free and pairwise coprime."""
    parts = [1, 1, 1, 1]
    e = 1
    for p, mult in factorization.items():
        q, r = divmod(mult, 5)
        e *= p**q
        if r:
            parts[r - 1] *= p
    a, b, c, d = parts
    return a, b, c, d, e


def conductor_from(n, factorization):
    f = 25 if n % 5 == 0 else 1
    for p, mult in factorization.items():
        if p != 5 and mult % 5:
            f *= p
    return f


@dataclass(frozen=True)
class FieldInvariants:
    n: int
    delta: int
    Delta: int
    factorization: dict = field(hash=False)
    a: int
    b: int
    c: int
    d: int
    e: int
    conductor: int
    field_disc: int
    legendre_n5: int  # 0 when 5 | n
    tame: bool

    @property
    def squarefree(self):
        return all(m == 1 for m in self.factorization.values())

    @property
    def nib_denominator(self):
        """b c^2 d^3 e^4, the denominator of the NIB generator."""
        return self.b * self.c**2 * self.d**3 * self.e**4


def conductor(inv):
    return conductor_from(inv.n, inv.factorization)


def compute_invariants(n, hints=(), **factor_kw):
    """All invariants of K_n; factoring budget errors propagate."""
    Delta = compute_Delta(n)
    fac = factor_integer(Delta, hints, **factor_kw)
    a, b, c, d, e = abcde_decompose(fac)
    f = conductor_from(n, fac)
    tame = n % 5 != 0
    return FieldInvariants(
        n=n,
        delta=compute_delta(n),
        Delta=Delta,
        factorization=fac,
        a=a, b=b, c=c, d=d, e=e,
        conductor=f,
        field_disc=f**4,
        legendre_n5=legendre_n5(n) if tame else 0,
        tame=tame,
    )
