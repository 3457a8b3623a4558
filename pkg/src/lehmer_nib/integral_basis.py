"""Explicit integral basis {1, phi_1, ..., phi_4} of K_n for 5 not dividing n."""

from dataclasses import dataclass

from .errors import CertificationFailed, WildRamification
from .invariants import compute_invariants
from .quintic_field import build_field


def compute_u(Delta):
    """Least non-negative u with 5u = 1 (mod Delta)."""
    if Delta % 5 == 0:
        raise ValueError("5 divides Delta: no inverse of 5 exists")
    return pow(5, -1, Delta)


def compute_t(n, Delta, delta, u):
    """Least non-negative representative of t modulo Delta * delta^2."""
    modulus = Delta * delta * delta
    rhs = (n**2 + 3 * n + 4) * (
        11 * n**5 + 110 * n**4 + 440 * n**3 + 903 * n**2 + 940 * n + 390
    ) * Delta - u * n**2 * (11 * n**3 + 55 * n**2 + 110 * n + 199) * delta**2
    t = rhs % modulus
    if (t + u * n**2) % Delta:
        raise ArithmeticError(f"t != -u n^2 (mod Delta) for n={n}")
    if (t + n**2 + 3 * n + 4) % (delta * delta):
        raise ArithmeticError(f"t != -(n^2+3n+4) (mod delta^2) for n={n}")
    return t


def T_coefficients(n, t):
    """Power-basis coefficients of T = (f_n(rho) - f_n(t)) / (rho - t), constant first."""
    k3 = 2 * n**3 + 6 * n**2 + 10 * n + 10
    k2 = n**4 + 5 * n**3 + 11 * n**2 + 15 * n + 5
    k1 = n**3 + 4 * n**2 + 10 * n + 10
    return (
        t**4 + n**2 * t**3 - k3 * t**2 + k2 * t + k1,
        t**3 + n**2 * t**2 - k3 * t + k2,
        t**2 + n**2 * t - k3,
        t + n**2,
        1,
    )


def compute_T(n, t, ctx=None):
    ctx = ctx or build_field(n)
    return ctx.element(T_coefficients(n, t))


@dataclass(frozen=True)
class IntegralBasis:
    n: int
    u: int
    t: int
    T: object
    phi: tuple
    denominators: tuple  # of phi_1..phi_4
    certified: bool

    @property
    def elements(self):
        return (self.phi[0].ctx.one,) + tuple(self.phi)


def build_integral_basis(n, hints=(), inv=None, ctx=None):
    """The basis {1, phi_1, ..., phi_4}, certified by integrality and discriminant."""
    if n % 5 == 0:
        raise WildRamification(n)
    inv = inv or compute_invariants(n, hints)
    ctx = ctx or build_field(n)
    b, c, d, e, delta = inv.b, inv.c, inv.d, inv.e, inv.delta
    u = compute_u(inv.Delta)
    t = compute_t(n, inv.Delta, delta, u)
    T = compute_T(n, t, ctx)
    r = ctx.rho - t
    denoms = (e, c * d * e**2, b * c * d**2 * e**3, b * c**2 * d**3 * e**4 * delta)
    phi = (r / denoms[0], r * r / denoms[1], r * r * r / denoms[2], T / denoms[3])
    for i, x in enumerate(phi, 1):
        if not ctx.is_integral(x):
            raise CertificationFailed(f"phi_{i} is not integral for n={n}")
    disc = ctx.disc_of_tuple(ctx.one, *phi)
    if disc != inv.field_disc:
        raise CertificationFailed(f"d(1, phi) = {disc} != conductor^4 = {inv.field_disc} for n={n}")
    return IntegralBasis(n=n, u=u, t=t, T=T, phi=phi, denominators=denoms, certified=True)
