"""All NIB generators of K_n via the unit group of Z[G].

Z[G]^x = {+-1} x G x <1 - s^2 - s^3>, and (1 - s^2 - s^3)^k acts on an
element as a_k + b_k (s + s^4) - c_k (s^2 + s^3), with a_k, b_k, c_k
integer sequences expressed through Lucas numbers.
"""

from dataclasses import dataclass
from functools import lru_cache

from .nib import certify_nib


def lucas(k):
    """Lucas number L_k (L_0 = 2, L_1 = 1), with L_{-k} = (-1)^k L_k."""
    if k < 0:
        return lucas(-k) if k % 2 == 0 else -lucas(-k)
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci(k):
    """Fibonacci number F_k, with F_{-k} = (-1)^(k+1) F_k."""
    if k < 0:
        return fibonacci(-k) if k % 2 else -fibonacci(-k)
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class AbcTriple:
    a: int
    b: int
    c: int


@lru_cache(maxsize=None)
def abc(k):
    sign = 1 if k % 2 == 0 else -1
    a, ra = divmod(sign + 2 * lucas(2 * k), 5)
    b, rb = divmod(sign + lucas(2 * k - 1), 5)
    c, rc = divmod(-sign + lucas(2 * k + 1), 5)
    if ra or rb or rc:
        raise ArithmeticError(f"non-integral a_k, b_k, c_k at k={k}")
    return AbcTriple(a, b, c)


@dataclass(frozen=True)
class GroupRingUnit:
    """The unit sign * s^ell * (1 - s^2 - s^3)^k of Z[G]."""

    sign: int = 1
    ell: int = 0
    k: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "ell", self.ell % 5)

    def __mul__(self, other):
        return GroupRingUnit(self.sign * other.sign, self.ell + other.ell, self.k + other.k)

    def inverse(self):
        return GroupRingUnit(self.sign, -self.ell, -self.k)

    def as_tuple(self):
        return (self.sign, self.ell, self.k)

    def __str__(self):
        return f"({'+' if self.sign > 0 else '-'},{self.ell},{self.k})"


def _power_action(ctx, k, x):
    t = abc(k)
    s = ctx.conjugate_tuple(x)
    return s[0] * t.a + (s[1] + s[4]) * t.b - (s[2] + s[3]) * t.c


def act_unit(ctx, u, x):
    y = _power_action(ctx, u.k, x) if u.k else x
    if u.ell:
        y = ctx.apply_sigma(y, u.ell)
    return -y if u.sign < 0 else y


def theta(k, beta):
    """Coefficients of (sum beta_i s^i)(a_k + b_k (s + s^4) - c_k (s^2 + s^3)) on s^0..s^4."""
    t = abc(k)
    a, b, c = t.a, t.b, t.c
    b0, b1, b2, b3 = beta
    return (
        a * b0 + b * b1 - c * b2 - c * b3,
        b * b0 + a * b1 + b * b2 - c * b3,
        -c * b0 + b * b1 + a * b2 + b * b3,
        -c * b0 - c * b1 + b * b2 + a * b3,
        b * b0 - c * b1 - c * b2 + b * b3,
    )


def xi(ctx, gen, k):
    """xi_k = (sum_t theta_t(k) rho^(t) - (-1)^k m) / (b c^2 d^3 e^4)."""
    th = theta(k, gen.beta)
    x = sum((c * r for c, r in zip(th, ctx.sigma_powers)), ctx.one * 0)
    sign = 1 if k % 2 == 0 else -1
    return (x - sign * gen.m) / gen.denom


def iter_generators(ctx, gen, k_min, k_max, certify=None):
    """Yield (unit, element) for all +-s^ell xi_k with k_min <= k <= k_max.

    If ``certify`` is an invariants record, each element is certified and a
    failure raises ArithmeticError.
    """
    for k in range(k_min, k_max + 1):
        base = xi(ctx, gen, k)
        for ell in range(5):
            y = ctx.apply_sigma(base, ell)
            for sign in (1, -1):
                el = y if sign > 0 else -y
                if certify is not None and not certify_nib(ctx, el, certify):
                    raise ArithmeticError(f"generator ({sign},{ell},{k}) failed certification")
                yield GroupRingUnit(sign, ell, k), el


def enumerate_generators(ctx, gen, k_min, k_max, certify=None):
    return list(iter_generators(ctx, gen, k_min, k_max, certify))


def orbit_match(ctx, x, y, bound=10):
    """The unit u with |k| <= bound and u.x == y, or None."""
    ks = [0]
    for k in range(1, bound + 1):
        ks += [k, -k]
    targets = {}
    for ell in range(5):
        z = ctx.apply_sigma(y, -ell)
        targets[z.coords] = (1, ell)
        targets[(-z).coords] = (-1, ell)
    for k in ks:
        z = _power_action(ctx, k, x) if k else x
        hit = targets.get(z.coords)
        if hit is not None:
            return GroupRingUnit(hit[0], hit[1], k)
    return None
