"""Exact arithmetic in the cyclotomic ring Z[zeta_5].

Elements are stored as four integer coordinates on the power basis
{1, z, z^2, z^3}; z^4 is always rewritten as -1 - z - z^2 - z^3, so the
representation is canonical and equality is coordinate equality.

Z[zeta_5] is norm-Euclidean (hence a UFD with class number 1), which is
what makes element-level gcds and prime splitting sufficient here.
"""

import itertools
import random
from fractions import Fraction
from math import floor

from .errors import UnsplittablePrime

GCD_ITERATION_CAP = 10_000


def _reduce5(v):
    """Fold a length-5 coefficient vector (on 1..z^4) into canonical coordinates."""
    c4 = v[4]
    return (v[0] - c4, v[1] - c4, v[2] - c4, v[3] - c4)


class CycInt:
    """An element c0 + c1 z + c2 z^2 + c3 z^3 of Z[zeta_5]."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (int(c0), int(c1), int(c2), int(c3))

    @classmethod
    def from_five(cls, v):
        """Build from coefficients on 1, z, z^2, z^3, z^4 (exponents taken mod 5)."""
        acc = [0] * 5
        for i, x in enumerate(v):
            acc[i % 5] += x
        return cls(*_reduce5(acc))

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, CycInt) else cls(x)

    def five(self):
        return list(self.c) + [0]

    def __iter__(self):
        return iter(self.c)

    def __getitem__(self, i):
        return self.c[i]

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt(other)
        return isinstance(other, CycInt) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"CycInt{self.c}"

    def __str__(self):
        terms = []
        for i, x in enumerate(self.c):
            if x == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if mono and abs(x) == 1:
                coef = "-" if x < 0 else ""
            else:
                coef = str(x) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __bool__(self):
        return any(self.c)

    def __neg__(self):
        return CycInt(*(-x for x in self.c))

    def __add__(self, other):
        other = CycInt.coerce(other)
        return CycInt(*(x + y for x, y in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-CycInt.coerce(other))

    def __rsub__(self, other):
        return CycInt.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(*(x * other for x in self.c))
        acc = [0] * 5
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    if y:
                        acc[(i + j) % 5] += x * y
        return CycInt(*_reduce5(acc))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined in Z[zeta_5]")
        result, base = CycInt(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


ZETA = CycInt(0, 1)
ONE = CycInt(1)
# (1 + sqrt 5)/2, the fundamental unit of Q(sqrt 5)
GOLDEN = CycInt(0, 0, -1, -1)


def cyc_mul(x, y):
    return x * y


def galois_apply(x, j):
    """Apply the automorphism z -> z^j, j in {1, 2, 3, 4}."""
    if j not in (1, 2, 3, 4):
        raise ValueError(f"Galois index must be in 1..4, got {j!r}")
    acc = [0] * 5
    for i, c in enumerate(x.c):
        acc[(i * j) % 5] += c
    return CycInt(*_reduce5(acc))


def conjugate_cofactor(x):
    """Product of the three nontrivial conjugates of x, so x * cofactor = norm(x)."""
    return galois_apply(x, 2) * galois_apply(x, 3) * galois_apply(x, 4)


def cyc_norm(x):
    """N_{Q(z)/Q}(x) as a Python int (always >= 0)."""
    prod = x * conjugate_cofactor(x)
    if prod.c[1] or prod.c[2] or prod.c[3]:
        raise ArithmeticError(f"norm of {x!r} is not rational: {prod!r}")
    return prod.c[0]


def divides(d, x):
    if not d:
        raise ZeroDivisionError("divisibility by zero")
    nd = cyc_norm(d)
    return all(c % nd == 0 for c in (x * conjugate_cofactor(d)).c)


def div_exact(d, x):
    """Return x / d, raising ArithmeticError unless d divides x."""
    if not d:
        raise ZeroDivisionError("division by zero")
    nd = cyc_norm(d)
    num = x * conjugate_cofactor(d)
    if any(c % nd for c in num.c):
        raise ArithmeticError(f"{d!r} does not divide {x!r}")
    return CycInt(*(c // nd for c in num.c))


def residue_mod_one_minus_zeta(x):
    """Image of x in Z[z]/(1 - z) = F_5, as a symmetric representative in -2..2."""
    r = sum(x.c) % 5
    return r - 5 if r > 2 else r


def unit_normalize(lam):
    """Multiply lam by the unit in {1, -1, golden, -golden} making it = 1 mod (1 - z)."""
    r = residue_mod_one_minus_zeta(lam)
    if r == 0:
        raise ValueError(f"{lam!r} lies in the prime ideal (1 - zeta)")
    unit = {1: ONE, -1: -ONE, 2: GOLDEN, -2: -GOLDEN}[r]
    return unit * lam


def _round(q):
    return floor(q + Fraction(1, 2))


def _euclid_step(x, y):
    """Return (quotient, remainder) with norm(remainder) < norm(y)."""
    ny = cyc_norm(y)
    num = x * conjugate_cofactor(y)
    q = CycInt(*(_round(Fraction(c, ny)) for c in num.c))
    r = x - q * y
    nr = cyc_norm(r)
    if nr < ny:
        return q, r
    best = None
    for off in itertools.product((-1, 0, 1), repeat=4):
        q2 = q + CycInt(*off)
        r2 = x - q2 * y
        n2 = cyc_norm(r2)
        if best is None or n2 < best[0]:
            best = (n2, q2, r2)
    if best[0] >= ny:
        raise ArithmeticError(f"Euclidean step failed to reduce norm for {x!r}, {y!r}")
    return best[1], best[2]


def cyc_gcd(x, y):
    """A greatest common divisor of x and y, unique up to units.

    When the residue mod (1 - z) is nonzero the result is unit-normalized.
    """
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = CycInt.coerce(x), CycInt.coerce(y)
    for _ in range(GCD_ITERATION_CAP):
        if not b:
            break
        _, r = _euclid_step(a, b)
        a, b = b, r
    else:
        raise ArithmeticError("cyc_gcd exceeded iteration cap")
    if residue_mod_one_minus_zeta(a) != 0:
        a = unit_normalize(a)
    return a


def fifth_root_of_unity_mod(p, rng=None):
    """A root of X^4 + X^3 + X^2 + X + 1 modulo p, for p = 1 (mod 5)."""
    if p % 5 != 1:
        raise UnsplittablePrime(f"{p} is not 1 mod 5")
    rng = rng or random.Random(p)
    e = (p - 1) // 5
    for _ in range(200):
        r = pow(rng.randrange(2, p - 1), e, p)
        if r != 1:
            return r
    if p < 10**6:
        for g in range(2, p):
            r = pow(g, e, p)
            if r != 1:
                return r
    raise ArithmeticError(f"no primitive fifth root of unity found mod {p}")


def split_prime(p):
    """A prime element of Z[zeta_5] of norm p, for a prime p = 1 (mod 5).

    Seeded by p, so repeated calls return the same associate.
    """
    if p % 5 != 1:
        raise UnsplittablePrime(f"{p} = {p % 5} (mod 5) does not split completely in Z[zeta_5]")
    r = fifth_root_of_unity_mod(p)
    pi = cyc_gcd(CycInt(p), CycInt(-r, 1))
    if cyc_norm(pi) != p:
        raise ArithmeticError(f"split_prime({p}) produced {pi!r} of norm {cyc_norm(pi)}")
    return pi
