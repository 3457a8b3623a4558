"""Exact arithmetic in K_n = Q[X]/(f_n(X)).

Elements are five rational coordinates on the power basis 1, rho, ..., rho^4.
The generator sigma of Gal(K_n/Q) is fixed by the rational map

    sigma(rho) = (n + 2 + n rho - rho^2) / (1 + (n + 2) rho),

and every conjugate is computed from it; no floating point is used.
"""

from fractions import Fraction

from . import linalg
from .invariants import lehmer_coeffs

DEGREE = 5


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = _trim(a)
    return q, a


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_inverse_mod(g, f):
    """Inverse of g modulo f over Q by the extended Euclidean algorithm."""
    r0, r1 = _trim(f), _trim(g)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("polynomial is not invertible modulo f")
    c = Fraction(r1[0])
    return [x / c for x in s1]


class FieldElement:
    """An element of K_n; immutable, compared by canonical coordinates."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        coords = [Fraction(x) for x in coords]
        if len(coords) > DEGREE:
            coords = ctx.reduce(coords)
        coords += [Fraction(0)] * (DEGREE - len(coords))
        self.ctx = ctx
        self.coords = tuple(coords)

    def _lift(self, other):
        if isinstance(other, FieldElement):
            return other
        return FieldElement(self.ctx, [other])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx.n == other.ctx.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.ctx.n, self.coords))

    def __repr__(self):
        return f"FieldElement(n={self.ctx.n}, {[str(c) for c in self.coords]})"

    def __str__(self):
        names = ["", "r", "r^2", "r^3", "r^4"]
        terms = []
        for c, nm in zip(self.coords, names):
            if c:
                terms.append(f"({c})*{nm}" if nm else f"({c})")
        return " + ".join(terms) or "0"

    def __add__(self, other):
        other = self._lift(other)
        return FieldElement(self.ctx, [x + y for x, y in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, [-x for x in self.coords])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.ctx, [x * other for x in self.coords])
        return FieldElement(self.ctx, self.ctx.reduce(_poly_mul(self.coords, other.coords)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.ctx, [x / other for x in self.coords])
        return self * self.ctx.inverse(other)

    def __pow__(self, k):
        if k < 0:
            return self.ctx.inverse(self) ** (-k)
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_rational(self):
        return not any(self.coords[1:])


class FieldContext:
    """K_n together with the Galois action of sigma."""

    def __init__(self, n):
        self.n = n
        self.f_coeffs = lehmer_coeffs(n)
        # rho^5 .. rho^8 on the power basis
        self._high_powers = []
        cur = [-Fraction(c) for c in self.f_coeffs[:DEGREE]]
        for _ in range(4):
            self._high_powers.append(cur)
            nxt = [Fraction(0)] + cur[:-1]
            lead = cur[-1]
            nxt = [x + lead * y for x, y in zip(nxt, self._high_powers[0])]
            cur = nxt

        self.one = FieldElement(self, [1])
        self.rho = FieldElement(self, [0, 1])
        denom = [1, n + 2]
        num = FieldElement(self, [n + 2, n, -1])
        inv = FieldElement(self, poly_inverse_mod(denom, self.f_coeffs))
        self.sigma_image = num * inv

        self._sigma_mats = [None] * DEGREE
        self.sigma_powers = [self.rho]
        self._sigma_mats[0] = linalg.identity(DEGREE)
        self._sigma_mats[1] = self._substitution_matrix(self.sigma_image)
        for i in range(1, DEGREE):
            self.sigma_powers.append(self._apply_mat(1, self.sigma_powers[-1]))
        for i in range(2, DEGREE):
            self._sigma_mats[i] = self._substitution_matrix(self.sigma_powers[i])

        if self._apply_mat(1, self.sigma_powers[4]) != self.rho:
            raise ArithmeticError(f"sigma^5 != id for n={n}")
        if self.evaluate_f(self.sigma_image) != 0:
            raise ArithmeticError(f"f_n(sigma(rho)) != 0 for n={n}")

    def reduce(self, coeffs):
        out = [Fraction(x) for x in coeffs[:DEGREE]]
        out += [Fraction(0)] * (DEGREE - len(out))
        for k, c in enumerate(coeffs[DEGREE:]):
            if c:
                out = [x + c * y for x, y in zip(out, self._high_powers[k])]
        return out

    def element(self, coords):
        return FieldElement(self, coords)

    def inverse(self, x):
        return FieldElement(self, poly_inverse_mod(x.coords, self.f_coeffs))

    def evaluate_f(self, x):
        acc = self.one * 0
        for c in reversed(self.f_coeffs):
            acc = acc * x + c
        return acc

    def _substitution_matrix(self, image):
        """Columns: image^j for j = 0..4, i.e. the matrix of x(rho) -> x(image)."""
        cols, p = [], self.one
        for _ in range(DEGREE):
            cols.append(p.coords)
            p = p * image
        return [list(row) for row in zip(*cols)]

    def _apply_mat(self, i, x):
        return FieldElement(self, linalg.matvec(self._sigma_mats[i], x.coords))

    def apply_sigma(self, x, i=1):
        """sigma^i(x), i taken mod 5."""
        return self._apply_mat(i % DEGREE, x)

    def conjugate_tuple(self, x):
        return tuple(self.apply_sigma(x, i) for i in range(DEGREE))

    def conjugate(self, i):
        """rho^(i) = sigma^i(rho)."""
        return self.sigma_powers[i % DEGREE]

    def mult_matrix(self, x):
        """Matrix of multiplication by x on the basis 1, rho, ..., rho^4."""
        cols, p = [], x
        for _ in range(DEGREE):
            cols.append(p.coords)
            p = p * self.rho
        return [list(row) for row in zip(*cols)]

    def trace(self, x):
        M = self.mult_matrix(x)
        return sum(M[i][i] for i in range(DEGREE))

    def char_poly(self, x):
        """Characteristic polynomial of x, constant term first (monic, degree 5)."""
        return linalg.char_poly(self.mult_matrix(x))

    def norm(self, x):
        return linalg.det(self.mult_matrix(x))

    def is_integral(self, x):
        return all(c.denominator == 1 for c in self.char_poly(x))

    def poly_discriminant(self):
        """disc(f_n) as det of the trace form Tr(rho^(i+j))."""
        powers, p = [], self.one
        for _ in range(2 * DEGREE - 1):
            powers.append(self.trace(p))
            p = p * self.rho
        return linalg.det([[powers[i + j] for j in range(DEGREE)] for i in range(DEGREE)])

    @property
    def f_discriminant(self):
        if not hasattr(self, "_fdisc"):
            self._fdisc = self.poly_discriminant()
        return self._fdisc

    def disc_of_tuple(self, *xs):
        """d(x1, ..., x5) = det(coordinate matrix)^2 * disc(f_n)."""
        if len(xs) == 1:
            xs = tuple(xs[0])
        if len(xs) != DEGREE:
            raise ValueError("disc_of_tuple needs exactly five elements")
        return linalg.det([x.coords for x in xs]) ** 2 * self.f_discriminant

    def trace_form_disc(self, *xs):
        """d(x1, ..., x5) as det(Tr(x_i x_j)); independent of disc_of_tuple."""
        if len(xs) == 1:
            xs = tuple(xs[0])
        return linalg.det([[self.trace(a * b) for b in xs] for a in xs])


_field_cache = {}


def build_field(n):
    """The FieldContext for K_n (cached; contexts are immutable after construction)."""
    ctx = _field_cache.get(n)
    if ctx is None:
        ctx = _field_cache[n] = FieldContext(n)
    return ctx
