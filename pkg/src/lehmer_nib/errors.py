"""Exception types shared across the package."""


class LehmerError(Exception):
    """Base class for all errors raised by lehmer_nib."""


class WildRamification(LehmerError):
    """Raised for 5 | n: K_n is wildly ramified at 5 and has no normal integral basis."""

    def __init__(self, n):
        self.n = n
        super().__init__(
            f"n={n} is divisible by 5: K_n/Q is wildly ramified at 5, so by the "
            "Hilbert-Speiser theorem no normal integral basis exists"
        )


class FactorizationIncomplete(LehmerError):
    """The factoring work budget ran out before ``cofactor`` was split."""

    def __init__(self, cofactor, budget, partial=None):
        self.cofactor = cofactor
        self.budget = budget
        self.partial = dict(partial or {})
        super().__init__(
            f"could not factor {cofactor} within {budget} rho iterations; "
            "supply its prime factors with --factor-hint"
        )


class UnsplittablePrime(LehmerError):
    """Only primes p = 1 (mod 5) split completely in Z[zeta_5]."""


class CertificationFailed(LehmerError):
    """An exact certification check failed. This points to an implementation bug."""


class NoDividingConjugate(LehmerError):
    """No Galois conjugate of a prime element divides the requested period factor."""


class NonIntegralM(LehmerError):
    """The constant m of the NIB generator came out non-integral."""
