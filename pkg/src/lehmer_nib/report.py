"""Per-n analysis records and their lossless JSON form.

Integers and rationals are always emitted as decimal strings ("p" or
"p/q"), so the JSON never contains a floating-point token.
"""

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .fixtures import load_fixtures, printed_element
from .integral_basis import build_integral_basis
from .invariants import compute_invariants
from .nib import build_nib_generator, certify_nib
from .nib_enum import orbit_match
from .quintic_field import build_field


def qstr(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def coords_str(el):
    return [qstr(c) for c in el.coords]


@dataclass
class ReportRecord:
    n: int
    delta: int
    Delta: int
    factorization: dict
    a: int
    b: int
    c: int
    d: int
    e: int
    conductor: int
    u: int
    t: int
    integral_basis: list
    beta: list
    m: int
    denom: int
    nib_generator: list
    certified: bool
    orbit_witness: object = None
    status: str = "ok"

    def to_json_dict(self):
        out = {}
        for k, v in asdict(self).items():
            if isinstance(v, bool) or v is None or isinstance(v, str):
                out[k] = v
            elif isinstance(v, int):
                out[k] = str(v)
            elif k == "factorization":
                out[k] = {str(p): str(m) for p, m in v.items()}
            elif k == "orbit_witness":
                out[k] = [str(x) for x in v]
            elif k == "beta":
                out[k] = [str(x) for x in v]
            else:
                out[k] = v
        return out

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text):
        raw = json.loads(text) if isinstance(text, str) else dict(text)
        kw = {}
        for k, v in raw.items():
            if k in ("certified", "status", "integral_basis", "nib_generator"):
                kw[k] = v
            elif k == "factorization":
                kw[k] = {int(p): int(m) for p, m in v.items()}
            elif k in ("beta", "orbit_witness"):
                kw[k] = None if v is None else tuple(int(x) for x in v)
            else:
                kw[k] = int(v)
        if kw.get("beta") is not None:
            kw["beta"] = list(kw["beta"])
        return cls(**kw)

    def recertify(self):
        """Re-run the exact NIB certification on the serialized generator."""
        ctx = build_field(self.n)
        inv = compute_invariants(self.n, list(self.factorization))
        x = ctx.element([Fraction(s) for s in self.nib_generator])
        return certify_nib(ctx, x, inv) and inv.conductor == self.conductor


@dataclass
class WildRecord:
    n: int
    Delta: int
    conductor: int
    factorization: dict = field(default_factory=dict)
    status: str = "wild"
    message: str = ""

    def to_json_dict(self):
        return {
            "n": str(self.n),
            "status": self.status,
            "Delta": str(self.Delta),
            "factorization": {str(p): str(m) for p, m in self.factorization.items()},
            "conductor": str(self.conductor),
            "nib_exists": False,
            "message": self.message,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())


def fixture_for(n):
    for row in load_fixtures():
        if int(row["n"]) == n and "generator" in row and "k" not in row:
            return row
    return None


def analyze(n, hints=(), orbit_bound=10):
    """Full record for tame n. Raises WildRamification for 5 | n."""
    inv = compute_invariants(n, hints)
    ctx = build_field(n)
    ib = build_integral_basis(n, inv=inv, ctx=ctx)
    gen = build_nib_generator(n, inv=inv, ctx=ctx)
    witness = None
    row = fixture_for(n)
    if row is not None:
        hit = orbit_match(ctx, gen.alpha, printed_element(ctx, row), orbit_bound)
        witness = hit.as_tuple() if hit else None
    return ReportRecord(
        n=n, delta=inv.delta, Delta=inv.Delta, factorization=inv.factorization,
        a=inv.a, b=inv.b, c=inv.c, d=inv.d, e=inv.e, conductor=inv.conductor,
        u=ib.u, t=ib.t,
        integral_basis=[coords_str(x) for x in ib.elements],
        beta=list(gen.beta), m=gen.m, denom=gen.denom,
        nib_generator=coords_str(gen.alpha),
        certified=ib.certified and gen.certified,
        orbit_witness=witness,
    )


def wild_record(n, hints=()):
    inv = compute_invariants(n, hints)
    return WildRecord(
        n=n, Delta=inv.Delta, conductor=inv.conductor, factorization=inv.factorization,
        message="5 | n: K_n is wildly ramified at 5; by Hilbert-Speiser it has no normal integral basis",
    )
