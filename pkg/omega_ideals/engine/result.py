from dataclasses import dataclass, field, replace
from omega_ideals._compat import StrEnum
from typing import Optional, Sequence, Union

from omega_ideals.algebra.monomial import Monomial, MonomialIdeal
from omega_ideals.algebra.polynomial import SparsePolynomial
from omega_ideals.errors import PreconditionError


class Rule(StrEnum):
    PRINCIPAL = "PRINCIPAL"
    GCD_FACTOR = "GCD_FACTOR"
    PRIMARY = "PRIMARY"
    ANTICHAIN = "ANTICHAIN"
    CHAIN = "CHAIN"
    UNIQUE_TOP_RECURSION = "UNIQUE_TOP_RECURSION"
    DIM1 = "DIM1"
    TWO_VARS = "TWO_VARS"
    FALLBACK_BOUNDS = "FALLBACK_BOUNDS"


@dataclass(frozen=True, slots=True)
class Exact:
    value: int

    @property
    def lo(self) -> int:
        return self.value

    @property
    def hi(self) -> int:
        return self.value


@dataclass(frozen=True, slots=True)
class Bounds:
    lo: int
    hi: int
    reasons: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lo > self.hi:
            raise PreconditionError(f"Empty bound interval [{self.lo}, {self.hi}]")


Value = Union[Exact, Bounds]


@dataclass(frozen=True, slots=True)
class WitnessCertificate:
    """Factors whose product lies in the target while every single deletion does not.

    A verified certificate of length t proves the target is not (t-1)-absorbing.
    """
    factors: tuple[SparsePolynomial, ...]
    target: MonomialIdeal

    def __len__(self) -> int:
        return len(self.factors)

    def retarget(self, target: MonomialIdeal) -> "WitnessCertificate":
        return WitnessCertificate(self.factors, target)

    def __str__(self) -> str:
        return " | ".join(f"({f})" for f in self.factors)


@dataclass(frozen=True, slots=True)
class OmegaResult:
    value: Value
    method: tuple[Rule, ...]
    certificate: Optional[WitnessCertificate] = field(default=None, compare=False)

    def __post_init__(self):
        if not self.method:
            raise PreconditionError("An omega result needs a non-empty method trace")

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Exact)

    @property
    def lo(self) -> int:
        return self.value.lo

    @property
    def hi(self) -> int:
        return self.value.hi

    @property
    def exact(self) -> int:
        if not isinstance(self.value, Exact):
            raise PreconditionError(f"No exact value, only bounds [{self.lo}, {self.hi}]")
        return self.value.value

    def with_rules(self, *rules: Rule) -> "OmegaResult":
        return replace(self, method=tuple(rules) + self.method)

    def __str__(self) -> str:
        if isinstance(self.value, Exact):
            return str(self.value.value)
        return f"[{self.lo}, {self.hi}]"


def exact(value: int, rules: Sequence[Rule], certificate: Optional[WitnessCertificate] = None) -> OmegaResult:
    return OmegaResult(Exact(value), tuple(rules), certificate)


def shift_by_monomial(f: Monomial, result: OmegaResult, target: Optional[MonomialIdeal] = None) -> OmegaResult:
    """omega(fI) = deg(f) + omega(I), applied to an exact value or to both bounds.

    The certificate, when present, gains the variables of f (with multiplicity) in front and
    is retargeted to `target`, normally fI.
    """
    degree = f.degree
    if degree == 0:
        return result
    if isinstance(result.value, Exact):
        value: Value = Exact(result.value.value + degree)
    else:
        value = Bounds(result.value.lo + degree, result.value.hi + degree, result.value.reasons)
    certificate = result.certificate
    if certificate is not None:
        ring = f.ring
        prefix = tuple(
            SparsePolynomial.variable(ring, i) for i, e in enumerate(f.exps) for _ in range(e)
        )
        certificate = WitnessCertificate(prefix + certificate.factors, target if target is not None else certificate.target)
    return OmegaResult(value, (Rule.GCD_FACTOR,) + result.method, certificate)
