from typing import Optional

from pydantic import BaseModel, Field

from omega_ideals.algebra.decomposition import ComponentKind, Decomposition
from omega_ideals.algebra.monomial import MonomialIdeal, Ring
from omega_ideals.engine.result import Exact, OmegaResult, WitnessCertificate


class IdealView(BaseModel):
    ring: list[str] = Field(description="Variable names of the ambient polynomial ring, in order.")
    gens: list[list[int]] = Field(description="Exponent vectors of G(I) in canonical order.")

    @classmethod
    def of(cls, ideal: MonomialIdeal) -> "IdealView":
        return cls(ring=list(ideal.ring.names), gens=[list(e) for e in ideal.exponents])

    def to_ideal(self) -> MonomialIdeal:
        return Ring(tuple(self.ring)).ideal(self.gens)


def ideal_to_json(ideal: MonomialIdeal) -> str:
    return IdealView.of(ideal).model_dump_json()


def ideal_from_json(text: str) -> MonomialIdeal:
    return IdealView.model_validate_json(text).to_ideal()


class ValueView(BaseModel):
    exact: Optional[int] = Field(default=None, description="The exact value, when a rule applies.")
    lo: Optional[int] = Field(default=None, description="Certified lower bound when no exact rule applies.")
    hi: Optional[int] = Field(default=None, description="Certified upper bound when no exact rule applies.")

    @classmethod
    def of(cls, result: OmegaResult) -> "ValueView":
        if isinstance(result.value, Exact):
            return cls(exact=result.value.value)
        return cls(lo=result.lo, hi=result.hi)


class CertificateView(BaseModel):
    factors: list[str] = Field(description="Witness factors rendered as polynomials.")

    @classmethod
    def of(cls, certificate: WitnessCertificate) -> "CertificateView":
        return cls(factors=[str(f) for f in certificate.factors])


class OmegaView(BaseModel):
    value: ValueView
    method: list[str] = Field(description="Rule tags in the order they were applied.")
    certificate: Optional[CertificateView] = None
    verified: Optional[bool] = Field(default=None, description="Certificate check result, with --verify only.")
    reasons: Optional[list[str]] = Field(default=None, description="Where the bounds come from.")

    @classmethod
    def of(cls, result: OmegaResult, with_certificate: bool = True, verified: Optional[bool] = None) -> "OmegaView":
        certificate = None
        if with_certificate and result.certificate is not None:
            certificate = CertificateView.of(result.certificate)
        reasons = None if result.is_exact else list(result.value.reasons)
        return cls(
            value=ValueView.of(result),
            method=[str(rule) for rule in result.method],
            certificate=certificate,
            verified=verified,
            reasons=reasons,
        )


class ComponentView(BaseModel):
    kind: ComponentKind
    gens: list[list[int]]
    prime: list[int]


class DecompositionView(BaseModel):
    ring: list[str]
    components: list[ComponentView]

    @classmethod
    def of(cls, decomposition: Decomposition) -> "DecompositionView":
        return cls(
            ring=list(decomposition.ring.names),
            components=[
                ComponentView(kind=c.kind, gens=[list(e) for e in c.ideal.exponents], prime=sorted(c.prime))
                for c in decomposition
            ],
        )


class PowerRow(BaseModel):
    m: int
    omega: ValueView
    m_omega: Optional[int] = Field(default=None, description="m times omega(I), when omega(I) is exact.")
    linear: Optional[bool] = Field(default=None, description="omega(I^m) == m * omega(I); None for bounds rows.")


class LinearityReport(BaseModel):
    ideal: str
    rows: list[PowerRow]
    verdict: str = Field(description="'linear up to m', 'not linear', or 'partial' when a power has only bounds.")
    reason: Optional[str] = Field(default=None, description="Criterion certifying the verdict for every m, if any.")


class PairReport(BaseModel):
    first: str
    second: str
    omega_first: ValueView
    omega_second: ValueView
    omega_sum: ValueView
    omega_intersection: ValueView
    omega_product: ValueView
    omega_colon: ValueView
    common_prime: Optional[list[int]] = Field(
        default=None,
        description="Variables of P when both ideals are P-primary for the same P."
    )
    inequalities: dict[str, bool] = Field(
        default_factory=dict,
        description="Inequality chain for P-primary pairs, empty otherwise."
    )


class EdgePowerRow(BaseModel):
    m: int
    omega: ValueView
    expected: int = Field(description="m times the number of minimal vertex covers.")
    power_is_intersection: Optional[bool] = Field(
        default=None,
        description="I^m equals the intersection of the P_i^m; bipartite graphs only."
    )
    witness_verified: bool
    has_maximal_component: bool


class EdgeReport(BaseModel):
    vertices: int
    edges: list[tuple[int, int]]
    bipartite: bool
    covers: list[list[int]]
    omega: int
    rows: list[EdgePowerRow]


class SweepReport(BaseModel):
    checked: int
    exact: int
    bounds: int
    noether_mismatches: list[str] = Field(default_factory=list)
    sandwich_violations: list[str] = Field(default_factory=list)
    certificate_failures: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.noether_mismatches or self.sandwich_violations or self.certificate_failures)


class AbsorbingSearchReport(BaseModel):
    ideal: str
    t: int
    exhausted: bool
    certificate: Optional[CertificateView] = None


class NoetherView(BaseModel):
    ideal: IdealView
    noether: int = Field(description="Least mu with (sqrt I)^mu inside I.")
    brute: Optional[int] = Field(default=None, description="The literal search result, with --verify only.")


class PowerView(BaseModel):
    ideal: IdealView
    m: int
    power: IdealView
    omega: OmegaView


class ClosureView(BaseModel):
    ideal: IdealView
    closure: IdealView
    integrally_closed: bool


class MembershipView(BaseModel):
    ideal: IdealView
    monomial: list[int]
    k_max: int
    member: bool


class PowerCheckView(BaseModel):
    component: IdealView
    m: int
    holds: bool
    omega_formula: int = Field(description="(m - 1) a_s + omega(T).")
    omega_dispatcher: ValueView
