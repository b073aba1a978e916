"""Plain-text layouts of the command reports; --json prints the pydantic models instead."""
from typing import Optional

from omega_ideals.algebra.decomposition import Decomposition
from omega_ideals.algebra.monomial import MonomialIdeal
from omega_ideals.engine.result import OmegaResult
from omega_ideals.models import (
    AbsorbingSearchReport,
    EdgeReport,
    LinearityReport,
    PairReport,
    SweepReport,
    ValueView,
)

OMEGA_REPORT = """ideal: {ideal}
omega = {value}
method: {method}"""

BOUNDS_REASONS = """bounds:
{reasons}"""

CERTIFICATE_REPORT = """certificate ({length} factors): {factors}"""

VERIFIED_REPORT = """certificate verified: {verified}"""

DECOMPOSITION_REPORT = """ideal: {ideal}
{kind} decomposition, {count} components:
{components}"""

LINEARITY_HEADER = """ideal: {ideal}
{columns}"""

LINEARITY_FOOTER = """verdict: {verdict}
criterion: {reason}"""

PAIR_REPORT = """I = {first}
J = {second}
omega(I) = {omega_first}
omega(J) = {omega_second}
omega(I+J) = {omega_sum}
omega(I∩J) = {omega_intersection}
omega(IJ) = {omega_product}
omega(I:J) = {omega_colon}"""

EDGE_REPORT = """vertices: {vertices}
edges: {edges}
bipartite: {bipartite}
minimal vertex covers ({count}): {covers}
omega(I) = {omega}"""

SWEEP_REPORT = """checked: {checked} ({exact} exact, {bounds} bounds)
Noether exponent mismatches: {noether}
sandwich violations: {sandwich}
certificate failures: {certificates}
status: {status}"""

ABSORBING_REPORT = """ideal: {ideal}
violation length found: {t}
search exhausted: {exhausted}"""


def value_text(view: ValueView) -> str:
    if view.exact is not None:
        return str(view.exact)
    return f"[{view.lo}, {view.hi}]"


def render_omega(ideal: MonomialIdeal,
                 result: OmegaResult,
                 with_certificate: bool = False,
                 verified: Optional[bool] = None) -> str:
    lines = [OMEGA_REPORT.format(ideal=ideal, value=result, method=", ".join(result.method))]
    if not result.is_exact:
        lines.append(BOUNDS_REASONS.format(reasons="\n".join(f"  {r}" for r in result.value.reasons)))
    if with_certificate and result.certificate is not None:
        lines.append(CERTIFICATE_REPORT.format(length=len(result.certificate), factors=result.certificate))
    if verified is not None:
        lines.append(VERIFIED_REPORT.format(verified=verified))
    return "\n".join(lines)


def render_decomposition(ideal: MonomialIdeal, decomposition: Decomposition, kind: str) -> str:
    components = "\n".join(f"  {c}  prime on {sorted(c.prime)}" for c in decomposition)
    return DECOMPOSITION_REPORT.format(ideal=ideal, kind=kind, count=len(decomposition), components=components)


def render_linearity(report: LinearityReport) -> str:
    rows = [LINEARITY_HEADER.format(ideal=report.ideal, columns="m\tomega(I^m)\tm*omega(I)\tlinear")]
    for row in report.rows:
        m_omega = "-" if row.m_omega is None else row.m_omega
        linear = "-" if row.linear is None else row.linear
        rows.append(f"{row.m}\t{value_text(row.omega)}\t{m_omega}\t{linear}")
    rows.append(LINEARITY_FOOTER.format(verdict=report.verdict, reason=report.reason or "none"))
    return "\n".join(rows)


def render_pair(report: PairReport) -> str:
    lines = [PAIR_REPORT.format(
        first=report.first,
        second=report.second,
        omega_first=value_text(report.omega_first),
        omega_second=value_text(report.omega_second),
        omega_sum=value_text(report.omega_sum),
        omega_intersection=value_text(report.omega_intersection),
        omega_product=value_text(report.omega_product),
        omega_colon=value_text(report.omega_colon),
    )]
    if report.common_prime is not None:
        lines.append(f"common prime on variables {report.common_prime}")
    lines.extend(f"{name}: {holds}" for name, holds in report.inequalities.items())
    return "\n".join(lines)


def render_edge(report: EdgeReport) -> str:
    lines = [EDGE_REPORT.format(
        vertices=report.vertices,
        edges=report.edges,
        bipartite=report.bipartite,
        count=len(report.covers),
        covers=report.covers,
        omega=report.omega,
    ), "m\tomega(I^m)\tm*r\tI^m = ∩P^m\twitness\tmaximal component"]
    for row in report.rows:
        intersection = "-" if row.power_is_intersection is None else row.power_is_intersection
        lines.append(f"{row.m}\t{value_text(row.omega)}\t{row.expected}\t{intersection}"
                     f"\t{row.witness_verified}\t{row.has_maximal_component}")
    return "\n".join(lines)


def render_sweep(report: SweepReport) -> str:
    return SWEEP_REPORT.format(
        checked=report.checked,
        exact=report.exact,
        bounds=report.bounds,
        noether=", ".join(report.noether_mismatches) or "none",
        sandwich=", ".join(report.sandwich_violations) or "none",
        certificates=", ".join(report.certificate_failures) or "none",
        status="ok" if report.ok else "FAILED",
    )


def render_absorbing(report: AbsorbingSearchReport) -> str:
    lines = [ABSORBING_REPORT.format(ideal=report.ideal, t=report.t, exhausted=report.exhausted)]
    if report.certificate is not None:
        lines.append(CERTIFICATE_REPORT.format(
            length=len(report.certificate.factors),
            factors=" | ".join(f"({f})" for f in report.certificate.factors),
        ))
    return "\n".join(lines)
