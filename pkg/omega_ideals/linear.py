"""omega-linearity: omega(I^m) = m * omega(I) for every m.

Closed criteria certify all m at once; check_linearity_by_powers only ever speaks about the
powers it actually computed.
"""
from dataclasses import dataclass

from omega_ideals.algebra.decomposition import IrreducibleComponent, PrimaryComponent, staircase
from omega_ideals.algebra.monomial import (
    MonomialIdeal,
    _check_ring,
    intersect,
    is_primary,
    power,
    product,
    radical,
)
from omega_ideals.engine.dispatcher import omega
from omega_ideals.engine.noether import noether_exponent_irreducible
from omega_ideals.errors import PreconditionError
from omega_ideals.logging_config import get_logger
from omega_ideals.models import LinearityReport, PowerRow, ValueView

logger = get_logger(__name__)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    reason: str

    def __bool__(self) -> bool:
        return self.holds


def _largest_pure_power(ideal: MonomialIdeal) -> int:
    return max(max(exps) for exps in ideal.exponents if sum(1 for e in exps if e) == 1)


def is_omega_linear_irreducible(component: IrreducibleComponent) -> Verdict:
    big = [d for d in component.exponents if d > 1]
    if len(big) <= 1:
        return Verdict(True, "at most one pure-power exponent exceeds 1")
    return Verdict(False, f"{len(big)} pure-power exponents exceed 1, so omega(T^2) < 2 omega(T)")


def is_omega_linear_primary(component: PrimaryComponent) -> Verdict:
    a_s = _largest_pure_power(component.ideal)
    w = omega(component.ideal).exact
    if w == a_s:
        return Verdict(True, f"omega = {w} equals the largest pure-power exponent")
    return Verdict(False, f"omega = {w} exceeds the largest pure-power exponent {a_s}")


def omega_power_irreducible(component: IrreducibleComponent, m: int) -> int:
    """(m - 1) a_s + omega(T), a_s the largest exponent of T."""
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    return (m - 1) * max(component.exponents) + noether_exponent_irreducible(component)


def is_omega_linear_2d(ideal: MonomialIdeal) -> Verdict:
    """omega(I) = max{a_1 + b_1, a_r + b_r} over the staircase of I."""
    steps = staircase(ideal)
    if len(steps) == 1:
        return Verdict(True, "principal ideals are omega-linear")
    (a1, b1), (ar, br) = steps[0], steps[-1]
    target = max(a1 + b1, ar + br)
    w = omega(ideal).exact
    if w == target:
        return Verdict(True, f"omega = {w} = max(a_1 + b_1, a_r + b_r)")
    return Verdict(False, f"omega = {w} but max(a_1 + b_1, a_r + b_r) = {target}")


def _criterion(ideal: MonomialIdeal) -> Verdict | None:
    if ideal.is_zero or ideal.is_unit:
        return None
    if ideal.ring.n == 2:
        return is_omega_linear_2d(ideal)
    if ideal.is_principal:
        return Verdict(True, "principal ideals are omega-linear")
    if is_primary(ideal):
        return is_omega_linear_primary(PrimaryComponent.from_ideal(ideal))
    return None


def check_linearity_by_powers(ideal: MonomialIdeal, m_max: int) -> LinearityReport:
    if m_max < 1:
        raise PreconditionError(f"m_max must be positive, got {m_max}")
    base = omega(ideal)
    rows = []
    partial = not base.is_exact
    for m in range(1, m_max + 1):
        result = base if m == 1 else omega(power(ideal, m))
        m_omega = m * base.exact if base.is_exact else None
        linear = None
        if result.is_exact and m_omega is not None:
            linear = result.exact == m_omega
        else:
            partial = True
        rows.append(PowerRow(m=m, omega=ValueView.of(result), m_omega=m_omega, linear=linear))

    if partial:
        verdict = "partial"
    elif all(row.linear for row in rows):
        verdict = f"linear up to {m_max}"
    else:
        verdict = "not linear"
    criterion = _criterion(ideal)
    reason = criterion.reason if criterion is not None else None
    if criterion is not None and m_max > 1 and verdict != "partial" and criterion.holds != (verdict != "not linear"):
        logger.error(f"Power table for {ideal} says '{verdict}' while the criterion says {criterion}")
    return LinearityReport(ideal=str(ideal), rows=rows, verdict=verdict, reason=reason)


def _require_maximal_primary(ideal: MonomialIdeal) -> None:
    if ideal.ring.n != 2:
        raise PreconditionError(f"Expected two variables, {ideal.ring} has {ideal.ring.n}")
    if not ideal.is_proper or not is_primary(ideal) or radical(ideal) != ideal.ring.maximal_ideal():
        raise PreconditionError(f"{ideal} is not (x,y)-primary")


def product_omega_bound(i: MonomialIdeal, j: MonomialIdeal) -> tuple[int, int]:
    """(omega(IJ), omega(I) + max{c_1, d_s}) for (x,y)-primary I, J, swapped so omega(I) >= omega(J)."""
    _check_ring(i.ring, j.ring)
    _require_maximal_primary(i)
    _require_maximal_primary(j)
    if omega(i).exact < omega(j).exact:
        i, j = j, i
    steps = staircase(j)
    bound = omega(i).exact + max(steps[0][0], steps[-1][1])
    return omega(product(i, j)).exact, bound


def product_preserves_linearity_check(i: MonomialIdeal, j: MonomialIdeal) -> Verdict:
    """When I and J are omega-linear in two variables, so is IJ."""
    _check_ring(i.ring, j.ring)
    if not (is_omega_linear_2d(i) and is_omega_linear_2d(j)):
        return Verdict(True, "premise fails: not both factors are omega-linear")
    verdict = is_omega_linear_2d(product(i, j))
    return Verdict(verdict.holds, f"product: {verdict.reason}")


def intersection_preserves_linearity_check(i: MonomialIdeal, j: MonomialIdeal) -> Verdict:
    """When I and J are P-primary and omega-linear for one P, so is I ∩ J."""
    _check_ring(i.ring, j.ring)
    first, second = PrimaryComponent.from_ideal(i), PrimaryComponent.from_ideal(j)
    if first.prime != second.prime:
        raise PreconditionError(f"{i} and {j} are primary to different primes")
    if not (is_omega_linear_primary(first) and is_omega_linear_primary(second)):
        return Verdict(True, "premise fails: not both ideals are omega-linear")
    verdict = is_omega_linear_primary(PrimaryComponent(intersect(i, j), first.prime))
    return Verdict(verdict.holds, f"intersection: {verdict.reason}")
