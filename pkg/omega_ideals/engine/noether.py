"""Noether exponents e(I), the least mu with (sqrt I)^mu inside I."""
from omega_ideals.algebra.decomposition import IrreducibleComponent, PrimaryComponent, standard_decomposition
from omega_ideals.algebra.monomial import MonomialIdeal, is_primary, is_subideal, product, radical
from omega_ideals.logging_config import get_logger

logger = get_logger(__name__)


def noether_exponent_irreducible(component: IrreducibleComponent) -> int:
    """d_1 + ... + d_m - m + 1."""
    exponents = component.exponents
    return sum(exponents) - len(exponents) + 1


def best_irreducible(components) -> IrreducibleComponent:
    """The first standard component with the largest Noether exponent."""
    return max(components, key=noether_exponent_irreducible)


def noether_exponent_primary(component: PrimaryComponent) -> int:
    return max(noether_exponent_irreducible(t) for t in standard_decomposition(component.ideal))


def noether_exponent(ideal: MonomialIdeal) -> int:
    if ideal.is_unit:
        return 0
    if ideal.is_zero:
        return 1
    if is_primary(ideal):
        return max(noether_exponent_irreducible(t) for t in standard_decomposition(ideal))
    root = radical(ideal)
    acc, mu = root, 1
    while not is_subideal(acc, ideal):
        acc = product(acc, root)
        mu += 1
    logger.debug(f"e({ideal}) = {mu} by radical powers")
    return mu
