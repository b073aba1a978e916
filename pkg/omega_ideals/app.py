import argparse
import os
import sys
from typing import Callable, Optional, Sequence

from pydantic import BaseModel

from omega_ideals import reports
from omega_ideals.algebra.decomposition import (
    IrreducibleComponent,
    canonical_primary_decomposition,
    standard_decomposition,
)
from omega_ideals.algebra.monomial import MonomialIdeal, Ring, power
from omega_ideals.algebra.parser import parse_ideal, parse_monomial, parse_ring
from omega_ideals.closure import integral_closure_2d
from omega_ideals.edge_ideals import edge_power_linearity, read_graph
from omega_ideals.engine.dispatcher import omega, primary_pair_report
from omega_ideals.engine.noether import noether_exponent
from omega_ideals.errors import GraphParseError, IdealParseError, OmegaError
from omega_ideals.linear import check_linearity_by_powers, omega_power_irreducible
from omega_ideals.logging_config import LEVELS, PACKAGE_LOGGER, get_logger, setup_logging
from omega_ideals.models import (
    AbsorbingSearchReport,
    CertificateView,
    ClosureView,
    DecompositionView,
    IdealView,
    MembershipView,
    NoetherView,
    OmegaView,
    PowerCheckView,
    PowerView,
    ValueView,
)
from omega_ideals.oracle import (
    binomial_absorbing_search,
    brute_closure_membership,
    brute_noether,
    brute_power_decomposition_check,
    monomial_absorbing_lower_bound,
    random_corpus,
    sweep,
    verify_certificate,
)
from omega_ideals.settings import Settings, load_settings

LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
OMEGA_SETTINGS = os.getenv('OMEGA_SETTINGS', 'settings/settings.json')

EXIT_PARSE_ERROR = 2
EXIT_PRECONDITION = 3

setup_logging(log_level=LOG_LEVEL)
logger = get_logger(f"{PACKAGE_LOGGER}.app")


class CommandContext:

    def __init__(self, args: argparse.Namespace, settings: Settings):
        self.args = args
        self.settings = settings
        self.ring: Optional[Ring] = parse_ring(args.vars) if args.vars else None

    def ideal(self, text: str) -> MonomialIdeal:
        ideal = parse_ideal(text, self.ring)
        if self.ring is None:
            # later arguments share the ring of the first one
            self.ring = ideal.ring
        return ideal

    def emit(self, model: BaseModel, text: str) -> None:
        if self.args.json:
            print(model.model_dump_json(exclude_none=True))
        else:
            print(text)


def _decompose(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    if ctx.args.canonical:
        decomposition, kind = canonical_primary_decomposition(ideal), "canonical primary"
    else:
        decomposition, kind = standard_decomposition(ideal), "standard"
    ctx.emit(DecompositionView.of(decomposition), reports.render_decomposition(ideal, decomposition, kind))


def _noether(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    e = noether_exponent(ideal)
    brute = brute_noether(ideal) if ctx.args.verify else None
    text = f"ideal: {ideal}\ne = {e}" + (f"\nliteral search: {brute}" if brute is not None else "")
    ctx.emit(NoetherView(ideal=IdealView.of(ideal), noether=e, brute=brute), text)


def _omega(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    result = omega(ideal)
    verified = None
    if ctx.args.verify and result.certificate is not None:
        verified = verify_certificate(result.certificate)
    show = ctx.args.certificate or ctx.args.verify
    ctx.emit(OmegaView.of(result, with_certificate=show, verified=verified),
             reports.render_omega(ideal, result, with_certificate=show, verified=verified))


def _power(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    power_m = power(ideal, ctx.args.m)
    result = omega(power_m)
    view = PowerView(ideal=IdealView.of(ideal), m=ctx.args.m, power=IdealView.of(power_m),
                     omega=OmegaView.of(result, with_certificate=False))
    ctx.emit(view, f"I^{ctx.args.m} = {power_m}\n" + reports.render_omega(power_m, result))


def _omega_linear(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    report = check_linearity_by_powers(ideal, ctx.args.max_power or ctx.settings.max_power)
    ctx.emit(report, reports.render_linearity(report))


def _closure(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    closure = integral_closure_2d(ideal)
    closed = closure == ideal
    view = ClosureView(ideal=IdealView.of(ideal), closure=IdealView.of(closure), integrally_closed=closed)
    ctx.emit(view, f"ideal: {ideal}\nclosure: {closure}\nintegrally closed: {closed}")


def _edge_ideal(ctx: CommandContext) -> None:
    graph = read_graph(ctx.args.graph)
    report = edge_power_linearity(graph, ctx.args.powers or ctx.settings.edge_powers, ctx.settings.vertex_cap)
    ctx.emit(report, reports.render_edge(report))


def _compare(ctx: CommandContext) -> None:
    first = ctx.ideal(ctx.args.first)
    second = ctx.ideal(ctx.args.second)
    report = primary_pair_report(first, second)
    ctx.emit(report, reports.render_pair(report))


def _oracle_absorbing(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    found = monomial_absorbing_lower_bound(ideal, ctx.args.t_max, ctx.args.deg_cap)
    certificate = CertificateView.of(found.certificate) if found.certificate is not None else None
    report = AbsorbingSearchReport(ideal=str(ideal), t=found.t, exhausted=found.exhausted, certificate=certificate)
    ctx.emit(report, reports.render_absorbing(report))


def _oracle_binomial(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    certificate = binomial_absorbing_search(ideal, ctx.args.t, ctx.args.deg_cap or 2)
    report = AbsorbingSearchReport(
        ideal=str(ideal),
        t=len(certificate) if certificate is not None else 0,
        exhausted=certificate is None,
        certificate=CertificateView.of(certificate) if certificate is not None else None,
    )
    ctx.emit(report, reports.render_absorbing(report))


def _oracle_power_check(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    component = IrreducibleComponent.from_ideal(ideal)
    m = ctx.args.m
    holds = brute_power_decomposition_check(component, m)
    formula = omega_power_irreducible(component, m)
    dispatcher = omega(power(ideal, m), force_generic=True)
    view = PowerCheckView(component=IdealView.of(ideal), m=m, holds=holds,
                          omega_formula=formula, omega_dispatcher=ValueView.of(dispatcher))
    text = (f"T = {ideal}, m = {m}\nT^m equals the intersection over S_m: {holds}\n"
            f"(m - 1) a_s + omega(T) = {formula}, dispatcher on T^m = {dispatcher}")
    ctx.emit(view, text)


def _oracle_closure_member(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    u = parse_monomial(ctx.args.monomial, ideal.ring)
    k_max = ctx.args.k_max or ctx.settings.closure_power_cap
    member = brute_closure_membership(ideal, u, k_max)
    view = MembershipView(ideal=IdealView.of(ideal), monomial=list(u.exps), k_max=k_max, member=member)
    ctx.emit(view, f"{u} in the closure of {ideal} (k <= {k_max}): {member}")


def _oracle_sweep(ctx: CommandContext) -> None:
    s = ctx.settings
    corpus = random_corpus(
        ctx.args.variables or s.sweep_variables,
        s.sweep_max_exponent,
        s.sweep_max_generators,
        ctx.args.count or s.sweep_count,
        seed=ctx.args.seed,
    )
    report = sweep(corpus)
    ctx.emit(report, reports.render_sweep(report))
    if not report.ok:
        logger.error(f"Sweep found failures: {report.model_dump_json()}")


def _oracle_noether(ctx: CommandContext) -> None:
    ideal = ctx.ideal(ctx.args.ideal)
    brute = brute_noether(ideal)
    ctx.emit(NoetherView(ideal=IdealView.of(ideal), noether=noether_exponent(ideal), brute=brute),
             f"ideal: {ideal}\nliteral search: {brute}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="Comma-separated variable names, e.g. x,y,z")
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON")
    common.add_argument("--seed", type=int, default=0, help="Seed for randomized corpora")
    common.add_argument("--log-level", type=str.upper, choices=LEVELS,
                        help="Overrides the LOG_LEVEL environment variable")
    common.add_argument("--settings", default=OMEGA_SETTINGS, help="Path of the settings JSON file")

    parser = argparse.ArgumentParser(
        prog="omega-ideals",
        description="Absorbing degree, Noether exponent and decompositions of monomial ideals.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[CommandContext], None], help_text: str,
                parent=commands) -> argparse.ArgumentParser:
        sub = parent.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("decompose", _decompose, "Standard or canonical primary decomposition")
    sub.add_argument("ideal")
    kind = sub.add_mutually_exclusive_group()
    kind.add_argument("--standard", action="store_true", help="Irreducible components (default)")
    kind.add_argument("--canonical", action="store_true", help="Components grouped by radical")

    sub = command("noether", _noether, "Noether exponent e(I)")
    sub.add_argument("ideal")
    sub.add_argument("--verify", action="store_true", help="Compare with the literal search")

    sub = command("omega", _omega, "Absorbing degree omega(I)")
    sub.add_argument("ideal")
    sub.add_argument("--certificate", action="store_true", help="Print the witness factors")
    sub.add_argument("--verify", action="store_true", help="Check the witness")

    sub = command("power", _power, "omega of the power I^M")
    sub.add_argument("ideal")
    sub.add_argument("m", type=int)

    sub = command("omega-linear", _omega_linear, "Power table omega(I^m) against m * omega(I)")
    sub.add_argument("ideal")
    sub.add_argument("--max-power", type=int)

    sub = command("closure", _closure, "Integral closure in two variables")
    sub.add_argument("ideal")

    sub = command("edge-ideal", _edge_ideal, "Edge ideal of a graph and its powers")
    sub.add_argument("--graph", required=True, help="Edge list file, one 'u v' per line")
    sub.add_argument("--powers", type=int)

    sub = command("compare", _compare, "omega of I+J, I∩J, IJ and I:J")
    sub.add_argument("first")
    sub.add_argument("second")

    oracle = commands.add_parser("oracle", help="Slow independent checkers")
    checks = oracle.add_subparsers(dest="oracle", required=True)

    sub = command("noether", _oracle_noether, "Literal Noether exponent search", checks)
    sub.add_argument("ideal")

    sub = command("absorbing", _oracle_absorbing, "Monomial violation search, a lower bound for omega", checks)
    sub.add_argument("ideal")
    sub.add_argument("--t-max", type=int, default=6)
    sub.add_argument("--deg-cap", type=int)

    sub = command("binomial", _oracle_binomial, "Violation search over monomials and binomials", checks)
    sub.add_argument("ideal")
    sub.add_argument("--t", type=int, required=True)
    sub.add_argument("--deg-cap", type=int)

    sub = command("power-check", _oracle_power_check, "Power decomposition of an irreducible ideal", checks)
    sub.add_argument("ideal")
    sub.add_argument("m", type=int)

    sub = command("closure-member", _oracle_closure_member, "u^k in I^k for some k <= k_max", checks)
    sub.add_argument("ideal")
    sub.add_argument("monomial")
    sub.add_argument("--k-max", type=int)

    sub = command("sweep", _oracle_sweep, "Seeded random corpus against the oracles", checks)
    sub.add_argument("--count", type=int)
    sub.add_argument("--variables", type=int)

    return parser


def run(args: argparse.Namespace) -> int:
    if args.log_level:
        setup_logging(log_level=args.log_level)
    logger.info(f"Running command {args.command}")
    try:
        args.handler(CommandContext(args, load_settings(args.settings)))
    except (IdealParseError, GraphParseError, OSError) as e:
        logger.debug("Parse failure", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        if isinstance(e, IdealParseError) and e.position is not None:
            print(e.pointer(), file=sys.stderr)
        return EXIT_PARSE_ERROR
    except OmegaError as e:
        logger.debug("Precondition failure", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as e:
        logger.error(f"Error running {args.command}: {str(e)}", exc_info=True)
        raise e
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(build_parser().parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
