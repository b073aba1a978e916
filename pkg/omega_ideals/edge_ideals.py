"""Edge ideals of simple graphs and the experiments on their powers.

Vertices are 1..n and vertex v becomes the variable with index v - 1 of Ring.default(n).
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import networkx as nx

from omega_ideals.algebra.decomposition import associated_primes
from omega_ideals.algebra.monomial import MonomialIdeal, Ring, intersect_all, is_squarefree, power
from omega_ideals.algebra.polynomial import SparsePolynomial
from omega_ideals.engine.dispatcher import omega
from omega_ideals.engine.result import WitnessCertificate
from omega_ideals.errors import GraphParseError, GraphTooLargeError, PreconditionError
from omega_ideals.logging_config import get_logger
from omega_ideals.models import EdgePowerRow, EdgeReport, ValueView
from omega_ideals.oracle import verify_certificate

logger = get_logger(__name__)

DEFAULT_VERTEX_CAP = 16

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 1..vertex_count; edges are stored as (u, v) with u < v."""
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise PreconditionError(f"A graph needs at least one vertex, got {self.vertex_count}")
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise PreconditionError(f"Loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise PreconditionError(f"Edge ({u}, {v}) leaves the vertex range 1..{self.vertex_count}")
            normalized.append((min(u, v), max(u, v)))
        if len(set(normalized)) != len(normalized):
            raise PreconditionError(f"Duplicate edges in {self.edges}")
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def ring(self) -> Ring:
        return Ring.default(self.vertex_count)

    def __str__(self) -> str:
        return f"V = 1..{self.vertex_count}, E = {list(self.edges)}"


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise PreconditionError(f"A path needs at least 2 vertices, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(1, g.vertex_count + 1))
    graph.add_edges_from(g.edges)
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    """Nodes are renumbered 1..n in sorted order."""
    labels = {node: k for k, node in enumerate(sorted(graph.nodes), start=1)}
    return Graph(len(labels), tuple((labels[u], labels[v]) for u, v in graph.edges))


def parse_graph(text: str) -> Graph:
    """One edge `u v` (or `u,v`) per line, 1-based; `#` starts a comment."""
    edges = []
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = [f for f in _SEPARATORS.split(body) if f]
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphParseError(f"expected two vertex numbers, found '{body}'", number)
        u, v = int(fields[0]), int(fields[1])
        if u < 1 or v < 1:
            raise GraphParseError("vertices are numbered from 1", number)
        edges.append((u, v))
    if not edges:
        raise GraphParseError("the graph has no edges")
    try:
        return Graph(max(max(e) for e in edges), tuple(edges))
    except PreconditionError as e:
        raise GraphParseError(str(e)) from e


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def edge_ideal(g: Graph) -> MonomialIdeal:
    if not g.edges:
        raise PreconditionError("The edge ideal of a graph without edges is zero")
    n = g.vertex_count
    return g.ring.ideal(tuple(1 if k in (u - 1, v - 1) else 0 for k in range(n)) for u, v in g.edges)


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(to_networkx(g))


def minimal_vertex_covers(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> list[frozenset[int]]:
    """Complements of the maximal independent sets, smallest first."""
    if g.vertex_count > cap:
        raise GraphTooLargeError(g.vertex_count, cap)
    vertices = frozenset(range(1, g.vertex_count + 1))
    independent = nx.find_cliques(nx.complement(to_networkx(g)))
    covers = {vertices - frozenset(s) for s in independent}
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def omega_edge_ideal(g: Graph) -> int:
    """The number of minimal vertex covers."""
    edge_ideal(g)
    return len(minimal_vertex_covers(g))


def squarefree_power_witness(ideal: MonomialIdeal, m: int) -> WitnessCertificate:
    """Each minimal prime's linear form repeated m times, against I^m."""
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    if not ideal.is_proper or not is_squarefree(ideal):
        raise PreconditionError(f"{ideal} is not a proper squarefree ideal")
    factors: list[SparsePolynomial] = []
    for prime in associated_primes(ideal):
        factors.extend([SparsePolynomial.linear_form(ideal.ring, sorted(prime))] * m)
    return WitnessCertificate(tuple(factors), power(ideal, m))


def _vertex_primes(g: Graph, covers: Iterable[frozenset[int]]) -> list[MonomialIdeal]:
    return [g.ring.prime(v - 1 for v in cover) for cover in covers]


def edge_power_linearity(g: Graph, m_max: int, cap: int = DEFAULT_VERTEX_CAP) -> EdgeReport:
    if m_max < 1:
        raise PreconditionError(f"m_max must be positive, got {m_max}")
    ideal = edge_ideal(g)
    covers = minimal_vertex_covers(g, cap)
    r = len(covers)
    bipartite = is_bipartite(g)
    primes = _vertex_primes(g, covers)
    rows = []
    for m in range(1, m_max + 1):
        power_m = power(ideal, m)
        result = omega(power_m)
        if not result.is_exact:
            logger.warning(f"omega of power {m} of {ideal} only has bounds {result}")
        power_is_intersection = None
        if bipartite:
            power_is_intersection = power_m == intersect_all([power(p, m) for p in primes])
        rows.append(EdgePowerRow(
            m=m,
            omega=ValueView.of(result),
            expected=m * r,
            power_is_intersection=power_is_intersection,
            witness_verified=verify_certificate(squarefree_power_witness(ideal, m)),
            has_maximal_component=any(len(p) == g.vertex_count for p in associated_primes(power_m)),
        ))
    return EdgeReport(
        vertices=g.vertex_count,
        edges=list(g.edges),
        bipartite=bipartite,
        covers=[sorted(c) for c in covers],
        omega=r,
        rows=rows,
    )


def odd_cycle_cover_check(n: int) -> tuple[int, int]:
    """(n, r) for the odd cycle C_n, r its number of minimal vertex covers."""
    if n < 3 or n % 2 == 0:
        raise PreconditionError(f"Expected an odd cycle length >= 3, got {n}")
    r = len(minimal_vertex_covers(cycle_graph(n)))
    if r < n:
        logger.error(f"C_{n} has only {r} minimal vertex covers")
    return n, r
