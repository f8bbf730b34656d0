"""Spin graphs as decorated multigraphs.

Each vertex ``Q`` carries its degree-``g`` divisor ``A_Q``. Edges are derived
from the divisors: for mutually incident ``Q`` and ``R`` with ``Q`` appearing
``n1`` times in ``A_R`` and ``R`` appearing ``n2 >= n1`` times in ``A_Q``, the
straight edge has multiplicity ``n1`` and, when ``k = n2 - n1 > 0``, an arc runs
from ``R`` to ``Q`` labelled ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .atlas import ExceptionalClass, check_genus
from .divisor import Divisor, PointLabel, incidence_violations, point, weierstrass_point


class GraphKind(str, enum.Enum):
    STANDARD = "standard"
    WEIERSTRASS = "weierstrass"
    EXCEPTIONAL = "exceptional"


class IncidenceError(ValueError):
    """Divisors are not mutually incident, so no spin graph exists."""


class NotExceptionalError(ValueError):
    pass


class InvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class Arc:
    start: PointLabel
    label: int


@dataclass(frozen=True)
class Edge:
    u: PointLabel
    v: PointLabel
    mult: int
    arc: Arc | None = None

    def __post_init__(self):
        if self.mult < 1:
            raise ValueError(f"edge multiplicity must be >= 1, got {self.mult}")
        if self.arc is not None and self.arc.start not in (self.u, self.v):
            raise ValueError("arc must start at an endpoint")

    @property
    def endpoints(self) -> frozenset[PointLabel]:
        return frozenset((self.u, self.v))

    def other(self, x: PointLabel) -> PointLabel:
        return self.v if x == self.u else self.u


def edges_from_divisors(vertex_divisors: Mapping[PointLabel, Divisor]) -> list[Edge]:
    """One edge per mutually incident vertex pair, decorated by the arc rule."""
    labels = sorted(vertex_divisors)
    edges = []
    for a, u in enumerate(labels):
        for v in labels[a + 1:]:
            n_uv = vertex_divisors[v].mult(u)  # u inside A_v
            n_vu = vertex_divisors[u].mult(v)  # v inside A_u
            if n_uv == 0 and n_vu == 0:
                continue
            if n_uv == 0 or n_vu == 0:
                raise IncidenceError(f"asymmetric incidence between {u} and {v}")
            arc = None
            if n_uv != n_vu:
                start = u if n_uv > n_vu else v
                arc = Arc(start, abs(n_uv - n_vu))
            edges.append(Edge(u, v, min(n_uv, n_vu), arc))
    return edges


@dataclass(frozen=True)
class SpinGraph:
    genus: int
    kind: GraphKind
    vertices: tuple[tuple[PointLabel, Divisor], ...]
    edges: tuple[Edge, ...]
    exceptional_class: ExceptionalClass | None = None

    @cached_property
    def divisors(self) -> dict[PointLabel, Divisor]:
        return dict(self.vertices)

    @property
    def labels(self) -> list[PointLabel]:
        return [v for v, _ in self.vertices]

    def divisor(self, v: PointLabel) -> Divisor:
        try:
            return self.divisors[v]
        except KeyError:
            raise KeyError(f"{v} is not a vertex of this graph") from None

    def full_divisor(self, v: PointLabel) -> Divisor:
        """``V * A_{conj V}``: the fibre divisor through ``v``."""
        return Divisor.of(v) * self.divisor(v.conjugate())

    def self_exponent(self, v: PointLabel) -> int:
        """Exponent ``k0(V)`` of ``V`` in its own fibre divisor."""
        return self.full_divisor(v).mult(v)

    def edge(self, a: PointLabel, b: PointLabel) -> Edge | None:
        return self._edge_index.get(frozenset((a, b)))

    @cached_property
    def _edge_index(self) -> dict[frozenset, Edge]:
        return {e.endpoints: e for e in self.edges}

    def __contains__(self, v) -> bool:
        return v in self.divisors


def _build(g, kind, divisors: Mapping[PointLabel, Divisor], cls=None) -> SpinGraph:
    vertices = tuple(sorted(divisors.items()))
    return SpinGraph(g, kind, vertices, tuple(edges_from_divisors(divisors)), cls)


def standard_graph(g: int) -> SpinGraph:
    """The generic graph on ``P, P_k`` and conjugates, ``k = 1..g``.

    ``A_P = P_1...P_g`` and ``A_{P_k} = P * prod_{l != k} conj(P_l)``; the
    result is the crown graph on ``2g + 2`` vertices.
    """
    check_genus(g, None)
    base = point(0)
    idx = [point(k) for k in range(1, g + 1)]
    divs = {base: Divisor.of(*idx)}
    for k, pk in enumerate(idx):
        divs[pk] = Divisor.of(base, *(q.conjugate() for j, q in enumerate(idx) if j != k))
    divs.update({v.conjugate(): d.conjugate() for v, d in list(divs.items())})
    return _build(g, GraphKind.STANDARD, divs)


def weierstrass_graph(g: int) -> SpinGraph:
    """Complete graph on ``g + 1`` self-conjugate points."""
    check_genus(g, None)
    ws = [weierstrass_point(j) for j in range(g + 1)]
    divs = {w: Divisor.of(*(x for x in ws if x != w)) for w in ws}
    return _build(g, GraphKind.WEIERSTRASS, divs)


def exceptional_divisors(c: ExceptionalClass) -> dict[PointLabel, Divisor]:
    """Vertex divisors of a graph of class ``c`` with head ``P``.

    ``A_P = conj(P)^(k0-1) * prod P_j^(kj)`` and
    ``A_{P_j} = P^(k0) * conj(P_j)^(kj-1) * prod_{l != j} conj(P_l)^(kl)``.
    """
    k0, ks = c.khat[0], c.khat[1:]
    base = point(0)
    idx = [point(j) for j in range(1, len(ks) + 1)]
    divs = {base: Divisor([(base.conjugate(), k0 - 1)] + list(zip(idx, ks)))}
    for j, pj in enumerate(idx):
        terms = [(base, k0), (pj.conjugate(), ks[j] - 1)]
        terms += [(q.conjugate(), ks[l]) for l, q in enumerate(idx) if l != j]
        divs[pj] = Divisor(terms)
    divs.update({v.conjugate(): d.conjugate() for v, d in list(divs.items())})
    return divs


def exceptional_graph(g: int, c: ExceptionalClass | tuple[int, ...]) -> SpinGraph:
    if not isinstance(c, ExceptionalClass):
        c = ExceptionalClass(g, tuple(c))
    if c.genus != g:
        raise ValueError(f"class {c} belongs to genus {c.genus}, not {g}")
    return _build(g, GraphKind.EXCEPTIONAL, exceptional_divisors(c), c)


def section_divisor(graph: SpinGraph, v: PointLabel) -> tuple[PointLabel, Divisor]:
    """``(pole, zeros)`` of the section with a single simple pole at ``v``."""
    return v, graph.divisor(v)


def epsilon_degree_of_vertex(graph: SpinGraph, v: PointLabel) -> int:
    return len(graph.divisor(v))


def graph_branch_number(graph: SpinGraph, witness: PointLabel | None = None) -> int:
    """``2 * sum(mult - 1)`` over the fibre divisor of ``witness``.

    Any vertex may serve as witness; the first vertex is used by default.
    """
    if witness is None:
        witness = graph.vertices[0][0]
    return 2 * sum(m - 1 for m in graph.full_divisor(witness).values())


def head_vertices(graph: SpinGraph) -> list[PointLabel]:
    """Vertices whose self-exponent ``k0`` is minimal."""
    if graph.kind is not GraphKind.EXCEPTIONAL:
        raise NotExceptionalError(f"{graph.kind.value} graphs have no heads")
    k0 = {v: graph.self_exponent(v) for v in graph.labels}
    low = min(k0.values())
    return [v for v in graph.labels if k0[v] == low]


def canonical_class(graph: SpinGraph) -> ExceptionalClass:
    """Class read from the fibre exponents at a head.

    Raises :class:`InvariantError` if two heads disagree.
    """
    readings = {graph.full_divisor(h).exponents() for h in head_vertices(graph)}
    if len(readings) != 1:
        raise InvariantError(f"heads disagree on khat: {sorted(readings)}")
    return ExceptionalClass(graph.genus, readings.pop())


def graph_order(graph: SpinGraph, v: PointLabel) -> int:
    """Points of ``{A_v}`` other than ``conj(v)``."""
    return len(graph.divisor(v).support - {v.conjugate()})


def validate(graph: SpinGraph) -> list[str]:
    """Structural violations of ``graph``; an empty list means valid."""
    out: list[str] = []
    g = graph.genus
    divs = graph.divisors
    labels = graph.labels

    if len(divs) != len(graph.vertices):
        out.append("duplicate vertex labels")
    for v, d in divs.items():
        if d.degree != g:
            out.append(f"deg A_{v} = {d.degree}, expected {g}")
        if v in d:
            out.append(f"{v} lies in its own divisor")
        stray = d.support - divs.keys()
        if stray:
            out.append(f"A_{v} mentions non-vertices {sorted(map(str, stray))}")
        if graph.kind is GraphKind.WEIERSTRASS:
            if not v.weierstrass:
                out.append(f"{v} is not a Weierstrass label")
        elif v.weierstrass:
            out.append(f"Weierstrass label {v} in a {graph.kind.value} graph")
        if v.conjugate() not in divs:
            out.append(f"conjugate of {v} missing")
        elif not v.weierstrass and divs[v.conjugate()] != d.conjugate():
            out.append(f"A_conj({v}) is not the conjugate of A_{v}")

    for q, r in incidence_violations(divs):
        out.append(f"{q} in A_{r} but {r} not in A_{q}")
    if out:
        return out

    expected = {
        GraphKind.STANDARD: 2 * g + 2,
        GraphKind.WEIERSTRASS: g + 1,
    }.get(graph.kind)
    if graph.kind is GraphKind.EXCEPTIONAL:
        if graph.exceptional_class is None:
            out.append("exceptional graph without a class")
            return out
        expected = graph.exceptional_class.vertex_count
    if len(labels) != expected:
        out.append(f"{len(labels)} vertices, expected {expected}")

    edges = edges_from_divisors(divs)
    if tuple(edges) != graph.edges:
        out.append("edges do not match the divisors")

    # every fibre divisor equals the fibre through the first vertex or its conjugate
    v0 = labels[0]
    fibres = {graph.full_divisor(v0), graph.full_divisor(v0.conjugate())}
    for v in labels:
        if graph.full_divisor(v) not in fibres:
            out.append(f"fibre through {v} is neither fibre of {v0} nor of its conjugate")

    if graph.kind is GraphKind.EXCEPTIONAL:
        c = graph.exceptional_class
        orders = {graph_order(graph, v) for v in labels}
        if orders != {c.r}:
            out.append(f"vertex orders {sorted(orders)} differ from class order {c.r}")
        try:
            got = canonical_class(graph)
        except InvariantError as exc:
            out.append(str(exc))
        else:
            if got != c:
                out.append(f"heads read {got.khat}, class says {c.khat}")
    else:
        for v in labels:
            if len(divs[v]) != g:
                out.append(f"eps-degree of {v} is {len(divs[v])}, expected {g}")
        if graph.kind is GraphKind.STANDARD and any(v.conjugate() in divs[v] for v in labels):
            out.append("a standard vertex is incident with its conjugate")
    return out
