"""Grading positivity: weighted Ext digraphs, negative cycles, potentials."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algcore import AlgebraRep
from .errors import HypothesisViolated, NegativeCycle, SimplesNotDegreeZero
from .grading import Grading, regrade_by_shifts, validate_grading
from .homo import ExtQuiver, ext1_graded, labels_of


@dataclass
class WeightedDigraph:
    nodes: list
    weights: dict = field(default_factory=dict)  # (u, v) -> minimum weight
    multiplicity: dict = field(default_factory=dict)  # (u, v) -> number of parallel edges

    def __post_init__(self):
        if not self.nodes:
            raise ValueError("a weighted digraph needs at least one node")

    def add_edge(self, u, v, w: int, mult: int = 1):
        key = (u, v)
        if key not in self.weights or w < self.weights[key]:
            self.weights[key] = int(w)
        self.multiplicity[key] = self.multiplicity.get(key, 0) + mult

    def edges(self):
        return [(u, v, w) for (u, v), w in self.weights.items()]

    def to_json(self):
        return {"nodes": list(self.nodes),
                "edges": [{"source": u, "target": v, "weight": w,
                           "multiplicity": self.multiplicity[(u, v)]} for u, v, w in self.edges()]}


@dataclass
class NegativeCycleWitness:
    nodes: list  # cycle u_0 -> u_1 -> ... -> u_{k-1} -> u_0
    weight: int

    def to_json(self):
        return {"cycle": list(self.nodes), "weight": self.weight}


def ext_weight_graph(e: ExtQuiver) -> WeightedDigraph:
    """Edge i -> j of weight min{d : Ext^1(S_i, S_j<-d>) != 0}."""
    g = WeightedDigraph(list(e.labels))
    for (i, j), degs in e.data.items():
        for d, m in degs.items():
            g.add_edge(i, j, d, m)
    return g


def _bellman_ford(g: WeightedDigraph):
    """(distances from a virtual source, witness or None)."""
    dist = {v: 0 for v in g.nodes}
    pred = {v: None for v in g.nodes}
    edges = g.edges()
    changed = None
    for _ in range(len(g.nodes)):
        changed = None
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                pred[v] = u
                changed = v
        if changed is None:
            return dist, None
    # a relaxation in round |V| means a negative cycle reachable through pred
    x = changed
    for _ in range(len(g.nodes)):
        x = pred[x]
    cycle = [x]
    y = pred[x]
    while y != x:
        cycle.append(y)
        y = pred[y]
    cycle.reverse()
    weight = sum(g.weights[(cycle[k], cycle[(k + 1) % len(cycle)])] for k in range(len(cycle)))
    return dist, NegativeCycleWitness(cycle, weight)


def cycle_positivity(g: WeightedDigraph):
    """None when every directed cycle has weight >= 0, else a negative-cycle witness."""
    return _bellman_ford(g)[1]


def potential_shifts(g: WeightedDigraph) -> dict:
    """d with w(i, j) + d(i) - d(j) >= 0 on every edge i -> j."""
    dist, witness = _bellman_ford(g)
    if witness is not None:
        raise NegativeCycle(witness)
    for u, v, w in g.edges():
        assert w + dist[u] - dist[v] >= 0
    return dist


# finite-set potentials -----------------------------------------------------------------


@dataclass
class DistanceTable:
    nodes: list
    f: dict  # (x, y) -> int, diagonal 0

    @classmethod
    def from_matrix(cls, nodes, rows):
        return cls(list(nodes), {(x, y): int(rows[i][j])
                                 for i, x in enumerate(nodes) for j, y in enumerate(nodes)})

    def check(self):
        problems = []
        for x in self.nodes:
            if self.f[(x, x)] != 0:
                problems.append(f"f({x},{x}) = {self.f[(x, x)]} != 0")
        for x, y, z in product(self.nodes, repeat=3):
            if self.f[(x, y)] + self.f[(y, z)] < self.f[(x, z)]:
                problems.append(f"f({x},{y}) + f({y},{z}) < f({x},{z})")
        for x, y in product(self.nodes, repeat=2):
            if self.f[(x, y)] + self.f[(y, x)] < 0:
                problems.append(f"f({x},{y}) + f({y},{x}) < 0")
        return problems


def lemmefonction_solve(t: DistanceTable) -> dict:
    """Integer d with f(x, y) + d(x) - d(y) >= 0, by repeatedly adding the
    indicator of E_- = {x : f(x, y) < 0 for some y}."""
    problems = t.check()
    if problems:
        raise HypothesisViolated(problems[0])
    d = {x: 0 for x in t.nodes}
    budget = sum(-v for v in t.f.values() if v < 0)

    def fp(x, y):
        return t.f[(x, y)] + d[x] - d[y]

    for _ in range(budget + 1):
        neg = [x for x in t.nodes if any(fp(x, y) < 0 for y in t.nodes)]
        if not neg:
            return d
        for x in neg:
            d[x] += 1
    raise AssertionError("iteration did not terminate within its bound")


def shifted_table(t: DistanceTable, d: dict) -> DistanceTable:
    return DistanceTable(t.nodes, {(x, y): v + d[x] - d[y] for (x, y), v in t.f.items()})


# whole pipeline ---------------------------------------------------------------------


@dataclass
class PositiveRegrading:
    grading: Grading
    shifts: dict
    graph: WeightedDigraph


def normalize_positive(a: AlgebraRep, g: Grading):
    """Regrade so every degree is >= 0, or return a negative-cycle witness."""
    problems = validate_grading(a, g)
    if problems:
        from .errors import InvalidGrading

        raise InvalidGrading(problems[0])
    for v in labels_of(a):
        e = a.idempotents[v]
        if any(g[i] != 0 for i in range(a.dim) if e[i] != 0):
            raise SimplesNotDegreeZero(f"idempotent of {v} is not in degree 0")
    graph = ext_weight_graph(ext1_graded(a, g))
    witness = cycle_positivity(graph)
    if witness is not None:
        return witness
    dist = potential_shifts(graph)
    # an edge i -> j of weight w is an arrow in e_j A e_i; its new degree is w + d(i) - d(j)
    shifts = dict(dist)
    new = regrade_by_shifts(a, g, shifts)
    if min(new.degrees) < 0:
        raise AssertionError("regraded algebra still has negative degrees")
    return PositiveRegrading(new, shifts, graph)


__all__ = [
    "WeightedDigraph", "NegativeCycleWitness", "ext_weight_graph", "cycle_positivity",
    "potential_shifts", "DistanceTable", "lemmefonction_solve", "shifted_table",
    "normalize_positive", "PositiveRegrading",
]
