"""Chamber decomposition of cost space and the graphs that summarize it.

Each term I of a polynomial owns a closed cone C_I of cost vectors where
its value is weakly maximal; interiors of these cones tile the nonnegative
orthant away from the tie locus.  Two terms are adjacent when their cones
share a wall of dimension n-1.  The adjacency test used here asks for a
cost vector with every coordinate strictly positive, the two terms exactly
tied, and every other term strictly beaten.  Such a point is a relatively
interior wall point, and conversely a wall of full rank must contain one:
the antichain condition keeps the tie hyperplane of I and J out of every
coordinate hyperplane and every third tie hyperplane, so the degenerate
locus inside the wall has measure zero.  One exact feasibility call per
pair therefore decides adjacency.

Newton-skeleton edges use the same kernel without the positivity rows and
with sign-free coefficients: a segment between two exponent points is a
polytope edge exactly when some linear functional is tied on the two
points and strictly smaller on all others.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import BadParameters, UnknownTerm, VertexSetMismatch
from .feasibility import ConstraintSystem, cone_dimension, feasible
from .tropical import TropicalPolynomial, term_key

Label = frozenset


@dataclass(frozen=True)
class LabeledGraph:
    """Undirected graph whose vertices are index sets (polynomial terms)."""

    n: int
    vertices: tuple[Label, ...]
    edges: frozenset[frozenset]

    def has_edge(self, a: Iterable[int], b: Iterable[int]) -> bool:
        return frozenset((frozenset(a), frozenset(b))) in self.edges

    def degree(self, v: Iterable[int]) -> int:
        v = frozenset(v)
        return sum(1 for e in self.edges if v in e)

    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges as index pairs into the canonical vertex order."""
        index = {v: k for k, v in enumerate(self.vertices)}
        pairs = sorted(
            tuple(sorted((index[a], index[b]))) for a, b in map(tuple, self.edges)
        )
        return pairs


def make_graph(n: int, vertices, edges) -> LabeledGraph:
    verts = tuple(sorted({frozenset(v) for v in vertices}, key=term_key))
    vert_set = set(verts)
    edge_set = set()
    for e in edges:
        pair = frozenset(frozenset(v) for v in e)
        if len(pair) != 2:
            raise BadParameters(f"edge {sorted(map(sorted, e))} is not a pair")
        if not pair <= vert_set:
            raise BadParameters("edge references a missing vertex")
        edge_set.add(pair)
    return LabeledGraph(n=n, vertices=verts, edges=frozenset(edge_set))


def complete_graph(n: int, vertices) -> LabeledGraph:
    verts = [frozenset(v) for v in vertices]
    edges = [
        (a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
    ]
    return make_graph(n, verts, edges)


class ChamberLocation(NamedTuple):
    kind: str  # "interior" or "wall"
    terms: tuple[Label, ...]


def chamber_membership(poly: TropicalPolynomial, costs) -> ChamberLocation:
    """Interior chamber of the unique best term, or the wall tie set."""
    _, argmax = poly.evaluate(costs)
    if len(argmax) == 1:
        return ChamberLocation("interior", argmax)
    return ChamberLocation("wall", argmax)


def interior_point(poly: TropicalPolynomial, term) -> tuple[Fraction, ...]:
    """A point with all coordinates positive where ``term`` wins strictly.

    The indicator of the term plus a uniform bump below 1/n keeps every
    rival at least 1/2 behind.
    """
    term = _require_term(poly, term)
    eps = Fraction(1, 2 * poly.n)
    return tuple(
        (1 + eps) if i in term else eps for i in range(1, poly.n + 1)
    )


def _require_term(poly: TropicalPolynomial, term) -> Label:
    t = frozenset(term)
    if t not in set(poly.support):
        raise UnknownTerm(t)
    return t


def _difference_vector(n: int, a: Label, b: Label) -> tuple[Fraction, ...]:
    one = Fraction(1)
    return tuple(
        (one if i in a else 0) - (one if i in b else 0)
        for i in range(1, n + 1)
    )


def _unit(n: int, m: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if i == m else 0) for i in range(1, n + 1))


def wall_system(poly: TropicalPolynomial, term_i, term_j) -> ConstraintSystem:
    """Positivity, exact tie of the two terms, all other terms beaten."""
    I, J = _require_term(poly, term_i), _require_term(poly, term_j)
    if I == J:
        raise BadParameters("adjacency needs two distinct terms")
    n = poly.n
    strict = [_unit(n, m) for m in range(1, n + 1)]
    strict += [
        _difference_vector(n, I, K)
        for K in poly.support
        if K not in (I, J)
    ]
    return ConstraintSystem(
        n=n,
        equalities=(_difference_vector(n, I, J),),
        strict=tuple(strict),
    )


def newton_edge_system(poly: TropicalPolynomial, term_i,
                       term_j) -> ConstraintSystem:
    """Tie functional system for a polytope edge; coefficients sign-free."""
    I, J = _require_term(poly, term_i), _require_term(poly, term_j)
    if I == J:
        raise BadParameters("an edge needs two distinct terms")
    n = poly.n
    strict = tuple(
        _difference_vector(n, I, K)
        for K in poly.support
        if K not in (I, J)
    )
    return ConstraintSystem(
        n=n,
        equalities=(_difference_vector(n, I, J),),
        strict=strict,
    )


def _wall_hints(poly: TropicalPolynomial, I: Label, J: Label, *,
                signed: bool):
    """Cheap candidate witnesses for the wall systems.

    Weights balance the tie by construction; shared indices get a large
    value and indices outside both terms get a small positive value (or a
    large negative one in the sign-free case).  Verified exactly by the
    caller, so misses only cost a simplex run.
    """
    n = poly.n
    only_i = I - J
    only_j = J - I
    shared = I & J
    d, e = len(only_i), len(only_j)
    bigs = (Fraction(n * n + 1), Fraction(1), Fraction(d * e + n))
    if signed:
        smalls = (Fraction(-(n ** 3)), Fraction(-1), Fraction(0))
    else:
        smalls = (Fraction(1, 2 * n * n), Fraction(1, (2 * n) ** 3))
    for big in bigs:
        for small in smalls:
            point = []
            for m in range(1, n + 1):
                if m in only_i:
                    point.append(Fraction(e))
                elif m in only_j:
                    point.append(Fraction(d))
                elif m in shared:
                    point.append(big)
                else:
                    point.append(small)
            yield tuple(point)


def adjacency_test(poly: TropicalPolynomial, term_i, term_j) -> bool:
    I, J = _require_term(poly, term_i), _require_term(poly, term_j)
    system = wall_system(poly, I, J)
    hints = _wall_hints(poly, I, J, signed=False)
    return feasible(system, hints=hints) is not None


def newton_edge_test(poly: TropicalPolynomial, term_i, term_j) -> bool:
    I, J = _require_term(poly, term_i), _require_term(poly, term_j)
    system = newton_edge_system(poly, I, J)
    hints = _wall_hints(poly, I, J, signed=True)
    return feasible(system, hints=hints) is not None


def adjacency_graph(poly: TropicalPolynomial) -> LabeledGraph:
    """Vertices are terms; edges join chambers sharing an (n-1)-wall."""
    verts = poly.support
    edges = [
        (a, b)
        for i, a in enumerate(verts)
        for b in verts[i + 1:]
        if adjacency_test(poly, a, b)
    ]
    return make_graph(poly.n, verts, edges)


def newton_skeleton(poly: TropicalPolynomial) -> LabeledGraph:
    """1-skeleton of the convex hull of the term indicator points.

    Every term is a hull vertex (antichain supports guarantee it), so the
    vertex sets of the adjacency graph and the skeleton always agree.
    """
    verts = poly.support
    edges = [
        (a, b)
        for i, a in enumerate(verts)
        for b in verts[i + 1:]
        if newton_edge_test(poly, a, b)
    ]
    return make_graph(poly.n, verts, edges)


def chamber_cone_dimension(poly: TropicalPolynomial, term) -> int:
    """Dimension of the closed chamber of ``term`` inside the orthant."""
    I = _require_term(poly, term)
    n = poly.n
    weak = [_unit(n, m) for m in range(1, n + 1)]
    weak += [
        _difference_vector(n, I, K) for K in poly.support if K != I
    ]
    system = ConstraintSystem(n=n, weak=tuple(weak))
    return cone_dimension(system, hints=(interior_point(poly, I),))


def cartesian_product(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Box product; right-hand labels shift past the left variable count.

    An edge changes exactly one side, along an edge of that side's graph.
    """
    shift = g1.n

    def relabel(v: Label) -> Label:
        return frozenset(i + shift for i in v)

    labels = [a | relabel(b) for a in g1.vertices for b in g2.vertices]
    edges = []
    for a1 in g1.vertices:
        for b1 in g2.vertices:
            for a2 in g1.vertices:
                for b2 in g2.vertices:
                    v = a1 | relabel(b1)
                    w = a2 | relabel(b2)
                    if v == w:
                        continue
                    if (a1 == a2 and g2.has_edge(b1, b2)) or (
                        b1 == b2 and g1.has_edge(a1, a2)
                    ):
                        edges.append((v, w))
    return make_graph(g1.n + g2.n, labels, edges)


def _check_same_vertices(g1: LabeledGraph, g2: LabeledGraph):
    if set(g1.vertices) != set(g2.vertices):
        raise VertexSetMismatch(
            "graphs have different vertex sets",
            left=[sorted(v) for v in g1.vertices],
            right=[sorted(v) for v in g2.vertices],
        )


def graph_equal(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    _check_same_vertices(g1, g2)
    return g1.edges == g2.edges


def is_subgraph(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    _check_same_vertices(g1, g2)
    return g1.edges <= g2.edges


def is_complete(g: LabeledGraph) -> bool:
    v = len(g.vertices)
    return len(g.edges) == v * (v - 1) // 2


def degree_sequence(g: LabeledGraph) -> tuple[int, ...]:
    """Vertex degrees as a sorted multiset (descending)."""
    return tuple(sorted((g.degree(v) for v in g.vertices), reverse=True))


def relabel_vertices(g: LabeledGraph, mapping) -> LabeledGraph:
    """Apply a label-to-label mapping to vertices and edges."""
    new_verts = [mapping(v) for v in g.vertices]
    if len(set(new_verts)) != len(new_verts):
        raise BadParameters("relabeling collapses vertices")
    new_edges = [
        tuple(mapping(v) for v in e) for e in map(tuple, g.edges)
    ]
    return make_graph(g.n, new_verts, new_edges)


def complement_relabel(g: LabeledGraph) -> LabeledGraph:
    full = frozenset(range(1, g.n + 1))
    return relabel_vertices(g, lambda v: full - v)


def graph_to_json(g: LabeledGraph) -> dict:
    return {
        "vertices": [list(term_key(v)) for v in g.vertices],
        "edges": [list(e) for e in g.sorted_edges()],
    }


def graph_from_json(obj, *, n: int | None = None) -> LabeledGraph:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise BadParameters("graph JSON needs 'vertices' and 'edges'")
    verts = [frozenset(v) for v in obj["vertices"]]
    if n is None:
        n = max((max(v) for v in verts if v), default=0)
    edges = [(verts[i], verts[j]) for i, j in obj["edges"]]
    return make_graph(n, verts, edges)


def graph_to_dot(g: LabeledGraph) -> str:
    def name(v: Label) -> str:
        return ",".join(str(i) for i in term_key(v))

    lines = ["graph chambers {"]
    for v in g.vertices:
        lines.append(f'  "{name(v)}";')
    for i, j in g.sorted_edges():
        lines.append(f'  "{name(g.vertices[i])}" -- "{name(g.vertices[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
