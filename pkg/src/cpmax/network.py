"""Project networks as Hasse diagrams of finite posets.

Activities are numbered 1..n.  A cover arc (i, j) says activity i is an
immediate predecessor of j.  A stored network is always simple, acyclic and
free of short-cuts, so its arc set is exactly the transitive reduction of
the dependency order.  ``validate_network`` enforces this (strict mode), or
repairs redundant arcs when asked; the poset view and the chain enumeration
below are the bridge from charts to the tropical machinery.

Virtual start/end activities are never stored: sources and sinks play their
role.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadParameters,
    ChainCapExceeded,
    CycleDetected,
    DuplicateArc,
    IndexOutOfRange,
    NegativeCost,
    SelfLoop,
    ShortCut,
)
from .serialize import format_rational, parse_rational

DEFAULT_CHAIN_CAP = 100_000


@dataclass(frozen=True)
class ProjectNetwork:
    """An activity-on-node chart: cover arcs plus nonnegative time costs."""

    n: int
    covers: frozenset[tuple[int, int]]
    costs: tuple[Fraction, ...]
    names: tuple[str, ...] | None = None

    def cost(self, i: int) -> Fraction:
        return self.costs[i - 1]

    def name(self, i: int) -> str:
        if self.names is None:
            return str(i)
        return self.names[i - 1]

    def sorted_covers(self) -> list[tuple[int, int]]:
        return sorted(self.covers)


@dataclass(frozen=True)
class Poset:
    """A finite partial order on 1..n, stored as the strict relation i < j."""

    n: int
    relation: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.relation:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise IndexOutOfRange((i, j), self.n)
            if i == j:
                raise BadParameters(f"strict relation contains ({i}, {i})")
            if (j, i) in self.relation:
                raise BadParameters(f"antisymmetry violated on ({i}, {j})")
        for i, j in self.relation:
            for k, l in self.relation:
                if j == k and (i, l) not in self.relation:
                    raise BadParameters(
                        f"transitivity violated: ({i},{j}) and ({k},{l})"
                    )

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.relation


def _adjacency(arcs, n: int) -> dict[int, list[int]]:
    succ: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for i, j in arcs:
        succ[i].append(j)
    for i in succ:
        succ[i].sort()
    return succ


def _find_cycle(succ: dict[int, list[int]]) -> list[int] | None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in succ}
    stack: list[int] = []

    def visit(v: int) -> list[int] | None:
        color[v] = GRAY
        stack.append(v)
        for w in succ[v]:
            if color[w] == GRAY:
                return stack[stack.index(w):]
            if color[w] == WHITE:
                found = visit(w)
                if found is not None:
                    return found
        stack.pop()
        color[v] = BLACK
        return None

    for v in sorted(succ):
        if color[v] == WHITE:
            found = visit(v)
            if found is not None:
                return found
    return None


def _closure(arcs, n: int) -> set[tuple[int, int]]:
    """Strict reachability along one or more arcs (Warshall)."""
    reach = {i: set() for i in range(1, n + 1)}
    for i, j in arcs:
        reach[i].add(j)
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            if k in reach[i]:
                reach[i] |= reach[k]
    return {(i, j) for i in reach for j in reach[i]}


def _bfs_path(succ: dict[int, list[int]], start: int, goal: int):
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in succ[v]:
                if w not in parent:
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt
    if goal not in parent:
        return None
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def normalize_shortcuts(arcs, n: int | None = None) -> frozenset[tuple[int, int]]:
    """Transitive reduction of an acyclic arc set; reachability unchanged."""
    arcs = {(int(i), int(j)) for i, j in arcs}
    if n is None:
        n = max((max(i, j) for i, j in arcs), default=0)
    succ = _adjacency(arcs, n)
    cycle = _find_cycle(succ)
    if cycle is not None:
        raise CycleDetected(cycle)
    reach = _closure(arcs, n)
    return frozenset(
        (i, j)
        for i, j in reach
        if not any((i, k) in reach and (k, j) in reach for k in range(1, n + 1))
    )


def validate_network(arcs, costs, names=None, *,
                     normalize: bool = False) -> ProjectNetwork:
    """Check all chart invariants and build a ProjectNetwork.

    With ``normalize=True`` redundant (short-cut) arcs are dropped instead
    of rejected; every other defect is always an error.
    """
    cost_values = tuple(parse_rational(c) for c in costs)
    n = len(cost_values)
    if n == 0:
        raise BadParameters("a project network needs at least one activity")
    for i, c in enumerate(cost_values, start=1):
        if c < 0:
            raise NegativeCost(i, cost=format_rational(c))
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != n:
            raise BadParameters(f"{len(names)} names for {n} activities")

    arc_list = [(int(i), int(j)) for i, j in arcs]
    for i, j in arc_list:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange((i, j), n)
        if i == j:
            raise SelfLoop(i)
    seen = set()
    for a in arc_list:
        if a in seen:
            raise DuplicateArc(*a)
        seen.add(a)

    succ = _adjacency(seen, n)
    cycle = _find_cycle(succ)
    if cycle is not None:
        raise CycleDetected(cycle)

    if normalize:
        covers = normalize_shortcuts(seen, n)
    else:
        reach = _closure(seen, n)
        for i, j in sorted(seen):
            for k in succ[i]:
                if k != j and (k, j) in reach:
                    path = [i] + _bfs_path(succ, k, j)
                    raise ShortCut(i, j, path)
        covers = frozenset(seen)
    return ProjectNetwork(n=n, covers=covers, costs=cost_values, names=names)


def to_poset(network: ProjectNetwork) -> Poset:
    """Reachability along cover arcs, as a strict partial order."""
    return Poset(network.n, frozenset(_closure(network.covers, network.n)))


def to_hasse(poset: Poset) -> frozenset[tuple[int, int]]:
    """Cover pairs of the order: i < j with nothing strictly between."""
    rel = poset.relation
    return frozenset(
        (i, j)
        for i, j in rel
        if not any((i, k) in rel and (k, j) in rel for k in range(1, poset.n + 1))
    )


def linear_extension(poset: Poset) -> list[int]:
    """A monotone relabeling: i < j in the order implies sigma(i) < sigma(j).

    Elements are layered by longest-chain distance from an implicit common
    minimum, ties broken by ascending index; ``result[i-1]`` is the new
    label of element i.
    """
    n = poset.n
    preds = {x: [y for y in range(1, n + 1) if poset.less(y, x)] for x in
             range(1, n + 1)}
    height: dict[int, int] = {}
    remaining = set(range(1, n + 1))
    while remaining:
        ready = [x for x in remaining if all(p in height for p in preds[x])]
        for x in ready:
            height[x] = 1 + max((height[p] for p in preds[x]), default=-1)
            remaining.discard(x)
    order = sorted(range(1, n + 1), key=lambda x: (height[x], x))
    sigma = [0] * n
    for new_label, x in enumerate(order, start=1):
        sigma[x - 1] = new_label
    return sigma


def maximal_chains(network: ProjectNetwork, *,
                   cap: int = DEFAULT_CHAIN_CAP) -> tuple[frozenset[int], ...]:
    """All maximal totally-ordered activity sets, as source-to-sink paths.

    Output is sorted lexicographically (each chain as its sorted index
    tuple).  Raises ChainCapExceeded past ``cap`` chains.
    """
    n = network.n
    succ = _adjacency(network.covers, n)
    has_pred = {j for _, j in network.covers}
    sources = [i for i in range(1, n + 1) if i not in has_pred]
    chains: list[frozenset[int]] = []

    def walk(v: int, path: list[int]):
        if not succ[v]:
            if len(chains) >= cap:
                raise ChainCapExceeded(cap)
            chains.append(frozenset(path))
            return
        for w in succ[v]:
            path.append(w)
            walk(w, path)
            path.pop()

    for s in sources:
        walk(s, [s])
    chains.sort(key=lambda c: tuple(sorted(c)))
    return tuple(chains)


def network_to_json(network: ProjectNetwork) -> dict:
    activities = []
    for i in range(1, network.n + 1):
        entry: dict = {"id": i}
        if network.names is not None:
            entry["name"] = network.names[i - 1]
        entry["cost"] = format_rational(network.cost(i))
        activities.append(entry)
    return {
        "activities": activities,
        "arcs": [list(a) for a in network.sorted_covers()],
    }


def network_from_json(obj, *, normalize: bool = False) -> ProjectNetwork:
    if not isinstance(obj, dict) or "activities" not in obj:
        raise BadParameters("network JSON needs an 'activities' list")
    acts = obj["activities"]
    if not isinstance(acts, list) or not acts:
        raise BadParameters("empty or malformed 'activities'")
    n = len(acts)
    by_id = {}
    for a in acts:
        if not isinstance(a, dict) or "id" not in a or "cost" not in a:
            raise BadParameters("each activity needs 'id' and 'cost'")
        i = a["id"]
        if not isinstance(i, int) or not 1 <= i <= n or i in by_id:
            raise BadParameters(f"activity ids must be exactly 1..{n}")
        by_id[i] = a
    costs = [by_id[i]["cost"] for i in range(1, n + 1)]
    if any("name" in by_id[i] for i in range(1, n + 1)):
        names = tuple(str(by_id[i].get("name", i)) for i in range(1, n + 1))
    else:
        names = None
    arcs = obj.get("arcs", [])
    if not isinstance(arcs, list) or not all(
        isinstance(a, (list, tuple)) and len(a) == 2 for a in arcs
    ):
        raise BadParameters("'arcs' must be a list of [i, j] pairs")
    return validate_network(arcs, costs, names, normalize=normalize)


def network_to_dot(network: ProjectNetwork) -> str:
    lines = ["digraph project {", "  rankdir=LR;"]
    for i in range(1, network.n + 1):
        label = f"{network.name(i)} ({format_rational(network.cost(i))})"
        lines.append(f'  {i} [label="{label}"];')
    for i, j in network.sorted_covers():
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
