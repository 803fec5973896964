"""Seeded random instance generators shared across the test modules."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from cpmax import (
    ConstraintSystem,
    TropicalPolynomial,
    make_poly,
    normalize_shortcuts,
    validate_network,
)


def rand_antichain(rng, n: int | None = None, max_terms: int = 6) -> TropicalPolynomial:
    """A random inclusion-maximal family of nonempty subsets of 1..n."""
    if n is None:
        n = rng.randint(2, 6)
    terms = set()
    for _ in range(rng.randint(1, max_terms)):
        size = rng.randint(1, n)
        terms.add(frozenset(rng.sample(range(1, n + 1), size)))
    maximal = [t for t in terms if not any(t < u for u in terms)]
    return make_poly(n, maximal)


def rand_homogeneous(rng, n: int | None = None,
                     max_terms: int = 6) -> TropicalPolynomial:
    """Random antichain with all terms the same size k < n."""
    if n is None:
        n = rng.randint(2, 6)
    k = rng.randint(1, n - 1)
    want = rng.randint(1, min(max_terms, comb(n, k)))
    terms = set()
    while len(terms) < want:
        terms.add(frozenset(rng.sample(range(1, n + 1), k)))
    return make_poly(n, terms)


def rand_dag_arcs(rng, n: int, p: float = 0.35) -> list[tuple[int, int]]:
    """Random DAG arcs: edges along a random topological order."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return [
        (perm[i], perm[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]


def rand_network(rng, n: int | None = None, *, unit_costs: bool = False):
    if n is None:
        n = rng.randint(1, 7)
    covers = normalize_shortcuts(rand_dag_arcs(rng, n), n)
    if unit_costs:
        costs = [1] * n
    else:
        costs = [Fraction(rng.randint(0, 24), rng.randint(1, 4)) for _ in range(n)]
    return validate_network(covers, costs)


def rand_system(rng, n: int | None = None) -> ConstraintSystem:
    """Random small conic system with a mix of row kinds."""
    if n is None:
        n = rng.randint(1, 5)

    def row():
        return tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))

    eq = tuple(row() for _ in range(rng.randint(0, 2)))
    weak = tuple(row() for _ in range(rng.randint(0, 3)))
    strict = tuple(row() for _ in range(rng.randint(0, 3)))
    return ConstraintSystem(n=n, equalities=eq, weak=weak, strict=strict)
