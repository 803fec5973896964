"""Independent reference implementations used only by the tests.

Each oracle deliberately takes a different route from the library code it
checks: reachability by fixpoint iteration instead of Warshall, feasibility
by Fourier-Motzkin elimination instead of simplex, realisability by
enumerating every partial order instead of backtracking, and adjacency by
sampling tie points instead of one feasibility call.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd


# ---------------------------------------------------------------- reachability

def brute_closure(pairs, n: int) -> set[tuple[int, int]]:
    """Strict reachability by repeated relational composition."""
    rel = set(pairs)
    while True:
        extra = {
            (a, d)
            for (a, b) in rel
            for (c, d) in rel
            if b == c and (a, d) not in rel
        }
        if not extra:
            return rel
        rel |= extra


def brute_reduction(closure: set[tuple[int, int]]) -> set[tuple[int, int]]:
    return {
        (i, j)
        for (i, j) in closure
        if not any((i, k) in closure and (k, j) in closure for k in
                   {a for p in closure for a in p})
    }


# ------------------------------------------------------------ Fourier-Motzkin

def _normalize_row(coeffs, strict):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c.numerator))
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    if g == 0:
        return (tuple(Fraction(0) for _ in coeffs), strict)
    scaled = tuple(c * denom / Fraction(g) for c in coeffs)
    return (scaled, strict)


def fm_feasible(system) -> bool:
    """Feasibility of a conic strict/weak/equality system by elimination."""
    n = system.n
    rows: dict[tuple, bool] = {}

    def add(coeffs, strict):
        coeffs, strict = _normalize_row(tuple(coeffs), strict)
        if all(c == 0 for c in coeffs):
            return not strict  # 0 > 0 is the contradiction
        key = coeffs
        rows[key] = rows.get(key, False) or strict
        return True

    ok = True
    for a in system.equalities:
        ok = ok and add(a, False)
        ok = ok and add((-x for x in a), False)
    for a in system.weak:
        ok = ok and add(a, False)
    for a in system.strict:
        ok = ok and add(a, True)
    if not ok:
        return False

    for var in range(n):
        pos, neg, zero = [], [], []
        for coeffs, strict in rows.items():
            if coeffs[var] > 0:
                pos.append((coeffs, strict))
            elif coeffs[var] < 0:
                neg.append((coeffs, strict))
            else:
                zero.append((coeffs, strict))
        rows = {}
        for coeffs, strict in zero:
            if not add(coeffs, strict):
                return False
        for p_coeffs, p_strict in pos:
            for n_coeffs, n_strict in neg:
                combined = tuple(
                    p * (-n_coeffs[var]) + q * p_coeffs[var]
                    for p, q in zip(p_coeffs, n_coeffs)
                )
                if not add(combined, p_strict or n_strict):
                    return False
    return True


# ------------------------------------------------------------- all the posets

@lru_cache(maxsize=None)
def natural_posets(n: int) -> tuple[frozenset, ...]:
    """Every strict partial order on 1..n that respects the integer order."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    index = {p: k for k, p in enumerate(pairs)}
    triples = [
        (index[(i, j)], index[(j, k)], index[(i, k)])
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for k in range(j + 1, n + 1)
    ]
    found = []
    for mask in range(1 << len(pairs)):
        if all(
            not ((mask >> a) & 1 and (mask >> b) & 1) or (mask >> c) & 1
            for a, b, c in triples
        ):
            found.append(frozenset(
                p for k, p in enumerate(pairs) if (mask >> k) & 1
            ))
    return tuple(found)


def poset_chain_family(relation: frozenset, n: int) -> frozenset:
    """Maximal chains of a strict order, as a frozenset of bitmasks."""
    covers = {
        (i, j)
        for (i, j) in relation
        if not any((i, k) in relation and (k, j) in relation
                   for k in range(1, n + 1))
    }
    succ = {i: sorted(j for (a, j) in covers if a == i) for i in range(1, n + 1)}
    has_pred = {j for (_, j) in covers}
    chains = []

    def walk(v, mask):
        mask |= 1 << (v - 1)
        if not succ[v]:
            chains.append(mask)
            return
        for w in succ[v]:
            walk(w, mask)

    for s in range(1, n + 1):
        if s not in has_pred:
            walk(s, 0)
    return frozenset(chains)


@lru_cache(maxsize=None)
def realisable_families(n: int) -> frozenset:
    return frozenset(
        poset_chain_family(rel, n) for rel in natural_posets(n)
    )


def brute_realisable(support, n: int) -> bool:
    """Does any labeled poset on 1..n have exactly this chain family?

    Every labeled poset is a relabeling of an integer-order-respecting one,
    so it suffices to match any permutation of the target family against
    the natural-poset families.
    """
    target = [sum(1 << (i - 1) for i in term) for term in support]
    families = realisable_families(n)
    for sigma in permutations(range(n)):
        remapped = frozenset(
            sum(1 << sigma[b] for b in range(n) if (mask >> b) & 1)
            for mask in target
        )
        if remapped in families:
            return True
    return False


# ------------------------------------------------------------- wall sampling

def adjacency_by_sampling(poly, term_i, term_j, rng, samples: int = 3000) -> bool:
    """Look for a tie point of exactly the two terms on their tie hyperplane.

    Coordinates other than one solved index are sampled positive in three
    stratified styles; any sampled point whose argmax is exactly {I, J}
    certifies a shared full-rank wall.
    """
    I, J = frozenset(term_i), frozenset(term_j)
    n = poly.n
    solve_at = min(I - J)
    i_rest = sorted((I - J) - {solve_at})
    j_only = sorted(J - I)
    others = [m for m in range(1, n + 1) if m != solve_at]
    for trial in range(samples):
        mode = trial % 3
        coords = {}
        for m in others:
            if mode == 0:
                coords[m] = Fraction(rng.randint(1, 12), rng.randint(1, 4))
            elif mode == 1:
                near = 2 if (m in I or m in J) else Fraction(1, 4)
                coords[m] = near + Fraction(rng.randint(0, 40), 97)
            else:
                coords[m] = Fraction(2 ** rng.randint(0, 5),
                                     2 ** rng.randint(0, 5))
        solved = sum(coords[m] for m in j_only) - sum(coords[m] for m in i_rest)
        if solved <= 0:
            continue
        coords[solve_at] = solved
        point = [coords[m] for m in range(1, n + 1)]
        _, argmax = poly.evaluate(point)
        if set(argmax) == {I, J}:
            return True
    return False
