"""Decide whether a support family is the chain family of some chart.

A polynomial is realisable when some partial order on 1..n has exactly the
support terms as its maximal chains.  Any such order must make every term a
chain (so every pair inside a term is comparable) and must not compare a
pair that lies in no term (or some chain would grow past its term).  The
search therefore orients exactly the within-term pairs, propagating
transitive consequences and backtracking on a cycle or on a comparability
that escapes the within-term pair set; a final exact chain comparison
accepts or rejects each completed orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, SearchLimitExceeded
from .network import DEFAULT_CHAIN_CAP, ProjectNetwork, maximal_chains
from .tropical import TropicalPolynomial, make_poly, term_key

DEFAULT_SEARCH_LIMIT = 12


def eft_polynomial(network: ProjectNetwork, *,
                   cap: int = DEFAULT_CHAIN_CAP) -> TropicalPolynomial:
    """Earliest-finishing-time polynomial: one term per maximal chain."""
    return make_poly(network.n, maximal_chains(network, cap=cap))


@dataclass(frozen=True)
class CoveringPairObstruction:
    """Certificate that every index pair lies inside some term.

    Together with the full set 1..n not being a term, this rules out any
    realising order: all pairs comparable forces a total order, whose only
    maximal chain would be 1..n itself.
    """

    pair_cover: dict


def covering_pair_obstruction(poly: TropicalPolynomial):
    n = poly.n
    if frozenset(range(1, n + 1)) in poly.support:
        return None
    cover = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            witness = next(
                (t for t in poly.support if i in t and j in t), None
            )
            if witness is None:
                return None
            cover[(i, j)] = witness
    return CoveringPairObstruction(pair_cover=cover)


def verify_realisation(poly: TropicalPolynomial,
                       network: ProjectNetwork) -> bool:
    if network.n != poly.n:
        raise DimensionMismatch(
            "network and polynomial sizes differ",
            expected=poly.n,
            got=network.n,
        )
    return set(maximal_chains(network)) == set(poly.support)


def realise(poly: TropicalPolynomial, *,
            limit: int = DEFAULT_SEARCH_LIMIT) -> ProjectNetwork | None:
    """A chart with unit costs whose chain family equals the support.

    Returns None when no realising order exists.  Raises
    SearchLimitExceeded for n past ``limit`` instead of guessing.
    """
    n = poly.n
    if n > limit:
        raise SearchLimitExceeded(n, limit)

    ground = frozenset().union(*poly.support)
    if ground != frozenset(range(1, n + 1)):
        # An order's maximal chains cover every element.
        return None
    if covering_pair_obstruction(poly) is not None:
        return None

    pairs = sorted({
        (min(i, j), max(i, j))
        for term in poly.support
        for i in term
        for j in term
        if i != j
    })
    allowed = [0] * (n + 1)  # bitmask over 1..n, bit j set iff {i, j} allowed
    for i, j in pairs:
        allowed[i] |= 1 << j
        allowed[j] |= 1 << i

    # Reversing an order preserves its chain family, so the first branched
    # pair only needs one orientation.  Branch it first for determinism.
    first_term = poly.support[0]
    sym_pair = min(
        (min(i, j), max(i, j))
        for i in first_term
        for j in first_term
        if i != j
    ) if len(first_term) > 1 else None
    if sym_pair is not None:
        pairs.remove(sym_pair)
        pairs.insert(0, sym_pair)

    up = [0] * (n + 1)    # up[i] bit j: i < j
    down = [0] * (n + 1)  # down[i] bit j: j < i
    target = set(poly.support)

    def orient(i: int, j: int, log: list) -> bool:
        """Add i < j and close transitively; undo via ``log`` on failure."""
        if up[j] >> i & 1:
            return False
        anc = down[i] | (1 << i)
        desc = up[j] | (1 << j)
        a_mask = anc
        while a_mask:
            a = (a_mask & -a_mask).bit_length() - 1
            a_mask &= a_mask - 1
            new = desc & ~up[a] & ~(1 << a)
            if desc & (1 << a):
                return False  # cycle through a
            if new & ~allowed[a]:
                return False  # comparability outside every term
            b_mask = new
            while b_mask:
                b = (b_mask & -b_mask).bit_length() - 1
                b_mask &= b_mask - 1
                if up[b] >> a & 1:
                    return False  # b < a already: cycle
                up[a] |= 1 << b
                down[b] |= 1 << a
                log.append((a, b))
        return True

    def undo(log: list):
        for a, b in log:
            up[a] &= ~(1 << b)
            down[b] &= ~(1 << a)

    def leaf() -> ProjectNetwork | None:
        # Cover pairs: i < j with nothing strictly between.
        covers = frozenset(
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if up[i] >> j & 1 and not (up[i] & down[j])
        )
        net = ProjectNetwork(
            n=n, covers=covers, costs=tuple([Fraction(1)] * n)
        )
        if set(maximal_chains(net)) == target:
            return net
        return None

    def search(k: int) -> ProjectNetwork | None:
        if k == len(pairs):
            return leaf()
        i, j = pairs[k]
        if up[i] >> j & 1 or up[j] >> i & 1:
            return search(k + 1)
        orientations = ((i, j),) if k == 0 else ((i, j), (j, i))
        for a, b in orientations:
            log: list = []
            if orient(a, b, log):
                found = search(k + 1)
                if found is not None:
                    return found
            undo(log)
        return None

    witness = search(0)
    if witness is not None:
        assert verify_realisation(poly, witness)
    return witness
