"""Max-plus polynomials with unit coefficients and antichain support.

A term is a subset I of 1..n and stands for the sum of the costs it covers;
the polynomial value at a cost vector is the maximum over terms.  Support
families are kept canonical (terms sorted lexicographically) and must form
an antichain under inclusion: construction rejects a term contained in
another, because such a term could never be the sole maximum anywhere on
the nonnegative orthant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import (
    BadParameters,
    DimensionMismatch,
    DivisibleTerms,
    EmptySupport,
    FullTerm,
    IndexOutOfRange,
    NegativeCost,
)


def term_key(term: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(term))


class EvalResult(NamedTuple):
    value: Fraction
    argmax: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class TropicalPolynomial:
    n: int
    support: tuple[frozenset[int], ...]

    def terms(self) -> tuple[frozenset[int], ...]:
        return self.support

    def has_term(self, term: Iterable[int]) -> bool:
        return frozenset(term) in set(self.support)

    def evaluate(self, costs, *, signed: bool = False) -> EvalResult:
        """Value and argmax terms at a cost vector.

        Coordinates must be nonnegative unless ``signed`` is set; two or
        more argmax terms means the point lies on the tropical hypersurface.
        """
        t = _coerce_point(self, costs, signed=signed)
        values = [sum(t[i - 1] for i in term) for term in self.support]
        best = max(values)
        argmax = tuple(
            term for term, v in zip(self.support, values) if v == best
        )
        return EvalResult(best, argmax)

    def evaluate_min_plus(self, costs) -> EvalResult:
        """Min-plus value (earliest single route), signs unrestricted.

        Computed by negating the costs, evaluating max-plus, and negating
        back.
        """
        t = _coerce_point(self, costs, signed=True)
        value, argmin = self.evaluate([-x for x in t], signed=True)
        return EvalResult(-value, argmin)

    def is_homogeneous(self) -> bool:
        return len({len(term) for term in self.support}) == 1

    def degree(self) -> int:
        return max(len(term) for term in self.support)

    def dual(self) -> "TropicalPolynomial":
        """Complement every term.  Rejects a support containing 1..n."""
        full = frozenset(range(1, self.n + 1))
        if full in self.support:
            raise FullTerm(self.n)
        return make_poly(self.n, (full - term for term in self.support))

    def to_text(self) -> str:
        return "+".join(
            "{" + ",".join(str(i) for i in term_key(t)) + "}"
            for t in self.support
        )


def _coerce_point(poly: TropicalPolynomial, costs, *, signed: bool):
    t = [Fraction(x) for x in costs]
    if len(t) != poly.n:
        raise DimensionMismatch(
            f"cost vector has {len(t)} coordinates, polynomial has {poly.n}",
            expected=poly.n,
            got=len(t),
        )
    if not signed:
        for i, x in enumerate(t, start=1):
            if x < 0:
                raise NegativeCost(i, cost=str(x))
    return t


def make_poly(n: int, support) -> TropicalPolynomial:
    """Validate and canonicalize a support family.

    Duplicate terms merge silently (idempotent addition); a term strictly
    contained in another is rejected.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameters(f"variable count must be a positive integer, got {n!r}")
    terms = {frozenset(int(i) for i in term) for term in support}
    if not terms:
        raise EmptySupport("support has no terms")
    for term in terms:
        if not term:
            raise EmptySupport("support contains an empty term")
        for i in term:
            if not 1 <= i <= n:
                raise IndexOutOfRange(i, n)
    ordered = sorted(terms, key=term_key)
    for a, b in combinations(ordered, 2):
        if a < b:
            raise DivisibleTerms(a, b)
        if b < a:
            raise DivisibleTerms(b, a)
    return TropicalPolynomial(n=n, support=tuple(ordered))


def gen_fnk(n: int, k: int) -> TropicalPolynomial:
    """All k-element subsets of 1..n as terms."""
    if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
        raise BadParameters(f"need 1 <= k <= n, got n={n!r} k={k!r}")
    return make_poly(n, (frozenset(c) for c in combinations(range(1, n + 1), k)))


def product(f1: TropicalPolynomial, f2: TropicalPolynomial) -> TropicalPolynomial:
    """Tropical product on disjoint variables: f2 is shifted past f1.

    Terms of the product are unions of one term from each factor; the
    support stays an antichain automatically.
    """
    shift = f1.n
    terms = (
        a | frozenset(j + shift for j in b)
        for a in f1.support
        for b in f2.support
    )
    return make_poly(f1.n + f2.n, terms)


def poly_to_json(poly: TropicalPolynomial) -> dict:
    return {"n": poly.n, "terms": [list(term_key(t)) for t in poly.support]}


def poly_from_json(obj) -> TropicalPolynomial:
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise BadParameters("polynomial JSON needs 'n' and 'terms'")
    n = obj["n"]
    if not isinstance(n, int):
        raise BadParameters("'n' must be an integer")
    terms = obj["terms"]
    if not isinstance(terms, list) or not all(
        isinstance(t, (list, tuple)) for t in terms
    ):
        raise BadParameters("'terms' must be a list of index lists")
    return make_poly(n, terms)
