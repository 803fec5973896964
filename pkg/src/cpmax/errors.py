"""Error types shared across the toolkit.

Every error carries a machine-readable code (the class name) plus a detail
dict, so the CLI and the HTTP service can report failures uniformly.  Two
broad families matter to callers: ``InvalidInput`` (the model or query is
malformed) and ``LimitExceeded`` / ``OnWall`` style domain conditions (the
model is fine but the requested answer does not exist or is out of budget).
"""

from __future__ import annotations

from fractions import Fraction


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, (set, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


class ToolkitError(Exception):
    """Base class for all structured errors raised by this package."""

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.message = message
        self.detail = detail

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_json(self) -> dict:
        return {
            "error": self.code,
            "message": self.message,
            "detail": _jsonable(self.detail),
        }


class InvalidInput(ToolkitError):
    """The supplied model, query, or parameters are malformed."""


class SelfLoop(InvalidInput):
    def __init__(self, i: int):
        super().__init__(f"arc ({i}, {i}) is a self-loop", activity=i)


class DuplicateArc(InvalidInput):
    def __init__(self, i: int, j: int):
        super().__init__(f"arc ({i}, {j}) appears more than once", arc=[i, j])


class CycleDetected(InvalidInput):
    def __init__(self, cycle):
        cycle = list(cycle)
        super().__init__(f"dependency cycle {cycle}", cycle=cycle)
        self.cycle = cycle


class ShortCut(InvalidInput):
    def __init__(self, i: int, j: int, path):
        path = list(path)
        super().__init__(
            f"arc ({i}, {j}) is a short-cut: longer route {path} exists",
            arc=[i, j],
            path=path,
        )
        self.arc = (i, j)
        self.path = path


class NegativeCost(InvalidInput):
    def __init__(self, i: int, cost=None):
        super().__init__(f"activity {i} has a negative cost", activity=i,
                         cost=cost)


class EmptySupport(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput):
    def __init__(self, index, n: int):
        super().__init__(f"index {index} outside 1..{n}", index=index, n=n)


class DivisibleTerms(InvalidInput):
    def __init__(self, smaller: frozenset, larger: frozenset):
        super().__init__(
            f"term {sorted(smaller)} is contained in term {sorted(larger)}",
            smaller=sorted(smaller),
            larger=sorted(larger),
        )
        self.smaller = smaller
        self.larger = larger


class FullTerm(InvalidInput):
    def __init__(self, n: int):
        super().__init__(f"support contains the full set 1..{n}; complement "
                         "would be empty", n=n)


class BadParameters(InvalidInput):
    pass


class UnknownTerm(InvalidInput):
    def __init__(self, term):
        super().__init__(f"{sorted(term)} is not a term of the polynomial",
                         term=sorted(term))


class VertexSetMismatch(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    def __init__(self, message: str, expected=None, got=None):
        super().__init__(message, expected=expected, got=got)


class LimitExceeded(ToolkitError):
    """A configured budget stopped the computation before an answer."""


class ChainCapExceeded(LimitExceeded):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} maximal chains", cap=cap)


class SearchLimitExceeded(LimitExceeded):
    def __init__(self, n: int, limit: int):
        super().__init__(
            f"search over posets on {n} elements exceeds the configured "
            f"limit {limit}; not a statement about realisability",
            n=n,
            limit=limit,
        )


class TermBudgetExceeded(LimitExceeded):
    def __init__(self, terms: int, budget: int):
        super().__init__(
            f"polynomial has {terms} terms, over the graph budget {budget}",
            terms=terms,
            budget=budget,
        )


class OnWall(ToolkitError):
    """The current cost vector already has tied critical paths."""

    def __init__(self, tied):
        tied = [sorted(t) for t in tied]
        super().__init__(
            f"cost vector lies on a wall: tied terms {tied}", tied=tied
        )
