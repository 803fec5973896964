"""Exact feasibility of homogeneous linear systems over the rationals.

Systems are conic: equalities <a,t> = 0, weak rows <a,t> >= 0 and strict
rows <a,t> > 0, with t otherwise free.  Strictness is decided exactly by
the slack reduction: replace every strict row by <a,t> >= 1.  Because all
constraints are conic, any point satisfying the slack-1 system satisfies
the strict one, and any strictly feasible point scales up to slack 1, so
the two systems are feasible together.

The decision procedure is a phase-1 simplex over Fraction arithmetic with
Bland's rule; no floating point anywhere.  Returned witnesses are verified
by substitution and scaled to integer coordinates with gcd 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadParameters, DimensionMismatch

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    equalities: tuple[Vector, ...] = ()
    weak: tuple[Vector, ...] = ()
    strict: tuple[Vector, ...] = ()

    def rows(self):
        return self.equalities + self.weak + self.strict


def make_system(n: int, equalities=(), weak=(), strict=()) -> ConstraintSystem:
    if not isinstance(n, int) or n < 1:
        raise BadParameters(f"dimension must be a positive integer, got {n!r}")

    def coerce(rows):
        out = []
        for row in rows:
            vec = tuple(Fraction(x) for x in row)
            if len(vec) != n:
                raise DimensionMismatch(
                    f"constraint has {len(vec)} coefficients in dimension {n}",
                    expected=n,
                    got=len(vec),
                )
            out.append(vec)
        return tuple(out)

    return ConstraintSystem(n, coerce(equalities), coerce(weak), coerce(strict))


def dot(a, b) -> Fraction:
    return sum(x * y for x, y in zip(a, b))


def satisfies(system: ConstraintSystem, point) -> bool:
    t = tuple(Fraction(x) for x in point)
    if len(t) != system.n:
        return False
    return (
        all(dot(a, t) == 0 for a in system.equalities)
        and all(dot(a, t) >= 0 for a in system.weak)
        and all(dot(a, t) > 0 for a in system.strict)
    )


def normalize_witness(point) -> Vector:
    """Scale by a positive rational to integer coordinates with gcd 1."""
    t = [Fraction(x) for x in point]
    if all(x == 0 for x in t):
        return tuple(t)
    denom_lcm = 1
    for x in t:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in t]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


def feasible(system: ConstraintSystem, *, hints=()) -> Vector | None:
    """A rational point satisfying every constraint, or None.

    ``hints`` are candidate points tried by exact substitution before the
    simplex runs; a verified hint short-circuits the search.
    """
    for h in hints:
        h = tuple(Fraction(x) for x in h)
        if len(h) == system.n and satisfies(system, h):
            return normalize_witness(h)
    point = _phase1(system)
    if point is None:
        return None
    point = normalize_witness(point)
    assert satisfies(system, point), "simplex returned an invalid witness"
    return point


def cone_dimension(system: ConstraintSystem, *, hints=()) -> int:
    """Dimension of {t : equalities, weak} in dimension n.

    Equals n minus the rank of the explicit plus implicit equalities; a
    weak row is an implicit equality when its strict version is infeasible
    alongside the rest of the system.
    """
    if system.strict:
        raise BadParameters("cone_dimension takes a system without strict rows")
    implicit: list[Vector] = []
    # One relatively interior point witnesses that nothing is implicit.
    all_strict = ConstraintSystem(system.n, system.equalities, (), system.weak)
    if system.weak and feasible(all_strict, hints=hints) is None:
        for idx, row in enumerate(system.weak):
            rest = system.weak[:idx] + system.weak[idx + 1:]
            probe = ConstraintSystem(system.n, system.equalities, rest, (row,))
            if feasible(probe, hints=hints) is None:
                implicit.append(row)
    return system.n - _rank(list(system.equalities) + implicit)


def _rank(rows: list[Vector]) -> int:
    mat = [list(r) for r in rows if any(x != 0 for x in r)]
    rank = 0
    col = 0
    width = len(mat[0]) if mat else 0
    while mat and col < width and rank < len(mat):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col] / pv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def _phase1(system: ConstraintSystem) -> Vector | None:
    """Find t free with E t = 0, W t >= 0, S t >= 1 via phase-1 simplex.

    Standard form: t = u - v with u, v >= 0, one surplus per inequality,
    one artificial per row; minimize the artificial sum with Bland's rule.
    """
    n = system.n
    eq, weak, strict = system.equalities, system.weak, system.strict
    m = len(eq) + len(weak) + len(strict)
    if m == 0:
        return tuple([Fraction(0)] * n)
    n_ineq = len(weak) + len(strict)
    ncols = 2 * n + n_ineq + m  # u, v, surpluses, artificials

    zero = Fraction(0)
    one = Fraction(1)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    surplus_at = 2 * n
    art_at = 2 * n + n_ineq

    all_rows = [(a, "eq") for a in eq] + [(a, "weak") for a in weak] + [
        (a, "strict") for a in strict
    ]
    ineq_seen = 0
    for r, (a, kind) in enumerate(all_rows):
        row = [zero] * ncols
        for j, coef in enumerate(a):
            if coef:
                row[j] = coef
                row[n + j] = -coef
        if kind != "eq":
            row[surplus_at + ineq_seen] = -one
            ineq_seen += 1
        row[art_at + r] = one
        rows.append(row)
        rhs.append(one if kind == "strict" else zero)

    basis = [art_at + r for r in range(m)]
    # Reduced costs for min sum of artificials with the artificial basis:
    # cost[j] = -(column sum) on structural columns, 0 on artificials.
    cost = [zero] * ncols
    for j in range(art_at):
        s = sum(rows[r][j] for r in range(m))
        cost[j] = -s
    objective = -sum(rhs)

    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            coef = rows[r][enter]
            if coef > 0:
                ratio = rhs[r] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]
                ):
                    best = ratio
                    leave = r
        if leave is None:
            # Phase-1 objective is bounded below by zero; cannot happen.
            raise AssertionError("phase-1 simplex unbounded")
        pv = rows[leave][enter]
        rows[leave] = [x / pv for x in rows[leave]]
        rhs[leave] /= pv
        prow = rows[leave]
        prhs = rhs[leave]
        nz = [j for j, x in enumerate(prow) if x != 0]
        for r in range(m):
            if r == leave:
                continue
            f = rows[r][enter]
            if f:
                rr = rows[r]
                for j in nz:
                    rr[j] -= f * prow[j]
                rhs[r] -= f * prhs
        f = cost[enter]
        if f:
            for j in nz:
                cost[j] -= f * prow[j]
            objective -= f * prhs
        basis[leave] = enter

    if objective != 0:
        return None
    values = [zero] * ncols
    for r, b in enumerate(basis):
        values[b] = rhs[r]
    return tuple(values[j] - values[n + j] for j in range(n))


def system_to_text(system: ConstraintSystem) -> str:
    """Debug dump, one constraint per line."""
    def fmt(a, rel):
        coefs = " ".join(str(x) for x in a)
        return f"[{coefs}] {rel} 0"

    lines = [fmt(a, "=") for a in system.equalities]
    lines += [fmt(a, ">=") for a in system.weak]
    lines += [fmt(a, ">") for a in system.strict]
    return "\n".join(lines) + ("\n" if lines else "")
