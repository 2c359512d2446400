"""Exact rational linear programming.

A small dense two-phase tableau simplex over :class:`fractions.Fraction`,
using Bland's smallest-index rule so that it always terminates and gives the
same answer for the same input.  It is sized for problems with a few dozen
variables and a few hundred rows.

Infeasible problems come back with a Farkas certificate read off the
phase-one duals.  Writing every constraint as ``g(x) = a.x - b`` and every
bound as ``l - x_j <= 0`` or ``x_j - u <= 0``, the certificate holds one
multiplier per row (``>= 0`` on ``<=`` rows, ``<= 0`` on ``>=`` rows, free on
``==`` rows) and one nonnegative multiplier per finite bound, such that the
weighted sum has zero coefficient on every variable and a strictly positive
constant term.  Summing the constraints that way yields ``0 >= gap > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

__all__ = [
    "LE",
    "EQ",
    "GE",
    "LpError",
    "Constraint",
    "LinearProgram",
    "FarkasCertificate",
    "LpOutcome",
    "solve",
]

LE, EQ, GE = "<=", "==", ">="
_RELATIONS = (LE, EQ, GE)

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


class LpError(ValueError):
    """Malformed linear program (bad arity, unknown relation, float data)."""


def _q(x) -> Fraction:
    if isinstance(x, float):
        raise LpError(f"float coefficient {x!r}; use int or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __init__(self, coeffs: Sequence, relation: str, rhs):
        if relation not in _RELATIONS:
            raise LpError(f"unknown relation {relation!r}")
        object.__setattr__(self, "coeffs", tuple(_q(c) for c in coeffs))
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "rhs", _q(rhs))

    def lhs(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * v for a, v in zip(self.coeffs, x)), Fraction(0))

    def holds(self, x: Sequence[Fraction]) -> bool:
        v = self.lhs(x)
        if self.relation == LE:
            return v <= self.rhs
        if self.relation == GE:
            return v >= self.rhs
        return v == self.rhs


@dataclass
class LinearProgram:
    """Maximize ``objective . x`` subject to ``constraints`` and per-variable bounds.

    ``None`` for a bound means unbounded on that side; variables are free
    unless a bound is given.
    """

    objective: Sequence
    constraints: list[Constraint] = field(default_factory=list)
    lower: Optional[list[Optional[Fraction]]] = None
    upper: Optional[list[Optional[Fraction]]] = None

    def __post_init__(self):
        self.objective = tuple(_q(c) for c in self.objective)
        n = len(self.objective)
        if self.lower is None:
            self.lower = [None] * n
        if self.upper is None:
            self.upper = [None] * n
        self.lower = [None if v is None else _q(v) for v in self.lower]
        self.upper = [None if v is None else _q(v) for v in self.upper]

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def add(self, coeffs: Sequence, relation: str, rhs) -> "LinearProgram":
        self.constraints.append(Constraint(coeffs, relation, rhs))
        return self

    def validate(self) -> None:
        n = self.num_vars
        if n == 0:
            raise LpError("linear program has no variables")
        if len(self.lower) != n or len(self.upper) != n:
            raise LpError(f"bounds must have one entry per variable ({n})")
        for i, con in enumerate(self.constraints):
            if len(con.coeffs) != n:
                raise LpError(f"constraint {i} has {len(con.coeffs)} coefficients, expected {n}")

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.num_vars:
            return False
        for v, lo, hi in zip(x, self.lower, self.upper):
            if lo is not None and v < lo:
                return False
            if hi is not None and v > hi:
                return False
        return all(con.holds(x) for con in self.constraints)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), Fraction(0))


@dataclass(frozen=True)
class FarkasCertificate:
    rows: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]

    def combination(self, lp: LinearProgram) -> tuple[tuple[Fraction, ...], Fraction]:
        """Coefficient vector and constant term of the weighted constraint sum."""
        n = lp.num_vars
        coef = [Fraction(0)] * n
        const = Fraction(0)
        for y, con in zip(self.rows, lp.constraints):
            if y:
                for j, a in enumerate(con.coeffs):
                    coef[j] += y * a
                const -= y * con.rhs
        for j in range(n):
            if self.lower[j]:
                coef[j] -= self.lower[j]
                const += self.lower[j] * lp.lower[j]
            if self.upper[j]:
                coef[j] += self.upper[j]
                const -= self.upper[j] * lp.upper[j]
        return tuple(coef), const

    def verify(self, lp: LinearProgram) -> bool:
        if len(self.rows) != len(lp.constraints):
            return False
        if len(self.lower) != lp.num_vars or len(self.upper) != lp.num_vars:
            return False
        for y, con in zip(self.rows, lp.constraints):
            if con.relation == LE and y < 0:
                return False
            if con.relation == GE and y > 0:
                return False
        for j in range(lp.num_vars):
            if self.lower[j] < 0 or (self.lower[j] and lp.lower[j] is None):
                return False
            if self.upper[j] < 0 or (self.upper[j] and lp.upper[j] is None):
                return False
        coef, const = self.combination(lp)
        return all(c == 0 for c in coef) and const > 0


@dataclass(frozen=True)
class LpOutcome:
    status: str
    x: Optional[tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None
    certificate: Optional[FarkasCertificate] = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def infeasible(self) -> bool:
        return self.status == INFEASIBLE

    @property
    def unbounded(self) -> bool:
        return self.status == UNBOUNDED


class _Tableau:
    """Dense tableau ``[A | b]`` with a maximization cost row kept in ``obj``.

    ``obj[j]`` is the reduced cost ``c_B B^-1 A_j - c_j``; a negative entry
    marks an improving column.  ``obj[-1]`` is the current objective value.
    """

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.obj: list[Fraction] = []

    def set_cost(self, cost: list[Fraction]) -> None:
        width = len(self.rows[0]) if self.rows else len(cost) + 1
        obj = [-c for c in cost] + [Fraction(0)] * (width - len(cost))
        for row, bv in zip(self.rows, self.basis):
            cb = cost[bv]
            if cb:
                for j, v in enumerate(row):
                    if v:
                        obj[j] += cb * v
        self.obj = obj

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        pv = prow[c]
        if pv != 1:
            prow = [v / pv for v in prow]
            self.rows[r] = prow
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                if f:
                    for j, v in nz:
                        row[j] -= f * v
        f = self.obj[c]
        if f:
            for j, v in nz:
                self.obj[j] -= f * v
        self.basis[r] = c

    def run(self, allowed: int) -> bool:
        """Iterate to optimality over columns ``< allowed``; False if unbounded."""
        while True:
            enter = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter)


def solve(lp: LinearProgram) -> LpOutcome:
    """Solve ``lp`` exactly.

    Optimal outcomes carry a basic optimal point and its value; infeasible
    ones carry a :class:`FarkasCertificate` that has already been checked
    against ``lp``; unbounded ones carry neither.
    """
    lp.validate()
    n = lp.num_vars

    # x_j = offset_j + sum(sign * z_col), every z >= 0
    offsets: list[Fraction] = []
    columns: list[list[tuple[int, int]]] = []
    kinds: list[str] = []
    ncols = 0
    upper_rows: list[tuple[int, int, Fraction]] = []  # (var, col, u - l)
    for j in range(n):
        lo, hi = lp.lower[j], lp.upper[j]
        if lo is not None:
            offsets.append(lo)
            columns.append([(ncols, 1)])
            kinds.append("lower")
            if hi is not None:
                upper_rows.append((j, ncols, hi - lo))
            ncols += 1
        elif hi is not None:
            offsets.append(hi)
            columns.append([(ncols, -1)])
            kinds.append("upper")
            ncols += 1
        else:
            offsets.append(Fraction(0))
            columns.append([(ncols, 1), (ncols + 1, -1)])
            kinds.append("free")
            ncols += 2

    zero = Fraction(0)
    specs: list[tuple[list[Fraction], str, Fraction]] = []
    for con in lp.constraints:
        coeffs = [zero] * ncols
        rhs = con.rhs
        for j, a in enumerate(con.coeffs):
            if a:
                for col, sign in columns[j]:
                    coeffs[col] += sign * a
                rhs -= a * offsets[j]
        specs.append((coeffs, con.relation, rhs))
    for _, col, width in upper_rows:
        coeffs = [zero] * ncols
        coeffs[col] = Fraction(1)
        specs.append((coeffs, LE, width))

    m = len(specs)
    slack_of: list[Optional[int]] = []
    nslack = 0
    for _, rel, _ in specs:
        if rel == EQ:
            slack_of.append(None)
        else:
            slack_of.append(ncols + nslack)
            nslack += 1
    art0 = ncols + nslack
    width = art0 + m

    rows: list[list[Fraction]] = []
    flipped: list[bool] = []
    for i, (coeffs, rel, rhs) in enumerate(specs):
        row = coeffs + [zero] * (nslack + m) + [rhs]
        if slack_of[i] is not None:
            row[slack_of[i]] = Fraction(1 if rel == LE else -1)
        flip = rhs < 0
        if flip:
            row = [-v for v in row]
        row[art0 + i] = Fraction(1)
        rows.append(row)
        flipped.append(flip)

    tab = _Tableau(rows, [art0 + i for i in range(m)])

    # phase one: maximize -(sum of artificials)
    tab.set_cost([zero] * art0 + [Fraction(-1)] * m)
    tab.run(width)
    if tab.obj[-1] < 0:
        duals = [tab.obj[art0 + i] - 1 for i in range(m)]
        duals = [-y if f else y for y, f in zip(duals, flipped)]
        cert = _certificate(lp, duals, kinds, upper_rows)
        if not cert.verify(lp):
            raise ArithmeticError("phase-one certificate failed exact verification")
        return LpOutcome(INFEASIBLE, certificate=cert)

    # drive zero-level artificials out of the basis; drop rows that are redundant
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= art0:
            row = tab.rows[i]
            col = next((j for j in range(art0) if row[j] != 0), None)
            if col is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1

    cost = [zero] * width
    for j in range(n):
        c = lp.objective[j]
        if c:
            for col, sign in columns[j]:
                cost[col] += sign * c
    tab.set_cost(cost)
    if not tab.run(art0):
        return LpOutcome(UNBOUNDED)

    z = [zero] * art0
    for row, bv in zip(tab.rows, tab.basis):
        z[bv] = row[-1]
    x = tuple(offsets[j] + sum((sign * z[col] for col, sign in columns[j]), zero) for j in range(n))
    return LpOutcome(OPTIMAL, x=x, value=lp.value(x))


def _certificate(lp, duals, kinds, upper_rows) -> FarkasCertificate:
    n = lp.num_vars
    k = len(lp.constraints)
    rows = tuple(duals[:k])
    g = [Fraction(0)] * n
    for y, con in zip(rows, lp.constraints):
        if y:
            for j, a in enumerate(con.coeffs):
                g[j] += y * a
    lower = [Fraction(0)] * n
    upper = [Fraction(0)] * n
    for (j, _, _), y in zip(upper_rows, duals[k:]):
        upper[j] = y
    for j in range(n):
        if kinds[j] == "lower":
            lower[j] = g[j] + upper[j]
        elif kinds[j] == "upper":
            upper[j] = -g[j]
    return FarkasCertificate(rows, tuple(lower), tuple(upper))
