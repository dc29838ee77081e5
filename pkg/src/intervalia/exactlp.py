"""Exact feasibility of linear systems with strict and non-strict rows.

Strict rows ``a.x < b`` are relaxed to ``a.x + t <= b`` with a shared margin
``t >= 0``; the system is strictly feasible iff the largest attainable ``t``
is positive.  The margin is capped at 1, which changes nothing about the
sign of the optimum but keeps phase 2 bounded.

The simplex runs on an integer tableau with fraction-free pivoting: every
entry is ``det(B) * (B^-1 A)`` for the current basis ``B``, so each update is
an exact integer division.  Bland's rule picks entering and leaving columns,
which rules out cycling.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import MalformedSystem, ParseError
from .intervals import SCHEMA, format_rational, parse_rational, to_fraction

LT, LE, EQ = "<", "<=", "="
RELATIONS = (LT, LE, EQ)


@dataclass(frozen=True)
class Row:
    coeffs: tuple
    rel: str
    rhs: Fraction

    def holds(self, x):
        lhs = sum((a * v for a, v in zip(self.coeffs, x) if a), Fraction(0))
        if self.rel == LT:
            return lhs < self.rhs
        if self.rel == LE:
            return lhs <= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearSystem:
    """Rows over named variables.

    ``nonnegative`` lists variable indices known to be >= 0; the others are
    free.  Declaring a bound is only a hint for the solver when the caller
    knows it loses no solutions (e.g. a translation-invariant system).
    """

    var_names: tuple
    rows: tuple
    nonnegative: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = len(self.var_names)
        rows = []
        for i, row in enumerate(self.rows):
            if not isinstance(row, Row):
                coeffs, rel, rhs = row
                row = Row(tuple(coeffs), rel, rhs)
            if len(row.coeffs) != n:
                raise MalformedSystem(f"row {i} has {len(row.coeffs)} coefficients, expected {n}",
                                      row=i)
            if row.rel not in RELATIONS:
                raise MalformedSystem(f"row {i} has unknown relation {row.rel!r}", row=i)
            try:
                coeffs = tuple(to_fraction(a) for a in row.coeffs)
                rhs = to_fraction(row.rhs)
            except (TypeError, ValueError, ParseError) as exc:
                raise MalformedSystem(f"row {i}: {exc}", row=i) from None
            rows.append(Row(coeffs, row.rel, rhs))
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "nonnegative", frozenset(self.nonnegative))
        if any(not 0 <= j < n for j in self.nonnegative):
            raise MalformedSystem("nonnegative index out of range")

    @property
    def n_vars(self):
        return len(self.var_names)

    def index(self, name):
        return self.var_names.index(name)

    def satisfied_by(self, x):
        return all(row.holds(x) for row in self.rows)

    def scaled(self, factors):
        """Multiply row i by the positive rational ``factors[i]``."""
        return LinearSystem(self.var_names, tuple(
            Row(tuple(a * f for a in r.coeffs), r.rel, r.rhs * f)
            for r, f in zip(self.rows, factors)), self.nonnegative)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "vars": list(self.var_names),
            "nonnegative": sorted(self.var_names[j] for j in self.nonnegative),
            "rows": [{"a": [format_rational(a) for a in r.coeffs], "rel": r.rel,
                      "b": format_rational(r.rhs)} for r in self.rows],
        }

    @classmethod
    def from_json(cls, data):
        names = tuple(data["vars"])
        try:
            rows = tuple(Row(tuple(parse_rational(str(a)) for a in r["a"]), r["rel"],
                             parse_rational(str(r["b"]))) for r in data["rows"])
        except (KeyError, TypeError, ParseError) as exc:
            raise MalformedSystem(f"bad system JSON: {exc}") from None
        nonneg = frozenset(names.index(v) for v in data.get("nonnegative", ()))
        return cls(names, rows, nonneg)


class SystemBuilder:
    """Accumulate rows written as ``{name: coeff}`` dictionaries."""

    def __init__(self, names, nonnegative=()):
        self.names = list(names)
        self.col = {name: j for j, name in enumerate(self.names)}
        self.nonneg = {self.col[v] for v in nonnegative}
        self.rows = []

    def add(self, terms, rel, rhs=0):
        coeffs = [Fraction(0)] * len(self.names)
        for name, a in terms.items():
            coeffs[self.col[name]] += to_fraction(a)
        self.rows.append(Row(tuple(coeffs), rel, to_fraction(rhs)))

    def less(self, lhs, rhs, strict=True):
        """Add ``sum(lhs) < sum(rhs)``; each side is a ``{name: coeff}`` dict."""
        terms = dict(lhs)
        for name, a in rhs.items():
            terms[name] = terms.get(name, 0) - a
        self.add(terms, LT if strict else LE, 0)

    def build(self):
        return LinearSystem(tuple(self.names), tuple(self.rows), frozenset(self.nonneg))


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple = None  # exact rationals, one per variable
    margin: Fraction = Fraction(0)

    def __bool__(self):
        return self.feasible


class _Tableau:
    """Integer tableau ``rows`` with common denominator ``den > 0``."""

    def __init__(self, rows, basis, den=1):
        self.rows = rows
        self.basis = basis
        self.den = den

    def pivot(self, r, c, z):
        prow = self.rows[r]
        p = prow[c]
        d = self.den
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                self.rows[i] = [(a * p - f * b) // d for a, b in zip(row, prow)]
            elif p != d:
                self.rows[i] = [a * p // d for a in row]
        f = z[c]
        if f:
            z[:] = [(a * p - f * b) // d for a, b in zip(z, prow)]
        elif p != d:
            z[:] = [a * p // d for a in z]
        self.basis[r] = c
        self.den = p
        if p < 0:
            self.den = -p
            self.rows = [[-a for a in row] for row in self.rows]
            z[:] = [-a for a in z]

    def run(self, z, allowed):
        """Maximize until no allowed column has a negative reduced cost."""
        while True:
            enter = next((j for j in allowed if z[j] < 0), None)
            if enter is None:
                return True
            leave = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    if leave is None:
                        leave = i
                        continue
                    b, lrow = row[-1], self.rows[leave]
                    lhs, rhs = b * lrow[enter], lrow[-1] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[leave]):
                        leave = i
            if leave is None:
                return False
            self.pivot(leave, enter, z)


def lp_feasible_strict(system):
    """Decide strict feasibility exactly; see the module docstring."""
    if not isinstance(system, LinearSystem):
        raise MalformedSystem("expected a LinearSystem")
    n = system.n_vars
    # structural columns: x_j (or x_j+ and x_j-), then the margin t
    cols = []
    for j in range(n):
        cols.append((j, 1))
        if j not in system.nonnegative:
            cols.append((j, -1))
    t_col = len(cols)
    n_struct = t_col + 1

    raw = []  # (integer coeffs over structural cols, is_equality, integer rhs)
    for row in system.rows:
        den = lcm(row.rhs.denominator, *(a.denominator for a in row.coeffs))
        ints = [a.numerator * (den // a.denominator) for a in row.coeffs]
        coeffs = [ints[j] * s for j, s in cols]
        coeffs.append(den if row.rel == LT else 0)
        raw.append((coeffs, row.rel == EQ, row.rhs.numerator * (den // row.rhs.denominator)))
    raw.append(([0] * t_col + [1], False, 1))

    n_slack = sum(1 for _, eq, _ in raw if not eq)
    # artificials for rows whose slack cannot start basic
    needs_art = [eq or rhs < 0 for _, eq, rhs in raw]
    n_art = sum(needs_art)
    width = n_struct + n_slack + n_art + 1
    rows, basis = [], []
    s_next, a_next = n_struct, n_struct + n_slack
    for i, (coeffs, eq, rhs) in enumerate(raw):
        sign = -1 if rhs < 0 else 1
        line = [0] * width
        line[:n_struct] = [sign * a for a in coeffs]
        line[-1] = sign * rhs
        if not eq:
            line[s_next] = sign
            if not needs_art[i]:
                basis.append(s_next)
            s_next += 1
        if needs_art[i]:
            line[a_next] = 1
            basis.append(a_next)
            a_next += 1
        rows.append(line)
    tab = _Tableau(rows, basis)
    art_start = n_struct + n_slack

    if n_art:
        z = [0] * width
        for i, line in enumerate(rows):
            if basis[i] >= art_start:
                z = [a - b for a, b in zip(z, line)]
        for j in range(art_start, art_start + n_art):
            z[j] = 0
        tab.run(z, range(width - 1))
        if z[-1] < 0:
            return FeasibilityResult(False)
        # drive zero-level artificials out, dropping redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= art_start:
                row = tab.rows[i]
                j = next((j for j in range(art_start) if row[j]), None)
                if j is None:
                    del tab.rows[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j, z)
            i += 1
        tab.rows = [row[:art_start] + row[-1:] for row in tab.rows]

    width = len(tab.rows[0]) if tab.rows else art_start + 1
    z = [0] * width
    for i, b in enumerate(tab.basis):
        if b == t_col:
            z = list(tab.rows[i])
    z[t_col] -= tab.den
    if not tab.run(z, range(width - 1)):
        raise AssertionError("margin unbounded despite cap")

    values = [Fraction(0)] * (width - 1)
    for i, b in enumerate(tab.basis):
        values[b] = Fraction(tab.rows[i][-1], tab.den)
    margin = values[t_col]
    if margin <= 0:
        return FeasibilityResult(False, margin=margin)
    x = [Fraction(0)] * n
    for k, (j, s) in enumerate(cols):
        x[j] += s * values[k]
    x = tuple(x)
    if not system.satisfied_by(x):
        raise AssertionError("simplex witness fails re-verification")
    return FeasibilityResult(True, x, margin)
