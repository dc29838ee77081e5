"""Fourier-Motzkin elimination: a slow, independent feasibility check.

Only meant for small systems (a handful of variables); the row count can
grow doubly exponentially.  It tracks strictness exactly, so it decides the
same question as :func:`intervalia.exactlp.lp_feasible_strict`.
"""

from fractions import Fraction

from .exactlp import EQ, LT

_MAX_ROWS = 20000


class _Infeasible(Exception):
    pass


def _normalize(rows):
    """Rows are ``(coeffs, strict, rhs)`` meaning ``a.x < b`` or ``a.x <= b``.

    Each row is scaled so its first nonzero coefficient is +-1, which makes
    parallel rows collide; among parallel rows only the tightest is kept.
    Constant rows are checked on the spot and dropped.
    """
    best = {}
    for coeffs, strict, rhs in rows:
        pivot = next((a for a in coeffs if a), None)
        if pivot is None:
            if not (rhs > 0 if strict else rhs >= 0):
                raise _Infeasible
            continue
        s = abs(pivot)
        key = tuple(a / s for a in coeffs)
        bound = (rhs / s, not strict)  # smaller tuple = tighter row
        if key not in best or bound < best[key]:
            best[key] = bound
    return {(key, not loose, rhs) for key, (rhs, loose) in best.items()}


def fm_feasible(system):
    try:
        return _eliminate(system)
    except _Infeasible:
        return False


def _eliminate(system):
    rows = []
    for row in system.rows:
        if row.rel == EQ:
            rows.append((row.coeffs, False, row.rhs))
            rows.append((tuple(-a for a in row.coeffs), False, -row.rhs))
        else:
            rows.append((row.coeffs, row.rel == LT, row.rhs))
    for j in system.nonnegative:
        e = [Fraction(0)] * system.n_vars
        e[j] = Fraction(-1)
        rows.append((tuple(e), False, Fraction(0)))
    rows = _normalize(rows)
    for j in range(system.n_vars):
        pos, neg, rest = [], [], []
        for row in rows:
            a = row[0][j]
            (pos if a > 0 else neg if a < 0 else rest).append(row)
        for ca, sa, ba in pos:
            for cb, sb, bb in neg:
                fa, fb = -cb[j], ca[j]
                coeffs = tuple(fa * x + fb * y for x, y in zip(ca, cb))
                rest.append((coeffs, sa or sb, fa * ba + fb * bb))
        rows = _normalize(rest)
        if len(rows) > _MAX_ROWS:
            raise OverflowError("Fourier-Motzkin blow-up; system too large for the oracle")
    return True  # constant rows were all checked by _normalize
