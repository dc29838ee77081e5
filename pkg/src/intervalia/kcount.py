"""Decide whether a permutation or interval order has a representation with
at most ``k`` distinct interval lengths.

Both oracles enumerate length-class assignments and hand each one to the
exact LP kernel.  Lengths are variables ``alpha_1 < ... < alpha_j`` and every
left endpoint is written as ``r_x - alpha_{c(x)}``, so a single LP covers
every relative order of the endpoints at once; no endpoint order has to be
guessed.  All systems are invariant under translation, so the endpoint
variables are declared non-negative without losing solutions.

Verdicts are "at most k" by default.  ``exact=True`` asks for exactly ``k``
realised lengths instead.
"""

from dataclasses import dataclass, field

from .errors import NotSorted, TooLarge
from .exactlp import EQ, LE, LT, SystemBuilder, lp_feasible_strict
from .intervals import ORDER, PERMUTATION, SCHEMA, IntervalFamily, distinct_lengths
from .order import as_interval_order, bits, pp_graph, verify_order_representation
from .perm import (as_permutation, coloring_violation, enumerate_sorted_colorings,
                   perm_depth, verify_perm_representation)

MAX_CLASS_MAPS = 1 << 12


@dataclass(frozen=True)
class KCountVerdict:
    answer: bool
    k: int
    coloring: tuple = None  # 1-based class per element, or None on "no"
    witness: IntervalFamily = None
    colorings_tried: int = 0
    exact: bool = False
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.answer

    def to_json(self):
        out = {"schema": SCHEMA, "answer": "yes" if self.answer else "no", "k": self.k,
               "exact": self.exact, "colorings_tried": self.colorings_tried,
               "coloring": list(self.coloring) if self.coloring else None,
               "witness": self.witness.to_json() if self.witness else None}
        out.update(self.extra)
        return out


def _alpha_rows(sb, k):
    sb.add({"alpha1": -1}, LT, 0)
    for i in range(1, k):
        sb.less({f"alpha{i}": 1}, {f"alpha{i + 1}": 1})


# ---------------------------------------------------------------------------
# permutations


def coloring_system_permutation(perm, coloring):
    perm = as_permutation(perm)
    bad = coloring_violation(perm, coloring)
    if bad is not None:
        raise NotSorted("coloring is not sorted", offending=list(bad))
    n, k = len(perm), coloring.k
    r = [f"r{v}" for v in range(1, n + 1)]
    a = [f"alpha{i}" for i in range(1, k + 1)]
    sb = SystemBuilder(r + a, nonnegative=r + a)
    for v in range(1, n):
        sb.less({f"r{v}": 1}, {f"r{v + 1}": 1})
    _alpha_rows(sb, k)

    def left(v):
        return {f"r{v}": 1, f"alpha{coloring.color(v)}": -1}

    for x, y in zip(perm, perm[1:]):
        sb.less(left(x), left(y))
    if n:
        sb.less(left(perm[-1]), {"r1": 1})
    return sb.build()


def _perm_witness(perm, colors, x):
    n = len(perm)
    alpha = x[n:]
    fam = IntervalFamily(tuple((x[v - 1] - alpha[colors[v - 1] - 1], x[v - 1])
                               for v in range(1, n + 1)), PERMUTATION)
    return fam.scaled_to_integers()


def is_k_count_perm(perm, k, exact=False):
    perm = as_permutation(perm)
    n = len(perm)
    tried = 0
    if n == 0:
        return KCountVerdict(not exact or k == 0, k, (), IntervalFamily((), PERMUTATION),
                             0, exact)
    lo = k if exact else perm_depth(perm)
    for kk in range(max(lo, 1), k + 1):
        for coloring in enumerate_sorted_colorings(perm, kk):
            tried += 1
            res = lp_feasible_strict(coloring_system_permutation(perm, coloring))
            if res:
                colors = coloring.colors(n)
                fam = _perm_witness(perm, colors, res.witness)
                assert verify_perm_representation(perm, fam) is None
                assert len(distinct_lengths(fam)) == kk
                return KCountVerdict(True, k, colors, fam, tried, exact)
    return KCountVerdict(False, k, None, None, tried, exact)


def endpoint_system_permutation(values, classes, ordered_lengths=False):
    """Endpoint-variable system for a pattern written with arbitrary distinct values.

    Left endpoints follow ``values`` in the given order, right endpoints
    follow their numeric order, the last left endpoint precedes the first
    right endpoint, and members of each class have equal lengths.  With
    ``ordered_lengths`` the class lengths must also increase with the class
    index.
    """
    values = list(values)
    names = [f"l{v}" for v in values] + [f"r{v}" for v in values]
    sb = SystemBuilder(names, nonnegative=names)
    for x, y in zip(values, values[1:]):
        sb.less({f"l{x}": 1}, {f"l{y}": 1})
    ordered = sorted(values)
    sb.less({f"l{values[-1]}": 1}, {f"r{ordered[0]}": 1})
    for x, y in zip(ordered, ordered[1:]):
        sb.less({f"r{x}": 1}, {f"r{y}": 1})

    def length(v):
        return {f"r{v}": 1, f"l{v}": -1}

    for cls in classes:
        cls = sorted(cls)
        for x, y in zip(cls, cls[1:]):
            terms = length(x)
            terms.update({f"r{y}": -1, f"l{y}": 1})
            sb.add(terms, EQ, 0)
    if ordered_lengths:
        for lo, hi in zip(classes, classes[1:]):
            sb.less(length(min(lo)), length(min(hi)))
    return sb.build()


# ---------------------------------------------------------------------------
# interval orders


def coloring_system_order(order, classes):
    """System for a class map ``classes[x] in 1..k``, or None for a free length."""
    order = as_interval_order(order)
    n = order.n
    k = max((c for c in classes if c is not None), default=0)
    r = [f"r{x + 1}" for x in range(n)]
    a = [f"alpha{i}" for i in range(1, k + 1)]
    free = [f"len{x + 1}" for x in range(n) if classes[x] is None]
    sb = SystemBuilder(r + a + free, nonnegative=r + a + free)
    if k:
        _alpha_rows(sb, k)

    def left(x):
        c = classes[x]
        name = f"len{x + 1}" if c is None else f"alpha{c}"
        return {f"r{x + 1}": 1, name: -1}

    def plus(terms, extra):
        out = dict(terms)
        for key, v in extra.items():
            out[key] = out.get(key, 0) + v
        return out

    # comparabilities implied through a middle element need no row of their own
    for x, y in order.covers():
        sb.less({f"r{x + 1}": 1}, left(y))
    for x in range(n):
        for y in bits(order.incomparable[x]):
            if y > x:
                sb.add(plus(left(y), {f"r{x + 1}": -1}), LE, 0)
                sb.add(plus(left(x), {f"r{y + 1}": -1}), LE, 0)
    return sb.build()


def _order_witness(order, classes, system, x):
    val = dict(zip(system.var_names, x))
    ivs = []
    for e in range(order.n):
        c = classes[e]
        length = val[f"len{e + 1}"] if c is None else val[f"alpha{c}"]
        ivs.append((val[f"r{e + 1}"] - length, val[f"r{e + 1}"]))
    return IntervalFamily(tuple(ivs), ORDER).scaled_to_integers()


def enumerate_class_maps(order, k, prune=True, exact=False):
    """Class maps ``x -> 1..j`` using exactly the classes ``1..j`` (j <= k).

    Lexicographic in ``(c(1), ..., c(n))``.  With ``prune`` every PP arc
    forces its pith into a strictly shorter class than its peel: the peel's
    interval strictly contains the pith's in every representation.
    """
    n = order.n
    below = [[] for _ in range(n)]  # below[x]: piths whose peel is x, must be shorter
    above = [[] for _ in range(n)]
    if prune:
        for pith, peel in pp_graph(order).arcs:
            below[peel].append(pith)
            above[pith].append(peel)
    colors = [0] * n

    def extend(x, used):
        if x == n:
            top = used.bit_length() - 1
            if used == (1 << (top + 1)) - 2 and (not exact or top == k):
                yield tuple(colors)
            return
        for c in range(1, k + 1):
            if any(colors[p] and colors[p] >= c for p in below[x]):
                continue
            if any(colors[q] and colors[q] <= c for q in above[x]):
                continue
            if (above[x] and c == k) or (below[x] and c == 1):
                continue
            colors[x] = c
            yield from extend(x + 1, used | 1 << c)
        colors[x] = 0

    yield from extend(0, 0)


def is_k_count_order(order, k, prune=True, exact=False, allow_large=False):
    order = as_interval_order(order)
    if k < 1:
        raise ValueError("k must be positive")
    if not allow_large and k ** order.n > MAX_CLASS_MAPS and order.n > 1:
        raise TooLarge(f"{k}^{order.n} class maps exceed the limit {MAX_CLASS_MAPS}",
                       n=order.n, k=k)
    tried = 0
    for classes in enumerate_class_maps(order, k, prune=prune, exact=exact):
        tried += 1
        system = coloring_system_order(order, classes)
        res = lp_feasible_strict(system)
        if res:
            fam = _order_witness(order, classes, system, res.witness)
            assert verify_order_representation(order, fam) is None
            assert len(distinct_lengths(fam)) <= k
            return KCountVerdict(True, k, classes, fam, tried, exact)
    return KCountVerdict(False, k, None, None, tried, exact)
