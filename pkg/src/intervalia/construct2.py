"""Constructive 2-count representations of depth-2 permutations.

Colour classes: ``S`` (short, class 1) and ``T`` (long, class 2).  With the
right endpoints fixed, an assignment of lengths ``alpha < beta`` keeps the
left endpoints in permutation order exactly when, for every pair ``x, y``
adjacent in that order,

* ``x in T, y in S``: ``beta - alpha > r_x - r_y``  (a TS slack, lower bound);
* ``x in S, y in T``: ``beta - alpha < r_y - r_x``  (an ST slack, upper bound).

The pipeline moves the right endpoints until every TS slack is shorter than
every ST slack, then picks ``beta - alpha`` in between:

1. drop slacks nested in others (only TS inside ST can occur);
2. re-space the right endpoints so all maximal slacks share one length;
3. push the endpoints of every ST slack outwards by a small ``eps``;
4. choose the two lengths, recompute left endpoints, clear denominators.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (DepthExceeded, InfeasibleNormalization, KeyInequalityViolated,
                     NotSorted, StructureViolation)
from .exactlp import SystemBuilder, lp_feasible_strict
from .intervals import PERMUTATION, IntervalFamily, distinct_lengths
from .perm import (SortedColoring, as_permutation, initial_representation,
                   mirsky_sorted_coloring, perm_depth, require_sorted,
                   verify_perm_representation)

TS, ST = "TS", "ST"


@dataclass(frozen=True)
class SlackInterval:
    kind: str
    left: Fraction
    right: Fraction
    pair: tuple  # the adjacent (x, y) in left-endpoint order that induced it

    @property
    def value(self):
        return self.right - self.left

    def contains(self, other):
        return self.left <= other.left and other.right <= self.right and self != other

    def to_json(self):
        return {"kind": self.kind, "left": str(self.left), "right": str(self.right),
                "pair": list(self.pair)}


@dataclass(frozen=True)
class SlackFamily:
    slacks: tuple

    def __iter__(self):
        return iter(self.slacks)

    def __len__(self):
        return len(self.slacks)

    def of_kind(self, kind):
        return [s for s in self.slacks if s.kind == kind]

    @property
    def max_ts(self):
        return max((s.value for s in self.of_kind(TS)), default=None)

    @property
    def min_st(self):
        return min((s.value for s in self.of_kind(ST)), default=None)


def perm_of_representation(rep):
    """Read the permutation off the left-endpoint order of ``rep``."""
    return tuple(sorted(range(1, len(rep) + 1), key=lambda v: rep.left(v - 1)))


def short_long(coloring):
    """``(S, T)``; a one-class colouring puts everything in ``S``."""
    if coloring.k == 1:
        return coloring.classes[0], frozenset()
    if coloring.k != 2:
        raise ValueError(f"expected at most 2 classes, got {coloring.k}")
    return coloring.classes


def _slacks(perm, right, long):
    out = []
    for x, y in zip(perm, perm[1:]):
        rx, ry = right[x], right[y]
        if x in long and y not in long:
            if rx > ry:
                out.append(SlackInterval(TS, ry, rx, (x, y)))
        elif x not in long and y in long:
            if rx > ry:
                raise NotSorted(f"short {x} before long {y} with r_{x} > r_{y}",
                                offending=[x, y])
            out.append(SlackInterval(ST, rx, ry, (x, y)))
    return SlackFamily(tuple(out))


def compute_slacks(rep, coloring):
    perm = perm_of_representation(rep)
    require_sorted(perm, coloring)
    _, long = short_long(coloring)
    right = {v: rep.right(v - 1) for v in perm}
    return _slacks(perm, right, long)


def maximal_slacks(family):
    """Drop nested slacks, checking the only nesting is a TS inside an ST sharing an end."""
    slacks = list(family)
    keep = []
    for s in slacks:
        outer = [o for o in slacks if o.contains(s)]
        for o in outer:
            if not (s.kind == TS and o.kind == ST and (s.left == o.left or s.right == o.right)):
                raise StructureViolation("unexpected slack nesting",
                                         inner=s.to_json(), outer=o.to_json())
        if not outer:
            keep.append(s)
    for i, a in enumerate(keep):
        for b in keep[i + 1:]:
            if {a.left, a.right} & {b.left, b.right}:
                raise StructureViolation("maximal slacks share an endpoint",
                                         first=a.to_json(), second=b.to_json())
    return SlackFamily(tuple(keep))


def _with_rights(rep, right):
    return IntervalFamily(tuple((rep.left(v - 1), right[v]) for v in range(1, len(rep) + 1)),
                          PERMUTATION)


def roberts_normalize(rep, coloring):
    """Move right endpoints (order kept, lefts fixed) so maximal slacks share one length."""
    n = len(rep)
    maximal = maximal_slacks(compute_slacks(rep, coloring))
    if len(maximal) <= 1:
        return rep
    owner = {rep.right(v - 1): v for v in range(1, n + 1)}
    names = [f"r{v}" for v in range(1, n + 1)] + ["L"]
    sb = SystemBuilder(names)
    for v in range(1, n):
        sb.less({f"r{v}": 1}, {f"r{v + 1}": 1})
    perm = perm_of_representation(rep)
    sb.add({"r1": -1}, "<", -rep.left(perm[-1] - 1))
    for s in maximal:
        sb.add({f"r{owner[s.right]}": 1, f"r{owner[s.left]}": -1, "L": -1}, "=", 0)
    result = lp_feasible_strict(sb.build())
    if not result:
        raise InfeasibleNormalization("maximal slacks cannot be made equal in length")
    right = {v: result.witness[v - 1] for v in range(1, n + 1)}
    return _with_rights(rep, right)


def epsilon_expand(rep, coloring):
    """Push both ends of every ST slack outwards by a quarter of the smallest gap."""
    n = len(rep)
    perm = perm_of_representation(rep)
    points = sorted([rep.left(perm[-1] - 1)] + [rep.right(v - 1) for v in range(1, n + 1)])
    gaps = [b - a for a, b in zip(points, points[1:])]
    if not gaps:
        return rep
    eps = min(gaps) / 4
    _, long = short_long(coloring)
    right = {v: rep.right(v - 1) for v in range(1, n + 1)}
    moved = dict(right)
    for s in _slacks(perm, right, long).of_kind(ST):
        x, y = s.pair
        moved[x] = right[x] - eps
        moved[y] = right[y] + eps
    return _with_rights(rep, moved)


def choose_difference(slacks):
    """A value strictly between max TS and min ST (the gap beta - alpha)."""
    lo, hi = slacks.max_ts, slacks.min_st
    if lo is not None and hi is not None:
        if not lo < hi:
            raise KeyInequalityViolated(f"max TS {lo} is not below min ST {hi}",
                                        max_ts=lo, min_st=hi)
        return (lo + hi) / 2
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi / 2
    return Fraction(1)


def assemble_two_count(rep, coloring):
    n = len(rep)
    perm = perm_of_representation(rep)
    short, long = short_long(coloring)
    right = [rep.right(v - 1) for v in range(1, n + 1)]
    bound = right[perm[-1] - 1] - right[0] + 1  # last left endpoint must precede r_1
    if not long:
        alpha = beta = bound
    else:
        d = choose_difference(_slacks(perm, dict(zip(range(1, n + 1), right)), long))
        if perm[-1] in short:
            alpha = bound
            beta = alpha + d
        else:
            beta = max(bound, d + 1)
            alpha = beta - d
    fam = IntervalFamily(tuple(
        (r - (beta if v in long else alpha), r) for v, r in enumerate(right, start=1)),
        PERMUTATION).scaled_to_integers()
    bad = verify_perm_representation(perm, fam)
    if bad is not None:
        raise KeyInequalityViolated(f"assembled family breaks the endpoint pattern: {bad}",
                                    violation=list(bad))
    return fam


def two_count_for_coloring(perm, coloring):
    """Run the whole pipeline on a given sorted colouring with at most 2 classes."""
    perm = as_permutation(perm)
    require_sorted(perm, coloring)
    if not perm:
        return IntervalFamily((), PERMUTATION)
    rep = initial_representation(perm)
    rep = roberts_normalize(rep, coloring)
    rep = epsilon_expand(rep, coloring)
    return assemble_two_count(rep, coloring)


def two_count_permutation(perm):
    perm = as_permutation(perm)
    depth = perm_depth(perm)
    if depth > 2:
        raise DepthExceeded(depth)
    coloring = mirsky_sorted_coloring(perm) if perm else SortedColoring(())
    return two_count_for_coloring(perm, coloring)


def check_two_count(perm, family, coloring=None):
    """True when ``family`` is an integral representation of ``perm`` with <= 2 lengths
    (and, given a colouring, the longer length lands exactly on the long class)."""
    if verify_perm_representation(perm, family) is not None or not family.is_integral():
        return False
    lengths = distinct_lengths(family)
    if len(lengths) > 2:
        return False
    if coloring is not None and coloring.k == 2:
        short, long = coloring.classes
        if len(lengths) != 2:
            return False
        return all((family.length(v - 1) == lengths[1]) == (v in long)
                   for v in range(1, len(perm) + 1))
    return True
