"""Permutations, their interval representations and sorted colorings.

A permutation is a tuple of the values ``1..n`` in one-line notation.  In a
representation the left endpoints follow the permutation and the right
endpoints follow the natural order, so ``y`` appearing before a smaller
``x`` forces the interval of ``x`` strictly inside that of ``y``.
"""

import json
from bisect import bisect_left
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexMismatch, NotAPermutation, NotSorted
from .intervals import PERMUTATION, SCHEMA, IntervalFamily


def as_permutation(values):
    perm = tuple(int(v) for v in values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise NotAPermutation(f"not a permutation of 1..{len(perm)}: {list(perm)}")
    return perm


def parse_permutation(text):
    """Parse bracketed one-line notation such as ``"[4,2,5,1,3]"``."""
    text = text.strip()
    if not text.startswith("["):
        text = f"[{text}]"
    try:
        values = json.loads(text)
    except json.JSONDecodeError:
        raise NotAPermutation(f"cannot parse permutation {text!r}") from None
    if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
        raise NotAPermutation(f"cannot parse permutation {text!r}")
    return as_permutation(values)


def format_permutation(perm):
    return "[" + ",".join(map(str, perm)) + "]"


def positions(perm):
    """Map value -> index in the one-line notation."""
    return {v: i for i, v in enumerate(perm)}


def standardize(values):
    """Relabel distinct integers to ``1..n`` preserving their relative order."""
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values), rank


def perm_depth(perm):
    """Length of a longest decreasing subsequence, by patience sorting."""
    piles = []
    for v in perm:
        k = bisect_left(piles, -v)
        if k == len(piles):
            piles.append(-v)
        else:
            piles[k] = -v
    return len(piles)


def nesting_pairs(perm):
    """All ``(inner, outer)``: values x < y with y written before x."""
    out = set()
    for i, y in enumerate(perm):
        for x in perm[i + 1:]:
            if x < y:
                out.add((x, y))
    return out


def lds_levels(perm):
    """level[v] = length of the longest decreasing subsequence starting at v."""
    level = {}
    for i in range(len(perm) - 1, -1, -1):
        v = perm[i]
        level[v] = 1 + max((level[w] for w in perm[i + 1:] if w < v), default=0)
    return level


@dataclass(frozen=True)
class SortedColoring:
    """Indexed partition ``classes[0] = T_1, ..., classes[k-1] = T_k`` of the values."""

    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))

    @property
    def k(self):
        return len(self.classes)

    def color(self, v):
        """1-based class index of value ``v``."""
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i + 1
        raise KeyError(v)

    def colors(self, n):
        return tuple(self.color(v) for v in range(1, n + 1))

    @classmethod
    def from_colors(cls, colors, k=None):
        k = k or max(colors)
        classes = [set() for _ in range(k)]
        for v, c in enumerate(colors, start=1):
            classes[c - 1].add(v)
        return cls(tuple(classes))

    def to_json(self):
        return {"schema": SCHEMA, "classes": [sorted(c) for c in self.classes]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(frozenset(c) for c in data["classes"]))


def coloring_violation(perm, coloring):
    """First nesting pair not sent to a strictly higher class, or None.

    Also reports values missing from, or repeated in, the partition.
    """
    n = len(perm)
    seen = [v for cls in coloring.classes for v in cls]
    if sorted(seen) != list(range(1, n + 1)):
        return ("partition", sorted(seen))
    for inner, outer in sorted(nesting_pairs(perm)):
        if coloring.color(inner) >= coloring.color(outer):
            return (inner, outer)
    return None


def is_sorted_coloring(perm, coloring):
    return coloring_violation(perm, coloring) is None


def require_sorted(perm, coloring):
    bad = coloring_violation(perm, coloring)
    if bad is not None:
        raise NotSorted(f"coloring is not sorted for {format_permutation(perm)}",
                        offending=list(bad))


def mirsky_sorted_coloring(perm):
    """Class of v = longest decreasing subsequence starting at v (k = depth)."""
    level = lds_levels(perm)
    k = max(level.values(), default=0)
    classes = [set() for _ in range(k)]
    for v, lv in level.items():
        classes[lv - 1].add(v)
    return SortedColoring(tuple(classes))


def enumerate_sorted_colorings(perm, k):
    """Every sorted coloring with exactly ``k`` non-empty classes.

    Order is lexicographic in the color vector ``(c(1), ..., c(n))``.
    """
    n = len(perm)
    pos = positions(perm)
    # inners[v]: smaller values written after v; outers[v]: larger values written before v
    inners = {v: [x for x in range(1, v) if pos[v] < pos[x]] for v in range(1, n + 1)}
    outers = {v: [y for y in range(v + 1, n + 1) if pos[y] < pos[v]] for v in range(1, n + 1)}
    colors = [0] * (n + 1)

    def extend(v, used):
        if v > n:
            if len(used) == k:
                yield SortedColoring.from_colors(colors[1:], k)
            return
        for c in range(1, k + 1):
            if any(colors[x] >= c for x in inners[v]):
                continue
            if outers[v] and c >= k:
                continue
            new_used = used | {c}
            if k - len(new_used) > n - v:
                continue
            colors[v] = c
            yield from extend(v + 1, new_used)
        colors[v] = 0

    if n == 0:
        if k == 0:
            yield SortedColoring(())
        return
    yield from extend(1, frozenset())


# ---------------------------------------------------------------------------
# representations


def initial_representation(perm):
    """l_{perm[i]} = i - n - 1 (1-based i) and r_j = j."""
    n = len(perm)
    ivs = [None] * n
    for i, v in enumerate(perm, start=1):
        ivs[v - 1] = (Fraction(i - n - 1), Fraction(v))
    return IntervalFamily(tuple(ivs), PERMUTATION)


PermViolation = namedtuple("PermViolation", "kind first second")


def verify_perm_representation(perm, family):
    """None when ``family`` satisfies the endpoint pattern of ``perm``.

    Otherwise a PermViolation naming the first broken comparison: kind is
    ``"left"`` (values out of permutation order), ``"middle"`` (last left
    endpoint not below r_1) or ``"right"`` (right endpoints out of order).
    """
    n = len(perm)
    if len(family) != n:
        raise IndexMismatch(f"family has {len(family)} intervals, permutation has {n}",
                            family=len(family), perm=n)
    for a, b in zip(perm, perm[1:]):
        if not family.left(a - 1) < family.left(b - 1):
            return PermViolation("left", a, b)
    if n and not family.left(perm[-1] - 1) < family.right(0):
        return PermViolation("middle", perm[-1], 1)
    for j in range(1, n):
        if not family.right(j - 1) < family.right(j):
            return PermViolation("right", j, j + 1)
    return None


def containments(family):
    """All (inner, outer) value pairs with I_inner strictly inside I_outer."""
    out = set()
    for x in range(len(family)):
        lx, rx = family[x]
        for y in range(len(family)):
            if x != y:
                ly, ry = family[y]
                if ly <= lx and rx <= ry and (ly, ry) != (lx, rx):
                    out.add((x + 1, y + 1))
    return out


def induced_coloring(family, n):
    """Color values by the rank of their interval length (1 = shortest)."""
    lengths = sorted(set(family.lengths()))
    rank = {L: i + 1 for i, L in enumerate(lengths)}
    return tuple(rank[family.length(v - 1)] for v in range(1, n + 1))
