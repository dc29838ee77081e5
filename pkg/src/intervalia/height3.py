"""2-count representations of height-3, depth-2 interval orders.

Three stages, starting from the canonical representation of the twin-free
reduction:

1. *Break ties.*  On every line, coinciding left endpoints are spread to the
   left (the interval with the largest right endpoint keeps the line) and
   coinciding right endpoints to the right (the one with the smallest left
   endpoint keeps it).  Shifts stay below 1/4, so no strict comparison with
   another line changes, and no two intervals keep a shared endpoint of the
   same type.  Afterwards an interval is nested in another only when the
   order forces it, i.e. along PP arcs.
2. *Middle part.*  Height 3 makes the non-extremal intervals pairwise
   intersecting, so they share a point ``ell0`` that is not an endpoint.
   The intervals through ``ell0`` read off a permutation of depth at most 2,
   which gets a 2-count representation with lengths ``alpha < beta``.
3. *Merge.*  The remaining extremal intervals are re-inserted with length
   ``alpha``: those touching line 0 keep their relative position to the
   middle left endpoints and grow leftwards, those touching line ``m - 1``
   keep their position to the middle right endpoints and grow rightwards.
   Adding the same amount to both middle lengths (shifting all middle left
   endpoints) makes ``alpha`` long enough for that.
"""

from dataclasses import dataclass
from fractions import Fraction

from .construct2 import two_count_permutation
from .errors import DepthExceeded, HeightExceeded, MissingExtremalAtLine
from .intervals import ORDER, PERMUTATION, IntervalFamily, distinct_lengths
from .order import (as_interval_order, canonical_representation, collapse_twins,
                    depth_order, expand_twins, height, verify_order_representation)
from .perm import perm_depth


@dataclass(frozen=True)
class StagedRepresentation:
    canonical: object  # CanonicalRepresentation the stages started from
    family: IntervalFamily
    ell0: Fraction
    middle: frozenset
    extremal_left: frozenset
    extremal_right: frozenset

    def to_json(self):
        out = self.family.to_json()
        out.update({"ell0": str(self.ell0),
                    "middle": sorted(x + 1 for x in self.middle),
                    "extremal_left": sorted(x + 1 for x in self.extremal_left),
                    "extremal_right": sorted(x + 1 for x in self.extremal_right)})
        return out


@dataclass(frozen=True)
class MiddlePart:
    perm: tuple
    elements: tuple  # elements[i] is the element labelled i + 1 (right-endpoint order)
    family: IntervalFamily  # staged intervals of the middle, indexed by label

    def to_json(self):
        return {"perm": list(self.perm), "elements": [x + 1 for x in self.elements]}


def _spread(groups, h, sign):
    """Shift members of each coinciding group by multiples of ``h``.

    ``groups`` maps a line to elements sorted so the last one stays put
    (lefts, ``sign = -1``) or the first one stays put (rights, ``sign = +1``).
    """
    out = {}
    for line, members in groups.items():
        s = len(members)
        for rank, x in enumerate(members):
            steps = (s - 1 - rank) if sign < 0 else rank
            out[x] = line + sign * steps * h
    return out


def break_ties(canon):
    m = canon.magnitude
    ivs = canon.intervals
    n = len(ivs)
    nonextremal = [x for x, (l, r) in enumerate(ivs) if l > 0 and r < m - 1]
    for i in range(1, m):
        if not any(r == i for _, r in ivs):
            raise MissingExtremalAtLine(f"no right endpoint on line {i}", line=i)
    left_groups, right_groups = {}, {}
    for x in sorted(range(n), key=lambda x: ivs[x][1]):
        left_groups.setdefault(ivs[x][0], []).append(x)
    for x in sorted(range(n), key=lambda x: ivs[x][0]):
        right_groups.setdefault(ivs[x][1], []).append(x)
    most = max(len(g) for g in list(left_groups.values()) + list(right_groups.values()))
    h = Fraction(1, 4 * (most + 1))
    left = _spread(left_groups, h, -1)
    right = _spread(right_groups, h, +1)

    if nonextremal:
        lo = max(ivs[x][0] for x in nonextremal)
        hi = min(ivs[x][1] for x in nonextremal)
        if lo > hi:
            raise HeightExceeded(4)  # two disjoint non-extremal intervals give a 4-chain
        if lo < hi:
            ell0 = lo + Fraction(1, 2)
        else:
            # everything non-extremal meets at one line: pull the endpoints
            # sitting exactly on it half a step apart and use the line itself
            ell0 = Fraction(lo)
            for x in range(n):
                if left[x] == ell0:
                    left[x] -= h / 2
                if right[x] == ell0:
                    right[x] += h / 2
    else:
        ell0 = Fraction((m - 1) // 2) + Fraction(1, 2)

    family = IntervalFamily(tuple((left[x], right[x]) for x in range(n)), ORDER)
    middle = frozenset(x for x in range(n) if left[x] < ell0 < right[x])
    ext_left = frozenset(x for x in range(n) if x not in middle and right[x] < ell0)
    ext_right = frozenset(x for x in range(n) if x not in middle and left[x] > ell0)
    assert all(ivs[x][0] == 0 for x in ext_left) and all(ivs[x][1] == m - 1 for x in ext_right)
    assert len(middle) + len(ext_left) + len(ext_right) == n
    return StagedRepresentation(canon, family, ell0, middle, ext_left, ext_right)


def middle_part(staged):
    fam = staged.family
    elements = tuple(sorted(staged.middle, key=fam.right))
    label = {x: i + 1 for i, x in enumerate(elements)}
    perm = tuple(label[x] for x in sorted(staged.middle, key=fam.left))
    depth = perm_depth(perm)
    if depth > 2:
        raise DepthExceeded(depth)
    sub = IntervalFamily(tuple(fam[x] for x in elements), PERMUTATION)
    return MiddlePart(perm, elements, sub)


def _merge(staged, mid, rep):
    """Place everything on integers; returns the family of the reduced order."""
    fam = staged.family
    n = len(fam)
    k = len(mid.perm)
    lefts = sorted(staged.extremal_left, key=fam.right)
    rights = sorted(staged.extremal_right, key=fam.left)
    g = len(lefts) + len(rights) + 2
    out = [None] * n

    if k == 0:
        alpha = max(len(lefts), len(rights)) + 1
        for i, u in enumerate(lefts):
            out[u] = (i + 1 - alpha, i + 1)
        for i, w in enumerate(rights):
            out[w] = (len(lefts) + 1 + i, len(lefts) + 1 + i + alpha)
        return IntervalFamily(tuple(out), ORDER), alpha

    rep = rep.map(lambda v: v * g)
    short = min(distinct_lengths(rep))
    mid_l = [rep.left(v - 1) for v in mid.perm]  # left endpoints in ell-order
    mid_r = [rep.right(j) for j in range(k)]
    staged_l = [fam.left(mid.elements[v - 1]) for v in mid.perm]
    staged_r = [fam.right(x) for x in mid.elements]

    # relative positions, measured from the last middle left / first middle right
    left_pos = {}
    groups = {}
    for u in lefts:
        c = sum(1 for l in staged_l if l <= fam.right(u))
        groups.setdefault(c, []).append(u)
    for c, members in groups.items():
        for i, u in enumerate(members):
            if c == k:
                left_pos[u] = mid_l[-1] + 1 + i
            else:
                left_pos[u] = mid_l[c] - len(members) + i
    right_pos = {}
    groups = {}
    for w in rights:
        j = sum(1 for r in staged_r if r < fam.left(w))
        groups.setdefault(j, []).append(w)
    for j, members in groups.items():
        for i, w in enumerate(members):
            if j == 0:
                right_pos[w] = mid_r[0] - len(members) + i
            else:
                right_pos[w] = mid_r[j - 1] + 1 + i

    span_l = max([mid_l[-1] + g] + list(left_pos.values())) - min([mid_l[0]] + list(left_pos.values()))
    span_r = max([mid_r[-1]] + list(right_pos.values())) - min([mid_r[0] - g] + list(right_pos.values()))
    delta = max(0, max(span_l, span_r) + 1 - short)
    alpha = short + delta
    for v in range(1, k + 1):
        l, r = rep[v - 1]
        out[mid.elements[v - 1]] = (l - delta, r)
    for u, pos in left_pos.items():
        out[u] = (pos - delta - alpha, pos - delta)
    for w, pos in right_pos.items():
        out[w] = (pos, pos + alpha)
    return IntervalFamily(tuple(out), ORDER), alpha


def two_count_height3(order, return_stages=False):
    order = as_interval_order(order)
    if order.n == 0:
        return IntervalFamily((), ORDER)
    reduced, classes = collapse_twins(order)
    h = height(reduced)
    if h > 3:
        raise HeightExceeded(h)
    d = depth_order(reduced)
    if d > 2:
        raise DepthExceeded(d)
    canon = canonical_representation(reduced)
    staged = break_ties(canon)
    bad = verify_order_representation(reduced, staged.family)
    assert bad is None, f"tie breaking broke the order at {bad}"
    mid = middle_part(staged)
    rep = two_count_permutation(mid.perm)
    merged, alpha = _merge(staged, mid, rep)
    bad = verify_order_representation(reduced, merged)
    assert bad is None, f"merging broke the order at {bad}"
    result = expand_twins(merged, classes, order.n)
    assert verify_order_representation(order, result) is None
    assert len(distinct_lengths(result)) <= 2
    if return_stages:
        return result, {"canonical": canon, "staged": staged, "middle": mid,
                        "middle_rep": rep, "alpha": alpha}
    return result
