"""Finite posets and interval orders.

Elements are ``0..n-1``; the strict relation is stored as bitmasks, with
``down[y]`` holding every ``x`` such that ``x < y``.  All objects are
immutable once built.
"""

from collections import namedtuple
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import IndexMismatch, NotAnIntervalOrder, NotAPoset, PPCycleDetected
from .intervals import SCHEMA, IntervalFamily


def bits(mask):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite strict partial order."""

    def __init__(self, n, down, labels=None):
        self.n = n
        self.down = tuple(down)
        if len(self.down) != n:
            raise NotAPoset("down-set count does not match n")
        self.labels = tuple(labels) if labels is not None else None
        self._check()

    def _check(self):
        full = (1 << self.n) - 1
        for y, d in enumerate(self.down):
            if d & ~full:
                raise NotAPoset(f"element {y} has an out-of-range predecessor")
            if d >> y & 1:
                raise NotAPoset(f"relation is not irreflexive at {y}")
            for x in bits(d):
                if self.down[x] & ~d:
                    raise NotAPoset(f"relation is not transitive at {x} < {y}")

    @classmethod
    def from_relation(cls, n, pairs, close=True, labels=None):
        """Build from ``(x, y)`` pairs meaning ``x < y`` (0-based).

        With ``close`` the transitive closure is taken first, so cover
        relations alone suffice.
        """
        down = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise NotAPoset(f"pair ({x}, {y}) out of range for n={n}")
            down[y] |= 1 << x
        if close:
            down = _close(down)
        return cls(n, down, labels)

    @cached_property
    def up(self):
        up = [0] * self.n
        for y, d in enumerate(self.down):
            for x in bits(d):
                up[x] |= 1 << y
        return tuple(up)

    @cached_property
    def incomparable(self):
        full = (1 << self.n) - 1
        return tuple(full & ~(self.down[x] | self.up[x] | 1 << x) for x in range(self.n))

    def less(self, x, y):
        return bool(self.down[y] >> x & 1)

    def comparable(self, x, y):
        return self.less(x, y) or self.less(y, x)

    def pairs(self):
        """All ``(x, y)`` with ``x < y``, sorted."""
        return sorted((x, y) for y in range(self.n) for x in bits(self.down[y]))

    def covers(self):
        out = []
        for y in range(self.n):
            d = self.down[y]
            for x in bits(d):
                if not any(self.down[z] >> x & 1 for z in bits(d)):
                    out.append((x, y))
        return sorted(out)

    def dual(self):
        return type(self)(self.n, self.up, self.labels)

    def restrict(self, elements):
        """Induced subposet on ``elements``, relabelled ``0..len-1`` in the given order."""
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        down = []
        for e in elements:
            down.append(sum(1 << index[x] for x in bits(self.down[e]) if x in index))
        labels = [self.label(e) for e in elements]
        return type(self)(len(elements), down, labels)

    def label(self, x):
        return self.labels[x] if self.labels is not None else str(x + 1)

    def linear_extension(self):
        return sorted(range(self.n), key=lambda x: (bin(self.down[x]).count("1"), x))

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.down == other.down

    def __hash__(self):
        return hash((self.n, self.down))

    def __repr__(self):
        rel = ", ".join(f"{x + 1}<{y + 1}" for x, y in self.covers())
        return f"{type(self).__name__}(n={self.n}, covers=[{rel}])"

    def to_json(self):
        return {"schema": SCHEMA, "n": self.n,
                "relation": [[x + 1, y + 1] for x, y in self.pairs()]}

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])
        return cls.from_relation(n, [(int(x) - 1, int(y) - 1) for x, y in data["relation"]])


def _close(down):
    n = len(down)
    down = list(down)
    changed = True
    while changed:
        changed = False
        for y in range(n):
            d = down[y]
            for x in bits(d):
                d |= down[x]
            if d != down[y]:
                down[y] = d
                changed = True
                if d >> y & 1:
                    raise NotAPoset(f"relation has a cycle through {y}")
    return down


def find_two_plus_two(poset):
    """Return ``(a, b, c, d)`` with a<b, c<d and the chains mutually incomparable, or None."""
    pairs = poset.pairs()
    for (a, b), (c, d) in combinations(pairs, 2):
        if len({a, b, c, d}) < 4:
            continue
        if not poset.less(a, d) and not poset.less(c, b):
            return a, b, c, d
    return None


class IntervalOrder(Poset):
    """A poset known to be (2+2)-free."""

    def _check(self):
        super()._check()
        witness = find_two_plus_two(self)
        if witness is not None:
            raise NotAnIntervalOrder("poset contains 2+2",
                                     witness=[w + 1 for w in witness])

    @classmethod
    def from_poset(cls, poset):
        if isinstance(poset, IntervalOrder):
            return poset
        return cls(poset.n, poset.down, poset.labels)


def as_interval_order(poset):
    return IntervalOrder.from_poset(poset)


def chain(n):
    return IntervalOrder(n, [(1 << i) - 1 for i in range(n)])


def antichain(n):
    return IntervalOrder(n, [0] * n)


def order_from_family(family):
    """The interval order realized by ``family``: x < y iff r_x < l_y."""
    n = len(family)
    down = []
    for y in range(n):
        ly = family.left(y)
        down.append(sum(1 << x for x in range(n) if family.right(x) < ly))
    return IntervalOrder(n, down)


# ---------------------------------------------------------------------------
# canonical representation


@dataclass(frozen=True)
class CanonicalRepresentation:
    magnitude: int
    intervals: tuple  # per element (l, r), integers in 0..m-1

    def family(self):
        return IntervalFamily(self.intervals)

    def multiset(self):
        return sorted(self.intervals)

    def to_json(self):
        out = self.family().to_json()
        out["magnitude"] = self.magnitude
        return out


def canonical_representation(order):
    order = as_interval_order(order)
    downs = sorted(set(order.down), key=lambda d: bin(d).count("1"))
    ups = sorted(set(order.up), key=lambda u: bin(u).count("1"))
    m = len(downs)
    # distinct down-sets and up-sets of an interval order are equinumerous
    assert len(ups) == m, (len(ups), m)
    d_rank = {d: i for i, d in enumerate(downs)}
    u_rank = {u: i for i, u in enumerate(ups)}
    intervals = tuple((d_rank[order.down[x]], m - 1 - u_rank[order.up[x]])
                      for x in range(order.n))
    return CanonicalRepresentation(m, intervals)


def magnitude(order):
    return canonical_representation(order).magnitude


# ---------------------------------------------------------------------------
# structural statistics


def longest_chain(poset, within=None):
    """A longest chain (bottom to top) among the elements of mask ``within``."""
    if within is None:
        within = (1 << poset.n) - 1
    best = {}
    for y in poset.linear_extension():
        if not within >> y & 1:
            continue
        prev = None
        for x in bits(poset.down[y] & within):
            if prev is None or len(best[x]) > len(best[prev]):
                prev = x
        best[y] = (best[prev] if prev is not None else ()) + (y,)
    if not best:
        return ()
    return max(best.values(), key=len)


def height(poset):
    return len(longest_chain(poset))


def find_chain_plus_one(poset, r):
    """An ``r``-chain plus one element incomparable to all of it, or None.

    Returns ``(chain, isolated)``.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    for x in range(poset.n):
        ch = longest_chain(poset, poset.incomparable[x])
        if len(ch) >= r:
            return ch[:r], x
    return None


PPArc = namedtuple("PPArc", "pith peel below above")


@dataclass(frozen=True)
class PPGraph:
    """Arcs run from pith to peel; ``witness`` keeps one 3+1 copy per arc."""

    n: int
    arcs: frozenset
    witness: dict

    def successors(self, y):
        return sorted(x for (p, x) in self.arcs if p == y)

    def piths(self):
        return {y for y, _ in self.arcs}

    def peels(self):
        return {x for _, x in self.arcs}

    def isolated(self):
        touched = self.piths() | self.peels()
        return [v for v in range(self.n) if v not in touched]

    def to_json(self):
        return {"schema": SCHEMA, "n": self.n,
                "arcs": [[y + 1, x + 1] for y, x in sorted(self.arcs)]}


def pp_graph(order):
    arcs = set()
    witness = {}
    for x in range(order.n):
        inc = order.incomparable[x]
        for y in bits(inc):
            below = order.down[y] & inc
            above = order.up[y] & inc
            if below and above:
                arcs.add((y, x))
                a = next(bits(below))
                b = next(bits(above))
                witness[(y, x)] = PPArc(y, x, a, b)
    return PPGraph(order.n, frozenset(arcs), witness)


def longest_pp_path(graph):
    """Vertices of a longest directed path; raises PPCycleDetected on a cycle."""
    succ = {v: graph.successors(v) for v in range(graph.n)}
    memo = {}
    state = {}

    def visit(v):
        if state.get(v) == 1:
            raise PPCycleDetected("PP graph has a directed cycle", vertex=v + 1)
        if v in memo:
            return memo[v]
        state[v] = 1
        best = ()
        for w in succ[v]:
            p = visit(w)
            if len(p) > len(best):
                best = p
        state[v] = 2
        memo[v] = (v,) + best
        return memo[v]

    paths = [visit(v) for v in range(graph.n)]
    return max(paths, key=len) if paths else ()


def depth_order(order):
    """Vertex count of a longest path in the PP graph (1 when there are no arcs)."""
    return max(1, len(longest_pp_path(pp_graph(order)))) if order.n else 0


def is_semiorder(order):
    return find_chain_plus_one(order, 3) is None


# ---------------------------------------------------------------------------
# springs

# Strict relations of the six-element spring, by role (1-based).
SPRING_RELATIONS = frozenset({(1, 4), (1, 5), (1, 3), (1, 6), (2, 3), (2, 6),
                              (4, 3), (4, 6), (3, 6)})
SPRING_LONG = (4, 5)
SPRING_SHORT = (2, 3)


@dataclass(frozen=True)
class SpringWitness:
    roles: tuple  # roles[i] is the element playing role i + 1
    dual: bool

    @property
    def long(self):
        return tuple(self.roles[r - 1] for r in SPRING_LONG)

    @property
    def short(self):
        return tuple(self.roles[r - 1] for r in SPRING_SHORT)

    def elements(self):
        return frozenset(self.roles)

    def to_json(self):
        return {"roles": {str(i + 1): e + 1 for i, e in enumerate(self.roles)},
                "dual": self.dual}


def _is_spring(poset, roles, dual):
    for i in range(6):
        for j in range(6):
            if i == j:
                continue
            a, b = roles[i], roles[j]
            want = (i + 1, j + 1) in SPRING_RELATIONS
            have = poset.less(b, a) if dual else poset.less(a, b)
            if want != have:
                return False
    return True


def _springs_one_way(poset, dual):
    down, up = (poset.up, poset.down) if dual else (poset.down, poset.up)
    inc = poset.incomparable
    found = []
    for r3 in range(poset.n):
        for r4 in bits(down[r3]):
            for r6 in bits(up[r3]):
                for r5 in bits(inc[r3] & inc[r4] & inc[r6]):
                    for r1 in bits(down[r4] & down[r5]):
                        cand = down[r3] & inc[r1] & inc[r4] & inc[r5]
                        for r2 in bits(cand):
                            roles = (r1, r2, r3, r4, r5, r6)
                            if _is_spring(poset, roles, dual):
                                found.append(SpringWitness(roles, dual))
    return found


def find_springs(order):
    """Every induced copy of the spring or its dual, with roles recorded."""
    out = _springs_one_way(order, False) + _springs_one_way(order, True)
    return sorted(out, key=lambda w: (w.dual, w.roles))


# ---------------------------------------------------------------------------
# twins and verification


def collapse_twins(order):
    """Return ``(reduced, classes)``; reduced element ``i`` stands for ``classes[i]``."""
    groups = {}
    for x in range(order.n):
        groups.setdefault((order.down[x], order.up[x]), []).append(x)
    classes = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    reduced = order.restrict([c[0] for c in classes])
    return reduced, tuple(classes)


def expand_twins(family, classes, n):
    """Give every element the interval of its twin-class representative."""
    out = [None] * n
    for i, cls in enumerate(classes):
        for x in cls:
            out[x] = family[i]
    return IntervalFamily(tuple(out), family.role)


Violation = namedtuple("Violation", "x y expected actual")


def verify_order_representation(order, family):
    """None if ``family`` represents ``order``, else the first offending pair.

    ``expected``/``actual`` say whether x < y holds in the order and in the family.
    """
    if len(family) != order.n:
        raise IndexMismatch(f"family has {len(family)} intervals, order has {order.n} elements",
                            family=len(family), order=order.n)
    for x in range(order.n):
        rx = family.right(x)
        for y in range(order.n):
            if x == y:
                continue
            expected = order.less(x, y)
            actual = rx < family.left(y)
            if expected != actual:
                return Violation(x, y, expected, actual)
    return None
