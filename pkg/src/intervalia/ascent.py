"""Ascent sequences and their bijection with interval orders.

The bijection builds the order one element at a time.  Write the current
poset's distinct strict down-sets as ``D_0 < D_1 < ... < D_k`` (its levels);
the previous entry always equals the lowest level holding a maximal element.
A new entry ``i``:

* ``i <= previous``: the new element is maximal with down-set ``D_i``;
* ``i > previous``: let ``M`` be the maximal elements below level ``i``.
  Every element at level ``i`` or higher is put above ``M`` and the new
  element gets down-set ``D_i`` (everything, when ``i = k + 1``), so it
  sits alone on a fresh level.

Element ``j`` of the resulting order is the one created by entry ``j``.
"""

import re

from .errors import AscentBoundViolated, FirstEntryNonzero, NotAnInteger, ParseError
from .order import IntervalOrder, as_interval_order, bits


class AscentSequence(tuple):
    """An immutable, validated ascent sequence."""

    def __new__(cls, entries):
        entries = tuple(entries)
        validate(entries)
        return super().__new__(cls, entries)

    def __str__(self):
        return ",".join(map(str, self))

    def __repr__(self):
        return f"AscentSequence({str(self)!r})"


def ascents(entries):
    return sum(1 for a, b in zip(entries, entries[1:]) if b > a)


def validate(entries):
    if not entries:
        raise ParseError("ascent sequence must be non-empty")
    for i, e in enumerate(entries):
        if not isinstance(e, int) or isinstance(e, bool):
            raise NotAnInteger(f"entry {i} is not an integer", index=i)
    if entries[0] != 0:
        raise FirstEntryNonzero("first entry must be 0", index=0, value=entries[0])
    asc = 0
    for i in range(1, len(entries)):
        bound = asc + 1
        if not 0 <= entries[i] <= bound:
            raise AscentBoundViolated(i, entries[i], bound)
        if entries[i] > entries[i - 1]:
            asc += 1


def parse_ascent_sequence(text):
    """Parse ``"0,1,2,0"`` (parentheses and spaces tolerated)."""
    body = text.strip().strip("()[]").strip()
    if not body:
        raise ParseError("empty ascent sequence")
    entries = []
    for i, tok in enumerate(body.split(",")):
        tok = tok.strip()
        if not re.fullmatch(r"[+-]?\d+", tok):
            raise NotAnInteger(f"entry {i} is not an integer: {tok!r}", index=i, token=tok)
        entries.append(int(tok))
    return AscentSequence(entries)


def _levels(down, alive):
    """Distinct down-sets among ``alive`` elements, smallest first."""
    return sorted({down[x] for x in bits(alive)}, key=lambda d: bin(d).count("1"))


def order_from_ascent(seq):
    seq = seq if isinstance(seq, AscentSequence) else AscentSequence(seq)
    down = [0]
    for j in range(1, len(seq)):
        i, prev = seq[j], seq[j - 1]
        alive = (1 << j) - 1
        levels = _levels(down, alive)
        if i <= prev:
            new = levels[i]
        else:
            if i == len(levels):
                new = alive
            else:
                new = levels[i]
                level_of = {d: t for t, d in enumerate(levels)}
                has_up = 0
                for d in down:
                    has_up |= d
                low_max = sum(1 << x for x in range(j)
                              if not has_up >> x & 1 and level_of[down[x]] < i)
                for y in range(j):
                    if level_of[down[y]] >= i:
                        down[y] |= low_max
        down.append(new)
    return IntervalOrder(len(seq), down)


def ascent_of_order(order):
    """Inverse of :func:`order_from_ascent` (on isomorphism classes)."""
    order = as_interval_order(order)
    down = list(order.down)
    alive = (1 << order.n) - 1
    out = []
    while bin(alive).count("1") > 1:
        levels = _levels(down, alive)
        level_of = {d: t for t, d in enumerate(levels)}
        has_up = 0
        for x in bits(alive):
            has_up |= down[x]
        maximal = [x for x in bits(alive) if not has_up >> x & 1]
        i = min(level_of[down[x]] for x in maximal)
        x = max(y for y in maximal if level_of[down[y]] == i)
        out.append(i)
        alone = sum(1 for y in bits(alive) if down[y] == down[x]) == 1
        alive &= ~(1 << x)
        if alone and i + 1 < len(levels):
            delta = levels[i + 1] & ~levels[i]
            for y in bits(alive):
                if level_of[down[y]] > i:
                    down[y] &= ~delta
    out.append(0)
    return AscentSequence(reversed(out))


def enumerate_ascent_sequences(n):
    """All ascent sequences of length ``n`` in lexicographic order."""
    if n < 1:
        return

    def extend(prefix, asc):
        if len(prefix) == n:
            yield AscentSequence(prefix)
            return
        last = prefix[-1]
        for v in range(asc + 2):
            yield from extend(prefix + [v], asc + (v > last))

    yield from extend([0], 0)


def count_ascent_sequences(n):
    """Count by recursion on (remaining length, last entry, ascents) without building sequences."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(remaining, last, asc):
        if remaining == 0:
            return 1
        return sum(count(remaining - 1, v, asc + (1 if v > last else 0))
                   for v in range(0, asc + 2))

    return count(n - 1, 0, 0) if n >= 1 else 0
