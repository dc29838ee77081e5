"""Exhaustive searches over small interval orders and permutations.

Every search walks its objects in a fixed order, optionally farms the work
out to a process pool, and merges results back in input order, so serial
and parallel runs produce identical reports.
"""

import json
import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from multiprocessing import get_context
from pathlib import Path

from .ascent import (count_ascent_sequences, enumerate_ascent_sequences, order_from_ascent,
                     parse_ascent_sequence, AscentSequence)
from .errors import NotApplicable, TooLarge
from .intervals import SCHEMA
from .kcount import is_k_count_order, is_k_count_perm
from .order import depth_order, find_chain_plus_one, find_springs, pp_graph
from .perm import format_permutation, parse_permutation, perm_depth

ORDER_GUARD = 10
PERM_GUARD = 9


@dataclass
class SearchReport:
    kind: str
    parameters: dict
    counts: dict = field(default_factory=dict)  # n -> {statistic: value}
    witnesses: list = field(default_factory=list)
    wall_clock: float = 0.0
    seed: int = None

    def to_json(self):
        return {"schema": SCHEMA, "kind": self.kind, "parameters": self.parameters,
                "counts": {str(n): c for n, c in sorted(self.counts.items())},
                "witnesses": self.witnesses, "wall_clock": round(self.wall_clock, 3),
                "seed": self.seed}

    @classmethod
    def from_json(cls, data):
        return cls(data["kind"], data["parameters"],
                   {int(n): c for n, c in data["counts"].items()},
                   list(data["witnesses"]), data.get("wall_clock", 0.0), data.get("seed"))

    def save(self, directory):
        path = Path(directory)
        path.mkdir(parents=True, exist_ok=True)
        out = path / f"{self.kind}-n{self.parameters.get('n_max')}.json"
        out.write_text(json.dumps(self.to_json(), indent=2) + "\n")
        return out

    @classmethod
    def load(cls, path):
        return cls.from_json(json.loads(Path(path).read_text()))


def ordered_map(fn, items, jobs=1, chunksize=64):
    """``map`` that may run in worker processes but always returns input order."""
    items = list(items)
    if jobs <= 1 or len(items) < 2 * chunksize:
        return [fn(x) for x in items]
    with get_context("fork").Pool(jobs) as pool:
        return list(pool.imap(fn, items, chunksize))


def _guard(n_max, limit, allow_large):
    if n_max > limit and not allow_large:
        raise TooLarge(f"n_max={n_max} exceeds the guard {limit}; pass allow_large",
                       n=n_max, limit=limit)


# ---------------------------------------------------------------------------
# orders


def _order_task(args):
    entries, four_plus_one_free, depth_at_most_2 = args
    order = order_from_ascent(AscentSequence(entries))
    if four_plus_one_free and find_chain_plus_one(order, 4) is not None:
        return None
    if depth_at_most_2 and depth_order(order) > 2:
        return None
    verdict = is_k_count_order(order, 2)
    return verdict.answer, verdict.colorings_tried


def search_non_2count_orders(n_max, four_plus_one_free=True, depth_at_most_2=True,
                             jobs=1, allow_large=False, n_min=1):
    _guard(n_max, ORDER_GUARD, allow_large)
    start = time.perf_counter()
    report = SearchReport("non-2count-orders", {
        "n_min": n_min, "n_max": n_max, "k": 2, "four_plus_one_free": four_plus_one_free,
        "depth_at_most_2": depth_at_most_2})
    for n in range(n_min, n_max + 1):
        seqs = list(enumerate_ascent_sequences(n))
        results = ordered_map(_order_task, [(tuple(s), four_plus_one_free, depth_at_most_2)
                                            for s in seqs], jobs)
        passed = [(s, r) for s, r in zip(seqs, results) if r is not None]
        found = [str(s) for s, (answer, _) in passed if not answer]
        report.counts[n] = {"orders": len(seqs), "filtered": len(passed),
                            "non_2count": len(found),
                            "lp_calls": sum(tried for _, (_, tried) in passed)}
        report.witnesses.extend(found)
    report.wall_clock = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# permutations


def _perm_task(args):
    perm, shortcuts = args
    depth = perm_depth(perm)
    if shortcuts and depth != 3:
        return depth, None, 0
    verdict = is_k_count_perm(perm, 3)
    return depth, verdict.answer, verdict.colorings_tried


def search_non_3count_perms(n_max, jobs=1, shortcuts=True, allow_large=False, n_min=1):
    """Depth-3 permutations without a 3-count representation.

    With ``shortcuts`` only depth-3 permutations are tested: depth at most 2
    is already 2-count, and a decreasing run of four forces four nested
    intervals and hence four lengths.
    """
    _guard(n_max, PERM_GUARD, allow_large)
    start = time.perf_counter()
    report = SearchReport("non-3count-perms", {"n_min": n_min, "n_max": n_max, "k": 3,
                                               "shortcuts": shortcuts})
    for n in range(n_min, n_max + 1):
        perms = list(permutations(range(1, n + 1)))
        results = ordered_map(_perm_task, [(p, shortcuts) for p in perms], jobs)
        stats = {"perms": len(perms), "depth3": 0, "tested": 0, "non_3count": 0,
                 "lp_calls": 0, "shortcut_mismatch": 0}
        for p, (depth, answer, tried) in zip(perms, results):
            stats["depth3"] += depth == 3
            if answer is None:
                continue
            stats["tested"] += 1
            stats["lp_calls"] += tried
            if depth == 3 and not answer:
                stats["non_3count"] += 1
                report.witnesses.append(format_permutation(p))
            if answer != (depth <= 3) and depth != 3:
                stats["shortcut_mismatch"] += 1
        report.counts[n] = stats
    report.wall_clock = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# the spring criterion


def spring_criterion(order, springs=None):
    """Is there a red/green colouring with peels red, piths green and no spring
    whose long roles are red and short roles green?  Returns (bool, colouring)."""
    graph = pp_graph(order)
    springs = find_springs(order) if springs is None else springs
    fixed = {x: "red" for x in graph.peels()}
    fixed.update({y: "green" for y in graph.piths()})
    free = [x for x in range(order.n) if x not in fixed]
    color = dict(fixed)
    forced = [[(e, "red") for e in w.long] + [(e, "green") for e in w.short] for w in springs]

    def extend(i):
        if any(all(color.get(e) == c for e, c in want) for want in forced):
            return False
        if i == len(free):
            return True
        for c in ("green", "red"):
            color[free[i]] = c
            if extend(i + 1):
                return True
            del color[free[i]]
        return False

    if len(fixed) < len(graph.peels()) + len(graph.piths()):
        return False, None  # an element that is both peel and pith
    if extend(0):
        return True, tuple(color[x] for x in range(order.n))
    return False, None


def conjecture_check(order):
    if find_chain_plus_one(order, 4) is not None:
        raise NotApplicable("order contains 4+1")
    depth = depth_order(order)
    if depth > 2:
        raise NotApplicable(f"order has depth {depth}", depth=depth)
    criterion, coloring = spring_criterion(order)
    two = is_k_count_order(order, 2).answer
    return {"criterion": criterion, "two_count": two, "agree": criterion == two,
            "coloring": list(coloring) if coloring else None}


def _conjecture_task(entries):
    order = order_from_ascent(AscentSequence(entries))
    try:
        res = conjecture_check(order)
    except NotApplicable:
        return None
    return res["criterion"], res["two_count"]


def search_conjecture(n_max, jobs=1, allow_large=False, n_min=1):
    _guard(n_max, ORDER_GUARD, allow_large)
    start = time.perf_counter()
    report = SearchReport("conjecture", {"n_min": n_min, "n_max": n_max})
    for n in range(n_min, n_max + 1):
        seqs = list(enumerate_ascent_sequences(n))
        results = ordered_map(_conjecture_task, [tuple(s) for s in seqs], jobs)
        applicable = [(s, r) for s, r in zip(seqs, results) if r is not None]
        disagree = [str(s) for s, (c, t) in applicable if c != t]
        report.counts[n] = {"orders": len(seqs), "applicable": len(applicable),
                            "criterion_true": sum(c for _, (c, _) in applicable),
                            "two_count": sum(t for _, (_, t) in applicable),
                            "disagree": len(disagree)}
        report.witnesses.extend(disagree)
    report.wall_clock = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# sampling and re-verification


def random_ascent_sequence(n, rng):
    entries, asc = [0], 0
    for _ in range(n - 1):
        v = rng.randint(0, asc + 1)
        asc += v > entries[-1]
        entries.append(v)
    return AscentSequence(entries)


def sample_spring_orders(count, seed=0, sizes=(6, 7, 8, 9, 10)):
    """``count`` distinct random orders containing a spring, reproducible from ``seed``."""
    rng = random.Random(seed)
    seen, out = set(), []
    while len(out) < count:
        seq = random_ascent_sequence(rng.choice(sizes), rng)
        if seq in seen:
            continue
        seen.add(seq)
        if find_springs(order_from_ascent(seq)):
            out.append(seq)
    return out


def verify_report(report):
    """Re-run the oracle on every archived witness; True when all still fail."""
    if report.kind == "non-2count-orders":
        return all(not is_k_count_order(order_from_ascent(parse_ascent_sequence(w)), 2)
                   for w in report.witnesses)
    if report.kind == "non-3count-perms":
        return all(not is_k_count_perm(parse_permutation(w), 3) for w in report.witnesses)
    if report.kind == "conjecture":
        for w in report.witnesses:
            res = conjecture_check(order_from_ascent(parse_ascent_sequence(w)))
            if res["agree"]:
                return False
        return True
    raise ValueError(f"unknown report kind {report.kind!r}")


def enumeration_counts(n_max):
    """(enumerated, independently counted) ascent sequences for n = 1..n_max."""
    return [(sum(1 for _ in enumerate_ascent_sequences(n)), count_ascent_sequences(n))
            for n in range(1, n_max + 1)]
