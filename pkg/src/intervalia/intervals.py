"""Interval families with exact rational endpoints, plus their JSON form."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import IndexMismatch, ParseError

ORDER = "order"
PERMUTATION = "permutation"

SCHEMA = "intervalia/1"


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot make an exact rational from {value!r}")


def parse_rational(text):
    """Parse ``"p/q"`` or ``"p"``; q must be positive and the fraction reduced."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"not a rational: {text!r}") from None
    if q <= 0:
        raise ParseError(f"denominator must be positive: {text!r}")
    value = Fraction(p, q)
    if value.numerator != p or value.denominator != q:
        raise ParseError(f"rational not in lowest terms: {text!r}")
    return value


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class IntervalFamily:
    """Closed intervals ``intervals[i] = (l, r)`` indexed by element.

    For an order representation index ``i`` is element ``i``; for a
    permutation representation index ``i`` holds the interval of value
    ``i + 1``.
    """

    intervals: tuple
    role: str = ORDER

    def __post_init__(self):
        ivs = tuple((to_fraction(l), to_fraction(r)) for l, r in self.intervals)
        for i, (l, r) in enumerate(ivs):
            if l > r:
                raise ValueError(f"interval {i} has l > r: [{l}, {r}]")
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    def __iter__(self):
        return iter(self.intervals)

    def left(self, i):
        return self.intervals[i][0]

    def right(self, i):
        return self.intervals[i][1]

    def length(self, i):
        l, r = self.intervals[i]
        return r - l

    def lengths(self):
        return [r - l for l, r in self.intervals]

    def is_integral(self):
        return all(l.denominator == 1 and r.denominator == 1 for l, r in self.intervals)

    def scaled_to_integers(self):
        """Multiply every endpoint by the lcm of all denominators."""
        den = 1
        for l, r in self.intervals:
            den = lcm(den, l.denominator, r.denominator)
        return self.map(lambda v: v * den)

    def map(self, fn):
        return IntervalFamily(tuple((fn(l), fn(r)) for l, r in self.intervals), self.role)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "role": self.role,
            "intervals": [
                {"elem": i + 1, "l": format_rational(l), "r": format_rational(r)}
                for i, (l, r) in enumerate(self.intervals)
            ],
        }

    @classmethod
    def from_json(cls, data, role=None):
        items = data["intervals"]
        by_elem = {}
        for item in items:
            by_elem[int(item["elem"])] = (parse_rational(str(item["l"])),
                                          parse_rational(str(item["r"])))
        n = len(by_elem)
        if sorted(by_elem) != list(range(1, n + 1)):
            raise IndexMismatch("interval ids must be exactly 1..n", ids=sorted(by_elem))
        return cls(tuple(by_elem[i] for i in range(1, n + 1)),
                   role or data.get("role", ORDER))


def distinct_lengths(family):
    """Sorted list of the distinct interval lengths of ``family``."""
    return sorted(set(family.lengths()))
