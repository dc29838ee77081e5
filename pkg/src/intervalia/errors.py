"""Exception hierarchy.

Every domain error carries a stable ``code`` and a ``details`` mapping so the
CLI can emit structured JSON without knowing each class.
"""


class IntervaliaError(Exception):
    code = "IntervaliaError"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details

    def to_json(self):
        out = {"error": self.code, "message": str(self)}
        out.update({k: _jsonable(v) for k, v in self.details.items()})
        return out


def _jsonable(value):
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


# parsing
class ParseError(IntervaliaError):
    code = "ParseError"


class NotAnInteger(ParseError):
    code = "NotAnInteger"


class FirstEntryNonzero(ParseError):
    code = "FirstEntryNonzero"


class AscentBoundViolated(ParseError):
    code = "AscentBoundViolated"

    def __init__(self, index, value=None, bound=None):
        super().__init__(
            f"entry {index} = {value} exceeds ascent bound {bound}",
            index=index, value=value, bound=bound)
        self.index = index


class NotAPermutation(ParseError):
    code = "NotAPermutation"


# structure
class NotAPoset(IntervaliaError):
    code = "NotAPoset"


class NotAnIntervalOrder(IntervaliaError):
    code = "NotAnIntervalOrder"


class PPCycleDetected(IntervaliaError):
    code = "PPCycleDetected"


class IndexMismatch(IntervaliaError):
    code = "IndexMismatch"


class NotSorted(IntervaliaError):
    code = "NotSorted"


# construction
class StructureViolation(IntervaliaError):
    code = "StructureViolation"


class InfeasibleNormalization(IntervaliaError):
    code = "InfeasibleNormalization"


class KeyInequalityViolated(IntervaliaError):
    code = "KeyInequalityViolated"


class DepthExceeded(IntervaliaError):
    code = "DepthExceeded"

    def __init__(self, depth, limit=2):
        super().__init__(f"depth {depth} exceeds {limit}", depth=depth, limit=limit)
        self.depth = depth


class HeightExceeded(IntervaliaError):
    code = "HeightExceeded"

    def __init__(self, height, limit=3):
        super().__init__(f"height {height} exceeds {limit}", height=height, limit=limit)
        self.height = height


class MissingExtremalAtLine(IntervaliaError):
    code = "MissingExtremalAtLine"


# solver / search
class MalformedSystem(IntervaliaError):
    code = "MalformedSystem"


class TooLarge(IntervaliaError):
    code = "TooLarge"


class NotApplicable(IntervaliaError):
    code = "NotApplicable"


class UnsupportedTarget(IntervaliaError):
    code = "UnsupportedTarget"
