"""Exception hierarchy shared by every solver module.

Each exception carries a short machine-readable ``code`` so the CLI can print
module-qualified diagnostics without string matching.
"""

from __future__ import annotations


class BcsError(Exception):
    code = "error"
    module = "bcs"

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.module}: {self.code}: {msg}" if msg else f"{self.module}: {self.code}"


class GraphFormatError(BcsError, ValueError):
    """Malformed graph, solution or instance file."""

    code = "parse_error"
    module = "graph"

    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class SizeExceedsCap(BcsError):
    code = "size_exceeds_cap"
    module = "oracle"


class NotATree(BcsError):
    code = "not_a_tree"
    module = "tree"

    def __init__(self, message: str, cycle_edge: tuple[int, int] | None = None) -> None:
        self.cycle_edge = cycle_edge
        super().__init__(message)


class NotSplit(BcsError):
    code = "not_split"
    module = "split"


class NotConnected(BcsError):
    code = "not_connected"
    module = "graph"


class NotProperColoring(BcsError):
    code = "not_proper_coloring"
    module = "bipartite"

    def __init__(self, message: str, edge: tuple[int, int] | None = None) -> None:
        self.edge = edge
        super().__init__(message)


class NoMajorityLeaf(BcsError):
    code = "no_majority_leaf"
    module = "bipartite"


class NotDiameter2(BcsError):
    code = "not_diameter_2"
    module = "diam2"

    def __init__(self, message: str, pair: tuple[int, int] | None = None) -> None:
        self.pair = pair
        super().__init__(message)


class AdjacentInput(BcsError):
    code = "adjacent_input"
    module = "diam2"


class NoCommonNeighbor(BcsError):
    code = "no_common_neighbor"
    module = "diam2"


class InvalidInstance(BcsError, ValueError):
    code = "invalid_instance"
    module = "reductions"


class BudgetTooSmall(BcsError, ValueError):
    code = "budget_too_small"
    module = "reductions"


class NotTargetSize(BcsError):
    code = "not_target_size"
    module = "reductions"


class Unsupported(BcsError):
    """No polynomial solver applies and the instance is above the oracle cap."""

    code = "unsupported"
    module = "dispatch"

    def __init__(self, message: str, report=None) -> None:
        self.report = report
        super().__init__(message)
