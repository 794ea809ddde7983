"""Exception types shared across the package."""

from __future__ import annotations


class KrnnError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedFormat(KrnnError):
    """A TSPLIB header declares a type/format outside the supported set."""

    def __init__(self, key: str, value: str):
        self.key = key
        self.value = value
        super().__init__(f"unsupported {key}: {value!r}")


class MalformedFile(KrnnError):
    """A TSPLIB file violates the format (bad token, wrong counts, ...)."""

    def __init__(self, reason: str, line: int | None = None):
        self.reason = reason
        self.line = line
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"malformed TSPLIB file{at}: {reason}")


class SelfLoop(KrnnError):
    """cost(i, i) was requested; diagonal entries are never valid edges."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop cost requested for vertex {vertex}")


class VertexOutOfRange(KrnnError):
    def __init__(self, vertex: int, dimension: int):
        self.vertex = vertex
        self.dimension = dimension
        super().__init__(f"vertex {vertex} outside [0, {dimension})")


class KOutOfRange(KrnnError):
    def __init__(self, k: int, low: int, high: int):
        self.k = k
        super().__init__(f"k={k} outside [{low}, {high}]")


class BudgetExceeded(KrnnError):
    """A configured work budget (start count or expanded nodes) was hit."""

    def __init__(self, spent: int, budget: int, what: str = "nodes"):
        self.spent = spent
        self.budget = budget
        self.what = what
        super().__init__(f"{what} budget exceeded: {spent} > {budget}")


class NotAPermutation(KrnnError):
    def __init__(self, reason: str):
        super().__init__(f"tour is not a permutation: {reason}")


class LengthMismatch(KrnnError):
    def __init__(self, claimed: int, recomputed: int):
        self.claimed = claimed
        self.recomputed = recomputed
        super().__init__(f"tour length {claimed} != recomputed {recomputed}")


class TooLarge(KrnnError):
    """Instance exceeds an exact solver's size cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"instance with n={n} exceeds cap {cap}")


class MissingOptimum(KrnnError):
    def __init__(self, dataset: str):
        self.dataset = dataset
        super().__init__(
            f"no optimum for {dataset!r}: not in the sidecar and too large to solve exactly"
        )


class NonPositiveOptimum(KrnnError):
    def __init__(self, optimum: int):
        self.optimum = optimum
        super().__init__(f"optimum must be positive, got {optimum}")


class ResultBelowOptimum(KrnnError):
    """A heuristic result beat the declared optimum: the optimum (or tour) is wrong."""

    def __init__(self, dataset: str, result: int, optimum: int):
        self.dataset = dataset
        self.result = result
        self.optimum = optimum
        super().__init__(
            f"{dataset}: result {result} < declared optimum {optimum}; "
            "sidecar value or tour validation is wrong"
        )


class SolverError(KrnnError):
    """A solver failure, wrapped with the dataset it occurred on."""

    def __init__(self, dataset: str, cause: Exception):
        self.dataset = dataset
        self.cause = cause
        super().__init__(f"{dataset}: {cause}")
