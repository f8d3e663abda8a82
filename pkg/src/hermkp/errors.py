class HermKPError(Exception):
    pass


class WeightMismatchError(HermKPError, ValueError):
    """Irrep and class labels are partitions of different integers."""


class CapacityError(HermKPError):
    """A requested size exceeds the supported ceiling of an engine."""


class InconsistencyError(HermKPError, AssertionError):
    """An internal cancellation that must be exact did not happen."""


class EngineDisagreement(HermKPError):
    def __init__(self, what: str, left, right):
        self.what = what
        self.left = left
        self.right = right
        super().__init__(f"{what}: {left} != {right}")
