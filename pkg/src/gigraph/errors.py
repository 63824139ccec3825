"""Exception types shared across the package."""


class GIGraphError(Exception):
    """Base class for all domain errors."""


class BadModulus(GIGraphError):
    def __init__(self, n: int):
        super().__init__(f"modulus must be at least 3, got {n}")
        self.n = n


class BadStep(GIGraphError):
    def __init__(self, step: int, n: int):
        super().__init__(f"step {step} is 0 or n/2 modulo {n}")
        self.step = step
        self.n = n


class EmptyJ(GIGraphError):
    def __init__(self):
        super().__init__("at least one step value is required")


class NotAUnit(GIGraphError):
    def __init__(self, a: int, n: int):
        super().__init__(f"{a} is not a unit modulo {n}")
        self.a = a
        self.n = n


class NotSubgroup(GIGraphError):
    def __init__(self, n: int, members):
        super().__init__(f"{sorted(members)} is not a multiplicative subgroup mod {n}")


class NotInStabilizer(GIGraphError):
    """Raised when a unit does not map the step multiset onto plus/minus itself."""

    def __init__(self, a: int, spec):
        super().__init__(f"unit {a} does not stabilize the step multiset of {spec}")
        self.a = a


class StepsDiffer(GIGraphError):
    def __init__(self, s1: int, s2: int):
        super().__init__(f"layers {s1} and {s2} have different step values")


class BadClass(GIGraphError):
    def __init__(self, i: int, d: int):
        super().__init__(f"residue class {i} outside [0, {d})")


class TooFewLayers(GIGraphError):
    def __init__(self, t: int):
        super().__init__(f"operation needs at least 4 layers, got {t}")


class NotDecomposable(GIGraphError):
    """The step multiset is not of the form [k] * (primitive set), up to unit scaling."""

    NON_UNIT_STEP = "non-unit-step"
    UNEQUAL_MULTIPLICITIES = "unequal-multiplicities"

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(detail or reason)
        self.reason = reason


class TooLarge(GIGraphError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} has size {size}, above the cap {cap}")
        self.size = size
        self.cap = cap


class CapExceeded(GIGraphError):
    def __init__(self, cap: int, what: str = "group closure"):
        super().__init__(f"{what} exceeded the cap {cap}")
        self.cap = cap


class RadiiCountMismatch(GIGraphError):
    def __init__(self, got: int, want: int):
        super().__init__(f"expected {want} radii, got {got}")
