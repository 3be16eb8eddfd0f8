class NakayamaError(ValueError):
    """Invalid user input: bad Kupisch series, module coordinates or Morita spec."""
    exit_code = 1


class NakayamaInternalError(RuntimeError):
    """The engine reached a state the theory rules out."""
    exit_code = 2


'''core_algebra'''


class EmptySeries(NakayamaError):
    def __init__(self):
        super().__init__("| Kupisch: the series is empty")


class NonPositiveLength(NakayamaError):
    def __init__(self, index: int, value: int):
        self.index = index
        super().__init__(f"| Kupisch: c_{index}={value} is not a positive length")


class KupischConditionViolated(NakayamaError):
    def __init__(self, index: int, reason: str = ''):
        self.index = index
        super().__init__(f"| Kupisch: condition violated at index {index}. {reason}".rstrip())


class DisconnectedQuiver(NakayamaError):
    def __init__(self, shape: str):
        super().__init__(f"| Kupisch: the {shape} quiver is not connected")


class LimitExceeded(NakayamaError):
    exit_code = 2

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"| Limit: n={n} is above the configured cap {cap}")


'''mod_homalg'''


class InvalidModule(NakayamaError):
    def __init__(self, vertex: int, length: int, reason: str):
        super().__init__(f"| Module: ({vertex},{length}) is invalid. {reason}")


class ZeroModuleError(NakayamaError):
    def __init__(self, what: str = 'state'):
        super().__init__(f"| Module: the {what} is the zero module")


class NotSelfinjective(NakayamaError):
    def __init__(self):
        super().__init__("| Algebra: a selfinjective (constant cyclic) series is required")


'''invariants'''


class NotCoGen(NakayamaError):
    def __init__(self, missing: list):
        self.missing = missing
        super().__init__(f"| CoGen: summand set misses {missing}")


'''search_verify'''


class UnknownClaim(NakayamaError):
    def __init__(self, claim_id: str, known: list):
        super().__init__(f"| Verify: unknown claim {claim_id!r}, choose from {', '.join(known)}")


'''gendo_morita'''


class DuplicateSpecialPoint(NakayamaError):
    def __init__(self, point: int):
        super().__init__(f"| Morita: special point {point} appears twice")


class EmptySpecialSet(NakayamaError):
    def __init__(self):
        super().__init__("| Morita: at least one special point is required")


class LoewyTooSmall(NakayamaError):
    def __init__(self, loewy: int):
        super().__init__(f"| Morita: Loewy length {loewy} < 2")


class InvalidSpecialPoint(NakayamaError):
    def __init__(self, point: int, base_n: int):
        super().__init__(f"| Morita: special point {point} is not a vertex of Z/{base_n}")


class NotGendoSymmetric(NakayamaError):
    def __init__(self, base_n: int, loewy: int):
        super().__init__(f"| Morita: w={loewy} is not 1 mod n={base_n}")


class WrongLoewyResidue(NakayamaError):
    def __init__(self, base_n: int, loewy: int):
        super().__init__(f"| Morita: w={loewy} is not 2 mod n={base_n}")


class TooFewSimples(NakayamaError):
    def __init__(self, n: int, minimum: int):
        super().__init__(f"| Morita: n={n} is below the minimum {minimum}")


class OrderingAmbiguous(NakayamaInternalError):
    def __init__(self, lengths: list):
        super().__init__(f"| Morita: no cyclic ordering of {lengths} passes the cross-checks")


class WitnessMismatch(NakayamaInternalError):
    def __init__(self, kupisch: tuple, num_proj_inj: int, expected: int):
        super().__init__(f"| Scan: witness {kupisch} has {num_proj_inj} projective-injectives, expected {expected}")


class WorkerFailed(NakayamaInternalError):
    def __init__(self, worker_id: int, message: str):
        super().__init__(f"| Verify: worker {worker_id} failed. {message}")


class StepLimitReached(NakayamaInternalError):
    def __init__(self, what: str, max_steps: int):
        super().__init__(f"| Engine: {what} did not settle within {max_steps} steps")
