"""Exception taxonomy shared by the library and the CLI.

Two branches matter to callers: InputError for malformed or out-of-contract
input (CLI exit 2) and DomainError for well-posed questions whose answer is
"this object does not exist here" (CLI exit 1).  Every exception carries a
stable machine-readable ``code``.
"""


class HassettError(Exception):
    code = "error"


class InputError(HassettError):
    code = "bad-input"


class WeightSyntaxError(InputError):
    code = "weight-syntax"


class WeightRangeError(InputError):
    code = "weight-range"


class TotalWeightError(InputError):
    code = "total-weight"


class MarkIndexError(InputError):
    code = "index-range"


class ShapeMismatchError(InputError):
    code = "shape-mismatch"


class StepRangeError(InputError):
    code = "step-range"


class DomainError(HassettError):
    code = "domain"


class ForgetfulUndefinedError(DomainError):
    code = "forgetful-not-defined"


class NotReductionError(DomainError):
    code = "not-a-reduction"


class NotCoveredError(DomainError):
    code = "not-covered"


class OracleTooLargeError(DomainError):
    code = "oracle-too-large"
