from typing import Optional


class RecolorError(Exception):
    pass


class InvalidGraphError(RecolorError, ValueError):
    pass


class GraphFormatError(RecolorError, ValueError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f'line {line_number}: {message}'
        super().__init__(message)
        self.line_number = line_number


class ColoringError(RecolorError, ValueError):
    pass


class InfeasibleColoringError(RecolorError):
    pass


class BudgetExceededError(RecolorError):
    def __init__(self, count: int, budget: int):
        super().__init__(f'{count} colorings exceed the state budget of {budget}')
        self.count = count
        self.budget = budget


class DisconnectedError(RecolorError):
    pass


class PathValidationError(RecolorError):
    def __init__(self, message: str, step_index: Optional[int] = None):
        if step_index is not None:
            message = f'step {step_index}: {message}'
        super().__init__(message)
        self.step_index = step_index


class ImproperStepError(PathValidationError):
    pass


class NoOpStepError(PathValidationError):
    pass


class PreconditionError(RecolorError):
    pass


class ClassMembershipError(PreconditionError):
    def __init__(self, message: str, pattern: Optional[str] = None, embedding=None):
        super().__init__(message)
        self.pattern = pattern
        self.embedding = embedding


class FrozenObstructionError(PreconditionError):
    def __init__(self, message: str, ell: int):
        super().__init__(message)
        self.ell = ell


class BoundViolationError(RecolorError):
    pass


class CertificateError(RecolorError):
    pass
