"""Exception hierarchy for the plan-recognition toolkit."""


class PlanRecError(Exception):
    """Base class for every error raised by the toolkit."""


class NetworkError(PlanRecError, ValueError):
    """Construction-time violation of a Network invariant."""


class DuplicateVariableError(NetworkError):
    pass


class UnknownVariableError(NetworkError):
    pass


class DomainError(NetworkError):
    pass


class CycleError(NetworkError):
    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class CptShapeError(NetworkError):
    pass


class CptValueError(NetworkError):
    pass


class UntaggedVariableError(NetworkError):
    pass


class EvidenceError(PlanRecError, ValueError):
    """Evidence names an unknown variable or a label outside its domain."""


class UnobservableEvidenceError(EvidenceError):
    def __init__(self, variable, role):
        super().__init__(
            f"Variable '{variable}' (role {role}) is not observable and cannot receive evidence."
        )
        self.variable = variable
        self.role = role


class InconsistentEvidenceError(PlanRecError):
    """The observation set has zero probability under the network."""


class StateSpaceTooLargeError(PlanRecError):
    pass


class DomainMismatchError(PlanRecError, ValueError):
    pass


class ScopeError(PlanRecError, ValueError):
    pass


class PlanProfileError(PlanRecError, ValueError):
    pass


class ParamsError(PlanRecError, ValueError):
    pass
