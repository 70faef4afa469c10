class InvalidPartitionError(ValueError):
    pass


class InvalidDirectionError(ValueError):
    pass


class InvalidMomentumError(ValueError):
    pass


class SingularObservableError(ValueError):
    pass


class UnsupportedScenarioError(ValueError):
    """Raised when a state has weight on momentum branches |00> or |11>."""
