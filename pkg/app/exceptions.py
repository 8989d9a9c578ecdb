# app/exceptions.py
class AlphaDivException(Exception):
    """Root of every error raised by the library."""
    exit_code = 1
    default_message = "alphadiv failure"

    def __init__(self, message: str = None):
        super().__init__(message or self.default_message)


# --- Configuration / input errors (CLI exit code 2) ---

class ConfigError(AlphaDivException):
    exit_code = 2
    default_message = "invalid configuration"

class InvalidOrderError(ConfigError):
    default_message = "divergence order must differ from 0 and 1"

class SampleTooShortError(ConfigError):
    default_message = "sample too short"


# --- Numerical failures (CLI exit code 3) ---

class NumericalError(AlphaDivException, ArithmeticError):
    exit_code = 3
    default_message = "numerical failure"

class EmptySampleError(NumericalError):
    default_message = "empty sample"

class ZeroVarianceError(NumericalError):
    default_message = "zero variance"

class UnboundedRatioError(NumericalError):
    default_message = "unbounded likelihood ratio"

class IntegralDivergedError(NumericalError):
    default_message = "integral diverged"

class NonPositiveLogError(NumericalError):
    default_message = "log of nonpositive"

class DensityVanishesError(NumericalError):
    default_message = "density vanishes"

class InadmissibleOrderError(NumericalError):
    default_message = "order outside admissible range"

class StationarityError(NumericalError):
    default_message = "stationarity violated"

class ReplicationError(NumericalError):
    """A single Monte Carlo replication failed; carries its stream coordinates."""
    default_message = "replication failed"

    def __init__(self, seed: int, n: int, replication: int, cause: Exception):
        self.seed = seed
        self.n = n
        self.replication = replication
        self.cause = cause
        super().__init__(
            f"replication failed (seed={seed}, n={n}, replication={replication}): {cause}"
        )

    def __reduce__(self):
        # worker processes ship exceptions back by pickling
        return (self.__class__, (self.seed, self.n, self.replication, self.cause))
