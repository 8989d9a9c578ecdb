# app/core/density/sample.py
from dataclasses import dataclass, field
from typing import Optional
import numpy as np

from app.exceptions import EmptySampleError


@dataclass(frozen=True, eq=False)
class Sample:
    """
    Ordered real observations plus their provenance.
    The array is copied and frozen so a Sample can be shared across threads.
    """
    values: np.ndarray
    seed: Optional[int] = None
    dgp: str = "unknown"
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        arr = np.array(self.values, dtype=float).ravel()
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def n(self) -> int:
        return len(self)

    def require_nonempty(self) -> "Sample":
        if self.values.size == 0:
            raise EmptySampleError()
        return self

    def shifted(self, c: float) -> "Sample":
        return Sample(self.values + c, seed=self.seed, dgp=f"{self.dgp}+shift({c})")

    def scaled(self, c: float) -> "Sample":
        return Sample(self.values * c, seed=self.seed, dgp=f"{self.dgp}*scale({c})")

    def permuted(self, rng: np.random.Generator) -> "Sample":
        return Sample(rng.permutation(self.values), seed=self.seed, dgp=self.dgp)
