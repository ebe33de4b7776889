from dataclasses import dataclass
from typing import Union

import numpy as np

from exclugraph.errors import NumericalError, ParameterError


@dataclass(frozen=True, eq=False)
class SymmetricMatrix():
    """Real symmetric matrix; construction symmetrizes so entry(i, j) == entry(j, i) exactly."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ParameterError(f"Expected a non-empty square matrix, got shape {a.shape}")
        a = (a + a.T) / 2
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, index):
        return self.entries[index]


@dataclass(frozen=True, eq=False)
class Spectrum():
    values: np.ndarray
    vectors: np.ndarray

    @property
    def min(self) -> float:
        return float(self.values[0])

    @property
    def max(self) -> float:
        return float(self.values[-1])


def symmetric_eigen(m: Union[SymmetricMatrix, np.ndarray]) -> Spectrum:
    """Eigenvalues in ascending order with orthonormal eigenvectors as columns."""
    if not isinstance(m, SymmetricMatrix):
        m = SymmetricMatrix(m)
    try:
        values, vectors = np.linalg.eigh(m.entries)
    except np.linalg.LinAlgError as e:
        raise NumericalError(f"Symmetric eigendecomposition did not converge: {e}")
    return Spectrum(values, vectors)
