"""Central tolerance rules.

Every numerical threshold used by the library is derived here from the size
of the data it applies to, so callers never hard-code magic numbers.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    sym_rel: float = 1e-10
    rank_rel: float = 1e-10
    psd_rel: float = 1e-10
    eig_rel: float = 1e-10
    jacobi_rel: float = 1e-14
    max_sweeps: int = 100
    majorization_rel: float = 1e-8

    def sym_tol(self, a):
        return self.sym_rel * max(1.0, float(np.max(np.abs(a), initial=0.0)))

    def rank_tol(self, b):
        return self.rank_rel * float(np.max(np.linalg.norm(b, axis=0), initial=0.0))

    def psd_tol(self, a):
        return self.psd_rel * float(np.linalg.norm(a))

    def eig_tol(self, a):
        return self.eig_rel * max(1.0, float(np.linalg.norm(a)))

    def majorization_tol(self, y, n):
        """Default tolerance for ``x ≺w y`` checks on length-``n`` vectors."""
        y = np.asarray(y, dtype=float)
        return self.majorization_rel * max(1.0, float(np.max(np.abs(y), initial=0.0))) * max(n, 1)


TOL = Tolerances()
