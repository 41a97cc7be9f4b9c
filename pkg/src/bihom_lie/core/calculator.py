"""Per-degree cohomology tables computed on a worker pool."""

import logging
import time
from typing import Dict, Iterable, Optional

from joblib import Parallel, delayed

from .bihom_core import BiHomAlgebra, Representation, adjoint_representation
from .cochains import cohomology_dim
from .compatible import CompatiblePair, compatible_cohomology_dim

logger = logging.getLogger(__name__)


class CohomologyCalculator:
    """Compute cohomology dimensions for a range of degrees."""

    def __init__(self, n_jobs: int = 1, prefer: str = "threads"):
        """
        Initialize calculator.

        Parameters
        ----------
        n_jobs : int
            Number of parallel jobs (-1 for all cores)
        prefer : str
            joblib backend preference ('threads' or 'processes')
        """
        self.n_jobs = n_jobs
        self.prefer = prefer
        self.metrics = {'total_time': 0.0, 'degrees': 0}
        logger.debug(f"Initialized cohomology calculator with n_jobs={n_jobs} ({prefer})")

    def _run(self, func, args_per_degree: Dict[int, tuple]) -> Dict[int, int]:
        start = time.time()
        degrees = list(args_per_degree)
        results = Parallel(n_jobs=self.n_jobs, prefer=self.prefer)(
            delayed(func)(*args_per_degree[n]) for n in degrees
        )
        self.metrics['total_time'] += time.time() - start
        self.metrics['degrees'] += len(degrees)
        return dict(zip(degrees, results))

    def table(self, A: BiHomAlgebra, V: Optional[Representation], degrees: Iterable[int],
              which: int = 0, action: int = 0) -> Dict[int, int]:
        """
        Cohomology dimensions of one (bracket, action) pairing.

        Parameters
        ----------
        A : BiHomAlgebra
            Regular algebra
        V : Representation, optional
            Coefficients; the adjoint representation when None
        degrees : iterable of int
            Degrees to compute

        Returns
        -------
        dict
            Degree to dimension, in increasing degree order
        """
        if V is None:
            V = adjoint_representation(A)
            action = which
        ordered = sorted(set(degrees))
        logger.info(f"Computing H^n for degrees {ordered}")
        return self._run(cohomology_dim, {n: (A, V, n, which, action) for n in ordered})

    def compatible_table(self, P: CompatiblePair, V: Optional[Representation],
                         degrees: Iterable[int]) -> Dict[int, int]:
        """Compatible cohomology dimensions, in increasing degree order."""
        if V is None:
            V = adjoint_representation(P.algebra)
        ordered = sorted(set(degrees))
        logger.info(f"Computing compatible H^n for degrees {ordered}")
        return self._run(compatible_cohomology_dim, {n: (P, V, n) for n in ordered})
