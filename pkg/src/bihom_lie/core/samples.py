"""Seeded random structures for property sweeps."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .bihom_core import BracketTensor
from .cochains import Cochain, increasing_tuples
from .compatible import CompatiblePair, MCPair, check_compatible_pair, mc_pair_check
from .qlinalg import RationalMatrix, zero_tensor

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240517
ENTRY_RANGE = (-2, 2)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def _entry(rng: np.random.Generator) -> int:
    low, high = ENTRY_RANGE
    return int(rng.integers(low, high + 1))


def random_skew_bracket(dim: int, rng: np.random.Generator) -> BracketTensor:
    """Plain-skew bracket with entries drawn from ``ENTRY_RANGE``."""
    c = zero_tensor((dim, dim, dim))
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(dim):
                value = _entry(rng)
                c[i, j, k] = value
                c[j, i, k] = -value
    return BracketTensor(c, dim)


def random_skew_cochain(degree: int, dim_g: int, dim_v: int,
                        rng: np.random.Generator) -> Cochain:
    """Skew cochain with random increasing-tuple values."""
    values = {
        t: [_entry(rng) for _ in range(dim_v)]
        for t in increasing_tuples(dim_g, degree)
    }
    return Cochain.from_increasing(degree, dim_g, dim_v, values)


@dataclass
class SweepSummary:
    """Agreement counts between the axiom and Maurer-Cartan verdicts."""

    seed: int
    samples: int
    agreements: int = 0
    compatible: int = 0
    disagreements: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.samples


def random_compatible_sweep(samples: int = 100, seed: Optional[int] = None,
                            dims: Sequence[int] = (2, 3)) -> SweepSummary:
    """
    Compare ``check_compatible_pair`` with ``mc_pair_check`` on random pairs.

    Each sample draws a dimension from ``dims`` and two plain-skew brackets
    with identity twists.

    Returns
    -------
    SweepSummary
        ``disagreements`` lists ``(sample index, dimension)`` for every
        sample where the two verdicts differ
    """
    rng = make_rng(seed)
    summary = SweepSummary(DEFAULT_SEED if seed is None else seed, samples)
    for index in range(samples):
        dim = int(rng.choice(list(dims)))
        identity = RationalMatrix.identity(dim)
        pair = CompatiblePair.from_brackets(
            random_skew_bracket(dim, rng), random_skew_bracket(dim, rng), identity, identity
        )
        by_axioms = check_compatible_pair(pair).passed
        by_mc = mc_pair_check(MCPair.from_pair(pair), pair.algebra)
        summary.compatible += int(by_axioms)
        if by_axioms == by_mc:
            summary.agreements += 1
        else:
            summary.disagreements.append((index, dim))
            logger.warning(f"Sample {index} (dim {dim}): axioms={by_axioms}, mc={by_mc}")
    logger.info(f"Sweep agreed on {summary.agreements}/{samples} samples")
    return summary
