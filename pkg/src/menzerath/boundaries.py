"""Reformulation in terms of segment boundaries.

A construct with x constituents has x' = x - 1 constituent boundaries,
and its z subconstituents contain z' = z - x subconstituent boundaries
that are not constituent boundaries (a word with 2 syllables and 7
phonemes has one syllable boundary and five phoneme boundaries).  The
transform removes the definitionally forbidden region z < x: boundary
counts are free nonnegative integers, so a copula fitted in boundary
space and mapped back can place no mass on impossible cells.
"""

import numpy as np

from .copula import (
    Estimator,
    GaussianCopulaModel,
    JointProbabilityTable,
    cell_probabilities,
    fit_copula,
)
from .errors import WrongDomain
from .table import Domain, JointFrequencyTable

__all__ = [
    "to_boundaries",
    "from_boundaries",
    "cells_from_boundaries",
    "pairs_from_boundaries",
    "fit_boundary_copula",
    "boundary_copula_cells",
]


def to_boundaries(table: JointFrequencyTable) -> JointFrequencyTable:
    """Map each segment cell (x, z) to the boundary cell (x-1, z-x)."""
    if table.domain is not Domain.SEGMENTS:
        raise WrongDomain("to_boundaries needs a segment-domain table")
    cells = {(x - 1, z - x): n for (x, z), n in table.cells.items()}
    return JointFrequencyTable(Domain.BOUNDARIES, cells, table.total)


def from_boundaries(table: JointFrequencyTable) -> JointFrequencyTable:
    """Exact inverse of :func:`to_boundaries`."""
    if table.domain is not Domain.BOUNDARIES:
        raise WrongDomain("from_boundaries needs a boundary-domain table")
    cells = {(x + 1, z + x + 1): n for (x, z), n in table.cells.items()}
    return JointFrequencyTable(Domain.SEGMENTS, cells, table.total)


def cells_from_boundaries(cells: JointProbabilityTable) -> JointProbabilityTable:
    """Map model cells from boundary space back to segment space.

    Every image cell satisfies z >= x by construction, so the mapped
    model carries zero infeasible mass.
    """
    if cells.domain is not Domain.BOUNDARIES:
        raise WrongDomain("cells_from_boundaries needs boundary-domain cells")
    mapped = {(x + 1, z + x + 1): p for (x, z), p in cells.cells.items()}
    return JointProbabilityTable(domain=Domain.SEGMENTS, cells=mapped)


def pairs_from_boundaries(pairs: np.ndarray) -> np.ndarray:
    """Map sampled boundary pairs (x', z') to segment pairs (x, z)."""
    pairs = np.asarray(pairs)
    out = np.empty_like(pairs)
    out[:, 0] = pairs[:, 0] + 1
    out[:, 1] = pairs[:, 1] + pairs[:, 0] + 1
    return out


def fit_boundary_copula(
    table: JointFrequencyTable, estimator: Estimator = Estimator.PEARSON_RAW
) -> GaussianCopulaModel:
    """Fit the copula in boundary space (the --boundaries variant)."""
    return fit_copula(to_boundaries(table), estimator)


def boundary_copula_cells(
    table: JointFrequencyTable, estimator: Estimator = Estimator.PEARSON_RAW
) -> tuple[JointProbabilityTable, GaussianCopulaModel]:
    """Full boundary pipeline: fit, compute cells, map back to segments.

    Returns the mapped segment-domain cells together with the fitted
    boundary-space model.
    """
    model = fit_boundary_copula(table, estimator)
    return cells_from_boundaries(cell_probabilities(model)), model
