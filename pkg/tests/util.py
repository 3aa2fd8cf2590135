"""Shared oracles and random generators for the test suite.

The oracles here stay deliberately independent of the library's own
computation paths: tables are expanded into raw per-construct lists and
statistics recomputed with plain numpy, regressions solved through the
normal equations, and integrals evaluated by adaptive quadrature.
"""

import numpy as np

from menzerath import Domain, JointFrequencyTable, build_table


def expand(table: JointFrequencyTable) -> tuple[np.ndarray, np.ndarray]:
    """Count-expanded raw (x, z) columns, one entry per construct."""
    xs, zs, ns = table.arrays()
    return np.repeat(xs, ns).astype(float), np.repeat(zs, ns).astype(float)


def ols_normal_equations(x: np.ndarray, z: np.ndarray) -> tuple[float, float]:
    """(intercept, slope) of z on x by solving the normal equations."""
    a = np.array([[len(x), x.sum()], [x.sum(), (x * x).sum()]])
    rhs = np.array([z.sum(), (x * z).sum()])
    alpha, beta = np.linalg.solve(a, rhs)
    return float(alpha), float(beta)


def random_table(
    rng: np.random.Generator,
    max_x: int = 8,
    max_extra: int = 12,
    max_count: int = 9,
) -> JointFrequencyTable:
    """Random segment-domain table with spread on both axes.

    Exactly collinear tables are rejected so correlation-based fits are
    always well defined.
    """
    while True:
        n_cells = int(rng.integers(4, 14))
        cells: dict[tuple[int, int], int] = {}
        for _ in range(n_cells):
            x = int(rng.integers(1, max_x + 1))
            z = x + int(rng.integers(0, max_extra + 1))
            cells[(x, z)] = cells.get((x, z), 0) + int(rng.integers(1, max_count + 1))
        if len({x for x, _ in cells}) < 2 or len({z for _, z in cells}) < 2:
            continue
        table = build_table(
            [(x, z, n) for (x, z), n in cells.items()], Domain.SEGMENTS
        )
        ex, ez = expand(table)
        if abs(np.corrcoef(ex, ez)[0, 1]) < 1.0 - 1e-9:
            return table


def random_marginal_counts(
    rng: np.random.Generator, lo: int, hi: int
) -> tuple[list[int], list[int]]:
    """Random discrete marginal as (support, counts), 2..6 values."""
    size = int(rng.integers(2, min(7, hi - lo + 1)))
    support = sorted(rng.choice(np.arange(lo, hi + 1), size=size, replace=False))
    counts = [int(rng.integers(1, 30)) for _ in support]
    return [int(v) for v in support], counts
