"""Joint frequency tables over construct lengths, and what follows from them.

The central object is the joint distribution of ``(x, z)``: how many
constructs (e.g. words) have exactly ``x`` constituents (e.g. syllables)
and exactly ``z`` subconstituents (e.g. phonemes).  Menzerath's law is a
derived quantity of this table: for each ``x``, the mean constituent
length is ``y(x) = E[z | x] / x``.

Two length domains exist.  In the segment domain a construct has at
least one constituent and every constituent has at least one
subconstituent, so ``x >= 1`` and ``z >= x``.  In the boundary domain
lengths are re-expressed as boundary counts (``x' = x - 1``,
``z' = z - x``), which removes the coupling constraint; both coordinates
may be zero.

All values here are immutable after construction and all operations are
pure functions, so concurrent reads are safe.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateVariance,
    EmptyInput,
    InvalidPair,
    LogOfNonpositive,
    UOutOfRange,
    WrongDomain,
)

__all__ = [
    "Domain",
    "Axis",
    "Variable",
    "Space",
    "JointFrequencyTable",
    "MarginalDistribution",
    "WeightedMoments",
    "MalCurve",
    "build_table",
    "marginal",
    "empirical_mal_curve",
    "weighted_moments",
    "weighted_correlation",
]

# Counts are plain Python integers, but silent wraparound elsewhere
# (serialization, numpy views) is forbidden, so ingestion rejects totals
# beyond signed 64-bit range.
MAX_COUNT = 2**63 - 1


class Domain(enum.Enum):
    """Length domain of a table: segment counts or boundary counts."""

    SEGMENTS = "segments"
    BOUNDARIES = "boundaries"


class Axis(enum.Enum):
    X = "x"
    Z = "z"


class Variable(enum.Enum):
    """Variable selector for weighted moments.

    ``XY_PRODUCT`` is the construct length in subconstituents viewed as
    the product x*y; by the substitution z = x*y it is identical to
    ``Z`` and exists so that calling code can mirror the hyperbolic
    parameter formulas literally.
    """

    X = "x"
    Z = "z"
    XY_PRODUCT = "xy"
    LOG_X = "log_x"
    LOG_Z = "log_z"


class Space(enum.Enum):
    """Raw lengths or natural-log lengths."""

    RAW = "raw"
    LOG = "log"


def _check_pair(x: int, z: int, domain: Domain) -> None:
    if domain is Domain.SEGMENTS:
        if x < 1:
            raise InvalidPair(f"x must be >= 1 in segment domain, got ({x}, {z})")
        if z < x:
            raise InvalidPair(f"z must be >= x in segment domain, got ({x}, {z})")
    else:
        if x < 0 or z < 0:
            raise InvalidPair(f"boundary counts must be >= 0, got ({x}, {z})")


def _as_count(value) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer, float)):
        raise InvalidPair(f"count must be an integer, got {value!r}")
    if value != int(value):
        raise InvalidPair(f"fractional counts are rejected, got {value!r}")
    n = int(value)
    if n < 1:
        raise InvalidPair(f"count must be >= 1, got {value!r}")
    if n > MAX_COUNT:
        raise OverflowError(f"count {n} exceeds 2**63 - 1")
    return n


@dataclass(frozen=True)
class JointFrequencyTable:
    """Counts over (x, z) pairs: the empirical joint length distribution.

    ``cells`` maps ``(x, z)`` to a count >= 1 and must not be mutated
    after construction.  ``total`` is the sum of all counts.
    """

    domain: Domain
    cells: dict[tuple[int, int], int]
    total: int

    def __post_init__(self):
        if not self.cells:
            raise EmptyInput("table has no cells")
        running = 0
        for (x, z), n in self.cells.items():
            _check_pair(x, z, self.domain)
            if n < 1:
                raise InvalidPair(f"count must be >= 1, got {n} at ({x}, {z})")
            running += n
        if running > MAX_COUNT:
            raise OverflowError("total count exceeds 2**63 - 1")
        if running != self.total:
            raise InvalidPair(f"total {self.total} != sum of counts {running}")

    @classmethod
    def from_pairs(cls, pairs, domain: Domain) -> "JointFrequencyTable":
        """Aggregate an iterable of ``(x, z, count)`` rows into a table."""
        cells: dict[tuple[int, int], int] = {}
        for x, z, n in pairs:
            x, z = int(x), int(z)
            _check_pair(x, z, domain)
            cells[(x, z)] = cells.get((x, z), 0) + _as_count(n)
        if not cells:
            raise EmptyInput("no pairs supplied")
        return cls(domain=domain, cells=cells, total=sum(cells.values()))

    def sorted_cells(self) -> list[tuple[int, int, int]]:
        """Cells as (x, z, count) rows in ascending (x, z) order."""
        return [(x, z, self.cells[(x, z)]) for x, z in sorted(self.cells)]

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(xs, zs, counts) arrays in ascending cell order."""
        rows = self.sorted_cells()
        xs = np.array([r[0] for r in rows], dtype=np.int64)
        zs = np.array([r[1] for r in rows], dtype=np.int64)
        ns = np.array([r[2] for r in rows], dtype=np.int64)
        return xs, zs, ns

    def scaled(self, factor: int) -> "JointFrequencyTable":
        """Table with every count multiplied by a positive integer."""
        factor = _as_count(factor)
        cells = {key: n * factor for key, n in self.cells.items()}
        return JointFrequencyTable(self.domain, cells, self.total * factor)


def build_table(pairs, domain: Domain) -> JointFrequencyTable:
    """Build a :class:`JointFrequencyTable` from ``(x, z, count)`` rows.

    Rows with equal ``(x, z)`` are aggregated by summing their counts.
    Raises :class:`InvalidPair` when a pair violates the domain
    invariant and :class:`EmptyInput` when nothing is supplied.
    """
    return JointFrequencyTable.from_pairs(pairs, domain)


@dataclass(frozen=True, eq=False)
class MarginalDistribution:
    """Discrete marginal over one axis of a joint table.

    ``support`` is strictly ascending, ``pmf`` holds the probability of
    each support value (all > 0, summing to 1), and ``cdf`` is the
    cumulative distribution with its final entry set to exactly 1.
    """

    support: np.ndarray
    pmf: np.ndarray
    cdf: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.support) <= 0):
            raise InvalidPair("support must be strictly ascending")
        if np.any(self.pmf <= 0):
            raise InvalidPair("pmf values must be positive")
        if abs(float(self.pmf.sum()) - 1.0) > 1e-12:
            raise InvalidPair("pmf must sum to 1")
        if np.any(np.diff(self.cdf) < 0) or self.cdf[-1] != 1.0:
            raise InvalidPair("cdf must be nondecreasing and end at exactly 1")
        for arr in (self.support, self.pmf, self.cdf):
            arr.setflags(write=False)

    @classmethod
    def from_counts(cls, values, counts) -> "MarginalDistribution":
        values = np.asarray(values, dtype=np.int64)
        counts = np.asarray(counts, dtype=np.int64)
        order = np.argsort(values)
        values, counts = values[order], counts[order]
        total = counts.sum()
        pmf = counts / total
        cdf = np.cumsum(pmf)
        cdf[-1] = 1.0
        return cls(support=values, pmf=pmf, cdf=cdf)

    def cdf_edges(self) -> np.ndarray:
        """CDF including the zero level below the first support value."""
        return np.concatenate(([0.0], self.cdf))

    def quantile(self, u: float) -> int:
        """Right-continuous generalized inverse of the CDF.

        Returns the smallest support value whose cumulative probability
        reaches ``u``.  Defined for ``0 < u <= 1``.
        """
        if not 0.0 < u <= 1.0:
            raise UOutOfRange(f"u must satisfy 0 < u <= 1, got {u}")
        idx = int(np.searchsorted(self.cdf, u, side="left"))
        return int(self.support[idx])

    def quantile_many(self, u: np.ndarray) -> np.ndarray:
        """Vectorized :meth:`quantile` for arrays of probabilities."""
        u = np.asarray(u, dtype=float)
        if np.any((u <= 0.0) | (u > 1.0)):
            raise UOutOfRange("all u must satisfy 0 < u <= 1")
        return self.support[np.searchsorted(self.cdf, u, side="left")]

    def mean(self) -> float:
        return float(np.dot(self.support, self.pmf))


@dataclass(frozen=True)
class WeightedMoments:
    """Population mean and standard deviation under cell-count weights."""

    mean: float
    sd: float


@dataclass(frozen=True, eq=False)
class MalCurve:
    """Menzerath curve: mean constituent length per construct length.

    ``xs`` is strictly ascending; ``ys`` holds the mean constituent
    length at each x; ``ns`` the weights (construct counts for empirical
    curves, probability mass for model curves, 1 for evaluated models).
    """

    xs: np.ndarray
    ys: np.ndarray
    ns: np.ndarray

    def __post_init__(self):
        if len(self.xs) == 0:
            raise EmptyInput("curve has no points")
        if np.any(np.diff(self.xs) <= 0):
            raise InvalidPair("curve x values must be strictly ascending")
        if np.any(self.ns <= 0):
            raise InvalidPair("curve weights must be positive")
        for arr in (self.xs, self.ys, self.ns):
            arr.setflags(write=False)

    @property
    def points(self) -> list[tuple[int, float, float]]:
        return [
            (int(x), float(y), float(n))
            for x, y, n in zip(self.xs, self.ys, self.ns)
        ]

    @classmethod
    def from_points(cls, points) -> "MalCurve":
        xs = np.array([p[0] for p in points], dtype=np.int64)
        ys = np.array([p[1] for p in points], dtype=float)
        ns = np.array([p[2] for p in points], dtype=float)
        return cls(xs=xs, ys=ys, ns=ns)


def marginal(table: JointFrequencyTable, axis: Axis) -> MarginalDistribution:
    """Project the joint table onto one axis."""
    agg: dict[int, int] = {}
    pick = 0 if axis is Axis.X else 1
    for key, n in table.cells.items():
        v = key[pick]
        agg[v] = agg.get(v, 0) + n
    values = sorted(agg)
    return MarginalDistribution.from_counts(values, [agg[v] for v in values])


def empirical_mal_curve(table: JointFrequencyTable) -> MalCurve:
    """Menzerath curve of a segment-domain table.

    For each construct length x the curve holds
    ``y(x) = sum_z z * n(x, z) / (x * sum_z n(x, z))`` and the weight
    ``n(x) = sum_z n(x, z)``.
    """
    if table.domain is not Domain.SEGMENTS:
        raise WrongDomain("Menzerath curve needs a segment-domain table; convert first")
    z_sum: dict[int, int] = {}
    n_sum: dict[int, int] = {}
    for (x, z), n in table.cells.items():
        z_sum[x] = z_sum.get(x, 0) + z * n
        n_sum[x] = n_sum.get(x, 0) + n
    xs = sorted(n_sum)
    ys = [z_sum[x] / (x * n_sum[x]) for x in xs]
    return MalCurve(
        xs=np.array(xs, dtype=np.int64),
        ys=np.array(ys, dtype=float),
        ns=np.array([n_sum[x] for x in xs], dtype=float),
    )


def _variable_values(table: JointFrequencyTable, variable: Variable) -> np.ndarray:
    xs, zs, _ = table.arrays()
    if variable is Variable.X:
        return xs.astype(float)
    if variable in (Variable.Z, Variable.XY_PRODUCT):
        return zs.astype(float)
    raw = xs if variable is Variable.LOG_X else zs
    if np.any(raw <= 0):
        raise LogOfNonpositive(
            f"{variable.value} undefined: values <= 0 present (boundary-domain zeros?)"
        )
    return np.log(raw.astype(float))


def _weighted_mean_sd(values: np.ndarray, weights: np.ndarray) -> tuple[float, float]:
    # Population convention (divide by total count), which makes the
    # closed-form regression identities exact.
    mean = float(np.average(values, weights=weights))
    var = float(np.average((values - mean) ** 2, weights=weights))
    return mean, math.sqrt(max(var, 0.0))


def weighted_moments(table: JointFrequencyTable, variable: Variable) -> WeightedMoments:
    """Population mean and sd of one variable under cell-count weights.

    Natural logarithm throughout for the LOG_* variants; values must be
    positive there (x = z = 1 is fine, ln 1 = 0).
    """
    values = _variable_values(table, variable)
    _, _, ns = table.arrays()
    mean, sd = _weighted_mean_sd(values, ns)
    return WeightedMoments(mean=mean, sd=sd)


def _pearson(a: np.ndarray, b: np.ndarray, w: np.ndarray) -> float:
    ma = float(np.average(a, weights=w))
    mb = float(np.average(b, weights=w))
    cov = float(np.average((a - ma) * (b - mb), weights=w))
    va = float(np.average((a - ma) ** 2, weights=w))
    vb = float(np.average((b - mb) ** 2, weights=w))
    if va <= 0.0 or vb <= 0.0:
        raise DegenerateVariance("correlation undefined: a variable has zero variance")
    return float(np.clip(cov / math.sqrt(va * vb), -1.0, 1.0))


def weighted_correlation(table: JointFrequencyTable, space: Space = Space.RAW) -> float:
    """Weighted Pearson correlation between x and z (or their logs)."""
    if space is Space.RAW:
        a = _variable_values(table, Variable.X)
        b = _variable_values(table, Variable.Z)
    else:
        a = _variable_values(table, Variable.LOG_X)
        b = _variable_values(table, Variable.LOG_Z)
    _, _, ns = table.arrays()
    return _pearson(a, b, ns)
