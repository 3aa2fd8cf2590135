"""Regenerate the bundled synthetic dataset under data/.

The files are synthetic: hand-specified boundary-space marginals are
coupled by a Gaussian copula, sampled with a fixed seed, and mapped
back to segment space, so every word respects z >= x by construction.
The corpus file spells the same sampled pairs out as hyphen-separated
pseudo-words, so parsing it reproduces the sampled joint distribution
exactly.

Run from the repository root:  python3 demos/00_make_synthetic_dataset.py
"""

from pathlib import Path

import numpy as np

from menzerath import (
    Domain,
    Estimator,
    GaussianCopulaModel,
    MarginalDistribution,
    build_table,
    pairs_from_boundaries,
    sample_copula,
    write_frequency_table,
)

SEED = 20250809
N_TABLE = 4000
N_CORPUS = 600

HEADER = (
    "# SYNTHETIC dataset bundled for demos and CLI runs; not real language data.\n"
    "# Regenerate with: python3 demos/00_make_synthetic_dataset.py\n"
)

# Boundary-space marginals: syllable boundaries per word (x') and
# extra phoneme boundaries (z'), loosely shaped like short-word corpora.
MODEL = GaussianCopulaModel(
    rho=0.72,
    marginal_x=MarginalDistribution.from_counts(
        [0, 1, 2, 3, 4, 5], [33, 30, 18, 11, 5, 3]
    ),
    marginal_z=MarginalDistribution.from_counts(
        list(range(0, 15)), [6, 10, 14, 15, 13, 11, 9, 7, 5, 4, 3, 1, 1, 1, 1]
    ),
    estimator=Estimator.PEARSON_RAW,
    domain=Domain.BOUNDARIES,
)

ALPHABET = "menzrathlokusip"


def spell(x: int, z: int, offset: int) -> str:
    """One pseudo-word with x syllables and z letters in total."""
    base, extra = divmod(z, x)
    syllables = []
    for i in range(x):
        length = base + (1 if i < extra else 0)
        letters = [ALPHABET[(offset + i + j) % len(ALPHABET)] for j in range(length)]
        syllables.append("".join(letters))
    return "-".join(syllables)


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "data"
    out.mkdir(exist_ok=True)

    pairs = pairs_from_boundaries(sample_copula(MODEL, N_TABLE, SEED))
    table = build_table([(x, z, 1) for x, z in pairs], Domain.SEGMENTS)
    (out / "menzerath_synthetic.csv").write_bytes(
        (HEADER + write_frequency_table(table)).encode("utf-8")
    )
    print(f"wrote data/menzerath_synthetic.csv ({table.total} constructs)")

    corpus_pairs = pairs_from_boundaries(sample_copula(MODEL, N_CORPUS, SEED + 1))
    lines = [HEADER.rstrip("\n")]
    lines.extend(
        spell(int(x), int(z), i) for i, (x, z) in enumerate(corpus_pairs)
    )
    (out / "syllables_synthetic.txt").write_bytes(
        ("\n".join(lines) + "\n").encode("utf-8")
    )
    print(f"wrote data/syllables_synthetic.txt ({N_CORPUS} pseudo-words)")


if __name__ == "__main__":
    main()
