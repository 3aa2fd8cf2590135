"""Bivariate (log-)normal joints: fitting, densities, synthetic data.

If many small multiplicative forces set a construct's length on both
axes, (ln x, ln z) is bivariate normal.  Fitting that joint and reading
off its regression line reproduces the classical power law exactly,
which is the whole story of where the Altmann model comes from.

Run from the repository root:  python3 demos/03_bivariate_lognormal.py
"""

from pathlib import Path

from menzerath import (
    Discretize,
    Space,
    altmann_from_loglinear,
    empirical_mal_curve,
    fit_bivariate,
    fit_bivariate_pairs,
    fit_linear,
    lattice_density,
    parse_frequency_table,
    predicted_mal,
    sample_synthetic,
)

DATA = Path(__file__).resolve().parent.parent / "data"
table = parse_frequency_table((DATA / "menzerath_synthetic.csv").read_text())

# %% Method-of-moments fit of the log-normal joint.
params = fit_bivariate(table, Space.LOG)
print(
    f"log-space fit: means ({params.mean_x:.4f}, {params.mean_z:.4f}), "
    f"sds ({params.sd_x:.4f}, {params.sd_z:.4f}), rho {params.rho:.4f}"
)

# %% Its predicted Menzerath curve IS the Altmann model of the table.
curve = empirical_mal_curve(table)
via_joint = predicted_mal(params, curve.xs)
via_chain = altmann_from_loglinear(fit_linear(table, Space.LOG))
print(f"power-law exponent via joint: {1 - params.rho * params.sd_z / params.sd_x:.6f}")
print(f"power-law exponent via chain: {via_chain.b:.6f}")

# %% The de-logged regression line is a conditional median; an explicit
# flag opts into the log-normal conditional mean instead.
median_y = predicted_mal(params, [2]).ys[0]
mean_y = predicted_mal(params, [2], conditional="mean").ys[0]
print(f"y(2): median {median_y:.4f}, mean {mean_y:.4f}")

# %% Lattice densities integrate the continuous joint over unit cells,
# directly comparable to empirical relative frequencies.
masses = lattice_density(params, range(1, 6), range(1, 20), renormalize=False)
top = sorted(masses.items(), key=lambda kv: -kv[1])[:5]
print("highest-mass cells:", [(k, round(v, 4)) for k, v in top])

# %% Synthetic data: seeded draws from the fitted joint; ROUND_CLAMP
# rounds to integers and repairs draws into the segment domain.
draws = sample_synthetic(params, 10_000, seed=1, discretize=Discretize.ROUND_CLAMP)
print("synthetic draws:", draws[:5].tolist(), "...")

# %% Continuous draws round-trip the parameters (method-of-moments
# recovery), which is what the validation tests lean on.
refit = fit_bivariate_pairs(sample_synthetic(params, 100_000, seed=2), Space.LOG)
print(f"recovered rho {refit.rho:.4f} from true {params.rho:.4f}")
