"""The classical models and where their parameters come from.

Both classical curves are regression lines in disguise.  Regressing z
on x and substituting z = x*y turns the line alpha + beta*x into the
hyperbolic curve y = alpha/x + beta; the same regression on logs gives
the power law y = a*x^(-b) with b = 1 - slope.  No iterative optimizer
appears anywhere: the parameters are weighted moments.

Run from the repository root:  python3 demos/02_classical_models.py
"""

from pathlib import Path

from menzerath import (
    Space,
    altmann_from_loglinear,
    empirical_mal_curve,
    eval_model,
    fit_altmann_direct,
    fit_linear,
    hyperbolic_from_linear,
    parse_frequency_table,
    rss,
)

DATA = Path(__file__).resolve().parent.parent / "data"
table = parse_frequency_table((DATA / "menzerath_synthetic.csv").read_text())
curve = empirical_mal_curve(table)

# %% Raw space: linear regression of z on x -> hyperbolic model.
line = fit_linear(table, Space.RAW)
hyperbolic = hyperbolic_from_linear(line)
print(f"z on x regression: intercept {line.alpha:.4f}, slope {line.beta:.4f}")
print(f"hyperbolic model:  y = {hyperbolic.a:.4f}/x + {hyperbolic.b:.4f}")

# %% Log space: the same construction de-logged -> Altmann power law.
log_line = fit_linear(table, Space.LOG)
altmann = altmann_from_loglinear(log_line)
print(f"log-log slope {log_line.beta:.4f} -> b = 1 - slope = {altmann.b:.4f}")
print(f"Altmann model:     y = {altmann.a:.4f} * x^(-{altmann.b:.4f})")

# %% A slope above 1 would flip the sign of b and the curve rises;
# moment-based parameters make that case unsurprising instead of odd.

# %% The conventional baseline fits the curve points directly (one
# point per x, unweighted); joint-level and curve-level fits disagree
# legitimately because they answer different questions.
direct = fit_altmann_direct(curve)
print(f"direct curve fit:  y = {direct.a:.4f} * x^(-{direct.b:.4f})")

# %% Compare all three by RSS on the shared support.
for name, fit in (("hyperbolic", hyperbolic), ("altmann", altmann),
                  ("altmann-direct", direct)):
    model_curve = eval_model(fit, curve.xs)
    print(f"  {name:15s} RSS = {rss(curve, model_curve):.6f}")
