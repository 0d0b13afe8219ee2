# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# # Checking the maxima without trusting the formulas
#
# Two numerical oracles test the closed-form maximizers.  Both enumerate the
# events of a small frame directly.

# +
from rpsent import oracles

rep = oracles.perturb_and_compare("rps", 3, trials=1000, step=0.05, seed=42)
print(rep)
# -

# The random walk starts at the claimed maximizer and moves mass between
# random pairs of events.  No position beat the closed form.  Next we climb
# from the uniform distribution with exponentiated-gradient steps.

# +
from rpsent import max_entropy_value

for kind in ("deng", "rps"):
    for n in range(1, 6):
        res = oracles.simplex_ascent_maxent(kind, n)
        print(kind, n, res.iterations, f"{res.entropy:.9f}", f"{max_entropy_value(kind, n):.9f}")
# -

# The ascent lands on the same distribution too, not just the same value.

# +
import numpy as np
from rpsent import max_rps_pmf

res = oracles.simplex_ascent_maxent("rps", 3)
claimed = max_rps_pmf(3)
q = np.array([float(claimed.masses[e]) for e in res.events])
print("total variation:", 0.5 * np.abs(res.distribution - q).sum())
# -

# The whole battery runs through `rpsent validate`.

# +
from rpsent import reporting

report = reporting.run_validation(30, oracle_cap=4, trials=200)
print(report["ok"], [c["check"] for c in report["checks"]])
