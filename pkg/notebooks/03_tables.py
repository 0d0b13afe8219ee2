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

# # Error tables
#
# Three tables compare exact values with approximations.  The same CSV comes
# out of `rpsent tables 1|2|3`.

# +
from rpsent import reporting

print(reporting.table_csv(3, range(1, 11)))
# -

# Table 1 sets S(N) beside e (N!)^2 for N = 10, 20, ..., 100.  The relative
# error uses the sign convention (approx - exact) / exact.

# +
print(reporting.table_csv(1, range(10, 101, 10)))
# -

# Table 2 does the same for N! and Stirling's formula, as a yardstick.

# +
print(reporting.table_csv(2, range(10, 101, 10)))
# -

# The raw rows keep full precision, which is handy for plotting.

# +
import numpy as np

rows = reporting.table_rows(1, range(10, 101, 10))
ns = np.array([r["N"] for r in rows])
rel = np.array([float(r["ΔS_rel"]) for r in rows])
print(np.round(ns * rel, 4))  # N times the relative error levels off near -1
