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

# # The RPS envelope and its limit e (N!)^2
#
# The maximum RPS entropy is log2 S(N), where S(N) sums over event lengths.
# The count of arrangements S_A(N) equals floor(e N!), and S(N) approaches
# e (N!)^2.  Everything here is exact integer or rational arithmetic.

# +
from rpsent import combinatorics as cb

print([cb.sa(n) for n in range(1, 8)])
print([cb.floor_e_factorial(n) for n in range(1, 8)])
print(all(cb.verify_floor_identity(n) for n in range(1, 300)))
# -

# e is never used as a float.  It is bracketed by a Taylor partial sum and
# that sum plus a tail bound, and the bracket is refined until a floor or a
# comparison is decided.

# +
e = cb.e_interval(20)
print(float(e.lo), float(e.hi), float(e.width))
# -

# The relative gap between S(N) and e (N!)^2 shrinks roughly like 1/N.

# +
from rpsent import approximation as ap

for n in (10, 20, 50, 100, 200):
    print(n, f"{ap.envelope_relative_gap(n):.4E}", f"{float(ap.lemma3_ratio(n)[0]):.4E}")
# -

# The sandwich bounds on S(N) are checked with interval endpoints, so a
# verdict of "holds" is a proof for that N, not a floating-point estimate.

# +
for n in (1, 2, 3, 60, 200):
    print(n, ap.lemma2_bounds(n).verdict.value)
# -

# Computing S(N) exactly costs about N^2 big multiplications; the limit needs
# only N!, one square and a scale.

# +
from rpsent import reporting

print(reporting.bench_csv(range(25, 201, 25), timing=False))
print(reporting.scaling_ratios(100))
