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

# # Three entropies on a small frame
#
# Shannon entropy works on a probability vector, Deng entropy on a mass
# function over subsets, and RPS entropy on a mass function over ordered
# arrangements of subsets.  When all mass sits on singletons the three agree.

# +
from fractions import Fraction

from rpsent import (BPA, PMF, Frame, PermutationEvent, SubsetEvent,
                    deng_entropy, rps_entropy, shannon_entropy)

frame = Frame(("rain", "snow", "sun"))
third = Fraction(1, 3)
print(shannon_entropy([third] * 3))
print(deng_entropy(BPA(frame, {SubsetEvent((i,)): third for i in range(3)})))
print(rps_entropy(PMF(frame, {PermutationEvent((i,)): third for i in range(3)})))
# -

# Spreading mass onto larger events raises the entropy, since each event
# stands for more alternatives.  A subset of size k counts 2^k - 1 nonempty
# sub-events; an ordered event of length i counts S_A(i) - 1 of them.

# +
vague = BPA(frame, {SubsetEvent((0, 1, 2)): Fraction(1)})
print("deng, all mass on the whole frame:", deng_entropy(vague))

ordered = PMF(frame, {PermutationEvent((2, 0, 1)): Fraction(1)})
print("rps, all mass on one full arrangement:", rps_entropy(ordered))
# -

# The maximum-entropy distributions have closed forms.  On two elements the
# RPS maximizer puts 1/10 on each singleton and 4/10 on each ordering.

# +
from rpsent import max_deng_bpa, max_rps_pmf, belief

print(belief.dumps(max_rps_pmf(2)))
print(belief.dumps(max_deng_bpa(2)))
# -

# The maxima grow quickly with the frame size.

# +
from rpsent import max_entropy_value

for n in range(1, 9):
    print(n, *(f"{max_entropy_value(k, n):9.5f}" for k in ("shannon", "deng", "rps")))
