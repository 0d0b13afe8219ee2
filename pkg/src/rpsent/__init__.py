"""Exact maximum-entropy envelopes for Shannon, Deng and RPS entropy."""

from .approximation import (ErrorReport, error_report, h_lim_rps,
                            lemma2_bounds, lemma3_ratio, rps_envelope_limit,
                            stirling)
from .belief import (BPA, PMF, Frame, PermutationEvent, SubsetEvent,
                     enumerate_pes, enumerate_power_set, project_pmf_to_bpa,
                     validate_bpa, validate_pmf)
from .combinatorics import (RationalInterval, e_interval, factorial, log2_of,
                            permutations, s_envelope, sa, sum_ratio,
                            verify_floor_identity)
from .entropies import (deng_entropy, envelope, max_deng_bpa,
                        max_entropy_value, max_rps_pmf, rps_entropy,
                        shannon_entropy)

__version__ = "0.1.0"
