"""Continuants with bounded partial quotients (Zaremba's conjecture).

Orbit enumeration of the continued-fraction semigroup, density and
exception statistics for the continuant sets Q_A, Hausdorff dimension of
the bounded-type Cantor sets, and orbit exponential sums.
"""

__version__ = "0.1.0"

from .cf import Digits, Mat2, Pair, cf_eval, cf_expand, rational_membership, to_matrix
from .dimension import (
    DimensionEstimate,
    delta_asymptotic,
    delta_cylinder,
    delta_transfer,
    lambda_leading,
)
from .expsum import ArcPoint, ExpSumValue, arc_profile, exp_sum
from .orbit import ContinuantSet, OrbitNode, continuant_bitset, enumerate_orbit, orbit_count
from .sieve import (
    ExceptionReport,
    SlopeFit,
    counting_fit,
    density,
    exceptions,
    niederreiter_check,
    witness,
)
