"""Square identities [r, s, N] from twisted group algebras over (Z/2Z)^n."""

from .gf2n import (
    TwistKind,
    alpha,
    check_generating_function,
    f_clifford,
    f_clifford_naive,
    f_octonion,
    f_octonion_naive,
    quadruple_defect,
    weight,
)
from .identity import (
    Identity,
    Triple,
    VerificationReport,
    build_identity,
    predicted_triple_thm1,
    predicted_triple_thm2,
    rho,
    triple_of,
    verify_numeric,
    verify_symbolic,
)
from .pairs import (
    ElementSet,
    PairReport,
    build_B_border,
    build_B_complement,
    build_B_thm1,
    build_B_thm2,
    build_pair,
    hurwitzian_set,
    is_multiplicative,
    is_multiplicative_weight,
    max_hurwitzian_search,
    sumset,
)

__version__ = "0.1.0"
