"""Exact quantum Schubert calculus for Grassmannians.

Small quantum cohomology of G(r,n) and of products of projective spaces in
exact rational arithmetic, the closed-form J-function computed by independent
routes, and machine verification of the supporting integration and
constant-term identities.
"""

from .algebra import (
    InexactDivision,
    RegistryMismatch,
    SparsePolynomial,
    TruncationPolicy,
    VariableRegistry,
    alternant_determinant,
    antisym_div_vandermonde,
    inv_linear_power_series,
    poly_arith,
    vandermonde,
)
from .identities import (
    PoleError,
    a_series_g2n,
    bailey_specialization_check,
    constant_term_g2n,
    harmonic,
    prop35_check,
)
from .jfunction import (
    EquivariantSeries,
    JSeries,
    SplittingType,
    apply_vandermonde_operator,
    brion_pushforward,
    euler_inverse_fixed_locus,
    hv_verify,
    j_equivariant_raw,
    j_grassmannian,
    j_product_space,
    j_via_localization,
    regrouping_check,
    sign_parity_holds,
    splitting_types,
)
from .partitions import Partition, RimHookOutcome, dual_partition, remove_n_rim
from .rings import (
    ClassG,
    ClassP,
    GWInvariant,
    PrecisionError,
    RingSpecG,
    VIResult,
    gw_invariant_G,
    gw_invariant_P,
    integrate_G,
    integrate_P,
    lemma26_check,
    martin_check,
    project_antisymmetric,
    qintegration_check,
    quantum_product_G,
    quantum_product_P,
    quantum_reduce_schur,
    theorem25_check,
    theta,
    vafa_intriligator,
)
from .schur import lr_product, schur_polynomial, straighten_alternant

__version__ = "0.1.0"
