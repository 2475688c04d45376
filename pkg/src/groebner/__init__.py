"""Groebner basis engine over prime fields.

Signature-based computation (GVW) cross-checked by a classical Buchberger
oracle, plus kernel/FGLM order change and a degree-truncated enumeration
oracle for syzygy leading monomials.
"""

from .buchberger import BuchbergerStats, buchberger, groebner_witness, is_groebner
from .field import NotPrimeError, PrimeField, is_prime, xgcd
from .gvw import (
    GvwEvent,
    GvwState,
    GvwStats,
    StepLimitExceeded,
    SyzygyRecord,
    cover_reject,
    gvw_init,
    gvw_run,
    gvw_step,
    recover_vector,
    regular_reduce,
    signature_enumerate,
    syzygy_reject,
)
from .mmm import (
    EchelonRow,
    LinearMap,
    NotZeroDimensional,
    fglm,
    mmm_kernel_gb,
    nf_map_from_gb,
    quotient_basis,
)
from .poly import (
    ORDERS,
    MonomialOrder,
    ParseError,
    PolyRing,
    Polynomial,
    get_order,
    interreduce,
    leading,
    mono_cmp,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_up_to,
    normal_form,
    s_polynomial,
)
from .sig import (
    JPair,
    LabeledPoly,
    ModuleMonomial,
    ModuleOrder,
    ProvenanceTrace,
    format_module_monomial,
    make_jpair,
    module_order,
    phi,
    principal_syzygy_lms,
    sig_cmp,
    sig_divides,
    sig_mul,
    vector_lead,
)

__all__ = [
    "BuchbergerStats",
    "EchelonRow",
    "GvwEvent",
    "GvwState",
    "GvwStats",
    "JPair",
    "LabeledPoly",
    "LinearMap",
    "ModuleMonomial",
    "ModuleOrder",
    "MonomialOrder",
    "NotPrimeError",
    "NotZeroDimensional",
    "ORDERS",
    "ParseError",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "ProvenanceTrace",
    "StepLimitExceeded",
    "SyzygyRecord",
    "buchberger",
    "cover_reject",
    "fglm",
    "format_module_monomial",
    "get_order",
    "groebner_witness",
    "gvw_init",
    "gvw_run",
    "gvw_step",
    "interreduce",
    "is_groebner",
    "is_prime",
    "leading",
    "make_jpair",
    "mmm_kernel_gb",
    "module_order",
    "mono_cmp",
    "mono_deg",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_mul",
    "monomials_up_to",
    "nf_map_from_gb",
    "normal_form",
    "phi",
    "principal_syzygy_lms",
    "quotient_basis",
    "recover_vector",
    "regular_reduce",
    "s_polynomial",
    "sig_cmp",
    "sig_divides",
    "sig_mul",
    "signature_enumerate",
    "syzygy_reject",
    "vector_lead",
    "xgcd",
]
