"""Exact evaluation and verification of Legendre-symbol determinant families."""

from .arith import (
    PrimeContext,
    is_prime,
    jacobi,
    legendre,
    make_context,
    primes_in,
    primitive_root,
    sqrt_mod,
    zolotarev_sign,
)
from .bigmat import (
    IntMatrix,
    SymmetricCirculantFactorization,
    circulant,
    det_exact,
    det_power_matrix,
    elementary_symmetric,
    factor_symmetric_circulant,
    is_perfect_square,
)
from .charsum import (
    EigenSpectrum,
    jacobsthal_phi,
    jacobsthal_psi,
    spectrum,
    symfunc_congruence_check,
    trinomial_coeff_mod,
)
from .ecount import CurveCount, CurveParams, char_trace, count_points, search_supersingular
from .errors import (
    CongruenceMismatch,
    DegenerateFamily,
    LegdetError,
    NoRepresentation,
    NonResidue,
    NotAPower,
    NotASquare,
    NotAUnit,
    SingularCurve,
    SizeCapExceeded,
    SymmetryViolation,
    ZeroInput,
)
from .legmat import KINDS, build, dimension, normalize_kind, quartic_residues, sextic_residues, size_cap
from .quadrep import (
    X1MOD3,
    X1MOD4,
    X7SQUARE,
    XEQ2SYMBOL,
    QuadraticRep,
    UnitPower,
    evil_value,
    fundamental_unit,
    represent,
    unit_norm,
    unit_power_from_dets,
)
from .report import VerificationReport, summarize
from .verify import THEOREMS, normalize_theorem, sweep, verify

__version__ = "0.1.0"

__all__ = [
    "CongruenceMismatch",
    "CurveCount",
    "CurveParams",
    "DegenerateFamily",
    "EigenSpectrum",
    "IntMatrix",
    "KINDS",
    "LegdetError",
    "NoRepresentation",
    "NonResidue",
    "NotAPower",
    "NotASquare",
    "NotAUnit",
    "PrimeContext",
    "QuadraticRep",
    "SingularCurve",
    "SizeCapExceeded",
    "SymmetricCirculantFactorization",
    "SymmetryViolation",
    "THEOREMS",
    "UnitPower",
    "VerificationReport",
    "X1MOD3",
    "X1MOD4",
    "X7SQUARE",
    "XEQ2SYMBOL",
    "ZeroInput",
    "build",
    "char_trace",
    "circulant",
    "count_points",
    "det_exact",
    "det_power_matrix",
    "dimension",
    "elementary_symmetric",
    "evil_value",
    "factor_symmetric_circulant",
    "fundamental_unit",
    "is_perfect_square",
    "is_prime",
    "jacobi",
    "jacobsthal_phi",
    "jacobsthal_psi",
    "legendre",
    "make_context",
    "normalize_kind",
    "normalize_theorem",
    "primes_in",
    "primitive_root",
    "quartic_residues",
    "represent",
    "sextic_residues",
    "size_cap",
    "spectrum",
    "sqrt_mod",
    "summarize",
    "sweep",
    "symfunc_congruence_check",
    "trinomial_coeff_mod",
    "unit_norm",
    "unit_power_from_dets",
    "verify",
    "zolotarev_sign",
    "__version__",
]
