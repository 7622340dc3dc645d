"""One-point AG codes on the maximal curves y^q + y = x^s over F_{q^2}."""

from .agcode import (
    LinearCode,
    WeightEnumerator,
    build_code,
    dual,
    hermitian_dual,
    is_hermitian_self_orthogonal,
    macwilliams_dual_enumerator,
    min_distance,
    predicted_dimension,
    scan_self_orthogonality,
    weight_enumerator,
)
from .channel import ChannelSpec, decode_erasures, decode_nearest, encode, transmit, wer_experiment
from .curve import AffinePoint, Curve, curve_new
from .estimator import OnePointCode
from .galois import Field, FieldElement, field_new
from .quantum import QuantumParams, StabilizerMatrix, build_stabilizer, derive_params, verify_commutation
from .semigroup import MonomialBasis, ell, elements_up_to, gaps, monomial_basis

__version__ = "0.1.0"
