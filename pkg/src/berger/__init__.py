"""Generalised Berger metrics on S^3 and its dual Sigma^3: Levi-Civita
connections, sectional curvatures, and mean curvature of the standard tori."""
from ._kernels import BACKEND
from .ambient import SpaceKind, frame_at, group_inv, group_mul, on_manifold
from .connection import (
    Plane,
    Region,
    closed_form_connection,
    closed_form_curvature,
    curvature_numerator,
    koszul_connection,
    sectional_curvature,
    sign_region_check,
    structure_constants,
)
from .errors import (
    BergerError,
    DegenerateInducedMetric,
    DegenerateTorus,
    DomainError,
    HypothesisViolated,
    IndefiniteInducedMetric,
    NoSolution,
    UnsupportedSignature,
)
from .metric import LORENTZIAN, RIEMANNIAN, BergerParams, ModelSpec, Signature, berger_ip, causal_character
from .torus import (
    TorusPoint,
    cmc_solve,
    first_fundamental_form,
    gram_schmidt_basis,
    mean_curvature,
    second_ff_alpha,
)
from .verify import FdConfig, run_suite

__version__ = "0.1.0"
