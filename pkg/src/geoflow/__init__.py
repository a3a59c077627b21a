"""Zeta functions of geodesic flows on odd-dimensional hyperbolic spaces.

The package is organized around one pipeline: exact representation data
(`rootdata`), the analytic special functions built from it (`specfun`),
length-spectrum handling with certified truncation tails (`spectrum`),
deterministic compensated summation (`summation`), and the zeta/ledger
layer that combines them (`zeta`).  `cli` exposes everything as the
`geoflow` command.
"""

from . import rootdata, specfun, spectrum, summation, zeta
from .errors import (
    ConvergenceRegionError,
    DegenerateDenominatorError,
    GeoflowError,
    InputError,
    InsufficientSpectrumError,
    IntegralityError,
    ModelInvariantError,
    PoleError,
    ResidualError,
)
from .rootdata import (
    HighestWeight,
    Irrep,
    VirtualRep,
    branch_K_to_M,
    casimir_shift,
    character,
    contragredient,
    group_B,
    group_D,
    lambda_p_nbar,
    m_coeffs,
    nu_of_sigma,
    nu_sigma,
    spin_reps,
    w0_act,
    weight_multiplicities,
    weyl_dim,
)
from .spectrum import (
    ClassTerm,
    LengthSpectrum,
    PrimeGeodesic,
    class_iterator,
    det_factor,
    holonomy_eigenvalues,
    synthesize,
)
from .summation import tree_sum
from .zeta import (
    SpectralModel,
    Singularity,
    ZetaValue,
    antisymmetric_Sa,
    epsilon_sigma,
    log_ruelle_sigma,
    log_ruelle_tau,
    log_selberg,
    model_from_json,
    model_to_json,
    ruelle_selberg_factorization,
    selberg_Z,
    selberg_Z_product,
    singularity_ledger,
    symmetrized_S,
    xi_normalizer,
)

__version__ = "1.0.0"

__all__ = [
    "ClassTerm",
    "ConvergenceRegionError",
    "DegenerateDenominatorError",
    "GeoflowError",
    "HighestWeight",
    "InputError",
    "InsufficientSpectrumError",
    "IntegralityError",
    "Irrep",
    "LengthSpectrum",
    "ModelInvariantError",
    "PoleError",
    "PrimeGeodesic",
    "ResidualError",
    "Singularity",
    "SpectralModel",
    "VirtualRep",
    "ZetaValue",
    "antisymmetric_Sa",
    "branch_K_to_M",
    "casimir_shift",
    "character",
    "class_iterator",
    "contragredient",
    "det_factor",
    "epsilon_sigma",
    "group_B",
    "group_D",
    "holonomy_eigenvalues",
    "lambda_p_nbar",
    "log_ruelle_sigma",
    "log_ruelle_tau",
    "log_selberg",
    "m_coeffs",
    "model_from_json",
    "model_to_json",
    "nu_of_sigma",
    "nu_sigma",
    "rootdata",
    "ruelle_selberg_factorization",
    "selberg_Z",
    "selberg_Z_product",
    "singularity_ledger",
    "specfun",
    "spectrum",
    "spin_reps",
    "summation",
    "symmetrized_S",
    "synthesize",
    "tree_sum",
    "w0_act",
    "weight_multiplicities",
    "weyl_dim",
    "xi_normalizer",
    "zeta",
]
