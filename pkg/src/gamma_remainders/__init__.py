"""Verification toolkit for the remainders of the Stirling, Binet and
Burnside approximations of the gamma function.

Modules:
    expoly        exact exponential-polynomial arithmetic and parsing
    certify       replayable absolute-monotonicity certificates
    gamma_ref     high-precision log-gamma/psi oracle and function catalog
    kernels       Laplace-integral kernels with series-stabilized evaluation
    quadrature    adaptive semi-infinite Gauss quadrature
    monotonicity  finite-difference CM/LCM evidence and region checks
    bounds        inequality catalog, verification and comparison
    registry      named targets and theorem claims
    cli           batch command-line interface
"""

from .certify import (AMCertificate, AMFailure, certificate_from_json,
                      certificate_to_json, certify_absolutely_monotonic, replay)
from .expoly import ExpPoly, ParseError, parse_expoly, render
from .gamma_ref import (CatalogFunction, DomainError, EvalPrecision,
                        DEFAULT_PRECISION)
from .kernels import Kernel, load_manifest
from .monotonicity import CMReport, Grid, check_cm, check_lcm, check_region_claims
from .bounds import BoundSpec, CATALOG, compare_bounds, evaluate_bound, \
    verify_bound_on_grid
from .quadrature import QuadratureResult, ToleranceNotMet, integrate_semiinfinite

__version__ = "0.1.0"

__all__ = [
    "AMCertificate", "AMFailure", "BoundSpec", "CATALOG", "CMReport",
    "CatalogFunction", "DEFAULT_PRECISION", "DomainError", "EvalPrecision",
    "ExpPoly", "Grid", "Kernel", "ParseError", "QuadratureResult",
    "ToleranceNotMet", "certificate_from_json", "certificate_to_json",
    "certify_absolutely_monotonic", "check_cm", "check_lcm",
    "check_region_claims", "compare_bounds", "evaluate_bound",
    "integrate_semiinfinite", "load_manifest", "parse_expoly", "render",
    "replay", "verify_bound_on_grid", "__version__",
]
