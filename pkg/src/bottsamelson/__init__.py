"""Divisor and cycle cones of Bott-Samelson varieties, computed exactly."""

from .bs_word import BSWord, DivisorClass, analyze, canonical_class, expand_line_bundle, x_to_o_coords, o_to_x_coords
from .chow_ring import CycleClass, chow_ring, degree, multiply, pairing_matrix
from .cones import (
    EffConeReport,
    effective_cone_2cycles,
    effective_cone_divisors,
    is_ample,
    is_globally_generated,
    nef2_cone,
    nef_divisor_cone,
    sigma_class,
    sigma_report,
)
from .errors import (
    BottSamelsonError,
    CartanError,
    CertificateError,
    IndexOutOfRange,
    NonFiniteTypeError,
    PreconditionError,
    RankMismatch,
    SigmaValidationError,
)
from .logfano import LogFanoCertificate, ample_recipe, log_fano_certificate
from .orbits import FixedPoint, aut_stabilization, dense_orbit_criterion, greedy_reduced_subword, tangent_weights
from .polyhedra import RationalCone, contains, dual_cone, extremal_rays
from .richardson import intersection_desing
from .root_system import CartanMatrix, RootSystem, Weight
from .weyl_group import WeylElement, bruhat_leq, demazure_product, from_word, longest_element

__version__ = "0.1.0"
