"""Clifford algebras over commutative rings, Vahlen matrix groups and their exhaustive verification."""

from .cgroups import GroupKind, is_member, pi_apply, pi_image, reflection
from .clifford import CliffordElement
from .enumeration import enumerate_clifford, enumerate_matrices
from .errors import (
    DomainError,
    ImageNotInModuleError,
    NotAUnitError,
    NotInvertibleByNormError,
    NotInvertibleError,
    ParseError,
    UnsupportedError,
    VahlenError,
)
from .isomap import PhiIso, ThetaIso
from .literals import format_matrix, parse_element, parse_matrix
from .matrix import CliffordMatrix2
from .ordinary import check_definition, is_in_T, satisfies
from .paravector import check_pv_definition, is_in_PT, pv_satisfies
from .qspace import QuadraticSpace, Splitting, build_split_space, space_from_config
from .ring import Integers, IntegersMod, LaurentPolynomials, PrimeField, RingElement, ring_from_config

__version__ = "0.1.0"

__all__ = [
    "CliffordElement",
    "CliffordMatrix2",
    "DomainError",
    "GroupKind",
    "ImageNotInModuleError",
    "Integers",
    "IntegersMod",
    "LaurentPolynomials",
    "NotAUnitError",
    "NotInvertibleByNormError",
    "NotInvertibleError",
    "ParseError",
    "PhiIso",
    "PrimeField",
    "QuadraticSpace",
    "RingElement",
    "Splitting",
    "ThetaIso",
    "UnsupportedError",
    "VahlenError",
    "build_split_space",
    "check_definition",
    "check_pv_definition",
    "enumerate_clifford",
    "enumerate_matrices",
    "format_matrix",
    "is_in_PT",
    "is_in_T",
    "is_member",
    "parse_element",
    "parse_matrix",
    "pi_apply",
    "pi_image",
    "pv_satisfies",
    "reflection",
    "ring_from_config",
    "satisfies",
    "space_from_config",
]
