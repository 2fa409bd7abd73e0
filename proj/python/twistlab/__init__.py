"""Twisted groupoid convolution algebras and Weyl reconstruction.

Algebra elements are lists of complex coefficients, one per arrow, in the
order of ``twist.groupoid.arrow_names``.
"""

import json

from ._core import (
    ALGEBRA_TOL,
    NORM_TOL,
    DocumentError,
    FiniteGroup,
    FiniteGroupoid,
    GradedTwist,
    PreconditionError,
    ToleranceError,
    VerificationError,
    action_groupoid,
    adjoint,
    cartan_check,
    center_dimension,
    convolve,
    corpus,
    dual_action,
    dump_document,
    expectation,
    graded_group_groupoid,
    group_groupoid,
    is_effective,
    load_document,
    pair_groupoid,
    parse_document,
    randomize_cocycle,
    reconstruct,
    reduced_norm,
    regular_action_groupoid,
    spectral_component,
    twisted_group,
    validate,
)
from ._core import _verify_roundtrip

__version__ = "0.1.0"


def verify_roundtrip(twist, samples=16, seed=0x5EED, norm_tol=NORM_TOL):
    """Reconstructs the twist and returns the certificate as a dict.

    Raises VerificationError if any assertion fails.
    """
    return json.loads(_verify_roundtrip(twist, samples, seed, norm_tol))
