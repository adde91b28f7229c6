from .base import BaseVerifier, Status, VerificationReport
from .fixing_character import FixingCharacterVerifier
from .divisor_inequality import DivisorInequalityVerifier
from .trace_separation import TraceSeparationVerifier
from .regular_cover import RegularCoverVerifier, recheck_regular_cover, search_regular_cover
from .reduction_commutation import ReductionCommutationVerifier
from .xi_rigidity import XiRigidityVerifier
from .ell_decomposition import EllDecompositionVerifier
from .twist_invariance import TwistInvarianceVerifier
from .delta_triviality import DeltaTrivialityVerifier

from models.errors import ParameterError

VERIFIERS = {
    cls.claim_id: cls
    for cls in (
        FixingCharacterVerifier,
        DivisorInequalityVerifier,
        TraceSeparationVerifier,
        RegularCoverVerifier,
        ReductionCommutationVerifier,
        XiRigidityVerifier,
        EllDecompositionVerifier,
        TwistInvarianceVerifier,
        DeltaTrivialityVerifier,
    )
}


def verifier_class(claim: str):
    try:
        return VERIFIERS[claim]
    except KeyError:
        raise ParameterError(f"unknown claim {claim!r}; expected one of {', '.join(sorted(VERIFIERS))}")


def create_verifier(claim: str, point: dict, **kwargs) -> BaseVerifier:
    """Create the verifier for a claim at one grid point"""
    return verifier_class(claim)(point, **kwargs)


__all__ = [
    'BaseVerifier',
    'Status',
    'VerificationReport',
    'FixingCharacterVerifier',
    'DivisorInequalityVerifier',
    'TraceSeparationVerifier',
    'RegularCoverVerifier',
    'ReductionCommutationVerifier',
    'XiRigidityVerifier',
    'EllDecompositionVerifier',
    'TwistInvarianceVerifier',
    'DeltaTrivialityVerifier',
    'VERIFIERS',
    'create_verifier',
    'verifier_class',
    'search_regular_cover',
    'recheck_regular_cover',
]
