"""Free-group calculus over the once-bounded surface group and the
non-contractibility certificate pipeline."""

from .blocks import EtaBlock, count_long_exponent_sum, eta_power_decompose, reassemble
from .certify import (Certificate, LoopSpec, ParameterError, build_gamma0,
                      certify_noncontractible, estimate_dfrak,
                      eta_blocks_via_crossings)
from .words import (Automorphism, InvalidAutomorphism, Monodromy, SurfaceGroup,
                    Word, canonical_eta_letters, identity_automorphism,
                    is_trivial, reduce, reduce_letters, twist_registry, word)

__all__ = [
    "Automorphism", "Certificate", "EtaBlock", "InvalidAutomorphism",
    "LoopSpec", "Monodromy", "ParameterError", "SurfaceGroup", "Word",
    "build_gamma0", "canonical_eta_letters", "certify_noncontractible",
    "count_long_exponent_sum", "estimate_dfrak", "eta_blocks_via_crossings",
    "eta_power_decompose", "identity_automorphism", "is_trivial", "reassemble",
    "reduce", "reduce_letters", "twist_registry", "word",
]
