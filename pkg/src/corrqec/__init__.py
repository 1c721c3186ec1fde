"""Error correction for fully correlated Pauli noise.

Codes, channels, rank-k numerical ranges and circuits for the noise model
whose error operators are X_n, Y_n and Z_n (the same Pauli on every qubit).
"""

from corrqec.circuits import (
    Circuit,
    Gate,
    circuit_unitary,
    encode_circuit_even,
    encode_circuit_odd,
    export_circuit,
    parse_circuit,
    recovery_circuit_even,
    recovery_circuit_odd,
    verify_subspace_equivalence,
)
from corrqec.codes import (
    EvenCode,
    KLReport,
    OddCode,
    RecoveryResult,
    build_even_code,
    build_odd_code,
    build_R,
    build_W,
    even_weight_states,
    kl_check,
    recover,
    syndrome_of,
)
from corrqec.numrange import (
    ConvexRegion,
    EigenMultiset,
    intersect_convex,
    joint_membership,
    normal_range_of_pair,
    rank_k_range_bruteforce,
    rank_k_range_normal,
)
from corrqec.pauli import (
    CorrelatedPauli,
    NoiseSpec,
    apply_correlated,
    channel_apply,
    channel_compose,
    pauli_matrix,
    product_phase,
)
from corrqec.state import (
    dagger,
    is_scalar_multiple_of_projector,
    partial_trace_leading,
    partial_trace_trailing,
    random_density,
    tensor,
)

__version__ = "0.1.0"
