"""leviq: Levi decomposability of Brylinski-Deligne covers, at desk scale.

The library decides whether the preimage of a Levi subgroup in a cover
of a classical group splits as an external Baer sum.  The criterion is
block orthogonality of the bilinear form attached to an invariant
integer quadratic form on the cocharacter lattice; at the level of
F-points of a p-adic field it becomes a divisibility condition, cross
checked against tame Hilbert-symbol commutator pairings.
"""

from .qforms import (
    QuadraticForm,
    BilinearForm,
    LatticeMap,
    eval_q,
    bq_of,
    pullback_qform,
    restrict_qform,
)
from .rootdata import (
    GroupSpec,
    LatticeAction,
    LeviPartition,
    parse_group_spec,
    torus_rank,
    action_of,
    enumerate_levi_partitions,
    levi_block_indices,
)
from .invariants import (
    InvariantFormBasis,
    invariant_qform_basis,
    contains_form,
    trace_form,
    verify_proportionality,
    named_form,
)
from .decompose import (
    DecompositionVerdict,
    check_k2_decomposed,
    check_fpoints_decomposed_split,
    check_levi,
    full_orthogonal_verdict,
)
from .localfield import (
    TameField,
    TameElement,
    MuM,
    UndecidedWildError,
    tame_field,
    tame_hilbert,
    conj_unramified,
    torus_commutator,
    unitary_commutator,
    is_unitary_comm_trivial,
)
from .cextlab import (
    FiniteAbelianGroup,
    Cocycle2,
    commutator,
    baer_sum,
    external_baer_sum,
    pullback_cocycle,
    is_external_sum,
)

__version__ = "0.1.0"
