"""Exact toolkit for cordial labelings of small graphs.

Exhaustive deficiency search with deterministic witnesses, closed forms for
complete graphs, cycles, wheels and mobius ladders, constructive labelings
checked by a certificate verifier, and a parity obstruction for lower bounds.
"""

from .certify import (
    Certificate,
    ValidationReport,
    ValidationRow,
    Verdict,
    check_certificate,
    cross_validate,
    parse_certificate,
    serialize_certificate,
)
from .errors import (
    CordialError,
    IdOutOfRange,
    LengthMismatch,
    LoopRejected,
    MalformedCertificate,
    NoUnitCrossEdge,
    NotApplicable,
    ParseError,
    SizeLimitExceeded,
    SizeTooSmall,
    StrictlyNoncordial,
)
from .families import (
    CompleteSplit,
    GraftSeams,
    LabeledFamilyInstance,
    base_mobius_labeling,
    ced_complete,
    complete_cordial_labeling,
    complete_ced_witness,
    complete_cvd_witness,
    complete_split,
    construct_mobius_labeling,
    cvd_complete,
    cvd_complete_literal,
    cycle_cordial_labeling,
    graft,
    graft_with_seams,
    instance_certificate,
    is_cordial_complete,
    is_cordial_cycle,
    is_cordial_mobius,
    is_cordial_wheel,
    mobius_ced_witness,
    mobius_cvd_witness,
    wheel_cordial_labeling,
    wheel_ced_witness,
    wheel_cvd_witness,
)
from .graph_core import (
    FAMILIES,
    MIN_SIZE,
    FamilySpec,
    MultiGraph,
    complete_graph,
    cycle_graph,
    emit_edge_list,
    ladder_graph,
    mobius_ladder,
    new_graph,
    parse_edge_list,
    path_graph,
    wheel_graph,
)
from .labeling import (
    BalanceReport,
    ParityOutcome,
    ParityVerdict,
    VertexLabeling,
    balance,
    first_pair_with_edge_label,
    induced_edge_label,
    is_cordial_labeling,
    is_friendly,
    parity_obstruction,
    roughly_equal,
)
from .oracle import (
    DEFAULT_MAX_VERTICES,
    DeficiencyValue,
    InfinityReason,
    OracleResult,
    ced_oracle,
    cvd_oracle,
    decide_cordial,
    enumerate_labelings,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ValidationReport",
    "ValidationRow",
    "Verdict",
    "check_certificate",
    "cross_validate",
    "parse_certificate",
    "serialize_certificate",
    "CordialError",
    "IdOutOfRange",
    "LengthMismatch",
    "LoopRejected",
    "MalformedCertificate",
    "NoUnitCrossEdge",
    "NotApplicable",
    "ParseError",
    "SizeLimitExceeded",
    "SizeTooSmall",
    "StrictlyNoncordial",
    "CompleteSplit",
    "GraftSeams",
    "LabeledFamilyInstance",
    "base_mobius_labeling",
    "ced_complete",
    "complete_cordial_labeling",
    "complete_ced_witness",
    "complete_cvd_witness",
    "complete_split",
    "construct_mobius_labeling",
    "cvd_complete",
    "cvd_complete_literal",
    "cycle_cordial_labeling",
    "graft",
    "graft_with_seams",
    "instance_certificate",
    "is_cordial_complete",
    "is_cordial_cycle",
    "is_cordial_mobius",
    "is_cordial_wheel",
    "mobius_ced_witness",
    "mobius_cvd_witness",
    "wheel_cordial_labeling",
    "wheel_ced_witness",
    "wheel_cvd_witness",
    "FAMILIES",
    "MIN_SIZE",
    "FamilySpec",
    "MultiGraph",
    "complete_graph",
    "cycle_graph",
    "emit_edge_list",
    "ladder_graph",
    "mobius_ladder",
    "new_graph",
    "parse_edge_list",
    "path_graph",
    "wheel_graph",
    "BalanceReport",
    "ParityOutcome",
    "ParityVerdict",
    "VertexLabeling",
    "balance",
    "first_pair_with_edge_label",
    "induced_edge_label",
    "is_cordial_labeling",
    "is_friendly",
    "parity_obstruction",
    "roughly_equal",
    "DEFAULT_MAX_VERTICES",
    "DeficiencyValue",
    "InfinityReason",
    "OracleResult",
    "ced_oracle",
    "cvd_oracle",
    "decide_cordial",
    "enumerate_labelings",
    "__version__",
]
