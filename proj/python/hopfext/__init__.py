"""Exact classification of Hopf algebra extensions of kC_p by k^G.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (
    CapExceeded,
    CpModule,
    HopfStructure,
    block_profile,
    build_hopf,
    classify,
    commutative_isoclass_count,
    count_labels_exhaustive,
    ext_group_table,
    ext_groups_isomorphic,
    find_intertwiner,
    isoclass_count,
    module,
    module_from_matrix,
    recover_point,
    space_dims,
    trivial_module,
    validate_hopf_json,
)

__version__ = "1.0.0"

__all__ = [
    "CapExceeded",
    "CpModule",
    "HopfStructure",
    "block_profile",
    "build_hopf",
    "classify",
    "commutative_isoclass_count",
    "count_labels_exhaustive",
    "ext_group_table",
    "ext_groups_isomorphic",
    "find_intertwiner",
    "isoclass_count",
    "module",
    "module_from_matrix",
    "recover_point",
    "space_dims",
    "trivial_module",
    "validate_hopf_json",
]
