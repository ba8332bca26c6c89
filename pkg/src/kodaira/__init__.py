"""Exact invariants, monodromy and numerical classifications for Kodaira fibrations."""

from .abelian import FiniteAbelianGroup
from .fibration import (
    FibrationComponent,
    FreeAction,
    InvariantRow,
    VirtualFibration,
    double_etale_signature,
    free_action_possible,
    pullback,
    realized_invariants,
    virtual_invariants,
    virtual_signature,
)
from .fpf import FpfType, NielsenClass, config_classes, enumerate_fpf, exceptional_report, nielsen_classes
from .linalg import IntMatrix, char_poly, image_cardinality, snf
from .monodromy import (
    ComponentAction,
    MonodromyProblem,
    apply_monodromy,
    minimal_pullback_degree,
    obstruction,
    realize,
    stabilizer_index,
)
from .surface import (
    FiniteGroup,
    GeneratingVector,
    InvalidDataError,
    OrbifoldSignature,
    cover_genus,
    cyclic_subgroup_signature,
    homology_action,
    nielsen_charpoly,
)

__version__ = "0.1.0"
