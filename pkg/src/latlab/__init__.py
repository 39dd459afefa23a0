"""latlab: a laboratory for finite lattices.

Build finite lattices from order data or generators, check algebraic and
geometric laws with concrete counterexample witnesses, grow partial
join/meet structures by splitting and boolean closure, and search concrete
lattices for realizations of those structures.
"""

from .core import (
    Chain,
    ElementId,
    FiniteLattice,
    build_lattice,
    chains_between,
    is_refinement,
)
from .construction import (
    BooleanSublattice,
    ClosureResult,
    Cover,
    CoverPart,
    PartialStructure,
    PipelineReport,
    Realization,
    Statement,
    StatementKind,
    add_split_alternative,
    apply_closure,
    atom_pair_structure,
    boolean_closure,
    build_tree,
    coplanar_lines_structure,
    covers_of,
    derive_independent_atoms,
    enumerate_boolean_sublattices,
    find_realization,
    initial_structure,
    line_probe_structure,
    satisfies,
    saturate_splits,
    split_element,
    split_element_branches,
    triple_split_structure,
    verify_boolean_pipeline,
    verify_projective_pipeline,
)
from .document import (
    LatticeDocument,
    document_from_lattice,
    document_to_lattice,
    lattice_to_dot,
    load_document,
    parse_document,
)
from .errors import (
    DepthExhausted,
    DocumentError,
    LatticeError,
    MissingSplit,
    NoBoundingElements,
    NotALattice,
    NotAPartialOrder,
    NotAtomic,
    NotAtoms,
    NotComparable,
    NotGraded,
    RealizationMissing,
    SizeBound,
    UnknownConstant,
)
from .generators import (
    SubspaceLatticeSpec,
    boolean_lattice,
    chain,
    diamond_m3,
    pentagon_n5,
    subspace_lattice,
)
from .projective import (
    CharacterizationReport,
    GeometryView,
    check_p1,
    check_p2,
    check_p3_third_point,
    check_spanning,
    geometry_view,
    is_independent,
    max_independent_set,
    verify_bvn_characterization,
)
from .props import (
    HeightReport,
    Law,
    LawReport,
    PerspectivityMode,
    check_lattice_axioms,
    common_complement,
    height_report,
    is_atomic,
    is_complemented,
    is_distributive,
    is_modular,
    is_perspective_lattice,
    satisfies_height_law,
)
from .witness import witness_violates

__version__ = "0.1.0"

__all__ = [
    "BooleanSublattice",
    "Chain",
    "CharacterizationReport",
    "ClosureResult",
    "Cover",
    "CoverPart",
    "DepthExhausted",
    "DocumentError",
    "ElementId",
    "FiniteLattice",
    "GeometryView",
    "HeightReport",
    "LatticeDocument",
    "LatticeError",
    "Law",
    "LawReport",
    "MissingSplit",
    "NoBoundingElements",
    "NotALattice",
    "NotAPartialOrder",
    "NotAtomic",
    "NotAtoms",
    "NotComparable",
    "NotGraded",
    "PartialStructure",
    "PerspectivityMode",
    "PipelineReport",
    "Realization",
    "RealizationMissing",
    "SizeBound",
    "Statement",
    "StatementKind",
    "SubspaceLatticeSpec",
    "UnknownConstant",
    "add_split_alternative",
    "apply_closure",
    "atom_pair_structure",
    "boolean_closure",
    "boolean_lattice",
    "build_lattice",
    "build_tree",
    "chain",
    "chains_between",
    "check_lattice_axioms",
    "check_p1",
    "check_p2",
    "check_p3_third_point",
    "check_spanning",
    "common_complement",
    "coplanar_lines_structure",
    "covers_of",
    "derive_independent_atoms",
    "diamond_m3",
    "document_from_lattice",
    "document_to_lattice",
    "enumerate_boolean_sublattices",
    "find_realization",
    "geometry_view",
    "height_report",
    "initial_structure",
    "is_atomic",
    "is_complemented",
    "is_distributive",
    "is_independent",
    "is_modular",
    "is_perspective_lattice",
    "is_refinement",
    "lattice_to_dot",
    "line_probe_structure",
    "load_document",
    "max_independent_set",
    "parse_document",
    "pentagon_n5",
    "satisfies",
    "satisfies_height_law",
    "saturate_splits",
    "split_element",
    "split_element_branches",
    "subspace_lattice",
    "triple_split_structure",
    "verify_bvn_characterization",
    "verify_boolean_pipeline",
    "verify_projective_pipeline",
    "witness_violates",
]
