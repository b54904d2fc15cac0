"""Noetherian quivers: decisions, Gröbner orders and representations over F_p."""

from .quiver import (
    Arrow,
    MaximalPath,
    Path,
    Quiver,
    QuiverError,
    QuiverParseError,
    cycle_vertices,
    enumerate_paths,
    load_quiver,
    opposite,
    parse_path,
    parse_quiver,
    reachable_subquiver,
    serialize_quiver,
)
from .poset import (
    PathIdeal,
    PathPoset,
    PeriodicPathSequence,
    enumerate_ideals,
    ideal_compare,
    ideal_membership,
    normalize_generators,
    nu_extract,
    path_leq,
)
from .noetherian import (
    Decomposition,
    NoetherianReport,
    NonNoetherianWitness,
    NotNoetherianError,
    decompose,
    finite_quiver_criterion,
    is_left_finite_at,
    is_left_noetherian,
    is_left_noetherian_at,
    is_right_noetherian,
    maximal_paths,
    pumping_oracle,
    witness_chain,
)
from .groebner import (
    DictionaryOrder,
    FiniteCategory,
    GroebnerOrder,
    ReversedDegreeOrder,
    check_finite_category,
    check_g1,
    check_g2,
    check_refinement,
    compare_paths,
    load_category,
    parse_category,
)
from .gf import Subspace
from .linrep import (
    FreeRepresentation,
    Representation,
    Subrepresentation,
    enumerate_subrepresentations,
    free_representation,
    hom_representations,
    ideal_embedding,
    leading_submodule,
)
from .algebra import (
    PathAlgebra,
    TruncationOverflow,
    algebra_noetherian,
    build_algebra,
    multiply,
    rep_module_correspondence,
)

__version__ = "0.1.0"
