"""Certified extraction of matchings, co-matchings and half-graphs from binary matrices."""

from .bitmatrix import (
    BinaryMatrix,
    IndexSelection,
    column_twin_classes,
    complement,
    dedup_columns,
    entry,
    parse_matrix,
    serialize_matrix,
    submatrix,
    transpose,
)
from .estimator import TriPatternExtractor
from .graph import SimpleGraph
from .homogenize import (
    HomogeneousSet,
    HomogenizeConfig,
    extract_ab_star,
    extract_abc,
    find_homogeneous,
    upper_graph,
)
from .patterns import (
    ExtractionCertificate,
    PatternKind,
    TriPattern,
    canonical_kind,
    classify,
    is_switch_matrix,
    make_tri_matrix,
    parse_certificate,
    serialize_certificate,
    verify_certificate,
)
from .pipeline import PipelineReport, extract_structure, run_experiment
from .switch import SwitchWitness, extract_switch, guaranteed_switch_size
from .vcdim import (
    SetSystem,
    graph_vc_dimension,
    growth_function,
    is_shattered,
    matrix_vc_dimension,
    phi,
    sampled_growth_lower_bound,
    vc_dimension,
)

__version__ = "0.1.0"
