"""Exact classification and algebra for neutrosophic over-, under- and off-sets."""

from .values import Piece, SubsetValue, ValidationError, format_rational, q, sv
from .core import (
    Classification,
    ComplexElement,
    Element,
    Evidence,
    LabelScale,
    OffCollection,
    RefinedElement,
    Tag,
    ThresholdFrame,
    classify_collection,
    classify_complex,
    classify_complex_collection,
    classify_component,
    classify_element,
    classify_label_element,
    classify_refined,
    classify_refined_collection,
    normalize_attribute,
    off_exists,
    off_forall,
)
from .algebra import (
    ComplementVariant,
    NormFamily,
    complement_element,
    component_complement,
    off_and,
    off_complement,
    off_intersection,
    off_or,
    off_union,
    offconorm,
    offnorm,
    verify_norm_axioms,
)
from .offnumbers import TrapezoidalOffnumber, TriangularOffnumber, trapezoidal_eval, triangular_eval
from .dependence import (
    ComponentBounds,
    DependenceSpec,
    max_component_sum,
    off_pair_range,
    off_sum_range_global,
    refined_sum_bound,
)
from .polarity import (
    BipolarElement,
    MultipolarElement,
    TripolarElement,
    antagonist_projection,
    classify_bipolar,
    classify_multipolar,
    classify_tripolar,
    tripolar_from_enrollment,
)
from .symbolic import Sym, SymbolicOrder, alternate_order, default_order, eval_formula, parse_formula
from .structures import (
    LabeledLaw,
    LabeledResidue,
    NeutroGraph,
    NeutroMatrix,
    check_closure,
    check_topology,
    classify_graph,
    classify_matrix,
    generate_labeled_structure,
)
from .stats import (
    OffProbabilityAssessment,
    RefinedOffProbability,
    classify_probability,
    classify_refined_probability,
    contribution_pipeline,
    off_mean,
)

__version__ = "0.1.0"
