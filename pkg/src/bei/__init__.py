"""Binomial edge ideals of labeled graphs, their Groebner bases and minimal primes,
and the conditional-independence models they describe."""

from .ci import (
    RobustnessSpec,
    StateSpace,
    ci_generators,
    decompose_spec,
    full_support_implication,
    hamming_graph,
    spec_to_graph,
)
from .edge_ideal import (
    admissible_paths,
    edge_generators,
    has_quadratic_gb,
    initial_ideal,
    theoretical_groebner,
)
from .errors import DomainError, ParseError, ResourceError
from .graph import (
    LabeledGraph,
    all_shortest_paths_directed,
    closed_necessary_conditions,
    closure,
    connected_components,
    find_closed_labeling,
    induced_subgraph,
    is_closed_labeling,
    to_dag,
)
from .groebner import buchberger_reduced, ideal_equal, intersect, normal_form, s_polynomial
from .poly import MonomialOrder, Polynomial, compare
from .primes import (
    component_contains,
    component_height,
    cm_sufficient,
    cycle_report,
    is_prime_ideal,
    is_unmixed,
    krull_dimension,
    minimal_primes,
    prime_component,
)

__version__ = "0.1.0"
