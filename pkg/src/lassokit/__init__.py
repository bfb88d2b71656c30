"""Lasso automata, lasso semigroups and the translations between them."""

from .automaton import (
    AutomatonMorphism,
    LassoAutomaton,
    OmegaReport,
    OmegaRevReport,
    accept,
    behavioral_partition,
    chi,
    complement,
    find_morphism,
    is_observable,
    is_reachable,
    isomorphic,
    language_equivalent,
    language_sample,
    omega_conditions,
    omega_rev_conditions,
    reach,
    rev,
    rev_reach,
    to_dot,
    transition_semigroup,
)
from .errors import LassoError, SizeCapExceeded
from .functors import (
    AdjunctionReport,
    AlgebraicOmegaReport,
    adjunction_probe,
    alg,
    aut,
    minimize,
    omega_check_algebraic,
    syntactic,
)
from .lasso_core import (
    LanguageSample,
    Lasso,
    canonical,
    enumerate_lassos,
    reverse_lasso,
    reverse_sample,
    saturation_check,
    up_equal,
)
from .semigroup import (
    ExtendedLassoSemigroup,
    ExtMorphism,
    LassoSemigroup,
    WilkeReport,
    check_refinement,
    closure_from_generators,
    eval_omega,
    eval_plus,
    find_ext_morphism,
    recognition_sample,
    recognizes,
    validate_extended,
    validate_semigroup,
    wilke_axioms,
)

__all__ = [name for name in dir() if not name.startswith("_")]
