"""Graph orientation under forbidden tournaments and tuple constraints.

Decide whether an orientation problem -- orient a graph's edges so that no
clique induces a forbidden tournament and constrained vertex tuples induce
only allowed ones -- is polynomial or NP-complete, and solve concrete
instances with the route the classification licenses.
"""

from ._kernels import implementation as kernel_implementation
from .classify import (
    Case,
    Classification,
    ModelClass,
    NoveltyReport,
    Relation,
    classify,
    contains_all_transitive,
    largest_free_transitive,
    no_free_tournament_at,
    novelty_report,
    validate,
)
from .solver import (
    ARROW,
    BoundExceeded,
    Compiled,
    CompiledConstraint,
    Constraint,
    InputError,
    Instance,
    InternalError,
    NotAffine,
    NotBijunctive,
    Orientation,
    ParitySystem,
    SolveResult,
    TwoSat,
    Unsat,
    VerifyResult,
    affine_compile,
    brute_force_solve,
    compile_instance,
    decode,
    gf2_solve,
    normalize,
    solve,
    trivial_solve,
    twosat_compile,
    twosat_solve,
    verify,
)
from .tournaments import (
    CapExceeded,
    ForbiddenSet,
    IsoWitness,
    Tournament,
    canonical_form,
    enumerate_labeled,
    forbidden_witness,
    free_tournaments,
    induced,
    is_free,
    is_isomorphic,
    is_transitive,
    transitive_tournaments,
)
from .voting import (
    Counterexample,
    FreeSetsVerdict,
    PreservationVerdict,
    Vote,
    free_sets_preserved,
    majority_closure_consistent,
    relation_preserved,
    set_preserved,
    vote,
)

__version__ = "0.1.0"
