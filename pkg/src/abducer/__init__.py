"""Abduction in plausibility models, ranked by compression-based complexity."""

from .abduction import (
    AbductiveProblem, CandidateSolution, IntegrationResult, detect, filter_flags,
    generate_candidates, integrate, is_solution, rank, relation_change_score, screen,
)
from .complexity import (
    ComplexityEstimate, conditional_complexity, lz76_phrases, plain_complexity,
    score_relation_change,
)
from .dynamics import conjecture, observe
from .errors import *  # noqa: F401,F403
from .formula import (
    Atom, B, Believe, BoxEp, BoxPl, DiaEp, DiaPl, Formula, Iff, Implies, K, Know, Not, Or,
    And, atoms, desugar, is_propositional, parse, to_text,
)
from .model import (
    PlausibilityModel, RelationMatrix, World, decode_relation, encode_relation,
    epistemic_relation, equal_plausibility, matrix_bits, validate,
)
from .propabduction import (
    ClausalTheory, ProblemKind, check_solution, clausal_bits, classify_problem, entails,
    to_minimal_clausal,
)
from .semantics import believes, evaluate, knows, valid_in_model

__version__ = "0.1.0"
