"""Cohen-Macaulay modules of covariants, CM cliques and their mutations for
torus representations."""

__version__ = "0.1.0"

from .errors import (BudgetExceeded, ConfigError, Falsification, HypothesisViolated,
                     NotFaithful, NotUnimodular, OneSided)
from .weights import (ConfigProfile, LambdaClass, WeightConfig, Zonotope,
                      enumerate_lambda_classes, is_generic_character, lambda_class_of,
                      load_config, profile, sigma_zonotope, validate)
from .semigroup import (Rank1Data, build_rank1, cm_set, frobenius_number, in_S, in_S_plus,
                        p_of, q_of)
from .intprog import integer_feasibility
from .cm_general import cm_verdicts, is_cm_weight_general, local_weight_membership
from .cliques import (blockers, enumerate_maximal_cliques, is_cm_clique, is_half_sigma_translate,
                      is_interval, is_maximal_clique, normalize, residue_profile)
from .mutation import (MutationPath, MutationStep, check_tilting_certificate, mutate_max,
                       mutate_min, mutation_graph, normalize_to_standard)
