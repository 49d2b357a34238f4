"""Cohen-Macaulay test for modules of covariants in any rank.

Valid for faithful, generic, weakly symmetric configurations.  For each
nonzero class ``lam`` of one-parameter subgroups, the weights supporting
the top local cohomology along the attracting locus of ``lam`` are

    -sum_{T+} alpha_i - sum_{T+} a_i alpha_i + sum_{T-} b_i alpha_i + sum_{T0} c_i alpha_i

with ``a_i, b_i >= 0`` and ``c_i`` arbitrary integers.  ``mu`` is a CM weight
iff it is of this form for no class.
"""
from __future__ import annotations

from typing import Optional, Sequence

from .errors import ConfigError, HypothesisViolated
from .intprog import DEFAULT_BUDGET, find_integer_solution, integer_feasibility
from .weights import (Character, LambdaClass, WeightConfig, enumerate_lambda_classes,
                      lambda_class_of, profile)

__all__ = [
    "LambdaClass",
    "check_hypotheses",
    "cm_verdicts",
    "integer_feasibility",
    "is_cm_weight_general",
    "local_weight_membership",
    "local_weight_solution",
]


def _as_character(config: WeightConfig, mu) -> Character:
    if isinstance(mu, int) and not isinstance(mu, bool):
        mu = (mu,)
    mu = tuple(mu)
    if len(mu) != config.rank:
        raise ConfigError(f"dimension mismatch: character has length {len(mu)}, rank is {config.rank}")
    return mu


def _check_class(config: WeightConfig, cls: LambdaClass):
    if len(cls.sign_vector) != config.d or len(cls.witness) != config.rank:
        raise ConfigError("lambda class does not belong to this configuration")
    if lambda_class_of(config, cls.witness).sign_vector != cls.sign_vector:
        raise ConfigError("lambda class witness does not reproduce its sign vector")
    if not any(cls.sign_vector):
        raise ConfigError("the zero class has no local weight condition")


def _system(config: WeightConfig, cls: LambdaClass, mu: Character):
    """Columns, target and mask of the membership problem.

    Column order: T+ (coefficients a_i), then T- (b_i), then T0 (c_i).
    """
    order = sorted(cls.T_plus) + sorted(cls.T_minus) + sorted(cls.T_zero)
    cols = []
    for i in sorted(cls.T_plus):
        cols.append([-x for x in config.weights[i]])
    for i in sorted(cls.T_minus) + sorted(cls.T_zero):
        cols.append(list(config.weights[i]))
    mask = [True] * (len(cls.T_plus) + len(cls.T_minus)) + [False] * len(cls.T_zero)
    target = [mu[k] + sum(config.weights[i][k] for i in cls.T_plus) for k in range(config.rank)]
    matrix = [[col[k] for col in cols] for k in range(config.rank)]
    return matrix, target, mask, order


def local_weight_solution(config: WeightConfig, cls: LambdaClass, mu,
                          budget: int = DEFAULT_BUDGET) -> Optional[dict]:
    """Coefficients ``{weight index: coefficient}`` realising ``mu`` for
    ``cls``, or ``None``."""
    _check_class(config, cls)
    mu = _as_character(config, mu)
    matrix, target, mask, order = _system(config, cls, mu)
    x = find_integer_solution(matrix, target, mask, budget)
    if x is None:
        return None
    return dict(zip(order, x))


def local_weight_membership(config: WeightConfig, cls: LambdaClass, mu,
                            budget: int = DEFAULT_BUDGET) -> bool:
    _check_class(config, cls)
    mu = _as_character(config, mu)
    matrix, target, mask, _ = _system(config, cls, mu)
    return integer_feasibility(matrix, target, mask, budget)


def check_hypotheses(config: WeightConfig) -> list[str]:
    """Names of the failed predicates among weakly_symmetric, generic, faithful."""
    prof = profile(config)
    return [name for name in ("weakly_symmetric", "generic", "faithful")
            if not getattr(prof, name)]


def is_cm_weight_general(config: WeightConfig, mu, classes: Optional[Sequence[LambdaClass]] = None,
                         budget: int = DEFAULT_BUDGET) -> bool:
    """Whether the module of covariants indexed by ``mu`` is Cohen-Macaulay.

    Raises :class:`HypothesisViolated` unless the configuration is faithful,
    generic and weakly symmetric; the criterion is not valid otherwise.
    """
    failed = check_hypotheses(config)
    if failed:
        raise HypothesisViolated(failed)
    mu = _as_character(config, mu)
    if classes is None:
        classes = enumerate_lambda_classes(config)
    return not any(local_weight_membership(config, cls, mu, budget) for cls in classes)


def cm_verdicts(config: WeightConfig, mus, budget: int = DEFAULT_BUDGET) -> dict:
    """``{mu: is_cm}`` for several weights, checking hypotheses and
    enumerating classes only once."""
    failed = check_hypotheses(config)
    if failed:
        raise HypothesisViolated(failed)
    classes = enumerate_lambda_classes(config)
    out = {}
    for mu in mus:
        mu = _as_character(config, mu)
        out[mu] = not any(local_weight_membership(config, cls, mu, budget) for cls in classes)
    return out
