"""Exception hierarchy shared across the package."""


class ToricError(Exception):
    """Base class for all package errors."""


class ConfigError(ToricError, ValueError):
    """Malformed weight configuration or input data."""


class NotFaithful(ConfigError):
    pass


class NotUnimodular(ConfigError):
    pass


class OneSided(ConfigError):
    pass


class HypothesisViolated(ToricError):
    """A configuration predicate required by a criterion does not hold.

    ``predicates`` lists the names of the failed predicates, e.g.
    ``("weakly_symmetric",)``.
    """

    def __init__(self, predicates, message=None):
        self.predicates = tuple(predicates)
        if message is None:
            message = "hypothesis violated: " + ", ".join(
                f"{p}: false" for p in self.predicates)
        super().__init__(message)


class BudgetExceeded(ToricError):
    """The search ran out of nodes before reaching a verdict."""

    def __init__(self, nodes):
        self.nodes = nodes
        super().__init__(f"node budget of {nodes} exhausted without a verdict")


class Falsification(ToricError):
    """An invariant that should hold by theory failed.

    Either an implementation bug or a genuine counterexample; ``witness``
    carries the offending data.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(f"FALSIFICATION: {message}")
