"""Exception types raised by the learners and the CLI."""


class ModelDegeneracyError(ValueError):
    """Learning produced nothing to generate from (e.g. no significant itemsets)."""
