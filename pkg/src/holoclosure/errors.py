"""Shared exception types: resource budgets and semantic preconditions."""


class ResourceLimitError(Exception):
    """A configured pair / degree / size budget was exceeded."""


class EmptySetError(Exception):
    """The input equations define the empty set (unit ideal)."""


class PointNotOnSetError(Exception):
    """A supplied point does not satisfy every defining equation."""


class NonSmoothPointError(Exception):
    """Jacobian rank at the point is below the expected codimension."""


class SamplingError(Exception):
    """No rational point on the variety was found within the retry budget."""
