"""Exception hierarchy; the CLI maps these onto its exit codes."""


class ParembedError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class GraphFormatError(ParembedError):
    """Unreadable or malformed graph/label/manifest input."""

    exit_code = 2


class ConfigError(ParembedError):
    """Invalid pipeline configuration (infeasible capacities, bad flags)."""

    exit_code = 2


class CapacityError(ParembedError):
    """A subgraph exceeds the vertex budget of its compute node."""

    exit_code = 3


class BackendError(ParembedError):
    """An embedding backend failed on a subgraph."""

    exit_code = 4
