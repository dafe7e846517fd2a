"""Size guard for the exponentially growing enumerations.

Vertex counts grow like (2n)!/n!, so n=6 already means 665,280 vertices.
Enumerating operations refuse to run above a configurable cap instead of
silently grinding; the cap can be raised per call (``max_n=``) or globally
through the ``PA_MAX_N`` environment variable.
"""

import os

DEFAULT_MAX_N = 6
ENV_VAR = "PA_MAX_N"


class ResourceCapError(RuntimeError):
    """An enumeration was asked to run above the configured size cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"n={n} exceeds the enumeration cap {cap}; "
            f"pass max_n or set {ENV_VAR} to override"
        )
        self.n = n
        self.cap = cap


def resource_cap(max_n: int | None = None) -> int:
    """The effective cap: explicit argument, else environment, else default."""
    if max_n is not None:
        return max_n
    value = os.environ.get(ENV_VAR)
    if value is not None:
        return int(value)
    return DEFAULT_MAX_N


def check_cap(n: int, max_n: int | None = None) -> None:
    cap = resource_cap(max_n)
    if n > cap:
        raise ResourceCapError(n, cap)
