"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and the process exit
status the command line front end uses for it.
"""

from __future__ import annotations


class LatticeError(Exception):
    code = "error"
    exit_code = 1


class DomainError(LatticeError, ValueError):
    code = "domain_error"
    exit_code = 3


class DegenerateSegment(DomainError):
    code = "degenerate_segment"


class DegenerateTriangle(DomainError):
    code = "degenerate_triangle"


class DegenerateInput(DomainError):
    code = "degenerate_input"


class RangeError(LatticeError, OverflowError):
    """A coordinate or matrix entry left the supported integer range."""

    code = "range_error"
    exit_code = 3


class ResourceLimit(LatticeError):
    code = "resource_limit"
    exit_code = 4


class InvariantError(LatticeError, AssertionError):
    """An internal consistency check failed. Should never happen."""

    code = "invariant_failure"
    exit_code = 5
