"""
overalg.verification.catalog
============================

Names of the verification suites and their canonical order.

The position of a suite in ``SUITE_ORDER`` seeds its random generator, so new suites are appended.

Classes
-------
Suite
    Names of the suites.
"""
from enum import Enum
from typing import List


class Suite(str, Enum):
    """Verification suites selectable from the command line or a configuration file."""
    INTERTWINE = "intertwine"
    KERNEL_IDENTITY = "kernel-identity"
    PARSEVAL = "parseval"
    EIGEN = "eigen"
    HAHN = "hahn"
    ALL = "all"

    def expand(self) -> List["Suite"]:
        """Concrete suites selected by this name."""
        return list(SUITE_ORDER) if self is Suite.ALL else [self]


SUITE_ORDER = (Suite.INTERTWINE, Suite.KERNEL_IDENTITY, Suite.PARSEVAL, Suite.EIGEN, Suite.HAHN)

SUITE_NAMES = frozenset(s.value for s in Suite)
