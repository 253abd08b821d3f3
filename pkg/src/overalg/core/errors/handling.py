"""
overalg.core.errors.handling
============================

Custom exceptions raised while assembling a run configuration from its sources.

Classes
-------
OverrideParameterError
UnknownParameterError
"""
from collections.abc import Iterable
from typing import Optional


# --- Configuration Assembly Errors ----------------------------------------------------------------

class OverrideParameterError(Exception):
    """
    Exception raised when a parameter is declared twice in a configuration schema.

    Parameters
    ----------
    name : str
        Name of the duplicated parameter.
    """
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Parameter '{name}' already declared in the schema.")


class UnknownParameterError(KeyError):
    """
    Exception raised when a configuration source names a parameter the schema does not declare.

    Parameters
    ----------
    name : str
        Unknown parameter name.
    known : Iterable[str], optional
        Names declared in the schema, listed in the message.
    source : str, optional
        Origin of the offending key (e.g. a YAML path).
    """
    def __init__(self, name: str, known: Optional[Iterable[str]] = None, source: Optional[str] = None):
        self.name = name
        self.known = sorted(known) if known is not None else []
        self.source = source
        message = f"No parameter '{name}' in the run configuration"
        if source:
            message += f" (from {source})"
        if self.known:
            message += f"; expected one of {self.known}"
        self.message = message + "."
        super().__init__(self.message)

    def __str__(self) -> str:
        # KeyError quotes its argument by default
        return self.message
