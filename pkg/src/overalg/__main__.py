"""
Entry point for the `overalg` package, invoked as a module.

Usage
-----
To run the verification suites, execute::

    python -m overalg verify --suite all


See Also
--------
overalg.cli: Module implementing the application's command-line interface.
"""
from .cli import app

app()
