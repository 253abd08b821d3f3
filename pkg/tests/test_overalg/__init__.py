"""
test_overalg
============

Tests for the overalg package.

Modules
-------
test_core
test_validation
test_model
test_spectral
test_handling
test_verification
test_cli

See Also
--------
overalg

Notes
-----
This test package is imported by Sphinx to extract docstrings for documenting tests. This
documentation provides additional examples and explanations for the tested modules and functions.
"""
