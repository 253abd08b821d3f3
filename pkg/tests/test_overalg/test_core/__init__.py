"""
test_overalg.test_core
======================

Tests for the overalg package, errors, parameters and arithmetic primitives.

See Also
--------
overalg.core
"""
