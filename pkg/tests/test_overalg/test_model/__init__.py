"""
test_overalg.test_model
=======================

Tests for the overalg package, holomorphic model.

See Also
--------
overalg.model
"""
