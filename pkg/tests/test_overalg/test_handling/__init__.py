"""
test_overalg.test_handling
==========================

Tests for the overalg package, configuration loading and assembly.

See Also
--------
overalg.handling
"""
