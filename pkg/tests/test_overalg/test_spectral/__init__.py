"""
test_overalg.test_spectral
==========================

Tests for the overalg package, kernel, transform, Plancherel density, operators and Hahn check.

See Also
--------
overalg.spectral
"""
