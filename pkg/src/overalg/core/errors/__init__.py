"""
overalg.core.errors
===================

Custom exceptions and errors tailored to the overalg package.

Modules
-------
validation
    Errors raised when a configuration value or a domain object violates a constraint.
numerics
    Errors raised by numerical evaluations (poles, domains, branches, convergence).

See Also
--------
test_errors
    Tests for the errors module.
"""
