"""
overalg.validation
==================

Validation rules and the validator applying them to a ``ParameterSet``.

Modules
-------
rules
    Single-value constraints (type, range, options, custom predicate).
validator
    Aggregation of rule outcomes over a parameter set.
"""
