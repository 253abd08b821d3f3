"""
overalg.core
============

Core building blocks shared by the holomorphic and spectral sides.

Modules
-------
types
    Shared type aliases and structural protocols.
arith
    Complex special functions and quadrature rules.
parameters
    Declarative parameter containers used to assemble run configurations.
errors
    Exception hierarchies for validation and numerics.
"""
