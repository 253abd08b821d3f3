"""
overalg.spectral
================

Spectral side: intertwining kernel and transform, Plancherel density, difference operators and
the continuous dual Hahn identification.

Modules
-------
kernel
    Kernel of the transform and its Taylor coefficients.
transform
    Closed-form and quadrature transforms.
plancherel
    Density, weighted inner products and Parseval checks.
operators
    Spectral operators matched with the algebra generators.
hahn
    Continuous dual Hahn polynomials and the eigenfunctions of ``Q0``.
"""
