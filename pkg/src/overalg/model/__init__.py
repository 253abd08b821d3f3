"""
overalg.model
=============

Holomorphic side: polynomial vectors of the tensor product, their inner product, and the actions
of the Lie algebra and of the group.

Modules
-------
holomorphic
    Coefficient matrices, algebra generators and group elements.
"""
