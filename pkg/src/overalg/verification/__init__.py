"""
overalg.verification
====================

Verification suites run by the command-line interface and the reports they produce.

Modules
-------
catalog
    Suite names and their canonical order.
report
    Report records and JSON serialization.
suites
    Suite runners and their parallel execution.
"""
