"""
overalg.handling
================

Assembly of run configurations from defaults, YAML files, the environment and the command line.

Modules
-------
config_io
    YAML loading.
run_config
    Configuration schema and the frozen ``RunConfig``.
"""
