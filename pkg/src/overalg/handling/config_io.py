"""
overalg.handling.config_io
==========================

Loading of YAML run configurations.

A configuration file is a flat mapping of run parameters, optionally nested under a top-level
``run`` key::

    run:
      alpha: 2.5
      degree: 4
      tolerance: 1.0e-10

Functions
---------
load_yaml
    Load a YAML file as a plain dictionary.
read_run_section
    Load a configuration file and return its run parameters.
"""
import logging
from pathlib import Path
from typing import Any, Dict

from overalg.core.errors.validation import TypeValidationError

logger = logging.getLogger(__name__)

RUN_SECTION = "run"


def load_yaml(path: str | Path, prefer_omegaconf: bool = True) -> Dict[str, Any]:
    """
    Load a YAML file, resolving OmegaConf interpolations when available.

    Parameters
    ----------
    path : str | Path
        Path to the YAML file.
    prefer_omegaconf : bool, default True
        Try OmegaConf before PyYAML.

    Returns
    -------
    Dict[str, Any]
        Loaded content (empty for an empty file).

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ImportError
        If neither ``omegaconf`` nor ``pyyaml`` is installed.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {path}")

    loaders = ["omegaconf", "pyyaml"] if prefer_omegaconf else ["pyyaml", "omegaconf"]
    last_error: Exception | None = None
    for loader in loaders:
        try:
            if loader == "omegaconf":
                from omegaconf import OmegaConf

                content = OmegaConf.to_container(OmegaConf.load(path), resolve=True)
            else:
                import yaml

                with open(path, encoding="utf-8") as stream:
                    content = yaml.safe_load(stream)
        except ImportError as exc:
            last_error = exc
            continue
        logger.debug("Loaded %s with %s", path, loader)
        return content or {}

    raise ImportError("Either 'omegaconf' or 'pyyaml' is required for YAML loading.") from last_error


def read_run_section(path: str | Path) -> Dict[str, Any]:
    """
    Load a configuration file and return its run parameters.

    Raises
    ------
    TypeValidationError
        If the file (or its ``run`` section) is not a mapping.
    """
    content = load_yaml(path)
    if not isinstance(content, dict):
        raise TypeValidationError(content, dict)
    section = content.get(RUN_SECTION, content) if set(content) <= {RUN_SECTION} else content
    if not isinstance(section, dict):
        raise TypeValidationError(section, dict)
    return dict(section)
