"""Exact computations with sortable elements for oriented Coxeter diagrams,
including orientations with directed cycles."""

from __future__ import annotations

__version__ = "0.1.0"

from .cartan import (
    CartanError,
    CartanSpec,
    CoxeterData,
    Orientation,
    config_from_dict,
    from_b_matrix,
    load_config,
    validate,
)
from .group import CoxeterGroup, Element

__all__ = [
    "CartanError",
    "CartanSpec",
    "CoxeterData",
    "CoxeterGroup",
    "Element",
    "Orientation",
    "config_from_dict",
    "from_b_matrix",
    "load_config",
    "validate",
    "__version__",
]
