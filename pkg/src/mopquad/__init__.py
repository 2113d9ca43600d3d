"""Simultaneous Gaussian quadrature rules for multiple orthogonal polynomials."""

from .catalog import MopSpec, RecurrenceSystem, class_mop, validate_spec

__version__ = "0.1.0"

__all__ = [
    "MopSpec",
    "RecurrenceSystem",
    "validate_spec",
    "class_mop",
    "gauss_mop",
    "apply_rule",
    "QuadratureRule",
    "__version__",
]


def __getattr__(name):
    # quadrature pulls in the whole pipeline; import lazily so that
    # `import mopquad` stays cheap for catalog-only consumers
    if name in ("gauss_mop", "apply_rule", "QuadratureRule", "exactness_degree"):
        from . import quadrature

        return getattr(quadrature, name)
    raise AttributeError(f"module 'mopquad' has no attribute {name}")
