"""Exact biderivations, commuting maps and centroids of Lie algebras."""

from ._liebider import *  # noqa: F401,F403
from ._liebider import Algebra, Module


def adjoint(name, field=None):
    """Adjoint module of a catalog algebra."""
    return Module.adjoint(Algebra.catalog(name, field))
