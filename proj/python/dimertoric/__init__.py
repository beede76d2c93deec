"""Dimer models on the 2-torus: quivers with relations, perfect-matching
polygons, and exact line-bundle cohomology on the associated toric surface
stack.

Every function takes a model document (JSON text, same format as the CLI)
and returns the corresponding report parsed into plain Python objects.
Use :func:`fixture` to obtain a bundled example document.
"""

import json as _json

from ._core import __version__, canonical_document, fixture, fixture_names
from . import _core as _c

__all__ = [
    "__version__",
    "canonical_document",
    "classification",
    "collection",
    "crosscheck",
    "curved_diagram",
    "figures",
    "fixture",
    "fixture_names",
    "matchings",
    "polygon",
    "quiver",
    "superpotential",
    "validate",
    "verify",
    "zigzag",
]


def validate(document):
    """Structural validation report for a model document."""
    return _json.loads(_c.validate(document))


def quiver(document):
    """Faces, dual quiver, and relation paths."""
    return _json.loads(_c.quiver(document))


def zigzag(document):
    """Zig-zag paths and the consistency checks."""
    return _json.loads(_c.zigzag(document))


def matchings(document):
    """Perfect matchings and their homology classes."""
    return _json.loads(_c.matchings(document))


def polygon(document):
    """Class polygon with point roles and multiplicities."""
    return _json.loads(_c.polygon(document))


def classification(document, origin=None):
    """Matching labels and central candidates at the chosen origin."""
    return _json.loads(_c.classification(document, origin=origin))


def collection(document, pm=-1, origin=None):
    """Line-bundle collection for a central matching (default: smallest)."""
    return _json.loads(_c.collection(document, pm=pm, origin=origin))


def verify(document, pm=-1, origin=None):
    """Strong exceptionality of the collection, by exact cohomology."""
    return _json.loads(_c.verify(document, pm=pm, origin=origin))


def crosscheck(document, pm=-1, origin=None):
    """Path-algebra quotient dimensions against lattice-point Hom counts."""
    return _json.loads(_c.crosscheck(document, pm=pm, origin=origin))


def superpotential(document, lift_bound=1, max_length=24):
    """Small cycles, centrality, and truncated quotient dimensions."""
    return _json.loads(
        _c.superpotential(document, lift_bound=lift_bound, max_length=max_length)
    )


def curved_diagram(document):
    """Curved cyclic quivers attached to edges and nodes."""
    return _json.loads(_c.curved_diagram(document))


def figures(document, pm=-1, origin=None, seed=0):
    """SVG figures as a ``{filename: svg_text}`` dict."""
    return _c.figures(document, pm=pm, origin=origin, seed=seed)
