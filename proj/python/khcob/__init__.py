"""Khovanov and Bar-Natan homology of link diagrams over F2.

Diagrams are PD strings, rules are "kh", "bn" or a path to a rule JSON file.
Results are plain dicts and lists in the same shape as the CLI's --json output.
"""

import json as _json

from . import _khcob
from ._khcob import (
    CapExceeded,
    DiagramError,
    FormatError,
    FrameMismatch,
    IoError,
    MovieError,
    RuleError,
    __version__,
)


def diagram(pd):
    return _json.loads(_khcob.diagram(pd))


def jones(pd):
    """Unnormalized Jones polynomial as {exponent: coefficient}."""
    return {int(e): c for e, c in _json.loads(_khcob.jones(pd)).items()}


def homology(pd, rule="kh"):
    return _json.loads(_khcob.homology(pd, rule))


def pages(pd, rule="bn", max_page=16):
    return _json.loads(_khcob.pages(pd, rule, max_page))


def complex(pd, rule="kh"):
    return _json.loads(_khcob.complex(pd, rule))


def complex_homology(c):
    """Homology of a complex given as a dict in the interchange format."""
    return _json.loads(_khcob.complex_homology(_json.dumps(c)))


def compare_movies(a, b, rule="kh"):
    """Movie texts a and b; {"homotopic": bool, ...}."""
    return _json.loads(_khcob.compare_movies(a, b, rule))


def verify(suite, corpus, jobs=1):
    return _json.loads(_khcob.verify(suite, str(corpus), jobs))


__all__ = [
    "CapExceeded", "DiagramError", "FormatError", "FrameMismatch", "IoError", "MovieError",
    "RuleError", "__version__", "complex", "complex_homology", "compare_movies", "diagram",
    "homology", "jones", "pages", "verify",
]
