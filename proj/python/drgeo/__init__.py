"""Distance-regular graph analysis: intersection arrays, spectra, geometry,
claw rule-outs, family classification and concrete graph verification.

Reports come back as plain dicts with the same keys as the ``drg`` CLI's
JSON output.
"""

import json

from . import _core
from ._core import DrgError, is_theta_min_minus3, normalize

__all__ = [
    "DrgError",
    "analyze",
    "build",
    "classify",
    "families",
    "halve",
    "is_theta_min_minus3",
    "normalize",
    "ruleout",
    "ruleout_table7",
    "verify",
]


def analyze(array, timing=False, monotonicity=True):
    """Full report for one array. Returns (report, anomaly); anomaly is None
    unless the result contradicts the classification."""
    body, anomaly = _core.analyze(array, timing, monotonicity)
    return json.loads(body), anomaly


def ruleout(array):
    return json.loads(_core.ruleout(array))


def ruleout_table7():
    return json.loads(_core.ruleout_table7())


def classify(array):
    return json.loads(_core.classify(array))


def families(max_k, max_d=8, labels=()):
    return json.loads(_core.families(max_k, max_d, list(labels)))


def build(kind, *params):
    """Edge-list text of a constructed graph, e.g. build("hamming", 3, 3)."""
    return _core.build_edgelist(kind, [str(p) for p in params])


def halve(edgelist, side=0):
    return _core.halve(edgelist, side)


def verify(edgelist):
    return json.loads(_core.verify(edgelist))
