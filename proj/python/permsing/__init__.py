"""Exact certificates for quotient singularities of permutation actions."""

import json

from ._core import *  # noqa: F401,F403
from ._core import _classify_json, gorenstein_report as _gorenstein_json


def classify(group, p):
    """Classification report for A^n/G in characteristic p, as a dict."""
    return json.loads(_classify_json(group, p))


def gorenstein_report(group, p):
    return json.loads(_gorenstein_json(group, p))
