"""Certified lengths and directional variations of plane paths.

Paths are given as PathSpec dictionaries (or JSON strings), e.g.
``{"kind": "polyline", "vertices": [[0, 0], [1, 0]]}``. Numbers in the
results are outward-rounded decimal strings.
"""

import json

from ._crofton import (
    CertificationUnavailable,
    DomainError,
    InvalidInput,
    OracleError,
    ResourceError,
)
from . import _crofton

__all__ = [
    "length",
    "variation",
    "profile",
    "decide",
    "demo",
    "generate",
    "CertificationUnavailable",
    "DomainError",
    "InvalidInput",
    "OracleError",
    "ResourceError",
]


def _spec(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def _num(x):
    return x if isinstance(x, str) else repr(x)


def _result(outcome):
    report = json.loads(outcome.json)
    report["certified"] = outcome.certified
    return report


def length(spec, eps="1e-6", workers=1, digits=12):
    """Length certificate; sampled graphs give a bracket with certified=False."""
    return _result(_crofton.length(_spec(spec), _num(eps), workers, digits))


def variation(spec, theta, eps="1e-6", route="auto", digits=12):
    """Variation certificate in direction theta ("pi/2", "0.3", ...)."""
    return _result(_crofton.variation(_spec(spec), _num(theta), _num(eps), route, digits))


def profile(spec, count=16, eps="1e-6", digits=12):
    """Rows {"theta": {lo, hi}, "v": {lo, hi}} at theta = j pi / count."""
    return json.loads(_crofton.profile(_spec(spec), count, _num(eps), digits))


def decide(spec, theta, a, b):
    """"greater-than-a" or "less-than-b" for the variation in direction theta."""
    report = _result(_crofton.decide(_spec(spec), _num(theta), _num(a), _num(b)))
    if not report.pop("certified"):
        raise CertificationUnavailable("sampled graphs admit only brackets")
    return report["verdict"]


def demo(n, k, digits=12):
    """Sampled bracket against the exact vertical variation of f_n."""
    return json.loads(_crofton.demo(n, k, digits))


def generate(family, n=1, bits=(), tilt=False):
    """Counterexample PathSpec: family "sawtooth" or "mixture"."""
    return json.loads(_crofton.generate(family, n, list(bits), tilt))
