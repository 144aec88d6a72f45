"""Python front end for the trisect core."""

import json

from . import _trisect
from ._trisect import (
    TrisectError,
    cokernel,
    fib_gstep,
    minors_gcd,
    run_cli,
    snf,
    subarc_profile,
    wave_reduce,
)


def standard_diagram(name):
    return json.loads(_trisect.standard_diagram(name))


def spun_lens(p, q=1):
    return json.loads(_trisect.spun_lens(p, q))


def validate(diagram):
    return json.loads(_trisect.validate(json.dumps(diagram)))


def homology(diagram):
    return _trisect.homology(json.dumps(diagram))


def theorem3_bound(p):
    return json.loads(_trisect.theorem3_bound(p))


def entry_bound_harness(max_genus=5, max_steps=8, trials=1000, seed=1):
    return json.loads(_trisect.entry_bound_harness(max_genus, max_steps, trials, seed))


__all__ = [
    "TrisectError",
    "cokernel",
    "entry_bound_harness",
    "fib_gstep",
    "homology",
    "minors_gcd",
    "run_cli",
    "snf",
    "spun_lens",
    "standard_diagram",
    "subarc_profile",
    "theorem3_bound",
    "validate",
    "wave_reduce",
]
