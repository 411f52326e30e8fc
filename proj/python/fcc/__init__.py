"""Exact toolkit for regular F-manifolds with compatible connection.

Thin convenience layer over the compiled ``_fcc`` module: the core exchanges
JSON strings; these helpers decode them into Python objects.
"""

import json as _json

from _fcc import SpecError, reference_case_ids  # noqa: F401
import _fcc


def gen_a0(spec):
    """Build the general solution a0; returns its canonical string form.

    ``spec`` is a dict (or JSON string) in the spec-file schema, e.g.
    ``{"blocks": [2], "F": [[[0, 1], [0]]]}``.
    """
    text = spec if isinstance(spec, str) else _json.dumps(spec)
    return _json.loads(_fcc.gen_a0(text))["a0"]


def check(spec, *, master=False, connection=False, curvature=False,
          dual=False, metric=False, hierarchy=-1):
    """Run verification suites; returns ``(passed, report_dict)``."""
    text = spec if isinstance(spec, str) else _json.dumps(spec)
    passed, report = _fcc.check(text, master, connection, curvature,
                                dual, metric, hierarchy)
    return passed, _json.loads(report)


def verify_paper(cases=()):
    """Reproduce the published reference tables; returns ``(passed, report_dict)``."""
    passed, report = _fcc.verify_paper(list(cases))
    return passed, _json.loads(report)
