"""Python access to the svred commands.

Each function returns a Report holding the exit code and the parsed JSON
report, matching the command line tool.
"""

import json
from typing import NamedTuple

from . import _core

__all__ = ["Report", "family", "check", "reduce", "verify", "invariants", "search"]


class Report(NamedTuple):
    exit_code: int
    data: dict

    @property
    def passed(self) -> bool:
        return self.exit_code == 0

    @property
    def text(self) -> str:
        return json.dumps(self.data, indent=2)


def _input(doc):
    return doc if isinstance(doc, str) else json.dumps(doc.data if isinstance(doc, Report) else doc)


def _wrap(result):
    code, text = result
    return Report(code, json.loads(text))


def family(name, params=""):
    return _wrap(_core.family(name, params))


def check(doc, mode, m_max=None, ideal="", partition=""):
    return _wrap(_core.check(_input(doc), mode, m_max, ideal, partition))


def reduce(doc, mode=None, m_max=None, ideal="", partition=""):
    return _wrap(_core.reduce(_input(doc), mode, m_max, ideal, partition))


def verify(doc, mode=None, ideal="", partition=""):
    return _wrap(_core.verify(_input(doc), mode, ideal, partition))


def invariants(doc, betti_cap=14, spread_n_max=8, certify=False, mode=None, ideal="", partition=""):
    return _wrap(_core.invariants(_input(doc), betti_cap, spread_n_max, certify, mode, ideal, partition))


def search(doc, node_limit=2_000_000, time_limit_seconds=60.0, r_target=None, workers=1, certify=False,
           ideal="", partition=""):
    return _wrap(_core.search(_input(doc), node_limit, time_limit_seconds, r_target, workers, certify, ideal,
                              partition))
