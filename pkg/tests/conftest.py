import itertools

import pytest

from cliffsym.algebra_core import Signature
from cliffsym.discrete_symmetries import PhaseAssignment, PhaseValue
from cliffsym.spinor_rep import canonical_idempotents

SYM_PLUS = PhaseValue(symbolic=True, square=1)
SYM_MINUS = PhaseValue(symbolic=True, square=-1)

WORKED_SIGNATURES = [(1, 3), (4, 0), (0, 4), (3, 1), (2, 2)]


def signatures(max_n, min_n=1):
    return [Signature(p, n - p) for n in range(min_n, max_n + 1) for p in range(n, -1, -1)]


def idem(p, q, name):
    sig = Signature(p, q)
    for spec in canonical_idempotents(sig):
        if spec.name == name:
            return spec, sig
    raise KeyError(name)


def phases(**kw):
    return PhaseAssignment(**kw)


@pytest.fixture(scope="session")
def worked_specs():
    out = []
    for p, q in WORKED_SIGNATURES:
        sig = Signature(p, q)
        out.extend((sig, spec) for spec in canonical_idempotents(sig))
    return out


def all_masks(n):
    return range(1 << n)


def pairs(n):
    return itertools.product(all_masks(n), repeat=2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
