from __future__ import annotations

import itertools

import pytest

from homflygauss.corpus import TREFOIL_CODE, corpus, knots
from homflygauss.diagram import parse_gauss_code
from homflygauss.formulas import FormulaCombo

# left trefoil as written in the external text format
SPEC_TREFOIL = "U1- O2- U3- O1- U2- O3-\n"
LEFT_TREFOIL_PD = [[4, 1, 5, 2], [6, 3, 1, 4], [2, 5, 3, 6]]

# three-arrow diagrams differing only in the direction of the arrow that
# joins the outer strands; they pair equally with classical diagrams
TWIN_X = "U1+ O2+ O1+ U3+ U2+ O3+\n"
TWIN_Y = "U1+ U2+ O1+ U3+ O2+ O3+\n"
A12_CLASSES = (
    "U1+ U2+ O1+ O3+ O2+ U3+\n",
    "U1+ U2+ O3+ O1+ O2+ U3+\n",
    "U1+ U2+ O3+ O2+ O1+ U3+\n",
    "U1+ O2+ O3+ O1+ U2+ U3+\n",
    "U1+ O2+ O3+ O1+ U3+ U2+\n",
)


def add_unsigned(combo: FormulaCombo, text: str, coeff: int) -> None:
    """Add ``coeff`` times the unsigned class of ``text`` (signings weighted by their sign product)."""
    d = parse_gauss_code(text)
    for signs in itertools.product((1, -1), repeat=d.n):
        s = d.with_signs(signs)
        combo.add(s, coeff * s.sign_product())


def nine_term_a12(plus: str = TWIN_Y, minus: str = TWIN_X) -> FormulaCombo:
    """-2 on six three-arrow classes and the (+,+) two-arrow diagram; +2 on one class and the (-,-) one."""
    combo = FormulaCombo(1, 2, 1)
    for text in A12_CLASSES + (minus,):
        add_unsigned(combo, text, -2)
    add_unsigned(combo, plus, 2)
    combo.add(parse_gauss_code("U1+ O2+ O1+ U2+\n"), -2)
    combo.add(parse_gauss_code("U1- O2- O1- U2-\n"), 2)
    return combo


@pytest.fixture(scope="session")
def trefoil():
    return parse_gauss_code(TREFOIL_CODE)


@pytest.fixture(scope="session")
def spec_trefoil():
    return parse_gauss_code(SPEC_TREFOIL)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()


@pytest.fixture(scope="session")
def knot_corpus(full_corpus):
    return knots(full_corpus)


@pytest.fixture(scope="session")
def small_corpus(full_corpus):
    return [(n, g) for n, g in full_corpus if g.n <= 6]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
