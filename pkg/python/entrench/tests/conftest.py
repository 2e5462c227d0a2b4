import pytest
from click.testing import CliRunner

from entrench.core._private.harness.demos import (
    FIGURE1_PATH, MULTIPLE_EXTENSIONS_PATH)
from entrench.core._private.harness.theory_file import (
    load_theory, theory_relation)
from entrench.core._private.logic.semantics import (
    AtomUniverse, class_algebra)


@pytest.fixture()
def universe():
    return AtomUniverse.of("p", "q")


@pytest.fixture()
def algebra(universe):
    return class_algebra(universe)


@pytest.fixture()
def penguins():
    return load_theory(FIGURE1_PATH)


@pytest.fixture()
def penguin_frame(penguins):
    return theory_relation(penguins)


@pytest.fixture()
def competing_frame():
    return theory_relation(load_theory(MULTIPLE_EXTENSIONS_PATH))


@pytest.fixture()
def runner():
    return CliRunner()
