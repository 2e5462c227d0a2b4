import pytest

from entrench.core import api
from entrench.core._private.harness.demos import FIGURE1_PATH


def test_query_accepts_text_and_classes(penguin_frame):
    assert not api.query(penguin_frame, "p", "~f")
    assert api.query(penguin_frame, "p", "~f", credulous=True)
    p = api.parse_class("p", penguin_frame.universe)
    assert api.query(penguin_frame, p, "p | f")


def test_query_rejects_foreign_classes(penguin_frame, universe):
    with pytest.raises(api.UniverseMismatchError):
        api.query(penguin_frame, universe.atom("p"), "p")


def test_load_relation():
    rel = api.load_relation(FIGURE1_PATH)
    assert isinstance(rel, api.EntrenchmentRelation)
    assert str(rel.profile) == "base+transitivity"


def test_exports_resolve():
    for name in api.__all__:
        assert hasattr(api, name), name


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main(["-v", __file__]))
