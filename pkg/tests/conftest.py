import pytest

from mckay_labels.algebra.ff import mk_field
from mckay_labels.core.config import settings
from mckay_labels.lie.rootdata import build_root_datum, build_twist


@pytest.fixture
def f9():
    return mk_field(3, 2)


@pytest.fixture
def c2():
    return build_root_datum("C", 2)


@pytest.fixture
def twist():
    """Untwisted (w = 1) data for a type given as "C2", "E6", ..."""
    def make(label, w=1):
        return build_twist(build_root_datum(label), w)
    return make


@pytest.fixture
def bounds(monkeypatch):
    """Override Settings fields for one test."""
    def set_bound(**values):
        for name, value in values.items():
            monkeypatch.setattr(settings, name, value)
    return set_bound
