import csv
import io
import json

import pytest

from mckay_labels.core.errors import ExcludedConfiguration, UnsupportedConfiguration
from mckay_labels.core.models import CSV_FIELDS, Level, RunConfig
from mckay_labels.suites import sweep


def _cfg(**kwargs):
    base = dict(type_label="C", rank=2, p=3, e_max=0)
    base.update(kwargs)
    return RunConfig(**base)


def test_kappa_choices():
    assert sweep.kappa_choices(_cfg()) == [("square", 1), ("nonsquare", 2)]
    assert sweep.kappa_choices(_cfg(f=2)) == [("square", 1)]
    assert sweep.kappa_choices(_cfg(kappa="2")) == [("nonsquare", 2)]
    assert sweep.kappa_choices(_cfg(kappa="nonsquare", p=5)) == [("nonsquare", 2)]
    assert sweep.kappa_choices(_cfg(level=Level.LABELS)) == [("any", 1)]


def test_validate():
    with pytest.raises(ExcludedConfiguration):
        sweep.validate(_cfg(p=2))
    with pytest.raises(UnsupportedConfiguration):
        sweep.validate(_cfg(type_label="A", w=2))
    with pytest.raises(UnsupportedConfiguration):
        sweep.validate(_cfg(level=Level.CLASSES))
    rd, twist = sweep.validate(_cfg(type_label="A", w=2, level=Level.LABELS))
    assert twist.name == "^2A_2"


def test_evaluate_borel_level():
    records = sweep.evaluate(_cfg())
    assert [(r.kappa_class, r.total, r.fixed, r.method_b, r.closed_form) for r in records] == [
        ("square", 18, 18, 18, 18),
        ("nonsquare", 18, 6, 6, 6),
    ]


def test_evaluate_btilde_level():
    records = sweep.evaluate(_cfg(level=Level.BTILDE, e_max=1))
    assert len(records) == 4
    for r in records:
        assert r.total == r.label_count == 18
        assert r.fixed == r.method_b


def test_evaluate_per_central_character():
    record = sweep.evaluate(_cfg(per_central_character=True))[0]
    assert set(record.central) == {"0", "1"}
    assert sum(fixed for _, fixed in record.central.values()) == record.fixed


def test_evaluate_labels_and_classes():
    labels = sweep.evaluate(_cfg(type_label="A", rank=1, p=5, e_min=1, e_max=1, level=Level.LABELS))
    assert [(r.total, r.fixed, r.method_b) for r in labels] == [(20, 20, 20)]
    classes = sweep.evaluate(_cfg(type_label="A", rank=1, level=Level.CLASSES, per_central_character=True))
    (r,) = classes
    assert (r.total, r.class_count, r.fixed, r.method_b) == (6, 6, 6, 6)
    assert len(r.central) == 2


def test_run_grid_skips_excluded_points():
    configs = sweep.build_grid("C", [2], [(2, 1), (3, 1)], [Level.B], e_max=0)
    assert len(configs) == 2
    records = sweep.run_grid(configs, jobs=1)
    assert {r.q for r in records} == {3}
    assert records == sorted(records, key=lambda r: r.sort_key())


def test_run_grid_is_independent_of_job_count():
    configs = sweep.build_grid("A", [1, 2], [(3, 1), (5, 1)], [Level.B, Level.LABELS], e_max=1)
    serial = sweep.run_grid(configs, jobs=1)
    parallel = sweep.run_grid(configs, jobs=2)
    assert [r.model_dump() for r in serial] == [r.model_dump() for r in parallel]


def test_csv_output():
    assert sweep.to_csv([]) == ",".join(CSV_FIELDS) + "\n"
    text = sweep.to_csv(sweep.evaluate(_cfg()))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [row["fixed"] for row in rows] == ["18", "6"]
    assert rows[0]["type"] == "C" and rows[0]["level"] == "B"
    assert rows[0]["class_count"] == ""


def test_json_and_table_output():
    records = sweep.evaluate(_cfg())
    report = json.loads(sweep.to_json(records, {"q": 3}))
    assert report["schema"] == 1
    assert report["config"] == {"q": 3}
    assert len(report["records"]) == 2
    table = sweep.to_table(records)
    assert "C_2" in table and "nonsquare(2)" in table
