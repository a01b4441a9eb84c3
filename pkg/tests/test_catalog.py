from __future__ import annotations

from functools import lru_cache

import pytest

from gcx import catalog
from gcx.catalog import CatalogEntry, Expectation
from gcx.errors import BadParams, UnknownEntry
from gcx.structures import classify, eigenbundles


@lru_cache(maxsize=None)
def full_run():
    return tuple(catalog.catalog_run())


def test_entire_catalog_passes():
    runs = full_run()
    failures = [(r.name, r.params, r.first_failure()) for r in runs if not r.ok]
    assert not failures
    assert len(runs) == sum(len(e.sample_params()) for e in catalog.ENTRIES.values())
    assert [r.name for r in runs] == sorted(r.name for r in runs)


def test_each_entry_compares_something():
    for r in full_run():
        assert any(not o.informational for o in r.outcomes), r.name


def test_family_at_zero_is_the_cosymplectic_base():
    j0 = catalog.build("h3_family", {"r": 0, "c": 1, "s": 0})
    base = catalog.build("h3_cosymplectic")
    e0, eb = eigenbundles(j0), eigenbundles(base)
    for name, S in eb.spans().items():
        assert e0.spans()[name].equals(S), name
    assert classify(j0).level is classify(base).level


@pytest.mark.parametrize("name,params", [
    ("h3_family", {"r": 1}),
    ("h3_family", {"r": -1}),
    ("h3_family", {"c": "1/2", "s": "1/2"}),
    ("h3_family", {"q": 1}),
    ("h3_cosymplectic", {"a": "i"}),
    ("h3_cosymplectic", {"a": "1/0"}),
    ("darboux", {"n": 4}),
    ("darboux", {"n": "two"}),
    ("su2_contact", {"a": 1}),
])
def test_bad_params(name, params):
    with pytest.raises(BadParams):
        catalog.catalog_run(name, params)


def test_params_need_a_single_entry():
    with pytest.raises(BadParams):
        catalog.catalog_run(None, {"r": 2})


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        catalog.catalog_run("no_such_entry")
    with pytest.raises(UnknownEntry):
        catalog.algebra("no_such_algebra")


def test_entries_need_an_expected_record():
    with pytest.raises(ValueError):
        CatalogEntry("orphan", "no expectations", lambda p: None, None)
    with pytest.raises(ValueError):
        catalog.register(catalog.ENTRIES["su2_contact"])


def test_first_mismatch_reports_both_values():
    probe = CatalogEntry(
        "probe", "deliberately wrong", lambda p: catalog.build("su2_contact"),
        lambda p, j: [Expectation("level", "StrongGeneralizedContact", lambda: classify(j).level.value),
                      Expectation("name", "su2_contact", lambda: j.name)],
    )
    run = catalog.run_entry(probe, {})
    assert not run.ok
    bad = run.first_failure()
    assert (bad.label, bad.expected, bad.actual) == ("level", "StrongGeneralizedContact", "GeneralizedContact")


def test_parameterised_run_uses_given_values():
    runs = catalog.catalog_run("h3_family", {"r": 2, "c": "5/13", "s": "12/13"})
    assert len(runs) == 1 and runs[0].ok
    assert catalog.format_params(runs[0].params) == "c=5/13, r=2, s=12/13"
