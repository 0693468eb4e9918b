import pytest

from qsymops.verify import SUITES, pairs, run_suite, triples

SPEC_SUITES = [
    "beldend", "tvidend", "dendriform", "belg-assoc", "bel-F", "dual-immaculate-3way",
    "hmDless", "analogue0", "analogue-minus", "omega", "wqsym-prod", "wqsym-five-ops",
    "fqsym-closure", "as2", "epilogue-chains", "antipode-axiom", "oracle-all",
]


def test_registry_complete():
    assert set(SPEC_SUITES) <= set(SUITES)
    assert "zabrocki" in SUITES


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_at_degree_3(name):
    rep = run_suite(name, 3, with_oracle=True, seed=0)
    assert rep.cases > 0
    assert rep.failures == []


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 2)


def test_enumerators():
    assert sum(1 for _ in pairs(2)) == 1 + 2 + 5
    assert all(sum(map(sum, t)) <= 3 for t in triples(3))
    assert len(set(triples(3))) == sum(1 for _ in triples(3))


def test_seed_reproducible():
    a = run_suite("dendriform", 2, with_oracle=True, seed=7)
    b = run_suite("dendriform", 2, with_oracle=True, seed=7)
    assert a.as_dict() == b.as_dict()
