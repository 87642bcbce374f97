import pytest

import parryac
from parryac import Family, Morphism


@pytest.fixture
def nonsimple():
    return Morphism(3, 1, Family.NONSIMPLE)


@pytest.fixture
def simple():
    return Morphism(3, 2, "simple")


def test_worked_examples(nonsimple, simple):
    assert parryac.ac(nonsimple, 7) == 3
    assert parryac.ac(simple, 7) == 2
    assert parryac.normal_u_rep(nonsimple, 7, places=4) == [0, 0, 1, 3]
    assert parryac.normal_u_rep(nonsimple, 157, places=4) == [3, 0, 3, 1]
    assert parryac.normal_u_rep(simple, 2, places=2) == [0, 2]


def test_result_metadata(nonsimple):
    r = parryac.ac_result(nonsimple, 7)
    assert r == {"n": 7, "ac": 3, "method": "closed_form"}
    assert parryac.ac_result(Morphism(2, 1, "simple"), 10**18)["method"] == "sturmian"


def test_big_integers_roundtrip(nonsimple, simple):
    n = 73167176531330624919225119674426574742355349194934
    for m in (nonsimple, simple):
        assert parryac.ac(m, n) == parryac.ac_via_prefix_counts(m, n)
        assert 1 <= parryac.ac(m, n) <= parryac.max_ac(m)
    assert parryac.u_value(nonsimple, 100) > 2**64


def test_agrees_with_oracle(nonsimple, simple):
    for m in (nonsimple, simple):
        for n in range(1, 60):
            assert parryac.oracle_ac(m, n)["ac"] == parryac.ac(m, n)


def test_words(nonsimple, simple):
    assert parryac.fixed_point_prefix(simple, 14) == "AAABAAABAAABAA"
    assert parryac.word_prefix(nonsimple, "w", 9) == "BABAAABAB"
    prefix = parryac.fixed_point_prefix(nonsimple, 157)
    assert prefix.count("B") == parryac.prefix_b_count(nonsimple, 157) == 45


def test_decomposition_and_parikh_set(nonsimple):
    blocks = parryac.prefix_decomposition(nonsimple, 7)
    assert sum(parryac.u_value(nonsimple, j) * d for j, d in blocks) == 7
    assert parryac.parikh_set(nonsimple, 7, 200) == [(4, 3), (5, 2), (6, 1)]


def test_maximum(nonsimple, simple):
    assert parryac.max_ac(nonsimple) == 3
    assert parryac.balance_bound(nonsimple) == 2
    assert parryac.max_ac(simple) == 3


def test_errors():
    with pytest.raises(parryac.Error):
        Morphism(2, 3, "simple")
    with pytest.raises(parryac.Error):
        parryac.ac(Morphism(3, 1, "nonsimple"), 0)
    with pytest.raises(parryac.UnsupportedConstruction):
        parryac.word_prefix(Morphism(3, 1, "simple"), "w", 5)
    with pytest.raises(ValueError):
        parryac.word_prefix(Morphism(3, 1, "nonsimple"), "x", 5)
    assert repr(Morphism(3, 1, "nonsimple")) == "Morphism(p=3, q=1, family='nonsimple')"
