import pytest

import charcorr


def test_group_construction():
    g = charcorr.Group("D8", 4, [[1, 2, 3, 0], [2, 1, 0, 3]])
    assert g.order == 8
    assert g.degree == 4
    assert charcorr.Group.builtin("remark648").order == 648


def test_bad_groups():
    with pytest.raises(ValueError):
        charcorr.Group("bad", 3, [[1, 0, 1]])
    with pytest.raises(ValueError):
        charcorr.Group.builtin("remark648", cap=100)
    with pytest.raises(ValueError):
        charcorr.Group.from_file("no/such/file")


def test_character_table():
    t = charcorr.character_table(charcorr.Group.builtin("s4"))
    assert [c["degree"] for c in t["characters"]] == [1, 1, 2, 3, 3]
    assert sum(c["degree"] ** 2 for c in t["characters"]) == 24
    assert sum(c["size"] for c in t["classes"]) == 24
    assert "X.0" in charcorr.table_text(charcorr.Group.builtin("s4"))


def test_hypotheses_and_counts():
    s4 = charcorr.Group.builtin("s4")
    h = charcorr.hypotheses(s4, 2)
    assert h["self_normalizing"] and h["solvable"] and h["parity"]
    assert charcorr.mckay_count(s4, 2) == (4, 4)
    sl = charcorr.Group.builtin("sl23")
    assert charcorr.hypotheses(sl, 3)["normalizer_order"] == 6
    assert charcorr.mckay_count(sl, 3) == (6, 6)


def test_star_and_descent_agree():
    g = charcorr.Group.builtin("f21")
    for chi in (0, 1, 2):
        xi, orders = charcorr.descent(g, 3, chi)
        assert xi == charcorr.star(g, 3, chi)
        assert orders == [21]


def test_verify():
    r = charcorr.verify(charcorr.Group.builtin("s4"), 2, threads=2)
    assert r["verdict"]
    assert len(r["records"]) == 4
    with pytest.raises(charcorr.HypothesisError):
        charcorr.verify(charcorr.Group.builtin("sl23"), 3)


def test_remark648():
    r = charcorr.remark648()
    assert r["verdict"]
    assert r["orders"]["N"] == 72
    assert r["e"] == 3
    psi = r["candidates"][r["chosen"]]
    assert psi["values"][0] == "3"


def test_corpus_listing():
    entries = charcorr.corpus()
    assert sum(1 for _, _, positive in entries if positive) >= 6
    assert set(f for f, _, _ in entries) <= set(charcorr.builtin_names())
