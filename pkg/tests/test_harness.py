from itertools import product

import pytest

from ramsey_rings.configs import fs
from ramsey_rings.errors import CapExceeded, OutOfDomain, ParseError, RepeatedTerms, SearchExhausted
from ramsey_rings.gaussian import GaussianInt
from ramsey_rings.harness import (
    Coloring,
    family_coloring,
    gaussian_box_domain,
    hindman_witness,
    interval,
    max_enum,
    pspp_check,
    schur_search,
)


def has_mono_triple(col):
    n = len(col)
    return any(
        col[x - 1] == col[y - 1] == col[x + y - 1]
        for x in range(1, n + 1)
        for y in range(x, n + 1 - x)
    )


def brute_force_forced(n, colors):
    return all(has_mono_triple(c) for c in product(range(colors), repeat=n))


def test_schur_examples():
    four = schur_search(4, 2)
    assert not four.forced and not has_mono_triple(four.coloring)
    assert four.coloring == (0, 1, 1, 0)
    assert schur_search(5, 2).forced and schur_search(5, 2).coloring is None
    one = schur_search(1, 2)
    assert not one.forced and one.coloring == (0,)


@pytest.mark.parametrize("colors, top", [(2, 8), (3, 9)])
def test_schur_matches_exhaustive_oracle(colors, top):
    for n in range(1, top + 1):
        rep = schur_search(n, colors)
        assert rep.forced == brute_force_forced(n, colors)
        if not rep.forced:
            assert not has_mono_triple(rep.coloring) and rep.coloring[0] == 0


def test_schur_three_colors_threshold():
    assert not schur_search(13, 3).forced
    assert schur_search(14, 3).forced


def test_schur_report_dict():
    assert schur_search(4, 2).to_dict() == {
        "n": 4, "colors": 2, "result": "avoidable", "coloring": [0, 1, 1, 0], "nodes": 9,
    }


def test_schur_limits(monkeypatch):
    with pytest.raises(ValueError):
        schur_search(4, 5)
    with pytest.raises(ValueError):
        schur_search(0, 2)
    monkeypatch.setenv("RAMSEY_RINGS_MAX_ENUM", "16")
    assert max_enum() == 16
    assert schur_search(4, 2).forced is False
    with pytest.raises(CapExceeded):
        schur_search(5, 2)
    monkeypatch.setenv("RAMSEY_RINGS_MAX_ENUM", "lots")
    with pytest.raises(ValueError):
        max_enum()


def _reverify(w, coloring):
    assert set(w.fs) == fs(w.terms)
    assert len(w.fs) == 2 ** len(w.terms) - 1
    assert all(coloring[v] == w.color for v in w.fs)


def test_hindman_examples():
    const = family_coloring("constant", interval(1, 7))
    w = hindman_witness(const, 3)
    assert list(w.terms) == [1, 2, 4] and list(w.fs) == list(range(1, 8))
    _reverify(w, const)
    parity = family_coloring("parity", interval(1, 100))
    w = hindman_witness(parity, 3)
    assert list(w.terms) == [2, 4, 8]
    _reverify(w, parity)
    w = hindman_witness(parity, 1)
    assert list(w.terms) == [1] and w.fs == (1,)


def test_hindman_not_found_reports_nodes():
    with pytest.raises(SearchExhausted) as info:
        hindman_witness(family_coloring("constant", interval(1, 6)), 3)
    assert info.value.stats["nodes"] > 0
    with pytest.raises(SearchExhausted):
        hindman_witness(family_coloring("constant", interval(1, 100)), 4, max_nodes=3)


def test_hindman_on_gaussian_box():
    domain = gaussian_box_domain(3)
    coloring = family_coloring("residue:1+i", domain)
    w = hindman_witness(coloring, 3)
    _reverify(w, coloring)


def test_random_colorings_reverify():
    for seed in range(10):
        coloring = family_coloring(f"random:{seed}:2", interval(1, 40))
        try:
            w = hindman_witness(coloring, 3)
        except SearchExhausted:
            continue
        _reverify(w, coloring)


def test_pspp_examples():
    const = family_coloring("constant", interval(1, 20))
    rep = pspp_check([2, 4], const)
    assert rep.monochromatic and rep.ps == (6,) and rep.pp == (8,)
    parity = family_coloring("parity", interval(1, 20))
    assert pspp_check([2, 4], parity).monochromatic
    rep = pspp_check([1, 2], parity)
    assert not rep.monochromatic and rep.colors == {1: 1, 0: 1}


def test_pspp_errors():
    parity = family_coloring("parity", interval(1, 20))
    with pytest.raises(RepeatedTerms):
        pspp_check([3, 3], parity)
    with pytest.raises(OutOfDomain):
        pspp_check([5, 6], parity)


def test_coloring_families_and_json():
    c = family_coloring("residue:3", interval(1, 6))
    assert [c[n] for n in range(1, 7)] == [1, 2, 0, 1, 2, 0]
    g = family_coloring("residue:2+i", gaussian_box_domain(2))
    assert g.num_colors() == 5
    assert family_coloring("random:7:3", interval(1, 30)) == family_coloring("random:7:3", interval(1, 30))
    back = Coloring.from_json(c.to_json())
    assert back == c
    assert Coloring.from_json('{"1+i": 1, "2": 0}')[GaussianInt(1, 1)] == 1
    with pytest.raises(ParseError):
        family_coloring("stripes", interval(1, 3))
    with pytest.raises(OutOfDomain):
        c[99]
