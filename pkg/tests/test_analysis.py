import math

import pytest

from chemindex.analysis import (
    competition_ranks,
    correlate,
    cospectral_pairs,
    detect_degeneracy,
    format_report,
    index_report,
    rank_by,
    regress,
    regress_ron,
    reproduce_tables,
    tie_groups,
)
from chemindex.graphs import Graph, GraphError, cycle_graph, path_graph, star_graph
from chemindex.nomenclature import graph_from_name


def test_competition_ranks_basic():
    assert competition_ranks([10.0, 20.0, 20.0, 30.0]) == [1, 2, 2, 4]
    assert competition_ranks([5.0, 5.0, 5.0]) == [1, 1, 1]
    assert competition_ranks([30.0, 10.0, 20.0]) == [3, 1, 2]
    assert competition_ranks([]) == []


def test_tie_groups_and_tolerance():
    values = [1.0, 1.0 + 5e-10, 2.0, 2.0, 7.0]
    assert tie_groups(values) == [(0, 1), (2, 3)]
    assert detect_degeneracy([1.0, 1.0 + 2e-9]) == []
    # the tolerance is relative: a 1e-4 gap at scale 1e6 is a tie
    assert detect_degeneracy([1e6, 1e6 + 1e-4]) == [(0, 1)]
    assert detect_degeneracy([1.0, 2.0, 3.0]) == []


def test_index_report_rows(octane_trees):
    reports = index_report(octane_trees)
    assert len(reports) == 18
    # default names are canonical keys in hex: distinct and stable
    assert len({r.name for r in reports}) == 18
    named = index_report([path_graph(8)], ["Octane"])[0]
    assert named.name == "Octane"
    assert named.n == 8 and named.m == 7 and named.mu == 0 and named.tau == 0
    assert math.isclose(named.J, 2.53006, abs_tol=1e-5)
    assert math.isclose(named.EE, 2.09426, abs_tol=1e-5)
    with pytest.raises(ValueError):
        index_report([path_graph(3)], ["a", "b"])
    with pytest.raises(GraphError, match="row 0"):
        index_report([Graph(4, [(0, 1), (2, 3)])], ["broken"])
    with pytest.raises(ValueError):
        reports[0].value("Q")


def test_rank_by(octane_trees):
    reports = index_report(octane_trees)
    ranking = rank_by(reports, "EE")
    assert len(ranking.positions) == 18
    assert min(ranking.positions) == 1
    assert ranking.groups == ()  # octane spectral means are all distinct
    values = [r.EE for r in reports]
    best = min(range(18), key=lambda i: values[i])
    assert ranking.positions[best] == 1


def test_cospectral_pairs_classic_example():
    # the standard 5-vertex pair: the 4-star and the square plus an
    # isolated vertex share the spectrum {2, 0, 0, 0, -2}
    star = star_graph(4)
    square_plus_point = Graph(5, [(0, 1), (1, 2), (2, 3), (0, 3)])
    graphs = [star, square_plus_point, path_graph(5), cycle_graph(5)]
    assert cospectral_pairs(graphs) == [(0, 1)]
    assert cospectral_pairs(graphs, method="float") == [(0, 1)]
    with pytest.raises(ValueError):
        cospectral_pairs(graphs, method="approximately")


def test_known_cospectral_nonanes():
    pairs = [
        ("4-Ethyl-2-methylhexane", "2,3-Dimethylheptane"),
        ("2,2-Dimethylheptane", "2,3,5-Trimethylhexane"),
        ("2,3,4-Trimethylhexane", "3,3-Dimethylheptane"),
        ("4,4-Dimethylheptane", "3-Ethyl-2,4-dimethylpentane"),
        ("3-Ethyl-2,2-dimethylpentane", "2,3,3-Trimethylhexane"),
    ]
    for a, b in pairs:
        got = cospectral_pairs([graph_from_name(a), graph_from_name(b)])
        assert got == [(0, 1)], (a, b)


def test_correlate():
    xs = [1.0, 2.0, 3.0, 4.0]
    assert math.isclose(correlate(xs, [2 * x + 1 for x in xs]), 1.0, rel_tol=1e-12)
    assert math.isclose(correlate(xs, [9 - 3 * x for x in xs]), 1.0, rel_tol=1e-12)
    with pytest.raises(ValueError):
        correlate([1.0, 2.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        correlate(xs, [5.0, 5.0, 5.0, 5.0])
    with pytest.raises(ValueError):
        correlate(xs, xs[:3])


def test_regress_recovers_exact_line():
    xs = [0.0, 1.0, 2.0, 5.0]
    fit = regress(xs, [3 * x - 2 for x in xs])
    assert math.isclose(fit.slope, 3.0, rel_tol=1e-12)
    assert math.isclose(fit.intercept, -2.0, abs_tol=1e-12)
    assert math.isclose(fit.r_squared, 1.0, rel_tol=1e-12)
    assert fit.count == 4
    with pytest.raises(ValueError):
        regress([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])


def test_regress_ron_baselines():
    fits = regress_ron()
    expect = {
        "J": (100.9301, -257.5058, 0.8691),
        "EE": (1026.6494, -2147.0843, 0.8645),
        "RVa": (479.1866, -1009.4415, 0.8576),
        "RVb": (308.9741, -675.7792, 0.8509),
    }
    for index, (slope, intercept, r2) in expect.items():
        fit = fits[index]
        assert fit.count == 17
        assert math.isclose(fit.slope, slope, abs_tol=5e-4), index
        assert math.isclose(fit.intercept, intercept, abs_tol=5e-4), index
        assert math.isclose(fit.r_squared, r2, abs_tol=5e-5), index
    # dropping the negative extrapolated rating leaves 16 rows
    assert regress_ron(positive_only=True)["J"].count == 16


def test_reproduce_tables_full():
    rep = reproduce_tables()
    assert rep.ok
    assert [t.table for t in rep.tables] == [1, 2, 3, 4, 5]
    by = {t.table: t for t in rep.tables}
    assert {t: by[t].rows for t in by} == {1: 18, 2: 35, 3: 75, 4: 17, 5: 68}
    assert {t: by[t].cells_checked for t in by} == {
        1: 144,
        2: 280,
        3: 600,
        4: 187,
        5: 748,
    }
    assert {t: len(by[t].known_issues) for t in by} == {1: 0, 2: 0, 3: 0, 4: 5, 5: 1}
    assert all(not t.unexpected_issues for t in rep.tables)
    assert any("absent from the table" in note for note in by[5].notes)
    known_columns = sorted(i.column for i in by[4].known_issues)
    assert known_columns == ["J_order", "J_order", "J_order", "degrees", "degrees"]


def test_reproduce_tables_subset_and_errors():
    rep = reproduce_tables((2,))
    assert [t.table for t in rep.tables] == [2]
    assert rep.ok
    with pytest.raises(ValueError):
        reproduce_tables((9,))


def test_format_report():
    rep = reproduce_tables((4,))
    text = format_report(rep)
    assert "table 4: 17 rows" in text
    assert "known erratum" in text
    assert "MISMATCH" not in text.replace("known erratum", "")
    assert text.strip().endswith("overall: OK")
