import pytest

import gmmn

NESTED = [((0, 0), (10, 10)), ((2, 2), (6, 6))]
CROSSED = [((0, 0), (10, 10)), ((2, 6), (6, 2))]
CYCLE = [((0, 0), (4, 2)), ((3, 0), (5, 6)), ((1, 4), (5, 6)), ((0, 1), (2, 6))]


def test_star_fixtures():
    assert gmmn.solve(NESTED).total_length == 20
    assert gmmn.solve(CROSSED, "star").total_length == 24


def test_solvers_agree_with_oracle():
    for seed in range(10):
        pairs = gmmn.generate("tree", 4, 8, seed)
        expected = gmmn.solve(pairs, "oracle").total_length
        for algo in ("auto", "tree", "tree-fast", "pseudotree", "twdp"):
            assert gmmn.solve(pairs, algo).total_length == expected


def test_cycle_dispatch():
    assert gmmn.classify(CYCLE) == "cycle"
    assert gmmn.auto_choice(CYCLE) == "pseudotree"
    sol = gmmn.solve(CYCLE)
    assert sol.solver == "pseudotree"
    assert len(sol.paths) == 4
    assert sol.paths[0][0] in ((0, 0), (4, 2))


def test_errors():
    with pytest.raises(gmmn.WrongClass):
        gmmn.solve(CYCLE, "tree")
    with pytest.raises(gmmn.CapExceeded):
        gmmn.solve(gmmn.generate("general", 12, 40, 1), "oracle", oracle_cap=10)
    with pytest.raises(gmmn.ParseError):
        gmmn.from_jsonl("not json")
    assert issubclass(gmmn.WrongClass, gmmn.GmmnError)


def test_round_trip_and_svg(tmp_path):
    pairs = gmmn.generate("pseudotree", 6, 40, 3)
    text = gmmn.to_jsonl(pairs, "p6")
    back, scale = gmmn.from_jsonl(text)
    assert scale == 0
    assert [tuple(map(tuple, p)) for p in back] == [tuple(map(tuple, p)) for p in pairs]
    path = tmp_path / "p6.jsonl"
    path.write_text(text)
    assert gmmn.solve_file(str(path)).total_length == gmmn.solve(pairs).total_length
    svg = gmmn.render_svg(pairs)
    assert svg.startswith("<?xml") or svg.startswith("<svg")
    assert svg == gmmn.render_svg(pairs)
    assert "gmmn-solution/1" in gmmn.solve(pairs).to_jsonl()
