import pytest

import orbitgames as og


def test_core_and_closure():
    s = og.FiniteSpace.sierpinski()
    assert s.core_open(1) == frozenset({1})
    assert s.core_open(0) == frozenset({0, 1})
    assert s.closure({1}) == frozenset({0, 1})
    report = s.category_report([1])
    assert report["is_dense"] and report["is_comeager"]


def test_orbits_and_validation():
    swap = og.fixture("z2-swap")
    assert swap.orbit_partition() == [frozenset({0, 1})]
    bad = og.GroupAction(og.TopGroup.cyclic(2), og.FiniteSpace.sierpinski(), [[0, 1], [1, 0]])
    kinds = {v["kind"] for v in bad.validate()["violations"]}
    assert "homeomorphism" in kinds


def test_becker_and_hjorth():
    s = og.fixture("sierpinski-trivial")
    v = og.becker_embeddable(s, 0, 1)
    assert v["ii_wins"] and v["witness"] == 0
    assert not og.becker_embeddable(s, 1, 0)["ii_wins"]
    assert not og.hjorth_isomorphic(s, 0, 1)["ii_wins"]
    assert og.hjorth_isomorphic(og.fixture("indiscrete2-trivial"), 0, 1)["ii_wins"]
    assert og.becker_relation(s) == [[True, True], [False, True]]


def test_graphs_and_dot():
    g = og.becker_digraph(og.fixture("sierpinski-trivial"))
    assert g["edges"] == [[0, 0], [0, 1], [1, 1]]
    text = og.dot(og.fixture("sierpinski-trivial"), "becker")
    assert '"0" -> "1" [class="becker"];' in text
    assert og.hjorth_graph(og.fixture("discrete2-trivial"))["edges"] == [[0, 0], [1, 1]]


def test_obstruction():
    r = og.cli_obstruction_check(og.fixture("sierpinski-trivial"))
    assert r["verdict"] is False
    assert r["failing_set"] == [1]


def test_solver_on_handmade_arena():
    a = og.Arena()
    p0 = a.add_position(og.Player.II, True)
    p1 = a.add_position(og.Player.I, True)
    p2 = a.add_position(og.Player.II, False)
    a.add_move(p0, p1)
    a.add_move(p1, p2)
    result = og.solve_closed_game(a)
    assert result["winner"][0] == "I"
    assert result["rank"][0] == 2
    assert og.bounded_play_check(a, 3) == "I"


def test_groupoids():
    rot = og.fixture("z3-rotation")
    g = og.action_groupoid(rot)
    assert g.n_arrows == 9
    assert og.validate_groupoid(g)["valid"]
    assert g.comp(og.action_arrow(rot, 1, 1), og.action_arrow(rot, 1, 0)) == og.action_arrow(rot, 2, 0)
    assert og.becker_digraph(g) == og.becker_digraph(rot)


def test_models():
    edge = og.RelStructure.digraph(2, [(0, 1), (1, 0)])
    tri = og.RelStructure.digraph(3, [(i, j) for i in range(3) for j in range(3) if i != j])
    assert og.logic_becker_game(edge, tri)
    assert not og.logic_becker_game(tri, edge)
    assert og.symbolic_becker_seq(["a", "b"], ["c", "a", "b"])
    assert og.diag_reduction_check(["a", "b"], ["b", "a"])["permutation"] == [1, 0]


def test_round_trip_and_errors():
    swap = og.fixture("z2-swap")
    assert og.load_action(og.dump_action("swap", swap)) == swap
    with pytest.raises(og.ParseError):
        og.load_action("{")
    with pytest.raises(ValueError):
        og.load_action('{"space": {"n_points": 2, "basis": [[0, 9]]}}')
    with pytest.raises(IndexError):
        og.FiniteSpace.sierpinski().core_open(5)


def test_catalog():
    names = [name for name, _ in og.build_catalog("sierpinski")]
    assert names and all(n.startswith("sierpinski/") for n in names)
