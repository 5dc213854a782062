import random

import pytest

from conftest import (
    PETERSEN_GP_CLASSES,
    PETERSEN_MONO_CLASSES,
    complete,
    cycle,
    path,
)
from oracles import (
    oracle_chromatic_position,
    oracle_cochromatic,
    oracle_total_domination,
)
from poscol.catalogue import graphs_of_order
from poscol.errors import GraphInputError
from poscol.families import random_connected_graph
from poscol.graphs import (
    build_graph,
    diameter,
    disjoint_union,
    is_disjoint_union_of_cliques,
    join,
    product,
    relabel,
)
from poscol.position import ALL_KINDS, PositionKind
from poscol.solver import (
    Colouring,
    bounds,
    check_inequality_suite,
    chromatic_number,
    chromatic_position_number,
    clique_cover_number,
    cochromatic_number,
    colouring_from_dict,
    colouring_to_dict,
    feasible_position_colouring,
    total_domination_number,
    verify_colouring,
)

K = PositionKind


class TestVerifyColouring:
    def test_petersen_figure_left_is_gp(self, petersen):
        c = Colouring.from_classes(10, PETERSEN_GP_CLASSES)
        assert verify_colouring(petersen, c, K.GP)

    def test_petersen_figure_left_is_not_mono(self, petersen):
        c = Colouring.from_classes(10, PETERSEN_GP_CLASSES)
        assert not verify_colouring(petersen, c, K.MONO)

    def test_petersen_figure_right_is_mono(self, petersen):
        c = Colouring.from_classes(10, PETERSEN_MONO_CLASSES)
        assert verify_colouring(petersen, c, K.MONO)

    def test_single_class_cycle_fails(self):
        c = Colouring.from_classes(6, [list(range(6))])
        assert not verify_colouring(cycle(6), c, K.GP)

    def test_malformed_colourings(self):
        with pytest.raises(GraphInputError):
            Colouring.from_classes(3, [[0, 1]])  # uncovered vertex
        with pytest.raises(GraphInputError):
            Colouring.from_classes(3, [[0, 1, 2], []])  # empty class
        with pytest.raises(GraphInputError):
            verify_colouring(path(4), Colouring.from_classes(3, [[0, 1, 2]]), K.GP)

    def test_json_roundtrip(self):
        c = Colouring.from_classes(4, [[0, 2], [1, 3]])
        obj = colouring_to_dict(c, K.GP)
        back, kind = colouring_from_dict(obj)
        assert back == c and kind is K.GP


class TestSolverSmallValues:
    def test_petersen_all_kinds(self, petersen):
        assert chromatic_position_number(petersen, K.GP).k == 2
        assert chromatic_position_number(petersen, K.MONO).k == 4
        assert chromatic_position_number(petersen, K.MU).k == 2
        assert chromatic_position_number(petersen, K.GP_I).k == 3

    @pytest.mark.parametrize("n", range(5, 16))
    def test_cycles_gp(self, n):
        assert chromatic_position_number(cycle(n), K.GP).k == -(-n // 3)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_cycles_mono(self, n):
        assert chromatic_position_number(cycle(n), K.MONO).k == -(-n // 2)

    def test_triangle_is_one_class(self):
        # C3 is a clique, so a single class suffices for gp and mono alike
        assert chromatic_position_number(cycle(3), K.GP).k == 1
        assert chromatic_position_number(cycle(3), K.MONO).k == 1

    def test_clique_gpi(self):
        assert chromatic_position_number(complete(4), K.GP_I).k == 4

    def test_result_is_verified_and_exact(self, petersen):
        r = chromatic_position_number(petersen, K.GP)
        assert r.verified and r.optimality == "exact"
        assert verify_colouring(petersen, r.colouring, K.GP)


class TestSolverAgainstBellBruteForce:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_all_graphs_all_kinds(self, n):
        for g in graphs_of_order(n):
            for kind in ALL_KINDS:
                assert (
                    chromatic_position_number(g, kind).k
                    == oracle_chromatic_position(g, kind)
                ), (g.edges(), kind)

    def test_order_six_all_graphs(self):
        for g in graphs_of_order(6):
            for kind in ALL_KINDS:
                assert (
                    chromatic_position_number(g, kind).k
                    == oracle_chromatic_position(g, kind)
                ), (g.edges(), kind)


class TestBounds:
    def test_cycle_nine_gp_lower(self):
        b = bounds(cycle(9), K.GP)
        assert b.lower >= 3

    def test_tree_diameter_lower(self):
        b = bounds(path(7), K.GP)
        assert b.lower >= 4 and b.lower_reason in ("diameter", "ceil(n/pi)")

    def test_clique_tight(self):
        b = bounds(complete(6), K.GP)
        assert (b.lower, b.upper) == (1, 1)

    def test_bracket_solver_everywhere(self):
        rng = random.Random(3)
        for _ in range(40):
            g = random_connected_graph(rng.randint(2, 7), 0.4, rng.randrange(10**6))
            for kind in ALL_KINDS:
                b = bounds(g, kind)
                k = chromatic_position_number(g, kind).k
                assert b.lower <= k <= b.upper, (g.edges(), kind, b, k)


class TestClassicParameters:
    def test_chromatic_petersen(self, petersen):
        assert chromatic_number(petersen) == 3

    def test_clique_cover(self):
        assert clique_cover_number(disjoint_union(complete(3), complete(3))) == 2

    def test_cochromatic_hub_of_triangles(self):
        g = join(complete(1), disjoint_union(disjoint_union(complete(3), complete(3)), complete(3)))
        assert cochromatic_number(g) == 3

    def test_total_domination_ladder(self):
        g = product("cartesian", path(2), path(7))
        assert total_domination_number(g) == 6

    def test_total_domination_isolated_rejected(self):
        with pytest.raises(GraphInputError):
            total_domination_number(build_graph(3, [(0, 1)]))

    def test_against_oracles(self):
        rng = random.Random(29)
        for _ in range(25):
            g = random_connected_graph(rng.randint(2, 7), 0.45, rng.randrange(10**6))
            assert chromatic_number(g) == oracle_chromatic_position(
                g, K.GP, membership=lambda cls: all(
                    b not in g.adj[a] for i, a in enumerate(cls) for b in cls[i + 1:]
                ),
            )
            assert cochromatic_number(g) == oracle_cochromatic(g)
            assert total_domination_number(g) == oracle_total_domination(g)


class TestStructuralInvariants:
    def test_chi_gp_one_iff_union_of_cliques(self):
        for n in range(1, 7):
            for g in graphs_of_order(n):
                assert (chromatic_position_number(g, K.GP).k == 1) == (
                    is_disjoint_union_of_cliques(g)
                )

    def test_gpi_equals_chromatic_diameter_three(self):
        rng = random.Random(55)
        hits = 0
        while hits < 60:
            g = random_connected_graph(rng.randint(2, 9), 0.45, rng.randrange(10**6))
            if diameter(g).diam_star > 3:
                continue
            hits += 1
            assert chromatic_position_number(g, K.GP_I).k == chromatic_number(g)

    def test_permutation_invariance(self):
        rng = random.Random(91)
        for _ in range(10):
            g = random_connected_graph(rng.randint(2, 7), 0.4, rng.randrange(10**6))
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            for kind in ALL_KINDS:
                assert (
                    chromatic_position_number(g, kind).k
                    == chromatic_position_number(h, kind).k
                )

    def test_feasibility_probe(self):
        g = cycle(9)
        assert feasible_position_colouring(g, K.GP, 2) is None
        c = feasible_position_colouring(g, K.GP, 3)
        assert c is not None and verify_colouring(g, c, K.GP)


class TestInequalitySuite:
    def test_petersen_chain_values(self, petersen):
        rep = check_inequality_suite(petersen)
        assert rep.all_hold
        chain = next(r for r in rep.records if r.name == "chain mu<=gp<=mono")
        assert chain.detail == "2 <= 2 <= 4"

    def test_clique(self):
        assert check_inequality_suite(complete(5)).all_hold

    def test_random_connected(self):
        rng = random.Random(7)
        for i in range(60):
            n = 2 + i % 7
            g = random_connected_graph(n, 0.4, rng.randrange(10**6))
            rep = check_inequality_suite(g)
            assert rep.all_hold, (g.edges(), [r.name for r in rep.failures])

    def test_disconnected_catalogue_graphs(self):
        from poscol.graphs import is_connected

        for n in range(2, 7):
            for g in graphs_of_order(n):
                if not is_connected(g):
                    rep = check_inequality_suite(g)
                    assert rep.all_hold, (g.edges(), [r.name for r in rep.failures])


def test_budget_exhaustion_returns_tagged_upper_bound(petersen):
    from poscol.errors import Limits

    r = chromatic_position_number(petersen, K.MONO, Limits(node_limit=5))
    assert r.optimality == "upper_bound_only"
    assert r.verified and verify_colouring(petersen, r.colouring, K.MONO)
    assert r.k >= chromatic_position_number(petersen, K.MONO).k
    # a tiny budget may still be enough when the bounds pin the value exactly
    r2 = chromatic_position_number(petersen, K.GP_I, Limits(node_limit=5))
    assert r2.verified
    if r2.optimality == "exact":
        assert r2.k == 3
    else:
        assert r2.k >= 3


def test_limits_env_fallback(monkeypatch):
    from poscol.errors import Limits

    monkeypatch.setenv("POS_NODE_LIMIT", "5")
    monkeypatch.setenv("POS_TIME_LIMIT", "2.5")
    limits = Limits()
    assert limits.node_limit == 5 and limits.time_limit == 2.5
