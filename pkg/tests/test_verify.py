import random

import networkx as nx
import pytest

from nearly_indep.errors import DomainError, GuardError
from nearly_indep.families import FamilySpec, generate
from nearly_indep.formats import emit_graph6, parse_graph6
from nearly_indep.graph_core import Graph, complement
from nearly_indep.verify import (
    GraphUniverse,
    TheoremReport,
    check_corpus,
    check_graph,
    check_T1_general_bounds,
    check_T2_lower_connected,
    check_T3_structure,
    check_T4_upper_connected,
    check_theorem,
    default_workers,
    enumerate_labeled,
    is_isomorphic,
    merge_reports,
    recheck_violation,
    theorem_id,
)

from conftest import gnp


def fam(text):
    return generate(FamilySpec.parse(text))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestEnumeration:
    def test_n3_all(self):
        assert len(list(enumerate_labeled(3))) == 8

    def test_n3_connected(self):
        graphs = list(enumerate_labeled(3, "connected"))
        assert len(graphs) == 4
        assert sorted(g.m for g in graphs) == [2, 2, 2, 3]

    def test_n1(self):
        assert list(enumerate_labeled(1)) == [Graph.empty(1)]

    def test_increasing_masks_distinct(self):
        graphs = list(enumerate_labeled(4))
        assert len({emit_graph6(g) for g in graphs}) == 64

    def test_budget(self):
        with pytest.raises(GuardError, match="override"):
            next(enumerate_labeled(8))
        with pytest.raises(GuardError):
            next(enumerate_labeled(9, override=True))

    def test_cardinality_and_shards(self):
        u = GraphUniverse(5)
        assert u.cardinality == 1024
        parts = u.shards(3)
        assert sum(p.cardinality for p in parts) == 1024
        assert [m for p in parts for m, _ in p] == list(range(1024))

    def test_bad_filter(self):
        with pytest.raises(DomainError):
            GraphUniverse(3, "trees")


class TestIsomorphism:
    def test_c5_complement(self):
        assert is_isomorphic(fam("cycle:5"), complement(fam("cycle:5")))

    def test_p4_vs_star(self):
        assert not is_isomorphic(fam("path:4"), fam("star:4"))

    def test_broom_is_path(self):
        assert is_isomorphic(fam("broom:4,3"), fam("path:4"))

    def test_guard(self):
        with pytest.raises(GuardError):
            is_isomorphic(Graph.empty(11), Graph.empty(11))
        assert is_isomorphic(Graph.empty(11), Graph.empty(11), override=True)

    def test_order_mismatch(self):
        with pytest.raises(DomainError):
            is_isomorphic(Graph.empty(2), Graph.empty(3))

    def test_regular_non_isomorphic(self):
        # C6 and two triangles: same degree sequence, refinement cannot separate them
        two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_isomorphic(fam("cycle:6"), two_triangles)

    def test_against_networkx(self):
        rng = random.Random(99)
        for _ in range(400):
            n = rng.randint(1, 9)
            p = rng.random()
            g1 = gnp(n, p, rng)
            if rng.random() < 0.5:
                perm = list(range(n))
                rng.shuffle(perm)
                g2 = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in g1.edges()])
            else:
                g2 = gnp(n, p, rng)
            assert is_isomorphic(g1, g2) == nx.is_isomorphic(to_nx(g1), to_nx(g2))


class TestTheorems:
    def test_t1_n4(self):
        r = check_T1_general_bounds(4)
        assert r.passed and r.examined == 64

    def test_t1_n1(self):
        r = check_T1_general_bounds(1)
        assert r.passed and r.examined == 1

    def test_t1_n5(self):
        r = check_T1_general_bounds(5)
        assert r.passed and r.examined == 1024

    def test_t2_n4(self):
        assert check_T2_lower_connected(4).passed

    def test_t2_instances(self):
        assert check_graph("T2", fam("star:4")) is None
        assert check_graph("T2", fam("cycle:5")) is None

    def test_t3_n6(self):
        r = check_T3_structure(6)
        assert r.passed and r.examined == 32768

    def test_t3_wheels(self):
        assert check_graph("T3", fam("wheel:5")) is None
        assert check_graph("T3", fam("wheel:6")) is None

    def test_t4_n3(self):
        r = check_T4_upper_connected(3)
        assert r.passed and r.examined == 4

    def test_t4_n4_equality_graphs(self):
        from nearly_indep.solver import alpha1_exact

        hits = [g for g in enumerate_labeled(4, "connected") if alpha1_exact(g).value == 3]
        paw = fam("unicyclic_star:4")
        assert all(is_isomorphic(g, fam("path:4")) or is_isomorphic(g, paw) for g in hits)
        # 12 labelings of P4 plus 12 of the paw
        assert len(hits) == 24
        assert check_T4_upper_connected(4).passed

    def test_t4_n6(self):
        assert check_T4_upper_connected(6).passed

    def test_below_domain_is_empty(self):
        r = check_theorem("T4", 2)
        assert r.passed and r.examined == 0

    def test_ids(self):
        assert theorem_id("t3") == "T3_structure_H"
        assert theorem_id("T1_general_bounds") == "T1_general_bounds"
        with pytest.raises(DomainError):
            theorem_id("T9")


class TestReports:
    def test_sharding_is_invisible(self):
        for t in ("T1", "T2", "T3", "T4"):
            whole = check_theorem(t, 5)
            assert check_theorem(t, 5, shards=7) == whole
            assert whole.to_dict()["passed"]

    def test_parallel_workers_match(self):
        assert check_theorem("T2", 5, workers=2) == check_theorem("T2", 5)

    def test_merge_is_associative(self):
        a = TheoremReport("T1_general_bounds", (3,), 5, 1, (("B?", "x"),))
        b = TheoremReport("T1_general_bounds", (4,), 2, 0, ())
        c = TheoremReport("T1_general_bounds", (4,), 7, 2, (("A_", "y"),))
        assert a.merge(b).merge(c) == a.merge(b.merge(c)) == merge_reports([c, b, a])

    def test_merge_rejects_mixed(self):
        with pytest.raises(DomainError):
            TheoremReport("T1_general_bounds", (3,), 1).merge(TheoremReport("T3_structure_H", (3,), 1))

    def test_spot_checks_counted(self):
        r = check_theorem("T1", 6)
        assert 0 < r.spot_checks < r.examined // 50

    def test_violation_certificate_round_trip(self, monkeypatch):
        # Plant a wrong solver so that T1 finds counterexamples, then re-check them.
        import nearly_indep.verify as verify
        from nearly_indep.solver import AlphaResult

        def broken(g):
            return AlphaResult(1, g.n + 1, None, "recursive")

        monkeypatch.setattr(verify, "alpha1_exact", broken)
        r = check_theorem("T1", 3, spot_checks=False)
        assert not r.passed and len(r.violations) == 8
        for g6, detail in r.violations:
            assert parse_graph6(g6).n == 3
            assert recheck_violation("T1", g6)
            assert detail
        monkeypatch.undo()
        assert not any(recheck_violation("T1", g6) for g6, _ in r.violations)


def test_corpus_mode():
    graphs = [fam("path:5"), fam("cycle:5"), fam("empty:4"), fam("broom:6,3")]
    r = check_corpus("T4", graphs)
    assert r.passed and r.examined == 3 and r.orders == (5, 6)


def test_default_workers(monkeypatch):
    monkeypatch.setenv("NEARLY_INDEP_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("NEARLY_INDEP_THREADS", "zero")
    with pytest.raises(DomainError):
        default_workers()
