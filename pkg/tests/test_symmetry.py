from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings

from slicetree.errors import CapExceededError, VerificationError
from slicetree.generators import curated_corpus
from slicetree.graph import CutPair, Graph, enumerate_cut_pairs
from slicetree.pairtree import PairFamily, PairNode, SetNode, build_tree, incidence_graph
from slicetree.pipeline import run_pipeline
from slicetree.symmetry import (
    Automorphism,
    AutomorphismGroup,
    _verify_group,
    action_on_tree,
    automorphisms,
    edge_stabilizer,
    edge_stabilizer_check,
    global_fixed_point_check,
    orbit_of_pair,
    setwise_stabilizer,
)

from strategies import graphs


def brute_automorphisms(g):
    return sorted(p for p in permutations(range(g.n)) if all((min(p[u], p[v]), max(p[u], p[v])) in g.edges for u, v in g.edges))


def element(G, image):
    return next(k for k, a in enumerate(G) if a.image == tuple(image))


@pytest.fixture
def spider():
    # legs of length 2, 1 and 3 from vertex 2
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])


class TestAutomorphisms:
    def test_c6_dihedral(self, c6, backend):
        G = automorphisms(c6)
        assert len(G) == 12 and G.elements[0].is_identity()

    def test_theta(self, theta222, backend):
        assert len(automorphisms(theta222)) == 12

    def test_spider_is_rigid(self, spider, backend):
        assert len(automorphisms(spider)) == 1

    def test_identity_first_then_sorted(self, theta222):
        images = [a.image for a in automorphisms(theta222)]
        assert images[0] == tuple(range(5)) and images[1:] == sorted(images[1:])

    def test_caps(self, c6):
        with pytest.raises(CapExceededError):
            automorphisms(c6, max_n=5)
        with pytest.raises(CapExceededError):
            automorphisms(c6, max_order=11)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=7))
    def test_matches_brute_force(self, g):
        got = automorphisms(g)
        assert sorted(a.image for a in got) == brute_automorphisms(g)

    def test_element_algebra(self, c6):
        r = Automorphism((1, 2, 3, 4, 5, 0))
        assert r.compose(r.inverse()).is_identity()
        assert r(5) == 0 and r.on_pair(CutPair(0, 3)) == CutPair(1, 4)
        assert r.compose(r).image == (2, 3, 4, 5, 0, 1)


class TestVerifyGroup:
    def test_not_closed(self):
        # two transpositions generate S3, so this set is not closed
        empty = Graph.from_edges(3, [])
        perms = np.array([[0, 1, 2], [1, 0, 2], [0, 2, 1]])
        with pytest.raises(VerificationError, match="composition"):
            _verify_group(empty, perms)

    def test_missing_inverse(self):
        perms = np.array([[0, 1, 2], [1, 2, 0]])
        with pytest.raises(VerificationError, match="inverse"):
            _verify_group(Graph.from_edges(3, []), perms)

    def test_edge_violation(self, path3):
        perms = np.array([[0, 1, 2], [1, 0, 2]])
        with pytest.raises(VerificationError, match="edge"):
            _verify_group(path3, perms)

    def test_identity_required(self):
        with pytest.raises(VerificationError, match="identity"):
            _verify_group(Graph.from_edges(2, []), np.array([[1, 0]]))

    def test_sampled_closure_on_large_group(self):
        # K8 has 40320 automorphisms, above the exact-closure threshold
        from slicetree.generators import complete

        assert len(automorphisms(complete(8))) == 40320


class TestOrbit:
    def test_theta(self, theta222):
        assert orbit_of_pair(automorphisms(theta222), CutPair(0, 1)).members == (CutPair(0, 1),)

    def test_c6(self, c6):
        S = orbit_of_pair(automorphisms(c6), CutPair(0, 3))
        assert S.members == (CutPair(0, 3), CutPair(1, 4), CutPair(2, 5))
        assert S.provenance == "orbit"

    def test_trivial_group(self, c6):
        assert orbit_of_pair(AutomorphismGroup.trivial(c6), CutPair(1, 5)).members == (CutPair(1, 5),)

    def test_closed(self, c6):
        G = automorphisms(c6)
        for p in enumerate_cut_pairs(c6):
            S = orbit_of_pair(G, p)
            assert all(a.on_pair(q) in S for a in G for q in S)

    def test_setwise_stabilizer(self, c6):
        G = automorphisms(c6)
        S = PairFamily(c6, ((0, 3),))
        # rotation by 3 and the reflections through 0 and through 1.5
        assert len(setwise_stabilizer(G, S)) == 4


class TestAction:
    def test_identity(self, double_theta):
        S = PairFamily(double_theta, ((0, 1), (1, 2)))
        t = build_tree(double_theta, S)
        action = action_on_tree(AutomorphismGroup.trivial(double_theta), S, t)
        assert action.perms == (tuple(range(len(t.nodes))),)

    def test_theta_swap_fixes_both(self, theta222):
        G = automorphisms(theta222)
        S = orbit_of_pair(G, CutPair(0, 1))
        t = build_tree(theta222, S)
        swap = element(G, (1, 0, 2, 3, 4))
        assert action_on_tree(G, S, t).perms[swap] == (0, 1)

    def test_c6_rotation_cycles_pairs(self, c6):
        G = automorphisms(c6)
        S = PairFamily(c6, ((0, 3), (1, 4), (2, 5)))
        t = incidence_graph(c6, S)
        r = element(G, (1, 2, 3, 4, 5, 0))
        perm = action_on_tree(G, S, t).perms[r]
        assert perm[:3] == (1, 2, 0)

    def test_not_closed(self, c6):
        G = automorphisms(c6)
        S = PairFamily(c6, ((0, 3),))
        with pytest.raises(VerificationError, match="not closed"):
            action_on_tree(G, S, build_tree(c6, S))


class TestEdgeStabilizer:
    def test_theta(self, theta222):
        G = automorphisms(theta222)
        S = orbit_of_pair(G, CutPair(0, 1))
        assert edge_stabilizer_check(G, S, build_tree(theta222, S)) == (True, None)

    def test_identity(self, triple_chain):
        S = PairFamily(triple_chain, ((0, 1), (1, 2), (2, 3)))
        t = build_tree(triple_chain, S)
        assert edge_stabilizer_check(AutomorphismGroup.trivial(triple_chain), S, t) == (True, None)

    def test_chain_end_swap(self, triple_chain):
        G = automorphisms(triple_chain, max_n=13)
        S = PairFamily(triple_chain, ((0, 1), (1, 2), (2, 3)))
        t = build_tree(triple_chain, S)
        action = action_on_tree(G, S, t)
        assert set(action.perms) == {(0, 1, 2, 3, 4), (2, 1, 0, 4, 3)}
        swap = next(k for k, perm in enumerate(action.perms) if perm[0] == 2)
        assert swap not in edge_stabilizer(action, (0, 3))
        assert edge_stabilizer_check(G, S, t, action) == (True, None)


class TestGlobalFixedPoints:
    def test_trivial_group(self, double_theta):
        S = PairFamily(double_theta, ((0, 1), (1, 2)))
        t = build_tree(double_theta, S)
        assert global_fixed_point_check(AutomorphismGroup.trivial(double_theta), t) == [0, 1, 2]

    def test_theta(self, theta222):
        G = automorphisms(theta222)
        t = build_tree(theta222, orbit_of_pair(G, CutPair(0, 1)))
        assert global_fixed_point_check(G, t) == [0, 1]

    def test_c6_full_family(self, c6):
        G = automorphisms(c6)
        t = incidence_graph(c6, PairFamily(c6, tuple(enumerate_cut_pairs(c6))))
        assert global_fixed_point_check(G, t) == []


def _stabilises(a, members):
    return sorted(a.on_pair(p) for p in members) == sorted(members)


@pytest.mark.parametrize("entry", [e for e in curated_corpus() if e.graph.n <= 10], ids=lambda e: e.name)
def test_edge_stabilizer_containment(entry):
    """Stabiliser of edge (p, V) equals stab(V) meet stab(p) on every tree the pipeline builds."""
    res = run_pipeline(entry.graph)
    if res.tree is None or res.action is None:
        return
    t, action = res.tree, res.action
    elements = action.group.elements
    for u, v in t.edges:
        p, V = t.nodes[u].pair, t.nodes[v].vset
        assert isinstance(t.nodes[u], PairNode) and isinstance(t.nodes[v], SetNode)
        expected = [k for k, a in enumerate(elements) if _stabilises(a, V.members) and _stabilises(a, [p])]
        assert edge_stabilizer(action, (u, v)) == expected
