import random

import pytest

from perfcolor.coloring import (
    Coloring,
    ColoringError,
    component_color_counts,
    format_coloring,
    parse_coloring,
    perfect_coloring,
    verify_proper,
)
from perfcolor.generators import BipartiteSpec, MultipartiteSpec, UnionSpec, generate
from perfcolor.graph import build_graph, connected_components, induced_subgraph, relabel
from perfcolor.oracle import is_perfect_coloring, max_clique
from perfcolor.recognition import recognize

from conftest import complete, disjoint_union, multipartite, path


def color(g):
    return perfect_coloring(g, recognize(g))


class TestPerfectColoring:
    def test_k33(self):
        c = color(multipartite(3, 3))
        assert c.palette_size == 2
        assert c.color == (0, 0, 0, 1, 1, 1)

    def test_octahedron(self):
        g = multipartite(2, 2, 2)
        c = color(g)
        assert c.palette_size == 3
        assert c.color[0] == c.color[1] and c.color[2] == c.color[3] and c.color[4] == c.color[5]
        assert is_perfect_coloring(g, c) == (True, None)

    def test_k4_union_p3(self):
        g = disjoint_union(complete(4), path(3))
        c = color(g)
        assert c.palette_size == 4
        assert c.color[:4] == (0, 1, 2, 3) and set(c.color[4:]) == {0, 1}
        assert is_perfect_coloring(g, c) == (True, None)
        assert component_color_counts(g, recognize(g), c) == [4, 2]

    def test_isolated_vertices(self):
        g = build_graph(3, [])
        assert color(g).color == (0, 0, 0)
        assert color(build_graph(0, [])).palette_size == 0

    def test_rejects_negative(self, paw):
        with pytest.raises(ColoringError):
            perfect_coloring(paw, recognize(paw))

    def test_rejects_mismatched_report(self):
        with pytest.raises(ColoringError):
            perfect_coloring(complete(3), recognize(complete(4)))

    def test_counts_match_clique_numbers(self):
        rng = random.Random(4)
        for _ in range(150):
            parts = []
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.5:
                    parts.append(BipartiteSpec(rng.randint(1, 3), rng.randint(0, 3), rng.random()))
                else:
                    parts.append(MultipartiteSpec(tuple(rng.randint(1, 3) for _ in range(rng.randint(2, 4)))))
            g = generate(UnionSpec(tuple(parts)), seed=rng.getrandbits(64))
            rep = recognize(g)
            c = perfect_coloring(g, rep)
            assert verify_proper(g, c) == (True, None)
            counts = component_color_counts(g, rep, c)
            for comp, k in zip(rep.labeling.members(), counts):
                assert k == max_clique(induced_subgraph(g, comp)[0])
            assert c.palette_size == max_clique(g)

    def test_relabeling_equivariance(self):
        rng = random.Random(8)
        for _ in range(50):
            g = disjoint_union(multipartite(rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 3)), path(rng.randint(1, 6)))
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = relabel(g, perm)
            rg, rh = recognize(g), recognize(h)
            counts_g = component_color_counts(g, rg, perfect_coloring(g, rg))
            counts_h = component_color_counts(h, rh, perfect_coloring(h, rh))
            # match components through the permutation
            by_g = {frozenset(perm[v] for v in comp): k for comp, k in zip(rg.labeling.members(), counts_g)}
            by_h = {frozenset(comp): k for comp, k in zip(rh.labeling.members(), counts_h)}
            assert by_g == by_h


class TestVerifyProper:
    def test_paw(self, paw):
        assert verify_proper(paw, Coloring((0, 1, 2, 0))) == (True, None)

    def test_monochromatic_edge(self):
        assert verify_proper(build_graph(2, [(0, 1)]), Coloring((0, 0))) == (False, (0, 1))

    def test_empty(self):
        assert verify_proper(build_graph(0, []), Coloring(())) == (True, None)

    def test_size_mismatch(self, paw):
        with pytest.raises(ColoringError):
            verify_proper(paw, Coloring((0, 1)))


class TestColoringFiles:
    def test_round_trip(self):
        c = Coloring((0, 1, 2, 0, 1))
        text = format_coloring(c)
        assert text.splitlines()[0] == "0 0"
        assert parse_coloring(text, 5) == c

    def test_unsorted_lines_accepted(self):
        assert parse_coloring("1 1\n0 0\n") == Coloring((0, 1))

    @pytest.mark.parametrize("text", ["0 0\n0 1\n", "0 a\n", "0 0\n2 1\n", "0 -1\n", "0\n"])
    def test_malformed(self, text):
        with pytest.raises(ColoringError):
            parse_coloring(text)

    def test_wrong_vertex_count(self):
        with pytest.raises(ColoringError):
            parse_coloring("0 0\n1 1\n", 3)


def test_component_counts_single_vertex():
    g = build_graph(1, [])
    rep = recognize(g)
    assert component_color_counts(g, rep, perfect_coloring(g, rep)) == [1]
    assert connected_components(g).component_count == 1
