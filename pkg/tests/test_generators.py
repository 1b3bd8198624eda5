# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubemorse.cubes import CubeComplex, validate_median
from cubemorse.generators import (
    CxcParseError,
    EnlargementError,
    GeneratorSpec,
    RaagGroup,
    RaagPresentation,
    ball_sizes,
    emit_cxc,
    gen_balanced_tree,
    gen_grid,
    gen_path,
    gen_product,
    gen_random_median,
    gen_random_tree,
    gen_star,
    gen_tree,
    load_complex,
    parse_cxc,
    raag_ball,
    raag_hull,
    raag_hull_words,
    save_complex,
)
from cubemorse.runtime import InputError

from .conftest import cycle_edges


def free_product_ball_sizes(sphere_a, sphere_b, radius):
    """Cumulative ball sizes of A * B from the sphere sizes of its factors.

    Elements are alternating sequences of nontrivial syllables; ``a[n]``
    and ``b[n]`` count those of length ``n`` ending in each factor.
    """
    a, b = [0] * (radius + 1), [0] * (radius + 1)
    for n in range(1, radius + 1):
        for l in range(1, n + 1):
            rest = n - l
            a[n] += sphere_a(l) * (b[rest] + (rest == 0))
            b[n] += sphere_b(l) * (a[rest] + (rest == 0))
    return list(itertools.accumulate(1 if n == 0 else a[n] + b[n] for n in range(radius + 1)))


class TestComplexGenerators:
    def test_grid(self):
        grid = gen_grid([4, 3])
        assert (grid.vertex_count, len(grid.edges)) == (12, 17)
        assert (0, 1) in grid.edges and (0, 4) in grid.edges

    def test_path(self):
        assert gen_path(0).vertex_count == 1
        assert gen_path(5).edges == tuple((i, i + 1) for i in range(5))

    @pytest.mark.parametrize(
        "call",
        [
            lambda: gen_grid([]),
            lambda: gen_grid([3, 0]),
            lambda: gen_path(-1),
            lambda: gen_star(-2),
            lambda: gen_balanced_tree(0, 2),
            lambda: gen_random_tree(0, 0),
            lambda: gen_grid([True, 2]),
            lambda: gen_tree(arity=2),
            lambda: gen_tree(),
            lambda: gen_random_median(0, 0),
        ],
    )
    def test_bad_parameters(self, call):
        with pytest.raises(InputError):
            call()

    def test_star(self, tripod):
        assert tripod.adjacency[0] == (1, 2, 3)

    def test_balanced_tree(self):
        tree = gen_balanced_tree(3, 2)
        assert tree.vertex_count == 13
        assert tree.adjacency[0] == (1, 2, 3)
        assert gen_balanced_tree(2, 0).vertex_count == 1

    def test_random_tree_is_seeded(self):
        assert gen_random_tree(5, 30) == gen_random_tree(5, 30)
        assert gen_random_tree(5, 30) != gen_random_tree(6, 30)
        assert len(gen_random_tree(5, 30).edges) == 29

    def test_tree_dispatch(self):
        assert gen_tree(arity=2, depth=3) == gen_balanced_tree(2, 3)
        assert gen_tree(size=9, seed=4) == gen_random_tree(4, 9)

    def test_product(self):
        square = gen_product(gen_path(1), gen_path(1))
        assert square == CubeComplex(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
        prism = gen_product(gen_path(2), gen_star(3))
        assert prism.vertex_count == 12
        assert prism.dimension == 2

    @given(st.integers(0, 2**32), st.integers(1, 24))
    def test_random_median(self, seed, size):
        c = gen_random_median(seed, size)
        assert c.vertex_count >= size
        assert validate_median(c).passed
        assert c == gen_random_median(seed, size)


class TestRaagPresentation:
    def test_parse(self):
        pres = RaagPresentation.parse("a-b, b-c", "d")
        assert pres.names == ("a", "b", "c", "d")
        assert pres.commute(0, 1) and pres.commute(2, 1)
        assert not pres.commute(0, 2)
        assert pres.dimension == 2
        assert pres.letters()[:3] == [(0, 1), (0, -1), (1, 1)]
        assert RaagPresentation.parse("", "a,,").names == ("a",)

    @pytest.mark.parametrize("graph, extra", [("a-a", ""), ("a-b-c", ""), ("", ""), ("a-1b", "")])
    def test_parse_rejects(self, graph, extra):
        with pytest.raises(InputError):
            RaagPresentation.parse(graph, extra)

    def test_dimension_of_a_triangle(self):
        assert RaagPresentation.parse("a-b,b-c,a-c").dimension == 3


class TestRaagGroup:
    def test_cancellation(self, free2):
        group = RaagGroup(free2)
        assert group.evaluate([(0, 1), (0, -1)]) == group.identity
        assert group.evaluate([(0, 1), (1, 1), (1, -1), (0, -1)]) == group.identity

    def test_commuting_letters(self, z2, z2_free_z):
        group = RaagGroup(z2)
        ab = group.evaluate([(0, 1), (1, 1)])
        assert ab == group.evaluate([(1, 1), (0, 1)])
        assert group.normal_form(group.evaluate([(1, 1), (0, 1)])) == ((0, 1), (1, 1))
        other = RaagGroup(z2_free_z)
        assert other.evaluate([(0, 1), (2, 1)]) != other.evaluate([(2, 1), (0, 1)])

    def test_normal_form_is_shortlex(self, z2):
        group = RaagGroup(z2)
        piling = group.evaluate([(1, -1), (0, -1), (1, -1)])
        assert group.normal_form(piling) == ((0, -1), (1, -1), (1, -1))
        assert group.length(piling) == 3

    def test_inverse_and_multiply(self, z2_free_z):
        group = RaagGroup(z2_free_z)
        x = group.evaluate([(0, 1), (2, -1), (1, 1), (2, 1)])
        assert group.multiply(x, group.inverse(x)) == group.identity
        assert group.multiply(group.inverse(x), x) == group.identity

    def test_first_letters_and_strip(self, z2_free_z):
        group = RaagGroup(z2_free_z)
        x = group.evaluate([(0, 1), (1, 1), (2, 1)])
        assert sorted(group.first_letters(x)) == [(0, 1), (1, 1)]
        assert group.strip(x, (1, 1)) == group.evaluate([(0, 1), (2, 1)])
        assert group.prepend(group.strip(x, (1, 1)), (1, 1)) == x

    def test_interval(self, z2):
        group = RaagGroup(z2)
        ab = group.evaluate([(0, 1), (1, 1)])
        a, b = group.evaluate([(0, 1)]), group.evaluate([(1, 1)])
        assert group.interval(group.identity, ab) == {group.identity, a, b, ab}
        assert group.interval(a, a) == {a}

    @given(st.lists(st.sampled_from([(0, 1), (0, -1), (1, 1), (1, -1), (2, 1), (2, -1)]), max_size=8))
    def test_prefixes_lie_on_geodesics(self, word):
        pres = RaagPresentation.parse("a-b", "c")
        group = RaagGroup(pres)
        x = group.evaluate(word)
        for p in group.prefixes(x):
            rest = group.multiply(group.inverse(p), x)
            assert group.length(p) + group.length(rest) == group.length(x)


class TestRaagBalls:
    def test_free_group(self, free2):
        assert ball_sizes(free2, 3) == [1, 5, 17, 53]

    def test_free_abelian(self, z2):
        assert ball_sizes(z2, 4) == [2 * r * r + 2 * r + 1 for r in range(5)]

    def test_free_product_matches_syllable_count(self, z2_free_z):
        expected = free_product_ball_sizes(lambda l: 4 * l, lambda l: 2, 5)
        assert ball_sizes(z2_free_z, 5) == expected
        assert expected[:3] == [1, 7, 33]

    def test_ball_words(self, z2):
        words = raag_ball(z2, 1)
        assert words == [(), ((0, 1),), ((0, -1),), ((1, 1),), ((1, -1),)]

    def test_negative_radius(self, z2):
        with pytest.raises(InputError):
            raag_ball(z2, -1)


class TestRaagHull:
    def test_free_group_ball_is_convex(self, free2_hull):
        assert free2_hull.vertex_count == 17
        assert len(free2_hull.edges) == 16
        assert free2_hull.dimension == 1

    def test_free_abelian_hull_is_a_box(self, z2):
        assert nx.is_isomorphic(raag_hull(z2, 1).graph, gen_grid([3, 3]).graph)
        assert raag_hull(z2, 2).vertex_count == 25
        assert raag_hull(z2, 2).dimension == 2

    def test_free_product_adds_the_corners(self, z2_free_z):
        hull = raag_hull(z2_free_z, 1)
        assert hull.vertex_count == 11
        words = raag_hull_words(z2_free_z, 1)
        assert words[0] == ()
        assert ((0, 1), (1, 1)) in words
        assert ((0, 1), (2, 1)) not in words

    def test_identity_is_vertex_zero(self, z2_free_z):
        hull = raag_hull(z2_free_z, 2)
        assert len(hull.adjacency[0]) == 6

    def test_enlargement(self, z2):
        with pytest.raises(EnlargementError):
            raag_hull(z2, 2, ambient_radius=4)
        assert raag_hull(z2, 2, ambient_radius=5).vertex_count == 25

    def test_radius_must_be_positive(self, z2):
        with pytest.raises(InputError):
            raag_hull(z2, 0)


class TestCxc:
    def test_emit(self):
        assert emit_cxc(gen_path(2)) == "cxc 1\nvertices 3\nedge 0 1\nedge 1 2\n"

    def test_comments_and_blank_lines(self):
        text = "# a square\ncxc 1\n\nvertices 4\nedge 0 1\n  edge 1 3\n# tail\nedge 0 2\nedge 2 3\n"
        assert parse_cxc(text) == CubeComplex(4, [(0, 1), (1, 3), (0, 2), (2, 3)])

    @pytest.mark.parametrize(
        "text, line",
        [
            ("cxc 2\nvertices 1\n", 1),
            ("cxc 1\nnodes 3\n", 2),
            ("cxc 1\nvertices 0\n", 2),
            ("cxc 1\nvertices 2\nedge 0 1\nedge 1 0\n", 4),
            ("cxc 1\nvertices 2\nedge 0 2\n", 3),
            ("cxc 1\nvertices 2\nedge 1 1\n", 3),
            ("cxc 1\nvertices 2\nedge 0 -1\n", 3),
            ("cxc 1\nvertices 2\nedge 0\n", 3),
            ("cxc 1\nvertices 2\nedge 0 \u00b9\n", 3),
            ("cxc 1\nvertices \u00b2\n", 2),
        ],
    )
    def test_parse_errors_name_the_line(self, text, line):
        with pytest.raises(CxcParseError) as info:
            parse_cxc(text)
        assert info.value.line == line
        assert str(info.value).startswith("line {}:".format(line))

    def test_missing_header(self):
        with pytest.raises(CxcParseError):
            parse_cxc("")
        with pytest.raises(CxcParseError):
            parse_cxc("cxc 1\n")

    def test_validation_can_be_skipped(self):
        text = emit_cxc(CubeComplex(6, cycle_edges(6), validate=False))
        with pytest.raises(InputError):
            parse_cxc(text)
        assert parse_cxc(text, validate=False).vertex_count == 6

    def test_files(self, tmp_path, grid4):
        path = str(tmp_path / "grid.cxc")
        save_complex(grid4, path)
        assert load_complex(path) == grid4
        with pytest.raises(InputError):
            load_complex(str(tmp_path / "missing.cxc"))


class TestGeneratorSpec:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("grid:4,4", lambda: gen_grid([4, 4])),
            ("path:20", lambda: gen_path(20)),
            ("tree:balanced:2:3", lambda: gen_balanced_tree(2, 3)),
            ("tree:random:5:10", lambda: gen_random_tree(5, 10)),
            ("tree:star:3", lambda: gen_star(3)),
            ("random:1:10", lambda: gen_random_median(1, 10)),
            ("product:path:1*path:2", lambda: gen_product(gen_path(1), gen_path(2))),
        ],
    )
    def test_build(self, text, expected):
        spec = GeneratorSpec.parse(text)
        assert str(spec) == text
        assert spec.build() == expected()

    def test_raag(self):
        spec = GeneratorSpec.parse("raag:a-b:c:1")
        assert spec.kind == "raag"
        assert spec.build().vertex_count == 11

    def test_file(self, tmp_path, tripod):
        path = str(tmp_path / "tripod.cxc")
        save_complex(tripod, path)
        spec = GeneratorSpec.parse(path)
        assert spec.kind == "file"
        assert spec.build() == tripod

    @pytest.mark.parametrize(
        "text", ["grid:", "grid:0,3", "path:x", "path:1:2", "tree:oak:3", "tree:star", "raag:a-a::1", "random:1", "product:path:1"]
    )
    def test_malformed(self, text):
        with pytest.raises(InputError):
            GeneratorSpec.parse(text)
