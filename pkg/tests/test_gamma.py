# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubemorse.generators import gen_path, gen_random_median
from cubemorse.metric import bilipschitz_check, build_gamma, dk_matrix, export_dot, gamma_threshold, project_path


def test_threshold():
    assert [gamma_threshold(k) for k in range(3)] == [4, 14, 24]


class TestBuildGamma:
    def test_path(self, path20):
        gamma = build_gamma(path20, 0)
        assert gamma.threshold == 4
        assert gamma.vertex_count == 21
        assert gamma.graph.number_of_edges() == 20 + 19 + 18 + 17
        assert gamma.diameter == 5
        assert gamma.dist_table[0, 9] == 3

    def test_grid_collapses_at_level_zero(self, grid4):
        gamma = build_gamma(grid4, 0)
        assert gamma.graph.number_of_edges() == 16 * 15 // 2
        assert gamma.diameter == 1

    def test_reuses_a_table(self, path5):
        table = dk_matrix(path5, 1)
        assert build_gamma(path5, 1, dk_table=table).dk_table is table

    def test_edges_are_sorted_pairs(self, path5):
        edges = build_gamma(path5, 0).edges
        assert edges == sorted(edges)
        assert all(u < v for u, v in edges)

    @pytest.mark.parametrize("name", ["path20", "binary_tree", "tripod"])
    def test_trees_shrink_with_the_level(self, name, request):
        tree = request.getfixturevalue(name)
        base = build_gamma(tree, 0)
        for k in range(1, 4):
            gamma = build_gamma(tree, k)
            assert (gamma.dk_table == base.dk_table).all()
            assert (gamma.dist_table <= base.dist_table).all()
            assert set(base.edges) <= set(gamma.edges)

    def test_path_diameter_by_level(self, path20):
        assert [build_gamma(path20, k).diameter for k in range(4)] == [5, 2, 1, 1]


class TestBilipschitz:
    def test_path(self, path20):
        report = bilipschitz_check(path20, 0)
        assert report.passed and report.witness is None
        assert report.pairs_checked == 21 * 20 // 2
        assert report.tight_pairs == 17 + 13 + 9 + 5 + 1

    def test_forged_table_fails(self, path5):
        gamma = build_gamma(path5, 0)
        forged = gamma.dk_table.copy()
        forged[0, 5] = forged[5, 0] = 100
        gamma.dk_table = forged
        report = bilipschitz_check(path5, 0, gamma)
        assert not report.passed
        assert report.witness == (0, 5, 100, 2)

    @given(st.integers(0, 2**16), st.integers(0, 1))
    def test_random_complexes(self, seed, k):
        c = gen_random_median(seed, 14)
        assert bilipschitz_check(c, k).passed


class TestProjectPath:
    def test_path_best_constants(self, path20):
        report = project_path(path20, path20.geodesic(0, 20), 0)
        assert report.best_constants == (4, Fraction(0))
        assert report.arclength == tuple(range(21))
        assert report.progress == tuple(-(-i // 4) for i in range(21))
        assert report.additivity_defect == 1
        assert len(report.constants) == 4

    def test_vertex_list(self, grid4):
        report = project_path(grid4, [0, 1, 2, 3, 7], 0)
        assert report.progress == (0, 1, 1, 1, 1)
        assert report.as_dict()["best_multiplicative"] >= 1

    def test_single_vertex(self, path5):
        report = project_path(path5, [2], 0)
        assert report.progress == (0,)
        assert report.best_constants == (1, Fraction(0))


class TestExportDot:
    def test_gamma(self):
        text = export_dot(build_gamma(gen_path(2), 0))
        assert text == "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n"

    def test_complex(self):
        assert export_dot(gen_path(2)) == "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"

    def test_edges_match(self, grid4):
        gamma = build_gamma(grid4, 1)
        lines = export_dot(gamma).splitlines()
        assert sum("--" in line for line in lines) == gamma.graph.number_of_edges()
        assert np.array_equal(gamma.dist_table, gamma.dist_table.T)
