from random import Random

import pytest

from loopdecomp.complexes import neighbors_and_domination, validate_complex
from loopdecomp.engine import (
    NotFlagSkeleton,
    PairSpec,
    check_trace,
    cp_fiber_pairs,
    cp_pair_fiber_cells,
    decompose_general_pair,
    decompose_loop,
    loops_of_cp,
    skeleton_simplex_wedge,
    trace_to_doc,
)
from loopdecomp.homotopy import PProduct, loop_sphere, sphere
from loopdecomp.oracle import hochster_table
from loopdecomp.randomgen import random_flag_skeleton, relabel
from loopdecomp.series import GradedSeries


def gs(num, den=(1,)):
    return GradedSeries(tuple(num), tuple(den))


def square():
    return validate_complex([[1, 2], [2, 3], [3, 4], [1, 4]], 4)


def c5():
    return validate_complex([[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]], 5)


class TestPairSpec:
    def test_moment_angle(self):
        pairs = PairSpec.moment_angle(3)
        assert pairs.is_moment_angle()
        assert pairs.vertex(2) == GradedSeries.monomial(1)

    def test_disks(self):
        pairs = PairSpec.disks(4, 2)
        assert pairs.vertex(1) == GradedSeries.monomial(3)
        with pytest.raises(ValueError):
            PairSpec.disks(1, 2)

    def test_suspension_dims(self):
        pairs = PairSpec.from_suspension_dims([[2, 4], [3]])
        assert pairs.vertex(1) == gs([0, 1, 0, 1])
        with pytest.raises(ValueError):
            PairSpec.from_suspension_dims([[1]])
        with pytest.raises(ValueError):
            PairSpec.from_suspension_dims([[]])

    def test_product_cells(self):
        pairs = PairSpec.moment_angle(3)
        cells = pairs.product_cells([1, 2])
        assert cells.reduced == gs([0, 2, 1])
        assert pairs.product_cells([]).is_trivial()

    def test_restrict(self):
        pairs = PairSpec.from_suspension_dims([[2], [3], [4]])
        sub = pairs.restrict((1, 3))
        assert sub.cells == (gs([0, 1]), gs([0, 0, 0, 1]))


class TestSkeletonWedge:
    def test_two_points(self):
        w = skeleton_simplex_wedge(2, 0, PairSpec.moment_angle(2))
        assert w.cells.reduced == GradedSeries.monomial(3)

    def test_three_points(self):
        w = skeleton_simplex_wedge(3, 0, PairSpec.moment_angle(3))
        assert w.cells.reduced == gs([0, 0, 0, 3, 2])

    def test_full_simplex_contractible(self):
        for m in range(1, 5):
            w = skeleton_simplex_wedge(m, m - 1, PairSpec.moment_angle(m))
            assert w.is_trivial()

    def test_triangle_boundary_is_s5(self):
        w = skeleton_simplex_wedge(3, 1, PairSpec.moment_angle(3))
        assert w.cells.reduced == GradedSeries.monomial(5)

    def test_matches_hochster_for_small_skeleta(self):
        # reduced ranks of the wedge equal the Hochster table of the skeleton
        from loopdecomp.randomgen import skeleton

        for m in range(1, 6):
            full = validate_complex([list(range(1, m + 1))], m)
            for k in range(m):
                K = skeleton(full, k)
                w = skeleton_simplex_wedge(m, k, PairSpec.moment_angle(m))
                bound = m + K.dim() + 2
                ranks = {
                    d: c
                    for d, c in enumerate(w.cells.reduced.expand(bound))
                    if c
                }
                assert ranks == hochster_table(K).ranks, (m, k)


class TestDecompose:
    def test_square_boundary(self):
        product, trace = decompose_loop(square(), PairSpec.moment_angle(4))
        assert product.factors == ((loop_sphere(3), 2),)
        assert product.series == gs([1], [1, 0, -2, 0, 1])
        assert product.series.to_pair() == ([1], [1, 0, -2, 0, 1])
        assert check_trace(trace) == []

    def test_single_vertex(self):
        K = validate_complex([[1]], 1)
        product, trace = decompose_loop(K, PairSpec.moment_angle(1))
        assert product.is_trivial()
        assert trace.rule == "contractible"

    def test_path3(self):
        K = validate_complex([[1, 2], [2, 3]], 3)
        product, _ = decompose_loop(K, PairSpec.moment_angle(3))
        assert product.factors == ((loop_sphere(3), 1),)
        assert product.series == GradedSeries.geometric(2)

    def test_not_flag_skeleton(self):
        K = validate_complex([[1, 2, 3], [3, 4], [1, 4]], 4)
        with pytest.raises(NotFlagSkeleton):
            decompose_loop(K, PairSpec.moment_angle(4))

    def test_pair_count_must_match(self):
        with pytest.raises(ValueError):
            decompose_loop(square(), PairSpec.moment_angle(3))

    def test_c5_trace_root_is_pushout(self):
        product, trace = decompose_loop(c5(), PairSpec.moment_angle(5))
        assert trace.rule == "pushout"
        assert check_trace(trace) == []
        doc = trace_to_doc(trace)
        assert doc["rule"] == "pushout"
        assert doc["children"]

    def test_heuristic_independence(self):
        rng = Random(4)
        for K in [square(), c5()] + [random_flag_skeleton(rng.randint(3, 6), rng) for _ in range(6)]:
            pairs = PairSpec.moment_angle(K.m)
            info = neighbors_and_domination(K)
            options = [v for v, rec in info.items() if not rec.dominating]
            if not options:
                continue
            base, _ = decompose_loop(K, pairs)
            for v in options:
                alt, _ = decompose_loop(K, pairs, split_vertex=v)
                assert alt.factors == base.factors, (K.facets, v)
                assert alt.series == base.series, (K.facets, v)

    def test_relabeling_invariance(self):
        rng = Random(6)
        for _ in range(6):
            K = random_flag_skeleton(rng.randint(2, 6), rng)
            dims = [[rng.choice([2, 2, 3])] for _ in range(K.m)]
            pairs = PairSpec.from_suspension_dims(dims)
            base, _ = decompose_loop(K, pairs)
            perm = list(range(1, K.m + 1))
            rng.shuffle(perm)
            mapping = {i + 1: perm[i] for i in range(K.m)}
            moved = relabel(K, mapping)
            moved_dims = [None] * K.m
            for v in range(1, K.m + 1):
                moved_dims[mapping[v] - 1] = dims[v - 1]
            alt, _ = decompose_loop(moved, PairSpec.from_suspension_dims(moved_dims))
            assert alt.factors == base.factors
            assert alt.series == base.series

    def test_disk_pairs_triangle_boundary(self):
        # (D^3, S^2) on the boundary of a triangle: the wedge is S^8, and
        # Omega S^8 is rewritten into S^7 x Omega S^15
        K = validate_complex([[1, 2], [2, 3], [1, 3]], 3)
        product, _ = decompose_loop(K, PairSpec.disks(3, 3))
        assert product.factors == ((sphere(7), 1), (loop_sphere(15), 1))
        assert product.series == GradedSeries.geometric(7)

    def test_trace_node_series_are_recorded(self):
        product, trace = decompose_loop(c5(), PairSpec.moment_angle(5))
        assert trace.series == product.series
        stack = [trace]
        seen = 0
        while stack:
            node = stack.pop()
            seen += 1
            assert node.series.expand(5)
            stack.extend(node.children)
        assert seen >= 4


class TestGeneralPair:
    def test_cp_infinity_basepoint(self):
        # (CP^inf, *) on each vertex: m circle factors times the moment-angle answer
        K = validate_complex([[1, 2], [2, 3]], 3)
        loops = [loops_of_cp(None) for _ in range(3)]
        fibers = cp_fiber_pairs([(None, None)] * 3)
        assert fibers.is_moment_angle()
        result = decompose_general_pair(K, loops, fibers)
        base, _ = decompose_loop(K, PairSpec.moment_angle(3))
        circle = gs([1, 1])
        assert result.series == base.series * circle * circle * circle
        assert result.multiplicity(sphere(1)) == 3

    def test_cp_pair_fiber_cells(self):
        # fiber of (CP^2, CP^0) is S^1 x Omega S^5
        cells = cp_pair_fiber_cells(2, 0)
        assert cells == (gs([1, 1]) * GradedSeries.geometric(4)) - 1
        # infinite ambient space leaves just the sphere
        assert cp_pair_fiber_cells(None, 1) == GradedSeries.monomial(3)
        with pytest.raises(ValueError):
            cp_pair_fiber_cells(2, 2)

    def test_loops_of_cp(self):
        p = loops_of_cp(2)
        assert p.factors == ((sphere(1), 1), (loop_sphere(5), 1))
        assert p.series == gs([1, 1]) * GradedSeries.geometric(4)
        assert loops_of_cp(None).factors == ((sphere(1), 1),)

    def test_trivial_ambient_reduces_to_decompose_loop(self):
        K = square()
        pairs = PairSpec.moment_angle(4)
        base, _ = decompose_loop(K, pairs)
        result = decompose_general_pair(K, [PProduct.trivial()] * 4, pairs)
        assert result.series == base.series
        assert result.factors == base.factors

    def test_projective_pair_end_to_end(self):
        # (CP^2, CP^0) on a path: fibers S^1 x Omega S^5 drive the recursion
        K = validate_complex([[1, 2], [2, 3]], 3)
        loops = [loops_of_cp(2) for _ in range(3)]
        fibers = cp_fiber_pairs([(2, 0)] * 3)
        result = decompose_general_pair(K, loops, fibers)
        base, trace = decompose_loop(K, fibers)
        assert check_trace(trace) == []
        expect = base.series
        for p in loops:
            expect = expect * p.series
        assert result.series == expect
        assert result.multiplicity(sphere(1)) == 3 + base.multiplicity(sphere(1))
