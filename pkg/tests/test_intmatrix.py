import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clutter_algebra.intmatrix import (
    IntMatrix,
    ZeroMatrixError,
    delta_r,
    delta_r_bruteforce,
    det,
    invariant_factors,
    lattice_quotient,
    matrix_rank,
    primitive,
    snf,
    solve_integral,
)

# Incidence matrix of the triangle, columns = edges {x1,x2},{x2,x3},{x1,x3}.
A_C3 = IntMatrix.from_columns([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
# Same columns lifted by a final 1 coordinate.
B_C3 = IntMatrix.from_columns([(1, 1, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def reconstruct_diag(m: IntMatrix, res):
    d = res.left.mul(m).mul(res.right)
    for i in range(d.rows):
        for j in range(d.cols):
            expected = res.diag[i] if i == j and i < len(res.diag) else 0
            assert d.entries[i][j] == expected


class TestSnf:
    def test_identity(self):
        assert invariant_factors(IntMatrix.identity(3)) == (1, 1, 1)

    def test_triangle_incidence(self):
        assert invariant_factors(A_C3) == (1, 1, 2)

    def test_lifted_triangle(self):
        assert invariant_factors(B_C3) == (1, 1, 1)

    def test_divisibility_example(self):
        assert invariant_factors(IntMatrix.from_rows([[2, 4], [6, 8]])) == (2, 4)

    def test_zero_matrix_rejected(self):
        with pytest.raises(ZeroMatrixError):
            snf(IntMatrix.from_rows([[0, 0], [0, 0]]))

    def test_transforms_unimodular(self):
        m = IntMatrix.from_rows([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
        res = snf(m)
        assert det(res.left) in (1, -1)
        assert det(res.right) in (1, -1)
        reconstruct_diag(m, res)

    @settings(max_examples=150, deadline=None)
    @given(small_matrices)
    def test_round_trip_random(self, rows):
        m = IntMatrix.from_rows(rows)
        if m.is_zero():
            return
        res = snf(m)
        reconstruct_diag(m, res)
        for a, b in zip(res.diag, res.diag[1:]):
            assert b % a == 0
        assert all(d > 0 for d in res.diag)
        assert det(res.left) in (1, -1)
        assert det(res.right) in (1, -1)


class TestDeltaR:
    def test_triangle_values(self):
        assert delta_r(A_C3, 3) == 2
        assert delta_r(B_C3, 3) == 1

    def test_primitive_column(self):
        assert delta_r(IntMatrix.from_columns([(1, 1)]), 1) == 1

    def test_rank_exceeded(self):
        with pytest.raises(ValueError):
            delta_r(A_C3, 4)

    @settings(max_examples=120, deadline=None)
    @given(small_matrices)
    def test_matches_bruteforce(self, rows):
        m = IntMatrix.from_rows(rows)
        if m.is_zero():
            return
        res = snf(m)
        for r in range(1, res.rank + 1):
            assert delta_r(m, r) == delta_r_bruteforce(m, r)


class TestLatticeQuotient:
    def test_triangle_has_order_two_torsion(self):
        q = lattice_quotient(A_C3)
        assert q.free_rank == 0
        assert q.torsion == (2,)

    def test_bipartite_path(self):
        # Path on three vertices: columns {x1,x2}, {x2,x3}.
        a = IntMatrix.from_columns([(1, 1, 0), (0, 1, 1)])
        q = lattice_quotient(a)
        assert q.free_rank == 1
        assert q.torsion == ()

    def test_identity_columns(self):
        q = lattice_quotient(IntMatrix.identity(3))
        assert q.free_rank == 0
        assert q.torsion == ()


class TestSolveIntegral:
    def test_identity(self):
        assert solve_integral(IntMatrix.identity(3), (4, -1, 7)) == (4, -1, 7)

    def test_parity_obstruction(self):
        assert solve_integral(IntMatrix.from_rows([[2]]), (1,)) is None

    def test_triangle_all_ones(self):
        # (1,1,1) has odd coordinate sum while every column sums to 2.
        assert solve_integral(A_C3, (1, 1, 1)) is None
        # Brute-force oracle over small integer coefficient boxes agrees.
        found = False
        for coeffs in itertools.product(range(-3, 4), repeat=3):
            if A_C3.mul_vector(coeffs) == (1, 1, 1):
                found = True
        assert not found

    def test_triangle_even_target(self):
        x = solve_integral(A_C3, (2, 2, 2))
        assert x is not None
        assert A_C3.mul_vector(x) == (2, 2, 2)

    @settings(max_examples=100, deadline=None)
    @given(small_matrices, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    def test_round_trip(self, rows, coeffs):
        m = IntMatrix.from_rows(rows)
        x = coeffs[: m.cols]
        b = m.mul_vector(x)
        sol = solve_integral(m, b)
        assert sol is not None
        assert m.mul_vector(sol) == b


class TestPrimitive:
    def test_basic(self):
        assert primitive((2, 4, -6)) == (1, 2, -3)

    def test_already_primitive(self):
        assert primitive((1, 0, 1)) == (1, 0, 1)

    def test_sign_convention(self):
        assert primitive((-3, -6)) == (1, 2)
        assert primitive((-3, -6), preserve_sign=True) == (-1, -2)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            primitive((0, 0))

    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
    def test_idempotent(self, v):
        if all(x == 0 for x in v):
            return
        w = primitive(v)
        assert primitive(w) == w
        assert next(x for x in w if x != 0) > 0


def test_matrix_rank_agrees_with_snf():
    m = IntMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert matrix_rank(m.entries) == snf(m).rank == 2
