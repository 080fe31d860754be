"""Tests for group action descriptors and their linear invariance constraints."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equivab import catalog as cat
from equivab.exactlin import QMatrix
from equivab.symmetry import (
    ConnectedLieAction,
    FiniteMatrixAction,
    GroupNotFiniteError,
    TorusAction,
    commutator_operator,
    conjugation_matrix,
    check_no_trivial_summand,
    enumerate_group,
    fixed_vectors,
    invariance_constraints,
    kron,
    reynolds_average,
)


class TestEnumeration:
    @pytest.mark.parametrize(
        "action, order",
        [
            (cat.c2_sign(), 2),
            (cat.c3_rotation(), 3),
            (cat.c4_rotation(), 4),
            (cat.c2_x_c2(), 4),
            (cat.d4_on_r2(), 8),
            (cat.s3_standard(), 6),
            (cat.q8_on_r4(), 8),
            (cat.s3_regular_minus_trivial(), 6),
        ],
    )
    def test_group_orders(self, action, order):
        assert len(enumerate_group(action)) == order

    def test_closure_under_product(self):
        elems = enumerate_group(cat.s3_standard())
        entries = {e.entries for e in elems}
        for a in elems:
            for b in elems:
                assert (a @ b).entries in entries

    def test_infinite_group_raises(self):
        # a shear has infinite order
        shear = FiniteMatrixAction(
            2, (QMatrix.from_rows([[1, 1], [0, 1]]),), cap=50
        )
        with pytest.raises(GroupNotFiniteError):
            enumerate_group(shear)

    def test_non_invertible_generator_rejected(self):
        with pytest.raises(ValueError):
            FiniteMatrixAction(2, (QMatrix.from_rows([[1, 0], [0, 0]]),))


class TestKroneckerConventions:
    @given(
        st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
                 min_size=2, max_size=2),
        st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
                 min_size=2, max_size=2),
        st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
                 min_size=2, max_size=2),
    )
    @settings(max_examples=40, deadline=None)
    def test_vec_of_sandwich(self, a, x, b):
        a, x, b = (QMatrix.from_rows(m) for m in (a, x, b))
        lhs = (a @ x @ b).vec()
        rhs = kron(a, b.transpose()).mul_vec(x.vec())
        assert lhs == tuple(rhs)

    def test_conjugation_matrix(self):
        g = QMatrix.from_rows([[1, 1], [0, 1]])
        x = QMatrix.from_rows([[1, 2], [3, 4]])
        expected = (g @ x @ g.inverse()).vec()
        assert tuple(conjugation_matrix(g).mul_vec(x.vec())) == expected

    def test_commutator_operator(self):
        xi = QMatrix.from_rows([[0, 1], [2, 0]])
        x = QMatrix.from_rows([[1, 2], [3, 4]])
        expected = (xi @ x - x @ xi).vec()
        assert tuple(commutator_operator(xi).mul_vec(x.vec())) == expected


class TestFixedVectors:
    def test_rotation_has_no_fixed_vectors(self):
        assert check_no_trivial_summand(cat.c3_rotation())

    def test_reflection_has_fixed_line(self):
        refl = FiniteMatrixAction(2, (QMatrix.from_rows([[1, 0], [0, -1]]),))
        fixed = fixed_vectors(refl)
        assert fixed.dim == 1
        assert fixed.contains([1, 0])

    def test_trivial_group_fixes_everything(self):
        triv = FiniteMatrixAction(3, ())
        assert fixed_vectors(triv).dim == 3

    def test_torus_fixed_vectors(self):
        # weight (1, 0): second block is fixed
        t = TorusAction(((1, 0),))
        fixed = fixed_vectors(t)
        assert fixed.dim == 2
        assert fixed.contains([0, 0, 1, 0])
        assert fixed.contains([0, 0, 0, 1])

    def test_faithful_torus_no_fixed_vectors(self):
        assert check_no_trivial_summand(TorusAction(((1, 2),)))

    def test_su2_no_fixed_vectors(self):
        assert check_no_trivial_summand(cat.su2_on_c2())


class TestInvarianceConstraints:
    def test_finite_constraints_cut_out_commutant(self):
        g = cat.c4_rotation()
        ops = invariance_constraints(g)
        from equivab.exactlin import common_nullspace

        sol = common_nullspace(ops)
        # commutant of a rotation is C acting on R^2: dimension 2
        assert sol.dim == 2
        for v in sol.basis:
            x = QMatrix.from_vec(v, 2, 2)
            for gen in g.generators:
                assert (gen @ x - x @ gen).is_zero()

    def test_torus_constraints_match_finite_subgroup(self):
        # commutant of the weight-(1,) circle equals commutant of rotation by
        # 90 degrees inside it
        t = TorusAction(((1,),))
        from equivab.exactlin import common_nullspace

        circle = common_nullspace(invariance_constraints(t))
        quarter = common_nullspace(invariance_constraints(cat.c4_rotation()))
        assert circle == quarter


class TestTorusAction:
    def test_generator_shape_and_skewness(self):
        t = TorusAction(((1, -2), (0, 3)))
        gens = t.infinitesimal_generators()
        assert len(gens) == 2
        for g in gens:
            assert (g + g.transpose()).is_zero()

    def test_rotation_direction(self):
        # weight 1 on one block: generator sends x -> y, y -> -x columns;
        # e_x image is +e_y (counterclockwise)
        t = TorusAction(((1,),))
        (j,) = t.infinitesimal_generators()
        assert j.mul_vec([1, 0]) == (0, 1)
        assert j.mul_vec([0, 1]) == (-1, 0)

    def test_validation(self):
        with pytest.raises(ValueError):
            TorusAction(())
        with pytest.raises(ValueError):
            TorusAction(((1, 2), (3,)))


class TestConnectedLieAction:
    def test_closure_check_rejects_open_family(self):
        # e and f alone do not close: [e, f] = h is outside the span
        e = QMatrix.from_rows([[0, 1], [0, 0]])
        f = QMatrix.from_rows([[0, 0], [1, 0]])
        with pytest.raises(ValueError):
            ConnectedLieAction(2, (e, f))

    def test_sl2_triple_accepted(self):
        h = QMatrix.from_rows([[1, 0], [0, -1]])
        e = QMatrix.from_rows([[0, 1], [0, 0]])
        f = QMatrix.from_rows([[0, 0], [1, 0]])
        act = ConnectedLieAction(2, (h, e, f))
        assert act.dim == 2

    def test_su3_generators_close(self):
        act = cat.su3_on_c3_plus_wedge2()
        assert len(act.lie_generators) == 8


class TestReynolds:
    def test_average_is_equivariant_projection(self):
        g = cat.s3_standard()
        t = QMatrix.from_rows([[1, 2], [3, 4]])
        avg = reynolds_average(g, t)
        for el in enumerate_group(g):
            assert (el @ avg @ el.inverse() - avg).is_zero()
        # averaging an already-equivariant matrix is the identity map
        assert reynolds_average(g, avg) == avg
