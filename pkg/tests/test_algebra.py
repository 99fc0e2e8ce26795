import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibalg.algebra import (
    AlgebraTable,
    Subspace,
    abelian,
    antisymmetry_violations,
    bracket,
    center,
    change_basis,
    derived_series,
    fingerprint,
    graded_table,
    ideal_closure,
    is_ideal,
    is_leibniz,
    is_lie,
    is_naturally_graded,
    leibniz_violations,
    lower_central_series,
    nilpotency_index,
    permute,
    quotient,
    right_annihilator,
    solvability_index,
    squares_ideal,
)
from leibalg.catalog import FAMILIES, build, construct, sample_entries
from leibalg.errors import DimensionMismatchError, NotAnIdealError, NotLeibnizError
from leibalg.linalg import Matrix, basis_vector, determinant, vec_add, vec_scale

from conftest import matrices, rationals, vectors


def e(n, i):
    """1-based basis vector."""
    return basis_vector(n, i - 1)


def dims(series):
    return [s.dim for s in series]


SL2 = AlgebraTable(3, {
    # h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
    (0, 1): {1: 2}, (1, 0): {1: -2},
    (0, 2): {2: -2}, (2, 0): {2: 2},
    (1, 2): {0: 1}, (2, 1): {0: -1},
}, labels=["h", "e", "f"])

BAD2 = AlgebraTable(2, {(0, 0): {1: 1}, (0, 1): {1: 1}})

# Leibniz tables drawn from across the catalog at small n
SMALL_TABLES = [
    construct(entry)
    for fid in FAMILIES
    if fid not in ("R_n1_gamma", "R_2n1_gamma")
    for entry in sample_entries(fid, 3 if fid.startswith("Q") else 4)[:2]
]


# -- construction ------------------------------------------------------------


def test_table_normalizes_constants():
    a = AlgebraTable(2, {(0, 0): {1: 1, 0: 0}, (1, 1): {}})
    assert a.constants == {(0, 0): ((1, Fraction(1)),)}
    assert a == AlgebraTable(2, {(0, 0): [(1, 1)]})
    with pytest.raises(AttributeError):
        a.dim = 3


def test_table_rejects_bad_indices():
    with pytest.raises(IndexError):
        AlgebraTable(2, {(0, 2): {0: 1}})
    with pytest.raises(IndexError):
        AlgebraTable(2, {(0, 0): {5: 1}})
    with pytest.raises(DimensionMismatchError):
        AlgebraTable(2, {}, labels=["a"])


# -- bracket -----------------------------------------------------------------


def test_bracket_examples():
    nf3 = build("NF", 3)
    assert bracket(nf3, e(3, 2), e(3, 1)) == e(3, 3)
    assert bracket(nf3, e(3, 1), (0, 0, 0)) == (0, 0, 0)
    f41 = build("F1", 4)
    assert bracket(f41, vec_add(e(4, 1), e(4, 2)), e(4, 1)) == vec_scale(2, e(4, 3))


def test_bracket_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        bracket(build("NF", 3), (1, 0), (1, 0, 0))


@given(st.sampled_from(SMALL_TABLES), st.data())
def test_bilinearity(a, data):
    n = a.dim
    x, y, z = (data.draw(vectors(n, 3)) for _ in range(3))
    al, be = data.draw(rationals()), data.draw(rationals())
    combo = vec_add(vec_scale(al, x), vec_scale(be, y))
    assert bracket(a, combo, z) == vec_add(vec_scale(al, bracket(a, x, z)), vec_scale(be, bracket(a, y, z)))
    assert bracket(a, z, combo) == vec_add(vec_scale(al, bracket(a, z, x)), vec_scale(be, bracket(a, z, y)))


# -- identities ----------------------------------------------------------------


def test_leibniz_examples():
    assert leibniz_violations(build("NF", 4)) == []
    assert leibniz_violations(build("n_n1", 5)) == []
    viol = leibniz_violations(BAD2)
    assert viol[0] == (0, 0, 0, (0, 1))
    # (e1, e1, e2): [e1,e2] - [e2,e2] + [e2,e1] = e2
    assert viol == [(0, 0, 0, (0, 1)), (0, 0, 1, (0, 1))]
    assert not is_leibniz(BAD2)


def test_antisymmetry_examples():
    assert antisymmetry_violations(build("n_n1", 4)) == []
    viol = antisymmetry_violations(build("F1", 4))
    assert (0, 0, vec_scale(2, e(4, 3))) in viol
    assert antisymmetry_violations(abelian(3)) == []
    assert is_lie(SL2) and is_leibniz(SL2)


def test_leibniz_matches_brute_force_on_random_tables():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 3)
        consts = {
            (i, j): {k: rng.choice([0, 0, 0, 1, -1]) for k in range(n)}
            for i in range(n) for j in range(n)
        }
        a = AlgebraTable(n, consts)
        brute = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x, y, z = e(n, i + 1), e(n, j + 1), e(n, k + 1)
                    lhs = bracket(a, x, bracket(a, y, z))
                    rhs = vec_add(bracket(a, bracket(a, x, y), z),
                                  vec_scale(-1, bracket(a, bracket(a, x, z), y)))
                    d = vec_add(lhs, vec_scale(-1, rhs))
                    if any(d):
                        brute.append((i, j, k, d))
        assert leibniz_violations(a) == brute


# -- ideals and series ---------------------------------------------------------


def test_ideal_closure_examples():
    nf4 = build("NF", 4)
    assert ideal_closure(nf4, Subspace.span([e(4, 1)], 4)) == Subspace.full(4)
    assert ideal_closure(nf4, Subspace.zero(4)).dim == 0
    f1 = build("F1", 6)
    top = Subspace.span([e(6, 6)], 6)
    assert ideal_closure(f1, top) == top


def test_series_examples():
    for n in range(2, 7):
        assert dims(lower_central_series(build("NF", n))) == list(range(n, -1, -1))
        assert nilpotency_index(build("NF", n)) == n + 1
    assert dims(lower_central_series(abelian(4))) == [4, 0]
    assert dims(lower_central_series(build("F1", 5))) == [5, 3, 2, 1, 0]
    assert dims(derived_series(abelian(3))) == [3, 0]
    assert derived_series(build("NF", 4))[-1].dim == 0
    assert nilpotency_index(abelian(3)) == 2
    assert solvability_index(abelian(3)) == 2


def test_solvable_not_nilpotent():
    r = build("R4_1", 5, alpha=0)
    assert derived_series(r)[-1].dim == 0
    assert nilpotency_index(r) is None
    assert solvability_index(build("R_n1_gamma", 5, gamma1=1)) is not None


def test_sl2_not_solvable():
    assert solvability_index(SL2) is None
    assert derived_series(SL2)[-1].dim == 3
    assert nilpotency_index(SL2) is None


@given(st.sampled_from(SMALL_TABLES + [SL2]))
def test_series_nested_and_bounded(a):
    for series in (lower_central_series(a), derived_series(a)):
        for big, small in zip(series, series[1:]):
            assert small <= big
    ni = nilpotency_index(a)
    if ni is not None:
        assert solvability_index(a) is not None
        assert ni <= a.dim + 1


# -- annihilator, center, squares ----------------------------------------------


def test_right_annihilator_examples():
    assert right_annihilator(build("F1", 4)) == Subspace.coordinate(4, [1, 2, 3])
    assert right_annihilator(abelian(3)) == Subspace.full(3)
    assert e(6, 5) in right_annihilator(build("R_n1_gamma", 5, gamma1=1))


def test_center_examples():
    for n in range(4, 8):
        assert center(build("F1", n)) == Subspace.span([e(n, n)], n)
    assert center(abelian(2)).dim == 2
    assert center(build("R6_1", 5, alpha=0)).dim == 1


def test_squares_ideal_examples():
    assert squares_ideal(build("n_n1", 6)).dim == 0
    for n in range(4, 8):
        assert squares_ideal(build("F1", n)) == Subspace.coordinate(n, range(2, n))
    assert squares_ideal(build("R_n1_gamma", 6, gamma3=1)) == Subspace.span([e(7, 6)], 7)


@given(st.sampled_from(SMALL_TABLES))
def test_squares_land_in_right_annihilator(a):
    ann = right_annihilator(a)
    for i in range(a.dim):
        for j in range(a.dim):
            sym = vec_add(a.product(i, j), a.product(j, i))
            assert a.product(i, i) in ann and sym in ann
    assert is_ideal(a, ann)
    assert ideal_closure(a, ann) == ann


# -- quotient --------------------------------------------------------------------


def test_quotient_examples():
    assert quotient(build("NF", 4), Subspace.span([e(4, 4)], 4)).same_structure(build("NF", 3))
    f = build("F1", 6)
    assert antisymmetry_violations(quotient(f, squares_ideal(f))) == []
    assert quotient(f, Subspace.zero(6)) == f


def test_quotient_by_non_ideal():
    with pytest.raises(NotAnIdealError):
        quotient(build("F1", 4), Subspace.span([e(4, 1)], 4))


@given(st.sampled_from(SMALL_TABLES))
def test_quotient_by_squares_is_lie(a):
    q = quotient(a, squares_ideal(a))
    assert is_lie(q) and is_leibniz(q)


# -- basis change and fingerprints ----------------------------------------------


def test_fingerprint_examples():
    fp = fingerprint(build("NF", 4))
    assert fp.lcs_dims == (4, 3, 2, 1, 0)
    assert fp.dim_center == 1 and not fp.is_lie
    fa = fingerprint(abelian(3))
    assert fa.lcs_dims == (3, 0) and fa.dim_center == 3
    f1, f2 = fingerprint(build("F1", 5)), fingerprint(build("F2", 5))
    assert f1.dim_derivation_space == 6 and f2.dim_derivation_space == 7
    assert "dim_derivation_space" in f1.differing_fields(f2)


def test_fingerprint_requires_leibniz():
    with pytest.raises(NotLeibnizError):
        fingerprint(BAD2)
    assert fingerprint(BAD2, require_leibniz=False).dim == 2


@given(st.sampled_from(SMALL_TABLES), st.randoms(use_true_random=False))
def test_fingerprint_permutation_invariant(a, rnd):
    perm = list(range(a.dim))
    rnd.shuffle(perm)
    b = permute(a, perm)
    assert is_leibniz(b)
    assert fingerprint(b) == fingerprint(a)


@given(st.sampled_from(SMALL_TABLES), st.data())
def test_change_basis_preserves_structure(a, data):
    p = data.draw(matrices(a.dim, bound=2))
    if determinant(p) == 0:
        p = Matrix.identity(a.dim)
    b = change_basis(a, p)
    assert is_leibniz(b)
    assert fingerprint(b) == fingerprint(a)
    # p maps b-products to a-products
    for i in range(a.dim):
        for j in range(a.dim):
            assert p @ b.product(i, j) == bracket(a, p.column(i), p.column(j))


# -- graduation --------------------------------------------------------------------


@pytest.mark.parametrize("fid", ["NF", "n_n1", "F1", "F2"])
@pytest.mark.parametrize("n", [4, 6, 8])
def test_naturally_graded(fid, n):
    a = build(fid, n)
    assert graded_table(a) == a
    assert is_naturally_graded(a)


def test_q2n_naturally_graded():
    for n in (3, 4):
        assert is_naturally_graded(build("Q2n", n))


def test_graduation_detects_non_graded():
    # n_n1 plus a lower-weight term [e2, e3] = e5 is filiform but not graded
    base = build("n_n1", 5)
    consts = {k: dict(v) for k, v in base.constants.items()}
    consts[(1, 2)] = {4: 1}
    consts[(2, 1)] = {4: -1}
    a = AlgebraTable(5, consts)
    assert is_leibniz(a)
    assert not is_naturally_graded(a)
    assert graded_table(abelian(2)) == abelian(2)
