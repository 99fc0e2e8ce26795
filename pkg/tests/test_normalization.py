from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from leibalg.algebra import Subspace, abelian, change_basis
from leibalg.catalog import CatalogEntry, build, construct, sample_entries
from leibalg.errors import DimensionMismatchError, ParameterError, SingularMatrixError
from leibalg.linalg import Matrix
from leibalg.normalization import (
    CANONICAL_GAMMAS,
    canonical_gamma_class,
    check_gamma_witness,
    gamma_substitution,
    normalize_first_nonzero,
    normalize_gamma,
    rational_root,
    rescale,
    transform_gamma,
    verify_basis_change,
    verify_split_decomposition,
)
from leibalg.verify import split_ideals

from conftest import rationals

F = Fraction
nonzero = rationals(6, 4).filter(bool)


def canon(*g):
    return tuple(F(v) for v in g)


# -- roots --------------------------------------------------------------------


def test_rational_root():
    assert rational_root(F(8, 27), 3) == F(2, 3)
    assert rational_root(F(-8), 3) == -2
    assert rational_root(F(16), 4) == 2
    assert rational_root(F(-16), 4) is None
    assert rational_root(F(3), 4) is None
    assert rational_root(F(0), 5) == 0
    with pytest.raises(ValueError):
        rational_root(F(2), 0)


@given(rationals(20, 20), st.integers(1, 6))
def test_rational_root_inverts_power(r, k):
    q = r**k
    root = rational_root(q, k)
    assert root is not None and root**k == q


# -- canonical classes --------------------------------------------------------------


def test_normalize_examples():
    c, w = normalize_gamma(5, (0, 0, 5))
    assert c == canon(0, 0, 1) and w is not None
    assert check_gamma_witness(5, (0, 0, 5), w)
    assert normalize_gamma(5, (0, 0, 1))[0] == canon(0, 0, 1)
    c, w = normalize_gamma(5, (2, 3, 7))
    assert c == canon(1, 1, 0)
    assert w is None  # 3 is not a rational cube
    assert normalize_gamma(6, (1, 3, 0))[1] is None


def test_normalize_errors():
    with pytest.raises(ParameterError):
        normalize_gamma(5, (0, 0, 0))
    with pytest.raises(ParameterError):
        normalize_gamma(3, (1, 0, 0))
    with pytest.raises(ParameterError):
        canonical_gamma_class((1, 2))


def test_canonical_triples_are_fixed():
    for g in CANONICAL_GAMMAS:
        assert canonical_gamma_class(g) == g
        assert gamma_substitution(5, g) is not None


triples = st.tuples(rationals(6, 4), rationals(6, 4), rationals(6, 4)).filter(any)


@given(triples, st.integers(4, 8))
def test_normalize_idempotent(g, n):
    c = normalize_gamma(n, g)[0]
    assert normalize_gamma(n, c)[0] == c
    assert c in CANONICAL_GAMMAS


@given(triples, st.integers(4, 8), nonzero, nonzero, rationals(), rationals())
def test_class_invariant_under_transformation(g, n, a1, b2, c1, c2):
    assert canonical_gamma_class(transform_gamma(n, g, a1, b2, c1, c2)) == canonical_gamma_class(g)


@given(triples, st.integers(4, 8))
def test_substitution_reaches_canonical(g, n):
    sub = gamma_substitution(n, g)
    if sub is not None:
        assert transform_gamma(n, g, *sub) == canonical_gamma_class(g)


def test_transform_rejects_degenerate():
    with pytest.raises(ParameterError):
        transform_gamma(5, (1, 0, 0), 0, 1, 0, 0)


@pytest.mark.parametrize("n", [5, 6])
@given(
    g1=st.sampled_from([0, 1, -2, F(3, 4)]),
    root=st.sampled_from([0, 1, -1, 2, F(1, 2), F(-3, 2)]),
    g3=rationals(),
)
def test_witnesses_verify(n, g1, root, g3):
    g = (F(g1), F(root) ** (n - 2), g3)
    assume(any(g))
    c, w = normalize_gamma(n, g)
    assert w is not None
    assert check_gamma_witness(n, g, w)


# -- basis changes ---------------------------------------------------------------


def test_verify_basis_change_examples():
    nf3 = build("NF", 3)
    assert verify_basis_change(nf3, nf3, Matrix.identity(3))
    assert not verify_basis_change(nf3, nf3, Matrix.diagonal_matrix([2, 2, 2]))
    # e'_i = t^i e_i is an automorphism of NF_n
    assert verify_basis_change(nf3, nf3, Matrix.diagonal_matrix([2, 4, 8]))


def test_verify_basis_change_errors():
    nf3 = build("NF", 3)
    with pytest.raises(SingularMatrixError):
        verify_basis_change(nf3, nf3, Matrix.zeros(3))
    with pytest.raises(DimensionMismatchError):
        verify_basis_change(nf3, build("NF", 4), Matrix.identity(3))


def test_change_basis_agrees_with_verifier():
    a = build("F2", 5)
    p = Matrix.from_rows([[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [0, 2, 1, 0, 0], [0, 0, 0, 1, 0], [3, 0, 0, 0, 1]])
    b = change_basis(a, p)
    assert verify_basis_change(b, a, p)


def test_split_decomposition_examples():
    for fid in ("L_1", "L_2"):
        for n in range(5, 9):
            s1, s2 = split_ideals(n)
            assert verify_split_decomposition(build(fid, n), s1, s2)
    a = abelian(3)
    assert verify_split_decomposition(a, Subspace.full(3), Subspace.zero(3))
    f = build("F1", 4)
    assert not verify_split_decomposition(f, Subspace.coordinate(4, [0]), Subspace.coordinate(4, [1, 2, 3]))
    with pytest.raises(DimensionMismatchError):
        verify_split_decomposition(f, Subspace.full(3), Subspace.zero(4))


# -- rescaling --------------------------------------------------------------------


@pytest.mark.parametrize("fid", ["S_n1_4", "R4_2", "R6_6"])
@pytest.mark.parametrize("t", [2, F(-1, 3)])
def test_rescale_is_isomorphism(fid, t):
    for entry in sample_entries(fid, 6):
        new, p = rescale(entry, t)
        assert verify_basis_change(construct(new), construct(entry), p)


@pytest.mark.parametrize("fid, first", [("S_n1_4", "a3"), ("R4_2", "alpha4")])
def test_normalize_first_nonzero(fid, first):
    # both leading parameters scale like t^-2, so 4 needs t = 2
    entry = CatalogEntry.make(fid, 6, {first: 4, **({"alpha": 3} if fid == "R4_2" else {"a5": 5})})
    new, p = normalize_first_nonzero(entry)
    assert new.param_dict[first] == 1
    assert verify_basis_change(construct(new), construct(entry), p)
    assert normalize_first_nonzero(CatalogEntry.make(fid, 6, {first: 2})) is None


def test_normalize_first_nonzero_all_zero():
    entry = sample_entries("S_n1_4", 6)[0]
    new, p = normalize_first_nonzero(entry)
    assert new == entry and p == Matrix.identity(7)


def test_rescale_unsupported():
    with pytest.raises(ParameterError):
        rescale(CatalogEntry.make("R4_3", 6), 2)
    with pytest.raises(ParameterError):
        rescale(CatalogEntry.make("S_n1_4", 6), 0)
