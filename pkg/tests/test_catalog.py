import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibalg.algebra import (
    Subspace,
    antisymmetry_violations,
    is_leibniz,
    leibniz_violations,
    lower_central_series,
    squares_ideal,
)
from leibalg.catalog import (
    ABSENT,
    FAMILIES,
    NILPOTENT,
    CatalogEntry,
    _Builder,
    _labels,
    _q2n,
    build,
    catalog_index,
    catalog_index_json,
    construct,
    get_family,
    sample_entries,
)
from leibalg.errors import ParameterError

GAMMA = ("R_n1_gamma", "R_2n1_gamma")


def prods(a):
    """Products as {(i, j): {k: c}} with 1-based indices."""
    return {(i + 1, j + 1): {k + 1: c for k, c in t} for (i, j), t in a.constants.items()}


def valid_ns(fid, cap=22):
    spec = get_family(fid)
    return [n for n in range(spec.n_min, 11) if spec.dim(n) <= cap]


# -- explicit tables ------------------------------------------------------------


def test_nf3_table():
    assert prods(build("NF", 3)) == {(1, 1): {2: 1}, (2, 1): {3: 1}}


def test_f1_table():
    assert prods(build("F1", 4)) == {(1, 1): {3: 1}, (2, 1): {3: 1}, (3, 1): {4: 1}}


def test_q2n_table():
    p = prods(build("Q2n", 3))
    assert p[(2, 5)] == {6: 1}
    assert p[(3, 4)] == {6: -1}
    assert p[(4, 3)] == {6: 1}
    assert p[(4, 1)] == {5: 1} and p[(1, 4)] == {5: -1}
    assert (5, 1) not in p  # the e1 chain stops at e_{2n-1}


def test_q2n1_2_eps_term():
    p = prods(build("Q2n1_2", 3, eps=1))
    assert p[(1, 7)] == {1: 1, 6: 1}
    assert p[(7, 1)] == {1: -1, 6: -1}


def test_labels_and_dims():
    a = build("L_1", 5)
    assert a.labels == ("e1", "e2", "e3", "e4", "e5", "x", "y")
    assert build("Q2n2", 4).dim == 10
    assert CatalogEntry.make("R_2n1_gamma", 4, gamma3=1).nil_dim == 8


# -- validation -------------------------------------------------------------------


@pytest.mark.parametrize(
    "fid, n, params",
    [
        ("R_n1_gamma", 5, {}),
        ("R_2n1_gamma", 4, {"gamma1": 0, "gamma2": 0, "gamma3": 0}),
        ("R6_2", 5, {"alpha": 0}),
        ("R6_4", 5, {"alpha": 1}),
        ("R6_6", 5, {"delta": 1}),
        ("R4_1", 5, {"alpha": 2}),
        ("Q2n1_2", 3, {"eps": Fraction(1, 2)}),
        ("S_n1", 5, {"alpha": 0, "beta": 0}),
        ("NF", 1, {}),
        ("F1", 5, {"alpha": 1}),
        ("nope", 5, {}),
        ("S_n1_4", 6, {"a3": "x"}),
    ],
)
def test_parameter_errors(fid, n, params):
    with pytest.raises(ParameterError):
        CatalogEntry.make(fid, n, params)


def test_construct_revalidates():
    bad = CatalogEntry("R6_2", 5, (("alpha", Fraction(0)),))
    with pytest.raises(ParameterError):
        construct(bad)


def test_param_names_depend_on_n():
    assert get_family("S_n1_4").param_names(6) == ["a3", "a4", "a5"]
    assert get_family("R6_6").param_names(5)[-2:] == ["lambda", "delta"]
    assert CatalogEntry.make("R4_2", 6).label() == "R4_2(n=6; alpha4=0, alpha5=0, alpha=0)"


def test_index():
    rows = catalog_index()
    assert len(rows) >= 20
    assert {r["family_id"] for r in rows} == set(FAMILIES)
    assert all(r["source"] for r in rows)
    assert json.loads(catalog_index_json()) == {"families": rows, "absent": ABSENT}
    assert len(ABSENT) == 2


# -- identities across the catalog -----------------------------------------------


@pytest.mark.parametrize("fid", [f for f in FAMILIES if f not in GAMMA])
def test_identity_all_n(fid):
    spec = get_family(fid)
    for n in valid_ns(fid):
        for entry in sample_entries(fid, n):
            a = construct(entry)
            assert leibniz_violations(a) == [], entry.label()
            if spec.is_lie:
                assert antisymmetry_violations(a) == [], entry.label()
            else:
                assert antisymmetry_violations(a) != [], entry.label()


@pytest.mark.parametrize("fid", GAMMA)
@given(
    g=st.tuples(*[st.integers(-3, 3)] * 3).filter(any),
    n=st.integers(4, 7),
)
def test_gamma_families_leibniz_iff_only_gamma3(fid, g, n):
    n = max(n, get_family(fid).n_min)
    a = build(fid, n, gamma1=g[0], gamma2=g[1], gamma3=g[2])
    assert is_leibniz(a) == (g[0] == 0 and g[1] == 0)


def test_gamma_defects_are_located():
    n = 5
    a = build("R_n1_gamma", n, gamma1=1)
    x = n  # 0-based index of x
    e = lambda i: tuple(Fraction(int(k == i - 1)) for k in range(n + 1))  # noqa: E731
    defects = {(i, j, k): d for i, j, k, d in leibniz_violations(a)}
    assert set(defects) == {(x, 0, x), (x, x, 0)}
    assert {d for d in defects.values()} == {e(n), tuple(-c for c in e(n))}
    b = build("R_n1_gamma", n, gamma2=1)
    assert {(i, j, k) for i, j, k, _ in leibniz_violations(b)} == {(x, 1, x), (x, x, 1)}


# -- corrections to tables whose as-typeset coefficients break the identity ------


def _rebuild(fid, n, edit):
    """Catalog table of ``fid`` after applying ``edit(builder)``."""
    entry = CatalogEntry.make(fid, n)
    spec = entry.spec
    b = _Builder(spec.dim(n), _labels(spec.nil_dim(n), spec.extra))
    spec.builder(b, n, entry.param_dict)
    edit(b)
    return b.table()


def test_q2n1_1_top_weight_is_additive():
    n, alpha = 4, Fraction(1)
    x, top = 2 * n + 1, 2 * n
    good = build("Q2n1_1", n, alpha=alpha)
    assert is_leibniz(good)
    # weight 2n-3-2*alpha instead of 2n-3+2*alpha
    b = _Builder(2 * n + 1, _labels(2 * n, 1))
    _q2n(b, n)
    b.anti(1, x, 1)
    for i in range(2, 2 * n):
        b.anti(i, x, i, i - 2 + alpha)
    b.anti(top, x, top, 2 * n - 3 - 2 * alpha)
    assert not is_leibniz(b.table())


@pytest.mark.parametrize("n", [4, 5])
def test_q2n1_3_tail_reaches_top_of_chain(n):
    a = Fraction(2)
    x = 2 * n + 1
    assert is_leibniz(build("Q2n1_3", n, alpha=a))
    # summation bound floor((2n-3-i)/2) drops the last tail term
    b = _Builder(2 * n + 1, _labels(2 * n, 1))
    _q2n(b, n)
    for i in range(0, 2 * n - 5):
        b.anti(2 + i, x, 2 + i)
        for k in range(2, (2 * n - 3 - i) // 2 + 1):
            b.anti(2 + i, x, 2 * k + 1 + i, a ** (2 * k + 1))
    for i in (1, 2, 3):
        b.anti(2 * n - i, x, 2 * n - i)
    b.anti(2 * n, x, 2 * n, 2)
    assert not is_leibniz(b.table())


def test_q2n2_y_does_not_act_on_e1():
    n = 3
    y = 2 * n + 2
    assert is_leibniz(build("Q2n2", n))
    assert not is_leibniz(_rebuild("Q2n2", n, lambda b: b.anti(1, y, 1)))


def test_r_2n1_weights_and_target():
    n = 4
    top, x = 2 * n, 2 * n + 1
    assert is_leibniz(build("R_2n1_gamma", n, gamma3=1))
    # weights from alpha = +(2n-3)/2, gamma3 aimed at e_n, no weight on e_{2n}
    b = _Builder(2 * n + 1, _labels(2 * n, 1))
    _q2n(b, n)
    w2 = Fraction(2 * n - 3, 2)
    b.add(1, x, 1)
    b.add(x, 1, 1, -1)
    b.add(2, x, 2, w2)
    b.add(x, 2, 2, -w2)
    for i in range(3, top):
        b.anti(i, x, i, Fraction(2 * n + 2 * i - 7, 2))
    b.add(x, x, n, 1)
    assert not is_leibniz(b.table())


# -- structure ------------------------------------------------------------------------


@pytest.mark.parametrize("fid", NILPOTENT)
def test_filiform_dimension_laws(fid):
    for n in valid_ns(fid, cap=20)[:6]:
        a = build(fid, n)
        dims = [s.dim for s in lower_central_series(a)]
        N = a.dim
        if fid == "NF":
            assert dims == list(range(N, -1, -1))
        else:
            assert dims[1:] == [N - i for i in range(2, N + 1)]


def test_gamma_squares_ideal_is_top():
    for n in (4, 6):
        for g in ((0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 0)):
            a = build("R_n1_gamma", n, gamma1=g[0], gamma2=g[1], gamma3=g[2])
            assert squares_ideal(a) == Subspace.span([[int(k == n - 1) for k in range(n + 1)]], n + 1)
