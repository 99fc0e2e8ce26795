"""Basis changes between catalog instances.

Covers the reduction of ``R_n1_gamma`` parameters to the four canonical
triples, rescaling of free tail parameters, and direct-sum checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraTable, Subspace, bracket, is_ideal, right_multiplication
from .catalog import CatalogEntry, construct
from .errors import DimensionMismatchError, ParameterError, SingularMatrixError
from .linalg import Matrix, Vector, basis_vector, determinant, kernel_basis, vec_add

GammaTriple = tuple[Fraction, Fraction, Fraction]

CANONICAL_GAMMAS: tuple[GammaTriple, ...] = tuple(
    tuple(Fraction(v) for v in g) for g in ((0, 0, 1), (0, 1, 0), (1, 1, 0), (1, 0, 0))
)


# -- exact roots -----------------------------------------------------------


def _int_root(m: int, k: int) -> int | None:
    """Exact non-negative integer ``k``-th root of ``m >= 0`` or None."""
    if m < 2:
        return m
    lo, hi = 1, 1 << (m.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid**k
        if p == m:
            return mid
        if p < m:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def rational_root(q: Fraction, k: int) -> Fraction | None:
    """A rational ``r`` with ``r**k == q``, or None when none exists.

    For even ``k`` the positive root is returned.
    """
    if k <= 0:
        raise ValueError("root order must be positive")
    q = Fraction(q)
    if q < 0:
        if k % 2 == 0:
            return None
        r = rational_root(-q, k)
        return None if r is None else -r
    num, den = _int_root(q.numerator, k), _int_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


# -- basis change checks ---------------------------------------------------


def verify_basis_change(a: AlgebraTable, b: AlgebraTable, p: Matrix) -> bool:
    """True iff ``p [x, y]_a = [p x, p y]_b`` on all basis pairs.

    Raises:
        DimensionMismatchError: if the shapes disagree.
        SingularMatrixError: if ``p`` is not invertible.
    """
    if a.dim != b.dim or p.shape != (a.dim, a.dim):
        raise DimensionMismatchError(
            f"tables of dimension {a.dim} and {b.dim} with a {p.shape} matrix"
        )
    if determinant(p) == 0:
        raise SingularMatrixError("basis change matrix is singular")
    cols = [p.column(j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            if p @ a.product(i, j) != bracket(b, cols[i], cols[j]):
                return False
    return True


def verify_split_decomposition(a: AlgebraTable, s1: Subspace, s2: Subspace) -> bool:
    """True iff ``a`` is the direct sum of the two-sided ideals ``s1`` and ``s2``."""
    if s1.ambient_dim != a.dim or s2.ambient_dim != a.dim:
        raise DimensionMismatchError("subspaces live in a different ambient space")
    return (
        is_ideal(a, s1)
        and is_ideal(a, s2)
        and s1.intersection(s2).dim == 0
        and (s1 + s2).dim == a.dim
    )


# -- gamma normalization ---------------------------------------------------


def _as_triple(g: Sequence) -> GammaTriple:
    if len(g) != 3:
        raise ParameterError("a gamma triple has three entries")
    t = tuple(Fraction(v) for v in g)
    if not any(t):
        raise ParameterError("(gamma1, gamma2, gamma3) must not be (0, 0, 0)")
    return t  # type: ignore[return-value]


def canonical_gamma_class(g: Sequence) -> GammaTriple:
    """Canonical representative chosen by which of ``gamma1, gamma2`` vanish."""
    g1, g2, _ = _as_triple(g)
    key = (g1 != 0, g2 != 0)
    return {
        (False, False): CANONICAL_GAMMAS[0],
        (False, True): CANONICAL_GAMMAS[1],
        (True, True): CANONICAL_GAMMAS[2],
        (True, False): CANONICAL_GAMMAS[3],
    }[key]


def transform_gamma(n: int, g: Sequence, a1, b2, c1, c2) -> GammaTriple:
    """Parameters after the substitution with leading coefficients ``A1, B2, C1, C2``.

    ``gamma1' = gamma1 / (A1^(n-3) B2)``, ``gamma2' = gamma2 / A1^(n-2)``,
    ``gamma3' = (gamma3 + C1 gamma1 + C2 gamma2) / (A1^(n-2) B2)``.
    """
    g1, g2, g3 = (Fraction(v) for v in g)
    a1, b2, c1, c2 = (Fraction(v) for v in (a1, b2, c1, c2))
    if a1 == 0 or b2 == 0:
        raise ParameterError("A1 and B2 must be nonzero")
    return (
        g1 / (a1 ** (n - 3) * b2),
        g2 / a1 ** (n - 2),
        (g3 + c1 * g1 + c2 * g2) / (a1 ** (n - 2) * b2),
    )


@dataclass(frozen=True)
class GammaWitness:
    """Substitution data and the resulting basis change matrix.

    Column ``j`` of ``matrix`` expresses the new basis vector ``j`` in the
    old basis ``e_1..e_n, x``.
    """

    a1: Fraction
    b2: Fraction
    c1: Fraction
    c2: Fraction
    matrix: Matrix


def gamma_substitution(n: int, g: Sequence) -> tuple[Fraction, Fraction, Fraction, Fraction] | None:
    """``(A1, B2, C1, C2)`` sending ``g`` to its canonical triple, or None.

    None means the required ``A1 = gamma2^(1/(n-2))`` is irrational.
    """
    g1, g2, g3 = _as_triple(g)
    zero, one = Fraction(0), Fraction(1)
    if g1 == 0 and g2 == 0:
        return one, g3, zero, zero
    a1 = one
    if g2 != 0:
        a1 = rational_root(g2, n - 2)
        if a1 is None:
            return None
    if g1 == 0:
        return a1, one, zero, -g3 / g2
    b2 = g1 / a1 ** (n - 3)
    return a1, b2, -g3 / g1, zero


def _eigenvector(r: Matrix, value: Fraction, n: int, fix: int, scale: Fraction) -> Vector:
    shifted = Matrix.from_rows(
        [[r[i, j] - (value if i == j else 0) for j in range(n)] for i in range(n)]
    )
    kern = kernel_basis(shifted)
    if len(kern) != 1 or kern[0][fix] == 0:
        raise ValueError(f"eigenvalue {value} does not have a simple eigenvector")
    v = kern[0]
    c = scale / v[fix]
    return tuple(c * t for t in v)


def gamma_witness_matrix(n: int, g: Sequence, a1, b2, c1, c2) -> Matrix:
    """Basis change of ``R_n1_gamma(g)`` built from the substitution data.

    The new ``x`` is ``x + C1 e_1 + C2 e_2``; ``e'_1`` and ``e'_2`` are the
    eigenvectors of ``R_{x'}`` on the nilradical with eigenvalues ``1`` and
    ``2 - n`` and leading coefficients ``A1`` and ``B2``; the remaining
    vectors follow from ``e'_{i+1} = [e'_i, e'_1]``.
    """
    a1, b2, c1, c2 = (Fraction(v) for v in (a1, b2, c1, c2))
    table = construct(CatalogEntry.make("R_n1_gamma", n, dict(zip(("gamma1", "gamma2", "gamma3"), g))))
    d = n + 1
    xp = vec_add(basis_vector(d, n), vec_add(
        tuple(c1 if k == 0 else 0 for k in range(d)), tuple(c2 if k == 1 else 0 for k in range(d))
    ))
    rx = right_multiplication(table, xp)
    rn = Matrix.from_rows([[rx[i, j] for j in range(n)] for i in range(n)])
    e1 = _eigenvector(rn, Fraction(1), n, 0, a1) + (Fraction(0),)
    e2 = _eigenvector(rn, Fraction(2 - n), n, 1, b2) + (Fraction(0),)
    cols = [e1, e2]
    for _ in range(3, n + 1):
        cols.append(bracket(table, cols[-1], e1))
    cols.append(tuple(Fraction(v) for v in xp))
    return Matrix.from_columns(cols, rows=d)


def normalize_gamma(n: int, g: Sequence) -> tuple[GammaTriple, GammaWitness | None]:
    """Canonical triple for ``R_n1_gamma(g)`` and, when rational, a witness.

    Raises:
        ParameterError: for the zero triple or ``n < 4``.
    """
    if n < 4:
        raise ParameterError("the gamma family needs n >= 4")
    canon = canonical_gamma_class(g)
    sub = gamma_substitution(n, g)
    if sub is None:
        return canon, None
    return canon, GammaWitness(*sub, matrix=gamma_witness_matrix(n, g, *sub))


def check_gamma_witness(n: int, g: Sequence, witness: GammaWitness) -> bool:
    """Confirm the witness carries ``R(canonical)`` onto ``R(g)``."""
    canon = canonical_gamma_class(g)
    names = ("gamma1", "gamma2", "gamma3")
    src = construct(CatalogEntry.make("R_n1_gamma", n, dict(zip(names, canon))))
    dst = construct(CatalogEntry.make("R_n1_gamma", n, dict(zip(names, g))))
    return verify_basis_change(src, dst, witness.matrix)


# -- rescaling tail parameters ---------------------------------------------

# family -> (exponent of t in e'_i for i = 1..N, parameter weight function)
# A parameter p becomes p * t^w(p) under e'_1 = t e_1.


def _scaling_data(entry: CatalogEntry) -> tuple[list[int], dict[str, int]]:
    n, fid = entry.n, entry.family_id
    names = [k for k, _ in entry.params]
    if fid == "S_n1_4":
        exps = [1, 0] + [i - 2 for i in range(3, n + 1)]
        weights = {k: 1 - int(k[1:]) for k in names}
    elif fid == "R4_2":
        exps = [1, 1] + [i - 1 for i in range(3, n + 1)]
        weights = {k: 2 - int(k[5:]) for k in names if k != "alpha"}
        weights["alpha"] = 2 - n
    elif fid == "R6_6":
        exps = [1, 0] + [i - 1 for i in range(3, n + 1)]
        weights = {k: 2 - int(k[5:]) for k in names if k.startswith("alpha")}
        weights["lambda"] = 1 - n
        weights["delta"] = 0
    else:
        raise ParameterError(f"no diagonal rescaling is defined for {fid}")
    return exps, weights


def rescale(entry: CatalogEntry, t) -> tuple[CatalogEntry, Matrix]:
    """Apply ``e'_1 = t e_1`` with the induced diagonal change on the nilradical.

    Returns the rescaled entry and the basis change ``P`` with
    ``verify_basis_change(construct(new), construct(entry), P)``.
    """
    t = Fraction(t)
    if t == 0:
        raise ParameterError("scaling factor must be nonzero")
    exps, weights = _scaling_data(entry)
    new = CatalogEntry.make(
        entry.family_id, entry.n, {k: v * t ** weights[k] for k, v in entry.params}
    )
    diag = [t**e for e in exps] + [Fraction(1)] * entry.spec.extra
    return new, Matrix.diagonal_matrix(diag)


def normalize_first_nonzero(entry: CatalogEntry) -> tuple[CatalogEntry, Matrix] | None:
    """Rescale so the first nonzero free parameter becomes 1.

    Returns the entry unchanged (with the identity) if all free parameters
    vanish, and None when the needed root is irrational.
    """
    _, weights = _scaling_data(entry)
    for k, v in entry.params:
        w = weights[k]
        if v == 0 or w == 0:
            continue
        t = rational_root(1 / v, w) if w > 0 else rational_root(v, -w)
        if t is None:
            return None
        return rescale(entry, t)
    return entry, Matrix.identity(entry.dim)
