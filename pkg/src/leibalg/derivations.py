"""Derivations, nil-independence and solvable extensions.

Matrices act on column vectors: column ``j`` of a derivation ``D`` is
``D(e_j)``. Tables written with rows as images are the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import (
    AlgebraTable,
    Subspace,
    bracket,
    is_ideal,
    nilpotency_index,
    restrict,
)
from .errors import DimensionMismatchError, NotDerivationError, NotTriangularError
from .linalg import (
    ZERO,
    Matrix,
    Vector,
    basis_vector,
    char_poly_pencil,
    is_nilpotent_matrix,
    kernel_basis_sparse,
    rank,
)
from .poly import Poly, count_real_roots, poly_gcd, rational_roots


# -- derivation space ------------------------------------------------------


def _derivation_rows(a: AlgebraTable) -> list[dict[int, Fraction]]:
    """Sparse rows of ``D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0``.

    The unknown ``D[p][q]`` sits at column ``p * n + q``.
    """
    n = a.dim
    consts = a.constants
    rows = []
    for i in range(n):
        for j in range(n):
            eq: dict[int, dict[int, Fraction]] = {}

            def put(r: int, col: int, c: Fraction) -> None:
                row = eq.setdefault(r, {})
                v = row.get(col, ZERO) + c
                if v:
                    row[col] = v
                else:
                    row.pop(col, None)

            for k, c in consts.get((i, j), ()):
                for r in range(n):
                    put(r, r * n + k, c)
            for p in range(n):
                for r, c in consts.get((p, j), ()):
                    put(r, p * n + i, -c)
                for r, c in consts.get((i, p), ()):
                    put(r, p * n + j, -c)
            rows.extend(row for row in eq.values() if row)
    return rows


def is_derivation(a: AlgebraTable, d: Matrix) -> bool:
    """Check ``d[x, y] = [d x, y] + [x, d y]`` on basis pairs."""
    n = a.dim
    if d.shape != (n, n):
        raise DimensionMismatchError(f"{d.shape} matrix for algebra of dimension {n}")
    cols = [d.column(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = d @ a.product(i, j)
            rhs_a = bracket(a, cols[i], basis_vector(n, j))
            rhs_b = bracket(a, basis_vector(n, i), cols[j])
            if any(lhs[k] - rhs_a[k] - rhs_b[k] for k in range(n)):
                return False
    return True


@dataclass(frozen=True)
class DerivationSpace:
    algebra_dim: int
    basis: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def diagonal_projection_rank(self) -> int:
        if not self.basis:
            return 0
        return rank(Matrix.from_rows([m.diagonal() for m in self.basis]))

    @property
    def is_upper_triangular(self) -> bool:
        return all(m.is_upper_triangular() for m in self.basis)

    @property
    def is_lower_triangular(self) -> bool:
        return all(m.is_lower_triangular() for m in self.basis)

    def flattened(self) -> list[Vector]:
        return [m.flatten() for m in self.basis]

    def contains(self, m: Matrix) -> bool:
        span = Subspace(self.algebra_dim**2, self.flattened())
        return span.contains(m.flatten())

    def same_span(self, matrices: Sequence[Matrix]) -> bool:
        n2 = self.algebra_dim**2
        return Subspace(n2, self.flattened()) == Subspace.span(
            [m.flatten() for m in matrices], n2
        )


def derivation_space(a: AlgebraTable) -> DerivationSpace:
    """All derivations of ``a`` as the kernel of the derivation equations.

    The basis is the reduced echelon basis of the kernel in flattened
    (row-major) coordinates, so it is deterministic.
    """
    n = a.dim
    kernel = kernel_basis_sparse(_derivation_rows(a), n * n)
    basis = tuple(Matrix(n, n, v) for v in kernel)
    return DerivationSpace(n, basis)


def inner_derivation(a: AlgebraTable, x: Sequence) -> Matrix:
    """``R_x : y -> [y, x]``."""
    from .algebra import right_multiplication

    return right_multiplication(a, x)


# -- reference patterns for the filiform non-Lie families ------------------


def _pattern_rows_f1(n: int) -> list[tuple[str, dict[tuple[int, int], int]]]:
    """Parameter -> {(row, col): coefficient}, 1-based, rows are images."""
    params: list[tuple[str, dict[tuple[int, int], int]]] = []
    for k in range(1, n + 1):
        entries: dict[tuple[int, int], int] = {(1, k): 1}
        if k == 1:
            entries[(2, 2)] = 1
            for i in range(3, n + 1):
                entries[(i, i)] = i - 1
        elif k == 2:
            entries[(2, 2)] = 1
            for i in range(3, n + 1):
                entries[(i, i)] = 1
        else:
            if k <= n - 1:
                entries[(2, k)] = 1
            for i in range(3, n + 1):
                j = k + i - 2
                if i < j <= n:
                    entries[(i, j)] = 1
        params.append((f"alpha{k}", entries))
    params.append(("beta", {(2, n): 1}))
    return params


def _pattern_rows_f2(n: int) -> list[tuple[str, dict[tuple[int, int], int]]]:
    params: list[tuple[str, dict[tuple[int, int], int]]] = []
    for k in range(1, n + 1):
        entries: dict[tuple[int, int], int] = {(1, k): 1}
        if k == 1:
            for i in range(3, n + 1):
                entries[(i, i)] = i - 1
        elif k >= 3:
            for i in range(3, n + 1):
                j = k + i - 2
                if i < j <= n:
                    entries[(i, j)] = 1
        params.append((f"alpha{k}", entries))
    params.append(("beta", {(2, 2): 1}))
    params.append(("gamma", {(2, n): 1}))
    return params


PATTERNS = {"F1": _pattern_rows_f1, "F2": _pattern_rows_f2}


def pattern_matrices(family: str, n: int) -> list[Matrix]:
    """One matrix per free parameter of the reference derivation pattern.

    The reference is written with rows as images; the returned matrices are
    transposed into the column convention used here.
    """
    try:
        builder = PATTERNS[family]
    except KeyError:
        raise ValueError(f"unknown pattern {family!r}; expected one of {sorted(PATTERNS)}")
    out = []
    for _, entries in builder(n):
        m = [[ZERO] * n for _ in range(n)]
        for (r, c), v in entries.items():
            m[c - 1][r - 1] = Fraction(v)
        out.append(Matrix.from_rows(m))
    return out


def matches_prop_pattern(space: DerivationSpace, family: str) -> bool:
    """True iff ``space`` is exactly the span of the reference pattern."""
    pats = pattern_matrices(family, space.algebra_dim)
    if space.dim != len(pats):
        return False
    return space.same_span(pats)


# -- nil-independence ------------------------------------------------------


@dataclass(frozen=True)
class PairReport:
    nil_independent: bool
    d1_nilpotent: bool
    d2_nilpotent: bool
    common_gcd: Poly | None
    rational_roots: tuple[Fraction, ...] = ()
    real_root_count: int | None = None
    reason: str = ""


def nil_independence_detail(d1: Matrix, d2: Matrix) -> PairReport:
    """Decide whether some ``a*d1 + b*d2`` with ``(a, b) != 0`` is nilpotent.

    The ray ``b = 0`` is covered by ``d1`` alone. Otherwise scale ``b = 1``
    and write ``t = a``: ``t*d1 + d2`` is nilpotent exactly when every
    non-leading coefficient of its characteristic polynomial vanishes at
    ``t``, i.e. at a root of their gcd. Any nonconstant gcd has a complex
    root, so it rules out nil-independence.
    """
    if not (d1.is_square() and d2.is_square()) or d1.shape != d2.shape:
        raise DimensionMismatchError(f"shapes {d1.shape} and {d2.shape}")
    n1 = is_nilpotent_matrix(d1)
    n2 = is_nilpotent_matrix(d2)
    if n1 or n2:
        return PairReport(False, n1, n2, None, reason="a generator is nilpotent")
    coeffs = char_poly_pencil(d1, d2)[1:]
    g = poly_gcd(*coeffs)
    if g.is_zero():
        return PairReport(
            False, n1, n2, g, reason="t*d1 + d2 is nilpotent for every t"
        )
    if g.degree == 0:
        return PairReport(True, n1, n2, g, real_root_count=0, reason="coefficients coprime")
    roots = tuple(rational_roots(g))
    real = count_real_roots(g)
    return PairReport(
        False,
        n1,
        n2,
        g,
        rational_roots=roots,
        real_root_count=real,
        reason=f"common factor {g} of degree {g.degree}",
    )


def nil_independent_pair(d1: Matrix, d2: Matrix) -> bool:
    return nil_independence_detail(d1, d2).nil_independent


def max_nil_independent_triangular(matrices: Sequence[Matrix]) -> int:
    """Maximal number of nil-independent elements in the span of ``matrices``.

    Only valid when all matrices are upper triangular, or all lower
    triangular: such a combination is nilpotent iff its diagonal vanishes,
    so the answer is the rank of the diagonal projection.

    Raises:
        NotTriangularError: if the shortcut does not apply.
    """
    mats = list(matrices)
    if not (
        all(m.is_upper_triangular() for m in mats) or all(m.is_lower_triangular() for m in mats)
    ):
        raise NotTriangularError("matrices are not simultaneously triangular")
    if not mats:
        return 0
    return rank(Matrix.from_rows([m.diagonal() for m in mats]))


def max_nil_independent_upper_triangular(space: DerivationSpace) -> int:
    """Diagonal-projection rank of a triangular derivation space.

    With column vectors the derivations of the filiform families come out
    lower triangular (their transposes are upper triangular), so either
    orientation is accepted.
    """
    return max_nil_independent_triangular(space.basis)


# -- extensions ------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionSpec:
    """Data of a solvable extension ``N + span{x_1..x_m}``.

    ``right_actions[s]`` is the matrix of ``e_i -> [e_i, x_s]`` on ``N``;
    ``left_actions[s][i]`` is ``[x_s, e_i]`` and ``mixed[s][t]`` is
    ``[x_s, x_t]``, both as coordinate vectors in ``N``.
    """

    nilradical: AlgebraTable
    right_actions: tuple[Matrix, ...]
    left_actions: tuple[tuple[Vector, ...], ...]
    mixed: tuple[tuple[Vector, ...], ...]
    labels: tuple[str, ...] = field(default=())

    @property
    def complement_dim(self) -> int:
        return len(self.right_actions)


def _complement_labels(m: int) -> list[str]:
    if m <= 2:
        return ["x", "y"][:m]
    return [f"x{s + 1}" for s in range(m)]


def assemble_extension(spec: ExtensionSpec) -> AlgebraTable:
    """Block table on ``e_1..e_n, x_1..x_m``.

    Raises:
        NotDerivationError: if a right action is not a derivation of ``N``.
        DimensionMismatchError: if the blocks have inconsistent sizes.
    """
    nil = spec.nilradical
    n, m = nil.dim, spec.complement_dim
    if len(spec.left_actions) != m or len(spec.mixed) != m:
        raise DimensionMismatchError("left_actions and mixed must have one row per x_s")
    for s, d in enumerate(spec.right_actions):
        if d.shape != (n, n):
            raise DimensionMismatchError(f"right action {s + 1} has shape {d.shape}")
        if not is_derivation(nil, d):
            raise NotDerivationError(f"right action {s + 1} is not a derivation of the nilradical")
    consts: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in nil.constants.items():
        consts[(i, j)] = dict(terms)

    def put(i: int, j: int, v: Sequence) -> None:
        if len(v) != n:
            raise DimensionMismatchError(f"product vector of length {len(v)}, expected {n}")
        terms = {k: Fraction(c) for k, c in enumerate(v) if c}
        if terms:
            consts[(i, j)] = terms

    for s in range(m):
        d = spec.right_actions[s]
        if len(spec.left_actions[s]) != n or len(spec.mixed[s]) != m:
            raise DimensionMismatchError(f"row {s + 1} of left_actions or mixed has wrong length")
        for i in range(n):
            put(i, n + s, d.column(i))
            put(n + s, i, spec.left_actions[s][i])
        for t in range(m):
            put(n + s, n + t, spec.mixed[s][t])
    labels = list(spec.labels) if spec.labels else list(nil.labels) + _complement_labels(m)
    return AlgebraTable(n + m, consts, labels)


def split_extension(r: AlgebraTable, n: int) -> ExtensionSpec:
    """Inverse of :func:`assemble_extension` for tables whose first ``n`` vectors span ``N``.

    Raises:
        ValueError: if some product involving ``x_s`` leaves ``N``.
    """
    m = r.dim - n
    nil_consts = {}
    for (i, j), terms in r.constants.items():
        if i < n and j < n:
            if any(k >= n for k, _ in terms):
                raise ValueError("first n basis vectors are not closed under the bracket")
            nil_consts[(i, j)] = terms
    nil = AlgebraTable(n, nil_consts, r.labels[:n])

    def head(v: Vector) -> Vector:
        if any(v[n:]):
            raise ValueError("a product with the complement leaves the first n coordinates")
        return v[:n]

    rights, lefts, mixed = [], [], []
    for s in range(m):
        rights.append(Matrix.from_columns([head(r.product(i, n + s)) for i in range(n)], rows=n))
        lefts.append(tuple(head(r.product(n + s, i)) for i in range(n)))
        mixed.append(tuple(head(r.product(n + s, n + t)) for t in range(m)))
    return ExtensionSpec(nil, tuple(rights), tuple(lefts), tuple(mixed), r.labels)


# -- nilradical certificate ------------------------------------------------

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class CertificateCheck:
    name: str
    status: str
    detail: str


@dataclass(frozen=True)
class NilradicalCertificate:
    checks: tuple[CertificateCheck, ...]

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if FAIL in states:
            return FAIL
        if INCONCLUSIVE in states:
            return INCONCLUSIVE
        return PASS

    @property
    def certified(self) -> bool:
        return self.status == PASS


def restricted_right_actions(r: AlgebraTable, candidate: Subspace) -> list[Matrix]:
    """``R_x`` restricted to ``candidate`` for each standard complement vector ``x``.

    Coordinates are taken in the echelon basis of ``candidate``, which must be
    an ideal.
    """
    comp = candidate.complement_indices()
    out = []
    for c in comp:
        x = basis_vector(r.dim, c)
        cols = [candidate.coordinates(bracket(r, u, x)) for u in candidate.basis]
        out.append(Matrix.from_columns(cols, rows=candidate.dim))
    return out


def certify_nilradical(r: AlgebraTable, candidate: Subspace) -> NilradicalCertificate:
    """Check that ``candidate`` is the nilradical of the solvable algebra ``r``.

    Checks, in order: two-sided ideal; nilpotent; complement acts by
    nil-independent right multiplications; ``2 dim N >= dim R``.
    """
    checks = []
    ideal = is_ideal(r, candidate)
    checks.append(
        CertificateCheck("ideal", PASS if ideal else FAIL, f"dim {candidate.dim} subspace")
    )
    if ideal:
        sub = restrict(r, candidate)
        idx = nilpotency_index(sub)
        checks.append(
            CertificateCheck(
                "nilpotent",
                PASS if idx is not None else FAIL,
                f"nilpotency index {idx}" if idx is not None else "lower central series stabilizes",
            )
        )
        checks.append(_nil_independence_check(restricted_right_actions(r, candidate)))
    else:
        checks.append(CertificateCheck("nilpotent", INCONCLUSIVE, "candidate is not an ideal"))
        checks.append(
            CertificateCheck("nil_independent", INCONCLUSIVE, "candidate is not an ideal")
        )
    ok = 2 * candidate.dim >= r.dim
    checks.append(
        CertificateCheck(
            "dimension_bound", PASS if ok else FAIL, f"dim N = {candidate.dim}, dim R = {r.dim}"
        )
    )
    return NilradicalCertificate(tuple(checks))


def _nil_independence_check(actions: list[Matrix]) -> CertificateCheck:
    m = len(actions)
    name = "nil_independent"
    if m == 0:
        return CertificateCheck(name, PASS, "empty complement")
    if m == 1:
        nil = is_nilpotent_matrix(actions[0])
        return CertificateCheck(
            name, FAIL if nil else PASS, "R_x nilpotent" if nil else "R_x non-nilpotent"
        )
    if m == 2:
        rep = nil_independence_detail(actions[0], actions[1])
        return CertificateCheck(name, PASS if rep.nil_independent else FAIL, rep.reason)
    try:
        k = max_nil_independent_triangular(actions)
    except NotTriangularError:
        return CertificateCheck(
            name, INCONCLUSIVE, f"{m} complement vectors with non-triangular actions"
        )
    return CertificateCheck(
        name, PASS if k == m else FAIL, f"diagonal projection rank {k} of {m}"
    )


def standard_subspace(dim: int, count: int) -> Subspace:
    """Span of the first ``count`` standard basis vectors."""
    return Subspace.coordinate(dim, range(count))
