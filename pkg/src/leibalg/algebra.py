"""Structure-constant tables and the basic invariants of Leibniz algebras.

A table stores ``[e_i, e_j] = sum_k c_ij^k e_k`` sparsely with 0-based
indices. Leibniz algebras here are *right* Leibniz algebras:

    [x, [y, z]] = [[x, y], z] - [[x, z], y]

i.e. every right multiplication ``y -> [y, x]`` is a derivation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatchError, NotAnIdealError, NotLeibnizError
from .linalg import (
    ONE,
    ZERO,
    EchelonBuilder,
    Matrix,
    Vector,
    basis_vector,
    inverse,
    kernel_basis,
    kernel_basis_sparse,
    row_space_basis,
    solve,
    vec_add,
    vec_is_zero,
    zero_vector,
)

Entry = tuple  # (k, Fraction)


class AlgebraTable:
    """Immutable multiplication table of a finite-dimensional algebra."""

    __slots__ = ("dim", "labels", "constants", "_prod")

    def __init__(
        self,
        dim: int,
        constants: Mapping[tuple[int, int], Mapping[int, object] | Iterable[tuple[int, object]]]
        | None = None,
        labels: Sequence[str] | None = None,
    ):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.dim = dim
        if labels is None:
            labels = [f"e{i + 1}" for i in range(dim)]
        if len(labels) != dim:
            raise DimensionMismatchError(f"{len(labels)} labels for dimension {dim}")
        self.labels: tuple[str, ...] = tuple(labels)
        table: dict[tuple[int, int], tuple[Entry, ...]] = {}
        for (i, j), terms in (constants or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"bracket index ({i}, {j}) out of range for dimension {dim}")
            items = terms.items() if isinstance(terms, Mapping) else terms
            acc: dict[int, Fraction] = {}
            for k, c in items:
                if not 0 <= k < dim:
                    raise IndexError(f"result index {k} out of range for dimension {dim}")
                acc[k] = acc.get(k, ZERO) + Fraction(c)
            cleaned = tuple(sorted((k, c) for k, c in acc.items() if c))
            if cleaned:
                table[(i, j)] = cleaned
        self.constants: dict[tuple[int, int], tuple[Entry, ...]] = dict(sorted(table.items()))
        self._prod: list[list[Vector]] | None = None

    def __setattr__(self, name, value):
        if name != "_prod" and hasattr(self, "_prod"):
            raise AttributeError("AlgebraTable is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraTable):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.labels == other.labels
            and self.constants == other.constants
        )

    def same_structure(self, other: AlgebraTable) -> bool:
        """Equal structure constants, ignoring basis labels."""
        return self.dim == other.dim and self.constants == other.constants

    def __hash__(self) -> int:
        return hash((self.dim, self.labels, tuple(self.constants.items())))

    def __repr__(self) -> str:
        return f"AlgebraTable(dim={self.dim}, nonzero_products={len(self.constants)})"

    def products(self) -> list[list[Vector]]:
        """Dense ``[e_i, e_j]`` vectors, computed once."""
        if self._prod is None:
            n = self.dim
            prod = [[zero_vector(n)] * n for _ in range(n)]
            for (i, j), terms in self.constants.items():
                v = [ZERO] * n
                for k, c in terms:
                    v[k] = c
                prod[i][j] = tuple(v)
            object.__setattr__(self, "_prod", prod)
        return self._prod

    def product(self, i: int, j: int) -> Vector:
        return self.products()[i][j]

    def format(self) -> str:
        """Human-readable multiplication table using the basis labels."""
        lines = []
        for (i, j), terms in self.constants.items():
            rhs = " + ".join(
                f"{c}*{self.labels[k]}" if c != 1 else self.labels[k] for k, c in terms
            ).replace("+ -", "- ")
            lines.append(f"[{self.labels[i]}, {self.labels[j]}] = {rhs}")
        return "\n".join(lines)


def abelian(dim: int) -> AlgebraTable:
    return AlgebraTable(dim, {})


# -- subspaces -------------------------------------------------------------


class Subspace:
    """Subspace of ``Q^n`` held as a reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Vector] = ()):
        self.ambient_dim = ambient_dim
        self.basis: tuple[Vector, ...] = tuple(row_space_basis(basis)) if basis else ()
        self.pivots: tuple[int, ...] = tuple(
            next(k for k, x in enumerate(v) if x) for v in self.basis
        )

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        vs = [tuple(Fraction(x) for x in v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in Q^{ambient_dim}")
        return cls(ambient_dim, [v for v in vs if not vec_is_zero(v)])

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, [basis_vector(n, i) for i in range(n)])

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> Subspace:
        """Span of the standard basis vectors with the given 0-based indices."""
        return cls(n, [basis_vector(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing every pivot coordinate."""
        r = list(v)
        for p, b in zip(self.pivots, self.basis):
            c = r[p]
            if c:
                for k, x in enumerate(b):
                    if x:
                        r[k] -= c * x
        return tuple(r)

    def contains(self, v: Sequence) -> bool:
        return vec_is_zero(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in :attr:`basis` (``v`` must lie in the subspace)."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(Fraction(v[p]) for p in self.pivots)

    def issubspace(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    __le__ = issubspace

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: Subspace) -> Subspace:
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        cols = list(self.basis) + [tuple(-x for x in w) for w in other.basis]
        m = Matrix.from_columns(cols, rows=self.ambient_dim)
        a = len(self.basis)
        vectors = []
        for kv in kernel_basis(m):
            vectors.append(_combine(kv[:a], self.basis, self.ambient_dim))
        return Subspace.span(vectors, self.ambient_dim)

    __and__ = intersection

    def complement_indices(self) -> list[int]:
        """Standard basis indices that together with the subspace span everything."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]


def _combine(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, x in enumerate(v):
                if x:
                    out[k] += c * x
    return tuple(out)


# -- bracket and identities ------------------------------------------------


def _check_vec(a: AlgebraTable, v: Sequence) -> None:
    if len(v) != a.dim:
        raise DimensionMismatchError(f"vector of length {len(v)} for algebra of dimension {a.dim}")


def bracket(a: AlgebraTable, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure constants to ``[x, y]``."""
    _check_vec(a, x)
    _check_vec(a, y)
    out = [ZERO] * a.dim
    consts = a.constants
    ys = [(j, Fraction(yj)) for j, yj in enumerate(y) if yj]
    for i, xi in enumerate(x):
        if not xi:
            continue
        xi = Fraction(xi)
        for j, yj in ys:
            terms = consts.get((i, j))
            if terms:
                c0 = xi * yj
                for k, c in terms:
                    out[k] += c0 * c
    return tuple(out)


def _bracket_basis_right(a: AlgebraTable, v: Vector, j: int) -> Vector:
    """``[v, e_j]``."""
    out = [ZERO] * a.dim
    prod = a.products()
    for i, vi in enumerate(v):
        if vi:
            for k, c in enumerate(prod[i][j]):
                if c:
                    out[k] += vi * c
    return tuple(out)


def _bracket_basis_left(a: AlgebraTable, j: int, v: Vector) -> Vector:
    """``[e_j, v]``."""
    out = [ZERO] * a.dim
    row = a.products()[j]
    for i, vi in enumerate(v):
        if vi:
            for k, c in enumerate(row[i]):
                if c:
                    out[k] += vi * c
    return tuple(out)


def leibniz_violations(a: AlgebraTable) -> list[tuple[int, int, int, Vector]]:
    """Basis triples ``(i, j, k)`` (0-based) where the Leibniz identity fails.

    The defect is ``[e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]``.
    Checking basis triples suffices by trilinearity.
    """
    n = a.dim
    prod = a.products()
    out = []
    for i, j, k in product(range(n), repeat=3):
        d = [ZERO] * n
        for m, c in a.constants.get((j, k), ()):
            for r, x in enumerate(prod[i][m]):
                if x:
                    d[r] += c * x
        for m, c in a.constants.get((i, j), ()):
            for r, x in enumerate(prod[m][k]):
                if x:
                    d[r] -= c * x
        for m, c in a.constants.get((i, k), ()):
            for r, x in enumerate(prod[m][j]):
                if x:
                    d[r] += c * x
        if any(d):
            out.append((i, j, k, tuple(d)))
    return out


def is_leibniz(a: AlgebraTable) -> bool:
    return not leibniz_violations(a)


def antisymmetry_violations(a: AlgebraTable) -> list[tuple[int, int, Vector]]:
    """Pairs ``i <= j`` (0-based) with ``[e_i, e_j] + [e_j, e_i] != 0``."""
    prod = a.products()
    out = []
    for i in range(a.dim):
        for j in range(i, a.dim):
            d = vec_add(prod[i][j], prod[j][i])
            if not vec_is_zero(d):
                out.append((i, j, d))
    return out


def is_lie(a: AlgebraTable) -> bool:
    return not antisymmetry_violations(a) and not leibniz_violations(a)


# -- multiplication operators ---------------------------------------------


def right_multiplication(a: AlgebraTable, x: Sequence) -> Matrix:
    """Matrix of ``y -> [y, x]`` (column ``j`` is ``[e_j, x]``)."""
    _check_vec(a, x)
    cols = [bracket(a, basis_vector(a.dim, j), x) for j in range(a.dim)]
    return Matrix.from_columns(cols, rows=a.dim)


def left_multiplication(a: AlgebraTable, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]``."""
    _check_vec(a, x)
    cols = [bracket(a, x, basis_vector(a.dim, j)) for j in range(a.dim)]
    return Matrix.from_columns(cols, rows=a.dim)


# -- ideals and series -----------------------------------------------------


def ideal_closure(a: AlgebraTable, seed: Subspace) -> Subspace:
    """Smallest two-sided ideal containing ``seed``."""
    n = a.dim
    eb = EchelonBuilder()
    queue: list[Vector] = []

    def push(v: Vector) -> None:
        if eb.add({k: x for k, x in enumerate(v) if x}):
            queue.append(v)

    for b in seed.basis:
        push(b)
    while queue:
        v = queue.pop()
        for j in range(n):
            push(_bracket_basis_right(a, v, j))
            push(_bracket_basis_left(a, j, v))
    return Subspace(n, [_sparse_dense(r, n) for _, r in eb.sorted_rows()])


def _sparse_dense(r: dict, n: int) -> Vector:
    out = [ZERO] * n
    for k, v in r.items():
        out[k] = v
    return tuple(out)


def is_ideal(a: AlgebraTable, s: Subspace) -> bool:
    """True iff ``s`` is a two-sided ideal of ``a``."""
    for v in s.basis:
        for j in range(a.dim):
            if not s.contains(_bracket_basis_right(a, v, j)):
                return False
            if not s.contains(_bracket_basis_left(a, j, v)):
                return False
    return True


def bracket_span(a: AlgebraTable, left: Subspace, right: Subspace) -> Subspace:
    """``span{[u, v] : u in left, v in right}``."""
    vectors = [bracket(a, u, v) for u in left.basis for v in right.basis]
    return Subspace.span(vectors, a.dim)


def _series(a: AlgebraTable, step) -> list[Subspace]:
    terms = [Subspace.full(a.dim)]
    for _ in range(a.dim + 1):
        cur = terms[-1]
        if cur.dim == 0:
            break
        nxt = step(cur)
        if nxt == cur:
            break
        terms.append(nxt)
    return terms


def lower_central_series(a: AlgebraTable) -> list[Subspace]:
    """``L^1 = L, L^{k+1} = [L^k, L]`` up to stabilization.

    The list ends either with the zero subspace or with the first term that
    equals its successor.
    """
    full = Subspace.full(a.dim)
    return _series(a, lambda cur: bracket_span(a, cur, full))


def derived_series(a: AlgebraTable) -> list[Subspace]:
    """``L^[1] = L, L^[s+1] = [L^[s], L^[s]]`` up to stabilization."""
    return _series(a, lambda cur: bracket_span(a, cur, cur))


def _index(series: list[Subspace]) -> int | None:
    return len(series) if series[-1].dim == 0 else None


def nilpotency_index(a: AlgebraTable) -> int | None:
    """Smallest ``k`` with ``L^k = 0``, or None for non-nilpotent algebras."""
    return _index(lower_central_series(a))


def solvability_index(a: AlgebraTable) -> int | None:
    """Smallest ``m`` with ``L^[m] = 0``, or None for non-solvable algebras."""
    return _index(derived_series(a))


def right_annihilator(a: AlgebraTable) -> Subspace:
    """``{x : [y, x] = 0 for all y}``."""
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in a.constants.items():
        for k, c in terms:
            rows.setdefault((i, k), {})[j] = c
    return Subspace(a.dim, kernel_basis_sparse(rows.values(), a.dim))


def center(a: AlgebraTable) -> Subspace:
    """``{x : [x, y] = 0 = [y, x] for all y}``."""
    rows: dict[tuple[str, int, int], dict[int, Fraction]] = {}
    for (i, j), terms in a.constants.items():
        for k, c in terms:
            rows.setdefault(("l", i, k), {})[j] = c
            rows.setdefault(("r", j, k), {})[i] = c
    return Subspace(a.dim, kernel_basis_sparse(rows.values(), a.dim))


def squares_ideal(a: AlgebraTable) -> Subspace:
    """Two-sided ideal generated by all squares ``[x, x]``.

    By polarization the squares span the same space as ``[e_i, e_i]`` and
    ``[e_i, e_j] + [e_j, e_i]``.
    """
    prod = a.products()
    gens = []
    for i in range(a.dim):
        gens.append(prod[i][i])
        for j in range(i + 1, a.dim):
            gens.append(vec_add(prod[i][j], prod[j][i]))
    return ideal_closure(a, Subspace.span(gens, a.dim))


def restrict(a: AlgebraTable, sub: Subspace) -> AlgebraTable:
    """Table of a subalgebra in the echelon basis of ``sub``.

    Raises:
        ValueError: if ``sub`` is not closed under the bracket.
    """
    consts = {}
    for p, u in enumerate(sub.basis):
        for q, v in enumerate(sub.basis):
            w = bracket(a, u, v)
            if vec_is_zero(w):
                continue
            if not sub.contains(w):
                raise ValueError("subspace is not a subalgebra")
            consts[(p, q)] = {k: c for k, c in enumerate(sub.coordinates(w)) if c}
    labels = [
        a.labels[piv] if u == basis_vector(a.dim, piv) else f"f{idx + 1}"
        for idx, (piv, u) in enumerate(zip(sub.pivots, sub.basis))
    ]
    return AlgebraTable(sub.dim, consts, labels)


def quotient(a: AlgebraTable, ideal: Subspace) -> AlgebraTable:
    """Quotient table on the lowest-index standard vectors avoiding the ideal's pivots.

    Raises:
        NotAnIdealError: if ``ideal`` is not a two-sided ideal.
    """
    if not is_ideal(a, ideal):
        raise NotAnIdealError("quotient requires a two-sided ideal")
    keep = ideal.complement_indices()
    pos = {old: new for new, old in enumerate(keep)}
    prod = a.products()
    consts = {}
    for p, i in enumerate(keep):
        for q, j in enumerate(keep):
            w = ideal.reduce(prod[i][j])
            terms = {pos[k]: c for k, c in enumerate(w) if c}
            if terms:
                consts[(p, q)] = terms
    return AlgebraTable(len(keep), consts, [a.labels[i] for i in keep])


# -- basis changes ---------------------------------------------------------


def change_basis(a: AlgebraTable, p: Matrix, labels: Sequence[str] | None = None) -> AlgebraTable:
    """Table of ``a`` in the basis formed by the columns of ``p``."""
    if p.shape != (a.dim, a.dim):
        raise DimensionMismatchError(f"basis change of shape {p.shape} for dimension {a.dim}")
    pinv = inverse(p)
    cols = [p.column(j) for j in range(a.dim)]
    consts = {}
    for i, u in enumerate(cols):
        for j, v in enumerate(cols):
            w = bracket(a, u, v)
            if not vec_is_zero(w):
                consts[(i, j)] = {k: c for k, c in enumerate(pinv @ w) if c}
    return AlgebraTable(a.dim, consts, labels if labels is not None else a.labels)


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Column ``i`` is the standard vector ``e_{perm[i]}``."""
    n = len(perm)
    return Matrix.from_columns([basis_vector(n, perm[i]) for i in range(n)], rows=n)


def permute(a: AlgebraTable, perm: Sequence[int]) -> AlgebraTable:
    """Relabel so that new basis vector ``i`` is old ``e_{perm[i]}``."""
    if sorted(perm) != list(range(a.dim)):
        raise ValueError("not a permutation")
    return change_basis(a, permutation_matrix(perm), [a.labels[k] for k in perm])


# -- natural graduation ----------------------------------------------------


def graded_table(a: AlgebraTable) -> AlgebraTable | None:
    """Associated graded algebra of the lower central filtration.

    Each quotient ``L^k / L^{k+1}`` is represented by standard basis vectors
    lying in ``L^k``; the result is expressed on the same index set as ``a``.
    Returns None when the algebra is not nilpotent or no such choice of
    standard vectors exists.
    """
    series = lower_central_series(a)
    if series[-1].dim != 0:
        return None
    n = a.dim
    degree: dict[int, int] = {}
    layers: list[list[int]] = []
    for k in range(len(series) - 1):
        upper, lower = series[k], series[k + 1]
        need = upper.dim - lower.dim
        eb = EchelonBuilder()
        for b in lower.basis:
            eb.add({i: x for i, x in enumerate(b) if x})
        chosen = []
        for c in range(n):
            if c in degree or not upper.contains(basis_vector(n, c)):
                continue
            if eb.add({c: ONE}):
                chosen.append(c)
                if len(chosen) == need:
                    break
        if len(chosen) != need:
            return None
        for c in chosen:
            degree[c] = k + 1
        layers.append(chosen)
    prod = a.products()
    consts = {}
    for i in range(n):
        for j in range(n):
            d = degree[i] + degree[j]
            if d > len(layers):
                continue
            w = prod[i][j]
            layer = layers[d - 1]
            lower = series[d] if d < len(series) else Subspace.zero(n)
            cols = [basis_vector(n, c) for c in layer] + list(lower.basis)
            sol = solve(Matrix.from_columns(cols, rows=n), w)
            if sol is None:
                return None
            terms = {c: sol[t] for t, c in enumerate(layer) if sol[t]}
            if terms:
                consts[(i, j)] = terms
    return AlgebraTable(n, consts, a.labels)


def is_naturally_graded(a: AlgebraTable) -> bool:
    """True iff the graded table built in the natural basis reproduces ``a``."""
    g = graded_table(a)
    return g is not None and g.same_structure(a)


# -- fingerprint -----------------------------------------------------------


@dataclass(frozen=True)
class InvariantFingerprint:
    dim: int
    lcs_dims: tuple[int, ...]
    ds_dims: tuple[int, ...]
    dim_center: int
    dim_right_annihilator: int
    dim_I: int
    dim_derivation_space: int
    is_lie: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        d["lcs_dims"] = list(self.lcs_dims)
        d["ds_dims"] = list(self.ds_dims)
        return d

    def differing_fields(self, other: InvariantFingerprint) -> list[str]:
        return [k for k, v in self.as_dict().items() if other.as_dict()[k] != v]


def fingerprint(a: AlgebraTable, require_leibniz: bool = True) -> InvariantFingerprint:
    """Isomorphism invariants of a Leibniz algebra.

    With ``require_leibniz=False`` the same quantities are computed for an
    arbitrary table (they are basis-independent for any bilinear product).

    Raises:
        NotLeibnizError: if the table violates the Leibniz identity.
    """
    from .derivations import derivation_space

    bad = leibniz_violations(a) if require_leibniz else None
    if bad:
        i, j, k, _ = bad[0]
        raise NotLeibnizError(
            f"Leibniz identity fails at ({i + 1}, {j + 1}, {k + 1}); "
            f"{len(bad)} violating triples"
        )
    return InvariantFingerprint(
        dim=a.dim,
        lcs_dims=tuple(s.dim for s in lower_central_series(a)),
        ds_dims=tuple(s.dim for s in derived_series(a)),
        dim_center=center(a).dim,
        dim_right_annihilator=right_annihilator(a).dim,
        dim_I=squares_ideal(a).dim,
        dim_derivation_space=len(derivation_space(a).basis),
        is_lie=not antisymmetry_violations(a),
    )
