"""Parametric constructors for the classified algebra families.

Every family is registered as a :class:`FamilySpec`. Tables are written with
1-based indices: ``e_1..e_N`` for the nilradical followed by ``x`` and
``y``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .algebra import AlgebraTable
from .errors import ParameterError

Params = Mapping[str, Fraction]


class _Builder:
    """Accumulates ``[e_i, e_j] += c e_k`` with 1-based indices."""

    def __init__(self, dim: int, labels: list[str]):
        self.dim = dim
        self.labels = labels
        self.consts: dict[tuple[int, int], dict[int, Fraction]] = {}

    def add(self, i: int, j: int, k: int, c=1) -> None:
        c = Fraction(c)
        if not c:
            return
        row = self.consts.setdefault((i - 1, j - 1), {})
        row[k - 1] = row.get(k - 1, Fraction(0)) + c

    def anti(self, i: int, j: int, k: int, c=1) -> None:
        """``[e_i, e_j] = -[e_j, e_i] += c e_k``."""
        self.add(i, j, k, c)
        self.add(j, i, k, -c)

    def table(self) -> AlgebraTable:
        return AlgebraTable(self.dim, self.consts, self.labels)


def _labels(n: int, extra: int) -> list[str]:
    return [f"e{i}" for i in range(1, n + 1)] + ["x", "y"][:extra]


# -- nilpotent bases -------------------------------------------------------


def _nf(b: _Builder, n: int) -> None:
    for i in range(1, n):
        b.add(i, 1, i + 1)


def _nn1(b: _Builder, n: int) -> None:
    for i in range(2, n):
        b.anti(i, 1, i + 1)


def _q2n(b: _Builder, n: int) -> None:
    for i in range(2, 2 * n - 1):
        b.anti(i, 1, i + 1)
    for i in range(2, n + 1):
        b.anti(i, 2 * n + 1 - i, 2 * n, (-1) ** i)


def _f1(b: _Builder, n: int) -> None:
    b.add(1, 1, 3)
    for i in range(2, n):
        b.add(i, 1, i + 1)


def _f2(b: _Builder, n: int) -> None:
    b.add(1, 1, 3)
    for i in range(3, n):
        b.add(i, 1, i + 1)


# -- family constructors ---------------------------------------------------
# Each takes (builder, n, params); x = N + 1 and y = N + 2 where N is the
# nilradical dimension.


def _build_nf(b, n, p):
    _nf(b, n)


def _build_nn1(b, n, p):
    _nn1(b, n)


def _build_q2n(b, n, p):
    _q2n(b, n)


def _build_f1(b, n, p):
    _f1(b, n)


def _build_f2(b, n, p):
    _f2(b, n)


def _s_alpha_beta(b, n, alpha, beta):
    x = n + 1
    _nn1(b, n)
    for i in range(2, n + 1):
        b.anti(i, x, i, (i - 2) * alpha + beta)
    b.anti(1, x, 1, alpha)


def _build_s_n1(b, n, p):
    _s_alpha_beta(b, n, p["alpha"], p["beta"])


def _build_s_n1_1(b, n, p):
    _s_alpha_beta(b, n, 1, p["beta"])


def _build_s_n1_2(b, n, p):
    _s_alpha_beta(b, n, 0, 1)


def _build_s_n1_3(b, n, p):
    x = n + 1
    _nn1(b, n)
    for i in range(2, n + 1):
        b.anti(i, x, i, i - 1)
    b.anti(1, x, 1)
    b.anti(1, x, 2)


def _build_s_n1_4(b, n, p):
    x = n + 1
    _nn1(b, n)
    for i in range(2, n + 1):
        b.anti(i, x, i)
        for l in range(i + 2, n + 1):
            b.anti(i, x, l, p[f"a{l + 1 - i}"])


def _build_s_n2(b, n, p):
    x, y = n + 1, n + 2
    _nn1(b, n)
    for i in range(2, n + 1):
        b.anti(i, x, i, i - 2)
        b.anti(i, y, i)
    b.anti(1, x, 1)


def _build_q2n1_1(b, n, p):
    a = p["alpha"]
    x = 2 * n + 1
    _q2n(b, n)
    b.anti(1, x, 1)
    for i in range(2, 2 * n):
        b.anti(i, x, i, i - 2 + a)
    # weight of e_{2n} is the sum of the weights of e_i and e_{2n+1-i}
    b.anti(2 * n, x, 2 * n, 2 * n - 3 + 2 * a)


def _build_q2n1_2(b, n, p):
    x = 2 * n + 1
    _q2n(b, n)
    b.anti(1, x, 1)
    b.anti(1, x, 2 * n, p["eps"])
    for i in range(2, 2 * n):
        b.anti(i, x, i, i - n)
    b.anti(2 * n, x, 2 * n)


def _build_q2n1_3(b, n, p):
    a = p["alpha"]
    x = 2 * n + 1
    _q2n(b, n)
    for i in range(0, 2 * n - 5):
        b.anti(2 + i, x, 2 + i)
        # the tail runs up to e_{2n-1}, the top of the e_1-chain
        for k in range(2, (2 * n - 2 - i) // 2 + 1):
            b.anti(2 + i, x, 2 * k + 1 + i, a ** (2 * k + 1))
    for i in (1, 2, 3):
        b.anti(2 * n - i, x, 2 * n - i)
    b.anti(2 * n, x, 2 * n, 2)


def _build_q2n2(b, n, p):
    x, y = 2 * n + 1, 2 * n + 2
    _q2n(b, n)
    for i in range(1, 2 * n):
        b.anti(i, x, i, i)
    b.anti(2 * n, x, 2 * n, 2 * n + 1)
    # e_1 has y-weight 0 so that [e_i, e_1] = e_{i+1} is homogeneous
    for i in range(2, 2 * n):
        b.anti(i, y, i)
    b.anti(2 * n, y, 2 * n, 2)


def _build_r_n1_gamma(b, n, p):
    g1, g2, g3 = p["gamma1"], p["gamma2"], p["gamma3"]
    x = n + 1
    _nn1(b, n)
    b.add(1, x, 1)
    b.add(x, 1, 1, -1)
    b.add(x, 1, n, g1)
    b.add(2, x, 2, 2 - n)
    b.add(x, 2, 2, n - 2)
    b.add(x, 2, n, g2)
    for i in range(3, n):
        b.anti(i, x, i, i - n)
    b.add(x, x, n, g3)


def _build_r_2n1_gamma(b, n, p):
    g1, g2, g3 = p["gamma1"], p["gamma2"], p["gamma3"]
    top = 2 * n
    x = top + 1
    w2 = Fraction(-(2 * n - 3), 2)
    _q2n(b, n)
    b.add(1, x, 1)
    b.add(x, 1, 1, -1)
    b.add(x, 1, top, g1)
    b.add(2, x, 2, w2)
    b.add(x, 2, 2, -w2)
    b.add(x, 2, top, g2)
    for i in range(3, top):
        b.anti(i, x, i, Fraction(2 * i - 2 * n - 1, 2))
    b.add(x, x, top, g3)


def _build_r4_1(b, n, p):
    x = n + 1
    _f1(b, n)
    b.add(1, x, 1, -1)
    b.add(2, x, 2, -1)
    b.add(2, x, n, p["alpha"])
    b.add(x, 1, 1)
    for i in range(3, n + 1):
        b.add(i, x, i, -(i - 1))


def _r4_common(b, n, p):
    x = n + 1
    _f1(b, n)
    b.add(1, x, 2)
    b.add(2, x, 2)
    for i in range(4, n):
        b.add(1, x, i, p[f"alpha{i}"])
        b.add(2, x, i, p[f"alpha{i}"])
    for i in range(3, n + 1):
        b.add(i, x, i)
        for j in range(i + 2, n + 1):
            b.add(i, x, j, p[f"alpha{j - i + 2}"])


def _build_r4_2(b, n, p):
    _r4_common(b, n, p)
    b.add(1, n + 1, n, p["alpha"])


def _build_r4_3(b, n, p):
    _r4_common(b, n, p)
    b.add(2, n + 1, n, 1)


def _r6_base(b, n):
    x = n + 1
    _f2(b, n)
    b.add(1, x, 1, -1)
    for i in range(3, n + 1):
        b.add(i, x, i, -(i - 1))
    b.add(x, 1, 1)


def _build_r6_1(b, n, p):
    _r6_base(b, n)
    b.add(n + 1, n + 1, 2, p["alpha"])


def _build_r6_2(b, n, p):
    _r6_base(b, n)
    b.add(2, n + 1, 2, p["alpha"])


def _build_r6_3(b, n, p):
    _r6_base(b, n)
    b.add(2, n + 1, 2, 1 - n)
    b.add(2, n + 1, n, 1)


def _build_r6_4(b, n, p):
    x = n + 1
    _r6_base(b, n)
    b.add(2, x, 2, -p["alpha"])
    b.add(x, 2, 2, p["alpha"])


def _build_r6_5(b, n, p):
    x = n + 1
    a = p["alpha"]
    _r6_base(b, n)
    b.add(1, x, 2, -a)
    b.add(x, 1, 2, a)
    b.add(2, x, 2, -1)
    b.add(x, 2, 2, 1)


def _build_r6_6(b, n, p):
    x = n + 1
    _f2(b, n)
    for i in range(3, n + 1):
        b.add(1, x, i, p[f"alpha{i}"])
    for i in range(3, n):
        for j in range(i + 1, n + 1):
            b.add(i, x, j, p[f"alpha{j - i + 2}"])
    b.add(x, x, n, p["lambda"])
    b.add(2, x, 2)
    b.add(x, 2, 2, p["delta"])


def _l_common(b, n):
    x = n + 1
    _f2(b, n)
    b.add(1, x, 1)
    b.add(x, 1, 1, -1)
    for i in range(3, n + 1):
        b.add(i, x, i, i - 1)


def _build_l_1(b, n, p):
    _l_common(b, n)
    b.anti(2, n + 2, 2)


def _build_l_2(b, n, p):
    _l_common(b, n)
    b.add(2, n + 2, 2)


# -- registry --------------------------------------------------------------


def _no_params(n: int) -> list[str]:
    return []


def _fixed(*names: str) -> Callable[[int], list[str]]:
    return lambda n: list(names)


def _in(values: Iterable[int]) -> Callable[[Fraction], bool]:
    allowed = {Fraction(v) for v in values}
    return lambda v: v in allowed


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    source: str
    nil_dim: Callable[[int], int]
    extra: int
    n_min: int
    param_names: Callable[[int], list[str]]
    builder: Callable
    is_lie: bool
    nilradical: str | None = None
    dim_formula: str = "n"
    constraints: Mapping[str, tuple[str, Callable[[Fraction], bool]]] = field(default_factory=dict)
    global_constraint: tuple[str, Callable[[Params], bool]] | None = None

    def dim(self, n: int) -> int:
        return self.nil_dim(n) + self.extra

    @property
    def solvable_extension(self) -> bool:
        return self.extra > 0


def _ident(n: int) -> int:
    return n


def _double(n: int) -> int:
    return 2 * n


def _nonzero(v: Fraction) -> bool:
    return v != 0


def _not_one(v: Fraction) -> bool:
    return v != 1


def _gamma_not_zero(p: Params) -> bool:
    return any(p[k] for k in ("gamma1", "gamma2", "gamma3"))


def _ab_not_zero(p: Params) -> bool:
    return bool(p["alpha"] or p["beta"])


_GAMMA_RULE = ("(gamma1, gamma2, gamma3) != (0, 0, 0)", _gamma_not_zero)
_BIN = ("in {0, 1}", _in((0, 1)))

FAMILIES: dict[str, FamilySpec] = {}


def _register(spec: FamilySpec) -> None:
    FAMILIES[spec.family_id] = spec


_register(FamilySpec("NF", "null-filiform Leibniz algebra NF_n", _ident, 0, 2, _no_params,
                     _build_nf, False, dim_formula="n"))
_register(FamilySpec("n_n1", "naturally graded filiform Lie algebra n_{n,1}", _ident, 0, 3,
                     _no_params, _build_nn1, True, dim_formula="n"))
_register(FamilySpec("Q2n", "naturally graded filiform Lie algebra Q_{2n}", _double, 0, 3,
                     _no_params, _build_q2n, True, dim_formula="2n"))
_register(FamilySpec("F1", "naturally graded filiform non-Lie Leibniz algebra F_n^1", _ident,
                     0, 3, _no_params, _build_f1, False, dim_formula="n"))
_register(FamilySpec("F2", "naturally graded filiform non-Lie Leibniz algebra F_n^2", _ident,
                     0, 3, _no_params, _build_f2, False, dim_formula="n"))
_register(FamilySpec("S_n1", "solvable Lie algebra S_{n+1}(alpha, beta) over n_{n,1}", _ident,
                     1, 4, _fixed("alpha", "beta"), _build_s_n1, True, "n_n1", "n+1",
                     global_constraint=("(alpha, beta) != (0, 0)", _ab_not_zero)))
_register(FamilySpec("S_n1_1", "solvable Lie algebra S_{n+1,1}(beta) = S_{n+1}(1, beta)",
                     _ident, 1, 4, _fixed("beta"), _build_s_n1_1, True, "n_n1", "n+1"))
_register(FamilySpec("S_n1_2", "solvable Lie algebra S_{n+1,2} = S_{n+1}(0, 1)", _ident, 1, 4,
                     _no_params, _build_s_n1_2, True, "n_n1", "n+1"))
_register(FamilySpec("S_n1_3", "solvable Lie algebra S_{n+1,3} over n_{n,1}", _ident, 1, 4,
                     _no_params, _build_s_n1_3, True, "n_n1", "n+1"))
_register(FamilySpec("S_n1_4", "solvable Lie algebra S_{n+1,4}(a_3..a_{n-1}) over n_{n,1}",
                     _ident, 1, 4, lambda n: [f"a{k}" for k in range(3, n)], _build_s_n1_4,
                     True, "n_n1", "n+1"))
_register(FamilySpec("S_n2", "solvable Lie algebra S_{n+2} over n_{n,1}", _ident, 2, 4,
                     _no_params, _build_s_n2, True, "n_n1", "n+2"))
_register(FamilySpec("Q2n1_1", "solvable Lie algebra Q_{2n+1,1}(alpha) over Q_{2n}", _double,
                     1, 3, _fixed("alpha"), _build_q2n1_1, True, "Q2n", "2n+1"))
_register(FamilySpec("Q2n1_2", "solvable Lie algebra Q_{2n+1,2}(eps) over Q_{2n}", _double, 1,
                     3, _fixed("eps"), _build_q2n1_2, True, "Q2n", "2n+1",
                     constraints={"eps": _BIN}))
_register(FamilySpec("Q2n1_3", "solvable Lie algebra Q_{2n+1,3}(alpha) over Q_{2n}", _double,
                     1, 3, _fixed("alpha"), _build_q2n1_3, True, "Q2n", "2n+1"))
_register(FamilySpec("Q2n2", "solvable Lie algebra Q_{2n+2} over Q_{2n}", _double, 2, 3,
                     _no_params, _build_q2n2, True, "Q2n", "2n+2"))
_register(FamilySpec("R_n1_gamma", "solvable Leibniz family R_{n+1,1}(gamma1, gamma2, gamma3) "
                     "over n_{n,1}", _ident, 1, 4, _fixed("gamma1", "gamma2", "gamma3"),
                     _build_r_n1_gamma, False, "n_n1", "n+1", global_constraint=_GAMMA_RULE))
_register(FamilySpec("R_2n1_gamma", "solvable Leibniz family R_{2n+1,1}(gamma1, gamma2, "
                     "gamma3) over Q_{2n}", _double, 1, 3, _fixed("gamma1", "gamma2", "gamma3"),
                     _build_r_2n1_gamma, False, "Q2n", "2n+1", global_constraint=_GAMMA_RULE))
_register(FamilySpec("R4_1", "solvable Leibniz algebra R_1(alpha) over F_n^1", _ident, 1, 4,
                     _fixed("alpha"), _build_r4_1, False, "F1", "n+1",
                     constraints={"alpha": _BIN}))
_register(FamilySpec("R4_2", "solvable Leibniz algebra R_2(alpha_4..alpha_{n-1}, alpha) over "
                     "F_n^1", _ident, 1, 4,
                     lambda n: [f"alpha{k}" for k in range(4, n)] + ["alpha"], _build_r4_2,
                     False, "F1", "n+1"))
_register(FamilySpec("R4_3", "solvable Leibniz algebra R_3(alpha_4..alpha_{n-1}) over F_n^1",
                     _ident, 1, 4, lambda n: [f"alpha{k}" for k in range(4, n)], _build_r4_3,
                     False, "F1", "n+1"))
_register(FamilySpec("R6_1", "solvable Leibniz algebra R_1(alpha) over F_n^2", _ident, 1, 4,
                     _fixed("alpha"), _build_r6_1, False, "F2", "n+1",
                     constraints={"alpha": _BIN}))
_register(FamilySpec("R6_2", "solvable Leibniz algebra R_2(alpha) over F_n^2", _ident, 1, 4,
                     _fixed("alpha"), _build_r6_2, False, "F2", "n+1",
                     constraints={"alpha": ("nonzero", _nonzero)}))
_register(FamilySpec("R6_3", "solvable Leibniz algebra R_3 over F_n^2", _ident, 1, 4,
                     _no_params, _build_r6_3, False, "F2", "n+1"))
_register(FamilySpec("R6_4", "solvable Leibniz algebra R_4(alpha) over F_n^2", _ident, 1, 4,
                     _fixed("alpha"), _build_r6_4, False, "F2", "n+1",
                     constraints={"alpha": ("different from 1", _not_one)}))
_register(FamilySpec("R6_5", "solvable Leibniz algebra R_5(alpha) over F_n^2", _ident, 1, 4,
                     _fixed("alpha"), _build_r6_5, False, "F2", "n+1",
                     constraints={"alpha": _BIN}))
_register(FamilySpec("R6_6", "solvable Leibniz algebra R_6(alpha_3..alpha_n, lambda, delta) "
                     "over F_n^2", _ident, 1, 4,
                     lambda n: [f"alpha{k}" for k in range(3, n + 1)] + ["lambda", "delta"],
                     _build_r6_6, False, "F2", "n+1",
                     constraints={"delta": ("in {0, -1}", _in((0, -1)))}))
_register(FamilySpec("L_1", "solvable Leibniz algebra L_1 over F_n^2", _ident, 2, 4,
                     _no_params, _build_l_1, False, "F2", "n+2"))
_register(FamilySpec("L_2", "solvable Leibniz algebra L_2 over F_n^2", _ident, 2, 4,
                     _no_params, _build_l_2, False, "F2", "n+2"))

# Families known not to exist; kept for the index.
ABSENT = [
    {"description": "(n+2)-dimensional solvable Leibniz algebras with nilradical F_n^1",
     "status": "none exist"},
    {"description": "(n+2)-dimensional solvable non-Lie Leibniz algebras with nilradical n_{n,1}",
     "status": "none exist"},
]

NILPOTENT = ("NF", "n_n1", "Q2n", "F1", "F2")


def get_family(family_id: str) -> FamilySpec:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise ParameterError(
            f"unknown family {family_id!r}; known: {', '.join(FAMILIES)}"
        ) from None


# -- entries ---------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    family_id: str
    n: int
    params: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def make(cls, family_id: str, n: int, params: Mapping[str, object] | None = None,
             **kw) -> CatalogEntry:
        """Build and validate an entry; missing parameters default to 0."""
        spec = get_family(family_id)
        given = dict(params or {})
        given.update(kw)
        names = spec.param_names(n) if n >= spec.n_min else []
        unknown = set(given) - set(names)
        if unknown:
            raise ParameterError(
                f"{family_id}: unknown parameter(s) {sorted(unknown)}; expected {names}"
            )
        try:
            vals = tuple((k, Fraction(given.get(k, 0))) for k in names)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParameterError(f"{family_id}: bad parameter value ({exc})") from None
        entry = cls(family_id, n, vals)
        entry.validate()
        return entry

    @property
    def spec(self) -> FamilySpec:
        return get_family(self.family_id)

    @property
    def param_dict(self) -> dict[str, Fraction]:
        return dict(self.params)

    @property
    def dim(self) -> int:
        return self.spec.dim(self.n)

    @property
    def nil_dim(self) -> int:
        return self.spec.nil_dim(self.n)

    def validate(self) -> None:
        spec = self.spec
        if self.n < spec.n_min:
            raise ParameterError(f"{self.family_id} requires n >= {spec.n_min}, got {self.n}")
        names = spec.param_names(self.n)
        if [k for k, _ in self.params] != names:
            raise ParameterError(f"{self.family_id}: parameters must be {names}")
        p = self.param_dict
        for name, (text, ok) in spec.constraints.items():
            if not ok(p[name]):
                raise ParameterError(f"{self.family_id}: {name} = {p[name]} violates {name} {text}")
        if spec.global_constraint and not spec.global_constraint[1](p):
            raise ParameterError(f"{self.family_id}: requires {spec.global_constraint[0]}")

    def label(self) -> str:
        if not self.params:
            return f"{self.family_id}(n={self.n})"
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family_id}(n={self.n}; {inner})"


def construct(entry: CatalogEntry) -> AlgebraTable:
    """Structure-constant table of a catalog entry.

    Raises:
        ParameterError: for an invalid ``n`` or parameter vector.
    """
    entry.validate()
    spec = entry.spec
    nd = spec.nil_dim(entry.n)
    b = _Builder(spec.dim(entry.n), _labels(nd, spec.extra))
    spec.builder(b, entry.n, entry.param_dict)
    return b.table()


def build(family_id: str, n: int, **params) -> AlgebraTable:
    """Shorthand for ``construct(CatalogEntry.make(...))``."""
    return construct(CatalogEntry.make(family_id, n, params))


# -- sample parameter instances --------------------------------------------


def sample_entries(family_id: str, n: int) -> list[CatalogEntry]:
    """A fixed set of admissible instances used by the verification harness."""
    spec = get_family(family_id)
    names = spec.param_names(n)
    make = lambda **kw: CatalogEntry.make(family_id, n, kw)  # noqa: E731
    fid = family_id
    if not names:
        return [make()]
    if fid == "S_n1":
        return [make(alpha=1, beta=Fraction(1, 2)), make(alpha=0, beta=1),
                make(alpha=2, beta=-3)]
    if fid == "S_n1_1":
        return [make(beta=0), make(beta=Fraction(-2, 3)), make(beta=2 - n)]
    if fid in ("Q2n1_1", "Q2n1_3"):
        return [make(alpha=0), make(alpha=1), make(alpha=Fraction(-1, 2))]
    if fid == "Q2n1_2":
        return [make(eps=0), make(eps=1)]
    if fid in ("R_n1_gamma", "R_2n1_gamma"):
        return [make(gamma1=g1, gamma2=g2, gamma3=g3)
                for g1, g2, g3 in ((0, 0, 1), (0, 1, 0), (1, 1, 0), (1, 0, 0), (2, -3, 5))]
    if fid in ("R4_1", "R6_1", "R6_5"):
        return [make(alpha=0), make(alpha=1)]
    if fid == "R6_2":
        return [make(alpha=1), make(alpha=Fraction(-5, 2)), make(alpha=1 - n)]
    if fid == "R6_4":
        return [make(alpha=0), make(alpha=2), make(alpha=Fraction(-1, 3))]
    # families with a list of free tail parameters
    free = [k for k in names if k != "delta"]
    ramp = {k: Fraction(idx + 1, 2) * (-1) ** idx for idx, k in enumerate(free)}
    zero = {k: 0 for k in free}
    if fid == "R6_6":
        return [make(delta=0, **zero), make(delta=0, **ramp), make(delta=-1, **ramp)]
    return [make(**zero), make(**ramp)]


# -- index -----------------------------------------------------------------


def _constraint_texts(spec: FamilySpec) -> list[str]:
    out = [f"n >= {spec.n_min}"]
    out += [f"{k} {text}" for k, (text, _) in spec.constraints.items()]
    if spec.global_constraint:
        out.append(spec.global_constraint[0])
    return out


def catalog_index() -> list[dict]:
    """One record per family: id, description, dimension formula, parameters, constraints."""
    rows = []
    for spec in FAMILIES.values():
        rows.append({
            "family_id": spec.family_id,
            "source": spec.source,
            "dim_formula": spec.dim_formula,
            "param_names": _param_names_text(spec),
            "constraints": _constraint_texts(spec),
            "nilradical": spec.nilradical,
            "is_lie": spec.is_lie,
        })
    return rows


def _param_names_text(spec: FamilySpec) -> list[str]:
    fid = spec.family_id
    if fid == "S_n1_4":
        return ["a3", "...", "a{n-1}"]
    if fid == "R4_2":
        return ["alpha4", "...", "alpha{n-1}", "alpha"]
    if fid == "R4_3":
        return ["alpha4", "...", "alpha{n-1}"]
    if fid == "R6_6":
        return ["alpha3", "...", "alpha{n}", "lambda", "delta"]
    return spec.param_names(spec.n_min)


def catalog_index_json() -> str:
    return json.dumps({"families": catalog_index(), "absent": ABSENT}, indent=2) + "\n"
