"""Per-family verification bundles and report assembly."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import (
    AlgebraTable,
    Subspace,
    antisymmetry_violations,
    bracket,
    derived_series,
    fingerprint,
    is_naturally_graded,
    leibniz_violations,
    lower_central_series,
    permute,
    quotient,
    right_annihilator,
    squares_ideal,
)
from .catalog import NILPOTENT, CatalogEntry, FamilySpec, construct, get_family, sample_entries
from .derivations import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    certify_nilradical,
    derivation_space,
    matches_prop_pattern,
    max_nil_independent_upper_triangular,
    standard_subspace,
)
from .errors import ParameterError
from .normalization import CANONICAL_GAMMAS, verify_split_decomposition

EXIT_CODES = {PASS: 0, FAIL: 1, INCONCLUSIVE: 2}


@dataclass(frozen=True)
class Check:
    name: str
    n: int
    instance: str
    status: str
    detail: str

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "instance": self.instance,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    target: str
    n_range: tuple[int, int]
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if FAIL in states:
            return FAIL
        if INCONCLUSIVE in states or not self.checks:
            return INCONCLUSIVE
        return PASS

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "n_range": list(self.n_range),
            "status": self.status,
            "checks": [c.as_dict() for c in self.checks],
            "elapsed": round(self.elapsed, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def format_text(self) -> str:
        lines = [f"{self.target}  n = {self.n_range[0]}..{self.n_range[1]}"]
        width = max((len(c.name) for c in self.checks), default=4)
        for c in self.checks:
            lines.append(
                f"  n={c.n:<3} {c.name:<{width}}  {c.status.upper():<12} {c.instance}: {c.detail}"
            )
        counts = {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, INCONCLUSIVE)}
        lines.append(
            f"overall: {self.status.upper()} ({counts[PASS]} pass, {counts[FAIL]} fail, "
            f"{counts[INCONCLUSIVE]} inconclusive) in {self.elapsed:.2f}s"
        )
        return "\n".join(lines) + "\n"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


# -- individual checks -----------------------------------------------------


def _lcs_law(spec: FamilySpec, n: int, dims: list[int]) -> tuple[bool, str]:
    N = spec.nil_dim(n)
    if spec.family_id == "NF":
        expected = [N + 1 - i for i in range(1, N + 2)]
        return dims == expected, f"dim L^i = {dims}, expected n+1-i"
    expected = [N] + [N - i for i in range(2, N + 1)]
    ok = dims == expected
    return ok, f"dim L^i = {dims}, expected n-i for 2 <= i <= n"


def nilpotent_checks(spec: FamilySpec, n: int, a: AlgebraTable, tag: str) -> list[Check]:
    out = []
    dims = [s.dim for s in lower_central_series(a)]
    ok, detail = _lcs_law(spec, n, dims)
    out.append(Check("lcs_dims", n, tag, _status(ok), detail))
    idx = len(dims) if dims[-1] == 0 else None
    N = spec.nil_dim(n)
    expected_idx = N + 1 if spec.family_id == "NF" else N
    out.append(
        Check("nilindex", n, tag, _status(idx == expected_idx), f"{idx} (expected {expected_idx})")
    )
    out.append(
        Check("natural_graduation", n, tag, _status(is_naturally_graded(a)),
              "graded table equals the original")
    )
    if spec.family_id in ("F1", "F2"):
        space = derivation_space(a)
        want = n + 1 if spec.family_id == "F1" else n + 2
        out.append(Check("dim_der", n, tag, _status(space.dim == want),
                         f"dim Der = {space.dim} (expected {want})"))
        match = matches_prop_pattern(space, spec.family_id)
        out.append(Check("derivation_pattern", n, tag, _status(match),
                         "pattern: match" if match else "pattern: mismatch"))
        k = max_nil_independent_upper_triangular(space)
        out.append(Check("max_nil_independent", n, tag, _status(k == 2),
                         f"{k} (expected 2; derived justification: diagonal-projection rank)"))
    return out


def solvable_checks(spec: FamilySpec, n: int, a: AlgebraTable, tag: str) -> list[Check]:
    out = []
    N = spec.nil_dim(n)
    nil = standard_subspace(a.dim, N)
    cert = certify_nilradical(a, nil)
    detail = "; ".join(f"{c.name}={c.status} ({c.detail})" for c in cert.checks)
    out.append(Check("nilradical_certificate", n, tag, cert.status, detail))
    sq, ann = squares_ideal(a), right_annihilator(a)
    out.append(Check("squares_in_right_annihilator", n, tag, _status(sq <= ann),
                     f"dim I = {sq.dim}, dim Ann_r = {ann.dim}"))
    ds = derived_series(a)
    out.append(Check("solvable", n, tag, _status(ds[-1].dim == 0),
                     f"derived dims {[s.dim for s in ds]}"))
    lcs = lower_central_series(a)
    out.append(Check("not_nilpotent", n, tag, _status(lcs[-1].dim != 0),
                     f"lower central dims {[s.dim for s in lcs]}"))
    sq_in = all(
        nil.contains(a.product(i, j)) for i in range(a.dim) for j in range(a.dim)
    )
    out.append(Check("square_in_nilradical", n, tag, _status(sq_in), "R^2 inside N"))
    if spec.family_id in ("R_n1_gamma", "R_2n1_gamma"):
        top = Subspace.coordinate(a.dim, [N - 1])
        out.append(Check("squares_ideal_is_top", n, tag, _status(sq == top),
                         f"I has dimension {sq.dim}"))
    if spec.family_id in ("L_1", "L_2"):
        s1, s2 = split_ideals(n)
        ok = verify_split_decomposition(a, s1, s2)
        out.append(Check("split_decomposition", n, tag, _status(ok),
                         "span{e1, e3..en, x} + span{e2, y}"))
    return out


def split_ideals(n: int) -> tuple[Subspace, Subspace]:
    """The two ideals of ``L_1``/``L_2`` (dimension ``n + 2``)."""
    d = n + 2
    s1 = Subspace.coordinate(d, [0] + list(range(2, n)) + [n])
    s2 = Subspace.coordinate(d, [1, n + 1])
    return s1, s2


def common_checks(spec: FamilySpec, n: int, a: AlgebraTable, tag: str) -> list[Check]:
    out = []
    bad = leibniz_violations(a)
    if bad:
        i, j, k, _ = bad[0]
        detail = (f"{len(bad)} violating triples, first "
                  f"({a.labels[i]}, {a.labels[j]}, {a.labels[k]})")
    else:
        detail = "no violations"
    out.append(Check("leibniz_identity", n, tag, _status(not bad), detail))
    lie = not antisymmetry_violations(a)
    out.append(Check("lie_type", n, tag, _status(lie == spec.is_lie),
                     f"{'Lie' if lie else 'non-Lie'} (expected {'Lie' if spec.is_lie else 'non-Lie'})"))
    if not lie:
        q = quotient(a, squares_ideal(a))
        ok = not antisymmetry_violations(q) and not leibniz_violations(q)
        out.append(Check("quotient_is_lie", n, tag, _status(ok), f"dim L/I = {q.dim}"))
    if bad:
        out.append(Check("fingerprint", n, tag, INCONCLUSIVE,
                         "undefined for a table violating the Leibniz identity"))
    else:
        fp = fingerprint(a)
        consistent = (
            list(fp.lcs_dims) == sorted(fp.lcs_dims, reverse=True)
            and list(fp.ds_dims) == sorted(fp.ds_dims, reverse=True)
            and (fp.dim_I == 0) == fp.is_lie
        )
        out.append(Check("fingerprint", n, tag, _status(consistent),
                         json.dumps(fp.as_dict(), sort_keys=True)))
    return out


def check_entry(entry: CatalogEntry) -> list[Check]:
    spec = entry.spec
    a = construct(entry)
    tag = entry.label()
    out = common_checks(spec, entry.n, a, tag)
    if spec.family_id in NILPOTENT:
        out += nilpotent_checks(spec, entry.n, a, tag)
    else:
        out += solvable_checks(spec, entry.n, a, tag)
    return out


def verify_family(
    family_id: str,
    n_from: int,
    n_to: int,
    params: dict | None = None,
    max_dim: int | None = None,
) -> VerificationReport:
    """Run the family's check bundle for every ``n`` in ``n_from..n_to``.

    With ``params`` a single instance is checked per ``n``; otherwise the
    fixed sample instances are used.

    Raises:
        ParameterError: unknown family, invalid range or parameters.
    """
    spec = get_family(family_id)
    if n_from > n_to:
        raise ParameterError(f"empty range {n_from}..{n_to}")
    if n_from < spec.n_min:
        raise ParameterError(f"{family_id} requires n >= {spec.n_min}")
    if max_dim is not None and spec.dim(n_to) > max_dim:
        raise ParameterError(
            f"dimension {spec.dim(n_to)} at n = {n_to} exceeds the cap {max_dim}"
        )
    entries = []
    for n in range(n_from, n_to + 1):
        if params is not None:
            entries.append([CatalogEntry.make(family_id, n, params)])
        else:
            entries.append(sample_entries(family_id, n))
    report = VerificationReport(family_id, (n_from, n_to))
    start = time.perf_counter()
    for group in entries:
        for entry in group:
            report.checks.extend(check_entry(entry))
    report.elapsed = time.perf_counter() - start
    return report


# -- fingerprint separation ------------------------------------------------


@dataclass
class SeparationReport:
    n: int
    rows: list[dict]
    pairs: list[dict]

    def as_dict(self) -> dict:
        return {"n": self.n, "algebras": self.rows, "pairs": self.pairs}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def consistent(self) -> bool:
        """Each pair's verdict agrees with the listed fingerprints."""
        fps = {r["gamma"]: r["fingerprint"] for r in self.rows}
        for p in self.pairs:
            a, b = fps[p["first"]], fps[p["second"]]
            diff = sorted(k for k in a if a[k] != b[k])
            if diff != p["differing_fields"] or p["separated"] != bool(diff):
                return False
        return all(r["permutation_stable"] for r in self.rows)

    def format_text(self) -> str:
        lines = [f"fingerprints of R_n1_gamma at n = {self.n}"]
        for r in self.rows:
            flag = "" if r["is_leibniz"] else "  [violates the Leibniz identity]"
            lines.append(f"  gamma = {r['gamma']}: {json.dumps(r['fingerprint'], sort_keys=True)}{flag}")
        for p in self.pairs:
            verdict = ("separated by " + ", ".join(p["differing_fields"])
                       if p["separated"] else "not separated")
            lines.append(f"  {p['first']} vs {p['second']}: {verdict}")
        lines.append(f"consistent: {'yes' if self.consistent() else 'no'}")
        return "\n".join(lines) + "\n"


def separation_report(n: int = 5, seed: int = 0) -> SeparationReport:
    """Fingerprints of the four canonical gamma algebras and pairwise separation.

    Fingerprints are computed even for tables that violate the Leibniz
    identity; the ``is_leibniz`` flag records which ones do.
    """
    rng = random.Random(seed)
    rows = []
    for g in CANONICAL_GAMMAS:
        entry = CatalogEntry.make("R_n1_gamma", n, dict(zip(("gamma1", "gamma2", "gamma3"), g)))
        a = construct(entry)
        fp = fingerprint(a, require_leibniz=False).as_dict()
        perm = list(range(a.dim))
        rng.shuffle(perm)
        fp_perm = fingerprint(permute(a, perm), require_leibniz=False).as_dict()
        rows.append({
            "gamma": "(" + ", ".join(str(v) for v in g) + ")",
            "is_leibniz": not leibniz_violations(a),
            "fingerprint": fp,
            "permutation_stable": fp == fp_perm,
        })
    pairs = []
    for r1, r2 in combinations(rows, 2):
        a, b = r1["fingerprint"], r2["fingerprint"]
        diff = sorted(k for k in a if a[k] != b[k])
        pairs.append({"first": r1["gamma"], "second": r2["gamma"],
                      "separated": bool(diff), "differing_fields": diff})
    return SeparationReport(n, rows, pairs)


def commutator_identity_holds(a: AlgebraTable, x, y) -> bool:
    """``[R_x, R_y] = R_{[y, x]}``."""
    from .algebra import right_multiplication

    rx, ry = right_multiplication(a, x), right_multiplication(a, y)
    return rx.commutator(ry) == right_multiplication(a, bracket(a, y, x))
