"""Verification registry: every decomposition and counting statement under
study becomes a named, parameterized, machine-checkable case with a
deterministic report.

Every check is an exact identity, verified exhaustively at desk scale; there
are no tolerances anywhere.
"""

import sys
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .correspondences import burge_symmetric, enumerate_matrices, rsk_symmetric
from .partitions import (
    conjugate,
    is_threshold,
    odd_column_count,
    odd_row_count,
    partitions_of,
    threshold_partitions,
)
from .symchar import (
    ExtOfExt2,
    ExtOfSym2,
    ExtPower,
    SymOfExt2,
    SymOfSym2,
    SymPoly,
    SymPower,
    cauchy_check,
    character,
    coefficient_of_weight,
    dual_cauchy_check,
    power_sum,
    schur_expand,
    schur_poly,
    tensor,
    weight_vectors,
)
from .symgroup import (
    decompose,
    induced_model_character,
    involutions,
    mn_character,
    model_character,
)
from .tableaux import kostka, standard_count


class UnknownTheorem(ValueError):
    pass


class ParamOutOfRange(ValueError):
    pass


@dataclass
class TheoremCase:
    name: str
    params: dict
    status: str  # verified | failed | skipped
    details: list

    @property
    def ok(self) -> bool:
        return self.status == "verified"

    def to_json_dict(self) -> dict:
        params = {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(self.params.items())}
        return {"name": self.name, "params": params, "status": self.status, "details": self.details}


def _expansion_list(exp: dict) -> list:
    return [{"partition": list(k), "mult": v} for k, v in sorted(exp.items(), reverse=True)]


def _expansion_mismatches(actual: dict, expected: dict) -> list:
    out = []
    for lam in sorted(set(actual) | set(expected), reverse=True):
        a, e = actual.get(lam, 0), expected.get(lam, 0)
        if a != e:
            out.append({"partition": list(lam), "actual": a, "expected": e})
    return out


def _check_gl_duality(m, n, d):
    rep = cauchy_check(m, n, d)
    details = [{"margin_pairs_checked": rep.pairs_checked}] + rep.failures
    return ("verified" if rep.ok else "failed"), details


def _check_skew_gl_duality(m, n, d):
    rep = dual_cauchy_check(m, n, d)
    details = [{"margin_pairs_checked": rep.pairs_checked}] + rep.failures
    return ("verified" if rep.ok else "failed"), details


def _check_gl_gelfand(n, d):
    total = SymPoly(n, {})
    for k in range(d % 2, d + 1, 2):
        total = total + character(tensor(SymPower(k), SymOfExt2((d - k) // 2)), n)
    exp = schur_expand(total)
    expected = {lam: 1 for lam in partitions_of(d, n)}
    mism = _expansion_mismatches(exp, expected)
    details = [{"n": n, "d": d, "expansion": _expansion_list(exp)}] + mism
    return ("verified" if not mism else "failed"), details


def _check_refined_gl_gelfand(n, d):
    details = []
    bad = 0
    for total in range(d + 1):
        for k in range(total % 2, total + 1, 2):
            l = (total - k) // 2
            exp = schur_expand(character(tensor(SymPower(k), SymOfExt2(l)), n))
            expected = {lam: 1 for lam in partitions_of(total, n) if odd_column_count(lam) == k}
            mism = _expansion_mismatches(exp, expected)
            bad += len(mism)
            details.append({"k": k, "l": l, "ok": not mism, "mismatches": mism})
    return ("verified" if not bad else "failed"), details


def _check_even_multiplicity(n, l):
    details = []
    bad = 0
    for lp in range(l + 1):
        exp = schur_expand(character(SymOfExt2(lp), n))
        expected = {
            lam: 1
            for lam in partitions_of(2 * lp, n)
            if all(m % 2 == 0 for m in Counter(lam).values())
        }
        mism = _expansion_mismatches(exp, expected)
        bad += len(mism)
        details.append({"l": lp, "ok": not mism, "mismatches": mism})
    return ("verified" if not bad else "failed"), details


def _check_burge_gelfand(n, d):
    details = []
    bad = 0
    for total in range(d + 1):
        for k in range(total % 2, total + 1, 2):
            l = (total - k) // 2
            exp = schur_expand(character(tensor(ExtPower(k), SymOfSym2(l)), n))
            expected = {lam: 1 for lam in partitions_of(total, n) if odd_row_count(lam) == k}
            mism = _expansion_mismatches(exp, expected)
            bad += len(mism)
            details.append({"k": k, "l": l, "ok": not mism, "mismatches": mism})
    return ("verified" if not bad else "failed"), details


def _check_all_parts_even(n, k):
    details = []
    bad = 0
    for kp in range(k + 1):
        exp = schur_expand(character(SymOfSym2(kp), n))
        expected = {
            lam: 1 for lam in partitions_of(2 * kp, n) if all(p % 2 == 0 for p in lam)
        }
        mism = _expansion_mismatches(exp, expected)
        bad += len(mism)
        details.append({"k": kp, "ok": not mism, "mismatches": mism})
    return ("verified" if not bad else "failed"), details


def _symmetric_matrices_up_to(n, total):
    """All symmetric n x n matrices with entry sum at most total."""
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    a = [[0] * n for _ in range(n)]

    def rec(k, rem):
        if k == len(positions):
            yield tuple(tuple(r) for r in a)
            return
        i, j = positions[k]
        w = 1 if i == j else 2
        for e in range(rem // w + 1):
            a[i][j] = e
            a[j][i] = e
            yield from rec(k + 1, rem - w * e)
        a[i][j] = 0
        a[j][i] = 0

    yield from rec(0, total)


def _check_schuetzenberger(n, d):
    checked = 0
    failures = []
    for a in _symmetric_matrices_up_to(n, d):
        checked += 1
        trace = sum(a[i][i] for i in range(n))
        shape = rsk_symmetric(a).shape
        if trace != odd_column_count(shape):
            failures.append(
                {"matrix": [list(r) for r in a], "trace": trace, "odd_columns": odd_column_count(shape)}
            )
    details = [{"matrices_checked": checked}] + failures
    return ("verified" if not failures else "failed"), details


def _check_burge_schuetzenberger(n, d):
    checked = 0
    failures = []
    for a in _symmetric_matrices_up_to(n, d):
        checked += 1
        odd_diag = sum(1 for i in range(n) if a[i][i] % 2)
        shape = burge_symmetric(a).shape
        if odd_diag != odd_row_count(shape):
            failures.append(
                {"matrix": [list(r) for r in a], "odd_diagonal": odd_diag, "odd_rows": odd_row_count(shape)}
            )
    details = [{"matrices_checked": checked}] + failures
    return ("verified" if not failures else "failed"), details


_COUNTING_SUM_CAP = 6  # margin sums above this make exhaustive counting slow


def _check_threshold(n, l):
    details = []
    bad = 0

    anchors = {2: [[1, 1]], 4: [[2, 1, 1]]}
    for dd, expected in anchors.items():
        got = [list(lam) for lam in threshold_partitions(dd)]
        if got != expected:
            bad += 1
        details.append({"threshold_partitions_of": dd, "got": got, "ok": got == expected})

    for lp in range(l + 1):
        exp = schur_expand(character(ExtOfExt2(lp), n))
        expected = {lam: 1 for lam in threshold_partitions(2 * lp) if len(lam) <= n}
        mism = _expansion_mismatches(exp, expected)
        bad += len(mism)
        details.append({"construction": "ext-ext2", "l": lp, "ok": not mism, "mismatches": mism})

        exp = schur_expand(character(ExtOfSym2(lp), n))
        expected = {lam: 1 for lam in partitions_of(2 * lp, n) if is_threshold(conjugate(lam))}
        mism = _expansion_mismatches(exp, expected)
        bad += len(mism)
        details.append({"construction": "ext-sym2", "l": lp, "ok": not mism, "mismatches": mism})

    # Counting identity for the loopless class: symmetric 0/1 trace-zero
    # matrices with margins mu are counted by threshold shapes.
    checked = 0
    for dp in range(min(2 * l, _COUNTING_SUM_CAP) + 1):
        tps = threshold_partitions(dp)
        for mu in weight_vectors(dp, n):
            checked += 1
            lhs = len(enumerate_matrices("NsymTr0", mu, mu))
            rhs = sum(kostka(lam, mu) for lam in tps)
            if lhs != rhs:
                bad += 1
                details.append({"class": "NsymTr0", "mu": list(mu), "matrices": lhs, "expected": rhs})
    details.append({"class": "NsymTr0", "margins_checked": checked})

    # Loops-allowed analogue.  A diagonal 1 contributes 2 to the weight here
    # (the matrix encodes a set of pairs i <= j, each adding e_i + e_j), which
    # is the degree-consistent reading of the multiple-edge-free counting.
    pairs_le = list(combinations_with_replacement(range(n), 2))
    checked = 0
    for lp in range(min(l, _COUNTING_SUM_CAP // 2) + 1):
        counts = Counter()
        for chosen in combinations(pairs_le, lp):
            w = [0] * n
            for i, j in chosen:
                w[i] += 1
                w[j] += 1
            counts[tuple(w)] += 1
        conj_tp = [lam for lam in partitions_of(2 * lp, n) if is_threshold(conjugate(lam))]
        for mu in weight_vectors(2 * lp, n):
            checked += 1
            lhs = counts.get(mu, 0)
            rhs = sum(kostka(lam, mu) for lam in conj_tp)
            if lhs != rhs:
                bad += 1
                details.append({"class": "Nsym-pairs", "mu": list(mu), "matrices": lhs, "expected": rhs})
    details.append({"class": "Nsym-pairs", "margins_checked": checked})

    details.append(
        {
            "skipped": "tableau-valued bijections for these two matrix classes",
            "reason": "neither the Burge nor the RSK restriction produces threshold shapes "
            "(both are excluded exhaustively at margin sums <= 6), so the decompositions "
            "are verified by the counting identities above instead",
        }
    )
    return ("verified" if not bad else "failed"), details


def _check_rn_dimension(n, lam=None):
    lams = [tuple(lam)] if lam else [lm for j in range(1, n + 1) for lm in partitions_of(j)]
    details = []
    bad = 0
    for lm in lams:
        j = sum(lm)
        coeff = coefficient_of_weight(schur_poly(lm, j), (1,) * j)
        f = standard_count(lm)
        chi_id = mn_character(lm)[(1,) * j]
        ok = coeff == f == chi_id
        bad += 0 if ok else 1
        details.append(
            {"partition": list(lm), "coefficient": coeff, "standard_tableaux": f, "character_at_id": chi_id, "ok": ok}
        )
    return ("verified" if not bad else "failed"), details


def _check_schur_weyl(m, n):
    details = []
    bad = 0
    for mp in range(1, m + 1):
        for rho in partitions_of(mp):
            lhs = power_sum(rho, n)
            rhs = SymPoly(n, {})
            for lam in partitions_of(mp):
                rhs = rhs + mn_character(lam)[rho] * schur_poly(lam, n)
            ok = lhs == rhs
            bad += 0 if ok else 1
            details.append({"cycle_type": list(rho), "ok": ok})
    return ("verified" if not bad else "failed"), details


def _check_sn_gelfand(n):
    details = []
    bad = 0
    for np in range(1, n + 1):
        model_dim = sum(len(involutions(np, k)) for k in range(np % 2, np + 1, 2))
        irr_dim = sum(standard_count(lam) for lam in partitions_of(np))
        ok = model_dim == irr_dim
        bad += 0 if ok else 1
        details.append({"n": np, "involutions": model_dim, "sum_of_dims": irr_dim, "ok": ok})
        for k in range(np % 2, np + 1, 2):
            dec = decompose(model_character(np, k, "rho1"))
            expected = {lam: 1 for lam in partitions_of(np) if odd_column_count(lam) == k}
            mism = _expansion_mismatches(dec, expected)
            bad += len(mism)
            details.append({"n": np, "k": k, "ok": not mism, "mismatches": mism})
    return ("verified" if not bad else "failed"), details


def _check_sn_rho2(n):
    details = []
    bad = 0
    for np in range(2, n + 1, 2):
        dec = decompose(model_character(np, 0, "rho2"))
        expected = {lam: 1 for lam in threshold_partitions(np)}
        mism = _expansion_mismatches(dec, expected)
        bad += len(mism)
        details.append({"n": np, "ok": not mism, "mismatches": mism})
    return ("verified" if not bad else "failed"), details


def _check_induced_identities(n):
    details = []
    bad = 0
    for np in range(1, n + 1):
        for k in range(np % 2, np + 1, 2):
            ind = induced_model_character(np, k, "e-tensor-one")
            model = model_character(np, k, "rho1")
            ok = ind == model
            bad += 0 if ok else 1
            details.append({"identity": "e-tensor-one", "n": np, "k": k, "ok": ok})
    for np in range(2, n + 1, 2):
        dec = decompose(induced_model_character(np, 0, "trivial-B"))
        expected = {lam: 1 for lam in partitions_of(np) if all(p % 2 == 0 for p in lam)}
        mism = _expansion_mismatches(dec, expected)
        bad += len(mism)
        details.append({"identity": "trivial-B", "n": np, "ok": not mism, "mismatches": mism})

        dec = decompose(induced_model_character(np, 0, "eta"))
        expected = {lam: 1 for lam in threshold_partitions(np)}
        mism = _expansion_mismatches(dec, expected)
        same_as_model = dec == decompose(model_character(np, 0, "rho2"))
        bad += len(mism) + (0 if same_as_model else 1)
        details.append(
            {"identity": "eta", "n": np, "ok": not mism and same_as_model, "mismatches": mism}
        )
    return ("verified" if not bad else "failed"), details


# name -> (checker, default params, the knob --max-size overrides)
REGISTRY = {
    "gl-duality": (_check_gl_duality, {"m": 2, "n": 2, "d": 3}, "d"),
    "skew-gl-duality": (_check_skew_gl_duality, {"m": 2, "n": 2, "d": 3}, "d"),
    "gl-gelfand": (_check_gl_gelfand, {"n": 3, "d": 4}, "d"),
    "schuetzenberger": (_check_schuetzenberger, {"n": 3, "d": 6}, "d"),
    "refined-gl-gelfand": (_check_refined_gl_gelfand, {"n": 3, "d": 4}, "d"),
    "even-multiplicity": (_check_even_multiplicity, {"n": 3, "l": 2}, "l"),
    "burge-schuetzenberger": (_check_burge_schuetzenberger, {"n": 3, "d": 6}, "d"),
    "burge-gelfand": (_check_burge_gelfand, {"n": 3, "d": 4}, "d"),
    "all-parts-even": (_check_all_parts_even, {"n": 3, "k": 2}, "k"),
    "threshold": (_check_threshold, {"n": 3, "l": 2}, "l"),
    "rn-dimension": (_check_rn_dimension, {"n": 5}, "n"),
    "schur-weyl": (_check_schur_weyl, {"m": 4, "n": 3}, "m"),
    "sn-gelfand": (_check_sn_gelfand, {"n": 5}, "n"),
    "sn-rho2": (_check_sn_rho2, {"n": 4}, "n"),
    "induced-identities": (_check_induced_identities, {"n": 4}, "n"),
}

# beyond these, exhaustive enumeration gets noticeably slow
_DESK_BOUNDS = {"m": 4, "n": 7, "d": 8, "k": 4, "l": 4}


def verify(name: str, **params) -> TheoremCase:
    """Run one registry entry; unknown names and junk parameters are errors."""
    if name not in REGISTRY:
        raise UnknownTheorem(f"unknown theorem {name!r}; known: {', '.join(sorted(REGISTRY))}")
    func, defaults, _ = REGISTRY[name]
    merged = dict(defaults)
    for key, val in params.items():
        if val is None:
            continue
        if key == "lam" and name == "rn-dimension":
            merged[key] = tuple(val)
            continue
        if key not in defaults:
            raise ParamOutOfRange(f"{name} does not take parameter {key!r}")
        if not isinstance(val, int) or val < 0:
            raise ParamOutOfRange(f"parameter {key}={val!r} must be a non-negative integer")
        merged[key] = val
    for key, val in merged.items():
        if key in _DESK_BOUNDS and isinstance(val, int) and val > _DESK_BOUNDS[key]:
            print(
                f"warning: {name}: {key}={val} exceeds the desk-scale bound "
                f"{_DESK_BOUNDS[key]}; this may take a long time",
                file=sys.stderr,
            )
    status, details = func(**merged)
    return TheoremCase(name, merged, status, details)


def verify_all(max_size: int | None = None) -> list[TheoremCase]:
    """Run every registry entry at its defaults (scale knob overridable)."""
    out = []
    for name, (_, defaults, knob) in REGISTRY.items():
        params = {}
        if max_size is not None:
            params[knob] = max_size
        out.append(verify(name, **params))
    return out
