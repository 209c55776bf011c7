"""Executable verdicts for each numbered statement about Gamma-semigroups.

Every biconditional is evaluated as two independent implications; a report
is ``violated`` as soon as one direction fails, and names the direction.
The ``Problem*`` ids are the open questions: a violated report there is a
counterexample, not a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import GammaSemigroup, derived_semigroup, set_product
from .green import d_partition, h_partition, l_partition, r_partition, j_partition
from .ideals import all_ideals_0_semiprime, is_ideal
from .regularity import (
    SmnParams,
    _plain_left_regular,
    _plain_right_regular,
    in_class_smn_all,
    irregular_elements,
    is_2_0_strongly_regular,
    is_intra_0_strongly_regular,
    is_left_0_strongly_regular,
    is_regular,
    is_right_0_strongly_regular,
    left_strongly_regular_report,
    right_strongly_regular_report,
)
from .structure import (
    dclass_with_zero,
    disjoint_gamma_group_cover,
    gamma_group_decomposition,
    is_completely_0_simple,
    is_union_of_gamma_groups,
    l_classes_left_simple,
    mutually_annihilating,
    nonzero_dclasses,
    r_classes_right_simple,
    regular_dclasses,
    zero_disjoint_decomposition,
)

STATEMENTS = (
    "L1.7", "L1.8", "T1.9", "T1.10", "T2.15", "C2.16", "P2.17", "P2.20", "P2.21",
    "T2.22", "C2.23", "T2.24", "T2.25", "P3.7", "T4.5", "ZeroHClass",
    "Problem1", "Problem2", "Problem3",
)
PROVED = STATEMENTS[:15] + ("ZeroHClass",)
PROBLEMS = ("Problem1", "Problem2", "Problem3")
REPORT_ONLY = ("P2.20", "T4.5")
NEEDS_ZERO = ("P2.20", "P2.21", "T2.22", "C2.23", "T2.24", "T2.25", "P3.7", "T4.5", "ZeroHClass")

HOLDS, VIOLATED, INAPPLICABLE = "holds", "violated", "inapplicable"


@dataclass
class CheckReport:
    statement: str
    verdict: str
    witness: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def line(self) -> str:
        w = ";".join(f"{k}={_fmt(v)}" for k, v in self.witness.items()) or "-"
        return f"{self.statement}\t{self.verdict}\t{w}"

    def as_dict(self) -> dict:
        return {
            "statement": self.statement,
            "verdict": self.verdict,
            "witness": {k: _jsonable(v) for k, v in self.witness.items()},
            "detail": {k: _jsonable(v) for k, v in self.detail.items()},
        }


def _jsonable(v):
    if isinstance(v, (frozenset, set)):
        return sorted(v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _fmt(v) -> str:
    if isinstance(v, (list, tuple, frozenset, set)):
        items = sorted(v) if isinstance(v, (frozenset, set)) else v
        return "[" + ",".join(_fmt(x) for x in items) + "]"
    return str(v)


def _equivalence(stmt: str, clauses: dict, witness: dict = None) -> CheckReport:
    """All named clauses must agree; otherwise report which ones split."""
    values = set(clauses.values())
    if len(values) <= 1:
        return CheckReport(stmt, HOLDS, detail=dict(clauses))
    true = sorted(k for k, v in clauses.items() if v)
    false = sorted(k for k, v in clauses.items() if not v)
    w = {"direction": f"{true[0]} => {false[0]}", "true": true, "false": false}
    w.update(witness or {})
    return CheckReport(stmt, VIOLATED, w, dict(clauses))


def _implication(stmt: str, premise: bool, conclusion: bool, witness: dict = None, **detail) -> CheckReport:
    detail = {"premise": premise, "conclusion": conclusion, **detail}
    if premise and not conclusion:
        return CheckReport(stmt, VIOLATED, witness or {}, detail)
    return CheckReport(stmt, HOLDS, detail=detail)


def _green_failure(M: GammaSemigroup, part) -> tuple:
    for a in M.elements:
        for c in M.gammas:
            if not part.same(a, M.table[c][a][a]):
                return a, c
    return None


def _lemma(M: GammaSemigroup, side: str) -> CheckReport:
    stmt = "L1.7" if side == "left" else "L1.8"
    rel = "L" if side == "left" else "R"
    report = left_strongly_regular_report(M) if side == "left" else right_strongly_regular_report(M)
    part = l_partition(M) if side == "left" else r_partition(M)
    bad = _green_failure(M, part)
    direct, green = report.holds, bad is None
    clauses = {f"{side}-strongly-regular": direct, f"a {rel} a.gamma.a": green}
    if direct == green:
        return CheckReport(stmt, HOLDS, detail=clauses)
    if direct:
        a, c = bad
        return CheckReport(stmt, VIOLATED, {"direction": "(1) => (2)", "element": M.name(a), "gamma": M.gamma_names[c]}, clauses)
    a, c = report.counterexample
    return CheckReport(stmt, VIOLATED, {"direction": "(2) => (1)", "element": M.name(a), "gamma": M.gamma_names[c]}, clauses)


def _t19(M: GammaSemigroup) -> CheckReport:
    for side, pred, classes in (
        ("left", left_strongly_regular_report, l_classes_left_simple),
        ("right", right_strongly_regular_report, r_classes_right_simple),
    ):
        if pred(M).holds:
            ok, detail = classes(M)
            if not ok:
                bad = [M.names(b) for b, v in detail.items() if v != "ok"]
                return CheckReport("T1.9", VIOLATED, {"side": side, "classes": bad})
    return CheckReport("T1.9", HOLDS)


def _union_clauses(M: GammaSemigroup) -> dict:
    sr = left_strongly_regular_report(M).holds and right_strongly_regular_report(M).holds
    return {
        "(1) union of gamma-groups": is_union_of_gamma_groups(M),
        "(2) strongly regular": sr,
        "(3) every H-class a gamma-group": gamma_group_decomposition(M) is not None,
        "(4) disjoint union of gamma-groups": disjoint_gamma_group_cover(M) is not None,
    }


def _t215(M: GammaSemigroup) -> CheckReport:
    return _equivalence("T2.15", {
        "union of gamma-groups": is_union_of_gamma_groups(M),
        "left and right strongly regular": left_strongly_regular_report(M).holds and right_strongly_regular_report(M).holds,
    })


def _c216(M: GammaSemigroup) -> CheckReport:
    return _equivalence("C2.16", {
        "(1) s(2,2)": in_class_smn_all(M, SmnParams(2, 2, False)),
        "(2) s(2,0) and s(0,2)": in_class_smn_all(M, SmnParams(2, 0, False)) and in_class_smn_all(M, SmnParams(0, 2, False)),
        "(3) union of gamma-groups": is_union_of_gamma_groups(M),
    })


def _p217(M: GammaSemigroup) -> CheckReport:
    detail = {}
    for n in (2, 3):
        both = in_class_smn_all(M, SmnParams(n, n))
        split = in_class_smn_all(M, SmnParams(0, n)) and in_class_smn_all(M, SmnParams(n, 0))
        detail[f"n={n}"] = (both, split)
        if both != split:
            return CheckReport("P2.17", VIOLATED, {"n": n, f"s({n},{n})0": both, "intersection": split}, detail)
    return CheckReport("P2.17", HOLDS, detail=detail)


def _p220_condition(M: GammaSemigroup, flavor: str, form: str) -> bool:
    rel = {"left": l_partition, "right": r_partition, "two_sided": j_partition}[flavor](M)
    for x in M.elements:
        for c in M.gammas:
            s = M.table[c][x][x]
            if s == M.zero:
                continue
            if form == "green":
                ok = rel.same(x, s)
            else:
                left = set_product(M, M.elements, None, (s,))
                right = set_product(M, (s,), None, M.elements)
                ok = {
                    "left": x in left,
                    "right": x in right,
                    "two_sided": x in set_product(M, left, None, M.elements),
                }[flavor]
            if not ok:
                return False
    return True


def _p220(M: GammaSemigroup) -> CheckReport:
    regular = {
        "left": is_left_0_strongly_regular,
        "right": is_right_0_strongly_regular,
        "two_sided": is_intra_0_strongly_regular,
    }
    detail, split = {}, []
    for flavor in ("left", "right", "two_sided"):
        clauses = {
            "(1) 0-strongly regular": regular[flavor](M),
            "(2) 0-semiprime": all_ideals_0_semiprime(M, flavor),
            "(3) green": _p220_condition(M, flavor, "green"),
            "(4) membership": _p220_condition(M, flavor, "membership"),
        }
        detail[flavor] = clauses
        if len(set(clauses.values())) > 1:
            split.append(flavor)
    if split:
        return CheckReport("P2.20", VIOLATED, {"flavors": split}, detail)
    return CheckReport("P2.20", HOLDS, detail=detail)


def _p221(M: GammaSemigroup) -> CheckReport:
    return _equivalence("P2.21", {
        "all one- and two-sided ideals 0-semiprime": all(all_ideals_0_semiprime(M, k) for k in ("left", "right", "two_sided")),
        "2^0-strongly regular": is_2_0_strongly_regular(M, "definition"),
    })


def _t222(M: GammaSemigroup) -> CheckReport:
    return _equivalence("T2.22", {
        "2^0-strongly regular": is_2_0_strongly_regular(M, "definition"),
        "x.gamma.x = 0 or in H_x": is_2_0_strongly_regular(M, "green"),
    })


def _c223(M: GammaSemigroup) -> CheckReport:
    premise = is_2_0_strongly_regular(M, "definition")
    if premise:
        D = d_partition(M)
        for x in sorted(irregular_elements(M)):
            block = D.block(x)
            prod = set_product(M, block, None, block)
            if prod != {M.zero}:
                return _implication("C2.23", True, False, {"irregular": M.name(x), "D": M.names(block), "DGD": M.names(prod)})
    return _implication("C2.23", premise, True)


def _t224(M: GammaSemigroup) -> CheckReport:
    premise = is_2_0_strongly_regular(M, "definition")
    if premise:
        for D in regular_dclasses(M):
            piece = dclass_with_zero(M, D)
            if piece is None or not is_completely_0_simple(piece):
                reason = "not closed" if piece is None else "not completely 0-simple"
                return _implication("T2.24", True, False, {"D": M.names(D), "reason": reason})
    return _implication("T2.24", premise, True)


def _t225(M: GammaSemigroup) -> CheckReport:
    if not is_regular(M):
        return CheckReport("T2.25", HOLDS, detail={"premise": False})
    decomposition, failures = zero_disjoint_decomposition(M)
    witness = {}
    if failures:
        witness = {"piece": M.names(failures[0].piece), "reason": failures[0].reason}
    return _equivalence("T2.25", {
        "(1) 2^0-strongly regular": is_2_0_strongly_regular(M, "definition"),
        "(2) 0-disjoint completely 0-simple pieces": decomposition is not None,
        "(3) left and right 0-strongly regular": is_left_0_strongly_regular(M) and is_right_0_strongly_regular(M),
        "(4) left and right ideals 0-semiprime": all_ideals_0_semiprime(M, "left") and all_ideals_0_semiprime(M, "right"),
    }, witness)


def _p37(M: GammaSemigroup) -> CheckReport:
    H = h_partition(M)
    premise = all(is_ideal(M, set(b) | {M.zero}, "quasi") for b in H.blocks)
    return _implication("P3.7", premise, is_2_0_strongly_regular(M, "definition"))


def _t45(M: GammaSemigroup) -> CheckReport:
    pieces = [set(D) | {M.zero} for D in nonzero_dclasses(M)]
    two = is_2_0_strongly_regular(M, "definition")
    annihilating = mutually_annihilating(M, pieces)
    return CheckReport("T4.5", HOLDS, detail={
        "2^0-strongly regular": two,
        "D-classes with 0 mutually annihilating": annihilating,
        "characterization": two and annihilating,
    })


def _zero_h(M: GammaSemigroup) -> CheckReport:
    sr = left_strongly_regular_report(M).holds and right_strongly_regular_report(M).holds
    block = h_partition(M).block(M.zero)
    return _implication("ZeroHClass", sr, block == (M.zero,), {"H0": M.names(block)})


def _problem1(M: GammaSemigroup) -> CheckReport:
    for side, classes, report in (
        ("left", l_classes_left_simple, left_strongly_regular_report),
        ("right", r_classes_right_simple, right_strongly_regular_report),
    ):
        premise = classes(M)[0]
        rep = report(M)
        if premise and not rep.holds:
            a, c = rep.counterexample
            return _implication("Problem1", True, False, {"side": side, "element": M.name(a), "gamma": M.gamma_names[c]})
    return CheckReport("Problem1", HOLDS)


def _problem2(M: GammaSemigroup) -> CheckReport:
    good = [c for c in M.gammas if _plain_left_regular(derived_semigroup(M, c)) and _plain_right_regular(derived_semigroup(M, c))]
    left, right = left_strongly_regular_report(M), right_strongly_regular_report(M)
    witness = {}
    if good and not (left.holds and right.holds):
        a, c = left.counterexample or right.counterexample
        witness = {"regular_gamma": M.gamma_names[good[0]], "element": M.name(a), "gamma": M.gamma_names[c]}
    return _implication("Problem2", bool(good), left.holds and right.holds, witness)


def _problem3(M: GammaSemigroup) -> CheckReport:
    left, right = left_strongly_regular_report(M), right_strongly_regular_report(M)
    regular = is_regular(M)
    for side, one, other in (("right", right, left), ("left", left, right)):
        if regular and one.holds and not other.holds:
            a, c = other.counterexample
            return _implication("Problem3", True, False, {"side": side, "element": M.name(a), "gamma": M.gamma_names[c]})
    return CheckReport("Problem3", HOLDS)


_CHECKS = {
    "L1.7": lambda M: _lemma(M, "left"),
    "L1.8": lambda M: _lemma(M, "right"),
    "T1.9": _t19,
    "T1.10": lambda M: _equivalence("T1.10", _union_clauses(M)),
    "T2.15": _t215,
    "C2.16": _c216,
    "P2.17": _p217,
    "P2.20": _p220,
    "P2.21": _p221,
    "T2.22": _t222,
    "C2.23": _c223,
    "T2.24": _t224,
    "T2.25": _t225,
    "P3.7": _p37,
    "T4.5": _t45,
    "ZeroHClass": _zero_h,
    "Problem1": _problem1,
    "Problem2": _problem2,
    "Problem3": _problem3,
}


def check(M: GammaSemigroup, statement: str) -> CheckReport:
    if statement not in _CHECKS:
        raise KeyError(f"unknown statement {statement!r}")
    if statement in NEEDS_ZERO and M.zero is None:
        return CheckReport(statement, INAPPLICABLE, detail={"reason": "no zero"})
    return _CHECKS[statement](M)


def check_all(M: GammaSemigroup) -> list:
    return [check(M, s) for s in STATEMENTS]
