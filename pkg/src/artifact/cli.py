"""Command-line entry point.

    artifact table G2
    artifact table C 3 --format json
    artifact modset "A:beta=4" --rank 3
    artifact coconj A2 "lambda=0,0;word=1" "lambda=0,0;word=2"
    artifact conj-test A2 "word=012" "lambda=1,1;word=1"
    artifact verify snf --max-rank 6
    artifact reps D 4
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import affconj
from .classreps import (
    ClassParams,
    ClassParamsError,
    all_class_params,
    exceptional_table,
    parse_class_params,
    rep_word,
    representative,
)
from .intlin import lattice_equal, rational_rank, snf_diagonal
from .modset import (
    WORKED_EXAMPLE_SNFS,
    ModSetReport,
    basis_rule,
    fills_move_set,
    fix_cap_lattice,
    mod_set,
    predicted_basis,
    predicted_fills,
    predicted_snf,
)
from .rootdata import EXCEPTIONAL, RootDatum, RootDatumError, parse_datum, root_datum
from .weyl import (
    DEFAULT_GROUP_BOUND,
    LENGTH_BFS_BOUND,
    GroupBoundExceeded,
    conjugacy_classes,
    coxeter_length,
    enumerate_group,
    from_word,
    reflection_length,
    reflection_length_bfs,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("reps", "snf", "basis", "fills", "rank-law", "coconj", "exceptional")
_DEFAULT_MAX_RANK = {"reps": 4, "snf": 8, "basis": 8, "fills": 8, "rank-law": 3,
                     "coconj": 3, "exceptional": 8}
REPRESENTATIVE_RANK = 8


class UsageError(ValueError):
    pass


# -- serialization --------------------------------------------------------------

def jsonable(obj):
    """Ints become decimal strings (SNF transforms can exceed 2^53); bools stay bools."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_json(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=False)


def fmt_diag(d: Sequence[int]) -> str:
    """(1,1,1,4) -> '1^3,4'."""
    out = []
    i = 0
    while i < len(d):
        j = i
        while j < len(d) and d[j] == d[i]:
            j += 1
        out.append(f"{d[i]}^{j - i}" if j - i > 1 else str(d[i]))
        i = j
    return "(" + ",".join(out) + ")"


def fmt_vec(v: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(v, 1):
        if not c:
            continue
        coef = "" if c == 1 else "-" if c == -1 else str(c)
        terms.append(f"{coef}a{i}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def fmt_quotient(rep: ModSetReport) -> str:
    parts = [f"Z/{d}" for d in rep.invariant_factors]
    if rep.free_rank:
        parts.append("Z" if rep.free_rank == 1 else f"Z^{rep.free_rank}")
    return " + ".join(parts) or "0"


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- table / modset / reps ---------------------------------------------------------

def _datum(type_label: str, rank: Optional[int]) -> RootDatum:
    t = type_label.strip().upper()
    try:
        if t in EXCEPTIONAL:
            return root_datum(t, rank)
        if len(t) > 1 and t[1:].isdigit():
            d = parse_datum(t)
            if rank is not None and rank != d.rank:
                raise UsageError(f"{t} conflicts with rank {rank}")
            return d
        if rank is None:
            raise UsageError(f"type {t} needs a rank")
        return root_datum(t, rank)
    except RootDatumError as exc:
        raise UsageError(str(exc)) from None


def table_row(p: ClassParams) -> dict:
    w = representative(p)
    rep = mod_set(w)
    return {
        "class": p.to_string(),
        "word": list(rep_word(p)),
        "snf": list(rep.snf_diag),
        "quotient": {"torsion": list(rep.invariant_factors), "free_rank": rep.free_rank},
        "fills": rep.fills,
        "basis": [list(v) for v in rep.basis.vectors],
    }


def cmd_table(args) -> int:
    d = _datum(args.type, args.rank)
    params = all_class_params(d.type_label, d.rank)
    rows = _pmap(table_row, params, args.jobs)
    if args.format == "json":
        print(dump_json({"type": d.name, "rank": d.rank, "rows": rows}))
        return EXIT_OK
    print(f"# {d.name}: {len(rows)} classes")
    width = max(len(r["class"]) for r in rows)
    for r in rows:
        word = "".join(map(str, r["word"])) if d.rank < 10 else ",".join(map(str, r["word"]))
        tors = ",".join(map(str, r["quotient"]["torsion"])) or "-"
        print(f"{r['class']:<{width}}  snf={fmt_diag(r['snf']):<18} torsion={tors:<8} "
              f"free={r['quotient']['free_rank']}  fills={'yes' if r['fills'] else 'no':<3}  "
              f"w={word or '1'}")
    return EXIT_OK


def _element_from_spec(spec: str, rank: Optional[int]):
    """A class spec like 'C:gamma=2' or a raw element 'C3:word=123'."""
    head, _, body = spec.partition(":")
    if body.strip().lower().startswith("word="):
        d = _datum(head, rank)
        return None, from_word(d, body.split("=", 1)[1])
    try:
        p = parse_class_params(spec, rank)
    except ClassParamsError as exc:
        raise UsageError(str(exc)) from None
    return p, representative(p)


def modset_dict(p: Optional[ClassParams], rep: ModSetReport) -> dict:
    return {
        "class": p.to_string() if p else None,
        "type": rep.w.datum.name,
        "word": list(rep.w.word or ()),
        "snf": list(rep.snf_diag),
        "quotient": {"torsion": list(rep.invariant_factors), "free_rank": rep.free_rank},
        "fills": rep.fills,
        "basis": [list(v) for v in rep.basis.vectors],
        "congruences": [{"coefficients": list(c.a), "modulus": c.modulus} for c in rep.congruences],
    }


def cmd_modset(args) -> int:
    p, w = _element_from_spec(args.spec, args.rank)
    rep = mod_set(w)
    if args.format == "json":
        print(dump_json(modset_dict(p, rep)))
        return EXIT_OK
    print(f"class:    {p if p else '-'} in {w.datum.name}")
    print(f"word:     {w.word_string()}")
    print(f"snf:      {fmt_diag(rep.snf_diag)}")
    print(f"quotient: {fmt_quotient(rep)}")
    print(f"fills:    {'yes' if rep.fills else 'no'}")
    print("basis:    " + ", ".join(fmt_vec(v) for v in rep.basis.vectors))
    for c in rep.congruences:
        rel = "= 0" if c.modulus == 0 else f"= 0 mod {c.modulus}"
        print(f"  requires {fmt_vec(c.a).replace('a', 'c')} {rel}")
    return EXIT_OK


def cmd_reps(args) -> int:
    d = _datum(args.type, args.rank)
    rows = []
    for p in all_class_params(d.type_label, d.rank):
        w = representative(p)
        rows.append({"class": p.to_string(), "word": list(rep_word(p)),
                     "length": coxeter_length(w), "reflection_length": reflection_length(w)})
    if args.format == "json":
        print(dump_json({"type": d.name, "representatives": rows}))
        return EXIT_OK
    width = max(len(r["class"]) for r in rows)
    for r in rows:
        word = "".join(map(str, r["word"])) or "1"
        print(f"{r['class']:<{width}}  l={r['length']:<3} lR={r['reflection_length']:<2} w={word}")
    return EXIT_OK


# -- affine queries ------------------------------------------------------------------

def _affine(d: RootDatum, spec: str):
    try:
        return affconj.parse_affine(d, spec)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot parse affine element {spec!r}: {exc}") from None


def _affine_datum(text: str) -> RootDatum:
    try:
        return parse_datum(text)
    except RootDatumError as exc:
        raise UsageError(str(exc)) from None


def cmd_coconj(args) -> int:
    d = _affine_datum(args.type)
    x, xp = _affine(d, args.x), _affine(d, args.x_prime)
    report = affconj.coconjugation(x, xp, args.group_bound)
    if args.format == "json":
        out = report.to_dict()
        out["x"], out["x_prime"] = x.to_dict(), xp.to_dict()
        print(dump_json(out))
        return EXIT_OK
    print(f"x  = {x}\nx' = {xp}")
    print(f"nonempty: {'yes' if report.nonempty else 'no'} ({len(report.cosets)} cosets)")
    for c in report.cosets:
        fix = ", ".join(fmt_vec(v) for v in c.fix_basis.vectors) or "0"
        print(f"  u={c.u.word_string():<14} eta={list(c.eta)}  fix lattice: <{fix}>")
    return EXIT_OK


def cmd_conj_test(args) -> int:
    d = _affine_datum(args.type)
    x, xp = _affine(d, args.x), _affine(d, args.x_prime)
    ans = affconj.are_conjugate(x, xp, args.group_bound)
    if args.format == "json":
        print(dump_json({"x": x.to_dict(), "x_prime": xp.to_dict(), "conjugate": ans}))
    else:
        print("conjugate" if ans else "not conjugate")
    return EXIT_OK


# -- verification suites ---------------------------------------------------------------

@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case: str, anchor: str, detail: str) -> None:
        self.failures.append({"case": case, "anchor": anchor, "detail": detail})

    def merge(self, other: "SuiteResult") -> None:
        self.checks += other.checks
        self.failures += other.failures
        self.flags += other.flags
        self.notes += other.notes

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": self.checks,
                "failures": self.failures, "flags": self.flags, "notes": self.notes}


def classical_data(max_rank: int, types: str = "ABCD") -> list[RootDatum]:
    out = []
    for t in types:
        lo = {"A": 1, "B": 2, "C": 2, "D": 4}[t]
        out += [root_datum(t, n) for n in range(lo, max_rank + 1)]
    return out


def check_reps(d: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> SuiteResult:
    """Representatives meet each class once; minimal length where |W| is small."""
    res = SuiteResult("reps")
    G = enumerate_group(d, bound)
    classes = conjugacy_classes(d, bound)
    cls_of = {}
    for c, members in enumerate(classes):
        for k in members:
            cls_of[k] = c
    params = all_class_params(d.type_label, d.rank)
    hit: dict = {}
    check_len = len(G) <= LENGTH_BFS_BOUND
    for p in params:
        w = representative(p)
        c = cls_of[G.index[w.matrix]]
        hit.setdefault(c, []).append(p.to_string())
        res.checks += 1
        if check_len:
            best = min(G.length(k) for k in classes[c])
            res.checks += 1
            if coxeter_length(w) != best:
                res.fail(f"{d.name} {p}", "minimal length representatives",
                         f"length {coxeter_length(w)} but the class minimum is {best}")
    for c, ps in hit.items():
        if len(ps) > 1:
            res.fail(f"{d.name} {' / '.join(ps)}", "class representatives",
                     "several labels land in one class")
    if len(hit) != len(classes):
        res.fail(d.name, "class representatives",
                 f"{len(hit)} of {len(classes)} classes are met")
    return res


def check_snf(d: RootDatum) -> SuiteResult:
    res = SuiteResult("snf")
    for p in all_class_params(d.type_label, d.rank):
        got = snf_diagonal(representative(p).id_minus())
        want = predicted_snf(p)
        res.checks += 1
        if got != want:
            res.fail(f"{d.name} {p}", f"type {d.type_label} Smith form rule",
                     f"predicted {fmt_diag(want)}, computed {fmt_diag(got)}")
    return res


def audit_worked_examples() -> SuiteResult:
    """Printed worked-example Smith forms against computation and the closed-form rule."""
    res = SuiteResult("snf")
    for ex in WORKED_EXAMPLE_SNFS:
        p = parse_class_params(ex.params)
        got = snf_diagonal(representative(p).id_minus())
        rule = predicted_snf(p)
        res.checks += 1
        if got != ex.computed:
            res.fail(f"{p.datum().name} {p}", ex.anchor,
                     f"pinned {fmt_diag(ex.computed)}, computed {fmt_diag(got)}")
            continue
        if got != rule:
            res.fail(f"{p.datum().name} {p}", ex.anchor,
                     f"computed {fmt_diag(got)} disagrees with the closed-form rule {fmt_diag(rule)}")
        if not ex.agrees:
            res.flags.append({
                "case": f"{p.datum().name} {p}", "anchor": ex.anchor,
                "printed": list(ex.printed), "computed": list(got),
                "resolution": f"computed value kept; it matches the type {p.type_label} Smith form rule",
            })
    return res


def check_basis(d: RootDatum) -> SuiteResult:
    res = SuiteResult("basis")
    skipped = 0
    for p in all_class_params(d.type_label, d.rank):
        rule = basis_rule(p)
        if rule is None:
            skipped += 1
            continue
        actual = mod_set(representative(p)).basis
        res.checks += 1
        if not lattice_equal(predicted_basis(p), actual):
            amended = predicted_basis(p, amend=True)
            extra = "; the amended first vector repairs it" if lattice_equal(amended, actual) else ""
            res.fail(f"{d.name} {p}", rule, f"stated lattice differs from Mod(w){extra}")
    if skipped:
        res.notes.append(f"{d.name}: {skipped} mixed classes have no closed-form basis (computed generically)")
    return res


def check_fills(d: RootDatum) -> SuiteResult:
    res = SuiteResult("fills")
    for p in all_class_params(d.type_label, d.rank):
        got = fills_move_set(representative(p))
        res.checks += 1
        if got != predicted_fills(p):
            res.fail(f"{d.name} {p}", f"type {d.type_label} filling corollary",
                     f"predicted {predicted_fills(p)}, computed {got}")
    return res


def check_rank_law_elements(d: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> SuiteResult:
    """rank Mod(w) = dim Mov(w) = reflection length, the last by BFS over reflections."""
    res = SuiteResult("rank-law")
    lengths = reflection_length_bfs(d, bound)
    for w in enumerate_group(d, bound):
        rep = mod_set(w)
        res.checks += 1
        if not rep.rank == rational_rank(w.id_minus()) == lengths[w.matrix]:
            res.fail(f"{d.name} {w.word_string()}", "rank of Mod equals reflection length",
                     f"rank Mod {rep.rank}, dim Mov {rational_rank(w.id_minus())}, "
                     f"reflection length {lengths[w.matrix]}")
    return res


def check_rank_law_reps(d: RootDatum) -> SuiteResult:
    res = SuiteResult("rank-law")
    for p in all_class_params(d.type_label, d.rank):
        w = representative(p)
        rep = mod_set(w)
        dim_mov = d.rank - fix_cap_lattice(w).rank
        res.checks += 1
        if not rep.rank == dim_mov == rational_rank(w.id_minus()):
            res.fail(f"{d.name} {p}", "rank of Mod equals reflection length",
                     f"rank Mod {rep.rank}, dim Mov {dim_mov}")
    return res


def check_exceptional() -> SuiteResult:
    res = SuiteResult("exceptional")
    for t in EXCEPTIONAL:
        d = root_datum(t)
        for k, row in enumerate(exceptional_table(t), 1):
            got = snf_diagonal(from_word(d, row["word"]).id_minus())
            res.checks += 1
            if list(got) != list(row["snf"]):
                res.fail(f"{t} row {k}", f"{t} word and Smith form table",
                         f"table {fmt_diag(row['snf'])}, computed {fmt_diag(got)}")
    return res


AFFINE_TEST_TYPES = ("A2", "B2", "C2", "G2", "A3")


def affine_test_elements(d: RootDatum, lam_radius: int = 2) -> list:
    """x = t^lam w, w over class representatives, every lam with |lam| <= lam_radius."""
    G = enumerate_group(d)
    reps = [G.element(c[0]) for c in conjugacy_classes(d)]
    lams = list(affconj.box(d.rank, lam_radius))
    return [affconj.AffineElement(lam, w) for w in reps for lam in lams]


def affine_partners(x) -> list:
    """A few conjugates of x from its window plus one element outside the class."""
    win = sorted(affconj.class_window(x, 2).elements, key=lambda e: (e.lam, e.w.matrix))
    picks = [win[i] for i in sorted({0, len(win) // 3, (2 * len(win)) // 3, len(win) - 1})]
    # a shift outside Mod(w) usually leaves the class; either answer is checked
    for v in affconj.box(x.w.rank, 1):
        if any(v) and not affconj.mod_lattice(x.w).contains(v):
            picks.append(affconj.AffineElement(tuple(a + b for a, b in zip(x.lam, v)), x.w))
            break
    return picks


def check_affine_windows(d: RootDatum, R: int) -> SuiteResult:
    res = SuiteResult("coconj")
    for x in affine_test_elements(d):
        res.checks += 1
        if affconj.class_window(x, R).keys() != affconj.brute_class_window(x, R):
            res.fail(f"affine {d.name} {x}", "closed form of conjugacy classes",
                     f"window R={R} differs from brute-force conjugation")
    return res


def check_coconj_pair(x, xp, radius: int, samples: int = 100) -> list:
    """Soundness on samples and completeness on the conjugator box; returns failure details."""
    bad = []
    report = affconj.coconjugation(x, xp)
    for y in report.sample(samples):
        if affconj.conjugate_affine(y, x).key() != xp.key():
            bad.append(f"sampled {y} does not conjugate x to x'")
            break
    brute = affconj.brute_conjugators(x, xp, radius)
    for y in brute:
        if len(report.matching_cosets(y)) != 1:
            bad.append(f"conjugator {y} is not in exactly one coset")
            break
    if bool(brute) and not report.nonempty:
        bad.append("report is empty but conjugators exist")
    return bad


def check_affine_coconj(d: RootDatum, radius: int) -> SuiteResult:
    res = SuiteResult("coconj")
    for x in affine_test_elements(d):
        for xp in affine_partners(x):
            res.checks += 1
            for detail in check_coconj_pair(x, xp, radius):
                res.fail(f"affine {d.name} x={x} x'={xp}", "coconjugation sets", detail)
    return res


def _task(item):
    name, args = item
    return _TASKS[name](*args)


_TASKS = {
    "reps": check_reps, "snf": check_snf, "basis": check_basis, "fills": check_fills,
    "rank-elements": check_rank_law_elements, "rank-reps": check_rank_law_reps,
    "windows": check_affine_windows, "coconj": check_affine_coconj,
}


def run_suite(suite: str, max_rank: Optional[int] = None, bound: int = DEFAULT_GROUP_BOUND,
              window: int = affconj.DEFAULT_WINDOW, oracle_radius: int = affconj.DEFAULT_ORACLE_RADIUS,
              jobs: int = 1) -> SuiteResult:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    m = _DEFAULT_MAX_RANK[suite] if max_rank is None else max_rank
    res = SuiteResult(suite)
    tasks: list = []
    if suite == "exceptional":
        res.merge(check_exceptional())
        res.suite = suite
        return res
    if suite == "reps":
        groups = classical_data(m)
        for t, r in EXCEPTIONAL.items():
            if r <= m:
                if root_datum(t).group_order <= bound:
                    groups.append(root_datum(t))
                else:
                    res.notes.append(f"{t} skipped: |W| exceeds the group bound {bound}")
        tasks = [("reps", (g, bound)) for g in groups]
    elif suite in ("snf", "basis", "fills"):
        tasks = [(suite, (g,)) for g in classical_data(m)]
        if suite == "snf":
            res.merge(audit_worked_examples())
    elif suite == "rank-law":
        groups = classical_data(m) + [root_datum(t) for t, r in EXCEPTIONAL.items() if r <= m]
        for g in groups:
            if g.group_order <= bound:
                tasks.append(("rank-elements", (g, bound)))
            else:
                res.notes.append(f"{g.name} elements skipped: |W| exceeds the group bound {bound}")
        tasks += [("rank-reps", (g,)) for g in classical_data(max(m, REPRESENTATIVE_RANK))]
    elif suite == "coconj":
        groups = [parse_datum(t) for t in AFFINE_TEST_TYPES if parse_datum(t).rank <= m]
        tasks = [("windows", (g, window)) for g in groups]
        tasks += [("coconj", (g, oracle_radius)) for g in groups]
    for part in _pmap(_task, tasks, jobs):
        res.merge(part)
    res.suite = suite
    return res


def print_suite(res: SuiteResult, fmt: str) -> None:
    if fmt == "json":
        print(dump_json(res.to_dict()))
        return
    for f in res.flags:
        print(f"FLAG [{f['anchor']}] {f['case']}: printed {fmt_diag(f['printed'])}, "
              f"computed {fmt_diag(f['computed'])}; {f['resolution']}")
    for f in res.failures:
        print(f"FAIL [{f['anchor']}] {f['case']}: {f['detail']}")
    for n in res.notes:
        print(f"note: {n}")
    status = "PASS" if res.passed else "FAIL"
    print(f"{status} {res.suite}: {res.checks} checks, {len(res.failures)} failures, {len(res.flags)} flagged")


def cmd_verify(args) -> int:
    res = run_suite(args.suite, args.max_rank, args.group_bound, args.window,
                    args.oracle_radius, args.jobs)
    print_suite(res, args.format)
    return EXIT_OK if res.passed else EXIT_FAIL


# -- parser ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _positive(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--group-bound", type=_positive, default=DEFAULT_GROUP_BOUND)
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    p = _Parser(prog="artifact", description="Mod-sets and conjugacy in Weyl and affine Weyl groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", parents=[common], help="one row per conjugacy class")
    t.add_argument("type", help="A, B, C, D, E6, E7, E8, F4, G2 or a label like C3")
    t.add_argument("rank", nargs="?", type=int)
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("modset", parents=[common], help="Mod(w) for a class or an explicit word")
    m.add_argument("spec", help="'A:beta=4', 'D:beta=2,2;delta=;sign=-', 'E6:row=3' or 'C3:word=123'")
    m.add_argument("--rank", type=int)
    m.set_defaults(func=cmd_modset)

    r = sub.add_parser("reps", parents=[common], help="list class representatives")
    r.add_argument("type")
    r.add_argument("rank", nargs="?", type=int)
    r.set_defaults(func=cmd_reps)

    for name, fn, text in (("coconj", cmd_coconj, "coconjugation set of x and x'"),
                           ("conj-test", cmd_conj_test, "decide whether x and x' are conjugate")):
        c = sub.add_parser(name, parents=[common], help=text)
        c.add_argument("type", help="finite type of the affine group, e.g. A2 or G2")
        c.add_argument("x", help="'lambda=1,0;word=12' (word may use the affine generator 0)")
        c.add_argument("x_prime")
        c.set_defaults(func=fn)

    v = sub.add_parser("verify", parents=[common], help="oracle checks of the closed forms")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--max-rank", type=_positive)
    v.add_argument("--window", type=_positive, default=affconj.DEFAULT_WINDOW)
    v.add_argument("--oracle-radius", type=_positive, default=affconj.DEFAULT_ORACLE_RADIUS)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ClassParamsError, RootDatumError) as exc:
        print(f"artifact: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupBoundExceeded as exc:
        print(f"artifact: error: {exc} (raise --group-bound)", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
