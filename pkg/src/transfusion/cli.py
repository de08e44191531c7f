"""Command line front end.

Three subcommands: verify (seeded simplicial-identity sweeps), transgress
(per-element transgression with class verdicts and twisted ranks), and
fusion-table (basis bundles and integer structure constants).

Output discipline: everything semantic goes to stdout and is a pure
function of the flags and seed, so two runs with the same flags agree
byte for byte no matter how many workers run; wall-clock timing goes to
stderr. Exit codes: 0 all checks pass, 1 some check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
import time
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cochains import (
    Cochain,
    bockstein_lift,
    coboundary_solve,
    commutator_pairing,
    delta,
    inverse_transgression,
    is_cocycle,
    parse_poly,
    poly_to_cocycle,
    product_homotopy,
    pullback,
    random_cochain,
    read_cochain,
    shuffle_transgression,
    write_cochain,
    zero_cochain,
)
from .cyclotomic import as_cyclotomic
from .fusion import (
    CharacterSolver,
    FusionError,
    TwistContext,
    basis_bundles,
    bundle_violation,
    character,
    integer_coefficients,
    kclass_eq,
    make_context,
    star,
    trace_table,
    unit_bundle,
)
from .groupoids import (
    evaluation_hom,
    inertia,
    k_sectors,
    point_groupoid,
    unit_embedding,
)
from .groups import (
    FiniteGroup,
    GroupValidationError,
    construct_group,
)
from .projrep import (
    BasisError,
    CocycleError,
    cocycle_from_cochain,
    normalize_cocycle,
    twisted_rank,
)


class InputError(ValueError):
    """Bad flags or malformed input files; maps to exit code 2."""


@dataclass
class Report:
    """Everything a subcommand prints, assembled before any printing.

    body lines come first, then one line per check, then the result line.
    data carries the structured form for --json.
    """

    command: str
    body: List[str] = field(default_factory=list)
    checks: List[Dict[str, object]] = field(default_factory=list)
    data: Dict[str, object] = field(default_factory=dict)

    def check(self, name: str, ok: bool, detail: str, **extra) -> None:
        rec: Dict[str, object] = {
            "name": name,
            "status": "pass" if ok else "fail",
            "detail": detail,
        }
        rec.update(extra)
        self.checks.append(rec)

    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.checks)

    def render_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines.extend(self.body)
        for c in self.checks:
            mark = "pass" if c["status"] == "pass" else "FAIL"
            line = f"check {c['name']}: {mark} ({c['detail']})"
            if c["status"] == "fail" and "replay" in c:
                line += f"; replay with --check-tuple \"{c['replay']}\""
            lines.append(line)
        lines.append(f"result: {'fail' if self.failed() else 'pass'}")
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        payload = dict(self.data)
        payload["command"] = self.command
        payload["checks"] = self.checks
        payload["result"] = "fail" if self.failed() else "pass"
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def resolve_group(spec: str) -> FiniteGroup:
    """Compact spec, or @path for the line-based file format."""
    if spec.startswith("@"):
        path = spec[1:]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as e:
            raise InputError(f"cannot read group file {path}: {e}")
        return construct_group(lines)
    return construct_group(spec)


def load_twist(group: FiniteGroup, args) -> Tuple[Cochain, str]:
    """Degree-3 cochain from --poly/--cocycle/--zero, plus its description."""
    picked = [
        name
        for name, flag in (
            ("--poly", args.poly is not None),
            ("--cocycle", args.cocycle is not None),
            ("--zero", args.zero),
        )
        if flag
    ]
    if len(picked) != 1:
        raise InputError("pick exactly one of --poly, --cocycle, --zero")
    gpd = point_groupoid(group)
    if args.zero:
        if args.bockstein:
            raise InputError("--bockstein needs --poly")
        return zero_cochain(gpd, 3), "zero"
    if args.poly is not None:
        n_vars = group.order.bit_length() - 1
        if 2**n_vars != group.order:
            raise InputError("--poly needs a group of order 2^n")
        p = parse_poly(args.poly, n_vars)
        if args.bockstein:
            phi = bockstein_lift(p, group)
            desc = f"bockstein lift of {args.poly}"
        else:
            degs = p.degree_set()
            if degs != {3}:
                raise InputError(
                    "--poly without --bockstein needs a homogeneous degree-3 polynomial"
                )
            phi = poly_to_cocycle(p, group)
            desc = f"halved cup of {args.poly}"
        return phi, desc
    if args.bockstein:
        raise InputError("--bockstein needs --poly")
    try:
        with open(args.cocycle, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        raise InputError(f"cannot read cocycle file {args.cocycle}: {e}")
    phi = read_cochain(lines, gpd)
    if phi.degree != 3:
        raise InputError(f"cocycle file has degree {phi.degree}, need 3")
    return phi, f"file {args.cocycle}"


# verify: the four identity sweeps, one rng stream per trial


VERIFY_CHECKS = (
    "coboundary-squares-to-zero",
    "transgression-chain-map",
    "product-identity",
    "unit-pullback-triviality",
)

_VERIFY_STATE: Dict[str, object] = {}


def _first_key(diff: Cochain) -> Optional[Tuple[int, ...]]:
    if diff.is_zero():
        return None
    return min(diff.table)


def _trial_cochains(state: Dict[str, object], t: int):
    """The three seeded inputs of trial t. Draw order is fixed, so every
    worker layout sees the same cochains."""
    rng = random.Random(f"{state['seed']}:{t}")
    base = state["base"]
    d = state["degree"]
    b = random_cochain(base, d - 1, rng)
    phi = random_cochain(base, d, rng)
    psi = delta(random_cochain(base, d - 1, rng))
    return b, phi, psi


def _trial_sides(state: Dict[str, object], t: int):
    """Left and right cochain of each verify check for trial t."""
    base = state["base"]
    lam = state["lam"]
    two = state["two"]
    flip = state["flip"]
    b, phi, psi = _trial_cochains(state, t)

    def trans(c: Cochain) -> Cochain:
        th = inverse_transgression(c, lam)
        return -th if flip else th

    d = state["degree"]
    sides = {}
    sides["coboundary-squares-to-zero"] = (
        delta(delta(b)),
        zero_cochain(base, d + 1),
    )
    th = trans(phi)
    sides["transgression-chain-map"] = (delta(th), trans(delta(phi)))
    lhs = delta(product_homotopy(phi, two)) + product_homotopy(delta(phi), two)
    rhs = (
        pullback(evaluation_hom(two, "e1"), th)
        + pullback(evaluation_hom(two, "e2"), th)
        - pullback(evaluation_hom(two, "e12"), th)
    )
    sides["product-identity"] = (lhs, rhs)
    sides["unit-pullback-triviality"] = (
        pullback(unit_embedding(lam), trans(psi)),
        delta(pullback(unit_embedding(two), product_homotopy(psi, two))),
    )
    return sides


def _verify_trial(t: int) -> Dict[str, Optional[Tuple[int, ...]]]:
    sides = _trial_sides(_VERIFY_STATE, t)
    return {name: _first_key(a - b) for name, (a, b) in sides.items()}


def _run_trials(state: Dict[str, object], trials: int, workers: int):
    global _VERIFY_STATE
    _VERIFY_STATE = state
    if workers > 1:
        # fork inherits the state dict; map keeps trial order
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            return pool.map(_verify_trial, range(trials))
    return [_verify_trial(t) for t in range(trials)]


def _parse_check_tuple(text: str) -> Tuple[str, int, Tuple[int, ...]]:
    parts = text.split(":")
    if len(parts) != 3:
        raise InputError("check tuple format is NAME:TRIAL:K1,K2,...")
    name, trial_s, key_s = parts
    if name not in VERIFY_CHECKS:
        raise InputError(f"unknown check {name!r}; one of {', '.join(VERIFY_CHECKS)}")
    try:
        trial = int(trial_s)
        key = tuple(int(x) for x in key_s.split(",") if x != "")
    except ValueError:
        raise InputError("check tuple trial and key entries must be integers")
    if trial < 0:
        raise InputError("check tuple trial must be nonnegative")
    return name, trial, key


def _validate_key(diff: Cochain, key: Tuple[int, ...]) -> None:
    gpd = diff.groupoid
    if diff.degree == 0:
        if len(key) != 1 or not 0 <= key[0] < gpd.n_objects:
            raise InputError(f"key {key} is not an object of the check's groupoid")
        return
    if len(key) != diff.degree:
        raise InputError(f"key {key} has length {len(key)}, check degree is {diff.degree}")
    for a in key:
        if not 0 <= a < gpd.n_arrows:
            raise InputError(f"arrow index {a} out of range")
    for a, b in zip(key, key[1:]):
        if gpd.target[a] != gpd.source[b]:
            raise InputError(f"key {key} is not a composable chain")


def _replay_tuple(state: Dict[str, object], report: Report, spec: str) -> None:
    name, trial, key = _parse_check_tuple(spec)
    sides = _trial_sides(state, trial)
    lhs, rhs = sides[name]
    _validate_key(lhs - rhs, key)
    lv, rv = lhs.value(key), rhs.value(key)
    report.body.append(f"replay {name} trial {trial} key ({','.join(map(str, key))})")
    report.body.append(f"lhs: {frac_str(lv)}")
    report.body.append(f"rhs: {frac_str(rv)}")
    report.check(
        name,
        lv == rv,
        f"replayed trial {trial}",
        witness={"trial": trial, "key": list(key)},
    )
    report.data["replay"] = {
        "check": name,
        "trial": trial,
        "key": list(key),
        "lhs": frac_str(lv),
        "rhs": frac_str(rv),
    }


def cmd_verify(args) -> Report:
    if args.degree < 2:
        raise InputError("--degree must be at least 2")
    if args.trials < 1:
        raise InputError("--trials must be at least 1")
    group = resolve_group(args.group)
    base = point_groupoid(group)
    state = {
        "base": base,
        "lam": inertia(base),
        "two": k_sectors(base, 2),
        "degree": args.degree,
        "seed": args.seed,
        "flip": args.debug_flip_transgression_sign,
    }
    echo = (
        f"verify --group {args.group} --degree {args.degree}"
        f" --trials {args.trials} --seed {args.seed}"
    )
    if args.debug_flip_transgression_sign:
        echo += " --debug-flip-transgression-sign"
    report = Report(command=echo)
    report.body.append(f"group: {args.group} (order {group.order})")
    report.data["group"] = {"spec": args.group, "order": group.order}

    if args.check_tuple is not None:
        _replay_tuple(state, report, args.check_tuple)
        return report

    results = _run_trials(state, args.trials, max(1, args.workers))
    report.data["trials"] = args.trials
    for name in VERIFY_CHECKS:
        fails = [(t, res[name]) for t, res in enumerate(results) if res[name] is not None]
        if not fails:
            report.check(name, True, f"{args.trials} trials")
        else:
            t0, key = fails[0]
            replay = f"{name}:{t0}:{','.join(map(str, key))}"
            report.check(
                name,
                False,
                f"{len(fails)} of {args.trials} trials failed",
                witness={"trial": t0, "key": list(key)},
                replay=replay,
            )
    return report


# transgress: one shuffle transgression per group element


def cmd_transgress(args) -> Report:
    group = resolve_group(args.group)
    phi, desc = load_twist(group, args)
    if not is_cocycle(phi):
        raise InputError("the chosen twist is not a cocycle")
    echo = f"transgress --group {args.group} --twist {desc}"
    if args.out:
        echo += f" --out {args.out}"
    report = Report(command=echo)
    report.body.append(f"group: {args.group} (order {group.order})")
    report.body.append(f"twist: {desc}, support {len(phi.table)}")
    report.data["group"] = {"spec": args.group, "order": group.order}
    report.data["twist"] = {"description": desc, "support": len(phi.table)}

    if args.out:
        os.makedirs(args.out, exist_ok=True)

    sectors = []
    total = 0
    cocycle_failures = []
    for g in group.elements():
        tg, zgrp, members = shuffle_transgression(group, phi, g)
        try:
            tc, _ = normalize_cocycle(zgrp, cocycle_from_cochain(zgrp, tg))
        except CocycleError as e:
            cocycle_failures.append((g, str(e)))
            continue
        rank = twisted_rank(tc)
        total += rank
        witness = coboundary_solve(tg)
        verdict = "trivial" if witness is not None else "nontrivial"
        rec: Dict[str, object] = {
            "element": g,
            "centralizer-order": zgrp.order,
            "class": verdict,
            "twisted-rank": rank,
        }
        line = (
            f"sector g={g}: centralizer order {zgrp.order},"
            f" class {verdict}, twisted rank {rank}"
        )
        if zgrp.is_abelian():
            pairing = commutator_pairing(zgrp, tg)
            nonzero = {k: v for k, v in pairing.items() if v}
            radical = [
                members[a]
                for a in zgrp.elements()
                if all(not pairing[(a, b)] for b in zgrp.elements())
            ]
            line += (
                f", pairing nonzero pairs {len(nonzero)},"
                f" radical {{{','.join(map(str, radical))}}}"
            )
            rec["pairing-nonzero"] = {
                f"{a},{b}": frac_str(v) for (a, b), v in sorted(nonzero.items())
            }
            rec["pairing-radical"] = radical
        report.body.append(line)
        if args.out:
            path = os.path.join(args.out, f"sector_{g:03d}.cochain")
            lines = [
                "# transgressed 2-cochain on the centralizer of one element",
                f"# group {args.group}",
                f"# element {g}",
                f"# centralizer members {' '.join(map(str, members))}",
            ] + write_cochain(tg)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
            report.body.append(f"wrote: {path}")
            rec["file"] = path
        sectors.append(rec)
    report.body.append(f"total twisted rank: {total}")
    report.data["sectors"] = sectors
    report.data["total-rank"] = total
    if cocycle_failures:
        g0, msg = cocycle_failures[0]
        report.check(
            "sector-cocycles",
            False,
            f"{len(cocycle_failures)} sectors failed, first at g={g0}: {msg}",
            witness={"element": g0},
        )
    else:
        report.check("sector-cocycles", True, f"{group.order} sectors")
    return report


# fusion-table: basis, products, integer constants, ring checks

_FUSION_STATE: Dict[str, object] = {}


def _pair_product(task: Tuple[int, int]) -> Tuple[int, int, Dict[str, object]]:
    i, j = task
    basis = _FUSION_STATE["basis"]
    solver = _FUSION_STATE["solver"]

    def one(a: int, b: int) -> Dict[str, object]:
        prod = star(basis[a], basis[b])
        viol = bundle_violation(prod)
        if viol is not None:
            return {"violation": f"{viol[0]} at {viol[1]}", "table": None}
        tab = trace_table(prod)
        coeffs, bad = solver.expand(tab)
        if coeffs is None:
            return {"violation": None, "coeffs": None, "residual": [list(k) for k in bad], "table": tab}
        return {"violation": None, "coeffs": integer_coefficients(coeffs), "table": tab}

    rec: Dict[str, object] = {"ij": one(i, j)}
    if i != j:
        rec["ji"] = one(j, i)
        ti, tj = rec["ij"]["table"], rec["ji"]["table"]
        rec["commutes"] = (
            ti is not None and tj is not None and all(ti[k] == tj[k] for k in ti)
        )
    else:
        rec["commutes"] = rec["ij"]["table"] is not None
    rec["ij"].pop("table", None)
    if "ji" in rec:
        rec["ji"].pop("table", None)
    return i, j, rec


def _associativity_violation(nmat) -> Optional[Tuple[int, int, int]]:
    """First (i, j, k) where the two bracketed integer expansions differ."""
    n = len(nmat)
    for i in range(n):
        for j in range(n):
            row_ij = nmat[i][j]
            for k in range(n):
                lhs = [0] * n
                for m in range(n):
                    c = row_ij[m]
                    if c:
                        rm = nmat[m][k]
                        for l in range(n):
                            if rm[l]:
                                lhs[l] += c * rm[l]
                rhs = [0] * n
                row_jk = nmat[j][k]
                for m in range(n):
                    c = row_jk[m]
                    if c:
                        rm = nmat[i][m]
                        for l in range(n):
                            if rm[l]:
                                rhs[l] += c * rm[l]
                if lhs != rhs:
                    return (i, j, k)
    return None


def cmd_fusion_table(args) -> Report:
    group = resolve_group(args.group)
    phi, desc = load_twist(group, args)
    if not is_cocycle(phi):
        raise InputError("the chosen twist is not a cocycle")
    echo = f"fusion-table --group {args.group} --twist {desc}"
    report = Report(command=echo)
    report.body.append(f"group: {args.group} (order {group.order})")
    report.data["group"] = {"spec": args.group, "order": group.order}
    report.data["twist"] = {"description": desc}

    try:
        ctx = make_context(group, phi)
    except FusionError as e:
        report.check("context-invariants", False, str(e))
        return report
    report.body.append(
        f"context: validation={ctx.validation}"
        f" normalized={'yes' if ctx.normalized else 'no'} conductor={ctx.conductor}"
    )
    report.check("context-invariants", True, ctx.validation)
    if not group.is_abelian() and not (ctx.tau.is_zero() and ctx.mu.is_zero()):
        raise InputError(
            "fusion tables cover abelian groups with any twist and"
            " nonabelian groups with the zero twist"
        )

    basis = basis_bundles(ctx)
    n = len(basis)
    report.body.append(f"basis: {n} bundles")
    basis_data = []
    for k, v in enumerate(basis):
        supp = v.support()
        dims = ",".join(str(v.dims[g]) for g in supp)
        report.body.append(
            f"basis {k}: support {{{','.join(map(str, supp))}}} dims {dims}"
        )
        basis_data.append({"index": k, "support": list(supp), "dims": list(v.dims)})
    report.data["basis"] = basis_data

    chars = [character(v) for v in basis]
    solver = CharacterSolver(ctx, chars)
    unit_char = character(unit_bundle(ctx))
    unit_idx = [k for k, c in enumerate(chars) if kclass_eq(c, unit_char)]

    global _FUSION_STATE
    _FUSION_STATE = {"basis": basis, "solver": solver}
    tasks = [(i, j) for i in range(n) for j in range(i, n)]
    workers = max(1, args.workers)
    if workers > 1:
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            results = pool.map(_pair_product, tasks)
    else:
        results = [_pair_product(t) for t in tasks]

    nmat: List[List[Optional[Tuple[int, ...]]]] = [[None] * n for _ in range(n)]
    violations = []
    residuals = []
    non_commuting = []
    for i, j, rec in results:
        for key, (a, b) in (("ij", (i, j)),) + ((("ji", (j, i)),) if i != j else ()):
            side = rec[key]
            if side["violation"] is not None:
                violations.append((a, b, side["violation"]))
            elif side["coeffs"] is None:
                residuals.append((a, b, side["residual"]))
            else:
                nmat[a][b] = tuple(side["coeffs"])
        if not rec["commutes"]:
            non_commuting.append((i, j))

    n_products = n * n
    if violations:
        a, b, msg = violations[0]
        report.check(
            "product-validity",
            False,
            f"{len(violations)} of {n_products} products invalid, first ({a},{b}): {msg}",
            witness={"pair": [a, b]},
        )
    else:
        report.check("product-validity", True, f"all {n_products} products validated")
    if residuals:
        a, b, bad = residuals[0]
        report.check(
            "integer-expansion",
            False,
            f"{len(residuals)} products outside the basis span,"
            f" first ({a},{b}) with residual at {len(bad)} keys, first key {tuple(bad[0])}",
            witness={"pair": [a, b], "residual-keys": bad[:8]},
        )
    elif violations:
        report.check("integer-expansion", False, "skipped; invalid products above")
    else:
        ok = all(nmat[i][j] is not None for i in range(n) for j in range(n))
        report.check(
            "integer-expansion",
            ok,
            f"all {n_products} products expand integrally" if ok else "internal gap",
        )

    table_ready = not violations and not residuals
    if table_ready:
        if non_commuting:
            i, j = non_commuting[0]
            report.check(
                "commutativity",
                False,
                f"{len(non_commuting)} pairs differ, first ({i},{j})",
                witness={"pair": [i, j]},
            )
        else:
            report.check("commutativity", True, f"{len(tasks)} unordered pairs")
        aw = _associativity_violation(nmat)
        if aw is None:
            report.check("associativity", True, f"all {n**3} triples")
        else:
            report.check(
                "associativity",
                False,
                f"first failing triple {aw}",
                witness={"triple": list(aw)},
            )
        if len(unit_idx) == 1:
            u = unit_idx[0]
            unit_ok = all(
                nmat[u][j] == tuple(1 if m == j else 0 for m in range(n))
                and nmat[j][u] == tuple(1 if m == j else 0 for m in range(n))
                for j in range(n)
            )
            report.check(
                "unit-row",
                unit_ok,
                f"basis {u} is the unit" if unit_ok else f"basis {u} has a non-identity row",
            )
            report.data["unit-index"] = u
        else:
            report.check(
                "unit-row", False, f"{len(unit_idx)} basis characters match the unit"
            )
        report.body.append("table rows (i j -> coefficients):")
        for i in range(n):
            for j in range(n):
                report.body.append(f"{i} {j} -> {' '.join(map(str, nmat[i][j]))}")
        report.data["constants"] = [
            [list(nmat[i][j]) for j in range(n)] for i in range(n)
        ]
    else:
        report.check("commutativity", False, "skipped; table incomplete")
        report.check("associativity", False, "skipped; table incomplete")
        report.check("unit-row", False, "skipped; table incomplete")
    return report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="transfusion",
        description="exact transgression and fusion checks on finite groups",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_group(sp):
        sp.add_argument(
            "--group",
            required=True,
            help="compact spec (cyclic:4, elemab:2,3, symmetric:3,"
            " product:cyclic:2,cyclic:4) or @path to a group file",
        )

    def add_twist(sp):
        sp.add_argument("--poly", help="mod-2 polynomial like xyz or x2y|y3")
        sp.add_argument(
            "--bockstein",
            action="store_true",
            help="lift the polynomial through the integral degree shift",
        )
        sp.add_argument("--cocycle", help="path to a degree-3 cochain file")
        sp.add_argument("--zero", action="store_true", help="use the zero twist")

    v = sub.add_parser("verify", help="seeded sweeps of the simplicial identities")
    add_group(v)
    v.add_argument("--degree", type=int, default=3)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--seed", default="0")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument(
        "--check-tuple",
        metavar="NAME:TRIAL:K1,K2",
        help="re-evaluate one reported witness and print both sides",
    )
    v.add_argument(
        "--debug-flip-transgression-sign",
        action="store_true",
        help=argparse.SUPPRESS,
    )

    t = sub.add_parser(
        "transgress", help="transgress a 3-cocycle to every loop sector"
    )
    add_group(t)
    add_twist(t)
    t.add_argument("--out", help="directory for per-sector cochain files")
    t.add_argument("--json", action="store_true")

    f = sub.add_parser(
        "fusion-table", help="basis bundles and integer structure constants"
    )
    add_group(f)
    add_twist(f)
    f.add_argument("--workers", type=int, default=1)
    f.add_argument("--json", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command == "verify":
            report = cmd_verify(args)
        elif args.command == "transgress":
            report = cmd_transgress(args)
        else:
            report = cmd_fusion_table(args)
    except (InputError, GroupValidationError, CocycleError, BasisError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out = report.render_json() if args.json else report.render_text()
    sys.stdout.write(out)
    print(f"timing: {args.command} {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return 1 if report.failed() else 0


if __name__ == "__main__":
    raise SystemExit(main())
