"""Command-line front end: parse algebra files, run solvers and checks.

Exit status is 0 when every executed check passed, 1 when some check
failed, and 2 for usage or file errors.  Checks whose hypotheses are
unmet are reported as skipped and do not affect the exit status.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraSpec, center, validate
from .catalog import BUILTIN, resolve
from .extension import (
    build_extended,
    verify_embedding_decomposition,
    verify_phi_properties,
)
from .fileformat import AlgebraFileError, parse_map_tuple
from .linalg import Matrix, contains, format_matrix, format_vec, is_zero_vec
from .spaces import (
    CheckReport,
    SpaceKind,
    check_bracket_laws,
    check_inclusion_chain,
    check_qc_structure,
    decompose_generalized,
    project_component,
    solve_space,
    space_contains,
)

_COMPONENT_NAMES = ("D", "D'", "D''")


def _matrix_json(m: Matrix) -> list[list[str]]:
    return [[str(m.at(r, c)) for c in range(m.cols)] for r in range(m.rows)]


def _emit(args, lines: list[str], doc: dict) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def _validation_lines(spec: AlgebraSpec, rep) -> list[str]:
    lines = [f"algebra {spec.name}: n={spec.n}, degrees {list(spec.degrees)}"]
    lines.append(f"skew-symmetry: {'ok' if rep.skew_ok else 'VIOLATED'}")
    lines.append(f"evenness: {'ok' if rep.even_ok else 'VIOLATED'}")
    lines.append(f"twisted Jacobi: {'ok' if rep.jacobi_ok else 'VIOLATED'}")
    lines.append(f"multiplicative: {'yes' if rep.multiplicative_ok else 'NO'}")
    for f in rep.failures[:12]:
        lines.append(f"  failure: {f.identity} at {f.indices}, "
                     f"residual {format_vec(f.residual)}")
    if len(rep.failures) > 12:
        lines.append(f"  ... and {len(rep.failures) - 12} more failures")
    if rep.axioms_ok:
        lines.append("all axioms hold, multiplicative: "
                     + ("yes" if rep.multiplicative_ok else "no"))
    else:
        lines.append("validation FAILED")
    return lines


def _report_lines(rep: CheckReport) -> list[str]:
    tags = {"pass": "pass", "fail": "FAIL", "skipped": "skip", "info": "info"}
    lines = [f"== {rep.title} =="]
    for c in rep.checks:
        line = f"  [{tags[c.status]}] {c.name}"
        if c.detail:
            line += f" -- {c.detail}"
        lines.append(line)
    lines.append(f"  {rep.summary()}")
    return lines


def _dimension_entries(spec: AlgebraSpec, k_max: int, strict: bool) -> list[dict]:
    out = []
    for kind in SpaceKind:
        for k in range(k_max + 1):
            for th in (0, 1):
                out.append({"kind": kind.value, "k": k, "theta": th,
                            "dim": solve_space(spec, kind, k, th, strict).dim})
    return out


def _dimension_lines(entries: list[dict]) -> list[str]:
    return [f"{e['kind']} k={e['k']} theta={e['theta']}: dim {e['dim']}"
            for e in entries]


def cmd_validate(args) -> int:
    # multiplicativity is a property of the twist, not an axiom, so it is
    # reported but does not fail the run
    spec = resolve(args.algebra)
    rep = validate(spec)
    doc = {"command": "validate", "algebra": spec.name,
           "validation": rep.to_dict(), "ok": rep.axioms_ok}
    _emit(args, _validation_lines(spec, rep), doc)
    return 0 if rep.axioms_ok else 1


def cmd_center(args) -> int:
    spec = resolve(args.algebra)
    z = center(spec)
    lines = [f"center of {spec.name}: dim {z.dim}"]
    lines.extend(f"  {format_vec(row)}" for row in z.basis)
    doc = {"command": "center", "algebra": spec.name, "dim": z.dim,
           "basis": [[str(x) for x in row] for row in z.basis]}
    _emit(args, lines, doc)
    return 0


def cmd_solve(args) -> int:
    spec = resolve(args.algebra)
    kind = SpaceKind.parse(args.kind)
    strict = not args.lax
    space = solve_space(spec, kind, args.k, args.degree, strict)
    mode = "strict" if strict else "lax"
    lines = [f"{kind.value} space of {spec.name} "
             f"(k={args.k}, degree={args.degree}, {mode}): dim {space.dim}"]
    for idx, t in enumerate(space.tuples, 1):
        lines.append(f"basis {idx}:")
        for cname, g in zip(_COMPONENT_NAMES, t):
            lines.append(f"  {cname} = {format_matrix(g.matrix)}")
    doc = {"command": "solve", "algebra": spec.name, "kind": kind.value,
           "k": args.k, "theta": args.degree, "strict": strict,
           "dim": space.dim,
           "tuples": [[_matrix_json(g.matrix) for g in t]
                      for t in space.tuples]}
    _emit(args, lines, doc)
    return 0


def _run_check_command(args, rep: CheckReport, command: str, spec) -> int:
    doc = {"command": command, "algebra": spec.name,
           "mode": {"strict": not args.lax, "k_max": getattr(args, "kmax", None)},
           "report": rep.to_dict(), "ok": rep.ok}
    _emit(args, _report_lines(rep), doc)
    return 0 if rep.ok else 1


def cmd_chain(args) -> int:
    spec = resolve(args.algebra)
    rep = check_inclusion_chain(spec, args.kmax, not args.lax)
    return _run_check_command(args, rep, "chain", spec)


def cmd_laws(args) -> int:
    spec = resolve(args.algebra)
    rep = check_bracket_laws(spec, args.kmax, not args.lax)
    return _run_check_command(args, rep, "laws", spec)


def cmd_jordan(args) -> int:
    spec = resolve(args.algebra)
    rep = check_qc_structure(spec, args.kmax, not args.lax)
    return _run_check_command(args, rep, "jordan", spec)


def cmd_decompose(args) -> int:
    spec = resolve(args.algebra)
    strict = not args.lax
    triple = parse_map_tuple(args.triple, spec.n, 3)
    degree = triple[0].degree
    try:
        (dq, dpartner), dc = decompose_generalized(spec, args.k, degree,
                                                   triple, strict)
    except ValueError as exc:
        print(f"decomposition failed: {exc}", file=sys.stderr)
        return 1
    qspace = solve_space(spec, SpaceKind.QDER, args.k, degree, strict)
    qc_span = project_component(
        solve_space(spec, SpaceKind.QC, args.k, degree, strict), 0)
    in_qder = space_contains(qspace, (dq, dpartner))
    in_qc = contains(qc_span, dc.flatten())
    exact = triple[0].matrix == dq.matrix + dc.matrix
    lines = [
        f"quasiderivation part Dq = {format_matrix(dq.matrix)}",
        f"  with partner Dq' = {format_matrix(dpartner.matrix)}",
        f"quasicentroid part Dc = {format_matrix(dc.matrix)}",
        f"(Dq, Dq') in QDer space: {'yes' if in_qder else 'NO'}",
        f"Dc in QC space: {'yes' if in_qc else 'NO'}",
        f"D = Dq + Dc exactly: {'yes' if exact else 'NO'}",
    ]
    doc = {"command": "decompose", "algebra": spec.name, "k": args.k,
           "theta": degree, "strict": strict,
           "qder_part": _matrix_json(dq.matrix),
           "qder_partner": _matrix_json(dpartner.matrix),
           "qc_part": _matrix_json(dc.matrix),
           "qder_member": in_qder, "qc_member": in_qc, "sum_exact": exact,
           "ok": in_qder and in_qc and exact}
    _emit(args, lines, doc)
    return 0 if in_qder and in_qc and exact else 1


def _extension_checks(spec: AlgebraSpec):
    """Build the double, validate it and check the t-power truncation."""
    ext = build_extended(spec)
    rep = validate(ext.spec)
    base_rep = validate(spec)
    axioms_ok = rep.axioms_ok
    mult_ok = rep.multiplicative_ok or not base_rep.multiplicative_ok
    n = spec.n
    nil_ok = all(
        is_zero_vec(ext.spec.brackets[i][j])
        for i in range(2 * n) for j in range(2 * n)
        if i >= n or j >= n)
    return ext, rep, axioms_ok and mult_ok, nil_ok


def cmd_extend(args) -> int:
    spec = resolve(args.algebra)
    try:
        ext, rep, valid_ok, nil_ok = _extension_checks(spec)
    except ValueError as exc:
        print(f"extension failed: {exc}", file=sys.stderr)
        return 1
    lines = [f"double of {spec.name}: n={ext.spec.n}",
             f"derived subalgebra of the base: dim {ext.derived.dim}",
             f"complement U: dim {ext.u_complement.dim}",
             f"double passes validation: {'yes' if valid_ok else 'NO'}",
             f"brackets with t-power >= 3 vanish: {'yes' if nil_ok else 'NO'}"]
    doc = {"command": "extend", "algebra": spec.name, "n": ext.spec.n,
           "derived_dim": ext.derived.dim,
           "u_complement_dim": ext.u_complement.dim,
           "validation": rep.to_dict(), "truncation_ok": nil_ok,
           "ok": valid_ok and nil_ok}
    _emit(args, lines, doc)
    return 0 if valid_ok and nil_ok else 1


def cmd_embed(args) -> int:
    spec = resolve(args.algebra)
    try:
        ext = build_extended(spec)
    except ValueError as exc:
        print(f"extension failed: {exc}", file=sys.stderr)
        return 1
    prep = verify_phi_properties(ext, args.k, not args.lax)
    drep = verify_embedding_decomposition(ext, args.k)
    lines = _report_lines(prep) + _report_lines(drep)
    ok = prep.ok and drep.ok
    doc = {"command": "embed", "algebra": spec.name, "k": args.k,
           "phi": prep.to_dict(), "decomposition": drep.to_dict(), "ok": ok}
    _emit(args, lines, doc)
    return 0 if ok else 1


def cmd_report(args) -> int:
    spec = resolve(args.algebra)
    strict = not args.lax
    k_max = args.kmax
    rep = validate(spec)
    lines = _validation_lines(spec, rep)
    doc = {"command": "report", "algebra": spec.name,
           "mode": {"strict": strict, "k_max": k_max},
           "validation": rep.to_dict()}
    if not rep.axioms_ok:
        lines.append("skipping computations: validation failed")
        doc["ok"] = False
        _emit(args, lines, doc)
        return 1

    z = center(spec)
    lines.append(f"center: dim {z.dim}")
    doc["center_dim"] = z.dim

    dims = _dimension_entries(spec, k_max, strict)
    lines.append("== dimensions ==")
    lines.extend(_dimension_lines(dims))
    doc["dimensions"] = dims

    reports = [
        check_inclusion_chain(spec, k_max, strict),
        check_bracket_laws(spec, k_max, strict),
        check_qc_structure(spec, k_max, strict),
    ]
    try:
        ext, ext_rep, ext_valid, nil_ok = _extension_checks(spec)
        lines.append("== double ==")
        lines.append(f"double validates: {'yes' if ext_valid else 'NO'}; "
                     f"t-power truncation: {'yes' if nil_ok else 'NO'}")
        doc["double"] = {"validates": ext_valid, "truncation_ok": nil_ok,
                         "u_complement_dim": ext.u_complement.dim}
        ext_ok = ext_valid and nil_ok
        for k in range(k_max + 1):
            reports.append(verify_phi_properties(ext, k, strict))
            reports.append(verify_embedding_decomposition(ext, k))
    except ValueError as exc:
        lines.append(f"double construction failed: {exc}")
        doc["double"] = {"error": str(exc)}
        ext_ok = False

    for r in reports:
        lines.extend(_report_lines(r))
    doc["checks"] = [r.to_dict() for r in reports]
    ok = rep.axioms_ok and ext_ok and all(r.ok for r in reports)
    doc["ok"] = ok
    _emit(args, lines, doc)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homlie",
        description="Exact computation with Hom-Lie superalgebras: "
                    "operator spaces, structure laws and the "
                    "quasiderivation embedding.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *, kind=False, k=False, kmax=False,
            degree=False, triple=False, lax=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("algebra",
                        help="algebra file path or bundled name "
                             f"({', '.join(BUILTIN)})")
        if kind:
            sp.add_argument("--kind", required=True,
                            help="one of Der, GDer, QDer, C, QC, ZDer")
        if k:
            sp.add_argument("--k", type=int, default=0, help="twist power")
        if kmax:
            sp.add_argument("--kmax", type=int, default=3,
                            help="largest twist power checked (default 3)")
        if degree:
            sp.add_argument("--degree", type=int, choices=(0, 1), default=0,
                            help="Z2 degree of the unknown maps")
        if triple:
            sp.add_argument("--triple", required=True,
                            help="JSON file with the three matrices")
        if lax:
            sp.add_argument("--lax", action="store_true",
                            help="drop the twist-commutation constraints")
        else:
            sp.set_defaults(lax=False)
        sp.add_argument("--json", action="store_true",
                        help="emit a machine-readable JSON report")
        sp.set_defaults(func=fn)

    add("validate", cmd_validate, "check the algebra axioms", lax=False)
    add("center", cmd_center, "compute the center", lax=False)
    add("solve", cmd_solve, "solve one operator space",
        kind=True, k=True, degree=True)
    add("chain", cmd_chain, "verify the inclusion chain", kmax=True)
    add("laws", cmd_laws, "verify the bracket and shift laws", kmax=True)
    add("decompose", cmd_decompose,
        "split a generalized-derivation triple", k=True, triple=True)
    add("extend", cmd_extend, "build and validate the t-graded double",
        lax=False)
    add("embed", cmd_embed, "verify the quasiderivation embedding", k=True)
    add("jordan", cmd_jordan,
        "verify quasicentroid closure and Jordan structure", kmax=True)
    add("report", cmd_report, "run the full verification suite", kmax=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
