"""Command-line surface.

Subcommands load categories, functors, or linear pairs — from JSON
description files or from the builtin catalog — run the requested checks,
and emit a report: human-readable text by default, structured JSON with
``--json``.  Exit codes: 0 when every verdict passes, 1 when at least one
fails, 2 on input or usage errors (which never produce partial reports).

A ``--out DIR`` directory receives the report as CSV together with a
rendered verdict chart (and, for ``catalog``, build timings).  The
FROBCAT_SEED environment variable fixes the sampling order wherever a
scope is too large to enumerate.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any, Callable

from .autonomy import check_autonomous, kappa_transf, lambda_transf
from .boolmat import BoolMatCategory
from .core import as_view, validate_category
from .duality import find_left_dual, find_right_dual
from .errors import (
    CommonCompositeMismatch,
    FrobeniusFailure,
    FrobcatError,
    MalformedTable,
    MissingStructure,
    NotFound,
    NotInvertible,
    ScopeTooLarge,
    StructuresDisagree,
    TypeMismatch,
)
from . import io as fio
from .figures import render_timings, render_verdicts
from .instances import (
    BoolMatrixInstance,
    FunctorInstance,
    LinearInstance,
    catalog_entries,
    resolve_builtin,
)
from .linear import adjudicate_when_lin_frob, check_linear
from .report import Report, ReportBuilder
from .structures import (
    FunctorData,
    check_comonoidal,
    check_components_invertible,
    check_frobenius,
    check_monoidal,
    check_nat_flavor,
)
from .synthesis import (
    adjudicate_cor_frob,
    build_sigma_tau,
    resolve_witness,
    synthesize_comonoidal,
)

_SYNTHESIS_ERRORS = (
    CommonCompositeMismatch,
    StructuresDisagree,
    FrobeniusFailure,
    NotInvertible,
    TypeMismatch,
    MalformedTable,
    MissingStructure,
    ScopeTooLarge,
)

_FAIL_PRINT_CAP = 20


class _Usage(Exception):
    """Input or usage problem: reported on stderr, exit code 2, no report."""


# ---------------------------------------------------------------------------
# input loading
# ---------------------------------------------------------------------------

def _read_doc(path: str) -> dict[str, Any]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Usage(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise _Usage(f"{path} must contain a JSON object")
    return doc


def _resolve(text: str, kind: str):
    try:
        entry, built = resolve_builtin(text)
    except (NotFound, ValueError, FrobcatError) as exc:
        raise _Usage(str(exc)) from None
    if entry.kind != kind:
        raise _Usage(f"builtin {entry.name!r} is a {entry.kind}, not a {kind}")
    return built


def _one_input(args, file_attr: str, what: str) -> tuple[str | None, str | None]:
    path = getattr(args, file_attr, None)
    builtin = getattr(args, "builtin", None)
    if (path is None) == (builtin is None):
        raise _Usage(f"give exactly one {what}: --{file_attr} PATH or --builtin NAME")
    return path, builtin


def _load_category(args) -> fio.LoadedCategory:
    path, builtin = _one_input(args, "category", "category")
    if builtin is not None:
        built = _resolve(builtin, "category")
        if isinstance(built, BoolMatrixInstance):
            return fio.LoadedCategory(built.category, context=built.context)
        return fio.LoadedCategory(built)
    try:
        return fio.doc_to_category(_read_doc(path))
    except FrobcatError as exc:
        raise _Usage(str(exc)) from None


def _load_functor(args) -> FunctorInstance:
    path, builtin = _one_input(args, "functor", "functor")
    if builtin is not None:
        return _resolve(builtin, "functor")
    try:
        loaded = fio.doc_to_functor(_read_doc(path))
    except FrobcatError as exc:
        raise _Usage(str(exc)) from None
    return FunctorInstance(
        loaded.functor,
        _context_or_none(loaded.source),
        _context_or_none(loaded.target),
    )


def _load_linear(args) -> LinearInstance:
    path, builtin = _one_input(args, "linear", "linear pair")
    if builtin is not None:
        return _resolve(builtin, "linear")
    try:
        loaded = fio.doc_to_linear(_read_doc(path))
    except FrobcatError as exc:
        raise _Usage(str(exc)) from None
    return LinearInstance(
        loaded.linear,
        _context_or_none(loaded.source),
        _context_or_none(loaded.target),
    )


def _context_or_none(loaded: fio.LoadedCategory):
    try:
        return loaded.build_context()
    except FrobcatError:
        return None


def _check_scope(args, view) -> None:
    label = view.scope_label()
    if args.scope is not None and args.scope != label:
        raise _Usage(
            f"this input checks over the {label!r} scope; "
            f"--scope {args.scope} is not available for it"
        )


# ---------------------------------------------------------------------------
# output delivery
# ---------------------------------------------------------------------------

def _print_human(report: Report, head: list[str]) -> None:
    for line in head:
        print(line)
    failures = [e for e in report.entries if not e.holds]
    print(f"{report.title} — scope: {report.scope}")
    print(f"{len(report.entries)} checks, {len(failures)} failing")
    for e in failures[:_FAIL_PRINT_CAP]:
        inst = ", ".join(e.instantiation)
        detail = ""
        if e.witness is not None and e.witness.error:
            detail = f" — {e.witness.error}"
        print(f"  FAIL {e.equation_id} @ ({inst}){detail}")
    if len(failures) > _FAIL_PRINT_CAP:
        print(f"  ... and {len(failures) - _FAIL_PRINT_CAP} more failing entries")
    print(f"verdict: {'PASS' if report.ok else 'FAIL'} ({report.elapsed:.2f}s)")


def _deliver(
    args,
    report: Report,
    extra: dict[str, Any] | None = None,
    emit_doc: dict[str, Any] | None = None,
    head: list[str] | None = None,
) -> int:
    if getattr(args, "emit", None):
        if emit_doc is not None:
            text = json.dumps(emit_doc, indent=2, sort_keys=True) + "\n"
        else:
            text = fio.emit_report(report) + "\n"
        Path(args.emit).write_text(text)
    if getattr(args, "out", None):
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.csv").write_text(fio.report_to_csv(report))
        render_verdicts(report, out / "verdicts.png")
    if args.json:
        doc: dict[str, Any] = {"report": fio.report_to_doc(report)}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        _print_human(report, head or [])
    return 0 if report.ok else 1


def _timed(report: Report, started: float) -> Report:
    report.elapsed = time.perf_counter() - started
    return report


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_validate(args) -> int:
    started = time.perf_counter()
    loaded = _load_category(args)
    view = as_view(loaded.category)
    _check_scope(args, view)
    if args.max_objects is not None:
        view = view.with_limit(args.max_objects)
    report = _timed(validate_category(view), started)
    return _deliver(args, report)


def _cmd_find_duals(args) -> int:
    started = time.perf_counter()
    loaded = _load_category(args)
    view = as_view(loaded.category)
    _check_scope(args, view)
    if args.max_objects is not None:
        view = view.with_limit(args.max_objects)
    rb = ReportBuilder(f"duals in {view.name}", view.scope_label())
    table: dict[str, dict[str, Any]] = {}
    finders: list[tuple[str, str, Callable, dict]] = [
        ("left", "left-dual", find_left_dual, loaded.left_hints or {}),
        ("right", "eq:rightdual", find_right_dual, loaded.right_hints or {}),
    ]
    if loaded.context is not None:
        finders = [
            ("left", "left-dual", lambda v, x, hint: (
                loaded.context.left.dual(x),
                loaded.context.left.unit(x),
                loaded.context.left.counit(x),
            ), {}),
            ("right", "eq:rightdual", lambda v, x, hint: (
                loaded.context.right.dual(x),
                loaded.context.right.unit(x),
                loaded.context.right.counit(x),
            ), {}),
        ]
    for side, eq_id, finder, hints in finders:
        for x in view.objects:
            label = view.obj_label(x)
            try:
                sx, d, e = finder(view, x, hints.get(x))
            except (NotFound, FrobcatError) as exc:
                rb.entry(eq_id, (label,), False, note=str(exc))
                continue
            rb.entry(eq_id, (label,), True)
            table.setdefault(side, {})[label] = {
                "dual": view.obj_label(sx),
                "unit": fio.mor_id(view, d),
                "counit": fio.mor_id(view, e),
            }
    report = _timed(rb.build(), started)
    head = []
    for side in ("left", "right"):
        for label, rec in table.get(side, {}).items():
            head.append(
                f"{side:>5} dual of {label}: {rec['dual']} "
                f"(unit {rec['unit']}, counit {rec['counit']})"
            )
    return _deliver(args, report, extra={"duals": table}, head=head)


def _functor_check(args, checker: Callable[[FunctorData, ReportBuilder], bool], what: str) -> int:
    started = time.perf_counter()
    inst = _load_functor(args)
    func = inst.functor
    _check_scope(args, func.source)
    rb = ReportBuilder(f"{what} of {func.name}", func.source.scope_label())
    try:
        checker(func, rb)
    except MissingStructure as exc:
        rb.entry(what, (func.name,), False, note=str(exc))
    report = _timed(rb.build(), started)
    return _deliver(args, report)


def _cmd_check_monoidal(args) -> int:
    return _functor_check(args, check_monoidal, "monoidal")


def _cmd_check_comonoidal(args) -> int:
    return _functor_check(args, check_comonoidal, "comonoidal")


def _cmd_check_frobenius(args) -> int:
    return _functor_check(args, check_frobenius, "frobenius")


def _require_contexts(inst: FunctorInstance, rb: ReportBuilder, eq_id: str) -> bool:
    if inst.source is None or inst.target is None:
        rb.entry(
            eq_id, (inst.functor.name,), False,
            note="no duality context: an endpoint category lacks duals",
        )
        return False
    return True


def _cmd_check_autonomous(args) -> int:
    started = time.perf_counter()
    inst = _load_functor(args)
    func = inst.functor
    _check_scope(args, func.source)
    rb = ReportBuilder(f"autonomy of {func.name}", func.source.scope_label())
    extra: dict[str, Any] = {}
    if _require_contexts(inst, rb, "eq1:lax_pres_dual"):
        witness = resolve_witness(func, inst.source, inst.target)
        if witness is None:
            rb.entry(
                "eq1:lax_pres_dual", (func.name,), False,
                note="no comparison map could be resolved for this functor",
            )
        else:
            extra["witness_provenance"] = witness.provenance
            left = check_autonomous(func, inst.source, inst.target, witness, side="left")
            right = check_autonomous(func, inst.source, inst.target, witness, side="right")
            rb.merge(left)
            rb.merge(right)
            rb.entry(
                "rem:leftaut=rightaut", (func.name,), left.ok == right.ok,
                note="the two sides reached different verdicts",
            )
    report = _timed(rb.build(), started)
    head = []
    if extra.get("witness_provenance"):
        head.append(f"comparison map: {extra['witness_provenance']}")
    return _deliver(args, report, extra=extra, head=head)


def _cmd_check_nat(args) -> int:
    started = time.perf_counter()
    inst = _load_functor(args)
    func = inst.functor
    _check_scope(args, func.source)
    rb = ReportBuilder(f"comparison transformations of {func.name}", func.source.scope_label())
    extra: dict[str, Any] = {}
    if _require_contexts(inst, rb, "nat(kappa)"):
        witness = resolve_witness(func, inst.source, inst.target)
        if witness is None:
            rb.entry(
                "nat(kappa)", (func.name,), False,
                note="no comparison map could be resolved for this functor",
            )
        else:
            extra["witness_provenance"] = witness.provenance
            t_kappa = kappa_transf(
                func, inst.source, inst.target, witness.kappa,
                flavor="monoidal-comonoidal",
            )
            check_nat_flavor(
                t_kappa, rb, nat_eq_id="nat(kappa)", flavor_eq_id="eq:lax-colax"
            )
            check_components_invertible(t_kappa, rb, "iso(kappa)")
            t_lambda = lambda_transf(
                func, inst.source, inst.target, witness.lam,
                flavor="comonoidal-monoidal",
            )
            check_nat_flavor(t_lambda, rb, nat_eq_id="nat(lambda)")
            check_components_invertible(t_lambda, rb, "iso(lambda)")
    report = _timed(rb.build(), started)
    return _deliver(args, report, extra=extra)


def _cmd_check_linear(args) -> int:
    started = time.perf_counter()
    inst = _load_linear(args)
    _check_scope(args, inst.linear.source)
    report = _timed(check_linear(inst.linear), started)
    return _deliver(args, report)


def _cmd_synthesize(args) -> int:
    started = time.perf_counter()
    inst = _load_functor(args)
    func = inst.functor
    _check_scope(args, func.source)
    rb = ReportBuilder(f"synthesis for {func.name}", func.source.scope_label())
    extra: dict[str, Any] = {}
    emit_doc = None
    head: list[str] = []
    if _require_contexts(inst, rb, "synth:route-agreement"):
        witness = resolve_witness(func, inst.source, inst.target)
        if witness is None:
            rb.entry(
                "synth:route-agreement", (func.name,), False,
                note="no comparison map could be resolved for this functor",
            )
        else:
            extra["witness_provenance"] = witness.provenance
            try:
                outputs = build_sigma_tau(func, inst.source, inst.target, witness, rb)
                synthesized = synthesize_comonoidal(
                    func, outputs, inst.source, inst.target, rb
                )
            except _SYNTHESIS_ERRORS as exc:
                interim = rb.build()
                if interim.ok:
                    rb = ReportBuilder(rb.title, interim.scope)
                    rb.merge(interim)
                    rb.entry("synth:route-agreement", (func.name,), False, note=str(exc))
            else:
                v, w = func.source, func.target
                pairs = []
                for x in v.objects:
                    for y in v.objects:
                        pairs.append(
                            [x, y, fio.mor_id(w, synthesized.pair(x, y))]
                        )
                structure_doc = {
                    "pairs": pairs,
                    "unit": fio.mor_id(w, synthesized.unit),
                }
                extra["synthesized_comonoidal"] = structure_doc
                head.append(
                    f"synthesized copairing at {len(pairs)} object pairs "
                    f"(unit {structure_doc['unit']})"
                )
                if getattr(args, "emit", None):
                    emit_doc = _patched_functor_doc(args, inst, synthesized)
    report = _timed(rb.build(), started)
    return _deliver(args, report, extra=extra, emit_doc=emit_doc, head=head)


def _patched_functor_doc(args, inst: FunctorInstance, synthesized) -> dict[str, Any]:
    func = inst.functor
    patched = FunctorData(
        func.name, func.source, func.target, func.obj, func.mor,
        monoidal=func.monoidal, comonoidal=synthesized,
    )
    if args.functor is not None:
        original = _read_doc(args.functor)
        src_doc, tgt_doc = original["source"], original["target"]
    else:
        src_doc = _endpoint_doc(args.builtin, inst.source, func.source)
        tgt_doc = _endpoint_doc(args.builtin, inst.target, func.target)
    return fio.functor_to_doc(patched, src_doc, tgt_doc)


def _endpoint_doc(builtin: str, context, view) -> dict[str, Any]:
    base = view.base
    if isinstance(base, BoolMatCategory):
        return fio.category_to_doc(
            base, context=context, builtin=f"bool:{max(base.objects)}"
        )
    return fio.category_to_doc(base, context=context)


def _matrix_extra(matrix) -> dict[str, Any]:
    return {
        "matrix": {
            "functor": matrix.functor,
            "conditions": dict(matrix.conditions),
            "agree": matrix.agree,
            "rejected": matrix.rejected,
            "gate": matrix.gate,
            "witness_provenance": matrix.witness_provenance,
        }
    }


def _matrix_head(matrix) -> list[str]:
    head = [f"condition matrix for {matrix.functor}:"]
    if matrix.rejected:
        head.append(f"  rejected at the {matrix.gate} gate before the conditions")
    for name, verdict in matrix.conditions.items():
        head.append(f"  {name}: {'true' if verdict else 'false'}")
    head.append(f"  verdicts agree: {'yes' if matrix.agree else 'no'}")
    if matrix.witness_provenance:
        head.append(f"  comparison map: {matrix.witness_provenance}")
    return head


def _cmd_adjudicate_cor_frob(args) -> int:
    started = time.perf_counter()
    inst = _load_functor(args)
    _check_scope(args, inst.functor.source)
    if inst.source is None or inst.target is None:
        raise _Usage(
            "adjudicate-cor-frob needs autonomous endpoints; "
            "an endpoint category lacks duals"
        )
    matrix = adjudicate_cor_frob(inst.functor, inst.source, inst.target)
    report = _timed(matrix.report, started)
    return _deliver(args, report, extra=_matrix_extra(matrix), head=_matrix_head(matrix))


def _cmd_adjudicate_lin_frob(args) -> int:
    started = time.perf_counter()
    inst = _load_linear(args)
    _check_scope(args, inst.linear.source)
    matrix = adjudicate_when_lin_frob(inst.linear, inst.source, inst.target)
    report = _timed(matrix.report, started)
    return _deliver(args, report, extra=_matrix_extra(matrix), head=_matrix_head(matrix))


def _cmd_catalog(args) -> int:
    rows = [
        {
            "name": e.name,
            "kind": e.kind,
            "params": e.params,
            "summary": e.summary,
            "fault": e.fault,
        }
        for e in catalog_entries()
    ]
    if getattr(args, "emit", None):
        doc = {"entries": rows, "categories": _catalog_category_docs()}
        Path(args.emit).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    if getattr(args, "out", None):
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        import csv as _csv
        import io as _io

        buf = _io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "kind", "params", "summary", "fault"])
        for r in rows:
            writer.writerow([r["name"], r["kind"], r["params"], r["summary"], r["fault"]])
        (out / "catalog.csv").write_text(buf.getvalue())
        timings = []
        for e in catalog_entries():
            t0 = time.perf_counter()
            e.build()
            timings.append((e.name, time.perf_counter() - t0))
        render_timings(timings, out / "timings.png")
    if args.json:
        print(json.dumps({"catalog": rows}, indent=2, sort_keys=True))
    else:
        width = max(len(r["name"]) for r in rows)
        for r in rows:
            fault = "  [deliberate fault]" if r["fault"] else ""
            params = r["params"] or ""
            print(f"{r['name']:<{width}}  {r['kind']:<8} {params:<7} {r['summary']}{fault}")
    return 0


def _catalog_category_docs() -> dict[str, Any]:
    docs: dict[str, Any] = {}
    for e in catalog_entries():
        if e.kind != "category":
            continue
        built = e.build()
        if isinstance(built, BoolMatrixInstance):
            docs[e.name] = fio.category_to_doc(
                built.category,
                context=built.context,
                builtin=f"bool:{max(built.category.objects)}",
            )
        else:
            docs[e.name] = fio.category_to_doc(built)
    return docs


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(sub, category=False, functor=False, linear=False, max_objects=False):
    sub.add_argument("--json", action="store_true", help="structured JSON output")
    sub.add_argument("--emit", metavar="PATH", help="write the structured result to a file")
    sub.add_argument("--out", metavar="DIR", help="write CSV and rendered figures here")
    sub.add_argument(
        "--scope", choices=("exhaustive", "generators"),
        help="require this checking scope; errors when the input cannot provide it",
    )
    sub.add_argument("--builtin", metavar="NAME[:params]", help="use a catalog instance")
    if category:
        sub.add_argument("--category", metavar="PATH", help="category description file")
    if functor:
        sub.add_argument("--functor", metavar="PATH", help="functor description file")
    if linear:
        sub.add_argument("--linear", metavar="PATH", help="linear pair description file")
    if max_objects:
        sub.add_argument(
            "--max-objects", type=int, metavar="K",
            help="check only the first K declared objects",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobcat",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subs = parser.add_subparsers(dest="command", required=True)

    handlers = {}

    def register(name, fn, help_text, **kinds):
        sub = subs.add_parser(name, help=help_text)
        _add_common(sub, **kinds)
        handlers[name] = fn

    register("validate", _cmd_validate,
             "check the strict monoidal category axioms", category=True, max_objects=True)
    register("find-duals", _cmd_find_duals,
             "find or verify left and right duals per object", category=True, max_objects=True)
    register("check-monoidal", _cmd_check_monoidal,
             "check the pairing-direction coherence of a functor", functor=True)
    register("check-comonoidal", _cmd_check_comonoidal,
             "check the copairing-direction coherence of a functor", functor=True)
    register("check-frobenius", _cmd_check_frobenius,
             "check both directions and their interaction laws", functor=True)
    register("check-autonomous", _cmd_check_autonomous,
             "check dual preservation on both sides", functor=True)
    register("check-nat", _cmd_check_nat,
             "check the comparison transformations' naturality and flavor", functor=True)
    register("check-linear", _cmd_check_linear,
             "check the strength conditions of a linear pair", linear=True)
    register("synthesize", _cmd_synthesize,
             "synthesize the copairing of a dual-preserving functor", functor=True)
    register("adjudicate-cor-frob", _cmd_adjudicate_cor_frob,
             "six-way equivalence adjudication for one functor", functor=True)
    register("adjudicate-lin-frob", _cmd_adjudicate_lin_frob,
             "six-way equivalence adjudication for a linear pair", linear=True)

    catalog = subs.add_parser("catalog", help="list the builtin instances")
    catalog.add_argument("--json", action="store_true", help="structured JSON output")
    catalog.add_argument("--emit", metavar="PATH", help="write the catalog with category documents")
    catalog.add_argument("--out", metavar="DIR", help="write CSV and build-timing figure here")
    handlers["catalog"] = _cmd_catalog

    parser.set_defaults(_handlers=handlers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = args._handlers[args.command]
    try:
        return handler(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
