"""Description files and structured report serialization.

Categories travel as JSON documents with fields ``objects``, ``homs`` (a
list of ``{dom, cod, morphisms}`` records), ``identity``, ``compose``
(triples ``[g, f, g.f]``), ``tensor_obj``, ``tensor_mor``, and ``unit``;
alternatively a document may name a computable backend through a
``builtin`` field with parameters (e.g. ``{"builtin": "bool:2"}``).
Duality assignments ride along under a ``duals`` key: per object, the
chosen dual plus the unit and counit morphism ids, one list per side.

Functor documents carry ``obj_map``/``mor_map`` tables plus optional
``monoidal``/``comonoidal`` structure tables between inline (or builtin)
endpoint categories; linear documents carry two such map tables sharing
the document's endpoints, plus the four strength tables.

Reports serialize to JSON deterministically and round-trip exactly:
``parse_report(emit_report(r)) == r``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .boolmat import BoolMat, BoolMatCategory
from .core import CategoryView, FinCategory, Obj, Mor, TableCategory, as_view
from .duality import DualityContext, build_duality_context
from .errors import MalformedTable, NotFound
from .linear import LinearFunctorData
from .report import CheckEntry, EquationVerdict, Report
from .structures import FunctorData, StructureMaps

__all__ = [
    "LoadedCategory",
    "LoadedFunctor",
    "LoadedLinear",
    "category_to_doc",
    "doc_to_category",
    "doc_to_functor",
    "doc_to_linear",
    "emit_report",
    "functor_to_doc",
    "mor_from_id",
    "mor_id",
    "parse_report",
    "report_to_csv",
    "report_to_doc",
    "doc_to_report",
]


# ---------------------------------------------------------------------------
# morphism ids
# ---------------------------------------------------------------------------

def mor_id(c: FinCategory | CategoryView, f: Mor) -> str:
    """The stable textual id of a morphism: the label, which for the table
    backend is the morphism itself and for Boolean matrices encodes shape
    and entries."""
    return as_view(c).mor_label(f)


def mor_from_id(c: FinCategory | CategoryView, text: str) -> Mor:
    """Inverse of :func:`mor_id` for the supported backends."""
    v = as_view(c)
    base = v.base
    if isinstance(base, BoolMatCategory):
        try:
            shape, code_hex = text.split(":")
            cod_s, dom_s = shape.split("x")
            dom, cod, code = int(dom_s), int(cod_s), int(code_hex, 16)
        except ValueError:
            raise MalformedTable(f"not a Boolean matrix id: {text!r}") from None
        mask = (1 << dom) - 1
        rows = tuple((code >> (i * dom)) & mask for i in range(cod))
        return BoolMat(dom, cod, rows)
    return text


def _obj_in(value: Any) -> Obj:
    if not isinstance(value, (int, str)):
        raise MalformedTable(
            f"objects must be integers or strings, got {type(value).__name__}"
        )
    return value


# ---------------------------------------------------------------------------
# categories
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LoadedCategory:
    """A category read from a document, together with whatever duality
    data came with it: a prebuilt context for self-dual backends, or
    per-side hint tables for the search."""

    category: FinCategory
    context: DualityContext | None = None
    left_hints: dict[Obj, tuple[Obj, Mor, Mor]] | None = None
    right_hints: dict[Obj, tuple[Obj, Mor, Mor]] | None = None

    def build_context(self) -> DualityContext:
        if self.context is not None:
            return self.context
        return build_duality_context(
            self.category,
            left_hints=self.left_hints,
            right_hints=self.right_hints,
        )


def category_to_doc(
    cat: FinCategory,
    context: DualityContext | None = None,
    builtin: str | None = None,
) -> dict[str, Any]:
    """Serialize a category.  Computable backends must be named through
    ``builtin``; table categories emit their full tables in declared
    order.  When a duality context is given its assignments are exported
    under ``duals``."""
    if builtin is not None:
        doc: dict[str, Any] = {"builtin": builtin}
    elif isinstance(cat, TableCategory):
        v = cat.view()
        objs = list(v.objects)
        homs = [
            {
                "dom": a,
                "cod": b,
                "morphisms": [mor_id(v, f) for f in v.hom(a, b)],
            }
            for a in objs
            for b in objs
            if v.hom(a, b)
        ]
        compose = [
            [mor_id(v, g), mor_id(v, f), mor_id(v, v.compose(g, f))]
            for b in objs for c in objs for g in v.hom(b, c)
            for a in objs for f in v.hom(a, b)
        ]
        tensor_mor = [
            [mor_id(v, f), mor_id(v, g), mor_id(v, v.tensor_mor(f, g))]
            for a in objs for b in objs for f in v.hom(a, b)
            for c in objs for d in objs for g in v.hom(c, d)
        ]
        doc = {
            "name": v.name,
            "objects": objs,
            "unit": v.unit,
            "homs": homs,
            "identity": [[x, mor_id(v, v.identity(x))] for x in objs],
            "compose": compose,
            "tensor_obj": [[x, y, v.tensor_obj(x, y)] for x in objs for y in objs],
            "tensor_mor": tensor_mor,
        }
    else:
        raise MalformedTable(
            f"category {as_view(cat).name} has no table serialization; "
            "export it through its builtin name"
        )
    if context is not None:
        v = as_view(cat)
        doc["duals"] = {
            side: [
                [
                    x,
                    assignment.dual(x),
                    mor_id(v, assignment.unit(x)),
                    mor_id(v, assignment.counit(x)),
                ]
                for x in v.objects
            ]
            for side, assignment in (("left", context.left), ("right", context.right))
        }
    return doc


def doc_to_category(doc: Mapping[str, Any]) -> LoadedCategory:
    """Build a category from a document: through the builtin catalog when
    a ``builtin`` field is present, from the tables otherwise."""
    if "builtin" in doc:
        from .instances import BoolMatrixInstance, resolve_builtin

        entry, built = resolve_builtin(str(doc["builtin"]))
        if entry.kind != "category":
            raise MalformedTable(
                f"builtin {entry.name!r} is a {entry.kind}, not a category"
            )
        if isinstance(built, BoolMatrixInstance):
            return LoadedCategory(built.category, context=built.context)
        return LoadedCategory(built)

    try:
        objects = [_obj_in(x) for x in doc["objects"]]
        unit = _obj_in(doc["unit"])
        name = str(doc.get("name", "category"))
        homs: dict[tuple[Obj, Obj], tuple[Mor, ...]] = {
            (a, b): () for a in objects for b in objects
        }
        for rec in doc["homs"]:
            homs[(_obj_in(rec["dom"]), _obj_in(rec["cod"]))] = tuple(
                str(m) for m in rec["morphisms"]
            )
        identities = {_obj_in(x): str(m) for x, m in doc["identity"]}
        compose = {(str(g), str(f)): str(gf) for g, f, gf in doc["compose"]}
        tensor_obj = {
            (_obj_in(x), _obj_in(y)): _obj_in(xy) for x, y, xy in doc["tensor_obj"]
        }
        tensor_mor = {(str(f), str(g)): str(fg) for f, g, fg in doc["tensor_mor"]}
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"category document is missing or malforms {exc}") from None

    cat = TableCategory(
        name=name,
        objects=tuple(objects),
        unit=unit,
        homs=homs,
        identities=identities,
        compose_table=compose,
        tensor_obj_table=tensor_obj,
        tensor_mor_table=tensor_mor,
    )
    left_hints = right_hints = None
    duals = doc.get("duals")
    if duals:
        def side_table(side: str):
            rows = duals.get(side)
            if not rows:
                return None
            return {
                _obj_in(x): (_obj_in(sx), str(d), str(e)) for x, sx, d, e in rows
            }

        left_hints = side_table("left")
        right_hints = side_table("right")
    return LoadedCategory(cat, left_hints=left_hints, right_hints=right_hints)


# ---------------------------------------------------------------------------
# functors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LoadedFunctor:
    functor: FunctorData
    source: LoadedCategory
    target: LoadedCategory


def _structure_to_doc(
    maps: StructureMaps | None, v: CategoryView, w: CategoryView
) -> dict[str, Any] | None:
    if maps is None:
        return None
    pairs = []
    for x in v.objects:
        for y in v.objects:
            try:
                pairs.append([x, y, mor_id(w, maps.pair(x, y))])
            except MalformedTable:
                continue
    return {"pairs": pairs, "unit": mor_id(w, maps.unit)}


def functor_to_doc(
    func: FunctorData,
    source_doc: Mapping[str, Any],
    target_doc: Mapping[str, Any],
) -> dict[str, Any]:
    """Serialize a functor against the given endpoint documents.  Maps are
    tabulated over the declared objects and the morphism scope; structure
    pairs that do not exist (partial tables) are omitted."""
    v, w = func.source, func.target
    mor_map = []
    for f in v.mor_scope():
        try:
            mor_map.append([mor_id(v, f), mor_id(w, func.mor(f))])
        except MalformedTable:
            continue
    doc = {
        "name": func.name,
        "source": dict(source_doc),
        "target": dict(target_doc),
        "obj_map": [[x, func.obj(x)] for x in v.objects],
        "mor_map": mor_map,
    }
    monoidal = _structure_to_doc(func.monoidal, v, w)
    comonoidal = _structure_to_doc(func.comonoidal, v, w)
    if monoidal is not None:
        doc["monoidal"] = monoidal
    if comonoidal is not None:
        doc["comonoidal"] = comonoidal
    return doc


def _table_fn1(table: dict, what: str) -> Callable:
    def lookup(x):
        if x not in table:
            raise MalformedTable(f"{what} has no entry at {x!r}")
        return table[x]

    return lookup


def _table_fn2(table: dict, what: str) -> Callable:
    def lookup(x, y):
        if (x, y) not in table:
            raise MalformedTable(f"{what} has no entry at ({x!r}, {y!r})")
        return table[(x, y)]

    return lookup


def _doc_to_structure(
    doc: Mapping[str, Any] | None, target: FinCategory, what: str
) -> StructureMaps | None:
    if doc is None:
        return None
    table = {
        (_obj_in(x), _obj_in(y)): mor_from_id(target, str(m))
        for x, y, m in doc["pairs"]
    }
    return StructureMaps(
        _table_fn2(table, what), mor_from_id(target, str(doc["unit"]))
    )


def _doc_to_maps(
    doc: Mapping[str, Any],
    source: FinCategory,
    target: FinCategory,
    name: str,
) -> FunctorData:
    obj_table = {_obj_in(x): _obj_in(fx) for x, fx in doc["obj_map"]}
    mor_table = {
        mor_from_id(source, str(f)): mor_from_id(target, str(ff))
        for f, ff in doc["mor_map"]
    }
    return FunctorData(
        name,
        as_view(source),
        as_view(target),
        _table_fn1(obj_table, f"object map of {name}"),
        _table_fn1(mor_table, f"morphism map of {name}"),
        monoidal=_doc_to_structure(doc.get("monoidal"), target, f"pairing of {name}"),
        comonoidal=_doc_to_structure(
            doc.get("comonoidal"), target, f"copairing of {name}"
        ),
    )


def doc_to_functor(doc: Mapping[str, Any]) -> LoadedFunctor:
    try:
        source = doc_to_category(doc["source"])
        target = doc_to_category(doc["target"])
        name = str(doc.get("name", "functor"))
        functor = _doc_to_maps(doc, source.category, target.category, name)
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"functor document is missing or malforms {exc}") from None
    return LoadedFunctor(functor, source, target)


# ---------------------------------------------------------------------------
# linear functors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LoadedLinear:
    linear: LinearFunctorData
    source: LoadedCategory
    target: LoadedCategory


def doc_to_linear(doc: Mapping[str, Any]) -> LoadedLinear:
    """A linear pair document: shared ``source``/``target`` endpoints, two
    component functor map-tables under ``R`` and ``L``, and the four
    strength tables."""
    try:
        source = doc_to_category(doc["source"])
        target = doc_to_category(doc["target"])
        name = str(doc.get("name", "linear"))
        r_name = str(doc["R"].get("name", f"{name}.R"))
        l_name = str(doc["L"].get("name", f"{name}.L"))
        r_functor = _doc_to_maps(doc["R"], source.category, target.category, r_name)
        l_functor = _doc_to_maps(doc["L"], source.category, target.category, l_name)
        strengths = {}
        for key in ("nu_rR", "nu_lR", "nu_rL", "nu_lL"):
            table = {
                (_obj_in(x), _obj_in(y)): mor_from_id(target.category, str(m))
                for x, y, m in doc[key]
            }
            strengths[key] = _table_fn2(table, f"{key} of {name}")
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"linear document is missing or malforms {exc}") from None
    linear = LinearFunctorData(name, r_functor, l_functor, **strengths)
    return LoadedLinear(linear, source, target)


def linear_to_doc(
    lf: LinearFunctorData,
    source_doc: Mapping[str, Any],
    target_doc: Mapping[str, Any],
) -> dict[str, Any]:
    v, w = lf.source, lf.target

    def strength_table(fn: Callable) -> list:
        rows = []
        for x in v.objects:
            for y in v.objects:
                try:
                    rows.append([x, y, mor_id(w, fn(x, y))])
                except MalformedTable:
                    continue
        return rows

    def component_doc(func: FunctorData) -> dict[str, Any]:
        doc = functor_to_doc(func, {}, {})
        del doc["source"], doc["target"]
        return doc

    return {
        "name": lf.name,
        "source": dict(source_doc),
        "target": dict(target_doc),
        "R": component_doc(lf.R),
        "L": component_doc(lf.L),
        "nu_rR": strength_table(lf.nu_rR),
        "nu_lR": strength_table(lf.nu_lR),
        "nu_rL": strength_table(lf.nu_rL),
        "nu_lL": strength_table(lf.nu_lL),
    }


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def report_to_doc(r: Report) -> dict[str, Any]:
    return {
        "title": r.title,
        "scope": r.scope,
        "ok": r.ok,
        "elapsed": r.elapsed,
        "entries": [e.to_json() for e in r.entries],
    }


def _doc_to_verdict(doc: Mapping[str, Any]) -> EquationVerdict:
    return EquationVerdict(
        holds=bool(doc["holds"]),
        lhs_expr=str(doc["lhs_expr"]),
        rhs_expr=str(doc["rhs_expr"]),
        lhs_value=doc.get("lhs_value"),
        rhs_value=doc.get("rhs_value"),
        error=doc.get("error"),
    )


def doc_to_report(doc: Mapping[str, Any]) -> Report:
    entries = [
        CheckEntry(
            equation_id=str(e["equation_id"]),
            instantiation=tuple(str(x) for x in e["instantiation"]),
            holds=bool(e["holds"]),
            witness=_doc_to_verdict(e["witness"]) if "witness" in e else None,
        )
        for e in doc["entries"]
    ]
    return Report(
        title=str(doc["title"]),
        scope=str(doc["scope"]),
        entries=entries,
        elapsed=float(doc["elapsed"]),
    )


def emit_report(r: Report) -> str:
    """Deterministic JSON text for a report; inverse of
    :func:`parse_report`."""
    return json.dumps(report_to_doc(r), indent=2, sort_keys=True)


def parse_report(text: str) -> Report:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTable(f"report is not valid JSON: {exc}") from None
    try:
        return doc_to_report(doc)
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"report document is missing or malforms {exc}") from None


def report_to_csv(r: Report) -> str:
    """One row per entry: equation id, instantiation, verdict, and the
    error text of failing rows."""
    import csv
    import io as _io

    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["equation_id", "instantiation", "holds", "error"])
    for e in r.entries:
        error = ""
        if e.witness is not None and e.witness.error:
            error = e.witness.error
        writer.writerow([e.equation_id, ";".join(e.instantiation), e.holds, error])
    return buf.getvalue()
