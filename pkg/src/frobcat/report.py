"""Structured results of coherence checking.

A check run produces a :class:`Report`: a titled, deterministic list of
:class:`CheckEntry` rows, one per (equation id, instantiation) pair.  Each
row says whether the equation held and, on failure only, carries a witness
describing the two sides that disagreed.  Reports serialize to JSON and
compare equal iff their JSON forms are equal, so "same inputs give the
same report" is testable directly.

:class:`ReportBuilder` is the one place equations get evaluated into rows:
it catches structural errors (type mismatches, malformed tables) and turns
them into *failing* entries rather than letting them escape, so a report is
produced even when candidate data is ill-typed, and the failure is visible
rather than silent.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .errors import FrobcatError, MalformedTable, TypeMismatch, UnboundRef


@dataclass(frozen=True)
class EquationVerdict:
    """Outcome of evaluating one equation instance: both side expressions
    (pretty-printed), the labels of the values they evaluated to, and the
    verdict.  ``error`` is set when a side failed to evaluate at all."""

    holds: bool
    lhs_expr: str
    rhs_expr: str
    lhs_value: str | None = None
    rhs_value: str | None = None
    error: str | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "holds": self.holds,
            "lhs_expr": self.lhs_expr,
            "rhs_expr": self.rhs_expr,
        }
        if self.lhs_value is not None:
            out["lhs_value"] = self.lhs_value
        if self.rhs_value is not None:
            out["rhs_value"] = self.rhs_value
        if self.error is not None:
            out["error"] = self.error
        return out

    @staticmethod
    def from_json(d: Mapping[str, Any]) -> "EquationVerdict":
        return EquationVerdict(
            holds=bool(d["holds"]),
            lhs_expr=d["lhs_expr"],
            rhs_expr=d["rhs_expr"],
            lhs_value=d.get("lhs_value"),
            rhs_value=d.get("rhs_value"),
            error=d.get("error"),
        )


@dataclass(frozen=True)
class CheckEntry:
    """One row of a report: which equation, at which instantiation (a tuple
    of object/morphism labels), whether it held, and a witness on failure."""

    equation_id: str
    instantiation: tuple[str, ...]
    holds: bool
    witness: EquationVerdict | None = None

    def sort_key(self) -> tuple:
        return (self.equation_id, self.instantiation)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "equation_id": self.equation_id,
            "instantiation": list(self.instantiation),
            "holds": self.holds,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out

    @staticmethod
    def from_json(d: Mapping[str, Any]) -> "CheckEntry":
        w = d.get("witness")
        return CheckEntry(
            equation_id=d["equation_id"],
            instantiation=tuple(d["instantiation"]),
            holds=bool(d["holds"]),
            witness=EquationVerdict.from_json(w) if w is not None else None,
        )


# Human-readable one-liners for the equation ids that appear in reports.
# Phrased by what each equation says, so report output is self-describing.
EQUATION_DESCRIPTIONS: dict[str, str] = {
    # category axioms (validate_category)
    "compose:endpoints": "composite endpoints are the outer endpoints of the factors",
    "compose:associativity": "composition is associative on composable triples",
    "identity-neutrality": "identities are neutral for composition on both sides",
    "tensor:unit-objects": "tensoring with the unit object changes nothing on objects",
    "tensor:associative-objects": "the object tensor is strictly associative",
    "tensor:endpoints": "endpoints of a tensor are the tensors of the endpoints",
    "tensor:identities": "tensor of identities is the identity of the tensor",
    "tensor:interchange": "tensor and composition interchange on composable pairs",
    # functor structure
    "functoriality:dom-cod": "mapping sends each morphism to one with the mapped endpoints",
    "functoriality:id": "mapping preserves identities",
    "functoriality:compose": "mapping preserves composition",
    "lax-functor0": "binary structure map absorbs the unit structure map on either side",
    "lax-functor2": "binary structure map is associative across three factors",
    "nat(f2)": "binary structure map is natural in both arguments",
    "colax_functor0": "binary costructure map absorbs the unit costructure map on either side",
    "colax_functor2": "binary costructure map is coassociative across three factors",
    "nat(F2)": "binary costructure map is natural in both arguments",
    "eq1:Frob": "first interaction law between the structure and costructure maps",
    "eq2:Frob": "second interaction law between the structure and costructure maps",
    # transformation flavors
    "lax-nat": "components commute with the structure maps of both functors",
    "colax-nat": "components commute with the costructure maps of both functors",
    "lax-colax": "costructure map after component after structure map is the tensor of components",
    "colax-lax": "each component factors as costructure map, component tensor, structure map",
    # duality
    "left-dual": "left-duality snake composites are identities",
    "eq:rightdual": "right-duality snake composites are identities",
    "eq2:dinat": "the dual arrow is characterized by sliding across the duality unit/counit",
    "eq:s2db": "dual-of-tensor comparison map is compatible with the duality units",
    "eq:s2ev": "dual-of-tensor comparison map is compatible with the duality counits",
    "iso(s2)": "binary comparison map of the duality functor is invertible",
    "iso(s0)": "unit comparison map of the duality functor is invertible",
    "dual-unique-up-to-iso": "any two passing dual candidates for the same object are isomorphic",
    "adjoint:triangle-1": "first triangle identity of the double-dual adjoint equivalence",
    "adjoint:triangle-2": "second triangle identity of the double-dual adjoint equivalence",
    "iso(alpha)": "unit of the double-dual equivalence is invertible",
    "iso(beta)": "opposite unit of the double-dual equivalence is invertible",
    "nat(alpha)": "unit of the double-dual equivalence is natural",
    "nat(beta)": "opposite unit of the double-dual equivalence is natural",
    "d'-beta-d": "the double-dual unit carries right duality data to left duality data",
    "eq:S2doctrinalS'2": "right-side comparison maps agree with their derivation from the left side",
    # autonomy of functors
    "eq1:lax_pres_dual": "structure maps carry the source duality unit to the target one",
    "eq2:lax_pres_dual": "structure maps carry the source duality counit to the target one",
    "eq1':lax_pres_dual": "structure maps carry the source right-duality unit to the target one",
    "eq2':lax_pres_dual": "structure maps carry the source right-duality counit to the target one",
    "nat(kappa)": "left comparison map is natural in its object",
    "iso(kappa)": "left comparison map is invertible",
    "nat(lambda)": "right comparison map is natural in its object",
    "iso(lambda)": "right comparison map is invertible",
    "eq:mate-of-ka": "the right comparison map is the mate of the left one",
    "eq:mate-of-la": "the left comparison map is recovered as the mate of the right one",
    "FMF pres dual": "the closed-form comparison map and its closed-form inverse compose to identities",
    "eq1:ka-db": "equivalent unit-side condition via a two-factor structure composite",
    "eq2:ka-ev": "equivalent counit-side condition via a two-factor structure composite",
    "ka-db-ot": "diagnostic: duality unit of a tensor object as a four-factor composite",
    "ka-ev-ot": "diagnostic: duality counit of a tensor object as a four-factor composite",
    "agreement:eq1:ka-db": "primary unit-side verdict agrees with the equivalent-form verdict",
    "agreement:eq2:ka-ev": "primary counit-side verdict agrees with the equivalent-form verdict",
    "eq:lax-colax": "the left comparison map respects the composite structures on both sides",
    # synthesis
    "eq:ka-la": "the two defining legs of each collapse map agree",
    "klst": "flavor squares of the collapse maps match those of the comparison maps",
    "nat(sigma)": "first collapse map is natural in its object",
    "nat(tau)": "second collapse map is natural in its object",
    "iso(sigma)": "first collapse map is invertible",
    "iso(tau)": "second collapse map is invertible",
    "synth:route-agreement": "the two synthesis routes produce the same costructure maps",
    "synth:frobenius": "the synthesized costructure satisfies the interaction laws",
    "synth:strong-inverse": "for invertible structure, the synthesized costructure is its inverse",
    "synth:roundtrip": "synthesis from a derived comparison map recovers the original costructure",
    "synth:unique": "the synthesized costructure is the only completing candidate in scope",
    "cor:frob": "six-way equivalence: every condition carries the same verdict",
    "rem:leftaut=rightaut": "left-side and right-side autonomy verdicts coincide",
    "prop:lax-colax": "autonomy and the two comparison-map conditions agree",
    "prop:colax-lax": "an autonomous structure makes the left comparison map structure-respecting",
    # linear pairs
    "lf1": "strengths absorb the unit structure maps",
    "lf2": "strengths associate with themselves across three factors",
    "lf3": "the two mixed strengths slide past each other",
    "lf4": "strengths distribute over the structure maps, mixed form",
    "lf5": "strengths distribute over the structure maps, aligned form",
    "nat(nu)": "each strength family is natural in both arguments",
    "ex:lin left dual": "the costructure value at the unit is a left dual of the structure value",
    "ex:lin right dual": "the costructure value at the unit is a right dual of the structure value",
    "def-Omega": "the derived comparison map is compatible with the derived duality data",
    "comonoidal-Omega": "the derived comparison map respects the costructure maps",
    "iso(Omega)": "the derived comparison map is invertible with the printed inverse",
    "monoidal-Psi": "the dual derived comparison map respects the structure maps",
    "iso(Psi)": "the dual derived comparison map is invertible with the printed inverse",
    "Omega": "composite comparison into the right double dual respects the costructures",
    "Omega:op": "composite comparison into the left double dual respects the structures",
    "nrr=right-closed": "right strength expressed through the structure map and the comparison map",
    "nrl=left-closed": "left strength expressed through the structure map and the comparison map",
    "omega": "the collapse map intertwines the four strengths with the structure maps",
    "nat(omega)": "the collapse map is natural in its object",
    "iso(omega)": "the collapse map is invertible",
    "omega-subset": "diagnostic: which collapse-condition pairs already force the interaction laws",
    "prop:when-lin-is-frob": "six-way equivalence for pairs: every condition carries the same verdict",
}


def describe_equation(equation_id: str) -> str:
    base = equation_id.split("@", 1)[0]
    return EQUATION_DESCRIPTIONS.get(base, "")


@dataclass
class Report:
    """A titled, sorted, JSON-serializable list of check entries."""

    title: str
    scope: str
    entries: list[CheckEntry] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(e.holds for e in self.entries)

    def sorted(self) -> "Report":
        return Report(
            title=self.title,
            scope=self.scope,
            entries=sorted(self.entries, key=CheckEntry.sort_key),
            elapsed=self.elapsed,
        )

    def failing(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.holds]

    def to_json(self) -> dict[str, Any]:
        # elapsed is wall-clock noise, deliberately excluded so equal runs
        # produce equal JSON.
        return {
            "title": self.title,
            "scope": self.scope,
            "ok": self.ok,
            "entries": [e.to_json() for e in sorted(self.entries, key=CheckEntry.sort_key)],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @staticmethod
    def from_json(d: Mapping[str, Any]) -> "Report":
        return Report(
            title=d["title"],
            scope=d["scope"],
            entries=[CheckEntry.from_json(e) for e in d["entries"]],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_json() == other.to_json()

    def render_text(self) -> str:
        lines = [f"report: {self.title}", f"scope: {self.scope}"]
        for e in sorted(self.entries, key=CheckEntry.sort_key):
            inst = ", ".join(e.instantiation)
            mark = "PASS" if e.holds else "FAIL"
            lines.append(f"  [{mark}] {e.equation_id} @ ({inst})")
            if not e.holds and e.witness is not None:
                w = e.witness
                lines.append(f"         lhs: {w.lhs_expr}")
                lines.append(f"         rhs: {w.rhs_expr}")
                if w.lhs_value is not None or w.rhs_value is not None:
                    lines.append(f"         values: {w.lhs_value!r} vs {w.rhs_value!r}")
                if w.error:
                    lines.append(f"         error: {w.error}")
        n_fail = len(self.failing())
        verdict = "OK" if n_fail == 0 else f"{n_fail} FAILING"
        lines.append(f"result: {verdict} ({len(self.entries)} checks, {self.elapsed:.3f}s)")
        return "\n".join(lines)


class ReportBuilder:
    """Accumulates check entries; the single funnel through which equation
    evaluation errors become failing rows instead of crashes."""

    def __init__(self, title: str, scope: str):
        self.title = title
        self.scope = scope
        self.entries: list[CheckEntry] = []
        self._t0 = time.perf_counter()

    def check(self, equation_id: str, instantiation: Sequence[str], lhs, rhs, env, *, view=None) -> bool:
        """Evaluate lhs = rhs (morphism expressions) in ``env`` against
        ``view`` and record one entry.  Either side may be a zero-argument
        callable producing the expression, so that candidate structure maps
        that do not even exist (partial tables) surface as failing entries.
        Structural errors become failing entries carrying the error text."""
        from .expr import check_equation, render_expr

        lhs_txt = rhs_txt = "(not constructed)"
        try:
            if callable(lhs):
                lhs = lhs()
            lhs_txt = render_expr(lhs)
            if callable(rhs):
                rhs = rhs()
            rhs_txt = render_expr(rhs)
            verdict = check_equation(view, lhs, rhs, env)
        except (TypeMismatch, MalformedTable, UnboundRef) as exc:
            verdict = EquationVerdict(
                holds=False,
                lhs_expr=lhs_txt,
                rhs_expr=rhs_txt,
                error=f"{type(exc).__name__}: {exc}",
            )
        self.entries.append(
            CheckEntry(
                equation_id=equation_id,
                instantiation=tuple(str(x) for x in instantiation),
                holds=verdict.holds,
                witness=None if verdict.holds else verdict,
            )
        )
        return verdict.holds

    def entry(self, equation_id: str, instantiation: Sequence[str], holds: bool,
              *, note: str | None = None) -> bool:
        """Record a non-equation fact (e.g. 'no candidate found in scope')."""
        witness = None
        if not holds:
            witness = EquationVerdict(
                holds=False, lhs_expr="", rhs_expr="", error=note or "check failed"
            )
        elif note is not None:
            witness = None  # notes on passing entries are dropped: reports stay minimal
        self.entries.append(
            CheckEntry(
                equation_id=equation_id,
                instantiation=tuple(str(x) for x in instantiation),
                holds=holds,
                witness=witness,
            )
        )
        return holds

    def merge(self, other: Report, prefix: str = "") -> None:
        for e in other.entries:
            eid = f"{prefix}{e.equation_id}" if prefix else e.equation_id
            self.entries.append(
                CheckEntry(eid, e.instantiation, e.holds, e.witness)
            )

    def build(self) -> Report:
        # Exact repeats (same equation, instantiation, and verdict) collapse
        # to one row — merged sub-reports may re-run a shared check.  Rows
        # that repeat with *different* verdicts are both kept: that is an
        # alarming fact the report must show.
        seen: set[tuple] = set()
        unique: list[CheckEntry] = []
        for e in self.entries:
            key = (e.equation_id, e.instantiation, e.holds)
            if key in seen:
                continue
            seen.add(key)
            unique.append(e)
        return Report(
            title=self.title,
            scope=self.scope,
            entries=sorted(unique, key=CheckEntry.sort_key),
            elapsed=time.perf_counter() - self._t0,
        )
