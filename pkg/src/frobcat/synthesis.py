"""Synthesis of a comonoidal structure from a dual-preserving monoidal
functor, and the six-way equivalence adjudication.

Given an autonomous monoidal functor, the two *collapse maps*

* ``sigma_X: S'(F(SX)) -> FX``, equal as the two legs
  ``alpha^{-1}_{FX} . S'(kappa_X)`` and ``F(alpha^{-1}_X) . lambda_{SX}``;
* ``tau_X: S(F(S'X)) -> FX``, equal as
  ``F(beta^{-1}_X) . kappa_{S'X}`` and ``beta^{-1}_{FX} . S(lambda_X)``

yield a comonoidal structure in closed form, by two independent routes
(one through sigma and the left data, one through tau and the right
data).  Both routes are always computed and compared, the synthesized
structure is checked against the interaction laws, and for invertible
structure maps it is checked to be their inverse.

``adjudicate_cor_frob`` evaluates the six equivalent conditions —
Frobenius-extendability, autonomy, the two comparison-map conditions,
and invertibility of the two collapse maps — and reports whether they
are unanimous.  Disagreement is a reported result, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .autonomy import (
    AutonomyWitness,
    build_witness,
    check_autonomous,
    check_mates,
    kappa_from_frobenius,
    kappa_transf,
    lambda_transf,
)
from .core import CategoryView, Mor, Obj
from .duality import DualityContext
from .errors import (
    CommonCompositeMismatch,
    FrobeniusFailure,
    InverseFailure,
    MalformedTable,
    NotInvertible,
    ScopeTooLarge,
    StructuresDisagree,
    TypeMismatch,
)
from .expr import EMPTY_ENV, FMap, Id, Named, check_equation, comp, tens
from .report import Report, ReportBuilder
from .structures import (
    FunctorData,
    NatTransfData,
    StructureMaps,
    check_components_invertible,
    check_frobenius,
    check_functoriality,
    check_monoidal,
    check_nat_flavor,
    comonoidal_from_strong,
    compose_functors,
    opcop_functor,
)


def _memo1(fn: Callable) -> Callable:
    cache: dict = {}

    def wrapped(x):
        if x not in cache:
            cache[x] = fn(x)
        return cache[x]

    return wrapped


def _lazy_inverse(view: CategoryView, component: Callable[[Obj], Mor], which: str):
    def inv(x: Obj) -> Mor:
        got = view.invert(component(x))
        if got is None:
            raise NotInvertible(f"{which} component at {view.obj_label(x)} has no two-sided inverse")
        return got

    return _memo1(inv)


def _invert_value(view: CategoryView, f: Mor) -> Mor:
    inv = view.invert(f)
    if inv is None:
        raise NotInvertible(f"{view.mor_label(f)} has no two-sided inverse")
    return inv


@dataclass
class SynthesisOutputs:
    """The collapse maps with inverses, the synthesized comonoidal
    structure once computed, and the audit report of the checks run."""

    sigma: Callable[[Obj], Mor]
    sigma_inv: Callable[[Obj], Mor]
    tau: Callable[[Obj], Mor]
    tau_inv: Callable[[Obj], Mor]
    synthesized_comonoidal: StructureMaps | None = None
    audit: Report | None = None


def sigma_transf(
    func: FunctorData, src: DualityContext, tgt: DualityContext,
    sigma: Callable[[Obj], Mor], flavor: str = "plain",
) -> NatTransfData:
    """sigma as a transformation S'.F.S => F between functors V -> W."""
    source = compose_functors(
        tgt.Sp, compose_functors(opcop_functor(func), src.S), name=f"S'.{func.name}.S"
    )
    return NatTransfData("sigma", source, func, sigma, flavor=flavor)


def tau_transf(
    func: FunctorData, src: DualityContext, tgt: DualityContext,
    tau: Callable[[Obj], Mor], flavor: str = "plain",
) -> NatTransfData:
    """tau as a transformation S.F.S' => F^{op,cop} between functors
    V^{op,cop} -> W^{op,cop}."""
    source = compose_functors(
        tgt.S, compose_functors(func, src.Sp), name=f"S.{func.name}.S'"
    )
    return NatTransfData("tau", source, opcop_functor(func), tau, flavor=flavor)


def build_sigma_tau(
    func: FunctorData,
    src: DualityContext,
    tgt: DualityContext,
    witness: AutonomyWitness,
    rb: ReportBuilder | None = None,
) -> SynthesisOutputs:
    """Both defining legs of each collapse map, evaluated and compared at
    every declared object; the maps are returned with lazy inverses.
    Disagreeing legs raise CommonCompositeMismatch (the comparison maps
    are not mates of each other)."""
    v, w = func.source, func.target
    own = rb is None
    rb = rb or ReportBuilder(f"collapse maps of {func.name}", v.scope_label())

    def sigma_leg1(x: Obj) -> Mor:
        return w.compose(tgt.adj.alpha_inv(func.obj(x)), tgt.Sp.mor(witness.kappa(x)))

    def sigma_leg2(x: Obj) -> Mor:
        return w.compose(func.mor(src.adj.alpha_inv(x)), witness.lam(src.left.dual(x)))

    def tau_leg1(x: Obj) -> Mor:
        return w.compose(func.mor(src.adj.beta_inv(x)), witness.kappa(src.right.dual(x)))

    def tau_leg2(x: Obj) -> Mor:
        return w.compose(tgt.adj.beta_inv(func.obj(x)), tgt.S.mor(witness.lam(x)))

    sigma = _memo1(sigma_leg1)
    tau = _memo1(tau_leg1)
    ok = True
    first_bad: str | None = None
    for x in v.objects:
        label = v.obj_label(x)
        h1 = rb.check(
            "eq:ka-la", (label, "sigma"),
            lambda x=x: Named(sigma(x), "via-kappa"),
            lambda x=x: Named(sigma_leg2(x), "via-lambda"),
            EMPTY_ENV, view=w,
        )
        h2 = rb.check(
            "eq:ka-la", (label, "tau"),
            lambda x=x: Named(tau(x), "via-kappa"),
            lambda x=x: Named(tau_leg2(x), "via-lambda"),
            EMPTY_ENV, view=w,
        )
        if not (h1 and h2) and first_bad is None:
            first_bad = f"{'sigma' if not h1 else 'tau'} at object {label}"
        ok = ok and h1 and h2
    if not ok:
        raise CommonCompositeMismatch(
            f"the two defining legs disagree for {first_bad}; "
            "the comparison maps are not mates"
        )
    return SynthesisOutputs(
        sigma=sigma,
        sigma_inv=_lazy_inverse(w, sigma, "sigma"),
        tau=tau,
        tau_inv=_lazy_inverse(w, tau, "tau"),
        audit=rb.build() if own else None,
    )


def synthesize_comonoidal(
    func: FunctorData,
    outputs: SynthesisOutputs,
    src: DualityContext,
    tgt: DualityContext,
    rb: ReportBuilder | None = None,
) -> StructureMaps:
    """The closed-form comonoidal structure:

    ``F0 = s'0^{-1} . S'(f0) . S'(F(s0)) . sigma^{-1}_1`` and
    ``F2(X,Y) = (sigma_X (x) sigma_Y) . s'2^{-1} . S'(f2_{SY,SX})
                . S'(F(s2_{Y,X})) . sigma^{-1}_{X(x)Y}``,

    computed along sigma, re-computed along the mirror route through tau
    and the right-hand data, asserted equal (StructuresDisagree
    otherwise), and then checked against the interaction laws
    (FrobeniusFailure).  For invertible structure maps the synthesized
    structure is additionally compared with their inverses; when the
    functor already carried a comonoidal structure, the synthesized one
    is compared against it componentwise."""
    v, w = func.source, func.target
    mono = func.require_monoidal()
    own = rb is None
    rb = rb or ReportBuilder(f"synthesis for {func.name}", v.scope_label())
    sL, sR = src.left, src.right
    tL, tR = tgt.left, tgt.right

    def sigma_pair(x: Obj, y: Obj) -> Mor:
        start = outputs.sigma_inv(v.tensor_obj(x, y))
        lift_s2 = tgt.Sp.mor(func.mor(sL.s2_at(y, x)))
        lift_f2 = tgt.Sp.mor(mono.pair(sL.dual(y), sL.dual(x)))
        open_right = _invert_value(
            w, tR.s2_at(func.obj(sL.dual(x)), func.obj(sL.dual(y)))
        )
        finish = w.tensor_mor(outputs.sigma(x), outputs.sigma(y))
        out = start
        for step in (lift_s2, lift_f2, open_right, finish):
            out = w.compose(step, out)
        return out

    sigma_unit = outputs.sigma_inv(v.unit)
    for step in (
        tgt.Sp.mor(func.mor(sL.s0_mor)),
        tgt.Sp.mor(mono.unit),
        _invert_value(w, tR.s0_mor),
    ):
        sigma_unit = w.compose(step, sigma_unit)

    def tau_pair(x: Obj, y: Obj) -> Mor:
        start = outputs.tau_inv(v.tensor_obj(x, y))
        lift_s2 = tgt.S.mor(func.mor(sR.s2_at(y, x)))
        lift_f2 = tgt.S.mor(mono.pair(sR.dual(y), sR.dual(x)))
        open_left = _invert_value(
            w, tL.s2_at(func.obj(sR.dual(x)), func.obj(sR.dual(y)))
        )
        finish = w.tensor_mor(outputs.tau(x), outputs.tau(y))
        out = start
        for step in (lift_s2, lift_f2, open_left, finish):
            out = w.compose(step, out)
        return out

    tau_unit = outputs.tau_inv(v.unit)
    for step in (
        tgt.S.mor(func.mor(sR.s0_mor)),
        tgt.S.mor(mono.unit),
        _invert_value(w, tL.s0_mor),
    ):
        tau_unit = w.compose(step, tau_unit)

    # the two routes must agree everywhere
    agree = rb.check(
        "synth:route-agreement", ("unit",),
        lambda: Named(sigma_unit, "via-sigma"),
        lambda: Named(tau_unit, "via-tau"),
        EMPTY_ENV, view=w,
    )
    first_bad = None if agree else "the unit"
    for x in v.objects:
        for y in v.objects:
            h = rb.check(
                "synth:route-agreement", (v.obj_label(x), v.obj_label(y)),
                lambda x=x, y=y: Named(sigma_pair(x, y), "via-sigma"),
                lambda x=x, y=y: Named(tau_pair(x, y), "via-tau"),
                EMPTY_ENV, view=w,
            )
            if not h and first_bad is None:
                first_bad = f"({v.obj_label(x)}, {v.obj_label(y)})"
            agree &= h
    if not agree:
        raise StructuresDisagree(
            f"the two synthesis routes differ first at {first_bad}"
        )

    pair_cache = _memo1(lambda key: sigma_pair(*key))
    synthesized = StructureMaps(lambda x, y: pair_cache((x, y)), sigma_unit)
    outputs.synthesized_comonoidal = synthesized

    # interaction laws with the given monoidal structure
    patched = FunctorData(
        func.name, func.source, func.target, func.obj, func.mor,
        monoidal=func.monoidal, comonoidal=synthesized,
    )
    if not check_frobenius(patched, rb):
        raise FrobeniusFailure(
            f"synthesized costructure of {func.name} fails the interaction laws"
        )

    # for strong structure, the synthesized costructure is the inverse
    strong = True
    try:
        inverse_structure = comonoidal_from_strong(func)
    except NotInvertible:
        strong = False
    if strong:
        rb.check(
            "synth:strong-inverse", ("unit",),
            lambda: Named(synthesized.unit, "synthesized"),
            lambda: Named(inverse_structure.unit, "inverse"),
            EMPTY_ENV, view=w,
        )
        for x in v.objects:
            for y in v.objects:
                rb.check(
                    "synth:strong-inverse", (v.obj_label(x), v.obj_label(y)),
                    lambda x=x, y=y: Named(synthesized.pair(x, y), "synthesized"),
                    lambda x=x, y=y: Named(inverse_structure.pair(x, y), "inverse"),
                    EMPTY_ENV, view=w,
                )

    # when a costructure was already present, synthesis must recover it
    if func.comonoidal is not None:
        rb.check(
            "synth:roundtrip", ("unit",),
            lambda: Named(synthesized.unit, "synthesized"),
            lambda: Named(func.comonoidal.unit, "original"),
            EMPTY_ENV, view=w,
        )
        for x in v.objects:
            for y in v.objects:
                rb.check(
                    "synth:roundtrip", (v.obj_label(x), v.obj_label(y)),
                    lambda x=x, y=y: Named(synthesized.pair(x, y), "synthesized"),
                    lambda x=x, y=y: Named(func.comonoidal.pair(x, y), "original"),
                    EMPTY_ENV, view=w,
                )

    if own:
        outputs.audit = rb.build()
    return synthesized


def unique_completion_search(
    func: FunctorData,
    synthesized: StructureMaps,
    rb: ReportBuilder,
    hom_cap: int = 256,
) -> bool:
    """For each pair of declared objects, vary the costructure value at
    that pair alone over its hom-set (when enumerable within the cap) and
    count candidates for which the interaction laws still hold; exactly
    one — the synthesized value — must survive."""
    v, w = func.source, func.target
    ok = True
    for x in v.objects:
        for y in v.objects:
            try:
                candidates = list(
                    w.hom(func.obj(v.tensor_obj(x, y)), w.tensor_obj(func.obj(x), func.obj(y)))
                )
            except (ScopeTooLarge, MalformedTable):
                continue
            if len(candidates) > hom_cap:
                continue
            survivors = 0
            for cand in candidates:
                def patched_pair(a, b, x=x, y=y, cand=cand):
                    return cand if (a, b) == (x, y) else synthesized.pair(a, b)

                probe = FunctorData(
                    func.name, func.source, func.target, func.obj, func.mor,
                    monoidal=func.monoidal,
                    comonoidal=StructureMaps(patched_pair, synthesized.unit),
                )
                scratch = ReportBuilder("scratch", v.scope_label())
                if check_frobenius(probe, scratch):
                    survivors += 1
            ok &= rb.entry(
                "synth:unique", (v.obj_label(x), v.obj_label(y)),
                survivors == 1,
                note=f"{survivors} candidates complete the structure at this pair",
            )
    return ok


# ---------------------------------------------------------------------------
# the six-way equivalence


def search_kappa(
    func: FunctorData, src: DualityContext, tgt: DualityContext, hom_cap: int = 4096
) -> Callable[[Obj], Mor] | None:
    """Per-object search for a comparison map: at each object, the first
    hom-set candidate in canonical order satisfying both defining
    diagrams.  Returns None when some object has no candidate (or the
    hom-set is not enumerable within the cap)."""
    v, w = func.source, func.target
    mono = func.require_monoidal()
    table: dict[Obj, Mor] = {}
    for x in v.objects:
        sx = src.left.dual(x)
        fx, fsx = func.obj(x), func.obj(sx)
        sfx = tgt.left.dual(fx)
        try:
            candidates = list(w.hom(sfx, fsx))
        except (ScopeTooLarge, MalformedTable):
            return None
        if len(candidates) > hom_cap:
            return None
        found = None
        for cand in candidates:
            named = Named(cand, "k")
            try:
                eq1 = check_equation(
                    w,
                    comp(FMap(func, Named(src.left.unit(x), "d")), Named(mono.unit, "f0")),
                    comp(
                        Named(mono.pair(x, sx), "f2"),
                        tens(Id(fx), named),
                        Named(tgt.left.unit(fx), "d"),
                    ),
                    EMPTY_ENV,
                ).holds
                eq2 = check_equation(
                    w,
                    comp(Named(mono.unit, "f0"), Named(tgt.left.counit(fx), "e")),
                    comp(
                        FMap(func, Named(src.left.counit(x), "e")),
                        Named(mono.pair(sx, x), "f2"),
                        tens(named, Id(fx)),
                    ),
                    EMPTY_ENV,
                ).holds
            except (TypeMismatch, MalformedTable):
                continue
            if eq1 and eq2:
                found = cand
                break
        if found is None:
            return None
        table[x] = found
    return lambda x: table[x]


def resolve_witness(
    func: FunctorData,
    src: DualityContext,
    tgt: DualityContext,
    rb: ReportBuilder | None = None,
    kappa_candidate: Callable[[Obj], Mor] | None = None,
) -> AutonomyWitness | None:
    """Obtain a comparison-map witness by the cheapest route available:
    a supplied candidate, the closed form over a costructure that passes
    the interaction laws (equipping a strong functor with the inverse
    costructure first when necessary), or a per-object hom-set search."""
    if kappa_candidate is not None:
        return build_witness(func, src, tgt, kappa=kappa_candidate)
    v = func.source
    candidate = func
    if candidate.comonoidal is None:
        try:
            candidate = FunctorData(
                func.name, func.source, func.target, func.obj, func.mor,
                monoidal=func.monoidal,
                comonoidal=comonoidal_from_strong(func),
            )
        except NotInvertible:
            candidate = func
    if candidate.comonoidal is not None:
        scratch = ReportBuilder("scratch", v.scope_label())
        if check_frobenius(candidate, scratch):
            try:
                return kappa_from_frobenius(candidate, src, tgt, rb)
            except InverseFailure:
                pass
    kap = search_kappa(func, src, tgt)
    if kap is not None:
        return build_witness(func, src, tgt, kappa=kap)
    return None


CONDITION_NAMES = (
    "frobenius-extendable",
    "autonomous",
    "kappa-mc-iso",
    "lambda-cm-iso",
    "sigma-iso",
    "tau-iso",
)


@dataclass
class EquivalenceMatrix:
    """Verdicts for the six equivalent conditions, plus how the witness
    was obtained.  ``rejected`` marks inputs that failed an upstream gate
    (functoriality or the structure-map laws) before the conditions could
    be evaluated."""

    functor: str
    conditions: dict[str, bool] = field(default_factory=dict)
    agree: bool = False
    rejected: bool = False
    gate: str | None = None
    witness_provenance: str | None = None
    report: Report | None = None

    @property
    def unanimous_true(self) -> bool:
        return self.agree and all(self.conditions.values())


def adjudicate_cor_frob(
    func: FunctorData,
    src: DualityContext,
    tgt: DualityContext,
    kappa_candidate: Callable[[Obj], Mor] | None = None,
) -> EquivalenceMatrix:
    """Evaluate all six equivalent conditions for a monoidal functor
    between categories with full duality data, behind two upstream gates
    (functoriality, then the structure-map laws).  Also records the
    left/right autonomy agreement, the three-way comparison between
    autonomy and the two comparison-map conditions, and the collapse of
    the whole equivalence.  Disagreement is reported, not raised."""
    v, w = func.source, func.target
    rb = ReportBuilder(f"six-way equivalence for {func.name}", v.scope_label())

    if not check_functoriality(func, rb):
        return EquivalenceMatrix(
            func.name, rejected=True, gate="functoriality", report=rb.build()
        )
    if not check_monoidal(func, rb):
        return EquivalenceMatrix(
            func.name, rejected=True, gate="structure-maps", report=rb.build()
        )

    # obtain a comparison-map witness
    witness = resolve_witness(func, src, tgt, rb, kappa_candidate)

    conditions = {name: False for name in CONDITION_NAMES}
    outputs: SynthesisOutputs | None = None
    if witness is None:
        # no comparison map anywhere in scope: conditions 2-6 fail; the
        # interaction laws can still be judged directly when a
        # costructure was supplied.
        if func.comonoidal is not None:
            conditions["frobenius-extendable"] = check_frobenius(func, rb)
    else:
        # (1) Frobenius-extendability via synthesis
        try:
            outputs = build_sigma_tau(func, src, tgt, witness, rb)
            synthesize_comonoidal(func, outputs, src, tgt, rb)
            conditions["frobenius-extendable"] = True
        except (
            CommonCompositeMismatch,
            StructuresDisagree,
            FrobeniusFailure,
            NotInvertible,
            MalformedTable,
            TypeMismatch,
        ) as exc:
            rb.entry(
                "cor:frob", (func.name, "synthesis"), False,
                note=f"{type(exc).__name__}: {exc}",
            )

        # (2) autonomy, with left/right agreement
        check_mates(func, src, tgt, witness, rb)
        left_report = check_autonomous(func, src, tgt, witness, side="left")
        rb.merge(left_report)
        right_report = check_autonomous(func, src, tgt, witness, side="right")
        rb.merge(right_report)
        rb.entry(
            "rem:leftaut=rightaut", (func.name,), left_report.ok == right_report.ok,
            note=f"left verdict {left_report.ok} vs right verdict {right_report.ok}",
        )
        conditions["autonomous"] = left_report.ok

        # (3) kappa as a structure-respecting invertible transformation
        t_kappa = kappa_transf(func, src, tgt, witness.kappa, flavor="monoidal-comonoidal")
        c3 = check_nat_flavor(t_kappa, rb, nat_eq_id="nat(kappa)", flavor_eq_id="eq:lax-colax")
        c3 &= check_components_invertible(t_kappa, rb, "iso(kappa)")
        conditions["kappa-mc-iso"] = c3

        # (4) lambda likewise, with the flavors transposed
        t_lambda = lambda_transf(func, src, tgt, witness.lam, flavor="comonoidal-monoidal")
        c4 = check_nat_flavor(t_lambda, rb, nat_eq_id="nat(lambda)")
        c4 &= check_components_invertible(t_lambda, rb, "iso(lambda)")
        conditions["lambda-cm-iso"] = c4

        # (5), (6) the collapse maps; when the defining legs disagreed
        # there is no well-defined collapse map, so these stay False
        if outputs is not None:
            t_sigma = sigma_transf(func, src, tgt, outputs.sigma, flavor="comonoidal-monoidal")
            c5 = check_nat_flavor(t_sigma, rb, nat_eq_id="nat(sigma)", flavor_eq_id="klst")
            c5 &= check_components_invertible(t_sigma, rb, "iso(sigma)")
            conditions["sigma-iso"] = c5
            t_tau = tau_transf(func, src, tgt, outputs.tau, flavor="monoidal-comonoidal")
            c6 = check_nat_flavor(t_tau, rb, nat_eq_id="nat(tau)", flavor_eq_id="klst")
            c6 &= check_components_invertible(t_tau, rb, "iso(tau)")
            conditions["tau-iso"] = c6

    agree = len(set(conditions.values())) == 1
    summary = ", ".join(f"{k}={v_}" for k, v_ in conditions.items())
    if witness is None:
        summary += "; no comparison-map candidate found in scope"
    rb.entry(
        "cor:frob", (func.name,), agree,
        note=None if agree else f"the six condition verdicts are not unanimous: {summary}",
    )
    three_way = (
        conditions["autonomous"] == conditions["kappa-mc-iso"] == conditions["lambda-cm-iso"]
    )
    rb.entry(
        "prop:lax-colax", (func.name,), three_way,
        note=None if three_way else "autonomy and the comparison-map conditions disagree",
    )
    one_way = (not conditions["autonomous"]) or conditions["kappa-mc-iso"]
    rb.entry(
        "prop:colax-lax", (func.name,), one_way,
        note=None if one_way else "autonomous but the comparison map fails its structure square",
    )
    return EquivalenceMatrix(
        func.name,
        conditions,
        agree=agree,
        witness_provenance=witness.provenance if witness is not None else None,
        report=rb.build(),
    )
