"""Synthesis of costructure maps from a comparison map, and the searches."""

from __future__ import annotations

import pytest

from frobcat import (
    FunctorData,
    ReportBuilder,
    adjudicate_cor_frob,
    build_sigma_tau,
    invert_mat,
    kappa_from_frobenius,
    resolve_witness,
    search_kappa,
    synthesize_comonoidal,
)


def stripped(func: FunctorData, name: str | None = None) -> FunctorData:
    """The same functor without its costructure maps."""
    return FunctorData(
        name or func.name, func.source, func.target, func.obj, func.mor,
        monoidal=func.monoidal, comonoidal=None,
    )


def test_collapse_maps_have_agreeing_legs(z4_to_z2):
    f, src, tgt = z4_to_z2.functor, z4_to_z2.source, z4_to_z2.target
    wit = kappa_from_frobenius(f, src, tgt)
    outputs = build_sigma_tau(f, src, tgt, wit)
    assert outputs.audit is not None and outputs.audit.ok
    ids = {e.equation_id for e in outputs.audit.entries}
    assert "eq:ka-la" in ids
    # both maps are defined and invertible at every object
    w = f.target
    for x in f.source.objects:
        assert w.mor_eq(w.compose(outputs.sigma(x), outputs.sigma_inv(x)),
                        w.identity(w.cod(outputs.sigma(x))))
        assert w.mor_eq(w.compose(outputs.tau_inv(x), outputs.tau(x)),
                        w.identity(w.dom(outputs.tau(x))))


def test_synthesis_recovers_stripped_costructure(z4_to_z2):
    f, src, tgt = z4_to_z2.functor, z4_to_z2.source, z4_to_z2.target
    original = f.require_comonoidal()
    bare = stripped(f)
    wit = kappa_from_frobenius(f, src, tgt)  # closed form needs the costructure
    outputs = build_sigma_tau(bare, src, tgt, wit)
    rb = ReportBuilder("synthesis", f.source.scope_label())
    synthesized = synthesize_comonoidal(bare, outputs, src, tgt, rb)
    assert rb.build().ok
    w = f.target
    for x in f.source.objects:
        for y in f.source.objects:
            assert w.mor_eq(synthesized.pair(x, y), original.pair(x, y))
    assert w.mor_eq(synthesized.unit, original.unit)


def test_synthesis_route_agreement_entries(positive_functor_instances):
    for inst in positive_functor_instances:
        f, src, tgt = inst.functor, inst.source, inst.target
        wit = kappa_from_frobenius(f, src, tgt)
        outputs = build_sigma_tau(f, src, tgt, wit)
        rb = ReportBuilder("synthesis", f.source.scope_label())
        synthesize_comonoidal(f, outputs, src, tgt, rb)
        r = rb.build()
        assert r.ok, f"synthesis audit failed for {f.name}"
        routes = [e for e in r.entries if e.equation_id == "synth:route-agreement"]
        n = len(list(f.source.objects))
        assert len(routes) == n * n + 1  # every object pair plus the unit
        assert all(e.holds for e in routes)


def test_synthesized_costructure_inverts_strong_structure(bool_relabel):
    f, src, tgt = bool_relabel.functor, bool_relabel.source, bool_relabel.target
    wit = kappa_from_frobenius(f, src, tgt)
    outputs = build_sigma_tau(f, src, tgt, wit)
    rb = ReportBuilder("synthesis", f.source.scope_label())
    synthesized = synthesize_comonoidal(f, outputs, src, tgt, rb)
    r = rb.build()
    assert r.ok
    assert any(e.equation_id == "synth:strong-inverse" for e in r.entries)
    mono = f.require_monoidal()
    w = f.target
    for x in f.source.objects:
        for y in f.source.objects:
            inverse = invert_mat(mono.pair(x, y))
            assert inverse is not None
            assert w.mor_eq(synthesized.pair(x, y), inverse)


def test_non_mate_witness_is_rejected(z4_identity):
    # a witness whose lambda is not the mate of its kappa makes the two
    # defining legs of the collapse maps disagree
    from frobcat import build_witness
    from frobcat.errors import CommonCompositeMismatch

    f, src, tgt = z4_identity.functor, z4_identity.source, z4_identity.target
    good = kappa_from_frobenius(f, src, tgt)
    wit = build_witness(
        f, src, tgt,
        kappa=good.kappa,
        lam=lambda x: f.source.identity(2) if x == 1 else good.lam(x),
    )
    assert wit.provenance == "given"
    with pytest.raises(CommonCompositeMismatch):
        build_sigma_tau(f, src, tgt, wit)


def test_search_recovers_closed_form_witness(z4_identity):
    f, src, tgt = z4_identity.functor, z4_identity.source, z4_identity.target
    closed = kappa_from_frobenius(f, src, tgt)
    found = search_kappa(f, src, tgt)
    assert found is not None
    w = f.target
    for x in f.source.objects:
        assert w.mor_eq(found(x), closed.kappa(x))


def test_resolve_witness_prefers_closed_form(z4_to_z2):
    f, src, tgt = z4_to_z2.functor, z4_to_z2.source, z4_to_z2.target
    wit = resolve_witness(f, src, tgt)
    assert wit is not None
    assert wit.provenance == "derived-from-frobenius"


def test_resolve_witness_accepts_candidate(z4_to_z2):
    f, src, tgt = z4_to_z2.functor, z4_to_z2.source, z4_to_z2.target
    closed = kappa_from_frobenius(f, src, tgt)
    wit = resolve_witness(f, src, tgt, kappa_candidate=closed.kappa)
    assert wit is not None
    assert wit.provenance in ("given", "derived-from-kappa")


def test_adjudication_is_unanimous_on_valid_instances(positive_functor_instances):
    for inst in positive_functor_instances:
        matrix = adjudicate_cor_frob(inst.functor, inst.source, inst.target)
        assert matrix.unanimous_true, f"{inst.functor.name}: {matrix.conditions}"
        assert not matrix.rejected
        assert matrix.report is not None and matrix.report.ok
        assert set(matrix.conditions) == {
            "frobenius-extendable", "autonomous", "kappa-mc-iso",
            "lambda-cm-iso", "sigma-iso", "tau-iso",
        }


def test_adjudication_gates_reject_faults(z4_shift, bool_bad_f2):
    shifted = adjudicate_cor_frob(z4_shift.functor, z4_shift.source, z4_shift.target)
    assert shifted.rejected and shifted.gate == "functoriality"
    assert not shifted.unanimous_true
    assert shifted.report is not None and not shifted.report.ok

    corrupted = adjudicate_cor_frob(bool_bad_f2.functor, bool_bad_f2.source, bool_bad_f2.target)
    assert corrupted.rejected and corrupted.gate == "structure-maps"
    assert corrupted.report is not None and not corrupted.report.ok


def test_adjudication_records_the_collapse_verdict(z4_identity):
    matrix = adjudicate_cor_frob(z4_identity.functor, z4_identity.source, z4_identity.target)
    rows = [e for e in matrix.report.entries if e.equation_id == "cor:frob"]
    assert rows and all(e.holds for e in rows)
    assert matrix.witness_provenance == "derived-from-frobenius"
