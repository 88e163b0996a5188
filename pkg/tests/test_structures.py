"""Functors with structure and costructure maps, and their law checkers."""

from __future__ import annotations

import pytest

from frobcat import (
    FunctorData,
    NatTransfData,
    ReportBuilder,
    StructureMaps,
    as_view,
    check_comonoidal,
    check_components_invertible,
    check_frobenius,
    check_functoriality,
    check_monoidal,
    check_nat_flavor,
    comonoidal_from_strong,
    compose_functors,
    identity_functor,
    invert_mat,
    op_functor,
    opcop_functor,
)
from frobcat.errors import MissingStructure, NotInvertible


def run(checker, func) -> tuple[bool, object]:
    rb = ReportBuilder(f"{checker.__name__} of {func.name}", func.source.scope_label())
    ok = checker(func, rb)
    return ok, rb.build()


def test_identity_functor_is_frobenius(z4_identity):
    f = z4_identity.functor
    for checker in (check_functoriality, check_monoidal, check_comonoidal, check_frobenius):
        ok, report = run(checker, f)
        assert ok and report.ok, f"{checker.__name__} failed on {f.name}"


def test_quotient_functor_is_frobenius(z4_to_z2):
    f = z4_to_z2.functor
    for checker in (check_functoriality, check_monoidal, check_comonoidal, check_frobenius):
        ok, report = run(checker, f)
        assert ok and report.ok


def test_relabeling_functor_is_frobenius(bool_relabel):
    f = bool_relabel.functor
    for checker in (check_functoriality, check_monoidal, check_comonoidal, check_frobenius):
        ok, report = run(checker, f)
        assert ok and report.ok


def test_frobenius_report_contains_both_interaction_laws(z4_identity):
    ok, report = run(check_frobenius, z4_identity.functor)
    assert ok
    ids = {e.equation_id for e in report.entries}
    assert "eq1:Frob" in ids and "eq2:Frob" in ids


def test_monoidal_report_equation_ids(z4_to_z2):
    ok, report = run(check_monoidal, z4_to_z2.functor)
    assert ok
    ids = {e.equation_id for e in report.entries}
    assert "lax-functor0" in ids and "lax-functor2" in ids and "nat(f2)" in ids


def test_shifted_map_breaks_functoriality(z4_shift):
    ok, report = run(check_functoriality, z4_shift.functor)
    assert not ok
    assert not report.ok
    assert any(e.equation_id.startswith("functoriality") for e in report.failing())


def test_corrupted_pairing_breaks_coherence(bool_bad_f2):
    ok, report = run(check_monoidal, bool_bad_f2.functor)
    assert not ok
    failing_ids = {e.equation_id for e in report.failing()}
    assert failing_ids <= {"lax-functor0", "lax-functor2", "nat(f2)"}
    assert failing_ids


def test_missing_structure_is_a_typed_error(z4_cat):
    v = as_view(z4_cat)
    bare = FunctorData("bare", v, v, lambda x: x, lambda m: m)
    with pytest.raises(MissingStructure):
        bare.require_monoidal()
    with pytest.raises(MissingStructure):
        bare.require_comonoidal()


def test_comonoidal_from_strong_inverts_the_structure(bool_relabel):
    f = bool_relabel.functor
    derived = comonoidal_from_strong(f)
    mono = f.require_monoidal()
    v, w = f.source, f.target
    for x in v.objects:
        for y in v.objects:
            expected = invert_mat(mono.pair(x, y))
            assert expected is not None
            assert w.mor_eq(derived.pair(x, y), expected)
    assert w.mor_eq(derived.unit, invert_mat(mono.unit))


def test_comonoidal_from_strong_requires_invertibility(chain6):
    # thresholding the chain at its top makes the pairing at (3, 3) the
    # strict arrow 0 -> 6, which has no inverse
    v = as_view(chain6)

    def obj(x):
        return 0 if x < 6 else 6

    def mor(m):
        a, b = m.split("->")
        return f"{obj(int(a))}->{obj(int(b))}"

    func = FunctorData(
        "threshold", v, v, obj, mor,
        monoidal=StructureMaps(
            lambda x, y: f"{min(obj(x) + obj(y), 6)}->{obj(min(x + y, 6))}",
            "0->0",
        ),
    )
    ok, _ = run(check_functoriality, func)
    assert ok
    probe = comonoidal_from_strong(func)
    with pytest.raises(NotInvertible):
        probe.pair(3, 3)


def test_identity_functor_name_and_behavior(z4_cat):
    v = as_view(z4_cat)
    f = identity_functor(v)
    assert f.name == f"1[{v.name}]"
    assert f.obj(2) == 2
    assert f.mor("id3") == "id3"


def test_compose_functors_applies_outer_after_inner(z4_to_z2):
    f = z4_to_z2.functor
    idv = identity_functor(f.source)
    g = compose_functors(f, idv)
    for x in f.source.objects:
        assert g.obj(x) == f.obj(x)
    for m in list(f.source.mor_scope())[:6]:
        assert g.mor(m) == f.mor(m)


def test_op_functors_flip_views(z4_identity):
    f = z4_identity.functor
    fo = op_functor(f)
    assert fo.source.op and fo.target.op
    foc = opcop_functor(f)
    assert foc.source.op and foc.source.cop
    # op twice restores the original orientation
    double = op_functor(fo)
    assert not double.source.op


def test_nat_flavor_on_identity_transformation(z4_identity):
    f = z4_identity.functor
    t = NatTransfData(
        "triv", f, f, lambda x: f.source.identity(x), flavor="monoidal"
    )
    rb = ReportBuilder("flavor", "exhaustive")
    assert check_nat_flavor(t, rb)
    assert check_components_invertible(t, rb, "iso(triv)")
    r = rb.build()
    assert r.ok
    ids = {e.equation_id for e in r.entries}
    assert "nat(triv)" in ids and "iso(triv)" in ids


def test_nat_flavor_detects_unnatural_family(z4_identity):
    f = z4_identity.functor
    v = f.source
    # a family that is not even type-consistent at one object
    t = NatTransfData(
        "skew", f, f,
        lambda x: v.identity((x + 1) % 4) if x == 1 else v.identity(x),
        flavor="plain",
    )
    rb = ReportBuilder("flavor", "exhaustive")
    ok = check_nat_flavor(t, rb)
    assert not ok
    assert not rb.build().ok
