"""Linear pairs: the coherence laws, derived duality data, and the six-way
equivalence for pairs."""

from __future__ import annotations

import pytest

from frobcat import (
    ReportBuilder,
    build_Omega,
    check_linear,
    frobenius_from_equal_linear,
    linear_from_frobenius,
    unit_duals,
)
from frobcat.linear import adjudicate_when_lin_frob, search_mc_iso
from frobcat.errors import MalformedTable


def test_chain_pairs_satisfy_linear_laws(posetal_a, posetal_b):
    for inst in (posetal_a, posetal_b):
        report = check_linear(inst.linear)
        assert report.ok, f"{inst.linear.name} failed: {report.failing()[:3]}"
        ids = {e.equation_id for e in report.entries}
        assert {"lf1", "lf2", "lf3", "lf4", "lf5", "nat(nu)"} <= ids


def test_frobenius_functors_give_linear_pairs(autonomous_linear_instances):
    for inst in autonomous_linear_instances:
        report = check_linear(inst.linear)
        assert report.ok, f"{inst.linear.name} failed"


def test_linear_from_frobenius_round_trip(z4_identity):
    lf = linear_from_frobenius(z4_identity.functor)
    assert lf.R is z4_identity.functor or lf.R.name == z4_identity.functor.name
    back = frobenius_from_equal_linear(lf)
    v = z4_identity.functor.source
    for x in v.objects:
        assert back.obj(x) == z4_identity.functor.obj(x)


def test_unit_duals_are_verified(z4_linear_id):
    rb = ReportBuilder("unit duals", "exhaustive")
    (d, e), (dp, ep) = unit_duals(z4_linear_id.linear, rb)
    r = rb.build()
    assert r.ok
    ids = {x.equation_id for x in r.entries}
    assert "ex:lin left dual" in ids and "ex:lin right dual" in ids
    w = z4_linear_id.linear.target
    assert w.dom(d) == w.unit and w.cod(e) == w.unit


def test_derived_duality_data_passes_snakes(z4_linear_id):
    rb = ReportBuilder("derived duals", "exhaustive")
    witness = build_Omega(
        z4_linear_id.linear, z4_linear_id.source, z4_linear_id.target, rb
    )
    assert witness is not None
    assert rb.build().ok


def test_adjudication_unanimous_on_autonomous_pairs(autonomous_linear_instances):
    for inst in autonomous_linear_instances:
        matrix = adjudicate_when_lin_frob(inst.linear, inst.source, inst.target)
        assert matrix.unanimous_true, f"{inst.linear.name}: {matrix.conditions}"
        assert set(matrix.conditions) == {
            "omega-compatible", "R-frobenius", "R-autonomous",
            "L-frobenius", "L-autonomous", "R-L-mc-iso",
        }
        assert matrix.report is not None and matrix.report.ok


def test_adjudication_records_all_four_collapse_conditions(z4_linear_id):
    matrix = adjudicate_when_lin_frob(
        z4_linear_id.linear, z4_linear_id.source, z4_linear_id.target
    )
    omega_rows = [e for e in matrix.report.entries if e.equation_id == "omega"]
    conds = {e.instantiation[0] for e in omega_rows}
    assert conds == {"cond1", "cond2", "cond3", "cond4"}
    assert all(e.holds for e in omega_rows)


def test_chain_pair_is_diagnosed_not_adjudicated(posetal_a, posetal_b):
    a = adjudicate_when_lin_frob(posetal_a.linear, None, None)
    assert a.rejected and a.gate == "non-autonomous-base"
    assert a.conditions == {
        "linear": True,
        "R-frobenius": True,
        "L-monoidal": False,
        "L-frobenius": False,
        "R-L-mc-iso": False,
    }
    assert not a.report.ok  # the rejection is visible in the report

    b = adjudicate_when_lin_frob(posetal_b.linear, None, None)
    assert b.rejected and b.gate == "non-autonomous-base"
    assert b.conditions == {
        "linear": True,
        "R-frobenius": True,
        "L-monoidal": True,
        "L-frobenius": True,
        "R-L-mc-iso": False,
    }
    assert not b.report.ok


def test_mc_iso_search_finds_identity_on_equal_pair(z4_linear_id):
    lf = z4_linear_id.linear
    found = search_mc_iso(lf.R, lf.L)
    assert found is not None
    w = lf.target
    for x in lf.source.objects:
        assert w.invert(found(x)) is not None


def test_partial_structure_tables_surface_as_errors(posetal_a):
    # variant A's costructure half is deliberately not monoidal: its
    # pairing table has no entry at (1, 1)
    lf = posetal_a.linear
    mono = lf.L.monoidal
    assert mono is not None
    with pytest.raises(MalformedTable):
        mono.pair(1, 1)
