"""The built-in catalog: names, parameters, and structural invariants."""

from __future__ import annotations

import json

import pytest

from frobcat import catalog_entries, resolve_builtin, validate_category
from frobcat.errors import NotFound
from frobcat.instances import (
    BoolMatrixInstance,
    FunctorInstance,
    LinearInstance,
    build_posetal_nat,
)
from frobcat.io import category_to_doc


def test_catalog_is_sorted_and_complete():
    entries = catalog_entries()
    names = [e.name for e in entries]
    assert names == sorted(names)
    assert set(names) == {
        "bool", "bool-bad-f2", "bool-identity", "bool-linear", "bool-relabel",
        "chain", "cyclic", "posetal-nat", "z2-identity", "z4-identity",
        "z4-linear-id", "z4-shift", "z4-to-z2", "z4z2-linear",
    }
    kinds = {e.name: e.kind for e in entries}
    assert kinds["bool"] == "category"
    assert kinds["chain"] == "category"
    assert kinds["cyclic"] == "category"
    assert kinds["posetal-nat"] == "linear"
    assert kinds["z4-identity"] == "functor"


def test_fault_flags():
    flagged = {e.name for e in catalog_entries() if e.fault}
    assert flagged == {"bool-bad-f2", "z4-shift"}


def test_every_entry_builds():
    for entry in catalog_entries():
        _, built = resolve_builtin(entry.name)
        assert built is not None


def test_resolve_unknown_name_lists_alternatives():
    with pytest.raises(NotFound) as exc:
        resolve_builtin("no-such-thing")
    assert "z4-identity" in str(exc.value)


def test_resolve_with_parameters():
    _, chain = resolve_builtin("chain:4")
    assert list(chain.view().objects) == [0, 1, 2, 3, 4]
    _, cyc = resolve_builtin("cyclic:5")
    assert len(list(cyc.view().objects)) == 5
    with pytest.raises(ValueError):
        resolve_builtin("chain:x")
    with pytest.raises(ValueError):
        resolve_builtin("posetal-nat:6")  # needs both or neither parameter


def test_posetal_default_parameters():
    _, inst = resolve_builtin("posetal-nat")
    assert isinstance(inst, LinearInstance)
    assert inst.linear.name == "posetal-nat:6:A"
    _, b = resolve_builtin("posetal-nat:6:B")
    assert b.linear.name == "posetal-nat:6:B"
    with pytest.raises(ValueError):
        resolve_builtin("posetal-nat:2:A")  # too short to be interesting


def test_category_entries_validate():
    for name in ("chain", "cyclic", "bool"):
        _, built = resolve_builtin(name)
        cat = built.category if isinstance(built, BoolMatrixInstance) else built
        assert validate_category(cat).ok, f"{name} fails the axiom checks"


def test_functor_entries_are_well_formed():
    for entry in catalog_entries():
        if entry.kind != "functor":
            continue
        _, inst = resolve_builtin(entry.name)
        assert isinstance(inst, FunctorInstance)
        assert (inst.fault is not None) == entry.fault
        # contexts verified at build time
        assert inst.source.report.ok and inst.target.report.ok


def test_linear_entries_carry_contexts_only_when_autonomous():
    for name in ("z4-linear-id", "z4z2-linear", "bool-linear"):
        _, inst = resolve_builtin(name)
        assert inst.source is not None and inst.target is not None
    _, chain_pair = resolve_builtin("posetal-nat")
    assert chain_pair.source is None and chain_pair.target is None


def test_chain_rejects_degenerate_length():
    with pytest.raises(ValueError):
        build_posetal_nat(2)


def test_two_builds_serialize_identically():
    for name in ("chain", "cyclic"):
        _, first = resolve_builtin(name)
        _, second = resolve_builtin(name)
        doc1 = json.dumps(category_to_doc(first), sort_keys=True)
        doc2 = json.dumps(category_to_doc(second), sort_keys=True)
        assert doc1 == doc2


def test_instance_names_are_distinct():
    names = set()
    for entry in catalog_entries():
        _, built = resolve_builtin(entry.name)
        if isinstance(built, FunctorInstance):
            label = built.functor.name
        elif isinstance(built, LinearInstance):
            label = built.linear.name
        elif isinstance(built, BoolMatrixInstance):
            label = built.category.name
        else:
            label = built.name
        assert label not in names, f"duplicate instance name {label}"
        names.add(label)
