"""Dual objects: search, snake equations, transposes, and full contexts."""

from __future__ import annotations

import pytest

from frobcat import (
    DualityAssignment,
    ReportBuilder,
    all_mats,
    as_view,
    build_duality_context,
    check_snakes,
    check_transpose_characterization,
    find_left_dual,
    find_right_dual,
    mat_from_entries,
    solve_s2,
    swap_mat,
    transpose,
)
from frobcat.boolmat import transpose as transpose_mat
from frobcat.errors import HintInvalid, NotFound
from frobcat.instances import cyclic_context

from _naive import cyclic_dual, grid_transpose, to_grid


def test_cyclic_duals_are_group_inverses(z4_cat):
    v = as_view(z4_cat)
    for g in v.objects:
        sx, d, e = find_left_dual(v, g)
        assert sx == cyclic_dual(4, g)
        assert d == "id0" and e == "id0"
        sx_r, d_r, e_r = find_right_dual(v, g)
        assert sx_r == cyclic_dual(4, g)


def test_find_dual_respects_valid_hint(z4_cat):
    v = as_view(z4_cat)
    sx, d, e = find_left_dual(v, 1, hint=(3, "id0", "id0"))
    assert sx == 3


def test_find_dual_rejects_bad_hint(z4_cat):
    v = as_view(z4_cat)
    with pytest.raises(HintInvalid):
        find_left_dual(v, 1, hint=(2, "id0", "id0"))


def test_chain_has_no_dual_off_the_unit(chain6):
    v = as_view(chain6)
    with pytest.raises(NotFound):
        find_left_dual(v, 3)
    with pytest.raises(NotFound):
        find_right_dual(v, 3)


def test_snake_reports_use_both_sides(bool2):
    rb = ReportBuilder("snakes", "generators")
    assert check_snakes(bool2.context.left, rb)
    assert check_snakes(bool2.context.right, rb)
    r = rb.build()
    assert r.ok
    ids = {e.equation_id for e in r.entries}
    assert "left-dual" in ids and "eq:rightdual" in ids


def test_cyclic_context_functor_squares_to_identity(z4_ctx):
    S = z4_ctx.S
    for g in (0, 1, 2, 3):
        assert S.obj(S.obj(g)) == g
        assert z4_ctx.left.dual(g) == cyclic_dual(4, g)
        assert z4_ctx.right.dual(g) == cyclic_dual(4, g)


def test_bool_transpose_equals_entrywise(bool2):
    d = bool2.context.left
    for f in all_mats(2, 2):
        assert to_grid(transpose(d, f)) == grid_transpose(to_grid(f))
    for f in all_mats(1, 2):
        got = transpose(d, f)
        assert got.dom == 2 and got.cod == 1
        assert to_grid(got) == grid_transpose(to_grid(f))


def test_bool_double_transpose_is_identity_map(bool2):
    d = bool2.context.left
    for f in all_mats(2, 2):
        assert transpose(d, transpose(d, f)) == f


def test_transpose_characterization_on_bool(bool2):
    rb = ReportBuilder("transpose", "generators")
    assert check_transpose_characterization(bool2.context.left, rb)
    assert rb.build().ok


def test_transpose_reverses_composition(bool2):
    d = bool2.context.left
    f = mat_from_entries([[1, 1], [0, 1]])
    g = mat_from_entries([[0, 1], [1, 1]])
    v = bool2.category.view()
    lhs = transpose(d, v.compose(g, f))
    rhs = v.compose(transpose(d, f), transpose(d, g))
    assert lhs == rhs


def test_solve_s2_matches_the_declared_swap(bool2):
    # solving is a search over hom(SX (x) SY, S(Y (x) X)); it stays small
    # only while the product of the dimensions does
    d = bool2.context.left
    for a, b in ((0, 0), (0, 2), (1, 1), (1, 2), (2, 1)):
        assert solve_s2(d, a, b) == swap_mat(a, b)


def test_solve_s2_refuses_oversized_searches(bool2):
    from frobcat.errors import ScopeTooLarge

    with pytest.raises(ScopeTooLarge):
        solve_s2(bool2.context.left, 2, 2)


def test_ill_typed_duality_data_is_rejected(bool2):
    # On the matrix backend a 1x1 unit/counit would make every snake
    # composite collapse to an identity; the endpoint check must catch it.
    v = bool2.category.view()
    bad = DualityAssignment(
        "left", v, lambda x: x,
        lambda x: mat_from_entries([[1]]),
        lambda x: mat_from_entries([[1]]),
    )
    rb = ReportBuilder("bad", "generators")
    assert not check_snakes(bad, rb)
    r = rb.build()
    assert not r.ok
    assert any("TypeMismatch" in (e.witness.error or "") for e in r.failing())


def test_ill_typed_hint_is_invalid(bool2):
    v = bool2.category.view()
    with pytest.raises(HintInvalid):
        find_left_dual(v, 2, hint=(2, mat_from_entries([[1]]), mat_from_entries([[1]])))


def test_build_duality_context_verifies_everything(z4_cat):
    ctx = build_duality_context(
        as_view(z4_cat),
        left_hints={g: ((4 - g) % 4, "id0", "id0") for g in range(4)},
        right_hints={g: ((4 - g) % 4, "id0", "id0") for g in range(4)},
    )
    assert ctx.report.ok
    ids = {e.equation_id for e in ctx.report.entries}
    # snake laws, double-dual triangles, and comparison-map checks all ran
    assert "left-dual" in ids
    assert "eq:rightdual" in ids
    assert any(i.startswith("adjoint:triangle") for i in ids)


def test_fresh_cyclic_context_matches_fixture(z4_ctx):
    again = cyclic_context(4)
    assert again.left.dual(1) == z4_ctx.left.dual(1) == 3
    assert again.report.ok and z4_ctx.report.ok
