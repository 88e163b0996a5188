"""Morphism expressions: typing, evaluation, and equation checking."""

from __future__ import annotations

import pytest

from frobcat import (
    EMPTY_ENV,
    FMap,
    Id,
    Named,
    as_view,
    check_equation,
    comp,
    eval_expr,
    expr_type,
    identity_functor,
    render_expr,
    tens,
)
from frobcat.errors import TypeMismatch


def test_identity_expression(chain6):
    v = as_view(chain6)
    assert eval_expr(v, Id(3)) == "3->3"
    assert expr_type(v, Id(3)) == (3, 3)


def test_composition_evaluates_right_to_left(chain6):
    v = as_view(chain6)
    e = comp(Named("4->6", "top"), Named("2->4", "mid"), Named("0->2", "bot"))
    assert expr_type(v, e) == (0, 6)
    assert eval_expr(v, e) == "0->6"


def test_composition_type_errors_are_raised(chain6):
    v = as_view(chain6)
    e = comp(Named("0->2", "low"), Named("4->6", "high"))
    with pytest.raises(TypeMismatch):
        expr_type(v, e)
    with pytest.raises(TypeMismatch):
        eval_expr(v, e)


def test_tensor_expression(chain6):
    v = as_view(chain6)
    e = tens(Named("0->2", "a"), Named("1->3", "b"))
    assert expr_type(v, e) == (1, 5)
    assert eval_expr(v, e) == "1->5"


def test_tensor_saturates_at_chain_top(chain6):
    v = as_view(chain6)
    e = tens(Named("4->6", "a"), Named("4->6", "b"))
    assert expr_type(v, e) == (6, 6)
    assert eval_expr(v, e) == "6->6"


def test_fmap_applies_the_functor(chain6):
    v = as_view(chain6)
    f = identity_functor(v)
    e = FMap(f, Named("2->4", "arrow"))
    assert eval_expr(v, e) == "2->4"
    assert expr_type(v, e) == (2, 4)


def test_check_equation_verdicts(chain6):
    v = as_view(chain6)
    good = check_equation(
        v, comp(Named("2->4", "g"), Named("0->2", "f")), Named("0->4", "gf"), EMPTY_ENV
    )
    assert good.holds
    assert good.lhs_value == good.rhs_value
    # in a posetal category parallel arrows are equal, so a genuine failure
    # needs different endpoints, which is a type error, not a verdict
    with pytest.raises(TypeMismatch):
        check_equation(v, Named("0->2", "f"), Named("0->4", "h"), EMPTY_ENV)


def test_check_equation_failure_records_values(z4_cat):
    v = as_view(z4_cat)
    bad = check_equation(v, Named("id1", "a"), Named("id1", "b"), EMPTY_ENV)
    assert bad.holds
    with pytest.raises(TypeMismatch):
        # id1 and id2 are parallel only object-wise; dom/cod differ
        check_equation(v, Named("id1", "a"), Named("id2", "b"), EMPTY_ENV)


def test_render_expr_mentions_component_names(chain6):
    text = render_expr(comp(Named("2->4", "step"), Id(2)))
    assert "step" in text and "1_2" in text
