"""Morphism expressions and their evaluation.

Coherence equations are represented as small ASTs over a handful of node
types (identities, named morphism values, composition, tensor, functor
application, natural-transformation components).  :func:`check_equation`
type-checks both sides first — a mismatch between the sides is reported
before any evaluation happens — then evaluates each side in a category
view and compares the resulting morphism values.

Composition is written in applicative order throughout: ``Compose(g, f)``
and ``g * f`` both mean "g after f", and :func:`comp` lists factors the
same way (``comp(g, h, f)`` is g after h after f).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from .core import CategoryView, Obj
from .errors import TypeMismatch, UnboundRef
from .report import EquationVerdict


class MorphExpr:
    """Base class for morphism expressions; provides operator sugar."""

    def __mul__(self, other: "MorphExpr") -> "MorphExpr":
        return Compose(self, other)

    def __matmul__(self, other: "MorphExpr") -> "MorphExpr":
        return Tensor(self, other)


@dataclass(frozen=True)
class Id(MorphExpr):
    """The identity morphism of an object."""

    obj: Any

    def __repr__(self) -> str:
        return f"Id({self.obj!r})"


@dataclass(frozen=True)
class Named(MorphExpr):
    """A concrete morphism value, with an optional display label."""

    mor: Any
    label: str | None = None

    def __repr__(self) -> str:
        return f"Named({self.label or self.mor!r})"


@dataclass(frozen=True)
class Compose(MorphExpr):
    """left after right."""

    left: MorphExpr
    right: MorphExpr


@dataclass(frozen=True)
class Tensor(MorphExpr):
    """left tensor right (in the ambient view's tensor order)."""

    left: MorphExpr
    right: MorphExpr


@dataclass(frozen=True)
class FMap(MorphExpr):
    """Application of a functor to a sub-expression.

    The sub-expression is evaluated in the functor's own source view,
    regardless of the view the enclosing expression is evaluated in; the
    result is a morphism of the functor's target view.
    """

    functor: Any  # functor data, or a name bound in the environment
    sub: MorphExpr


@dataclass(frozen=True)
class NatComponent(MorphExpr):
    """The component of a natural transformation at an object."""

    transf: Any  # transformation data, or a name bound in the environment
    obj: Any


def comp(*exprs: MorphExpr) -> MorphExpr:
    """Compose factors in applicative order: comp(g, h, f) = g . h . f
    (f applied first)."""
    if not exprs:
        raise ValueError("comp() needs at least one factor")
    out = exprs[-1]
    for e in reversed(exprs[:-1]):
        out = Compose(e, out)
    return out


def tens(*exprs: MorphExpr) -> MorphExpr:
    """Tensor factors left to right (left fold)."""
    if not exprs:
        raise ValueError("tens() needs at least one factor")
    out = exprs[0]
    for e in exprs[1:]:
        out = Tensor(out, e)
    return out


class Env:
    """Evaluation environment: functors and transformations by name.

    ``FMap``/``NatComponent`` nodes may carry the data object directly, in
    which case no environment lookup happens.
    """

    def __init__(self, functors: Mapping[str, Any] | None = None,
                 transfs: Mapping[str, Any] | None = None):
        self.functors = dict(functors or {})
        self.transfs = dict(transfs or {})

    def functor(self, ref: Any) -> Any:
        if isinstance(ref, str):
            try:
                return self.functors[ref]
            except KeyError:
                raise UnboundRef(f"functor {ref!r} is not bound in the environment") from None
        return ref

    def transf(self, ref: Any) -> Any:
        if isinstance(ref, str):
            try:
                return self.transfs[ref]
            except KeyError:
                raise UnboundRef(f"transformation {ref!r} is not bound in the environment") from None
        return ref


EMPTY_ENV = Env()


def _functor_label(f: Any) -> str:
    if isinstance(f, str):
        return f
    return getattr(f, "name", "F")


def render_expr(e: MorphExpr) -> str:
    if isinstance(e, Id):
        return f"1_{e.obj}"
    if isinstance(e, Named):
        return e.label if e.label is not None else str(e.mor)
    if isinstance(e, Compose):
        return f"({render_expr(e.left)} ∘ {render_expr(e.right)})"
    if isinstance(e, Tensor):
        return f"({render_expr(e.left)} ⊗ {render_expr(e.right)})"
    if isinstance(e, FMap):
        return f"{_functor_label(e.functor)}({render_expr(e.sub)})"
    if isinstance(e, NatComponent):
        t = e.transf if isinstance(e.transf, str) else getattr(e.transf, "name", "t")
        return f"{t}_{e.obj}"
    raise TypeError(f"not a morphism expression: {e!r}")


def expr_type(view: CategoryView, e: MorphExpr, env: Env = EMPTY_ENV) -> tuple[Obj, Obj]:
    """(dom, cod) of the expression in the given view's orientation, without
    performing any composition or tensor computation."""
    if isinstance(e, Id):
        return (e.obj, e.obj)
    if isinstance(e, Named):
        return (view.dom(e.mor), view.cod(e.mor))
    if isinstance(e, Compose):
        ld, lc = expr_type(view, e.left, env)
        rd, rc = expr_type(view, e.right, env)
        if rc != ld:
            raise TypeMismatch(
                f"composition {render_expr(e)}: inner endpoints differ "
                f"({view.obj_label(rc)} vs {view.obj_label(ld)})",
                expr=e,
            )
        return (rd, lc)
    if isinstance(e, Tensor):
        ld, lc = expr_type(view, e.left, env)
        rd, rc = expr_type(view, e.right, env)
        return (view.tensor_obj(ld, rd), view.tensor_obj(lc, rc))
    if isinstance(e, FMap):
        f = env.functor(e.functor)
        a, b = expr_type(f.source, e.sub, env)
        d, c = f.obj(a), f.obj(b)
        if f.target.base is not view.base:
            raise TypeMismatch(
                f"{render_expr(e)} lands in {f.target.name}, not in {view.name}", expr=e
            )
        if f.target.op != view.op:
            d, c = c, d
        return (d, c)
    if isinstance(e, NatComponent):
        t = env.transf(e.transf)
        val = t.component(e.obj)
        return (view.dom(val), view.cod(val))
    raise TypeError(f"not a morphism expression: {e!r}")


def eval_expr(view: CategoryView, e: MorphExpr, env: Env = EMPTY_ENV) -> Any:
    """Evaluate the expression to a concrete morphism value of the view."""
    if isinstance(e, Id):
        return view.identity(e.obj)
    if isinstance(e, Named):
        return e.mor
    if isinstance(e, Compose):
        return view.compose(eval_expr(view, e.left, env), eval_expr(view, e.right, env))
    if isinstance(e, Tensor):
        return view.tensor_mor(eval_expr(view, e.left, env), eval_expr(view, e.right, env))
    if isinstance(e, FMap):
        f = env.functor(e.functor)
        return f.mor(eval_expr(f.source, e.sub, env))
    if isinstance(e, NatComponent):
        t = env.transf(e.transf)
        return t.component(e.obj)
    raise TypeError(f"not a morphism expression: {e!r}")


def check_equation(view: CategoryView, lhs: MorphExpr, rhs: MorphExpr,
                   env: Env = EMPTY_ENV) -> EquationVerdict:
    """Type-check, then evaluate and compare both sides.

    A type disagreement *between* the sides raises :class:`TypeMismatch`
    before anything is evaluated (callers convert it into a failing report
    entry); equal types proceed to evaluation and value comparison.
    """
    lt = expr_type(view, lhs, env)
    rt = expr_type(view, rhs, env)
    if lt != rt:
        raise TypeMismatch(
            "equation sides have different types: "
            f"{view.obj_label(lt[0])}->{view.obj_label(lt[1])} vs "
            f"{view.obj_label(rt[0])}->{view.obj_label(rt[1])} "
            f"({render_expr(lhs)} = {render_expr(rhs)})"
        )
    lv = eval_expr(view, lhs, env)
    rv = eval_expr(view, rhs, env)
    return EquationVerdict(
        holds=view.mor_eq(lv, rv),
        lhs_expr=render_expr(lhs),
        rhs_expr=render_expr(rhs),
        lhs_value=view.mor_label(lv),
        rhs_value=view.mor_label(rv),
    )
