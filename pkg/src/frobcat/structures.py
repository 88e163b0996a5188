"""Functors between category views, their (co)monoidal structures, and
transformations between them.

Conventions that the whole library relies on:

* A :class:`FunctorData` is a *covariant* functor between two views.  All
  reversed variants (of the underlying arrows, of the tensor, of both) are
  obtained by :func:`op_functor` / :func:`cop_functor` / :func:`opcop_functor`,
  which flip the views and transform the structure maps mechanically —
  reversed laws are never hand-written.

* Structure maps are stored oriented in the functor's **target view** W:
  a monoidal structure has ``pair(X, Y): F(X) (x)_W F(Y) -> F(X (x)_V Y)``
  and ``unit: 1_W -> F(1_V)``; a comonoidal structure has the reversed
  W-arrows.

* Components of a :class:`NatTransfData` are stored oriented in the
  **base** category of the target view: the component at X runs from the
  source functor's value to the target functor's value as a base arrow.
  :func:`check_nat_flavor` normalizes this to the target view before
  evaluating the one generic template per flavor.
"""

from __future__ import annotations

import os
import random
from typing import Any, Callable, Iterable, Mapping, Sequence

from .core import CategoryView, FinCategory, Mor, Obj, as_view
from .errors import MalformedTable, MissingStructure, NotInvertible, TypeMismatch
from .expr import EMPTY_ENV, FMap, Id, MorphExpr, Named, NatComponent, Tensor, comp, tens
from .report import ReportBuilder

# Deterministic cap for quantification over pairs of scope morphisms.
_PAIR_CAP = 4096


def _seed() -> str:
    return os.environ.get("FROBCAT_SEED", "frobcat")


def deterministic_sample(items: Sequence, limit: int, tag: str) -> Sequence:
    """The full sequence if it fits, else a sample that is a pure function
    of the FROBCAT_SEED environment variable and ``tag``."""
    if len(items) <= limit:
        return items
    rnd = random.Random(f"{_seed()}:{tag}")
    return rnd.sample(list(items), limit)


def same_view(v: CategoryView, w: CategoryView) -> bool:
    return v.base is w.base and v.op == w.op and v.cop == w.cop


class StructureMaps:
    """A binary structure map family and a unit map, target-view oriented."""

    def __init__(self, pair: Callable[[Obj, Obj], Mor], unit: Mor):
        self._pair = pair
        self.unit = unit

    def pair(self, x: Obj, y: Obj) -> Mor:
        return self._pair(x, y)

    @staticmethod
    def from_table(pairs: Mapping[tuple[Obj, Obj], Mor], unit: Mor) -> "StructureMaps":
        table = dict(pairs)

        def pair(x: Obj, y: Obj) -> Mor:
            try:
                return table[(x, y)]
            except KeyError:
                raise MalformedTable(f"no structure-map entry for objects ({x!r}, {y!r})") from None

        return StructureMaps(pair, unit)


def _swapped(s: StructureMaps | None) -> StructureMaps | None:
    if s is None:
        return None
    return StructureMaps(lambda x, y: s.pair(y, x), s.unit)


class FunctorData:
    """A functor between views, with optional structure maps."""

    def __init__(
        self,
        name: str,
        source: FinCategory | CategoryView,
        target: FinCategory | CategoryView,
        obj_map: Callable[[Obj], Obj],
        mor_map: Callable[[Mor], Mor],
        monoidal: StructureMaps | None = None,
        comonoidal: StructureMaps | None = None,
    ):
        self.name = name
        self.source = as_view(source)
        self.target = as_view(target)
        self._obj_map = obj_map
        self._mor_map = mor_map
        self.monoidal = monoidal
        self.comonoidal = comonoidal

    def obj(self, x: Obj) -> Obj:
        return self._obj_map(x)

    def mor(self, f: Mor) -> Mor:
        return self._mor_map(f)

    def require_monoidal(self) -> StructureMaps:
        if self.monoidal is None:
            raise MissingStructure(f"functor {self.name} carries no monoidal structure")
        return self.monoidal

    def require_comonoidal(self) -> StructureMaps:
        if self.comonoidal is None:
            raise MissingStructure(f"functor {self.name} carries no comonoidal structure")
        return self.comonoidal


def identity_functor(c: FinCategory | CategoryView) -> FunctorData:
    v = as_view(c)
    ident = StructureMaps(lambda x, y: v.identity(v.tensor_obj(x, y)), v.identity(v.unit))
    return FunctorData(f"1[{v.name}]", v, v, lambda x: x, lambda f: f, ident, ident)


def op_functor(f: FunctorData) -> FunctorData:
    """The same assignments viewed between the arrow-reversed views.  A
    monoidal structure map, read in the reversed target, is a comonoidal
    one (and vice versa); its values are untouched."""
    return FunctorData(
        name=f"op({f.name})",
        source=f.source.flip(op=True),
        target=f.target.flip(op=True),
        obj_map=f.obj,
        mor_map=f.mor,
        monoidal=f.comonoidal,
        comonoidal=f.monoidal,
    )


def cop_functor(f: FunctorData) -> FunctorData:
    """The same assignments viewed between the tensor-reversed views.  The
    structure maps keep their flavor but index their arguments in the
    reversed order."""
    return FunctorData(
        name=f"cop({f.name})",
        source=f.source.flip(cop=True),
        target=f.target.flip(cop=True),
        obj_map=f.obj,
        mor_map=f.mor,
        monoidal=_swapped(f.monoidal),
        comonoidal=_swapped(f.comonoidal),
    )


def opcop_functor(f: FunctorData) -> FunctorData:
    return op_functor(cop_functor(f))


def compose_functors(outer: FunctorData, inner: FunctorData, name: str | None = None) -> FunctorData:
    """outer after inner; structure maps compose in the standard way and
    are present exactly when both factors carry them."""
    if not same_view(inner.target, outer.source):
        raise TypeMismatch(
            f"cannot compose {outer.name} after {inner.name}: "
            f"{inner.name} lands in {inner.target.name}, {outer.name} starts at {outer.source.name}"
        )
    w = outer.target
    monoidal = None
    if outer.monoidal is not None and inner.monoidal is not None:
        om, im = outer.monoidal, inner.monoidal
        monoidal = StructureMaps(
            lambda x, y: w.compose(outer.mor(im.pair(x, y)), om.pair(inner.obj(x), inner.obj(y))),
            w.compose(outer.mor(im.unit), om.unit),
        )
    comonoidal = None
    if outer.comonoidal is not None and inner.comonoidal is not None:
        oc, ic = outer.comonoidal, inner.comonoidal
        comonoidal = StructureMaps(
            lambda x, y: w.compose(oc.pair(inner.obj(x), inner.obj(y)), outer.mor(ic.pair(x, y))),
            w.compose(oc.unit, outer.mor(ic.unit)),
        )
    return FunctorData(
        name=name or f"{outer.name}.{inner.name}",
        source=inner.source,
        target=outer.target,
        obj_map=lambda x: outer.obj(inner.obj(x)),
        mor_map=lambda f: outer.mor(inner.mor(f)),
        monoidal=monoidal,
        comonoidal=comonoidal,
    )


def comonoidal_from_strong(f: FunctorData) -> StructureMaps:
    """Inverses of an invertible monoidal structure, memoized per index."""
    s = f.require_monoidal()
    w = f.target
    cache: dict[tuple[Obj, Obj], Mor] = {}

    def pair(x: Obj, y: Obj) -> Mor:
        key = (x, y)
        if key not in cache:
            inv = w.invert(s.pair(x, y))
            if inv is None:
                raise NotInvertible(
                    f"structure map of {f.name} at ({x!r}, {y!r}) has no two-sided inverse"
                )
            cache[key] = inv
        return cache[key]

    unit_inv = w.invert(s.unit)
    if unit_inv is None:
        raise NotInvertible(f"unit structure map of {f.name} has no two-sided inverse")
    return StructureMaps(pair, unit_inv)


class NatTransfData:
    """A transformation between two functors with equal source and target
    views.  ``flavor`` declares which structure-compatibility template
    applies: 'plain', 'monoidal', 'comonoidal', 'monoidal-comonoidal'
    (source functor monoidal, target comonoidal), or 'comonoidal-monoidal'.
    """

    FLAVORS = ("plain", "monoidal", "comonoidal", "monoidal-comonoidal", "comonoidal-monoidal")

    def __init__(
        self,
        name: str,
        source: FunctorData,
        target: FunctorData,
        component: Callable[[Obj], Mor],
        flavor: str = "plain",
    ):
        if flavor not in self.FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        if not same_view(source.source, target.source) or not same_view(source.target, target.target):
            raise TypeMismatch(
                f"transformation {name}: functors {source.name} and {target.name} "
                "do not share source and target views"
            )
        self.name = name
        self.source = source
        self.target = target
        self._component = component
        self.flavor = flavor

    def component(self, x: Obj) -> Mor:
        return self._component(x)


# ---------------------------------------------------------------------------
# checks


def _composable_pairs(view: CategoryView, scope: Sequence[Mor]) -> list[tuple[Mor, Mor]]:
    by_dom: dict[Obj, list[Mor]] = {}
    for m in scope:
        by_dom.setdefault(view.dom(m), []).append(m)
    out = []
    for f in scope:
        for g in by_dom.get(view.cod(f), ()):
            out.append((g, f))
    return out


def check_functoriality(f: FunctorData, rb: ReportBuilder) -> bool:
    """Endpoint preservation, identity preservation, composition
    preservation, quantified over the source's declared morphism scope."""
    v, w = f.source, f.target
    ok = True
    scope = list(v.mor_scope())
    for u in scope:
        try:
            img = f.mor(u)
            holds = w.dom(img) == f.obj(v.dom(u)) and w.cod(img) == f.obj(v.cod(u))
            note = (
                f"image endpoints {w.obj_label(w.dom(img))}->{w.obj_label(w.cod(img))} "
                f"differ from mapped endpoints"
            )
        except (MalformedTable, TypeMismatch) as exc:
            holds, note = False, f"{type(exc).__name__}: {exc}"
        ok &= rb.entry("functoriality:dom-cod", (v.mor_label(u),), holds, note=note)
    for x in v.objects:
        ok &= rb.check(
            "functoriality:id", (v.obj_label(x),),
            FMap(f, Id(x)), Id(f.obj(x)), EMPTY_ENV, view=w,
        )
    pairs = deterministic_sample(_composable_pairs(v, scope), _PAIR_CAP, f"functoriality:{f.name}")
    for g, u in pairs:
        ok &= rb.check(
            "functoriality:compose",
            (v.mor_label(g), v.mor_label(u)),
            FMap(f, Named(g, v.mor_label(g)) * Named(u, v.mor_label(u))),
            FMap(f, Named(g, v.mor_label(g))) * FMap(f, Named(u, v.mor_label(u))),
            EMPTY_ENV,
            view=w,
        )
    return ok


def _check_lax(f: FunctorData, rb: ReportBuilder, ids: tuple[str, str, str]) -> bool:
    """The one lax-structure template; reversed variants are produced by
    feeding in a flipped functor, never by mirrored code.  Both unit laws
    live under one equation id, distinguished by their instantiation tag."""
    id0, id2, idnat = ids
    v, w = f.source, f.target
    s = f.require_monoidal()
    i = v.unit
    ok = True
    for x in v.objects:
        fx = Id(f.obj(x))
        ok &= rb.check(
            id0, (v.obj_label(x), "unit-left"),
            lambda x=x, fx=fx: comp(Named(s.pair(i, x), "u2"), tens(Named(s.unit, "u0"), fx)),
            fx, EMPTY_ENV, view=w,
        )
        ok &= rb.check(
            id0, (v.obj_label(x), "unit-right"),
            lambda x=x, fx=fx: comp(Named(s.pair(x, i), "u2"), tens(fx, Named(s.unit, "u0"))),
            fx, EMPTY_ENV, view=w,
        )
    for x in v.objects:
        for y in v.objects:
            for z in v.objects:
                xy = v.tensor_obj(x, y)
                yz = v.tensor_obj(y, z)
                ok &= rb.check(
                    id2,
                    (v.obj_label(x), v.obj_label(y), v.obj_label(z)),
                    lambda x=x, y=y, z=z, xy=xy: comp(
                        Named(s.pair(xy, z), "u2"), tens(Named(s.pair(x, y), "u2"), Id(f.obj(z)))
                    ),
                    lambda x=x, y=y, z=z, yz=yz: comp(
                        Named(s.pair(x, yz), "u2"), tens(Id(f.obj(x)), Named(s.pair(y, z), "u2"))
                    ),
                    EMPTY_ENV,
                    view=w,
                )
    scope = list(v.mor_scope())
    pairs = deterministic_sample(
        [(u1, u2) for u1 in scope for u2 in scope], _PAIR_CAP, f"lax-nat:{f.name}"
    )
    for u1, u2 in pairs:
        a, b = v.dom(u1), v.cod(u1)
        c, d = v.dom(u2), v.cod(u2)
        n1 = Named(u1, v.mor_label(u1))
        n2 = Named(u2, v.mor_label(u2))
        ok &= rb.check(
            idnat,
            (v.mor_label(u1), v.mor_label(u2)),
            lambda b=b, d=d, n1=n1, n2=n2: comp(
                Named(s.pair(b, d), "u2"), tens(FMap(f, n1), FMap(f, n2))
            ),
            lambda a=a, c=c, n1=n1, n2=n2: comp(FMap(f, tens(n1, n2)), Named(s.pair(a, c), "u2")),
            EMPTY_ENV,
            view=w,
        )
    return ok


def check_monoidal(f: FunctorData, rb: ReportBuilder) -> bool:
    """Unit laws, associativity, and naturality of a monoidal structure."""
    return _check_lax(f, rb, ("lax-functor0", "lax-functor2", "nat(f2)"))


def check_comonoidal(f: FunctorData, rb: ReportBuilder) -> bool:
    """The comonoidal laws: the lax template applied to the arrow-reversed
    functor."""
    f.require_comonoidal()
    return _check_lax(op_functor(f), rb, ("colax_functor0", "colax_functor2", "nat(F2)"))


def check_frobenius(f: FunctorData, rb: ReportBuilder) -> bool:
    """The two interaction laws between a monoidal and a comonoidal
    structure on the same functor."""
    v, w = f.source, f.target
    m = f.require_monoidal()
    c = f.require_comonoidal()
    ok = True
    for x in v.objects:
        for y in v.objects:
            for z in v.objects:
                xy = v.tensor_obj(x, y)
                yz = v.tensor_obj(y, z)
                inst = (v.obj_label(x), v.obj_label(y), v.obj_label(z))
                ok &= rb.check(
                    "eq1:Frob", inst,
                    lambda x=x, y=y, z=z: comp(
                        tens(Id(f.obj(x)), Named(m.pair(y, z), "m2")),
                        tens(Named(c.pair(x, y), "c2"), Id(f.obj(z))),
                    ),
                    lambda x=x, yz=yz, xy=xy, z=z: comp(
                        Named(c.pair(x, yz), "c2"), Named(m.pair(xy, z), "m2")
                    ),
                    EMPTY_ENV,
                    view=w,
                )
                ok &= rb.check(
                    "eq2:Frob", inst,
                    lambda x=x, y=y, z=z: comp(
                        tens(Named(m.pair(x, y), "m2"), Id(f.obj(z))),
                        tens(Id(f.obj(x)), Named(c.pair(y, z), "c2")),
                    ),
                    lambda x=x, yz=yz, xy=xy, z=z: comp(
                        Named(c.pair(xy, z), "c2"), Named(m.pair(x, yz), "m2")
                    ),
                    EMPTY_ENV,
                    view=w,
                )
    return ok


_FLAVOR_UNDER_OP = {
    "plain": "plain",
    "monoidal": "monoidal",
    "comonoidal": "comonoidal",
    "monoidal-comonoidal": "comonoidal-monoidal",
    "comonoidal-monoidal": "monoidal-comonoidal",
}

# Default equation ids per *declared* flavor (before any view normalization).
_FLAVOR_EQ_ID = {
    "monoidal": "lax-nat",
    "comonoidal": "colax-nat",
    "monoidal-comonoidal": "lax-colax",
    "comonoidal-monoidal": "colax-lax",
}


def check_nat_flavor(
    t: NatTransfData,
    rb: ReportBuilder,
    *,
    flavor_eq_id: str | None = None,
    nat_eq_id: str | None = None,
) -> bool:
    """Naturality plus the structure-compatibility square of ``t.flavor``.

    Components are stored base-oriented; when the common target view has its
    arrows reversed, the roles of the two functors swap (and the mixed
    flavors trade places) so that a single target-view template per flavor
    covers every orientation.  The reported equation id always reflects the
    declared flavor, not the normalized one.
    """
    flavor_eq_id = flavor_eq_id or _FLAVOR_EQ_ID.get(t.flavor, f"flavor({t.name})")
    nat_eq_id = nat_eq_id or f"nat({t.name})"
    f, g, flavor = t.source, t.target, t.flavor
    w = f.target
    if w.op:
        f, g = g, f
        flavor = _FLAVOR_UNDER_OP[flavor]
    v = f.source
    ok = True

    def t_at(x: Obj) -> MorphExpr:
        return NatComponent(t, x)

    # naturality (all flavors)
    scope = deterministic_sample(list(v.mor_scope()), _PAIR_CAP, f"nat:{t.name}")
    for u in scope:
        a, b = v.dom(u), v.cod(u)
        n = Named(u, v.mor_label(u))
        ok &= rb.check(
            nat_eq_id, (v.mor_label(u),),
            comp(t_at(b), FMap(f, n)), comp(FMap(g, n), t_at(a)), EMPTY_ENV, view=w,
        )
    if flavor == "plain":
        return ok

    i = v.unit
    if flavor == "monoidal":
        fm, gm = f.require_monoidal(), g.require_monoidal()
        ok &= rb.check(
            flavor_eq_id, ("unit",),
            lambda: comp(t_at(i), Named(fm.unit, "f0")),
            lambda: Named(gm.unit, "g0"),
            EMPTY_ENV, view=w,
        )
        for x in v.objects:
            for y in v.objects:
                ok &= rb.check(
                    flavor_eq_id, (v.obj_label(x), v.obj_label(y)),
                    lambda x=x, y=y: comp(t_at(v.tensor_obj(x, y)), Named(fm.pair(x, y), "f2")),
                    lambda x=x, y=y: comp(Named(gm.pair(x, y), "g2"), tens(t_at(x), t_at(y))),
                    EMPTY_ENV,
                    view=w,
                )
    elif flavor == "comonoidal":
        fc, gc = f.require_comonoidal(), g.require_comonoidal()
        ok &= rb.check(
            flavor_eq_id, ("unit",),
            lambda: comp(Named(gc.unit, "G0"), t_at(i)),
            lambda: Named(fc.unit, "F0"),
            EMPTY_ENV, view=w,
        )
        for x in v.objects:
            for y in v.objects:
                ok &= rb.check(
                    flavor_eq_id, (v.obj_label(x), v.obj_label(y)),
                    lambda x=x, y=y: comp(Named(gc.pair(x, y), "G2"), t_at(v.tensor_obj(x, y))),
                    lambda x=x, y=y: comp(tens(t_at(x), t_at(y)), Named(fc.pair(x, y), "F2")),
                    EMPTY_ENV,
                    view=w,
                )
    elif flavor == "monoidal-comonoidal":
        fm, gc = f.require_monoidal(), g.require_comonoidal()
        ok &= rb.check(
            flavor_eq_id, ("unit",),
            lambda: comp(Named(gc.unit, "G0"), t_at(i), Named(fm.unit, "f0")),
            Id(w.unit),
            EMPTY_ENV,
            view=w,
        )
        for x in v.objects:
            for y in v.objects:
                ok &= rb.check(
                    flavor_eq_id, (v.obj_label(x), v.obj_label(y)),
                    lambda x=x, y=y: comp(
                        Named(gc.pair(x, y), "G2"), t_at(v.tensor_obj(x, y)), Named(fm.pair(x, y), "f2")
                    ),
                    lambda x=x, y=y: tens(t_at(x), t_at(y)),
                    EMPTY_ENV,
                    view=w,
                )
    elif flavor == "comonoidal-monoidal":
        fc, gm = f.require_comonoidal(), g.require_monoidal()
        ok &= rb.check(
            flavor_eq_id, ("unit",),
            lambda: t_at(i),
            lambda: comp(Named(gm.unit, "g0"), Named(fc.unit, "F0")),
            EMPTY_ENV,
            view=w,
        )
        for x in v.objects:
            for y in v.objects:
                ok &= rb.check(
                    flavor_eq_id, (v.obj_label(x), v.obj_label(y)),
                    lambda x=x, y=y: t_at(v.tensor_obj(x, y)),
                    lambda x=x, y=y: comp(
                        Named(gm.pair(x, y), "g2"), tens(t_at(x), t_at(y)), Named(fc.pair(x, y), "F2")
                    ),
                    EMPTY_ENV,
                    view=w,
                )
    return ok


def check_components_invertible(t: NatTransfData, rb: ReportBuilder, eq_id: str) -> bool:
    w = t.source.target
    v = t.source.source
    ok = True
    for x in v.objects:
        try:
            holds = w.invert(t.component(x)) is not None
            note = f"component at {v.obj_label(x)} has no two-sided inverse"
        except (MalformedTable, TypeMismatch) as exc:
            holds, note = False, f"{type(exc).__name__}: {exc}"
        ok &= rb.entry(eq_id, (v.obj_label(x),), holds, note=note)
    return ok
