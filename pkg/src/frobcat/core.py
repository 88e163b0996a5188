"""Finite strict monoidal categories and the views that reverse them.

A :class:`FinCategory` gives concrete, finite answers: its objects, the
morphisms of each hom-set, composition, identities, and a strict tensor on
objects and morphisms.  Everything downstream (duality search, functor
checking, coherence reports) evaluates equations by asking these methods
for actual values and comparing them.

A :class:`CategoryView` wraps a category with two independent boolean
flags:

* ``op``  — reverse arrows: composition order and dom/cod swap;
* ``cop`` — reverse the tensor: arguments of the tensor (on objects and
  morphisms) swap, while arrow directions are untouched.

All checker code is written once against views; the reversed and
tensor-reversed variants of every law are obtained by flipping flags, not
by writing mirrored code.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from typing import Any, Hashable, Iterable, Sequence

from .errors import MalformedTable, ScopeTooLarge, TypeMismatch

Obj = Hashable
Mor = Hashable


class FinCategory(ABC):
    """A finite strict monoidal category, presented operationally.

    ``objects`` is the declared quantification scope: the objects over which
    "for all objects" checks range.  ``hom``/``tensor_obj`` may be defined
    more widely (a backend can compute hom-sets for objects outside the
    declared scope); checks never quantify outside ``objects`` but may pass
    through larger intermediate objects created by tensoring.
    """

    name: str = "category"

    # -- objects ------------------------------------------------------------
    @property
    @abstractmethod
    def objects(self) -> Sequence[Obj]: ...

    @property
    @abstractmethod
    def unit(self) -> Obj: ...

    def has_object(self, x: Obj) -> bool:
        return x in self.objects

    # -- morphisms ----------------------------------------------------------
    @abstractmethod
    def hom(self, a: Obj, b: Obj) -> Sequence[Mor]: ...

    @abstractmethod
    def identity(self, x: Obj) -> Mor: ...

    @abstractmethod
    def compose(self, g: Mor, f: Mor) -> Mor:
        """g after f.  Raises TypeMismatch unless cod(f) == dom(g)."""

    @abstractmethod
    def dom(self, f: Mor) -> Obj: ...

    @abstractmethod
    def cod(self, f: Mor) -> Obj: ...

    # -- tensor -------------------------------------------------------------
    @abstractmethod
    def tensor_obj(self, x: Obj, y: Obj) -> Obj: ...

    @abstractmethod
    def tensor_mor(self, f: Mor, g: Mor) -> Mor: ...

    # -- equality and labels --------------------------------------------------
    def mor_eq(self, f: Mor, g: Mor) -> bool:
        """Equality of morphism values.  Default: ``==`` on the backend's
        morphism representation; backends with a normal form override."""
        return f == g

    def mor_label(self, f: Mor) -> str:
        return str(f)

    def obj_label(self, x: Obj) -> str:
        return str(x)

    # -- enumeration scope ----------------------------------------------------
    def mor_scope(self) -> Iterable[Mor]:
        """The morphisms over which "for all morphisms" checks range.  For
        exhaustive backends this is every morphism between declared objects;
        for generator-based backends it is a stated generating family."""
        for a in self.objects:
            for b in self.objects:
                yield from self.hom(a, b)

    def scope_label(self) -> str:
        """'exhaustive' if mor_scope() is all morphisms between declared
        objects, 'generators' if it is a generating family."""
        return "exhaustive"

    # -- optional inversion -----------------------------------------------------
    def invert(self, f: Mor) -> Mor | None:
        """A two-sided inverse of f, or None.  Default: search cod->dom."""
        a, b = self.dom(f), self.cod(f)
        ia, ib = self.identity(a), self.identity(b)
        for g in self.hom(b, a):
            if self.mor_eq(self.compose(g, f), ia) and self.mor_eq(self.compose(f, g), ib):
                return g
        return None

    def view(self) -> "CategoryView":
        return CategoryView(self)


class TableCategory(FinCategory):
    """A category given by explicit finite tables.

    Morphisms are string ids.  All tables are total over the declared data;
    a lookup of an id or pair the tables don't know raises
    :class:`MalformedTable` (the diagnosable error for bad input files).
    """

    def __init__(
        self,
        name: str,
        objects: Sequence[Obj],
        unit: Obj,
        homs: dict[tuple[Obj, Obj], tuple[str, ...]],
        identities: dict[Obj, str],
        compose_table: dict[tuple[str, str], str],
        tensor_obj_table: dict[tuple[Obj, Obj], Obj],
        tensor_mor_table: dict[tuple[str, str], str],
    ):
        self.name = name
        self._objects = tuple(objects)
        self._unit = unit
        self._homs = dict(homs)
        self._identities = dict(identities)
        self._compose = dict(compose_table)
        self._tensor_obj = dict(tensor_obj_table)
        self._tensor_mor = dict(tensor_mor_table)
        self._endpoints: dict[str, tuple[Obj, Obj]] = {}
        for (a, b), ms in self._homs.items():
            for m in ms:
                if m in self._endpoints:
                    raise MalformedTable(f"morphism id {m!r} appears in two hom-sets")
                self._endpoints[m] = (a, b)
        for x, i in self._identities.items():
            if i not in self._endpoints:
                raise MalformedTable(f"identity id {i!r} of object {x!r} is not a listed morphism")
            if self._endpoints[i] != (x, x):
                raise MalformedTable(f"identity id {i!r} of object {x!r} is not in hom({x!r},{x!r})")
        for x in self._objects:
            if x not in self._identities:
                raise MalformedTable(f"object {x!r} has no identity entry")

    @property
    def objects(self) -> Sequence[Obj]:
        return self._objects

    @property
    def unit(self) -> Obj:
        return self._unit

    def hom(self, a: Obj, b: Obj) -> Sequence[Mor]:
        return self._homs.get((a, b), ())

    def identity(self, x: Obj) -> Mor:
        try:
            return self._identities[x]
        except KeyError:
            raise MalformedTable(f"no identity recorded for object {x!r}") from None

    def _require_known(self, f: Mor) -> tuple[Obj, Obj]:
        try:
            return self._endpoints[f]
        except KeyError:
            raise MalformedTable(f"unknown morphism id {f!r}") from None

    def dom(self, f: Mor) -> Obj:
        return self._require_known(f)[0]

    def cod(self, f: Mor) -> Obj:
        return self._require_known(f)[1]

    def compose(self, g: Mor, f: Mor) -> Mor:
        fa, fb = self._require_known(f)
        ga, gb = self._require_known(g)
        if fb != ga:
            raise TypeMismatch(
                f"cannot compose {g!r}: {ga!r}->{gb!r} after {f!r}: {fa!r}->{fb!r}"
            )
        try:
            return self._compose[(g, f)]
        except KeyError:
            raise MalformedTable(f"composition table has no entry for ({g!r}, {f!r})") from None

    def tensor_obj(self, x: Obj, y: Obj) -> Obj:
        try:
            return self._tensor_obj[(x, y)]
        except KeyError:
            raise MalformedTable(f"object tensor table has no entry for ({x!r}, {y!r})") from None

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        self._require_known(f)
        self._require_known(g)
        try:
            return self._tensor_mor[(f, g)]
        except KeyError:
            raise MalformedTable(f"morphism tensor table has no entry for ({f!r}, {g!r})") from None


@dataclass(frozen=True)
class CategoryView:
    """A category with its arrows and/or its tensor possibly reversed.

    ``op`` reverses arrows (dom/cod swap; compose order flips; hom(a,b)
    becomes hom(b,a) of the base).  ``cop`` reverses the tensor's arguments
    on objects and morphisms and nothing else.  The flags compose by XOR:
    flipping twice restores the base behaviour.
    """

    base: FinCategory
    op: bool = False
    cop: bool = False
    objects_limit: int | None = None

    # -- flag algebra ------------------------------------------------------
    def flip(self, op: bool = False, cop: bool = False) -> "CategoryView":
        return replace(self, op=self.op ^ op, cop=self.cop ^ cop)

    def with_limit(self, limit: int | None) -> "CategoryView":
        return replace(self, objects_limit=limit)

    @property
    def name(self) -> str:
        tags = ("op" if self.op else "") + ("cop" if self.cop else "")
        return f"{self.base.name}^{tags}" if tags else self.base.name

    # -- objects -----------------------------------------------------------
    @property
    def objects(self) -> Sequence[Obj]:
        objs = self.base.objects
        if self.objects_limit is not None:
            objs = objs[: self.objects_limit]
        return objs

    @property
    def unit(self) -> Obj:
        return self.base.unit

    def has_object(self, x: Obj) -> bool:
        return x in self.objects

    # -- morphisms -----------------------------------------------------------
    def hom(self, a: Obj, b: Obj) -> Sequence[Mor]:
        return self.base.hom(b, a) if self.op else self.base.hom(a, b)

    def identity(self, x: Obj) -> Mor:
        return self.base.identity(x)

    def compose(self, g: Mor, f: Mor) -> Mor:
        if self.op:
            return self.base.compose(f, g)
        return self.base.compose(g, f)

    def dom(self, f: Mor) -> Obj:
        return self.base.cod(f) if self.op else self.base.dom(f)

    def cod(self, f: Mor) -> Obj:
        return self.base.dom(f) if self.op else self.base.cod(f)

    # -- tensor ---------------------------------------------------------------
    def tensor_obj(self, x: Obj, y: Obj) -> Obj:
        return self.base.tensor_obj(y, x) if self.cop else self.base.tensor_obj(x, y)

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        return self.base.tensor_mor(g, f) if self.cop else self.base.tensor_mor(f, g)

    # -- passthrough -------------------------------------------------------------
    def mor_eq(self, f: Mor, g: Mor) -> bool:
        return self.base.mor_eq(f, g)

    def mor_label(self, f: Mor) -> str:
        return self.base.mor_label(f)

    def obj_label(self, x: Obj) -> str:
        return self.base.obj_label(x)

    def mor_scope(self) -> Iterable[Mor]:
        return self.base.mor_scope()

    def scope_label(self) -> str:
        return self.base.scope_label()

    def invert(self, f: Mor) -> Mor | None:
        # A two-sided inverse is direction-symmetric; op/cop don't change it.
        return self.base.invert(f)


def as_view(c: FinCategory | CategoryView) -> CategoryView:
    return c if isinstance(c, CategoryView) else c.view()


def _strided(items: list, cap: int) -> list:
    """Deterministic truncation: every k-th element when over the cap."""
    if len(items) <= cap:
        return items
    step = -(-len(items) // cap)
    return items[::step]


def validate_category(c: "FinCategory | CategoryView", *, cap: int = 50000):
    """Check the strict-monoidal axioms on the declared scope and report
    every violation: endpoint coherence and associativity of composition,
    neutrality of identities, strict associativity/unitality of the object
    tensor, and functoriality of the morphism tensor (identities,
    endpoints, interchange).  Structural table errors become failing
    entries naming the lookup that went wrong."""
    from .report import ReportBuilder

    v = as_view(c)
    rb = ReportBuilder(f"validate {v.name}", v.scope_label())
    scope = list(v.mor_scope())

    def entry(eq_id: str, inst: tuple, thunk) -> None:
        try:
            holds, note = thunk()
        except (MalformedTable, TypeMismatch) as exc:
            holds, note = False, f"{type(exc).__name__}: {exc}"
        rb.entry(eq_id, inst, holds, note=note)

    # identities are neutral
    for f in scope:
        a, b = v.dom(f), v.cod(f)

        def left(f=f, b=b):
            got = v.compose(v.identity(b), f)
            return v.mor_eq(got, f), f"post-composing the identity gives {v.mor_label(got)}"

        def right(f=f, a=a):
            got = v.compose(f, v.identity(a))
            return v.mor_eq(got, f), f"pre-composing the identity gives {v.mor_label(got)}"

        entry("identity-neutrality", (v.obj_label(b), v.mor_label(f), "left"), left)
        entry("identity-neutrality", (v.obj_label(a), v.mor_label(f), "right"), right)

    # composition: endpoints and associativity
    by_dom: dict[Obj, list[Mor]] = {}
    for m in scope:
        by_dom.setdefault(v.dom(m), []).append(m)
    pairs = [(g, f) for f in scope for g in by_dom.get(v.cod(f), ())]
    for g, f in _strided(pairs, cap):

        def endpoints(g=g, f=f):
            gf = v.compose(g, f)
            return (
                v.dom(gf) == v.dom(f) and v.cod(gf) == v.cod(g),
                f"composite {v.mor_label(gf)} has endpoints "
                f"{v.obj_label(v.dom(gf))}->{v.obj_label(v.cod(gf))}",
            )

        entry("compose:endpoints", (v.mor_label(g), v.mor_label(f)), endpoints)
    triples = [(h, g, f) for (g, f) in pairs for h in by_dom.get(v.cod(g), ())]
    for h, g, f in _strided(triples, cap):

        def assoc(h=h, g=g, f=f):
            lhs = v.compose(h, v.compose(g, f))
            rhs = v.compose(v.compose(h, g), f)
            return v.mor_eq(lhs, rhs), f"{v.mor_label(lhs)} differs from {v.mor_label(rhs)}"

        entry(
            "compose:associativity",
            (v.mor_label(h), v.mor_label(g), v.mor_label(f)),
            assoc,
        )

    # strict tensor on objects
    objs = list(v.objects)
    for x in objs:

        def unit_law(x=x):
            lu, ru = v.tensor_obj(v.unit, x), v.tensor_obj(x, v.unit)
            return (
                lu == x and ru == x,
                f"unit tensors give {v.obj_label(lu)} and {v.obj_label(ru)}",
            )

        entry("tensor:unit-objects", (v.obj_label(x),), unit_law)
    obj_triples = [(x, y, z) for x in objs for y in objs for z in objs]
    for x, y, z in _strided(obj_triples, cap):

        def tassoc(x=x, y=y, z=z):
            lhs = v.tensor_obj(v.tensor_obj(x, y), z)
            rhs = v.tensor_obj(x, v.tensor_obj(y, z))
            return lhs == rhs, f"{v.obj_label(lhs)} differs from {v.obj_label(rhs)}"

        entry(
            "tensor:associative-objects",
            (v.obj_label(x), v.obj_label(y), v.obj_label(z)),
            tassoc,
        )

    # morphism tensor: identities, endpoints, interchange
    obj_pairs = [(x, y) for x in objs for y in objs]
    for x, y in _strided(obj_pairs, cap):

        def tid(x=x, y=y):
            got = v.tensor_mor(v.identity(x), v.identity(y))
            want = v.identity(v.tensor_obj(x, y))
            return v.mor_eq(got, want), f"tensor of identities is {v.mor_label(got)}"

        entry("tensor:identities", (v.obj_label(x), v.obj_label(y)), tid)
    mor_pairs = [(f, g) for f in scope for g in scope]
    for f, g in _strided(mor_pairs, cap):

        def tend(f=f, g=g):
            fg = v.tensor_mor(f, g)
            want = (
                v.tensor_obj(v.dom(f), v.dom(g)),
                v.tensor_obj(v.cod(f), v.cod(g)),
            )
            return (
                (v.dom(fg), v.cod(fg)) == want,
                f"tensor {v.mor_label(fg)} has endpoints "
                f"{v.obj_label(v.dom(fg))}->{v.obj_label(v.cod(fg))}",
            )

        entry("tensor:endpoints", (v.mor_label(f), v.mor_label(g)), tend)
    pair_pairs = [(gf1, gf2) for gf1 in pairs for gf2 in pairs]
    for (g1, f1), (g2, f2) in _strided(pair_pairs, cap):

        def interchange(g1=g1, f1=f1, g2=g2, f2=f2):
            lhs = v.compose(v.tensor_mor(g1, g2), v.tensor_mor(f1, f2))
            rhs = v.tensor_mor(v.compose(g1, f1), v.compose(g2, f2))
            return v.mor_eq(lhs, rhs), f"{v.mor_label(lhs)} differs from {v.mor_label(rhs)}"

        entry(
            "tensor:interchange",
            (v.mor_label(g1), v.mor_label(f1), v.mor_label(g2), v.mor_label(f2)),
            interchange,
        )
    return rb.build()


def require_same_base(v: CategoryView, w: CategoryView, what: str) -> None:
    if v.base is not w.base:
        raise TypeMismatch(f"{what}: views over different categories ({v.name} vs {w.name})")
