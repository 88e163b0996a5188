"""Chosen duals, the duality functors they induce, and the double-dual
adjoint equivalence.

Orientation conventions, fixed once here and reused everywhere:

* A *left* assignment in a view V gives, for each object X, a dual SX with
  unit ``d_X: 1 -> X (x) SX`` and counit ``e_X: SX (x) X -> 1``, plus the
  comparison maps ``s2(X, Y): SX (x) SY -> S(Y (x) X)`` and
  ``s0: 1 -> S1``.
* A *right* assignment gives S'X with unit ``d'_X: 1 -> S'X (x) X`` and
  counit ``e'_X: X (x) S'X -> 1``, and ``s'2(X, Y): S'X (x) S'Y -> S'(Y (x) X)``,
  ``s'0: 1 -> S'1``.
* A right assignment read in the tensor-reversed view is exactly a left
  one (and vice versa), so every right-side search, snake check, s2-style
  check, and transpose is the left code path run in the flipped view —
  right-side logic is never written twice.

All object-indexed data are callables so checks can reach tensor objects
outside the declared scope; table-backed callables raise
:class:`MalformedTable` on objects they do not cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .core import CategoryView, FinCategory, Mor, Obj, as_view
from .errors import (
    CoherenceFailure,
    HintInvalid,
    MalformedTable,
    MissingStructure,
    NotFound,
    NotInvertible,
    TypeMismatch,
)
from .expr import EMPTY_ENV, Id, Named, comp, eval_expr, tens
from .report import Report, ReportBuilder
from .structures import (
    FunctorData,
    NatTransfData,
    StructureMaps,
    check_components_invertible,
    check_functoriality,
    check_nat_flavor,
    compose_functors,
    deterministic_sample,
    identity_functor,
    opcop_functor,
)

_SCOPE_CAP = 4096


def _memo1(fn: Callable) -> Callable:
    cache: dict = {}

    def wrapped(x):
        if x not in cache:
            cache[x] = fn(x)
        return cache[x]

    return wrapped


class DualityAssignment:
    """A chosen dual for every object of a view, on one side."""

    def __init__(
        self,
        side: str,
        view: CategoryView,
        dual_obj: Callable[[Obj], Obj],
        unit_mor: Callable[[Obj], Mor],
        counit_mor: Callable[[Obj], Mor],
        s2: Callable[[Obj, Obj], Mor] | None = None,
        s0: Mor | None = None,
    ):
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        self.side = side
        self.view = as_view(view)
        self._dual = dual_obj
        self._unit = unit_mor
        self._counit = counit_mor
        self._s2 = s2
        self._s0 = s0

    # -- data access ---------------------------------------------------------
    def dual(self, x: Obj) -> Obj:
        return self._dual(x)

    def unit(self, x: Obj) -> Mor:
        return self._unit(x)

    def counit(self, x: Obj) -> Mor:
        return self._counit(x)

    @property
    def has_s2(self) -> bool:
        return self._s2 is not None

    def s2_at(self, x: Obj, y: Obj) -> Mor:
        if self._s2 is None:
            raise MissingStructure(f"{self.side} assignment carries no binary comparison map")
        return self._s2(x, y)

    @property
    def s0_mor(self) -> Mor:
        if self._s0 is None:
            raise MissingStructure(f"{self.side} assignment carries no unit comparison map")
        return self._s0

    def with_s2(self, s2: Callable[[Obj, Obj], Mor], s0: Mor) -> "DualityAssignment":
        return DualityAssignment(self.side, self.view, self._dual, self._unit, self._counit, s2, s0)

    @staticmethod
    def from_table(
        side: str,
        view: CategoryView | FinCategory,
        table: Mapping[Obj, tuple[Obj, Mor, Mor]],
        s2: Callable[[Obj, Obj], Mor] | None = None,
        s0: Mor | None = None,
    ) -> "DualityAssignment":
        data = dict(table)

        def get(x: Obj, i: int):
            try:
                return data[x][i]
            except KeyError:
                raise MalformedTable(f"no {side} dual assigned to object {x!r}") from None

        return DualityAssignment(
            side,
            as_view(view),
            lambda x: get(x, 0),
            lambda x: get(x, 1),
            lambda x: get(x, 2),
            s2,
            s0,
        )

    # -- view transport --------------------------------------------------------
    def transported(self, op: bool = False, cop: bool = False) -> "DualityAssignment":
        """The same concrete data, read as a duality assignment of the
        flipped view.  Reversing arrows (op) swaps unit and counit values
        and inverts the comparison maps; reversing the tensor (cop) swaps
        the comparison map's arguments; either flag alone flips the side."""
        if not op and not cop:
            return self
        side = self.side
        if op ^ cop:
            side = "right" if side == "left" else "left"
        new_view = self.view.flip(op=op, cop=cop)
        unit, counit = self._unit, self._counit
        if op:
            unit, counit = counit, unit
        s2, s0 = self._s2, self._s0
        if s2 is not None:
            old_s2 = s2
            if op and cop:
                s2 = _memo_pair(lambda x, y: _invert_or_raise(self.view, old_s2(y, x)))
            elif op:
                s2 = _memo_pair(lambda x, y: _invert_or_raise(self.view, old_s2(x, y)))
            else:  # cop only
                s2 = lambda x, y: old_s2(y, x)
        if s0 is not None and op:
            s0 = _invert_or_raise(self.view, s0)
        return DualityAssignment(side, new_view, self._dual, unit, counit, s2, s0)

    def as_left(self) -> "DualityAssignment":
        """Left-shaped data: self when already left, else the transport of
        a right assignment into the tensor-reversed view."""
        return self if self.side == "left" else self.transported(cop=True)


def _memo_pair(fn: Callable[[Obj, Obj], Mor]) -> Callable[[Obj, Obj], Mor]:
    cache: dict = {}

    def wrapped(x, y):
        if (x, y) not in cache:
            cache[(x, y)] = fn(x, y)
        return cache[(x, y)]

    return wrapped


def _invert_or_raise(view: CategoryView, f: Mor) -> Mor:
    inv = view.invert(f)
    if inv is None:
        raise NotInvertible(f"{view.mor_label(f)} has no two-sided inverse")
    return inv


# ---------------------------------------------------------------------------
# snake equations and dual search


def _snakes_hold(v: CategoryView, x: Obj, sx: Obj, d: Mor, e: Mor) -> tuple[bool, bool]:
    """Both left-duality triangles for candidate (sx, d, e) at x, in v.
    The endpoints of d and e are checked first: on backends whose morphisms
    carry only dimensions, a wrong-typed candidate can otherwise make the
    composites degenerate to identities and pass vacuously."""
    xsx, sxx = v.tensor_obj(x, sx), v.tensor_obj(sx, x)
    if (v.dom(d), v.cod(d)) != (v.unit, xsx):
        raise TypeMismatch(
            f"duality unit for {v.obj_label(x)} must be "
            f"{v.obj_label(v.unit)} -> {v.obj_label(xsx)}, got "
            f"{v.obj_label(v.dom(d))} -> {v.obj_label(v.cod(d))}"
        )
    if (v.dom(e), v.cod(e)) != (sxx, v.unit):
        raise TypeMismatch(
            f"duality counit for {v.obj_label(x)} must be "
            f"{v.obj_label(sxx)} -> {v.obj_label(v.unit)}, got "
            f"{v.obj_label(v.dom(e))} -> {v.obj_label(v.cod(e))}"
        )
    ix, isx = v.identity(x), v.identity(sx)
    first = v.mor_eq(v.compose(v.tensor_mor(ix, e), v.tensor_mor(d, ix)), ix)
    second = v.mor_eq(v.compose(v.tensor_mor(e, isx), v.tensor_mor(isx, d)), isx)
    return first, second


def find_left_dual(
    c: FinCategory | CategoryView,
    x: Obj,
    hint: tuple[Obj, Mor, Mor] | None = None,
) -> tuple[Obj, Mor, Mor]:
    """The first (dual, unit, counit) in canonical order passing both snake
    equations; a hint is verified and, if valid, returned directly."""
    v = as_view(c)
    if hint is not None:
        sx, d, e = hint
        try:
            first, second = _snakes_hold(v, x, sx, d, e)
        except TypeMismatch as exc:
            raise HintInvalid(
                f"hinted dual data for {v.obj_label(x)} is ill-typed: {exc}"
            ) from None
        if not (first and second):
            which = []
            if not first:
                which.append("the triangle on the object")
            if not second:
                which.append("the triangle on the dual")
            raise HintInvalid(
                f"hinted dual {v.obj_label(sx)} for {v.obj_label(x)} fails "
                + " and ".join(which)
            )
        return hint
    for sx in v.objects:
        try:
            ds = list(v.hom(v.unit, v.tensor_obj(x, sx)))
            es = list(v.hom(v.tensor_obj(sx, x), v.unit))
        except MalformedTable:
            continue
        for d in ds:
            for e in es:
                first, second = _snakes_hold(v, x, sx, d, e)
                if first and second:
                    return (sx, d, e)
    raise NotFound(f"no left dual for object {v.obj_label(x)} in {v.name}")


def find_right_dual(
    c: FinCategory | CategoryView,
    x: Obj,
    hint: tuple[Obj, Mor, Mor] | None = None,
) -> tuple[Obj, Mor, Mor]:
    """Right duals are left duals of the tensor-reversed view; the returned
    (dual, unit, counit) are base-view right-duality data."""
    return find_left_dual(as_view(c).flip(cop=True), x, hint)


def dual_candidates_iso(
    c: FinCategory | CategoryView,
    x: Obj,
    first: tuple[Obj, Mor, Mor],
    second: tuple[Obj, Mor, Mor],
) -> Mor | None:
    """The canonical comparison between two passing left-dual candidates,
    returned when it is the expected two-sided isomorphism."""
    v = as_view(c)
    s1, d1, e1 = first
    s2, d2, e2 = second
    fwd = v.compose(v.tensor_mor(e1, v.identity(s2)), v.tensor_mor(v.identity(s1), d2))
    bwd = v.compose(v.tensor_mor(e2, v.identity(s1)), v.tensor_mor(v.identity(s2), d1))
    if v.mor_eq(v.compose(bwd, fwd), v.identity(s1)) and v.mor_eq(
        v.compose(fwd, bwd), v.identity(s2)
    ):
        return fwd
    return None


def assign_all_duals(
    c: FinCategory | CategoryView,
    side: str = "left",
    hints: Mapping[Obj, tuple[Obj, Mor, Mor]] | None = None,
) -> DualityAssignment:
    """Search (or verify hints) per declared object and return a
    table-backed assignment.  Raises NotFound at the first dual-less
    object."""
    v = as_view(c)
    hints = hints or {}
    finder = find_left_dual if side == "left" else find_right_dual
    table = {x: finder(v, x, hints.get(x)) for x in v.objects}
    return DualityAssignment.from_table(side, v, table)


def check_snakes(d: DualityAssignment, rb: ReportBuilder) -> bool:
    """Snake-equation entries for every declared object of the assignment,
    reported under the id for the assignment's side."""
    eq_id = "left-dual" if d.side == "left" else "eq:rightdual"
    left = d.as_left()
    v = left.view
    ok = True
    for x in v.objects:
        try:
            first, second = _snakes_hold(v, x, left.dual(x), left.unit(x), left.counit(x))
            n1 = n2 = "snake composite differs from the identity"
        except (MalformedTable, TypeMismatch, NotFound) as exc:
            first = second = False
            n1 = n2 = f"{type(exc).__name__}: {exc}"
        ok &= rb.entry(eq_id, (v.obj_label(x), "object"), first, note=n1)
        ok &= rb.entry(eq_id, (v.obj_label(x), "dual"), second, note=n2)
    return ok


# ---------------------------------------------------------------------------
# transpose (the dual arrow)


def transpose(d: DualityAssignment, f: Mor) -> Mor:
    """The dual arrow of f under the assignment: for a left assignment,
    ``Sf = (e_Y (x) 1) . (1 (x) f (x) 1) . (1 (x) d_X): SY -> SX``; for a
    right assignment the same template in the tensor-reversed view, which
    is exactly the right-side dual arrow."""
    left = d.as_left()
    v = left.view
    a, b = v.dom(f), v.cod(f)
    sa, sb = left.dual(a), left.dual(b)
    expr = comp(
        tens(Named(left.counit(b), "e"), Id(sa)),
        tens(Id(sb), Named(f, v.mor_label(f)), Id(sa)),
        tens(Id(sb), Named(left.unit(a), "d")),
    )
    return eval_expr(v, expr)


def check_transpose_characterization(d: DualityAssignment, rb: ReportBuilder) -> bool:
    """For every scope morphism f, the dual arrow g = Sf satisfies both
    characterizing squares: sliding f across the unit equals sliding g, and
    likewise across the counit."""
    left = d.as_left()
    v = left.view
    ok = True
    scope = deterministic_sample(list(v.mor_scope()), _SCOPE_CAP, "transpose-char")
    for f in scope:
        a, b = v.dom(f), v.cod(f)
        sa, sb = left.dual(a), left.dual(b)
        g = transpose(left, f)
        nf = Named(f, v.mor_label(f))
        ng = Named(g, v.mor_label(g))
        ok &= rb.check(
            "eq2:dinat",
            (v.mor_label(f), "unit-side"),
            lambda f=f, a=a, sa=sa, nf=nf: comp(tens(nf, Id(sa)), Named(left.unit(a), "d")),
            lambda b=b, ng=ng: comp(tens(Id(b), ng), Named(left.unit(b), "d")),
            EMPTY_ENV,
            view=v,
        )
        ok &= rb.check(
            "eq2:dinat",
            (v.mor_label(f), "counit-side"),
            lambda a=a, ng=ng: comp(Named(left.counit(a), "e"), tens(ng, Id(a))),
            lambda b=b, sb=sb, nf=nf: comp(Named(left.counit(b), "e"), tens(Id(sb), nf)),
            EMPTY_ENV,
            view=v,
        )
    return ok


# ---------------------------------------------------------------------------
# the binary comparison map s2 and its defining equations


def _s2db_sides(left: DualityAssignment, x: Obj, y: Obj, s2_yx: Mor):
    """Both sides of the unit-side defining equation at (x, y), using the
    candidate value for the comparison map at (y, x)."""
    v = left.view
    xy = v.tensor_obj(x, y)
    lhs = Named(left.unit(xy), "d")
    rhs = comp(
        tens(Id(xy), Named(s2_yx, "s2")),
        tens(Id(x), Named(left.unit(y), "d"), Id(left.dual(x))),
        Named(left.unit(x), "d"),
    )
    return lhs, rhs


def _s2ev_sides(left: DualityAssignment, x: Obj, y: Obj, s2_yx: Mor):
    """Both sides of the counit-side defining equation at (x, y)."""
    v = left.view
    xy = v.tensor_obj(x, y)
    lhs = comp(
        Named(left.counit(y), "e"),
        tens(Id(left.dual(y)), Named(left.counit(x), "e"), Id(y)),
    )
    rhs = comp(Named(left.counit(xy), "e"), tens(Named(s2_yx, "s2"), Id(x), Id(y)))
    return lhs, rhs


def _holds(view: CategoryView, sides) -> bool:
    from .expr import check_equation

    try:
        return check_equation(view, sides[0], sides[1], EMPTY_ENV).holds
    except (TypeMismatch, MalformedTable):
        return False


def solve_s2(left: DualityAssignment, a: Obj, b: Obj) -> Mor:
    """The comparison map ``s2(a, b): Sa (x) Sb -> S(b (x) a)`` solved from
    its unit-side defining equation by search over the hom-set.  A unique
    unit-side solution wins; several are narrowed by the counit-side
    equation and invertibility, and a remaining tie is an error."""
    v = left.view
    sa, sb = left.dual(a), left.dual(b)
    target = left.dual(v.tensor_obj(b, a))
    candidates = list(v.hom(v.tensor_obj(sa, sb), target))
    # the defining equation at (x, y) constrains s2 at (y, x); take (x, y) = (b, a)
    primary = [m for m in candidates if _holds(v, _s2db_sides(left, b, a, m))]
    if len(primary) == 1:
        return primary[0]
    if not primary:
        raise NotFound(
            f"no comparison map at ({v.obj_label(a)}, {v.obj_label(b)}) satisfies "
            "the unit-side defining equation"
        )
    narrowed = [
        m
        for m in primary
        if _holds(v, _s2ev_sides(left, b, a, m)) and v.invert(m) is not None
    ]
    if len(narrowed) == 1:
        return narrowed[0]
    raise CoherenceFailure(
        f"{len(primary)} candidates satisfy the unit-side defining equation at "
        f"({v.obj_label(a)}, {v.obj_label(b)}); "
        f"{len(narrowed)} survive the counit-side and invertibility filters"
    )


def solved_s2(left: DualityAssignment) -> Callable[[Obj, Obj], Mor]:
    return _memo_pair(lambda a, b: solve_s2(left, a, b))


def check_s2(d: DualityAssignment, rb: ReportBuilder) -> bool:
    """Both defining equations of the binary comparison map over all
    declared object pairs, plus invertibility of s2 and s0.  Right-side
    assignments are checked through the left template in the flipped view;
    their entries carry a 'right' instantiation tag."""
    left = d.as_left()
    v = left.view
    tag = () if d.side == "left" else ("right",)
    ok = True
    for x in v.objects:
        for y in v.objects:
            inst = tag + (v.obj_label(x), v.obj_label(y))
            ok &= rb.check(
                "eq:s2db", inst,
                lambda x=x, y=y: _s2db_sides(left, x, y, left.s2_at(y, x))[0],
                lambda x=x, y=y: _s2db_sides(left, x, y, left.s2_at(y, x))[1],
                EMPTY_ENV, view=v,
            )
            ok &= rb.check(
                "eq:s2ev", inst,
                lambda x=x, y=y: _s2ev_sides(left, x, y, left.s2_at(y, x))[0],
                lambda x=x, y=y: _s2ev_sides(left, x, y, left.s2_at(y, x))[1],
                EMPTY_ENV, view=v,
            )
            try:
                holds = v.invert(left.s2_at(x, y)) is not None
                note = "comparison map has no two-sided inverse"
            except (MalformedTable, MissingStructure, NotFound, CoherenceFailure) as exc:
                holds, note = False, f"{type(exc).__name__}: {exc}"
            ok &= rb.entry("iso(s2)", inst, holds, note=note)
    try:
        holds = v.invert(left.s0_mor) is not None
        note = "unit comparison map has no two-sided inverse"
    except (MalformedTable, MissingStructure) as exc:
        holds, note = False, f"{type(exc).__name__}: {exc}"
    ok &= rb.entry("iso(s0)", tag + ("unit",), holds, note=note)
    return ok


# ---------------------------------------------------------------------------
# the duality functors


def build_duality_functor(
    c: FinCategory | CategoryView,
    d: DualityAssignment,
    rb: ReportBuilder | None = None,
) -> FunctorData:
    """The strong monoidal functor induced by the assignment.

    For a left assignment in V this is S: V -> V^{op,cop} with object map
    the chosen dual, morphism map the dual arrow, monoidal structure the
    inverted comparison maps and comonoidal structure the comparison maps
    themselves (both read in the target orientation).  For a right
    assignment it is S': V^{op,cop} -> V.  Verifies functoriality, the
    snake equations, both comparison-map equations, and the dual-arrow
    characterization; raises CoherenceFailure naming the first violation.
    """
    v = as_view(c)
    own = rb is None
    rb = rb or ReportBuilder(f"duality functor [{d.side}] on {v.name}", v.scope_label())
    left = d.as_left()
    for x in v.objects:
        try:
            left.dual(x)
        except (MalformedTable, NotFound) as exc:
            raise CoherenceFailure(
                f"no dual assigned to object {v.obj_label(x)}: {exc}"
            ) from exc

    mor_map = _memo1(lambda f: transpose(left, f))

    if d.side == "left":
        source, target = v, v.flip(op=True, cop=True)
        monoidal = StructureMaps(
            _memo_pair(lambda x, y: _invert_or_raise(v, d.s2_at(y, x))),
            _invert_or_raise(v, d.s0_mor),
        )
        comonoidal = StructureMaps(lambda x, y: d.s2_at(y, x), d.s0_mor)
        name = f"S[{v.name}]"
    else:
        source, target = v.flip(op=True, cop=True), v
        monoidal = StructureMaps(lambda x, y: d.s2_at(x, y), d.s0_mor)
        comonoidal = StructureMaps(
            _memo_pair(lambda x, y: _invert_or_raise(v, d.s2_at(x, y))),
            _invert_or_raise(v, d.s0_mor),
        )
        name = f"S'[{v.name}]"
    functor = FunctorData(name, source, target, d.dual, mor_map, monoidal, comonoidal)

    ok = check_snakes(d, rb)
    ok &= check_functoriality(functor, rb)
    ok &= check_s2(d, rb)
    ok &= check_transpose_characterization(d, rb)
    if not ok:
        report = rb.build()
        first = report.failing()[0]
        raise CoherenceFailure(
            f"duality functor on {v.name}: {first.equation_id} fails at "
            f"({', '.join(first.instantiation)})"
        )
    if own:
        rb.build()
    return functor


# ---------------------------------------------------------------------------
# the double-dual adjoint equivalence


@dataclass
class AdjointEquivalence:
    """The contravariant adjoint equivalence between the two duality
    functors: alpha_X: X -> S'SX and beta_X: X -> SS'X, with recorded
    inverses."""

    view: CategoryView
    alpha: Callable[[Obj], Mor]
    beta: Callable[[Obj], Mor]
    alpha_inv: Callable[[Obj], Mor]
    beta_inv: Callable[[Obj], Mor]


def build_adjoint_equivalence(
    c: FinCategory | CategoryView,
    dl: DualityAssignment,
    dr: DualityAssignment,
    rb: ReportBuilder | None = None,
    S: FunctorData | None = None,
    Sp: FunctorData | None = None,
    verify: bool = True,
) -> AdjointEquivalence:
    """alpha_X = (1 (x) e_X) . (d'_{SX} (x) 1) and
    beta_X = (e'_X (x) 1) . (1 (x) d_{S'X}), with verified inverses,
    triangle identities, the unit/counit transport equation, naturality and
    monoidality of both (when the duality functors are supplied), and the
    doctrinal derivation of the right comparison maps (when present)."""
    v = as_view(c)
    if dl.side != "left" or dr.side != "right":
        raise ValueError("expected a left and a right assignment, in that order")
    own = rb is None
    rb = rb or ReportBuilder(f"adjoint equivalence on {v.name}", v.scope_label())

    def alpha(x: Obj) -> Mor:
        sx = dl.dual(x)
        return eval_expr(
            v,
            comp(
                tens(Id(dr.dual(sx)), Named(dl.counit(x), "e")),
                tens(Named(dr.unit(sx), "d'"), Id(x)),
            ),
        )

    def beta(x: Obj) -> Mor:
        spx = dr.dual(x)
        return eval_expr(
            v,
            comp(
                tens(Named(dr.counit(x), "e'"), Id(dl.dual(spx))),
                tens(Id(x), Named(dl.unit(spx), "d")),
            ),
        )

    alpha = _memo1(alpha)
    beta = _memo1(beta)

    def _inv(component: Callable[[Obj], Mor], which: str) -> Callable[[Obj], Mor]:
        def inv_at(x: Obj) -> Mor:
            got = v.invert(component(x))
            if got is None:
                raise NotInvertible(
                    f"{which} component at {v.obj_label(x)} has no two-sided inverse"
                )
            return got

        return _memo1(inv_at)

    adj = AdjointEquivalence(v, alpha, beta, _inv(alpha, "alpha"), _inv(beta, "beta"))
    if not verify:
        return adj

    ok = True
    for x in v.objects:
        for which, component in (("alpha", alpha), ("beta", beta)):
            try:
                holds = v.invert(component(x)) is not None
                note = "component has no two-sided inverse"
            except (MalformedTable, TypeMismatch) as exc:
                holds, note = False, f"{type(exc).__name__}: {exc}"
            ok &= rb.entry(f"iso({which})", (v.obj_label(x),), holds, note=note)

    # triangle identities, via the dual arrows of both assignments
    for x in v.objects:
        sx, spx = dl.dual(x), dr.dual(x)
        ok &= rb.check(
            "adjoint:triangle-1", (v.obj_label(x),),
            lambda x=x, sx=sx: comp(
                Named(transpose(dl, alpha(x)), "S(alpha)"), Named(beta(sx), "beta")
            ),
            Id(sx), EMPTY_ENV, view=v,
        )
        ok &= rb.check(
            "adjoint:triangle-2", (v.obj_label(x),),
            lambda x=x, spx=spx: comp(
                Named(transpose(dr, beta(x)), "S'(beta)"), Named(alpha(spx), "alpha")
            ),
            Id(spx), EMPTY_ENV, view=v,
        )

    # the unit/counit transport equation
    for x in v.objects:
        spx = dr.dual(x)
        ok &= rb.check(
            "d'-beta-d", (v.obj_label(x), "unit"),
            lambda x=x, spx=spx: comp(
                tens(Id(spx), Named(beta(x), "beta")), Named(dr.unit(x), "d'")
            ),
            lambda spx=spx: Named(dl.unit(spx), "d"),
            EMPTY_ENV, view=v,
        )
        ok &= rb.check(
            "d'-beta-d", (v.obj_label(x), "counit"),
            lambda x=x: Named(dr.counit(x), "e'"),
            lambda x=x, spx=spx: comp(
                Named(dl.counit(spx), "e"), tens(Named(beta(x), "beta"), Id(spx))
            ),
            EMPTY_ENV, view=v,
        )

    # naturality and monoidality, when the functors are available
    if S is not None and Sp is not None:
        ident = identity_functor(v)
        sps = compose_functors(Sp, S, name="S'S")
        ssp = compose_functors(opcop_functor(S), opcop_functor(Sp), name="SS'")
        t_alpha = NatTransfData("alpha", ident, sps, alpha, flavor="monoidal")
        t_beta = NatTransfData("beta", ident, ssp, beta, flavor="monoidal")
        ok &= check_nat_flavor(t_alpha, rb, nat_eq_id="nat(alpha)")
        ok &= check_nat_flavor(t_beta, rb, nat_eq_id="nat(beta)")

    # the doctrinal derivation of the right comparison maps
    if dr.has_s2:
        ok &= check_doctrinal_right_structure(v, dl, dr, adj, rb)

    if own and not ok:
        report = rb.build()
        first = report.failing()[0]
        raise CoherenceFailure(
            f"adjoint equivalence on {v.name}: {first.equation_id} fails at "
            f"({', '.join(first.instantiation)})"
        )
    return adj


def doctrinal_s2(
    v: CategoryView,
    dl: DualityAssignment,
    dr_partial: DualityAssignment,
    adj: AdjointEquivalence,
) -> tuple[Callable[[Obj, Obj], Mor], Mor]:
    """The right comparison maps derived from the left ones through the
    adjoint equivalence:

    ``s'2(X, Y) = S'(beta_Y (x) beta_X) . S'(s2(S'Y, S'X)) . alpha_{S'X (x) S'Y}``
    and ``s'0 = S'(s0) . alpha_1``, where S' acts on arrows as the right
    dual arrow."""

    def sp_mor(f: Mor) -> Mor:
        return transpose(dr_partial, f)

    def pair(x: Obj, y: Obj) -> Mor:
        spx, spy = dr_partial.dual(x), dr_partial.dual(y)
        mid = dl.s2_at(spy, spx)
        outer = v.tensor_mor(adj.beta(y), adj.beta(x))
        return v.compose(
            sp_mor(outer), v.compose(sp_mor(mid), adj.alpha(v.tensor_obj(spx, spy)))
        )

    s0 = v.compose(sp_mor(dl.s0_mor), adj.alpha(v.unit))
    return _memo_pair(pair), s0


def check_doctrinal_right_structure(
    v: CategoryView,
    dl: DualityAssignment,
    dr: DualityAssignment,
    adj: AdjointEquivalence,
    rb: ReportBuilder,
) -> bool:
    """The right assignment's comparison maps agree with their doctrinal
    derivation from the left ones."""
    derived_pair, derived_s0 = doctrinal_s2(v, dl, dr, adj)
    ok = True
    for x in v.objects:
        for y in v.objects:
            ok &= rb.check(
                "eq:S2doctrinalS'2", (v.obj_label(x), v.obj_label(y)),
                lambda x=x, y=y: Named(dr.s2_at(x, y), "s'2"),
                lambda x=x, y=y: Named(derived_pair(x, y), "derived"),
                EMPTY_ENV, view=v,
            )
    ok &= rb.check(
        "eq:S2doctrinalS'2", ("unit",),
        lambda: Named(dr.s0_mor, "s'0"),
        lambda: Named(derived_s0, "derived"),
        EMPTY_ENV, view=v,
    )
    return ok


# ---------------------------------------------------------------------------
# one-call construction of the whole duality context


@dataclass
class DualityContext:
    """Everything duality-related for one category: both assignments, both
    duality functors, the adjoint equivalence, and the report of every
    check performed while building them."""

    view: CategoryView
    left: DualityAssignment
    right: DualityAssignment
    S: FunctorData
    Sp: FunctorData
    adj: AdjointEquivalence
    report: Report


def build_duality_context(
    c: FinCategory | CategoryView,
    left: DualityAssignment | None = None,
    right: DualityAssignment | None = None,
    left_hints: Mapping[Obj, tuple[Obj, Mor, Mor]] | None = None,
    right_hints: Mapping[Obj, tuple[Obj, Mor, Mor]] | None = None,
) -> DualityContext:
    """Find (or accept) both assignments, solve or verify the comparison
    maps, build S and S', and verify the adjoint equivalence between them.
    The right comparison maps are always derived doctrinally when absent.
    """
    v = as_view(c)
    rb = ReportBuilder(f"duality context on {v.name}", v.scope_label())
    if left is None:
        left = assign_all_duals(v, "left", left_hints)
    if not left.has_s2:
        left = left.with_s2(solved_s2(left), left.unit(v.unit))
    S = build_duality_functor(v, left, rb)
    if right is None:
        right = assign_all_duals(v, "right", right_hints)
    if not right.has_s2:
        # the doctrinal derivation needs alpha/beta, which need only d/e data
        tmp_adj = build_adjoint_equivalence(v, left, right, verify=False)
        pair, s0 = doctrinal_s2(v, left, right, tmp_adj)
        right = right.with_s2(pair, s0)
    Sp = build_duality_functor(v, right, rb)
    adj = build_adjoint_equivalence(v, left, right, rb, S=S, Sp=Sp)
    report = rb.build()
    if not report.ok:
        first = report.failing()[0]
        raise CoherenceFailure(
            f"duality context on {v.name}: {first.equation_id} fails at "
            f"({', '.join(first.instantiation)})"
        )
    return DualityContext(v, left, right, S, Sp, adj, report)
