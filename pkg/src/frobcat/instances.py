"""Built-in catalog of small concrete instances.

Three families of base categories are provided:

* a truncated chain ``0 <= 1 <= ... <= N`` under ``min(a+b, N)`` — posetal,
  with almost no duals, used to exercise the diagnostic paths;
* cyclic groups viewed as discrete monoidal categories — every object has
  the inverse element as its dual on both sides;
* Boolean matrix categories — every object self-dual via the diagonal
  relations.

On top of these, the catalog defines functors and linear functor pairs with
known verdicts, including deliberately faulty ones whose defects are placed
so each adjudicator rejects them at one well-defined gate.  Builders
validate what they construct: categories pass ``validate_category`` and
duality data is verified (snake equations, comparison maps, adjoint
equivalence) before a context is returned.

Catalog names resolve deterministically — the same ``NAME[:params]`` text
always produces the same objects, labels, and serialized bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .boolmat import BoolMat, BoolMatCategory, cap, cup, identity_mat, swap_mat
from .core import FinCategory, TableCategory, validate_category
from .duality import DualityAssignment, DualityContext, build_duality_context
from .errors import MalformedTable, NotFound
from .linear import LinearFunctorData, linear_from_frobenius
from .structures import FunctorData, StructureMaps

__all__ = [
    "BoolMatrixInstance",
    "CatalogEntry",
    "FunctorInstance",
    "LinearInstance",
    "bool_bad_f2_instance",
    "bool_identity_instance",
    "bool_linear_instance",
    "bool_relabel_instance",
    "build_bool_matrix",
    "build_discrete_group",
    "build_posetal_nat",
    "catalog_entries",
    "cyclic_context",
    "posetal_linear",
    "resolve_builtin",
    "z4_shift_instance",
    "z4_to_z2_instance",
    "z4z2_linear_instance",
    "z_identity_instance",
    "z_linear_identity_instance",
]


def _require_valid(cat: TableCategory) -> TableCategory:
    report = validate_category(cat)
    if not report.ok:
        first = next(e for e in report.entries if not e.holds)
        raise MalformedTable(
            f"category {cat.view().name} fails validation at "
            f"{first.equation_id} {first.instantiation}"
        )
    return cat


# ---------------------------------------------------------------------------
# base categories
# ---------------------------------------------------------------------------

def build_posetal_nat(n: int = 6) -> TableCategory:
    """The chain ``0 <= 1 <= ... <= n`` with one arrow ``a->b`` whenever
    ``a <= b`` and tensor ``min(a+b, n)``.  Only the unit object has a
    dual, so the chain exercises every non-autonomous diagnostic path."""
    if n < 3:
        raise ValueError(f"the chain needs at least objects 0..3, got n={n}")
    objs = tuple(range(n + 1))
    return _require_valid(TableCategory(
        name=f"chain{n}",
        objects=objs,
        unit=0,
        homs={(a, b): ((f"{a}->{b}",) if a <= b else ()) for a in objs for b in objs},
        identities={a: f"{a}->{a}" for a in objs},
        compose_table={
            (f"{b}->{c}", f"{a}->{b}"): f"{a}->{c}"
            for a in objs for b in objs for c in objs
            if a <= b <= c
        },
        tensor_obj_table={(a, b): min(a + b, n) for a in objs for b in objs},
        tensor_mor_table={
            (f"{a}->{b}", f"{c}->{d}"): f"{min(a + c, n)}->{min(b + d, n)}"
            for a in objs for b in objs if a <= b
            for c in objs for d in objs if c <= d
        },
    ))


def build_discrete_group(n: int = 4) -> TableCategory:
    """The cyclic group of order ``n`` as a discrete monoidal category:
    objects ``0..n-1``, identity arrows only, tensor = addition mod n.
    Every object has ``(-g) mod n`` as a two-sided dual."""
    if n < 1:
        raise ValueError(f"the group needs at least one element, got n={n}")
    objs = tuple(range(n))
    return _require_valid(TableCategory(
        name=f"Z{n}",
        objects=objs,
        unit=0,
        homs={(a, b): ((f"id{a}",) if a == b else ()) for a in objs for b in objs},
        identities={a: f"id{a}" for a in objs},
        compose_table={(f"id{a}", f"id{a}"): f"id{a}" for a in objs},
        tensor_obj_table={(a, b): (a + b) % n for a in objs for b in objs},
        tensor_mor_table={
            (f"id{a}", f"id{b}"): f"id{(a + b) % n}" for a in objs for b in objs
        },
    ))


def cyclic_context(n: int = 4) -> DualityContext:
    """Duality context for the cyclic group: the dual of ``g`` is
    ``(-g) mod n`` with identity unit and counit, supplied as hints and
    verified during construction."""
    cat = build_discrete_group(n)
    hints = {g: ((n - g) % n, "id0", "id0") for g in range(n)}
    return build_duality_context(cat, left_hints=hints, right_hints=hints)


@dataclass(frozen=True)
class BoolMatrixInstance:
    """A Boolean matrix category bundled with its verified self-duality
    context and the generating morphism set used as the checking scope."""

    category: BoolMatCategory
    context: DualityContext
    generators: tuple[BoolMat, ...]


def build_bool_matrix(n: int = 2) -> BoolMatrixInstance:
    """Boolean matrices on objects ``0..n``; every object is its own dual
    through the diagonal cup and cap, and the comparison maps are the
    evident interchange permutations.  All duality data is verified before
    the bundle is returned."""
    category = BoolMatCategory(n)
    view = category.view()
    left = DualityAssignment(
        "left", view, lambda x: x, cup, cap, swap_mat, cup(1)
    )
    right = DualityAssignment(
        "right", view, lambda x: x, cup, cap, swap_mat, cup(1)
    )
    context = build_duality_context(category, left=left, right=right)
    return BoolMatrixInstance(category, context, tuple(category.mor_scope()))


# ---------------------------------------------------------------------------
# functor instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FunctorInstance:
    """A catalog functor together with duality contexts for its endpoints
    (``None`` when the base category is not autonomous) and, for the
    deliberately broken entries, a note naming the planted defect."""

    functor: FunctorData
    source: DualityContext | None
    target: DualityContext | None
    fault: str | None = None


def _identity_with_name(name: str, ctx: DualityContext) -> FunctorData:
    v = ctx.view
    ident = StructureMaps(lambda x, y: v.identity(v.tensor_obj(x, y)), v.identity(v.unit))
    return FunctorData(name, v, v, lambda x: x, lambda f: f, ident, ident)


def z_identity_instance(n: int = 4) -> FunctorInstance:
    """The identity on the cyclic group, with both structures identity."""
    ctx = cyclic_context(n)
    return FunctorInstance(_identity_with_name(f"z{n}-identity", ctx), ctx, ctx)


def z4_to_z2_instance() -> FunctorInstance:
    """Reduction mod 2 from the 4-element to the 2-element cyclic group;
    a strict homomorphism, so both structures are identities."""
    src = cyclic_context(4)
    tgt = cyclic_context(2)
    v2 = tgt.view
    ident = StructureMaps(lambda x, y: v2.identity((x + y) % 2), "id0")
    functor = FunctorData(
        "z4-to-z2", src.view, v2,
        lambda x: x % 2,
        lambda m: f"id{int(m[2:]) % 2}",
        ident, ident,
    )
    return FunctorInstance(functor, src, tgt)


def bool_identity_instance(n: int = 2) -> FunctorInstance:
    """The identity on Boolean matrices, with both structures identity."""
    inst = build_bool_matrix(n)
    ctx = inst.context
    return FunctorInstance(_identity_with_name(f"bool{n}-identity", ctx), ctx, ctx)


def _basis_permutation(k: int) -> BoolMat:
    """Identity everywhere except the two-element object, whose basis is
    swapped."""
    return swap_mat(1, 2) if k == 2 else identity_mat(k)


def bool_relabel_instance(n: int = 2) -> FunctorInstance:
    """Conjugation of every Boolean matrix by a fixed basis permutation at
    each object.  A strong functor: the structure maps in both directions
    are the permutation discrepancies, inverse to each other."""
    inst = build_bool_matrix(n)
    ctx = inst.context
    view = ctx.view

    def relabel(f: BoolMat) -> BoolMat:
        p_cod = _basis_permutation(f.cod)
        p_dom_inv = view.invert(_basis_permutation(f.dom))
        return view.compose(p_cod, view.compose(f, p_dom_inv))

    def pair_fwd(x: int, y: int) -> BoolMat:
        p_xy = _basis_permutation(x * y)
        p_x_p_y = view.tensor_mor(_basis_permutation(x), _basis_permutation(y))
        return view.compose(p_xy, view.invert(p_x_p_y))

    def pair_bwd(x: int, y: int) -> BoolMat:
        return view.invert(pair_fwd(x, y))

    functor = FunctorData(
        f"bool{n}-relabel", view, view,
        lambda x: x,
        relabel,
        StructureMaps(pair_fwd, identity_mat(1)),
        StructureMaps(pair_bwd, identity_mat(1)),
    )
    return FunctorInstance(functor, ctx, ctx)


def z4_shift_instance() -> FunctorInstance:
    """Deliberate fault: the object map shifts by one while the morphism
    map is untouched, so identities land at the wrong endpoints and the
    functoriality gate rejects the candidate."""
    ctx = cyclic_context(4)
    v = ctx.view
    functor = FunctorData(
        "z4-shift", v, v, lambda x: (x + 1) % 4, lambda m: m
    )
    return FunctorInstance(
        functor, ctx, ctx, fault="object map shifted against the morphism map"
    )


def bool_bad_f2_instance(n: int = 2) -> FunctorInstance:
    """Deliberate fault: the identity functor on Boolean matrices with the
    pairing map at (2, 2) replaced by the interchange permutation, which
    breaks associativity coherence — the structure-map gate rejects it."""
    inst = build_bool_matrix(n)
    ctx = inst.context
    view = ctx.view

    def bad_pair(x: int, y: int) -> BoolMat:
        if (x, y) == (2, 2):
            return swap_mat(2, 2)
        return view.identity(view.tensor_obj(x, y))

    functor = FunctorData(
        f"bool{n}-bad-f2", view, view,
        lambda x: x,
        lambda f: f,
        StructureMaps(bad_pair, identity_mat(1)),
        StructureMaps(
            lambda x, y: view.identity(view.tensor_obj(x, y)), identity_mat(1)
        ),
    )
    return FunctorInstance(
        functor, ctx, ctx, fault="pairing map at (2, 2) replaced by the interchange"
    )


# ---------------------------------------------------------------------------
# linear functor instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearInstance:
    """A catalog linear functor pair with endpoint duality contexts
    (``None`` when the base categories are not autonomous)."""

    linear: LinearFunctorData
    source: DualityContext | None
    target: DualityContext | None
    fault: str | None = None


def posetal_linear(n: int = 6, variant: str = "A") -> LinearInstance:
    """The chain-valued pairs.  Both variants share the constant-zero
    monoidal half R.  Variant A's comonoidal half is the capped successor
    ``L(0) = 0, L(k) = min(k+1, n)``, which is comonoidal but admits no
    monoidal pairing (none exists at (1, 1)); variant B's is the identity.
    The strengths are the unique chain arrows of the right types."""
    if variant not in ("A", "B"):
        raise ValueError(f"variant must be 'A' or 'B', got {variant!r}")
    cat = build_posetal_nat(n)
    v = cat.view()

    def arrow(a: int, b: int) -> str:
        if a > b:
            raise MalformedTable(f"no arrow {a}->{b} in the chain order")
        return f"{a}->{b}"

    r_functor = FunctorData(
        f"chain{n}-floor", v, v,
        lambda x: 0, lambda m: "0->0",
        StructureMaps(lambda x, y: "0->0", "0->0"),
        StructureMaps(lambda x, y: "0->0", "0->0"),
    )

    if variant == "A":
        def lob(x: int) -> int:
            return 0 if x == 0 else min(x + 1, n)

        l_functor = FunctorData(
            f"chain{n}-bump", v, v,
            lob,
            lambda m: arrow(lob(int(m.split("->")[0])), lob(int(m.split("->")[1]))),
            StructureMaps(
                lambda x, y: arrow(min(lob(x) + lob(y), n), lob(min(x + y, n))),
                arrow(0, 0),
            ),
            StructureMaps(
                lambda x, y: arrow(lob(min(x + y, n)), min(lob(x) + lob(y), n)),
                arrow(0, 0),
            ),
        )
        linear = LinearFunctorData(
            f"posetal-nat:{n}:A", r_functor, l_functor,
            nu_rR=lambda x, y: arrow(0, lob(x)),
            nu_lR=lambda x, y: arrow(0, lob(y)),
            nu_rL=lambda x, y: arrow(lob(y), lob(min(x + y, n))),
            nu_lL=lambda x, y: arrow(lob(x), lob(min(x + y, n))),
        )
    else:
        ident = StructureMaps(lambda x, y: v.identity(min(x + y, n)), "0->0")
        l_functor = FunctorData(
            f"chain{n}-identity", v, v, lambda x: x, lambda m: m, ident, ident
        )
        linear = LinearFunctorData(
            f"posetal-nat:{n}:B", r_functor, l_functor,
            nu_rR=lambda x, y: arrow(0, x),
            nu_lR=lambda x, y: arrow(0, y),
            nu_rL=lambda x, y: arrow(y, min(x + y, n)),
            nu_lL=lambda x, y: arrow(x, min(x + y, n)),
        )
    return LinearInstance(linear, None, None)


def _linear_named(name: str, inst: FunctorInstance) -> LinearInstance:
    base = linear_from_frobenius(inst.functor)
    renamed = LinearFunctorData(
        name, base.R, base.L, base.nu_rR, base.nu_lR, base.nu_rL, base.nu_lL
    )
    return LinearInstance(renamed, inst.source, inst.target, inst.fault)


def z_linear_identity_instance(n: int = 4) -> LinearInstance:
    """Both halves are the identity on the cyclic group; the strengths are
    the Frobenius pairings (all identities)."""
    return _linear_named(f"z{n}-linear-id", z_identity_instance(n))


def z4z2_linear_instance() -> LinearInstance:
    """Both halves are the reduction mod 2; the strengths are its
    Frobenius pairings."""
    return _linear_named("z4z2-linear", z4_to_z2_instance())


def bool_linear_instance(n: int = 2) -> LinearInstance:
    """Both halves are the identity on Boolean matrices; the strengths are
    its Frobenius pairings."""
    return _linear_named(f"bool{n}-linear", bool_identity_instance(n))


# ---------------------------------------------------------------------------
# catalog and name resolution
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """One resolvable builtin: its name, the kind of object it builds, the
    parameter syntax accepted after the name, a one-line summary, and
    whether it is a deliberately faulty instance."""

    name: str
    kind: str
    params: str
    summary: str
    fault: bool
    build: Callable[..., object]


def _int_param(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None


def _build_bool_category(*params: str) -> BoolMatrixInstance:
    n = _int_param(params[0], "bool size") if params else 2
    return build_bool_matrix(n)


def _build_chain(*params: str) -> TableCategory:
    n = _int_param(params[0], "chain length") if params else 6
    return build_posetal_nat(n)


def _build_cyclic(*params: str) -> TableCategory:
    n = _int_param(params[0], "group order") if params else 4
    return build_discrete_group(n)


def _build_posetal_linear(*params: str) -> LinearInstance:
    if not params:
        return posetal_linear(6, "A")
    if len(params) != 2:
        raise ValueError(
            "posetal-nat takes the chain length and the variant together, "
            "e.g. posetal-nat:6:A (or no parameters for the default 6:A)"
        )
    return posetal_linear(_int_param(params[0], "chain length"), params[1])


def _no_params(factory: Callable[[], object]) -> Callable[..., object]:
    def build(*params: str):
        if params:
            raise ValueError("this builtin takes no parameters")
        return factory()

    return build


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "bool", "category", "[:N]",
        "Boolean matrices on objects 0..N (default 2), all objects self-dual",
        False, _build_bool_category,
    ),
    CatalogEntry(
        "bool-bad-f2", "functor", "",
        "identity on Boolean matrices with the (2,2) pairing map corrupted",
        True, _no_params(bool_bad_f2_instance),
    ),
    CatalogEntry(
        "bool-identity", "functor", "",
        "identity on Boolean matrices with identity structures",
        False, _no_params(bool_identity_instance),
    ),
    CatalogEntry(
        "bool-linear", "linear", "",
        "the Boolean-matrix identity functor as an equal linear pair",
        False, _no_params(bool_linear_instance),
    ),
    CatalogEntry(
        "bool-relabel", "functor", "",
        "conjugation by a basis swap at the two-element object (strong)",
        False, _no_params(bool_relabel_instance),
    ),
    CatalogEntry(
        "chain", "category", "[:N]",
        "the chain 0..N (default 6) under min(a+b, N); almost no duals",
        False, _build_chain,
    ),
    CatalogEntry(
        "cyclic", "category", "[:n]",
        "the cyclic group of order n (default 4) as a discrete category",
        False, _build_cyclic,
    ),
    CatalogEntry(
        "posetal-nat", "linear", "[:N:A|B]",
        "chain-valued linear pair; variant A's comonoidal half is not monoidal",
        False, _build_posetal_linear,
    ),
    CatalogEntry(
        "z2-identity", "functor", "",
        "identity on the 2-element cyclic group",
        False, _no_params(lambda: z_identity_instance(2)),
    ),
    CatalogEntry(
        "z4-identity", "functor", "",
        "identity on the 4-element cyclic group",
        False, _no_params(lambda: z_identity_instance(4)),
    ),
    CatalogEntry(
        "z4-linear-id", "linear", "",
        "the cyclic-group identity functor as an equal linear pair",
        False, _no_params(z_linear_identity_instance),
    ),
    CatalogEntry(
        "z4-shift", "functor", "",
        "object map shifted against the morphism map (fails functoriality)",
        True, _no_params(z4_shift_instance),
    ),
    CatalogEntry(
        "z4-to-z2", "functor", "",
        "reduction mod 2 between cyclic groups with identity structures",
        False, _no_params(z4_to_z2_instance),
    ),
    CatalogEntry(
        "z4z2-linear", "linear", "",
        "the reduction mod 2 as an equal linear pair",
        False, _no_params(z4z2_linear_instance),
    ),
)

_BY_NAME = {entry.name: entry for entry in CATALOG}


def catalog_entries() -> tuple[CatalogEntry, ...]:
    """All builtins in name order (the tuple is already sorted)."""
    return CATALOG


def resolve_builtin(text: str) -> tuple[CatalogEntry, object]:
    """Resolve ``NAME[:param[:param]]`` to its catalog entry and the built
    object: a category, a ``FunctorInstance``, or a ``LinearInstance``."""
    name, *params = text.split(":")
    entry = _BY_NAME.get(name)
    if entry is None:
        known = ", ".join(sorted(_BY_NAME))
        raise NotFound(f"unknown builtin {name!r}; known names: {known}")
    return entry, entry.build(*params)
