"""Boolean matrices over the two-element semiring, as a monoidal category.

Objects are natural numbers; a morphism m -> n is an n-by-m matrix of
booleans; composition is boolean matrix product; the tensor is the
Kronecker product on matrices and multiplication on objects.  Matrices are
stored as tuples of row bitmasks (bit j of ``rows[i]`` is entry (i, j)),
which keeps values hashable and all arithmetic exact.

The category object declares a small quantification scope (objects
0..max_obj) but computes hom-sets, composites, and tensors for arbitrary
natural numbers, so checks may pass through larger tensor powers than the
declared scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import FinCategory, Mor, Obj
from .errors import ScopeTooLarge, TypeMismatch

# hom(a, b) has 2**(a*b) elements; refuse to materialize beyond this many bits.
_HOM_BITS_LIMIT = 12
# Quantified coherence checks grow as high tensor powers of the largest object.
_MAX_OBJ_LIMIT = 3


@dataclass(frozen=True)
class BoolMat:
    """A boolean matrix, cod rows by dom columns."""

    dom: int
    cod: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.rows) != self.cod:
            raise ValueError(f"expected {self.cod} rows, got {len(self.rows)}")
        mask = (1 << self.dom) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row bitmask has bits outside the domain width")

    def entry(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def code(self) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            out |= r << (i * self.dom)
        return out

    def __repr__(self) -> str:
        return f"BoolMat({self.cod}x{self.dom}:{self.code():x})"


def mat_from_entries(entries: Sequence[Sequence[int]], dom: int | None = None) -> BoolMat:
    cod = len(entries)
    if dom is None:
        if cod == 0:
            raise ValueError("cannot infer domain of a matrix with no rows")
        dom = len(entries[0])
    rows = []
    for row in entries:
        if len(row) != dom:
            raise ValueError("ragged matrix rows")
        bits = 0
        for j, v in enumerate(row):
            if v:
                bits |= 1 << j
        rows.append(bits)
    return BoolMat(dom=dom, cod=cod, rows=tuple(rows))


def identity_mat(n: int) -> BoolMat:
    return BoolMat(dom=n, cod=n, rows=tuple(1 << i for i in range(n)))


def compose_mats(g: BoolMat, f: BoolMat) -> BoolMat:
    """g after f: boolean matrix product g f."""
    if f.cod != g.dom:
        raise TypeMismatch(f"cannot compose {g!r} after {f!r}")
    out = []
    for grow in g.rows:
        acc = 0
        k = 0
        bits = grow
        while bits:
            if bits & 1:
                acc |= f.rows[k]
            bits >>= 1
            k += 1
        out.append(acc)
    return BoolMat(dom=f.dom, cod=g.cod, rows=tuple(out))


def kron(f: BoolMat, g: BoolMat) -> BoolMat:
    """Kronecker product: (f kron g)[(i,j),(k,l)] = f[i,k] & g[j,l], with
    pair indices flattened row-major ((i,j) -> i*g.cod + j on rows,
    (k,l) -> k*g.dom + l on columns)."""
    out = []
    for frow in f.rows:
        for grow in g.rows:
            acc = 0
            k = 0
            bits = frow
            while bits:
                if bits & 1:
                    acc |= grow << (k * g.dom)
                bits >>= 1
                k += 1
            out.append(acc)
    return BoolMat(dom=f.dom * g.dom, cod=f.cod * g.cod, rows=tuple(out))


def transpose(m: BoolMat) -> BoolMat:
    rows = [0] * m.dom
    for i in range(m.cod):
        bits = m.rows[i]
        j = 0
        while bits:
            if bits & 1:
                rows[j] |= 1 << i
            bits >>= 1
            j += 1
    return BoolMat(dom=m.cod, cod=m.dom, rows=tuple(rows))


def is_permutation(m: BoolMat) -> bool:
    if m.dom != m.cod:
        return False
    seen = 0
    for r in m.rows:
        if r == 0 or r & (r - 1):  # not exactly one bit
            return False
        if seen & r:
            return False
        seen |= r
    return True


def invert_mat(m: BoolMat) -> BoolMat | None:
    # Over the boolean semiring the two-sided invertible matrices are
    # exactly the permutation matrices, so this check is complete.
    if not is_permutation(m):
        return None
    return transpose(m)


def perm_mat(images: Sequence[int], cod: int | None = None) -> BoolMat:
    """Matrix of the map sending domain index k to codomain index images[k]."""
    n = len(images)
    cod = n if cod is None else cod
    rows = [0] * cod
    for k, i in enumerate(images):
        rows[i] |= 1 << k
    return BoolMat(dom=n, cod=cod, rows=tuple(rows))


def swap_mat(a: int, b: int) -> BoolMat:
    """The tensor-swap a*b -> b*a sending pair index (i, j) to (j, i)."""
    return perm_mat([j * a + i for i in range(a) for j in range(b)], cod=a * b)


def cup(n: int) -> BoolMat:
    """The diagonal relation 1 -> n*n picking out the pairs (i, i)."""
    rows = [0] * (n * n)
    for i in range(n):
        rows[i * n + i] = 1
    return BoolMat(dom=1, cod=n * n, rows=tuple(rows))


def cap(n: int) -> BoolMat:
    """The codiagonal relation n*n -> 1, transpose of :func:`cup`."""
    return transpose(cup(n))


def all_mats(a: int, b: int) -> Iterator[BoolMat]:
    """Every boolean matrix a -> b, in a fixed deterministic order."""
    bits = a * b
    if bits > _HOM_BITS_LIMIT:
        raise ScopeTooLarge(
            f"hom({a},{b}) has 2**{bits} matrices; enumeration is capped at 2**{_HOM_BITS_LIMIT}"
        )
    mask = (1 << a) - 1
    for code in range(1 << bits):
        rows = tuple((code >> (i * a)) & mask for i in range(b))
        yield BoolMat(dom=a, cod=b, rows=rows)


class BoolMatCategory(FinCategory):
    """Boolean matrices with declared objects 0..max_obj."""

    def __init__(self, max_obj: int):
        if max_obj > _MAX_OBJ_LIMIT:
            raise ScopeTooLarge(
                f"boolean-matrix scope is capped at objects 0..{_MAX_OBJ_LIMIT}; got {max_obj}"
            )
        if max_obj < 1:
            raise ValueError("need at least objects 0 and 1")
        self._max_obj = max_obj
        self.name = f"boolmat{max_obj}"

    @property
    def objects(self) -> Sequence[Obj]:
        return tuple(range(self._max_obj + 1))

    @property
    def unit(self) -> Obj:
        return 1

    def hom(self, a: Obj, b: Obj) -> Sequence[Mor]:
        return list(all_mats(a, b))

    def identity(self, x: Obj) -> Mor:
        return identity_mat(x)

    def compose(self, g: Mor, f: Mor) -> Mor:
        return compose_mats(g, f)

    def dom(self, f: Mor) -> Obj:
        return f.dom

    def cod(self, f: Mor) -> Obj:
        return f.cod

    def tensor_obj(self, x: Obj, y: Obj) -> Obj:
        return x * y

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        return kron(f, g)

    def mor_label(self, f: Mor) -> str:
        return f"{f.cod}x{f.dom}:{f.code():x}"

    def invert(self, f: Mor) -> Mor | None:
        return invert_mat(f)

    def mor_scope(self) -> Iterable[Mor]:
        """A generating family: identities, all small matrices (both
        dimensions at most 2) between declared objects, and the duality
        units/counits of each declared object."""
        for x in self.objects:
            yield identity_mat(x)
        for a in self.objects:
            for b in self.objects:
                if a <= 2 and b <= 2:
                    yield from all_mats(a, b)
        for n in self.objects:
            yield cup(n)
            yield cap(n)

    def scope_label(self) -> str:
        return "generators"
