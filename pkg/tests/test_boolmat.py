"""Boolean matrices against a naive list-of-lists reference implementation."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobcat import (
    BoolMatCategory,
    all_mats,
    cap,
    compose_mats,
    cup,
    identity_mat,
    invert_mat,
    is_permutation,
    kron,
    mat_from_entries,
    perm_mat,
    swap_mat,
)
from frobcat.boolmat import transpose
from frobcat.errors import TypeMismatch

from _naive import grid_identity, grid_kron, grid_product, grid_transpose, to_grid


@st.composite
def mats(draw, max_dim: int = 3):
    """Strategy: a Boolean matrix with dimensions up to max_dim (0 allowed)."""
    dom = draw(st.integers(min_value=0, max_value=max_dim))
    cod = draw(st.integers(min_value=0, max_value=max_dim))
    grid = [
        [draw(st.integers(min_value=0, max_value=1)) for _ in range(dom)]
        for _ in range(cod)
    ]
    return mat_from_entries(grid, dom=dom)


def test_grid_round_trip():
    grid = [[1, 0, 1], [0, 1, 1]]
    m = mat_from_entries(grid)
    assert m.dom == 3 and m.cod == 2
    assert to_grid(m) == grid


def test_compose_matches_naive_product_exhaustively():
    for f in all_mats(2, 2):
        for g in all_mats(2, 2):
            got = compose_mats(g, f)
            assert to_grid(got) == grid_product(to_grid(g), to_grid(f), a=f.dom, b=f.cod)


def test_compose_rectangular_matches_naive_product():
    for f in all_mats(2, 3):
        for g in all_mats(3, 2):
            got = compose_mats(g, f)
            assert got.dom == 2 and got.cod == 2
            assert to_grid(got) == grid_product(to_grid(g), to_grid(f), a=f.dom, b=f.cod)


def test_compose_rejects_mismatched_shapes():
    f = identity_mat(2)
    g = identity_mat(3)
    with pytest.raises(TypeMismatch):
        compose_mats(g, f)


@settings(max_examples=60, deadline=None)
@given(f=mats(), g=mats())
def test_compose_matches_naive_product_random(f, g):
    if f.cod != g.dom:
        with pytest.raises(TypeMismatch):
            compose_mats(g, f)
        return
    assert to_grid(compose_mats(g, f)) == grid_product(to_grid(g), to_grid(f), a=f.dom, b=f.cod)


@settings(max_examples=60, deadline=None)
@given(f=mats(), g=mats())
def test_kron_matches_naive_kronecker(f, g):
    got = kron(f, g)
    assert got.dom == f.dom * g.dom
    assert got.cod == f.cod * g.cod
    assert to_grid(got) == grid_kron(to_grid(f), to_grid(g))


def test_kron_interchange_with_composition():
    # (g1.f1) (x) (g2.f2) == (g1 (x) g2).(f1 (x) f2), spot-checked on a
    # deterministic slice of the 2x2 matrices.
    pool = list(all_mats(2, 2))[:6]
    for f1 in pool:
        for g1 in pool:
            for f2 in pool[:3]:
                for g2 in pool[:3]:
                    lhs = kron(compose_mats(g1, f1), compose_mats(g2, f2))
                    rhs = compose_mats(kron(g1, g2), kron(f1, f2))
                    assert lhs == rhs


def test_transpose_matches_entrywise_oracle():
    for a, b in ((2, 2), (2, 3), (3, 2), (1, 3), (0, 2)):
        for m in all_mats(a, b):
            assert to_grid(transpose(m)) == grid_transpose(to_grid(m))


def test_transpose_is_involutive():
    for m in all_mats(2, 3):
        assert transpose(transpose(m)) == m


def test_identity_and_permutations():
    assert to_grid(identity_mat(3)) == grid_identity(3)
    assert is_permutation(identity_mat(3))
    p = perm_mat([1, 0])
    assert to_grid(p) == [[0, 1], [1, 0]]
    assert is_permutation(p)
    assert not is_permutation(mat_from_entries([[1, 1], [0, 1]]))
    assert not is_permutation(mat_from_entries([[1, 0], [0, 0]]))


def test_invert_permutation_is_transpose():
    for images in ([0, 1, 2], [1, 0, 2], [2, 0, 1], [1, 2, 0]):
        p = perm_mat(images)
        inv = invert_mat(p)
        assert inv == transpose(p)
        assert compose_mats(inv, p) == identity_mat(3)
        assert compose_mats(p, inv) == identity_mat(3)


def test_invert_non_invertible_is_none():
    assert invert_mat(mat_from_entries([[1, 1], [0, 1]])) is None
    assert invert_mat(mat_from_entries([[1, 0], [0, 0]])) is None


def test_swap_reorders_basis_pairs():
    # swap(a, b) sends basis (i, j) of a.b to (j, i) of b.a; at (2, 2) that
    # is the middle transposition, and any factor of size 1 gives identity.
    assert to_grid(swap_mat(2, 2)) == [
        [1, 0, 0, 0],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
    ]
    assert swap_mat(1, 2) == identity_mat(2)
    assert swap_mat(2, 1) == identity_mat(2)
    assert compose_mats(swap_mat(2, 3), swap_mat(3, 2)) == identity_mat(6)


def test_cup_cap_are_the_diagonal():
    # cup(n): 1 -> n.n picks out the diagonal pairs (i, i); cap is its
    # entrywise transpose.
    assert to_grid(cup(2)) == [[1], [0], [0], [1]]
    assert to_grid(cap(2)) == [[1, 0, 0, 1]]
    assert cap(3) == transpose(cup(3))


def test_cup_cap_satisfy_snakes():
    # (cap (x) 1).(1 (x) cup) == id and (1 (x) cap).(cup (x) 1) == id.
    for n in (1, 2, 3):
        one = identity_mat(n)
        left = compose_mats(kron(cap(n), one), kron(one, cup(n)))
        right = compose_mats(kron(one, cap(n)), kron(cup(n), one))
        assert left == identity_mat(n)
        assert right == identity_mat(n)


def test_all_mats_counts_and_uniqueness():
    ms = list(all_mats(2, 2))
    assert len(ms) == 16 == len(set(ms))
    ms = list(all_mats(2, 3))
    assert len(ms) == 64 == len(set(ms))
    assert all(m.dom == 2 and m.cod == 3 for m in ms)


def test_category_tensor_and_unit():
    c = BoolMatCategory(2)
    v = c.view()
    assert list(v.objects) == [0, 1, 2]
    assert v.unit == 1
    assert v.tensor_obj(2, 2) == 4
    f = mat_from_entries([[1, 1], [0, 1]])
    assert v.tensor_mor(f, identity_mat(2)) == kron(f, identity_mat(2))
    assert v.identity(2) == identity_mat(2)
    assert v.compose(f, identity_mat(2)) == f


def test_category_labels_are_reversible():
    c = BoolMatCategory(2)
    seen = set()
    for m in all_mats(2, 2):
        label = c.mor_label(m)
        assert label not in seen
        seen.add(label)
        cod_dom, code = label.split(":")
        assert cod_dom == "2x2"
        assert int(code, 16) == m.code()
