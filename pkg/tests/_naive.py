"""Independent reference implementations used as oracles by the tests.

Everything here works on plain lists of 0/1 ints (grid[i][j] with i indexing
the codomain and j the domain) and is written from the definitions, not by
calling the package.  Tests convert package values to grids, recompute with
these functions, and compare.
"""

from __future__ import annotations


def to_grid(m) -> list[list[int]]:
    """Extract the 0/1 grid of a packed Boolean matrix."""
    return [[(m.rows[i] >> j) & 1 for j in range(m.dom)] for i in range(m.cod)]


def grid_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def grid_product(
    g: list[list[int]], f: list[list[int]], *, a: int, b: int
) -> list[list[int]]:
    """Boolean matrix product g.f for f: a -> b and g: b -> c.  The inner
    dimensions are explicit because a grid with zero rows has no way to
    carry its column count."""
    c = len(g)
    return [
        [int(any(g[i][k] and f[k][j] for k in range(b))) for j in range(a)]
        for i in range(c)
    ]


def grid_kron(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Kronecker product with row-major index pairing."""
    ca, cb = len(a), len(b)
    da = len(a[0]) if ca else 0
    db = len(b[0]) if cb else 0
    out = []
    for i1 in range(ca):
        for i2 in range(cb):
            out.append(
                [a[i1][j1] & b[i2][j2] for j1 in range(da) for j2 in range(db)]
            )
    return out


def grid_transpose(g: list[list[int]]) -> list[list[int]]:
    c = len(g)
    d = len(g[0]) if c else 0
    return [[g[i][j] for i in range(c)] for j in range(d)]


def chain_dual_exists(x: int) -> bool:
    """In the chain 0 <= 1 <= ... <= n with tensor min(a+b, n) and unit 0,
    an object x has a (left or right) dual d exactly when both snake
    boundary maps exist: 0 <= x (x) d always holds, while d (x) x <= 0
    forces d + x = 0.  So only the unit is dualizable."""
    return x == 0


def cyclic_dual(n: int, g: int) -> int:
    """In a group viewed as a discrete monoidal category, the dual of g is
    its inverse."""
    return (n - g) % n
