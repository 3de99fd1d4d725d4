"""Independent reference implementations used only by the tests.

Nothing here imports the code under test except for plain data types, so an
agreement between an oracle and the library is evidence, not tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def cofactor_det(m):
    """Laplace expansion along the first row."""
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    total = 0
    for c in range(k):
        if m[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * m[0][c] * cofactor_det(minor)
    return total


def fraction_rank(rows):
    """Rank of a rational matrix by plain Gauss-Jordan elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rank, cols = 0, len(a[0])
    for c in range(cols):
        pivot = next((r for r in range(rank, len(a)) if a[r][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for r in range(len(a)):
            if r != rank and a[r][c] != 0:
                f = a[r][c] / a[rank][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def scipy_lower_cells(bases, heights, tol=1e-9):
    """Lower faces of the lifted point set via Qhull, as sets of point indices.

    Coplanar Qhull facets are merged by collecting every point lying on the
    facet's hyperplane, so non-simplicial faces come out whole.
    """
    import numpy as np
    from scipy.spatial import ConvexHull

    pts = np.array([list(b) + [float(h)] for b, h in zip(bases, heights)], dtype=float)
    hull = ConvexHull(pts)
    cells = set()
    for eq in hull.equations:
        normal, offset = eq[:-1], eq[-1]
        if normal[-1] >= -tol:  # upper or vertical facet
            continue
        on = frozenset(int(i) for i in np.nonzero(np.abs(pts @ normal + offset) < tol)[0])
        cells.add(on)
    return cells


def exponent_vectors(slots, budget):
    """Non-negative integer vectors of the given length with entry sum <= budget."""
    if slots == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in exponent_vectors(slots - 1, budget - first):
            yield (first,) + rest


def raw_hw_basis(n, I, J, bound):
    """HW(L_I, L_J) straight from the pair formula, using I and J exactly as given (no canonical form)."""
    full = set(range(n + 2))
    I, J = set(I), set(J)
    Ib, Jb = full - I, full - J
    Q = (I & J) | (Ib & Jb)
    Qb = full - Q
    out = set()
    for d in exponent_vectors(n + 2, bound):
        odd = {j for j in range(n + 2) if d[j] % 2}
        if odd == Qb:
            S, T = I & J, Ib & Jb
        elif odd == Q:
            S, T = I & Jb, Ib & J
        else:
            continue
        if not S or not T:
            continue
        if all(d[j] >= 2 for j in S) or all(d[j] >= 2 for j in T):
            continue
        out.add(d)
    return out


def golden_n1_basis(i, j, bound):
    """Doubled exponent vectors of HW(L_i, L_j) for the pair of pants in C*, read off the ring/bimodule presentations.

    HW(L_i, L_i) = C[z_j, z_k]/(z_j z_k) for {i, j, k} = {0, 1, 2};
    HW(L_i, L_j) = C[z_k] u_ij with u_ij = z_k^(1/2).
    """
    out = set()
    if i == j:
        a, b = sorted({0, 1, 2} - {i})
        for e in range(bound // 2 + 1):
            for var in (a, b):
                d = [0, 0, 0]
                d[var] = 2 * e
                out.add(tuple(d))
    else:
        (k,) = {0, 1, 2} - {i, j}
        for e in range(bound + 1):
            if e % 2 and e <= bound:
                d = [0, 0, 0]
                d[k] = e
                out.add(tuple(d))
    return out


def golden_n1_degree(d):
    """deg z_0 = 2, deg z_1 = deg z_2 = 0, so u_12, u_21 (= z_0^(1/2)) have degree 1."""
    return d[0]


def ext_dims_by_rank(n, S, J, max_k, max_degree):
    """dim Ext^k(R/(z_S), R/(z_J)) per total degree, by ranks of explicit multiplication matrices.

    The target module's graded piece of degree t is spanned by monomials in
    z_1..z_{n+1} of degree t divisible by neither z_J nor z_1...z_{n+1}.
    """
    full = frozenset(range(1, n + 2))
    S, J = frozenset(S), frozenset(J)

    def in_module(e):
        div = lambda U: all(e[u - 1] >= 1 for u in U)
        return not div(full) and not (J != full and div(J))

    def piece(t):
        return [e for e in product(range(t + 1), repeat=n + 1) if sum(e) == t and in_module(e)]

    def mult_matrix(U, t):
        src, dst = piece(t), piece(t + len(U))
        index = {e: r for r, e in enumerate(dst)}
        cols = []
        for e in src:
            f = tuple(x + (1 if k + 1 in U else 0) for k, x in enumerate(e))
            col = [0] * len(dst)
            if f in index:
                col[index[f]] = 1
            cols.append(col)
        return cols, len(src), len(dst)  # list of columns

    def rank_of(U, t):
        cols, ns, nd = mult_matrix(U, t)
        return fraction_rank(cols) if ns and nd else 0

    out = {}
    for k in range(max_k + 1):
        row = {}
        for t in range(max_degree + 1):
            dim_c = len(piece(t))
            if S == full:
                row[t] = dim_c if k == 0 else 0
                continue
            out_mult = S if k % 2 == 0 else full - S
            kernel = dim_c - rank_of(out_mult, t)
            image = 0
            if k > 0:
                prev = S if (k - 1) % 2 == 0 else full - S
                if t - len(prev) >= 0:
                    image = rank_of(prev, t - len(prev))
            row[t] = kernel - image
        out[k] = row
    return out


def tower_dims(in_hw, n, I, J, truncation, height=40):
    """Directed-limit dimensions under multiplication by z_0, by checking membership far up each tower.

    Keyed by parity of z_0's exponent and by the doubled total over z_1..z_{n+1}.
    """
    dims = {0: {}, 1: {}}
    for rest in exponent_vectors(n + 1, truncation):
        for i in (0, 1):
            hi = (height + i,) + rest
            hi2 = (height + 2 + i,) + rest
            survives = in_hw(I, J, hi) and in_hw(I, J, hi2)
            if survives:
                t = sum(rest)
                dims[i][t] = dims[i].get(t, 0) + 1
    return dims
