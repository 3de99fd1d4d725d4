from itertools import permutations

import pytest

from oracles import golden_n1_basis, golden_n1_degree, raw_hw_basis, tower_dims
from tropmirror.pants import (
    ZERO,
    HalfMonomial,
    LabelError,
    MalformedGeneratorError,
    PartitionError,
    Triangle,
    all_labels,
    canonical_label,
    check_triangle,
    enumerate_triangles,
    hw_basis,
    hw_degree_slice,
    in_hw,
    localized_hw_dims,
    mu2,
    pair_decomposition,
    permute_label,
    permute_monomial,
    unit,
    universe,
)


def H(*d):
    return HalfMonomial(tuple(d))


def doubled_set(basis):
    return {m.doubled for m in basis}


# ---- labels ---------------------------------------------------------------------------------

def test_canonical_label_examples():
    assert canonical_label({0, 3}, 2).members == {1, 2}
    assert canonical_label({1, 2, 3}, 2).members == {0}
    assert canonical_label({1}, 2).members == {1}
    assert canonical_label({0}, 2).members == {0}


@pytest.mark.parametrize("bad", [set(), {0, 1, 2, 3}, {4}, {-1}])
def test_canonical_label_rejects(bad):
    with pytest.raises(LabelError):
        canonical_label(bad, 2)


@pytest.mark.parametrize("n,count", [(1, 3), (2, 7), (3, 15), (4, 31)])
def test_label_counts(n, count):
    labels = all_labels(n)
    assert len(labels) == count == 2 ** (n + 1) - 1
    assert all(0 not in L.members or L.members == {0} for L in labels)


def test_any_representative_is_accepted():
    n = 2
    for L in all_labels(n):
        other = universe(n) - L.members
        assert canonical_label(other, n) == L
        assert pair_decomposition(other, L, n) == pair_decomposition(L, L, n)


# ---- pair decomposition ---------------------------------------------------------------------------

def test_decomposition_n1_distinct():
    dec = pair_decomposition({1}, {2}, 1)
    assert dec.Q == {0} and dec.Qbar == {1, 2}
    assert not dec.summand_for(frozenset({1, 2})).live
    live = dec.live_summands
    assert len(live) == 1 and live[0].parity == {0}
    assert set(live[0].ideals) == {frozenset({1}), frozenset({2})}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_decomposition_diagonal(n):
    for L in all_labels(n):
        dec = pair_decomposition(L, L, n)
        assert dec.Q == universe(n) and dec.Qbar == frozenset()
        (live,) = dec.live_summands
        assert live.parity == frozenset()
        assert set(live.ideals) == {L.members, universe(n) - L.members}


def test_decomposition_n2():
    dec = pair_decomposition({1}, {2}, 2)
    assert dec.Q == {0, 3} and dec.Qbar == {1, 2}


# ---- HW bases -----------------------------------------------------------------------------------

def test_hw_basis_examples():
    basis, _ = hw_basis({1}, {1}, 4, 1)
    assert doubled_set(basis) == {(0, 0, 0), (2, 0, 0), (4, 0, 0), (0, 0, 2), (0, 0, 4)}
    assert sorted(m.degree for m in basis) == [0, 0, 0, 2, 4]

    basis, _ = hw_basis({1}, {2}, 5, 1)
    assert [m.doubled for m in basis] == [(1, 0, 0), (3, 0, 0), (5, 0, 0)]
    assert [m.degree for m in basis] == [1, 3, 5]


def test_hw_basis_n2_degree_zero_slice():
    def slice0(bound):
        basis, _ = hw_basis({1}, {1}, bound, 2)
        return {m.doubled for m in basis if m.degree == 0}

    # z2, z3 and their quadratic products need doubled total 4
    assert slice0(4) == {(0, 0, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2), (0, 0, 4, 0), (0, 0, 2, 2), (0, 0, 0, 4)}
    assert slice0(2) == {(0, 0, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)}


def test_graded_dims_match_basis():
    basis, dims = hw_basis({1}, {2, 3}, 9, 2)
    assert dims.total() == len(basis)
    assert dims.bound == 9
    for m in basis:
        assert dims.get(m.degree, m.total) >= 1
    assert all(t <= 9 for row in dims.dims.values() for t in row)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_agrees_with_raw_formula_and_complements(n):
    bound = 8
    full = universe(n)
    for I in all_labels(n):
        for J in all_labels(n):
            got = doubled_set(hw_basis(I, J, bound, n)[0])
            Ib, Jb = full - I.members, full - J.members
            assert got == raw_hw_basis(n, I.members, J.members, bound)
            assert got == raw_hw_basis(n, Ib, J.members, bound)
            assert got == raw_hw_basis(n, I.members, Jb, bound)
            assert got == raw_hw_basis(n, Ib, Jb, bound)


def test_degree_slice_uses_integer_part_totals():
    sl = hw_degree_slice({1}, {2}, 1, 3, 1)
    assert [m.doubled for m in sl] == [(1, 0, 0)]
    assert hw_degree_slice({1}, {2}, 2, 3, 1) == []


# ---- golden n = 1 tables ---------------------------------------------------------------------------

N1 = [0, 1, 2]


@pytest.mark.parametrize("i", N1)
@pytest.mark.parametrize("j", N1)
def test_golden_n1_spaces(i, j):
    basis, _ = hw_basis({i}, {j}, 10, 1)
    assert doubled_set(basis) == golden_n1_basis(i, j, 10)
    for m in basis:
        assert m.degree == golden_n1_degree(m.doubled)


def test_golden_n1_generator_degrees():
    u = {(i, j): min(hw_basis({i}, {j}, 10, 1)[0]) for i in N1 for j in N1 if i != j}
    assert u[1, 2].degree == u[2, 1].degree == 1
    assert all(u[k].degree == 0 for k in u if set(k) != {1, 2})
    assert H(2, 0, 0).degree == 2


def test_golden_n1_products():
    u = {(i, j): H(*[1 if k not in (i, j) else 0 for k in range(3)]) for i in N1 for j in N1 if i != j}
    for i, j, k in permutations(N1):
        z_k = H(*[2 if s == k else 0 for s in range(3)])
        assert mu2({i}, {j}, {i}, u[i, j], u[j, i], 1) == z_k
        assert mu2({i}, {j}, {k}, u[i, j], u[j, k], 1) is ZERO


def test_golden_n1_full_product_table():
    bound = 10
    spaces = {(i, j): sorted(golden_n1_basis(i, j, bound)) for i in N1 for j in N1}
    checked = 0
    for i in N1:
        for j in N1:
            for k in N1:
                for a in spaces[i, j]:
                    for b in spaces[j, k]:
                        s = tuple(x + y for x, y in zip(a, b))
                        if sum(s) > bound:
                            continue
                        expected = H(*s) if s in golden_n1_basis(i, k, bound) else ZERO
                        assert mu2({i}, {j}, {k}, a, b, 1) == expected
                        checked += 1
    assert checked > 300


# ---- products --------------------------------------------------------------------------------

def test_mu2_examples_n2():
    I = {1}
    assert mu2(I, I, I, H(0, 0, 2, 0), H(0, 0, 0, 2), 2) == H(0, 0, 2, 2)
    assert mu2(I, I, I, H(2, 0, 2, 0), H(0, 0, 0, 2), 2) is ZERO


def test_mu2_rejects_malformed_inputs():
    with pytest.raises(MalformedGeneratorError):
        mu2({1}, {2}, {1}, H(0, 1, 0), H(1, 0, 0), 1)  # wrong parity for HW(L1, L2)
    with pytest.raises(MalformedGeneratorError):
        mu2({1}, {1}, {1}, H(0, 0), H(0, 0, 0), 1)
    with pytest.raises(MalformedGeneratorError):
        H(-1, 0, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unit_law(n):
    e = unit(n)
    for I in all_labels(n):
        assert in_hw(I, I, e, n)
        for J in all_labels(n):
            for m in hw_basis(I, J, 6, n)[0]:
                assert mu2(I, I, J, e, m, n) == m
                assert mu2(I, J, J, m, e, n) == m


@pytest.mark.parametrize("n", [1, 2])
def test_associativity(n):
    bound = 8
    labels = all_labels(n)
    basis = {(I, J): hw_basis(I, J, bound, n)[0] for I in labels for J in labels}
    checked = nonzero = 0
    for I in labels:
        for J in labels:
            for K in labels:
                for L in labels:
                    for a in basis[I, J]:
                        for b in basis[J, K]:
                            if a.total + b.total > bound:
                                break
                            ab = mu2(I, J, K, a, b, n)
                            for c in basis[K, L]:
                                if a.total + b.total + c.total > bound:
                                    break
                                bc = mu2(J, K, L, b, c, n)
                                left = ZERO if ab is ZERO else mu2(I, K, L, ab, c, n)
                                right = ZERO if bc is ZERO else mu2(I, J, L, a, bc, n)
                                assert left == right, (I, J, K, L, a, b, c)
                                checked += 1
                                nonzero += left is not ZERO
    assert checked > 0 and 0 < nonzero < checked


@pytest.mark.parametrize("n", [1, 2])
def test_class_additivity(n):
    labels = all_labels(n)
    for I in labels:
        for J in labels:
            for K in labels:
                for a in hw_basis(I, J, 4, n)[0]:
                    for b in hw_basis(J, K, 4, n)[0]:
                        p = mu2(I, J, K, a, b, n)
                        if p is not ZERO:
                            assert p.klass == tuple(x + y for x, y in zip(a.klass, b.klass))


def _perms(n, move_zero):
    idx = list(range(0 if move_zero else 1, n + 2))
    for p in permutations(idx):
        sigma = dict(zip(idx, p))
        if move_zero and sigma[0] == 0:
            continue
        yield sigma


@pytest.mark.parametrize("n", [1, 2])
def test_symmetry_fixing_zero_preserves_degrees(n):
    bound = 6
    labels = all_labels(n)
    for sigma in _perms(n, move_zero=False):
        for I in labels:
            for J in labels:
                sI, sJ = permute_label(I, sigma), permute_label(J, sigma)
                mapped = sorted(permute_monomial(m, sigma) for m in hw_basis(I, J, bound, n)[0])
                target = sorted(hw_basis(sI, sJ, bound, n)[0])
                assert mapped == target
                for m in hw_basis(I, J, bound, n)[0]:
                    assert permute_monomial(m, sigma).degree == m.degree
        _check_equivariance(n, sigma, 4)


@pytest.mark.parametrize("n", [1, 2])
def test_symmetry_moving_zero_is_a_bijection(n):
    bound = 6
    labels = all_labels(n)
    for sigma in _perms(n, move_zero=True):
        for I in labels:
            for J in labels:
                mapped = {permute_monomial(m, sigma) for m in hw_basis(I, J, bound, n)[0]}
                target = set(hw_basis(permute_label(I, sigma), permute_label(J, sigma), bound, n)[0])
                assert mapped == target
        _check_equivariance(n, sigma, 4)


def _check_equivariance(n, sigma, bound):
    labels = all_labels(n)
    s = lambda L: permute_label(L, sigma)
    for I in labels:
        for J in labels:
            for K in labels:
                for a in hw_basis(I, J, bound, n)[0]:
                    for b in hw_basis(J, K, bound, n)[0]:
                        p = mu2(I, J, K, a, b, n)
                        q = mu2(s(I), s(J), s(K), permute_monomial(a, sigma), permute_monomial(b, sigma), n)
                        assert q == (ZERO if p is ZERO else permute_monomial(p, sigma))


# ---- localization -------------------------------------------------------------------------------

def test_localization_examples_n1():
    d = localized_hw_dims({1}, {1}, 10, 1).dims
    assert sum(d[0].values()) == 1 and sum(d[1].values()) == 0
    d = localized_hw_dims({1}, {2}, 10, 1).dims
    assert sum(d[1].values()) == 1 and sum(d[0].values()) == 0
    d = localized_hw_dims({0}, {0}, 10, 1).dims
    assert d == {0: {}, 1: {}}


def test_localization_parity_filter():
    d = localized_hw_dims({1}, {2}, 10, 1, parity=1)
    assert list(d.dims) == [1] and sum(d.dims[1].values()) == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_localization_matches_tower_oracle(n):
    truncation = 8 if n < 3 else 6
    for I in all_labels(n):
        for J in all_labels(n):
            got = localized_hw_dims(I, J, truncation, n).dims
            expected = tower_dims(lambda A, B, d: in_hw(A, B, d, n), n, I, J, truncation)
            assert got == expected, (I, J)


# ---- triangles ----------------------------------------------------------------------------------

@pytest.mark.parametrize("n,count", [(1, 2), (2, 12), (3, 50)])
def test_triangle_counts(n, count):
    ts = enumerate_triangles(n)
    assert len(ts) == count == 3 ** (n + 1) - 2 * 2 ** (n + 1) + 1
    assert len(set(ts)) == count


def test_n1_triangles_are_the_two_expected():
    got = {(t.I, t.J, t.K) for t in enumerate_triangles(1)}
    assert got == {(frozenset({1}), frozenset({2}), frozenset({0})), (frozenset({2}), frozenset({1}), frozenset({0}))}


def test_triangle_check_n1():
    t = Triangle(1, frozenset({1}), frozenset({2}), frozenset({0}))
    c = check_triangle(t)
    assert c.passed
    assert c.mu3_target == unit(1) and c.mu3_target_degree == 0 and c.mu3_target_dim == 1
    assert t.u_J == H(0, 0, 1) and t.u_I == H(0, 1, 0) and t.u_K == H(1, 0, 0)


def test_triangle_check_n2():
    assert check_triangle(Triangle(2, frozenset({1}), frozenset({2}), frozenset({0, 3}))).passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_every_triangle_passes(n):
    for t in enumerate_triangles(n):
        c = check_triangle(t)
        assert c.passed, (str(t), c.failures)
        assert all(c.compositions_zero.values()) and len(c.compositions_zero) == 3


def test_degenerate_partition_is_rejected():
    with pytest.raises(PartitionError):
        check_triangle(Triangle(1, frozenset({1}), frozenset({1}), frozenset({0, 2})))
    with pytest.raises(PartitionError):
        check_triangle(Triangle(1, frozenset({0}), frozenset({1}), frozenset({2})))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_round_trip_products_do_not_vanish(n):
    # the vanishing compositions above are not an artefact of mu2 returning zero too often
    for t in enumerate_triangles(n):
        I, K = canonical_label(t.I, n), canonical_label(t.K, n)
        back = t.u_J
        assert in_hw(K, I, back, n)
        z_J = HalfMonomial(tuple(2 if j in t.J else 0 for j in range(n + 2)))
        assert mu2(I, K, I, t.u_J, back, n) == z_J
