"""Combinatorial wrapped Floer cohomology of the n-dimensional pair of pants.

Objects are the components L_I of the real locus, labelled by proper
non-empty subsets I of {0, ..., n+1} up to complement.  A basis element of
HW*(L_I, L_J) is a monomial in z_0..z_{n+1} with half-integer exponents; we
store it by its *doubled* exponent vector ``d`` (so d_j = 2 k_j), which keeps
everything integral.  The odd entries of ``d`` pick out which of the two
summands of HW*(L_I, L_J) the element lives in, and its degree is d_0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence


class LabelError(ValueError):
    pass


class MalformedGeneratorError(ValueError):
    pass


class PartitionError(ValueError):
    pass


def universe(n: int) -> frozenset[int]:
    return frozenset(range(n + 2))


@dataclass(frozen=True, order=True)
class PantsLabel:
    """Canonical label of L_I in Pi_n (use :func:`canonical_label` to build one)."""

    n: int
    members: frozenset[int]

    @property
    def complement(self) -> frozenset[int]:
        return universe(self.n) - self.members

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __str__(self):
        return "L{" + ",".join(map(str, self.sorted())) + "}"


def canonical_label(members: Iterable[int], n: int) -> PantsLabel:
    """Representative avoiding 0, except that {1..n+1} ~ {0} is stored as {0}."""
    if isinstance(members, PantsLabel):
        if members.n != n:
            raise LabelError(f"label for Pi_{members.n} used in Pi_{n}")
        return members
    s = frozenset(int(m) for m in members)
    full = universe(n)
    if not s:
        raise LabelError("label must be non-empty")
    if not s <= full:
        raise LabelError(f"label {sorted(s)} not inside {{0..{n + 1}}}")
    if s == full:
        raise LabelError("label must be a proper subset")
    if 0 in s:
        s = full - s
    if s == full - {0}:
        s = frozenset({0})
    return PantsLabel(n, s)


def all_labels(n: int) -> list[PantsLabel]:
    """The 2^(n+1) - 1 canonical labels, sorted by size then members."""
    out = set()
    for bits in range(1, 2 ** (n + 2) - 1):
        out.add(canonical_label([j for j in range(n + 2) if bits >> j & 1], n))
    return sorted(out, key=lambda L: (len(L.members), L.sorted()))


def _label(x, n) -> PantsLabel:
    return x if isinstance(x, PantsLabel) else canonical_label(x, n)


@dataclass(frozen=True)
class Summand:
    parity: frozenset[int]  # coordinates carrying half-integer exponents
    ideals: tuple[frozenset[int], frozenset[int]]  # quotient by (z_S, z_T)

    @property
    def live(self) -> bool:
        # z_emptyset = 1 kills the whole quotient
        return all(self.ideals)


@dataclass(frozen=True)
class PairDecomposition:
    n: int
    Q: frozenset[int]
    Qbar: frozenset[int]
    # summand with parity Qbar (ideals I&J, ~I&~J), then parity Q (ideals I&~J, ~I&J)
    summands: tuple[Summand, Summand]

    @property
    def live_summands(self) -> list[Summand]:
        return [s for s in self.summands if s.live]

    def summand_for(self, parity: frozenset[int]) -> Optional[Summand]:
        for s in self.summands:
            if s.parity == parity:
                return s
        return None


@lru_cache(maxsize=None)
def _decompose(n: int, I: frozenset[int], J: frozenset[int]) -> PairDecomposition:
    full = universe(n)
    Ib, Jb = full - I, full - J
    Q = (I & J) | (Ib & Jb)
    Qbar = (I & Jb) | (Ib & J)
    return PairDecomposition(
        n, Q, Qbar,
        (Summand(Qbar, (I & J, Ib & Jb)), Summand(Q, (I & Jb, Ib & J))),
    )


def pair_decomposition(I, J, n: Optional[int] = None) -> PairDecomposition:
    n = n if n is not None else _infer_n(I, J)
    I, J = _label(I, n), _label(J, n)
    return _decompose(n, I.members, J.members)


def _infer_n(*labels) -> int:
    ns = {L.n for L in labels if isinstance(L, PantsLabel)}
    if len(ns) != 1:
        raise LabelError("pass n explicitly or use PantsLabel arguments of one dimension")
    return ns.pop()


@dataclass(frozen=True, order=True)
class HalfMonomial:
    """prod z_j^(doubled_j / 2)."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.doubled)
        if any(x < 0 for x in d):
            raise MalformedGeneratorError(f"negative exponent in {d}")
        object.__setattr__(self, "doubled", d)

    @property
    def degree(self) -> int:
        return self.doubled[0]

    @property
    def klass(self) -> tuple[Fraction, ...]:
        """The class in (1/2 Z)^(n+2): exponents themselves."""
        return tuple(Fraction(x, 2) for x in self.doubled)

    @property
    def parity(self) -> frozenset[int]:
        return frozenset(j for j, x in enumerate(self.doubled) if x % 2)

    @property
    def total(self) -> int:
        return sum(self.doubled)

    def __str__(self):
        from .notation import format_monomial
        return format_monomial(self)


ZERO = None  # the zero morphism; mu2 returns this when a product vanishes


def _member(d: Sequence[int], summand: Summand) -> bool:
    for U in summand.ideals:
        if all(d[j] >= 2 for j in U):
            return False
    return True


def in_hw(I, J, m, n: Optional[int] = None) -> bool:
    """Is ``m`` a basis element of HW*(L_I, L_J)?"""
    d = m.doubled if isinstance(m, HalfMonomial) else tuple(m)
    n = n if n is not None else len(d) - 2
    dec = pair_decomposition(I, J, n)
    s = dec.summand_for(frozenset(j for j, x in enumerate(d) if x % 2))
    return s is not None and s.live and _member(d, s)


@dataclass
class GradedDims:
    """dims[cohomological degree][internal total doubled degree] -> dimension."""

    dims: dict[int, dict[int, int]]
    bound: int

    def get(self, degree: int, internal: int) -> int:
        return self.dims.get(degree, {}).get(internal, 0)

    def total(self) -> int:
        return sum(sum(v.values()) for v in self.dims.values())

    def series(self, degree: int) -> list[int]:
        row = self.dims.get(degree, {})
        return [row.get(t, 0) for t in range(self.bound + 1)]


def _exponent_vectors(slots: int, budget: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of length ``slots`` with sum <= budget."""
    if slots == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _exponent_vectors(slots - 1, budget - first):
            yield (first,) + rest


def _summand_elements(n: int, summand: Summand, bound: int) -> Iterator[tuple[int, ...]]:
    par = [1 if j in summand.parity else 0 for j in range(n + 2)]
    budget = bound - sum(par)
    if budget < 0:
        return
    for e in _exponent_vectors(n + 2, budget // 2):
        d = tuple(2 * x + p for x, p in zip(e, par))
        if _member(d, summand):
            yield d


def hw_basis(I, J, max_total_doubled_degree: int, n: Optional[int] = None):
    """Basis of HW*(L_I, L_J) with total doubled degree <= bound, plus its graded dims."""
    n = n if n is not None else _infer_n(I, J)
    dec = pair_decomposition(I, J, n)
    elems = []
    for s in dec.live_summands:
        elems.extend(_summand_elements(n, s, max_total_doubled_degree))
    elems.sort(key=lambda d: (sum(d), d))
    dims: dict[int, dict[int, int]] = {}
    for d in elems:
        row = dims.setdefault(d[0], {})
        row[sum(d)] = row.get(sum(d), 0) + 1
    return [HalfMonomial(d) for d in elems], GradedDims(dims, max_total_doubled_degree)


def hw_degree_slice(I, J, degree: int, max_int_total: int, n: Optional[int] = None) -> list[HalfMonomial]:
    """Basis elements of cohomological degree ``degree`` whose integer-part
    exponent sum over z_1..z_{n+1} is at most ``max_int_total``."""
    n = n if n is not None else _infer_n(I, J)
    dec = pair_decomposition(I, J, n)
    out = []
    for s in dec.live_summands:
        if (0 in s.parity) != (degree % 2 == 1):
            continue
        par = [1 if j in s.parity else 0 for j in range(1, n + 2)]
        for e in _exponent_vectors(n + 1, max_int_total):
            d = (degree,) + tuple(2 * x + p for x, p in zip(e, par))
            if _member(d, s):
                out.append(HalfMonomial(d))
    out.sort(key=lambda m: (m.total, m.doubled))
    return out


def mu2(I, J, K, m1, m2, n: Optional[int] = None) -> Optional[HalfMonomial]:
    """Product of m1 in HW(L_I, L_J) and m2 in HW(L_J, L_K), landing in HW(L_I, L_K).

    The output is the monomial with summed exponents when that is a basis
    element of HW(L_I, L_K), and ``ZERO`` otherwise.
    """
    d1 = m1.doubled if isinstance(m1, HalfMonomial) else tuple(m1)
    d2 = m2.doubled if isinstance(m2, HalfMonomial) else tuple(m2)
    n = n if n is not None else len(d1) - 2
    if len(d1) != n + 2 or len(d2) != n + 2:
        raise MalformedGeneratorError("generator has the wrong number of slots")
    if not in_hw(I, J, d1, n):
        raise MalformedGeneratorError(f"{d1} is not a generator of HW({_label(I, n)}, {_label(J, n)})")
    if not in_hw(J, K, d2, n):
        raise MalformedGeneratorError(f"{d2} is not a generator of HW({_label(J, n)}, {_label(K, n)})")
    d = tuple(a + b for a, b in zip(d1, d2))
    return HalfMonomial(d) if in_hw(I, K, d, n) else ZERO


def unit(n: int) -> HalfMonomial:
    return HalfMonomial((0,) * (n + 2))


def localized_hw_dims(I, J, truncation: int, n: Optional[int] = None, parity: Optional[int] = None) -> GradedDims:
    """Dimensions of the colimit of HW(L_I, L_J) under multiplication by z_0.

    A z_0-tower survives when, for each ideal (z_U) of its summand, some
    coordinate of U other than 0 keeps exponent < 1.  Each surviving tower is
    counted once, in parity class d_0 mod 2, keyed by the doubled exponent sum
    over z_1..z_{n+1} (at most ``truncation``).
    """
    n = n if n is not None else _infer_n(I, J)
    dec = pair_decomposition(I, J, n)
    dims: dict[int, dict[int, int]] = {0: {}, 1: {}}
    for s in dec.live_summands:
        i = 1 if 0 in s.parity else 0
        if parity is not None and i != parity:
            continue
        reduced = [U - {0} for U in s.ideals]
        par = [1 if j in s.parity else 0 for j in range(1, n + 2)]
        budget = truncation - sum(par)
        if budget < 0:
            continue
        for e in _exponent_vectors(n + 1, budget // 2):
            d = (None,) + tuple(2 * x + p for x, p in zip(e, par))
            if all(any(d[j] <= 1 for j in U) for U in reduced):
                t = sum(d[1:])
                dims[i][t] = dims[i].get(t, 0) + 1
    if parity is not None:
        dims = {parity: dims[parity]}
    return GradedDims(dims, truncation)


@dataclass(frozen=True)
class Triangle:
    n: int
    I: frozenset[int]
    J: frozenset[int]
    K: frozenset[int]

    def _u(self, X) -> HalfMonomial:
        return HalfMonomial(tuple(1 if j in X else 0 for j in range(self.n + 2)))

    @property
    def u_J(self) -> HalfMonomial:  # L_I -> L_K
        return self._u(self.J)

    @property
    def u_I(self) -> HalfMonomial:  # L_K -> L_J
        return self._u(self.I)

    @property
    def u_K(self) -> HalfMonomial:  # L_J -> L_I[1]
        return self._u(self.K)

    def __str__(self):
        f = lambda X: "{" + ",".join(map(str, sorted(X))) + "}"
        return f"L{f(self.I)} -> L{f(self.K)} -> L{f(self.J)} -> L{f(self.I)}[1]"


def enumerate_triangles(n: int) -> list[Triangle]:
    """Ordered partitions {0..n+1} = I u J u K into non-empty parts with 0 in K."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for assign in product(range(3), repeat=n + 1):
        parts = [set(), set(), {0}]
        for j, a in zip(range(1, n + 2), assign):
            parts[a].add(j)
        if parts[0] and parts[1]:
            out.append(Triangle(n, frozenset(parts[0]), frozenset(parts[1]), frozenset(parts[2])))
    return out


@dataclass
class TriangleCheck:
    triangle: Triangle
    morphisms_ok: dict[str, bool]
    compositions_zero: dict[str, bool]
    mu3_target: Optional[HalfMonomial]
    mu3_target_degree: Optional[int]
    mu3_target_dim: int
    mu3_is_identity: bool
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_triangle(t: Triangle) -> TriangleCheck:
    n = t.n
    full = universe(n)
    parts = (t.I, t.J, t.K)
    if any(not p for p in parts) or (t.I & t.J) or (t.I & t.K) or (t.J & t.K) or (t.I | t.J | t.K) != full:
        raise PartitionError(f"({sorted(t.I)}, {sorted(t.J)}, {sorted(t.K)}) is not a partition of {{0..{n + 1}}}")
    if 0 not in t.K:
        raise PartitionError("0 must lie in the third part")

    I, J, K = (canonical_label(p, n) for p in parts)
    failures = []
    morph = {
        "u_J in HW(L_I,L_K)": in_hw(I, K, t.u_J, n),
        "u_I in HW(L_K,L_J)": in_hw(K, J, t.u_I, n),
        "u_K in HW(L_J,L_I)": in_hw(J, I, t.u_K, n),
    }
    failures += [f"missing morphism: {k}" for k, ok in morph.items() if not ok]

    comps = {}
    if all(morph.values()):
        comps["u_I*u_J"] = mu2(I, K, J, t.u_J, t.u_I, n) is ZERO
        comps["u_K*u_I"] = mu2(K, J, I, t.u_I, t.u_K, n) is ZERO
        comps["u_J*u_K"] = mu2(J, I, K, t.u_K, t.u_J, n) is ZERO
        failures += [f"nonzero composition {k}" for k, ok in comps.items() if not ok]

    # mu^3 output class = sum of input classes - (1/2, ..., 1/2)
    summed = [a + b + c - 1 for a, b, c in zip(t.u_J.doubled, t.u_I.doubled, t.u_K.doubled)]
    target = HalfMonomial(summed) if min(summed) >= 0 else None
    target_dim = 0
    degree = None
    is_id = False
    if target is None or not in_hw(I, I, target, n):
        failures.append("mu3 target class has no generator in HW(L_I,L_I)")
    else:
        degree = target.degree
        _, dims = hw_basis(I, I, target.total, n)
        target_dim = dims.get(degree, target.total)
        is_id = target == unit(n)
        if not is_id:
            failures.append(f"mu3 target {target.doubled} is not the identity class")
        if degree != 0:
            failures.append(f"mu3 target has degree {degree}")
        if target_dim != 1:
            failures.append(f"mu3 target graded piece has dimension {target_dim}")
    return TriangleCheck(t, morph, comps, target, degree, target_dim, is_id, failures)


def permute_label(L: PantsLabel, sigma: dict[int, int]) -> PantsLabel:
    return canonical_label([sigma.get(j, j) for j in L.members], L.n)


def permute_monomial(m: HalfMonomial, sigma: dict[int, int]) -> HalfMonomial:
    d = [0] * len(m.doubled)
    for j, x in enumerate(m.doubled):
        d[sigma.get(j, j)] = x
    return HalfMonomial(tuple(d))
