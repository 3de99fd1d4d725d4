"""Ext groups of monomial modules over R = C[z_1..z_{n+1}]/(z_1...z_{n+1}).

M(S) = R/(z_S) has the 2-periodic free resolution

    ... -> R --z_S--> R --z_S'--> R --z_S--> R -> R/(z_S) -> 0,

so Hom(-, M(J)) gives a complex with every term M(J) and differentials
alternating between z_S (even k) and z_S' (odd k).  Multiplying by a
monomial sends basis monomials to basis monomials or to zero, so kernels and
images are spanned by subsets of the monomial basis and everything reduces to
counting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .pants import _exponent_vectors, canonical_label, hw_degree_slice, PantsLabel


class ExtRangeError(ValueError):
    pass


class StabilizationError(RuntimeError):
    pass


@dataclass(frozen=True)
class MonomialModule:
    """R/(z_S); S equal to {1..n+1} gives R itself."""

    n: int
    S: frozenset[int]

    def __post_init__(self):
        S = frozenset(self.S)
        object.__setattr__(self, "S", S)
        if not S:
            raise ValueError("S must be non-empty")
        if not S <= self.variables:
            raise ValueError(f"S={sorted(S)} not inside {{1..{self.n + 1}}}")

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 2))

    @property
    def is_free(self) -> bool:
        return self.S == self.variables

    @property
    def complement(self) -> frozenset[int]:
        return self.variables - self.S

    def contains(self, exps: tuple[int, ...]) -> bool:
        """Is the monomial with exponents ``exps`` (over z_1..z_{n+1}) a nonzero basis element?"""
        return not _divisible(exps, self.S) and not _divisible(exps, self.variables)

    def __str__(self):
        return "R" if self.is_free else "R/(z_{" + ",".join(map(str, sorted(self.S))) + "})"


def _divisible(exps, U) -> bool:
    return all(exps[j - 1] >= 1 for j in U)


def _times(exps, U):
    return tuple(e + (1 if j + 1 in U else 0) for j, e in enumerate(exps))


def _divide(exps, U):
    return tuple(e - (1 if j + 1 in U else 0) for j, e in enumerate(exps))


def module_basis(M: MonomialModule, max_degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of basis monomials of total degree <= max_degree, by degree."""
    out = [e for e in _exponent_vectors(M.n + 1, max_degree) if M.contains(e)]
    out.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return out


def mirror_module(label, n: int) -> MonomialModule:
    """R/(z_I) for the canonical label I; the label {0} gives R."""
    L = canonical_label(label, n)
    if L.members == {0}:
        return MonomialModule(n, frozenset(range(1, n + 2)))
    return MonomialModule(n, L.members)


@dataclass
class ExtTable:
    """classes[k] = {representative exponent vector: dim}; exact up to ``bound``."""

    source: MonomialModule
    target: MonomialModule
    classes: dict[int, dict[tuple[int, ...], int]]
    bound: int

    def dims(self, k: int) -> int:
        return sum(self.classes.get(k, {}).values())

    def series(self, k: int) -> list[int]:
        s = [0] * (self.bound + 1)
        for e, d in self.classes.get(k, {}).items():
            s[sum(e)] += d
        return s


def multiplier(M: MonomialModule, k: int) -> frozenset[int]:
    """Monomial by which delta^k: C^k -> C^{k+1} multiplies."""
    return M.S if k % 2 == 0 else M.complement


def ext_classes(Msrc: MonomialModule, Mtgt: MonomialModule, max_k: int, max_degree: int) -> ExtTable:
    if max_k < 0:
        raise ExtRangeError("max_k must be non-negative")
    if Msrc.n != Mtgt.n:
        raise ValueError("modules over different rings")
    basis = module_basis(Mtgt, max_degree)
    classes: dict[int, dict[tuple[int, ...], int]] = {}
    if Msrc.is_free:
        classes[0] = {e: 1 for e in basis}
        for k in range(1, max_k + 1):
            classes[k] = {}
        return ExtTable(Msrc, Mtgt, classes, max_degree)
    for k in range(max_k + 1):
        out_mult = multiplier(Msrc, k)
        row = {}
        for e in basis:
            if Mtgt.contains(_times(e, out_mult)):
                continue  # not a cocycle
            if k > 0:
                prev = multiplier(Msrc, k - 1)
                if _divisible(e, prev) and Mtgt.contains(_divide(e, prev)):
                    continue  # coboundary
            row[e] = 1
        classes[k] = row
    return ExtTable(Msrc, Mtgt, classes, max_degree)


def align(series: Iterable[int]) -> list[int]:
    """Drop leading zeros (shift so the first nonzero entry sits at 0)."""
    s = list(series)
    for i, x in enumerate(s):
        if x:
            return s[i:]
    return []


def aligned_prefix(series, length: int) -> list[int]:
    a = align(series)
    a = a[:length]
    return a + [0] * (length - len(a))


@dataclass
class SgHomTable:
    series: dict[int, list[int]]  # parity -> aligned stabilized series
    k_star: dict[int, int]  # parity -> first k of the plateau (cohomological degree 2k+i)
    window: int
    compare_length: int


def sg_stabilized_dims(Msrc: MonomialModule, Mtgt: MonomialModule, max_k: int, max_degree: int,
                       window: int = 3) -> SgHomTable:
    """Morphisms in the singularity category via Ext^{2k+i} for k large."""
    table = ext_classes(Msrc, Mtgt, max_k, max_degree)
    length = max(0, max_degree - (Msrc.n + 2) + 1)
    series, k_star = {}, {}
    for i in (0, 1):
        ks = [k for k in range((max_k - i) // 2 + 1) if 2 * k + i >= 1]
        found = None
        for start in range(len(ks) - window + 1):
            block = [aligned_prefix(table.series(2 * ks[start + w] + i), length) for w in range(window)]
            if all(b == block[0] for b in block):
                found = (ks[start], block[0])
                break
        if found is None:
            raise StabilizationError(
                f"Ext^(2k+{i}) did not stabilize over {window} consecutive k with max_k={max_k}")
        k_star[i], series[i] = found
    return SgHomTable(series, k_star, window, length)


def hw_series(I, J, k: int, max_degree: int, n: int) -> list[int]:
    """Degree-k part of HW(L_I, L_J) counted by integer-part exponent sum over z_1..z_{n+1}."""
    s = [0] * (max_degree + 1)
    for m in hw_degree_slice(I, J, k, max_degree, n):
        s[sum(x // 2 for x in m.doubled[1:])] += 1
    return s


def _lowest(series) -> Optional[int]:
    return next((d for d, c in enumerate(series) if c), None)


@dataclass
class CompareRow:
    k: int
    hw: list[int]
    ext: list[int]
    passed: bool
    hw_low: Optional[int] = None  # minimal nonzero degree before alignment
    ext_low: Optional[int] = None

    @property
    def shift(self) -> Optional[int]:
        """Empirical degree offset HW - Ext, when both sides are nonzero."""
        if self.hw_low is None or self.ext_low is None:
            return None
        return self.hw_low - self.ext_low


@dataclass
class CompareReport:
    n: int
    I: PantsLabel
    J: PantsLabel
    rows: list[CompareRow] = field(default_factory=list)
    compare_length: int = 0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)


def compare_hw_ext(n: int, I, J, max_k: int, max_degree: int) -> CompareReport:
    """HW*(L_I, L_J) against Ext*(M(I), M(J)), degree by degree, as aligned series."""
    if max_k < 0:
        raise ExtRangeError("max_k must be non-negative")
    I, J = canonical_label(I, n), canonical_label(J, n)
    table = ext_classes(mirror_module(I, n), mirror_module(J, n), max_k, max_degree)
    length = max(0, max_degree - (n + 2) + 1)
    report = CompareReport(n, I, J, compare_length=length)
    for k in range(max_k + 1):
        raw_hw, raw_ext = hw_series(I, J, k, max_degree, n), table.series(k)
        hw, ext = aligned_prefix(raw_hw, length), aligned_prefix(raw_ext, length)
        report.rows.append(CompareRow(k, hw, ext, hw == ext, _lowest(raw_hw), _lowest(raw_ext)))
    return report
