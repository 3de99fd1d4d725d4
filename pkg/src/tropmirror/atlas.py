"""Object-level bookkeeping for the functors around the pants mirror.

Sides of the dictionary:

* ``wrapped-complement``   W(Pi_n), objects L_I
* ``wrapped-hypersurface`` W(Pi_{n-1}), objects l_A
* ``coh-Z`` / ``sg-Z``     D^b Coh(Z) and its singularity category, objects O_{Z_S}
* ``coh-D``                D^b Coh(D), objects O_{D_A}
* ``fs-category``          the Fukaya-Seidel category, generator L_adm

Functors act on objects and on dimensions of morphism spaces only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Union

from .ext import aligned_prefix, mirror_module, sg_stabilized_dims
from .pants import (
    PantsLabel,
    all_labels,
    canonical_label,
    enumerate_triangles,
    hw_basis,
    localized_hw_dims,
    _exponent_vectors,
)

WRAPPED_COMPLEMENT = "wrapped-complement"
WRAPPED_HYPERSURFACE = "wrapped-hypersurface"
COH_Z = "coh-Z"
SG_Z = "sg-Z"
COH_D = "coh-D"
FS = "fs-category"

SIDES = (WRAPPED_COMPLEMENT, WRAPPED_HYPERSURFACE, COH_Z, SG_Z, COH_D, FS)
# Z/2-graded sides; coh-D is included because it only receives objects through Orlov's
# equivalence with the singularity category.
_MOD2 = {WRAPPED_HYPERSURFACE, SG_Z, COH_D}

Payload = Union[PantsLabel, frozenset, int, str, None]


@dataclass(frozen=True)
class ObjectRef:
    side: str
    n: int
    payload: Payload  # None is the zero object
    shift: int = 0

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"unknown side {self.side!r}")
        p = self.payload
        if self.side in (WRAPPED_COMPLEMENT, WRAPPED_HYPERSURFACE) and p is not None:
            dim = self.n if self.side == WRAPPED_COMPLEMENT else self.n - 1
            if not isinstance(p, PantsLabel) or p.n != dim:
                raise TypeError(f"{self.side} objects need a Pi_{dim} label, got {p!r}")
        if self.side in (COH_Z, SG_Z, COH_D) and p is not None:
            if not isinstance(p, (frozenset, int)):
                raise TypeError(f"{self.side} objects need a subset or twist, got {p!r}")
            if isinstance(p, frozenset):
                top = self.n + 1 if self.side != COH_D else self.n
                if not p or not p <= frozenset(range(1, top + 1)):
                    raise ValueError(f"sheaf support {sorted(p)} not inside {{1..{top}}}")
        shift = 0 if p is None else self.shift
        if self.side in _MOD2:
            shift %= 2
        object.__setattr__(self, "shift", shift)

    @property
    def is_zero(self) -> bool:
        return self.payload is None

    def shifted(self, k: int) -> "ObjectRef":
        return ObjectRef(self.side, self.n, self.payload, self.shift + k)

    def __str__(self):
        if self.is_zero:
            return "0"
        p = self.payload
        sub = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        if self.side == WRAPPED_COMPLEMENT:
            body = f"L{sub(p.members)}"
        elif self.side == WRAPPED_HYPERSURFACE:
            body = f"l{sub(p.members)}"
        elif self.side in (COH_Z, SG_Z):
            body = "O_Z" if isinstance(p, frozenset) and p == frozenset(range(1, self.n + 2)) else (
                f"O_Z{sub(p)}" if isinstance(p, frozenset) else f"O_Z({p})")
        elif self.side == COH_D:
            body = f"O_D{sub(p)}" if isinstance(p, frozenset) else f"O_D({p})"
        else:
            body = str(p)
        return body + (f"[{self.shift}]" if self.shift else "")


def L(members, n: int, shift: int = 0) -> ObjectRef:
    return ObjectRef(WRAPPED_COMPLEMENT, n, canonical_label(members, n), shift)


def ell(members, n: int, shift: int = 0) -> ObjectRef:
    """l_A in W(Pi_{n-1}); ``n`` is the dimension of the ambient Pi_n."""
    return ObjectRef(WRAPPED_HYPERSURFACE, n, canonical_label(members, n - 1), shift)


def O_Z(S, n: int, shift: int = 0) -> ObjectRef:
    return ObjectRef(COH_Z, n, frozenset(S), shift)


def O_D(A, n: int, shift: int = 0) -> ObjectRef:
    return ObjectRef(COH_D, n, frozenset(A), shift)


def zero(side: str, n: int) -> ObjectRef:
    return ObjectRef(side, n, None)


def _rep_without_zero(label: PantsLabel) -> frozenset[int]:
    """Subset of {1..m+1} representing the label (the {0} label becomes {1..m+1})."""
    if label.members == {0}:
        return frozenset(range(1, label.n + 2))
    return label.members


def rho_object(obj: ObjectRef) -> ObjectRef:
    """Restriction W(Pi_n) -> W(Pi_{n-1}): L_I -> l_I, L_{I+0} -> l_I[1], L_{0} -> 0."""
    if obj.side != WRAPPED_COMPLEMENT:
        raise ValueError("rho acts on wrapped-complement objects")
    n = obj.n
    if obj.is_zero or obj.payload.members == {0}:
        return zero(WRAPPED_HYPERSURFACE, n)
    I = obj.payload.members
    if n + 1 not in I:
        return ell(I, n, obj.shift)
    # L_I = L_{A u {0}} with A = {1..n} \ I
    A = frozenset(range(1, n + 1)) - I
    return ell(A, n, obj.shift + 1)


def j_object(obj: ObjectRef) -> ObjectRef:
    """Lifting W(Pi_{n-1}) -> W(Pi_n): l_A -> L_A for A inside {1..n}."""
    if obj.side != WRAPPED_HYPERSURFACE:
        raise ValueError("j acts on wrapped-hypersurface objects")
    if obj.is_zero:
        return zero(WRAPPED_COMPLEMENT, obj.n)
    return L(_rep_without_zero(obj.payload), obj.n, obj.shift)


def q_object(obj: ObjectRef) -> ObjectRef:
    """Quotient D^b Coh(Z) -> D^b_sg(Z); kills O_Z."""
    if obj.side != COH_Z:
        raise ValueError("q acts on coh-Z objects")
    if obj.is_zero or obj.payload == frozenset(range(1, obj.n + 2)):
        return zero(SG_Z, obj.n)
    return ObjectRef(SG_Z, obj.n, obj.payload, obj.shift)


def epsilon_object(obj: ObjectRef) -> ObjectRef:
    """Orlov's equivalence D^b_sg(Z) -> D^b Coh(D) on the objects O_{Z_S}."""
    if obj.side != SG_Z:
        raise ValueError("epsilon acts on sg-Z objects")
    if obj.is_zero:
        return zero(COH_D, obj.n)
    n, S = obj.n, obj.payload
    if n + 1 not in S:
        return O_D(S, n, obj.shift)
    # 0 -> O_{Z_S'} -> O_Z -> O_{Z_S} -> 0 makes O_{Z_S} = O_{Z_S'}[1] once O_Z is killed
    return O_D(frozenset(range(1, n + 2)) - S, n, obj.shift + 1)


def sg_image(obj: ObjectRef) -> ObjectRef:
    """epsilon o q on coh-Z objects."""
    return epsilon_object(q_object(obj))


def mirror_assignment(obj: ObjectRef, direction: str = "forward") -> ObjectRef:
    """L_I <-> O_{Z_I} and l_A <-> O_{D_A}."""
    n = obj.n
    if direction == "forward":
        if obj.side == WRAPPED_COMPLEMENT:
            return zero(COH_Z, n) if obj.is_zero else O_Z(_rep_without_zero(obj.payload), n, obj.shift)
        if obj.side == WRAPPED_HYPERSURFACE:
            return zero(COH_D, n) if obj.is_zero else O_D(_rep_without_zero(obj.payload), n, obj.shift)
    elif direction == "inverse":
        if obj.side == COH_Z:
            return zero(WRAPPED_COMPLEMENT, n) if obj.is_zero else L(obj.payload, n, obj.shift)
        if obj.side == COH_D:
            return zero(WRAPPED_HYPERSURFACE, n) if obj.is_zero else ell(obj.payload, n, obj.shift)
    else:
        raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")
    raise ValueError(f"no mirror assignment for {obj.side} in direction {direction}")


def hypersurface_hw_dims(a: ObjectRef, b: ObjectRef, truncation: int) -> dict[int, dict[int, int]]:
    """Z/2-graded dims of Hom(a, b) in W(Pi_{n-1}), keyed by total doubled exponent.

    Hom^i(l_A[s], l_B[t]) = HW^{i+t-s}(l_A, l_B).
    """
    out: dict[int, dict[int, int]] = {0: {}, 1: {}}
    if a.is_zero or b.is_zero:
        return out
    _, dims = hw_basis(a.payload, b.payload, truncation, a.n - 1)
    for degree, row in dims.dims.items():
        i = (degree - (b.shift - a.shift)) % 2
        for t, c in row.items():
            out[i][t] = out[i].get(t, 0) + c
    return out


def _collapse(dims: dict[int, int], length: int) -> list[int]:
    """Doubled totals -> series by integer-part degree, aligned and cut to ``length``.

    Within one parity class every element has the same number of odd slots,
    so integer-part degree is (total - const) / 2; alignment removes the const.
    """
    if not dims:
        return [0] * length
    low = min(dims)
    series = [0] * (max(dims) - low + 1)
    for t, c in dims.items():
        if (t - low) % 2:
            raise ArithmeticError("mixed slot parities inside one parity class")
        series[(t - low) // 2] += c
    return aligned_prefix(series, length)


@dataclass
class FunctorReport:
    n: int
    objects: list[dict] = field(default_factory=list)
    squares: dict[str, bool] = field(default_factory=dict)
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses


def check_square(n: int, max_k: int = 6, max_degree: int = 10, window: int = 3) -> FunctorReport:
    """Commutation of  W(Pi_n) -> D^b Coh(Z) -> D^b_sg(Z) = D^b Coh(D)  against rho.

    Object level: mirror(rho(L_I)) == sg_image(mirror(L_I)).
    Morphism level, for every ordered pair of labels and each parity:
    localized HW(L_I, L_J) == HW(rho L_I, rho L_J) in W(Pi_{n-1}) (exact, by doubled degree)
    == stabilized Ext of the mirror modules (aligned series).
    """
    report = FunctorReport(n)
    labels = all_labels(n)
    obj_ok = True
    for lab in labels:
        src = L(lab, n)
        left = mirror_assignment(rho_object(src))
        right = sg_image(mirror_assignment(src))
        ok = left == right
        obj_ok &= ok
        report.objects.append({
            "object": str(src), "rho": str(rho_object(src)), "mirror": str(mirror_assignment(src)),
            "mirror_of_rho": str(left), "sg_of_mirror": str(right), "commutes": ok,
        })
        if not ok:
            report.witnesses.append(f"object {src}: {left} != {right}")
    report.squares["objects"] = obj_ok

    truncation = 2 * max_degree + n + 1
    length = max(0, max_degree - (n + 2) + 1)
    restr_ok = sg_ok = True
    for I in labels:
        for J in labels:
            loc = localized_hw_dims(I, J, truncation, n).dims
            hyp = hypersurface_hw_dims(rho_object(L(I, n)), rho_object(L(J, n)), truncation)
            sg = sg_stabilized_dims(mirror_module(I, n), mirror_module(J, n), max_k, max_degree, window)
            for i in (0, 1):
                if loc[i] != hyp[i]:
                    restr_ok = False
                    report.witnesses.append(f"HW^{i}({I},{J}) localized {loc[i]} != restricted {hyp[i]}")
                loc_series = _collapse(loc[i], length)
                if loc_series != sg.series[i]:
                    sg_ok = False
                    report.witnesses.append(f"HW^{i}({I},{J}) localized {loc_series} != sg {sg.series[i]}")
    report.squares["morphisms: localization = restriction"] = restr_ok
    report.squares["morphisms: localization = singularity category"] = sg_ok
    return report


L_ADM = "L_adm"


def fs_generator_maps(n: int) -> dict:
    """Acceleration functors on the generator L_adm and the triangle they produce."""
    if n < 1:
        raise ValueError("n must be at least 1")
    adm = ObjectRef(FS, n, L_ADM)
    alpha_inf = L({0}, n)
    alpha_0 = L({n + 1}, n)
    first = L(range(1, n + 1), n)
    # j rho alpha_0 (L_adm) = L_{1..n}[1]: the triangle L_{1..n} -> L_{0} -> L_{n+1} -> [1]
    wanted = (frozenset(range(1, n + 1)), frozenset({n + 1}), frozenset({0}))
    present = any((t.I, t.J, t.K) == wanted for t in enumerate_triangles(n))
    return {
        "generator": adm,
        "alpha_inf": alpha_inf,
        "alpha_0": alpha_0,
        "fs_endomorphisms": {"ring": "polynomial", "generators": n, "relations": 0},
        "triangle": (first, alpha_inf, alpha_0),
        "triangle_present": present,
        "j_rho_alpha_0": j_object(rho_object(alpha_0)),
        "rho_alpha_inf": rho_object(alpha_inf),
        "sheaf_images": tuple(mirror_assignment(x) for x in (first, alpha_inf, alpha_0)),
    }


def fs_endomorphism_dims(n: int, degree: int) -> int:
    """Dimension of the degree-``degree`` part of C[z_1..z_n]."""
    return comb(degree + n - 1, n - 1)


def local_pn_dims(n: int, d: int) -> int:
    """Monomials of degree (n+1)d in z_0..z_n not divisible by z_0...z_n."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if d == 0:
        return 1
    return comb((n + 1) * d + n, n) - comb((n + 1) * (d - 1) + n, n)


def local_pn_dims_bruteforce(n: int, d: int) -> int:
    deg = (n + 1) * d
    return sum(
        1 for e in _exponent_vectors(n + 1, deg)
        if sum(e) == deg and not all(x >= 1 for x in e)
    )


def torus_generators(n: int, bound: int) -> list[tuple[int, ...]]:
    """Exponents of x^a in C[x_1^{+-1}..x_n^{+-1}] with |a_i| <= bound (all degree 0)."""
    vecs = [()]
    for _ in range(n):
        vecs = [v + (a,) for v in vecs for a in range(-bound, bound + 1)]
    return vecs


def torus_product(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def torus_endo_dims(n: int, box_bound: int) -> int:
    if n < 0 or box_bound < 0:
        raise ValueError("bounds must be non-negative")
    return len(torus_generators(n, box_bound))
