"""Bordered data attached to a knot system.

The constructions here package the splicing blocks into a differential
module over the torus algebra: an admissible enlargement of the three
chain groups first, then a type-D style module whose arrows carry chord
coefficients.  Structure identities are checked numerically rather than
assumed, and the checker reports each one by name so that partial failures
stay visible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DataFormatError, DimensionMismatch, HfspliceError
from .gf2core import BlockMatrix, Gf2Matrix, slice_blocks
from .knotsys import KnotSystem

__all__ = [
    "CHORDS",
    "BASIS",
    "TorusAlgebraElem",
    "algebra_mul",
    "AdmissibleData",
    "build_admissible",
    "Generator",
    "Arrow",
    "TypeDModule",
    "StructureReport",
    "build_type_d_module",
    "check_structure",
    "reduce_module",
]


# -- the torus algebra ---------------------------------------------------------

BASIS = ("i0", "i1", "r1", "r2", "r3", "r12", "r23", "r123")
CHORDS = ("r1", "r2", "r3", "r12", "r23", "r123")

# Idempotent sandwich of each basis element: left * x * right == x.
_SANDWICH = {
    "i0": ("i0", "i0"),
    "i1": ("i1", "i1"),
    "r1": ("i0", "i1"),
    "r2": ("i1", "i0"),
    "r3": ("i0", "i1"),
    "r12": ("i0", "i0"),
    "r23": ("i1", "i1"),
    "r123": ("i0", "i1"),
}

_CHORD_MUL = {
    ("r1", "r2"): "r12",
    ("r2", "r3"): "r23",
    ("r1", "r23"): "r123",
    ("r12", "r3"): "r123",
}


def _basis_mul(a: str, b: str) -> str | None:
    if a in ("i0", "i1"):
        return b if _SANDWICH[b][0] == a else None
    if b in ("i0", "i1"):
        return a if _SANDWICH[a][1] == b else None
    return _CHORD_MUL.get((a, b))


@dataclass(frozen=True)
class TorusAlgebraElem:
    """A GF(2) combination of the eight basis elements."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != len(BASIS) or any(c not in (0, 1) for c in self.coeffs):
            raise DimensionMismatch("algebra element needs 8 coefficients in {0, 1}")

    @classmethod
    def zero(cls) -> TorusAlgebraElem:
        return cls((0,) * len(BASIS))

    @classmethod
    def basis(cls, name: str) -> TorusAlgebraElem:
        if name not in BASIS:
            raise DataFormatError(f"unknown basis element {name!r}")
        return cls(tuple(1 if b == name else 0 for b in BASIS))

    @classmethod
    def unit(cls) -> TorusAlgebraElem:
        return cls.basis("i0") + cls.basis("i1")

    def __add__(self, other: TorusAlgebraElem) -> TorusAlgebraElem:
        return TorusAlgebraElem(
            tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: TorusAlgebraElem) -> TorusAlgebraElem:
        return algebra_mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> tuple[str, ...]:
        return tuple(b for b, c in zip(BASIS, self.coeffs) if c)


def algebra_mul(a: TorusAlgebraElem, b: TorusAlgebraElem) -> TorusAlgebraElem:
    """Bilinear product; chords compose only along matching idempotents."""
    out = [0] * len(BASIS)
    for x in a.terms():
        for y in b.terms():
            z = _basis_mul(x, y)
            if z is not None:
                out[BASIS.index(z)] ^= 1
    return TorusAlgebraElem(tuple(out))


def _coeff_mul(a: str, b: str) -> str | None:
    """Product of arrow coefficients, where "1" is the unit."""
    if a == "1":
        return b
    if b == "1":
        return a
    return _CHORD_MUL.get((a, b))


# -- the admissible enlargement ------------------------------------------------


@dataclass(frozen=True)
class AdmissibleData:
    """Enlarged chain groups with honest chain maps between them.

    ``c1_parts`` lists the four summands of the enlarged middle group; its
    differential ``d1`` pairs the first part with the last, so the homology
    is the direct sum of the two middle parts.  The plain maps ``f0`` and
    ``finf`` are inclusions and projections; their conjugates carry the tau
    blocks.
    """

    c0_parts: tuple[int, int]
    c1_parts: tuple[int, int, int, int]
    cinf_parts: tuple[int, int]
    d1: BlockMatrix
    f0: BlockMatrix
    finf: BlockMatrix
    fbar0: BlockMatrix
    fbarinf: BlockMatrix


def build_admissible(k: KnotSystem) -> AdmissibleData:
    """Enlarge the middle chain group and transport the triangle maps.

    The tau of the middle group is extended by the identity on the two new
    parts; the extension keeps the map invertible, which the splitting in
    the source data does not.  Conjugating the inclusion and projection by
    the extended taus produces ``fbarinf`` and ``fbar0`` whose composite
    vanishes, as for the plain maps.
    """
    a0, a1, ainf = k.a0, k.a1, k.ainf
    c0_parts = (ainf, a1)
    c1_parts = (a1, a0, ainf, a1)
    cinf_parts = (a1, a0)
    i_a0 = Gf2Matrix.identity(a0)
    i_a1 = Gf2Matrix.identity(a1)
    i_ainf = Gf2Matrix.identity(ainf)

    d1 = BlockMatrix.from_entries(c1_parts, c1_parts, {(3, 0): i_a1})
    finf = BlockMatrix.from_entries(
        c1_parts, c0_parts, {(2, 0): i_ainf, (3, 1): i_a1}
    )
    f0 = BlockMatrix.from_entries(
        cinf_parts, c1_parts, {(0, 0): i_a1, (1, 1): i_a0}
    )

    at1, bt1, ct1, dt1 = k.tau_quads("1")
    tau1_ext = BlockMatrix.from_entries(
        c1_parts,
        c1_parts,
        {
            (0, 0): i_a1,
            (1, 1): at1,
            (1, 2): bt1,
            (2, 1): ct1,
            (2, 2): dt1,
            (3, 3): i_a1,
        },
    ).flatten()
    tau1_ext_inv = tau1_ext.inverse()

    fbarinf_flat = tau1_ext @ finf.flatten() @ k.tau0.inverse()
    fbar0_flat = k.tauinf @ f0.flatten() @ tau1_ext_inv
    fbarinf = slice_blocks(fbarinf_flat, c1_parts, c0_parts)
    fbar0 = slice_blocks(fbar0_flat, cinf_parts, c1_parts)

    if not (fbar0.flatten() @ fbarinf.flatten()).is_zero():
        raise HfspliceError("conjugated triangle maps fail to compose to zero")
    return AdmissibleData(
        c0_parts, c1_parts, cinf_parts, d1, f0, finf, fbar0, fbarinf
    )


# -- the type-D style module ---------------------------------------------------


@dataclass(frozen=True)
class Generator:
    id: str
    idempotent: str

    def __post_init__(self) -> None:
        if self.idempotent not in ("i0", "i1"):
            raise DataFormatError(f"bad idempotent {self.idempotent!r}")


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    coeff: str

    def __post_init__(self) -> None:
        if self.coeff != "1" and self.coeff not in CHORDS:
            raise DataFormatError(f"bad arrow coefficient {self.coeff!r}")


@dataclass(frozen=True)
class TypeDModule:
    generators: tuple[Generator, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            raise DataFormatError("duplicate generator ids")
        known = set(ids)
        for a in self.arrows:
            if a.source not in known or a.target not in known:
                raise DataFormatError(
                    f"arrow {a.source!r} -> {a.target!r} references unknown generator"
                )

    def to_json(self) -> dict:
        return {
            "generators": [
                {"id": g.id, "idempotent": g.idempotent} for g in self.generators
            ],
            "arrows": [
                {"from": a.source, "to": a.target, "coeff": a.coeff}
                for a in self.arrows
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> TypeDModule:
        try:
            gens = tuple(
                Generator(g["id"], g["idempotent"]) for g in obj["generators"]
            )
            arrows = tuple(
                Arrow(a["from"], a["to"], a["coeff"]) for a in obj["arrows"]
            )
        except (KeyError, TypeError) as exc:
            raise DataFormatError(f"malformed module object: {exc}") from exc
        return cls(gens, arrows)


_L_PART_OF = ("a1", "a0", "ainf", "a1", "a1", "a0")
_M_PART_OF = ("ainf", "a1", "a1", "a0", "ainf", "a1")


def _part_dims(k: KnotSystem, names: tuple[str, ...]) -> tuple[int, ...]:
    by_name = {"a0": k.a0, "a1": k.a1, "ainf": k.ainf}
    return tuple(by_name[n] for n in names)


def _gen_ids(prefix: str, dims: tuple[int, ...]) -> list[str]:
    out = []
    for p, d in enumerate(dims, start=1):
        out.extend(f"{prefix}{p}.{i}" for i in range(d))
    return out


def _arrows_from(
    flat: Gf2Matrix,
    row_ids: list[str],
    col_ids: list[str],
    coeff: str,
    out: list[Arrow],
) -> None:
    for r in range(flat.rows):
        for c in range(flat.cols):
            if flat.entry(r, c):
                out.append(Arrow(row_ids[r], col_ids[c], coeff))


def build_type_d_module(k: KnotSystem) -> TypeDModule:
    """Assemble the two-sided module exactly as presented by the blocks.

    The i0 side stacks the enlarged middle group on the plain infinity
    group; the i1 side stacks the zero group on another enlarged middle
    group.  Chord arrows connect the sides: r1 and r3 and r123 leave the
    i0 side, r2 comes back.
    """
    ldims = _part_dims(k, _L_PART_OF)
    mdims = _part_dims(k, _M_PART_OF)
    lids = _gen_ids("l", ldims)
    mids = _gen_ids("m", mdims)

    _, bt1, _, dt1 = k.tau_quads("1")
    _, btinf, _, dtinf = k.tau_quads("inf")
    a0b, b0b, _, _ = k.tau_bar_quads("0")
    a1b, b1b, _, _ = k.tau_bar_quads("1")

    i_a0 = Gf2Matrix.identity(k.a0)
    i_a1 = Gf2Matrix.identity(k.a1)
    i_ainf = Gf2Matrix.identity(k.ainf)

    # Differentials, written target-part by source-part.
    d_l = BlockMatrix.from_entries(
        ldims, ldims, {(3, 0): i_a1, (4, 0): i_a1, (5, 1): i_a0}
    )
    d_m = BlockMatrix.from_entries(
        mdims,
        mdims,
        {
            (3, 0): bt1 @ a0b,
            (3, 1): bt1 @ b0b,
            (4, 0): dt1 @ a0b,
            (4, 1): dt1 @ b0b,
            (5, 2): i_a1,
        },
    )

    # Chord arrows, written source-part by target-part.
    psi1 = BlockMatrix.from_entries(
        ldims, mdims, {(2, 0): i_ainf, (3, 1): i_a1}
    )
    psi2 = BlockMatrix.from_entries(
        ldims,
        mdims,
        {
            (4, 3): btinf @ a1b,
            (4, 4): btinf @ b1b,
            (5, 3): dtinf @ a1b,
            (5, 4): dtinf @ b1b,
        },
    )
    phi = BlockMatrix.from_entries(
        mdims,
        ldims,
        {(2, 0): i_a1, (3, 1): i_a0, (4, 2): i_ainf, (5, 3): i_a1},
    )
    psi3 = psi2 @ phi @ psi1

    arrows: list[Arrow] = []
    _arrows_from(d_l.flatten().transpose(), lids, lids, "1", arrows)
    _arrows_from(d_m.flatten().transpose(), mids, mids, "1", arrows)
    _arrows_from(psi1.flatten(), lids, mids, "r1", arrows)
    _arrows_from(phi.flatten(), mids, lids, "r2", arrows)
    _arrows_from(psi2.flatten(), lids, mids, "r3", arrows)
    _arrows_from(psi3.flatten(), lids, mids, "r123", arrows)

    gens = tuple(
        [Generator(g, "i0") for g in lids] + [Generator(g, "i1") for g in mids]
    )
    return TypeDModule(gens, tuple(arrows))


@dataclass(frozen=True)
class StructureReport:
    """Named outcomes of the structure identities, one boolean each."""

    idempotents_ok: bool
    d_l_squared_zero: bool
    d_m_squared_zero: bool
    psi1_chain_zero: bool
    phi_chain_zero: bool
    psi2_chain_zero: bool
    psi3_chain_zero: bool
    psi1_then_phi_zero: bool
    phi_then_psi2_zero: bool
    structure_ok: bool
    reversed_structure_ok: bool

    def to_json(self) -> dict:
        return {
            "idempotentsOk": self.idempotents_ok,
            "dL2Zero": self.d_l_squared_zero,
            "dM2Zero": self.d_m_squared_zero,
            "psi1ChainZero": self.psi1_chain_zero,
            "phiChainZero": self.phi_chain_zero,
            "psi2ChainZero": self.psi2_chain_zero,
            "psi3ChainZero": self.psi3_chain_zero,
            "psi1ThenPhiZero": self.psi1_then_phi_zero,
            "phiThenPsi2Zero": self.phi_then_psi2_zero,
            "structureOk": self.structure_ok,
            "reversedStructureOk": self.reversed_structure_ok,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _coeff_matrices(m: TypeDModule) -> tuple[dict[str, Gf2Matrix], dict[str, int]]:
    index = {g.id: i for i, g in enumerate(m.generators)}
    n = len(m.generators)
    rows: dict[str, list[int]] = {}
    for a in m.arrows:
        work = rows.setdefault(a.coeff, [0] * n)
        work[index[a.source]] ^= 1 << index[a.target]
    mats = {c: Gf2Matrix(n, n, tuple(r)) for c, r in rows.items()}
    return mats, index


def _restricted_is_zero(mat: Gf2Matrix, keep: list[int]) -> bool:
    return all(not mat.entry(i, j) for i in keep for j in keep)


def check_structure(m: TypeDModule) -> StructureReport:
    """Evaluate every structure identity of the module numerically.

    Residuals follow the composition order in which the first arrow's
    coefficient multiplies from the left; the reversed convention is also
    evaluated and reported separately, since the two genuinely differ here.
    """
    idem = {g.id: g.idempotent for g in m.generators}
    idempotents_ok = True
    for a in m.arrows:
        if a.coeff == "1":
            ok = idem[a.source] == idem[a.target]
        else:
            left, right = _SANDWICH[a.coeff]
            ok = idem[a.source] == left and idem[a.target] == right
        if not ok:
            idempotents_ok = False

    mats, index = _coeff_matrices(m)
    n = len(m.generators)
    zero = Gf2Matrix.zero(n, n)

    def residual(e: str, reverse: bool) -> Gf2Matrix:
        total = zero
        for c1, m1 in mats.items():
            for c2, m2 in mats.items():
                if _coeff_mul(c1, c2) == e:
                    total = total + (m2 @ m1 if reverse else m1 @ m2)
        return total

    coeffs = ("1",) + CHORDS
    res = {e: residual(e, reverse=False) for e in coeffs}
    res_rev = {e: residual(e, reverse=True) for e in coeffs}

    i0_gens = [index[g.id] for g in m.generators if g.idempotent == "i0"]
    i1_gens = [index[g.id] for g in m.generators if g.idempotent == "i1"]
    a_r1 = mats.get("r1", zero)
    a_r2 = mats.get("r2", zero)
    a_r3 = mats.get("r3", zero)

    return StructureReport(
        idempotents_ok=idempotents_ok,
        d_l_squared_zero=_restricted_is_zero(res["1"], i0_gens),
        d_m_squared_zero=_restricted_is_zero(res["1"], i1_gens),
        psi1_chain_zero=res["r1"].is_zero(),
        phi_chain_zero=res["r2"].is_zero(),
        psi2_chain_zero=res["r3"].is_zero(),
        psi3_chain_zero=res["r123"].is_zero(),
        psi1_then_phi_zero=(a_r1 @ a_r2).is_zero(),
        phi_then_psi2_zero=(a_r2 @ a_r3).is_zero(),
        structure_ok=all(r.is_zero() for r in res.values()),
        reversed_structure_ok=all(r.is_zero() for r in res_rev.values()),
    )


def reduce_module(m: TypeDModule) -> tuple[TypeDModule, tuple[dict, ...]]:
    """Cancel unit arrows between distinct generators until none remain.

    Each step removes the lexicographically first cancellable pair and
    splices the surviving arrows around it, multiplying coefficients in
    path order and dropping products that vanish in the algebra.  Returns
    the reduced module and an audit of the steps taken.
    """
    gens = list(m.generators)
    arrows = set()
    for a in m.arrows:
        key = (a.source, a.target, a.coeff)
        arrows.symmetric_difference_update({key})

    audit: list[dict] = []
    while True:
        units = sorted(
            (s, t) for (s, t, c) in arrows if c == "1" and s != t
        )
        if not units:
            break
        s0, t0 = units[0]
        incoming = [
            (w, c) for (w, t, c) in arrows if t == t0 and w not in (s0, t0)
        ]
        outgoing = [
            (z, c) for (s, z, c) in arrows if s == s0 and z not in (s0, t0)
        ]
        added = 0
        for w, a in incoming:
            for z, b in outgoing:
                prod = _coeff_mul(a, b)
                if prod is None:
                    continue
                key = (w, z, prod)
                if key in arrows:
                    arrows.remove(key)
                else:
                    arrows.add(key)
                added += 1
        arrows = {
            (s, t, c)
            for (s, t, c) in arrows
            if s not in (s0, t0) and t not in (s0, t0)
        }
        gens = [g for g in gens if g.id not in (s0, t0)]
        audit.append({"source": s0, "target": t0, "spliced": added})

    reduced = TypeDModule(
        tuple(gens),
        tuple(Arrow(s, t, c) for (s, t, c) in sorted(arrows)),
    )
    return reduced, tuple(audit)
