"""Per-knot data: summand ranks, the three involution-related isomorphisms,
their standard triangle maps, and the optional extension data.

Every knot enters the pipeline as a triple of ranks ``(a0, a1, ainf)``
together with invertible matrices ``tau0``, ``tau1``, ``tauinf`` acting on

    H0 = Ainf + A1,   H1 = A0 + Ainf,   Hinf = A1 + A0,

written in those decompositions as 2x2 block matrices [[A, B], [C, D]].
The triangle maps ``f0``, ``f1``, ``finf`` all take the standard form
[[0, 0], [I, 0]] in these bases, and the conjugated maps are

    fbar0 = tauinf f0 tau1^-1,   fbar1 = tau0 f1 tauinf^-1,
    fbarinf = tau1 finf tau0^-1.

The extension map from H0 to Hinf is normalized to [[0, I], [0, 0]]; its
conjugated companion is determined up to the free parameters ``(M, P)``
stored in :class:`ThetaExtension`, via
tauinf^-1 thetabar tau0 = [[M, I], [P M, P]].
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .errors import DataFormatError, DimensionMismatch
from .gf2core import BlockMatrix, Gf2Matrix, assemble, slice_blocks

__all__ = [
    "ThetaExtension",
    "KnotSystem",
    "DerivedMaps",
    "ValidationReport",
    "validate",
    "derive_dual_maps",
    "change_basis_px",
    "normalize_theta",
    "random_knot_system",
    "random_invertible",
    "random_matrix",
    "theta_matrix",
    "theta_bar_matrix",
    "assemble_quads",
]


@dataclass(frozen=True)
class ThetaExtension:
    """Free parameters of the conjugated extension map.

    ``m`` has shape a1 x ainf and ``p`` has shape a0 x a1, so that
    [[M, I], [P M, P]] is a well-formed map from H0 to Hinf.
    """

    m: Gf2Matrix
    p: Gf2Matrix


@dataclass(frozen=True)
class KnotSystem:
    a0: int
    a1: int
    ainf: int
    tau0: Gf2Matrix
    tau1: Gf2Matrix
    tauinf: Gf2Matrix
    theta: ThetaExtension = None  # type: ignore[assignment]
    name: str = ""

    def __post_init__(self) -> None:
        if min(self.a0, self.a1, self.ainf) < 0:
            raise DimensionMismatch("ranks must be nonnegative")
        expected = {
            "tau0": (self.h0, self.h0),
            "tau1": (self.h1, self.h1),
            "tauinf": (self.hinf, self.hinf),
        }
        for attr, shape in expected.items():
            m = getattr(self, attr)
            if m.shape != shape:
                raise DimensionMismatch(f"{attr} has shape {m.shape}, expected {shape}")
        if self.theta is None:
            object.__setattr__(
                self,
                "theta",
                ThetaExtension(
                    m=Gf2Matrix.zero(self.a1, self.ainf),
                    p=Gf2Matrix.zero(self.a0, self.a1),
                ),
            )
        if self.theta.m.shape != (self.a1, self.ainf):
            raise DimensionMismatch(
                f"theta.m has shape {self.theta.m.shape}, expected {(self.a1, self.ainf)}"
            )
        if self.theta.p.shape != (self.a0, self.a1):
            raise DimensionMismatch(
                f"theta.p has shape {self.theta.p.shape}, expected {(self.a0, self.a1)}"
            )

    # Group ranks in the three surgery directions.

    @property
    def h0(self) -> int:
        return self.ainf + self.a1

    @property
    def h1(self) -> int:
        return self.a0 + self.ainf

    @property
    def hinf(self) -> int:
        return self.a1 + self.a0

    # 2x2 block views of tau and of its inverse.  The split of tau_bullet is
    # (stuff, a_bullet) on both sides: (ainf, a1) for tau0, (a0, ainf) for
    # tau1 and (a1, a0) for tauinf.

    def tau_quads(self, which: str) -> tuple[Gf2Matrix, Gf2Matrix, Gf2Matrix, Gf2Matrix]:
        m, (d1, d2) = self._tau_and_split(which)
        return _quads(m, d1, d2)

    def tau_bar_quads(self, which: str) -> tuple[Gf2Matrix, Gf2Matrix, Gf2Matrix, Gf2Matrix]:
        m, (d1, d2) = self._tau_and_split(which)
        return _quads(m.inverse(), d1, d2)

    def _tau_and_split(self, which: str) -> tuple[Gf2Matrix, tuple[int, int]]:
        if which == "0":
            return self.tau0, (self.ainf, self.a1)
        if which == "1":
            return self.tau1, (self.a0, self.ainf)
        if which == "inf":
            return self.tauinf, (self.a1, self.a0)
        raise ValueError(f"unknown direction {which!r}, expected '0', '1' or 'inf'")

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        obj = {
            "name": self.name,
            "ranks": {"a0": self.a0, "a1": self.a1, "ainf": self.ainf},
            "tau0": self.tau0.to_json(),
            "tau1": self.tau1.to_json(),
            "tauinf": self.tauinf.to_json(),
        }
        if not (self.theta.m.is_zero() and self.theta.p.is_zero()):
            obj["theta"] = {"M": self.theta.m.to_json(), "P": self.theta.p.to_json()}
        return obj

    @classmethod
    def from_json(cls, obj: Mapping) -> KnotSystem:
        try:
            ranks = obj["ranks"]
            a0, a1, ainf = int(ranks["a0"]), int(ranks["a1"]), int(ranks["ainf"])
            tau0 = Gf2Matrix.from_json(obj["tau0"])
            tau1 = Gf2Matrix.from_json(obj["tau1"])
            tauinf = Gf2Matrix.from_json(obj["tauinf"])
            theta = None
            if "theta" in obj and obj["theta"] is not None:
                theta = ThetaExtension(
                    m=Gf2Matrix.from_json(obj["theta"]["M"]),
                    p=Gf2Matrix.from_json(obj["theta"]["P"]),
                )
            name = str(obj.get("name", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise DataFormatError(f"malformed knot-system object: {exc}") from exc
        return cls(a0=a0, a1=a1, ainf=ainf, tau0=tau0, tau1=tau1, tauinf=tauinf,
                   theta=theta, name=name)


def _quads(m: Gf2Matrix, d1: int, d2: int) -> tuple[Gf2Matrix, Gf2Matrix, Gf2Matrix, Gf2Matrix]:
    b = slice_blocks(m, (d1, d2), (d1, d2))
    return (b.block(0, 0), b.block(0, 1), b.block(1, 0), b.block(1, 1))


def _standard_f(a: int, src_other: int, tgt_other: int) -> Gf2Matrix:
    """The triangle map [[0, 0], [I_a, 0]] from (a + src_other) to (tgt_other + a)."""
    return assemble_quads(
        Gf2Matrix.zero(tgt_other, a),
        Gf2Matrix.zero(tgt_other, src_other),
        Gf2Matrix.identity(a),
        Gf2Matrix.zero(a, src_other),
    )


def assemble_quads(
    tl: Gf2Matrix, tr: Gf2Matrix, bl: Gf2Matrix, br: Gf2Matrix
) -> Gf2Matrix:
    grid = BlockMatrix(
        (tl.rows, bl.rows), (tl.cols, tr.cols), ((tl, tr), (bl, br))
    )
    return assemble(grid)


@dataclass(frozen=True)
class DerivedMaps:
    """Standard triangle maps, their conjugates, and the product X."""

    f0: Gf2Matrix
    f1: Gf2Matrix
    finf: Gf2Matrix
    fbar0: Gf2Matrix
    fbar1: Gf2Matrix
    fbarinf: Gf2Matrix
    x: Gf2Matrix


def derive_dual_maps(k: KnotSystem) -> DerivedMaps:
    """Build the triangle maps and their tau-conjugates for one knot.

    Raises SingularMatrix if any tau is not invertible.
    """
    f0 = _standard_f(k.a0, k.ainf, k.a1)      # H1 -> Hinf
    f1 = _standard_f(k.a1, k.a0, k.ainf)      # Hinf -> H0
    finf = _standard_f(k.ainf, k.a1, k.a0)    # H0 -> H1
    fbar0 = k.tauinf @ f0 @ k.tau1.inverse()
    fbar1 = k.tau0 @ f1 @ k.tauinf.inverse()
    fbarinf = k.tau1 @ finf @ k.tau0.inverse()
    _, binf, _, _ = k.tau_quads("inf")
    _, b1bar, _, _ = k.tau_bar_quads("1")
    _, b0, _, _ = k.tau_quads("0")
    return DerivedMaps(
        f0=f0, f1=f1, finf=finf,
        fbar0=fbar0, fbar1=fbar1, fbarinf=fbarinf,
        x=binf @ b1bar @ b0,
    )


def theta_matrix(k: KnotSystem) -> Gf2Matrix:
    """The normalized extension [[0, I], [0, 0]] from H0 to Hinf."""
    return assemble_quads(
        Gf2Matrix.zero(k.a1, k.ainf),
        Gf2Matrix.identity(k.a1),
        Gf2Matrix.zero(k.a0, k.ainf),
        Gf2Matrix.zero(k.a0, k.a1),
    )


def theta_bar_matrix(k: KnotSystem) -> Gf2Matrix:
    """The conjugated extension tauinf [[M, I], [P M, P]] tau0^-1."""
    m, p = k.theta.m, k.theta.p
    presented = assemble_quads(m, Gf2Matrix.identity(k.a1), p @ m, p)
    return k.tauinf @ presented @ k.tau0.inverse()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    strict_ok: bool
    failures: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "strictOk": self.strict_ok,
            "failures": list(self.failures),
        }


def validate(k: KnotSystem, strict: bool = False) -> ValidationReport:
    """Structural report: invertibility of each tau, plus shape consistency.

    Shapes are enforced at construction, so the structural part here is the
    invertibility of the three tau matrices.  With ``strict`` set, each tau
    must additionally satisfy tau^4 = identity.
    """
    failures: list[str] = []
    for attr in ("tau0", "tau1", "tauinf"):
        m: Gf2Matrix = getattr(k, attr)
        if m.rank() != m.rows:
            failures.append(f"{attr} not invertible")
    strict_failures: list[str] = []
    if strict and not failures:
        for attr in ("tau0", "tau1", "tauinf"):
            m = getattr(k, attr)
            sq = m @ m
            if not (sq @ sq).is_identity():
                strict_failures.append(f"{attr}^4 is not the identity")
    ok = not failures
    strict_ok = ok and not strict_failures
    return ValidationReport(
        ok=ok, strict_ok=strict_ok, failures=tuple(failures + strict_failures)
    )


def change_basis_px(k: KnotSystem, which: str, x: Gf2Matrix) -> KnotSystem:
    """Conjugate tau_which by [[I, 0], [X, I]] on its own group.

    The standard triangle maps are unchanged by this move.  Note that the
    conjugation silently re-chooses the extension pair; downstream splice
    ranks do not depend on that choice.
    """
    m, (d1, d2) = k._tau_and_split(which)
    if x.shape != (d2, d1):
        raise DimensionMismatch(f"x has shape {x.shape}, expected {(d2, d1)}")
    px = assemble_quads(
        Gf2Matrix.identity(d1), Gf2Matrix.zero(d1, d2), x, Gf2Matrix.identity(d2)
    )
    new_tau = px @ m @ px
    fields = {"0": "tau0", "1": "tau1", "inf": "tauinf"}
    kwargs = {
        "a0": k.a0, "a1": k.a1, "ainf": k.ainf,
        "tau0": k.tau0, "tau1": k.tau1, "tauinf": k.tauinf,
        "theta": k.theta, "name": k.name,
    }
    kwargs[fields[which]] = new_tau
    return KnotSystem(**kwargs)


def normalize_theta(x: Gf2Matrix, y: Gf2Matrix) -> tuple[Gf2Matrix, Gf2Matrix]:
    """Basis changes flattening [[X, I], [Y X, Y]] to [[0, I], [0, 0]].

    Returns (left, right): unitriangular matrices with
    left @ [[X, I], [Y X, Y]] @ right == [[0, I], [0, 0]].
    The left factor acts on the target group, the right one on the source.
    """
    if y.cols != x.rows:
        raise DimensionMismatch(
            f"incompatible shapes {x.shape} and {y.shape} for extension data"
        )
    left = assemble_quads(
        Gf2Matrix.identity(x.rows),
        Gf2Matrix.zero(x.rows, y.rows),
        y,
        Gf2Matrix.identity(y.rows),
    )
    right = assemble_quads(
        Gf2Matrix.identity(x.cols),
        Gf2Matrix.zero(x.cols, x.rows),
        x,
        Gf2Matrix.identity(x.rows),
    )
    return left, right


def random_matrix(rows: int, cols: int, rng: random.Random) -> Gf2Matrix:
    """Uniformly random matrix of the given shape."""
    bits = tuple(rng.getrandbits(cols) if cols else 0 for _ in range(rows))
    return Gf2Matrix(rows, cols, bits)


def random_invertible(n: int, rng: random.Random) -> Gf2Matrix:
    """Uniformly random invertible n x n matrix, by rejection sampling."""
    if n == 0:
        return Gf2Matrix.identity(0)
    while True:
        m = random_matrix(n, n, rng)
        if m.rank() == n:
            return m


def random_knot_system(
    a0: int, a1: int, ainf: int, seed: int, name: str = ""
) -> KnotSystem:
    """Deterministic-from-seed system with random taus and extension data."""
    rng = random.Random(seed)
    h0, h1, hinf = ainf + a1, a0 + ainf, a1 + a0
    return KnotSystem(
        a0=a0, a1=a1, ainf=ainf,
        tau0=random_invertible(h0, rng),
        tau1=random_invertible(h1, rng),
        tauinf=random_invertible(hinf, rng),
        theta=ThetaExtension(
            random_matrix(a1, ainf, rng), random_matrix(a0, a1, rng)
        ),
        name=name,
    )
