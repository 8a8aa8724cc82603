"""Seeded randomized verification of the package's core identities.

Everything here recomputes results along independent routes and compares;
no check trusts the function it is checking.  The suite is deterministic
for a fixed seed and is what the command-line ``selftest`` runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bordered import build_type_d_module, check_structure
from .cancel import CancellationStep, cancel_identity, cancel_sequence
from .gf2core import BlockMatrix, Gf2Matrix, iota, kron
from .knotsys import (
    KnotSystem,
    ThetaExtension,
    random_knot_system,
    random_matrix,
    validate,
)
from .splicecore import (
    SpliceProblem,
    TREFOIL_PIVOTS,
    build_reduced_matrix,
    chi,
    splice_rank,
    trefoil_reduction_transform,
    trefoil_splice_bound,
    trefoil_splice_matrices,
    trefoil_splice_rank,
)

__all__ = ["SelfTestResult", "run_selftest"]


@dataclass
class SelfTestResult:
    seed: int
    trials: int
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, ok: bool, note: str = "") -> None:
        self.checks.append((name, ok, note))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "seed": self.seed,
            "trials": self.trials,
            "checks": [
                {"name": n, "ok": ok, **({"note": note} if note else {})}
                for n, ok, note in self.checks
            ],
        }


def _random_pair(rng: random.Random, top: int = 3) -> SpliceProblem:
    ranks = [rng.randint(0, top) for _ in range(6)]
    k1 = random_knot_system(*ranks[:3], seed=rng.getrandbits(32))
    k2 = random_knot_system(*ranks[3:], seed=rng.getrandbits(32))
    return SpliceProblem(k1, k2)


def _with_new_theta(k: KnotSystem, rng: random.Random) -> KnotSystem:
    return KnotSystem(
        a0=k.a0, a1=k.a1, ainf=k.ainf,
        tau0=k.tau0, tau1=k.tau1, tauinf=k.tauinf,
        theta=ThetaExtension(
            random_matrix(k.a1, k.ainf, rng), random_matrix(k.a0, k.a1, rng)
        ),
        name=k.name,
    )


def _check_iota_chain(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        p = _random_pair(rng)
        report = splice_rank(p)
        if not report.pipeline_agreement:
            return False, f"route disagreement at trial {t}"
        if report.hf_rank < report.lower_bound:
            return False, f"rank below bound at trial {t}"
    return True, ""


def _check_theta_independence(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        p = _random_pair(rng)
        d = build_reduced_matrix(p).flatten()
        q = SpliceProblem(
            _with_new_theta(p.k1, rng), _with_new_theta(p.k2, rng)
        )
        if build_reduced_matrix(q).flatten() != d:
            return False, f"extension data leaked into D at trial {t}"
    return True, ""


def _random_planted_grid(rng: random.Random) -> tuple[BlockMatrix, CancellationStep]:
    nb = rng.randint(2, 4)
    row_dims = tuple(rng.randint(0, 3) for _ in range(nb))
    col_dims = tuple(rng.randint(0, 3) for _ in range(nb))
    i = rng.randrange(nb)
    j = rng.randrange(nb)
    n = rng.randint(1, 3)
    row_dims = row_dims[:i] + (n,) + row_dims[i + 1:]
    col_dims = col_dims[:j] + (n,) + col_dims[j + 1:]
    grid = tuple(
        tuple(
            Gf2Matrix.identity(n)
            if (a, b) == (i, j)
            else random_matrix(row_dims[a], col_dims[b], rng)
            for b in range(nb)
        )
        for a in range(nb)
    )
    return BlockMatrix(row_dims, col_dims, grid), CancellationStep(i, j)


def _check_cancellation(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        m, step = _random_planted_grid(rng)
        reduced = cancel_identity(m, step)
        if iota(reduced.flatten()) != iota(m.flatten()):
            return False, f"kernel or cokernel changed at trial {t}"
    return True, ""


def _check_kron_rank(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        a = random_matrix(rng.randint(0, 4), rng.randint(0, 4), rng)
        b = random_matrix(rng.randint(0, 4), rng.randint(0, 4), rng)
        if kron(a, b).rank() != a.rank() * b.rank():
            return False, f"rank multiplicativity failed at trial {t}"
    return True, ""


def _check_chi(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        p = _random_pair(rng)
        d = build_reduced_matrix(p)
        x = chi(p)
        dim_b1 = sum(d.row_dims)
        dim_b2 = sum(d.col_dims)
        if x != dim_b2 - dim_b1:
            return False, f"chi disagrees with dimensions at trial {t}"
        io = iota(d.flatten())
        if x != io.kernel - io.cokernel:
            return False, f"chi disagrees with kernel data at trial {t}"
    return True, ""


def _check_trefoil(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        k = random_knot_system(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3),
            seed=rng.getrandbits(32),
        )
        ten, rr = trefoil_splice_matrices(k)
        if rr.flatten().shape != (k.h0, k.h1):
            return False, f"reduced matrix has wrong shape at trial {t}"
        steps = [CancellationStep(r, c) for r, c in TREFOIL_PIVOTS]
        mech = cancel_sequence(ten, steps).take([1, 0], [0, 1])
        if mech.flatten() @ trefoil_reduction_transform(k) != rr.flatten():
            return False, f"cancellation route disagrees at trial {t}"
        if iota(mech.flatten()) != iota(rr.flatten()):
            return False, f"cancellation route changed iota at trial {t}"
        if trefoil_splice_rank(k) < trefoil_splice_bound(k):
            return False, f"rank below bound at trial {t}"
    return True, ""


def _check_bordered(rng: random.Random, trials: int) -> tuple[bool, str]:
    for t in range(trials):
        k = random_knot_system(
            rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3),
            seed=rng.getrandbits(32),
        )
        if not validate(k).ok:
            continue
        mod = build_type_d_module(k)
        rep = check_structure(mod)
        again = check_structure(build_type_d_module(k))
        if rep.to_json() != again.to_json():
            return False, f"structure report not deterministic at trial {t}"
        if not rep.idempotents_ok:
            return False, f"idempotent mismatch at trial {t}"
        if not (rep.psi1_then_phi_zero and rep.phi_then_psi2_zero):
            return False, f"composite arrows fail to vanish at trial {t}"
        if not (rep.d_l_squared_zero and rep.d_m_squared_zero):
            return False, f"differential fails to square to zero at trial {t}"
    return True, ""


_CHECKS = (
    ("iota-chain", _check_iota_chain),
    ("theta-independence", _check_theta_independence),
    ("cancellation", _check_cancellation),
    ("kron-rank", _check_kron_rank),
    ("chi", _check_chi),
    ("trefoil", _check_trefoil),
    ("bordered", _check_bordered),
)


def run_selftest(seed: int = 0, trials: int = 25) -> SelfTestResult:
    """Run every named check over ``trials`` fresh random inputs each."""
    result = SelfTestResult(seed=seed, trials=trials)
    for name, fn in _CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            ok, note = fn(rng, trials)
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            ok, note = False, f"raised {type(exc).__name__}: {exc}"
        result.record(name, ok, note)
    return result
