import random

import pytest

from hfsplice import (
    DataFormatError,
    DimensionMismatch,
    Gf2Matrix,
    KnotSystem,
    ThetaExtension,
    assemble_quads,
    change_basis_px,
    derive_dual_maps,
    normalize_theta,
    random_invertible,
    random_knot_system,
    random_matrix,
    theta_bar_matrix,
    theta_matrix,
    validate,
)
from gen import rand_system


class TestConstruction:
    def test_negative_rank_rejected(self):
        with pytest.raises(DimensionMismatch):
            KnotSystem(
                a0=-1, a1=0, ainf=0,
                tau0=Gf2Matrix.identity(0),
                tau1=Gf2Matrix.identity(0),
                tauinf=Gf2Matrix.identity(0),
            )

    def test_tau_shape_checked_against_ranks(self):
        with pytest.raises(DimensionMismatch):
            KnotSystem(
                a0=1, a1=1, ainf=1,
                tau0=Gf2Matrix.identity(3),
                tau1=Gf2Matrix.identity(2),
                tauinf=Gf2Matrix.identity(2),
            )

    def test_default_theta_is_zero(self):
        k = random_knot_system(1, 2, 1, seed=0)
        bare = KnotSystem(
            a0=1, a1=2, ainf=1,
            tau0=k.tau0, tau1=k.tau1, tauinf=k.tauinf,
        )
        assert bare.theta.m.is_zero() and bare.theta.p.is_zero()
        assert bare.theta.m.shape == (2, 1)
        assert bare.theta.p.shape == (1, 2)

    def test_theta_shape_checked(self):
        k = random_knot_system(1, 2, 1, seed=0)
        with pytest.raises(DimensionMismatch):
            KnotSystem(
                a0=1, a1=2, ainf=1,
                tau0=k.tau0, tau1=k.tau1, tauinf=k.tauinf,
                theta=ThetaExtension(Gf2Matrix.zero(1, 1), Gf2Matrix.zero(1, 2)),
            )

    def test_group_ranks(self):
        k = random_knot_system(1, 2, 3, seed=0)
        assert (k.h0, k.h1, k.hinf) == (5, 4, 3)


class TestSerialization:
    def test_round_trip_with_theta(self):
        k = random_knot_system(2, 1, 2, seed=3, name="probe")
        again = KnotSystem.from_json(k.to_json())
        assert again == k

    def test_zero_theta_omitted_from_json(self):
        k = random_knot_system(1, 1, 1, seed=4)
        bare = KnotSystem(
            a0=1, a1=1, ainf=1,
            tau0=k.tau0, tau1=k.tau1, tauinf=k.tauinf,
        )
        obj = bare.to_json()
        assert "theta" not in obj
        assert KnotSystem.from_json(obj) == bare

    def test_malformed_raises_data_format(self):
        with pytest.raises(DataFormatError):
            KnotSystem.from_json({"ranks": {"a0": 1}})
        with pytest.raises(DataFormatError):
            KnotSystem.from_json({})


class TestQuads:
    def test_quads_reassemble(self):
        k = random_knot_system(2, 1, 3, seed=5)
        for which, tau in (("0", k.tau0), ("1", k.tau1), ("inf", k.tauinf)):
            assert assemble_quads(*k.tau_quads(which)) == tau
            assert assemble_quads(*k.tau_bar_quads(which)) == tau.inverse()

    def test_unknown_direction(self):
        k = random_knot_system(1, 1, 1, seed=6)
        with pytest.raises(ValueError):
            k.tau_quads("2")


class TestDerivedMaps:
    def test_shapes_and_triangle_relations(self):
        rng = random.Random(7)
        for _ in range(25):
            k = rand_system(rng)
            d = derive_dual_maps(k)
            assert d.finf.shape == (k.h1, k.h0)
            assert d.f0.shape == (k.hinf, k.h1)
            assert d.f1.shape == (k.h0, k.hinf)
            assert d.x.shape == (k.a1, k.a1)
            # consecutive triangle maps compose to zero, before and after
            # conjugation
            assert (d.f0 @ d.finf).is_zero()
            assert (d.f1 @ d.f0).is_zero()
            assert (d.finf @ d.f1).is_zero()
            assert (d.fbar0 @ d.fbarinf).is_zero()
            assert (d.fbar1 @ d.fbar0).is_zero()
            assert (d.fbarinf @ d.fbar1).is_zero()

    def test_standard_form(self):
        k = random_knot_system(2, 1, 3, seed=8)
        d = derive_dual_maps(k)
        assert d.finf.to_rows() == assemble_quads(
            Gf2Matrix.zero(k.a0, k.ainf),
            Gf2Matrix.zero(k.a0, k.a1),
            Gf2Matrix.identity(k.ainf),
            Gf2Matrix.zero(k.ainf, k.a1),
        ).to_rows()


class TestExtension:
    def test_theta_matrix_form(self):
        k = random_knot_system(2, 2, 1, seed=9)
        t = theta_matrix(k)
        assert t.shape == (k.hinf, k.h0)
        assert t.rank() == k.a1
        assert (t @ t.transpose() @ t) == t

    def test_theta_bar_shape_and_rank(self):
        rng = random.Random(10)
        for _ in range(20):
            k = rand_system(rng)
            tb = theta_bar_matrix(k)
            assert tb.shape == (k.hinf, k.h0)
            # column operations turn [[M, I], [PM, P]] into [[0, I], [0, P]],
            # so the rank is a1 whatever (M, P) were chosen
            assert tb.rank() == k.a1

    def test_normalize_theta_flattens(self):
        rng = random.Random(11)
        for _ in range(30):
            a1, a0, ainf = (rng.randint(0, 3) for _ in range(3))
            x = random_matrix(a1, ainf, rng)
            y = random_matrix(a0, a1, rng)
            presented = assemble_quads(x, Gf2Matrix.identity(a1), y @ x, y)
            left, right = normalize_theta(x, y)
            normal = assemble_quads(
                Gf2Matrix.zero(a1, ainf),
                Gf2Matrix.identity(a1),
                Gf2Matrix.zero(a0, ainf),
                Gf2Matrix.zero(a0, a1),
            )
            assert left @ presented @ right == normal

    def test_normalize_theta_shape_check(self):
        with pytest.raises(DimensionMismatch):
            normalize_theta(Gf2Matrix.zero(2, 1), Gf2Matrix.zero(1, 3))


class TestValidate:
    def test_ok_on_random_system(self):
        k = random_knot_system(2, 1, 2, seed=12)
        rep = validate(k)
        assert rep.ok and rep.strict_ok and rep.failures == ()
        assert rep.to_json() == {"ok": True, "strictOk": True, "failures": []}

    def test_singular_tau_fails(self):
        k = random_knot_system(1, 1, 1, seed=13)
        bad = KnotSystem(
            a0=1, a1=1, ainf=1,
            tau0=Gf2Matrix.zero(2, 2), tau1=k.tau1, tauinf=k.tauinf,
        )
        rep = validate(bad)
        assert not rep.ok
        assert any("tau0" in f for f in rep.failures)

    def test_strict_checks_fourth_power(self):
        # a 2x2 invertible matrix of multiplicative order 3
        m = Gf2Matrix.from_rows([[0, 1], [1, 1]])
        k = KnotSystem(
            a0=1, a1=1, ainf=1,
            tau0=m, tau1=m, tauinf=m,
        )
        assert validate(k).ok
        rep = validate(k, strict=True)
        assert rep.ok and not rep.strict_ok
        assert len(rep.failures) == 3


class TestBasisChange:
    def test_involution_and_validity(self):
        rng = random.Random(14)
        for _ in range(20):
            k = rand_system(rng)
            for which, (d1, d2) in (
                ("0", (k.ainf, k.a1)),
                ("1", (k.a0, k.ainf)),
                ("inf", (k.a1, k.a0)),
            ):
                x = random_matrix(d2, d1, rng)
                moved = change_basis_px(k, which, x)
                assert validate(moved).ok
                assert change_basis_px(moved, which, x) == k

    def test_shape_check(self):
        k = random_knot_system(2, 1, 2, seed=15)
        with pytest.raises(DimensionMismatch):
            change_basis_px(k, "0", Gf2Matrix.zero(2, 2))


class TestRandomSystems:
    def test_deterministic_from_seed(self):
        a = random_knot_system(2, 3, 1, seed=99, name="a")
        b = random_knot_system(2, 3, 1, seed=99, name="a")
        assert a == b

    def test_random_invertible_is_invertible(self):
        rng = random.Random(16)
        for n in range(5):
            m = random_invertible(n, rng)
            assert m.rank() == n
