import random

import pytest

from hfsplice import (
    Arrow,
    BASIS,
    CHORDS,
    DataFormatError,
    DimensionMismatch,
    Generator,
    Gf2Matrix,
    KnotSystem,
    TorusAlgebraElem,
    TypeDModule,
    algebra_mul,
    build_admissible,
    build_type_d_module,
    check_structure,
    reduce_module,
)
from gen import rand_system


def identity_tau_system(a0, a1, ainf):
    return KnotSystem(
        a0=a0, a1=a1, ainf=ainf,
        tau0=Gf2Matrix.identity(ainf + a1),
        tau1=Gf2Matrix.identity(a0 + ainf),
        tauinf=Gf2Matrix.identity(a1 + a0),
    )


class TestAlgebra:
    def test_unit_is_two_sided_identity(self):
        unit = TorusAlgebraElem.unit()
        for name in BASIS:
            b = TorusAlgebraElem.basis(name)
            assert unit * b == b
            assert b * unit == b

    def test_associative_over_all_basis_triples(self):
        elems = [TorusAlgebraElem.basis(n) for n in BASIS]
        for a in elems:
            for b in elems:
                for c in elems:
                    assert (a * b) * c == a * (b * c)

    def test_chord_products(self):
        def mul(x, y):
            return algebra_mul(
                TorusAlgebraElem.basis(x), TorusAlgebraElem.basis(y)
            ).terms()

        assert mul("r1", "r2") == ("r12",)
        assert mul("r2", "r3") == ("r23",)
        assert mul("r1", "r23") == ("r123",)
        assert mul("r12", "r3") == ("r123",)
        assert mul("r2", "r1") == ()
        assert mul("r3", "r2") == ()
        assert mul("r1", "r1") == ()

    def test_idempotent_sandwich(self):
        def mul(x, y):
            return algebra_mul(
                TorusAlgebraElem.basis(x), TorusAlgebraElem.basis(y)
            ).terms()

        assert mul("i0", "r1") == ("r1",)
        assert mul("r1", "i1") == ("r1",)
        assert mul("i1", "r1") == ()
        assert mul("r1", "i0") == ()
        assert mul("i0", "i0") == ("i0",)
        assert mul("i0", "i1") == ()

    def test_addition_is_xor(self):
        a = TorusAlgebraElem.basis("r1")
        assert (a + a).is_zero()
        both = TorusAlgebraElem.basis("r1") + TorusAlgebraElem.basis("r2")
        assert both.terms() == ("r1", "r2")

    def test_validation(self):
        with pytest.raises(DimensionMismatch):
            TorusAlgebraElem((1, 0))
        with pytest.raises(DataFormatError):
            TorusAlgebraElem.basis("r13")


class TestAdmissible:
    def test_parts_and_chain_relations(self):
        rng = random.Random(50)
        for _ in range(25):
            k = rand_system(rng)
            adm = build_admissible(k)
            assert adm.c0_parts == (k.ainf, k.a1)
            assert adm.c1_parts == (k.a1, k.a0, k.ainf, k.a1)
            assert adm.cinf_parts == (k.a1, k.a0)
            d1 = adm.d1.flatten()
            assert (d1 @ d1).is_zero()
            # enlargement maps are chain maps into and out of the middle
            # group, whose neighbours carry the zero differential
            assert (d1 @ adm.finf.flatten()).is_zero()
            assert (adm.f0.flatten() @ d1).is_zero()
            assert (adm.f0.flatten() @ adm.finf.flatten()).is_zero()
            assert (adm.fbar0.flatten() @ adm.fbarinf.flatten()).is_zero()

    def test_identity_taus_fix_the_plain_maps(self):
        k = identity_tau_system(2, 1, 3)
        adm = build_admissible(k)
        assert adm.fbarinf.flatten() == adm.finf.flatten()
        assert adm.fbar0.flatten() == adm.f0.flatten()


class TestModuleConstruction:
    def test_generator_counts_and_idempotents(self):
        rng = random.Random(51)
        for _ in range(20):
            k = rand_system(rng)
            mod = build_type_d_module(k)
            assert len(mod.generators) == 3 * k.a0 + 6 * k.a1 + 3 * k.ainf
            for g in mod.generators:
                expect = "i0" if g.id.startswith("l") else "i1"
                assert g.idempotent == expect

    def test_coefficient_set(self):
        rng = random.Random(52)
        seen = set()
        for _ in range(20):
            mod = build_type_d_module(rand_system(rng))
            seen |= {a.coeff for a in mod.arrows}
        assert seen <= {"1", "r1", "r2", "r3", "r123"}
        assert "r12" not in seen and "r23" not in seen

    def test_deterministic(self):
        k = rand_system(random.Random(53))
        assert (
            build_type_d_module(k).to_json() == build_type_d_module(k).to_json()
        )

    def test_triple_chord_arrows_are_the_composite(self):
        rng = random.Random(54)
        for _ in range(15):
            k = rand_system(rng)
            mod = build_type_d_module(k)
            got = {
                (a.source, a.target)
                for a in mod.arrows
                if a.coeff == "r123"
            }
            # the long-chord block is (tauinf quads) @ (tau1 inverse quad B),
            # landing on the first part of the i1 side
            _, btinf, _, dtinf = k.tau_quads("inf")
            _, b1b, _, _ = k.tau_bar_quads("1")
            expect = set()
            for prefix, top in (("l5", btinf @ b1b), ("l6", dtinf @ b1b)):
                for r in range(top.rows):
                    for c in range(top.cols):
                        if top.entry(r, c):
                            expect.add((f"{prefix}.{r}", f"m1.{c}"))
            assert got == expect

    def test_unit_arrows_respect_sides(self):
        mod = build_type_d_module(rand_system(random.Random(55)))
        for a in mod.arrows:
            if a.coeff == "1":
                assert a.source[0] == a.target[0]


class TestModuleValidation:
    def test_round_trip(self):
        mod = build_type_d_module(rand_system(random.Random(56)))
        assert TypeDModule.from_json(mod.to_json()) == mod

    def test_duplicate_ids_rejected(self):
        with pytest.raises(DataFormatError):
            TypeDModule(
                (Generator("x", "i0"), Generator("x", "i1")), ()
            )

    def test_unknown_reference_rejected(self):
        with pytest.raises(DataFormatError):
            TypeDModule(
                (Generator("x", "i0"),), (Arrow("x", "y", "1"),)
            )

    def test_bad_idempotent_and_coeff(self):
        with pytest.raises(DataFormatError):
            Generator("x", "i2")
        with pytest.raises(DataFormatError):
            Arrow("x", "y", "r13")

    def test_malformed_json(self):
        with pytest.raises(DataFormatError):
            TypeDModule.from_json({"generators": [{"id": "x"}], "arrows": []})


class TestStructure:
    def test_always_true_identities(self):
        rng = random.Random(57)
        for _ in range(25):
            rep = check_structure(build_type_d_module(rand_system(rng)))
            assert rep.idempotents_ok
            assert rep.d_l_squared_zero and rep.d_m_squared_zero
            assert rep.psi1_then_phi_zero and rep.phi_then_psi2_zero

    def test_report_is_deterministic(self):
        k = rand_system(random.Random(58))
        a = check_structure(build_type_d_module(k))
        b = check_structure(build_type_d_module(k))
        assert a.to_json() == b.to_json()

    def test_json_keys(self):
        rep = check_structure(build_type_d_module(identity_tau_system(1, 1, 1)))
        assert set(rep.to_json()) == {
            "idempotentsOk", "dL2Zero", "dM2Zero",
            "psi1ChainZero", "phiChainZero", "psi2ChainZero", "psi3ChainZero",
            "psi1ThenPhiZero", "phiThenPsi2Zero",
            "structureOk", "reversedStructureOk",
        }

    def test_detects_idempotent_violation(self):
        bad = TypeDModule(
            (Generator("x", "i0"), Generator("y", "i0")),
            (Arrow("x", "y", "r1"),),
        )
        assert not check_structure(bad).idempotents_ok

    def test_detects_unit_square_violation(self):
        bad = TypeDModule(
            (
                Generator("x", "i0"),
                Generator("y", "i0"),
                Generator("z", "i0"),
            ),
            (Arrow("x", "y", "1"), Arrow("y", "z", "1")),
        )
        assert not check_structure(bad).d_l_squared_zero


class TestReduce:
    def test_no_unit_arrows_remain(self):
        rng = random.Random(59)
        for _ in range(15):
            mod = build_type_d_module(rand_system(rng))
            reduced, audit = reduce_module(mod)
            assert all(
                a.coeff != "1" or a.source == a.target for a in reduced.arrows
            )
            assert len(reduced.generators) == len(mod.generators) - 2 * len(audit)

    def test_idempotent(self):
        mod = build_type_d_module(rand_system(random.Random(60)))
        once, _ = reduce_module(mod)
        twice, audit = reduce_module(once)
        assert audit == ()
        assert twice == once

    def test_hand_example_splices_composite(self):
        gens = tuple(Generator(g, "i0") for g in "wxyz")
        mod = TypeDModule(
            gens,
            (Arrow("x", "y", "1"), Arrow("w", "y", "r1"), Arrow("x", "z", "r2")),
        )
        reduced, audit = reduce_module(mod)
        assert audit == ({"source": "x", "target": "y", "spliced": 1},)
        assert [g.id for g in reduced.generators] == ["w", "z"]
        assert reduced.arrows == (Arrow("w", "z", "r12"),)

    def test_vanishing_products_are_dropped(self):
        gens = tuple(Generator(g, "i0") for g in "wxyz")
        mod = TypeDModule(
            gens,
            (Arrow("x", "y", "1"), Arrow("w", "y", "r2"), Arrow("x", "z", "r1")),
        )
        reduced, _ = reduce_module(mod)
        assert reduced.arrows == ()

    def test_duplicate_arrows_cancel(self):
        gens = (Generator("x", "i0"), Generator("y", "i0"))
        mod = TypeDModule(gens, (Arrow("x", "y", "1"), Arrow("x", "y", "1")))
        reduced, audit = reduce_module(mod)
        assert audit == ()
        assert len(reduced.generators) == 2
