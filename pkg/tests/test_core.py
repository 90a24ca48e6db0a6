"""Construction, validation and quotient/product arithmetic."""

import pytest

import radical_lab as rl


def z2_tables():
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 1]]
    return add, mul


def zn_tables(n):
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return add, mul


class TestRingConstruction:
    def test_z2_from_tables(self):
        add, mul = z2_tables()
        ring = rl.build_ring_from_tables(add, mul, label="Z2")
        assert ring.size == 2
        assert ring.add[1][1] == ring.zero  # 1 + 1 = 0
        assert ring.one == 1 and ring.zero == 0

    def test_identity_is_derived_when_missing(self):
        add, mul = zn_tables(4)
        ring = rl.build_ring_from_tables(add, mul)
        assert ring.one == 1

    def test_z4_two_times_two_is_zero(self):
        add, mul = zn_tables(4)
        ring = rl.build_ring_from_tables(add, mul)
        assert ring.mul[2][2] == ring.zero

    def test_nonassociative_mul_rejected_with_witness(self):
        add, _ = zn_tables(3)
        mul = [[(a - b) % 3 for b in range(3)] for a in range(3)]  # not associative
        with pytest.raises(rl.AxiomViolation) as err:
            rl.build_ring_from_tables(add, mul)
        assert err.value.axiom == "mul-associativity"
        i, j, k = err.value.witness
        assert mul[mul[i][j]][k] != mul[i][mul[j][k]]

    def test_broken_distributivity_rejected(self):
        # mul constant-zero except a single cell violates a*(b+c) = ab+ac
        add, _ = zn_tables(4)
        mul = [[0] * 4 for _ in range(4)]
        mul[3][3] = 2
        with pytest.raises(rl.AxiomViolation):
            rl.build_ring_from_tables(add, mul, one=None)

    def test_no_identity_rejected(self):
        add, _ = zn_tables(2)
        mul = [[0, 0], [0, 0]]
        with pytest.raises(rl.AxiomViolation) as err:
            rl.build_ring_from_tables(add, mul)
        assert err.value.axiom == "mul-identity"

    def test_size_guard(self):
        add, mul = zn_tables(8)
        with pytest.raises(rl.SizeGuardExceeded):
            rl.build_ring_from_tables(add, mul, limits=rl.Limits(max_validation_size=4))

    def test_commutativity_detection(self, z4, m2z2):
        assert z4.is_commutative
        assert not m2z2.is_commutative

    def test_power_sequence_periodicity(self, z4):
        assert z4.power_sequence(2) == (2, 0)
        assert z4.power_sequence(3) == (3, 1)
        assert z4.power_sequence(0) == (0,)


class TestModuleConstruction:
    def test_regular_module_tags(self, z4, z4_regular):
        assert z4_regular.ring is z4
        assert {"free", "projective"} <= set(z4_regular.tags)

    def test_action_axioms_checked(self, z4):
        add, _ = zn_tables(4)
        action = [[(r * m) % 4 for m in range(4)] for r in range(4)]
        action[3][1] = 0  # breaks unitality at... 3*1; breaks additivity too
        with pytest.raises(rl.AxiomViolation):
            rl.module_from_action(z4, add, action)

    def test_zero_ring_rejected_as_base(self):
        z4 = rl.ring_Zn(4)
        ideal = rl.Substructure(z4, rl.TWO_SIDED_IDEAL, frozenset(range(4)))
        zero_ring, _ = rl.quotient_ring(z4, ideal)
        assert zero_ring.size == 1
        with pytest.raises(rl.AxiomViolation):
            rl.module_from_action(zero_ring, [[0]], [[0]])

    def test_element_wrappers(self, z4, z4_regular):
        a = z4.element(3)
        b = z4.element(2)
        assert (a + b).index == 1
        assert (-a).index == 1
        assert (a * b).index == 2
        m = z4_regular.element(1)
        assert (a * m).index == 3
        assert (m + m).index == 2
        with pytest.raises(rl.AxiomViolation):
            z4.element(4)


class TestQuotients:
    def test_quotient_ring_z4_by_02_is_z2(self, z4):
        ideal = rl.Substructure(z4, rl.TWO_SIDED_IDEAL, frozenset({0, 2}))
        quotient, projection = rl.quotient_ring(z4, ideal)
        assert quotient.size == 2
        z2 = rl.ring_Zn(2)
        assert quotient.add == z2.add and quotient.mul == z2.mul
        assert projection[0] == projection[2] == quotient.zero
        assert projection[1] == projection[3] == quotient.one

    def test_quotient_ring_by_zero_is_isomorphic_copy(self, z4):
        ideal = rl.Substructure(z4, rl.TWO_SIDED_IDEAL, frozenset({0}))
        quotient, projection = rl.quotient_ring(z4, ideal)
        assert quotient.size == z4.size
        assert sorted(projection) == list(range(4))  # bijective
        assert quotient.add == z4.add and quotient.mul == z4.mul

    def test_quotient_ring_by_everything_is_zero_ring(self, m2z2):
        ideal = rl.Substructure(m2z2, rl.TWO_SIDED_IDEAL, frozenset(range(16)))
        quotient, _ = rl.quotient_ring(m2z2, ideal)
        assert quotient.size == 1
        assert quotient.zero == quotient.one

    def test_quotient_ring_kind_check(self, z4):
        left_only = rl.Substructure(z4, rl.LEFT_IDEAL, frozenset({0, 2}))
        with pytest.raises(rl.KindMismatch):
            rl.quotient_ring(z4, left_only)

    def test_quotient_module_roundtrip_by_zero(self, z4_regular):
        quotient, projection = rl.quotient_module(z4_regular, z4_regular.zero_submodule())
        assert quotient.size == z4_regular.size
        assert projection.is_surjective() and projection.is_injective()

    def test_quotient_module_by_everything(self, z4_regular):
        quotient, projection = rl.quotient_module(z4_regular, z4_regular.full_submodule())
        assert quotient.size == 1
        assert projection.kernel.members == frozenset(range(4))

    def test_quotient_module_z4_by_02(self, z4_regular):
        sub = rl.Substructure(z4_regular, rl.SUBMODULE, frozenset({0, 2}))
        quotient, projection = rl.quotient_module(z4_regular, sub)
        assert quotient.size == 2
        assert projection.is_surjective()
        assert projection.kernel.members == frozenset({0, 2})


class TestProducts:
    def test_ring_product_componentwise(self):
        z2 = rl.ring_Zn(2)
        product = rl.direct_product((z2, z2))
        assert product.size == 4
        # (1,0) + (0,1) = (1,1); (1,0) * (0,1) = (0,0)
        assert product.add[2][1] == 3
        assert product.mul[2][1] == 0

    def test_single_factor_is_isomorphic_copy(self, z4):
        product = rl.direct_product((z4,))
        assert product.size == z4.size
        assert product.add == z4.add and product.mul == z4.mul

    def test_module_product_free_tags(self, z4, z4_regular):
        square = rl.direct_product((z4_regular, z4_regular))
        assert square.size == 16
        assert {"free", "projective"} <= set(square.tags)

    def test_empty_product_rejected(self):
        with pytest.raises(rl.EmptyList):
            rl.direct_product(())

    def test_mixed_rings_rejected(self, z4, z6):
        with pytest.raises(rl.RingMismatch):
            rl.direct_product((rl.module_regular(z4), rl.module_regular(z6)))

    def test_products_revalidate(self, z4, z4_regular):
        product = rl.direct_product((z4, z4))
        rl.build_ring_from_tables(product.add, product.mul, one=product.one)
        square = rl.direct_product((z4_regular, z4_regular))
        rl.module_from_action(z4, square.add, square.action)


class TestModuleHom:
    def test_identity(self, z4_regular):
        ident = rl.identity_hom(z4_regular)
        assert ident.kernel.is_zero()
        assert ident.is_surjective() and ident.is_injective()

    def test_projection_kernel_equals_submodule(self, z4_regular):
        sub = rl.Substructure(z4_regular, rl.SUBMODULE, frozenset({0, 2}))
        _, projection = rl.quotient_module(z4_regular, sub)
        assert projection.kernel.members == sub.members
        assert projection.image.members == frozenset(range(projection.target.size))

    def test_invalid_map_rejected(self, z4_regular):
        with pytest.raises(rl.AxiomViolation):
            rl.ModuleHom(z4_regular, z4_regular, (0, 2, 1, 3))  # not additive

    def test_non_additive_zero_rejected(self, z4_regular):
        with pytest.raises(rl.AxiomViolation):
            rl.ModuleHom(z4_regular, z4_regular, (1, 2, 3, 0))

    def test_apply_and_preimage(self, z4_regular):
        sub = rl.Substructure(z4_regular, rl.SUBMODULE, frozenset({0, 2}))
        quotient, projection = rl.quotient_module(z4_regular, sub)
        image = projection.apply_substructure(sub)
        assert image.members == frozenset({quotient.zero})
        assert projection.preimage_substructure(image).members == sub.members


class TestSubstructureValidation:
    def test_not_closed_rejected(self, z4_regular):
        with pytest.raises(rl.AxiomViolation):
            rl.Substructure(z4_regular, rl.SUBMODULE, frozenset({0, 1}))

    def test_missing_zero_rejected(self, z4_regular):
        with pytest.raises(rl.AxiomViolation):
            rl.Substructure(z4_regular, rl.SUBMODULE, frozenset({2}))

    def test_kind_parent_mismatch(self, z4, z4_regular):
        with pytest.raises(rl.KindMismatch):
            rl.Substructure(z4, rl.SUBMODULE, frozenset({0}))
        with pytest.raises(rl.KindMismatch):
            rl.Substructure(z4_regular, rl.LEFT_IDEAL, frozenset({0}))

    def test_left_ideal_not_right_closed(self, m2z2):
        # columns span a left ideal that is not two-sided
        left = rl.all_substructures(m2z2, rl.LEFT_IDEAL)
        strict = [i for i in left if 1 < len(i.members) < m2z2.size]
        assert strict, "expected proper nonzero left ideals in M2(Z2)"
        for ideal in strict:
            with pytest.raises(rl.AxiomViolation):
                rl.Substructure(m2z2, rl.TWO_SIDED_IDEAL, ideal.members)
