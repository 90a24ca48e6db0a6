"""Lattice enumeration, generation and the join/meet operations."""

import pytest

import radical_lab as rl


class TestGenerated:
    def test_empty_generators_give_zero(self, z4_regular):
        sub = rl.generated_substructure(z4_regular, rl.SUBMODULE, ())
        assert sub.members == frozenset({0})

    def test_all_generators_give_everything(self, z4_regular):
        sub = rl.generated_substructure(z4_regular, rl.SUBMODULE, range(4))
        assert sub.members == frozenset(range(4))

    def test_two_generates_02_in_z4(self, z4_regular):
        sub = rl.generated_substructure(z4_regular, rl.SUBMODULE, (2,))
        assert sub.members == frozenset({0, 2})

    def test_principal_two_sided_ideal_in_m2(self, m2z2):
        # any nonzero element of a simple ring generates everything
        for a in range(1, m2z2.size):
            ideal = rl.generated_substructure(m2z2, rl.TWO_SIDED_IDEAL, (a,))
            assert len(ideal.members) == m2z2.size

    def test_idempotent_on_every_enumerated_substructure(self, small_modules):
        for module in small_modules:
            for sub in rl.all_substructures(module, rl.SUBMODULE):
                regenerated = rl.generated_substructure(
                    module, rl.SUBMODULE, sub.members
                )
                assert regenerated.members == sub.members


class TestEnumeration:
    def test_z4_has_exactly_three_submodules(self, z4_regular):
        subs = rl.all_substructures(z4_regular, rl.SUBMODULE)
        assert [sorted(s.members) for s in subs] == [[0], [0, 2], [0, 1, 2, 3]]

    def test_example_module_is_simple(self, exx):
        subs = rl.all_substructures(exx, rl.SUBMODULE)
        assert len(subs) == 2
        assert subs[0].is_zero()
        assert len(subs[1].members) == exx.size

    def test_zero_module_has_one_submodule(self, z4):
        reg = rl.module_regular(z4)
        zero_mod, _ = rl.quotient_module(reg, reg.full_submodule())
        assert len(rl.all_substructures(zero_mod, rl.SUBMODULE)) == 1

    def test_sorted_by_cardinality_then_members(self, z6):
        subs = rl.all_substructures(rl.module_regular(z6), rl.SUBMODULE)
        keys = [(len(s.members), sorted(s.members)) for s in subs]
        assert keys == sorted(keys)

    def test_contains_bottom_and_top_and_is_closed(self, small_modules):
        for module in small_modules:
            subs = rl.all_substructures(module, rl.SUBMODULE)
            family = {s.members for s in subs}
            assert frozenset({module.zero}) in family
            assert frozenset(range(module.size)) in family
            for a in subs:
                for b in subs:
                    assert rl.sum_substructures(a, b).members in family
                    assert rl.intersect(a, b).members in family

    def test_left_equals_two_sided_on_commutative_rings(self, catalog):
        for ring in catalog.rings:
            if not ring.is_commutative:
                continue
            left = [s.members for s in rl.all_substructures(ring, rl.LEFT_IDEAL)]
            two = [s.members for s in rl.all_substructures(ring, rl.TWO_SIDED_IDEAL)]
            assert left == two

    def test_deterministic(self, z6):
        reg = rl.module_regular(z6)
        first = [s.members for s in rl.all_substructures(reg, rl.SUBMODULE)]
        second = [s.members for s in rl.all_substructures(reg, rl.SUBMODULE)]
        assert first == second

    def test_parent_size_budget(self, z4_regular):
        with pytest.raises(rl.SizeGuardExceeded):
            rl.all_substructures(
                z4_regular, rl.SUBMODULE, rl.Limits(max_parent_size=3)
            )

    def test_lattice_budget(self, z6):
        reg = rl.module_regular(z6)
        with pytest.raises(rl.SizeGuardExceeded):
            rl.all_substructures(reg, rl.SUBMODULE, rl.Limits(max_lattice_size=2))


class TestLatticeOps:
    def test_sum_with_zero_and_meet_with_top(self, z4_regular):
        subs = rl.all_substructures(z4_regular, rl.SUBMODULE)
        zero, mid, top = subs
        assert rl.sum_substructures(mid, zero).members == mid.members
        assert rl.intersect(mid, top).members == mid.members

    def test_two_lines_span_the_plane(self):
        z2 = rl.ring_Zn(2)
        plane = rl.module_free(z2, 2)
        e1 = rl.generated_substructure(plane, rl.SUBMODULE, (2,))  # (1,0)
        e2 = rl.generated_substructure(plane, rl.SUBMODULE, (1,))  # (0,1)
        assert e1.members == frozenset({0, 2})
        assert e2.members == frozenset({0, 1})
        assert rl.sum_substructures(e1, e2).members == frozenset(range(4))

    def test_empty_meet_is_everything(self, z4_regular):
        top = rl.intersect_family(z4_regular, rl.SUBMODULE, ())
        assert top.members == frozenset(range(4))

    def test_parent_mismatch(self, z4_regular, z6):
        other = rl.module_regular(z6)
        a = z4_regular.zero_submodule()
        b = other.zero_submodule()
        with pytest.raises(rl.ParentMismatch):
            rl.sum_substructures(a, b)
        with pytest.raises(rl.ParentMismatch):
            rl.intersect(a, b)
        with pytest.raises(rl.ParentMismatch):
            rl.intersect_family(z4_regular, rl.SUBMODULE, (b,))


class TestAnnihilator:
    def test_full_submodule_annihilated_by_everything(self, z4_regular):
        ann = rl.annihilator(z4_regular.full_submodule())
        assert ann.members == frozenset(range(4))

    def test_zero_submodule_of_z4(self, z4_regular):
        ann = rl.annihilator(z4_regular.zero_submodule())
        assert ann.members == frozenset({0})

    def test_02_submodule_of_z4(self, z4_regular):
        sub = rl.Substructure(z4_regular, rl.SUBMODULE, frozenset({0, 2}))
        assert rl.annihilator(sub).members == frozenset({0, 2})

    def test_annihilator_is_two_sided(self, small_modules):
        for module in small_modules:
            for sub in rl.all_substructures(module, rl.SUBMODULE):
                ann = rl.annihilator(sub)
                assert ann.kind == rl.TWO_SIDED_IDEAL
                # replay: every member sends all of M into the submodule
                for r in ann.members:
                    assert all(
                        module.action[r][m] in sub.members
                        for m in range(module.size)
                    )

    def test_oracle_brute_force(self, exx):
        # independent subset scan on the 4-element example module
        for sub in rl.all_substructures(exx, rl.SUBMODULE):
            expected = frozenset(
                r
                for r in range(exx.ring.size)
                if all(exx.action[r][m] in sub.members for m in range(exx.size))
            )
            assert rl.annihilator(sub).members == expected
