"""Radical and predicate operations against independent brute-force
oracles, with frozen expected values for the worked instances."""

import pytest

import radical_lab as rl


def sub_of(module, members):
    return rl.Substructure(module, rl.SUBMODULE, frozenset(members))


# ---------------------------------------------------------------------------
# oracles (raw-definition brute force, independent of the engine's
# power-mask / fixpoint machinery)


def envelope_oracle(module, members):
    """{r.m : r^k.m in N for some 1 <= k <= |R|} by explicit powers."""
    ring = module.ring
    found = set()
    for r in range(ring.size):
        for m in range(module.size):
            power = r
            for _ in range(ring.size):
                if module.action[power][m] in members:
                    found.add(module.action[r][m])
                    break
                power = ring.mul[power][r]
    return frozenset(found)


def completely_prime_oracle(module, members):
    for r in range(module.ring.size):
        for m in range(module.size):
            if module.action[r][m] in members and m not in members:
                if any(
                    module.action[r][x] not in members for x in range(module.size)
                ):
                    return False
    return True


class TestEnvelope:
    def test_envelope_of_everything_is_everything(self, small_modules):
        for module in small_modules:
            assert rl.envelope(module, module.full_submodule()) == frozenset(
                range(module.size)
            )

    def test_z4_zero_envelope_frozen(self, z4_regular):
        # oracle by hand: 2*1 qualifies since 2^2*1 = 0; odd r never do
        assert rl.envelope(z4_regular, z4_regular.zero_submodule()) == frozenset({0, 2})
        assert rl.envelope_submodule(
            z4_regular, z4_regular.zero_submodule()
        ).members == frozenset({0, 2})

    def test_example_module_zero_envelope_is_everything(self, exx):
        assert rl.envelope(exx, exx.zero_submodule()) == frozenset(range(4))

    def test_matches_oracle_on_all_small_modules(self, small_modules):
        for module in small_modules:
            for sub in rl.all_substructures(module, rl.SUBMODULE):
                assert rl.envelope(module, sub) == envelope_oracle(module, sub.members)


class TestPrimePredicates:
    def test_z4_prime_submodules_frozen(self, z4_regular):
        mid = sub_of(z4_regular, {0, 2})
        assert rl.is_prime_submodule(z4_regular, mid).holds
        zero = z4_regular.zero_submodule()
        verdict = rl.is_prime_submodule(z4_regular, zero)
        assert not verdict.holds
        assert verdict.witness["ideal"] == [0, 2]
        assert verdict.witness["submodule"] == [0, 2]

    def test_prime_witness_replays(self, z4_regular):
        verdict = rl.is_prime_submodule(z4_regular, z4_regular.zero_submodule())
        ideal = verdict.witness["ideal"]
        sub = verdict.witness["submodule"]
        candidate = set(verdict.witness["candidate"])
        # A.N inside P, N not inside P, A.M not inside P
        assert all(z4_regular.action[a][n] in candidate for a in ideal for n in sub)
        assert not set(sub) <= candidate
        assert not all(
            z4_regular.action[a][m] in candidate for a in ideal for m in range(4)
        )

    def test_improper_candidate_raises(self, z4_regular):
        with pytest.raises(rl.NotProper):
            rl.is_prime_submodule(z4_regular, z4_regular.full_submodule())
        with pytest.raises(rl.NotProper):
            rl.is_completely_prime_submodule(z4_regular, z4_regular.full_submodule())

    def test_zero_of_simple_module_is_prime(self, exx):
        assert rl.is_prime_submodule(exx, exx.zero_submodule()).holds

    def test_example_module_not_completely_prime_witness_replays(self, exx):
        verdict = rl.is_completely_prime_submodule(exx, exx.zero_submodule())
        assert not verdict.holds
        r, m = verdict.witness["r"], verdict.witness["m"]
        assert exx.action[r][m] == exx.zero and m != exx.zero
        assert any(exx.action[r][x] != exx.zero for x in range(exx.size))

    def test_z4_mid_is_completely_prime(self, z4_regular):
        assert rl.is_completely_prime_submodule(z4_regular, sub_of(z4_regular, {0, 2})).holds

    def test_completely_prime_matches_oracle(self, small_modules):
        for module in small_modules:
            for sub in rl.all_substructures(module, rl.SUBMODULE):
                if not sub.is_proper():
                    continue
                assert (
                    rl.is_completely_prime_submodule(module, sub).holds
                    == completely_prime_oracle(module, sub.members)
                )

    def test_completely_prime_implies_prime_and_semiprime_forms(self, small_modules):
        for module in small_modules:
            for sub in rl.all_substructures(module, rl.SUBMODULE):
                if not sub.is_proper():
                    continue
                if rl.is_completely_prime_submodule(module, sub).holds:
                    assert rl.is_prime_submodule(module, sub).holds
                    assert rl.is_completely_semiprime_submodule(module, sub).holds
                if rl.is_prime_submodule(module, sub).holds:
                    assert rl.is_semiprime_submodule(module, sub).holds

    def test_semiprime_examples(self, z4_regular, z6):
        # a=2, m=1: 2.R.2.1 = {0} but 2.1 != 0
        verdict = rl.is_completely_semiprime_submodule(
            z4_regular, z4_regular.zero_submodule()
        )
        assert not verdict.holds and verdict.witness == {"a": 2, "m": 1}
        assert not rl.is_semiprime_submodule(z4_regular, z4_regular.zero_submodule()).holds
        z6_reg = rl.module_regular(z6)
        assert rl.is_semiprime_submodule(z6_reg, z6_reg.zero_submodule()).holds
        assert rl.is_completely_semiprime_submodule(
            z6_reg, z6_reg.zero_submodule()
        ).holds

    def test_prime_iff_completely_prime_over_commutative_rings(self, small_modules):
        for module in small_modules:
            if not module.ring.is_commutative:
                continue
            for sub in rl.all_substructures(module, rl.SUBMODULE):
                if not sub.is_proper():
                    continue
                assert (
                    rl.is_prime_submodule(module, sub).holds
                    == rl.is_completely_prime_submodule(module, sub).holds
                )


class TestRadicals:
    def test_z4_radicals_frozen(self, z4_regular):
        assert rl.beta(z4_regular).members == frozenset({0, 2})
        assert rl.beta_co(z4_regular).members == frozenset({0, 2})

    def test_example_module_radicals(self, exx):
        assert rl.beta(exx).is_zero()
        assert rl.beta_co(exx).members == frozenset(range(4))

    def test_empty_family_convention(self, z4_regular):
        assert rl.beta_s(z4_regular, z4_regular.full_submodule()).members == frozenset(
            range(4)
        )

    def test_beta_s_restricts_the_family(self, z4_regular):
        mid = sub_of(z4_regular, {0, 2})
        assert rl.beta_s(z4_regular, mid).members == frozenset({0, 2})
        assert rl.beta_s(z4_regular, z4_regular.zero_submodule()).members == frozenset(
            {0, 2}
        )


class TestNilpotence:
    def test_nil_elements_frozen(self, z4, m2z2):
        assert rl.nil_elements(z4) == frozenset({0, 2})
        assert rl.nil_elements(rl.ring_Zn(3)) == frozenset({0})
        assert len(rl.nil_elements(m2z2)) == 4

    def test_nil_elements_oracle_on_m2(self, m2z2):
        # independent: explicit k-fold products up to ring size
        expected = set()
        for a in range(m2z2.size):
            power = a
            for _ in range(m2z2.size):
                if power == m2z2.zero:
                    expected.add(a)
                    break
                power = m2z2.mul[power][a]
        assert rl.nil_elements(m2z2) == frozenset(expected)

    def test_is_nil_left_ideal(self, z4):
        nil = rl.Substructure(z4, rl.LEFT_IDEAL, frozenset({0, 2}))
        assert rl.is_nil_left_ideal(z4, nil).holds
        full = rl.Substructure(z4, rl.LEFT_IDEAL, frozenset(range(4)))
        verdict = rl.is_nil_left_ideal(z4, full)
        assert not verdict.holds and verdict.witness["element"] == 1


class TestStronglyNilpotent:
    def test_zero_module(self, z4_regular):
        zero_mod, _ = rl.quotient_module(z4_regular, z4_regular.full_submodule())
        assert rl.strongly_nilpotent_submodule(zero_mod).members == frozenset({0})

    def test_z4_frozen(self, z4_regular):
        assert rl.strongly_nilpotent_submodule(z4_regular).members == frozenset({0, 2})

    def test_eventually_annihilating_z4(self, z4_regular):
        # 2 is eventually annihilating for 1 (2R2 = {0}); 1 and 3 are not
        assert rl.is_eventually_annihilating(z4_regular, 2, 1)
        assert not rl.is_eventually_annihilating(z4_regular, 1, 1)
        assert not rl.is_eventually_annihilating(z4_regular, 3, 1)
        assert rl.is_eventually_annihilating(z4_regular, 1, 0)

    def test_zero_beta_co_forces_zero_ns(self, catalog):
        for module in catalog.modules:
            if rl.beta_co(module).is_zero():
                assert rl.strongly_nilpotent_submodule(module).is_zero()


class TestClassFlags:
    def test_commutative_rings_give_ifp_modules(self, catalog):
        for module in catalog.modules:
            if module.ring.is_commutative:
                assert rl.module_class_flags(module)["IFP"].holds

    def test_example_module_fails_ifp_with_replayable_witness(self, exx):
        verdict = rl.module_class_flags(exx)["IFP"]
        assert not verdict.holds
        a, r, m = verdict.witness["a"], verdict.witness["r"], verdict.witness["m"]
        assert exx.action[a][m] == exx.zero
        assert exx.action[exx.ring.mul[a][r]][m] != exx.zero

    def test_symmetric_flag_on_commutative_catalog(self, catalog):
        for module in catalog.modules:
            if module.ring.is_commutative:
                assert rl.module_class_flags(module)["symmetric"].holds

    def test_lee_zhou_iff_ifp_and_trivial_envelope(self, catalog):
        for module in catalog.modules:
            flags = rl.module_class_flags(module)
            envelope_trivial = rl.envelope(
                module, module.zero_submodule()
            ) == frozenset({module.zero})
            assert flags["lee_zhou_reduced"].holds == (
                flags["IFP"].holds and envelope_trivial
            )


class TestTwoPrimal:
    def test_zn_rings_two_primal(self):
        for n in (2, 4, 6, 8):
            assert rl.is_two_primal_ring(rl.ring_Zn(n)).holds

    def test_m2_not_two_primal(self, m2z2):
        verdict = rl.is_two_primal_ring(m2z2)
        assert not verdict.holds
        assert verdict.details["beta"] == [0]
        assert len(verdict.details["nil"]) == 4

    def test_three_criteria_recorded(self, z4):
        details = rl.is_two_primal_ring(z4).details
        assert details["nil_equals_beta"]
        assert details["beta_co_equals_beta"]
        assert details["beta_equals_envelope"]

    def test_example_module_not_two_primal(self, exx):
        verdict = rl.is_two_primal_module(exx)
        assert not verdict.holds
        assert verdict.witness["beta"] == [0]
        assert verdict.witness["beta_co"] == [0, 1, 2, 3]

    def test_two_primal_submodule_via_quotient(self, z4_regular):
        mid = sub_of(z4_regular, {0, 2})
        assert rl.is_two_primal_submodule(z4_regular, mid).holds

    def test_two_primal_ideal(self, z4, m2z2):
        mid = rl.Substructure(z4, rl.TWO_SIDED_IDEAL, frozenset({0, 2}))
        assert rl.is_two_primal_ideal(z4, mid).holds
        zero = rl.Substructure(m2z2, rl.TWO_SIDED_IDEAL, frozenset({0}))
        assert not rl.is_two_primal_ideal(m2z2, zero).holds

    def test_ring_two_primal_iff_regular_module_two_primal(self, catalog):
        for ring in catalog.rings:
            assert (
                rl.is_two_primal_ring(ring).holds
                == rl.is_two_primal_module(rl.module_regular(ring)).holds
            )


class TestRadicalFormulas:
    def test_example_module_zero_submodule(self, exx):
        zero = exx.zero_submodule()
        assert rl.submodule_satisfies_crf(exx, zero).holds
        assert not rl.submodule_satisfies_rf(exx, zero).holds

    def test_z4_satisfies_both(self, z4_regular):
        assert rl.satisfies_rf(z4_regular).holds
        assert rl.satisfies_crf(z4_regular).holds

    def test_zero_module_satisfies_both(self, z4_regular):
        zero_mod, _ = rl.quotient_module(z4_regular, z4_regular.full_submodule())
        assert rl.satisfies_rf(zero_mod).holds
        assert rl.satisfies_crf(zero_mod).holds

    def test_module_verdict_carries_first_failing_submodule(self, exx):
        verdict = rl.satisfies_rf(exx)
        assert not verdict.holds
        assert verdict.witness["submodule"] == [0]
        assert verdict.witness["envelope_submodule"] == [0, 1, 2, 3]
        assert verdict.witness["radical"] == [0]


class TestHomTransfer:
    def test_identity_transfer(self, z4_regular):
        verdict = rl.hom_transfer_check(
            rl.identity_hom(z4_regular), z4_regular.zero_submodule()
        )
        assert verdict.holds

    def test_z4_projection(self, z4_regular):
        mid = sub_of(z4_regular, {0, 2})
        _, projection = rl.quotient_module(z4_regular, mid)
        verdict = rl.hom_transfer_check(projection, mid)
        assert verdict.holds
        assert verdict.details["crf"]["source"] and verdict.details["crf"]["image"]

    def test_free_to_cyclic_transfer(self, z6):
        free = rl.module_free(z6, 2)
        for sub in rl.all_substructures(free, rl.SUBMODULE):
            _, projection = rl.quotient_module(free, sub)
            assert rl.hom_transfer_check(projection, sub).holds

    def test_requires_epimorphism(self, z4_regular):
        mid = sub_of(z4_regular, {0, 2})
        quotient, _ = rl.quotient_module(z4_regular, mid)
        embedding = rl.ModuleHom(quotient, z4_regular, (0, 2))
        with pytest.raises(rl.NotEpimorphism):
            rl.hom_transfer_check(embedding, quotient.zero_submodule())

    def test_requires_kernel_containment(self, z4_regular):
        mid = sub_of(z4_regular, {0, 2})
        _, projection = rl.quotient_module(z4_regular, mid)
        with pytest.raises(rl.KernelNotContained):
            rl.hom_transfer_check(projection, z4_regular.zero_submodule())


class TestSubdirect:
    def test_completely_prime_module_single_factor(self):
        z2_reg = rl.module_regular(rl.ring_Zn(2))
        decomposition = rl.subdirect_decomposition(z2_reg)
        assert decomposition.exists and decomposition.verdict.holds
        assert len(decomposition.factors) == 1
        assert decomposition.factors[0].target.size == 2

    def test_z6_two_factors(self, z6):
        decomposition = rl.subdirect_decomposition(rl.module_regular(z6))
        assert decomposition.exists and decomposition.verdict.holds
        assert sorted(f.target.size for f in decomposition.factors) == [2, 3]
        kernels = [f.kernel.members for f in decomposition.factors]
        assert frozenset.intersection(*kernels) == frozenset({0})
        assert all(f.is_surjective() for f in decomposition.factors)

    def test_example_module_absent_with_radical_witness(self, exx):
        decomposition = rl.subdirect_decomposition(exx)
        assert not decomposition.exists
        assert decomposition.radical_witness.members == frozenset(range(4))
        assert decomposition.verdict.witness["beta_co"] == [0, 1, 2, 3]


class TestRingProperties:
    def test_dedekind_finite_everywhere(self, catalog):
        for ring in catalog.rings:
            assert rl.ring_properties(ring).dedekind_finite.holds

    def test_nil_ideal_sums_everywhere(self, catalog):
        for ring in catalog.rings:
            assert rl.ring_properties(ring).kothe_finite_scale.holds

    def test_m2_prime_not_completely_prime_with_witness(self, m2z2):
        verdict = rl.ring_properties(m2z2).primes_completely_prime
        assert not verdict.holds
        a, b = verdict.witness["a"], verdict.witness["b"]
        prime = set(verdict.witness["prime_ideal"])
        assert m2z2.mul[a][b] in prime
        assert a not in prime and b not in prime

    def test_semisimple_golden(self, z4, z6, m2z2):
        assert rl.ring_properties(z6).is_semisimple.holds
        verdict = rl.ring_properties(z4).is_semisimple
        assert not verdict.holds
        assert verdict.witness["jacobson_radical"] == [0, 2]
        assert rl.ring_properties(m2z2).is_semisimple.holds

    def test_torsion_free_notions_differ_on_matrix_ring(self, m2z2):
        # zero is a prime submodule of the regular module with zero
        # annihilator, yet zero divisors kill elementwise torsion-freeness
        reg = rl.module_regular(m2z2)
        zero = reg.zero_submodule()
        assert rl.is_prime_submodule(reg, zero).holds
        assert rl.quotient_ideal_torsion_free(reg, zero).holds
        assert not rl.quotient_torsion_free(reg, zero).holds


class TestRadicalReport:
    def test_report_chain_invariants_enforced(self, catalog):
        for module in catalog.modules:
            report = rl.radical_report(module)
            assert report.strongly_nilpotent.members <= report.envelope_zero.members
            assert report.envelope_zero.members <= report.beta_co.members
            assert report.beta.members <= report.beta_co.members

    def test_flag_order_stable(self, exx):
        assert tuple(rl.radical_report(exx).class_flags) == rl.FLAG_ORDER

    def test_zero_module_conventions(self, z4_regular):
        zero_mod, _ = rl.quotient_module(z4_regular, z4_regular.full_submodule())
        flags = rl.radical_report(zero_mod).class_flags
        assert not flags["prime"].holds and not flags["completely_prime"].holds
        assert flags["prime"].witness["improper"]
        assert flags["semiprime"].holds and flags["completely_semiprime"].holds
        assert flags["two_primal"].holds
        assert flags["satisfies_rf"].holds and flags["satisfies_crf"].holds
        report = rl.radical_report(zero_mod)
        assert report.beta.members == frozenset({0})
