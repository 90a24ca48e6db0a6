"""Named verification suites run by the CLI.

Each suite quantifies one result over a catalog and emits one line per
(instance, check) with a replayable witness on failure.  Suites are
deterministic: instances follow catalog construction order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .catalog import Catalog, default_catalog, module_cyclic, module_example_exx
from .core import LEFT_IDEAL, FiniteModule, identity_hom, quotient_module
from .errors import UnknownSuite
from .limits import Limits
from .radicals import (
    beta,
    beta_co,
    beta_co_ring,
    beta_co_s,
    beta_ring,
    beta_s,
    envelope,
    envelope_submodule,
    envelope_zero_ring,
    hom_transfer_check,
    is_completely_prime_ideal,
    is_completely_prime_submodule,
    is_completely_semiprime_submodule,
    is_prime_ideal,
    is_prime_submodule,
    is_two_primal_module,
    is_two_primal_ring,
    module_class_flags,
    nil_elements,
    quotient_ideal_torsion_free,
    quotient_torsion_free,
    radical_report,
    ring_properties,
    satisfies_crf,
    satisfies_rf,
    strongly_nilpotent_submodule,
    subdirect_decomposition,
    submodule_lattice,
    submodule_satisfies_crf,
    submodule_satisfies_rf,
)
from .substructures import all_substructures, annihilator


@dataclass(frozen=True, eq=False)
class CheckResult:
    instance: str
    check: str
    holds: bool
    witness: dict | None = None


@dataclass(frozen=True, eq=False)
class SuiteReport:
    suite: str
    passed: bool
    checks: tuple[CheckResult, ...]


def _sets(**kwargs) -> dict:
    return {key: sorted(value) for key, value in kwargs.items()}


# ---------------------------------------------------------------------------
# ring-level suites


def _suite_eq1_chain(cat: Catalog, limits) -> list[CheckResult]:
    """beta <= nil <= E_R(0) <= beta_co per ring; all equal exactly for
    2-primal rings."""
    checks = []
    for ring in cat.rings:
        nil = nil_elements(ring)
        b = beta_ring(ring, limits).members
        bco = beta_co_ring(ring, limits).members
        env = envelope_zero_ring(ring, limits)
        chain = b <= nil and nil <= env and env <= bco
        checks.append(
            CheckResult(
                ring.label,
                "beta<=nil<=envelope<=beta_co",
                chain,
                None if chain else _sets(beta=b, nil=nil, envelope=env, beta_co=bco),
            )
        )
        all_equal = b == nil == env == bco
        two_primal = is_two_primal_ring(ring, limits).holds
        ok = all_equal == two_primal
        checks.append(
            CheckResult(
                ring.label,
                "all-equal-iff-two-primal",
                ok,
                None if ok else {"all_equal": all_equal, "two_primal": two_primal},
            )
        )
    return checks


def _suite_thm_prim(cat: Catalog, limits) -> list[CheckResult]:
    """beta(R) = E_R(0) exactly when nil(R) = beta(R)."""
    checks = []
    for ring in cat.rings:
        b = beta_ring(ring, limits).members
        via_envelope = b == envelope_zero_ring(ring, limits)
        via_nil = frozenset(nil_elements(ring)) == b
        ok = via_envelope == via_nil
        checks.append(
            CheckResult(
                ring.label,
                "envelope-criterion-iff-nil-criterion",
                ok,
                None if ok else {"beta_equals_envelope": via_envelope, "nil_equals_beta": via_nil},
            )
        )
    return checks


def _suite_prop_p_agreement(cat: Catalog, limits) -> list[CheckResult]:
    """nil(R) = beta(R) exactly when beta_co(R) = beta(R)."""
    checks = []
    for ring in cat.rings:
        b = beta_ring(ring, limits).members
        via_nil = frozenset(nil_elements(ring)) == b
        via_co = beta_co_ring(ring, limits).members == b
        ok = via_nil == via_co
        checks.append(
            CheckResult(
                ring.label,
                "nil-criterion-iff-beta_co-criterion",
                ok,
                None if ok else {"nil_equals_beta": via_nil, "beta_co_equals_beta": via_co},
            )
        )
    return checks


def _suite_cor_2m(cat: Catalog, limits) -> list[CheckResult]:
    """For 2-primal rings the four sets coincide."""
    checks = []
    for ring in cat.rings:
        if not is_two_primal_ring(ring, limits).holds:
            continue
        nil = frozenset(nil_elements(ring))
        b = beta_ring(ring, limits).members
        bco = beta_co_ring(ring, limits).members
        env = envelope_zero_ring(ring, limits)
        ok = b == nil == env == bco
        checks.append(
            CheckResult(
                ring.label,
                "beta=nil=envelope=beta_co",
                ok,
                None if ok else _sets(beta=b, nil=nil, envelope=env, beta_co=bco),
            )
        )
    return checks


_SEMISIMPLE_GOLDEN = {
    "Z2": True,
    "Z3": True,
    "Z4": False,
    "Z6": True,
    "Z8": False,
    "Z2xZ2": True,
    "U2(Z2)": False,
    "M2(Z2)": True,
}


def _suite_ring_properties(cat: Catalog, limits) -> list[CheckResult]:
    """Dedekind finiteness and nil-ideal sums everywhere; prime ideals
    completely prime exactly on the 2-primal rings; semisimplicity
    against the golden table for the stock rings."""
    checks = []
    for ring in cat.rings:
        props = ring_properties(ring, limits)
        checks.append(
            CheckResult(
                ring.label, "dedekind-finite", props.dedekind_finite.holds,
                props.dedekind_finite.witness,
            )
        )
        checks.append(
            CheckResult(
                ring.label, "nil-left-ideal-sums-nil", props.kothe_finite_scale.holds,
                props.kothe_finite_scale.witness,
            )
        )
        two_primal = is_two_primal_ring(ring, limits).holds
        ok = props.primes_completely_prime.holds == two_primal
        checks.append(
            CheckResult(
                ring.label,
                "primes-completely-prime-iff-two-primal",
                ok,
                None
                if ok
                else {
                    "primes_completely_prime": props.primes_completely_prime.holds,
                    "two_primal": two_primal,
                    "witness": props.primes_completely_prime.witness,
                },
            )
        )
        expected = _SEMISIMPLE_GOLDEN.get(ring.label)
        if expected is not None:
            ok = props.is_semisimple.holds == expected
            checks.append(
                CheckResult(
                    ring.label,
                    "semisimple-matches-golden",
                    ok,
                    None
                    if ok
                    else {"expected": expected, "computed": props.is_semisimple.holds},
                )
            )
    return checks


# ---------------------------------------------------------------------------
# module-level suites


def _suite_lemma_ll_chain(cat: Catalog, limits) -> list[CheckResult]:
    """N_s(M) <= <E_M(0)> <= beta_co(M), and <E_M(N)> <= beta_co^s(N)
    for every submodule N."""
    checks = []
    for module in cat.modules:
        report = radical_report(module, limits)
        chain = (
            report.strongly_nilpotent.members <= report.envelope_zero.members
            and report.envelope_zero.members <= report.beta_co.members
        )
        checks.append(
            CheckResult(
                module.label,
                "ns<=envelope<=beta_co",
                chain,
                None
                if chain
                else _sets(
                    ns=report.strongly_nilpotent.members,
                    envelope=report.envelope_zero.members,
                    beta_co=report.beta_co.members,
                ),
            )
        )
        witness = None
        for sub in submodule_lattice(module, limits):
            env = envelope_submodule(module, sub, limits)
            rad = beta_co_s(module, sub, limits)
            if not env.members <= rad.members:
                witness = _sets(
                    submodule=sub.members, envelope=env.members, radical=rad.members
                )
                break
        checks.append(
            CheckResult(module.label, "envelope<=beta_co_s-for-all-N", witness is None, witness)
        )
    return checks


def _suite_prop_pr(cat: Catalog, limits) -> list[CheckResult]:
    """E_M(N) = N exactly when N is completely semiprime, over every
    proper submodule."""
    checks = []
    for module in cat.modules:
        witness = None
        for sub in submodule_lattice(module, limits):
            if not sub.is_proper():
                continue
            fixed = envelope(module, sub) == sub.members
            semiprime = is_completely_semiprime_submodule(module, sub, limits).holds
            if fixed != semiprime:
                witness = {
                    "submodule": sorted(sub.members),
                    "envelope_fixed": fixed,
                    "completely_semiprime": semiprime,
                }
                break
        checks.append(
            CheckResult(
                module.label, "envelope-fixed-iff-completely-semiprime", witness is None, witness
            )
        )
    return checks


def _suite_cor_gd(cat: Catalog, limits) -> list[CheckResult]:
    """Lee-Zhou reduced exactly when IFP and E_M(0) = 0."""
    checks = []
    for module in cat.modules:
        flags = module_class_flags(module)
        env_zero = envelope(module, module.zero_submodule()) == frozenset({module.zero})
        lhs = flags["lee_zhou_reduced"].holds
        rhs = flags["IFP"].holds and env_zero
        checks.append(
            CheckResult(
                module.label,
                "lee-zhou-iff-ifp-and-zero-envelope",
                lhs == rhs,
                None
                if lhs == rhs
                else {
                    "lee_zhou_reduced": lhs,
                    "IFP": flags["IFP"].holds,
                    "envelope_zero_trivial": env_zero,
                },
            )
        )
    return checks


def _suite_prop_annihilator(cat: Catalog, limits) -> list[CheckResult]:
    """N (completely) prime exactly when (N:M) is a (completely) prime
    ideal and M/N is torsion-free over R/(N:M).

    Torsion-free is elementwise for the completely prime form and
    ideal-wise for the prime form; the elementwise notion is strictly
    stronger and fails on prime submodules of matrix-ring modules.
    """
    checks = []
    for module in cat.modules:
        ring = module.ring
        cp_witness = None
        prime_witness = None
        for sub in submodule_lattice(module, limits):
            if not sub.is_proper():
                continue  # N = M: both sides fail by properness
            ann = annihilator(sub)
            lhs_cp = is_completely_prime_submodule(module, sub, limits).holds
            rhs_cp = (
                is_completely_prime_ideal(ring, ann, limits).holds
                and quotient_torsion_free(module, sub, limits).holds
            )
            if lhs_cp != rhs_cp and cp_witness is None:
                cp_witness = {
                    "submodule": sorted(sub.members),
                    "annihilator": sorted(ann.members),
                    "completely_prime_submodule": lhs_cp,
                    "ideal_and_torsion_free": rhs_cp,
                }
            lhs_p = is_prime_submodule(module, sub, limits).holds
            rhs_p = (
                is_prime_ideal(ring, ann, limits).holds
                and quotient_ideal_torsion_free(module, sub, limits).holds
            )
            if lhs_p != rhs_p and prime_witness is None:
                prime_witness = {
                    "submodule": sorted(sub.members),
                    "annihilator": sorted(ann.members),
                    "prime_submodule": lhs_p,
                    "ideal_and_torsion_free": rhs_p,
                }
        checks.append(
            CheckResult(
                module.label, "completely-prime-via-annihilator", cp_witness is None, cp_witness
            )
        )
        checks.append(
            CheckResult(module.label, "prime-via-annihilator", prime_witness is None, prime_witness)
        )
    return checks


def _suite_prop_pf(cat: Catalog, limits) -> list[CheckResult]:
    """M satisfies the complete radical formula exactly when every
    completely semiprime submodule is an intersection of completely
    prime submodules."""
    checks = []
    for module in cat.modules:
        crf = satisfies_crf(module, limits).holds
        witness = None
        fixed_everywhere = True
        for sub in submodule_lattice(module, limits):
            if not sub.is_proper():
                continue
            if not is_completely_semiprime_submodule(module, sub, limits).holds:
                continue
            rad = beta_co_s(module, sub, limits)
            if rad.members != sub.members:
                fixed_everywhere = False
                witness = _sets(submodule=sub.members, beta_co_s=rad.members)
                break
        ok = crf == fixed_everywhere
        checks.append(
            CheckResult(
                module.label,
                "crf-iff-semiprimes-are-radical-fixed",
                ok,
                None
                if ok
                else {"satisfies_crf": crf, "all_fixed": fixed_everywhere, "first_unfixed": witness},
            )
        )
    return checks


def _suite_prop_ccc(cat: Catalog, limits) -> list[CheckResult]:
    """On 2-primal modules the two radical formulas agree."""
    checks = []
    for module in cat.modules:
        if not is_two_primal_module(module, limits).holds:
            continue
        rf = satisfies_rf(module, limits).holds
        crf = satisfies_crf(module, limits).holds
        checks.append(
            CheckResult(
                module.label,
                "rf-iff-crf",
                rf == crf,
                None if rf == crf else {"satisfies_rf": rf, "satisfies_crf": crf},
            )
        )
    return checks


def _suite_thm_rf(cat: Catalog, limits) -> list[CheckResult]:
    """On modules satisfying the complete radical formula, these agree:
    completely semiprime, <E_M(0)> = 0, beta_co = 0, subdirect product
    of completely prime quotients exists."""
    checks = []
    positives = 0
    negatives = 0
    for module in cat.modules:
        if not satisfies_crf(module, limits).holds:
            continue
        report = radical_report(module, limits)
        semiprime = report.class_flags["completely_semiprime"].holds
        env_zero = report.envelope_zero.is_zero()
        rad_zero = report.beta_co.is_zero()
        decomposition = subdirect_decomposition(module, limits)
        decomposed = decomposition.exists and decomposition.verdict.holds
        values = (semiprime, env_zero, rad_zero, decomposed)
        ok = len(set(values)) == 1
        if rad_zero:
            positives += 1
        else:
            negatives += 1
        checks.append(
            CheckResult(
                module.label,
                "four-way-equivalence",
                ok,
                None
                if ok
                else {
                    "completely_semiprime": semiprime,
                    "envelope_zero_trivial": env_zero,
                    "beta_co_zero": rad_zero,
                    "subdirect_decomposition": decomposed,
                },
            )
        )
    both = positives > 0 and negatives > 0
    checks.append(
        CheckResult(
            "catalog",
            "has-positive-and-negative-instances",
            both,
            None if both else {"positives": positives, "negatives": negatives},
        )
    )
    return checks


def _suite_thm_fg(cat: Catalog, limits) -> list[CheckResult]:
    """Cyclic modules over 2-primal rings satisfy both formulas, are
    2-primal and have N_s = <E> = beta_co = beta."""
    checks = []
    cyclic_quotients = []
    for ring in cat.rings:
        if not is_two_primal_ring(ring, limits).holds:
            continue
        for ideal in all_substructures(ring, LEFT_IDEAL, limits):
            cyclic_quotients.append(module_cyclic(ring, ideal, limits))
    for module in cyclic_quotients:
        report = radical_report(module, limits)
        equal_chain = (
            report.strongly_nilpotent.members
            == report.envelope_zero.members
            == report.beta_co.members
            == report.beta.members
        )
        ok = (
            report.class_flags["satisfies_rf"].holds
            and report.class_flags["satisfies_crf"].holds
            and report.class_flags["two_primal"].holds
            and equal_chain
        )
        checks.append(
            CheckResult(
                module.label,
                "rf-and-crf-and-two-primal-and-equal-chain",
                ok,
                None
                if ok
                else {
                    "satisfies_rf": report.class_flags["satisfies_rf"].holds,
                    "satisfies_crf": report.class_flags["satisfies_crf"].holds,
                    "two_primal": report.class_flags["two_primal"].holds,
                    **_sets(
                        ns=report.strongly_nilpotent.members,
                        envelope=report.envelope_zero.members,
                        beta_co=report.beta_co.members,
                        beta=report.beta.members,
                    ),
                },
            )
        )
    return checks


def _suite_thm_lt(cat: Catalog, limits) -> list[CheckResult]:
    """Every module over a 2-primal ring is 2-primal."""
    checks = []
    for module in cat.modules:
        if not is_two_primal_ring(module.ring, limits).holds:
            continue
        verdict = is_two_primal_module(module, limits)
        checks.append(
            CheckResult(module.label, "two-primal-module", verdict.holds, verdict.witness)
        )
    return checks


def _suite_thm_pl(cat: Catalog, limits) -> list[CheckResult]:
    """The three stock families satisfy the complete radical formula;
    ring radicals agree with regular-module radicals."""
    checks = []
    for module in cat.modules:
        report = radical_report(module, limits)
        if report.beta_co.is_zero():
            ok = (
                report.class_flags["satisfies_crf"].holds
                and report.class_flags["satisfies_rf"].holds
                and report.class_flags["two_primal"].holds
                and report.strongly_nilpotent.members == report.beta.members
            )
            checks.append(
                CheckResult(
                    module.label,
                    "zero-beta_co-family",
                    ok,
                    None if ok else {flag: report.class_flags[flag].holds for flag in
                                     ("satisfies_crf", "satisfies_rf", "two_primal")},
                )
            )
        if len(report.envelope_zero.members) == module.size:
            ok = report.class_flags["satisfies_crf"].holds
            checks.append(CheckResult(module.label, "full-envelope-family", ok, None))
    for ring in cat.rings:
        regular = next(
            (m for m in cat.modules if m.ring is ring and "regular" in m.tags), None
        )
        if regular is None:
            continue
        b_ring = beta_ring(ring, limits).members
        bco_ring = beta_co_ring(ring, limits).members
        b_mod = beta(regular, limits).members
        bco_mod = beta_co(regular, limits).members
        ok = b_ring == b_mod and bco_ring == bco_mod
        checks.append(
            CheckResult(
                ring.label,
                "ring-radicals-match-regular-module",
                ok,
                None
                if ok
                else _sets(
                    beta_ring=b_ring,
                    beta_module=b_mod,
                    beta_co_ring=bco_ring,
                    beta_co_module=bco_mod,
                ),
            )
        )
        if is_two_primal_ring(ring, limits).holds:
            report = radical_report(regular, limits)
            ok = (
                report.class_flags["satisfies_crf"].holds
                and report.class_flags["satisfies_rf"].holds
                and report.class_flags["two_primal"].holds
                and report.strongly_nilpotent.members == report.beta.members
            )
            checks.append(
                CheckResult(
                    regular.label,
                    "regular-module-of-two-primal-ring",
                    ok,
                    None if ok else {flag: report.class_flags[flag].holds for flag in
                                     ("satisfies_crf", "satisfies_rf", "two_primal")},
                )
            )
    return checks


def _suite_hom_transfer(cat: Catalog, limits) -> list[CheckResult]:
    """Radical-formula status transfers along every catalog projection
    and along identities."""
    checks = []
    for module in cat.modules:
        verdict = hom_transfer_check(identity_hom(module), module.zero_submodule(), limits)
        checks.append(
            CheckResult(module.label, "identity-transfer", verdict.holds, verdict.witness)
        )
        witness = None
        for sub in submodule_lattice(module, limits):
            _, projection = quotient_module(module, sub, limits)
            inner = hom_transfer_check(projection, sub, limits)
            if not inner.holds:
                witness = dict(inner.witness or {})
                witness["kernel"] = sorted(sub.members)
                break
        checks.append(
            CheckResult(module.label, "projection-transfer-for-all-N", witness is None, witness)
        )
    return checks


def _suite_example_exx_golden(cat: Catalog, limits) -> list[CheckResult]:
    """The worked example reproduces its five published facts exactly."""
    module = module_example_exx(limits)
    report = radical_report(module, limits)
    lattice = submodule_lattice(module, limits)
    checks = [
        CheckResult(
            module.label,
            "lattice-is-zero-and-full",
            len(lattice) == 2
            and lattice[0].members == frozenset({module.zero})
            and len(lattice[1].members) == module.size,
            None,
        ),
        CheckResult(module.label, "beta-is-zero", report.beta.is_zero(), None),
        CheckResult(
            module.label,
            "beta_co-is-everything",
            len(report.beta_co.members) == module.size,
            None,
        ),
        CheckResult(
            module.label,
            "envelope-zero-is-everything",
            len(report.envelope_zero.members) == module.size,
            None,
        ),
        CheckResult(
            module.label,
            "zero-satisfies-crf-not-rf",
            submodule_satisfies_crf(module, module.zero_submodule(), limits).holds
            and not submodule_satisfies_rf(module, module.zero_submodule(), limits).holds,
            None,
        ),
        CheckResult(
            module.label,
            "not-two-primal",
            not report.class_flags["two_primal"].holds,
            None,
        ),
        CheckResult(
            module.label,
            "prime-but-not-completely-prime",
            report.class_flags["prime"].holds
            and not report.class_flags["completely_prime"].holds,
            None,
        ),
    ]
    return checks


SUITES: dict[str, tuple[str, Callable]] = {
    "eq1-chain": (
        "ring chain beta <= nil <= E_R(0) <= beta_co, with equality iff 2-primal",
        _suite_eq1_chain,
    ),
    "lemma-ll-chain": (
        "module chain N_s <= <E_M(0)> <= beta_co and <E_M(N)> <= beta_co^s(N)",
        _suite_lemma_ll_chain,
    ),
    "prop-pr": (
        "E_M(N) = N iff N completely semiprime, over proper submodules",
        _suite_prop_pr,
    ),
    "cor-gd": (
        "Lee-Zhou reduced iff IFP and E_M(0) = 0",
        _suite_cor_gd,
    ),
    "thm-prim": (
        "beta(R) = E_R(0) iff nil(R) = beta(R)",
        _suite_thm_prim,
    ),
    "cor-2m": (
        "2-primal rings: beta = nil = E_R(0) = beta_co as sets",
        _suite_cor_2m,
    ),
    "prop-p-agreement": (
        "nil(R) = beta(R) iff beta_co(R) = beta(R)",
        _suite_prop_p_agreement,
    ),
    "prop-annihilator": (
        "N (completely) prime iff (N:M) (completely) prime and M/N torsion-free",
        _suite_prop_annihilator,
    ),
    "prop-pf": (
        "crf iff every completely semiprime submodule is an intersection of completely primes",
        _suite_prop_pf,
    ),
    "prop-ccc": (
        "on 2-primal modules: rf iff crf",
        _suite_prop_ccc,
    ),
    "thm-rf": (
        "crf modules: completely semiprime = zero envelope = zero beta_co = subdirect product",
        _suite_thm_rf,
    ),
    "thm-fg": (
        "cyclic modules over 2-primal rings: rf, crf, 2-primal, equal radical chain",
        _suite_thm_fg,
    ),
    "thm-lt": (
        "every module over a 2-primal ring is 2-primal",
        _suite_thm_lt,
    ),
    "thm-pl": (
        "stock crf families and ring-vs-regular-module radical agreement",
        _suite_thm_pl,
    ),
    "hom-transfer": (
        "radical formula status transfers along projections and identities",
        _suite_hom_transfer,
    ),
    "ring-properties": (
        "Dedekind finite, nil-ideal sums, primes completely prime, semisimplicity",
        _suite_ring_properties,
    ),
    "example-exx-golden": (
        "the worked 4-element module reproduces its published facts",
        _suite_example_exx_golden,
    ),
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITES)


def run_suite(
    name: str, catalog: Catalog | None = None, limits: Limits | None = None
) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    if catalog is None:
        catalog = default_catalog(limits)
    _, runner = SUITES[name]
    checks = tuple(runner(catalog, limits))
    return SuiteReport(suite=name, passed=all(c.holds for c in checks), checks=checks)
