"""Envelopes, prime-type submodules, radicals and module/ring classes.

All predicates quantify exhaustively over element tables and enumerated
lattices, return Verdicts whose failure witnesses can be replayed
against the raw definitions, and share their expensive intermediates
through per-structure caches (structures are immutable and compared by
identity, so caching is sound).

Conventions: an intersection over an empty family of prime-type
submodules is the whole module; a primality question about the improper
submodule P = M raises NotProper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    LEFT_IDEAL,
    SUBMODULE,
    TWO_SIDED_IDEAL,
    FiniteModule,
    FiniteRing,
    ModuleHom,
    Substructure,
    quotient_module,
    quotient_ring,
    regular_module,
)
from .errors import (
    CharacterizationMismatch,
    InvariantBreach,
    KernelNotContained,
    KindMismatch,
    NotProper,
)
from .limits import Limits
from .substructures import (
    all_substructures,
    generated_substructure,
    intersect_family,
    annihilator,
)

FLAG_ORDER = (
    "prime",
    "completely_prime",
    "semiprime",
    "completely_semiprime",
    "IFP",
    "symmetric",
    "semi_symmetric",
    "lee_zhou_reduced",
    "two_primal",
    "satisfies_rf",
    "satisfies_crf",
)


@dataclass(frozen=True, eq=False)
class Verdict:
    """Outcome of a quantified check.

    When holds is False the witness is a JSON-ready record of elements
    and member lists that reproduces the failure when replayed against
    the defining condition.  `details` carries auxiliary recorded data
    (e.g. the three equivalent ring 2-primality criteria).
    """

    holds: bool
    witness: dict | None
    checked_universe: str
    details: dict | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True, eq=False)
class RadicalReport:
    """Radicals and class flags of one module.

    The containment chain N_s(M) <= <E_M(0)> <= beta_co(M) and
    beta(M) <= beta_co(M) is asserted at construction.
    """

    module: FiniteModule
    envelope_zero: Substructure
    strongly_nilpotent: Substructure
    beta: Substructure
    beta_co: Substructure
    class_flags: dict[str, Verdict]


@dataclass(frozen=True, eq=False)
class SubdirectDecomposition:
    """Family of projections onto completely prime quotients, when the
    completely prime radical vanishes; otherwise absent with the
    radical recorded as witness."""

    module: FiniteModule
    exists: bool
    factors: tuple[ModuleHom, ...]
    verdict: Verdict
    radical_witness: Substructure | None


@dataclass(frozen=True, eq=False)
class RingProperties:
    """Element/ideal-level ring facts checked at finite scale."""

    ring: FiniteRing
    dedekind_finite: Verdict
    kothe_finite_scale: Verdict
    primes_completely_prime: Verdict
    is_semisimple: Verdict


def _members_list(members) -> list[int]:
    return sorted(members)


def _mask(members) -> int:
    m = 0
    for x in members:
        m |= 1 << x
    return m


# ---------------------------------------------------------------------------
# cached per-structure scaffolding


def submodule_lattice(module: FiniteModule, limits: Limits | None = None):
    return all_substructures(module, SUBMODULE, limits)


def two_sided_ideals(ring: FiniteRing, limits: Limits | None = None):
    return all_substructures(ring, TWO_SIDED_IDEAL, limits)


def left_ideals(ring: FiniteRing, limits: Limits | None = None):
    return all_substructures(ring, LEFT_IDEAL, limits)


@lru_cache(maxsize=None)
def _scalar_image_masks(module: FiniteModule) -> tuple[int, ...]:
    """For each ring element r, the bitmask of r.M."""
    out = []
    for r in range(module.ring.size):
        row = module.action[r]
        out.append(_mask(row[m] for m in range(module.size)))
    return tuple(out)


@lru_cache(maxsize=None)
def _ideal_products(module: FiniteModule, limits: Limits | None = None):
    """Product-set masks A.N and A.M for ideals A and submodules N."""
    ideals = two_sided_ideals(module.ring, limits)
    subs = submodule_lattice(module, limits)
    act = module.action
    pair = {}
    full = {}
    everything = range(module.size)
    for ai, ideal in enumerate(ideals):
        rows = [act[a] for a in ideal.sorted_members]
        full[ai] = _mask(row[m] for row in rows for m in everything)
        for ni, sub in enumerate(subs):
            pair[ai, ni] = _mask(row[n] for row in rows for n in sub.sorted_members)
    return ideals, subs, pair, full


@lru_cache(maxsize=None)
def _envelope_power_masks(module: FiniteModule) -> tuple[tuple[int, ...], ...]:
    """For each (r, m), the bitmask of {r^k . m : k >= 1}.

    Power exponents range over the distinct powers of r, which is
    sufficient because the power sequence of a finite-ring element is
    eventually periodic.
    """
    ring = module.ring
    act = module.action
    out = []
    for r in range(ring.size):
        powers = ring.power_sequence(r)
        rows = [act[p] for p in powers]
        out.append(tuple(_mask(row[m] for row in rows) for m in range(module.size)))
    return tuple(out)


# ---------------------------------------------------------------------------
# envelopes


def envelope(module: FiniteModule, submodule: Substructure) -> frozenset[int]:
    """E_M(N) = {r.m : r^k.m in N for some k >= 1}; not a submodule in
    general."""
    _require_submodule(module, submodule)
    pmasks = _envelope_power_masks(module)
    nmask = submodule.mask
    act = module.action
    found = set()
    for r in range(module.ring.size):
        prow = pmasks[r]
        arow = act[r]
        for m in range(module.size):
            if prow[m] & nmask:
                found.add(arow[m])
    return frozenset(found)


def envelope_submodule(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Substructure:
    """<E_M(N)>: the submodule generated by the envelope."""
    return generated_substructure(module, SUBMODULE, envelope(module, submodule), limits)


# ---------------------------------------------------------------------------
# prime-type predicates for submodules


def _require_submodule(module: FiniteModule, sub: Substructure) -> None:
    if sub.parent is not module or sub.kind != SUBMODULE:
        raise KindMismatch("expected a submodule of this module")


def _require_proper(module: FiniteModule, sub: Substructure) -> None:
    _require_submodule(module, sub)
    if not sub.is_proper():
        raise NotProper("P = M is not a candidate prime-type submodule")


def is_prime_submodule(
    module: FiniteModule, candidate: Substructure, limits: Limits | None = None
) -> Verdict:
    """Prime: A.N <= P forces N <= P or A.M <= P, for all two-sided
    ideals A and submodules N."""
    _require_proper(module, candidate)
    ideals, subs, pair, full = _ideal_products(module, limits)
    pmask = candidate.mask
    universe = f"{len(ideals)} two-sided ideals x {len(subs)} submodules"
    for ai, ideal in enumerate(ideals):
        if full[ai] & ~pmask == 0:
            continue  # A.M <= P: the conclusion always holds for this A
        for ni, sub in enumerate(subs):
            if pair[ai, ni] & ~pmask == 0 and sub.members - candidate.members:
                witness = {
                    "ideal": _members_list(ideal.members),
                    "submodule": _members_list(sub.members),
                    "candidate": _members_list(candidate.members),
                }
                return Verdict(False, witness, universe)
    return Verdict(True, None, universe)


def is_completely_prime_submodule(
    module: FiniteModule, candidate: Substructure, limits: Limits | None = None
) -> Verdict:
    """Completely prime: r.m in P forces m in P or r.M <= P."""
    _require_proper(module, candidate)
    members = candidate.members
    pmask = candidate.mask
    rm_masks = _scalar_image_masks(module)
    act = module.action
    universe = f"{module.ring.size} ring elements x {module.size} module elements"
    for r in range(module.ring.size):
        if rm_masks[r] & ~pmask == 0:
            continue
        row = act[r]
        for m in range(module.size):
            if row[m] in members and m not in members:
                return Verdict(False, {"r": r, "m": m}, universe)
    return Verdict(True, None, universe)


def is_semiprime_submodule(
    module: FiniteModule, candidate: Substructure, limits: Limits | None = None
) -> Verdict:
    """Semiprime: a.R.a.m <= P forces a.m in P."""
    _require_proper(module, candidate)
    members = candidate.members
    ring = module.ring
    act = module.action
    universe = f"{ring.size}^2 x {module.size} triples a, r, m"
    for a in range(ring.size):
        arow = act[a]
        for m in range(module.size):
            if arow[m] in members:
                continue
            am = arow[m]
            if all(arow[act[r][am]] in members for r in range(ring.size)):
                return Verdict(False, {"a": a, "m": m}, universe)
    return Verdict(True, None, universe)


def is_completely_semiprime_submodule(
    module: FiniteModule, candidate: Substructure, limits: Limits | None = None
) -> Verdict:
    """Completely semiprime: a^2.m in P forces a.m in P."""
    _require_proper(module, candidate)
    members = candidate.members
    ring = module.ring
    act = module.action
    universe = f"{ring.size} x {module.size} pairs a, m"
    for a in range(ring.size):
        sq_row = act[ring.mul[a][a]]
        arow = act[a]
        for m in range(module.size):
            if sq_row[m] in members and arow[m] not in members:
                return Verdict(False, {"a": a, "m": m}, universe)
    return Verdict(True, None, universe)


@lru_cache(maxsize=None)
def prime_submodules(
    module: FiniteModule, limits: Limits | None = None
) -> tuple[Substructure, ...]:
    return tuple(
        sub
        for sub in submodule_lattice(module, limits)
        if sub.is_proper() and is_prime_submodule(module, sub, limits).holds
    )


@lru_cache(maxsize=None)
def completely_prime_submodules(
    module: FiniteModule, limits: Limits | None = None
) -> tuple[Substructure, ...]:
    return tuple(
        sub
        for sub in submodule_lattice(module, limits)
        if sub.is_proper() and is_completely_prime_submodule(module, sub, limits).holds
    )


# ---------------------------------------------------------------------------
# radicals


def beta(module: FiniteModule, limits: Limits | None = None) -> Substructure:
    """Prime radical: intersection of all prime submodules (M if none)."""
    return intersect_family(module, SUBMODULE, prime_submodules(module, limits))


def beta_co(module: FiniteModule, limits: Limits | None = None) -> Substructure:
    """Completely prime radical (M when there are no completely prime
    submodules)."""
    return intersect_family(module, SUBMODULE, completely_prime_submodules(module, limits))


def beta_s(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Substructure:
    """Intersection of the prime submodules containing N."""
    _require_submodule(module, submodule)
    family = [p for p in prime_submodules(module, limits) if submodule.members <= p.members]
    return intersect_family(module, SUBMODULE, family)


def beta_co_s(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Substructure:
    """Intersection of the completely prime submodules containing N."""
    _require_submodule(module, submodule)
    family = [
        p
        for p in completely_prime_submodules(module, limits)
        if submodule.members <= p.members
    ]
    return intersect_family(module, SUBMODULE, family)


# ---------------------------------------------------------------------------
# nilpotence


def nil_elements(ring: FiniteRing) -> frozenset[int]:
    """All a with a^k = 0 for some k (k bounded by the power period)."""
    return frozenset(a for a in range(ring.size) if ring.zero in ring.power_sequence(a))


def is_nil_left_ideal(ring: FiniteRing, ideal: Substructure) -> Verdict:
    """Every member nilpotent?"""
    if ideal.parent is not ring or ideal.kind not in (LEFT_IDEAL, TWO_SIDED_IDEAL):
        raise KindMismatch("expected a left or two-sided ideal of this ring")
    nil = nil_elements(ring)
    universe = f"{len(ideal.members)} ideal members"
    for a in ideal.sorted_members:
        if a not in nil:
            return Verdict(False, {"element": a}, universe)
    return Verdict(True, None, universe)


@lru_cache(maxsize=None)
def _successor_masks(ring: FiniteRing) -> tuple[int, ...]:
    """For each a, the bitmask of a.R.a (the allowed next sequence terms)."""
    mul = ring.mul
    out = []
    for a in range(ring.size):
        row = mul[a]
        out.append(_mask(mul[row[r]][a] for r in range(ring.size)))
    return tuple(out)


@lru_cache(maxsize=None)
def _persistent_masks(module: FiniteModule) -> tuple[int, ...]:
    """Greatest fixpoint per module element m: ring elements a from
    which some sequence a_1 = a, a_{n+1} in a_n.R.a_n keeps
    a_k.R.m != 0 forever.

    a is eventually annihilating for m exactly when a is outside this
    set: any infinite annihilation-avoiding sequence must stay inside a
    set where every member has a successor in the set, and conversely
    such a set lets one be built.
    """
    ring = module.ring
    act = module.action
    succ = _successor_masks(ring)
    zero = module.zero
    masks = []
    for m in range(module.size):
        live = 0
        for a in range(ring.size):
            row_a = ring.mul[a]
            if any(act[row_a[r]][m] != zero for r in range(ring.size)):
                live |= 1 << a
        while True:
            refined = 0
            for a in range(ring.size):
                if (live >> a) & 1 and succ[a] & live:
                    refined |= 1 << a
            if refined == live:
                break
            live = refined
        masks.append(live)
    return tuple(masks)


def is_eventually_annihilating(module: FiniteModule, a: int, m: int) -> bool:
    """True when every sequence a_1 = a, a_{n+1} in a_n.R.a_n reaches
    some a_k with a_k.R.m = 0."""
    return not (_persistent_masks(module)[m] >> a) & 1


def strongly_nilpotent_submodule(
    module: FiniteModule, limits: Limits | None = None
) -> Substructure:
    """N_s(M): additive closure of the products a.m whose every
    multiplicative sequence eventually annihilates m.

    The closure is asserted (not forced) to be action-closed; a breach
    would contradict the submodule claim this set carries and is raised
    as InvariantBreach rather than repaired.
    """
    ring = module.ring
    act = module.action
    persistent = _persistent_masks(module)
    products = {module.zero}
    for m in range(module.size):
        live = persistent[m]
        for a in range(ring.size):
            if not (live >> a) & 1:
                products.add(act[a][m])
    members = set(products)
    queue = sorted(members)
    add = module.add
    while queue:
        x = queue.pop()
        row = add[x]
        for y in list(members):
            s = row[y]
            if s not in members:
                members.add(s)
                queue.append(s)
    for r in range(ring.size):
        row = act[r]
        for x in members:
            if row[x] not in members:
                raise InvariantBreach(
                    f"strongly nilpotent set of {module.label!r} is not action-closed "
                    f"at r={r}, x={x}"
                )
    return Substructure(module, SUBMODULE, frozenset(members))


# ---------------------------------------------------------------------------
# element-condition module classes


@lru_cache(maxsize=None)
def _principal_two_sided_ideals(ring: FiniteRing) -> tuple[Substructure, ...]:
    return tuple(
        generated_substructure(ring, TWO_SIDED_IDEAL, (a,)) for a in range(ring.size)
    )


def module_class_flags(module: FiniteModule) -> dict[str, Verdict]:
    """IFP, symmetric, semi-symmetric and Lee-Zhou reduced, by
    exhaustive element scans."""
    ring = module.ring
    act = module.action
    mul = ring.mul
    zero = module.zero
    n_r, n_m = ring.size, module.size

    ifp = Verdict(True, None, f"{n_r} x {n_m} pairs a, m")
    for a in range(n_r):
        arow = act[a]
        for m in range(n_m):
            if arow[m] != zero:
                continue
            for r in range(n_r):
                if act[mul[a][r]][m] != zero:
                    ifp = Verdict(False, {"a": a, "r": r, "m": m}, ifp.checked_universe)
                    break
            if not ifp.holds:
                break
        if not ifp.holds:
            break

    symmetric = Verdict(True, None, f"{n_r}^2 x {n_m} triples a, b, m")
    done = False
    for a in range(n_r):
        for b in range(n_r):
            ab_row = act[mul[a][b]]
            ba_row = act[mul[b][a]]
            for m in range(n_m):
                if ab_row[m] == zero and ba_row[m] != zero:
                    symmetric = Verdict(
                        False, {"a": a, "b": b, "m": m}, symmetric.checked_universe
                    )
                    done = True
                    break
            if done:
                break
        if done:
            break

    semi = Verdict(True, None, f"{n_r} x {n_m} pairs a, m against (a)^2")
    principal = _principal_two_sided_ideals(ring)
    done = False
    for a in range(n_r):
        sq_row = act[mul[a][a]]
        ideal = principal[a].sorted_members
        for m in range(n_m):
            if sq_row[m] != zero:
                continue
            for x in ideal:
                xrow = mul[x]
                for y in ideal:
                    if act[xrow[y]][m] != zero:
                        semi = Verdict(
                            False,
                            {"a": a, "x": x, "y": y, "m": m},
                            semi.checked_universe,
                        )
                        done = True
                        break
                if done:
                    break
            if done:
                break
        if done:
            break

    reduced = Verdict(True, None, f"{n_r} x {n_m} pairs a, m")
    done = False
    for a in range(n_r):
        sq_row = act[mul[a][a]]
        for m in range(n_m):
            if sq_row[m] != zero:
                continue
            for r in range(n_r):
                if act[mul[a][r]][m] != zero:
                    reduced = Verdict(
                        False, {"a": a, "r": r, "m": m}, reduced.checked_universe
                    )
                    done = True
                    break
            if done:
                break
        if done:
            break

    return {
        "IFP": ifp,
        "symmetric": symmetric,
        "semi_symmetric": semi,
        "lee_zhou_reduced": reduced,
    }


# ---------------------------------------------------------------------------
# ring-level radicals and primality


def is_prime_ideal(
    ring: FiniteRing, candidate: Substructure, limits: Limits | None = None
) -> Verdict:
    """Prime ideal: A.B <= P forces A <= P or B <= P over two-sided
    ideals."""
    _require_proper_ideal(ring, candidate)
    ideals = two_sided_ideals(ring, limits)
    products = _ideal_pair_products(ring, limits)
    pmask = candidate.mask
    universe = f"{len(ideals)}^2 ideal pairs"
    for ai, a_ideal in enumerate(ideals):
        a_in = a_ideal.members <= candidate.members
        for bi, b_ideal in enumerate(ideals):
            if products[ai, bi] & ~pmask == 0 and not a_in and not (
                b_ideal.members <= candidate.members
            ):
                witness = {
                    "ideal_a": _members_list(a_ideal.members),
                    "ideal_b": _members_list(b_ideal.members),
                }
                return Verdict(False, witness, universe)
    return Verdict(True, None, universe)


def is_completely_prime_ideal(
    ring: FiniteRing, candidate: Substructure, limits: Limits | None = None
) -> Verdict:
    """Completely prime ideal: a.b in P forces a in P or b in P."""
    _require_proper_ideal(ring, candidate)
    members = candidate.members
    mul = ring.mul
    universe = f"{ring.size}^2 element pairs"
    for a in range(ring.size):
        if a in members:
            continue
        row = mul[a]
        for b in range(ring.size):
            if row[b] in members and b not in members:
                return Verdict(False, {"a": a, "b": b}, universe)
    return Verdict(True, None, universe)


def _require_proper_ideal(ring: FiniteRing, sub: Substructure) -> None:
    if sub.parent is not ring or sub.kind != TWO_SIDED_IDEAL:
        raise KindMismatch("expected a two-sided ideal of this ring")
    if len(sub.members) == ring.size:
        raise NotProper("P = R is not a candidate prime-type ideal")


@lru_cache(maxsize=None)
def _ideal_pair_products(ring: FiniteRing, limits: Limits | None = None):
    ideals = two_sided_ideals(ring, limits)
    mul = ring.mul
    out = {}
    for ai, a_ideal in enumerate(ideals):
        rows = [mul[a] for a in a_ideal.sorted_members]
        for bi, b_ideal in enumerate(ideals):
            out[ai, bi] = _mask(row[b] for row in rows for b in b_ideal.sorted_members)
    return out


@lru_cache(maxsize=None)
def prime_ideals(ring: FiniteRing, limits: Limits | None = None) -> tuple[Substructure, ...]:
    return tuple(
        ideal
        for ideal in two_sided_ideals(ring, limits)
        if len(ideal.members) < ring.size and is_prime_ideal(ring, ideal, limits).holds
    )


@lru_cache(maxsize=None)
def completely_prime_ideals(
    ring: FiniteRing, limits: Limits | None = None
) -> tuple[Substructure, ...]:
    return tuple(
        ideal
        for ideal in two_sided_ideals(ring, limits)
        if len(ideal.members) < ring.size
        and is_completely_prime_ideal(ring, ideal, limits).holds
    )


def beta_ring(ring: FiniteRing, limits: Limits | None = None) -> Substructure:
    """Prime radical of the ring (intersection of prime ideals; R when
    there are none)."""
    return intersect_family(ring, TWO_SIDED_IDEAL, prime_ideals(ring, limits))


def beta_co_ring(ring: FiniteRing, limits: Limits | None = None) -> Substructure:
    """Completely prime radical (generalized nilradical) of the ring."""
    return intersect_family(ring, TWO_SIDED_IDEAL, completely_prime_ideals(ring, limits))


def envelope_zero_ring(ring: FiniteRing, limits: Limits | None = None) -> frozenset[int]:
    """E_R(0): the envelope of the zero submodule of the regular module."""
    if ring.size == 1:
        return frozenset({ring.zero})
    reg = regular_module(ring, limits)
    return envelope(reg, reg.zero_submodule())


def strongly_nilpotent_ring_set(ring: FiniteRing, limits: Limits | None = None) -> frozenset[int]:
    """N_s(R) computed on the regular module."""
    if ring.size == 1:
        return frozenset({ring.zero})
    reg = regular_module(ring, limits)
    return strongly_nilpotent_submodule(reg, limits).members


# ---------------------------------------------------------------------------
# 2-primality


def is_two_primal_module(module: FiniteModule, limits: Limits | None = None) -> Verdict:
    """2-primal module: beta(M) = beta_co(M)."""
    b = beta(module, limits)
    bco = beta_co(module, limits)
    holds = b.members == bco.members
    witness = None
    if not holds:
        witness = {
            "beta": _members_list(b.members),
            "beta_co": _members_list(bco.members),
        }
    return Verdict(holds, witness, f"radicals of {module.label}")


def is_two_primal_submodule(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Verdict:
    """2-primal submodule: the quotient M/N has equal radicals."""
    _require_submodule(module, submodule)
    quotient, _ = quotient_module(module, submodule, limits)
    inner = is_two_primal_module(quotient, limits)
    return Verdict(
        inner.holds, inner.witness, f"radicals of quotient {quotient.label}", inner.details
    )


def is_two_primal_ring(ring: FiniteRing, limits: Limits | None = None) -> Verdict:
    """2-primal ring, decided through all three equivalent criteria.

    nil(R) = beta(R), beta_co(R) = beta(R) and beta(R) = E_R(0) are
    each computed; they are theorems of one another, so a disagreement
    is an engine bug and raises CharacterizationMismatch.
    """
    nil = nil_elements(ring)
    b = beta_ring(ring, limits).members
    bco = beta_co_ring(ring, limits).members
    env = envelope_zero_ring(ring, limits)
    c_nil = nil == b
    c_co = bco == b
    c_env = b == env
    if not (c_nil == c_co == c_env):
        raise CharacterizationMismatch(
            f"2-primality criteria disagree on {ring.label!r}: "
            f"nil= {c_nil}, beta_co= {c_co}, envelope= {c_env}"
        )
    details = {
        "nil_equals_beta": c_nil,
        "beta_co_equals_beta": c_co,
        "beta_equals_envelope": c_env,
        "nil": _members_list(nil),
        "beta": _members_list(b),
        "beta_co": _members_list(bco),
        "envelope_zero": _members_list(env),
    }
    witness = None
    if not c_nil:
        witness = {"nil": _members_list(nil), "beta": _members_list(b)}
    return Verdict(c_nil, witness, f"ideal lattice and elements of {ring.label}", details)


def is_two_primal_ideal(
    ring: FiniteRing, ideal: Substructure, limits: Limits | None = None
) -> Verdict:
    """2-primal ideal: the quotient ring R/I has equal radicals."""
    quotient, _ = quotient_ring(ring, ideal, limits=limits)
    b = beta_ring(quotient, limits).members
    bco = beta_co_ring(quotient, limits).members
    holds = b == bco
    witness = None
    if not holds:
        witness = {"beta": _members_list(b), "beta_co": _members_list(bco)}
    return Verdict(holds, witness, f"radicals of quotient ring {quotient.label}")


# ---------------------------------------------------------------------------
# radical formulas


def submodule_satisfies_rf(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Verdict:
    """<E_M(N)> = beta^s(N)?"""
    env = envelope_submodule(module, submodule, limits)
    rad = beta_s(module, submodule, limits)
    return _formula_verdict(submodule, env, rad)


def submodule_satisfies_crf(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Verdict:
    """<E_M(N)> = beta_co^s(N)?"""
    env = envelope_submodule(module, submodule, limits)
    rad = beta_co_s(module, submodule, limits)
    return _formula_verdict(submodule, env, rad)


def _formula_verdict(submodule: Substructure, env: Substructure, rad: Substructure) -> Verdict:
    holds = env.members == rad.members
    witness = None
    if not holds:
        witness = {
            "submodule": _members_list(submodule.members),
            "envelope_submodule": _members_list(env.members),
            "radical": _members_list(rad.members),
        }
    return Verdict(holds, witness, "one submodule")


@lru_cache(maxsize=None)
def satisfies_rf(module: FiniteModule, limits: Limits | None = None) -> Verdict:
    """Every submodule satisfies the radical formula?"""
    return _formula_over_lattice(module, submodule_satisfies_rf, limits)


@lru_cache(maxsize=None)
def satisfies_crf(module: FiniteModule, limits: Limits | None = None) -> Verdict:
    """Every submodule satisfies the complete radical formula?"""
    return _formula_over_lattice(module, submodule_satisfies_crf, limits)


def _formula_over_lattice(module: FiniteModule, check, limits) -> Verdict:
    lattice = submodule_lattice(module, limits)
    universe = f"all {len(lattice)} submodules of {module.label}"
    for sub in lattice:
        inner = check(module, sub, limits)
        if not inner.holds:
            return Verdict(False, inner.witness, universe)
    return Verdict(True, None, universe)


# ---------------------------------------------------------------------------
# transfer along epimorphisms


def hom_transfer_check(
    phi: ModuleHom, submodule: Substructure, limits: Limits | None = None
) -> Verdict:
    """Instance check that (complete) radical-formula status transfers
    along an epimorphism, forwards through the image of N and backwards
    through its preimage (which equals N when ker phi <= N)."""
    phi.require_epimorphism()
    _require_submodule(phi.source, submodule)
    if not phi.kernel.members <= submodule.members:
        raise KernelNotContained("transfer requires ker(phi) inside the submodule")
    image_sub = phi.apply_substructure(submodule)
    preimage_sub = phi.preimage_substructure(image_sub)

    crf_src = submodule_satisfies_crf(phi.source, submodule, limits).holds
    crf_img = submodule_satisfies_crf(phi.target, image_sub, limits).holds
    crf_pre = submodule_satisfies_crf(phi.source, preimage_sub, limits).holds
    rf_src = submodule_satisfies_rf(phi.source, submodule, limits).holds
    rf_img = submodule_satisfies_rf(phi.target, image_sub, limits).holds
    rf_pre = submodule_satisfies_rf(phi.source, preimage_sub, limits).holds

    implications = {
        "crf_pushes_forward": (not crf_src) or crf_img,
        "crf_pulls_back": (not crf_img) or crf_pre,
        "rf_pushes_forward": (not rf_src) or rf_img,
        "rf_pulls_back": (not rf_img) or rf_pre,
    }
    details = {
        "crf": {"source": crf_src, "image": crf_img, "preimage": crf_pre},
        "rf": {"source": rf_src, "image": rf_img, "preimage": rf_pre},
    }
    holds = all(implications.values())
    witness = None
    if not holds:
        failing = sorted(name for name, ok in implications.items() if not ok)
        witness = {
            "failing_implications": failing,
            "submodule": _members_list(submodule.members),
            "image_submodule": _members_list(image_sub.members),
        }
    return Verdict(
        holds, witness, f"transfer {phi.source.label} -> {phi.target.label}", details
    )


# ---------------------------------------------------------------------------
# subdirect decomposition


def subdirect_decomposition(
    module: FiniteModule, limits: Limits | None = None
) -> SubdirectDecomposition:
    """Projections onto M/N for all completely prime N, when their
    intersection is zero; absent (with beta_co as witness) otherwise."""
    bco = beta_co(module, limits)
    if not bco.is_zero():
        verdict = Verdict(
            False,
            {"beta_co": _members_list(bco.members)},
            f"completely prime submodules of {module.label}",
        )
        return SubdirectDecomposition(module, False, (), verdict, bco)
    factors = []
    kernels: frozenset[int] | None = None
    surjective = True
    for sub in completely_prime_submodules(module, limits):
        _, projection = quotient_module(module, sub, limits)
        factors.append(projection)
        surjective = surjective and projection.is_surjective()
        k = projection.kernel.members
        kernels = k if kernels is None else kernels & k
    joint_kernel = kernels if kernels is not None else frozenset(range(module.size))
    injective = joint_kernel == frozenset({module.zero})
    holds = injective and surjective
    witness = None
    if not holds:
        witness = {"joint_kernel": _members_list(joint_kernel)}
    verdict = Verdict(
        holds,
        witness,
        f"{len(factors)} completely prime quotients of {module.label}",
    )
    return SubdirectDecomposition(module, True, tuple(factors), verdict, None)


# ---------------------------------------------------------------------------
# ring properties


def quotient_torsion_free(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Verdict:
    """M/N torsion-free over R/(N:M), elementwise: r outside (N:M) and
    m outside N never multiply into N.

    This is the notion matching completely prime submodules: it says
    the quotient is a completely prime module over the quotient ring.
    """
    _require_submodule(module, submodule)
    ann = annihilator(submodule).members
    members = submodule.members
    act = module.action
    universe = f"elements outside (N:M) x elements outside N in {module.label}"
    for r in range(module.ring.size):
        if r in ann:
            continue
        row = act[r]
        for m in range(module.size):
            if m not in members and row[m] in members:
                return Verdict(False, {"r": r, "m": m}, universe)
    return Verdict(True, None, universe)


def quotient_ideal_torsion_free(
    module: FiniteModule, submodule: Substructure, limits: Limits | None = None
) -> Verdict:
    """M/N ideal-torsion-free over R/(N:M): no two-sided ideal outside
    (N:M) multiplies an element outside N into N.

    This is the notion matching prime submodules (the quotient is a
    prime module over the quotient ring); the elementwise notion is
    strictly stronger, e.g. the regular module of M2(Z2) is prime with
    zero annihilator yet has zero divisors.
    """
    _require_submodule(module, submodule)
    ann = annihilator(submodule).members
    members = submodule.members
    act = module.action
    ideals = two_sided_ideals(module.ring, limits)
    universe = (
        f"{len(ideals)} two-sided ideals outside (N:M) x elements outside N "
        f"in {module.label}"
    )
    for ideal in ideals:
        if ideal.members <= ann:
            continue
        rows = [act[a] for a in ideal.sorted_members]
        for m in range(module.size):
            if m not in members and all(row[m] in members for row in rows):
                return Verdict(
                    False,
                    {"ideal": _members_list(ideal.members), "m": m},
                    universe,
                )
    return Verdict(True, None, universe)


def ring_properties(ring: FiniteRing, limits: Limits | None = None) -> RingProperties:
    """Dedekind finiteness, nil-ideal sums, prime-vs-completely-prime
    ideals and semisimplicity, all at finite scale."""
    mul = ring.mul
    n = ring.size

    dedekind = Verdict(True, None, f"{n}^2 element pairs")
    for a in range(n):
        row = mul[a]
        for b in range(n):
            if row[b] == ring.one and mul[b][a] != ring.one:
                dedekind = Verdict(False, {"a": a, "b": b}, dedekind.checked_universe)
                break
        if not dedekind.holds:
            break

    ideals = left_ideals(ring, limits)
    nil = nil_elements(ring)
    nil_ideals = [i for i in ideals if i.members <= nil]
    kothe = Verdict(True, None, f"{len(nil_ideals)} nil left ideals, pairwise sums")
    done = False
    for a_ideal in nil_ideals:
        for b_ideal in nil_ideals:
            total = {ring.add[x][y] for x in a_ideal.members for y in b_ideal.members}
            bad = sorted(total - nil)
            if bad:
                kothe = Verdict(
                    False,
                    {
                        "ideal_a": _members_list(a_ideal.members),
                        "ideal_b": _members_list(b_ideal.members),
                        "element": bad[0],
                    },
                    kothe.checked_universe,
                )
                done = True
                break
        if done:
            break

    primes = prime_ideals(ring, limits)
    pcp = Verdict(True, None, f"{len(primes)} prime ideals")
    for p in primes:
        inner = is_completely_prime_ideal(ring, p, limits)
        if not inner.holds:
            witness = dict(inner.witness or {})
            witness["prime_ideal"] = _members_list(p.members)
            pcp = Verdict(False, witness, pcp.checked_universe)
            break

    proper = [i for i in ideals if len(i.members) < n]
    maximal = [
        i
        for i in proper
        if not any(other is not i and i.members < other.members for other in proper)
    ]
    jacobson: frozenset[int] = frozenset(range(n))
    for i in maximal:
        jacobson &= i.members
    semisimple_holds = jacobson == frozenset({ring.zero})
    semisimple = Verdict(
        semisimple_holds,
        None if semisimple_holds else {"jacobson_radical": _members_list(jacobson)},
        f"{len(maximal)} maximal left ideals",
    )

    return RingProperties(ring, dedekind, kothe, pcp, semisimple)


# ---------------------------------------------------------------------------
# the full per-module report


@lru_cache(maxsize=None)
def radical_report(module: FiniteModule, limits: Limits | None = None) -> RadicalReport:
    """All radicals and class flags of one module, with the containment
    chain asserted."""
    env0 = envelope_submodule(module, module.zero_submodule(), limits)
    ns = strongly_nilpotent_submodule(module, limits)
    b = beta(module, limits)
    bco = beta_co(module, limits)
    if not ns.members <= env0.members:
        raise InvariantBreach(f"N_s not inside <E(0)> on {module.label!r}")
    if not env0.members <= bco.members:
        raise InvariantBreach(f"<E(0)> not inside beta_co on {module.label!r}")
    if not b.members <= bco.members:
        raise InvariantBreach(f"beta not inside beta_co on {module.label!r}")

    flags: dict[str, Verdict] = {}
    if module.size == 1:
        degenerate = "degenerate zero module"
        # The zero submodule is improper, so prime-type flags cannot hold;
        # semiprime-type flags hold vacuously (no nonzero elements).
        improper = {"improper": True, "reason": "zero submodule equals the module"}
        flags["prime"] = Verdict(False, dict(improper), degenerate)
        flags["completely_prime"] = Verdict(False, dict(improper), degenerate)
        flags["semiprime"] = Verdict(True, None, degenerate)
        flags["completely_semiprime"] = Verdict(True, None, degenerate)
    else:
        zero_sub = module.zero_submodule()
        flags["prime"] = is_prime_submodule(module, zero_sub, limits)
        flags["completely_prime"] = is_completely_prime_submodule(module, zero_sub, limits)
        flags["semiprime"] = is_semiprime_submodule(module, zero_sub, limits)
        flags["completely_semiprime"] = is_completely_semiprime_submodule(
            module, zero_sub, limits
        )
    flags.update(module_class_flags(module))
    flags["two_primal"] = is_two_primal_module(module, limits)
    flags["satisfies_rf"] = satisfies_rf(module, limits)
    flags["satisfies_crf"] = satisfies_crf(module, limits)
    flags = {name: flags[name] for name in FLAG_ORDER}

    return RadicalReport(
        module=module,
        envelope_zero=env0,
        strongly_nilpotent=ns,
        beta=b,
        beta_co=bco,
        class_flags=flags,
    )
