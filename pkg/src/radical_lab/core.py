"""Finite unital rings and finite left modules with exact table arithmetic.

Elements are dense indices 0..size-1 and every operation is a total
lookup table, so all downstream computations are exhaustive and exact.
Structures are validated at construction (full axiom sweep, vectorized
with numpy) and immutable afterwards; equality of structures is object
identity, which makes them safe cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AxiomViolation,
    EmptyList,
    KindMismatch,
    NotEpimorphism,
    RingMismatch,
    SizeGuardExceeded,
)
from .limits import Limits, default_limits

Table = tuple[tuple[int, ...], ...]

SUBMODULE = "submodule"
LEFT_IDEAL = "left-ideal"
TWO_SIDED_IDEAL = "two-sided-ideal"
KINDS = (SUBMODULE, LEFT_IDEAL, TWO_SIDED_IDEAL)


# ---------------------------------------------------------------------------
# table plumbing


def _freeze_table(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


def _table_array(table: Sequence[Sequence[int]], rows: int, cols: int, name: str) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (rows, cols):
        raise AxiomViolation(f"{name}-shape", (), f"expected {rows}x{cols}, got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= cols):
        bad = np.argwhere((arr < 0) | (arr >= cols))[0]
        raise AxiomViolation(f"{name}-range", (int(bad[0]), int(bad[1])))
    return arr


def _associativity_witness(op: np.ndarray) -> tuple[int, int, int] | None:
    """First (i, j, k) with (i op j) op k != i op (j op k), or None.

    Checked row-by-row to keep memory at O(n^2).
    """
    for i in range(op.shape[0]):
        left = op[op[i], :]
        right = op[i][op]
        if not np.array_equal(left, right):
            j, k = np.argwhere(left != right)[0]
            return (i, int(j), int(k))
    return None


def _find_identity(op: np.ndarray) -> int | None:
    n = op.shape[0]
    rng = np.arange(n)
    for e in range(n):
        if np.array_equal(op[e], rng) and np.array_equal(op[:, e], rng):
            return e
    return None


def _check_abelian_group(add: np.ndarray, what: str) -> tuple[int, tuple[int, ...]]:
    """Validate an abelian group table; return (zero, neg)."""
    n = add.shape[0]
    if not np.array_equal(add, add.T):
        i, j = np.argwhere(add != add.T)[0]
        raise AxiomViolation(f"{what}-commutativity", (int(i), int(j)))
    zero = _find_identity(add)
    if zero is None:
        raise AxiomViolation(f"{what}-identity", ())
    bad = _associativity_witness(add)
    if bad is not None:
        raise AxiomViolation(f"{what}-associativity", bad)
    neg = []
    for i in range(n):
        inv = np.flatnonzero(add[i] == zero)
        if inv.size == 0:
            raise AxiomViolation(f"{what}-inverse", (i,))
        neg.append(int(inv[0]))
    return zero, tuple(neg)


# ---------------------------------------------------------------------------
# rings


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite unital associative ring given by operation tables."""

    size: int
    zero: int
    one: int
    add: Table
    mul: Table
    neg: tuple[int, ...]
    label: str
    tags: frozenset[str] = frozenset()

    def elements(self) -> range:
        return range(self.size)

    def element(self, index: int) -> RingElement:
        return RingElement(self, index)

    @cached_property
    def is_commutative(self) -> bool:
        mul = self.mul
        return all(
            mul[a][b] == mul[b][a] for a in range(self.size) for b in range(self.size)
        )

    def power_sequence(self, a: int) -> tuple[int, ...]:
        """Distinct powers a, a^2, ... up to the first repetition.

        The power sequence of a ring element is eventually periodic, so
        this tuple is exactly the set {a^k : k >= 1}.
        """
        seen: list[int] = []
        seen_set: set[int] = set()
        p = a
        while p not in seen_set:
            seen.append(p)
            seen_set.add(p)
            p = self.mul[p][a]
        return tuple(seen)

    def __repr__(self) -> str:
        return f"FiniteRing({self.label!r}, size={self.size})"


@dataclass(frozen=True)
class RingElement:
    """A ring element as (ring, index); arithmetic by table lookup."""

    ring: FiniteRing
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.ring.size:
            raise AxiomViolation("element-range", (self.index,))

    def __add__(self, other: RingElement) -> RingElement:
        return RingElement(self.ring, self.ring.add[self.index][other.index])

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, self.ring.neg[self.index])

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __mul__(self, other: RingElement | ModuleElement):
        if isinstance(other, ModuleElement):
            return ModuleElement(
                other.module, other.module.action[self.index][other.index]
            )
        return RingElement(self.ring, self.ring.mul[self.index][other.index])


def build_ring_from_tables(
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    one: int | None = None,
    label: str = "ring",
    tags: Iterable[str] = (),
    limits: Limits | None = None,
) -> FiniteRing:
    """Validate raw operation tables and return the ring.

    Every axiom (abelian group, associativity, both distributive laws,
    two-sided identity) is checked exhaustively; the first failure is
    reported with a witness triple.  `one` is located by scanning when
    not supplied.
    """
    limits = limits or default_limits()
    n = len(add)
    if n < 1:
        raise AxiomViolation("ring-nonempty", ())
    if n > limits.max_validation_size:
        raise SizeGuardExceeded("ring size", n, limits.max_validation_size)
    add_arr = _table_array(add, n, n, "add")
    mul_arr = _table_array(mul, n, n, "mul")
    zero, neg = _check_abelian_group(add_arr, "add")
    bad = _associativity_witness(mul_arr)
    if bad is not None:
        raise AxiomViolation("mul-associativity", bad)
    if one is None:
        one = _find_identity(mul_arr)
        if one is None:
            raise AxiomViolation("mul-identity", ())
    else:
        rng = np.arange(n)
        if not (np.array_equal(mul_arr[one], rng) and np.array_equal(mul_arr[:, one], rng)):
            raise AxiomViolation("mul-identity", (int(one),))
    for a in range(n):
        row = mul_arr[a]
        lhs = row[add_arr]
        rhs = add_arr[row[:, None], row[None, :]]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            raise AxiomViolation("left-distributivity", (a, int(b), int(c)))
    for c in range(n):
        col = mul_arr[:, c]
        lhs = col[add_arr]
        rhs = add_arr[col[:, None], col[None, :]]
        if not np.array_equal(lhs, rhs):
            a, b = np.argwhere(lhs != rhs)[0]
            raise AxiomViolation("right-distributivity", (int(a), int(b), c))
    return FiniteRing(
        size=n,
        zero=zero,
        one=int(one),
        add=_freeze_table(add),
        mul=_freeze_table(mul),
        neg=neg,
        label=label,
        tags=frozenset(tags),
    )


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """A finite left module: abelian group plus a validated ring action."""

    ring: FiniteRing
    size: int
    zero: int
    add: Table
    neg: tuple[int, ...]
    action: Table
    label: str
    tags: frozenset[str] = frozenset()

    def elements(self) -> range:
        return range(self.size)

    def element(self, index: int) -> ModuleElement:
        return ModuleElement(self, index)

    def apply(self, r: int, m: int) -> int:
        return self.action[r][m]

    def zero_submodule(self) -> Substructure:
        return Substructure(self, SUBMODULE, frozenset({self.zero}))

    def full_submodule(self) -> Substructure:
        return Substructure(self, SUBMODULE, frozenset(range(self.size)))

    def __repr__(self) -> str:
        return f"FiniteModule({self.label!r}, size={self.size}, ring={self.ring.label!r})"


@dataclass(frozen=True)
class ModuleElement:
    """A module element as (module, index)."""

    module: FiniteModule
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.module.size:
            raise AxiomViolation("element-range", (self.index,))

    def __add__(self, other: ModuleElement) -> ModuleElement:
        return ModuleElement(self.module, self.module.add[self.index][other.index])

    def __neg__(self) -> ModuleElement:
        return ModuleElement(self.module, self.module.neg[self.index])

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        return self + (-other)


def module_from_action(
    ring: FiniteRing,
    add: Sequence[Sequence[int]],
    action: Sequence[Sequence[int]],
    label: str = "module",
    tags: Iterable[str] = (),
    limits: Limits | None = None,
) -> FiniteModule:
    """Validate group + action tables and return the module.

    The action must be unital, additive in both arguments and
    associative with ring multiplication; all four are swept in full.
    The zero ring is rejected as a base ring (primality notions would
    be vacuous over it).
    """
    limits = limits or default_limits()
    if ring.size == 1:
        raise AxiomViolation("base-ring-nonzero", (), "modules over the zero ring are rejected")
    n = len(add)
    if n < 1:
        raise AxiomViolation("module-nonempty", ())
    if n > limits.max_validation_size:
        raise SizeGuardExceeded("module size", n, limits.max_validation_size)
    add_arr = _table_array(add, n, n, "add")
    act_arr = _table_array(action, ring.size, n, "action")
    zero, neg = _check_abelian_group(add_arr, "module-add")
    rng = np.arange(n)
    if not np.array_equal(act_arr[ring.one], rng):
        m = int(np.flatnonzero(act_arr[ring.one] != rng)[0])
        raise AxiomViolation("action-unital", (m,))
    for r in range(ring.size):
        ar = act_arr[r]
        lhs = ar[add_arr]
        rhs = add_arr[ar[:, None], ar[None, :]]
        if not np.array_equal(lhs, rhs):
            x, y = np.argwhere(lhs != rhs)[0]
            raise AxiomViolation("action-additive-in-module", (r, int(x), int(y)))
    radd = np.asarray(ring.add, dtype=np.int64)
    rmul = np.asarray(ring.mul, dtype=np.int64)
    for r in range(ring.size):
        for s in range(ring.size):
            lhs = act_arr[radd[r, s]]
            rhs = add_arr[act_arr[r], act_arr[s]]
            if not np.array_equal(lhs, rhs):
                m = int(np.flatnonzero(lhs != rhs)[0])
                raise AxiomViolation("action-additive-in-ring", (r, s, m))
            lhs = act_arr[rmul[r, s]]
            rhs = act_arr[r][act_arr[s]]
            if not np.array_equal(lhs, rhs):
                m = int(np.flatnonzero(lhs != rhs)[0])
                raise AxiomViolation("action-associative", (r, s, m))
    return FiniteModule(
        ring=ring,
        size=n,
        zero=zero,
        add=_freeze_table(add),
        neg=neg,
        action=_freeze_table(action),
        label=label,
        tags=frozenset(tags),
    )


@lru_cache(maxsize=None)
def regular_module(ring: FiniteRing, limits: Limits | None = None) -> FiniteModule:
    """The ring as a left module over itself (free of rank 1)."""
    return module_from_action(
        ring,
        ring.add,
        ring.mul,
        label=f"{ring.label} regular",
        tags=("free", "projective", "regular"),
        limits=limits,
    )


# ---------------------------------------------------------------------------
# substructures


@dataclass(frozen=True)
class Substructure:
    """A subset closed under the operations its kind requires.

    kind is one of "submodule" (parent: module; closed under add, neg
    and the ring action), "left-ideal" (parent: ring; closed under add,
    neg and left multiplication) or "two-sided-ideal" (additionally
    closed under right multiplication).  Closure is verified at
    construction.
    """

    parent: FiniteModule | FiniteRing
    kind: str
    members: frozenset[int]

    def __post_init__(self) -> None:
        parent, kind, members = self.parent, self.kind, self.members
        if kind not in KINDS:
            raise KindMismatch(f"unknown substructure kind {kind!r}")
        if kind == SUBMODULE and not isinstance(parent, FiniteModule):
            raise KindMismatch("submodules live inside a module")
        if kind != SUBMODULE and not isinstance(parent, FiniteRing):
            raise KindMismatch("ideals live inside a ring")
        if not members:
            raise AxiomViolation("substructure-nonempty", ())
        for x in members:
            if not 0 <= x < parent.size:
                raise AxiomViolation("substructure-range", (x,))
        if parent.zero not in members:
            raise AxiomViolation("substructure-zero", ())
        add = parent.add
        for x in members:
            for y in members:
                if add[x][y] not in members:
                    raise AxiomViolation("substructure-add-closure", (x, y))
        if kind == SUBMODULE:
            act = parent.action
            for r in range(parent.ring.size):
                row = act[r]
                for x in members:
                    if row[x] not in members:
                        raise AxiomViolation("substructure-action-closure", (r, x))
        else:
            mul = parent.mul
            for r in range(parent.size):
                row = mul[r]
                for x in members:
                    if row[x] not in members:
                        raise AxiomViolation("substructure-left-mul-closure", (r, x))
            if kind == TWO_SIDED_IDEAL:
                for x in members:
                    row = mul[x]
                    for r in range(parent.size):
                        if row[r] not in members:
                            raise AxiomViolation("substructure-right-mul-closure", (x, r))

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @cached_property
    def mask(self) -> int:
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def is_proper(self) -> bool:
        return len(self.members) < self.parent.size

    def is_zero(self) -> bool:
        return self.members == frozenset({self.parent.zero})

    def contains_set(self, other: Substructure) -> bool:
        return other.members <= self.members

    def __repr__(self) -> str:
        if len(self.members) <= 8:
            body = "{" + ",".join(map(str, self.sorted_members)) + "}"
        else:
            body = f"<{len(self.members)} elements>"
        return f"Substructure({self.kind}, {body} of {self.parent.label!r})"


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """A module homomorphism given by its full element table."""

    source: FiniteModule
    target: FiniteModule
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.source.ring is not self.target.ring:
            raise RingMismatch("homomorphisms require a common base ring")
        if len(self.map) != self.source.size:
            raise AxiomViolation("hom-shape", (len(self.map),))
        for v in self.map:
            if not 0 <= v < self.target.size:
                raise AxiomViolation("hom-range", (v,))
        f = self.map
        src, tgt = self.source, self.target
        if f[src.zero] != tgt.zero:
            raise AxiomViolation("hom-zero", (src.zero,))
        for x in range(src.size):
            fx = f[x]
            for y in range(src.size):
                if f[src.add[x][y]] != tgt.add[fx][f[y]]:
                    raise AxiomViolation("hom-additive", (x, y))
        for r in range(src.ring.size):
            src_row = src.action[r]
            tgt_row = tgt.action[r]
            for x in range(src.size):
                if f[src_row[x]] != tgt_row[f[x]]:
                    raise AxiomViolation("hom-action", (r, x))

    def __call__(self, index: int) -> int:
        return self.map[index]

    @cached_property
    def kernel(self) -> Substructure:
        members = frozenset(
            x for x in range(self.source.size) if self.map[x] == self.target.zero
        )
        return Substructure(self.source, SUBMODULE, members)

    @cached_property
    def image(self) -> Substructure:
        return Substructure(self.target, SUBMODULE, frozenset(self.map))

    def is_surjective(self) -> bool:
        return len(self.image.members) == self.target.size

    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.size

    def apply_substructure(self, sub: Substructure) -> Substructure:
        """Image of a submodule of the source; a submodule of the target."""
        if sub.parent is not self.source or sub.kind != SUBMODULE:
            raise KindMismatch("expected a submodule of the hom's source")
        return Substructure(self.target, SUBMODULE, frozenset(self.map[x] for x in sub.members))

    def preimage_substructure(self, sub: Substructure) -> Substructure:
        """Full preimage of a submodule of the target."""
        if sub.parent is not self.target or sub.kind != SUBMODULE:
            raise KindMismatch("expected a submodule of the hom's target")
        members = frozenset(x for x in range(self.source.size) if self.map[x] in sub.members)
        return Substructure(self.source, SUBMODULE, members)

    def require_epimorphism(self) -> None:
        if not self.is_surjective():
            raise NotEpimorphism(f"{self.source.label} -> {self.target.label} is not surjective")

    def __repr__(self) -> str:
        return f"ModuleHom({self.source.label!r} -> {self.target.label!r})"


def identity_hom(module: FiniteModule) -> ModuleHom:
    return ModuleHom(module, module, tuple(range(module.size)))


# ---------------------------------------------------------------------------
# quotients


def _coset_data(parent_size: int, add: Table, members: frozenset[int]) -> tuple[list[int], dict[int, int]]:
    """Representatives (minimal element per coset, sorted) and x -> coset index."""
    rep_of: dict[int, int] = {}
    for x in range(parent_size):
        rep_of[x] = min(add[x][n] for n in members)
    reps = sorted(set(rep_of.values()))
    index_of_rep = {r: i for i, r in enumerate(reps)}
    coset_index = {x: index_of_rep[rep_of[x]] for x in range(parent_size)}
    return reps, coset_index


def quotient_ring(
    ring: FiniteRing,
    ideal: Substructure,
    label: str | None = None,
    limits: Limits | None = None,
) -> tuple[FiniteRing, tuple[int, ...]]:
    """The coset ring R/I with its projection table.

    `ideal` must be a validated two-sided ideal of `ring`; the
    projection maps each element to the index of its coset.
    """
    if ideal.parent is not ring or ideal.kind != TWO_SIDED_IDEAL:
        raise KindMismatch("quotient_ring needs a two-sided ideal of the ring")
    reps, coset_index = _coset_data(ring.size, ring.add, ideal.members)
    k = len(reps)
    add = [[coset_index[ring.add[a][b]] for b in reps] for a in reps]
    mul = [[coset_index[ring.mul[a][b]] for b in reps] for a in reps]
    if label is None:
        label = f"{ring.label}/|{len(ideal.members)}|"
    quotient = build_ring_from_tables(
        add,
        mul,
        one=coset_index[ring.one],
        label=label,
        tags=frozenset({f"quotient-of({ring.label})"}) | ring.tags,
        limits=limits,
    )
    projection = tuple(coset_index[x] for x in range(ring.size))
    return quotient, projection


@lru_cache(maxsize=None)
def quotient_module(
    module: FiniteModule,
    submodule: Substructure,
    limits: Limits | None = None,
) -> tuple[FiniteModule, ModuleHom]:
    """The coset module M/N with its projection epimorphism.

    Cached: repeated quotients by the same submodule share one object,
    which lets radical computations on quotients share their caches.
    """
    if submodule.parent is not module or submodule.kind != SUBMODULE:
        raise KindMismatch("quotient_module needs a submodule of the module")
    reps, coset_index = _coset_data(module.size, module.add, submodule.members)
    add = [[coset_index[module.add[a][b]] for b in reps] for a in reps]
    action = [[coset_index[module.action[r][a]] for a in reps] for r in range(module.ring.size)]
    label = f"{module.label}/{{{','.join(map(str, submodule.sorted_members))}}}"
    quotient = module_from_action(
        module.ring,
        add,
        action,
        label=label,
        tags=frozenset({f"quotient-of({module.label})"}),
        limits=limits,
    )
    projection = ModuleHom(module, quotient, tuple(coset_index[x] for x in range(module.size)))
    return quotient, projection


# ---------------------------------------------------------------------------
# products


def _mixed_radix(sizes: Sequence[int]) -> tuple[list[int], int]:
    """Big-endian place values for component encoding."""
    total = 1
    for s in sizes:
        total *= s
    places = []
    rem = total
    for s in sizes:
        rem //= s
        places.append(rem)
    return places, total


def _encode(components: Sequence[int], places: Sequence[int]) -> int:
    return sum(c * p for c, p in zip(components, places))


def _decode(index: int, sizes: Sequence[int], places: Sequence[int]) -> tuple[int, ...]:
    return tuple((index // p) % s for s, p in zip(sizes, places))


def direct_product(
    factors: Sequence[FiniteRing] | Sequence[FiniteModule],
    label: str | None = None,
    limits: Limits | None = None,
) -> FiniteRing | FiniteModule:
    """Componentwise product of rings, or of modules over one ring."""
    if not factors:
        raise EmptyList("direct_product requires at least one factor")
    if isinstance(factors[0], FiniteRing):
        if not all(isinstance(f, FiniteRing) for f in factors):
            raise RingMismatch("cannot mix rings and modules in a product")
        return _ring_product(tuple(factors), label, limits)
    ring = factors[0].ring
    for f in factors:
        if not isinstance(f, FiniteModule) or f.ring is not ring:
            raise RingMismatch("module product factors must share one base ring")
    return _module_product(tuple(factors), label, limits)


def _ring_product(
    factors: tuple[FiniteRing, ...], label: str | None, limits: Limits | None
) -> FiniteRing:
    sizes = [f.size for f in factors]
    places, total = _mixed_radix(sizes)
    decoded = [_decode(i, sizes, places) for i in range(total)]
    add = [
        [
            _encode([f.add[a[t]][b[t]] for t, f in enumerate(factors)], places)
            for b in decoded
        ]
        for a in decoded
    ]
    mul = [
        [
            _encode([f.mul[a[t]][b[t]] for t, f in enumerate(factors)], places)
            for b in decoded
        ]
        for a in decoded
    ]
    one = _encode([f.one for f in factors], places)
    if label is None:
        label = "x".join(f.label for f in factors)
    return build_ring_from_tables(add, mul, one=one, label=label, limits=limits)


def _module_product(
    factors: tuple[FiniteModule, ...], label: str | None, limits: Limits | None
) -> FiniteModule:
    ring = factors[0].ring
    sizes = [f.size for f in factors]
    places, total = _mixed_radix(sizes)
    decoded = [_decode(i, sizes, places) for i in range(total)]
    add = [
        [
            _encode([f.add[a[t]][b[t]] for t, f in enumerate(factors)], places)
            for b in decoded
        ]
        for a in decoded
    ]
    action = [
        [
            _encode([f.action[r][a[t]] for t, f in enumerate(factors)], places)
            for a in decoded
        ]
        for r in range(ring.size)
    ]
    tags = set()
    if all("free" in f.tags for f in factors):
        tags.add("free")
    if all("projective" in f.tags for f in factors):
        tags.add("projective")
    if label is None:
        label = "x".join(f.label for f in factors)
    return module_from_action(ring, add, action, label=label, tags=tags, limits=limits)
