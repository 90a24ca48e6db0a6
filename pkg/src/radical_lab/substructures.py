"""Generation and exhaustive enumeration of submodules and ideals.

Enumeration is cyclic-generator seeding followed by closure of the
family under pairwise sum.  Every substructure is a sum of cyclic ones,
so the closed family is exactly the full lattice; a subset scan over
2^size candidates would be hopeless beyond toy sizes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .core import (
    LEFT_IDEAL,
    SUBMODULE,
    TWO_SIDED_IDEAL,
    FiniteModule,
    FiniteRing,
    Substructure,
)
from .errors import KindMismatch, ParentMismatch, SizeGuardExceeded
from .limits import Limits, default_limits

Parent = FiniteModule | FiniteRing


def _closure(parent: Parent, kind: str, seed: Iterable[int]) -> frozenset[int]:
    """Smallest member set containing the seed and closed for the kind.

    Worklist closure under pairwise addition plus the kind's
    multiplications; negation comes free because every element of a
    finite abelian group has finite additive order.
    """
    add = parent.add
    if kind == SUBMODULE:
        scalar_rows = parent.action
    else:
        scalar_rows = parent.mul
    two_sided = kind == TWO_SIDED_IDEAL
    mul = parent.mul if two_sided else None
    scalar_range = parent.ring.size if kind == SUBMODULE else parent.size

    members: set[int] = {parent.zero}
    members.update(seed)
    queue = sorted(members)
    while queue:
        x = queue.pop()
        for r in range(scalar_range):
            img = scalar_rows[r][x]
            if img not in members:
                members.add(img)
                queue.append(img)
        if two_sided:
            row = mul[x]
            for r in range(parent.size):
                img = row[r]
                if img not in members:
                    members.add(img)
                    queue.append(img)
        row = add[x]
        for y in list(members):
            s = row[y]
            if s not in members:
                members.add(s)
                queue.append(s)
    return frozenset(members)


def generated_substructure(
    parent: Parent, kind: str, generators: Iterable[int], limits: Limits | None = None
) -> Substructure:
    """The substructure of the given kind generated by the elements."""
    return Substructure(parent, kind, _closure(parent, kind, generators))


def _sumset(add, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    if a <= b:
        return b
    if b <= a:
        return a
    return frozenset(add[x][y] for x in a for y in b)


@lru_cache(maxsize=None)
def all_substructures(
    parent: Parent, kind: str, limits: Limits | None = None
) -> tuple[Substructure, ...]:
    """Every substructure of the given kind, sorted by (size, members).

    Seeds the family with all cyclic substructures and closes it under
    pairwise sum; the sum of two closed sets is already closed, so no
    re-closure is needed per join.
    """
    limits = limits or default_limits()
    if parent.size > limits.max_parent_size:
        raise SizeGuardExceeded("enumeration parent size", parent.size, limits.max_parent_size)
    add = parent.add
    seen: set[frozenset[int]] = set()
    family: list[frozenset[int]] = []
    for x in range(parent.size):
        cyc = _closure(parent, kind, (x,))
        if cyc not in seen:
            seen.add(cyc)
            family.append(cyc)
            if len(family) > limits.max_lattice_size:
                raise SizeGuardExceeded(
                    "substructure lattice", len(family), limits.max_lattice_size
                )
    i = 0
    while i < len(family):
        current = family[i]
        for j in range(i):
            joined = _sumset(add, current, family[j])
            if joined not in seen:
                seen.add(joined)
                family.append(joined)
                if len(family) > limits.max_lattice_size:
                    raise SizeGuardExceeded(
                        "substructure lattice", len(family), limits.max_lattice_size
                    )
        i += 1
    family.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(Substructure(parent, kind, members) for members in family)


def sum_substructures(a: Substructure, b: Substructure) -> Substructure:
    """Lattice join: the substructure generated by the union."""
    _require_same(a, b)
    return Substructure(a.parent, a.kind, _sumset(a.parent.add, a.members, b.members))


def intersect(a: Substructure, b: Substructure) -> Substructure:
    """Lattice meet; an intersection of closed sets is closed."""
    _require_same(a, b)
    return Substructure(a.parent, a.kind, a.members & b.members)


def intersect_family(
    parent: Parent, kind: str, items: Iterable[Substructure]
) -> Substructure:
    """Meet of a family; the empty meet is the whole structure."""
    members: frozenset[int] | None = None
    for sub in items:
        if sub.parent is not parent or sub.kind != kind:
            raise ParentMismatch("family members must share parent and kind")
        members = sub.members if members is None else members & sub.members
    if members is None:
        members = frozenset(range(parent.size))
    return Substructure(parent, kind, members)


def annihilator(submodule: Substructure) -> Substructure:
    """The two-sided ideal (N : M) = {r : r.M inside N}."""
    if submodule.kind != SUBMODULE:
        raise KindMismatch("annihilator takes a submodule")
    module: FiniteModule = submodule.parent
    ring = module.ring
    inside = submodule.members
    members = set()
    for r in range(ring.size):
        row = module.action[r]
        if all(row[m] in inside for m in range(module.size)):
            members.add(r)
    return Substructure(ring, TWO_SIDED_IDEAL, frozenset(members))


def as_submodule(module: FiniteModule, members: Iterable[int] | Substructure) -> Substructure:
    """View a member set (e.g. a left ideal of R inside the regular
    module) as a submodule of the given module."""
    if isinstance(members, Substructure):
        members = members.members
    return Substructure(module, SUBMODULE, frozenset(members))


def _require_same(a: Substructure, b: Substructure) -> None:
    if a.parent is not b.parent or a.kind != b.kind:
        raise ParentMismatch("operands must share parent and kind")
