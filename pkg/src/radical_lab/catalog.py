"""Constructors for the stock rings and modules, the counterexample
search driver, and the JSON structure specs used by the CLI.

The default catalog covers commutative, 2-primal-noncommutative and
non-2-primal territory at desk scale: Z2, Z3, Z4, Z6, Z8, Z2xZ2, the
2x2 upper triangular ring over Z2 and the full 2x2 matrix ring over
Z2, each with its regular module, free module of rank 2 and all cyclic
quotients, plus the 4-element simple module over M2(Z2) whose zero
submodule satisfies the complete radical formula but not the radical
formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .core import (
    LEFT_IDEAL,
    FiniteModule,
    FiniteRing,
    Substructure,
    build_ring_from_tables,
    direct_product,
    module_from_action,
    quotient_module,
    regular_module,
)
from .errors import ConfigError, SizeGuardExceeded
from .limits import Limits, default_limits
from .radicals import (
    FLAG_ORDER,
    RadicalReport,
    is_two_primal_ring,
    radical_report,
)
from .substructures import all_substructures, as_submodule

PREDICATE_ATOMS = FLAG_ORDER + ("ring_two_primal",)


# ---------------------------------------------------------------------------
# ring constructors


@lru_cache(maxsize=None)
def ring_Zn(n: int, limits: Limits | None = None) -> FiniteRing:
    """The ring of integers modulo n."""
    if n < 2:
        raise ConfigError("Zn", f"n must be at least 2, got {n}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return build_ring_from_tables(
        add, mul, one=1 % n, label=f"Z{n}", tags=("commutative",), limits=limits
    )


def _matrix_ring(
    k: int,
    base: FiniteRing,
    positions: Sequence[tuple[int, int]],
    label: str,
    limits: Limits | None,
) -> FiniteRing:
    """Ring of k x k matrices over a commutative base, with entries
    restricted to the given positions (all others held at zero)."""
    if k < 1:
        raise ConfigError("matrix", f"k must be at least 1, got {k}")
    if not base.is_commutative:
        raise ConfigError("matrix", f"base ring {base.label!r} must be commutative")
    limits = limits or default_limits()
    size = base.size ** len(positions)
    if size > limits.max_validation_size:
        raise SizeGuardExceeded(f"{label} size", size, limits.max_validation_size)
    pos_index = {p: i for i, p in enumerate(positions)}

    def decode(index: int) -> dict[tuple[int, int], int]:
        entries = {}
        for p in reversed(positions):
            index, v = divmod(index, base.size)
            entries[p] = v
        return entries

    def encode(entries: dict[tuple[int, int], int]) -> int:
        index = 0
        for p in positions:
            index = index * base.size + entries.get(p, base.zero)
        return index

    matrices = [decode(i) for i in range(size)]
    badd = base.add
    bmul = base.mul
    add = [
        [encode({p: badd[x[p]][y[p]] for p in positions}) for y in matrices]
        for x in matrices
    ]

    def mat_mul(x, y):
        entries = {}
        for (r, c) in positions:
            total = base.zero
            for t in range(k):
                if (r, t) in pos_index and (t, c) in pos_index:
                    total = badd[total][bmul[x[r, t]][y[t, c]]]
            entries[r, c] = total
        return encode(entries)

    mul = [[mat_mul(x, y) for y in matrices] for x in matrices]
    one = encode({(i, i): base.one for i in range(k)})
    return build_ring_from_tables(add, mul, one=one, label=label, limits=limits)


@lru_cache(maxsize=None)
def ring_matrix(k: int, base: FiniteRing, limits: Limits | None = None) -> FiniteRing:
    """The full k x k matrix ring over a commutative base ring."""
    positions = [(r, c) for r in range(k) for c in range(k)]
    return _matrix_ring(k, base, positions, f"M{k}({base.label})", limits)


@lru_cache(maxsize=None)
def ring_upper_triangular(
    k: int, base: FiniteRing, limits: Limits | None = None
) -> FiniteRing:
    """The k x k upper triangular matrix ring over a commutative base."""
    positions = [(r, c) for r in range(k) for c in range(r, k)]
    return _matrix_ring(k, base, positions, f"U{k}({base.label})", limits)


def ring_product(
    factors: Sequence[FiniteRing], limits: Limits | None = None
) -> FiniteRing:
    """Componentwise product of rings."""
    ring = direct_product(tuple(factors), limits=limits)
    if all(f.is_commutative for f in factors):
        ring = FiniteRing(
            size=ring.size,
            zero=ring.zero,
            one=ring.one,
            add=ring.add,
            mul=ring.mul,
            neg=ring.neg,
            label=ring.label,
            tags=ring.tags | {"commutative"},
        )
    return ring


# ---------------------------------------------------------------------------
# module constructors


def module_regular(ring: FiniteRing, limits: Limits | None = None) -> FiniteModule:
    """The ring as a left module over itself."""
    return regular_module(ring, limits)


@lru_cache(maxsize=None)
def module_free(ring: FiniteRing, rank: int, limits: Limits | None = None) -> FiniteModule:
    """Free module of the given rank, tagged free and projective."""
    if rank < 1:
        raise ConfigError("free", f"rank must be at least 1, got {rank}")
    reg = regular_module(ring, limits)
    product = direct_product(tuple(reg for _ in range(rank)), limits=limits)
    return FiniteModule(
        ring=product.ring,
        size=product.size,
        zero=product.zero,
        add=product.add,
        neg=product.neg,
        action=product.action,
        label=f"{ring.label} free^{rank}",
        tags=product.tags | {"free", "projective"},
    )


@lru_cache(maxsize=None)
def _module_cyclic(
    ring: FiniteRing, members: frozenset[int], limits: Limits | None
) -> FiniteModule:
    reg = regular_module(ring, limits)
    submodule = as_submodule(reg, members)
    quotient, _ = quotient_module(reg, submodule, limits)
    return quotient


def module_cyclic(
    ring: FiniteRing,
    ideal: Substructure | Iterable[int],
    limits: Limits | None = None,
) -> FiniteModule:
    """Cyclic module R/I: the quotient of the regular module by a left
    ideal (given as a substructure or raw member set)."""
    members = frozenset(ideal.members if isinstance(ideal, Substructure) else ideal)
    return _module_cyclic(ring, members, limits)


def module_abelian_with_action(
    ring: FiniteRing,
    add: Sequence[Sequence[int]],
    action: Sequence[Sequence[int]],
    label: str = "module",
    limits: Limits | None = None,
) -> FiniteModule:
    """A module from raw abelian-group and action tables."""
    return module_from_action(ring, add, action, label=label, limits=limits)


@lru_cache(maxsize=None)
def module_example_exx(limits: Limits | None = None) -> FiniteModule:
    """The 4-element module of constant-row matrices over M2(Z2).

    Elements are the 2x2 matrices over Z2 whose rows are each constant;
    the action is matrix multiplication.  The module is simple, prime
    but not completely prime, and its zero submodule satisfies the
    complete radical formula while failing the radical formula.  The
    same module arises over the integer 2x2 matrix ring; the action
    factors through reduction mod 2 without changing the submodule
    lattice or any prime-type verdict, which the tags record.
    """
    ring = ring_matrix(2, ring_Zn(2, limits), limits)
    size = 4

    def decode_matrix(index: int) -> tuple[int, int, int, int]:
        e11 = index % 2
        index //= 2
        e10 = index % 2
        index //= 2
        e01 = index % 2
        index //= 2
        return (index % 2, e01, e10, e11)

    add = [[(t ^ u) for u in range(size)] for t in range(size)]
    action = []
    for r in range(ring.size):
        a, b, c, d = decode_matrix(r)
        row = []
        for m in range(size):
            top, bottom = divmod(m, 2)
            new_top = (a * top + b * bottom) % 2
            new_bottom = (c * top + d * bottom) % 2
            row.append(new_top * 2 + new_bottom)
        action.append(row)
    return module_from_action(
        ring,
        add,
        action,
        label="exx",
        tags=("constant-row-matrices", "action-factored-from-integer-matrices"),
        limits=limits,
    )


# ---------------------------------------------------------------------------
# the default catalog


@dataclass(frozen=True, eq=False)
class Catalog:
    """The structures a verification suite quantifies over."""

    rings: tuple[FiniteRing, ...]
    modules: tuple[FiniteModule, ...]

    def modules_over(self, ring: FiniteRing) -> tuple[FiniteModule, ...]:
        return tuple(m for m in self.modules if m.ring is ring)


@lru_cache(maxsize=None)
def default_rings(limits: Limits | None = None) -> tuple[FiniteRing, ...]:
    z2 = ring_Zn(2, limits)
    return (
        z2,
        ring_Zn(3, limits),
        ring_Zn(4, limits),
        ring_Zn(6, limits),
        ring_Zn(8, limits),
        ring_product((z2, z2), limits),
        ring_upper_triangular(2, z2, limits),
        ring_matrix(2, z2, limits),
    )


def catalog_from_rings(
    rings: Sequence[FiniteRing],
    include_example: bool = True,
    free_rank: int = 2,
    limits: Limits | None = None,
) -> Catalog:
    """Regular module, free module and all cyclic quotients per ring,
    optionally with the constant-row example module appended."""
    modules: list[FiniteModule] = []
    for ring in rings:
        modules.append(module_regular(ring, limits))
        modules.append(module_free(ring, free_rank, limits))
        for ideal in all_substructures(ring, LEFT_IDEAL, limits):
            modules.append(module_cyclic(ring, ideal, limits))
    if include_example:
        modules.append(module_example_exx(limits))
    return Catalog(tuple(rings), tuple(modules))


@lru_cache(maxsize=None)
def default_catalog(limits: Limits | None = None) -> Catalog:
    return catalog_from_rings(default_rings(limits), include_example=True, limits=limits)


# ---------------------------------------------------------------------------
# JSON structure specs


def _require_dict(spec, path: str) -> dict:
    if not isinstance(spec, dict):
        raise ConfigError(path, f"expected an object, got {type(spec).__name__}")
    return spec


def _expand_params(params: dict, path: str) -> Iterator[dict]:
    """Expand {"range": [lo, hi]} parameter values into every value,
    ascending, cartesian across parameters in key order."""
    keys = list(params)
    pools: list[list] = []
    for key in keys:
        value = params[key]
        if isinstance(value, dict) and set(value) == {"range"}:
            bounds = value["range"]
            if (
                not isinstance(bounds, list)
                or len(bounds) != 2
                or not all(isinstance(b, int) for b in bounds)
            ):
                raise ConfigError(f"{path}.{key}.range", "expected [lo, hi] integers")
            pools.append(list(range(bounds[0], bounds[1] + 1)))
        else:
            pools.append([value])
    for combo in itertools.product(*pools):
        yield dict(zip(keys, combo))


def ring_from_spec(spec, limits: Limits | None = None, path: str = "ring") -> FiniteRing:
    """Build a ring from a JSON spec: a constructor with params, or raw
    tables {"add", "mul", "one"}."""
    spec = _require_dict(spec, path)
    if "tables" in spec:
        tables = _require_dict(spec["tables"], f"{path}.tables")
        for key in ("add", "mul"):
            if key not in tables:
                raise ConfigError(f"{path}.tables.{key}", "missing table")
        return build_ring_from_tables(
            tables["add"],
            tables["mul"],
            one=tables.get("one"),
            label=spec.get("label", "ring"),
            limits=limits,
        )
    name = spec.get("constructor")
    params = dict(spec.get("params", {}))
    if name == "Zn":
        return ring_Zn(_int_param(params, "n", path), limits)
    if name == "matrix":
        base = ring_from_spec(params.get("base"), limits, f"{path}.params.base")
        return ring_matrix(_int_param(params, "k", path), base, limits)
    if name == "upper_triangular":
        base = ring_from_spec(params.get("base"), limits, f"{path}.params.base")
        return ring_upper_triangular(_int_param(params, "k", path), base, limits)
    if name == "product":
        factors = params.get("factors")
        if not isinstance(factors, list) or not factors:
            raise ConfigError(f"{path}.params.factors", "expected a nonempty list")
        return ring_product(
            tuple(
                ring_from_spec(f, limits, f"{path}.params.factors[{i}]")
                for i, f in enumerate(factors)
            ),
            limits,
        )
    raise ConfigError(f"{path}.constructor", f"unknown ring constructor {name!r}")


def _int_param(params: dict, key: str, path: str) -> int:
    value = params.get(key)
    if not isinstance(value, int):
        raise ConfigError(f"{path}.params.{key}", f"expected an integer, got {value!r}")
    return value


def module_from_spec(
    spec, ring: FiniteRing | None, limits: Limits | None = None, path: str = "module"
) -> FiniteModule:
    """Build a module from a JSON spec over the given ring.

    The "example_exx" constructor fixes its own ring; any supplied ring
    must then agree with M2(Z2) elementwise.
    """
    spec = _require_dict(spec, path)
    if "tables" in spec:
        if ring is None:
            raise ConfigError(path, "raw-table modules require a ring")
        tables = _require_dict(spec["tables"], f"{path}.tables")
        for key in ("add", "action"):
            if key not in tables:
                raise ConfigError(f"{path}.tables.{key}", "missing table")
        return module_from_action(
            ring,
            tables["add"],
            tables["action"],
            label=spec.get("label", "module"),
            limits=limits,
        )
    name = spec.get("constructor")
    params = dict(spec.get("params", {}))
    if name == "example_exx":
        module = module_example_exx(limits)
        if ring is not None and (ring.add, ring.mul) != (
            module.ring.add,
            module.ring.mul,
        ):
            raise ConfigError(path, "example_exx is only defined over M2(Z2)")
        return module
    if ring is None:
        raise ConfigError(path, f"constructor {name!r} requires a ring")
    if name == "regular":
        return module_regular(ring, limits)
    if name == "free":
        return module_free(ring, _int_param(params, "rank", path), limits)
    if name == "cyclic":
        members = params.get("ideal")
        if not isinstance(members, list) or not all(isinstance(x, int) for x in members):
            raise ConfigError(f"{path}.params.ideal", "expected a list of element indices")
        ideals = all_substructures(ring, LEFT_IDEAL, limits)
        wanted = frozenset(members)
        if not any(i.members == wanted for i in ideals):
            raise ConfigError(
                f"{path}.params.ideal", f"{sorted(wanted)} is not a left ideal of {ring.label}"
            )
        return module_cyclic(ring, wanted, limits)
    raise ConfigError(f"{path}.constructor", f"unknown module constructor {name!r}")


# ---------------------------------------------------------------------------
# counterexample search


@dataclass(frozen=True, eq=False)
class Candidate:
    """One generated structure, with the JSON spec that rebuilds it."""

    label: str
    ring: FiniteRing
    module: FiniteModule
    spec: dict


@dataclass(frozen=True, eq=False)
class SearchResult:
    found: bool
    candidate: Candidate | None
    report: RadicalReport | None
    examined: int
    budget: int


def compile_predicate(spec, path: str = "predicate") -> Callable[[Candidate], bool]:
    """Boolean combination of report flags: {"flag": name},
    {"not": p}, {"all": [...]}, {"any": [...]}.

    Atoms are the module class flags plus "ring_two_primal".
    """
    spec = _require_dict(spec, path)
    if set(spec) == {"flag"}:
        name = spec["flag"]
        if name not in PREDICATE_ATOMS:
            raise ConfigError(
                f"{path}.flag", f"unknown flag {name!r}; valid: {', '.join(PREDICATE_ATOMS)}"
            )
        if name == "ring_two_primal":
            return lambda cand: is_two_primal_ring(cand.ring).holds
        return lambda cand: radical_report(cand.module).class_flags[name].holds
    if set(spec) == {"not"}:
        inner = compile_predicate(spec["not"], f"{path}.not")
        return lambda cand: not inner(cand)
    if set(spec) == {"all"} or set(spec) == {"any"}:
        key = "all" if "all" in spec else "any"
        parts = spec[key]
        if not isinstance(parts, list) or not parts:
            raise ConfigError(f"{path}.{key}", "expected a nonempty list")
        compiled = [
            compile_predicate(p, f"{path}.{key}[{i}]") for i, p in enumerate(parts)
        ]
        if key == "all":
            return lambda cand: all(p(cand) for p in compiled)
        return lambda cand: any(p(cand) for p in compiled)
    raise ConfigError(path, "expected exactly one of: flag, not, all, any")


_MODULE_TEMPLATE_SHORTCUTS = {
    "regular": {"constructor": "regular"},
    "free2": {"constructor": "free", "params": {"rank": 2}},
    "cyclic": {"constructor": "cyclic"},
    "example_exx": {"constructor": "example_exx"},
}

DEFAULT_GENERATOR = {"rings": "default", "modules": ["regular", "free2", "cyclic"]}


def iter_candidates(
    generator_spec: dict | None, limits: Limits | None = None
) -> Iterator[Candidate]:
    """Candidates in documented order: rings as listed (ranges
    ascending), then module templates as listed; "cyclic" expands over
    the enumerated left ideals in lattice order."""
    spec = dict(DEFAULT_GENERATOR if generator_spec is None else generator_spec)
    ring_specs = spec.get("rings", "default")
    templates = spec.get("modules", ["regular", "free2", "cyclic"])
    if not isinstance(templates, list) or not templates:
        raise ConfigError("generator.modules", "expected a nonempty list")

    expanded_rings: list[tuple[FiniteRing, dict]] = []
    if ring_specs == "default":
        for ring in default_rings(limits):
            expanded_rings.append((ring, _default_ring_spec(ring)))
    else:
        if not isinstance(ring_specs, list) or not ring_specs:
            raise ConfigError("generator.rings", 'expected "default" or a nonempty list')
        for i, rspec in enumerate(ring_specs):
            rspec = _require_dict(rspec, f"generator.rings[{i}]")
            params = rspec.get("params", {})
            if isinstance(params, dict):
                for concrete in _expand_params(params, f"generator.rings[{i}].params"):
                    concrete_spec = dict(rspec)
                    if concrete:
                        concrete_spec["params"] = concrete
                    ring = ring_from_spec(concrete_spec, limits, f"generator.rings[{i}]")
                    expanded_rings.append((ring, concrete_spec))
            else:
                ring = ring_from_spec(rspec, limits, f"generator.rings[{i}]")
                expanded_rings.append((ring, rspec))

    for template in templates:
        if isinstance(template, str):
            if template not in _MODULE_TEMPLATE_SHORTCUTS:
                raise ConfigError(
                    "generator.modules", f"unknown module template {template!r}"
                )
            template = _MODULE_TEMPLATE_SHORTCUTS[template]
        template = _require_dict(template, "generator.modules[]")
        if template.get("constructor") == "example_exx":
            module = module_example_exx(limits)
            yield Candidate(
                label=module.label,
                ring=module.ring,
                module=module,
                spec={"ring": _default_ring_spec(module.ring), "module": {"constructor": "example_exx"}},
            )
            continue
        for ring, ring_spec in expanded_rings:
            if template.get("constructor") == "cyclic" and "params" not in template:
                for ideal in all_substructures(ring, LEFT_IDEAL, limits):
                    module = module_cyclic(ring, ideal, limits)
                    mod_spec = {
                        "constructor": "cyclic",
                        "params": {"ideal": sorted(ideal.members)},
                    }
                    yield Candidate(
                        label=module.label,
                        ring=ring,
                        module=module,
                        spec={"ring": ring_spec, "module": mod_spec},
                    )
            else:
                module = module_from_spec(template, ring, limits, "generator.modules[]")
                yield Candidate(
                    label=module.label,
                    ring=ring,
                    module=module,
                    spec={"ring": ring_spec, "module": template},
                )


def _default_ring_spec(ring: FiniteRing) -> dict:
    """A rebuildable spec for a ring constructed by this module."""
    label = ring.label
    if label.startswith("Z") and label[1:].isdigit():
        return {"constructor": "Zn", "params": {"n": int(label[1:])}}
    if label == "M2(Z2)":
        return {
            "constructor": "matrix",
            "params": {"k": 2, "base": {"constructor": "Zn", "params": {"n": 2}}},
        }
    if label == "U2(Z2)":
        return {
            "constructor": "upper_triangular",
            "params": {"k": 2, "base": {"constructor": "Zn", "params": {"n": 2}}},
        }
    if label == "Z2xZ2":
        z2 = {"constructor": "Zn", "params": {"n": 2}}
        return {"constructor": "product", "params": {"factors": [z2, z2]}}
    return {"tables": {"add": [list(r) for r in ring.add], "mul": [list(r) for r in ring.mul], "one": ring.one}, "label": label}


def search_counterexample(
    predicate_spec: dict,
    generator_spec: dict | None = None,
    budget: int = 256,
    limits: Limits | None = None,
) -> SearchResult:
    """First candidate (in enumeration order) satisfying the predicate,
    with its full report; absent with statistics once the budget is
    spent."""
    predicate = compile_predicate(predicate_spec)
    examined = 0
    for candidate in iter_candidates(generator_spec, limits):
        if examined >= budget:
            break
        examined += 1
        if predicate(candidate):
            return SearchResult(
                True, candidate, radical_report(candidate.module, limits), examined, budget
            )
    return SearchResult(False, None, None, examined, budget)
