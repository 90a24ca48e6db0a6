"""JSON documents and text rendering for analyses, suites and searches.

Documents carry "schema": 1 and a "generated_at" header; everything
below the header is deterministic for a fixed catalog, so re-runs are
byte-identical once the header line is dropped.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone

from .catalog import Catalog, SearchResult
from .core import FiniteModule, FiniteRing
from .limits import Limits
from .radicals import (
    RadicalReport,
    Verdict,
    beta_co_ring,
    beta_ring,
    envelope_zero_ring,
    is_two_primal_ring,
    nil_elements,
    radical_report,
    ring_properties,
    strongly_nilpotent_ring_set,
    submodule_lattice,
)
from .suites import SUITES, SuiteReport

SCHEMA_VERSION = 1


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def verdict_json(verdict: Verdict) -> dict:
    return {
        "holds": verdict.holds,
        "witness": verdict.witness,
        "checked_universe": verdict.checked_universe,
        "details": verdict.details,
    }


def ring_json(ring: FiniteRing, limits: Limits | None = None) -> dict:
    props = ring_properties(ring, limits)
    return {
        "label": ring.label,
        "size": ring.size,
        "commutative": ring.is_commutative,
        "tags": sorted(ring.tags),
        "nil_elements": sorted(nil_elements(ring)),
        "beta": sorted(beta_ring(ring, limits).members),
        "beta_co": sorted(beta_co_ring(ring, limits).members),
        "envelope_zero": sorted(envelope_zero_ring(ring, limits)),
        "strongly_nilpotent": sorted(strongly_nilpotent_ring_set(ring, limits)),
        "two_primal": verdict_json(is_two_primal_ring(ring, limits)),
        "properties": {
            "dedekind_finite": verdict_json(props.dedekind_finite),
            "kothe_finite_scale": verdict_json(props.kothe_finite_scale),
            "primes_completely_prime": verdict_json(props.primes_completely_prime),
            "is_semisimple": verdict_json(props.is_semisimple),
        },
    }


def module_json(module: FiniteModule, limits: Limits | None = None) -> dict:
    report = radical_report(module, limits)
    return {
        "label": module.label,
        "size": module.size,
        "ring": module.ring.label,
        "tags": sorted(module.tags),
        "submodule_count": len(submodule_lattice(module, limits)),
        "envelope_zero": sorted(report.envelope_zero.members),
        "strongly_nilpotent": sorted(report.strongly_nilpotent.members),
        "beta": sorted(report.beta.members),
        "beta_co": sorted(report.beta_co.members),
        "flags": {name: verdict_json(v) for name, v in report.class_flags.items()},
    }


def analyze_document(
    ring: FiniteRing, module: FiniteModule, limits: Limits | None = None
) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "analyze",
        "generated_at": _now(),
        "ring": ring_json(ring, limits),
        "module": module_json(module, limits),
    }


def suite_document(report: SuiteReport, catalog: Catalog) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "verify",
        "generated_at": _now(),
        "suite": report.suite,
        "description": SUITES[report.suite][0],
        "catalog": {
            "rings": [r.label for r in catalog.rings],
            "modules": [m.label for m in catalog.modules],
        },
        "passed": report.passed,
        "checks": [
            {
                "instance": c.instance,
                "check": c.check,
                "holds": c.holds,
                "witness": c.witness,
            }
            for c in report.checks
        ],
    }


def search_document(result: SearchResult, limits: Limits | None = None) -> dict:
    doc = {
        "schema": SCHEMA_VERSION,
        "kind": "search",
        "generated_at": _now(),
        "found": result.found,
        "examined": result.examined,
        "budget": result.budget,
        "witness": None,
        "label": None,
        "report": None,
    }
    if result.found and result.candidate is not None:
        doc["witness"] = result.candidate.spec
        doc["label"] = result.candidate.label
        doc["report"] = module_json(result.candidate.module, limits)
    return doc


def dump(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def strip_header(serialized: str) -> str:
    """Drop the generated_at line so runs can be compared bytewise."""
    return "\n".join(
        line for line in serialized.splitlines() if '"generated_at"' not in line
    )


# ---------------------------------------------------------------------------
# text rendering


def _verdict_line(name: str, verdict: Verdict) -> str:
    mark = "HOLDS" if verdict.holds else "FAILS"
    line = f"  {name:<24} {mark}"
    if not verdict.holds and verdict.witness:
        line += f"  witness={_compact(verdict.witness)}"
    return line


def _compact(data: dict) -> str:
    return json.dumps(data, separators=(",", ":"))


def render_analyze(document: dict) -> str:
    ring = document["ring"]
    module = document["module"]
    lines = [
        f"ring    {ring['label']}  size={ring['size']}  commutative={ring['commutative']}",
        f"  nil={ring['nil_elements']}  beta={ring['beta']}  beta_co={ring['beta_co']}  E_R(0)={ring['envelope_zero']}",
        _verdict_line("two_primal (ring)", _as_verdict(ring["two_primal"])),
    ]
    for name, raw in ring["properties"].items():
        lines.append(_verdict_line(name, _as_verdict(raw)))
    lines.append(
        f"module  {module['label']}  size={module['size']}  "
        f"submodules={module['submodule_count']}  tags={module['tags']}"
    )
    lines.append(
        f"  envelope_zero={module['envelope_zero']}  strongly_nilpotent={module['strongly_nilpotent']}"
    )
    lines.append(f"  beta={module['beta']}  beta_co={module['beta_co']}")
    for name, raw in module["flags"].items():
        lines.append(_verdict_line(name, _as_verdict(raw)))
    return "\n".join(lines)


def _as_verdict(raw: dict) -> Verdict:
    return Verdict(raw["holds"], raw["witness"], raw["checked_universe"], raw["details"])


def render_suite(report: SuiteReport) -> str:
    lines = []
    for check in report.checks:
        mark = "PASS" if check.holds else "FAIL"
        line = f"{mark} {report.suite} :: {check.instance} :: {check.check}"
        if not check.holds and check.witness is not None:
            line += f"  witness={_compact(check.witness)}"
        lines.append(line)
    verdict = "PASSED" if report.passed else "FAILED"
    lines.append(f"{verdict} suite {report.suite} ({len(report.checks)} checks)")
    return "\n".join(lines)


def render_search(result: SearchResult) -> str:
    if result.found and result.candidate is not None:
        return (
            f"FOUND {result.candidate.label} after examining {result.examined} "
            f"candidates (budget {result.budget})"
        )
    return (
        f"ABSENT after examining {result.examined} candidates "
        f"(budget {result.budget})"
    )
