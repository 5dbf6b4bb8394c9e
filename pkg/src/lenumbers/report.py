"""JSON reports and the regression corpus.

Reports are plain dicts serialised with sorted keys, so the same input and
seed give byte-identical output.  Integers that can grow without bound (SNF
data) are written as decimal strings.
"""
from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .classify import CohomologyProfile, classify_analysis
from .components import SplitConfig
from .errors import ClassificationError, JacobianError, LeError
from .lecycles import LeAnalysis, analyze
from .lemodule import KernelCokernel, LeModuleReport, SNFResult, format_intpoly
from .poly import Polynomial, parse_polynomial

SCHEMA_VERSION = "1.0"
UNAVAILABLE = "UNAVAILABLE"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def load_schema() -> dict:
    return json.loads(resources.files("lenumbers.data").joinpath("report.schema.json").read_text())


def _gens(polys) -> list:
    return [str(p.primitive()) for p in polys]


def _component(comp, intersection) -> dict:
    return {
        "generators": _gens(comp.generators),
        "length": comp.length,
        "mult_origin": comp.mult_origin,
        "branches": comp.branches,
        "intersection": intersection,
    }


def profile_dict(p: CohomologyProfile, n: int | None = None) -> dict:
    return {
        "b_nm1": p.b_nm1,
        "b_n": p.b_n,
        "torsion": {"kind": p.torsion.kind, "bound": p.torsion.bound, "allowed_primes": p.torsion.allowed_primes},
        "source": p.source,
        "open_example": p.open_example,
        "notes": list(p.notes),
        "summary": p.describe(n),
    }


def profile_key(p: dict) -> str:
    """Short form used by the corpus, e.g. ``0,1,SINGLE_CYCLIC,3_OR_1_MOD_6``."""
    t = p["torsion"]
    return f"{p['b_nm1']},{p['b_n']},{t['kind']},{t['allowed_primes']}"


def analysis_report(text: str, variables, analysis: LeAnalysis, config: SplitConfig) -> dict:
    profiles, class_error = [], None
    if analysis.valid:
        try:
            profiles = [profile_dict(p, analysis.n_ambient) for p in classify_analysis(analysis)]
        except ClassificationError as exc:
            class_error = f"{exc.code}: {exc}"
    decomp = analysis.decomposition
    gen = analysis.genericity
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "polynomial": text,
            "variables": list(variables),
            "distinguished": variables[0],
            "expanded": str(analysis.f),
        },
        "status": analysis.status,
        "cycles": {
            "gamma1": [_component(c, k) for c, k in zip(analysis.gamma1, analysis.polar_intersections)],
            "lambda1": [_component(c, k) for c, k in zip(analysis.lambda1_cycle, analysis.le_intersections)],
        },
        "invariants": {
            "lambda0": analysis.lambda0,
            "lambda1": analysis.lambda1,
            "m": UNAVAILABLE if analysis.m is None else analysis.m,
            "r": None if analysis.r is None else list(analysis.r),
            "mu": analysis.mu,
            "n": analysis.n_ambient,
            "mult_f": analysis.mult_f,
        },
        "genericity": {
            "slice_isolated": gen.slice_isolated,
            "transversal_ok": list(gen.transversal_ok),
            "jacobian_dim_ok": gen.jacobian_dim_ok,
        },
        "profiles": profiles,
        "diagnostics": {
            "discarded": [_gens(b) for b in decomp.discarded] if decomp else [],
            "residuals": [_gens(b) for b in decomp.residuals] if decomp else [],
            "seed": config.seed,
            "trials": config.trials,
            "max_factor_degree": config.max_factor_degree,
            "notes": list(analysis.notes),
            "classification_error": class_error,
        },
    }


def analysis_text(report: dict) -> str:
    inv = report["invariants"]
    lines = [
        f"f = {report['input']['polynomial']}  in ({', '.join(report['input']['variables'])})",
        f"status: {report['status']}",
    ]
    for name, key in (("Gamma^1", "gamma1"), ("Lambda^1", "lambda1")):
        comps = report["cycles"][key]
        body = " + ".join(f"{c['length']}*V({', '.join(c['generators'])})" for c in comps) or "0"
        lines.append(f"{name} = {body}")
    lines.append(f"lambda0 = {inv['lambda0']}, lambda1 = {inv['lambda1']}, m = {inv['m']}, r in {inv['r']}")
    lines.append(f"mu = {inv['mu']}")
    for p in report["profiles"]:
        flag = "  (no known example)" if p["open_example"] else ""
        lines.append(f"  {p['summary']}{flag}")
    for note in report["diagnostics"]["notes"]:
        lines.append(f"note: {note}")
    if report["diagnostics"]["classification_error"]:
        lines.append(f"classification: {report['diagnostics']['classification_error']}")
    return "\n".join(lines)


def snf_dict(r: SNFResult) -> dict:
    mat = lambda M: [[str(x) for x in row] for row in M.entries]
    return {"diag": [str(d) for d in r.diag], "S": mat(r.S), "U": mat(r.U), "V": mat(r.V)}


def kernel_cokernel_dict(kc: KernelCokernel) -> dict:
    return {
        "kernel_rank": kc.kernel_rank,
        "cokernel_free_rank": kc.cokernel_free_rank,
        "torsion": [str(d) for d in kc.torsion],
    }


def verify_dict(rep: LeModuleReport) -> dict:
    return {
        "lambda0": rep.lambda0,
        "lambda1": rep.lambda1,
        "checks": dict(rep.checks),
        "passed": rep.passed,
        "kernel_rank": rep.kernel_rank,
        "cokernel_free_rank": rep.cokernel_free_rank,
        "torsion": [str(d) for d in rep.torsion],
        "char_alpha0": format_intpoly(rep.char_alpha0),
        "char_alpha1": format_intpoly(rep.char_alpha1),
        "uct": rep.uct,
    }


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

@dataclass
class CorpusEntry:
    name: str
    poly: str
    variables: list
    expected: dict
    provenance: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusEntry":
        missing = {"name", "poly", "vars", "expected"} - obj.keys()
        if missing:
            raise ValueError(f"corpus entry lacks {sorted(missing)}")
        return cls(obj["name"], obj["poly"], list(obj["vars"]), obj["expected"], obj.get("provenance", {}))


def read_corpus(path=None) -> list:
    if path is None:
        text = resources.files("lenumbers.data").joinpath("corpus.jsonl").read_text()
    else:
        text = Path(path).read_text()
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            entries.append(CorpusEntry.from_json(json.loads(line)))
        except (json.JSONDecodeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return entries


def entry_seed(base: int, name: str) -> int:
    """Per-entry seed; independent of evaluation order and worker count."""
    return int.from_bytes(hashlib.sha256(f"{base}:{name}".encode()).digest()[:4], "big")


def compute_entry(entry: CorpusEntry, base_seed: int = 0, trials: int = 4, max_factor_degree: int = 6) -> dict:
    """Observed values for the keys of ``entry.expected``."""
    cfg = SplitConfig(max_factor_degree=max_factor_degree, trials=trials, seed=entry_seed(base_seed, entry.name))
    f = parse_polynomial(entry.poly, entry.variables)
    try:
        a = analyze(f, cfg)
    except JacobianError as exc:
        return {"status": exc.code}
    rep = analysis_report(entry.poly, entry.variables, a, cfg)
    inv = rep["invariants"]
    return {
        "status": rep["status"],
        "lambda0": inv["lambda0"],
        "lambda1": inv["lambda1"],
        "m": inv["m"],
        "r": inv["r"],
        "mu": inv["mu"],
        "profiles": sorted(profile_key(p) for p in rep["profiles"]),
    }


def _run_one(args):
    entry, seed, trials, mfd = args
    try:
        observed = compute_entry(entry, seed, trials, mfd)
    except (LeError, ValueError) as exc:
        observed = {"status": f"ERROR: {exc}"}
    expected = dict(entry.expected)
    if "profiles" in expected:
        expected["profiles"] = sorted(expected["profiles"])
    diff = {k: {"expected": v, "observed": observed.get(k)} for k, v in expected.items() if observed.get(k) != v}
    return {"name": entry.name, "passed": not diff, "diff": diff}


def run_corpus(entries, base_seed: int = 0, parallel: bool = False, trials: int = 4,
               max_factor_degree: int = 6) -> list:
    jobs = [(e, base_seed, trials, max_factor_degree) for e in entries]
    if parallel and len(jobs) > 1:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def corpus_table(results) -> str:
    width = max((len(r["name"]) for r in results), default=4)
    lines = []
    for r in results:
        lines.append(f"{r['name']:<{width}}  {'PASS' if r['passed'] else 'FAIL'}")
        for key, d in sorted(r["diff"].items()):
            lines.append(f"{'':<{width}}    {key}: expected {d['expected']!r}, got {d['observed']!r}")
    return "\n".join(lines)
