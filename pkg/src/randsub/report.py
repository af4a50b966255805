"""Deterministic analysis reports and their JSON / CSV / text renderings."""
from __future__ import annotations

import csv
import io
import json
import math

from .entropy import GeometricConfig, QProvider, bounds_table, estimate_entropy, geometric_entropy
from .inflation import DEFAULT_CAP, DEFAULT_CHECK_LEVEL, ConditionReport, check_disjoint, check_identical
from .spectral import DEFAULT_TOL, perron_data
from .substitution import (RandomSubstitution, constant_length, primitivity_exponent,
                           substitution_matrix, validate)

TOP_LEVEL_KEYS = ("input", "validation", "matrix", "perron", "conditions", "bounds",
                  "entropy", "geometric", "language", "warnings")


def _sig(x: float, digits: int) -> float | None:
    if x is None or not math.isfinite(x):
        return None
    return float(format(x, f".{digits}g"))


def canonical(obj, digits: int = 12):
    """Round every float to ``digits`` significant digits, recursively."""
    if isinstance(obj, float):
        return _sig(obj, digits)
    if isinstance(obj, dict):
        return {k: canonical(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v, digits) for v in obj]
    return obj


def dumps(report: dict) -> str:
    return json.dumps(canonical(report), sort_keys=True, indent=2) + "\n"


def input_section(sub: RandomSubstitution, **options) -> dict:
    return {
        "alphabet": list(sub.alphabet),
        "images": {g: sub.sorted_image(i) for i, g in enumerate(sub.alphabet)},
        "options": options,
    }


def condition_dict(rep: ConditionReport) -> dict:
    out = {"verdict": rep.verdict, "summary": rep.describe()}
    if rep.verdict == "guaranteed":
        out["criterion"] = rep.criterion
    elif rep.verdict == "refuted":
        out.update(level=rep.level, letter=rep.letter, pair=list(rep.pair), witness=rep.word)
    else:
        out["max_level_checked"] = rep.max_level_checked
    return out


def empty_report(sub: RandomSubstitution | None, **options) -> dict:
    report = dict.fromkeys(TOP_LEVEL_KEYS)
    report["input"] = input_section(sub, **options) if sub is not None else {"options": options}
    report["warnings"] = []
    return report


def validation_section(sub: RandomSubstitution) -> tuple[dict, bool]:
    rep = validate(sub)
    section = {
        "ok": rep.ok,
        "violations": [{"letter": v.letter, "witness": list(v.witness), "reason": v.reason}
                       for v in rep.violations],
        "primitivity_exponent": None,
        "constant_length": None,
    }
    if not rep.ok:
        return section, False
    k = primitivity_exponent(substitution_matrix(sub))
    section["primitivity_exponent"] = k
    section["constant_length"] = constant_length(sub)
    if k is None:
        section["ok"] = False
        section["violations"].append(
            {"letter": None, "witness": None, "reason": "substitution matrix is not primitive"})
    return section, section["ok"]


def analysis_report(sub: RandomSubstitution, *, max_level: int = 5, tol: float = 0.01,
                    psi=None, check_level: int = DEFAULT_CHECK_LEVEL, cap: int = DEFAULT_CAP,
                    provider: QProvider | None = None, enumerate_max: int | None = None,
                    name: str | None = None, known_entropy: float | None = None) -> dict:
    options = {"max_level": max_level, "tol": tol, "check_level": check_level, "memory_cap": cap,
               "psi": None if psi is None else [float(x) for x in psi]}
    report = empty_report(sub, **options)
    if name is not None:
        report["input"]["name"] = name
    report["validation"], ok = validation_section(sub)
    if not ok:
        return report
    warnings = report["warnings"]

    matrix = substitution_matrix(sub)
    report["matrix"] = matrix.tolist()
    perron = perron_data(matrix)
    report["perron"] = {"lambda": perron.lam, "R": list(perron.R), "L": list(perron.L),
                        "residual": perron.residual, "iterations": perron.iterations,
                        "tol": DEFAULT_TOL}

    conditions = (check_identical(sub, check_level, cap), check_disjoint(sub, check_level, cap))
    report["conditions"] = {"max_level": check_level, "identical": condition_dict(conditions[0]),
                            "disjoint": condition_dict(conditions[1])}
    for c in conditions:
        if c.verdict == "unverified":
            warnings.append(c.describe())

    table = bounds_table(sub, max_level, cap=cap, provider=provider,
                         enumerate_max=enumerate_max, perron=perron)
    report["bounds"] = {
        "max_level": max_level,
        "truncated": table.truncated,
        "rows": [{"m": r.m, "lower": r.lower, "upper": r.upper, "gap": r.gap, "q": list(r.q),
                  "counts": None if r.counts is None else list(r.counts), "source": r.source}
                 for r in table],
    }
    if table.truncated:
        warnings.append(table.note)

    est = estimate_entropy(sub, tol, max_level, check_level=check_level, cap=cap,
                           provider=provider, enumerate_max=enumerate_max, conditions=conditions)
    report["entropy"] = {"value": est.value, "certificate": est.certificate, "lower": est.lower,
                         "upper": est.upper, "m_used": est.m_used, "gap": est.gap, "tol": est.tol,
                         "known": known_entropy}
    if est.note:
        warnings.append(est.note)

    if psi is not None:
        cfg = GeometricConfig.from_psi(psi, perron)
        report["geometric"] = {"psi": list(cfg.psi), "rho": cfg.rho,
                               "value": geometric_entropy(cfg, est)}
    return report


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    n = len(report["input"].get("alphabet", []))
    writer.writerow(["m", "lower", "upper", "gap", "source"] + [f"q{i + 1}" for i in range(n)])
    rows = (report.get("bounds") or {}).get("rows", [])
    for r in canonical(rows):
        writer.writerow([r["m"], repr(r["lower"]), repr(r["upper"]), repr(r["gap"]), r["source"]]
                        + [repr(x) for x in r["q"]])
    return buf.getvalue()


def _fmt(x) -> str:
    return "-" if x is None else f"{x:.6g}"


def to_text(report: dict) -> str:
    lines = []
    inp = report["input"]
    if "alphabet" in inp:
        lines.append("substitution: " + ", ".join(
            f"{g} -> {{{','.join(ws)}}}" for g, ws in inp["images"].items()))
    val = report["validation"]
    if val is not None:
        lines.append("valid: " + ("yes" if val["ok"] else "no"))
        for v in val["violations"]:
            wit = "" if v["witness"] is None else f" ({v['witness'][0]}, {v['witness'][1]})"
            letter = "" if v["letter"] is None else f"letter {v['letter']}: "
            lines.append(f"  {letter}{v['reason']}{wit}")
    if report["perron"] is not None:
        p = report["perron"]
        lines.append(f"lambda = {_fmt(p['lambda'])}, R = ({', '.join(_fmt(x) for x in p['R'])})")
    if report["conditions"] is not None:
        for key in ("identical", "disjoint"):
            lines.append(report["conditions"][key]["summary"])
    if report["bounds"] is not None:
        lines.append(f"{'m':>3} {'lower':>10} {'upper':>10} {'gap':>10}  source")
        for r in report["bounds"]["rows"]:
            lines.append(f"{r['m']:>3} {_fmt(r['lower']):>10} {_fmt(r['upper']):>10} "
                         f"{_fmt(r['gap']):>10}  {r['source']}")
    if report["entropy"] is not None:
        e = report["entropy"]
        lines.append(f"entropy = {_fmt(e['value'])} [{e['certificate']}] "
                     f"in [{_fmt(e['lower'])}, {_fmt(e['upper'])}]")
        if e.get("known") is not None:
            lines.append(f"known value = {_fmt(e['known'])}")
    if report["geometric"] is not None:
        g = report["geometric"]
        lines.append(f"geometric entropy = {_fmt(g['value'])} (rho = {_fmt(g['rho'])})")
    if report["language"] is not None:
        lang = report["language"]
        lines.append(f"legal words of length {lang['length']}: {lang['count']} "
                     f"(levels used {lang['levels_used']}, converged: {lang['converged']})")
        lines.append("  " + " ".join(lang["words"]))
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report)
    if fmt == "csv":
        return to_csv(report)
    return to_text(report)
