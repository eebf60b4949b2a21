"""Command orchestration shared by the CLI and the corpus runner."""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import corpus
from .divisorial import (
    DivisorError,
    DivisorialFanP1,
    PPDivisor,
    is_proper,
    klt_necessary_check,
    mu_profile,
    platonic_triple_check,
)
from .documents import DocumentError, InputDocument, to_json
from .fpgroup import DEFAULT_MAX_COSETS, GroupReport, Presentation, Unknown, abelianization, analyze
from .lattice import AbelianInvariants
from .pi1 import (
    RAYS,
    complexity_one_presentation,
    cstar_bundle_presentation,
    local_pi1_presentation,
    toric_pi1_invariants,
    toric_pi1_presentation,
)
from .polyhedral import PolyhedralError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VALIDATION = 2
EXIT_EXCEEDED = 3

COMMANDS = ("validate", "pi1", "local-pi1", "toric", "cstar", "analyze", "corpus")


@dataclass(frozen=True)
class Options:
    max_cosets: int = DEFAULT_MAX_COSETS
    faces: str = RAYS
    allow_improper: bool = False
    export_gap: bool = False


@dataclass
class Report:
    command: str
    input: dict | None = None
    exit_code: int = EXIT_OK
    validation: list[dict] = field(default_factory=list)
    presentation: Presentation | None = None
    invariants: AbelianInvariants | None = None
    group: GroupReport | None = None
    notes: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    gap: str | None = None

    def to_json(self) -> dict:
        out: dict = {"command": self.command, "exit_code": self.exit_code}
        if self.input is not None:
            out["input"] = self.input
        if self.validation:
            out["validation"] = self.validation
        if self.presentation is not None:
            out["presentation"] = self.presentation.to_json()
        if self.invariants is not None:
            out["invariants"] = self.invariants.to_json()
        if self.group is not None:
            out["group"] = self.group.to_json()
        out["notes"] = list(self.notes)
        out["warnings"] = list(self.warnings)
        if self.errors:
            out["errors"] = list(self.errors)
        if self.gap is not None:
            out["gap"] = self.gap
        return out

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for v in self.validation:
            who = f"member {v['member']}: " if "member" in v else ""
            lines.append(f"{who}properness: {v['properness_text']}")
            if "klt_text" in v:
                lines.append(f"{who}klt necessary check: {v['klt_text']}")
            if "platonic" in v:
                lines.append(f"{who}platonic triple {tuple(v['mu_triple'])}: {v['platonic']}")
        if self.presentation is not None:
            lines.append(f"presentation: {self.presentation}")
            for w, tag in zip(self.presentation.to_json()["relators"], self.presentation.provenance):
                lines.append(f"    {w:<40} [{tag}]")
        if self.invariants is not None:
            lines.append(f"fundamental group: {self.invariants}")
        if self.group is not None:
            lines.append(f"simplified: {self.group.simplified}")
            lines.append(f"abelianization: {self.group.abelian}")
            lines.append(f"order: {self.group.order}")
        for n in self.notes:
            lines.append(f"note: {n}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        for e in self.errors:
            lines.append(f"error: {e}")
        if self.gap is not None:
            lines.append(self.gap)
        return "\n".join(lines)


def _members(doc: InputDocument) -> list[PPDivisor]:
    if doc.kind == "ppdivisor":
        return [doc.value]
    if doc.kind == "divisorial_fan":
        return list(doc.value.members)
    raise DocumentError([f"expected a ppdivisor or divisorial_fan document, got {doc.kind}"])


def _validation_entry(d: PPDivisor) -> tuple[dict, bool, list[str]]:
    verdict = is_proper(d)
    entry = {"properness": verdict.to_json(), "properness_text": str(verdict)}
    warnings = []
    if d.has_complete_locus and d.tail.is_full_dimensional and d.tail.is_pointed:
        klt = klt_necessary_check(d)
        entry["klt"] = klt.to_json()
        entry["klt_text"] = str(klt)
        if not klt.passed:
            warnings.append(
                f"necessary log-terminality condition fails ({klt}); "
                "the presentation is computed but may not be the fundamental group"
            )
    else:
        entry["klt"] = {"verdict": "not applicable", "reason": "needs a complete locus and a full-dimensional pointed tail"}
    if d.rank_k == 1 and d.has_complete_locus and len(d.support) == 3:
        mus = list(mu_profile(d).values())
        entry["mu_triple"] = mus
        entry["platonic"] = platonic_triple_check(mus)
    return entry, verdict.is_proper, warnings


def _validate(doc: InputDocument, report: Report, opts: Options, strict: bool) -> bool:
    """Fill validation entries; return whether computation may proceed."""
    ok = True
    members = _members(doc)
    for i, d in enumerate(members):
        entry, proper, warnings = _validation_entry(d)
        if len(members) > 1:
            entry = {"member": i, **entry}
        report.validation.append(entry)
        report.warnings.extend(warnings)
        if not proper:
            ok = False
    if not ok:
        if strict or not opts.allow_improper:
            report.exit_code = EXIT_VALIDATION
            report.errors.append("input divisor is not proper")
            return False
        report.warnings.append("properness check bypassed on request (--allow-improper)")
    return True


def _finish_group(report: Report, pres: Presentation, opts: Options) -> None:
    report.presentation = pres
    report.notes.extend(pres.notes)
    report.group = analyze(pres, opts.max_cosets)
    report.notes.extend(report.group.notes)
    if isinstance(report.group.order, Unknown):
        report.exit_code = EXIT_EXCEEDED
    if opts.export_gap:
        report.gap = pres.to_gap()


def run(command: str, doc: InputDocument | None, opts: Options = Options()) -> Report:
    report = Report(command, to_json(doc) if doc is not None else None)
    try:
        _dispatch(command, doc, opts, report)
    except DocumentError as e:
        report.exit_code = EXIT_INPUT
        report.errors.extend(e.errors)
    except (DivisorError, PolyhedralError, ValueError) as e:
        report.exit_code = EXIT_INPUT
        report.errors.append(str(e))
    return report


def _dispatch(command: str, doc: InputDocument | None, opts: Options, report: Report) -> None:
    if command == "validate":
        _validate(doc, report, opts, strict=True)
    elif command == "pi1":
        if not _validate(doc, report, opts, strict=False):
            return
        s = doc.value if doc.kind == "divisorial_fan" else DivisorialFanP1(doc.value.rank_k, (doc.value,))
        _finish_group(report, complexity_one_presentation(s, require_proper=False), opts)
        if all(d.tail.is_full_dimensional for d in s.members):
            if report.group.is_trivial:
                report.notes.append("full-dimensional tail: trivial group cross-check passed")
            else:
                report.warnings.append("full-dimensional tail: trivial group cross-check FAILED")
    elif command == "local-pi1":
        if doc.kind != "ppdivisor":
            raise DocumentError([f"local-pi1 expects a ppdivisor document, got {doc.kind}"])
        if not _validate(doc, report, opts, strict=False):
            return
        d = doc.value
        if d.tail.is_zero:
            report.notes.append("zero tail: presentation of the bundle over the punctured line")
        pres = local_pi1_presentation(d, opts.faces, require_proper=False)
        _finish_group(report, pres, opts)
        report.notes.insert(0, f"faces mode: {opts.faces}")
    elif command == "toric":
        if doc.kind != "fan":
            raise DocumentError([f"toric expects a fan document, got {doc.kind}"])
        report.invariants = toric_pi1_invariants(doc.value)
        report.presentation = toric_pi1_presentation(doc.value)
        if abelianization(report.presentation) != report.invariants:
            report.warnings.append("presentation abelianization disagrees with lattice quotient")
        if opts.export_gap:
            report.gap = report.presentation.to_gap()
    elif command == "cstar":
        if doc.kind != "cstar_bundle":
            raise DocumentError([f"cstar expects a cstar_bundle document, got {doc.kind}"])
        _finish_group(report, cstar_bundle_presentation(doc.value), opts)
    elif command == "analyze":
        if doc.kind != "presentation":
            raise DocumentError([f"analyze expects a presentation document, got {doc.kind}"])
        _finish_group(report, doc.value, opts)
    else:
        raise DocumentError([f"unknown command {command!r}"])


def machine_json(report: Report) -> str:
    payload = report.to_json()
    payload["validation"] = [
        {k: x for k, x in v.items() if k not in ("properness_text", "klt_text")}
        for v in payload.get("validation", [])
    ]
    if not payload["validation"]:
        del payload["validation"]
    return json.dumps(payload, indent=2)


def golden_path() -> Path:
    return Path(str(resources.files("tvpi") / "data" / "corpus_golden.json"))


def _corpus_one(entry) -> tuple[str, Report]:
    name, command, flags = entry
    opts = Options(**flags)
    rep = run(command, corpus.builtin(name), opts)
    key = f"{name} {command}" + (f" faces={flags['faces']}" if "faces" in flags else "")
    return key, rep


def run_corpus(workers: int = 4) -> list[tuple[str, Report]]:
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_corpus_one, corpus.corpus_entries()))


def corpus_payload(results: list[tuple[str, Report]]) -> dict:
    return {key: json.loads(machine_json(rep)) for key, rep in results}


def corpus_report(update_golden: bool = False) -> Report:
    results = run_corpus()
    payload = corpus_payload(results)
    report = Report("corpus")
    path = golden_path()
    if update_golden:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2) + "\n")
        report.notes.append(f"golden file written: {len(payload)} entries")
        return report
    golden = json.loads(path.read_text())
    for key, rep in results:
        got = payload[key]
        want = golden.get(key)
        status = "match" if got == want else ("missing golden" if want is None else "MISMATCH")
        summary = ""
        if rep.group is not None:
            summary = str(rep.group.order)
        elif rep.validation:
            summary = "; ".join(v["properness_text"] for v in rep.validation)
        report.notes.append(f"{status:<8} {key}: {summary}")
        if status != "match":
            report.exit_code = EXIT_VALIDATION
    extra = sorted(set(golden) - set(payload))
    for key in extra:
        report.warnings.append(f"golden entry {key} was not produced")
        report.exit_code = EXIT_VALIDATION
    return report
