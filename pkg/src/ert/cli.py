"""Command-line driver: ``ert check|erase|run|oracle``.

Exit codes: 0 success, 1 a check or oracle failure, 2 usage or IO trouble.
Structured output is one JSON object per line with sorted keys, so two runs
over the same files are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import stlc as T
from .erasure import erase_term, erase_type
from .oracle import FAILS, HOLDS, UNKNOWN, AuditConfig, Auditor, Fuel
from .surface import DEFAULT_FUEL, load

OK, FAILED, USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    paths: list = field(default_factory=list)
    decl: str = ""
    fuel: int = 8  # oracle nat bound
    depth: int = 2
    beta_fuel: int = DEFAULT_FUEL
    max_envs: int = 24
    format: str = "human"
    unchecked: bool = False
    jobs: int = 1

    def __post_init__(self):
        if min(self.fuel, self.depth, self.beta_fuel, self.max_envs) < 0:
            raise ValueError("fuel settings must be nonnegative")


class UsageError(Exception):
    pass


def _color(text, code):
    if os.environ.get("ERT_COLOR", "") in ("", "0", "never", "no"):
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _emit(out, record):
    out.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")


def expand(paths):
    """Files named directly, plus every ``.ert`` file under named directories."""
    files = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            files.extend(sorted(str(f) for f in path.rglob("*.ert")))
        elif path.is_file():
            files.append(str(path))
        else:
            raise UsageError(f"no such file: {p}")
    if not files:
        raise UsageError("no input files")
    return files


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from err


def _load(path, cfg: RunConfig, check=True):
    return load(_read(path), path, check=check, fuel=cfg.beta_fuel)


# ----------------------------------------------------------------------
# commands


def cmd_check(cfg: RunConfig, out) -> int:
    status = OK
    total = errors = 0
    for path in expand(cfg.paths):
        res = _load(path, cfg)
        total += res.total
        errors += len(res.diagnostics)
        if res.diagnostics:
            status = FAILED
        if cfg.format == "structured":
            for d in res.diagnostics:
                _emit(out, d.record())
            _emit(out, {"kind": "file", "file": path, "decls": res.total,
                        "checked": [d.name for d in res.decls], "ok": res.ok})
        else:
            for d in res.diagnostics:
                out.write(d.human() + "\n")
            mark = _color("ok", "32") if res.ok else _color("FAILED", "31")
            out.write(f"{path}: {mark} ({len(res.decls)}/{res.total} declarations)\n")
    if cfg.format == "human":
        out.write(f"{total} declarations, {errors} errors\n")
    return status


def _checked_or_refuse(path, cfg, out):
    res = _load(path, cfg, check=not cfg.unchecked)
    if res.diagnostics:
        for d in res.diagnostics:
            if cfg.format == "structured":
                _emit(out, d.record())
            else:
                out.write(d.human() + "\n")
        if cfg.format == "human":
            out.write(f"{path}: refusing to continue, the file does not check\n")
        return None
    return res


def cmd_erase(cfg: RunConfig, out) -> int:
    status = OK
    for path in expand(cfg.paths):
        res = _checked_or_refuse(path, cfg, out)
        if res is None:
            status = FAILED
            continue
        for d in res.decls:
            if d.kind == "def":
                ty, tm = T.show_type(erase_type(d.sig)), T.show(erase_term(d.body, None, d.sig))
            else:
                ty, tm = "Unit", "()"
            if cfg.format == "structured":
                _emit(out, {"kind": "erased", "file": path, "decl": d.name, "type": ty, "term": tm})
            else:
                out.write(f"{d.name} : {ty}\n{d.name} = {tm}\n\n")
    return status


def cmd_run(cfg: RunConfig, out) -> int:
    if len(cfg.paths) != 1 or not cfg.decl:
        raise UsageError("run takes one file and a declaration name")
    path = expand(cfg.paths)[0]
    res = _checked_or_refuse(path, cfg, out)
    if res is None:
        return FAILED
    try:
        d = res.get(cfg.decl)
    except KeyError:
        raise UsageError(f"no declaration named {cfg.decl!r} in {path}") from None
    if d.kind != "def":
        out.write(f"{cfg.decl} is a theorem: proofs are not run\n")
        return FAILED
    value = T.evaluate((), erase_term(d.body, None, d.sig))
    shown = T.show_value(value)
    if cfg.format == "structured":
        _emit(out, {"kind": "value", "file": path, "decl": d.name, "value": shown, "error": T.is_error(value)})
    else:
        out.write(shown + "\n")
    return FAILED if T.is_error(value) else OK


def _audit_file(args):
    path, cfg = args
    res = _load(path, cfg, check=not cfg.unchecked)
    auditor = Auditor(AuditConfig(Fuel(cfg.fuel, cfg.depth), max_envs=cfg.max_envs))
    report = auditor.audit(res.decls, checked=not cfg.unchecked)
    return res, report


def cmd_oracle(cfg: RunConfig, out) -> int:
    files = expand(cfg.paths)
    for f in files:
        _read(f)
    jobs = [(f, cfg) for f in files]
    if cfg.jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_audit_file, jobs))
    else:
        results = [_audit_file(j) for j in jobs]
    status = OK
    for path, (res, report) in zip(files, results):
        if res.diagnostics:
            status = FAILED
            for d in res.diagnostics:
                if cfg.format == "structured":
                    _emit(out, d.record())
                else:
                    out.write(d.human() + "\n")
        if report.fails:
            status = FAILED
        counts = {k: report.count(k) for k in (HOLDS, UNKNOWN, FAILS)}
        if cfg.format == "structured":
            for f in report.findings:
                _emit(out, {"kind": "verdict", "file": path, "decl": f.decl, "check": f.check,
                            "subject": f.subject, "verdict": f.verdict.kind, "note": f.verdict.note,
                            "envs": f.envs, "witness": _witness(f.verdict.witness) if f.verdict.fails else ""})
            _emit(out, {"kind": "audit", "file": path, **counts})
        else:
            for f in report.findings:
                if f.verdict.fails:
                    out.write(f"{path}: {_color('Fails', '31')} {f.check} in {f.decl}: {f.subject}\n"
                              f"  witness: {_witness(f.verdict.witness)}\n")
            out.write(f"{path}: {counts[HOLDS]} holds, {counts[UNKNOWN]} unknown, {counts[FAILS]} fails\n")
    return status


def _witness(w):
    if isinstance(w, tuple):
        return "(" + ", ".join(_witness(x) for x in w) + ")"
    if isinstance(w, (T.Value, T.ErrorStop)):
        return T.show_value(w)
    return str(w)


COMMANDS = {"check": cmd_check, "erase": cmd_erase, "run": cmd_run, "oracle": cmd_oracle}


def parser():
    p = argparse.ArgumentParser(prog="ert", description="Check, erase, run and audit .ert files.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("paths", nargs="+", help="files or directories; for run, a file then a declaration name")
    p.add_argument("--fuel", type=int, default=8, help="largest natural the oracle enumerates")
    p.add_argument("--depth", type=int, default=2, help="oracle unfolding depth")
    p.add_argument("--beta-fuel", type=int, default=DEFAULT_FUEL, help="step limit for 'by beta'")
    p.add_argument("--max-envs", type=int, default=24, help="environments tried per judgment by the oracle")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    p.add_argument("--jobs", type=int, default=1, help="audit files in parallel")
    # debug only: skips the checker, so verdicts say nothing about the calculus
    p.add_argument("--unchecked", action="store_true", help=argparse.SUPPRESS)
    return p


def config_from(argv) -> RunConfig:
    ns = parser().parse_args(argv)
    paths, decl = list(ns.paths), ""
    if ns.command == "run":
        if len(paths) != 2:
            raise UsageError("usage: ert run FILE DECL")
        paths, decl = paths[:1], paths[1]
    try:
        return RunConfig(ns.command, paths, decl, ns.fuel, ns.depth, ns.beta_fuel, ns.max_envs,
                         ns.format, ns.unchecked, max(ns.jobs, 1))
    except ValueError as err:
        raise UsageError(str(err)) from err


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg = config_from(sys.argv[1:] if argv is None else argv)
        return COMMANDS[cfg.command](cfg, out)
    except SystemExit as ex:  # argparse
        return USAGE if ex.code else OK
    except UsageError as err:
        sys.stderr.write(f"ert: {err}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
