"""Two-pass driver: full-lock generation, then call-flow optimized generation.

Exit codes: 0 success, 1 validation error, 2 I/O error, 3 the simulator
found a race or deadlock (or could not finish) in the optimized plan.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .callflow import parse_callflow
from .codegen import (
    GEN_DIR, GENERATED_MARKER, USER_DIR, EmittedFileSet, FileKind,
    build_generation_model, emit_rtos_config, emit_scaffolding, emit_user_stubs,
    line_report,
)
from .errors import TecsoeError, ValidationFailed
from .model import load_model
from .optimizer import initial_plan, optimize
from .simcheck import DEFAULT_STATE_BOUND, compare_overhead, count_lock_ops, explore, lower_to_sim

log = logging.getLogger("tecsoe")

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_UNSOUND = 0, 1, 2, 3
REPORT_NAME = "lines.tsv"
SIMREPORT_NAME = "simreport.txt"


@dataclass
class RunConfig:
    cdl_path: Path
    out_dir: Path
    flow_path: Path | None = None
    mode: str = "1"  # "1", "2" or "both"
    simulate: bool = False
    state_bound: int = DEFAULT_STATE_BOUND
    report: bool = False

    def __post_init__(self):
        if self.mode not in ("1", "2", "both"):
            raise ValueError(f"unknown pass {self.mode!r}")
        if self.mode != "1" and self.flow_path is None:
            raise ValueError("pass 2 needs a call-flow file")


class _Exit(Exception):
    def __init__(self, status):
        self.status = status


def _diag(message):
    print(f"tecsoe: {message}", file=sys.stderr)


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        _diag(f"cannot read {path}: {exc}")
        raise _Exit(EXIT_IO) from exc


def _load(cfg, need_flows):
    cdl_text = _read(cfg.cdl_path)
    flow_text = _read(cfg.flow_path) if cfg.flow_path is not None and need_flows else None
    try:
        model = load_model(cdl_text)
    except ValidationFailed as exc:
        for v in exc.report:
            _diag(f"{cfg.cdl_path}:{v}")
        raise _Exit(EXIT_INVALID) from exc
    except TecsoeError as exc:
        _diag(f"{cfg.cdl_path}:{exc}")
        raise _Exit(EXIT_INVALID) from exc
    flows = None
    if flow_text is not None:
        try:
            flows = parse_callflow(flow_text, model)
        except TecsoeError as exc:
            _diag(f"{cfg.flow_path}:{exc}")
            raise _Exit(EXIT_INVALID) from exc
    return cdl_text, flow_text, model, flows


def _user_files(out_dir):
    root = Path(out_dir)
    base = root / USER_DIR
    if not base.is_dir():
        return {}
    return {str(p.relative_to(root)): p.read_text(encoding="utf-8")
            for p in sorted(base.rglob("*")) if p.is_file()}


def _digest(files):
    h = hashlib.sha256()
    for path, text in sorted(files.items()):
        h.update(path.encode())
        h.update(b"\0")
        h.update(text.encode())
        h.update(b"\0")
    return h.hexdigest()


def _prune_stale(out_dir, keep):
    gen = Path(out_dir) / GEN_DIR
    if not gen.is_dir():
        return
    for p in sorted(gen.iterdir()):
        rel = f"{GEN_DIR}/{p.name}"
        if p.is_file() and rel not in keep and p.suffix == ".rs":
            if GENERATED_MARKER in p.read_text(encoding="utf-8").split("\n", 1)[0]:
                p.unlink()


def _write(cfg, files: EmittedFileSet):
    try:
        _prune_stale(cfg.out_dir, files.files)
        files.write(cfg.out_dir)
    except OSError as exc:
        _diag(f"cannot write to {cfg.out_dir}: {exc}")
        raise _Exit(EXIT_IO) from exc


def _generate(model, plan, flows, out_dir, with_config):
    gm = build_generation_model(model, plan, flows)
    files = emit_scaffolding(gm)
    if with_config:
        files.update(emit_rtos_config(gm))
    stubs = emit_user_stubs(gm, out_dir)
    return gm, files, stubs


def run_pass1(cfg: RunConfig):
    """Generate with exclusive control on every vars-bearing cell."""
    try:
        cdl_text, _, model, flows = _load(cfg, need_flows=cfg.flow_path is not None)
        plan = initial_plan(model, flows)
        if cfg.report:
            sys.stdout.write(plan.report(model))
        gm, files, stubs = _generate(model, plan, flows, cfg.out_dir, with_config=False)
        files.update(stubs)
        user = _user_files(cfg.out_dir)
        user.update(stubs.files)
        report = line_report(files, user, cdl_text)
        files.add(f"{GEN_DIR}/{REPORT_NAME}", report.to_tsv(), FileKind.REPORT)
        _write(cfg, files)
    except _Exit as exc:
        return exc.status, EmittedFileSet()
    log.info("pass 1: %d file(s) under %s", len(files), cfg.out_dir)
    return EXIT_OK, files


def run_pass2(cfg: RunConfig):
    """Regenerate from the call flow: optimized locks, RTOS configuration, line report."""
    try:
        cdl_text, flow_text, model, flows = _load(cfg, need_flows=True)
        user_before = _user_files(cfg.out_dir)
        digest_before = _digest(user_before)

        plan = optimize(model, flows)
        if cfg.report:
            sys.stdout.write(plan.report(model))
        full = initial_plan(model, flows)
        _, pass1_files, pass1_stubs = _generate(model, full, flows, cfg.out_dir, with_config=False)
        gm, files, stubs = _generate(model, plan, flows, cfg.out_dir, with_config=True)
        files.update(stubs)

        baseline = dict(user_before) or dict(pass1_stubs.files)
        after = dict(user_before)
        after.update(stubs.files)
        report = line_report(pass1_files, baseline, cdl_text, files, after, flow_text)
        files.add(f"{GEN_DIR}/{REPORT_NAME}", report.to_tsv(), FileKind.REPORT)

        status = EXIT_OK
        if cfg.simulate:
            status = _simulate(cfg, model, flows, full, plan, files)
        _write(cfg, files)

        existing_after = {p: t for p, t in _user_files(cfg.out_dir).items() if p in user_before}
        if _digest(existing_after) != digest_before:
            _diag("user files changed during pass 2")
            status = status or EXIT_UNSOUND
    except _Exit as exc:
        return exc.status, EmittedFileSet()
    log.info("pass 2: %d file(s) under %s", len(files), cfg.out_dir)
    return status, files


def _simulate(cfg, model, flows, full, plan, files):
    program = lower_to_sim(model, flows, plan)
    result = explore(program, state_bound=cfg.state_bound)
    baseline = count_lock_ops(lower_to_sim(model, flows, full))
    cmp = compare_overhead(baseline, result.overhead)
    text = result.render() + f"acquires_pass1\t{cmp['pass1']}\nacquires_removed\t{cmp['removed']}\n"
    files.add(f"{GEN_DIR}/{SIMREPORT_NAME}", text, FileKind.REPORT)
    if result.races or result.deadlocks:
        _diag(f"simulation found {len(result.races)} race(s) and {len(result.deadlocks)} deadlock(s)")
        return EXIT_UNSOUND
    if result.inconclusive:
        _diag(f"simulation inconclusive: state bound {cfg.state_bound} reached")
        return EXIT_UNSOUND
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="tecsoe", description=__doc__.splitlines()[0])
    p.add_argument("--cdl", required=True, type=Path, help="component description file")
    p.add_argument("--flows", type=Path, help="call-flow file (required for pass 2)")
    p.add_argument("--out", required=True, type=Path, help="output directory")
    p.add_argument("--pass", dest="mode", choices=("1", "2", "both"), default=None,
                   help="which pass to run (default: both when --flows is given, else 1)")
    p.add_argument("--simulate", action="store_true", help="check the optimized plan by exhaustive interleaving")
    p.add_argument("--state-bound", type=int, default=DEFAULT_STATE_BOUND, metavar="N")
    p.add_argument("--report", action="store_true", help="print the lock plan to stdout")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    mode = args.mode or ("both" if args.flows else "1")
    if mode != "1" and args.flows is None:
        _diag(f"--pass {mode} requires --flows")
        return EXIT_INVALID
    if args.state_bound <= 0:
        _diag("--state-bound must be positive")
        return EXIT_INVALID
    cfg = RunConfig(args.cdl, args.out, args.flows, mode, args.simulate, args.state_bound, args.report)
    if mode in ("1", "both"):
        status, _ = run_pass1(cfg)
        if status != EXIT_OK:
            return status
    if mode in ("2", "both"):
        status, _ = run_pass2(cfg)
        return status
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
