"""Audit every corpus declaration with the semantic oracle across a few fuel settings.

    python3 scripts/run_audit.py [--bounds 0 4 8] [--depth 2]
"""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from ert.oracle import FAILS, HOLDS, UNKNOWN, AuditConfig, Auditor, Fuel
from ert.surface import load_file

ROOT = Path(__file__).resolve().parents[1]


@dataclass
class Config:
    corpus: Path = ROOT / "corpus"
    bounds: list = field(default_factory=lambda: [0, 4, 8])
    depth: int = 2
    max_envs: int = 24


def main(cfg: Config):
    files = sorted(cfg.corpus.glob("*.ert"))
    decls = {f.name: load_file(f).decls for f in files}
    print(f"{'file':<14} {'bound':>5} {'holds':>6} {'unknown':>8} {'fails':>6} {'secs':>6}")
    worst = 0
    for bound in cfg.bounds:
        auditor = Auditor(AuditConfig(Fuel(nat_bound=bound, depth=cfg.depth), max_envs=cfg.max_envs))
        for name, ds in decls.items():
            start = time.perf_counter()
            report = auditor.audit(ds)
            secs = time.perf_counter() - start
            worst = max(worst, report.fails)
            print(f"{name:<14} {bound:>5} {report.count(HOLDS):>6} {report.count(UNKNOWN):>8} "
                  f"{report.count(FAILS):>6} {secs:>6.2f}")
    return 1 if worst else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--bounds", type=int, nargs="+", default=Config().bounds)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--max-envs", type=int, default=Config.max_envs)
    a = ap.parse_args()
    raise SystemExit(main(Config(bounds=a.bounds, depth=a.depth, max_envs=a.max_envs)))
