"""Instantiate each beta axiom on random closed arguments and compare both sides after erasure.

    python3 scripts/beta_soundness.py [--instances 200] [--seed 0]
"""

import argparse
from dataclasses import dataclass

from ert import stlc as T
from ert.checker import Checker
from ert.contexts import EMPTY
from ert.erasure import erase_term
from ert.gen import BETA, Gen


@dataclass
class Config:
    instances: int = 200
    seed: int = 0
    shape: int = 3


def main(cfg: Config):
    ch = Checker()
    bad = 0
    for i, (name, build) in enumerate(BETA.items()):
        g = Gen(seed=cfg.seed * 1000 + i, shape=cfg.shape)
        equal = 0
        for _ in range(cfg.instances):
            phi = ch.infer_proof(EMPTY, build(g))
            ch.wf_prop(EMPTY, phi)
            lhs = T.evaluate((), erase_term(phi.lhs, EMPTY, phi.ty))
            rhs = T.evaluate((), erase_term(phi.rhs, EMPTY, phi.ty))
            equal += T.value_eq(lhs, rhs) is True
        bad += cfg.instances - equal
        print(f"{name:<12} {equal}/{cfg.instances}")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--instances", type=int, default=Config.instances)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--shape", type=int, default=Config.shape)
    a = ap.parse_args()
    raise SystemExit(main(Config(a.instances, a.seed, a.shape)))
