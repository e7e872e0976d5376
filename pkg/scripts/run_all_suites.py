"""Run every verification suite at its default scale and write the reports.

    python3 scripts/run_all_suites.py --out reports/ --seed 42 --n 2
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from curvkit.report import emit
from curvkit.suites import SUITES, SuiteConfig, run_suite


@dataclass
class RunConfig:
    out: Path = Path("reports")
    seed: int = 42
    n: int = 2
    fmt: str = "json"


def run(cfg: RunConfig) -> bool:
    cfg.out.mkdir(parents=True, exist_ok=True)
    all_ok = True
    print(f"{'suite':22s} {'samples':>8s} {'max residual':>13s} {'fails':>6s} {'secs':>6s}")
    for name in SUITES:
        t0 = time.perf_counter()
        rep = run_suite(SuiteConfig(name, n=cfg.n, seed=cfg.seed, fmt=cfg.fmt))
        secs = time.perf_counter() - t0
        (cfg.out / f"{name}.{cfg.fmt}").write_text(emit(rep, cfg.fmt))
        all_ok &= rep.passed
        print(f"{name:22s} {rep.samples_run:8d} {rep.max_residual:13.3e} {len(rep.failures):6d} {secs:6.2f}")
    return all_ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=RunConfig.out)
    p.add_argument("--seed", type=int, default=RunConfig.seed)
    p.add_argument("--n", type=int, default=RunConfig.n)
    p.add_argument("--format", dest="fmt", choices=["json", "csv"], default=RunConfig.fmt)
    cfg = RunConfig(**vars(p.parse_args()))
    return 0 if run(cfg) else 1


if __name__ == "__main__":
    raise SystemExit(main())
