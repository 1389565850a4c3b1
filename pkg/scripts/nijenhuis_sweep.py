"""Random sweep of the Nijenhuis norm over the angle parametrization.

Reports the largest norm found, the vertex value it is compared with, and a
histogram of norms. Optionally writes every sample as CSV.

    python3 scripts/nijenhuis_sweep.py --samples 100000 --seed 0 [--csv sweep.csv]
"""
import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from acs6.angle_param import TWO_PI, acs_matrices
from acs6.lie_geometry import BUILTIN_ALGEBRAS, nijenhuis_norms, vertex_norms


@dataclass
class SweepConfig:
    samples: int = 100_000
    seed: int = 0
    algebra: str = "su2xsu2"
    bins: int = 10
    csv: Optional[Path] = None


def run(cfg: SweepConfig):
    g = BUILTIN_ALGEBRAS[cfg.algebra]()
    rng = np.random.default_rng(cfg.seed)
    a = np.column_stack([
        rng.uniform(-np.pi / 2, np.pi / 2, (cfg.samples, 3)),
        rng.uniform(0.0, TWO_PI, (cfg.samples, 3)),
    ])
    norms = nijenhuis_norms(g, acs_matrices(a))
    return a, norms, vertex_norms(g)[0]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--algebra", choices=sorted(BUILTIN_ALGEBRAS), default=SweepConfig.algebra)
    ap.add_argument("--bins", type=int, default=SweepConfig.bins)
    ap.add_argument("--csv", type=Path, default=None)
    cfg = SweepConfig(**vars(ap.parse_args(argv)))
    a, norms, top = run(cfg)
    k = int(np.argmax(norms))
    print(f"samples {cfg.samples}  vertex norm {top:.12f}  sweep max {norms[k]:.12f}  excess {norms[k] - top:+.3e}")
    print("argmax angles (phi, psi, theta, phi1, phi2, phi3):", np.array2string(a[k], precision=6))
    hist, edges = np.histogram(norms, bins=cfg.bins, range=(0.0, max(top, norms.max())))
    for h, lo, hi in zip(hist, edges[:-1], edges[1:]):
        print(f"  [{lo:6.3f}, {hi:6.3f})  {h}")
    if cfg.csv is not None:
        header = "phi,psi,theta,phi1,phi2,phi3,norm"
        np.savetxt(cfg.csv, np.column_stack([a, norms]), delimiter=",", header=header, comments="", fmt="%.17g")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
