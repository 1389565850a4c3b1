"""Compare the closed-form entry table against the rotation composition and write ERRATA.md.

    python3 scripts/errata_pass.py [--samples 10000] [--seed 0] [--tol 1e-9] [--out ERRATA.md]
"""
import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from acs6.angle_param import ERRATA, errata_scan


@dataclass
class ErrataConfig:
    samples: int = 10_000
    seed: int = 0
    tol: float = 1e-9
    out: Path = Path(__file__).resolve().parents[1] / "ERRATA.md"


def render(cfg: ErrataConfig, scan: dict) -> str:
    lines = [
        "# Errata for the closed-form angle table",
        "",
        "Each of the 15 closed-form entries J_ij(phi, psi, theta, phi1, phi2, phi3) is compared",
        "with the same entry of S I0 S^T, S the six-rotation composition.",
        "",
        "Sampling protocol:",
        f"- samples: {cfg.samples} angle tuples from numpy default_rng(seed={cfg.seed})",
        "- phi, psi, theta uniform on [-pi/2, pi/2]; phi1, phi2, phi3 uniform on [0, 2 pi]",
        f"- an entry is flagged if |table - composition| > {cfg.tol:g} at any sample",
        "",
        f"overrides: {len(ERRATA)}",
        f"flagged by this scan: {len(scan)}",
        "",
    ]
    if not scan and not ERRATA:
        lines.append("No entry disagrees; corollary2_matrix uses the table verbatim in both modes.")
    for (i, j), info in scan.items():
        lines.append(f"- J{i}{j}: max error {info['max_error']:.3e}, counterexample "
                     f"{json.dumps(info['counterexample'], sort_keys=True)}")
    for (i, j), reason in ERRATA.items():
        if (i, j) not in scan:
            lines.append(f"- J{i}{j}: overridden ({reason})")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=ErrataConfig.samples)
    ap.add_argument("--seed", type=int, default=ErrataConfig.seed)
    ap.add_argument("--tol", type=float, default=ErrataConfig.tol)
    ap.add_argument("--out", type=Path, default=ErrataConfig.out)
    cfg = ErrataConfig(**vars(ap.parse_args(argv)))
    scan = errata_scan(cfg.samples, cfg.seed, cfg.tol)
    cfg.out.write_text(render(cfg, scan))
    print(f"{len(scan)} flagged entries; wrote {cfg.out}")
    return 1 if set(scan) - set(ERRATA) else 0


if __name__ == "__main__":
    raise SystemExit(main())
