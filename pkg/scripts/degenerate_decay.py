"""Gap between curved and flat cross ratios as a quadruple shrinks.

For each scale r the quadruple with arclength parameters r*t is built on a
random geodesic; the median gap |CR - CR_flat| is printed together with the
log-log slope, which should be close to 2.

    python3 scripts/degenerate_decay.py --samples 200
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from curvkit.cross_ratio import CollinearQuadruple, cross_ratio
from curvkit.models import GeodesicRay, Geometry, geodesic_point
from curvkit.sampling import distinct_params, random_point, random_tangent
from curvkit.sweep import substream


@dataclass
class DecayConfig:
    samples: int = 200
    seed: int = 0
    n: int = 2
    scales: tuple[float, ...] = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3)


def flat_cross_ratio(t) -> float:
    d = lambda i, j: abs(t[i] - t[j])  # noqa: E731
    return d(1, 3) / d(2, 3) * d(2, 0) / d(1, 0)


def gaps(geometry: Geometry, cfg: DecayConfig) -> np.ndarray:
    """Array of shape (samples, len(scales))."""
    out = np.empty((cfg.samples, len(cfg.scales)))
    for i in range(cfg.samples):
        rng = substream(cfg.seed, i)
        base = random_point(geometry, cfg.n, rng, 0.5)
        ray = GeodesicRay(geometry, base, random_tangent(geometry, base, rng))
        t = distinct_params(rng, -1.0, 1.0, gap=0.2)
        flat = flat_cross_ratio(t)
        for k, r in enumerate(cfg.scales):
            quad = CollinearQuadruple(geometry, tuple(geodesic_point(ray, r * ti) for ti in t))
            out[i, k] = abs(cross_ratio(quad) - flat)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=DecayConfig.samples)
    p.add_argument("--seed", type=int, default=DecayConfig.seed)
    p.add_argument("--n", type=int, default=DecayConfig.n)
    cfg = DecayConfig(**vars(p.parse_args()))
    for geometry in (Geometry.SPHERICAL, Geometry.HYPERBOLIC):
        med = np.median(gaps(geometry, cfg), axis=0)
        slope = np.polyfit(np.log(cfg.scales), np.log(med), 1)[0]
        print(f"{geometry.value}: slope {slope:.3f}")
        for r, g in zip(cfg.scales, med):
            print(f"  r={r:8.0e}  median gap {g:.3e}")


if __name__ == "__main__":
    main()
