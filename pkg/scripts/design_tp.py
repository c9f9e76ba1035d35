#!/usr/bin/env python3
"""Search for a three-plane arrangement with short pairwise intersection chords.

Reachability floods between crossing planes travel along the intersection
line inside each patch, and any landmark within one hop of a window floods
both planes, so the total in-patch chord length is the quantity to minimize.
Constraints: all three pairs intersect within the patches (window length in
[wmin, wmax]), dihedral angles stay >= 40 degrees.
"""

import math
import sys

import numpy as np

HALF = 0.5


def frame_from_params(p):
    """p = (cx, cy, cz, theta, phi, psi): center + normal angles + spin."""
    cx, cy, cz, theta, phi, psi = p
    n = np.array([
        math.sin(theta) * math.cos(phi),
        math.sin(theta) * math.sin(phi),
        math.cos(theta),
    ])
    a = np.array([0.0, 0.0, 1.0]) if abs(n[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    u = np.cross(n, a)
    u /= np.linalg.norm(u)
    w = np.cross(n, u)
    cu, su = math.cos(psi), math.sin(psi)
    return np.array([cx, cy, cz]), cu * u + su * w, -su * u + cu * w, n


def line_patch_interval(c, u, v, p0, d):
    """t-interval of line p0+t*d inside the patch; assumes line in plane."""
    lo, hi = -np.inf, np.inf
    for axis, half in ((u, HALF), (v, HALF)):
        da = d @ axis
        wa = (p0 - c) @ axis
        if abs(da) < 1e-14:
            if abs(wa) > half:
                return None
            continue
        t1, t2 = (-half - wa) / da, (half - wa) / da
        lo = max(lo, min(t1, t2))
        hi = min(hi, max(t1, t2))
    if hi <= lo:
        return None
    return lo, hi


def pair_stats(f1, f2):
    c1, u1, v1, n1 = f1
    c2, u2, v2, n2 = f2
    d = np.cross(n1, n2)
    nd = np.linalg.norm(d)
    if nd < 1e-9:
        return None
    d = d / nd
    A = np.stack([n1, n2])
    b = np.array([n1 @ c1, n2 @ c2])
    p0 = np.linalg.lstsq(A, b, rcond=None)[0]
    i1 = line_patch_interval(c1, u1, v1, p0, d)
    i2 = line_patch_interval(c2, u2, v2, p0, d)
    if i1 is None or i2 is None:
        return None
    lo = max(i1[0], i2[0])
    hi = min(i1[1], i2[1])
    window = max(0.0, hi - lo)
    chord = (i1[1] - i1[0]) + (i2[1] - i2[0])
    dihedral = math.degrees(math.acos(min(1.0, abs(n1 @ n2))))
    return window, chord, dihedral


def score(params, wmin=0.10, wmax=0.35):
    f1 = (np.array([0.0, 0.0, 0.0]), np.array([1.0, 0.0, 0.0]),
          np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0]))
    f2 = frame_from_params(params[:6])
    f3 = frame_from_params(params[6:])
    total_chord = 0.0
    worst = 0.0
    penalty = 0.0
    for a, b in ((f1, f2), (f1, f3), (f2, f3)):
        st = pair_stats(a, b)
        if st is None:
            return 1e6, None
        window, chord, dihedral = st
        if window < wmin:
            penalty += 50.0 * (wmin - window)
        if window > wmax:
            penalty += 10.0 * (window - wmax)
        if dihedral < 40.0:
            penalty += 1.0 * (40.0 - dihedral)
        total_chord += chord
        worst = max(worst, chord)
    return total_chord + 2.0 * worst + penalty, (f2, f3)


def main():
    rng = np.random.default_rng(7)
    best = (np.inf, None, None)
    # coarse random search
    for _ in range(150000):
        p = np.concatenate([
            rng.uniform([-0.9, -0.9, -0.6, 0.2, -math.pi, 0], [0.9, 0.9, 0.6, math.pi - 0.2, math.pi, math.pi], 6),
            rng.uniform([-0.9, -0.9, -0.6, 0.2, -math.pi, 0], [0.9, 0.9, 0.6, math.pi - 0.2, math.pi, math.pi], 6),
        ])
        s, frames = score(p)
        if s < best[0]:
            best = (s, p, frames)
    # local refinement
    p = best[1].copy()
    step = 0.08
    for it in range(80000):
        cand = p + rng.normal(0, step, 12)
        s, frames = score(cand)
        if s < best[0]:
            best = (s, cand, frames)
            p = cand
        if it % 6000 == 5999:
            step *= 0.6
    s, p, frames = best
    print(f"score {s:.4f}")
    f1 = (np.zeros(3), np.array([1.0, 0, 0]), np.array([0.0, 1, 0]), np.array([0.0, 0, 1]))
    f2, f3 = frames
    for nm, (a, b) in (("P1P2", (f1, f2)), ("P1P3", (f1, f3)), ("P2P3", (f2, f3))):
        window, chord, dih = pair_stats(a, b)
        print(f"{nm}: window={window:.3f} total_chord={chord:.3f} dihedral={dih:.1f}")
    np.set_printoptions(precision=17)
    for nm, f in (("P2", f2), ("P3", f3)):
        print(nm, "center", f[0], "u", f[1], "v", f[2])


if __name__ == "__main__":
    sys.exit(main())
