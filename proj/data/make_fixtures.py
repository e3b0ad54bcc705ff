"""Regenerates the synthetic CSV fixtures in this directory (deterministic)."""

import math
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent


def g(x):
    return "0" if x == 0 else "%.15g" % x


def write(name, header, rows):
    with open(HERE / name, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(g(v) if isinstance(v, float) else str(v) for v in row) + "\n")


def triangle(lo, hi, periods, per_period):
    half = per_period // 2
    out = [lo]
    for _ in range(periods):
        out += [lo + (hi - lo) * i / half for i in range(1, half + 1)]
        out += [hi - (hi - lo) * i / half for i in range(1, half + 1)]
    return out


def tendon(a=50.0, b=8.0, eps0=0.02, span=0.25, points=25, cycles=3, noise=0.02, seed=7):
    rng = random.Random(seed)
    curve = lambda s: a * math.expm1(b * (s - eps0))
    noisy = lambda load: max(0.0, load * (1 + noise * rng.gauss(0, 1)))
    peak = eps0 + span
    rows, t = [], 0.0
    for i in range(points):
        s = peak * i / (points - 1)
        rows.append((round(t, 10), noisy(curve(peak) * (s / peak) ** 2), s, 0))
        t += 0.1
    down = [eps0 if i == points - 1 else peak - span * i / (points - 1) for i in range(1, points)]
    for s in down:
        rows.append((round(t, 10), 0.0 if s == eps0 else noisy(curve(s)), s, 0))
        t += 0.1
    for c in range(1, cycles + 1):
        for i in range(1, points):
            s = eps0 + span * i / (points - 1)
            rows.append((round(t, 10), noisy(curve(s)), s, c))
            t += 0.1
        for s in down:
            rows.append((round(t, 10), noisy(curve(s)), s, c))
            t += 0.1
    write("tendon_synthetic.csv", ["time_s", "load_N", "strain", "cycle"], rows)


def play(c, r, current, t0=0.0):
    out, t = [], t0
    for i in current:
        t = min(max(t, c * i - r), c * i + r)
        out.append(t)
    return out


def winch(c=20.0, r=5.0, noise=0.01, seed=11):
    rng = random.Random(seed)
    current = triangle(0.5, 2.5, 3, 200)
    tension = play(c, r, current)
    rows = [(round(0.01 * k, 10), i, t * (1 + noise * rng.gauss(0, 1)))
            for k, (i, t) in enumerate(zip(current, tension))]
    write("winch_synthetic.csv", ["time_s", "current_A", "tension_N"], rows)


def profile():
    current = triangle(0.0, 2.0, 2, 80)
    write("triangle_profile.csv", ["time_s", "current_A"],
          [(round(0.05 * k, 10), i) for k, i in enumerate(current)])


if __name__ == "__main__":
    tendon()
    winch()
    profile()
