"""Hand-written SVG output: sample-and-hold step plots and scan heatmaps."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

WIDTH, HEIGHT, PAD = 640, 360, 48


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _header(width: int, height: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]


def step_points(times: list[float], values: list[float], t_end: float) -> list[tuple[float, float]]:
    """Vertices of a held (piecewise-constant, right-open) signal."""
    pts = []
    for i, (t, v) in enumerate(zip(times, values)):
        nxt = times[i + 1] if i + 1 < len(times) else t_end
        if pts:
            pts.append((t, pts[-1][1]))
        pts.append((t, v))
        pts.append((nxt, v))
    return pts


def trajectory_svg(traj, title: str = "") -> str:
    xs = [(float(s.t), float(s.x)) for s in traj.samples if s.x is not None]
    ys = [(float(s.t), float(s.y)) for s in traj.samples if s.y is not None]
    t_end = float(traj.horizon) or 1.0
    series = {
        "x": step_points([t for t, _ in xs], [v for _, v in xs], t_end),
        "y": step_points([t for t, _ in ys], [v for _, v in ys], t_end),
    }
    values = [v for pts in series.values() for _, v in pts] or [0.0]
    lo, hi = min(values), max(values)
    if hi == lo:
        lo, hi = lo - 1, hi + 1

    def sx(t):
        return PAD + (WIDTH - 2 * PAD) * t / t_end

    def sy(v):
        return HEIGHT - PAD - (HEIGHT - 2 * PAD) * (v - lo) / (hi - lo)

    out = _header(WIDTH, HEIGHT)
    out.append(
        f'<line x1="{PAD}" y1="{_fmt(sy(0) if lo <= 0 <= hi else HEIGHT - PAD)}" '
        f'x2="{WIDTH - PAD}" y2="{_fmt(sy(0) if lo <= 0 <= hi else HEIGHT - PAD)}" stroke="#999"/>'
    )
    colours = {"x": "#1f77b4", "y": "#d62728"}
    for name, pts in series.items():
        path = " ".join(f"{_fmt(sx(t))},{_fmt(sy(v))}" for t, v in pts)
        out.append(f'<polyline fill="none" stroke="{colours[name]}" stroke-width="1.5" points="{path}"/>')
    out.append(f'<text x="{PAD}" y="{PAD / 2}" font-size="14">{escape(title)}</text>')
    out.append(f'<text x="{WIDTH - PAD}" y="{PAD / 2}" font-size="12" fill="#1f77b4" text-anchor="end">x</text>')
    out.append(f'<text x="{WIDTH - PAD + 14}" y="{PAD / 2}" font-size="12" fill="#d62728" text-anchor="end">y</text>')
    out.append(f'<text x="{PAD}" y="{HEIGHT - PAD / 3}" font-size="11">t = 0</text>')
    out.append(
        f'<text x="{WIDTH - PAD}" y="{HEIGHT - PAD / 3}" font-size="11" text-anchor="end">'
        f"t = {escape(str(traj.horizon))}</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _verdict_colour(radius: float, verdict: str, scale: float) -> str:
    if verdict == "marginal":
        return "#dddddd"
    strength = 1.0 if radius <= 0 else min(abs(math.log(radius)) / scale, 1.0)
    # blend white -> blue (stable) or white -> red (unstable)
    target = (33, 102, 172) if verdict == "asymptotically-stable" else (178, 24, 43)
    rgb = [round(255 + (c - 255) * (0.25 + 0.75 * strength)) for c in target]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def heatmap_svg(rows: list[dict], x_name: str, y_name: str, x_values: list, y_values: list) -> str:
    """One rectangle per scan cell, x along columns and y along rows (y grows upward)."""
    nx, ny = len(x_values), len(y_values)
    cell_w = (WIDTH - 2 * PAD) / nx
    cell_h = (HEIGHT - 2 * PAD) / ny
    logs = [abs(math.log(r["spectral_radius"])) for r in rows if r["spectral_radius"] > 0]
    scale = max(logs, default=1.0) or 1.0
    out = _header(WIDTH, HEIGHT)
    for r in rows:
        i, j = r["i"], r["j"]
        colour = _verdict_colour(r["spectral_radius"], r["verdict"], scale)
        x = PAD + i * cell_w
        y = HEIGHT - PAD - (j + 1) * cell_h
        out.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cell_w)}" height="{_fmt(cell_h)}" '
            f'fill="{colour}"><title>{escape(x_name)}={escape(str(x_values[i]))}, '
            f'{escape(y_name)}={escape(str(y_values[j]))}, rho={r["spectral_radius"]:.6g}</title></rect>'
        )
    out.append(f'<text x="{WIDTH / 2}" y="{HEIGHT - PAD / 4}" font-size="12" text-anchor="middle">{escape(x_name)}</text>')
    out.append(
        f'<text x="{PAD / 3}" y="{HEIGHT / 2}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 {PAD / 3} {HEIGHT / 2})">{escape(y_name)}</text>'
    )
    out.append(f'<text x="{PAD}" y="{PAD / 2}" font-size="12">blue: stable, red: unstable, grey: marginal; shade ~ |log rho|</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
