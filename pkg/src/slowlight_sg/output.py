"""CSV, key-value text and minimal SVG line charts, all written atomically."""

import os
import tempfile
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

FLOAT_FMT = "{:.12e}"


def atomic_write(path, text):
    """Write ``text`` to a temp file in the target directory, then rename over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def _cell(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return FLOAT_FMT.format(float(v))
    return str(v)


def csv_text(header, rows):
    lines = [",".join(header)]
    lines += [",".join(_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_csv(path, header, rows):
    return atomic_write(path, csv_text(header, rows))


def write_keyvalue(path, items):
    return atomic_write(path, "".join(f"{k} = {_cell(v)}\n" for k, v in items))


def spectrum_rows(records):
    return [(r.delta_laser, r.transmission, r.angle, r.camera_displacement) for r in records]


SPECTRUM_HEADER = ("delta_rad_s", "transmission", "angle_rad", "camera_displacement_m")
SWEEP_HEADER = ("rabi_rad_s", "v_g_m_s", "v_g_err_m_s", "inv_v_g_s_m", "angle_rad", "angle_err_rad",
                "camera_displacement_m", "sub_linearity")
TRACE_HEADER = ("t_s", "intensity_W")


def sweep_rows(sweep):
    return [(r.rabi_control, r.v_g, r.v_g_err, 1.0 / r.v_g, r.angle, r.angle_err, r.camera_displacement,
             r.sub_linearity) for r in sweep.rows]


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def line_chart_svg(x, series, xlabel="", ylabel="", title="", width=640, height=400):
    """Self-contained SVG with one polyline per ``(label, y)`` in ``series``."""
    x = np.asarray(x, dtype=float)
    left, right, top, bottom = 80, 20, 40, 50
    pw, ph = width - left - right, height - top - bottom
    ys = np.concatenate([np.asarray(y, dtype=float) for _, y in series])
    xmin, xmax = float(x.min()), float(x.max())
    ymin, ymax = float(ys.min()), float(ys.max())
    if xmax == xmin:
        xmax = xmin + 1.0
    if ymax == ymin:
        ymin, ymax = ymin - 0.5, ymax + 0.5

    def sx(v):
        return left + (v - xmin) / (xmax - xmin) * pw

    def sy(v):
        return top + (ymax - v) / (ymax - ymin) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<text x="{left + pw / 2:.1f}" y="{height - 10}" text-anchor="middle">{escape(xlabel)}</text>',
        f'<text x="16" y="{top + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {top + ph / 2:.1f})">{escape(ylabel)}</text>',
    ]
    for frac in np.linspace(0.0, 1.0, 5):
        xv, yv = xmin + frac * (xmax - xmin), ymin + frac * (ymax - ymin)
        out.append(f'<text x="{sx(xv):.1f}" y="{top + ph + 16}" text-anchor="middle">{xv:.3g}</text>')
        out.append(f'<text x="{left - 6}" y="{sy(yv) + 4:.1f}" text-anchor="end">{yv:.3g}</text>')
    if ymin < 0 < ymax:
        out.append(f'<line x1="{left}" x2="{left + pw}" y1="{sy(0):.1f}" y2="{sy(0):.1f}" stroke="#999" '
                   'stroke-dasharray="4 3"/>')
    for i, (label, y) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        pts = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in zip(x, np.asarray(y, dtype=float)))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        if label:
            out.append(f'<text x="{left + pw - 6}" y="{top + 16 + 14 * i}" text-anchor="end" '
                       f'fill="{color}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path, *args, **kwargs):
    return atomic_write(path, line_chart_svg(*args, **kwargs))
