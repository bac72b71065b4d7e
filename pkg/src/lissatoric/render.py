"""Curve samples and braid-shadow drawings.

The space curve is

    x = (2 + sin(q·u)) cos(N·u),  y = (2 + sin(q·u)) sin(N·u),  z = cos(p(u + φ_c))

for ``u`` in ``[0, 2π]``.  Substituting ``u = 2π(t+k)/N`` turns it into strand ``k``
of the braid over ``t`` in ``[0, 1]``, with the braid-frame phase ``φ`` related by
``φ_c = 2πφ/N``.  Functions here take the braid-frame phase.
"""

from __future__ import annotations

import csv
import math
from fractions import Fraction
from pathlib import Path
from typing import TextIO

import numpy as np

from .oracle import PhaseSpec, default_phase, enumerate_events
from .symbolic import check_triple


def curve_phase(N: int, phi: float) -> float:
    return 2 * math.pi * phi / N


def curve_coords(N: int, q: int, p: int, phi: float = 0.0, samples: int = 1000) -> np.ndarray:
    """``samples`` rows of ``(u, x, y, z)`` with ``u`` uniform on ``[0, 2π]``, endpoints included."""
    check_triple(N, q, p)
    if samples < 2:
        raise ValueError("need at least two samples")
    u = np.linspace(0.0, 2 * math.pi, samples)
    rho = 2 + np.sin(q * u)
    phase = curve_phase(N, phi)
    return np.column_stack((u, rho * np.cos(N * u), rho * np.sin(N * u), np.cos(p * (u + phase))))


def write_coords_csv(out: TextIO, coords: np.ndarray) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "x", "y", "z"])
    for row in coords:
        writer.writerow([f"{v:.15g}" for v in row])


def shadow_svg(
    N: int,
    q: int,
    p: int,
    spec: PhaseSpec | None = None,
    samples: int = 400,
    width: float = 800.0,
    height: float = 400.0,
) -> str:
    """The strand graphs ``t -> sin(2πq(t+k)/N)`` over ``[η, 1+η]``, under-strands broken.

    Each crossing is also emitted as a ``<circle class="crossing">`` marker carrying
    its generator index and sign.
    """
    spec = spec or default_phase(N, q, p)
    events = enumerate_events(N, q, p, spec)
    eta = float(spec.eta)
    phi = float(spec.phi)
    margin = 20.0
    gap = 0.012

    def sx(t: float) -> float:
        return margin + (t - eta) * (width - 2 * margin)

    def sy(y: float) -> float:
        return margin + (1 - y) / 2 * (height - 2 * margin)

    def strand_y(k: int, t: float) -> float:
        return math.sin(2 * math.pi * q * (t + k) / N)

    def strand_z(k: int, t: float) -> float:
        return math.cos(2 * math.pi * p * (t + k + phi) / N)

    cuts: dict[int, list[float]] = {k: [] for k in range(N)}
    markers = []
    for ev in events:
        t = float(ev.t)
        k, l = ev.strands
        under = k if strand_z(k, t) < strand_z(l, t) else l
        cuts[under].append(t)
        markers.append((t, strand_y(k, t), ev))

    colors = ["#c0392b", "#27ae60", "#2980b9", "#8e44ad", "#d35400", "#16a085", "#2c3e50", "#7f8c8d"]
    ts = np.linspace(eta, eta + 1, samples + 1)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f"<title>Braid shadow of K({N},{q},{p}), phase {spec.phi}</title>",
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="white"/>',
    ]
    for k in range(N):
        segments: list[list[tuple[float, float]]] = [[]]
        for t in ts:
            if any(abs(t - c) < gap for c in cuts[k]):
                if segments[-1]:
                    segments.append([])
                continue
            segments[-1].append((sx(t), sy(strand_y(k, t))))
        d = " ".join(
            "M " + " L ".join(f"{x:.2f},{y:.2f}" for x, y in seg) for seg in segments if len(seg) > 1
        )
        lines.append(
            f'<path class="strand" data-strand="{k}" d="{d}" fill="none" '
            f'stroke="{colors[k % len(colors)]}" stroke-width="2"/>'
        )
    for t, y, ev in markers:
        lines.append(
            f'<circle class="crossing" cx="{sx(t):.2f}" cy="{sy(y):.2f}" r="3" fill="none" stroke="none" '
            f'data-t="{ev.t}" data-i="{ev.gen_index}" data-sign="{ev.sign:+d}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def parse_phase(text: str) -> Fraction:
    """Exact phase from ``"3/7"``, ``"-0.125"`` or ``"2"``."""
    return Fraction(text)
