"""Security-analysis suite: histogram, entropy, correlation, NPCR, UACI.

All metrics are exhaustive and deterministic (no pair sampling), so the
same image always yields the same report. Entropy and the differential
metrics accept arrays of any shape; directional correlation needs a 2-D
image with at least two pixels along the chosen direction.
"""

import json
from dataclasses import dataclass

import numpy as np

DIRECTIONS = ("horizontal", "vertical", "diagonal")


class DimensionMismatch(ValueError):
    """Paired images do not have identical dimensions."""


class DegenerateVariance(ValueError):
    """A correlation operand is constant; the coefficient is undefined."""


def histogram(img: np.ndarray) -> np.ndarray:
    """Counts of each intensity 0..255; sums to the pixel count."""
    arr = np.asarray(img, dtype=np.uint8)
    return np.bincount(arr.reshape(-1), minlength=256)


def entropy(img: np.ndarray) -> float:
    """Shannon entropy over the 256 intensity symbols, in [0, 8] bits."""
    counts = histogram(img)
    total = counts.sum()
    p = counts[counts > 0] / total
    return float((p * np.log2(1.0 / p)).sum())


def _direction_pairs(img: np.ndarray, direction: str) -> tuple[np.ndarray, np.ndarray]:
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError("correlation needs a 2-D image")
    if direction == "horizontal":
        x, y = arr[:, :-1], arr[:, 1:]
    elif direction == "vertical":
        x, y = arr[:-1, :], arr[1:, :]
    elif direction == "diagonal":
        x, y = arr[:-1, :-1], arr[1:, 1:]
    else:
        raise ValueError(f"unknown direction {direction!r}")
    x = x.reshape(-1).astype(np.float64)
    y = y.reshape(-1).astype(np.float64)
    if x.size < 2:
        raise ValueError(f"image too small for {direction} pairs")
    return x, y


def correlation(img: np.ndarray, direction: str) -> float:
    """Adjacent-pixel correlation coefficient over all pairs.

    Population (1/N) covariance and variances. Signed; tables elsewhere
    usually quote the magnitude.
    """
    x, y = _direction_pairs(img, direction)
    dx = x - x.mean()
    dy = y - y.mean()
    vx = float((dx * dx).mean())
    vy = float((dy * dy).mean())
    if vx == 0.0 or vy == 0.0:
        raise DegenerateVariance(f"{direction}: constant operand")
    cov = float((dx * dy).mean())
    return cov / float(np.sqrt(vx * vy))


def _check_pair(c1: np.ndarray, c2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(c1)
    b = np.asarray(c2)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes differ: {a.shape} vs {b.shape}")
    return a, b


def npcr(c1: np.ndarray, c2: np.ndarray) -> float:
    """Percentage of positions where the two images differ."""
    a, b = _check_pair(c1, c2)
    return float(100.0 * np.count_nonzero(a != b) / a.size)


def uaci(c1: np.ndarray, c2: np.ndarray) -> float:
    """Mean absolute intensity difference, normalized by 255, as percent."""
    a, b = _check_pair(c1, c2)
    diff = np.abs(a.astype(np.int16) - b.astype(np.int16))
    return float(100.0 * diff.sum() / (255.0 * a.size))


@dataclass
class SecurityReport:
    """Per-image metrics plus optional pair metrics.

    Correlation entries are None where the coefficient is undefined
    (constant operand); the reason is recorded in notes.
    """

    entropy: float
    corr_h: float | None
    corr_v: float | None
    corr_d: float | None
    histogram: np.ndarray
    npcr: float | None = None
    uaci: float | None = None
    notes: dict[str, str] = None

    def __post_init__(self):
        if self.notes is None:
            self.notes = {}


def build_report(img: np.ndarray, pair: np.ndarray | None = None) -> SecurityReport:
    """Assemble the full report; pair metrics only when a pair is given."""
    corr = {}
    notes = {}
    for direction in DIRECTIONS:
        try:
            corr[direction] = correlation(img, direction)
        except DegenerateVariance as e:
            corr[direction] = None
            notes[direction] = str(e)
    report = SecurityReport(
        entropy=entropy(img),
        corr_h=corr["horizontal"],
        corr_v=corr["vertical"],
        corr_d=corr["diagonal"],
        histogram=histogram(img),
        notes=notes,
    )
    if pair is not None:
        report.npcr = npcr(img, pair)
        report.uaci = uaci(img, pair)
    return report


def report_text(report: SecurityReport) -> str:
    """Line-oriented rendering: one metric name and value per line."""
    lines = [f"entropy {report.entropy:.4f}"]
    for label, value in (
        ("corr_horizontal", report.corr_h),
        ("corr_vertical", report.corr_v),
        ("corr_diagonal", report.corr_d),
    ):
        if value is None:
            direction = label.split("_")[1]
            lines.append(f"{label} undefined ({report.notes.get(direction, 'n/a')})")
        else:
            lines.append(f"{label} {value:.6f}")
    if report.npcr is not None:
        lines.append(f"npcr {report.npcr:.4f}")
    if report.uaci is not None:
        lines.append(f"uaci {report.uaci:.4f}")
    return "\n".join(lines) + "\n"


def report_json(report: SecurityReport) -> str:
    """Machine-readable rendering, histogram included."""
    payload = {
        "entropy": report.entropy,
        "correlation": {
            "horizontal": report.corr_h,
            "vertical": report.corr_v,
            "diagonal": report.corr_d,
        },
        "npcr": report.npcr,
        "uaci": report.uaci,
        "notes": report.notes,
        "histogram": [int(c) for c in report.histogram],
    }
    return json.dumps(payload, indent=2) + "\n"


def histogram_csv(report: SecurityReport) -> str:
    """The 256 histogram counts as one comma-separated line."""
    return ",".join(str(int(c)) for c in report.histogram) + "\n"
