"""Zero-free disc constants.

For a girth parameter ``g`` the constant ``K_g`` is the minimum of
``b / ((1 - a) ln b)`` over the box ``a in [0, 0.9]``, ``b in [1.1, e)``
subject to ``f_g(a, b) <= a``. The ``g -> inf`` limit has a closed form in
terms of the principal Lambert W branch.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass

A_MAX = 0.9
B_MIN = 1.1
B_EPS = 1e-9
BISECT_TOL = 1e-12
GOLDEN_TOL = 1e-10
SCAN_POINTS = 2000

INF = math.inf


class BoundsError(ValueError):
    pass


def h_value(a: float, b: float) -> float:
    """``(1 - a) ln b / b``; the disc radius is ``h / Delta``."""
    if not (0 <= a < 1):
        raise BoundsError(f"a={a} outside [0, 1)")
    if not (1 < b <= math.e):
        raise BoundsError(f"b={b} outside (1, e]")
    return (1 - a) * math.log(b) / b


def f_g_value(g: float, a: float, b: float) -> float:
    """Constraint function; ``g = inf`` drops the girth term."""
    if g < 3:
        raise BoundsError("girth parameter must be >= 3")
    if not (0 <= a < 1):
        raise BoundsError(f"a={a} outside [0, 1)")
    if b <= 1:
        raise BoundsError(f"b={b} must exceed 1")
    lb = math.log(b)
    base = math.exp((1 - a) * lb / b) - 1
    if g == INF:
        if b > math.e:
            raise BoundsError("b beyond e")
        return base
    if lb >= 1:
        raise BoundsError("denominator nonpositive (b >= e)")
    return base + b * lb ** (g - 1) / (2 * (1 - lb))


def d_alpha(alpha: float, delta: int) -> float:
    """``alpha ln(alpha) / (Delta (1 - ln alpha))``, the double-rooted tree bound."""
    if delta < 1:
        raise BoundsError("Delta must be >= 1")
    if not (1 <= alpha < math.e):
        raise BoundsError(f"alpha={alpha} outside [1, e)")
    la = math.log(alpha)
    return alpha * la / (delta * (1 - la))


def lambert_w0(x: float) -> float:
    """Principal Lambert W on ``x >= 0``: the ``w >= 0`` with ``w e^w = x``.

    Halley iteration from a log-based start, finished with Newton steps.
    """
    if x < 0 or math.isnan(x):
        raise BoundsError("lambert_w0 is only provided for x >= 0")
    if x == 0:
        return 0.0
    if math.isinf(x):
        return INF
    w = math.log1p(x) if x < math.e else math.log(x) - math.log(math.log(x))
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1
        step = f / (ew * wp1 - (w + 2) * f / (2 * wp1))
        w -= step
        if abs(step) <= 1e-16 * (1 + abs(w)):
            break
    for _ in range(2):
        ew = math.exp(w)
        w -= (w * ew - x) / (ew * (w + 1))
    return w


@dataclass
class BoundSolution:
    g: float
    a: float
    b: float
    h: float
    f: float
    K: float

    def feasible(self) -> bool:
        return self.f <= self.a + 1e-12

    def to_dict(self) -> dict:
        d = asdict(self)
        d["g"] = "inf" if self.g == INF else int(self.g)
        return d


def _solution(g: float, a: float, b: float) -> BoundSolution:
    h = h_value(a, b)
    return BoundSolution(g, a, b, h, f_g_value(g, a, b), 1 / h)


def min_feasible_a(g: float, b: float, tol: float = BISECT_TOL) -> float | None:
    """Smallest ``a`` in ``[0, 0.9]`` with ``f_g(a, b) <= a``, or ``None``.

    ``f_g(a, b) - a`` is strictly decreasing in ``a``, so the feasible set
    is an interval ``[a_c, 0.9]`` found by bisection on the crossing.
    """
    phi = lambda a: f_g_value(g, a, b) - a  # noqa: E731
    if phi(A_MAX) > 0:
        return None
    if phi(0.0) <= 0:
        return 0.0
    lo, hi = 0.0, A_MAX
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if phi(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return hi


def _objective(g: float, b: float) -> float:
    a = min_feasible_a(g, b)
    if a is None:
        return INF
    return b / ((1 - a) * math.log(b))


def _golden(fn, lo: float, hi: float, tol: float) -> float:
    inv = (math.sqrt(5) - 1) / 2
    c = hi - inv * (hi - lo)
    d = lo + inv * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > tol:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - inv * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv * (hi - lo)
            fd = fn(d)
    return c if fc <= fd else d


def solve_kg(g: int, tol: float = GOLDEN_TOL) -> BoundSolution:
    """Near-optimal feasible ``(a, b)`` for girth ``g``.

    A uniform scan over ``b`` brackets the best value; golden-section search
    refines inside the bracket, with ``a`` set to the smallest feasible value
    for each ``b``.
    """
    if g < 3:
        raise BoundsError("girth parameter must be >= 3")
    if g == INF:
        return k_infinity()
    b_hi = math.e - B_EPS
    step = (b_hi - B_MIN) / (SCAN_POINTS - 1)
    grid = [B_MIN + i * step for i in range(SCAN_POINTS)]
    vals = [_objective(g, b) for b in grid]
    i = min(range(SCAN_POINTS), key=vals.__getitem__)
    if vals[i] == INF:
        raise BoundsError(f"no feasible (a, b) for g={g}")
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, SCAN_POINTS - 1)]
    b = _golden(lambda t: _objective(g, t), lo, hi, tol)
    if _objective(g, b) > vals[i]:
        b = grid[i]
    a = min_feasible_a(g, b)
    return _solution(g, a, b)


def k_infinity() -> BoundSolution:
    """Closed-form limit: ``b* = e``, ``a* = e W(e^(2/e - 1)) - 1``."""
    w = lambert_w0(math.exp(2 / math.e - 1))
    a = math.e * w - 1
    b = math.e
    sol = _solution(INF, a, b)
    sol.K = 1 / (1 + math.log(w))
    return sol


def stationarity_gap(sol: BoundSolution) -> float:
    """``ln(b)/b - ln(1 + a)/(1 - a)``; vanishes at the limiting optimum."""
    return math.log(sol.b) / sol.b - math.log1p(sol.a) / (1 - sol.a)


def emit_table(gs) -> list[BoundSolution]:
    return [k_infinity() if g == INF else solve_kg(int(g)) for g in gs]


def table_csv(rows: list[BoundSolution]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["g", "a", "b", "h", "f", "K"])
    for r in rows:
        d = r.to_dict()
        writer.writerow([d["g"]] + [f"{d[k]:.9g}" for k in ("a", "b", "h", "f", "K")])
    return buf.getvalue()


def table_json(rows: list[BoundSolution]) -> str:
    return json.dumps({"schema": 1, "rows": [r.to_dict() for r in rows]}, indent=2)


def table_text(rows: list[BoundSolution]) -> str:
    lines = [f"{'g':>5} {'a':>10} {'b':>10} {'1/h':>10}"]
    for r in rows:
        g = "inf" if r.g == INF else str(int(r.g))
        lines.append(f"{g:>5} {r.a:10.6f} {r.b:10.6f} {r.K:10.5f}")
    return "\n".join(lines)
