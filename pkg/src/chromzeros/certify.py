"""Empirical checks of zero-free discs on concrete graphs.

Each certificate records the polynomial's roots against a disc bound:
chromatic zeros must lie strictly inside ``|x| < K * Delta`` and forest zeros
strictly outside ``|x| <= 1 / (2 Delta)``. Since the bounds are theorems, a
failing verdict on valid input points at a bug in the polynomial or root
pipeline.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Callable

from .bounds import solve_kg
from .families import GraphFamilySpec, generate
from .genfun import chromatic_polynomial, forest_polynomial
from .graph import GraphError, Multigraph, girth, max_degree, second_max_degree
from .poly import DEFAULT_TOL, find_roots

log = logging.getLogger(__name__)

THEOREMS = ("chromatic-disc", "girth-disc", "forest-disc")
SLACK_FACTOR = 100


class CertificationError(ValueError):
    pass


@dataclass
class Certificate:
    graph: str
    theorem: str
    delta: int
    girth: float
    radius: float
    extreme_modulus: float
    margin: float
    tol: float
    max_residual: float
    verdict: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["girth"] = "inf" if self.girth == float("inf") else int(self.girth)
        d["schema"] = 1
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def describe(G: Multigraph) -> str:
    return f"n={G.n} m={G.m} edges=" + ",".join(f"{u}-{v}" for u, v, _ in G.edges)


def _slack(radius: float, tol: float) -> float:
    return SLACK_FACTOR * tol * max(1.0, radius)


def _disc_outside(G: Multigraph, K: float, theorem: str, tol: float, cache: dict | None) -> Certificate:
    delta = max_degree(G)
    if delta < 1:
        raise CertificationError("theorem requires Δ >= 1")
    radius = K * delta
    chi = chromatic_polynomial(G, cache)
    roots = find_roots(chi, tol)
    top = max(roots.moduli())
    margin = radius - top
    ok = margin > -_slack(radius, tol)
    return Certificate(
        describe(G), theorem, delta, girth(G), radius, top, margin, tol,
        max(roots.residuals), "pass" if ok else "fail",
    )


def certify_chromatic_disc(G: Multigraph, K: float = 5.94, tol: float = DEFAULT_TOL, cache: dict | None = None) -> Certificate:
    """All chromatic zeros inside ``|x| < K * Delta(G)``."""
    return _disc_outside(G, K, "chromatic-disc", tol, cache)


def certify_girth_disc(G: Multigraph, g: int, tol: float = DEFAULT_TOL, cache: dict | None = None) -> Certificate:
    """All chromatic zeros inside ``|x| < K_g * Delta(G)`` for a graph of girth >= g."""
    if girth(G) < g:
        raise CertificationError("girth below g")
    K = solve_kg(g).K
    cert = _disc_outside(G, K, "girth-disc", tol, cache)
    cert.note = f"K_{g}={K:.6f}"
    return cert


def certify_forest_disc(G: Multigraph, tol: float = DEFAULT_TOL, cache: dict | None = None) -> Certificate:
    """No forest-polynomial zero in ``|x| <= 1/(2 Delta)``.

    ``Delta`` bounds every degree except that of one exempt vertex, so it is
    the second-largest entry of the degree sequence.
    """
    delta = second_max_degree(G)
    Z = forest_polynomial(G, cache=cache)
    note = "Delta excludes one max-degree vertex"
    if Z.degree < 1:
        return Certificate(describe(G), "forest-disc", delta, girth(G), 0.0, float("inf"),
                           float("inf"), tol, 0.0, "pass", "constant forest polynomial")
    radius = 1 / (2 * delta)
    roots = find_roots(Z, tol)
    low = min(roots.moduli())
    margin = low - radius
    ok = margin > -_slack(radius, tol)
    return Certificate(
        describe(G), "forest-disc", delta, girth(G), radius, low, margin, tol,
        max(roots.residuals), "pass" if ok else "fail", note,
    )


@dataclass
class SweepResult:
    certificates: list[Certificate] = field(default_factory=list)
    errors: list[tuple[int, str]] = field(default_factory=list)

    @property
    def failures(self) -> list[Certificate]:
        return [c for c in self.certificates if not c.passed]

    @property
    def min_margin(self) -> float:
        return min((c.margin for c in self.certificates), default=float("inf"))

    def summary(self) -> dict:
        return {
            "count": len(self.certificates),
            "passed": sum(c.passed for c in self.certificates),
            "failed": len(self.failures),
            "errors": len(self.errors),
            "min_margin": self.min_margin,
            "max_residual": max((c.max_residual for c in self.certificates), default=0.0),
        }


def certifier_for(theorem: str, K: float = 5.94, g: int = 3, tol: float = DEFAULT_TOL) -> Callable:
    if theorem == "chromatic-disc":
        return lambda G, cache: certify_chromatic_disc(G, K, tol, cache)
    if theorem == "girth-disc":
        return lambda G, cache: certify_girth_disc(G, g, tol, cache)
    if theorem == "forest-disc":
        return lambda G, cache: certify_forest_disc(G, tol, cache)
    raise CertificationError(f"unknown theorem {theorem!r}")


def sweep_graphs(graphs: list[Multigraph], theorem: str, K: float = 5.94, g: int = 3,
                 tol: float = DEFAULT_TOL) -> SweepResult:
    """Certify every graph; per-graph errors are recorded and the sweep continues."""
    check = certifier_for(theorem, K, g, tol)
    cache: dict = {}
    out = SweepResult()
    for i, G in enumerate(graphs):
        try:
            out.certificates.append(check(G, cache))
        except (CertificationError, GraphError, ArithmeticError, RuntimeError, ValueError) as exc:
            log.warning("graph %d: %s", i, exc)
            out.errors.append((i, str(exc)))
    return out


def sweep(spec: GraphFamilySpec | None, theorem: str, K: float = 5.94, g: int = 3,
          tol: float = DEFAULT_TOL) -> SweepResult:
    if spec is None:
        return SweepResult()
    return sweep_graphs(generate(spec), theorem, K, g, tol)
