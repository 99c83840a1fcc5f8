"""Exact integer polynomials and certified complex roots."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import mpmath
import numpy as np

MAX_ROOT_DEGREE = 64
DEFAULT_TOL = 1e-9
WORK_PREC = 256  # bits for residuals and Newton polishing


class PolynomialError(ValueError):
    pass


class DegreeCapError(PolynomialError):
    """The polynomial is beyond the documented root-finding degree cap."""


class RootFindingError(RuntimeError):
    """Root iteration failed to certify; ``partial`` holds the best attempt."""

    def __init__(self, message: str, partial: "RootSet | None" = None):
        super().__init__(message)
        self.partial = partial


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; the zero polynomial has an
    empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _normalize(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise PolynomialError(f"non-integer coefficient {a!r}")
        self.coeffs = c

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * k + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        return reduce(lambda p, r: p * cls([-r, 1]), roots, cls([1]))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{'*' if mono else ''}{mono}"
            terms.append(("-" if a < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return IntPolynomial([other]) - self

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise PolynomialError("negative power")
        result, base = IntPolynomial([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(c * a for a in self.coeffs)

    def shift_degree(self, k: int) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * a for k, a in enumerate(self.coeffs) if k)

    def compose_neg(self) -> "IntPolynomial":
        """``p(-x)``."""
        return IntPolynomial(a if k % 2 == 0 else -a for k, a in enumerate(self.coeffs))

    def __call__(self, z):
        """Horner evaluation in the arithmetic of ``z`` (exact for int/Fraction)."""
        acc = 0 * z
        for a in reversed(self.coeffs):
            acc = acc * z + a
        return acc

    def max_abs_coeff(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)

    def trailing_zeros(self) -> int:
        """Multiplicity of the root ``0``."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k

    def to_json(self) -> str:
        return json.dumps([str(a) for a in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(int(s) for s in json.loads(text))


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return p.scale(c)


def shift_degree(p: IntPolynomial, k: int) -> IntPolynomial:
    return p.shift_degree(k)


def evaluate(p: IntPolynomial, z: complex, prec: int = WORK_PREC) -> complex:
    """Value of ``p`` at ``z``, Horner-evaluated at ``prec`` bits."""
    return evaluate_with_bound(p, z, prec)[0]


def evaluate_with_bound(p: IntPolynomial, z: complex, prec: int = WORK_PREC) -> tuple[complex, float]:
    """Horner value at ``prec`` bits together with a rounding-error bound.

    The bound is the standard running estimate ``2 d u sum |a_k| |z|^k``
    with unit roundoff ``u = 2**-prec``, plus the final rounding to double.
    """
    with mpmath.workprec(prec):
        zz = mpmath.mpc(z)
        acc = mpmath.mpc(0)
        for a in reversed(p.coeffs):
            acc = acc * zz + a
        absz = abs(zz)
        mag = mpmath.mpf(0)
        for a in reversed(p.coeffs):
            mag = mag * absz + abs(a)
        d = max(p.degree, 1)
        bound = float(2 * d * mpmath.ldexp(mag, -prec))
        value = complex(acc)
    return value, bound + abs(value) * 2.0 ** -52


def whitney_transform(F: IntPolynomial, n: int) -> IntPolynomial:
    """``x**n * F(-1/x)``: coefficient ``k`` of ``F`` lands at ``n - k`` with sign ``(-1)**k``."""
    if F.degree > n:
        raise PolynomialError("too many edges for vertex count")
    out = [0] * (n + 1)
    for k, a in enumerate(F.coeffs):
        out[n - k] = a if k % 2 == 0 else -a
    return IntPolynomial(out)


# exact square-free decomposition over Q (Yun), returned as integer polynomials


def _to_fracs(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(a) for a in p.coeffs]


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _fgcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        _, r = _fdivmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a] if a else a


def _fderiv(a: list[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(a)][1:]


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _primitive(a: list[Fraction]) -> IntPolynomial:
    den = reduce(math.lcm, (c.denominator for c in a), 1)
    ints = [int(c * den) for c in a]
    g = reduce(math.gcd, ints, 0) or 1
    if ints and ints[-1] < 0:
        g = -g
    return IntPolynomial(c // g for c in ints)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Pairs ``(q_i, i)`` of square-free, pairwise coprime factors with ``p ~ prod q_i**i``."""
    if p.degree < 1:
        return []
    f = _to_fracs(p)
    df = _fderiv(f)
    a = _fgcd(f, df)
    b, _ = _fdivmod(f, a)
    c, _ = _fdivmod(df, a)
    d = _fsub(c, _fderiv(b))
    out = []
    i = 1
    while len(b) > 1:
        g = _fgcd(b, d)
        if len(g) > 1:
            out.append((_primitive(g), i))
        b, _ = _fdivmod(b, g)
        c, _ = _fdivmod(d, g)
        d = _fsub(c, _fderiv(b))
        i += 1
    return out


@dataclass
class RootSet:
    """Complex roots of a polynomial with residual certificates.

    ``residuals[k]`` is the normwise backward error
    ``|p(r)| / sum_j |a_j| |r|^j`` of root ``k``, computed in extended
    precision at the stored double-precision root.
    """

    roots: list[complex]
    residuals: list[float]
    tol: float
    vieta_sum_error: float = 0.0
    vieta_product_error: float = 0.0

    @property
    def degree(self) -> int:
        return len(self.roots)

    def moduli(self) -> list[float]:
        return [abs(r) for r in self.roots]

    def certified(self) -> bool:
        return all(r <= self.tol for r in self.residuals) and max(
            self.vieta_sum_error, self.vieta_product_error
        ) <= 10 * self.tol

    def to_dict(self) -> dict:
        return {
            "roots": [[r.real, r.imag] for r in self.roots],
            "residuals": list(self.residuals),
            "tol": self.tol,
            "vieta_sum_error": self.vieta_sum_error,
            "vieta_product_error": self.vieta_product_error,
        }


def _scaled_residual(p: IntPolynomial, r: complex) -> float:
    with mpmath.workprec(WORK_PREC):
        z = mpmath.mpc(r)
        acc = mpmath.mpc(0)
        mag = mpmath.mpf(0)
        az = abs(z)
        for a in reversed(p.coeffs):
            acc = acc * z + a
            mag = mag * az + abs(a)
        return float(abs(acc) / mag) if mag else 0.0


def _aberth(coeffs: np.ndarray, maxiter: int = 500) -> tuple[np.ndarray, bool]:
    """Aberth-Ehrlich iteration on a square-free polynomial (ascending coeffs)."""
    a = coeffs[::-1] / coeffs[-1]  # monic, descending
    n = len(a) - 1
    da = np.polyder(a)
    # start on the circle whose radius is the geometric mean of the root moduli
    radius = abs(a[-1]) ** (1.0 / n) if a[-1] else 1.0
    z = radius * np.exp(2j * np.pi * (np.arange(n) + 0.25) / n + 0.4j)
    done = np.zeros(n, dtype=bool)
    for _ in range(maxiter):
        pz = np.polyval(a, z)
        dpz = np.polyval(da, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step), step, 0.0)
        step[done] = 0.0
        z = z - step
        done |= np.abs(step) <= 1e-15 * np.maximum(np.abs(z), 1e-300)
        if done.all():
            return z, True
    return z, False


def _newton_polish(q: IntPolynomial, z0: complex, steps: int = 60) -> complex:
    dq = q.derivative()
    with mpmath.workprec(WORK_PREC):
        z = mpmath.mpc(z0)
        for _ in range(steps):
            fz = q(z)
            dz = dq(z)
            if dz == 0:
                break
            delta = fz / dz
            z -= delta
            if abs(delta) <= abs(z) * mpmath.mpf(2) ** (-WORK_PREC + 20) or fz == 0:
                break
        r = complex(z)
    # imaginary parts below double resolution of the real part are noise
    if abs(r.imag) <= 1e-30 * abs(r.real):
        r = complex(r.real, 0.0)
    return r


def _deflation_roots(q: IntPolynomial) -> list[complex]:
    """Fallback: Newton with deflation in extended precision."""
    with mpmath.workprec(WORK_PREC):
        rest = [mpmath.mpc(a) for a in q.coeffs]
        found = []
        while len(rest) > 1:
            z = mpmath.mpc(0.4, 0.9)
            for _ in range(500):
                p = mpmath.mpc(0)
                dp = mpmath.mpc(0)
                for a in reversed(rest):
                    dp = dp * z + p
                    p = p * z + a
                if dp == 0:
                    z += mpmath.mpc(0.1, 0.1)
                    continue
                delta = p / dp
                z -= delta
                if abs(delta) <= mpmath.mpf(2) ** (-WORK_PREC + 30) * max(1, abs(z)):
                    break
            found.append(z)
            # synthetic division by (x - z)
            desc = rest[::-1]
            out = [desc[0]]
            for a in desc[1:-1]:
                out.append(a + out[-1] * z)
            rest = out[::-1]
        return [_newton_polish(q, complex(z)) for z in found]


def _roots_squarefree(q: IntPolynomial) -> list[complex]:
    if q.degree == 1:
        return [complex(Fraction(-q.coeffs[0], q.coeffs[1]))]
    coeffs = np.array([float(a) for a in q.coeffs], dtype=float)
    if not np.all(np.isfinite(coeffs)):
        return _deflation_roots(q)
    z, ok = _aberth(coeffs)
    if not ok:
        return _deflation_roots(q)
    return [_newton_polish(q, complex(r)) for r in z]


def find_roots(p: IntPolynomial, tol: float = DEFAULT_TOL) -> RootSet:
    """All complex roots of ``p`` with residual and Vieta certificates.

    Roots at zero are split off exactly, the rest goes through an exact
    square-free decomposition; each square-free factor is solved by Aberth
    iteration (Newton with deflation as fallback) and polished by Newton
    steps at extended precision. Raises ``RootFindingError`` rather than
    return an uncertified set.
    """
    if p.degree < 1:
        raise PolynomialError("root finding needs degree >= 1")
    if p.degree > MAX_ROOT_DEGREE:
        raise DegreeCapError(f"degree {p.degree} exceeds cap {MAX_ROOT_DEGREE}")
    k0 = p.trailing_zeros()
    roots: list[complex] = [0j] * k0
    rest = IntPolynomial(p.coeffs[k0:])
    for q, mult in squarefree_decomposition(rest):
        for r in _roots_squarefree(q):
            roots.extend([r] * mult)
    roots.sort(key=lambda r: (round(abs(r), 12), r.real, r.imag))
    residuals = [_scaled_residual(p, r) for r in roots]
    rs = RootSet(roots, residuals, tol)
    n = p.degree
    lead = p.coeffs[-1]
    with mpmath.workprec(WORK_PREC):
        zs = [mpmath.mpc(r) for r in roots]
        s = mpmath.fsum(zs)
        s_ref = mpmath.mpf(-p[n - 1]) / lead
        rs.vieta_sum_error = float(abs(s - s_ref) / max(1, mpmath.fsum(abs(z) for z in zs)))
        prod = mpmath.fprod(zs)
        prod_ref = mpmath.mpf((-1) ** n * p[0]) / lead
        scale_p = max(mpmath.mpf(1), mpmath.fprod(abs(z) for z in zs))
        rs.vieta_product_error = float(abs(prod - prod_ref) / scale_p)
    if len(roots) != n or not rs.certified():
        raise RootFindingError(
            f"roots not certified: max residual {max(residuals, default=0):.3g}, "
            f"vieta {rs.vieta_sum_error:.3g}/{rs.vieta_product_error:.3g}",
            partial=rs,
        )
    return rs


def parse_coefficients(items: Sequence) -> IntPolynomial:
    return IntPolynomial(int(a) for a in items)
