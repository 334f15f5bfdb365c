"""Polynomials over the zeon algebra and their complex shadows.

Every zeon polynomial induces a complex polynomial by taking scalar
parts of its coefficients (constant term included). When an induced
zero is simple it lifts to a unique zeon zero, built grade by grade;
when every induced zero is simple the polynomial splits into linear
factors. Multiple induced zeros never lift uniquely, which is reported
instead of guessed.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .algebra import ZeonElement
from .errors import (DimensionMismatch, DoesNotSplitError, NonConvergenceError,
                     ParseError, PolyDivisionError, SpectralSimplicityError,
                     ZeonError)
from .tolerances import DEFAULT, Tolerances

_EPS = 2.0 ** -52
_MAX_ITER = 200
_STEP_TOL = 1e-14
_CLUSTER_REL = 1e-6       # first-pass merge radius for root clusters
_WIDE_CLUSTER_REL = 1e-3  # second pass, only for derivative-degenerate clusters
_SIMPLE_REL = 1e-8        # |f'(root)| above this (scaled) counts as simple


def _fmt_c(value: complex) -> str:
    if value.imag == 0:
        return f"{value.real:.6g}"
    return f"{value.real:.6g}{value.imag:+.6g}j"


class ZeonPolynomial:
    """Polynomial with zeon coefficients, stored ascending by degree.

    Canonical form strips trailing structurally-zero coefficients, so the
    leading coefficient of a nonzero polynomial is a stored nonzero element.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ZeonElement], tol: Tolerances = DEFAULT):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        n = coeffs[0].n
        for c in coeffs:
            if not isinstance(c, ZeonElement):
                raise TypeError("coefficients must be ZeonElement")
            if c.n != n:
                raise DimensionMismatch("coefficients live in different algebras")
        last = len(coeffs) - 1
        while last > 0 and not coeffs[last].terms:
            last -= 1
        self.coeffs = coeffs[:last + 1]

    @classmethod
    def from_scalars(cls, n: int, values: Iterable[complex],
                     tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        return cls([ZeonElement.scalar(n, v, tol) for v in values], tol)

    @classmethod
    def from_roots(cls, roots: Sequence[ZeonElement],
                   tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        """Monic product of the linear factors (u - root)."""
        if not roots:
            raise ValueError("need at least one root")
        n = roots[0].n
        poly = cls([ZeonElement.one(n)])
        for w in roots:
            poly = poly.mul(cls([w.scale(-1), ZeonElement.one(n)]), tol)
        return poly

    @property
    def n(self) -> int:
        return self.coeffs[0].n

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> ZeonElement:
        return self.coeffs[-1]

    def is_zero(self, tol: Tolerances = DEFAULT) -> bool:
        return all(c.is_zero(tol) for c in self.coeffs)

    def evaluate(self, point, tol: Tolerances = DEFAULT) -> ZeonElement:
        """Horner evaluation at a zeon element or complex scalar."""
        if isinstance(point, (int, float, complex)):
            point = ZeonElement.scalar(self.n, point, tol)
        if point.n != self.n:
            raise DimensionMismatch("evaluation point lives in a different algebra")
        acc = ZeonElement.zero(self.n)
        for c in reversed(self.coeffs):
            acc = acc.mul(point, tol).add(c, tol)
        return acc

    __call__ = evaluate

    def add(self, other: "ZeonPolynomial", tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        self._require_same_n(other)
        size = max(len(self.coeffs), len(other.coeffs))
        zero = ZeonElement.zero(self.n)
        out = []
        for i in range(size):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            out.append(a.add(b, tol))
        return ZeonPolynomial(out, tol)

    def sub(self, other: "ZeonPolynomial", tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        return self.add(other.scale(-1, tol), tol)

    def mul(self, other: "ZeonPolynomial", tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        self._require_same_n(other)
        out = [ZeonElement.zero(self.n) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if not a.terms:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.terms:
                    continue
                out[i + j] = out[i + j].add(a.mul(b, tol), tol)
        return ZeonPolynomial(out, tol)

    def scale(self, value, tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        if isinstance(value, ZeonElement):
            return ZeonPolynomial([c.mul(value, tol) for c in self.coeffs], tol)
        return ZeonPolynomial([c.scale(value, tol) for c in self.coeffs], tol)

    def monic(self, tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        lead = self.leading
        if not lead.is_invertible(tol):
            raise PolyDivisionError("leading coefficient is not invertible")
        one_diff = lead.sub(ZeonElement.one(self.n))
        if not one_diff.terms:
            return self
        return self.scale(lead.inverse(tol), tol)

    def _require_same_n(self, other: "ZeonPolynomial") -> None:
        if self.n != other.n:
            raise DimensionMismatch("polynomials live in different algebras")

    def allclose(self, other: "ZeonPolynomial", tol: Tolerances = DEFAULT) -> bool:
        if not isinstance(other, ZeonPolynomial) or self.n != other.n:
            return False
        size = max(len(self.coeffs), len(other.coeffs))
        zero = ZeonElement.zero(self.n)
        for i in range(size):
            a = self.coeffs[i] if i < len(self.coeffs) else zero
            b = other.coeffs[i] if i < len(other.coeffs) else zero
            if not a.allclose(b, tol):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, ZeonPolynomial):
            return NotImplemented
        return self.allclose(other)

    def __add__(self, other):
        return self.add(other) if isinstance(other, ZeonPolynomial) else NotImplemented

    def __sub__(self, other):
        return self.sub(other) if isinstance(other, ZeonPolynomial) else NotImplemented

    def __mul__(self, other):
        if isinstance(other, ZeonPolynomial):
            return self.mul(other)
        if isinstance(other, (int, float, complex, ZeonElement)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, tol: Tolerances = DEFAULT) -> "ZeonPolynomial":
        if not isinstance(data, Mapping):
            raise ParseError("polynomial must be a JSON object")
        try:
            n = int(data["n"])
            raw = data["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"polynomial needs 'n' and 'coeffs': {exc}") from exc
        if not isinstance(raw, (list, tuple)) or not raw:
            raise ParseError("'coeffs' must be a non-empty list")
        coeffs = []
        for cell in raw:
            elem = ZeonElement.from_json(cell, tol)
            if elem.n != n:
                raise ParseError(f"coefficient algebra n={elem.n} disagrees with n={n}")
            coeffs.append(elem)
        return cls(coeffs, tol)

    def pretty(self, sig: int = 12) -> str:
        if all(not c.terms for c in self.coeffs):
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c.terms:
                continue
            var = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            s = c.pretty(sig)
            neg = False
            if " " in s:
                body = f"({s})"
            else:
                if s.startswith("-"):
                    neg = True
                    s = s[1:]
                body = s
            if var:
                body = var if body == "1" else f"{body}*{var}"
            parts.append((neg, body))
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"<ZeonPolynomial degree={self.degree} n={self.n}: {self.pretty(6)}>"


class ComplexPolynomial:
    """Plain complex polynomial, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[complex], strip: float = 0.0):
        coeffs = [complex(c) for c in coeffs]
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        last = len(coeffs) - 1
        while last > 0 and abs(coeffs[last]) <= strip:
            last -= 1
        self.coeffs = tuple(coeffs[:last + 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "ComplexPolynomial":
        if self.degree == 0:
            return ComplexPolynomial([0j])
        return ComplexPolynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "ComplexPolynomial":
        lead = self.coeffs[-1]
        return ComplexPolynomial([c / lead for c in self.coeffs])

    def deflate(self, root: complex) -> "ComplexPolynomial":
        """Synthetic division by (z - root), remainder dropped."""
        d = self.degree
        if d < 1:
            raise ValueError("cannot deflate a constant")
        out = [0j] * d
        out[d - 1] = self.coeffs[d]
        for i in range(d - 2, -1, -1):
            out[i] = self.coeffs[i + 1] + root * out[i + 1]
        return ComplexPolynomial(out)

    def __eq__(self, other):
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"<ComplexPolynomial {[_fmt_c(c) for c in self.coeffs]}>"


def induce_complex(phi: ZeonPolynomial, tol: Tolerances = DEFAULT) -> ComplexPolynomial:
    """Complex shadow: scalar parts of all coefficients, constant included."""
    return ComplexPolynomial([c.scalar_part() for c in phi.coeffs], strip=tol.prune)


@dataclass(frozen=True)
class PolyRoot:
    value: complex
    multiplicity: int
    simple: bool

    def to_json(self) -> dict:
        return {"re": self.value.real, "im": self.value.imag,
                "multiplicity": self.multiplicity, "simple": self.simple}


@dataclass(frozen=True)
class RootReport:
    """Zeros of a complex polynomial with multiplicities.

    residual is the largest |f(root)| over the reported roots of the
    monic-normalized polynomial.
    """

    roots: tuple[PolyRoot, ...]
    residual: float
    iterations: int

    def to_json(self) -> dict:
        return {"roots": [r.to_json() for r in self.roots],
                "residual": self.residual, "iterations": self.iterations}


def _abs_horner(abs_coeffs: Sequence[float], r: float) -> float:
    acc = 0.0
    for c in reversed(abs_coeffs):
        acc = acc * r + c
    return acc


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _cluster_report(points: list[complex], monic: ComplexPolynomial,
                    iterations: int) -> RootReport:
    """Merge converged iterates into roots with multiplicities.

    First pass merges at the standard relative radius. A multiple zero
    cannot be located more tightly than the float noise allows (its
    iterates scatter like eps^(1/multiplicity)), so a second pass merges
    clusters whose derivative already fails the simplicity test, using a
    wider radius.
    """
    d = len(points)
    scale = max(abs(c) for c in monic.coeffs)
    dmonic = monic.derivative()
    uf = _UnionFind(d)
    for a in range(d):
        for b in range(a + 1, d):
            gap = abs(points[a] - points[b])
            if gap <= _CLUSTER_REL * (1.0 + (abs(points[a]) + abs(points[b])) / 2):
                uf.union(a, b)

    def components() -> dict[int, list[int]]:
        comps: dict[int, list[int]] = {}
        for idx in range(d):
            comps.setdefault(uf.find(idx), []).append(idx)
        return comps

    comps = components()
    means = {root: sum(points[i] for i in members) / len(members)
             for root, members in comps.items()}
    simple_floor = _SIMPLE_REL * (1.0 + scale)
    degenerate = [root for root, mean in means.items()
                  if abs(dmonic(mean)) <= simple_floor]
    for a_i in range(len(degenerate)):
        for b_i in range(a_i + 1, len(degenerate)):
            za, zb = means[degenerate[a_i]], means[degenerate[b_i]]
            if abs(za - zb) <= _WIDE_CLUSTER_REL * (1.0 + (abs(za) + abs(zb)) / 2):
                uf.union(degenerate[a_i], degenerate[b_i])
    comps = components()

    roots = []
    residual = 0.0
    for members in comps.values():
        value = sum(points[i] for i in members) / len(members)
        mult = len(members)
        simple = mult == 1 and abs(dmonic(value)) > simple_floor
        residual = max(residual, abs(monic(value)))
        roots.append(PolyRoot(value, mult, simple))
    roots.sort(key=lambda r: (-r.value.real, -r.value.imag))
    return RootReport(tuple(roots), residual, iterations)


def complex_roots(poly, tol: Tolerances = DEFAULT, max_iter: int = _MAX_ITER) -> RootReport:
    """All zeros of a complex polynomial by simultaneous Aberth iteration.

    Accepts a ComplexPolynomial or a ZeonPolynomial (which is shadowed
    first). Points start on a perturbed circle; a point freezes once its
    residual drops below the Horner evaluation-error bound, which is the
    only honest stopping point for multiple zeros.
    """
    f = poly if isinstance(poly, ComplexPolynomial) else induce_complex(poly, tol)
    d = f.degree
    if d < 1 or abs(f.coeffs[-1]) == 0.0:
        raise ZeonError("root finding needs degree at least 1 with nonzero lead")
    monic = f.monic()
    a = monic.coeffs
    if d == 1:
        root = -a[0]
        return RootReport((PolyRoot(root, 1, True),), abs(monic(root)), 0)
    dmonic = monic.derivative()
    abs_coeffs = [abs(c) for c in a]
    bound_factor = 4.0 * (2 * d + 1) * _EPS
    centroid = -a[d - 1] / d
    radius = 1.0 + max(abs_coeffs[:-1])
    points = [centroid + radius * cmath.exp(1j * (2 * math.pi * k / d + 0.4))
              for k in range(d)]
    frozen = [False] * d
    for it in range(1, max_iter + 1):
        done = True
        for j in range(d):
            if frozen[j]:
                continue
            z = points[j]
            p = monic(z)
            if abs(p) <= bound_factor * _abs_horner(abs_coeffs, abs(z)):
                frozen[j] = True
                continue
            dp = dmonic(z)
            if dp == 0:
                # sitting exactly on a critical point; nudge off it
                points[j] = z + (0.05 + 0.1j) * (1.0 + abs(z))
                done = False
                continue
            newton = p / dp
            s = 0j
            for k in range(d):
                if k == j:
                    continue
                dz = z - points[k]
                if dz == 0:
                    dz = complex(_EPS, _EPS)
                s += 1 / dz
            denom = 1 - newton * s
            step = newton if denom == 0 else newton / denom
            points[j] = z - step
            if abs(step) > _STEP_TOL * (1.0 + abs(points[j])):
                done = False
        if done:
            return _cluster_report(points, monic, it)
    raise NonConvergenceError(
        f"root iteration did not converge within {max_iter} passes",
        report=_cluster_report(points, monic, max_iter))


def poly_divide(phi: ZeonPolynomial, psi: ZeonPolynomial,
                tol: Tolerances = DEFAULT) -> tuple[ZeonPolynomial, ZeonPolynomial]:
    """Long division phi = q * psi + r with deg r < deg psi.

    The divisor's leading coefficient must be invertible; quotient and
    remainder are then unique.
    """
    if phi.n != psi.n:
        raise DimensionMismatch("polynomials live in different algebras")
    if psi.is_zero(tol):
        raise PolyDivisionError("division by the zero polynomial")
    lead = psi.leading
    if not lead.is_invertible(tol):
        raise PolyDivisionError("divisor leading coefficient is not invertible")
    n = phi.n
    dpsi = psi.degree
    if phi.degree < dpsi:
        return ZeonPolynomial([ZeonElement.zero(n)]), phi
    lead_inv = lead.inverse(tol)
    rem = list(phi.coeffs)
    dq = phi.degree - dpsi
    quot = [ZeonElement.zero(n)] * (dq + 1)
    for k in range(dq, -1, -1):
        top = rem[k + dpsi]
        if top.terms:
            c = top.mul(lead_inv, tol)
            quot[k] = c
            for i in range(dpsi):
                rem[k + i] = rem[k + i].sub(c.mul(psi.coeffs[i], tol), tol)
        rem[k + dpsi] = ZeonElement.zero(n)  # cancelled by construction
    remainder = rem[:dpsi] if dpsi > 0 else [ZeonElement.zero(n)]
    return ZeonPolynomial(quot, tol), ZeonPolynomial(remainder, tol)


def lift_simple_zero(phi: ZeonPolynomial, lam0: complex,
                     tol: Tolerances = DEFAULT) -> ZeonElement:
    """Lift a simple zero of the complex shadow to a zeon zero.

    With g the shadow deflated by its zero lam0, the minimal-grade
    component of phi(lam) determines the next correction:

        lam <- lam - <phi(lam)>_k / g(lam0)

    and each pass strictly raises that minimal grade, so at most n
    passes land on the exact zero. The correction divisor g(lam0) is
    nonzero exactly because the zero is simple.
    """
    lead = phi.leading
    if not lead.is_invertible(tol):
        raise PolyDivisionError("leading coefficient must be invertible to lift zeros")
    monic = phi.monic(tol)
    f = induce_complex(monic, tol)
    if f.degree < 1:
        raise ZeonError("cannot lift zeros of a constant polynomial")
    lam0 = complex(lam0)
    scale = max(abs(c) for c in f.coeffs)
    if abs(f(lam0)) > 1e-6 * (1.0 + scale):
        raise ZeonError(f"{_fmt_c(lam0)} is not a zero of the complex shadow")
    g0 = f.deflate(lam0)(lam0)
    if abs(g0) <= _SIMPLE_REL * (1.0 + scale):
        raise SpectralSimplicityError(
            f"shadow zero {_fmt_c(lam0)} is not simple; it does not lift uniquely")
    n = phi.n
    lam = ZeonElement.scalar(n, lam0, tol)
    prev_grade = 0
    for _ in range(n + 1):
        dual = monic.evaluate(lam, tol).dual_part()
        grade = dual.min_grade()
        if not 0 < grade <= n:
            break
        if grade <= prev_grade:
            break  # float residue at an already-cleared grade
        lam = lam.sub(dual.grade_part(grade).scale(1 / g0, tol), tol)
        prev_grade = grade
    return lam


def split(phi: ZeonPolynomial, tol: Tolerances = DEFAULT) -> list[ZeonElement]:
    """All zeon zeros of phi, when the complex shadow has only simple zeros.

    Raises DoesNotSplitError naming the offending zeros otherwise.
    """
    report = complex_roots(phi, tol)
    bad = [(r.value, r.multiplicity) for r in report.roots if not r.simple]
    if bad:
        desc = ", ".join(f"{_fmt_c(v)} (multiplicity {m})" for v, m in bad)
        raise DoesNotSplitError(
            f"shadow polynomial has non-simple zeros: {desc}", bad)
    return [lift_simple_zero(phi, r.value, tol) for r in report.roots]


def multiple_zero_family(phi: ZeonPolynomial, zero: ZeonElement, shift: complex,
                         tol: Tolerances = DEFAULT) -> ZeonElement:
    """Translate a zero along the top blade: zero + shift * z_{1..n}.

    Valid when the scalar part of ``zero`` is a multiple zero of the
    shadow: the top blade kills every term of the expansion except
    shift * f'(scalar part) * z_{1..n}, and that derivative vanishes.
    """
    if phi.n != zero.n:
        raise DimensionMismatch("zero lives in a different algebra")
    scale = max(c.norm_inf() for c in phi.coeffs)
    value = phi.evaluate(zero, tol)
    if value.norm_inf() > tol.compare * (1.0 + scale):
        raise ZeonError("the given element is not a zero of the polynomial")
    f = induce_complex(phi, tol)
    c0 = zero.scalar_part()
    fscale = max(abs(c) for c in f.coeffs)
    if abs(f(c0)) > 1e-6 * (1.0 + fscale):
        raise ZeonError("scalar part is not a zero of the complex shadow")
    if abs(f.derivative()(c0)) > _SIMPLE_REL * (1.0 + fscale):
        raise ZeonError(
            "scalar part is a simple shadow zero; the top-blade family needs a multiple zero")
    return zero.add(ZeonElement.top_blade(phi.n, shift), tol)
