"""Sparse arithmetic in the complex zeon algebra.

The algebra on n generators z_1, ..., z_n is commutative and every
generator squares to zero, so the basis blades z_I are indexed by
subsets I of {1, ..., n} and multiply as z_I * z_J = z_{I union J} when
the index sets are disjoint, and as 0 otherwise. Elements are stored
sparsely as a map from subset bitmask to complex coefficient; bit i-1
of the mask is set exactly when generator i appears in the blade.
"""

from __future__ import annotations

import cmath
from collections.abc import Iterable, Mapping

from .errors import DimensionMismatch, ParseError, SingularityError, ZeonError
from .tolerances import DEFAULT, Tolerances

# Masks are subset indicators, so one machine word caps the generator count.
MAX_GENERATORS = 63


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    """Bitmask for a collection of distinct 1-based generator indices."""
    mask = 0
    for i in indices:
        i = int(i)
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} outside 1..{n}")
        bit = 1 << (i - 1)
        if mask & bit:
            raise ValueError(f"repeated generator index {i}")
        mask |= bit
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    """1-based generator indices present in a bitmask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key putting blades in grade order, then lexicographic."""
    return (mask.bit_count(), indices_from_mask(mask))


def principal_root(value: complex, k: int) -> complex:
    """Principal complex kth root, exp(log(value) / k)."""
    return cmath.exp(cmath.log(value) / k)


def _format_real(x: float, sig: int) -> str:
    s = f"{x:.{sig}g}"
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


class ZeonElement:
    """One element of the n-generator complex zeon algebra.

    Instances are immutable. Arithmetic returns new elements in
    canonical sparse form: no stored coefficient has magnitude below
    the prune tolerance used to build the result.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, complex] | None = None,
                 tol: Tolerances = DEFAULT):
        n = int(n)
        if not 0 <= n <= MAX_GENERATORS:
            raise ValueError(f"generator count must be in 0..{MAX_GENERATORS}, got {n}")
        pruned: dict[int, complex] = {}
        if terms:
            limit = 1 << n
            prune = tol.prune
            for mask, coeff in terms.items():
                mask = int(mask)
                if not 0 <= mask < limit:
                    raise ValueError(f"blade mask {mask} outside algebra with n={n}")
                c = complex(coeff)
                if abs(c) >= prune:
                    pruned[mask] = c
        self.n = n
        self.terms = pruned

    @classmethod
    def _wrap(cls, n: int, terms: dict[int, complex]) -> "ZeonElement":
        # Internal: adopt an already-canonical terms dict without re-pruning.
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "ZeonElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "ZeonElement":
        return cls._wrap(n, {0: 1 + 0j})

    @classmethod
    def scalar(cls, n: int, value: complex, tol: Tolerances = DEFAULT) -> "ZeonElement":
        return cls(n, {0: value}, tol)

    @classmethod
    def generator(cls, n: int, i: int) -> "ZeonElement":
        """The single generator z_i."""
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} outside 1..{n}")
        return cls._wrap(int(n), {1 << (i - 1): 1 + 0j})

    @classmethod
    def blade(cls, n: int, indices: Iterable[int], coeff: complex = 1.0,
              tol: Tolerances = DEFAULT) -> "ZeonElement":
        """coeff * z_I for the given index set."""
        return cls(n, {mask_from_indices(indices, n): coeff}, tol)

    @classmethod
    def top_blade(cls, n: int, coeff: complex = 1.0, tol: Tolerances = DEFAULT) -> "ZeonElement":
        """coeff * z_{1..n}, the highest-grade blade."""
        if n == 0:
            return cls.scalar(0, coeff, tol)
        return cls(n, {(1 << n) - 1: coeff}, tol)

    @classmethod
    def from_indices(cls, n: int, mapping: Mapping[tuple, complex],
                     tol: Tolerances = DEFAULT) -> "ZeonElement":
        """Build from {index tuple: coefficient}, e.g. {(): 5, (1, 2, 3): -4}."""
        return cls(n, {mask_from_indices(ix, n): c for ix, c in mapping.items()}, tol)

    # ------------------------------------------------------------------
    # ring operations

    def _require_same_n(self, other: "ZeonElement") -> None:
        if self.n != other.n:
            raise DimensionMismatch(
                f"operands live in different algebras: n={self.n} vs n={other.n}")

    def add(self, other: "ZeonElement", tol: Tolerances = DEFAULT) -> "ZeonElement":
        self._require_same_n(other)
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, 0j) + c
        return ZeonElement(self.n, out, tol)

    def sub(self, other: "ZeonElement", tol: Tolerances = DEFAULT) -> "ZeonElement":
        self._require_same_n(other)
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, 0j) - c
        return ZeonElement(self.n, out, tol)

    def scale(self, value: complex, tol: Tolerances = DEFAULT) -> "ZeonElement":
        c = complex(value)
        return ZeonElement(self.n, {m: v * c for m, v in self.terms.items()}, tol)

    def mul(self, other: "ZeonElement", tol: Tolerances = DEFAULT) -> "ZeonElement":
        """Blade-convolution product; disjoint masks merge, overlapping die."""
        self._require_same_n(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, complex] = {}
        get = out.get
        for i, x in a.items():
            for j, y in b.items():
                if i & j:
                    continue
                k = i | j
                out[k] = get(k, 0j) + x * y
        return ZeonElement(self.n, out, tol)

    def pow(self, k: int, tol: Tolerances = DEFAULT) -> "ZeonElement":
        """Non-negative integer power by repeated squaring."""
        k = int(k)
        if k < 0:
            raise ValueError("use inverse() for negative powers")
        result = ZeonElement.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, tol)
            k >>= 1
            if k:
                base = base.mul(base, tol)
        return result

    # ------------------------------------------------------------------
    # structural maps

    def scalar_part(self) -> complex:
        """Coefficient of the empty blade."""
        return self.terms.get(0, 0j)

    def dual_part(self) -> "ZeonElement":
        """The nilpotent remainder once the scalar part is removed."""
        return ZeonElement._wrap(self.n, {m: c for m, c in self.terms.items() if m})

    def grade_part(self, k: int) -> "ZeonElement":
        """Terms whose blade has exactly k generators."""
        if k < 0:
            raise ValueError("grade must be non-negative")
        return ZeonElement._wrap(
            self.n, {m: c for m, c in self.terms.items() if m.bit_count() == k})

    def grades(self) -> tuple[int, ...]:
        """Sorted grades carrying at least one stored term."""
        return tuple(sorted({m.bit_count() for m in self.terms}))

    def conjugate(self) -> "ZeonElement":
        """Complex-conjugate every coefficient."""
        return ZeonElement._wrap(self.n, {m: c.conjugate() for m, c in self.terms.items()})

    def min_grade(self) -> int:
        """Minimal grade of the dual part; 0 for scalars, n + 1 for zero.

        The sentinel n + 1 keeps "grade exceeded" loops uniform, since no
        blade of the zero element can ever appear at a valid grade.
        """
        if not self.terms:
            return self.n + 1
        nonzero = [m for m in self.terms if m]
        if not nonzero:
            return 0
        return min(m.bit_count() for m in nonzero)

    # ------------------------------------------------------------------
    # predicates and magnitudes

    def norm_inf(self) -> float:
        """Largest coefficient magnitude (0.0 for the zero element)."""
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_zero(self, tol: Tolerances = DEFAULT) -> bool:
        return self.norm_inf() <= tol.compare

    def is_scalar(self, tol: Tolerances = DEFAULT) -> bool:
        return self.dual_part().norm_inf() <= tol.compare

    def is_real(self, tol: Tolerances = DEFAULT) -> bool:
        return all(abs(c.imag) <= tol.compare for c in self.terms.values())

    def is_invertible(self, tol: Tolerances = DEFAULT) -> bool:
        return abs(self.scalar_part()) > tol.scalar_zero

    def max_diff(self, other: "ZeonElement") -> float:
        """Largest coefficient difference against another element."""
        keys = self.terms.keys() | other.terms.keys()
        return max((abs(self.terms.get(m, 0j) - other.terms.get(m, 0j)) for m in keys),
                   default=0.0)

    def allclose(self, other: "ZeonElement", tol: Tolerances = DEFAULT) -> bool:
        if not isinstance(other, ZeonElement) or self.n != other.n:
            return False
        return self.max_diff(other) <= tol.compare

    # ------------------------------------------------------------------
    # inversion, roots, nilpotency

    def inverse(self, tol: Tolerances = DEFAULT) -> "ZeonElement":
        """Multiplicative inverse via the finite geometric series.

        With u = c + d (scalar plus nilpotent dual), the inverse is
        (1/c) * sum_j (-1)^j c^{-j} d^j; the series stops on its own
        because d^{n+1} = 0.
        """
        c = self.scalar_part()
        if abs(c) <= tol.scalar_zero:
            raise SingularityError(
                f"scalar part {c:.3g} is within scalar-zero tolerance; not invertible")
        d = self.dual_part()
        inv_c = 1 / c
        acc = ZeonElement.one(self.n)
        power = d
        j = 1
        while power.terms and j <= self.n:
            acc = acc.add(power.scale((-inv_c) ** j), tol)
            power = power.mul(d, tol)
            j += 1
        return acc.scale(inv_c, tol)

    def kth_root(self, k: int, tol: Tolerances = DEFAULT) -> "ZeonElement":
        """Principal kth root of an invertible element.

        Writing w = phi + z_h psi, where z_h is the highest generator
        appearing in w and neither phi nor psi involves z_h, the root
        recursion is

            w^{1/k} = phi^{1/k} + z_h * (1/k) * phi^{-1} * phi^{1/k} * psi

        with the principal complex root at the scalar base case.
        """
        k = int(k)
        if k < 1:
            raise ZeonError("root order must be a positive integer")
        if abs(self.scalar_part()) <= tol.scalar_zero:
            raise SingularityError("kth root requires an invertible element")
        if k == 1:
            return self
        return self._kth_root(k, tol)

    def _kth_root(self, k: int, tol: Tolerances) -> "ZeonElement":
        present = 0
        for m in self.terms:
            present |= m
        if present == 0:
            return ZeonElement.scalar(self.n, principal_root(self.scalar_part(), k), tol)
        bit = 1 << (present.bit_length() - 1)
        phi = ZeonElement._wrap(self.n, {m: c for m, c in self.terms.items() if not m & bit})
        psi = ZeonElement._wrap(self.n, {m ^ bit: c for m, c in self.terms.items() if m & bit})
        root = phi._kth_root(k, tol)
        z_h = ZeonElement._wrap(self.n, {bit: 1 + 0j})
        correction = phi.inverse(tol).mul(root, tol).mul(psi, tol).scale(1 / k, tol)
        return root.add(z_h.mul(correction, tol), tol)

    def nilpotency_index(self, tol: Tolerances = DEFAULT) -> int:
        """Least kappa with u^kappa = 0; defined only for nilpotent u."""
        if abs(self.scalar_part()) > tol.scalar_zero:
            raise ZeonError("nilpotency index is defined only for nilpotent elements")
        kappa = 1
        power = self
        while not power.is_zero(tol):
            power = power.mul(self, tol)
            kappa += 1
            if kappa > self.n + 1:
                raise ZeonError("nilpotency index exceeded n + 1; element is not nilpotent")
        return kappa

    # ------------------------------------------------------------------
    # operators

    def _coerce(self, value) -> "ZeonElement | None":
        if isinstance(value, ZeonElement):
            return value
        if isinstance(value, (int, float, complex)):
            return ZeonElement.scalar(self.n, value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else self.sub(other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else other.sub(self)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        if isinstance(other, ZeonElement):
            return self.mul(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.scale(1 / other)
        if isinstance(other, ZeonElement):
            return self.mul(other.inverse())
        return NotImplemented

    def __neg__(self):
        return ZeonElement._wrap(self.n, {m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __pow__(self, k):
        return self.pow(k)

    def __eq__(self, other):
        if isinstance(other, (int, float, complex)):
            other = ZeonElement.scalar(self.n, other)
        if not isinstance(other, ZeonElement):
            return NotImplemented
        return self.allclose(other)

    def __bool__(self):
        return bool(self.terms)

    # ------------------------------------------------------------------
    # formatting and serialization

    def pretty(self, sig: int = 12) -> str:
        """Human-readable form such as ``5 - 4*z[1,2,3]``."""
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms, key=blade_key):
            c = self.terms[mask]
            blade = ""
            if mask:
                blade = "z[" + ",".join(str(i) for i in indices_from_mask(mask)) + "]"
            re, im = c.real, c.imag
            if abs(im) <= 5e-13 * max(1.0, abs(re)):
                neg = re < 0
                mag = _format_real(abs(re), sig)
                if blade:
                    body = blade if mag == "1" else f"{mag}*{blade}"
                else:
                    body = mag
            else:
                neg = False
                if abs(re) <= 5e-13 * abs(im):
                    num = _format_real(im, sig) + "j"
                else:
                    num = f"{_format_real(re, sig)}{im:+.{sig}g}j"
                body = f"({num})*{blade}" if blade else f"({num})"
            parts.append((neg, body))
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json(self) -> dict:
        """JSON-ready dict: {"n": ..., "terms": [{"I": [...], "re": ..., "im": ...}]}."""
        terms = []
        for mask in sorted(self.terms, key=blade_key):
            c = self.terms[mask]
            terms.append({"I": list(indices_from_mask(mask)), "re": c.real, "im": c.imag})
        return {"n": self.n, "terms": terms}

    @classmethod
    def from_json(cls, data, tol: Tolerances = DEFAULT) -> "ZeonElement":
        if not isinstance(data, Mapping):
            raise ParseError("element must be a JSON object")
        try:
            n = int(data["n"])
            raw_terms = data["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"element needs integer 'n' and a 'terms' list: {exc}") from exc
        if not 0 <= n <= MAX_GENERATORS:
            raise ParseError(f"'n' must be in 0..{MAX_GENERATORS}, got {n}")
        if not isinstance(raw_terms, (list, tuple)):
            raise ParseError("'terms' must be a list")
        terms: dict[int, complex] = {}
        for entry in raw_terms:
            if not isinstance(entry, Mapping):
                raise ParseError("each term must be an object with 'I', 're', 'im'")
            try:
                indices = list(entry["I"])
                re = float(entry["re"])
                im = float(entry["im"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"bad term {entry!r}: {exc}") from exc
            if any(not isinstance(i, int) or isinstance(i, bool) for i in indices):
                raise ParseError(f"blade indices must be integers, got {indices!r}")
            if any(a >= b for a, b in zip(indices, indices[1:])):
                raise ParseError(f"blade indices must be strictly increasing, got {indices!r}")
            try:
                mask = mask_from_indices(indices, n)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
            if mask in terms:
                raise ParseError(f"duplicate blade {indices!r}")
            terms[mask] = complex(re, im)
        return cls(n, terms, tol)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"<ZeonElement n={self.n}: {self.pretty(6)}>"
