"""Vectors and matrices over the zeon algebra.

Covers the inner-product geometry (seminorm, normalization,
Gram-Schmidt) and the matrix toolkit: determinants, inverses through
the nilpotent series, and Gaussian elimination with invertible-pivot
selection. Rank deficiency over the algebra is data, not an error:
elimination skips columns without an invertible pivot and reports how
many pivots it found.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .algebra import ZeonElement
from .errors import DimensionMismatch, ParseError, SingularityError
from .tolerances import DEFAULT, Tolerances

_EPS = 2.0 ** -52


class ZeonVector:
    """Column vector with zeon entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[ZeonElement]):
        entries = tuple(entries)
        if not entries:
            raise ValueError("vector needs at least one entry")
        n = entries[0].n
        for e in entries:
            if not isinstance(e, ZeonElement):
                raise TypeError("vector entries must be ZeonElement")
            if e.n != n:
                raise DimensionMismatch("vector entries live in different algebras")
        self.entries = entries

    @classmethod
    def zero(cls, m: int, n: int) -> "ZeonVector":
        return cls([ZeonElement.zero(n) for _ in range(m)])

    @classmethod
    def unit(cls, m: int, n: int, j: int) -> "ZeonVector":
        entries = [ZeonElement.zero(n) for _ in range(m)]
        entries[j] = ZeonElement.one(n)
        return cls(entries)

    @property
    def n(self) -> int:
        return self.entries[0].n

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> ZeonElement:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def add(self, other: "ZeonVector", tol: Tolerances = DEFAULT) -> "ZeonVector":
        self._require_compatible(other)
        return ZeonVector([a.add(b, tol) for a, b in zip(self.entries, other.entries)])

    def sub(self, other: "ZeonVector", tol: Tolerances = DEFAULT) -> "ZeonVector":
        self._require_compatible(other)
        return ZeonVector([a.sub(b, tol) for a, b in zip(self.entries, other.entries)])

    def scale(self, value, tol: Tolerances = DEFAULT) -> "ZeonVector":
        if isinstance(value, ZeonElement):
            return ZeonVector([e.mul(value, tol) for e in self.entries])
        return ZeonVector([e.scale(value, tol) for e in self.entries])

    def conjugate(self) -> "ZeonVector":
        return ZeonVector([e.conjugate() for e in self.entries])

    def norm_inf(self) -> float:
        return max(e.norm_inf() for e in self.entries)

    def allclose(self, other: "ZeonVector", tol: Tolerances = DEFAULT) -> bool:
        if not isinstance(other, ZeonVector) or len(self) != len(other):
            return False
        return all(a.allclose(b, tol) for a, b in zip(self.entries, other.entries))

    def _require_compatible(self, other: "ZeonVector") -> None:
        if len(self) != len(other) or self.n != other.n:
            raise DimensionMismatch(
                f"vector shapes differ: {len(self)} (n={self.n}) vs {len(other)} (n={other.n})")

    def __add__(self, other):
        return self.add(other) if isinstance(other, ZeonVector) else NotImplemented

    def __sub__(self, other):
        return self.sub(other) if isinstance(other, ZeonVector) else NotImplemented

    def __neg__(self):
        return ZeonVector([-e for e in self.entries])

    def __eq__(self, other):
        if not isinstance(other, ZeonVector):
            return NotImplemented
        return self.allclose(other)

    def to_json(self) -> dict:
        """Vectors serialize as rows x 1 matrices."""
        return {"rows": len(self), "cols": 1, "n": self.n,
                "entries": [[e.to_json()] for e in self.entries]}

    @classmethod
    def from_json(cls, data, tol: Tolerances = DEFAULT) -> "ZeonVector":
        mat = ZeonMatrix.from_json(data, tol)
        if mat.cols != 1:
            raise ParseError(f"vector must have cols=1, got {mat.cols}")
        return cls([row[0] for row in mat.entries])

    def pretty(self, sig: int = 12) -> str:
        return "[" + ", ".join(e.pretty(sig) for e in self.entries) + "]"

    def __repr__(self) -> str:
        return f"<ZeonVector {self.pretty(6)}>"


def inner_product(x: ZeonVector, y: ZeonVector, tol: Tolerances = DEFAULT) -> ZeonElement:
    """Zeon inner product <x, y> = y-adjoint times x = sum_k conj(y_k) x_k.

    Linear over the whole algebra in the first slot, conjugate-symmetric,
    and scalar-positive: the scalar part of <x, x> is sum_k |c(x_k)|^2.
    """
    if len(x) != len(y) or x.n != y.n:
        raise DimensionMismatch("inner product needs vectors of equal shape")
    acc = ZeonElement.zero(x.n)
    for xe, ye in zip(x.entries, y.entries):
        acc = acc.add(ye.conjugate().mul(xe, tol), tol)
    return acc


def spectral_seminorm(x: ZeonVector, tol: Tolerances = DEFAULT) -> float:
    """Square root of the scalar part of <x, x>; zero iff every entry is nilpotent."""
    s = inner_product(x, x, tol).scalar_part()
    return math.sqrt(max(s.real, 0.0))


def normalize(x: ZeonVector, tol: Tolerances = DEFAULT) -> ZeonVector:
    """Scale x by the principal square root of <x, x> inverse."""
    s = inner_product(x, x, tol)
    if abs(s.scalar_part()) <= tol.scalar_zero:
        raise SingularityError(
            "cannot normalize a null vector: <x, x> has zero scalar part")
    factor = s.inverse(tol).kth_root(2, tol)
    return x.scale(factor, tol)


def orthonormalize(vectors: Sequence[ZeonVector], tol: Tolerances = DEFAULT) -> list[ZeonVector]:
    """Gram-Schmidt with the zeon inner product.

    Subtracting <w, u> u is exact for already-normalized u because the
    inner product is linear over the algebra in its first slot.
    """
    basis: list[ZeonVector] = []
    for v in vectors:
        w = v
        for u in basis:
            w = w.sub(u.scale(inner_product(w, u, tol), tol), tol)
        basis.append(normalize(w, tol))
    return basis


def outer(v: ZeonVector, w: ZeonVector, tol: Tolerances = DEFAULT) -> "ZeonMatrix":
    """Rank-one matrix v w-adjoint, entries v_i conj(w_j)."""
    if v.n != w.n:
        raise DimensionMismatch("outer product needs vectors over the same algebra")
    return ZeonMatrix([[vi.mul(wj.conjugate(), tol) for wj in w.entries]
                       for vi in v.entries])


class ZeonMatrix:
    """Dense matrix with zeon entries; square for most operations."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[ZeonElement]]):
        rows = tuple(tuple(row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        cols = len(rows[0])
        n = rows[0][0].n
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch("ragged rows in matrix")
            for e in row:
                if not isinstance(e, ZeonElement):
                    raise TypeError("matrix entries must be ZeonElement")
                if e.n != n:
                    raise DimensionMismatch("matrix entries live in different algebras")
        self.entries = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def identity(cls, m: int, n: int) -> "ZeonMatrix":
        one = ZeonElement.one(n)
        zero = ZeonElement.zero(n)
        return cls([[one if i == j else zero for j in range(m)] for i in range(m)])

    @classmethod
    def zero(cls, rows: int, cols: int, n: int) -> "ZeonMatrix":
        z = ZeonElement.zero(n)
        return cls([[z for _ in range(cols)] for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence[ZeonElement]) -> "ZeonMatrix":
        n = values[0].n
        zero = ZeonElement.zero(n)
        return cls([[values[i] if i == j else zero for j in range(len(values))]
                    for i in range(len(values))])

    @classmethod
    def from_scalar_matrix(cls, array, n: int, tol: Tolerances = DEFAULT) -> "ZeonMatrix":
        """Embed a complex matrix as scalar zeon entries."""
        arr = np.asarray(array, dtype=complex)
        return cls([[ZeonElement.scalar(n, arr[i, j], tol) for j in range(arr.shape[1])]
                    for i in range(arr.shape[0])])

    @property
    def n(self) -> int:
        return self.entries[0][0].n

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self, what: str) -> None:
        if not self.is_square:
            raise DimensionMismatch(f"{what} needs a square matrix, got {self.rows}x{self.cols}")

    def __getitem__(self, key) -> ZeonElement:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> ZeonVector:
        return ZeonVector(self.entries[i])

    def column(self, j: int) -> ZeonVector:
        return ZeonVector([self.entries[i][j] for i in range(self.rows)])

    def add(self, other: "ZeonMatrix", tol: Tolerances = DEFAULT) -> "ZeonMatrix":
        self._require_same_shape(other)
        return ZeonMatrix([[a.add(b, tol) for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def sub(self, other: "ZeonMatrix", tol: Tolerances = DEFAULT) -> "ZeonMatrix":
        self._require_same_shape(other)
        return ZeonMatrix([[a.sub(b, tol) for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def scale(self, value, tol: Tolerances = DEFAULT) -> "ZeonMatrix":
        if isinstance(value, ZeonElement):
            return ZeonMatrix([[e.mul(value, tol) for e in row] for row in self.entries])
        return ZeonMatrix([[e.scale(value, tol) for e in row] for row in self.entries])

    def mul(self, other, tol: Tolerances = DEFAULT):
        """Matrix-matrix or matrix-vector product."""
        if isinstance(other, ZeonVector):
            if self.cols != len(other) or self.n != other.n:
                raise DimensionMismatch("matrix-vector shape mismatch")
            out = []
            for i in range(self.rows):
                acc = ZeonElement.zero(self.n)
                for k in range(self.cols):
                    acc = acc.add(self.entries[i][k].mul(other.entries[k], tol), tol)
                out.append(acc)
            return ZeonVector(out)
        if isinstance(other, ZeonMatrix):
            if self.cols != other.rows or self.n != other.n:
                raise DimensionMismatch("matrix-matrix shape mismatch")
            out_rows = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    acc = ZeonElement.zero(self.n)
                    for k in range(self.cols):
                        acc = acc.add(self.entries[i][k].mul(other.entries[k][j], tol), tol)
                    row.append(acc)
                out_rows.append(row)
            return ZeonMatrix(out_rows)
        raise TypeError("can only multiply by ZeonMatrix or ZeonVector")

    def transpose(self) -> "ZeonMatrix":
        return ZeonMatrix([[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)])

    def adjoint(self) -> "ZeonMatrix":
        """Conjugate transpose."""
        return ZeonMatrix([[self.entries[i][j].conjugate() for i in range(self.rows)]
                           for j in range(self.cols)])

    def trace(self, tol: Tolerances = DEFAULT) -> ZeonElement:
        self._require_square("trace")
        acc = ZeonElement.zero(self.n)
        for i in range(self.rows):
            acc = acc.add(self.entries[i][i], tol)
        return acc

    def scalar_matrix(self) -> np.ndarray:
        """Complex matrix of scalar parts."""
        return np.array([[e.scalar_part() for e in row] for row in self.entries],
                        dtype=complex)

    def dual(self) -> "ZeonMatrix":
        """Entrywise dual part; all entries nilpotent."""
        return ZeonMatrix([[e.dual_part() for e in row] for row in self.entries])

    def conjugate(self) -> "ZeonMatrix":
        return ZeonMatrix([[e.conjugate() for e in row] for row in self.entries])

    def norm_inf(self) -> float:
        return max(e.norm_inf() for row in self.entries for e in row)

    def is_zero(self, tol: Tolerances = DEFAULT) -> bool:
        return self.norm_inf() <= tol.compare

    def is_self_adjoint(self, tol: Tolerances = DEFAULT) -> bool:
        if not self.is_square:
            return False
        return self.sub(self.adjoint(), tol).norm_inf() <= tol.compare

    def is_nilpotent(self, tol: Tolerances = DEFAULT) -> bool:
        """True when every complex eigenvalue of the scalar part is ~0.

        The threshold floors at a multiple of (machine eps)^(1/m) * scale
        because computed eigenvalues of an exactly nilpotent matrix carry
        perturbations of that order.
        """
        self._require_square("nilpotency test")
        c = self.scalar_matrix()
        eig = np.linalg.eigvals(c)
        scale = max(1.0, float(np.max(np.abs(c))) * self.rows)
        floor = 4.0 * (_EPS ** (1.0 / self.rows)) * scale
        return bool(np.all(np.abs(eig) <= max(tol.scalar_zero, floor)))

    def allclose(self, other: "ZeonMatrix", tol: Tolerances = DEFAULT) -> bool:
        if not isinstance(other, ZeonMatrix):
            return False
        if (self.rows, self.cols, self.n) != (other.rows, other.cols, other.n):
            return False
        return all(a.allclose(b, tol) for ra, rb in zip(self.entries, other.entries)
                   for a, b in zip(ra, rb))

    def _require_same_shape(self, other: "ZeonMatrix") -> None:
        if (self.rows, self.cols, self.n) != (other.rows, other.cols, other.n):
            raise DimensionMismatch("matrix shapes differ")

    def __add__(self, other):
        return self.add(other) if isinstance(other, ZeonMatrix) else NotImplemented

    def __sub__(self, other):
        return self.sub(other) if isinstance(other, ZeonMatrix) else NotImplemented

    def __neg__(self):
        return ZeonMatrix([[-e for e in row] for row in self.entries])

    def __matmul__(self, other):
        return self.mul(other)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, ZeonElement)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ZeonMatrix):
            return NotImplemented
        return self.allclose(other)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "n": self.n,
                "entries": [[e.to_json() for e in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data, tol: Tolerances = DEFAULT) -> "ZeonMatrix":
        if not isinstance(data, Mapping):
            raise ParseError("matrix must be a JSON object")
        try:
            rows = int(data["rows"])
            cols = int(data["cols"])
            n = int(data["n"])
            raw = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"matrix needs 'rows', 'cols', 'n', 'entries': {exc}") from exc
        if rows < 1 or cols < 1:
            raise ParseError("matrix dimensions must be positive")
        if not isinstance(raw, (list, tuple)) or len(raw) != rows:
            raise ParseError(f"'entries' must be a list of {rows} rows")
        parsed = []
        for row in raw:
            if not isinstance(row, (list, tuple)) or len(row) != cols:
                raise ParseError(f"each row must be a list of {cols} elements")
            parsed_row = []
            for cell in row:
                elem = ZeonElement.from_json(cell, tol)
                if elem.n != n:
                    raise ParseError(
                        f"entry algebra n={elem.n} disagrees with matrix n={n}")
                parsed_row.append(elem)
            parsed.append(parsed_row)
        return cls(parsed)

    def pretty(self, sig: int = 12) -> str:
        return "\n".join("[" + ", ".join(e.pretty(sig) for e in row) + "]"
                         for row in self.entries)

    def __repr__(self) -> str:
        return f"<ZeonMatrix {self.rows}x{self.cols} n={self.n}>"


# ----------------------------------------------------------------------
# elimination

@dataclass(frozen=True)
class RowOp:
    """One elementary row operation.

    swap: exchange rows i and j.
    scale: multiply row i by ``factor`` (must be invertible).
    axpy: add ``factor`` times row i into row j.
    """

    kind: str
    i: int
    j: int | None = None
    factor: ZeonElement | None = None

    def to_json(self) -> dict:
        if self.kind == "swap":
            return {"kind": "swap", "i": self.i, "j": self.j}
        if self.kind == "scale":
            return {"kind": "scale", "i": self.i, "factor": self.factor.to_json()}
        if self.kind == "axpy":
            return {"kind": "axpy", "i": self.i, "j": self.j,
                    "factor": self.factor.to_json()}
        raise ValueError(f"unknown row op kind {self.kind!r}")


@dataclass(frozen=True)
class EliminationReport:
    """Outcome of Gaussian elimination.

    upper: the reduced matrix (echelon up to skipped columns).
    ops: the row operations applied, in order.
    det_factor: unit u with det(upper) = u * det(input) for square input.
    pivot_count: number of invertible pivots found; less than full rank
        means some column had no invertible entry below the current row.
    pivots: (row, column) positions of the pivots.
    """

    upper: ZeonMatrix
    ops: tuple[RowOp, ...]
    det_factor: ZeonElement
    pivot_count: int
    pivots: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {"upper": self.upper.to_json(),
                "ops": [op.to_json() for op in self.ops],
                "det_factor": self.det_factor.to_json(),
                "pivot_count": self.pivot_count,
                "pivots": [list(p) for p in self.pivots]}


def apply_row_ops(matrix: ZeonMatrix, ops: Sequence[RowOp],
                  tol: Tolerances = DEFAULT) -> ZeonMatrix:
    """Replay a sequence of row operations on a matrix."""
    rows = [list(r) for r in matrix.entries]
    for op in ops:
        if op.kind == "swap":
            rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
        elif op.kind == "scale":
            rows[op.i] = [e.mul(op.factor, tol) for e in rows[op.i]]
        elif op.kind == "axpy":
            rows[op.j] = [rows[op.j][c].add(op.factor.mul(rows[op.i][c], tol), tol)
                          for c in range(len(rows[op.j]))]
        else:
            raise ValueError(f"unknown row op kind {op.kind!r}")
    return ZeonMatrix(rows)


def eliminate(matrix: ZeonMatrix, tol: Tolerances = DEFAULT,
              pivoting: str = "max_scalar") -> EliminationReport:
    """Forward Gaussian elimination with invertible pivots.

    Pivot strategies: "max_scalar" picks the candidate row whose entry
    has the largest scalar-part magnitude; "first_invertible" takes the
    first row with an invertible entry. Columns offering no invertible
    entry are skipped (their nilpotent residue stays put), which is how
    rank deficiency over the algebra shows up in pivot_count.
    """
    if pivoting not in ("max_scalar", "first_invertible"):
        raise ValueError(f"unknown pivoting strategy {pivoting!r}")
    n = matrix.n
    m, ncols = matrix.rows, matrix.cols
    rows = [list(r) for r in matrix.entries]
    ops: list[RowOp] = []
    det_factor = ZeonElement.one(n)
    pivots: list[tuple[int, int]] = []
    pr = 0
    for col in range(ncols):
        if pr == m:
            break
        best = None
        if pivoting == "max_scalar":
            best_mag = tol.scalar_zero
            for r in range(pr, m):
                mag = abs(rows[r][col].scalar_part())
                if mag > best_mag:
                    best, best_mag = r, mag
        else:
            for r in range(pr, m):
                if abs(rows[r][col].scalar_part()) > tol.scalar_zero:
                    best = r
                    break
        if best is None:
            continue
        if best != pr:
            rows[pr], rows[best] = rows[best], rows[pr]
            ops.append(RowOp("swap", pr, best))
            det_factor = det_factor.scale(-1)
        pivot_inv = rows[pr][col].inverse(tol)
        for r in range(pr + 1, m):
            entry = rows[r][col]
            if not entry.terms:
                continue
            factor = -entry.mul(pivot_inv, tol)
            ops.append(RowOp("axpy", pr, r, factor))
            new_row = [rows[r][c].add(factor.mul(rows[pr][c], tol), tol)
                       for c in range(ncols)]
            new_row[col] = ZeonElement.zero(n)  # cleared exactly by construction
            rows[r] = new_row
        pivots.append((pr, col))
        pr += 1
    return EliminationReport(ZeonMatrix(rows), tuple(ops), det_factor,
                             len(pivots), tuple(pivots))


# ----------------------------------------------------------------------
# determinant and inverse

def _signed_permutations(m: int):
    perms = []
    for perm in itertools.permutations(range(m)):
        inversions = sum(1 for a in range(m) for b in range(a + 1, m)
                         if perm[a] > perm[b])
        perms.append((perm, -1 if inversions & 1 else 1))
    return perms


_PERM_CACHE: dict[int, list] = {}


def _det_permutation(matrix: ZeonMatrix, tol: Tolerances) -> ZeonElement:
    m = matrix.rows
    if m not in _PERM_CACHE:
        _PERM_CACHE[m] = _signed_permutations(m)
    acc = ZeonElement.zero(matrix.n)
    for perm, sign in _PERM_CACHE[m]:
        term = ZeonElement.one(matrix.n)
        for i in range(m):
            term = term.mul(matrix.entries[i][perm[i]], tol)
            if not term.terms:
                break
        if term.terms:
            acc = acc.add(term.scale(sign), tol)
    return acc


def _det_cofactor(rows: list, tol: Tolerances) -> ZeonElement:
    m = len(rows)
    if m == 1:
        return rows[0][0]
    n = rows[0][0].n
    col = min(range(m), key=lambda c: sum(1 for r in range(m) if rows[r][c].terms))
    acc = ZeonElement.zero(n)
    for r in range(m):
        e = rows[r][col]
        if not e.terms:
            continue
        minor = [[rows[i][j] for j in range(m) if j != col]
                 for i in range(m) if i != r]
        term = e.mul(_det_cofactor(minor, tol), tol)
        if (r + col) & 1:
            term = -term
        acc = acc.add(term, tol)
    return acc


def determinant(matrix: ZeonMatrix, tol: Tolerances = DEFAULT,
                method: str = "auto") -> ZeonElement:
    """Determinant over the algebra.

    "permutation" sums signed products over all permutations (exact, used
    by default up to 4x4); "elimination" triangularizes and multiplies the
    diagonal back through det_factor, falling back to cofactor expansion
    when some column has no invertible pivot.
    """
    matrix._require_square("determinant")
    if method == "auto":
        method = "permutation" if matrix.rows <= 4 else "elimination"
    if method == "permutation":
        return _det_permutation(matrix, tol)
    if method != "elimination":
        raise ValueError(f"unknown determinant method {method!r}")
    report = eliminate(matrix, tol)
    if report.pivot_count < matrix.rows:
        upper_ok = all(report.upper.entries[i][j].norm_inf() <= tol.compare
                       for i in range(matrix.rows) for j in range(i))
        if not upper_ok:
            return _det_cofactor([list(r) for r in matrix.entries], tol)
    diag = ZeonElement.one(matrix.n)
    for i in range(matrix.rows):
        diag = diag.mul(report.upper.entries[i][i], tol)
    return report.det_factor.inverse(tol).mul(diag, tol)


def mat_inverse(matrix: ZeonMatrix, tol: Tolerances = DEFAULT) -> ZeonMatrix:
    """Inverse via the nilpotent series.

    Writing A = (I + D) C with C the scalar part and D = dual(A) C^{-1},
    the inverse is C^{-1} sum_l (-1)^l D^l; the series terminates because
    entries of D are nilpotent, so D^(n+1) = 0.
    """
    matrix._require_square("inverse")
    c = matrix.scalar_matrix()
    singular_values = np.linalg.svd(c, compute_uv=False)
    if singular_values[-1] <= tol.scalar_zero * max(1.0, float(singular_values[0])):
        raise SingularityError("scalar part of the matrix is singular within tolerance")
    c_inv = ZeonMatrix.from_scalar_matrix(np.linalg.inv(c), matrix.n, tol)
    nilpotent = matrix.dual().mul(c_inv, tol)
    series = ZeonMatrix.identity(matrix.rows, matrix.n)
    power = nilpotent
    ell = 1
    while power.norm_inf() > 0 and ell <= matrix.n:
        series = series.add(power.scale((-1) ** ell), tol)
        power = power.mul(nilpotent, tol)
        ell += 1
    return c_inv.mul(series, tol)
