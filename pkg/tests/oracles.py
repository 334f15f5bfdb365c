"""Independent reference implementations used to check the library.

Everything here works on dense coefficient arrays indexed by blade
bitmask (length 2^n), built with nothing but loops, so the sparse
production code is checked against a structurally different
implementation.
"""

from __future__ import annotations

import itertools

from zeonalg import ZeonElement, ZeonMatrix, ZeonVector, orthonormalize, outer


def to_dense(elem: ZeonElement) -> list[complex]:
    out = [0j] * (1 << elem.n)
    for mask, coeff in elem.terms.items():
        out[mask] = coeff
    return out


def from_dense(dense: list[complex], n: int) -> ZeonElement:
    return ZeonElement(n, {m: c for m, c in enumerate(dense) if c != 0})


def dense_mul(a: list[complex], b: list[complex]) -> list[complex]:
    """Subset-disjoint convolution, the defining product rule."""
    size = len(a)
    out = [0j] * size
    for i in range(size):
        if a[i] == 0:
            continue
        for j in range(size):
            if b[j] == 0 or i & j:
                continue
            out[i | j] += a[i] * b[j]
    return out


def dense_add(a: list[complex], b: list[complex]) -> list[complex]:
    return [x + y for x, y in zip(a, b)]


def dense_scale(a: list[complex], c: complex) -> list[complex]:
    return [x * c for x in a]


def dense_one(n: int) -> list[complex]:
    out = [0j] * (1 << n)
    out[0] = 1
    return out


def max_dense_diff(a: list[complex], b: list[complex]) -> float:
    return max(abs(x - y) for x, y in zip(a, b))


def perm_parity(perm) -> int:
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
                     if perm[a] > perm[b])
    return -1 if inversions & 1 else 1


def dense_perm_det(matrix: ZeonMatrix) -> list[complex]:
    """Signed permutation sum computed entirely in dense arithmetic."""
    m = matrix.rows
    n = matrix.n
    dense = [[to_dense(matrix.entries[i][j]) for j in range(m)] for i in range(m)]
    acc = [0j] * (1 << n)
    for perm in itertools.permutations(range(m)):
        term = dense_one(n)
        for i in range(m):
            term = dense_mul(term, dense[i][perm[i]])
        acc = dense_add(acc, dense_scale(term, perm_parity(perm)))
    return acc


def dense_charpoly(matrix: ZeonMatrix) -> list[list[complex]]:
    """Coefficients (ascending) of det(t I - A) for m <= 3.

    Entries of t I - A are degree-one polynomials whose coefficients are
    dense arrays; the permutation sum multiplies those polynomials out.
    """
    m = matrix.rows
    n = matrix.n
    size = 1 << n

    def poly_entry(i, j):
        const = dense_scale(to_dense(matrix.entries[i][j]), -1)
        lin = dense_one(n) if i == j else [0j] * size
        return [const, lin]

    def poly_mul(p, q):
        out = [[0j] * size for _ in range(len(p) + len(q) - 1)]
        for a, pa in enumerate(p):
            for b, qb in enumerate(q):
                out[a + b] = dense_add(out[a + b], dense_mul(pa, qb))
        return out

    acc = [[0j] * size for _ in range(m + 1)]
    for perm in itertools.permutations(range(m)):
        term = [dense_one(n)]
        for i in range(m):
            term = poly_mul(term, poly_entry(i, perm[i]))
        sign = perm_parity(perm)
        for k in range(len(term)):
            acc[k] = dense_add(acc[k], dense_scale(term[k], sign))
    return acc


def sequential_lift(phi, lam0: complex) -> ZeonElement:
    """Closed-form lift sweeping every grade 1..n in order, unconditionally.

    Independent of the library's minimal-grade-driven loop; used to pin
    down that the iteration order cannot change the fixed point. Assumes
    a monic polynomial whose shadow has the simple zero lam0.
    """
    shadow = [c.scalar_part() for c in phi.coeffs]
    d = len(shadow) - 1
    deflated = [0j] * d
    deflated[d - 1] = shadow[d]
    for i in range(d - 2, -1, -1):
        deflated[i] = shadow[i + 1] + lam0 * deflated[i + 1]
    g0 = 0j
    for c in reversed(deflated):
        g0 = g0 * lam0 + c
    lam = ZeonElement.scalar(phi.n, lam0)
    for grade in range(1, phi.n + 1):
        component = phi.evaluate(lam).grade_part(grade)
        lam = lam.sub(component.scale(1 / g0))
    return lam


# ----------------------------------------------------------------------
# random generators (all take a random.Random for reproducibility)

def rand_element(rng, n: int, terms: int = 4, kind: str = "any") -> ZeonElement:
    """kind: "any", "invertible" (unit scalar magnitude), or "nilpotent"."""
    out = {}
    if kind == "invertible":
        out[0] = complex(rng.choice([-1, 1]) * rng.uniform(0.5, 2.0),
                         rng.uniform(-1.0, 1.0))
    for _ in range(terms):
        mask = rng.randrange(1, 1 << n) if kind == "nilpotent" else rng.randrange(1 << n)
        if kind == "invertible" and mask == 0:
            continue
        out[mask] = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
    if kind == "nilpotent":
        out.pop(0, None)
    return ZeonElement(n, out)


def rand_vector(rng, m: int, n: int, kind: str = "any") -> ZeonVector:
    return ZeonVector([rand_element(rng, n, 3, kind) for _ in range(m)])


def rand_matrix(rng, m: int, n: int, kind: str = "any") -> ZeonMatrix:
    return ZeonMatrix([[rand_element(rng, n, 3, kind) for _ in range(m)]
                       for _ in range(m)])


def rand_unitary_frame(rng, m: int, n: int, dust: float = 0.3) -> list[ZeonVector]:
    """Vectors whose scalar parts form a unitary matrix, plus nilpotent dust."""
    import numpy as np

    seed = rng.randrange(2 ** 31)
    np_rng = np.random.default_rng(seed)
    gaussian = np_rng.normal(size=(m, m)) + 1j * np_rng.normal(size=(m, m))
    q, _ = np.linalg.qr(gaussian)
    frame = []
    for j in range(m):
        entries = []
        for i in range(m):
            terms = {0: complex(q[i, j])}
            for _ in range(2):
                mask = rng.randrange(1, 1 << n)
                terms[mask] = terms.get(mask, 0j) + complex(
                    rng.uniform(-dust, dust), rng.uniform(-dust, dust))
            entries.append(ZeonElement(n, terms))
        frame.append(ZeonVector(entries))
    return frame


def rand_real_eigenvalues(rng, m: int, n: int, separation: float = 0.5) -> list[ZeonElement]:
    """Real-coefficient zeon values with well-separated scalar parts."""
    scalars = []
    while len(scalars) < m:
        candidate = rng.uniform(-3.0, 3.0)
        if all(abs(candidate - s) >= separation for s in scalars):
            scalars.append(candidate)
    values = []
    for s in scalars:
        terms = {0: complex(s)}
        for _ in range(2):
            mask = rng.randrange(1, 1 << n)
            terms[mask] = terms.get(mask, 0j) + complex(rng.uniform(-0.5, 0.5))
        values.append(ZeonElement(n, terms))
    return values


def rand_self_adjoint(rng, m: int, n: int):
    """Planted decomposition: sum of lambda_j v_j v_j* over an orthonormal frame.

    Returns (matrix, eigenvalues, normalized eigenvectors); the matrix is
    self-adjoint by construction and its shadow spectrum is simple.
    """
    frame = orthonormalize(rand_unitary_frame(rng, m, n))
    values = rand_real_eigenvalues(rng, m, n)
    acc = None
    for value, vec in zip(values, frame):
        proj = outer(vec, vec).scale(value)
        acc = proj if acc is None else acc.add(proj)
    return acc, values, frame
