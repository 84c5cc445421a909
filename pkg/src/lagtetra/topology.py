"""Exact integer certificates for the cohomology and intersection form of the fiber.

Everything here is computed with Python integers and ``Fraction``; no
floating point is involved.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import InconsistentSequence, NotUnimodular

__all__ = [
    "IntegerForm",
    "BettiTable",
    "FormClass",
    "smith_normal_form",
    "det_exact",
    "solve_exact",
    "mv_kernel",
    "modular_kernel",
    "kernel_index",
    "change_of_basis",
    "betti_assemble",
    "intersection_form_solve",
    "INTERSECTION_SYSTEM",
    "intersection_form_of",
    "unimodular_q_candidates",
    "classify_form",
    "direct_sum",
    "fiber_certificate",
    "SPACE_COHOMOLOGY",
]


def _matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def det_exact(rows):
    """Determinant by fraction-exact Gaussian elimination."""
    m = _matrix(rows)
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def solve_exact(rows, rhs):
    """Solve a square nonsingular system exactly (Gauss-Jordan)."""
    n = len(rows)
    aug = [row + [Fraction(b)] for row, b in zip(_matrix(rows), rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[-1] for row in aug)


def smith_normal_form(rows):
    """Smith normal form ``D = U A V`` of an integer matrix.

    Returns ``(D, U, V)`` with ``U``, ``V`` unimodular integer matrices.
    """
    a = [[int(x) for x in row] for row in rows]
    m, n = len(a), len(a[0]) if a else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                add_row(t, i, -q)
                done &= a[i][t] == 0
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                add_col(t, j, -q)
                done &= a[t][j] == 0
            if not done:
                continue
            # divisibility: the pivot must divide every remaining entry
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


def modular_kernel(row, modulus):
    """Basis of ``{x in Z^n : row . x = 0 mod modulus}`` as a list of vectors.

    Computed from the Smith form of the integer map ``(x, k) -> row . x - modulus k``,
    whose kernel projects isomorphically onto the wanted lattice.
    """
    d, _, v = smith_normal_form([list(row) + [-modulus]])
    n = len(row)
    rank = 1 if d[0][0] else 0
    free = range(rank, n + 1)
    basis = [tuple(v[i][j] for i in range(n)) for j in free]
    return _reduce_basis(basis) if n == 2 else basis


def mv_kernel():
    """Basis of the kernel of ``(n, m) -> n + m mod 3`` on ``Z^2``."""
    return modular_kernel((1, 1), 3)


def _reduce_basis(basis):
    """Hermite-reduce a rank-2 lattice basis of Z^2 (columns given as pairs)."""
    (a, b), (c, d) = basis
    # column operations to upper-triangular Hermite form
    while c != 0:
        q = a // c
        a, b, c, d = c, d, a - q * c, b - q * d
    if a < 0:
        a, b = -a, -b
    if d < 0:
        c, d = -c, -d
    if d:
        b %= d
    return [(a, b), (c, d)]


def kernel_index(basis):
    (a, b), (c, d) = basis
    return abs(a * d - b * c)


def change_of_basis(source, target):
    """Integer matrix ``M`` with ``target_cols = source_cols @ M``, checked unimodular.

    Returns ``(M, det M)``.
    """
    src = [[source[0][0], source[1][0]], [source[0][1], source[1][1]]]
    tgt_cols = list(target)
    cols = [solve_exact(src, list(col)) for col in tgt_cols]
    m = [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]
    if any(x.denominator != 1 for row in m for x in row):
        raise ValueError("target is not in the integer span of source")
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return [[int(x) for x in row] for row in m], int(det)


@dataclass(frozen=True)
class BettiTable:
    """Ranks and torsion invariant factors of ``H^0 .. H^4``."""

    ranks: tuple
    torsion: tuple = field(default=((), (), (), (), ()))

    @property
    def euler_characteristic(self):
        return sum((-1) ** k * r for k, r in enumerate(self.ranks))

    def describe(self):
        out = []
        for r, t in zip(self.ranks, self.torsion):
            parts = ["Z" if r == 1 else f"Z^{r}"] if r else []
            parts += [f"Z/{n}" for n in t]
            out.append(" + ".join(parts) if parts else "0")
        return out


# Integral cohomology of the pieces of the decomposition of the fiber,
# entered as constants: A and B are homotopy equivalent to 2-spheres and Y,
# their common boundary region, is the Seifert manifold SO(3)/A4 with
# H^0 = Z, H^1 = 0, H^2 = Z/3, H^3 = Z.
SPACE_COHOMOLOGY = {
    "A": {"ranks": (1, 0, 1, 0, 0), "torsion": ((), (), (), (), ())},
    "B": {"ranks": (1, 0, 1, 0, 0), "torsion": ((), (), (), (), ())},
    "Y": {"ranks": (1, 0, 0, 1, 0), "torsion": ((), (), (3,), (), ())},
}


def betti_assemble(data=None):
    """Cohomology of the fiber from the Mayer-Vietoris sequence of ``A``, ``B`` over ``Y``.

    Each segment ``H^k(A) + H^k(B) -> H^k(Y)`` is an explicit integer map and
    ``H^k(F)`` is assembled as ``coker(k-1) + ker(k)``.  Degree 0 is the
    difference map ``(a, b) -> a - b``; degree 2 is ``(n, m) -> n + m mod 3``
    with generators normalized to map to 1; the others vanish.
    """
    data = SPACE_COHOMOLOGY if data is None else data
    a, b, y = data["A"], data["B"], data["Y"]
    ranks, torsion = [], []
    # maps[k]: matrix of H^k(A) + H^k(B) -> H^k(Y), and the modulus of the target
    maps = {
        0: ([[1, -1]], 0),
        2: ([[1, 1]], 3),
    }
    for k in range(5):
        src_rank = a["ranks"][k] + b["ranks"][k]
        kernel_rank, _ = _kernel(maps.get(k), src_rank)
        coker_rank, coker_torsion = _cokernel(maps.get(k - 1), y, k - 1)
        ranks.append(coker_rank + kernel_rank)
        torsion.append(coker_torsion)
    table = BettiTable(tuple(ranks), tuple(tuple(t) for t in torsion))
    _check_exactness(table, data)
    return table


def _kernel(entry, src_rank):
    """Rank and index of the kernel of a degree map."""
    if entry is None or src_rank == 0:
        return src_rank, 1
    mat, modulus = entry
    if modulus:
        basis = modular_kernel(mat[0], modulus)
        return len(basis), kernel_index(basis) if len(basis) == 2 else 1
    d, _, _ = smith_normal_form(mat)
    rank = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i])
    return src_rank - rank, 1


def _cokernel(entry, y, k):
    """Rank and torsion of the cokernel of the degree-k map into ``H^k(Y)``."""
    if k < 0:
        return 0, []
    y_rank, y_torsion = y["ranks"][k], list(y["torsion"][k])
    if entry is None:
        return y_rank, y_torsion
    mat, modulus = entry
    if modulus:
        # surjective onto Z/modulus iff the entries generate the unit ideal mod modulus
        g = modulus
        for x in mat[0]:
            g = gcd(g, x)
        return y_rank, [] if g == 1 else [g]
    d, _, _ = smith_normal_form(mat)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    rank_image = sum(1 for x in diag if x)
    tors = [abs(x) for x in diag if abs(x) > 1]
    return y_rank - rank_image, y_torsion + tors


def _euler(ranks):
    return sum((-1) ** k * r for k, r in enumerate(ranks))


def _check_exactness(table, data):
    r, t = table.ranks, table.torsion
    # a long exact sequence has vanishing alternating rank sum
    expected = _euler(data["A"]["ranks"]) + _euler(data["B"]["ranks"]) - _euler(data["Y"]["ranks"])
    if table.euler_characteristic != expected:
        raise InconsistentSequence(f"Euler characteristic {table.euler_characteristic} != {expected}")
    if r[1] != 0 or t[1]:
        raise InconsistentSequence("H^1 of the fiber should vanish")
    if r[3] != 0 or t[3]:
        raise InconsistentSequence("H^3 of the fiber should vanish")
    if t[2]:
        raise InconsistentSequence("H^2 of the fiber should be free")
    if (r[0], t[0]) != (r[4], t[4]):
        raise InconsistentSequence("H^0 and H^4 should agree")


# rows of the intersection-number system in the unknowns (x, y, z)
INTERSECTION_SYSTEM = ((-2, -2, 5), (4, 1, -4), (1, 4, -4))


def intersection_form_solve(q):
    """Solve the system with right-hand side ``(0, q, -q)`` exactly.

    Returns ``(solution, determinant)``.
    """
    q = Fraction(q)
    rows = [list(r) for r in INTERSECTION_SYSTEM]
    det = det_exact(rows)
    sol = solve_exact(rows, [0, q, -q])
    return sol, det


def intersection_form_of(q):
    """The intersection matrix ``[[x, z], [z, y]]`` on the generators for a given ``q``."""
    (x, y, z), _ = intersection_form_solve(q)
    return IntegerForm([[x, z], [z, y]])


def unimodular_q_candidates(search=range(-30, 31)):
    """Values of ``q`` giving an integral form of determinant +-1."""
    out = set()
    for q in search:
        form = intersection_form_of(q)
        if form.is_integral() and abs(form.det) == 1:
            out.add(q)
    return out


class IntegerForm:
    """A symmetric bilinear form with exact rational entries."""

    __slots__ = ("m",)

    def __init__(self, rows):
        m = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("form matrix must be square")
        for i in range(n):
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("form matrix must be symmetric")
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerForm is immutable")

    @property
    def rank(self):
        return len(self.m)

    @property
    def det(self):
        return det_exact([list(r) for r in self.m])

    def is_integral(self):
        return all(x.denominator == 1 for row in self.m for x in row)

    def is_unimodular(self):
        return self.is_integral() and abs(self.det) == 1

    def __neg__(self):
        return IntegerForm([[-x for x in row] for row in self.m])

    def __eq__(self, other):
        return isinstance(other, IntegerForm) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def as_ints(self):
        return [[int(x) for x in row] for row in self.m]

    def __repr__(self):
        return f"IntegerForm({self.as_ints() if self.is_integral() else self.m})"


def direct_sum(f, g):
    n, k = f.rank, g.rank
    rows = [[Fraction(0)] * (n + k) for _ in range(n + k)]
    for i in range(n):
        for j in range(n):
            rows[i][j] = f.m[i][j]
    for i in range(k):
        for j in range(k):
            rows[n + i][n + j] = g.m[i][j]
    return IntegerForm(rows)


def _congruence_diagonal(form):
    """Diagonal entries of a rational congruence diagonalization."""
    a = [list(row) for row in form.m]
    n = len(a)
    diag = []
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is not None:
                    # e_k -> e_k + e_j makes the pivot 2 a_kj != 0
                    for c in range(n):
                        a[k][c] += a[j][c]
                    for r in range(n):
                        a[r][k] += a[r][j]
        p = a[k][k]
        diag.append(p)
        if p == 0:
            continue
        for r in range(k + 1, n):
            f = a[r][k] / p
            if f:
                for c in range(n):
                    a[r][c] -= f * a[k][c]
                for c in range(n):
                    a[c][r] -= f * a[c][k]
    return diag


@dataclass(frozen=True)
class FormClass:
    rank: int
    signature: int
    parity: str
    definiteness: str
    model: str

    def as_dict(self):
        return {
            "rank": self.rank,
            "signature": self.signature,
            "parity": self.parity,
            "definiteness": self.definiteness,
            "model": self.model,
        }


def classify_form(form):
    """Rank, signature, parity, definiteness and the rank-2 model name."""
    if not form.is_unimodular():
        raise NotUnimodular(f"determinant {form.det} is not +-1 or entries are not integral")
    diag = _congruence_diagonal(form)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    signature = pos - neg
    parity = "even" if all(form.m[i][i] % 2 == 0 for i in range(form.rank)) else "odd"
    if neg == 0:
        definiteness = "positive definite"
    elif pos == 0:
        definiteness = "negative definite"
    else:
        definiteness = "indefinite"
    model = "other"
    if form.rank == 2 and definiteness == "indefinite":
        model = "CP2#-CP2" if parity == "odd" else "S2xS2"
    return FormClass(form.rank, signature, parity, definiteness, model)


def fiber_certificate():
    """The full chain: kernel, linear system, unimodular q, classification."""
    basis = mv_kernel()
    index = kernel_index(basis)
    change, change_det = change_of_basis(basis, [(2, 1), (1, 2)])
    candidates = sorted(unimodular_q_candidates())
    sol, det = intersection_form_solve(candidates[-1])
    form = intersection_form_of(candidates[-1])
    cls = classify_form(form)
    return {
        "kernel_basis": [list(b) for b in basis],
        "kernel_index": index,
        "change_of_basis": change,
        "change_of_basis_det": change_det,
        "system": [list(r) for r in INTERSECTION_SYSTEM],
        "rhs": ["0", "q", "-q"],
        "determinant": int(det),
        "solution": ["q/3", "-q/3", "0"],
        "solution_at_q": {str(candidates[-1]): [str(x) for x in sol]},
        "q_candidates": candidates,
        "form": form.as_ints(),
        "classification": cls.as_dict(),
    }
