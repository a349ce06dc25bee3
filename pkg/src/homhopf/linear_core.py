"""Dense exact linear algebra: matrices, structure tensors, Gaussian elimination.

Vectors are plain tuples of field elements.  Tensor-product bases are
flattened first-factor-major: ``e_i (x) e_j`` sits at ``pair_index(i, j, n2)``
``= i * n2 + j``.  Every product construction reuses this convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .errors import DimMismatch, SingularMap


def pair_index(i: int, j: int, n2: int) -> int:
    """Flat index of ``e_i (x) e_j`` when the second factor has dimension ``n2``."""
    return i * n2 + j


def unpair_index(k: int, n2: int) -> tuple[int, int]:
    return divmod(k, n2)


def zero_vec(field, n: int) -> tuple:
    return (field.zero,) * n


def basis_vec(field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def add_vec(x, y) -> tuple:
    if len(x) != len(y):
        raise DimMismatch(f"adding vectors of length {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def sub_vec(x, y) -> tuple:
    if len(x) != len(y):
        raise DimMismatch(f"subtracting vectors of length {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def scale_vec(c, x) -> tuple:
    return tuple(c * a for a in x)


def kron_vec(x, y) -> tuple:
    return tuple(a * b for a in x for b in y)


@dataclass(frozen=True, eq=False)
class LinMap:
    """A linear map stored as a ``cod_dim x dom_dim`` matrix.

    Column ``j`` is the image of the basis vector ``e_j``.
    """

    field: object
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(self.field(c) for c in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimMismatch("a linear map needs positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimMismatch("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, field, n: int) -> LinMap:
        return cls(field, tuple(basis_vec(field, n, i) for i in range(n)))

    @classmethod
    def from_columns(cls, field, columns: Sequence[Sequence]) -> LinMap:
        cols = [tuple(c) for c in columns]
        return cls(field, tuple(zip(*cols)))

    @classmethod
    def diagonal(cls, field, entries) -> LinMap:
        n = len(entries)
        rows = []
        for i, d in enumerate(entries):
            r = [field.zero] * n
            r[i] = field(d)
            rows.append(tuple(r))
        return cls(field, tuple(rows))

    @property
    def cod_dim(self) -> int:
        return len(self.rows)

    @property
    def dom_dim(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.cod_dim == self.dom_dim

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @cached_property
    def columns_sparse(self) -> tuple:
        """Per column, the list of ``(row, coeff)`` with nonzero coefficient."""
        return tuple(
            tuple((i, r[j]) for i, r in enumerate(self.rows) if r[j])
            for j in range(self.dom_dim)
        )

    def __call__(self, v) -> tuple:
        if len(v) != self.dom_dim:
            raise DimMismatch(f"map expects length {self.dom_dim}, got {len(v)}")
        zero = self.field.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: LinMap) -> LinMap:
        """Composition ``self o other``."""
        if self.dom_dim != other.cod_dim:
            raise DimMismatch(
                f"cannot compose {self.cod_dim}x{self.dom_dim} after "
                f"{other.cod_dim}x{other.dom_dim}"
            )
        cols = [self(other.column(j)) for j in range(other.dom_dim)]
        return LinMap.from_columns(self.field, cols)

    def __add__(self, other: LinMap) -> LinMap:
        return LinMap(self.field, tuple(add_vec(a, b) for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: LinMap) -> LinMap:
        return LinMap(self.field, tuple(sub_vec(a, b) for a, b in zip(self.rows, other.rows)))

    def power(self, k: int) -> LinMap:
        """``self**k`` for any integer ``k``; negative powers invert."""
        base = self if k >= 0 else invert_map(self)
        out = LinMap.identity(self.field, self.cod_dim)
        for _ in range(abs(k)):
            out = base @ out
        return out

    def transpose(self) -> LinMap:
        return LinMap(self.field, tuple(zip(*self.rows)))

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(c) for c in r) for r in self.rows)
        return f"LinMap([{body}])"


def invert_map(f: LinMap) -> LinMap:
    """Inverse by Gauss-Jordan elimination; raises SingularMap."""
    if not f.is_square:
        raise DimMismatch(f"cannot invert a {f.cod_dim}x{f.dom_dim} map")
    n = f.cod_dim
    F = f.field
    aug = [list(r) + list(basis_vec(F, n, i)) for i, r in enumerate(f.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMap("determinant is zero")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = F.one / aug[col][col]
        aug[col] = [inv * a for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
    return LinMap(F, tuple(tuple(r[n:]) for r in aug))


def tensor_of_maps(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product under the first-factor-major flattening."""
    rows = []
    for fr in f.rows:
        for gr in g.rows:
            rows.append(tuple(a * b for a in fr for b in gr))
    return LinMap(f.field, tuple(rows))


def dual_map(f: LinMap) -> LinMap:
    """Transpose, i.e. the dual map in the dual basis."""
    return f.transpose()


def rank_and_solve(field, rows: list[list], rhs: list):
    """Solve ``rows @ x = rhs`` exactly.

    Returns ``(solution, nullity)`` with ``solution=None`` when inconsistent.
    Free variables are set to zero in the returned particular solution.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.one / A[r][c]
        A[r] = [inv * a for a in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                k = A[i][c]
                A[i] = [a - k * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if A[i][n]:
            return None, n - len(pivots)
    x = [field.zero] * n
    for i, c in enumerate(pivots):
        x[c] = A[i][n]
    return tuple(x), n - len(pivots)


@dataclass(frozen=True, eq=False)
class StructureTensor:
    """Rank-3 coefficient array ``coeffs[i][j][k]``.

    Multiplication: coefficient of ``e_k`` in ``e_i e_j``.
    Comultiplication: coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``.
    Action ``H (x) M -> M``: shape ``(dim H, dim M, dim M)``.
    Coaction ``M -> M (x) C``: shape ``(dim M, dim M, dim C)``.
    """

    field: object
    shape: tuple
    coeffs: tuple = dc_field(repr=False)

    def __post_init__(self):
        d0, d1, d2 = self.shape
        if min(self.shape) < 1:
            raise DimMismatch(f"structure tensor dims must be positive, got {self.shape}")
        F = self.field
        c = tuple(tuple(tuple(F(x) for x in row) for row in plane) for plane in self.coeffs)
        if len(c) != d0 or any(len(p) != d1 for p in c) or any(
            len(r) != d2 for p in c for r in p
        ):
            raise DimMismatch(f"coefficients do not match shape {self.shape}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zeros(cls, field, shape) -> StructureTensor:
        d0, d1, d2 = shape
        z = field.zero
        return cls(field, tuple(shape), tuple(((z,) * d2,) * d1 for _ in range(d0)))

    @classmethod
    def from_entries(cls, field, shape, entries) -> StructureTensor:
        """Build from ``(i, j, k, c)`` entries; repeated indices accumulate."""
        d0, d1, d2 = shape
        data = [[[field.zero] * d2 for _ in range(d1)] for _ in range(d0)]
        for i, j, k, c in entries:
            if not (0 <= i < d0 and 0 <= j < d1 and 0 <= k < d2):
                raise DimMismatch(f"entry index {(i, j, k)} outside shape {shape}")
            data[i][j][k] = data[i][j][k] + field(c)
        return cls(field, tuple(shape), data)

    @classmethod
    def from_function(cls, field, shape, fn) -> StructureTensor:
        """``fn(i, j)`` returns the length-``d2`` vector for slot pair ``(i, j)``."""
        d0, d1, d2 = shape
        return cls(field, tuple(shape), tuple(tuple(fn(i, j) for j in range(d1)) for i in range(d0)))

    @classmethod
    def from_coproducts(cls, field, shape, fn) -> StructureTensor:
        """``fn(i)`` returns the flattened ``d1 * d2`` vector of the image of ``e_i``."""
        d0, d1, d2 = shape
        planes = []
        for i in range(d0):
            v = fn(i)
            if len(v) != d1 * d2:
                raise DimMismatch(f"coproduct of e_{i} has length {len(v)}, want {d1 * d2}")
            planes.append(tuple(tuple(v[j * d2:(j + 1) * d2]) for j in range(d1)))
        return cls(field, tuple(shape), tuple(planes))

    @cached_property
    def sparse(self) -> dict:
        """``{(i, j): ((k, c), ...)}`` over nonzero coefficients."""
        out = {}
        for i, plane in enumerate(self.coeffs):
            for j, row in enumerate(plane):
                nz = tuple((k, c) for k, c in enumerate(row) if c)
                if nz:
                    out[(i, j)] = nz
        return out

    @cached_property
    def sparse_by_first(self) -> tuple:
        """Per first index, ``((j, k, c), ...)`` over nonzero coefficients."""
        out = [[] for _ in range(self.shape[0])]
        for (i, j), nz in self.sparse.items():
            out[i].extend((j, k, c) for k, c in nz)
        return tuple(tuple(x) for x in out)

    def entries(self):
        """Nonzero ``(i, j, k, c)`` entries in sorted order."""
        for (i, j), nz in sorted(self.sparse.items()):
            for k, c in nz:
                yield i, j, k, c

    def flipped(self) -> StructureTensor:
        """Swap the first two indices (the opposite multiplication)."""
        d0, d1, d2 = self.shape
        return StructureTensor(
            self.field,
            (d1, d0, d2),
            tuple(tuple(self.coeffs[i][j] for i in range(d0)) for j in range(d1)),
        )

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.shape == other.shape and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.shape, self.coeffs))


def apply_structure(t: StructureTensor, x, y) -> tuple:
    """Bilinear contraction ``sum_ij x_i y_j t[i][j][:]``."""
    d0, d1, d2 = t.shape
    if len(x) != d0 or len(y) != d1:
        raise DimMismatch(f"tensor of shape {t.shape} applied to lengths {len(x)}, {len(y)}")
    out = [t.field.zero] * d2
    sp = t.sparse
    ny = [(j, b) for j, b in enumerate(y) if b]
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in ny:
            nz = sp.get((i, j))
            if nz:
                c = a * b
                for k, v in nz:
                    out[k] = out[k] + c * v
    return tuple(out)


def coapply_structure(t: StructureTensor, x) -> tuple:
    """Linear map ``x -> sum_i x_i t[i]`` flattened to length ``d1 * d2``."""
    d0, d1, d2 = t.shape
    if len(x) != d0:
        raise DimMismatch(f"tensor of shape {t.shape} coapplied to length {len(x)}")
    out = [t.field.zero] * (d1 * d2)
    for (i, j), nz in t.sparse.items():
        c0 = x[i]
        if not c0:
            continue
        for k, v in nz:
            idx = j * d2 + k
            out[idx] = out[idx] + c0 * v
    return tuple(out)


def covector_apply(covec, x):
    """Pairing of a covector with a vector."""
    if len(covec) != len(x):
        raise DimMismatch(f"covector of length {len(covec)} applied to length {len(x)}")
    s = None
    for a, b in zip(covec, x):
        if a and b:
            s = a * b if s is None else s + a * b
    if s is None:
        return covec[0] * 0 if covec else 0
    return s
