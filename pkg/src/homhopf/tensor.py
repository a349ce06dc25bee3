"""Sparse elements of tensor products, manipulated slot by slot.

A :class:`SlotTensor` is an element of ``V_0 (x) ... (x) V_{r-1}``.  Formulas
written in Sweedler notation are evaluated literally by a sequence of slot
operations: ``split`` applies a comultiplication or coaction to one slot,
``merge`` applies a multiplication or action to two slots, ``map`` applies a
linear map, ``evaluate`` contracts a slot with a covector.

Example, ``a (h_1 . b) (x) alpha(h_2)`` from the basis tensor ``a (x) h (x) b``::

    t.split(1, comul_H)        # a, h1, h2, b
     .merge(1, 3, action)      # a, h1.b, h2
     .merge(0, 1, mul_B)       # a(h1.b), h2
     .map(1, alpha)
"""

from __future__ import annotations

from .errors import DimMismatch


class SlotTensor:
    __slots__ = ("field", "dims", "data")

    def __init__(self, field, dims, data=None):
        self.field = field
        self.dims = tuple(dims)
        self.data = {} if data is None else data

    @classmethod
    def basis(cls, field, dims, idx) -> SlotTensor:
        if len(dims) != len(idx):
            raise DimMismatch("basis index rank differs from tensor rank")
        return cls(field, dims, {tuple(idx): field.one})

    @classmethod
    def from_flat(cls, field, dims, flat) -> SlotTensor:
        dims = tuple(dims)
        data = {}
        for k, c in enumerate(flat):
            if c:
                idx = []
                r = k
                for d in reversed(dims):
                    r, q = divmod(r, d)
                    idx.append(q)
                data[tuple(reversed(idx))] = c
        return cls(field, dims, data)

    @classmethod
    def from_vec(cls, field, vec) -> SlotTensor:
        return cls.from_flat(field, (len(vec),), vec)

    @classmethod
    def copairing(cls, field, n: int) -> SlotTensor:
        """The canonical element ``sum_j e_j (x) e^j`` of ``V (x) V*``."""
        return cls(field, (n, n), {(j, j): field.one for j in range(n)})

    @property
    def rank(self) -> int:
        return len(self.dims)

    def _new(self, dims, data) -> SlotTensor:
        return SlotTensor(self.field, dims, data)

    @staticmethod
    def _acc(data, key, c):
        v = data.get(key)
        v = c if v is None else v + c
        if v:
            data[key] = v
        elif key in data:
            del data[key]

    def map(self, slot: int, f) -> SlotTensor:
        """Apply a LinMap to one slot."""
        if f.dom_dim != self.dims[slot]:
            raise DimMismatch(f"map domain {f.dom_dim} vs slot dim {self.dims[slot]}")
        cols = f.columns_sparse
        out = {}
        for idx, c in self.data.items():
            for r, a in cols[idx[slot]]:
                self._acc(out, idx[:slot] + (r,) + idx[slot + 1:], c * a)
        dims = self.dims[:slot] + (f.cod_dim,) + self.dims[slot + 1:]
        return self._new(dims, out)

    def split(self, slot: int, t) -> SlotTensor:
        """Replace one slot by two via ``e_i -> sum t[i][j][k] e_j (x) e_k``."""
        if t.shape[0] != self.dims[slot]:
            raise DimMismatch(f"split tensor {t.shape} on slot dim {self.dims[slot]}")
        rows = t.sparse_by_first
        out = {}
        for idx, c in self.data.items():
            head, tail = idx[:slot], idx[slot + 1:]
            for j, k, a in rows[idx[slot]]:
                self._acc(out, head + (j, k) + tail, c * a)
        dims = self.dims[:slot] + (t.shape[1], t.shape[2]) + self.dims[slot + 1:]
        return self._new(dims, out)

    def merge(self, i: int, j: int, t) -> SlotTensor:
        """Replace slots ``i`` and ``j`` by ``t(x_i, x_j)``, placed at ``min(i, j)``."""
        if i == j:
            raise ValueError("merge needs two distinct slots")
        if t.shape[0] != self.dims[i] or t.shape[1] != self.dims[j]:
            raise DimMismatch(
                f"merge tensor {t.shape} on slot dims {self.dims[i]}, {self.dims[j]}"
            )
        lo, hi = min(i, j), max(i, j)
        sp = t.sparse
        out = {}
        for idx, c in self.data.items():
            nz = sp.get((idx[i], idx[j]))
            if not nz:
                continue
            head, mid, tail = idx[:lo], idx[lo + 1:hi], idx[hi + 1:]
            for k, a in nz:
                self._acc(out, head + (k,) + mid + tail, c * a)
        d = self.dims
        dims = d[:lo] + (t.shape[2],) + d[lo + 1:hi] + d[hi + 1:]
        return self._new(dims, out)

    def evaluate(self, slot: int, covec) -> SlotTensor:
        """Contract a slot with a covector, removing it."""
        if len(covec) != self.dims[slot]:
            raise DimMismatch(f"covector length {len(covec)} vs slot dim {self.dims[slot]}")
        out = {}
        for idx, c in self.data.items():
            a = covec[idx[slot]]
            if a:
                self._acc(out, idx[:slot] + idx[slot + 1:], c * a)
        return self._new(self.dims[:slot] + self.dims[slot + 1:], out)

    def pick(self, slot: int, index: int) -> SlotTensor:
        """Evaluate the dual-basis functional ``e^index`` on a slot."""
        out = {}
        for idx, c in self.data.items():
            if idx[slot] == index:
                out[idx[:slot] + idx[slot + 1:]] = c
        return self._new(self.dims[:slot] + self.dims[slot + 1:], out)

    def contract(self, i: int, j: int) -> SlotTensor:
        """Pair slot ``i`` (dual space) with slot ``j`` through ``<e^a, e_b> = delta_ab``."""
        if self.dims[i] != self.dims[j]:
            raise DimMismatch("contracted slots differ in dimension")
        lo, hi = min(i, j), max(i, j)
        out = {}
        for idx, c in self.data.items():
            if idx[i] == idx[j]:
                self._acc(out, idx[:lo] + idx[lo + 1:hi] + idx[hi + 1:], c)
        d = self.dims
        return self._new(d[:lo] + d[lo + 1:hi] + d[hi + 1:], out)

    def fuse(self, slot: int) -> SlotTensor:
        """Merge slots ``slot`` and ``slot + 1`` into one, first factor major."""
        d2 = self.dims[slot + 1]
        out = {}
        for idx, c in self.data.items():
            out[idx[:slot] + (idx[slot] * d2 + idx[slot + 1],) + idx[slot + 2:]] = c
        d = self.dims
        return self._new(d[:slot] + (d[slot] * d2,) + d[slot + 2:], out)

    def unfuse(self, slot: int, d1: int, d2: int) -> SlotTensor:
        """Inverse of :meth:`fuse`."""
        if self.dims[slot] != d1 * d2:
            raise DimMismatch(f"cannot unfuse slot of dim {self.dims[slot]} into {d1} x {d2}")
        out = {}
        for idx, c in self.data.items():
            q, r = divmod(idx[slot], d2)
            out[idx[:slot] + (q, r) + idx[slot + 1:]] = c
        d = self.dims
        return self._new(d[:slot] + (d1, d2) + d[slot + 1:], out)

    def insert(self, slot: int, vec) -> SlotTensor:
        """Tensor in a fixed vector as a new slot at position ``slot``."""
        nz = [(k, a) for k, a in enumerate(vec) if a]
        out = {}
        for idx, c in self.data.items():
            for k, a in nz:
                out[idx[:slot] + (k,) + idx[slot:]] = c * a
        return self._new(self.dims[:slot] + (len(vec),) + self.dims[slot:], out)

    def outer(self, other: SlotTensor) -> SlotTensor:
        out = {}
        for i1, c1 in self.data.items():
            for i2, c2 in other.data.items():
                out[i1 + i2] = c1 * c2
        return self._new(self.dims + other.dims, out)

    def permute(self, order) -> SlotTensor:
        """New slot ``k`` is old slot ``order[k]``."""
        order = tuple(order)
        if sorted(order) != list(range(self.rank)):
            raise ValueError(f"{order} is not a permutation of {self.rank} slots")
        out = {tuple(idx[o] for o in order): c for idx, c in self.data.items()}
        return self._new(tuple(self.dims[o] for o in order), out)

    def swap(self, i: int, j: int) -> SlotTensor:
        order = list(range(self.rank))
        order[i], order[j] = order[j], order[i]
        return self.permute(order)

    def flat(self) -> tuple:
        """Dense coefficient vector, first slot major."""
        size = 1
        for d in self.dims:
            size *= d
        out = [self.field.zero] * size
        for idx, c in self.data.items():
            k = 0
            for d, i in zip(self.dims, idx):
                k = k * d + i
            out[k] = c
        return tuple(out)

    def scalar(self):
        """The value of a rank-0 tensor."""
        if self.rank:
            raise DimMismatch("scalar() on a tensor of positive rank")
        return self.data.get((), self.field.zero)

    def scale(self, c) -> SlotTensor:
        if not c:
            return self._new(self.dims, {})
        return self._new(self.dims, {k: v * c for k, v in self.data.items()})

    def __add__(self, other: SlotTensor) -> SlotTensor:
        if self.dims != other.dims:
            raise DimMismatch(f"adding tensors with dims {self.dims} and {other.dims}")
        out = dict(self.data)
        for k, v in other.data.items():
            self._acc(out, k, v)
        return self._new(self.dims, out)

    def __neg__(self) -> SlotTensor:
        return self._new(self.dims, {k: -v for k, v in self.data.items()})

    def __sub__(self, other: SlotTensor) -> SlotTensor:
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, SlotTensor):
            return NotImplemented
        return self.dims == other.dims and self.data == other.data

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.data

    def __repr__(self):
        terms = ", ".join(f"{k}: {self.field.format(v)}" for k, v in sorted(self.data.items()))
        return f"SlotTensor(dims={self.dims}, {{{terms}}})"


def slot_sum(tensors, field, dims) -> SlotTensor:
    out = SlotTensor(field, dims, {})
    for t in tensors:
        out = out + t
    return out
