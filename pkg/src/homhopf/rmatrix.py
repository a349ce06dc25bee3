"""Quasitriangular structures, the quantum Hom-Yang-Baxter equations, and the
canonical R-matrix of a Drinfeld double."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimMismatch, MissingDoubleTag
from .hom_structures import DEFAULT_MAX_VIOLATIONS, AxiomReport, HomHopfAlgebra
from .linear_core import basis_vec, kron_vec
from .tensor import SlotTensor

QUASITRIANGULAR_IDENTITIES = (
    "r_counit_left",
    "r_counit_right",
    "r_intertwines_coproduct",
    "r_coproduct_first_leg",
    "r_coproduct_second_leg",
)
QHYBE_IDENTITIES = ("qhybe_first", "qhybe_second")


@dataclass(frozen=True, eq=False)
class RVector:
    """``R = sum coeffs[i][j] e_i (x) e_j`` in ``host (x) host``."""

    host: HomHopfAlgebra
    coeffs: tuple

    def __post_init__(self):
        n, F = self.host.dim, self.host.field
        rows = tuple(tuple(F(c) for c in row) for row in self.coeffs)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimMismatch(f"R must be a {n} x {n} coefficient matrix")
        object.__setattr__(self, "coeffs", rows)

    @classmethod
    def from_entries(cls, host, entries) -> RVector:
        """``entries``: iterable of ``(i, j, c)``."""
        n, F = host.dim, host.field
        rows = [[F.zero] * n for _ in range(n)]
        for i, j, c in entries:
            rows[i][j] = rows[i][j] + F(c)
        return cls(host, rows)

    @classmethod
    def from_tensor(cls, host, t: SlotTensor) -> RVector:
        return cls.from_entries(host, ((i, j, c) for (i, j), c in t.data.items()))

    def tensor(self) -> SlotTensor:
        n, F = self.host.dim, self.host.field
        data = {(i, j): c for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c}
        return SlotTensor(F, (n, n), data)

    def entries(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def nonzero_count(self) -> int:
        return sum(1 for _ in self.entries())


def _pair_mul(t: SlotTensor, mul) -> SlotTensor:
    """``(x1 (x) x2)(y1 (x) y2)`` for a 4-slot tensor ``x1 x2 y1 y2``."""
    return t.merge(0, 2, mul).merge(1, 2, mul)


def _triple_mul(x: SlotTensor, y: SlotTensor, mul) -> SlotTensor:
    """Slotwise product in ``H (x) H (x) H``."""
    return x.outer(y).merge(0, 3, mul).merge(1, 3, mul).merge(2, 3, mul)


def check_quasitriangular(R: RVector, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Counit normalization, ``Delta^op(x) R = R Delta(x)``, and the two
    coproduct-of-R identities in their twisted-product form, with a second
    copy ``r`` of ``R``:

    ``(Delta (x) id) R = alpha(R1) (x) alpha(r1) (x) alpha(R2 r2)``
    ``(id (x) Delta) R = alpha(R1 r1) (x) alpha(r2) (x) alpha(R2)``
    """
    H = R.host
    F, n = H.field, H.dim
    rep = AxiomReport("quasitriangular", max_violations=max_violations)
    rep.declare(*QUASITRIANGULAR_IDENTITIES)
    t = R.tensor()
    rep.check("r_counit_left", (), t.evaluate(0, H.counit).flat(), H.unit)
    rep.check("r_counit_right", (), t.evaluate(1, H.counit).flat(), H.unit)
    for x in range(n):
        d = SlotTensor.basis(F, (n,), (x,)).split(0, H.comul)
        lhs = _pair_mul(d.swap(0, 1).outer(t), H.mul)
        rhs = _pair_mul(t.outer(d), H.mul)
        rep.check("r_intertwines_coproduct", (x,), lhs, rhs)
    a = H.alpha
    rr = t.outer(t)  # R1 R2 r1 r2
    lhs = t.split(0, H.comul)
    rhs = rr.merge(1, 3, H.mul).permute((0, 2, 1)).map(0, a).map(1, a).map(2, a)
    rep.check("r_coproduct_first_leg", (), lhs, rhs)
    lhs = t.split(1, H.comul)
    rhs = rr.merge(0, 2, H.mul).permute((0, 2, 1)).map(0, a).map(1, a).map(2, a)
    rep.check("r_coproduct_second_leg", (), lhs, rhs)
    return rep


def legs(R: RVector):
    """``(R12, R13, R23)`` with the unit in the omitted slot."""
    H = R.host
    t = R.tensor()
    return (
        t.insert(2, H.unit),
        t.insert(1, H.unit),
        t.insert(0, H.unit),
    )


def check_qhybe(R: RVector, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """``R12(R13 R23) = (R13 R23)R12`` and ``(R12 R13)R23 = R23(R13 R12)``,
    parenthesized exactly as written."""
    H = R.host
    m = H.mul
    rep = AxiomReport("qhybe", max_violations=max_violations)
    rep.declare(*QHYBE_IDENTITIES)
    r12, r13, r23 = legs(R)
    r13r23 = _triple_mul(r13, r23, m)
    rep.check("qhybe_first", (), _triple_mul(r12, r13r23, m), _triple_mul(r13r23, r12, m))
    lhs = _triple_mul(_triple_mul(r12, r13, m), r23, m)
    rhs = _triple_mul(r23, _triple_mul(r13, r12, m), m)
    rep.check("qhybe_second", (), lhs, rhs)
    if "qhybe_first" in rep.failed_identities():
        # diagnostic only: the ordering (R23 R13) R12 on the right
        swapped = _triple_mul(_triple_mul(r23, r13, m), r12, m)
        holds = _triple_mul(r12, r13r23, m) == swapped
        rep.notes.append(
            "R12(R13 R23) = (R23 R13)R12 " + ("holds" if holds else "also fails")
        )
    return rep


def double_base(D: HomHopfAlgebra) -> HomHopfAlgebra:
    """The algebra ``H`` a Drinfeld double was built from, read from provenance."""
    from .documents import parse_document

    prov = D.provenance or {}
    if prov.get("construction") != "drinfeld_double" or "base" not in prov:
        raise MissingDoubleTag("this algebra carries no Drinfeld double provenance")
    H = parse_document(prov["base"]).hopf()
    if H.dim * H.dim != D.dim:
        raise MissingDoubleTag(f"base algebra of dim {H.dim} cannot underlie a double of dim {D.dim}")
    return H


def canonical_double_r(D: HomHopfAlgebra, H: HomHopfAlgebra | None = None) -> RVector:
    """``R = sum_i (1 x h*_i) (x) (S^-1(h_i) x eps)`` over the basis of ``H``."""
    if H is None:
        H = double_base(D)
    F, n = H.field, H.dim
    Sinv = H.antipode_inv
    t = SlotTensor(F, (n * n, n * n), {})
    for i in range(n):
        left = kron_vec(H.unit, basis_vec(F, n, i))
        right = kron_vec(Sinv.column(i), H.counit)
        t = t + SlotTensor.from_vec(F, left).outer(SlotTensor.from_vec(F, right))
    return RVector.from_tensor(D, t)
