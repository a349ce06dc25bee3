"""Hom-modules and Hom-comodules, their compatibility checks, and the smash
product and smash coproduct built from them.

Tensor layouts (first index = input slot):

* left action ``H (x) M -> M``: ``act[h][m][out]``
* right action ``M (x) H -> M``: ``act[m][h][out]`` (the matched-pair code
  stores ``<|`` in this layout too, module first)
* right coaction ``M -> M (x) C``: ``coact[m][m0][c1]``

The carrier ``M`` is any structure with a ``twist`` (a ``HomAlgebra``,
``HomCoalgebra`` or ``HomBialgebra``); its twist plays the role of ``mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ConstructionFailure, DimMismatch, IncompatibleAction, IncompatibleCoaction
from .hom_structures import (
    DEFAULT_MAX_VIOLATIONS,
    AxiomReport,
    HomAlgebra,
    HomCoalgebra,
    check_hom_algebra,
    check_hom_coalgebra,
)
from .linear_core import LinMap, StructureTensor, basis_vec, kron_vec, tensor_of_maps
from .tensor import SlotTensor

MODULE_IDENTITIES = ("module_hom_associativity", "module_unit", "module_twist")
MODULE_ALGEBRA_IDENTITIES = ("module_algebra_product", "module_algebra_unit")
MODULE_COALGEBRA_IDENTITIES = ("module_coalgebra_comultiplication", "module_coalgebra_counit")
COMODULE_IDENTITIES = ("comodule_coassociativity", "comodule_counit", "comodule_twist")
COMODULE_COALGEBRA_IDENTITIES = (
    "comodule_coalgebra_comultiplication",
    "comodule_coalgebra_counit",
)


@dataclass(frozen=True, eq=False)
class ModuleAction:
    """A Hom-action of ``acting`` on ``carrier``.

    ``side="left"`` stores ``h . m`` as ``act[h][m]``; ``side="right"`` stores
    ``m <| h`` as ``act[m][h]``.
    """

    act: StructureTensor
    acting: object
    carrier: object
    side: str = "left"

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        nA, nM = self.acting.dim, self.carrier.dim
        want = (nA, nM, nM) if self.side == "left" else (nM, nA, nM)
        if self.act.shape != want:
            raise DimMismatch(f"{self.side} action tensor has shape {self.act.shape}, want {want}")

    @property
    def field(self):
        return self.act.field

    def apply(self, h, m) -> tuple:
        """Act with the vector ``h`` on the vector ``m``."""
        from .linear_core import apply_structure

        if self.side == "left":
            return apply_structure(self.act, h, m)
        return apply_structure(self.act, m, h)


@dataclass(frozen=True, eq=False)
class Coaction:
    """A right Hom-coaction ``rho: M -> M (x) C``."""

    coact: StructureTensor
    carrier: object
    coalgebra: object

    def __post_init__(self):
        nM, nC = self.carrier.dim, self.coalgebra.dim
        if self.coact.shape != (nM, nM, nC):
            raise DimMismatch(f"coaction tensor has shape {self.coact.shape}, want {(nM, nM, nC)}")

    @property
    def field(self):
        return self.coact.field

    def rho(self, m) -> SlotTensor:
        return SlotTensor.from_vec(self.field, m).split(0, self.coact)


def trivial_action(H, B) -> ModuleAction:
    """``h . b = eps(h) beta(b)``."""
    F, nH, nB = H.field, H.dim, B.dim
    beta = B.twist

    def fn(h, b):
        e = H.counit[h]
        return tuple(e * c for c in beta.column(b))

    return ModuleAction(StructureTensor.from_function(F, (nH, nB, nB), fn), H, B)


def trivial_coaction(H, B) -> Coaction:
    """``rho(h) = alpha^-1(h) (x) 1_B``."""
    F, nH, nB = H.field, H.dim, B.dim
    ainv = H.twist_power(-1)
    return Coaction(
        StructureTensor.from_coproducts(F, (nH, nH, nB), lambda h: kron_vec(ainv.column(h), B.unit)),
        H,
        B,
    )


# -- module checks ----------------------------------------------------------------


def _report(subject, report, max_violations):
    return AxiomReport(subject, max_violations=max_violations) if report is None else report


def _basis(F, dims, idx):
    return SlotTensor.basis(F, dims, idx)


def check_module(action: ModuleAction, report=None, max_violations=DEFAULT_MAX_VIOLATIONS):
    """The three Hom-module axioms for a left or right action."""
    rep = _report("module", report, max_violations)
    rep.declare(*MODULE_IDENTITIES)
    A, M, t = action.acting, action.carrier, action.act
    F, nA, nM = action.field, A.dim, M.dim
    alpha, mu = A.twist, M.twist
    left = action.side == "left"
    for a in range(nA):
        for b in range(nA):
            for m in range(nM):
                if left:
                    # alpha(a)(b.m) = (ab).mu(m)
                    x = _basis(F, (nA, nA, nM), (a, b, m))
                    lhs = x.merge(1, 2, t).map(0, alpha).merge(0, 1, t)
                    rhs = x.map(2, mu).merge(0, 1, A.mul).merge(0, 1, t)
                else:
                    # (m<|a)<|alpha(b) = mu(m)<|(ab)
                    x = _basis(F, (nM, nA, nA), (m, a, b))
                    lhs = x.merge(0, 1, t).map(1, alpha).merge(0, 1, t)
                    rhs = x.map(0, mu).merge(1, 2, A.mul).merge(0, 1, t)
                rep.check("module_hom_associativity", (a, b, m), lhs, rhs)
    for m in range(nM):
        rep.check("module_unit", (m,), action.apply(A.unit, basis_vec(F, nM, m)), mu.column(m))
        for a in range(nA):
            e_a, e_m = basis_vec(F, nA, a), basis_vec(F, nM, m)
            lhs = mu(action.apply(e_a, e_m))
            rhs = action.apply(alpha.column(a), mu.column(m))
            rep.check("module_twist", (a, m), lhs, rhs)
    return rep


def check_module_algebra(action: ModuleAction, report=None, max_violations=DEFAULT_MAX_VIOLATIONS):
    """Module axioms plus ``h.(ab) = (h1.a)(h2.b)`` and ``h.1 = eps(h) 1``."""
    if action.side != "left":
        raise ValueError("module-algebra checks are defined for left actions")
    rep = _report("module_algebra", report, max_violations)
    check_module(action, rep)
    rep.declare(*MODULE_ALGEBRA_IDENTITIES)
    H, B, t = action.acting, action.carrier, action.act
    F, nH, nB = action.field, H.dim, B.dim
    for h in range(nH):
        for a in range(nB):
            for b in range(nB):
                x = _basis(F, (nH, nB, nB), (h, a, b))
                lhs = x.merge(1, 2, B.mul).merge(0, 1, t)
                rhs = x.split(0, H.comul).merge(0, 2, t).merge(1, 2, t).merge(0, 1, B.mul)
                rep.check("module_algebra_product", (h, a, b), lhs, rhs)
        lhs = action.apply(basis_vec(F, nH, h), B.unit)
        rhs = tuple(H.counit[h] * u for u in B.unit)
        rep.check("module_algebra_unit", (h,), lhs, rhs)
    return rep


def check_module_coalgebra(action: ModuleAction, report=None, max_violations=DEFAULT_MAX_VIOLATIONS):
    """Module axioms plus ``Delta(h.a) = (h1.a1) (x) (h2.a2)`` and
    ``eps(h.a) = eps(h) eps(a)``; mirrored for right actions."""
    rep = _report("module_coalgebra", report, max_violations)
    check_module(action, rep)
    rep.declare(*MODULE_COALGEBRA_IDENTITIES)
    A, M, t = action.acting, action.carrier, action.act
    F, nA, nM = action.field, A.dim, M.dim
    left = action.side == "left"
    for a in range(nA):
        for m in range(nM):
            if left:
                x = _basis(F, (nA, nM), (a, m))
                lhs = x.merge(0, 1, t).split(0, M.comul)
                # a1, a2, m1, m2 -> (a1.m1), (a2.m2)
                rhs = x.split(1, M.comul).split(0, A.comul).merge(0, 2, t).merge(1, 2, t)
            else:
                x = _basis(F, (nM, nA), (m, a))
                lhs = x.merge(0, 1, t).split(0, M.comul)
                rhs = x.split(1, A.comul).split(0, M.comul).merge(0, 2, t).merge(1, 2, t)
            rep.check("module_coalgebra_comultiplication", (a, m), lhs, rhs)
            value = x.merge(0, 1, t).evaluate(0, M.counit).scalar()
            rep.check("module_coalgebra_counit", (a, m), (value,), (A.counit[a] * M.counit[m],))
    return rep


# -- comodule checks --------------------------------------------------------------


def check_comodule(co: Coaction, report=None, max_violations=DEFAULT_MAX_VIOLATIONS):
    rep = _report("comodule", report, max_violations)
    rep.declare(*COMODULE_IDENTITIES)
    M, C, t = co.carrier, co.coalgebra, co.coact
    F, nM = co.field, M.dim
    mu, mui = M.twist, M.twist_power(-1)
    gamma, gi = C.twist, C.twist_power(-1)
    for m in range(nM):
        r = _basis(F, (nM,), (m,)).split(0, t)
        lhs = r.map(0, mui).split(1, C.comul)
        rhs = r.split(0, t).map(2, gi)
        rep.check("comodule_coassociativity", (m,), lhs, rhs)
        rep.check("comodule_counit", (m,), r.evaluate(1, C.counit).flat(), mui.column(m))
        lhs = SlotTensor.from_vec(F, mu.column(m)).split(0, t)
        rep.check("comodule_twist", (m,), lhs, r.map(0, mu).map(1, gamma))
    return rep


def check_comodule_coalgebra(co: Coaction, report=None, max_violations=DEFAULT_MAX_VIOLATIONS):
    """Comodule axioms plus ``c(0)1 (x) c(0)2 (x) c(1) = c1(0) (x) c2(0) (x) c1(1)c2(1)``
    and ``eps(c(0)) c(1) = eps(c) 1``."""
    rep = _report("comodule_coalgebra", report, max_violations)
    check_comodule(co, rep)
    rep.declare(*COMODULE_COALGEBRA_IDENTITIES)
    M, B, t = co.carrier, co.coalgebra, co.coact
    F, nM = co.field, M.dim
    for c in range(nM):
        x = _basis(F, (nM,), (c,))
        lhs = x.split(0, t).split(0, M.comul)
        # c1, c2 -> c1(0), c1(1), c2(0), c2(1) -> c1(0), c2(0), c1(1) c2(1)
        rhs = x.split(0, M.comul).split(1, t).split(0, t).merge(1, 3, B.mul).permute((0, 2, 1))
        rep.check("comodule_coalgebra_comultiplication", (c,), lhs, rhs)
        lhs = x.split(0, t).evaluate(0, M.counit).flat()
        rhs = tuple(M.counit[c] * u for u in B.unit)
        rep.check("comodule_coalgebra_counit", (c,), lhs, rhs)
    return rep


# -- smash constructions ------------------------------------------------------------


def smash_product_tensor(B, H, action: ModuleAction) -> StructureTensor:
    """``(a#h)(b#k) = a(h1 . beta^-1(b)) # alpha(h2)k`` on ``B (x) H``, B-major."""
    F, nB, nH = B.field, B.dim, H.dim
    binv, alpha = B.twist_power(-1), H.twist
    t = action.act
    n = nB * nH

    def fn(i, j):
        a, h = divmod(i, nH)
        b, k = divmod(j, nH)
        x = _basis(F, (nB, nH, nB, nH), (a, h, b, k)).map(2, binv)
        x = x.split(1, H.comul)            # a, h1, h2, b, k
        x = x.merge(1, 3, t)               # a, h1.b, h2, k
        x = x.merge(0, 1, B.mul).map(1, alpha).merge(1, 2, H.mul)
        return x.flat()

    return StructureTensor.from_function(F, (n, n, n), fn)


def smash_product(B, H, action: ModuleAction, verify=True, max_violations=DEFAULT_MAX_VIOLATIONS) -> HomAlgebra:
    """The Hom-smash product algebra on ``B (x) H`` with unit ``1#1`` and
    twist ``beta (x) alpha``."""
    if verify:
        pre = check_module_algebra(action, max_violations=max_violations)
        if not pre.passed:
            raise IncompatibleAction("the action does not make B a module algebra", pre)
    A = HomAlgebra(
        smash_product_tensor(B, H, action),
        kron_vec(B.unit, H.unit),
        tensor_of_maps(B.twist, H.twist),
        _pair_names(B, H, "#"),
    )
    if verify:
        rep = check_hom_algebra(A, max_violations=max_violations)
        if not rep.passed:
            raise ConstructionFailure("the smash product fails the Hom-algebra axioms", rep, A)
    return A


def smash_coproduct_tensor(B, H, co: Coaction) -> StructureTensor:
    """``Delta(a#h) = a1 # alpha(h1(0)) (x) beta^-1(a2) h1(1) # h2``."""
    F, nB, nH = B.field, B.dim, H.dim
    binv, alpha = B.twist_power(-1), H.twist
    n = nB * nH

    def fn(i):
        a, h = divmod(i, nH)
        x = _basis(F, (nB, nH), (a, h)).split(0, B.comul).split(2, H.comul)  # a1 a2 h1 h2
        x = x.split(2, co.coact)           # a1, a2, h1(0), h1(1), h2
        x = x.map(2, alpha).map(1, binv)
        x = x.merge(1, 3, B.mul)           # a1, b^-1(a2)h1(1), alpha(h1(0)), h2
        return x.permute((0, 2, 1, 3)).flat()

    return StructureTensor.from_coproducts(F, (n, n, n), fn)


def smash_coproduct(B, H, co: Coaction, verify=True, max_violations=DEFAULT_MAX_VIOLATIONS) -> HomCoalgebra:
    """The Hom-smash coproduct coalgebra on ``B (x) H`` with counit
    ``eps_B (x) eps_H``."""
    if verify:
        pre = check_comodule_coalgebra(co, max_violations=max_violations)
        if not pre.passed:
            raise IncompatibleCoaction("the coaction does not make H a comodule coalgebra", pre)
    C = HomCoalgebra(
        smash_coproduct_tensor(B, H, co),
        kron_vec(B.counit, H.counit),
        tensor_of_maps(B.twist, H.twist),
        _pair_names(B, H, "#"),
    )
    if verify:
        rep = check_hom_coalgebra(C, max_violations=max_violations)
        if not rep.passed:
            raise ConstructionFailure("the smash coproduct fails the Hom-coalgebra axioms", rep, C)
    return C


def _pair_names(X, Y, sep) -> tuple:
    return tuple(f"{a}{sep}{b}" for a in X.names for b in Y.names)


def tensor_product_algebra(B, H) -> HomAlgebra:
    """``(a (x) h)(b (x) k) = ab (x) hk``, computed directly."""
    F, nB, nH = B.field, B.dim, H.dim
    n = nB * nH

    def fn(i, j):
        a, h = divmod(i, nH)
        b, k = divmod(j, nH)
        return kron_vec(B.mul.coeffs[a][b], H.mul.coeffs[h][k])

    return HomAlgebra(
        StructureTensor.from_function(F, (n, n, n), fn),
        kron_vec(B.unit, H.unit),
        tensor_of_maps(B.twist, H.twist),
        _pair_names(B, H, "#"),
    )


def tensor_product_coalgebra(B, H) -> HomCoalgebra:
    """``Delta(a (x) h) = (a1 (x) h1) (x) (a2 (x) h2)``."""
    F, nB, nH = B.field, B.dim, H.dim
    n = nB * nH

    def fn(i):
        a, h = divmod(i, nH)
        x = _basis(F, (nB, nH), (a, h)).split(0, B.comul).split(2, H.comul)
        return x.permute((0, 2, 1, 3)).flat()

    return HomCoalgebra(
        StructureTensor.from_coproducts(F, (n, n, n), fn),
        kron_vec(B.counit, H.counit),
        tensor_of_maps(B.twist, H.twist),
        _pair_names(B, H, "#"),
    )
