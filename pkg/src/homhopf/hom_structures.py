"""Monoidal Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras.

Every checker evaluates its identities on basis tuples only.  All maps
involved are multilinear in the basis arguments, so this is equivalent to
checking them on all elements.

Iterated Sweedler indices are left-nested: ``h11 (x) h12 (x) h2`` is
``(Delta (x) id) Delta(h)`` and ``h1 (x) h21 (x) h22`` is ``(id (x) Delta) Delta(h)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .errors import DualAxiomFailure, NoAntipode, NonUniqueAntipode, OpAxiomFailure
from .linear_core import (
    LinMap,
    StructureTensor,
    apply_structure,
    basis_vec,
    covector_apply,
    invert_map,
    rank_and_solve,
)
from .tensor import SlotTensor

DEFAULT_MAX_VIOLATIONS = 32

ALGEBRA_IDENTITIES = (
    "hom_associativity",
    "left_unit",
    "right_unit",
    "twist_multiplicative",
    "twist_fixes_unit",
)
COALGEBRA_IDENTITIES = (
    "hom_coassociativity",
    "left_counit",
    "right_counit",
    "twist_comultiplicative",
    "counit_twist_invariant",
    "iterated_coproduct_5",
    "iterated_coproduct_4",
)
BIALGEBRA_IDENTITIES = (
    "comultiplication_multiplicative",
    "comultiplication_unit",
    "counit_multiplicative",
    "counit_unit",
)
HOPF_IDENTITIES = (
    "antipode_commutes_twist",
    "antipode_left",
    "antipode_right",
    "antipode_anti_multiplicative",
    "antipode_unit",
    "antipode_anti_comultiplicative",
    "counit_antipode",
)

LEVELS = ("algebra", "coalgebra", "bialgebra", "hopf")


# -- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple
    lhs: tuple
    rhs: tuple


def _vec_text(vec, fmt, dense_limit=16) -> str:
    """Dense list for short vectors, ``{index: value}`` over the support otherwise."""
    if len(vec) <= dense_limit:
        return "[" + ", ".join(fmt(c) for c in vec) + "]"
    return "{" + ", ".join(f"{i}: {fmt(c)}" for i, c in enumerate(vec) if c) + "}"


@dataclass
class AxiomReport:
    """Outcome of a checker: every identity it ran and every violation found.

    ``violations`` is capped at ``max_violations``; overflow is counted in
    ``truncated`` so a capped report still fails.
    """

    subject: str
    identities: list = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)
    max_violations: int = DEFAULT_MAX_VIOLATIONS
    truncated: int = 0
    notes: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.truncated

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def violation_count(self) -> int:
        return len(self.violations) + self.truncated

    def declare(self, *names):
        for name in names:
            if name not in self.identities:
                self.identities.append(name)

    def record(self, name, witness, lhs, rhs):
        if len(self.violations) < self.max_violations:
            self.violations.append(Violation(name, tuple(witness), tuple(lhs), tuple(rhs)))
        else:
            self.truncated += 1

    def check(self, name, witness, lhs, rhs) -> bool:
        """Compare two vectors or SlotTensors; record a violation if they differ."""
        self.declare(name)
        if isinstance(lhs, SlotTensor) or isinstance(rhs, SlotTensor):
            if not isinstance(lhs, SlotTensor):
                lhs = SlotTensor.from_flat(rhs.field, rhs.dims, lhs)
            if not isinstance(rhs, SlotTensor):
                rhs = SlotTensor.from_flat(lhs.field, lhs.dims, rhs)
            if lhs == rhs:
                return True
            self.record(name, witness, lhs.flat(), rhs.flat())
            return False
        if tuple(lhs) == tuple(rhs):
            return True
        self.record(name, witness, lhs, rhs)
        return False

    def extend(self, other: AxiomReport) -> AxiomReport:
        self.declare(*other.identities)
        for v in other.violations:
            self.record(v.identity, v.witness, v.lhs, v.rhs)
        self.truncated += other.truncated
        self.notes.extend(other.notes)
        return self

    def failed_identities(self) -> list:
        seen = []
        for v in self.violations:
            if v.identity not in seen:
                seen.append(v.identity)
        return seen

    def summary(self) -> str:
        return (
            f"{self.subject}: {self.verdict} "
            f"({len(self.identities)} identities, {self.violation_count} violations)"
        )

    def lines(self, fmt=str) -> list:
        """One line per identity, then one line per violation."""
        failed = set(self.failed_identities())
        out = [self.summary()]
        for name in self.identities:
            out.append(f"  {name}: {'FAIL' if name in failed else 'pass'}")
        for v in self.violations:
            lhs, rhs = _vec_text(v.lhs, fmt), _vec_text(v.rhs, fmt)
            out.append(f"  ! {v.identity} at {v.witness}: lhs={lhs} rhs={rhs}")
        if self.truncated:
            out.append(f"  ... {self.truncated} further violations not shown")
        for note in self.notes:
            out.append(f"  note: {note}")
        return out

    def to_json(self, fmt=str) -> dict:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "identities": list(self.identities),
            "violation_count": self.violation_count,
            "truncated": self.truncated,
            "violations": [
                {
                    "identity": v.identity,
                    "witness": list(v.witness),
                    "lhs": [fmt(c) for c in v.lhs],
                    "rhs": [fmt(c) for c in v.rhs],
                }
                for v in self.violations
            ],
            "notes": list(self.notes),
        }


# -- structures --------------------------------------------------------------


class _TwistPowers:
    """Mixin caching integer powers of the twist map."""

    def twist_power(self, k: int) -> LinMap:
        cache = self.__dict__.setdefault("_twist_powers", {})
        if k not in cache:
            if k == 1:
                cache[k] = self.twist
            elif k == -1:
                cache[k] = invert_map(self.twist)
            elif k == 0:
                cache[k] = LinMap.identity(self.field, self.dim)
            elif k > 0:
                cache[k] = self.twist @ self.twist_power(k - 1)
            else:
                cache[k] = self.twist_power(-1) @ self.twist_power(k + 1)
        return cache[k]

    @property
    def names(self) -> tuple:
        if self.basis is not None:
            return tuple(self.basis)
        return tuple(f"e{i}" for i in range(self.dim))


@dataclass(frozen=True, eq=False)
class HomAlgebra(_TwistPowers):
    """Unital monoidal Hom-associative algebra ``(A, m, 1, alpha)``."""

    mul: StructureTensor
    unit: tuple
    alpha: LinMap
    basis: tuple | None = None

    def __post_init__(self):
        n = self.mul.shape[2]
        if self.mul.shape != (n, n, n):
            raise ValueError(f"multiplication tensor must be n x n x n, got {self.mul.shape}")
        object.__setattr__(self, "unit", tuple(self.field(c) for c in self.unit))
        if len(self.unit) != n or self.alpha.cod_dim != n or self.alpha.dom_dim != n:
            raise ValueError("unit/twist dimensions disagree with the multiplication")

    @property
    def field(self):
        return self.mul.field

    @property
    def dim(self) -> int:
        return self.mul.shape[2]

    @property
    def twist(self) -> LinMap:
        return self.alpha

    @cached_property
    def alpha_inv(self) -> LinMap:
        return self.twist_power(-1)

    def product(self, x, y) -> tuple:
        return apply_structure(self.mul, x, y)


@dataclass(frozen=True, eq=False)
class HomCoalgebra(_TwistPowers):
    """Counital monoidal Hom-coassociative coalgebra ``(C, Delta, eps, gamma)``."""

    comul: StructureTensor
    counit: tuple
    gamma: LinMap
    basis: tuple | None = None

    def __post_init__(self):
        n = self.comul.shape[0]
        if self.comul.shape != (n, n, n):
            raise ValueError(f"comultiplication tensor must be n x n x n, got {self.comul.shape}")
        object.__setattr__(self, "counit", tuple(self.field(c) for c in self.counit))
        if len(self.counit) != n or self.gamma.cod_dim != n or self.gamma.dom_dim != n:
            raise ValueError("counit/twist dimensions disagree with the comultiplication")

    @property
    def field(self):
        return self.comul.field

    @property
    def dim(self) -> int:
        return self.comul.shape[0]

    @property
    def twist(self) -> LinMap:
        return self.gamma

    @cached_property
    def gamma_inv(self) -> LinMap:
        return self.twist_power(-1)

    def coproduct(self, x) -> SlotTensor:
        return SlotTensor.from_vec(self.field, x).split(0, self.comul)

    def epsilon(self, x):
        return covector_apply(self.counit, x)


@dataclass(frozen=True, eq=False)
class HomBialgebra(_TwistPowers):
    """A Hom-algebra and a Hom-coalgebra on the same space with the same twist."""

    algebra: HomAlgebra
    coalgebra: HomCoalgebra

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise ValueError("algebra and coalgebra dimensions differ")
        if self.algebra.alpha != self.coalgebra.gamma:
            raise ValueError("algebra and coalgebra twists differ")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def basis(self):
        return self.algebra.basis

    @property
    def mul(self) -> StructureTensor:
        return self.algebra.mul

    @property
    def unit(self) -> tuple:
        return self.algebra.unit

    @property
    def comul(self) -> StructureTensor:
        return self.coalgebra.comul

    @property
    def counit(self) -> tuple:
        return self.coalgebra.counit

    @property
    def alpha(self) -> LinMap:
        return self.algebra.alpha

    @property
    def twist(self) -> LinMap:
        return self.algebra.alpha

    @cached_property
    def alpha_inv(self) -> LinMap:
        return self.twist_power(-1)

    def product(self, x, y) -> tuple:
        return apply_structure(self.mul, x, y)

    def coproduct(self, x) -> SlotTensor:
        return SlotTensor.from_vec(self.field, x).split(0, self.comul)

    def epsilon(self, x):
        return covector_apply(self.counit, x)

    def e(self, i: int) -> tuple:
        return basis_vec(self.field, self.dim, i)


@dataclass(frozen=True, eq=False)
class HomHopfAlgebra(HomBialgebra):
    """A Hom-bialgebra with a stored antipode.

    ``provenance`` records how a constructed algebra was obtained (for
    instance the base algebra of a Drinfeld double).
    """

    antipode: LinMap = None
    provenance: dict | None = None

    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise ValueError("a Hom-Hopf algebra needs an antipode")
        if not (self.antipode.cod_dim == self.antipode.dom_dim == self.dim):
            raise ValueError("antipode must be a square map on the algebra")

    @classmethod
    def build(cls, field, mul, unit, comul, counit, alpha, antipode, basis=None, provenance=None):
        basis = tuple(basis) if basis is not None else None
        return cls(
            HomAlgebra(mul, tuple(unit), alpha, basis),
            HomCoalgebra(comul, tuple(counit), alpha, basis),
            antipode=antipode,
            provenance=provenance,
        )

    @property
    def bialgebra(self) -> HomBialgebra:
        return HomBialgebra(self.algebra, self.coalgebra)

    @cached_property
    def antipode_inv(self) -> LinMap:
        return invert_map(self.antipode)

    def with_basis(self, basis) -> HomHopfAlgebra:
        basis = tuple(basis)
        return HomHopfAlgebra(
            HomAlgebra(self.mul, self.unit, self.alpha, basis),
            HomCoalgebra(self.comul, self.counit, self.alpha, basis),
            antipode=self.antipode,
            provenance=self.provenance,
        )


def same_structure(A, B) -> bool:
    """Structure-constant equality (ignores basis names and provenance)."""
    if A.dim != B.dim or A.field != B.field:
        return False
    ok = A.mul == B.mul and A.unit == B.unit and A.alpha == B.alpha
    ok = ok and A.comul == B.comul and A.counit == B.counit
    if isinstance(A, HomHopfAlgebra) and isinstance(B, HomHopfAlgebra):
        ok = ok and A.antipode == B.antipode
    return ok


def _algebra_of(x) -> HomAlgebra:
    return x.algebra if isinstance(x, HomBialgebra) else x


def _coalgebra_of(x) -> HomCoalgebra:
    return x.coalgebra if isinstance(x, HomBialgebra) else x


# -- checkers -------------------------------------------------------------------


def _new_report(subject, report, max_violations):
    if report is None:
        return AxiomReport(subject, max_violations=max_violations)
    return report


def check_hom_algebra(A, report=None, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Hom-associativity, both unit laws, multiplicativity of the twist, twist(1) = 1."""
    A = _algebra_of(A)
    rep = _new_report("algebra", report, max_violations)
    rep.declare(*ALGEBRA_IDENTITIES)
    n = A.dim
    alpha = A.alpha
    A.alpha_inv  # SingularMap if the twist is not invertible
    P = A.mul.coeffs
    a_e = [alpha.column(i) for i in range(n)]
    prod = A.product
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = prod(a_e[a], P[b][c])
                rhs = prod(P[a][b], a_e[c])
                rep.check("hom_associativity", (a, b, c), lhs, rhs)
    for a in range(n):
        e_a = basis_vec(A.field, n, a)
        rep.check("left_unit", (a,), prod(A.unit, e_a), a_e[a])
        rep.check("right_unit", (a,), prod(e_a, A.unit), a_e[a])
    for a in range(n):
        for b in range(n):
            rep.check("twist_multiplicative", (a, b), alpha(P[a][b]), prod(a_e[a], a_e[b]))
    rep.check("twist_fixes_unit", (), alpha(A.unit), A.unit)
    return rep


def _basis_delta(C, i) -> SlotTensor:
    return SlotTensor.basis(C.field, (C.dim,), (i,)).split(0, C.comul)


def check_hom_coalgebra(C, report=None, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Hom-coassociativity, counit laws, twist compatibility, and the two
    iterated-coproduct identities that follow from Hom-coassociativity."""
    C = _coalgebra_of(C)
    rep = _new_report("coalgebra", report, max_violations)
    rep.declare(*COALGEBRA_IDENTITIES)
    n, F = C.dim, C.field
    g, gi = C.twist_power(1), C.twist_power(-1)
    g2 = C.twist_power(2)
    for c in range(n):
        d = _basis_delta(C, c)
        lhs = d.map(0, gi).split(1, C.comul)
        rhs = d.split(0, C.comul).map(2, gi)
        rep.check("hom_coassociativity", (c,), lhs, rhs)
        gc = gi.column(c)
        rep.check("left_counit", (c,), d.evaluate(0, C.counit).flat(), gc)
        rep.check("right_counit", (c,), d.evaluate(1, C.counit).flat(), gc)
        lhs = SlotTensor.from_vec(F, g.column(c)).split(0, C.comul)
        rep.check("twist_comultiplicative", (c,), lhs, d.map(0, g).map(1, g))
        rep.check("counit_twist_invariant", (c,), (C.epsilon(g.column(c)),), (C.counit[c],))
        # h11 h12 h211 h212 h22  vs  a^-1(h1) a^2(h2111) a(h2112) h212 h22
        lhs = d.split(0, C.comul).split(2, C.comul).split(2, C.comul)
        rhs = d.split(1, C.comul).split(1, C.comul).split(1, C.comul)
        rhs = rhs.map(0, gi).map(1, g2).map(2, g)
        rep.check("iterated_coproduct_5", (c,), lhs, rhs)
        # h1 h211 h212 h22  vs  a(h11) a^-1(h12) a^-1(h21) h22
        lhs = d.split(1, C.comul).split(1, C.comul)
        rhs = d.split(0, C.comul).split(2, C.comul).map(0, g).map(1, gi).map(2, gi)
        rep.check("iterated_coproduct_4", (c,), lhs, rhs)
    return rep


def _pair_product(t: SlotTensor, mul) -> SlotTensor:
    """Product in the tensor-square algebra of ``(x1 (x) x2) (x) (y1 (x) y2)``."""
    return t.merge(0, 2, mul).merge(1, 2, mul)


def check_bialgebra_compat(B, report=None, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Delta and eps are Hom-algebra maps (the bialgebra-only identities)."""
    rep = _new_report("bialgebra", report, max_violations)
    rep.declare(*BIALGEBRA_IDENTITIES)
    n, F = B.dim, B.field
    deltas = [_basis_delta(B, i) for i in range(n)]
    P = B.mul.coeffs
    for a in range(n):
        for b in range(n):
            lhs = B.coproduct(P[a][b])
            rhs = _pair_product(deltas[a].outer(deltas[b]), B.mul)
            rep.check("comultiplication_multiplicative", (a, b), lhs, rhs)
            rep.check(
                "counit_multiplicative",
                (a, b),
                (B.epsilon(P[a][b]),),
                (B.counit[a] * B.counit[b],),
            )
    u = SlotTensor.from_vec(F, B.unit)
    rep.check("comultiplication_unit", (), B.coproduct(B.unit), u.outer(u))
    rep.check("counit_unit", (), (B.epsilon(B.unit),), (F.one,))
    return rep


def check_hom_bialgebra(B, report=None, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    rep = _new_report("bialgebra", report, max_violations)
    check_hom_algebra(B, rep)
    check_hom_coalgebra(B, rep)
    check_bialgebra_compat(B, rep)
    return rep


def check_antipode(H, report=None, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Antipode identities and the anti-(co)homomorphism properties."""
    rep = _new_report("hopf", report, max_violations)
    rep.declare(*HOPF_IDENTITIES)
    n = H.dim
    S, alpha = H.antipode, H.alpha
    P = H.mul.coeffs
    for h in range(n):
        rep.check("antipode_commutes_twist", (h,), S(alpha.column(h)), alpha(S.column(h)))
        d = _basis_delta(H, h)
        target = tuple(H.counit[h] * u for u in H.unit)
        left = d.map(0, S).merge(0, 1, H.mul).flat()
        right = d.map(1, S).merge(0, 1, H.mul).flat()
        rep.check("antipode_left", (h,), left, target)
        rep.check("antipode_right", (h,), right, target)
        lhs = H.coproduct(S.column(h))
        rhs = d.map(0, S).map(1, S).swap(0, 1)
        rep.check("antipode_anti_comultiplicative", (h,), lhs, rhs)
        rep.check("counit_antipode", (h,), (H.epsilon(S.column(h)),), (H.counit[h],))
    for a in range(n):
        for b in range(n):
            lhs = S(P[a][b])
            rhs = H.product(S.column(b), S.column(a))
            rep.check("antipode_anti_multiplicative", (a, b), lhs, rhs)
    rep.check("antipode_unit", (), S(H.unit), H.unit)
    return rep


def check_hopf(H, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    """Full chain: algebra, coalgebra, bialgebra compatibility, antipode."""
    rep = AxiomReport("hopf", max_violations=max_violations)
    check_hom_bialgebra(H, rep)
    check_antipode(H, rep)
    return rep


def check_level(H, level: str, max_violations=DEFAULT_MAX_VIOLATIONS) -> AxiomReport:
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; choose from {LEVELS}")
    rep = AxiomReport(level, max_violations=max_violations)
    check_hom_algebra(H, rep)
    if level == "algebra":
        return rep
    check_hom_coalgebra(H, rep)
    if level == "coalgebra":
        return rep
    check_bialgebra_compat(H, rep)
    if level == "bialgebra":
        return rep
    check_antipode(H, rep)
    return rep


# -- antipode solver, dual, opposite -----------------------------------------


def solve_antipode(B: HomBialgebra) -> LinMap:
    """Solve the convolution identities and twist commutation for ``S``.

    Unknowns are the ``n*n`` entries ``S[r][c]`` (coefficient of ``e_r`` in
    ``S(e_c)``); the system is linear and solved exactly.
    """
    n, F = B.dim, B.field
    nv = n * n

    def var(r, c):
        return r * n + c

    rows, rhs = [], []
    P = B.mul.coeffs
    for h in range(n):
        eps = B.counit[h]
        for side in ("left", "right"):
            coeff = [[F.zero] * nv for _ in range(n)]
            for (i, j), nz in B.comul.sparse.items():
                if i != h:
                    continue
                for k, c in nz:
                    # left: S(e_j) e_k ; right: e_j S(e_k)
                    unknown_col = j if side == "left" else k
                    fixed = k if side == "left" else j
                    for r in range(n):
                        prod = P[r][fixed] if side == "left" else P[fixed][r]
                        for t, v in enumerate(prod):
                            if v:
                                coeff[t][var(r, unknown_col)] += c * v
            for t in range(n):
                rows.append(coeff[t])
                rhs.append(eps * B.unit[t])
    A = B.alpha
    for r in range(n):
        for c in range(n):
            row = [F.zero] * nv
            for k in range(n):
                if A.rows[k][c]:
                    row[var(r, k)] += A.rows[k][c]
                if A.rows[r][k]:
                    row[var(k, c)] -= A.rows[r][k]
            rows.append(row)
            rhs.append(F.zero)
    sol, nullity = rank_and_solve(F, rows, rhs)
    if sol is None:
        raise NoAntipode("the antipode equations are inconsistent")
    if nullity:
        raise NonUniqueAntipode(
            f"the antipode equations leave {nullity} degrees of freedom", nullity
        )
    return LinMap(F, tuple(tuple(sol[var(r, c)] for c in range(n)) for r in range(n)))


def dual_hopf(H: HomHopfAlgebra, verify=True) -> HomHopfAlgebra:
    """The dual Hom-Hopf algebra on ``H*`` in the dual basis.

    ``<f g, h> = sum f(h1) g(h2)``, ``Delta(f)(a (x) b) = f(ab)``, unit eps,
    counit evaluation at 1, twist ``(alpha^-1)*``, antipode ``S*``.
    """
    n, F = H.dim, H.field
    mul = StructureTensor.from_function(
        F, (n, n, n), lambda i, j: tuple(H.comul.coeffs[k][i][j] for k in range(n))
    )
    comul = StructureTensor.from_coproducts(
        F, (n, n, n), lambda k: tuple(H.mul.coeffs[i][j][k] for i in range(n) for j in range(n))
    )
    D = HomHopfAlgebra.build(
        F,
        mul,
        H.counit,
        comul,
        H.unit,
        H.alpha_inv.transpose(),
        H.antipode.transpose(),
        basis=tuple(f"{name}*" for name in H.names),
    )
    if verify:
        rep = check_hopf(D)
        if not rep.passed:
            raise DualAxiomFailure("the dual structure fails the Hom-Hopf axioms", rep)
    return D


def opposite_hopf(H: HomHopfAlgebra, verify=True) -> HomHopfAlgebra:
    """``H^op``: flipped multiplication, same coalgebra and twist, antipode ``S^-1``."""
    Sinv = H.antipode_inv
    O = HomHopfAlgebra.build(
        H.field,
        H.mul.flipped(),
        H.unit,
        H.comul,
        H.counit,
        H.alpha,
        Sinv,
        basis=H.basis,
    )
    if verify:
        rep = check_hopf(O)
        if not rep.passed:
            raise OpAxiomFailure("the opposite structure fails the Hom-Hopf axioms", rep)
    return O
