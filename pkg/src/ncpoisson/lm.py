"""The category of linear maps: objects ``ρ: V1 -> V0`` and commuting squares.

Matrices are numpy object arrays holding exact rationals.  Brackets and
multiplications on an object are pairs ``(μ1, μ0)``: ``μ0`` on ``V0 ⊗ V0`` and
``μ1`` on ``V0 ⊗ V1 ⊕ V1 ⊗ V0``, stored as coefficient tensors.

The identity checks only ever combine at most one ``V1`` entry, which is the
degree-1 part of the LM tensor powers, so all laws are evaluated on triples
of basis vectors with at most one entry from level 1.  Infinite objects (the
Poissonization ``Poly(g*) -> S̄(g_Lie)``) are represented behaviourally by
functions on a truncated spanning set; both kinds share the same sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

import numpy as np

from .linear import add_into, as_rational, mono_mul, monomials_up_to, poly_mul
from .loday import Liezation
from .poisson import format_poly, poly_algebra
from .report import Report, guard


class ShapeMismatch(ValueError):
    pass


class NotAMorphism(ValueError):
    pass


def as_matrix(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Exact object-dtype matrix; ``shape`` is needed for empty matrices."""
    arr = np.array(rows, dtype=object)
    if shape is not None:
        if arr.size == 0:
            arr = np.zeros(shape, dtype=object)
        elif arr.shape != shape:
            raise ShapeMismatch(f"expected shape {shape}, got {arr.shape}")
    if arr.ndim != 2:
        raise ShapeMismatch(f"a matrix needs two axes, got shape {arr.shape}")
    flat = [as_rational(x) for x in arr.flat]
    out = np.empty(arr.shape, dtype=object)
    out.flat[:] = flat
    return out


def zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise ShapeMismatch(f"cannot compose {A.shape} with {B.shape}")
    if A.size == 0 or B.size == 0:
        return zeros(A.shape[0], B.shape[1])
    return A @ B


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.size == 0 or B.size == 0:
        return zeros(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])
    return np.kron(A, B)


def block_diag(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = zeros(A.shape[0] + B.shape[0], A.shape[1] + B.shape[1])
    out[:A.shape[0], :A.shape[1]] = A
    out[A.shape[0]:, A.shape[1]:] = B
    return out


def hstack(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[0] != B.shape[0]:
        raise ShapeMismatch("row counts differ")
    out = zeros(A.shape[0], A.shape[1] + B.shape[1])
    out[:, :A.shape[1]] = A
    out[:, A.shape[1]:] = B
    return out


def same_matrix(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and all(a == b for a, b in zip(A.flat, B.flat))


# ============================================================================
# objects and morphisms
# ============================================================================

@dataclass(frozen=True, eq=False)
class LMObject:
    """A linear map ``ρ: V1 -> V0`` given by its ``v0_dim × v1_dim`` matrix."""

    rho: np.ndarray

    @classmethod
    def from_rows(cls, rows, v1_dim: int, v0_dim: int) -> "LMObject":
        return cls(as_matrix(rows, (v0_dim, v1_dim)))

    @classmethod
    def zero(cls, v1_dim: int, v0_dim: int) -> "LMObject":
        return cls(zeros(v0_dim, v1_dim))

    @property
    def v1_dim(self) -> int:
        return self.rho.shape[1]

    @property
    def v0_dim(self) -> int:
        return self.rho.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LMObject):
            return NotImplemented
        return same_matrix(self.rho, other.rho)

    def __hash__(self):
        return hash((self.rho.shape, tuple(self.rho.flat)))

    def apply(self, v: dict) -> dict:
        """``ρ`` on a sparse ``{index: coefficient}`` vector of ``V1``."""
        acc: dict = {}
        for j, c in v.items():
            for i in range(self.v0_dim):
                x = self.rho[i, j]
                if x:
                    acc[i] = acc.get(i, 0) + c * x
        return {k: c for k, c in acc.items() if c}

    def __repr__(self):
        return f"LMObject({self.v1_dim} -> {self.v0_dim})"


@dataclass(frozen=True, eq=False)
class LMMorphism:
    """``(F1, F0)`` with ``ρ' F1 = F0 ρ``; construction fails on a non-commuting square."""

    source: LMObject
    target: LMObject
    f1: np.ndarray
    f0: np.ndarray

    def __post_init__(self):
        s, t = self.source, self.target
        if self.f1.shape != (t.v1_dim, s.v1_dim) or self.f0.shape != (t.v0_dim, s.v0_dim):
            raise ShapeMismatch(
                f"F1 {self.f1.shape}, F0 {self.f0.shape} do not fit {s!r} -> {t!r}")
        if not same_matrix(matmul(t.rho, self.f1), matmul(self.f0, s.rho)):
            raise NotAMorphism("the square rho' F1 = F0 rho does not commute")

    @classmethod
    def identity(cls, obj: LMObject) -> "LMMorphism":
        return cls(obj, obj, identity(obj.v1_dim), identity(obj.v0_dim))

    def compose(self, other: "LMMorphism") -> "LMMorphism":
        """``self ∘ other``."""
        if other.target != self.source:
            raise ShapeMismatch("morphisms are not composable")
        return LMMorphism(other.source, self.target,
                          matmul(self.f1, other.f1), matmul(self.f0, other.f0))

    def __eq__(self, other):
        if not isinstance(other, LMMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and same_matrix(self.f1, other.f1) and same_matrix(self.f0, other.f0))

    __hash__ = None


def lm_tensor_object(a: LMObject, b: LMObject) -> LMObject:
    """``ρ ⊗ 1 + 1 ⊗ ρ'`` on ``V1 ⊗ V0' ⊕ V0 ⊗ V1'``."""
    return LMObject(hstack(kron(a.rho, identity(b.v0_dim)), kron(identity(a.v0_dim), b.rho)))


def lm_tensor_morphism(F: LMMorphism, G: LMMorphism) -> LMMorphism:
    """``(F1 ⊗ G0 ⊕ F0 ⊗ G1, F0 ⊗ G0)``; the square is re-checked on construction."""
    return LMMorphism(
        lm_tensor_object(F.source, G.source),
        lm_tensor_object(F.target, G.target),
        block_diag(kron(F.f1, G.f0), kron(F.f0, G.f1)),
        kron(F.f0, G.f0),
    )


# ============================================================================
# brackets and multiplications
# ============================================================================

def _tensor_table(T: np.ndarray) -> dict:
    """``{(i, j): {k: c}}`` from a coefficient tensor ``T[i, j, k]``."""
    out: dict = {}
    for i, j, k in product(*(range(n) for n in T.shape)):
        c = T[i, j, k]
        if c:
            out.setdefault((i, j), {})[k] = as_rational(c)
    return out


def _as_tensor(T, shape) -> np.ndarray:
    arr = np.array(T, dtype=object) if not isinstance(T, np.ndarray) else T
    if arr.size == 0:
        arr = np.zeros(shape, dtype=object)
    if arr.shape != shape:
        raise ShapeMismatch(f"expected tensor shape {shape}, got {arr.shape}")
    out = np.empty(shape, dtype=object)
    out.flat[:] = [as_rational(x) for x in arr.flat]
    return out


class LMBracket:
    """Pair ``(μ1, μ0)`` of bilinear maps on ``ρ: V1 -> V0``.

    ``mu0[a, b, c]`` is the coefficient of ``e_c`` in ``μ0(e_a, e_b)``,
    ``mu1_left[a, y, z]`` that of ``f_z`` in ``μ1(e_a ⊗ f_y)`` and
    ``mu1_right[y, a, z]`` that of ``f_z`` in ``μ1(f_y ⊗ e_a)``.
    """

    def __init__(self, obj: LMObject, mu0, mu1_left, mu1_right):
        d0, d1 = obj.v0_dim, obj.v1_dim
        self.obj = obj
        self.mu0 = _as_tensor(mu0, (d0, d0, d0))
        self.mu1_left = _as_tensor(mu1_left, (d0, d1, d1))
        self.mu1_right = _as_tensor(mu1_right, (d1, d0, d1))
        self._tables = {
            (0, 0): _tensor_table(self.mu0),
            (0, 1): _tensor_table(self.mu1_left),
            (1, 0): _tensor_table(self.mu1_right),
        }

    def apply(self, x: dict, lx: int, y: dict, ly: int) -> dict:
        table = self._tables[(lx, ly)]
        acc: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                add_into(acc, table.get((i, j), {}), a * b)
        return acc


class FiniteCarrier:
    """Adapter exposing a matrix object to the generic sweeps."""

    def __init__(self, obj: LMObject, names0=None, names1=None):
        self.obj = obj
        self.names = {0: names0 or [f"e{i}" for i in range(obj.v0_dim)],
                      1: names1 or [f"f{i}" for i in range(obj.v1_dim)]}

    def basis(self, level: int) -> list[dict]:
        n = self.obj.v0_dim if level == 0 else self.obj.v1_dim
        return [{i: 1} for i in range(n)]

    def rho(self, v: dict) -> dict:
        return self.obj.apply(v)

    def format(self, v: dict, level: int) -> str:
        if not v:
            return "0"
        return " + ".join(f"{c}*{self.names[level][i]}" for i, c in sorted(v.items()))


def _rho_at(carrier, v: dict, level: int) -> dict:
    return carrier.rho(v) if level == 1 else v


def _combine(*parts) -> dict:
    acc: dict = {}
    for c, v in parts:
        add_into(acc, v, c)
    return acc


def _triples(carrier):
    """Basis triples with at most one level-1 entry, as ``((vec, level), ...)``."""
    b0 = [(v, 0) for v in carrier.basis(0)]
    b1 = [(v, 1) for v in carrier.basis(1)]
    yield from product(b0, b0, b0)
    for pos in range(3):
        for rest in product(b0, b0):
            for one in b1:
                t = list(rest)
                t.insert(pos, one)
                yield tuple(t)


def _pairs(carrier):
    b0 = [(v, 0) for v in carrier.basis(0)]
    b1 = [(v, 1) for v in carrier.basis(1)]
    yield from product(b0, b0)
    yield from product(b0, b1)
    yield from product(b1, b0)


def _lie_laws(carrier, br, report: Report) -> Report:
    mu = br.apply
    fmt = lambda vl: carrier.format(*vl)

    for (x, lx), (y, ly) in _pairs(carrier):
        w = (fmt((x, lx)), fmt((y, ly)))
        report.check("mu(21) = -mu", w, mu(x, lx, y, ly), _combine((-1, mu(y, ly, x, lx))))
        report.check("rho mu = mu (rho ⊗ rho)", w,
                     _rho_at(carrier, mu(x, lx, y, ly), max(lx, ly)),
                     mu(_rho_at(carrier, x, lx), 0, _rho_at(carrier, y, ly), 0))
    for (x, lx), (y, ly), (z, lz) in _triples(carrier):
        w = (fmt((x, lx)), fmt((y, ly)), fmt((z, lz)))
        lhs = mu(x, lx, mu(y, ly, z, lz), max(ly, lz))
        rhs = _combine((1, mu(mu(x, lx, y, ly), max(lx, ly), z, lz)),
                       (1, mu(y, ly, mu(x, lx, z, lz), max(lx, lz))))
        report.check("mu(1⊗mu) = mu(mu⊗1) + mu(1⊗mu)(213)", w, lhs, rhs)
    b1 = carrier.basis(1)
    for x in b1:
        for y in b1:
            rx = carrier.rho(x)
            report.check("rho[rho x, y] = [rho x, rho y]", (fmt((x, 1)), fmt((y, 1))),
                         carrier.rho(mu(rx, 0, y, 1)), mu(rx, 0, carrier.rho(y), 0))
    return report


def check_lie_object(obj: LMObject, br: LMBracket, carrier=None) -> Report:
    """Skewsymmetry, Jacobi, equivariance and the induced Loday bracket."""
    carrier = carrier or FiniteCarrier(obj)
    report = _lie_laws(carrier, br, Report("lieobject"))
    b1 = carrier.basis(1)
    lod = lambda x, y: br.apply(carrier.rho(x), 0, y, 1)
    for x in b1:
        for y in b1:
            xy = lod(x, y)
            for z in b1:
                lhs = lod(x, lod(y, z))
                rhs = _combine((1, lod(xy, z)), (1, lod(y, lod(x, z))))
                report.check("[x,[y,z]]_Lod = [[x,y],z]_Lod + [y,[x,z]]_Lod",
                             tuple(carrier.format(v, 1) for v in (x, y, z)), lhs, rhs)
    return report


def liezation_object(liez: Liezation) -> tuple[LMObject, LMBracket, FiniteCarrier]:
    """``g -> g_Lie`` with ``μ0`` the Lie bracket and ``μ1`` the two-sided action.

    ``μ1(ā ⊗ y) = [a, y]`` and ``μ1(y ⊗ ā) = -[a, y]``.
    """
    A = liez.parent
    q, n = liez.quotient_dim, A.dim
    rho = zeros(q, n)
    for j, v in enumerate(liez.projection):
        for a, c in v.items():
            rho[a, j] = c
    mu0 = np.zeros((q, q, q), dtype=object)
    for (a, b), v in liez.lie_c.items():
        for c, x in v.items():
            mu0[a, b, c] = x
    left = np.zeros((q, n, n), dtype=object)
    right = np.zeros((n, q, n), dtype=object)
    for (a, j), v in liez.action_c.items():
        for k, x in v.items():
            left[a, j, k] = x
            right[j, a, k] = -x
    obj = LMObject(rho)
    carrier = FiniteCarrier(obj, list(liez.quotient_names), list(A.names))
    return obj, LMBracket(obj, mu0, left, right), carrier


# ============================================================================
# Poisson objects
# ============================================================================

class FunctionalPair:
    """Behavioural ``(μ1, μ0)``: one function per level pattern ``(0,0)``, ``(0,1)``, ``(1,0)``."""

    def __init__(self, functions: dict[tuple[int, int], Callable[[dict, dict], dict]]):
        self.functions = functions

    def apply(self, x: dict, lx: int, y: dict, ly: int) -> dict:
        return self.functions[(lx, ly)](x, y)


class PoissonizationCarrier:
    """``Poly(g*) -> S̄(g_Lie)`` truncated to spanning elements of degree ``<= max_degree``."""

    def __init__(self, liez: Liezation, max_degree: int):
        self.alg = poly_algebra(liez)
        self.max_degree = max_degree

    def basis(self, level: int) -> list[dict]:
        if level == 0:
            return [{m: 1} for m in monomials_up_to(self.alg.liez.quotient_dim, self.max_degree, 1)]
        return [{k: 1} for k in self.alg.spanning(self.max_degree)]

    def rho(self, v: dict) -> dict:
        acc: dict = {}
        for (m, j), c in v.items():
            add_into(acc, self.alg.times_bar(m, j), c)
        return acc

    def format(self, v: dict, level: int) -> str:
        if level == 0:
            return format_poly(v, self.alg.qnames)
        return self.alg.format(self.alg._wrap(v))


def _module_mul(F: dict, q: dict) -> dict:
    acc: dict = {}
    for m, a in F.items():
        for (g, y), b in q.items():
            key = (mono_mul(m, g), y)
            acc[key] = acc.get(key, 0) + a * b
    return {k: c for k, c in acc.items() if c}


def poissonization_object(liez: Liezation, max_degree: int = 2):
    """Behavioural ``(carrier, μ, ν)`` for the Poissonization of ``Poly(g*)``."""
    guard(max_degree, 3)
    carrier = PoissonizationCarrier(liez, max_degree)
    alg = carrier.alg
    neg = lambda d: {k: -c for k, c in d.items()}
    mu = FunctionalPair({
        (0, 0): alg.lp,
        (0, 1): alg.action_terms,
        (1, 0): lambda q, F: neg(alg.action_terms(F, q)),
    })
    nu = FunctionalPair({
        (0, 0): poly_mul,
        (0, 1): _module_mul,
        (1, 0): lambda q, F: _module_mul(F, q),
    })
    return carrier, mu, nu


def check_poisson_object(carrier, br, mult, max_degree: int | None = None) -> Report:
    """Commutative associative ``ν``, Lie laws for ``μ`` and the distributive law.

    ``carrier`` is an :class:`LMObject` (with matrix ``br``/``mult``) or a
    behavioural carrier from :func:`poissonization_object`; ``max_degree`` only
    applies to the latter and must match its truncation.
    """
    if isinstance(carrier, LMObject):
        carrier = FiniteCarrier(carrier)
    elif max_degree is not None:
        guard(max_degree, 3)
        if getattr(carrier, "max_degree", max_degree) != max_degree:
            raise ValueError("max_degree differs from the carrier's truncation")
    report = _lie_laws(carrier, br, Report("poissonobject"))
    nu, mu = mult.apply, br.apply
    fmt = lambda vl: carrier.format(*vl)
    for (x, lx), (y, ly) in _pairs(carrier):
        w = (fmt((x, lx)), fmt((y, ly)))
        report.check("nu(21) = nu", w, nu(x, lx, y, ly), nu(y, ly, x, lx))
        report.check("rho nu = nu (rho ⊗ rho)", w,
                     _rho_at(carrier, nu(x, lx, y, ly), max(lx, ly)),
                     nu(_rho_at(carrier, x, lx), 0, _rho_at(carrier, y, ly), 0))
    for (x, lx), (y, ly), (z, lz) in _triples(carrier):
        w = (fmt((x, lx)), fmt((y, ly)), fmt((z, lz)))
        lxy, lyz, lxz = max(lx, ly), max(ly, lz), max(lx, lz)
        report.check("nu(nu⊗1) = nu(1⊗nu)", w,
                     nu(nu(x, lx, y, ly), lxy, z, lz), nu(x, lx, nu(y, ly, z, lz), lyz))
        lhs = mu(nu(x, lx, y, ly), lxy, z, lz)
        rhs = _combine((1, nu(x, lx, mu(y, ly, z, lz), lyz)),
                       (1, nu(y, ly, mu(x, lx, z, lz), lxz)))
        report.check("mu(nu⊗1) = nu(1⊗mu) + nu(1⊗mu)(213)", w, lhs, rhs)
    return report


def check_induced_dual_prepoisson(liez: Liezation, max_degree: int = 2) -> Report:
    """``ν(ρx, y)`` and ``μ(ρx, y)`` on level 1 are the perm product and the bracket of ``Poly(g*)``."""
    carrier, mu, nu = poissonization_object(liez, max_degree)
    alg = carrier.alg
    report = Report("induced-products")
    for p in alg.spanning(max_degree):
        rp = carrier.rho({p: 1})
        for q in alg.spanning(max_degree):
            w = (alg.format_key(p), alg.format_key(q))
            report.check("nu(rho p, q) = p * q", w, nu.apply(rp, 0, {q: 1}, 1), alg._prod(p, q))
            report.check("mu(rho p, q) = {p, q}", w, mu.apply(rp, 0, {q: 1}, 1), alg._br(p, q))
    return report
