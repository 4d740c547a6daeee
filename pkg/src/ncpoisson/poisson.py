"""The Loday-Poisson algebra ``Poly(g*) = S(g_Lie) ⊗ g`` and its graded variant.

Keys of an ungraded element are ``(CommMonomial, j)`` meaning ``f ⊗ e_j`` with
``f`` a monomial in the quotient generators.  The products are

    (f ⊗ x) * (g ⊗ y) = f x̄ g ⊗ y
    {f ⊗ x, g ⊗ y}    = {f x̄, g ⊗ y}
    {F, g ⊗ y}        = {F, g} ⊗ y + g {F, y}
    {x̄1 ... x̄n, y}    = sum_i x̄1 ... x̂i ... x̄n ⊗ [x_i, y]

with ``{F, g}`` the Lie-Poisson bracket on ``S(g_Lie)``.

The graded algebra ``Λ(g_Lie) ⊗ ↑g`` has keys ``(ExtMonomial, j)`` of degree
``len(F) + 1``, a bracket of degree -1 and Koszul signs:

    {F, G ⊗ y}          = {F, G} ⊗ y + (-1)^((|F|+1)|G|) G ^ {F, y}
    {x̄1 ^ ... ^ x̄k, y}  = sum_i (-1)^(k-i) x̄1 ^ ... x̂i ... ^ x̄k ⊗ [x_i, y]

where ``{F, G}`` is the Schouten-Nijenhuis bracket on ``Λ(g_Lie)``.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Mapping, Protocol, Sequence

from .linear import (
    EXT_ONE,
    ONE,
    Combination,
    CommMonomial,
    CommPoly,
    ExtMonomial,
    ExtPoly,
    add_into,
    ext_mul,
    ext_sort,
    format_term,
    join_terms,
    mono_mul,
    monomials_up_to,
    ext_monomials_up_to,
)
from .loday import Liezation
from .report import Report, guard


class LiezationMismatch(TypeError):
    pass


class NotAHomomorphism(ValueError):
    def __init__(self, pair, lhs, rhs):
        self.pair = pair
        super().__init__(f"phi[{pair[0]}, {pair[1]}] = {lhs} but {{phi x, phi y}} = {rhs}")


def _distinct(m: tuple):
    """``(variable, multiplicity, monomial with one copy removed)`` for each variable."""
    out = []
    i = 0
    n = len(m)
    while i < n:
        v = m[i]
        j = i
        while j < n and m[j] == v:
            j += 1
        out.append((v, j - i, CommMonomial(m[:i] + m[i + 1:])))
        i = j
    return out


def render_mono(m: tuple, names: Sequence[str], sep: str) -> str:
    return sep.join(names[v] for v in m)


class _Ring:
    """Shared plumbing: per-Liezation structure tables as plain dicts."""

    def __init__(self, liez: Liezation):
        self.liez = liez
        self.parent = liez.parent
        self.qnames = liez.quotient_names
        self.names = liez.parent.names
        self.proj = [dict(v.items()) for v in liez.projection]
        self.lie = {ab: dict(v.items()) for ab, v in liez.lie_c.items()}
        self.act = {aj: dict(v.items()) for aj, v in liez.action_c.items()}
        self.base = {ij: dict(v.items()) for ij, v in liez.parent.structure().items()}


# ============================================================================
# ungraded
# ============================================================================

class PolyElement(Combination):
    """Element of ``Poly(g*)``; ``*`` is the perm product."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: "LodayPoissonAlgebra", terms=None):
        super().__init__(terms)
        self.algebra = algebra
        for key in self._terms:
            algebra._validate_key(key)

    def _spawn(self, terms):
        new = Combination._spawn(self, terms)
        new.algebra = self.algebra
        return new

    def _check_compatible(self, other):
        super()._check_compatible(other)
        if other.algebra is not self.algebra:
            raise LiezationMismatch("elements of different Loday-Poisson algebras")

    def _same_context(self, other):
        return other.algebra is self.algebra

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _key_order(key):
        m, j = key
        return (m.grlex_key(), j)

    def __mul__(self, other):
        if isinstance(other, PolyElement):
            return perm_product(self, other)
        return super().__mul__(other)

    def bracket(self, other: "PolyElement") -> "PolyElement":
        return lp_bracket(self, other)

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"PolyElement({self})"


class LodayPoissonAlgebra(_Ring):
    """``Poly(g*)`` for a Liezation, with cached key-level operations."""

    symbol_sep = "."

    def __init__(self, liez: Liezation):
        super().__init__(liez)
        self._lp_mono = lru_cache(maxsize=None)(self._lp_mono_raw)
        self._act_mono = lru_cache(maxsize=None)(self._act_mono_raw)
        self._action = lru_cache(maxsize=None)(self._action_raw)
        self._prod = lru_cache(maxsize=None)(self._prod_raw)
        self._br = lru_cache(maxsize=None)(self._br_raw)

    # -- construction ---------------------------------------------------------
    def _validate_key(self, key):
        m, j = key
        if type(m) is not CommMonomial or not (0 <= j < self.parent.dim):
            raise ValueError(f"bad Poly key {key!r}")
        if m and not (0 <= m[-1] < self.liez.quotient_dim and m[0] >= 0):
            raise ValueError(f"quotient variable out of range in {key!r}")

    def element(self, terms) -> PolyElement:
        return PolyElement(self, terms)

    def _wrap(self, terms: dict) -> PolyElement:
        new = object.__new__(PolyElement)
        new._terms = terms
        new.algebra = self
        return new

    def zero(self) -> PolyElement:
        return self._wrap({})

    def generator(self, j: int) -> PolyElement:
        """``1 ⊗ e_j``."""
        return self._wrap({(ONE, j): 1})

    def tensor(self, f: CommPoly | Mapping, j: int) -> PolyElement:
        """``f ⊗ e_j`` for a polynomial ``f`` in the quotient generators."""
        return PolyElement(self, {(CommMonomial(m), j): c for m, c in f.items()})

    def include(self, v) -> PolyElement:
        """Image of a vector of ``g`` under ``x -> 1 ⊗ x``."""
        return self._wrap({(ONE, j): c for j, c in v.items()})

    def basis_key(self, key) -> PolyElement:
        return self._wrap({key: 1})

    def spanning(self, max_degree: int) -> list[tuple]:
        """Keys ``(m, j)`` with ``deg m <= max_degree``."""
        return [(m, j) for m in monomials_up_to(self.liez.quotient_dim, max_degree)
                for j in range(self.parent.dim)]

    # -- Lie-Poisson structure on S(g_Lie) -------------------------------------
    def _lp_mono_raw(self, m1: tuple, m2: tuple) -> dict:
        acc: dict = {}
        lie = self.lie
        for a, ea, r1 in _distinct(m1):
            for b, eb, r2 in _distinct(m2):
                w = lie.get((a, b))
                if not w:
                    continue
                base = mono_mul(r1, r2)
                for k, c in w.items():
                    mk = mono_mul(base, (k,))
                    acc[mk] = acc.get(mk, 0) + ea * eb * c
        return {m: c for m, c in acc.items() if c}

    def lp(self, f: Mapping, g: Mapping) -> dict:
        """Lie-Poisson bracket of two commutative polynomials (as dicts)."""
        acc: dict = {}
        for m1, a in f.items():
            for m2, b in g.items():
                add_into(acc, self._lp_mono(m1, m2), a * b)
        return acc

    def project_vector(self, j: int) -> dict:
        return self.proj[j]

    def times_bar(self, m: tuple, j: int) -> dict:
        """``m x̄_j`` as a polynomial dict."""
        return {mono_mul(m, (v,)): c for v, c in self.proj[j].items()}

    # -- key-level products ----------------------------------------------------
    def _act_mono_raw(self, m: tuple, y: int) -> dict:
        """``{m, y}``: the deleted-variable sum against the action."""
        acc: dict = {}
        act = self.act
        for a, ea, rest in _distinct(m):
            w = act.get((a, y))
            if not w:
                continue
            for k, c in w.items():
                key = (rest, k)
                acc[key] = acc.get(key, 0) + ea * c
        return {k: c for k, c in acc.items() if c}

    def _action_raw(self, m: tuple, g: tuple, y: int) -> dict:
        """``{m, g ⊗ y} = {m, g} ⊗ y + g {m, y}``."""
        acc: dict = {}
        for mm, c in self._lp_mono(m, g).items():
            acc[(mm, y)] = c
        for (r, k), c in self._act_mono(m, y).items():
            key = (mono_mul(g, r), k)
            v = acc.get(key, 0) + c
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return acc

    def _prod_raw(self, p: tuple, q: tuple) -> dict:
        (f, x), (g, y) = p, q
        acc: dict = {}
        for v, c in self.proj[x].items():
            key = (mono_mul(mono_mul(f, (v,)), g), y)
            acc[key] = acc.get(key, 0) + c
        return {k: c for k, c in acc.items() if c}

    def _br_raw(self, p: tuple, q: tuple) -> dict:
        (f, x), (g, y) = p, q
        acc: dict = {}
        for v, c in self.proj[x].items():
            add_into(acc, self._action(mono_mul(f, (v,)), g, y), c)
        return acc

    def product_terms(self, P: Mapping, Q: Mapping) -> dict:
        return _bilinear(self._prod, P, Q)

    def bracket_terms(self, P: Mapping, Q: Mapping) -> dict:
        return _bilinear(self._br, P, Q)

    def action_terms(self, F: Mapping, Q: Mapping) -> dict:
        """``{F, q}`` for ``F`` in ``S(g_Lie)`` (dict) and ``q`` in ``Poly(g*)``."""
        acc: dict = {}
        for m, a in F.items():
            for (g, y), b in Q.items():
                add_into(acc, self._action(m, g, y), a * b)
        return acc

    # -- public operations -------------------------------------------------------
    def product(self, p: PolyElement, q: PolyElement) -> PolyElement:
        return perm_product(p, q)

    def bracket(self, p: PolyElement, q: PolyElement) -> PolyElement:
        return lp_bracket(p, q)

    def format_key(self, key) -> str:
        m, j = key
        return join_terms([format_term(1, [render_mono(m, self.qnames, ".")], f" @ {self.names[j]}")])

    def format(self, p: Combination) -> str:
        return join_terms(
            format_term(c, [render_mono(m, self.qnames, self.symbol_sep)], f" @ {self.names[j]}")
            for (m, j), c in p.sorted_items()
        )

    def format_poly(self, f: Mapping) -> str:
        return format_poly(f, self.qnames)


def format_poly(f: Mapping, qnames, sep: str = ".") -> str:
    items = sorted(f.items(), key=lambda kv: kv[0].grlex_key())
    return join_terms(format_term(c, [render_mono(m, qnames, sep)]) for m, c in items)


def _bilinear(fn: Callable, P: Mapping, Q: Mapping) -> dict:
    acc: dict = {}
    for p, a in P.items():
        for q, b in Q.items():
            add_into(acc, fn(p, q), a * b)
    return acc


def _same(p: Combination, q: Combination):
    if type(p) is not type(q):
        raise TypeError(f"cannot combine {type(p).__name__} with {type(q).__name__}")
    if p.algebra is not q.algebra:
        raise LiezationMismatch("operands belong to different Liezations")
    return p.algebra


@lru_cache(maxsize=None)
def _poly_algebra(liez: Liezation) -> LodayPoissonAlgebra:
    return LodayPoissonAlgebra(liez)


def poly_algebra(liez: Liezation) -> LodayPoissonAlgebra:
    """The (cached) ``Poly(g*)`` attached to ``liez``."""
    return _poly_algebra(liez)


def perm_product(p: PolyElement, q: PolyElement) -> PolyElement:
    alg = _same(p, q)
    return alg._wrap(alg.product_terms(p._terms, q._terms))


def lp_bracket(p: PolyElement, q: PolyElement) -> PolyElement:
    alg = _same(p, q)
    return alg._wrap(alg.bracket_terms(p._terms, q._terms))


# -- Poissonization -------------------------------------------------------------

class PoissonElement(Combination):
    """Element of the non-unital Lie-Poisson algebra ``S̄(g_Lie)``."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: LodayPoissonAlgebra, terms=None):
        super().__init__(terms)
        self.algebra = algebra
        for m in self._terms:
            if type(m) is not CommMonomial or not m:
                raise ValueError(f"Poisson elements have no constant term: {m!r}")

    def _spawn(self, terms):
        new = Combination._spawn(self, terms)
        new.algebra = self.algebra
        return new

    def _same_context(self, other):
        return other.algebra is self.algebra

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _key_order(m):
        return m.grlex_key()

    def __mul__(self, other):
        if isinstance(other, PoissonElement):
            from .linear import poly_mul
            return self._spawn(poly_mul(self._terms, other._terms))
        return super().__mul__(other)

    def bracket(self, other: "PoissonElement") -> "PoissonElement":
        return self._spawn(self.algebra.lp(self._terms, other._terms))

    def __str__(self):
        return format_poly(self._terms, self.algebra.qnames)


def _poissonize_terms(alg: LodayPoissonAlgebra, terms: Mapping) -> dict:
    acc: dict = {}
    for (m, j), c in terms.items():
        add_into(acc, alg.times_bar(m, j), c)
    return acc


def poissonization(p: PolyElement) -> PoissonElement:
    """``f ⊗ x -> f x̄``."""
    alg = p.algebra
    out = object.__new__(PoissonElement)
    out._terms = _poissonize_terms(alg, p._terms)
    out.algebra = alg
    return out


# ============================================================================
# graded: Λ(g_Lie) ⊗ ↑g
# ============================================================================

class GradedElement(Combination):
    """Element of ``Λ(g_Lie) ⊗ ↑g``; ``*`` is the graded perm product."""

    __slots__ = ("algebra",)

    def __init__(self, algebra: "GradedLodayPoissonAlgebra", terms=None):
        super().__init__(terms)
        self.algebra = algebra
        for m, j in self._terms:
            if type(m) is not ExtMonomial or not 0 <= j < algebra.parent.dim:
                raise ValueError(f"bad graded key {(m, j)!r}")

    def _spawn(self, terms):
        new = Combination._spawn(self, terms)
        new.algebra = self.algebra
        return new

    def _check_compatible(self, other):
        super()._check_compatible(other)
        if other.algebra is not self.algebra:
            raise LiezationMismatch("elements of different graded algebras")

    def _same_context(self, other):
        return other.algebra is self.algebra

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _key_order(key):
        m, j = key
        return (m.grlex_key(), j)

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return graded_perm_product(self, other)
        return super().__mul__(other)

    def bracket(self, other):
        return graded_bracket(self, other)

    def degrees(self) -> set[int]:
        return {len(m) + 1 for m, _ in self._terms}

    def __str__(self):
        return self.algebra.format(self)

    def __repr__(self):
        return f"GradedElement({self})"


def key_degree(key) -> int:
    return len(key[0]) + 1


class GradedLodayPoissonAlgebra(_Ring):
    """``Λ(g_Lie) ⊗ ↑g`` carrying the noncommutative Schouten-Nijenhuis bracket."""

    def __init__(self, liez: Liezation):
        super().__init__(liez)
        self._sn_mono = lru_cache(maxsize=None)(self._sn_mono_raw)
        self._act_mono = lru_cache(maxsize=None)(self._act_mono_raw)
        self._action = lru_cache(maxsize=None)(self._action_raw)
        self._prod = lru_cache(maxsize=None)(self._prod_raw)
        self._br = lru_cache(maxsize=None)(self._br_raw)

    def _wrap(self, terms: dict) -> GradedElement:
        new = object.__new__(GradedElement)
        new._terms = terms
        new.algebra = self
        return new

    def element(self, terms) -> GradedElement:
        return GradedElement(self, terms)

    def zero(self) -> GradedElement:
        return self._wrap({})

    def generator(self, j: int) -> GradedElement:
        return self._wrap({(EXT_ONE, j): 1})

    def tensor(self, F: ExtPoly | Mapping, j: int) -> GradedElement:
        return GradedElement(self, {(ExtMonomial(m), j): c for m, c in F.items()})

    def include(self, v) -> GradedElement:
        return self._wrap({(EXT_ONE, j): c for j, c in v.items()})

    def basis_key(self, key) -> GradedElement:
        return self._wrap({key: 1})

    def spanning(self, max_degree: int) -> list[tuple]:
        """Keys with exterior degree ``<= max_degree``."""
        return [(m, j) for m in ext_monomials_up_to(self.liez.quotient_dim, max_degree)
                for j in range(self.parent.dim)]

    # -- Schouten-Nijenhuis bracket on Λ(g_Lie) ---------------------------------
    def ad(self, b: int, F: tuple) -> dict:
        """``ad(ē_b)`` extended to ``Λ(g_Lie)`` as a derivation, no signs."""
        acc: dict = {}
        lie = self.lie
        for i, f in enumerate(F):
            w = lie.get((b, f))
            if not w:
                continue
            for k, c in w.items():
                s, m = ext_sort(F[:i] + (k,) + F[i + 1:])
                if s:
                    acc[m] = acc.get(m, 0) + s * c
        return {m: c for m, c in acc.items() if c}

    def _sn_mono_raw(self, F: tuple, G: tuple) -> dict:
        # {F, G} = sum_j (-1)^((|F|+1)(j-1)) g1..g_{j-1} ^ {F, g_j} ^ g_{j+1}..g_l,
        # {F, g} = -ad(g)(F)
        acc: dict = {}
        k = len(F)
        for j, g in enumerate(G):
            sign = -1 if ((k + 1) * j) & 1 else 1
            for m, c in self.ad(g, F).items():
                s, mm = ext_sort(G[:j] + m + G[j + 1:])
                if s:
                    acc[mm] = acc.get(mm, 0) - sign * s * c
        return {m: c for m, c in acc.items() if c}

    def sn(self, F: Mapping, G: Mapping) -> dict:
        acc: dict = {}
        for m1, a in F.items():
            for m2, b in G.items():
                add_into(acc, self._sn_mono(m1, m2), a * b)
        return acc

    # -- key-level operations ----------------------------------------------------
    def _act_mono_raw(self, F: tuple, y: int) -> dict:
        acc: dict = {}
        k = len(F)
        act = self.act
        for i, f in enumerate(F):
            w = act.get((f, y))
            if not w:
                continue
            sign = -1 if (k - 1 - i) & 1 else 1
            rest = ExtMonomial(F[:i] + F[i + 1:])
            for z, c in w.items():
                key = (rest, z)
                acc[key] = acc.get(key, 0) + sign * c
        return {kk: c for kk, c in acc.items() if c}

    def _action_raw(self, F: tuple, G: tuple, y: int) -> dict:
        acc: dict = {}
        for m, c in self._sn_mono(F, G).items():
            acc[(m, y)] = c
        sign = -1 if ((len(F) + 1) * len(G)) & 1 else 1
        for (r, z), c in self._act_mono(F, y).items():
            s, m = ext_mul(G, r)
            if s:
                key = (m, z)
                v = acc.get(key, 0) + sign * s * c
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return acc

    def _prod_raw(self, p: tuple, q: tuple) -> dict:
        (F, x), (G, y) = p, q
        acc: dict = {}
        for v, c in self.proj[x].items():
            s1, m1 = ext_mul(F, (v,))
            if not s1:
                continue
            s2, m2 = ext_mul(m1, G)
            if s2:
                key = (m2, y)
                acc[key] = acc.get(key, 0) + s1 * s2 * c
        return {k: c for k, c in acc.items() if c}

    def _br_raw(self, p: tuple, q: tuple) -> dict:
        (F, x), (G, y) = p, q
        acc: dict = {}
        for v, c in self.proj[x].items():
            s, m = ext_mul(F, (v,))
            if s:
                add_into(acc, self._action(m, G, y), s * c)
        return acc

    def product_terms(self, P, Q) -> dict:
        return _bilinear(self._prod, P, Q)

    def bracket_terms(self, P, Q) -> dict:
        return _bilinear(self._br, P, Q)

    def format(self, p: Combination) -> str:
        return join_terms(
            format_term(c, [render_mono(m, self.qnames, "^")], f" @ {self.names[j]}")
            for (m, j), c in p.sorted_items()
        )

    def format_key(self, key) -> str:
        m, j = key
        return join_terms([format_term(1, [render_mono(m, self.qnames, "^")], f" @ {self.names[j]}")])


@lru_cache(maxsize=None)
def _graded_algebra(liez: Liezation) -> GradedLodayPoissonAlgebra:
    return GradedLodayPoissonAlgebra(liez)


def graded_algebra(liez: Liezation) -> GradedLodayPoissonAlgebra:
    return _graded_algebra(liez)


def graded_perm_product(p: GradedElement, q: GradedElement) -> GradedElement:
    alg = _same(p, q)
    return alg._wrap(alg.product_terms(p._terms, q._terms))


def graded_bracket(p: GradedElement, q: GradedElement) -> GradedElement:
    alg = _same(p, q)
    return alg._wrap(alg.bracket_terms(p._terms, q._terms))


# ============================================================================
# exhaustive checks
# ============================================================================

def _sweep_dpp(alg, keys, report: Report, signed=None) -> Report:
    """Dual-prePoisson axioms, perm law, associativity and Leibniz on all triples.

    ``signed(p, q, r)`` returns the four Koszul signs ``(e1, e2, e3, e4)`` used by
    dpp1, dpp2, dpp3/Leibniz and the perm law; ``None`` means all ``+1``.
    """
    prod, br = alg._prod, alg._br
    n = len(keys)
    P = [[prod(keys[i], keys[j]) for j in range(n)] for i in range(n)]
    B = [[br(keys[i], keys[j]) for j in range(n)] for i in range(n)]
    fmt = alg.format_key

    def left(fn, D, k):  # D (dict) combined with a basis key k on the right
        acc: dict = {}
        for t, c in D.items():
            add_into(acc, fn(t, k), c)
        return acc

    def right(fn, k, D):
        acc: dict = {}
        for t, c in D.items():
            add_into(acc, fn(k, t), c)
        return acc

    def lin(*parts):
        acc: dict = {}
        for s, D in parts:
            add_into(acc, D, s)
        return acc

    for i, x in enumerate(keys):
        Px, Bx = P[i], B[i]
        for j, y in enumerate(keys):
            Pxy, Pyx, Bxy, Byx = Px[j], P[j][i], Bx[j], B[j][i]
            Py, By = P[j], B[j]
            for k, z in enumerate(keys):
                e1 = e2 = e3 = e4 = 1
                if signed is not None:
                    e1, e2, e3, e4 = signed(x, y, z)
                w = (x, y, z)
                Bxz = Bx[k]
                # Leibniz
                lhs = right(br, x, By[k])
                rhs = lin((1, left(br, Bxy, z)), (e3, right(br, y, Bxz)))
                _record(report, "Leibniz", w, lhs, rhs, fmt, alg)
                # dpp1 {x, y*z} = {x,y}*z + e1 y*{x,z}
                lhs = right(br, x, Py[k])
                rhs = lin((1, left(prod, Bxy, z)), (e1, right(prod, y, Bxz)))
                _record(report, "dpp1", w, lhs, rhs, fmt, alg)
                # dpp2 {x*y, z} = x*{y,z} + e2 y*{x,z}
                lhs = left(br, Pxy, z)
                rhs = lin((1, right(prod, x, By[k])), (e2, right(prod, y, Bxz)))
                _record(report, "dpp2", w, lhs, rhs, fmt, alg)
                # dpp3 {x,y}*z = -e3 {y,x}*z
                lhs = left(prod, Bxy, z)
                rhs = lin((-e3, left(prod, Byx, z)))
                _record(report, "dpp3", w, lhs, rhs, fmt, alg)
                # perm law and associativity
                lhs = left(prod, Pxy, z)
                _record(report, "perm", w, lhs, lin((e4, left(prod, Pyx, z))), fmt, alg)
                _record(report, "associativity", w, lhs, right(prod, x, Py[k]), fmt, alg)
    return report


def _record(report: Report, identity, witness, lhs, rhs, fmt, alg):
    report.checked += 1
    if lhs != rhs:
        report.record(identity, tuple(fmt(k) for k in witness),
                      alg.format(alg._wrap(lhs)), alg.format(alg._wrap(rhs)))


def check_dual_prepoisson(liez: Liezation, max_degree: int = 2,
                          algebra: LodayPoissonAlgebra | None = None) -> Report:
    """dpp1-dpp3, perm law, associativity and Leibniz on ``Poly(g*)`` spanning triples.

    ``algebra`` overrides the cached algebra (used with doctored Liezations).
    """
    guard(max_degree, 3)
    alg = algebra if algebra is not None else poly_algebra(liez)
    return _sweep_dpp(alg, alg.spanning(max_degree), Report("dualprepoisson"))


def check_graded_dual_prepoisson(liez: Liezation, max_degree: int = 2) -> Report:
    """Graded axioms with Koszul signs for bracket degree -1, exterior degree ``<= max_degree``."""
    guard(max_degree, 2)
    alg = graded_algebra(liez)

    def signs(x, y, z):
        dx, dy = key_degree(x), key_degree(y)
        e1 = -1 if ((dx + 1) * dy) & 1 else 1
        e2 = -1 if (dx * dy) & 1 else 1
        e3 = -1 if ((dx + 1) * (dy + 1)) & 1 else 1
        return e1, e2, e3, e2

    return _sweep_dpp(alg, alg.spanning(max_degree), Report("graded-dualprepoisson"), signs)


def check_subalgebra(liez: Liezation) -> Report:
    """``1 ⊗ g`` reproduces the Loday bracket of ``g``."""
    alg = poly_algebra(liez)
    A = liez.parent
    report = Report("subalgebra")
    for i in range(A.dim):
        for j in range(A.dim):
            report.check("{1@x, 1@y} = 1@[x,y]", (A.names[i], A.names[j]),
                         lp_bracket(alg.generator(i), alg.generator(j)),
                         alg.include(A.bracket_basis(i, j)))
    return report


def check_poisson_algebra(alg: LodayPoissonAlgebra, max_degree: int, report: Report) -> Report:
    """Antisymmetry, Jacobi and Leibniz rule of the Lie-Poisson bracket on ``S̄``."""
    monos = monomials_up_to(alg.liez.quotient_dim, max_degree, 1)
    lp = alg._lp_mono
    fmt = lambda m: format_poly({m: 1}, alg.qnames)
    for a in monos:
        for b in monos:
            ab = lp(a, b)
            report.check("{a,b} = -{b,a}", (fmt(a), fmt(b)), ab,
                         {m: -c for m, c in lp(b, a).items()})
            for c in monos:
                lhs = alg.lp({a: 1}, lp(b, c))
                rhs = add_into(dict(alg.lp(ab, {c: 1})), alg.lp({b: 1}, lp(a, c)))
                report.check("Jacobi", (fmt(a), fmt(b), fmt(c)), lhs, rhs)
                bc = {mono_mul(b, c): 1}
                lhs = alg.lp({a: 1}, bc)
                rhs = add_into(
                    {mono_mul(m, c): v for m, v in ab.items()},
                    {mono_mul(b, m): v for m, v in lp(a, c).items()})
                report.check("{a,bc} = {a,b}c + b{a,c}", (fmt(a), fmt(b), fmt(c)), lhs, rhs)
    return report


def check_poissonization_hom(liez: Liezation, max_degree: int = 2) -> Report:
    guard(max_degree, 3)
    alg = poly_algebra(liez)
    report = Report("poissonization")
    keys = alg.spanning(max_degree)
    pz = lambda terms: _poissonize_terms(alg, terms)
    fmt = alg.format_key
    from .linear import poly_mul
    for p in keys:
        Pp = pz({p: 1})
        for q in keys:
            Pq = pz({q: 1})
            report.check("proj(p*q) = proj(p) proj(q)", (fmt(p), fmt(q)),
                         pz(alg._prod(p, q)), poly_mul(Pp, Pq))
            report.check("proj{p,q} = {proj p, proj q}", (fmt(p), fmt(q)),
                         pz(alg._br(p, q)), alg.lp(Pp, Pq))
    return check_poisson_algebra(alg, max_degree, report)


# ============================================================================
# freeness: universal extension of a Loday homomorphism
# ============================================================================

class DualPrePoissonTarget(Protocol):
    """What ``universal_extension`` needs from a target algebra."""

    def product(self, a, b): ...

    def bracket(self, a, b): ...

    def zero(self): ...


class UniversalExtension:
    """``φ̂((x̄1 ... x̄n) ⊗ y) = φ(x1) * ... * φ(xn) * φ(y)``, extended linearly."""

    def __init__(self, liez: Liezation, images: Sequence, target: DualPrePoissonTarget):
        self.liez = liez
        self.images = list(images)
        self.target = target
        self._cache: dict = {}

    def _chain(self, letters: Sequence[int], y: int):
        acc = self.images[y]
        for a in reversed(letters):
            acc = self.target.product(self.images[self.liez.reps[a]], acc)
        return acc

    def on_key(self, key, order: Sequence[int] | None = None):
        m, y = key
        if order is not None:
            return self._chain([m[i] for i in order], y)
        if key not in self._cache:
            self._cache[key] = self._chain(list(m), y)
        return self._cache[key]

    def __call__(self, p: PolyElement):
        out = self.target.zero()
        for key, c in p.items():
            out = out + self.on_key(key).scale(c)
        return out


def check_homomorphism(liez: Liezation, images: Sequence, target) -> None:
    A = liez.parent
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = target.zero()
            for k, c in A.bracket_basis(i, j).items():
                lhs = lhs + images[k].scale(c)
            rhs = target.bracket(images[i], images[j])
            if lhs != rhs:
                raise NotAHomomorphism((A.names[i], A.names[j]), lhs, rhs)


def universal_extension(liez: Liezation, images: Sequence, target: DualPrePoissonTarget) -> UniversalExtension:
    """Extend ``φ: g -> target`` (given by basis images) to ``Poly(g*)``.

    Raises :class:`NotAHomomorphism` unless ``φ[x, y] = {φx, φy}`` on basis pairs.
    """
    if len(images) != liez.parent.dim:
        raise ValueError("one image per basis vector of g is required")
    check_homomorphism(liez, images, target)
    return UniversalExtension(liez, images, target)


def check_extension_well_defined(ext: UniversalExtension, max_degree: int = 2,
                                 trials: int = 3, seed: int = 0) -> Report:
    """``φ̂`` does not depend on the order of the monomial's factors."""
    rng = random.Random(seed)
    alg = poly_algebra(ext.liez)
    report = Report("extension-well-defined")
    for key in alg.spanning(max_degree):
        ref = ext.on_key(key)
        for _ in range(trials):
            order = list(range(len(key[0])))
            rng.shuffle(order)
            report.check("phi-hat independent of factor order", (alg.format_key(key), order),
                         ext.on_key(key, order), ref)
    return report


def check_extension_morphism(ext: UniversalExtension, max_degree: int = 1) -> Report:
    """``φ̂`` preserves both products on spanning pairs."""
    alg = poly_algebra(ext.liez)
    T = ext.target
    report = Report("extension-morphism")
    for p in alg.spanning(max_degree):
        for q in alg.spanning(max_degree):
            w = (alg.format_key(p), alg.format_key(q))
            ep, eq = ext.on_key(p), ext.on_key(q)
            report.check("phi(p*q) = phi(p)*phi(q)", w,
                         ext(alg._wrap(alg._prod(p, q))), T.product(ep, eq))
            report.check("phi{p,q} = {phi p, phi q}", w,
                         ext(alg._wrap(alg._br(p, q))), T.bracket(ep, eq))
    return report
