"""PBW normal forms, the symmetrization star product and the enveloping dialgebra.

Everything lives over ``Q[h]``.  Internally an element is a flat dict whose
keys carry the power of ``h`` as their last entry:

* ``U_h(g_Lie)``: ``(word, e)`` with ``word`` a nondecreasing tuple of quotient
  indices (a PBW monomial),
* ``Ud_h(g) = U_h(g_Lie) ⊗ g``: ``(word, j, e)``,
* ``Poly_star(g*) = S(g_Lie)[h] ⊗ g``: ``(CommMonomial, j, e)``.

The dialgebra products are

    (f ⊗ x) |- (g ⊗ y) = f x̄ g ⊗ y
    (f ⊗ x) -| (1 ⊗ w) = f w̄ ⊗ x - h f ⊗ [w, x]

with ``-|`` against ``x̄1 ... x̄n ⊗ y`` obtained by iterating over ``x1, ..., xn, y``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping

from .linear import (
    Combination,
    CommMonomial,
    HPoly,
    add_into,
    format_term,
    join_terms,
    monomials_up_to,
)
from .loday import Liezation
from .poisson import LiezationMismatch, poly_algebra, render_mono
from .report import Report, guard

# PBW monomials are nondecreasing index tuples, the same shape as commutative monomials
PBWMonomial = CommMonomial


class NotDivisibleByH(ArithmeticError):
    pass


def _shift(terms: Mapping, e: int, c=1) -> dict:
    """Multiply a flat ``h``-keyed dict by ``c h**e``."""
    if e == 0 and c == 1:
        return dict(terms)
    return {k[:-1] + (k[-1] + e,): c * v for k, v in terms.items()}


def _distinct(m: tuple):
    i, n = 0, len(m)
    while i < n:
        j = i
        while j < n and m[j] == m[i]:
            j += 1
        yield m[i], j - i, CommMonomial(m[:i] + m[i + 1:])
        i = j


def _h_factor(e: int) -> list[str]:
    if e == 0:
        return []
    return ["h" if e == 1 else f"h^{e}"]


class QuantumAlgebra:
    """Caches for ``U_h(g_Lie)``, ``Ud_h(g)`` and the transported star products."""

    def __init__(self, liez: Liezation):
        self.liez = liez
        self.parent = liez.parent
        self.qnames = liez.quotient_names
        self.names = liez.parent.names
        self.q = liez.quotient_dim
        self.lie = {ab: dict(v.items()) for ab, v in liez.lie_c.items()}
        self.proj = [dict(v.items()) for v in liez.projection]
        self.base = {ij: dict(v.items()) for ij, v in liez.parent.structure().items()}
        self.reps = liez.reps
        for name in ("_lmul", "_mul", "_sym_sum", "_sym", "_symbol",
                     "_star", "_right", "_left_unit", "_left"):
            setattr(self, name, lru_cache(maxsize=None)(getattr(self, name + "_raw")))

    # -- U_h(g_Lie) ----------------------------------------------------------------
    def _lmul_raw(self, v: int, w: tuple) -> dict:
        """``e_v · w`` for a PBW word ``w``, in normal form."""
        if not w or v <= w[0]:
            return {(CommMonomial((v,) + tuple(w)), 0): 1}
        w0, rest = w[0], CommMonomial(w[1:])
        acc: dict = {}
        # e_v e_w0 rest = e_w0 (e_v rest) + h [e_v, e_w0] rest
        for (u, e), c in self._lmul(v, rest).items():
            add_into(acc, _shift(self._lmul(w0, u), e), c)
        for k, c in self.lie.get((v, w0), {}).items():
            add_into(acc, _shift(self._lmul(k, rest), 1), c)
        return acc

    def _mul_raw(self, w1: tuple, w2: tuple) -> dict:
        if not w1:
            return {(CommMonomial(w2), 0): 1}
        acc = {(CommMonomial(w2), 0): 1}
        for v in reversed(w1):
            nxt: dict = {}
            for (u, e), c in acc.items():
                add_into(nxt, _shift(self._lmul(v, u), e), c)
            acc = nxt
        return acc

    def env_mul_terms(self, a: Mapping, b: Mapping) -> dict:
        acc: dict = {}
        for (w1, e1), c1 in a.items():
            for (w2, e2), c2 in b.items():
                add_into(acc, _shift(self._mul(w1, w2), e1 + e2), c1 * c2)
        return acc

    # -- symmetrization and its inverse ---------------------------------------------
    def _sym_sum_raw(self, m: tuple) -> dict:
        """Sum over distinct orderings of the multiset ``m``, as U-products."""
        if not m:
            return {(CommMonomial(()), 0): 1}
        acc: dict = {}
        for v, _, rest in _distinct(m):
            for (u, e), c in self._sym_sum(rest).items():
                add_into(acc, _shift(self._lmul(v, u), e), c)
        return acc

    def _sym_raw(self, m: tuple) -> dict:
        weight = 1
        for _, mult, _ in _distinct(m):
            weight *= factorial(mult)
        scale = Fraction(weight, factorial(len(m)))
        return {k: c * scale for k, c in self._sym_sum(m).items()}

    def symmetrize_terms(self, f: Mapping) -> dict:
        """``(m, e)``-keyed commutative polynomial to a ``(word, e)``-keyed U element."""
        acc: dict = {}
        for (m, e), c in f.items():
            add_into(acc, _shift(self._sym(m), e), c)
        return acc

    def _symbol_raw(self, w: tuple) -> dict:
        # sym(w) = w + lower terms, so w = sym(w) - lower and the recursion is triangular
        acc = {(CommMonomial(w), 0): 1}
        top = (CommMonomial(w), 0)
        for (u, e), c in self._sym(w).items():
            if (u, e) == top:
                continue
            add_into(acc, _shift(self._symbol(u), e), -c)
        return acc

    def symbol_terms(self, u: Mapping) -> dict:
        acc: dict = {}
        for (w, e), c in u.items():
            add_into(acc, _shift(self._symbol(w), e), c)
        return acc

    def _star_raw(self, m1: tuple, m2: tuple) -> dict:
        return self.symbol_terms(self.env_mul_terms(self._sym(m1), self._sym(m2)))

    def star_terms(self, f: Mapping, g: Mapping) -> dict:
        acc: dict = {}
        for (m1, e1), c1 in f.items():
            for (m2, e2), c2 in g.items():
                add_into(acc, _shift(self._star(m1, m2), e1 + e2), c1 * c2)
        return acc

    # -- Ud_h(g) ---------------------------------------------------------------------
    def times_letter_bar(self, u: tuple, w: int) -> dict:
        """``u · w̄`` for a PBW word and a parent basis index."""
        acc: dict = {}
        for v, c in self.proj[w].items():
            add_into(acc, self._mul(u, (v,)), c)
        return acc

    def _right_raw(self, p: tuple, q: tuple) -> dict:
        (f, x), (g, y) = p, q
        acc: dict = {}
        for v, c in self.proj[x].items():
            for (u, e), c2 in self._lmul(v, g).items():
                for (r, e2), c3 in self._mul(f, u).items():
                    key = (r, y, e + e2)
                    acc[key] = acc.get(key, 0) + c * c2 * c3
        return {k: c for k, c in acc.items() if c}

    def left_step(self, terms: Mapping, w: int) -> dict:
        """``(u ⊗ z) -| (1 ⊗ e_w)`` on a flat ``(word, z, e)`` dict."""
        acc: dict = {}
        for (u, z, e), c in terms.items():
            for (r, e2), c2 in self.times_letter_bar(u, w).items():
                key = (r, z, e + e2)
                acc[key] = acc.get(key, 0) + c * c2
            for k, c2 in self.base.get((w, z), {}).items():
                key = (u, k, e + 1)
                acc[key] = acc.get(key, 0) - c * c2
        return {k: c for k, c in acc.items() if c}

    def _left_unit_raw(self, x: int, g: tuple, y: int) -> dict:
        """``(1 ⊗ x) -| (g ⊗ y)``."""
        terms = {(CommMonomial(()), x, 0): 1}
        for a in g:
            terms = self.left_step(terms, self.reps[a])
        return self.left_step(terms, y)

    def left_key(self, p: tuple, q: tuple) -> dict:
        return self._left(p, q)

    def _left_raw(self, p: tuple, q: tuple) -> dict:
        (f, x), (g, y) = p, q
        acc: dict = {}
        for (u, z, e), c in self._left_unit(x, g, y).items():
            for (r, e2), c2 in self._mul(f, u).items():
                key = (r, z, e + e2)
                acc[key] = acc.get(key, 0) + c * c2
        return {k: c for k, c in acc.items() if c}

    def dial_terms(self, fn, P: Mapping, Q: Mapping) -> dict:
        acc: dict = {}
        get = acc.get
        for (f, x, e1), c1 in P.items():
            for (g, y, e2), c2 in Q.items():
                c, e = c1 * c2, e1 + e2
                for (r, z, e3), v in fn((f, x), (g, y)).items():
                    key = (r, z, e3 + e)
                    acc[key] = get(key, 0) + c * v
        return {k: c for k, c in acc.items() if c}

    def right_terms(self, P, Q) -> dict:
        return self.dial_terms(self._right, P, Q)

    def left_terms(self, P, Q) -> dict:
        return self.dial_terms(self.left_key, P, Q)

    # -- transport -------------------------------------------------------------------
    def to_star(self, D: Mapping) -> dict:
        acc: dict = {}
        for (w, j, e), c in D.items():
            for (m, e2), c2 in self._symbol(w).items():
                key = (m, j, e + e2)
                acc[key] = acc.get(key, 0) + c * c2
        return {k: c for k, c in acc.items() if c}

    def from_star(self, S: Mapping) -> dict:
        acc: dict = {}
        for (m, j, e), c in S.items():
            for (w, e2), c2 in self._sym(m).items():
                key = (w, j, e + e2)
                acc[key] = acc.get(key, 0) + c * c2
        return {k: c for k, c in acc.items() if c}

    def star_right_terms(self, A, B) -> dict:
        return self.to_star(self.right_terms(self.from_star(A), self.from_star(B)))

    def star_left_terms(self, A, B) -> dict:
        return self.to_star(self.left_terms(self.from_star(A), self.from_star(B)))

    # -- element constructors ----------------------------------------------------------
    def env(self, terms) -> "EnvElement":
        return EnvElement(self, terms)

    def env_generator(self, a: int) -> "EnvElement":
        return EnvElement(self, {(CommMonomial((a,)), 0): 1})

    def dial(self, terms) -> "DialElement":
        return DialElement(self, terms)

    def dial_generator(self, j: int, word=()) -> "DialElement":
        return DialElement(self, {(CommMonomial(word), j, 0): 1})

    def star(self, terms) -> "StarElement":
        return StarElement(self, terms)

    def star_generator(self, j: int, mono=()) -> "StarElement":
        return StarElement(self, {(CommMonomial(mono), j, 0): 1})

    def dial_spanning(self, max_degree: int) -> list[tuple]:
        return [(w, j) for w in monomials_up_to(self.q, max_degree)
                for j in range(self.parent.dim)]

    # -- printing ----------------------------------------------------------------------
    def coef_label(self, w: tuple, e: int) -> str:
        """``h^e.w`` as one factor, so printed output parses back."""
        return ".".join(_h_factor(e) + ([render_mono(w, self.qnames, ".")] if w else []))

    def format_env(self, terms: Mapping) -> str:
        items = sorted(terms.items(), key=lambda kv: (kv[0][0].grlex_key(), kv[0][1]))
        return join_terms(format_term(c, [self.coef_label(w, e)]) for (w, e), c in items)

    def format_tensor(self, terms: Mapping) -> str:
        items = sorted(terms.items(), key=lambda kv: (kv[0][0].grlex_key(), kv[0][1], kv[0][2]))
        return join_terms(format_term(c, [self.coef_label(w, e)], f" @ {self.names[j]}")
                          for (w, j, e), c in items)


@lru_cache(maxsize=None)
def _quantum(liez: Liezation) -> QuantumAlgebra:
    return QuantumAlgebra(liez)


def quantum_algebra(liez: Liezation) -> QuantumAlgebra:
    return _quantum(liez)


# ============================================================================
# element types
# ============================================================================

class _QElement(Combination):
    __slots__ = ("algebra",)
    width = 2

    def __init__(self, algebra: QuantumAlgebra, terms=None):
        super().__init__(terms)
        self.algebra = algebra
        for key in self._terms:
            if len(key) != self.width or key[-1] < 0:
                raise ValueError(f"bad key {key!r} for {type(self).__name__}")

    def _spawn(self, terms):
        new = Combination._spawn(self, terms)
        new.algebra = self.algebra
        return new

    def _check_compatible(self, other):
        super()._check_compatible(other)
        if other.algebra is not self.algebra:
            raise LiezationMismatch("elements over different Liezations")

    def _same_context(self, other):
        return other.algebra is self.algebra

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @staticmethod
    def _key_order(key):
        return (key[0].grlex_key(),) + tuple(key[1:])

    def h_degree(self) -> int:
        return max((k[-1] for k in self._terms), default=0)

    def coefficient_of(self, k: int):
        """Part multiplying ``h**k``, with the ``h`` slot reset to 0."""
        return self._spawn({key[:-1] + (0,): c for key, c in self._terms.items() if key[-1] == k})

    def at_zero(self):
        return self.coefficient_of(0)

    def divisible_by_h(self) -> bool:
        return all(k[-1] > 0 for k in self._terms)

    def divide_by_h(self):
        if not self.divisible_by_h():
            raise NotDivisibleByH(str(self))
        return self._spawn({key[:-1] + (key[-1] - 1,): c for key, c in self._terms.items()})

    def total_degrees(self) -> set[int]:
        """Monomial degree plus ``h`` exponent, per term."""
        return {len(key[0]) + key[-1] for key in self._terms}

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class EnvElement(_QElement):
    """Element of ``U_h(g_Lie)`` in PBW normal form; ``*`` is the algebra product."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, EnvElement):
            return pbw_multiply(self, other)
        return super().__mul__(other)

    def __str__(self):
        return self.algebra.format_env(self._terms)


class DialElement(_QElement):
    """Element of ``Ud_h(g)``."""

    __slots__ = ()
    width = 3

    def __str__(self):
        return self.algebra.format_tensor(self._terms)


class StarElement(_QElement):
    """Element of ``Poly_star(g*)``."""

    __slots__ = ()
    width = 3

    def __str__(self):
        return self.algebra.format_tensor(self._terms)


def _same(a, b) -> QuantumAlgebra:
    if type(a) is not type(b):
        raise TypeError(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if a.algebra is not b.algebra:
        raise LiezationMismatch("operands belong to different Liezations")
    return a.algebra


# ============================================================================
# operations
# ============================================================================

def pbw_multiply(a: EnvElement, b: EnvElement) -> EnvElement:
    Q = _same(a, b)
    return EnvElement(Q, Q.env_mul_terms(a._terms, b._terms))


def symmetrize(liez: Liezation, f: HPoly | Mapping) -> EnvElement:
    """Average over orderings: ``x̄1 ... x̄k -> (1/k!) sum_sigma x_sigma(1) ... x_sigma(k)``.

    ``f`` may be an :class:`HPoly` or a plain ``{CommMonomial: c}`` polynomial.
    """
    Q = quantum_algebra(liez)
    return EnvElement(Q, Q.symmetrize_terms(_as_h_terms(f)))


def _as_h_terms(f) -> dict:
    if isinstance(f, HPoly):
        return f.terms
    return {(CommMonomial(m), 0): c for m, c in f.items()}


def symbol(u: EnvElement) -> HPoly:
    """Inverse of :func:`symmetrize`."""
    return HPoly(u.algebra.symbol_terms(u._terms))


def star_product(liez: Liezation, f: HPoly | Mapping, g: HPoly | Mapping) -> HPoly:
    """``f ⋆ g = symbol(symmetrize(f) · symmetrize(g))``."""
    Q = quantum_algebra(liez)
    return HPoly(Q.star_terms(_as_h_terms(f), _as_h_terms(g)))


def dial_right(a: DialElement, b: DialElement) -> DialElement:
    Q = _same(a, b)
    return DialElement(Q, Q.right_terms(a._terms, b._terms))


def dial_left(a: DialElement, b: DialElement) -> DialElement:
    Q = _same(a, b)
    return DialElement(Q, Q.left_terms(a._terms, b._terms))


def dial_commutator(a, b):
    """``a |- b - b -| a``, in either ``Ud_h(g)`` or ``Poly_star(g*)``."""
    if isinstance(a, StarElement):
        return star_dial_right(a, b) - star_dial_left(b, a)
    return dial_right(a, b) - dial_left(b, a)


def star_transport(d: DialElement) -> StarElement:
    Q = d.algebra
    return StarElement(Q, Q.to_star(d._terms))


def star_untransport(s: StarElement) -> DialElement:
    Q = s.algebra
    return DialElement(Q, Q.from_star(s._terms))


def star_dial_right(a: StarElement, b: StarElement) -> StarElement:
    Q = _same(a, b)
    return StarElement(Q, Q.star_right_terms(a._terms, b._terms))


def star_dial_left(a: StarElement, b: StarElement) -> StarElement:
    Q = _same(a, b)
    return StarElement(Q, Q.star_left_terms(a._terms, b._terms))


# ============================================================================
# checks
# ============================================================================

def check_pbw_associativity(liez: Liezation, max_degree: int = 3) -> Report:
    guard(max_degree, 3)
    Q = quantum_algebra(liez)
    report = Report("pbw-associativity")
    words = monomials_up_to(Q.q, max_degree)
    fmt = lambda w: Q.format_env({(w, 0): 1})
    for a in words:
        for b in words:
            ab = Q._mul(a, b)
            for c in words:
                lhs = Q.env_mul_terms(ab, {(c, 0): 1})
                rhs = Q.env_mul_terms({(a, 0): 1}, Q._mul(b, c))
                report.check("(ab)c = a(bc)", (fmt(a), fmt(b), fmt(c)), lhs, rhs)
    return report


def check_symbol_roundtrip(liez: Liezation, max_degree: int = 4) -> Report:
    guard(max_degree, 4)
    Q = quantum_algebra(liez)
    report = Report("symbol-roundtrip")
    for m in monomials_up_to(Q.q, max_degree):
        report.check("symbol(symmetrize(m)) = m", (render_mono(m, Q.qnames, ".") or "1",),
                     Q.symbol_terms(Q._sym(m)), {(m, 0): 1})
    return report


def check_star_associativity(liez: Liezation, max_degree: int = 3) -> Report:
    guard(max_degree, 3)
    Q = quantum_algebra(liez)
    report = Report("star-associativity")
    monos = monomials_up_to(Q.q, max_degree)
    fmt = lambda m: render_mono(m, Q.qnames, ".") or "1"
    for a in monos:
        for b in monos:
            ab = Q._star(a, b)
            for c in monos:
                lhs = Q.star_terms(ab, {(c, 0): 1})
                rhs = Q.star_terms({(a, 0): 1}, Q._star(b, c))
                report.check("(f*g)*k = f*(g*k)", (fmt(a), fmt(b), fmt(c)), lhs, rhs)
    return report


def check_dialgebra_axioms(liez: Liezation, max_degree: int = 2,
                           algebra: QuantumAlgebra | None = None) -> Report:
    """Associativity of both products and the three mixed dialgebra axioms.

    ``algebra`` substitutes a (possibly doctored) :class:`QuantumAlgebra`.
    """
    guard(max_degree, 3)
    Q = algebra if algebra is not None else quantum_algebra(liez)
    report = Report("dialgebra")
    keys = Q.dial_spanning(max_degree)
    n = len(keys)
    R = [[Q._right(keys[i], keys[j]) for j in range(n)] for i in range(n)]
    L = [[Q.left_key(keys[i], keys[j]) for j in range(n)] for i in range(n)]
    lift = lambda k: {(k[0], k[1], 0): 1}
    label = [Q.format_tensor(lift(k)) for k in keys]
    for i, a in enumerate(keys):
        A = lift(a)
        for j, b in enumerate(keys):
            Rab, Lab = R[i][j], L[i][j]
            for k, c in enumerate(keys):
                C = lift(c)
                w = (label[i], label[j], label[k])
                Rbc, Lbc = R[j][k], L[j][k]
                Rab_c = Q.right_terms(Rab, C)
                _check(report, "(a|-b)|-c = a|-(b|-c)", w, Rab_c, Q.right_terms(A, Rbc), Q)
                Lab_c = Q.left_terms(Lab, C)
                _check(report, "(a-|b)-|c = a-|(b-|c)", w, Lab_c, Q.left_terms(A, Lbc), Q)
                _check(report, "(a|-b)|-c = (a-|b)|-c", w, Rab_c, Q.right_terms(Lab, C), Q)
                _check(report, "(a|-b)-|c = a|-(b-|c)", w, Q.left_terms(Rab, C),
                       Q.right_terms(A, Lbc), Q)
                _check(report, "a-|(b-|c) = a-|(b|-c)", w, Q.left_terms(A, Lbc),
                       Q.left_terms(A, Rbc), Q)
    return report


def _check(report: Report, identity, witness, lhs, rhs, Q: QuantumAlgebra):
    report.checked += 1
    if lhs != rhs:
        report.record(identity, witness, Q.format_tensor(lhs), Q.format_tensor(rhs))


def classical_limit_check(liez: Liezation, max_degree: int = 2) -> Report:
    """``|-⋆`` at ``h = 0`` is the perm product; ``(a |-⋆ b - b -|⋆ a)/h`` at ``h = 0`` is the bracket."""
    guard(max_degree, 3)
    Q = quantum_algebra(liez)
    P = poly_algebra(liez)
    report = Report("limits")
    keys = P.spanning(max_degree)
    lift = lambda k: {(k[0], k[1], 0): 1}
    h0 = lambda D, k: {key[:2]: c for key, c in D.items() if key[2] == k}
    for p in keys:
        for q in keys:
            w = (P.format_key(p), P.format_key(q))
            right = Q.star_right_terms(lift(p), lift(q))
            report.check("lim |-* = perm product", w, h0(right, 0), P._prod(p, q))
            comm = add_into(dict(right), Q.star_left_terms(lift(q), lift(p)), -1)
            if any(key[2] == 0 for key in comm):
                report.record("[a,b]_di divisible by h", w,
                              Q.format_tensor({k: c for k, c in comm.items() if k[2] == 0}), "0")
                report.checked += 1
                continue
            report.check("lim [a,b]_di / h = {a,b}", w, h0(comm, 1), P._br(p, q))
    return report


def check_generator_commutator(liez: Liezation) -> Report:
    """``(1⊗x) |- (1⊗y) - (1⊗y) -| (1⊗x) = h 1⊗[x,y]`` on basis pairs."""
    Q = quantum_algebra(liez)
    A = liez.parent
    report = Report("generator-commutator")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = dial_commutator(Q.dial_generator(i), Q.dial_generator(j))
            rhs = DialElement(Q, {(CommMonomial(()), k, 1): c
                                  for k, c in A.bracket_basis(i, j).items()})
            report.check("(1@x)|-(1@y) - (1@y)-|(1@x) = h 1@[x,y]",
                         (A.names[i], A.names[j]), lhs, rhs)
    return report


def check_gr_compatibility(liez: Liezation, max_degree: int = 2) -> Report:
    """The ``h^0`` part of ``|-`` is the perm product of the symbols."""
    guard(max_degree, 3)
    Q = quantum_algebra(liez)
    P = poly_algebra(liez)
    report = Report("gr-compatibility")
    keys = Q.dial_spanning(max_degree)
    for p in keys:
        for q in keys:
            top = {key[:2]: c for key, c in Q._right(p, q).items() if key[2] == 0}
            report.check("gr(a |- b) = a * b", (P.format_key(p), P.format_key(q)),
                         top, P._prod(p, q))
    return report


def check_degree_coherence(liez: Liezation, max_degree: int = 2) -> Report:
    """Every term of ``(f⊗x) ∘ (g⊗y)`` has monomial degree plus ``h`` exponent ``|f|+|g|+1``."""
    guard(max_degree, 3)
    Q = quantum_algebra(liez)
    P = poly_algebra(liez)
    report = Report("degree-coherence")
    keys = Q.dial_spanning(max_degree)
    for p in keys:
        for q in keys:
            want = {len(p[0]) + len(q[0]) + 1}
            w = (P.format_key(p), P.format_key(q))
            for name, out in (("|-", Q._right(p, q)), ("-|", Q.left_key(p, q))):
                degrees = {len(k[0]) + k[2] for k in out}
                report.check(f"degree coherence of {name}", w, degrees <= want, True)
    return report
