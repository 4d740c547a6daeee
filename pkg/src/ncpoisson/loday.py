"""Finite-dimensional Loday (Leibniz) algebras given by structure constants.

A Loday algebra is a vector space with a bracket satisfying

    [x, [y, z]] = [[x, y], z] + [y, [x, z]]

and no symmetry condition.  Its symmetric brackets span an ideal ``g^ann``
killed by left multiplication; the quotient ``g_Lie = g / g^ann`` is a Lie
algebra acting on ``g`` by ``ad(x̄)(y) = [x, y]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .linear import (
    DimensionMismatch,
    SparseVector,
    Subspace,
    add_into,
    as_rational,
    format_rational,
    span,
)
from .report import Report


class AlgebraError(ValueError):
    pass


class IndexOutOfRange(AlgebraError):
    pass


class DuplicateName(AlgebraError):
    pass


class LeibnizViolation(AlgebraError):
    def __init__(self, i: int, j: int, k: int, residual: SparseVector, names=None):
        self.triple = (i, j, k)
        self.residual = residual
        label = tuple(names[t] for t in self.triple) if names else self.triple
        shown = format_vector(residual, names) if names else repr(residual)
        super().__init__(f"Leibniz identity fails at {label}: residual {shown}")


class InternalConsistency(AssertionError):
    """A property the theory guarantees did not hold; this is a library bug."""


def format_vector(v: SparseVector, names: Sequence[str] | None = None) -> str:
    if not v:
        return "0"
    parts = []
    for i, c in sorted(v.items()):
        name = names[i] if names else f"e{i}"
        if c == 1:
            parts.append(("+", name))
        elif c == -1:
            parts.append(("-", name))
        elif c < 0:
            parts.append(("-", f"{format_rational(-c)} {name}"))
        else:
            parts.append(("+", f"{format_rational(c)} {name}"))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


class LodayAlgebra:
    """Loday algebra with basis ``e_0..e_{n-1}`` and ``[e_i, e_j] = sum_k c[i,j][k] e_k``.

    Pass ``validate=False`` only to inspect a candidate table (the mutation
    tests do); every downstream construction assumes the Leibniz identity.
    """

    def __init__(self, names: Sequence[str], constants: Mapping, *, name: str = "",
                 validate: bool = True):
        names = tuple(names)
        if len(set(names)) != len(names):
            seen = set()
            dup = next(n for n in names if n in seen or seen.add(n))
            raise DuplicateName(f"basis name {dup!r} repeated")
        self.names = names
        self.dim = len(names)
        self.name = name
        table: dict[tuple[int, int], dict] = {}
        for key, value in constants.items():
            i, j, k = key
            for t in (i, j, k):
                if not (isinstance(t, int) and 0 <= t < self.dim):
                    raise IndexOutOfRange(f"structure constant index {t!r} outside 0..{self.dim - 1}")
            entry = table.setdefault((i, j), {})
            entry[k] = entry.get(k, 0) + as_rational(value)
        self._table = {
            ij: SparseVector(self.dim, entry) for ij, entry in table.items()
        }
        self._table = {ij: v for ij, v in self._table.items() if v}
        self._zero = SparseVector(self.dim)
        if validate:
            report = check_leibniz(self)
            if not report.ok:
                i, j, k, residual = report.first_violation
                raise LeibnizViolation(i, j, k, residual, self.names)

    @property
    def constants(self) -> dict[tuple[int, int, int], object]:
        return {(i, j, k): c for (i, j), v in self._table.items() for k, c in v.items()}

    def basis(self, i: int) -> SparseVector:
        return SparseVector.basis(self.dim, i)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def bracket_basis(self, i: int, j: int) -> SparseVector:
        return self._table.get((i, j), self._zero)

    def structure(self) -> dict:
        """``{(i, j): {k: c}}`` with only nonzero brackets."""
        return {ij: dict(v.items()) for ij, v in self._table.items()}

    def bracket(self, u: SparseVector, v: SparseVector) -> SparseVector:
        if u.dim != self.dim or v.dim != self.dim:
            raise DimensionMismatch(f"vectors must live in dimension {self.dim}")
        acc: dict = {}
        table = self._table
        for i, a in u.items():
            for j, b in v.items():
                w = table.get((i, j))
                if w is not None:
                    add_into(acc, w._terms, a * b)
        return self._zero._spawn(acc)

    def format(self, v: SparseVector) -> str:
        return format_vector(v, self.names)

    def __repr__(self):
        label = self.name or "LodayAlgebra"
        return f"<{label} dim={self.dim} basis={list(self.names)}>"


def load_algebra(names: Sequence[str], constants: Mapping, name: str = "") -> LodayAlgebra:
    """Build and validate an algebra from a sparse ``(i, j, k) -> c`` table."""
    return LodayAlgebra(names, constants, name=name)


def bracket(A: LodayAlgebra, u: SparseVector, v: SparseVector) -> SparseVector:
    return A.bracket(u, v)


def leibnizator(A: LodayAlgebra, x: SparseVector, y: SparseVector, z: SparseVector) -> SparseVector:
    br = A.bracket
    return br(x, br(y, z)) - br(br(x, y), z) - br(y, br(x, z))


class LeibnizReport(Report):
    @property
    def first_violation(self):
        return self._violations[0] if getattr(self, "_violations", None) else None


def check_leibniz(A: LodayAlgebra) -> LeibnizReport:
    """Evaluate the Leibnizator on all ``dim**3`` basis triples."""
    report = LeibnizReport("loday")
    report._violations = []
    e = [A.basis(i) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                report.checked += 1
                r = leibnizator(A, e[i], e[j], e[k])
                if r:
                    report._violations.append((i, j, k, r))
                    n = A.names
                    report.record("[x,[y,z]] = [[x,y],z] + [y,[x,z]]", (n[i], n[j], n[k]),
                                  A.format(r), "0")
    return report


def ann_ideal(A: LodayAlgebra) -> Subspace:
    """``g^ann``: span of ``[x,y] + [y,x]``, closed under brackets with the basis."""
    gens = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            v = A.bracket_basis(i, j) + A.bracket_basis(j, i)
            if v:
                gens.append(v)
    space = span(gens, A.dim)
    while True:
        extra = []
        for w in space.basis:
            for j in range(A.dim):
                for v in (A.bracket(w, A.basis(j)), A.bracket(A.basis(j), w)):
                    if not space.contains(v):
                        extra.append(v)
        if not extra:
            return space
        space = span(list(space.basis) + extra, A.dim)


@dataclass(eq=False)
class Liezation:
    """The quotient ``g -> g_Lie = g / g^ann`` with its induced data.

    Quotient generators are the cosets of the non-pivot basis vectors of the
    row-reduced ``ann`` basis (``reps``), in increasing index order; they are
    also the PBW order used by the quantization module.
    """

    parent: LodayAlgebra
    ann: Subspace
    reps: tuple[int, ...]
    projection: tuple[SparseVector, ...]       # image of e_j in g_Lie, per j
    lie_c: dict[tuple[int, int], SparseVector]  # [ē_a, ē_b] in g_Lie
    action_c: dict[tuple[int, int], SparseVector]  # ad(ē_a)(e_j) in g

    @property
    def quotient_dim(self) -> int:
        return len(self.reps)

    @property
    def quotient_names(self) -> tuple[str, ...]:
        return tuple(self.parent.names[r] for r in self.reps)

    def project(self, v: SparseVector) -> SparseVector:
        acc: dict = {}
        for j, c in v.items():
            add_into(acc, self.projection[j]._terms, c)
        return SparseVector(self.quotient_dim, acc)

    def lift(self, a: int) -> SparseVector:
        return self.parent.basis(self.reps[a])

    def lie_bracket(self, u: SparseVector, v: SparseVector) -> SparseVector:
        acc: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                w = self.lie_c.get((a, b))
                if w is not None:
                    add_into(acc, w._terms, x * y)
        return SparseVector(self.quotient_dim, acc)

    def act(self, u: SparseVector, y: SparseVector) -> SparseVector:
        """``ad(u)(y)`` for ``u`` in ``g_Lie`` and ``y`` in ``g``."""
        acc: dict = {}
        for a, x in u.items():
            for j, c in y.items():
                w = self.action_c.get((a, j))
                if w is not None:
                    add_into(acc, w._terms, x * c)
        return SparseVector(self.parent.dim, acc)

    def quotient_brackets(self) -> dict[tuple[int, int], dict]:
        return {ab: dict(v.items()) for ab, v in self.lie_c.items()}


def _build_liezation(A: LodayAlgebra, ann: Subspace) -> Liezation:
    pivots = set(ann.pivots)
    reps = tuple(j for j in range(A.dim) if j not in pivots)
    position = {r: a for a, r in enumerate(reps)}
    q = len(reps)
    projection = []
    for j in range(A.dim):
        rem = ann.reduce(A.basis(j))
        projection.append(SparseVector(q, {position[k]: c for k, c in rem.items()}))
    projection = tuple(projection)

    def proj(v):
        acc: dict = {}
        for j, c in v.items():
            add_into(acc, projection[j]._terms, c)
        return SparseVector(q, acc)

    lie_c = {}
    for a in range(q):
        for b in range(q):
            w = proj(A.bracket_basis(reps[a], reps[b]))
            if w:
                lie_c[(a, b)] = w
    action_c = {}
    for a in range(q):
        for j in range(A.dim):
            w = A.bracket_basis(reps[a], j)
            if w:
                action_c[(a, j)] = w
    return Liezation(A, ann, reps, projection, lie_c, action_c)


def check_liezation(L: Liezation) -> Report:
    """Antisymmetry/Jacobi of the quotient, ideal and annihilator properties of
    ``ann``, and equivariance of the projection."""
    A = L.parent
    report = Report("liezation")
    q = L.quotient_dim
    qb = [SparseVector.basis(q, a) for a in range(q)]
    qn = L.quotient_names
    for a in range(q):
        for b in range(q):
            report.check("[u,v] = -[v,u]", (qn[a], qn[b]),
                         L.lie_bracket(qb[a], qb[b]), -L.lie_bracket(qb[b], qb[a]))
            for c in range(q):
                u, v, w = qb[a], qb[b], qb[c]
                lhs = L.lie_bracket(u, L.lie_bracket(v, w))
                rhs = L.lie_bracket(L.lie_bracket(u, v), w) + L.lie_bracket(v, L.lie_bracket(u, w))
                report.check("quotient Jacobi", (qn[a], qn[b], qn[c]), lhs, rhs)
    for w in L.ann.basis:
        for j in range(A.dim):
            ej = A.basis(j)
            report.check("[ann, g] = 0", (A.format(w), A.names[j]), A.bracket(w, ej), A._zero)
            report.checked += 1
            if not L.ann.contains(A.bracket(ej, w)):
                report.record("[g, ann] in ann", (A.names[j], A.format(w)),
                              A.format(A.bracket(ej, w)), "ann")
    for i in range(A.dim):
        lhs = L.project(A.basis(i))
        report.checked += 1
        if L.ann.contains(A.basis(i)) != (not lhs):
            report.record("ker projection = ann", (A.names[i],), lhs, "")
        for j in range(A.dim):
            report.check("projection equivariant", (A.names[i], A.names[j]),
                         L.project(A.bracket_basis(i, j)),
                         L.lie_bracket(L.project(A.basis(i)), L.project(A.basis(j))))
            report.check("action well defined", (A.names[i], A.names[j]),
                         L.act(L.project(A.basis(i)), A.basis(j)), A.bracket_basis(i, j))
    return report


def liezation(A: LodayAlgebra) -> Liezation:
    L = _build_liezation(A, ann_ideal(A))
    report = check_liezation(L)
    if not report.ok:
        raise InternalConsistency(f"Liezation checks failed: {report.failures[:3]}")
    return L


def liezation_unchecked(A: LodayAlgebra, *, lie_c=None, action_c=None) -> Liezation:
    """Liezation record with optionally replaced structure, for mutation tests."""
    L = _build_liezation(A, ann_ideal(A))
    if lie_c is not None:
        L.lie_c = {ab: v for ab, v in lie_c.items() if v}
    if action_c is not None:
        L.action_c = {aj: v for aj, v in action_c.items() if v}
    return L
