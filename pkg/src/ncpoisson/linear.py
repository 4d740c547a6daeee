"""Exact rational linear algebra and the sparse polynomial rings used everywhere else.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; arithmetic
between them is exact and the two compare (and hash) equal when they denote
the same rational, so integral coefficients never need to be promoted.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Iterator, Mapping

Rational = Fraction


class DimensionMismatch(ValueError):
    pass


def as_rational(value) -> int | Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to an exact rational."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, _RationalABC):
        return as_rational(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return as_rational(Fraction(value.strip()))
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_term(c, factors, suffix: str = "") -> tuple[str, str]:
    """``(sign, body)`` for one term ``c * factors... suffix``."""
    mag = abs(c)
    pieces = [f for f in factors if f]
    if mag != 1 or not pieces:
        pieces.insert(0, format_rational(mag))
    return ("-" if c < 0 else "+"), " ".join(pieces) + suffix


def join_terms(terms) -> str:
    """Join ``(sign, body)`` pairs into ``a + b - c``; ``0`` when empty."""
    out = ""
    for i, (sign, body) in enumerate(terms):
        if i == 0:
            out = body if sign == "+" else "-" + body
        else:
            out += f" {sign} {body}"
    return out or "0"


# -- raw dict helpers (hot loops work on plain dicts) ------------------------

def add_into(acc: dict, terms: Mapping, scale=1) -> dict:
    """``acc += scale * terms`` in place, dropping cancelled keys."""
    if scale == 0:
        return acc
    get = acc.get
    for k, c in terms.items():
        v = get(k, 0) + scale * c
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]
    return acc


def pruned(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


class Combination:
    """Immutable finite formal linear combination ``sum c_k [k]``.

    Keys are arbitrary hashables; zero coefficients are never stored, so the
    zero element is the empty combination.  Subclasses that carry a context
    (an ambient dimension, a Liezation, ...) override :meth:`_spawn` and
    :meth:`_check_compatible`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                acc[k] = acc.get(k, 0) + as_rational(c)
        self._terms = pruned(acc)

    # construction from an already-pruned dict, skipping validation
    def _spawn(self, terms: dict):
        new = object.__new__(type(self))
        new._terms = terms
        return new

    def _check_compatible(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._same_context(other) and self._terms == other._terms

    def _same_context(self, other) -> bool:
        return True

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        return self._spawn(add_into(dict(self._terms), other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        return self._spawn(add_into(dict(self._terms), other._terms, -1))

    def __neg__(self):
        return self._spawn({k: -c for k, c in self._terms.items()})

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return self._spawn({})
        return self._spawn({k: c * v for k, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: self._key_order(kv[0]))

    @staticmethod
    def _key_order(key):
        return key

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {format_rational(c)}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({{{body}}})"


# -- vectors and subspaces ----------------------------------------------------

class SparseVector(Combination):
    """Vector of a fixed-dimension coordinate space, keyed by basis index."""

    __slots__ = ("dim",)

    def __init__(self, dim: int, entries: Mapping | Iterable | None = None):
        super().__init__(entries)
        self.dim = dim
        for i in self._terms:
            if not (isinstance(i, int) and 0 <= i < dim):
                raise IndexError(f"index {i!r} outside dimension {dim}")

    @classmethod
    def basis(cls, dim: int, i: int) -> "SparseVector":
        return cls(dim, {i: 1})

    @classmethod
    def from_dense(cls, values: Iterable) -> "SparseVector":
        values = list(values)
        return cls(len(values), {i: c for i, c in enumerate(values) if c})

    def _spawn(self, terms):
        new = Combination._spawn(self, terms)
        new.dim = self.dim
        return new

    def _check_compatible(self, other) -> None:
        super()._check_compatible(other)
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim}")

    def _same_context(self, other) -> bool:
        return self.dim == other.dim

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def dense(self) -> list:
        return [self._terms.get(i, 0) for i in range(self.dim)]

    def pivot(self) -> int | None:
        return min(self._terms) if self._terms else None

    def __repr__(self):
        return f"SparseVector({self.dim}, {dict(sorted(self._terms.items()))})"


class Subspace:
    """Subspace of ``Q^dim`` stored by its reduced row-echelon basis."""

    __slots__ = ("ambient", "basis", "_rows")

    def __init__(self, ambient: int, basis: Iterable[SparseVector] = ()):
        basis = tuple(basis)
        self.ambient = ambient
        self.basis = basis
        self._rows = {v.pivot(): v for v in basis}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(v.pivot() for v in self.basis)

    def reduce(self, v: SparseVector) -> SparseVector:
        """Remainder of ``v`` after elimination; supported off the pivots."""
        if v.dim != self.ambient:
            raise DimensionMismatch(f"vector of dimension {v.dim} in ambient {self.ambient}")
        acc = dict(v._terms)
        for p, row in self._rows.items():
            c = acc.get(p)
            if c:
                add_into(acc, row._terms, -c)
        return v._spawn(acc)

    def contains(self, v: SparseVector) -> bool:
        return not self.reduce(v)

    __contains__ = contains

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace({self.ambient}, {list(self.basis)!r})"


def span(vectors: Iterable[SparseVector], dim: int | None = None) -> Subspace:
    """Row-reduced basis of the linear span of ``vectors``."""
    vectors = list(vectors)
    dims = {v.dim for v in vectors}
    if dim is not None:
        dims.add(dim)
    if len(dims) > 1:
        raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
    if not dims:
        raise ValueError("span of no vectors needs an explicit dimension")
    ambient = dims.pop()
    rows: dict[int, dict] = {}
    for v in vectors:
        acc = dict(v._terms)
        for p, row in rows.items():
            c = acc.get(p)
            if c:
                add_into(acc, row, -c)
        if not acc:
            continue
        p = min(acc)
        inv = Fraction(1) / acc[p]
        acc = {k: as_rational(c * inv) for k, c in acc.items()}
        for q, row in rows.items():
            c = row.get(p)
            if c:
                add_into(row, acc, -c)
        rows[p] = acc
    basis = [SparseVector(ambient, rows[p]) for p in sorted(rows)]
    return Subspace(ambient, basis)


def contains(space: Subspace, v: SparseVector) -> bool:
    return space.contains(v)


def rank(vectors: Iterable[SparseVector], dim: int | None = None) -> int:
    return span(vectors, dim).dim


# -- commutative monomials and polynomials -------------------------------------

class CommMonomial(tuple):
    """Monomial of a polynomial ring, stored as its sorted multiset of variables.

    ``CommMonomial((0, 0, 2))`` is ``x0^2 x2``.  :attr:`exponents` gives the
    exponent-map view.
    """

    __slots__ = ()

    @classmethod
    def of(cls, *variables: int) -> "CommMonomial":
        return cls(sorted(variables))

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> "CommMonomial":
        letters = []
        for var, e in sorted(exponents.items()):
            if e < 0:
                raise ValueError("negative exponent")
            letters.extend([var] * e)
        return cls(letters)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def exponents(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for v in self:
            out[v] = out.get(v, 0) + 1
        return out

    def times(self, other) -> "CommMonomial":
        return CommMonomial(sorted(self + other))

    def without(self, var: int) -> "CommMonomial":
        """Drop one occurrence of ``var``."""
        i = self.index(var)
        return CommMonomial(self[:i] + self[i + 1:])

    def grlex_key(self):
        # degree first; within a degree x0 > x1 > ..., listed high-to-low
        return (len(self), tuple(-v for v in self))

    def __repr__(self):
        return "CommMonomial(" + ",".join(map(str, self)) + ")"


ONE = CommMonomial(())


def mono_mul(a: tuple, b: tuple) -> CommMonomial:
    if not a:
        return b if type(b) is CommMonomial else CommMonomial(b)
    if not b:
        return a if type(a) is CommMonomial else CommMonomial(a)
    return CommMonomial(sorted(a + b))


def poly_mul(f: Mapping, g: Mapping) -> dict:
    acc: dict = {}
    get = acc.get
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = mono_mul(m1, m2)
            acc[m] = get(m, 0) + c1 * c2
    return pruned(acc)


def monomials_up_to(nvars: int, max_degree: int, min_degree: int = 0) -> list[CommMonomial]:
    """All monomials in ``nvars`` variables, grlex order, degrees in range."""
    from itertools import combinations_with_replacement

    out = []
    for d in range(min_degree, max_degree + 1):
        out.extend(CommMonomial(c) for c in combinations_with_replacement(range(nvars), d))
    return out


class CommPoly(Combination):
    """Element of ``Q[x0, x1, ...]``; ``*`` is the polynomial product."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        for m in self._terms:
            if type(m) is not CommMonomial:
                raise TypeError(f"key {m!r} is not a CommMonomial")

    @classmethod
    def variable(cls, i: int) -> "CommPoly":
        return cls({CommMonomial((i,)): 1})

    @classmethod
    def constant(cls, c) -> "CommPoly":
        return cls({ONE: c})

    @staticmethod
    def _key_order(m):
        return m.grlex_key()

    @property
    def degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def __mul__(self, other):
        if isinstance(other, CommPoly):
            return self._spawn(poly_mul(self._terms, other._terms))
        return super().__mul__(other)

    def __pow__(self, n: int):
        out = CommPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out


# -- exterior monomials ---------------------------------------------------------

class ExtMonomial(tuple):
    """Basis monomial ``e_{i1} ^ ... ^ e_{ik}`` of an exterior algebra, ``i1 < ... < ik``."""

    __slots__ = ()

    def __new__(cls, indices: Iterable[int] = ()):
        t = tuple.__new__(cls, indices)
        if any(a >= b for a, b in zip(t, t[1:])):
            raise ValueError(f"exterior monomial indices must increase strictly: {t}")
        return t

    @property
    def degree(self) -> int:
        return len(self)

    def wedge(self, other) -> tuple[int, "ExtMonomial | None"]:
        """``(sign, monomial)`` of ``self ^ other``; sign 0 when an index repeats."""
        return ext_mul(self, other)

    def grlex_key(self):
        return (len(self), tuple(self))

    def __repr__(self):
        return "ExtMonomial(" + ",".join(map(str, self)) + ")"


EXT_ONE = ExtMonomial(())


def ext_mul(a: tuple, b: tuple) -> tuple[int, ExtMonomial | None]:
    if not a:
        return 1, ExtMonomial(b)
    if not b:
        return 1, ExtMonomial(a)
    sa = set(a)
    if not sa.isdisjoint(b):
        return 0, None
    # parity of the merge: count pairs (x in a, y in b) with x > y
    inversions = 0
    j = 0
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    merged = tuple.__new__(ExtMonomial, sorted(a + b))
    return (-1 if inversions & 1 else 1), merged


def ext_sort(letters: Iterable[int]) -> tuple[int, ExtMonomial | None]:
    """Sign and monomial of an arbitrary wedge word ``e_{l1} ^ e_{l2} ^ ...``."""
    letters = list(letters)
    if len(set(letters)) != len(letters):
        return 0, None
    sign = 1
    # bubble parity
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            if letters[i] > letters[j]:
                sign = -sign
    return sign, tuple.__new__(ExtMonomial, sorted(letters))


def ext_poly_mul(f: Mapping, g: Mapping) -> dict:
    acc: dict = {}
    get = acc.get
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            s, m = ext_mul(m1, m2)
            if s:
                acc[m] = get(m, 0) + s * c1 * c2
    return pruned(acc)


def ext_monomials_up_to(nvars: int, max_degree: int, min_degree: int = 0) -> list[ExtMonomial]:
    from itertools import combinations

    out = []
    for d in range(min_degree, max_degree + 1):
        out.extend(ExtMonomial(c) for c in combinations(range(nvars), d))
    return out


class ExtPoly(Combination):
    """Element of an exterior algebra over ``Q``; ``^`` is the wedge product."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        for m in self._terms:
            if type(m) is not ExtMonomial:
                raise TypeError(f"key {m!r} is not an ExtMonomial")

    @classmethod
    def generator(cls, i: int) -> "ExtPoly":
        return cls({ExtMonomial((i,)): 1})

    @classmethod
    def constant(cls, c) -> "ExtPoly":
        return cls({EXT_ONE: c})

    @staticmethod
    def _key_order(m):
        return m.grlex_key()

    def __xor__(self, other):
        if not isinstance(other, ExtPoly):
            return NotImplemented
        return self._spawn(ext_poly_mul(self._terms, other._terms))


def ext_product(a: ExtPoly, b: ExtPoly) -> ExtPoly:
    return a ^ b


# -- polynomials in the deformation parameter ------------------------------------

class HPoly(Combination):
    """Polynomial in ``Q[x0, x1, ...][h]``, keyed by ``(CommMonomial, h-exponent)``.

    :meth:`coefficient_of` gives the ``CommPoly`` multiplying ``h**k``.
    """

    __slots__ = ()

    @classmethod
    def from_coefficients(cls, coefficients: Mapping[int, CommPoly]) -> "HPoly":
        terms = {}
        for k, f in coefficients.items():
            if k < 0:
                raise ValueError("negative power of h")
            for m, c in f.items():
                terms[(m, k)] = c
        return cls(terms)

    @classmethod
    def from_poly(cls, f: CommPoly | Mapping, power: int = 0) -> "HPoly":
        items = f.items()
        return cls({(m, power): c for m, c in items})

    @classmethod
    def monomial(cls, m: CommMonomial, power: int = 0, c=1) -> "HPoly":
        return cls({(CommMonomial(m), power): c})

    @staticmethod
    def _key_order(key):
        m, k = key
        return (m.grlex_key(), k)

    def coefficient_of(self, k: int) -> CommPoly:
        return CommPoly({m: c for (m, e), c in self._terms.items() if e == k})

    @property
    def coefficients(self) -> dict[int, CommPoly]:
        powers = sorted({e for (_, e) in self._terms})
        return {k: self.coefficient_of(k) for k in powers}

    def at_zero(self) -> CommPoly:
        return self.coefficient_of(0)

    def divisible_by_h(self) -> bool:
        return all(e > 0 for (_, e) in self._terms)

    def __mul__(self, other):
        if isinstance(other, HPoly):
            acc: dict = {}
            for (m1, e1), c1 in self._terms.items():
                for (m2, e2), c2 in other._terms.items():
                    k = (mono_mul(m1, m2), e1 + e2)
                    acc[k] = acc.get(k, 0) + c1 * c2
            return self._spawn(pruned(acc))
        return super().__mul__(other)
