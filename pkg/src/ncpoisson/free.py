"""Free Loday algebra on letters and the free perm algebra ``S(V) ⊗ V``.

A tensor word ``x1 ⊗ x2 ⊗ ... ⊗ xn`` stands for the right-nested bracket
``[x1, [x2, [..., [x_{n-1}, x_n]]]]``.  Brackets of arbitrary words are
rewritten to words with the Leibniz identity solved for the left-nested
term: ``[x1 ⊗ u', v] = x1 ⊗ [u', v] - [u', x1 ⊗ v]``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from typing import Iterable, Sequence

from .linear import (
    Combination,
    CommMonomial,
    SparseVector,
    format_term,
    join_terms,
    mono_mul,
    rank,
)
from .report import Report, guard


class TensorWord(tuple):
    """Nonempty tuple of generator indices."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]):
        t = tuple.__new__(cls, letters)
        if not t:
            raise ValueError("tensor words are nonempty")
        return t


class WordSum(Combination):
    """Element of the free Loday algebra; keys are :class:`TensorWord`."""

    __slots__ = ()

    @classmethod
    def word(cls, *letters: int) -> "WordSum":
        return cls({TensorWord(letters): 1})

    @staticmethod
    def _key_order(w):
        return (len(w), tuple(w))

    def tensor(self, other: "WordSum") -> "WordSum":
        """Concatenation ``u ⊗ v``, extended bilinearly."""
        acc: dict = {}
        for u, a in self.items():
            for v, b in other.items():
                w = TensorWord(u + v)
                acc[w] = acc.get(w, 0) + a * b
        return WordSum(acc)

    def format(self, names: Sequence[str] | None = None) -> str:
        return format_words(self, names)


def format_words(x: WordSum, names=None) -> str:
    return join_terms(
        format_term(c, ["@".join(names[l] if names else f"x{l}" for l in w)])
        for w, c in x.sorted_items()
    )


@lru_cache(maxsize=None)
def _bracket_words(u: tuple, v: tuple) -> tuple:
    """Normal form of ``[u, v]`` as a tuple of ``(word, coefficient)`` pairs."""
    if len(u) == 1:
        return ((TensorWord(u + v), 1),)
    x1, rest = u[:1], u[1:]
    acc: dict = {}
    # x1 ⊗ [u', v]
    for w, c in _bracket_words(rest, v):
        k = TensorWord(x1 + w)
        acc[k] = acc.get(k, 0) + c
    # - [u', x1 ⊗ v]
    for w, c in _bracket_words(rest, x1 + v):
        acc[w] = acc.get(w, 0) - c
    return tuple((w, c) for w, c in acc.items() if c)


def free_loday_bracket(u: WordSum, v: WordSum) -> WordSum:
    acc: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for w, c in _bracket_words(tuple(a), tuple(b)):
                acc[w] = acc.get(w, 0) + ca * cb * c
    return WordSum(acc)


def right_recursion(u: WordSum, v: WordSum) -> WordSum:
    """``[u, y1 ⊗ v']`` via ``[[u, y1], v'] + [y1, [u, v']]``, one level deep.

    Agrees with :func:`free_loday_bracket` exactly when the rewriting is
    confluent on this overlap.
    """
    br = free_loday_bracket
    acc = WordSum()
    for b, cb in v.items():
        if len(b) == 1:
            acc = acc + br(u, WordSum({b: cb}))
            continue
        y1 = WordSum({TensorWord(b[:1]): 1})
        tail = WordSum({TensorWord(b[1:]): cb})
        acc = acc + br(br(u, y1), tail) + br(y1, br(u, tail))
    return acc


def words(num_generators: int, length: int) -> list[TensorWord]:
    return [TensorWord(p) for p in product(range(num_generators), repeat=length)]


def check_free_leibniz(num_generators: int, max_length: int) -> Report:
    """Leibniz identity for all word triples of total length ``<= max_length``."""
    guard(max_length, 4, "max_length")
    report = Report("free-loday")
    br = free_loday_bracket
    by_len = {n: [WordSum({w: 1}) for w in words(num_generators, n)]
              for n in range(1, max(max_length - 1, 1) + 1)}
    for la in range(1, max_length + 1):
        for lb in range(1, max_length - la + 1):
            for lc in range(1, max_length - la - lb + 1):
                for x in by_len[la]:
                    for y in by_len[lb]:
                        for z in by_len[lc]:
                            lhs = br(x, br(y, z))
                            rhs = br(br(x, y), z) + br(y, br(x, z))
                            report.check("[u,[v,w]] = [[u,v],w] + [v,[u,w]]",
                                         (format_words(x), format_words(y), format_words(z)),
                                         lhs, rhs)
    return report


def check_confluence(num_generators: int, max_length: int) -> Report:
    """Left-first rewriting versus the right recursion on every pair of words."""
    guard(max_length, 4, "max_length")
    report = Report("free-loday-confluence")
    for la in range(1, max_length):
        for lb in range(2, max_length - la + 1):
            for a in words(num_generators, la):
                for b in words(num_generators, lb):
                    u, v = WordSum({a: 1}), WordSum({b: 1})
                    report.check("left recursion = right recursion",
                                 (format_words(u), format_words(v)),
                                 free_loday_bracket(u, v), right_recursion(u, v))
    return report


def _bracketings(letters: tuple) -> list[WordSum]:
    """All full bracketings of the given letter sequence, expanded to words."""
    if len(letters) == 1:
        return [WordSum({TensorWord(letters): 1})]
    out = []
    for split in range(1, len(letters)):
        for left in _bracketings(letters[:split]):
            for right in _bracketings(letters[split:]):
                out.append(free_loday_bracket(left, right))
    return out


def multilinear_dimension(n: int) -> int:
    """Dimension of the multilinear part of arity ``n``, by brute-force rank."""
    guard(n, 4, "n")
    if n < 1:
        raise ValueError("arity must be positive")
    index = {w: i for i, w in enumerate(permutations(range(n)))}
    vectors = []
    for perm in permutations(range(n)):
        for elt in _bracketings(perm):
            vectors.append(SparseVector(len(index), {index[tuple(w)]: c for w, c in elt.items()}))
    return rank(vectors, len(index))


# -- free perm algebra ----------------------------------------------------------

class PermElement(Combination):
    """Element of ``S(V) ⊗ V``; keys are ``(CommMonomial, generator)``."""

    __slots__ = ()

    @classmethod
    def generator(cls, x: int) -> "PermElement":
        return cls({(CommMonomial(()), x): 1})

    @staticmethod
    def _key_order(key):
        m, x = key
        return (m.grlex_key(), x)

    def __mul__(self, other):
        if isinstance(other, PermElement):
            return free_perm_product(self, other)
        return super().__mul__(other)


def free_perm_product(p: PermElement, q: PermElement) -> PermElement:
    """``(f ⊗ x) * (g ⊗ y) = f x g ⊗ y``."""
    acc: dict = {}
    for (f, x), a in p.items():
        fx = mono_mul(f, (x,))
        for (g, y), b in q.items():
            k = (mono_mul(fx, g), y)
            acc[k] = acc.get(k, 0) + a * b
    return PermElement(acc)


def perm_spanning(num_generators: int, max_degree: int) -> list[PermElement]:
    out = []
    for d in range(max_degree + 1):
        for m in combinations_with_replacement(range(num_generators), d):
            for x in range(num_generators):
                out.append(PermElement({(CommMonomial(m), x): 1}))
    return out


def check_free_perm(num_generators: int, max_degree: int = 1) -> Report:
    guard(max_degree, 3)
    report = Report("free-perm")
    span_ = perm_spanning(num_generators, max_degree)
    for p in span_:
        for q in span_:
            pq = p * q
            qp = q * p
            for r in span_:
                report.check("(p*q)*r = p*(q*r)", (p, q, r), pq * r, p * (q * r))
                report.check("(p*q)*r = (q*p)*r", (p, q, r), pq * r, qp * r)
    return report

