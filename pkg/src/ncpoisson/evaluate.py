"""Evaluate parsed expressions in one of the algebraic spaces.

Intermediate values carry a kind:

* ``vec``  an element of the base algebra ``g`` (names, sums of names, ``[,]``),
* ``coef`` a coefficient: polynomial in ``S(g_Lie)``, ``Λ(g_Lie)``, ``U_h(g_Lie)``
  or ``S(g_Lie)[h]`` depending on the space (numbers and ``h`` are coefficients),
* ``elem`` an element of the space itself (``f @ x`` and everything built from it).

A ``vec`` is coerced on demand: to ``coef`` by projecting to ``g_Lie`` and to
``elem`` by ``x -> 1 @ x``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import expr as E
from .free import TensorWord, WordSum, format_words, free_loday_bracket
from .linear import (
    EXT_ONE,
    ONE,
    CommMonomial,
    ExtMonomial,
    add_into,
    ext_poly_mul,
    format_term,
    join_terms,
    poly_mul,
)
from .loday import LodayAlgebra, Liezation, liezation
from .poisson import format_poly, graded_algebra, poly_algebra, render_mono
from .quantization import quantum_algebra


class EvaluationError(ValueError):
    """Expression is well formed but meaningless in the chosen space."""


class UnknownName(EvaluationError):
    pass


SPACES = ("poly", "graded", "dialgebra", "star")


@dataclass
class Value:
    kind: str   # vec | coef | elem
    data: dict


def _lin(*parts) -> dict:
    acc: dict = {}
    for c, d in parts:
        add_into(acc, d, c)
    return acc


class Evaluator:
    """Shared walk; subclasses supply the space-specific operations."""

    hbar = False

    def __init__(self, algebra: LodayAlgebra):
        self.A = algebra
        self.index = {n: i for i, n in enumerate(algebra.names)}

    # coercions
    def as_vec(self, v: Value, node) -> dict:
        if v.kind != "vec":
            raise EvaluationError(f"{E.to_source(node)} is not an element of the base algebra")
        return v.data

    def as_coef(self, v: Value, node) -> dict:
        if v.kind == "coef":
            return v.data
        if v.kind == "vec":
            return self.project(v.data)
        raise EvaluationError(f"{E.to_source(node)} cannot be used as a coefficient")

    def as_elem(self, v: Value, node) -> dict:
        if v.kind == "elem":
            return v.data
        if v.kind == "vec":
            return self.tensor(self.unit(), v.data)
        if v.kind == "coef" and self.is_scalar(v.data):
            raise EvaluationError(f"{E.to_source(node)} is a scalar, not an element of the space")
        raise EvaluationError(f"{E.to_source(node)} is a coefficient; tensor it with a vector using '@'")

    def is_scalar(self, c: dict) -> bool:
        return all(not self.coef_mono(k) for k in c)

    # the walk
    def run(self, node) -> Value:
        unknown = sorted(E.generator_names(node) - set(self.index))
        if unknown:
            raise UnknownName(f"unknown generator {unknown[0]!r}")
        v = self.eval(node)
        if v.kind == "vec":
            v = Value("elem", self.as_elem(v, node))
        return v

    def eval(self, node) -> Value:
        method = getattr(self, "eval_" + type(node).__name__)
        return method(node)

    def eval_Generator(self, node):
        return Value("vec", {self.index[node.name]: 1})

    def eval_Number(self, node):
        return Value("coef", self.scalar(node.value))

    def eval_HbarSymbol(self, node):
        if not self.hbar:
            raise EvaluationError("h only exists in the dialgebra and star spaces")
        return Value("coef", self.h_power(node.power))

    def eval_ScalarMul(self, node):
        v = self.eval(node.operand)
        return Value(v.kind, {k: c * node.coeff for k, c in v.data.items()})

    def eval_Sum(self, node):
        vals = [(s, self.eval(t), t) for s, t in node.terms]
        kinds = {v.kind for _, v, _ in vals}
        if kinds == {"vec"}:
            kind = "vec"
        elif "elem" in kinds:
            if "coef" in kinds:
                raise EvaluationError("cannot add a coefficient to an element of the space")
            kind = "elem"
        else:
            kind = "coef"
        conv = {"vec": self.as_vec, "coef": self.as_coef, "elem": self.as_elem}[kind]
        return Value(kind, _lin(*((s, conv(v, t)) for s, v, t in vals)))

    def eval_LodayBracket(self, node):
        x = self.as_vec(self.eval(node.left), node.left)
        y = self.as_vec(self.eval(node.right), node.right)
        acc: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                add_into(acc, dict(self.A.bracket_basis(i, j).items()), a * b)
        return Value("vec", acc)

    def eval_Tensor(self, node):
        f = self.as_coef(self.eval(node.left), node.left)
        x = self.as_vec(self.eval(node.right), node.right)
        return Value("elem", self.tensor(f, x))

    def _scaling(self, a: Value, b: Value, node):
        """``c * e`` or ``e * c`` with ``c`` a scalar (number or power of h); else ``None``."""
        if a.kind == "coef" and self.is_scalar(a.data) and b.kind in ("elem", "vec"):
            return Value("elem", self.scale_elem(a.data, self.as_elem(b, node.right)))
        if b.kind == "coef" and self.is_scalar(b.data) and a.kind in ("elem", "vec"):
            return Value("elem", self.scale_elem(b.data, self.as_elem(a, node.left)))
        return None

    def _coef_product(self, node, op):
        a, b = self.eval(node.left), self.eval(node.right)
        if a.kind == "elem" or b.kind == "elem":
            scaled = self._scaling(a, b, node)
            if scaled is not None:
                return scaled
        return Value("coef", op(self.as_coef(a, node.left), self.as_coef(b, node.right)))

    def eval_Dot(self, node):
        return self._coef_product(node, self.dot)

    def eval_Wedge(self, node):
        return self._coef_product(node, self.wedge)

    def eval_PermStar(self, node):
        return self.star_op(node)

    def eval_Bracket(self, node):
        a, b = self.eval(node.left), self.eval(node.right)
        if a.kind == "coef" and b.kind == "coef":
            return Value("coef", self.coef_bracket(a.data, b.data))
        return Value("elem", self.bracket(self.as_elem(a, node.left), self.as_elem(b, node.right)))

    def eval_DialRight(self, node):
        return self.dial(node, right=True)

    def eval_DialLeft(self, node):
        return self.dial(node, right=False)

    # defaults
    def dial(self, node, right):
        raise EvaluationError("dialgebra products need --space dialgebra (|-, -|) or star (|-s, -|s)")

    def wedge(self, f, g):
        raise EvaluationError("'^' is the exterior product of the graded space")

    def coef_bracket(self, f, g):
        raise EvaluationError("no bracket on coefficients in this space")

    def format(self, v: Value) -> str:
        return self.format_elem(v.data) if v.kind == "elem" else self.format_coef(v.data)


class PolyEvaluator(Evaluator):
    space = "poly"

    def __init__(self, algebra: LodayAlgebra, liez: Liezation | None = None):
        super().__init__(algebra)
        self.liez = liez or liezation(algebra)
        self.alg = poly_algebra(self.liez)

    def coef_mono(self, k):
        return k

    def unit(self):
        return {ONE: 1}

    def scalar(self, c):
        return {ONE: c} if c else {}

    def project(self, v):
        acc: dict = {}
        for j, c in v.items():
            add_into(acc, {CommMonomial((a,)): x for a, x in self.alg.proj[j].items()}, c)
        return acc

    def tensor(self, f, x):
        acc: dict = {}
        for m, a in f.items():
            for j, b in x.items():
                acc[(m, j)] = acc.get((m, j), 0) + a * b
        return {k: c for k, c in acc.items() if c}

    def scale_elem(self, s, e):
        c = s.get(ONE, 0)
        return {k: c * v for k, v in e.items()} if c else {}

    def dot(self, f, g):
        return poly_mul(f, g)

    def star_op(self, node):
        va, vb = self.eval(node.left), self.eval(node.right)
        scaled = self._scaling(va, vb, node)
        if scaled is not None:
            return scaled
        a, b = self.as_elem(va, node.left), self.as_elem(vb, node.right)
        return Value("elem", self.alg.product_terms(a, b))

    def bracket(self, a, b):
        return self.alg.bracket_terms(a, b)

    def coef_bracket(self, f, g):
        return self.alg.lp(f, g)

    def format_elem(self, e):
        return self.alg.format(self.alg._wrap(e))

    def format_coef(self, f):
        return format_poly(f, self.alg.qnames)


class GradedEvaluator(PolyEvaluator):
    space = "graded"

    def __init__(self, algebra, liez=None):
        Evaluator.__init__(self, algebra)
        self.liez = liez or liezation(algebra)
        self.alg = graded_algebra(self.liez)

    def unit(self):
        return {EXT_ONE: 1}

    def scalar(self, c):
        return {EXT_ONE: c} if c else {}

    def project(self, v):
        acc: dict = {}
        for j, c in v.items():
            add_into(acc, {ExtMonomial((a,)): x for a, x in self.alg.proj[j].items()}, c)
        return acc

    def scale_elem(self, s, e):
        c = s.get(EXT_ONE, 0)
        return {k: c * v for k, v in e.items()} if c else {}

    def dot(self, f, g):
        raise EvaluationError("use '^' for coefficient products in the graded space")

    def wedge(self, f, g):
        return ext_poly_mul(f, g)

    def coef_bracket(self, f, g):
        return self.alg.sn(f, g)

    def format_coef(self, f):
        items = sorted(f.items(), key=lambda kv: kv[0].grlex_key())
        return join_terms(format_term(c, [render_mono(m, self.alg.qnames, "^")]) for m, c in items)


class DialEvaluator(Evaluator):
    """``Ud_h(g)``: coefficients in ``U_h(g_Lie)``, keys ``(word, e)``; ``.`` and ``*`` are the U product."""

    space = "dialgebra"
    hbar = True

    def __init__(self, algebra, liez=None):
        super().__init__(algebra)
        self.liez = liez or liezation(algebra)
        self.Q = quantum_algebra(self.liez)

    def coef_mono(self, k):
        return k[0]

    def unit(self):
        return {(ONE, 0): 1}

    def scalar(self, c):
        return {(ONE, 0): c} if c else {}

    def h_power(self, p):
        return {(ONE, p): 1}

    def project(self, v):
        acc: dict = {}
        for j, c in v.items():
            add_into(acc, {(CommMonomial((a,)), 0): x for a, x in self.Q.proj[j].items()}, c)
        return acc

    def tensor(self, f, x):
        acc: dict = {}
        for (m, e), a in f.items():
            for j, b in x.items():
                k = (m, j, e)
                acc[k] = acc.get(k, 0) + a * b
        return {k: c for k, c in acc.items() if c}

    def scale_elem(self, s, e):
        acc: dict = {}
        for (m, e1), c in s.items():
            for (w, j, e2), d in e.items():
                k = (w, j, e1 + e2)
                acc[k] = acc.get(k, 0) + c * d
        return {k: c for k, c in acc.items() if c}

    def dot(self, f, g):
        return self.Q.env_mul_terms(f, g)

    def star_op(self, node):
        return self._coef_product(node, self.dot)

    def coef_bracket(self, f, g):
        return _lin((1, self.dot(f, g)), (-1, self.dot(g, f)))

    def dial(self, node, right):
        if node.star:
            raise EvaluationError("'|-s' and '-|s' are the star products; use --space star")
        a = self.as_elem(self.eval(node.left), node.left)
        b = self.as_elem(self.eval(node.right), node.right)
        return Value("elem", self.Q.right_terms(a, b) if right else self.Q.left_terms(a, b))

    def bracket(self, a, b):
        return _lin((1, self.Q.right_terms(a, b)), (-1, self.Q.left_terms(b, a)))

    def format_elem(self, e):
        return self.Q.format_tensor(e)

    def format_coef(self, f):
        return self.Q.format_env(f)


class StarEvaluator(DialEvaluator):
    """``Poly_star(g*)``: ``.`` is the commutative product, ``*`` the star product."""

    space = "star"

    def dot(self, f, g):
        acc: dict = {}
        for (m1, e1), a in f.items():
            for (m2, e2), b in g.items():
                k = (CommMonomial(sorted(m1 + m2)), e1 + e2)
                acc[k] = acc.get(k, 0) + a * b
        return {k: c for k, c in acc.items() if c}

    def star_op(self, node):
        return self._coef_product(node, self.Q.star_terms)

    def coef_bracket(self, f, g):
        return _lin((1, self.Q.star_terms(f, g)), (-1, self.Q.star_terms(g, f)))

    def dial(self, node, right):
        if not node.star:
            raise EvaluationError("in the star space write '|-s' and '-|s'")
        a = self.as_elem(self.eval(node.left), node.left)
        b = self.as_elem(self.eval(node.right), node.right)
        fn = self.Q.star_right_terms if right else self.Q.star_left_terms
        return Value("elem", fn(a, b))

    def bracket(self, a, b):
        return _lin((1, self.Q.star_right_terms(a, b)), (-1, self.Q.star_left_terms(b, a)))


EVALUATORS = {"poly": PolyEvaluator, "graded": GradedEvaluator,
              "dialgebra": DialEvaluator, "star": StarEvaluator}


def evaluate(algebra: LodayAlgebra, space: str, source: str):
    """Parse and evaluate ``source``; returns ``(evaluator, value)``."""
    if space not in EVALUATORS:
        raise EvaluationError(f"unknown space {space!r}")
    node = E.parse_expression(source)
    ev = EVALUATORS[space](algebra)
    return ev, ev.run(node)


def h_expansion(ev: DialEvaluator, v: Value) -> dict[int, str]:
    """``{k: printed coefficient of h**k}`` of a dialgebra or star value."""
    powers = sorted({k[-1] for k in v.data})
    out = {}
    for p in powers:
        part = {k[:-1] + (0,): c for k, c in v.data.items() if k[-1] == p}
        out[p] = ev.format(Value(v.kind, part))
    return out


# -- free Loday algebra on named generators ------------------------------------------

class FreeEvaluator:
    """Names are generators, ``@`` concatenates words, ``[,]`` is the free bracket."""

    def __init__(self, names):
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}

    def run(self, node) -> WordSum:
        unknown = sorted(E.generator_names(node) - set(self.index))
        if unknown:
            raise UnknownName(f"unknown generator {unknown[0]!r}")
        return self.eval(node)

    def eval(self, node) -> WordSum:
        if isinstance(node, E.Generator):
            return WordSum({TensorWord((self.index[node.name],)): 1})
        if isinstance(node, E.ScalarMul):
            return self.eval(node.operand).scale(node.coeff)
        if isinstance(node, E.Sum):
            acc = WordSum()
            for s, t in node.terms:
                acc = acc + self.eval(t).scale(s)
            return acc
        if isinstance(node, E.Tensor):
            return self.eval(node.left).tensor(self.eval(node.right))
        if isinstance(node, E.LodayBracket):
            return free_loday_bracket(self.eval(node.left), self.eval(node.right))
        raise EvaluationError(f"{E.to_source(node)}: the free Loday algebra only has '@', '[,]', '+', '-'")

    def format(self, x: WordSum) -> str:
        return format_words(x, self.names)
