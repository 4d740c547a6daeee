"""The twelve acceptance criteria, each an exact identity check with a time budget.

Run ``pytest tests/test_acceptance.py -v -s`` (or execute this file directly)
to see one PASS/FAIL line per criterion.
"""

import sys
import time
from fractions import Fraction
from itertools import product

import pytest

from ncpoisson.catalog import heisenberg, l2, sl2
from ncpoisson.cli import run_verify
from ncpoisson.evaluate import evaluate
from ncpoisson.free import (
    WordSum,
    check_free_leibniz,
    format_words,
    free_loday_bracket,
    multilinear_dimension,
)
from ncpoisson.linear import CommMonomial, HPoly
from ncpoisson.lm import check_lie_object, check_poisson_object, liezation_object, poissonization_object
from ncpoisson.loday import LodayAlgebra, check_leibniz, liezation
from ncpoisson.poisson import check_dual_prepoisson, check_poissonization_hom
from ncpoisson.quantization import (
    check_dialgebra_axioms,
    check_pbw_associativity,
    check_star_associativity,
    check_symbol_roundtrip,
    classical_limit_check,
    dial_commutator,
    quantum_algebra,
    star_dial_left,
    star_product,
)

MAKERS = {"sl2": sl2, "L2": l2, "h3": heisenberg}
mono = CommMonomial.of


def at_h_one(f: HPoly) -> dict:
    out: dict = {}
    for (m, _), c in f.items():
        out[m] = out.get(m, 0) + c
    return {m: c for m, c in out.items() if c}


def criterion_1():
    ev, value = evaluate(sl2(), "graded", "{X@H, X@H}")
    text = ev.format(value)
    return text == "2 H^X @ X", text


def criterion_2():
    half = Fraction(1, 2)
    checked = 0
    for name in ("sl2", "h3"):
        L = liezation(MAKERS[name]())
        A = L.parent
        for i, j in product(range(A.dim), repeat=2):
            xy = star_product(L, {mono(i): 1}, {mono(j): 1})
            br = L.project(A.bracket_basis(i, j))
            want = HPoly({(mono(i, j), 0): 1, **{(mono(k), 1): half * c for k, c in br.items()}})
            # at h = 1: x̄⋆ȳ = x̄ȳ + ½{x̄,ȳ}
            want_h1 = {mono(i, j): 1, **{mono(k): half * c for k, c in br.items()}}
            if xy != want or at_h_one(xy) != want_h1:
                return False, f"{name}: {A.names[i]}*{A.names[j]} = {xy}"
            checked += 1
    return True, f"{checked} generator pairs"


def criterion_3():
    checked = 0
    for name, make in MAKERS.items():
        L = liezation(make())
        Q = quantum_algebra(L)
        A = L.parent
        for i, j in product(range(A.dim), repeat=2):
            lhs = dial_commutator(Q.dial_generator(i), Q.dial_generator(j))
            rhs = Q.dial({(mono(), k, 1): c for k, c in A.bracket_basis(i, j).items()})
            if lhs != rhs:
                return False, f"{name}: ({A.names[i]}, {A.names[j]}) gives {lhs}"
            checked += 1
    return True, f"{checked} basis pairs"


def criterion_4():
    L = liezation(sl2())
    A, Q = L.parent, quantum_algebra(L)

    def tens(f, v):
        out: dict = {}
        for (m, e), c in f.items():
            for j, d in v.items():
                out[(m, j, e)] = out.get((m, j, e), 0) + c * d
        return Q.star({k: c for k, c in out.items() if c})

    def shift(f, k):
        return HPoly({(m, e + k): c for (m, e), c in f.items()})

    bar = lambda i: HPoly({(mono(i), 0): 1})
    b = A.basis
    g_choices = [HPoly({(mono(), 0): 1}), bar(1), HPoly({(mono(0, 1), 0): 1}), HPoly({(mono(0, 2), 0): 1})]
    checked = 0
    for g in g_choices:
        for x1, x2, y in product(range(3), repeat=3):
            lhs = star_dial_left(tens(g, b(y)), Q.star_generator(x2, mono(x1)))
            g1 = star_product(L, g, bar(x1))
            g2 = star_product(L, g, bar(x2))
            rhs = (tens(star_product(L, g1, bar(x2)), b(y))
                   - tens(shift(g1, 1), A.bracket(b(x2), b(y)))
                   - tens(shift(g2, 1), A.bracket(b(x1), b(y)))
                   + tens(shift(g, 2), A.bracket(b(x2), A.bracket(b(x1), b(y)))))
            if lhs != rhs:
                return False, f"g={g}, x1={A.names[x1]}, x2={A.names[x2]}, y={A.names[y]}: {lhs} vs {rhs}"
            checked += 1
    # one instance worked by hand: g = 1, x1 = x2 = Y, y = X
    hand = str(star_dial_left(Q.star_generator(1), Q.star_generator(2, mono(2))))
    if hand != "-2 h^2 @ Y + 2 h.Y @ H + Y.Y @ X":
        return False, hand
    return True, f"{checked} instances"


def criterion_5():
    checked, times = 0, []
    for name, make in MAKERS.items():
        start = time.perf_counter()
        A = make()
        leib = check_leibniz(A)
        dpp = check_dual_prepoisson(liezation(A), 3)
        elapsed = time.perf_counter() - start
        if not (leib.ok and dpp.ok):
            return False, f"{name}: {(leib.failures + dpp.failures)[:1]}"
        if elapsed >= 120:
            return False, f"{name} took {elapsed:.1f}s"
        checked += leib.checked + dpp.checked
        times.append(f"{name} {elapsed:.1f}s")
    return True, f"{checked} identities ({', '.join(times)})"


def criterion_6():
    checked = 0
    for name, make in MAKERS.items():
        r = check_poissonization_hom(liezation(make()), 3)
        if not r.ok:
            return False, f"{name}: {r.failures[:1]}"
        checked += r.checked
    return True, f"{checked} identities"


def criterion_7():
    checked = 0
    for name, make in MAKERS.items():
        r = check_dialgebra_axioms(liezation(make()), 3)
        if not r.ok:
            return False, f"{name}: {r.failures[:1]}"
        checked += r.checked
    return True, f"{checked} identities"


def criterion_8():
    checked = 0
    for name, make in MAKERS.items():
        r = classical_limit_check(liezation(make()), 3)
        if not r.ok:
            return False, f"{name}: {r.failures[:1]}"
        checked += r.checked
    return True, f"{checked} identities"


def criterion_9():
    checked = 0
    for name, make in MAKERS.items():
        L = liezation(make())
        for r in (check_symbol_roundtrip(L, 4), check_star_associativity(L, 3), check_pbw_associativity(L, 3)):
            if not r.ok:
                return False, f"{name}: {r.failures[:1]}"
            checked += r.checked
    return True, f"{checked} identities"


def criterion_10():
    x, y, z = (WordSum.word(i) for i in range(3))
    text = format_words(free_loday_bracket(x.tensor(y), z), "xyz")
    if text != "x@y@z - y@x@z":
        return False, text
    r = check_free_leibniz(2, 4)
    if not r.ok:
        return False, str(r.failures[:1])
    dims = [multilinear_dimension(n) for n in range(1, 5)]
    if dims != [1, 2, 6, 24]:
        return False, f"dimensions {dims}"
    return True, f"{r.checked} word triples, dimensions {dims}"


def criterion_11():
    checked = 0
    for name, make in MAKERS.items():
        L = liezation(make())
        for r in (check_lie_object(*liezation_object(L)),
                  check_poisson_object(*poissonization_object(L, 2), 2)):
            if not r.ok:
                return False, f"{name}: {r.failures[:1]}"
            checked += r.checked
    return True, f"{checked} identities"


def criterion_12():
    A = sl2()
    caught = []
    for key, c in sorted(A.constants.items()):
        mutated = dict(A.constants)
        mutated[key] = -c
        B = LodayAlgebra(A.names, mutated, name="sl2-mutant", validate=False)
        report = check_leibniz(B)
        if report.ok:
            report, _ = run_verify(B, "all", 2)
        if report.ok or not report.failures[0].witness:
            return False, f"flip of {key} not detected"
        f = report.failures[0]
        caught.append(f"[{A.names[key[0]]},{A.names[key[1]]}] at ({','.join(f.witness)})")
    return True, "; ".join(caught)


CRITERIA = [
    (1, "graded bracket example on sl(2)", criterion_1, 1),
    (2, "generator star products", criterion_2, 1),
    (3, "dialgebra commutator on generators", criterion_3, 1),
    (4, "worked -|* expansion on sl(2)", criterion_4, 1),
    (5, "Leibniz and dual-prePoisson sweep, degree 3", criterion_5, 3 * 120),
    (6, "Poissonization homomorphism, degree 3", criterion_6, 60),
    (7, "dialgebra axioms, degree 3", criterion_7, 300),
    (8, "classical limits, degree 3", criterion_8, 120),
    (9, "PBW round trip and star associativity", criterion_9, 120),
    (10, "free Loday algebra", criterion_10, 60),
    (11, "Lie and Poisson objects", criterion_11, 60),
    (12, "sign-flip mutations of sl(2)", criterion_12, 300),
]


def run_criterion(number, title, fn, budget):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    within = elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {number:2d} {status}  {title}  ({elapsed:.2f}s, budget {budget}s): {detail}"
    return ok and within, line


@pytest.mark.parametrize("number,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, budget, capsys):
    passed, line = run_criterion(number, title, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
