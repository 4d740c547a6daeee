"""Small algebras used throughout the tests, the CLI examples and the README."""

from __future__ import annotations

from .loday import LodayAlgebra


def sl2() -> LodayAlgebra:
    """``sl(2)`` with ``[H,X] = 2X``, ``[H,Y] = -2Y``, ``[X,Y] = H``."""
    H, X, Y = 0, 1, 2
    c = {
        (H, X, X): 2, (X, H, X): -2,
        (H, Y, Y): -2, (Y, H, Y): 2,
        (X, Y, H): 1, (Y, X, H): -1,
    }
    return LodayAlgebra(["H", "X", "Y"], c, name="sl2")


def heisenberg() -> LodayAlgebra:
    """``h3``: ``[x, y] = z``, ``z`` central."""
    return LodayAlgebra(["x", "y", "z"], {(0, 1, 2): 1, (1, 0, 2): -1}, name="h3")


def l2() -> LodayAlgebra:
    """Two-dimensional non-Lie Loday algebra: ``[a, a] = b``, all else zero."""
    return LodayAlgebra(["a", "b"], {(0, 0, 1): 1}, name="L2")


def abelian(n: int = 2) -> LodayAlgebra:
    return LodayAlgebra([f"e{i}" for i in range(n)], {}, name=f"abelian{n}")


def sl2_hemisemidirect() -> LodayAlgebra:
    """``sl(2) ⊕ V`` with ``V`` the standard module and ``[x+m, y+n] = [x,y] + x.n``.

    Non-Lie, with ``ann = V`` and a non-abelian Liezation; the module basis is
    ``u = (1,0)``, ``w = (0,1)``: ``H.u = u``, ``H.w = -w``, ``X.w = u``, ``Y.u = w``.
    """
    H, X, Y, u, w = range(5)
    c = {
        (H, X, X): 2, (X, H, X): -2,
        (H, Y, Y): -2, (Y, H, Y): 2,
        (X, Y, H): 1, (Y, X, H): -1,
        (H, u, u): 1, (H, w, w): -1, (X, w, u): 1, (Y, u, w): 1,
    }
    return LodayAlgebra(["H", "X", "Y", "u", "w"], c, name="sl2+V")


TEST_ALGEBRAS = {"sl2": sl2, "L2": l2, "h3": heisenberg}
