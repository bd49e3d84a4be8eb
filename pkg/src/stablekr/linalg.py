"""Exact sparse linear algebra over Q by fraction-free integer elimination.

Vectors are dicts ``{column: int}``.  Rows of an :class:`Echelon` have
distinct leading (smallest) columns; reduction eliminates the leading entry
with an integer combination and then divides out the content, so entries
stay integral and small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Tuple

Vec = Dict[int, int]


def integral(vec: Dict[int, object]) -> Vec:
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    out = {k: int(c * den) for k, c in vec.items() if c}
    return _primitive(out)[0]


def _content(*vecs: Optional[Vec]) -> int:
    g = 0
    for v in vecs:
        if v:
            for c in v.values():
                g = gcd(g, c)
                if g == 1:
                    return 1
    return g


def _primitive(main: Vec, aux: Optional[Vec] = None) -> Tuple[Vec, Optional[Vec]]:
    g = _content(main, aux)
    if g > 1:
        main = {k: c // g for k, c in main.items()}
        if aux is not None:
            aux = {k: c // g for k, c in aux.items()}
    if main:
        lead = main[min(main)]
        if lead < 0:
            main = {k: -c for k, c in main.items()}
            if aux is not None:
                aux = {k: -c for k, c in aux.items()}
    return main, aux


def _combine(a: int, u: Vec, b: int, v: Vec) -> Vec:
    """a*u - b*v with zeros dropped."""
    out = {k: a * c for k, c in u.items()} if a != 1 else dict(u)
    for k, c in v.items():
        x = out.get(k, 0) - b * c
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


class Echelon:
    """Incremental row echelon form; optionally tracks combinations in ``aux``."""

    def __init__(self):
        self.pivots: Dict[int, Tuple[Vec, Optional[Vec]]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _eliminate(self, main: Vec, aux: Optional[Vec], c: int):
        pmain, paux = self.pivots[c]
        a, b = pmain[c], main[c]
        g = gcd(a, b)
        a //= g
        b //= g
        main = _combine(a, main, b, pmain)
        if aux is not None:
            aux = _combine(a, aux, b, paux or {})
        return _primitive(main, aux)

    def reduce(self, main: Vec, aux: Optional[Vec] = None, full: bool = False):
        """Eliminate pivot columns from ``main``.

        Without ``full`` this stops at the first leading column that is not
        a pivot, which is enough to decide independence.
        """
        done = -1
        while main:
            if full:
                cands = [k for k in main if k > done and k in self.pivots]
                if not cands:
                    break
                c = min(cands)
            else:
                c = min(main)
                if c not in self.pivots:
                    break
            main, aux = self._eliminate(main, aux, c)
            done = c
        return main, aux

    def add(self, vec: Vec, aux: Optional[Vec] = None) -> bool:
        """Insert ``vec``; return True when it increased the rank."""
        main, aux = self.reduce(dict(vec), None if aux is None else dict(aux))
        if not main:
            return False
        main, aux = _primitive(main, aux)
        self.pivots[min(main)] = (main, aux)
        return True

    def contains(self, vec: Vec) -> bool:
        main, _ = self.reduce(dict(vec))
        return not main


def rank(vectors: Iterable[Vec]) -> int:
    ech = Echelon()
    for v in vectors:
        if v:
            ech.add(v)
    return ech.rank


def kernel(columns: List[Vec]) -> List[Vec]:
    """Basis of {x : sum_j x_j columns[j] = 0}, one vector per dependent column.

    The vector for a dependent column j is supported on j and on earlier
    independent columns, and is scaled so its entry at j is positive.
    """
    ech = Echelon()
    out = []
    for j, col in enumerate(columns):
        main, aux = ech.reduce(dict(col), {j: 1})
        if main:
            main, aux = _primitive(main, aux)
            ech.pivots[min(main)] = (main, aux)
        else:
            g = _content(aux)
            vec = {k: c // g for k, c in aux.items()}
            if vec[j] < 0:
                vec = {k: -c for k, c in vec.items()}
            out.append(vec)
    return out


def to_dense(vectors: List[Vec], ncols: int) -> List[List[int]]:
    return [[v.get(k, 0) for k in range(ncols)] for v in vectors]
