"""Sparse super-commutative polynomials over the rationals.

A monomial is stored as ``(exps, mask)`` where ``exps`` is a tuple of
exponents over the even generators of a :class:`SuperRing` and ``mask`` is
a bitmask over its odd generators.  The odd factors of a monomial are always
read in ascending generator order; any sign produced by reordering is folded
into the coefficient when the term is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from operator import add as _add, sub as _sub
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

Monomial = Tuple[Tuple[int, ...], int]
Coeff = Union[int, Fraction]


class RingMismatch(ValueError):
    pass


class NonExactDivision(ArithmeticError):
    pass


class ParityError(ValueError):
    pass


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


@lru_cache(maxsize=1 << 16)
def odd_sign(ma: int, mb: int) -> int:
    """Sign of moving the odd block ``mb`` past ``ma`` into ascending order."""
    inversions = 0
    j = 0
    b = mb
    while b:
        if b & 1:
            inversions += (ma >> (j + 1)).bit_count()
        b >>= 1
        j += 1
    return -1 if inversions & 1 else 1


@dataclass(frozen=True)
class Tridegree:
    """Additive (Q, T, A) degree."""

    dQ: int
    dT: int
    dA: int

    def __add__(self, other: "Tridegree") -> "Tridegree":
        return Tridegree(self.dQ + other.dQ, self.dT + other.dT, self.dA + other.dA)

    def __sub__(self, other: "Tridegree") -> "Tridegree":
        return Tridegree(self.dQ - other.dQ, self.dT - other.dT, self.dA - other.dA)

    def __neg__(self) -> "Tridegree":
        return Tridegree(-self.dQ, -self.dT, -self.dA)

    def scale(self, k: int) -> "Tridegree":
        return Tridegree(k * self.dQ, k * self.dT, k * self.dA)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.dQ, self.dT, self.dA)

    def to_qta(self) -> Tuple[int, int, int]:
        """Exponents of ``q^i t^j a^k`` with q=Q^2, t=Q^-2 T^2, a=Q^-2 A."""
        if self.dT % 2 or (self.dQ + self.dT) % 2:
            raise ValueError(f"{self} is not a monomial in q, t, a")
        return ((self.dQ + self.dT + 2 * self.dA) // 2, self.dT // 2, self.dA)

    @classmethod
    def from_qta(cls, dq: int, dt: int, da: int) -> "Tridegree":
        return cls(2 * dq - 2 * dt - 2 * da, 2 * dt, da)

    def __repr__(self) -> str:
        return f"({self.dQ},{self.dT},{self.dA})"


ZERO_DEGREE = Tridegree(0, 0, 0)


def y_degree() -> Tridegree:
    return Tridegree(-2, 2, 0)


def u_degree(k: int) -> Tridegree:
    return Tridegree(2 + 2 * k, -2 * k, 0)


def xi_degree(k: int) -> Tridegree:
    return Tridegree(2 * k - 2, -2 * k, 1)


def x_degree() -> Tridegree:
    return Tridegree(2, 0, 0)


def theta_degree() -> Tridegree:
    return Tridegree(-2, 0, 1)


class SuperRing:
    """Named even and odd generators with tridegrees.

    Rings compare by their generator lists; the standard instances are
    cached so that identity checks are usually enough.
    """

    def __init__(
        self,
        even: Sequence[Tuple[str, Tridegree]],
        odd: Sequence[Tuple[str, Tridegree]] = (),
        n: Optional[int] = None,
        N: Optional[int] = None,
    ):
        names = [g for g, _ in even] + [g for g, _ in odd]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.even = tuple(even)
        self.odd = tuple(odd)
        self.n = n
        self.N = N
        self.even_index = {g: i for i, (g, _) in enumerate(self.even)}
        self.odd_index = {g: i for i, (g, _) in enumerate(self.odd)}
        self.even_degrees = tuple(d for _, d in self.even)
        self.odd_degrees = tuple(d for _, d in self.odd)
        self._key = (self.even, self.odd)

    @classmethod
    def standard(cls, n: int, u_alphabets: Sequence[str] = ("u",)) -> "SuperRing":
        """Ring with u (one alphabet per entry of ``u_alphabets``), y, x, xi, theta."""
        return _standard_ring(n, tuple(u_alphabets))

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperRing) and (self is other or self._key == other._key)

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        ev = ",".join(g for g, _ in self.even)
        od = ",".join(g for g, _ in self.odd)
        return f"SuperRing(even=[{ev}], odd=[{od}])"

    @property
    def nvars(self) -> int:
        return len(self.even)

    def has(self, name: str) -> bool:
        return name in self.even_index or name in self.odd_index

    def is_odd(self, name: str) -> bool:
        return name in self.odd_index

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = _norm(c)
        if c == 0:
            return self.zero()
        return Poly(self, {((0,) * self.nvars, 0): c})

    def gen(self, name: str) -> "Poly":
        if name in self.even_index:
            e = [0] * self.nvars
            e[self.even_index[name]] = 1
            return Poly(self, {(tuple(e), 0): 1})
        if name in self.odd_index:
            return Poly(self, {((0,) * self.nvars, 1 << self.odd_index[name]): 1})
        raise KeyError(f"no generator {name!r} in {self!r}")

    __call__ = gen

    def monomial(self, exps: Sequence[int], mask: int = 0, coeff=1) -> "Poly":
        return Poly(self, {(tuple(exps), mask): _norm(coeff)}) if coeff else self.zero()

    def monomial_degree(self, mono: Monomial) -> Tridegree:
        exps, mask = mono
        q = t = a = 0
        for e, d in zip(exps, self.even_degrees):
            if e:
                q += e * d.dQ
                t += e * d.dT
                a += e * d.dA
        j = 0
        while mask:
            if mask & 1:
                d = self.odd_degrees[j]
                q += d.dQ
                t += d.dT
                a += d.dA
            mask >>= 1
            j += 1
        return Tridegree(q, t, a)

    def format_monomial(self, mono: Monomial) -> str:
        exps, mask = mono
        parts = []
        for (g, _), e in zip(self.even, exps):
            if e == 1:
                parts.append(g)
            elif e:
                parts.append(f"{g}^{e}")
        j = 0
        while mask:
            if mask & 1:
                parts.append(self.odd[j][0])
            mask >>= 1
            j += 1
        return "*".join(parts)

    def parse(self, text: str) -> "Poly":
        from .parse import parse_poly

        return parse_poly(text, self)


@lru_cache(maxsize=None)
def _standard_ring(n: int, u_alphabets: Tuple[str, ...]) -> SuperRing:
    if n < 1:
        raise ValueError("n must be >= 1")
    even = []
    for a in u_alphabets:
        even += [(f"{a}{k}", u_degree(k)) for k in range(n)]
    even += [(f"y{i}", y_degree()) for i in range(1, n + 1)]
    even += [(f"x{i}", x_degree()) for i in range(1, n + 1)]
    odd = [(f"xi{k}", xi_degree(k)) for k in range(n)]
    odd += [(f"theta{i}", theta_degree()) for i in range(1, n + 1)]
    return SuperRing(even, odd, n=n)


def _mono_key(item):
    (exps, mask), _ = item
    return (sum(exps), exps, mask.bit_count(), -mask)


class Poly:
    """Immutable sparse element of a :class:`SuperRing`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: SuperRing, terms: Dict[Monomial, Coeff]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- construction helpers -------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _norm(c)
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        return Poly(self.ring, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return exact_divide(self, self._coerce(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparisons / inspection ---------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for (_, m) in self.terms)

    def is_odd(self) -> bool:
        return bool(self.terms) and all(m.bit_count() % 2 == 1 for (_, m) in self.terms)

    def parity(self) -> int:
        """0 or 1 for homogeneous parity; raises on mixed parity."""
        ps = {m.bit_count() % 2 for (_, m) in self.terms}
        if len(ps) > 1:
            raise ParityError("mixed parity")
        return ps.pop() if ps else 0

    def has_odd(self) -> bool:
        return any(m for (_, m) in self.terms)

    def variables(self) -> set:
        names = set()
        for exps, mask in self.terms:
            for (g, _), e in zip(self.ring.even, exps):
                if e:
                    names.add(g)
            j = 0
            while mask:
                if mask & 1:
                    names.add(self.ring.odd[j][0])
                mask >>= 1
                j += 1
        return names

    def sorted_terms(self):
        return sorted(self.terms.items(), key=_mono_key, reverse=True)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            m = self.ring.format_monomial(mono)
            if not m:
                out.append(str(c))
            elif c == 1:
                out.append(m)
            elif c == -1:
                out.append("-" + m)
            else:
                out.append(f"{c}*{m}")
        return " + ".join(out)

    __str__ = to_str

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"

    def coefficient(self, mono: Monomial) -> Coeff:
        return self.terms.get(mono, 0)

    def constant_term(self) -> Coeff:
        return self.terms.get(((0,) * self.ring.nvars, 0), 0)


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatch(f"{a.ring!r} vs {b.ring!r}")
    out: Dict[Monomial, Coeff] = {}
    get = out.get
    for (ea, ma), ca in a.terms.items():
        for (eb, mb), cb in b.terms.items():
            if ma & mb:
                continue
            c = ca * cb
            if ma and mb and odd_sign(ma, mb) < 0:
                c = -c
            k = (tuple(map(_add, ea, eb)), ma | mb)
            v = get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
    for k, v in out.items():
        if isinstance(v, Fraction):
            out[k] = _norm(v)
    return Poly(a.ring, out)


def tridegree_of(p: Poly):
    """The common tridegree of ``p``, or an :class:`Inhomogeneous` report.

    The zero polynomial has no degree and is reported as ``None``.
    """
    degs = sorted({p.ring.monomial_degree(m) for m in p.terms}, key=Tridegree.as_tuple)
    if not degs:
        return None
    if len(degs) == 1:
        return degs[0]
    return Inhomogeneous(tuple(degs))


@dataclass(frozen=True)
class Inhomogeneous:
    degrees: Tuple[Tridegree, ...]


def is_homogeneous(p: Poly) -> bool:
    return not isinstance(tridegree_of(p), Inhomogeneous)


def _lead(terms: Mapping[Tuple[int, ...], Coeff]):
    return max(terms)


def exact_divide(num: Poly, den: Poly) -> Poly:
    """Return ``q`` with ``num == den * q``; raise NonExactDivision otherwise.

    ``den`` must be purely even.  Division is done separately for each odd
    mask, by lexicographic leading terms of the even parts.
    """
    if num.ring is not den.ring and num.ring != den.ring:
        raise RingMismatch(f"{num.ring!r} vs {den.ring!r}")
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if den.has_odd():
        raise ValueError("divisor must be purely even")
    dterms = {e: c for (e, _), c in den.terms.items()}
    dlead = _lead(dterms)
    dcoef = Fraction(dterms[dlead])
    by_mask: Dict[int, Dict[Tuple[int, ...], Coeff]] = {}
    for (e, m), c in num.terms.items():
        by_mask.setdefault(m, {})[e] = c
    out: Dict[Monomial, Coeff] = {}
    for mask, rem in by_mask.items():
        while rem:
            lead = _lead(rem)
            shift = tuple(map(_sub, lead, dlead))
            if min(shift) < 0:
                raise NonExactDivision(f"{num} is not divisible by {den}")
            qc = _norm(rem[lead] / dcoef)
            out[(shift, mask)] = qc
            for e, c in dterms.items():
                k = tuple(map(_add, e, shift))
                v = rem.get(k, 0) - qc * c
                if v:
                    rem[k] = _norm(v)
                else:
                    rem.pop(k, None)
    return Poly(num.ring, out)


def substitute(p: Poly, assignments: Mapping[str, Poly]) -> Poly:
    """Ring homomorphism sending generator names to the given images.

    Generators not mentioned are fixed.  Even generators must go to even
    elements and odd generators to odd elements (or zero).
    """
    ring = p.ring
    ev_img = []
    for g, _ in ring.even:
        img = assignments.get(g)
        if img is not None:
            img = _coerce_image(img, ring)
            if not img.is_even():
                raise ParityError(f"even generator {g} sent to non-even {img}")
        ev_img.append(img)
    od_img = []
    for g, _ in ring.odd:
        img = assignments.get(g)
        if img is not None:
            img = _coerce_image(img, ring)
            if img and not img.is_odd():
                raise ParityError(f"odd generator {g} sent to non-odd {img}")
        od_img.append(img)
    for g in assignments:
        if not ring.has(g):
            raise KeyError(f"no generator {g!r} in {ring!r}")

    touched_even = {i for i, img in enumerate(ev_img) if img is not None}
    touched_odd = 0
    for j, img in enumerate(od_img):
        if img is not None:
            touched_odd |= 1 << j
    powers: Dict[Tuple[int, int], Poly] = {}

    def power(i: int, e: int) -> Poly:
        if (i, e) not in powers:
            powers[(i, e)] = ev_img[i] ** e
        return powers[(i, e)]

    nv = ring.nvars
    untouched: Dict[Monomial, Coeff] = {}
    result = ring.zero()
    for (exps, mask), c in p.terms.items():
        if not (mask & touched_odd) and not any(exps[i] for i in touched_even):
            untouched[(exps, mask)] = c
            continue
        fixed = tuple(0 if i in touched_even else e for i, e in enumerate(exps))
        term = Poly(ring, {(fixed, 0): c})
        for i in touched_even:
            if exps[i]:
                term = term * power(i, exps[i])
        for j in _bits(mask):
            img = od_img[j]
            term = term * (img if img is not None else Poly(ring, {((0,) * nv, 1 << j): 1}))
        result = result + term
    if untouched:
        result = result + Poly(ring, untouched)
    return result


def _bits(mask: int):
    j = 0
    while mask:
        if mask & 1:
            yield j
        mask >>= 1
        j += 1


def _coerce_image(img, ring: SuperRing) -> Poly:
    if isinstance(img, Poly):
        if img.ring != ring:
            raise RingMismatch(f"{img.ring!r} vs {ring!r}")
        return img
    return ring.const(img)


def rename(p: Poly, even_perm: Mapping[int, int] = None, odd_perm: Mapping[int, int] = None) -> Poly:
    """Apply a bijective renaming of generator indices (a ring automorphism)."""
    even_perm = even_perm or {}
    odd_perm = odd_perm or {}
    nv = p.ring.nvars
    out: Dict[Monomial, Coeff] = {}
    for (exps, mask), c in p.terms.items():
        if even_perm:
            e = [0] * nv
            for i, x in enumerate(exps):
                if x:
                    e[even_perm.get(i, i)] = x
            e = tuple(e)
        else:
            e = exps
        if odd_perm and mask:
            targets = [odd_perm.get(j, j) for j in _bits(mask)]
            sign = _perm_sign(targets)
            newmask = 0
            for t in targets:
                newmask |= 1 << t
            c = c * sign
        else:
            newmask = mask
        out[(e, newmask)] = c
    return Poly(p.ring, out)


def _perm_sign(seq: Sequence[int]) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def perm_sign(perm: Sequence[int]) -> int:
    return _perm_sign(perm)

