"""Graded Koszul homology of a differential on Q[u, y] x Lambda[xi].

Tridegrees are handled through the coordinates

    B = (dQ + dT)/2 + dA    (total u-degree of every monomial in the piece)
    h = dT/2

in which y has weight (0, 1), u_k has (1, -k), xi_k has (0, -k) and the
differential d_N raises B by N.  A monomial u^b y^c xi_S then has y-degree
h + sum_i i*b_i + sum(S).

A :class:`DegreeWindow` contains a tridegree when its u-degree is at most
``max_u_degree`` and *every* monomial of the piece has y-degree at most
``max_y_degree``, so each piece in the window is enumerated completely.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import linalg
from .differential import Differential, mu_class, rebuild
from .ring import Monomial, Poly, Tridegree

JOBS_ENV = "STABLEKR_JOBS"


class WindowTooSmall(Exception):
    """The incoming boundary source of a degree lies outside the window."""

    def __init__(self, degree: Tridegree, source: Tridegree):
        super().__init__(f"homology at {degree} needs the piece at {source}, outside the window")
        self.degree = degree
        self.source = source


def to_weights(D: Tridegree) -> Optional[Tuple[int, int, int]]:
    """(B, h, dA), or None when D is not a degree of any monomial."""
    if D.dT % 2 or (D.dQ + D.dT) % 2:
        return None
    return (D.dQ + D.dT) // 2 + D.dA, D.dT // 2, D.dA


def from_weights(B: int, h: int, dA: int) -> Tridegree:
    return Tridegree(2 * (B - dA) - 2 * h, 2 * h, dA)


def _subset_sum_range(n: int, k: int) -> Tuple[int, int]:
    return k * (k - 1) // 2, k * (2 * n - k - 1) // 2


def piece_nonempty(D: Tridegree, n: int, yified: bool) -> bool:
    w = to_weights(D)
    if w is None:
        return False
    B, h, dA = w
    if B < 0 or not 0 <= dA <= n:
        return False
    lo, hi = _subset_sum_range(n, dA)
    top = h + (n - 1) * B + hi
    if yified:
        return top >= 0
    return h + lo <= 0 <= top


@dataclass(frozen=True)
class DegreeWindow:
    """Tridegrees with u-degree <= max_u_degree and y-degree <= max_y_degree."""

    n: int
    max_u_degree: int
    max_y_degree: int = 0
    yified: bool = True

    def __post_init__(self):
        if self.n < 1 or self.max_u_degree < 0 or self.max_y_degree < 0:
            raise ValueError("window bounds must be non-negative and n >= 1")

    def contains(self, D: Tridegree) -> bool:
        if not piece_nonempty(D, self.n, self.yified):
            return False
        B, h, dA = to_weights(D)
        if B > self.max_u_degree:
            return False
        if not self.yified:
            return True
        return h + (self.n - 1) * B + _subset_sum_range(self.n, dA)[1] <= self.max_y_degree

    def degrees(self) -> List[Tridegree]:
        """All nonempty window degrees, ordered by (dA, B, h)."""
        n = self.n
        out = []
        for dA in range(n + 1):
            lo, hi = _subset_sum_range(n, dA)
            for B in range(self.max_u_degree + 1):
                h_min = -((n - 1) * B + hi)
                h_max = self.max_y_degree + h_min if self.yified else -lo
                for h in range(h_min, h_max + 1):
                    D = from_weights(B, h, dA)
                    if self.contains(D):
                        out.append(D)
        return out


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_basis(D: Tridegree, n: int, yified: bool = True) -> List[Monomial]:
    """Monomials u^b y^c xi_S of tridegree D in the standard ring layout, sorted."""
    w = to_weights(D)
    if w is None:
        return []
    B, h, dA = w
    if B < 0 or not 0 <= dA <= n:
        return []
    xs = (0,) * n
    out = []
    for S in combinations(range(n), dA):
        mask = sum(1 << k for k in S)
        for b in _compositions(B, n):
            ydeg = h + sum(i * e for i, e in enumerate(b)) + sum(S)
            if ydeg < 0 or (not yified and ydeg):
                continue
            for c in _compositions(ydeg, n) if yified else [xs]:
                out.append((b + c + xs, mask))
    out.sort()
    return out


def _scaled(images: List[Dict]) -> List[Dict]:
    """Multiply all image dicts by a common denominator so they are integral."""
    den = 1
    for img in images:
        for c in img.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
    return [{k: int(c * den) for k, c in img.items()} for img in images]


def _images(d: Differential, basis: Sequence[Monomial]) -> List[Dict]:
    return _scaled([d.apply_monomial(m) for m in basis])


def _target_columns(images: List[Dict]) -> List[Dict[int, int]]:
    # Indexing targets in sorted monomial order keeps elimination fill-in low.
    keys = sorted({m for img in images for m in img})
    index = {m: i for i, m in enumerate(keys)}
    return [{index[m]: c for m, c in img.items()} for img in images]


def outgoing_rank(d: Differential, D: Tridegree) -> Tuple[int, int]:
    """(chain dimension, rank of d) on the piece at D."""
    basis = enumerate_basis(D, d.n, d.yified)
    return len(basis), linalg.rank(_target_columns(_images(d, basis)))


def boundary_matrix(d: Differential, source: Tridegree, order: Optional[Sequence[Monomial]] = None):
    """(source basis, target basis, columns) of d on the piece at ``source``.

    Columns are dicts over target-basis indices; the target basis is the
    full piece at source + shift, so an empty source yields no columns.
    """
    src = list(order) if order is not None else enumerate_basis(source, d.n, d.yified)
    tgt = enumerate_basis(source + d.shift, d.n, d.yified)
    index = {m: i for i, m in enumerate(tgt)}
    cols = [{index[m]: c for m, c in img.items()} for img in _images(d, src)]
    return src, tgt, cols


@dataclass
class DegreeResult:
    degree: Tridegree
    chain: int
    rank_in: int
    rank_out: int
    homology: int
    representatives: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "dQ": self.degree.dQ,
            "dT": self.degree.dT,
            "dA": self.degree.dA,
            "chain": self.chain,
            "rank_in": self.rank_in,
            "rank_out": self.rank_out,
            "homology": self.homology,
            "representatives": list(self.representatives),
        }


def _require_graded(d: Differential):
    if d.shift is None:
        raise ValueError("homology needs a homogeneous differential (dW a monomial)")


def _incoming(d: Differential, window: Optional[DegreeWindow], D: Tridegree):
    source = D - d.shift
    if not piece_nonempty(source, d.n, d.yified):
        return []
    if window is not None and not window.contains(source):
        raise WindowTooSmall(D, source)
    return enumerate_basis(source, d.n, d.yified)


def _analyze(d: Differential, D: Tridegree, window, representatives: bool, reverse: bool):
    """Homology data at D plus the boundary echelon (over D-basis indices)."""
    basis = enumerate_basis(D, d.n, d.yified)
    if reverse:
        basis.reverse()
    index = {m: i for i, m in enumerate(basis)}
    boundaries = linalg.Echelon()
    for img in _images(d, _incoming(d, window, D)):
        if img:
            boundaries.add({index[m]: c for m, c in img.items()})
    cols = _target_columns(_images(d, basis))
    reps = []
    if representatives:
        ker = linalg.kernel(cols)
        rank_out = len(basis) - len(ker)
        seen = linalg.Echelon()
        seen.pivots = dict(boundaries.pivots)
        for vec in ker:
            if seen.add(vec):
                red, _ = boundaries.reduce(dict(vec), full=True)
                red, _ = linalg._primitive(red)
                reps.append(Poly(d.ring, {basis[i]: c for i, c in red.items()}))
    else:
        rank_out = linalg.rank(cols)
    chain = len(basis)
    res = DegreeResult(D, chain, boundaries.rank, rank_out, chain - boundaries.rank - rank_out)
    if representatives:
        if len(reps) != res.homology:
            raise AssertionError(f"representative count mismatch at {D}")
        res.representatives = [r.to_str() for r in reps]
        res._polys = reps
    return res, boundaries, index


def homology_at(
    d: Differential,
    D: Tridegree,
    window: Optional[DegreeWindow] = None,
    representatives: bool = True,
    reverse: bool = False,
) -> DegreeResult:
    """Homology of d at tridegree D.

    Raises WindowTooSmall when the incoming piece is nonempty and not in
    ``window``.  Representatives are the kernel basis vectors that are
    independent modulo boundaries, each reduced against the boundaries.
    """
    _require_graded(d)
    return _analyze(d, D, window, representatives, reverse)[0]


def representative_polys(result: DegreeResult) -> List[Poly]:
    return list(getattr(result, "_polys", []))


def is_boundary(d: Differential, p: Poly, window: Optional[DegreeWindow] = None) -> bool:
    """Whether the homogeneous element p lies in the image of d."""
    from .ring import tridegree_of

    _require_graded(d)
    if not p:
        return True
    D = tridegree_of(p)
    _, boundaries, index = _analyze(d, D, window, False, False)
    return boundaries.contains(_vector(p, index))


def _vector(p: Poly, index: Dict[Monomial, int]) -> Dict[int, int]:
    return linalg.integral({index[m]: c for m, c in p.terms.items()})


@dataclass
class GradedHomologyReport:
    n: int
    N: Optional[int]
    yified: bool
    window: DegreeWindow
    per_degree: Dict[Tridegree, DegreeResult]
    unknown: List[Tridegree]
    euler_ok: bool
    strands_checked: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "yified": self.yified,
            "window": {"max_u_degree": self.window.max_u_degree, "max_y_degree": self.window.max_y_degree},
            "degrees": [r.as_dict() for r in self.per_degree.values()],
            "euler_ok": self.euler_ok,
            "strands_checked": self.strands_checked,
            "unknown_degrees": [list(D.as_tuple()) for D in self.unknown],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)

    def total_homology(self) -> int:
        return sum(r.homology for r in self.per_degree.values())

    def poincare_table(self) -> str:
        """Rows (dQ, dT), columns dA, entries homology (chain in brackets)."""
        n = self.n
        rows: Dict[Tuple[int, int], Dict[int, DegreeResult]] = {}
        for D, r in self.per_degree.items():
            rows.setdefault((D.dQ, D.dT), {})[D.dA] = r
        lines = ["dQ\tdT\t" + "\t".join(f"dA={a}" for a in range(n + 1))]
        for (q, t) in sorted(rows):
            cells = []
            for a in range(n + 1):
                r = rows[(q, t)].get(a)
                cells.append("." if r is None else f"{r.homology}[{r.chain}]")
            lines.append(f"{q}\t{t}\t" + "\t".join(cells))
        for D in self.unknown:
            lines.append(f"unknown {D}")
        lines.append(f"euler_ok: {str(self.euler_ok).lower()}")
        return "\n".join(lines)


def _job(args):
    recipe, window, D, reps = args
    d = rebuild(recipe)
    if not reps:
        return outgoing_rank(d, D)
    try:
        res = homology_at(d, D, window, True)
    except WindowTooSmall:
        return None
    res.__dict__.pop("_polys", None)
    return res


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _run_jobs(d: Differential, window: DegreeWindow, degrees, reps: bool, jobs: int):
    if jobs > 1 and d.recipe is not None and len(degrees) > 1:
        args = [(d.recipe, window, D, reps) for D in degrees]
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_job, args, chunksize=max(1, len(args) // (4 * jobs))))
    out = []
    for D in degrees:
        if not reps:
            out.append(outgoing_rank(d, D))
            continue
        try:
            out.append(homology_at(d, D, window, True))
        except WindowTooSmall:
            out.append(None)
    return out


def compute_report(
    d: Differential,
    window: DegreeWindow,
    representatives: bool = False,
    jobs: Optional[int] = None,
) -> GradedHomologyReport:
    """Homology at every window degree.

    Each job handles one degree; without representatives a job only ranks
    the outgoing map and incoming ranks are read off the source degree
    during the merge.  Results do not depend on ``jobs``.
    """
    _require_graded(d)
    if window.n != d.n or window.yified != d.yified:
        raise ValueError("window and differential disagree on n or y-mode")
    jobs = default_jobs() if jobs is None else jobs
    degrees = window.degrees()
    results = _run_jobs(d, window, degrees, representatives, jobs)
    per: Dict[Tridegree, DegreeResult] = {}
    unknown = []
    if representatives:
        for D, r in zip(degrees, results):
            if r is None:
                unknown.append(D)
            else:
                per[D] = r
    else:
        ranks = dict(zip(degrees, results))
        for D in degrees:
            chain, rank_out = ranks[D]
            source = D - d.shift
            if not piece_nonempty(source, d.n, d.yified):
                rank_in = 0
            elif source in ranks:
                rank_in = ranks[source][1]
            else:
                unknown.append(D)
                continue
            per[D] = DegreeResult(D, chain, rank_in, rank_out, chain - rank_in - rank_out)
    euler_ok, checked = _euler(d, window, per)
    return GradedHomologyReport(d.n, d.N, d.yified, window, per, unknown, euler_ok, checked)


def _euler(d: Differential, window: DegreeWindow, per: Dict[Tridegree, DegreeResult]):
    """Alternating sums along each complete strand D, D - s, D - 2s, ..."""
    strands: Dict[Tridegree, List[Tridegree]] = {}
    for D in per:
        strands.setdefault(D + d.shift.scale(D.dA), []).append(D)
    ok, checked = True, 0
    for top in strands:
        members = [top - d.shift.scale(a) for a in range(d.n + 1)]
        if any(piece_nonempty(D, d.n, d.yified) and D not in per for D in members):
            continue
        chi_h = sum((-1) ** D.dA * per[D].homology for D in members if D in per)
        chi_c = sum((-1) ** D.dA * per[D].chain for D in members if D in per)
        checked += 1
        ok = ok and chi_h == chi_c and all(per[D].homology >= 0 for D in members if D in per)
    return ok, checked


# ---------------------------------------------------------------------------
# Hilbert series


Series = Dict[Tuple[int, int], int]


def _series_mul(a: Series, b: Series, max_b: int, max_h: int) -> Series:
    out: Series = {}
    for (b1, h1), c1 in a.items():
        for (b2, h2), c2 in b.items():
            key = (b1 + b2, h1 + h2)
            if key[0] <= max_b and key[1] <= max_h:
                out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _geometric(w: Tuple[int, int], max_b: int, max_h: int, low_h: int) -> Series:
    """1/(1 - t^w) truncated to the box."""
    out = {(0, 0): 1}
    m = 1
    while True:
        key = (m * w[0], m * w[1])
        if key[0] > max_b or key[1] > max_h or key[1] < low_h:
            break
        out[key] = 1
        m += 1
    return out


def product_formula(n: int, N: int, window: DegreeWindow) -> Series:
    """Coefficients of prod_k (1 - w(d xi_k)) / (prod_i (1 - w(y_i)) prod_k (1 - w(u_k)))

    keyed by (u-degree, h).  In y=0 mode the y factors are dropped.
    """
    max_b = window.max_u_degree
    max_h = window.max_y_degree + (n - 1) * max_b
    low_h = -(n - 1) * max_b
    s: Series = {(0, 0): 1}
    if window.yified:
        for _ in range(n):
            s = _series_mul(s, _geometric((0, 1), max_b, max_h, low_h), max_b, max_h)
    for k in range(n):
        s = _series_mul(s, _geometric((1, -k), max_b, max_h, low_h), max_b, max_h)
    for k in range(n):
        s = _series_mul(s, {(0, 0): 1, (N, -k): -1}, max_b, max_h)
    return s


def chain_series(n: int, window: DegreeWindow) -> Dict[Tuple[int, int, int], int]:
    """Dimensions of all pieces, keyed by (B, h, dA), from the generating function."""
    max_b = window.max_u_degree
    max_h = window.max_y_degree + (n - 1) * max_b
    low_h = -(n - 1) * max_b - n * n
    s: Series = {(0, 0): 1}
    if window.yified:
        for _ in range(n):
            s = _series_mul(s, _geometric((0, 1), max_b, max_h, low_h), max_b, max_h)
    for k in range(n):
        s = _series_mul(s, _geometric((1, -k), max_b, max_h, low_h), max_b, max_h)
    out: Dict[Tuple[int, int, int], int] = {}
    for S_size in range(n + 1):
        for S in combinations(range(n), S_size):
            shift = sum(S)
            for (b, h), c in s.items():
                key = (b, h - shift, S_size)
                out[key] = out.get(key, 0) + c
    return out


def hilbert_series(report: GradedHomologyReport) -> Dict[Tuple[int, int], int]:
    """dA = 0 homology dimensions keyed by (dQ, dT)."""
    return {(D.dQ, D.dT): r.homology for D, r in report.per_degree.items() if D.dA == 0}


@dataclass
class RegularSequenceVerdict:
    passed: bool
    higher_nonzero: List[Tridegree]
    hilbert_mismatch: List[Tuple[Tridegree, int, int]]
    report: GradedHomologyReport

    def summary(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        return (
            f"{word}: {len(self.report.per_degree)} degrees, "
            f"{len(self.higher_nonzero)} with dA>=1 homology, "
            f"{len(self.hilbert_mismatch)} Hilbert mismatches"
        )


def regular_sequence_check(d: Differential, window: DegreeWindow, jobs: Optional[int] = None) -> RegularSequenceVerdict:
    """Vanishing above dA = 0 and agreement with the product formula at dA = 0."""
    report = compute_report(d, window, representatives=False, jobs=jobs)
    higher = [D for D, r in report.per_degree.items() if D.dA >= 1 and r.homology]
    formula = product_formula(d.n, d.N, window)
    mismatch = []
    for D, r in report.per_degree.items():
        if D.dA == 0:
            B, h, _ = to_weights(D)
            expected = formula.get((B, h), 0)
            if expected != r.homology:
                mismatch.append((D, r.homology, expected))
    passed = not higher and not mismatch and not report.unknown and report.euler_ok
    return RegularSequenceVerdict(passed, higher, mismatch, report)


# ---------------------------------------------------------------------------
# Subalgebra generated by u_i and mu_k


@dataclass
class MuComparison:
    degree: Tridegree
    homology: Optional[int]
    image: Optional[int]

    @property
    def status(self) -> str:
        if self.homology is None:
            return "unknown"
        return "equal" if self.image == self.homology else "deficit"


@dataclass
class MuReport:
    n: int
    N: int
    rows: List[MuComparison]

    @property
    def all_equal(self) -> bool:
        return all(r.status == "equal" for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "yified": False,
            "degrees": [
                {
                    "dQ": r.degree.dQ,
                    "dT": r.degree.dT,
                    "dA": r.degree.dA,
                    "homology": r.homology,
                    "image": r.image,
                    "status": r.status,
                }
                for r in self.rows
            ],
            "all_equal": self.all_equal,
            "unknown_degrees": [list(r.degree.as_tuple()) for r in self.rows if r.status == "unknown"],
        }

    def table(self) -> str:
        lines = ["dQ\tdT\tdA\thomology\timage\tstatus"]
        for r in self.rows:
            lines.append(f"{r.degree.dQ}\t{r.degree.dT}\t{r.degree.dA}\t{r.homology}\t{r.image}\t{r.status}")
        lines.append(f"all_equal: {str(self.all_equal).lower()}")
        return "\n".join(lines)


class SubalgebraSpan:
    """Degreewise spanning sets of the subalgebra generated by homogeneous ``generators``.

    The piece at D is spanned by g * (piece at D - deg g) over all generators;
    each piece is kept as an echelon basis of polynomials.  Every generator
    must have positive u-degree so the recursion terminates.
    """

    def __init__(self, generators: Sequence[Poly], n: int, yified: bool):
        from .ring import tridegree_of

        self.generators = [(g, tridegree_of(g)) for g in generators if g]
        self.n = n
        self.yified = yified
        self._memo: Dict[Tridegree, List[Poly]] = {}
        self.ring = generators[0].ring

    def at(self, D: Tridegree) -> List[Poly]:
        if D in self._memo:
            return self._memo[D]
        if D.as_tuple() == (0, 0, 0):
            out = [self.ring.one()]
        elif not piece_nonempty(D, self.n, self.yified) or to_weights(D)[0] <= 0:
            out = []
        else:
            basis = enumerate_basis(D, self.n, self.yified)
            index = {m: i for i, m in enumerate(basis)}
            ech = linalg.Echelon()
            out = []
            for g, gd in self.generators:
                for p in self.at(D - gd):
                    prod = g * p
                    if prod and ech.add(_vector(prod, index)):
                        out.append(prod)
        self._memo[D] = out
        return out


def conjecture_mu_check(n: int, N: int, window: DegreeWindow) -> MuReport:
    """Compare homology with the image of the subalgebra generated by u_i, mu_k."""
    from .differential import build_dn

    if window.yified:
        raise ValueError("the mu comparison is made in y=0 mode")
    d = build_dn(n, N, yified=False)
    ring = d.ring
    gens = [ring.gen(f"u{i}") for i in range(n)] + [mu_class(n, N, k) for k in range(1, n)]
    span = SubalgebraSpan(gens, n, yified=False)
    rows = []
    for D in window.degrees():
        try:
            res, boundaries, index = _analyze(d, D, window, False, False)
        except WindowTooSmall:
            rows.append(MuComparison(D, None, None))
            continue
        ech = linalg.Echelon()
        ech.pivots = dict(boundaries.pivots)
        for p in span.at(D):
            ech.add(_vector(p, index))
        rows.append(MuComparison(D, res.homology, ech.rank - boundaries.rank))
    return MuReport(n, N, rows)
