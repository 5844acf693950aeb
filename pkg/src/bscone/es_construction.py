"""Pure resolutions pushed forward from P^{n-1} x (P^1)^r, and degree-0 Hom witnesses.

For comparable degree sequences d <= d' both resolutions are built from
Koszul complexes on the same product of projective spaces, twisted by the
line bundles O(-d_0, a) and O(-d_0, a'). Multiplication by
h = prod (y_0^(i))^{c_i}, c = a - a', induces nu: F'_j -> F_j. At an index
with d_j = d'_j the map nu_j is a matrix of scalars, and it is nonzero on an
explicit basis element, which certifies Hom(M', M)_0 != 0.

Bases of H^0(P^1, O(m)) are monomials y_0^p y_1^q with p, q >= 0, p + q = m;
bases of H^1(P^1, O(m)), m <= -2, are Laurent monomials with p, q <= -1.
Within one P^1 factor monomials are listed by decreasing y_0 exponent. The
exterior factor is indexed by subsets I, listed in colex order, so that the
subsets of {1..N'} form a prefix of the subsets of {1..N} for N' <= N.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np
import scipy.sparse as sp

from .betti import DegreeSequence, deg_leq, touching_indices
from .core import ExponentMatrix, binomial, format_entry
from .errors import BasisTooLarge, DeltaSizeMismatch, NoTouchingIndex, NotComparable

DEFAULT_BASIS_CAP = 10**6

Side = Literal["unprimed", "primed"]


@dataclass(frozen=True)
class EsData:
    d: DegreeSequence
    dp: DegreeSequence
    r: int
    D: tuple[int, int]  # inclusive interval
    Dp: tuple[int, int]
    delta: tuple[int, ...]
    deltap: tuple[int, ...]
    a: tuple[int, ...]
    ap: tuple[int, ...]
    c: Optional[tuple[int, ...]]

    @property
    def d0(self) -> int:
        return int(self.d[0])

    def side(self, side: Side):
        """(degree sequence, twist vector a) for the chosen side."""
        if side == "unprimed":
            return self.d, self.a
        if side == "primed":
            return self.dp, self.ap
        raise ValueError(f"unknown side {side!r}")

    def to_record(self) -> dict:
        return {
            "d": self.d.to_record(),
            "dp": self.dp.to_record(),
            "r": self.r,
            "D": list(self.D),
            "Dp": list(self.Dp),
            "delta": list(self.delta),
            "deltap": list(self.deltap),
            "a": list(self.a),
            "ap": list(self.ap),
            "c": None if self.c is None else list(self.c),
        }


def es_setup(d: DegreeSequence, dp: DegreeSequence) -> EsData:
    if d.n != dp.n:
        raise ValueError("degree sequences for different n")
    d0 = int(d[0])
    ell, ellp = d.length, dp.length
    r = max(d[ell] - d0 - ell, dp[ellp] - d0 - ellp, 0)
    r = int(r)
    D = (d0, d0 + ell + r)
    Dp = (d0, d0 + ellp + r)
    # D' also starts at d_0 (of d), even when d'_0 != d_0
    delta = tuple(sorted(set(range(D[0], D[1] + 1)) - set(d.finite)))
    deltap = tuple(sorted(set(range(Dp[0], Dp[1] + 1)) - set(dp.finite)))
    if len(delta) != r or len(deltap) != r:
        raise DeltaSizeMismatch(
            f"|D \\ d| = {len(delta)}, |D' \\ d'| = {len(deltap)}, expected r = {r}"
        )
    a = tuple(x - (d0 + 1) for x in delta)
    ap = tuple(x - (d0 + 1) for x in deltap)
    c = None
    if deg_leq(d, dp):
        c = tuple(x - y for x, y in zip(a, ap))
        assert all(x >= 0 for x in c), c
    return EsData(d, dp, r, D, Dp, delta, deltap, a, ap, c)


@dataclass(frozen=True)
class TwistTable:
    side: Side
    rows: tuple[tuple[int, ...], ...]  # row i: (P^{n-1} twist, P^1 twists...)
    ranks: tuple[int, ...]  # Koszul rank C(l + r, i)

    def render(self, title: str = "") -> str:
        """Text version of the twist table; killed P^1 twists (-1) are bracketed."""
        cells = []
        for i, row in enumerate(self.rows):
            parts = [str(row[0])] + [f"[{x}]" if x == -1 else str(x) for x in row[1:]]
            cells.append((str(-i), "(" + ", ".join(parts) + ")", str(self.ranks[i])))
        head = ("i", "twist", "rank")
        w = [max(len(x[k]) for x in cells + [head]) for k in range(3)]
        lines = [title] if title else []
        lines.append(" | ".join(h.ljust(w[k]) for k, h in enumerate(head)).rstrip())
        lines.append("-+-".join("-" * x for x in w))
        lines += [" | ".join(c[k].rjust(w[k]) if k != 1 else c[k].ljust(w[k]) for k in range(3)).rstrip()
                  for c in cells]
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {"side": self.side, "rows": [list(r) for r in self.rows], "ranks": list(self.ranks)}


def twist_table(e: EsData, side: Side = "unprimed") -> TwistTable:
    seq, a = e.side(side)
    top = seq.length + e.r
    rows = tuple((-e.d0 - i,) + tuple(x - i for x in a) for i in range(top + 1))
    ranks = tuple(binomial(top, i) for i in range(top + 1))
    return TwistTable(side, rows, ranks)


@dataclass(frozen=True)
class Factor:
    kind: Literal["H0", "H1"]
    degree: int

    @property
    def dim(self) -> int:
        return self.degree + 1 if self.kind == "H0" else -self.degree - 1

    def monomials(self) -> list[tuple[int, int]]:
        m = self.degree
        if self.kind == "H0":
            return [(p, m - p) for p in range(m, -1, -1)]
        return [(p, m - p) for p in range(-1, m, -1)]

    def contains(self, col: tuple[int, int]) -> bool:
        p, q = col
        if p + q != self.degree:
            return False
        if self.kind == "H0":
            return p >= 0 and q >= 0
        return p <= -1 and q <= -1


@dataclass(frozen=True)
class FreeModuleDescriptor:
    side: Side
    j: int
    twist: int  # F_j = S(-twist)^rank
    koszul_degree: int  # d_j - d_0
    koszul_n: int  # l + r, the number of Koszul generators
    koszul_rank: int
    s: int
    factors: tuple[Factor, ...]
    total_rank: int

    def to_record(self) -> dict:
        return {
            "side": self.side,
            "j": self.j,
            "twist": self.twist,
            "koszul_rank": self.koszul_rank,
            "s": self.s,
            "factors": [[f.kind, f.degree] for f in self.factors],
            "total_rank": self.total_rank,
        }

    def __str__(self):
        fs = " ⊗ ".join(
            f"{f.kind}(P^1, O({f.degree}))" for f in self.factors
        )
        head = f"S(-{self.twist})^C({self.koszul_n},{self.koszul_degree})"
        return f"{head} ⊗ {fs}" if fs else head


def free_module(e: EsData, side: Side, j: int) -> FreeModuleDescriptor:
    seq, a = e.side(side)
    if not 0 <= j <= seq.length:
        raise ValueError(f"j={j} outside 0..{seq.length}")
    dj = int(seq[j])
    k = dj - e.d0
    N = seq.length + e.r
    degrees = [x - k for x in a]
    # a_i - d_j + d_0 = delta_i - d_j - 1, and delta is disjoint from d
    assert all(m != -1 for m in degrees), degrees
    factors = tuple(Factor("H1" if m <= -2 else "H0", m) for m in degrees)
    s = max((i + 1 for i, m in enumerate(degrees) if m <= -2), default=0)
    rank = binomial(N, k)
    total = rank
    for f in factors:
        total *= f.dim
    return FreeModuleDescriptor(side, j, dj, k, N, rank, s, factors, total)


@dataclass(frozen=True)
class BasisElement:
    subset: tuple[int, ...]  # exterior index I, 1-based and sorted
    exps: ExponentMatrix

    def top_row(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.exps)

    def bottom_row(self) -> tuple[int, ...]:
        return tuple(c[1] for c in self.exps)

    def to_record(self) -> dict:
        return {"subset": list(self.subset), "exps": [list(self.top_row()), list(self.bottom_row())]}

    def __str__(self):
        I = ",".join(map(str, self.subset))
        return f"e_{{{I}}} ⊗ y^({self.top_row()}, {self.bottom_row()})"


def colex_subsets(N: int, k: int) -> list[tuple[int, ...]]:
    subs = itertools.combinations(range(1, N + 1), k)
    return sorted(subs, key=lambda s: tuple(reversed(s)))


def is_basis_element(fm: FreeModuleDescriptor, b: BasisElement) -> bool:
    if len(b.subset) != fm.koszul_degree or len(set(b.subset)) != len(b.subset):
        return False
    if list(b.subset) != sorted(b.subset) or any(not 1 <= x <= fm.koszul_n for x in b.subset):
        return False
    if len(b.exps) != len(fm.factors):
        return False
    return all(f.contains(col) for f, col in zip(fm.factors, b.exps))


def enumerate_basis(fm: FreeModuleDescriptor, cap: int = DEFAULT_BASIS_CAP) -> list[BasisElement]:
    if fm.total_rank > cap:
        raise BasisTooLarge(f"rank {fm.total_rank} exceeds cap {cap}")
    subsets = colex_subsets(fm.koszul_n, fm.koszul_degree)
    cols = [f.monomials() for f in fm.factors]
    return [
        BasisElement(I, tuple(exps))
        for I in subsets
        for exps in itertools.product(*cols)
    ]


def witness_element(e: EsData, j: int) -> BasisElement:
    """Distinguished basis element of F'_j whose image under nu_j is nonzero.

    Column i is (m'_i + 1, -1) on H^1 factors and (m'_i, 0) on H^0 factors,
    m'_i = a'_i - d_j + d_0; adding c_i to the top entry lands on
    (m_i + 1, -1) resp. (m_i, 0) in F_j.
    """
    fm = free_module(e, "primed", j)
    cols = tuple((f.degree + 1, -1) if f.kind == "H1" else (f.degree, 0) for f in fm.factors)
    return BasisElement(tuple(range(1, fm.koszul_degree + 1)), cols)


def nu_apply(e: EsData, j: int, b: BasisElement) -> Optional[BasisElement]:
    """Image of a basis element of F'_j in F_j under multiplication by h; None for zero."""
    if e.c is None:
        raise NotComparable("nu is only defined when d <= d'")
    if e.d[j] != e.dp[j]:
        raise NoTouchingIndex(f"d_{j} != d'_{j}; nu_{j} is not a scalar matrix")
    target = free_module(e, "unprimed", j)
    image = BasisElement(b.subset, tuple((p + ci, q) for (p, q), ci in zip(b.exps, e.c)))
    return image if is_basis_element(target, image) else None


@dataclass(frozen=True)
class NuMatrix:
    """nu_j as a Kronecker product: exterior factor first, then one block per P^1 factor.

    The row/column order is the basis order of :func:`enumerate_basis`.
    """

    factors: tuple[sp.csr_matrix, ...]

    @property
    def shape(self) -> tuple[int, int]:
        rows = cols = 1
        for f in self.factors:
            rows *= f.shape[0]
            cols *= f.shape[1]
        return rows, cols

    @property
    def nnz(self) -> int:
        out = 1
        for f in self.factors:
            out *= int(f.nnz)
        return out

    def is_zero(self) -> bool:
        return self.nnz == 0

    def to_sparse(self, cap: int = DEFAULT_BASIS_CAP) -> sp.csr_matrix:
        rows, cols = self.shape
        if max(rows, cols) > cap:
            raise BasisTooLarge(f"nu matrix {rows}x{cols} exceeds cap {cap}")
        out = sp.csr_matrix(np.ones((1, 1), dtype=np.int8))
        for f in self.factors:
            out = sp.kron(out, f, format="csr")
        return out


def _block(target: list, source: list, image) -> sp.csr_matrix:
    index = {x: i for i, x in enumerate(target)}
    rows, cols = [], []
    for col, x in enumerate(source):
        y = image(x)
        if y is not None and y in index:
            rows.append(index[y])
            cols.append(col)
    data = np.ones(len(rows), dtype=np.int8)
    return sp.csr_matrix((data, (rows, cols)), shape=(len(target), len(source)))


def nu_factors(e: EsData, j: int) -> NuMatrix:
    if e.c is None:
        raise NotComparable("nu is only defined when d <= d'")
    if e.d[j] != e.dp[j]:
        raise NoTouchingIndex(f"d_{j} != d'_{j}")
    src = free_module(e, "primed", j)
    tgt = free_module(e, "unprimed", j)
    assert src.twist == tgt.twist and src.s == tgt.s
    # exterior part: eps_I -> eps_I; in colex order this is [Id; 0]
    kos = sp.eye(tgt.koszul_rank, src.koszul_rank, dtype=np.int8, format="csr")
    blocks = [kos]
    for fs, ft, ci in zip(src.factors, tgt.factors, e.c):
        blocks.append(_block(ft.monomials(), fs.monomials(), lambda x, ci=ci: (x[0] + ci, x[1])))
    return NuMatrix(tuple(blocks))


def nu_matrix(e: EsData, j: int, cap: int = DEFAULT_BASIS_CAP) -> sp.csr_matrix:
    """0/1 matrix of nu_j: F'_j -> F_j, rows indexed by the F_j basis."""
    return nu_factors(e, j).to_sparse(cap)


def nu_matrix_by_enumeration(e: EsData, j: int, cap: int = DEFAULT_BASIS_CAP) -> sp.csr_matrix:
    """Same matrix built column by column from :func:`nu_apply` (slow, for checking)."""
    src = enumerate_basis(free_module(e, "primed", j), cap)
    tgt = enumerate_basis(free_module(e, "unprimed", j), cap)
    return _block(tgt, src, lambda b: nu_apply(e, j, b))


@dataclass(frozen=True)
class WitnessCertificate:
    es: EsData
    j: int
    table: TwistTable
    table_primed: TwistTable
    source: FreeModuleDescriptor  # F'_j
    target: FreeModuleDescriptor  # F_j
    witness: BasisElement
    image: BasisElement

    def to_record(self) -> dict:
        return {
            "es": self.es.to_record(),
            "j": self.j,
            "twist_table": self.table.to_record(),
            "twist_table_primed": self.table_primed.to_record(),
            "source": self.source.to_record(),
            "target": self.target.to_record(),
            "witness": self.witness.to_record(),
            "image": self.image.to_record(),
        }

    def render(self) -> str:
        e = self.es
        lines = [
            f"d  = {e.d}",
            f"d' = {e.dp}",
            f"r = {e.r}, delta = {e.delta}, delta' = {e.deltap}",
            f"a = {e.a}, a' = {e.ap}, c = a - a' = {e.c}",
            f"touching index j = {self.j} (d_j = d'_j = {format_entry(e.d[self.j])})",
            f"F'_j = {self.source}",
            f"F_j  = {self.target}",
            f"nu_j({self.witness}) = {self.image}",
        ]
        return "\n".join(lines)


def hom_witness(d: DegreeSequence, dp: DegreeSequence, j: Optional[int] = None) -> WitnessCertificate:
    """Certificate that Hom(M', M)_0 != 0 for the modules built from d <= d'.

    Needs an index j <= l(d') with d_j = d'_j; run
    :func:`bscone.betti.shift_reduction` first to create one. The smallest
    touching index is used unless ``j`` is given.
    """
    if not deg_leq(d, dp):
        raise NotComparable(f"{d} is not <= {dp}")
    touching = touching_indices(d, dp)
    if not touching:
        raise NoTouchingIndex(f"no j <= l(d') with d_j = d'_j for {d}, {dp}")
    if j is None:
        j = touching[0]
    elif j not in touching:
        raise NoTouchingIndex(f"d_{j} != d'_{j}")
    e = es_setup(d, dp)
    src = free_module(e, "primed", j)
    tgt = free_module(e, "unprimed", j)
    w = witness_element(e, j)
    assert is_basis_element(src, w), w
    img = nu_apply(e, j, w)
    assert img is not None and is_basis_element(tgt, img)
    return WitnessCertificate(e, j, twist_table(e, "unprimed"), twist_table(e, "primed"), src, tgt, w, img)
