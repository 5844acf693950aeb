"""GL(V)-equivariant pure resolutions and supernatural bundles (characteristic 0).

Resolution shapes: the j-th free module of the equivariant resolution of
type d is generated by an irreducible S_{lambda(d)_j} V. Starting from the
Koszul complex, whose shapes are (1^j, 0^{n-j}), raising d_i by one keeps
lambda_i and removes a box from part i of every earlier shape and from part
i+1 of every later one. Working on raw weights and normalizing once at the
end keeps all shapes of one complex on a common determinant twist.

Bott's algorithm handles the cohomology of S_w Q (x) O(e) on P(V), where Q
is the rank n-1 tautological quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .betti import DegreeSequence, deg_leq, touching_indices
from .core import GLWeight, horizontal_strips, weyl_dim
from .errors import InvalidIntermediate, InvalidSequence, NoTouchingIndex, NotComparable, PieriFailure
from .supernatural import RootSequence, h_value, root_leq


def _require_finite(d: DegreeSequence) -> tuple[int, ...]:
    if d.length != d.n:
        raise InvalidSequence(f"{d} has infinite entries; equivariant resolutions need length n")
    return d.finite


def koszul_shapes(n: int) -> list[list[int]]:
    return [[1] * j + [0] * (n - j) for j in range(n + 1)]


def apply_increment(shapes: Sequence[Sequence[int]], i: int, times: int = 1) -> list[list[int]]:
    """Raw shapes after raising d_i by ``times``."""
    out = [list(s) for s in shapes]
    for j, s in enumerate(out):
        if j < i:
            s[i - 1] -= times
        elif j > i:
            s[i] -= times
    return out


def increment_positions(d: Sequence[int]) -> list[int]:
    """Unit increments from the Koszul sequence to d, largest position first."""
    n = len(d) - 1
    out = []
    for i in range(n, -1, -1):
        out += [i] * (d[i] - d[0] - i)
    return out


def raw_shapes(d: DegreeSequence, order: Sequence[int] | None = None) -> list[list[int]]:
    fin = _require_finite(d)
    n = d.n
    positions = increment_positions(fin) if order is None else list(order)
    seq = [fin[0] + j for j in range(n + 1)]
    shapes = koszul_shapes(n)
    for i in positions:
        seq[i] += 1
        if (i > 0 and seq[i] <= seq[i - 1]) or (i < n and seq[i] >= seq[i + 1]):
            raise InvalidIntermediate(f"intermediate {seq} is not a degree sequence")
        shapes = apply_increment(shapes, i)
    if tuple(seq) != fin:
        raise ValueError(f"increment order does not reach {d}")
    return shapes


@dataclass(frozen=True)
class EqResolutionShape:
    d: DegreeSequence
    shapes: tuple[GLWeight, ...]
    det_twist: int

    def ranks(self) -> list[int]:
        return [weyl_dim(s, self.d.n) for s in self.shapes]

    def to_record(self) -> dict:
        return {
            "d": self.d.to_record(),
            "shapes": [list(s.parts) for s in self.shapes],
            "det_twist": self.det_twist,
        }

    def render(self) -> str:
        blocks = [f"lambda(d)_{j} = {s}\n{young_diagram(s)}" for j, s in enumerate(self.shapes)]
        return f"d = {self.d}, det twist {self.det_twist}\n\n" + "\n\n".join(blocks)


def efw_shapes(d: DegreeSequence, order: Sequence[int] | None = None) -> EqResolutionShape:
    raw = raw_shapes(d, order)
    twist = -min(min(s) for s in raw)
    shapes = tuple(GLWeight(tuple(p + twist for p in s)) for s in raw)
    return EqResolutionShape(d, shapes, twist)


def efw_base_case(d: DegreeSequence) -> tuple[GLWeight, GLWeight]:
    """Shapes of the first two modules from the closed-form partial sums."""
    fin = _require_finite(d)
    n = d.n
    lam = [sum(fin[j + 1] - fin[j] - 1 for j in range(l, n)) for l in range(1, n)] + [0]
    mu = list(lam)
    mu[0] = lam[0] + fin[1] - fin[0]
    return GLWeight(tuple(lam)), GLWeight(tuple(mu))


def young_diagram(w: GLWeight) -> str:
    """Column convention: part i is drawn as a column of w_i boxes."""
    parts = list(w.parts)
    base = min(0, min(parts))
    if base < 0:
        parts = [p - base for p in parts]
    height = max(parts, default=0)
    if height == 0:
        return "∅" if base == 0 else f"∅ ⊗ det^{base}"
    rows = []
    for level in range(height):
        rows.append("".join("□" if p > level else " " for p in parts).rstrip())
    pic = "\n".join(rows)
    return pic if base == 0 else pic + f"\n⊗ det^{base}"


def increment_chain(d: DegreeSequence, dp: DegreeSequence) -> list[DegreeSequence]:
    """Unit-step chain d < d^1 < ... < d^r = d', largest position first (d excluded)."""
    a = _require_finite(d)
    b = _require_finite(dp)
    if not deg_leq(d, dp):
        raise NotComparable(f"{d} is not <= {dp}")
    if not touching_indices(d, dp):
        raise NoTouchingIndex(f"no k with d_k = d'_k for {d}, {dp}")
    cur = list(a)
    chain = []
    for i in range(d.n, -1, -1):
        while cur[i] < b[i]:
            cur[i] += 1
            try:
                chain.append(DegreeSequence(tuple(cur)))
            except InvalidSequence as exc:  # cannot happen with this order
                raise InvalidIntermediate(str(exc)) from None
    return chain


@dataclass(frozen=True)
class PieriStep:
    position: int
    size: int  # N boxes; 1 for a unit step
    before: tuple[GLWeight, ...]
    after: tuple[GLWeight, ...]
    surjective: dict = field(default_factory=dict)  # j -> verdict, j != position

    def to_record(self) -> dict:
        return {
            "position": self.position,
            "size": self.size,
            "before": [list(s.parts) for s in self.before],
            "after": [list(s.parts) for s in self.after],
            "surjective": {str(j): v for j, v in sorted(self.surjective.items())},
        }


@dataclass(frozen=True)
class EqHomCertificate:
    d: DegreeSequence
    dp: DegreeSequence
    chain: tuple[DegreeSequence, ...]
    steps: tuple[PieriStep, ...]
    grouped: tuple[PieriStep, ...]
    touching: int
    twist_factors: dict  # position -> N, the Sym^N V factors of the grouped construction
    all_touching: tuple[int, ...] = ()

    def surjective_at(self, k: int) -> bool:
        """Composite F'_k -> F_k is surjective when every step is."""
        return all(s.surjective[k] for s in self.steps)

    @property
    def surjective_at_touching(self) -> bool:
        return self.surjective_at(self.touching)

    def to_record(self) -> dict:
        return {
            "d": self.d.to_record(),
            "dp": self.dp.to_record(),
            "chain": [c.to_record() for c in self.chain],
            "touching": self.touching,
            "all_touching": list(self.all_touching),
            "steps": [s.to_record() for s in self.steps],
            "grouped": [s.to_record() for s in self.grouped],
            "twist_factors": {str(k): v for k, v in sorted(self.twist_factors.items())},
            "surjective_at_touching": self.surjective_at_touching,
        }

    def render(self) -> str:
        lines = [f"d = {self.d}  ->  d' = {self.dp}", f"touching index k = {self.touching} (all: {list(self.all_touching)})",
                 f"unit steps: {len(self.steps)}"]
        for g in self.grouped:
            verdicts = ", ".join(f"j={j}:{'surj' if v else 'FAIL'}" for j, v in sorted(g.surjective.items()))
            lines.append(f"  raise d_{g.position} by {g.size} (Sym^{g.size} V): {verdicts}")
        for c in self.chain:
            lines.append(f"  {c}")
        return "\n".join(lines)


def _pieri_step(shapes: list[list[int]], i: int, size: int) -> tuple[PieriStep, list[list[int]]]:
    after = apply_increment(shapes, i, size)
    before_w = tuple(GLWeight(tuple(s)) for s in shapes)
    try:
        after_w = tuple(GLWeight(tuple(s)) for s in after)
    except ValueError as exc:
        raise PieriFailure(f"shape stopped being a weight: {exc}") from None
    if before_w[i] != after_w[i]:
        raise PieriFailure(f"shape {i} changed at its own position")
    verdicts = {}
    for j in range(len(shapes)):
        if j != i:
            verdicts[j] = before_w[j] in horizontal_strips(after_w[j], size)
    return PieriStep(i, size, before_w, after_w, verdicts), after


def eq_hom_witness(d: DegreeSequence, dp: DegreeSequence, k: int | None = None) -> EqHomCertificate:
    """Pieri-surjectivity certificate for Hom_GL(M', M)_0 != 0 (d <= d', touching).

    ``k`` picks the touching index reported; default is the smallest.
    """
    chain = increment_chain(d, dp)
    touching = touching_indices(d, dp)
    if k is None:
        k = touching[0]
    elif k not in touching:
        raise NoTouchingIndex(f"d_{k} != d'_{k}")
    base = efw_shapes(d)
    start = [list(s.parts) for s in base.shapes]

    steps = []
    shapes = start
    prev = list(d.finite)
    for nxt in chain:
        i = next(p for p in range(d.n + 1) if nxt[p] != prev[p])
        step, shapes = _pieri_step(shapes, i, 1)
        steps.append(step)
        prev = list(nxt.finite)

    grouped = []
    twist_factors = {}
    shapes = start
    for i in range(d.n, -1, -1):
        N = int(dp[i] - d[i])
        if N:
            step, shapes = _pieri_step(shapes, i, N)
            grouped.append(step)
            twist_factors[i] = N

    for s in steps + grouped:
        bad = [j for j, v in s.surjective.items() if not v]
        if bad:
            raise PieriFailure(f"Pieri projection not surjective at {bad} in step {s.position}")
    cert = EqHomCertificate(d, dp, tuple(chain), tuple(steps), tuple(grouped), k, twist_factors, tuple(touching))
    for t in touching:
        if not cert.surjective_at(t):
            raise PieriFailure(f"composite map not surjective at touching index {t}")
    return cert


@dataclass(frozen=True)
class BWBResult:
    vanishing: bool
    degree: int | None
    weight: GLWeight | None
    dim: int

    def to_record(self) -> dict:
        return {
            "vanishing": self.vanishing,
            "degree": self.degree,
            "weight": None if self.weight is None else list(self.weight.parts),
            "dim": self.dim,
        }


def bwb(w: GLWeight | Sequence[int], e: int, n: int) -> BWBResult:
    """Cohomology of S_w Q (x) O(e) on P^{n-1} by Bott's algorithm."""
    parts = tuple(w)
    if len(parts) != n - 1:
        raise ValueError(f"weight of width {len(parts)}, expected {n - 1}")
    if parts:
        GLWeight(parts)
    alpha = list(parts) + [-e]
    shifted = [a + (n - 1 - k) for k, a in enumerate(alpha)]
    if len(set(shifted)) < n:
        return BWBResult(True, None, None, 0)
    inversions = sum(1 for x in range(n) for y in range(x + 1, n) if shifted[x] < shifted[y])
    dominant = sorted(shifted, reverse=True)
    lam = GLWeight(tuple(v - (n - 1 - k) for k, v in enumerate(dominant)))
    return BWBResult(False, inversions, lam, weyl_dim(lam, n))


def eq_supernatural_weight(f: RootSequence) -> tuple[GLWeight, int]:
    """(lambda, twist) with S_lambda Q (x) O(twist) supernatural of type f."""
    n = f.n
    if f.length != n - 1:
        raise InvalidSequence("equivariant supernatural bundles need a full-length root sequence")
    r = f.finite
    lam = GLWeight(tuple(r[0] - r[n - i - 1] - n + 1 + i for i in range(1, n)))
    assert lam.parts[-1] >= 0
    return lam, -r[0] - 1


@dataclass(frozen=True)
class EqRootCertificate:
    exists: bool
    lam: GLWeight
    lam_prime: GLWeight
    lam_dd: GLWeight
    lam_c: GLWeight
    N: tuple[int, ...]
    bound: int  # lambda_1 + N_1
    slack: tuple[int, ...]  # bound - (lam_dd_i + lam_c_{n-i})

    def __bool__(self):
        return self.exists

    def to_record(self) -> dict:
        return {
            "exists": self.exists,
            "lambda": list(self.lam.parts),
            "lambda_prime": list(self.lam_prime.parts),
            "lambda_dd": list(self.lam_dd.parts),
            "lambda_c": list(self.lam_c.parts),
            "N": list(self.N),
            "bound": self.bound,
            "slack": list(self.slack),
        }


def eq_root_hom_exists(f: RootSequence, fp: RootSequence) -> EqRootCertificate:
    """Containment test for an invariant section of Hom(E', E), E and E' equivariant.

    The inequality lambda''_i + lambda^c_{n-i} <= lambda_1 + N_1 decides
    whether S_{lambda''} Q* (x) S_{lambda^c} Q* (x) O(lambda_1 + N_1) has a
    summand with sections.
    """
    if not root_leq(f, fp):
        raise NotComparable(f"{f} is not <= {fp}")
    lam, _ = eq_supernatural_weight(f)
    eq_supernatural_weight(fp)
    n = f.n
    N = tuple(b - a for a, b in zip(f.finite, fp.finite))
    lp = [0] * (n - 1)
    for i in range(1, n):
        lp[n - i - 1] = lam[n - i - 1] - N[i - 1]
    lam_prime = GLWeight(tuple(lp))
    lam_dd = lam_prime.shift(N[0])
    lam_c = GLWeight(tuple(lam[0] - lam[n - j - 1] for j in range(1, n)))
    bound = lam[0] + N[0]
    slack = tuple(bound - (lam_dd[i - 1] + lam_c[n - i - 1]) for i in range(1, n))
    return EqRootCertificate(all(s >= 0 for s in slack), lam, lam_prime, lam_dd, lam_c, N, bound, slack)


def supernatural_mismatches(f: RootSequence, window: tuple[int, int]) -> list[tuple]:
    """Columns where the equivariant bundle disagrees with the supernatural table."""
    lam, twist = eq_supernatural_weight(f)
    n = f.n
    s = f.length
    rank = weyl_dim(lam, n - 1)
    fact = 1
    for k in range(2, s + 1):
        fact *= k
    bad = []
    lo, hi = window
    for j in range(lo, hi + 1):
        for i in range(n):
            t = j - i
            res = bwb(lam, t + twist, n)
            got = 0 if res.vanishing or res.degree != i else res.dim
            predicted = h_value(f, i, t)
            # table is the rank s! model, the bundle has rank dim S_lambda Q
            if got * fact != rank * predicted:
                bad.append((i, j, got, predicted))
    return bad


def verify_supernatural_equivariant(f: RootSequence, window: tuple[int, int]) -> bool:
    return not supernatural_mismatches(f, window)
