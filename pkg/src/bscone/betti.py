"""Degree sequences, Betti diagrams, pure diagrams and Boij-Soederberg decomposition.

Betti numbers are keyed by ``(i, j)`` meaning beta_{i,j}: homological index
``i`` and internal degree ``j``. The usual betti-table picture puts
beta_{i,j} in column ``i`` and row ``j - i``; :meth:`BettiDiagram.render`
draws that picture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import INF, Entry, format_entry, format_fraction, lcm_all, parse_entry, parse_fraction
from .errors import (
    EmptyDiagram,
    FiniteAfterInfinity,
    InvalidSequence,
    NotComparable,
    NotInCone,
    NotIncreasing,
)


@dataclass(frozen=True)
class DegreeSequence:
    """Strictly increasing d_0 < d_1 < ... < d_n with an infinite tail allowed.

    ``n`` is the number of variables, so there are n+1 entries. Infinite
    entries are ``math.inf``.
    """

    entries: tuple[Entry, ...]

    def __post_init__(self):
        if any(e == -INF for e in self.entries):
            raise InvalidSequence("degree sequences cannot contain -inf")
        entries = tuple(INF if e == INF else int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidSequence("a degree sequence needs at least one entry")
        if entries[0] == INF:
            raise InvalidSequence("d_0 must be finite")
        for i in range(1, len(entries)):
            prev, cur = entries[i - 1], entries[i]
            if prev == INF and cur != INF:
                raise FiniteAfterInfinity(f"finite entry d_{i}={cur} after an infinite one")
            if cur != INF and cur <= prev:
                raise NotIncreasing(f"d_{i}={cur} is not greater than d_{i - 1}={prev}")

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    @property
    def length(self) -> int:
        """Largest index with a finite entry."""
        return max(i for i, e in enumerate(self.entries) if e != INF)

    @property
    def finite(self) -> tuple[int, ...]:
        return tuple(int(e) for e in self.entries[: self.length + 1])

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def shifted(self, t: int) -> DegreeSequence:
        return DegreeSequence(tuple(e if e == INF else e + t for e in self.entries))

    def to_record(self) -> list:
        return [format_entry(e) for e in self.entries]

    def __str__(self):
        return "(" + ",".join(format_entry(e) for e in self.entries) + ")"


def validate_degree_sequence(raw: Sequence[Entry], n: int | None = None) -> DegreeSequence:
    if n is not None and len(raw) != n + 1:
        raise InvalidSequence(f"expected {n + 1} entries for n={n}, got {len(raw)}")
    return DegreeSequence(tuple(raw))


def degree_sequence(text: str | Sequence[Entry], n: int | None = None) -> DegreeSequence:
    """Build a sequence from ``"0,2,4,inf"`` or a list; pads with inf up to n+1 entries."""
    if isinstance(text, str):
        raw = [parse_entry(t) for t in text.split(",") if t.strip()]
    else:
        raw = list(text)
    if n is not None and len(raw) < n + 1:
        raw = raw + [INF] * (n + 1 - len(raw))
    return validate_degree_sequence(raw, n)


def deg_leq(d: DegreeSequence, dp: DegreeSequence) -> bool:
    """d <= d' componentwise (t <= inf always, inf <= inf true)."""
    if d.n != dp.n:
        raise ValueError("degree sequences for different n")
    return all(a <= b for a, b in zip(d.entries, dp.entries))


def touching_indices(d: DegreeSequence, dp: DegreeSequence) -> list[int]:
    return [j for j in range(dp.length + 1) if d[j] == dp[j]]


def shift_reduction(d: DegreeSequence, dp: DegreeSequence) -> tuple[int, DegreeSequence]:
    """Shift d' down by t = min(d'_i - d_i) so that it touches d somewhere."""
    if not deg_leq(d, dp):
        raise NotComparable(f"{d} is not <= {dp}")
    t = min(dp[i] - d[i] for i in range(dp.length + 1))
    return int(t), dp.shifted(-int(t))


def deg_hom_exists(d: DegreeSequence, dp: DegreeSequence) -> bool:
    """Whether modules of types d, d' with Hom(M', M)_{<=0} != 0 exist.

    This is exactly comparability; a constructive certificate comes from
    :func:`bscone.es_construction.hom_witness` after :func:`shift_reduction`.
    """
    return deg_leq(d, dp)


@dataclass(frozen=True)
class PureDiagram:
    d: DegreeSequence
    betti: tuple[int, ...]

    def to_diagram(self, scale=1) -> BettiDiagram:
        scale = parse_fraction(scale)
        entries = {(i, self.d[i]): b * scale for i, b in enumerate(self.betti)}
        return BettiDiagram(self.d.n, entries)


def herzog_kuehl_ratios(d: DegreeSequence) -> list[Fraction]:
    fin = d.finite
    out = []
    for i, di in enumerate(fin):
        prod = 1
        for j, dj in enumerate(fin):
            if j != i:
                prod *= abs(dj - di)
        out.append(Fraction(1, prod))
    return out


def pure_diagram(d: DegreeSequence) -> PureDiagram:
    """Normalized Betti numbers of the extremal ray rho_d (coprime positive integers)."""
    ratios = herzog_kuehl_ratios(d)
    scale = lcm_all(q.denominator for q in ratios)
    ints = [int(q * scale) for q in ratios]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return PureDiagram(d, tuple(v // g for v in ints))


@dataclass(frozen=True, eq=False)
class BettiDiagram:
    """Sparse nonnegative rational table beta_{i,j}; zero entries are dropped."""

    n: int
    entries: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            v = parse_fraction(v)
            if not 0 <= i <= self.n:
                raise ValueError(f"column {i} outside 0..{self.n}")
            if v < 0:
                raise ValueError(f"negative Betti number at ({i},{j})")
            if v != 0:
                clean[(int(i), int(j))] = v
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __getitem__(self, key) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: BettiDiagram) -> BettiDiagram:
        if self.n != other.n:
            raise ValueError("diagrams for different n")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return BettiDiagram(self.n, out)

    def __rmul__(self, c) -> BettiDiagram:
        c = parse_fraction(c)
        return BettiDiagram(self.n, {k: c * v for k, v in self.entries.items()})

    def top_strand(self) -> list[Entry]:
        """Minimal degree in each column, inf for empty columns."""
        strand: list[Entry] = [INF] * (self.n + 1)
        for (i, j) in self.entries:
            if j < strand[i]:
                strand[i] = j
        return strand

    def to_records(self) -> list[dict]:
        return [{"i": i, "j": j, "value": format_fraction(v)} for (i, j), v in self.entries.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping], n: int | None = None) -> BettiDiagram:
        records = list(records)
        entries = {}
        for rec in records:
            key = (int(rec["i"]), int(rec["j"]))
            entries[key] = entries.get(key, 0) + parse_fraction(str(rec["value"]))
        if n is None:
            n = max((k[0] for k in entries), default=0)
        return cls(n, entries)

    def render(self) -> str:
        """Betti table layout: column i, row j - i."""
        if not self.entries:
            return "(zero diagram)"
        rows = sorted({j - i for (i, j) in self.entries})
        cols = range(self.n + 1)

        def cell(v):
            return "." if v == 0 else (str(v.numerator) if v.denominator == 1 else format_fraction(v))

        body = [[f"{r}:"] + [cell(self[(i, i + r)]) for i in cols] for r in rows]
        totals = [sum((v for (i, _), v in self.entries.items() if i == c), Fraction(0)) for c in cols]
        header = [""] + [str(c) for c in cols]
        total = ["total:"] + [cell(t) for t in totals]
        table = [header, total] + body
        widths = [max(len(row[k]) for row in table) for k in range(len(header))]
        lines = []
        for row in table:
            first = row[0].ljust(widths[0])
            rest = " ".join(x.rjust(w) for x, w in zip(row[1:], widths[1:]))
            lines.append(f"{first} {rest}".rstrip())
        return "\n".join(lines)


@dataclass(frozen=True)
class Decomposition:
    terms: tuple[tuple[Fraction, PureDiagram], ...]

    def total(self, n: int) -> BettiDiagram:
        out = BettiDiagram(n, {})
        for c, p in self.terms:
            out = out + p.to_diagram(c)
        return out

    def to_records(self) -> list[dict]:
        return [
            {"coefficient": format_fraction(c), "d": p.d.to_record(), "betti": list(p.betti)}
            for c, p in self.terms
        ]


def decompose(B: BettiDiagram) -> Decomposition:
    """Greedy Boij-Soederberg decomposition along the top strand.

    Raises NotInCone when the top strand is not a degree sequence or a
    subtraction would leave a negative entry; EmptyDiagram for B = 0.
    """
    if B.is_zero():
        raise EmptyDiagram("cannot decompose the zero diagram")
    terms = []
    current = dict(B.entries)
    while current:
        strand = BettiDiagram(B.n, current).top_strand()
        try:
            d = DegreeSequence(tuple(strand))
        except (NotIncreasing, FiniteAfterInfinity, InvalidSequence) as exc:
            raise NotInCone(f"top strand {strand} is not a degree sequence: {exc}") from None
        pure = pure_diagram(d)
        c = min(current[(i, d[i])] / b for i, b in enumerate(pure.betti))
        for i, b in enumerate(pure.betti):
            key = (i, d[i])
            v = current[key] - c * b
            if v < 0:
                raise NotInCone(f"negative entry at {key}")
            if v == 0:
                del current[key]
            else:
                current[key] = v
        terms.append((c, pure))
    for (_, p), (_, q) in zip(terms, terms[1:]):
        # greedy steps always climb the poset
        assert deg_leq(p.d, q.d) and p.d != q.d
    return Decomposition(tuple(terms))
