"""Root sequences, supernatural cohomology tables and Hom bounds between supernatural sheaves.

The sheaf of type f used throughout is E_f = pi_* O(-f - 1) for the finite
map pi: (P^1)^s -> P^s given by the multilinear forms, pushed into P^{n-1}
along a linear subspace; it has rank s! and Hilbert polynomial
prod_k (t - f_k). Table entries are integers in this normalization; divide
by s! for the rank-one view.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import NEG_INF, Entry, binomial, format_entry, parse_entry
from .errors import FiniteAfterInfinity, InvalidSequence, NotIncreasing


@dataclass(frozen=True)
class RootSequence:
    """Strictly decreasing f_1 > f_2 > ... > f_{n-1}, with a -inf tail allowed."""

    entries: tuple[Entry, ...]

    def __post_init__(self):
        if any(e == -NEG_INF for e in self.entries):
            raise InvalidSequence("root sequences cannot contain +inf")
        entries = tuple(NEG_INF if e == NEG_INF else int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        for i in range(1, len(entries)):
            prev, cur = entries[i - 1], entries[i]
            if prev == NEG_INF and cur != NEG_INF:
                raise FiniteAfterInfinity(f"finite entry f_{i + 1}={cur} after -inf")
            if cur != NEG_INF and cur >= prev:
                raise NotIncreasing(f"f_{i + 1}={cur} is not smaller than f_{i}={prev}")

    @property
    def n(self) -> int:
        """The ambient space is P^{n-1}."""
        return len(self.entries) + 1

    @property
    def length(self) -> int:
        return sum(1 for e in self.entries if e != NEG_INF)

    @property
    def finite(self) -> tuple[int, ...]:
        return tuple(int(e) for e in self.entries[: self.length])

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def to_record(self) -> list:
        return [format_entry(e) for e in self.entries]

    def __str__(self):
        return "(" + ",".join(format_entry(e) for e in self.entries) + ")"


def root_sequence(text: str | Sequence[Entry], n: int | None = None) -> RootSequence:
    """Parse ``"-2,-3,-inf"``; pads with -inf up to n-1 entries when n is given."""
    if isinstance(text, str):
        raw = [parse_entry(t) for t in text.split(",") if t.strip()]
    else:
        raw = list(text)
    if n is not None:
        if len(raw) > n - 1:
            raise InvalidSequence(f"{len(raw)} roots for P^{n - 1}")
        raw += [NEG_INF] * (n - 1 - len(raw))
    return RootSequence(tuple(raw))


def root_leq(f: RootSequence, fp: RootSequence) -> bool:
    if f.n != fp.n:
        raise ValueError("root sequences for different n")
    return all(a <= b for a, b in zip(f.entries, fp.entries))


def rank_convention(f: RootSequence) -> int:
    return math.factorial(f.length)


def hilbert_polynomial(f: RootSequence, t: int) -> int:
    out = 1
    for r in f.finite:
        out *= t - r
    return out


def h_value(f: RootSequence, i: int, t: int) -> int:
    """dim H^i(E_f(t)) for the rank-s! model."""
    if not 0 <= i <= f.n - 1:
        raise ValueError(f"row {i} outside 0..{f.n - 1}")
    s = f.length
    if i > s:
        return 0
    roots = f.finite
    upper = math.inf if i == 0 else roots[i - 1]
    lower = -math.inf if i == s else roots[i]
    if lower < t < upper:
        return abs(hilbert_polynomial(f, t))
    return 0


def default_window(f: RootSequence) -> tuple[int, int]:
    s = f.length
    if s == 0:
        return (-3, 3)
    roots = f.finite
    return (roots[-1] + s - 2, roots[0] + 3)


@dataclass(frozen=True, eq=False)
class SupernaturalTable:
    f: RootSequence
    rank_convention: int
    window: tuple[int, int]
    values: dict = field(default_factory=dict)  # (row i, column j) -> h^i(E(j - i)), nonzero only

    def __getitem__(self, key) -> int:
        return self.values.get(key, 0)

    def to_records(self) -> dict:
        return {
            "f": self.f.to_record(),
            "rank_convention": self.rank_convention,
            "rank_convention_note": "rank s! pushforward model, s = length of f",
            "window": list(self.window),
            "entries": [{"i": i, "j": j, "value": v} for (i, j), v in sorted(self.values.items())],
        }

    def render(self) -> str:
        lo, hi = self.window
        cols = list(range(lo, hi + 1))
        rows = list(range(self.f.n - 1, -1, -1))
        cells = [[f"{i}:"] + [str(self[(i, j)]) if self[(i, j)] else "." for j in cols] for i in rows]
        header = [""] + [str(j) for j in cols]
        table = [header] + cells
        widths = [max(len(r[k]) for r in table) for k in range(len(header))]
        return "\n".join(
            " ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip() for r in table
        )


def table(f: RootSequence, window: Optional[tuple[int, int]] = None) -> SupernaturalTable:
    if window is None:
        window = default_window(f)
    lo, hi = window
    values = {}
    for j in range(lo, hi + 1):
        nonzero = 0
        for i in range(f.n):
            v = h_value(f, i, j - i)
            if v:
                values[(i, j)] = v
                nonzero += 1
        assert nonzero <= 1, (f, j)
    return SupernaturalTable(f, rank_convention(f), (lo, hi), values)


def hom_lower_bound(f: RootSequence, fp: RootSequence) -> int:
    """dim H^0((P^1)^s, O(tau(f') - tau(f))) <= dim Hom(E_{f'}, E_f); zero when f is not <= f'."""
    if not root_leq(f, fp):
        return 0
    out = 1
    for a, b in zip(f.finite, fp.finite):
        out *= b - a + 1
    return out


def _is_run(roots: Sequence[int]) -> bool:
    return all(roots[i] == roots[0] - i for i in range(len(roots)))


def split_hom_dim(f: RootSequence, fp: RootSequence) -> Optional[int]:
    """Exact dim Hom(E_{f'}, E_f) when both bundles split as sums of line bundles.

    That happens when both truncations are runs of consecutive integers of
    the same length s: then E_f = O(-f_1 - 1)^{s!} on P^s. Returns None
    otherwise.
    """
    s = f.length
    if fp.length != s or not _is_run(f.finite) or not _is_run(fp.finite):
        return None
    if s == 0:
        return 1
    gap = fp[0] - f[0]
    if gap < 0:
        return 0
    return math.factorial(s) ** 2 * binomial(gap + s, s)


def root_hom_exists(f: RootSequence, fp: RootSequence) -> bool:
    return root_leq(f, fp)
