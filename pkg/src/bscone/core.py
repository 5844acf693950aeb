"""Exact arithmetic and small combinatorial helpers shared by every module."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

INF = math.inf
NEG_INF = -math.inf

# an entry of a degree or root sequence
Entry = Union[int, float]

# 2 x r exponent matrix stored column-wise: column i is (exp of y_0^(i), exp of y_1^(i))
ExponentMatrix = tuple[tuple[int, int], ...]


def binomial(m: int, k: int) -> int:
    """C(m, k), zero outside 0 <= k <= m."""
    if m < 0:
        raise ValueError(f"binomial needs m >= 0, got {m}")
    if k < 0 or k > m:
        return 0
    return math.comb(m, k)


@dataclass(frozen=True)
class GLWeight:
    """Weakly decreasing integer vector; the highest weight of a Schur functor.

    The width is the number of parts and is significant: ``(1, 0)`` and
    ``(1, 0, 0)`` are weights for different groups.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a weight needs at least one part")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"weight {parts} is not weakly decreasing")

    @property
    def width(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __len__(self):
        return len(self.parts)

    def shift(self, c: int) -> GLWeight:
        """Add ``c`` to every part (a power of the determinant)."""
        return GLWeight(tuple(p + c for p in self.parts))

    def dual(self) -> GLWeight:
        return GLWeight(tuple(-p for p in reversed(self.parts)))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def weight(*parts: int) -> GLWeight:
    if len(parts) == 1 and not isinstance(parts[0], int):
        parts = tuple(parts[0])
    return GLWeight(tuple(parts))


def weyl_dim(w: GLWeight | Sequence[int], n: int) -> int:
    """Dimension of the Schur functor S_w applied to an n-dimensional space."""
    parts = tuple(w)
    if len(parts) != n:
        raise ValueError(f"weight {parts} has width {len(parts)}, expected {n}")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    return num // den


def horizontal_strips(w: GLWeight, N: int) -> list[GLWeight]:
    """All mu of the same width with mu / w a horizontal strip of N boxes.

    This is the Pieri rule for S_w tensor Sym^N. Results are sorted
    lexicographically descending.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    parts = w.parts
    out: list[tuple[int, ...]] = []

    def extend(i: int, left: int, acc: list[int]):
        if i == len(parts):
            if left == 0:
                out.append(tuple(acc))
            return
        # mu_1 is unbounded above; mu_i <= w_{i-1} otherwise
        hi = parts[i] + left if i == 0 else min(parts[i - 1], parts[i] + left)
        for v in range(hi, parts[i] - 1, -1):
            acc.append(v)
            extend(i + 1, left - (v - parts[i]), acc)
            acc.pop()

    extend(0, N, [])
    out.sort(reverse=True)
    return [GLWeight(p) for p in out]


def lcm_all(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def format_entry(x: Entry) -> str:
    if x == INF:
        return "inf"
    if x == NEG_INF:
        return "-inf"
    return str(int(x))


def parse_entry(token: str) -> Entry:
    token = token.strip()
    if token in ("inf", "+inf", "oo", "∞"):
        return INF
    if token in ("-inf", "-oo", "-∞"):
        return NEG_INF
    return int(token)


def parse_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int or a 'p/q' string")
    return Fraction(value)


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
