import random

import pytest
from hypothesis import strategies as st

from bscone.betti import DegreeSequence
from bscone.core import INF, NEG_INF
from bscone.supernatural import RootSequence


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def degree_sequences(draw, n=None, lo=-5, hi=12, allow_inf=True):
    if n is None:
        n = draw(st.integers(1, 4))
    ell = draw(st.integers(0, n)) if allow_inf else n
    vals = sorted(draw(st.sets(st.integers(lo, hi), min_size=ell + 1, max_size=ell + 1)))
    return DegreeSequence(tuple(vals) + (INF,) * (n - ell))


@st.composite
def comparable_pairs(draw, n=None, allow_inf=True):
    """(d, d') with d <= d' componentwise."""
    d = draw(degree_sequences(n=n, allow_inf=allow_inf))
    cur = list(d.entries)
    # raise entries from the right so every prefix stays increasing
    for i in range(d.n, -1, -1):
        if cur[i] == INF:
            continue
        room = (cur[i + 1] - 1 if i < d.n else 20) - cur[i]
        room = min(room, 6) if room != INF else 6
        cur[i] += draw(st.integers(0, int(room)))
    if allow_inf and draw(st.booleans()):
        cut = draw(st.integers(1, d.n))
        cur[cut:] = [INF] * (d.n + 1 - cut)
    return d, DegreeSequence(tuple(cur))


@st.composite
def root_sequences(draw, n=None, full=True, lo=-12, hi=6):
    if n is None:
        n = draw(st.integers(2, 5))
    s = n - 1 if full else draw(st.integers(0, n - 1))
    vals = sorted(draw(st.sets(st.integers(lo, hi), min_size=s, max_size=s)), reverse=True)
    return RootSequence(tuple(vals) + (NEG_INF,) * (n - 1 - s))
