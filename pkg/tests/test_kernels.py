"""Backend parity: the compiled kernels must match the pure-Python ones."""

import random
from itertools import product

import pytest

from lynfac import _kernels_py as pure

compiled = pytest.importorskip(
    "lynfac._kernels_c", reason="compiled kernels unavailable; parity not testable")


def _inputs():
    for n in range(0, 12):
        for t in product(b"ab", repeat=n):
            yield bytes(t)
    rng = random.Random(42)
    for size in (3, 4, 16):
        alphabet = bytes(range(size))
        for length in (50, 500, 4000):
            yield bytes(rng.choice(alphabet) for _ in range(length))


@pytest.mark.parametrize("name", [
    "lyndon_cuts", "longest_lyndon_prefix_len", "prenecklace_scan",
    "border_table", "icfl_cuts",
])
def test_unary_kernels_agree(name):
    fp, fc = getattr(pure, name), getattr(compiled, name)
    for data in _inputs():
        if not data and name in ("border_table",):
            assert fp(data) == fc(data) == []
            continue
        assert fp(data) == fc(data), (name, data)


def test_bre_scan_agrees_at_every_offset():
    for data in _inputs():
        offsets = range(len(data) + 1) if len(data) <= 16 else (0, 1, len(data) // 2)
        for off in offsets:
            assert pure.bre_scan(data, off) == compiled.bre_scan(data, off), (data, off)


def test_lcp_kernels_agree():
    rng = random.Random(7)
    pool = [bytes(rng.choice(b"abc") for _ in range(rng.randint(0, 200)))
            for _ in range(60)]
    for a in pool:
        for b in pool[:20]:
            assert pure.lcp_len(a, b) == compiled.lcp_len(a, b)
    for data in pool:
        n = len(data)
        if n < 2:
            continue
        for _ in range(20):
            i, j = rng.randrange(n), rng.randrange(n)
            expected = pure.lcp_len(data[i:], data[j:])
            assert pure.suffix_lcp_len(data, i, j) == expected
            assert compiled.suffix_lcp_len(data, i, j) == expected


def test_cuts_partition_the_input():
    rng = random.Random(3)
    for _ in range(50):
        data = bytes(rng.choice(b"abcd") for _ in range(rng.randint(1, 300)))
        for cuts in (pure.lyndon_cuts(data), pure.icfl_cuts(data)):
            assert cuts[-1] == len(data)
            assert all(a < b for a, b in zip(cuts, cuts[1:]))
