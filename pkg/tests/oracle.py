"""Brute-force reference implementations.

Everything here works on Python sets of integers and enumerates directly.
None of it shares code with the package, so agreement is a meaningful check.
"""
from functools import lru_cache
from itertools import combinations

TONES = range(12)


def subset(mask):
    return frozenset(i for i in TONES if mask >> i & 1)


def to_mask(s):
    return sum(1 << i for i in s)


def shift(s, k):
    return frozenset((x + k) % 12 for x in s)


def orbit(s):
    return frozenset(shift(s, k) for k in TONES)


def dist(a, b):
    d = abs(a - b) % 12
    return min(d, 12 - d)


def blocks(s):
    return sum(1 for a in TONES if a in s and (a + 1) % 12 in s)


def cells(s):
    return sum(1 for a in TONES if all((a + j) % 12 in s for j in range(3)))


def tone_blocks(s):
    return sum(1 for a, b in combinations(sorted(s), 2) if dist(a, b) in (1, 2))


def _in_a_row(triple):
    # some circular ordering climbs by a semitone or tone at each step
    for start in triple:
        rest = sorted((x - start) % 12 for x in triple)
        if rest[0] == 0 and rest[1] in (1, 2) and rest[2] - rest[1] in (1, 2):
            return True
    return False


def tone_cells(s):
    return sum(1 for t in combinations(sorted(s), 3) if _in_a_row(t))


COUNTERS = {
    "scale": cells,
    "packing": blocks,
    "chord": lambda s: blocks(s) + tone_cells(s),
    "triad": tone_blocks,
}


def complete(s, kind):
    f = COUNTERS[kind]
    base = f(s)
    return all(f(s | {t}) > base for t in TONES if t not in s)


@lru_cache(maxsize=None)
def complete_masks(kind):
    return frozenset(m for m in range(4096) if complete(subset(m), kind))


@lru_cache(maxsize=None)
def irreducible_masks(kind):
    comp = complete_masks(kind)
    out = set()
    for m in comp:
        # proper submasks, enumerated directly
        sub = (m - 1) & m
        ok = True
        while True:
            if sub != m and sub in comp:
                ok = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & m
        if ok:
            out.add(m)
    return frozenset(out)


def classes(masks):
    return {orbit(subset(m)) for m in masks}
