"""Pure-Python bit kernels over 12-bit pitch-class masks.

Every function here has a twin in ``_ckernels.pyx`` with the same
signature and results; ``kernels`` picks one at import.
"""
from __future__ import annotations

FULL = 0xFFF
NSETS = 4096

# counter kinds used by the completeness sweeps
SCALE = 0      # semitone cells
PACKING = 1    # semitone blocks
CHORD = 2      # semitone blocks or tone cells
TRIAD = 3      # tone blocks


def rotate(m: int, k: int) -> int:
    k %= 12
    return ((m << k) | (m >> (12 - k))) & FULL


def _down(m: int, k: int) -> int:
    # bit t of the result is bit t+k of m
    return rotate(m, 12 - k)


def canonical(m: int) -> int:
    return min(rotate(m, k) for k in range(12))


def blocks(m: int) -> int:
    return (m & _down(m, 1)).bit_count()


def cells(m: int) -> int:
    return (m & _down(m, 1) & _down(m, 2)).bit_count()


def tone_blocks(m: int) -> int:
    return (m & _down(m, 1)).bit_count() + (m & _down(m, 2)).bit_count()


def tone_cells(m: int) -> int:
    # starts of the four step patterns (1,1), (1,2), (2,1), (2,2)
    d1, d2, d3, d4 = _down(m, 1), _down(m, 2), _down(m, 3), _down(m, 4)
    return ((m & d1 & d2).bit_count() + (m & d1 & d3).bit_count()
            + (m & d2 & d3).bit_count() + (m & d2 & d4).bit_count())


def complete(m: int, kind: int) -> bool:
    if kind == CHORD:
        b, c = blocks(m), tone_cells(m)
        for t in range(12):
            bit = 1 << t
            if not m & bit:
                n = m | bit
                if blocks(n) <= b and tone_cells(n) <= c:
                    return False
        return True
    count = (cells, blocks, None, tone_blocks)[kind]
    v = count(m)
    for t in range(12):
        bit = 1 << t
        if not m & bit and count(m | bit) <= v:
            return False
    return True


def complete_table(kind: int) -> bytes:
    return bytes(complete(m, kind) for m in range(NSETS))


def irreducible_table(kind: int) -> bytes:
    comp = complete_table(kind)
    below = bytearray(NSETS)  # some proper subset is complete
    out = bytearray(NSETS)
    for m in range(1, NSETS):
        hit = 0
        x = m
        while x:
            low = x & -x
            s = m ^ low
            if comp[s] or below[s]:
                hit = 1
                break
            x ^= low
        below[m] = hit
        out[m] = comp[m] and not hit
    return bytes(out)


def count_table(kind: int) -> list[int]:
    count = (cells, blocks, tone_cells, tone_blocks)[kind]
    return [count(m) for m in range(NSETS)]
