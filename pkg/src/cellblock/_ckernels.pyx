# Compiled twin of _pykernels; signatures and results are identical.

cdef enum:
    FULL = 0xFFF
    NSETS = 4096

FULL_MASK = FULL
SCALE = 0
PACKING = 1
CHORD = 2
TRIAD = 3


cdef inline unsigned int _rot(unsigned int m, int k) noexcept nogil:
    k = k % 12
    if k < 0:
        k += 12
    return ((m << k) | (m >> (12 - k))) & FULL


cdef inline unsigned int _down(unsigned int m, int k) noexcept nogil:
    return _rot(m, 12 - k)


cdef inline int _pop(unsigned int x) noexcept nogil:
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef inline int _blocks(unsigned int m) noexcept nogil:
    return _pop(m & _down(m, 1))


cdef inline int _cells(unsigned int m) noexcept nogil:
    return _pop(m & _down(m, 1) & _down(m, 2))


cdef inline int _tone_blocks(unsigned int m) noexcept nogil:
    return _pop(m & _down(m, 1)) + _pop(m & _down(m, 2))


cdef inline int _tone_cells(unsigned int m) noexcept nogil:
    cdef unsigned int d1 = _down(m, 1), d2 = _down(m, 2), d3 = _down(m, 3), d4 = _down(m, 4)
    return _pop(m & d1 & d2) + _pop(m & d1 & d3) + _pop(m & d2 & d3) + _pop(m & d2 & d4)


cdef inline int _count(unsigned int m, int kind) noexcept nogil:
    if kind == 0:
        return _cells(m)
    if kind == 1:
        return _blocks(m)
    if kind == 2:
        return _tone_cells(m)
    return _tone_blocks(m)


cdef bint _complete(unsigned int m, int kind) noexcept nogil:
    cdef int t, b, c, v
    cdef unsigned int bit, n
    if kind == 2:
        b = _blocks(m)
        c = _tone_cells(m)
        for t in range(12):
            bit = 1u << t
            if not (m & bit):
                n = m | bit
                if _blocks(n) <= b and _tone_cells(n) <= c:
                    return False
        return True
    v = _count(m, kind)
    for t in range(12):
        bit = 1u << t
        if not (m & bit) and _count(m | bit, kind) <= v:
            return False
    return True


def rotate(int m, int k):
    return _rot(m, k)


def canonical(int m):
    cdef int k
    cdef unsigned int best = m, r
    for k in range(1, 12):
        r = _rot(m, k)
        if r < best:
            best = r
    return best


def blocks(int m):
    return _blocks(m)


def cells(int m):
    return _cells(m)


def tone_blocks(int m):
    return _tone_blocks(m)


def tone_cells(int m):
    return _tone_cells(m)


def complete(int m, int kind):
    return bool(_complete(m, kind))


def complete_table(int kind):
    cdef unsigned char buf[NSETS]
    cdef unsigned int m
    with nogil:
        for m in range(NSETS):
            buf[m] = _complete(m, kind)
    return bytes(buf[:NSETS])


def irreducible_table(int kind):
    cdef unsigned char comp[NSETS]
    cdef unsigned char below[NSETS]
    cdef unsigned char out[NSETS]
    cdef unsigned int m, x, low, s
    cdef unsigned char hit
    with nogil:
        for m in range(NSETS):
            comp[m] = _complete(m, kind)
        below[0] = 0
        out[0] = 0
        for m in range(1, NSETS):
            hit = 0
            x = m
            while x:
                low = x & (~x + 1)
                s = m ^ low
                if comp[s] or below[s]:
                    hit = 1
                    break
                x ^= low
            below[m] = hit
            out[m] = comp[m] and not hit
    return bytes(out[:NSETS])


def count_table(int kind):
    cdef unsigned int m
    return [_count(m, kind) for m in range(NSETS)]
