# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels; anything wider than 64 bits defers to _purecore."""
from hfset import _purecore

ctypedef unsigned long long u64

cdef u64 _MAX64 = 0xFFFFFFFFFFFFFFFF


cdef inline bint _fits(object x):
    return 0 <= x <= _MAX64


cdef bint _transitive64(u64 code):
    cdef u64 c = code
    cdef int k = 0
    while c:
        if c & 1:
            if (<u64>k) & ~code:
                return False
        c >>= 1
        k += 1
    return True


def code_members(code):
    if not _fits(code):
        return _purecore.code_members(code)
    cdef u64 c = code
    cdef int k = 0
    out = []
    while c:
        if c & 1:
            out.append(k)
        c >>= 1
        k += 1
    return out


def code_is_transitive(code):
    if not _fits(code):
        return _purecore.code_is_transitive(code)
    return _transitive64(<u64>code)


def code_is_ordinal(code):
    if not _fits(code):
        return _purecore.code_is_ordinal(code)
    cdef u64 c = code
    cdef u64 rest = c
    cdef int k = 0
    if not _transitive64(c):
        return False
    while rest:
        if rest & 1 and not _transitive64(<u64>k):
            return False
        rest >>= 1
        k += 1
    return True


cdef int _load(object rows, u64 *buf) except -1:
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = rows[i]
    return 0


cdef inline bint _narrow(object rows):
    return len(rows) <= 64 and all(_fits(r) for r in rows)


def rows_is_order(rows):
    if not _narrow(rows):
        return _purecore.rows_is_order(rows)
    cdef u64 buf[64]
    cdef Py_ssize_t n = len(rows), i, j
    cdef u64 ri, full
    _load(rows, buf)
    full = _MAX64 if n == 64 else ((<u64>1 << n) - 1)
    for i in range(n):
        ri = buf[i]
        if not (ri >> i) & 1:
            return False
        if ri & ~full:
            return False
        for j in range(n):
            if j != i and (ri >> j) & 1:
                if (buf[j] >> i) & 1:
                    return False
                if buf[j] & ~ri:
                    return False
    return True


def rows_is_total(rows):
    if not _narrow(rows):
        return _purecore.rows_is_total(rows)
    cdef u64 buf[64]
    cdef Py_ssize_t n = len(rows), i, j
    _load(rows, buf)
    for i in range(n):
        for j in range(i + 1, n):
            if not ((buf[i] >> j) & 1 or (buf[j] >> i) & 1):
                return False
    return True


cdef inline int _least(u64 *buf, u64 mask):
    cdef u64 m = mask
    cdef int i = 0
    while m:
        if m & 1 and (buf[i] & mask) == mask:
            return i
        m >>= 1
        i += 1
    return -1


def rows_least_in(rows, mask):
    if not (_narrow(rows) and _fits(mask)):
        return _purecore.rows_least_in(rows, mask)
    cdef u64 buf[64]
    _load(rows, buf)
    return _least(buf, <u64>mask)


def rows_all_subsets_have_least(rows):
    cdef Py_ssize_t n = len(rows)
    if n > 30 or not _narrow(rows):
        return _purecore.rows_all_subsets_have_least(rows)
    cdef u64 buf[64]
    cdef u64 mask, top = (<u64>1) << n
    _load(rows, buf)
    mask = 1
    while mask < top:
        if _least(buf, mask) < 0:
            return False
        mask += 1
    return True


def rows_subsets_have_least(rows, masks):
    if not _narrow(rows):
        return _purecore.rows_subsets_have_least(rows, masks)
    cdef u64 buf[64]
    _load(rows, buf)
    for m in masks:
        if m and _least(buf, <u64>m) < 0:
            return False
    return True


def rows_maximal(rows):
    if not _narrow(rows):
        return _purecore.rows_maximal(rows)
    cdef u64 buf[64]
    cdef Py_ssize_t n = len(rows), i
    _load(rows, buf)
    return [i for i in range(n) if buf[i] & ~((<u64>1) << i) == 0]


def rows_strictly_below(rows, Py_ssize_t j):
    if not _narrow(rows):
        return _purecore.rows_strictly_below(rows, j)
    cdef u64 buf[64]
    cdef Py_ssize_t n = len(rows), i
    cdef u64 out = 0
    _load(rows, buf)
    for i in range(n):
        if i != j and (buf[i] >> j) & 1:
            out |= (<u64>1) << i
    return out
