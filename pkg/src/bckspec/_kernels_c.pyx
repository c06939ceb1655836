# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels; mirrors _kernels_py exactly.

Masks are limited to 63 elements here, far above the enumeration guard.
"""

import numpy as np

from .errors import SizeGuardError

BACKEND = "compiled"


def _as_array(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def axiom_witnesses(table):
    """Map each of cBCK1..cBCK4 to None (holds) or its first failing tuple."""
    cdef const int[:, ::1] t = _as_array(table)
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t x, y, z
    out = {}

    w = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x, y], z] != t[t[x, z], y]:
                    w = (x, y, z)
                    break
            if w is not None:
                break
        if w is not None:
            break
    out["cBCK1"] = w

    w = None
    for x in range(n):
        for y in range(n):
            if t[x, t[x, y]] != t[y, t[y, x]]:
                w = (x, y)
                break
        if w is not None:
            break
    out["cBCK2"] = w

    w = None
    for x in range(n):
        if t[x, x] != 0:
            w = (x,)
            break
    out["cBCK3"] = w

    w = None
    for x in range(n):
        if t[x, 0] != x:
            w = (x,)
            break
    out["cBCK4"] = w

    return out


def leq_matrix(table):
    """Boolean matrix of the derived order: leq[x,y] iff x*y = 0."""
    return _as_array(table) == 0


def meet_table(table):
    """Table of the derived meet x ^ y = y*(y*x)."""
    cdef const int[:, ::1] t = _as_array(table)
    cdef Py_ssize_t n = t.shape[0]
    res = np.empty((n, n), dtype=np.int32)
    cdef int[:, ::1] m = res
    cdef Py_ssize_t x, y
    for x in range(n):
        for y in range(n):
            m[x, y] = t[y, t[y, x]]
    return res


def ideal_closure(table, seed_mask):
    """Mask of the least ideal containing the elements of ``seed_mask``."""
    cdef const int[:, ::1] t = _as_array(table)
    cdef Py_ssize_t n = t.shape[0]
    if n > 63:
        raise SizeGuardError("mask kernels support at most 63 elements")
    cdef unsigned long long mask = (<unsigned long long> seed_mask | 1ULL) & (
        (1ULL << n) - 1ULL
    )
    cdef bint changed = True
    cdef Py_ssize_t x, y
    while changed:
        changed = False
        for x in range(n):
            if (mask >> x) & 1ULL:
                continue
            for y in range(n):
                if not (mask >> y) & 1ULL:
                    continue
                if (mask >> t[x, y]) & 1ULL:
                    mask |= 1ULL << x
                    changed = True
                    break
    return int(mask)


def is_ideal_mask(table, mask):
    """True iff mask contains 0 and is closed under the ideal rule."""
    cdef const int[:, ::1] t = _as_array(table)
    cdef Py_ssize_t n = t.shape[0]
    if n > 63:
        raise SizeGuardError("mask kernels support at most 63 elements")
    cdef unsigned long long m = <unsigned long long> mask
    if not m & 1ULL:
        return False
    cdef Py_ssize_t x, y
    for x in range(n):
        if (m >> x) & 1ULL:
            continue
        for y in range(n):
            if not (m >> y) & 1ULL:
                continue
            if (m >> t[x, y]) & 1ULL:
                return False
    return True


def enumerate_ideal_masks(table, guard=20):
    """All ideal masks, ascending.  Scans 2^(n-1) candidates; refuses n > guard."""
    cdef const int[:, ::1] t = _as_array(table)
    cdef Py_ssize_t n = t.shape[0]
    if n > <Py_ssize_t> guard:
        raise SizeGuardError(
            "ideal enumeration scans 2^%d subsets; size guard is %d" % (n - 1, guard)
        )
    cdef unsigned long long down[64]
    cdef Py_ssize_t x, y
    for x in range(n):
        down[x] = 0
        for y in range(n):
            if t[y, x] == 0:
                down[x] |= 1ULL << y
    cdef unsigned long long full = (1ULL << n) - 1ULL
    cdef unsigned long long mask, rest
    cdef bint ok
    out = []
    mask = 1
    while mask <= full:
        ok = True
        rest = mask
        while rest:  # down-set prefilter
            x = _ctz(rest)
            rest &= rest - 1
            if down[x] & ~mask:
                ok = False
                break
        if ok:
            rest = full & ~mask
            while rest:  # ideal rule
                x = _ctz(rest)
                rest &= rest - 1
                for y in range(n):
                    if not (mask >> y) & 1ULL:
                        continue
                    if (mask >> t[x, y]) & 1ULL:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(int(mask))
        mask += 2
    return out


cdef inline Py_ssize_t _ctz(unsigned long long v):
    cdef Py_ssize_t i = 0
    while not (v >> i) & 1ULL:
        i += 1
    return i
