"""Pure-Python backend for the hot kernels.

Contract shared with the compiled backend (``_kernels_c``):

* ``axiom_witnesses`` reports, per axiom, the lexicographically first
  counterexample (or None), so the backends are interchangeable.
* element subsets are Python int bitmasks, bit i = element i.
* ``enumerate_ideal_masks`` returns masks in increasing numeric order.

The axiom scans are vectorized with numpy, chunked so the cBCK1 tensor
stays below ~16 MiB; the mask routines are plain integer loops.
"""

from __future__ import annotations

import numpy as np

from .errors import SizeGuardError

BACKEND = "pure"


def _as_array(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def axiom_witnesses(table):
    """Map each of cBCK1..cBCK4 to None (holds) or its first failing tuple."""
    t = _as_array(table)
    n = t.shape[0]
    out = {}

    w = None
    if n:
        chunk = max(1, (1 << 22) // (n * n))
        for x0 in range(0, n, chunk):
            lhs = t[t[x0 : x0 + chunk], :]  # [i,y,z] = (x*y)*z
            rhs = lhs.transpose(0, 2, 1)  # [i,y,z] = (x*z)*y
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                i, y, z = bad[0]
                w = (x0 + int(i), int(y), int(z))
                break
    out["cBCK1"] = w

    w = None
    if n:
        m = t[np.arange(n)[:, None], t]  # [x,y] = x*(x*y)
        bad = np.argwhere(m != m.T)
        if bad.size:
            w = (int(bad[0][0]), int(bad[0][1]))
    out["cBCK2"] = w

    w = None
    if n:
        bad = np.flatnonzero(np.diagonal(t) != 0)
        if bad.size:
            w = (int(bad[0]),)
    out["cBCK3"] = w

    w = None
    if n:
        bad = np.flatnonzero(t[:, 0] != np.arange(n))
        if bad.size:
            w = (int(bad[0]),)
    out["cBCK4"] = w

    return out


def leq_matrix(table):
    """Boolean matrix of the derived order: leq[x,y] iff x*y = 0."""
    return _as_array(table) == 0


def meet_table(table):
    """Table of the derived meet x ^ y = y*(y*x)."""
    t = _as_array(table)
    n = t.shape[0]
    m = t[np.arange(n)[:, None], t]  # [y,x] = y*(y*x)
    return np.ascontiguousarray(m.T)


def ideal_closure(table, seed_mask):
    """Mask of the least ideal containing the elements of ``seed_mask``."""
    rows = _as_array(table).tolist()
    n = len(rows)
    mask = (int(seed_mask) | 1) & ((1 << n) - 1)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            if (mask >> x) & 1:
                continue
            row = rows[x]
            m = mask
            while m:
                y = (m & -m).bit_length() - 1
                m &= m - 1
                if (mask >> row[y]) & 1:
                    mask |= 1 << x
                    changed = True
                    break
    return mask


def is_ideal_mask(table, mask):
    """True iff mask contains 0 and is closed under the ideal rule."""
    rows = _as_array(table).tolist()
    n = len(rows)
    mask = int(mask)
    if not mask & 1:
        return False
    for x in range(n):
        if (mask >> x) & 1:
            continue
        row = rows[x]
        m = mask
        while m:
            y = (m & -m).bit_length() - 1
            m &= m - 1
            if (mask >> row[y]) & 1:
                return False
    return True


def enumerate_ideal_masks(table, guard=20):
    """All ideal masks, ascending.  Scans 2^(n-1) candidates; refuses n > guard."""
    t = _as_array(table)
    n = int(t.shape[0])
    if n > guard:
        raise SizeGuardError(
            "ideal enumeration scans 2^%d subsets; size guard is %d" % (n - 1, guard)
        )
    rows = t.tolist()
    down = []
    for x in range(n):
        d = 0
        for y in range(n):
            if rows[y][x] == 0:
                d |= 1 << y
        down.append(d)

    full = (1 << n) - 1
    out = []
    for mask in range(1, full + 1, 2):
        ok = True
        m = mask
        while m:  # down-set prefilter
            x = (m & -m).bit_length() - 1
            m &= m - 1
            if down[x] & ~mask:
                ok = False
                break
        if not ok:
            continue
        c = full & ~mask
        while c and ok:  # ideal rule: nothing outside is pulled in
            x = (c & -c).bit_length() - 1
            c &= c - 1
            row = rows[x]
            m = mask
            while m:
                y = (m & -m).bit_length() - 1
                m &= m - 1
                if (mask >> row[y]) & 1:
                    ok = False
                    break
        if ok:
            out.append(mask)
    return out
