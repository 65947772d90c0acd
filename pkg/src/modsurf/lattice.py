"""Exact integer-lattice helpers: extended gcd, Hermite form, functional kernels."""

from __future__ import annotations

from typing import Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form of an integer matrix.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).  Zero rows are dropped, so the result is a canonical basis
    of the row lattice.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return ()
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("ragged matrix")
    pivot = 0
    for col in range(ncols):
        if pivot >= len(work):
            break
        nz = next((i for i in range(pivot, len(work)) if work[i][col]), None)
        if nz is None:
            continue
        work[pivot], work[nz] = work[nz], work[pivot]
        for i in range(pivot + 1, len(work)):
            while work[i][col]:
                a, b = work[pivot][col], work[i][col]
                g, x, y = xgcd(a, b)
                u, v = a // g, b // g
                new_p = [x * p + y * q for p, q in zip(work[pivot], work[i])]
                new_i = [-v * p + u * q for p, q in zip(work[pivot], work[i])]
                work[pivot], work[i] = new_p, new_i
        if work[pivot][col] < 0:
            work[pivot] = [-v for v in work[pivot]]
        p = work[pivot][col]
        for i in range(pivot):
            q = work[i][col] // p
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[pivot])]
        pivot += 1
    return tuple(tuple(r) for r in work[:pivot] if any(r))


def kernel_of_functional(f: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Canonical integral basis of { v : f . v = 0 } for an integer functional.

    For nonzero f the kernel has rank len(f) - 1; for the zero functional it
    is the whole lattice.  The basis is returned in Hermite normal form.
    """
    m = len(f)
    if m == 0:
        return ()
    cols = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    vals = [int(v) for v in f]
    for i in range(1, m):
        a, b = vals[0], vals[i]
        if b == 0:
            continue
        g, x, y = xgcd(a, b)
        u, v = a // g, b // g
        c0, ci = cols[0], cols[i]
        cols[0] = [x * p + y * q for p, q in zip(c0, ci)]
        cols[i] = [-v * p + u * q for p, q in zip(c0, ci)]
        vals[0], vals[i] = g, 0
    kernel = cols if vals[0] == 0 else cols[1:]
    return hermite_normal_form([tuple(c) for c in kernel])
