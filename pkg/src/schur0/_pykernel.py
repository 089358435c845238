"""Pure-Python kernels on flattened orbit matrices.

Matrices are row-major tuples of length n*n.  Generator indices ``k`` are
0-based here (``k = i - 1`` for the generator ``e_i``).  Every function
returns ``None`` for the zero element.
"""

import numpy as np


def left_e(a, n, k):
    """e_{k+1} * e_A: move the rightmost entry of row k+1 up into row k."""
    base = (k + 1) * n
    for p in range(n - 1, -1, -1):
        if a[base + p]:
            x = list(a)
            x[k * n + p] += 1
            x[base + p] -= 1
            return tuple(x)
    return None


def left_f(a, n, k):
    """f_{k+1} * e_A: move the leftmost entry of row k down into row k+1."""
    base = k * n
    for p in range(n):
        if a[base + p]:
            x = list(a)
            x[base + p] -= 1
            x[base + n + p] += 1
            return tuple(x)
    return None


def right_f(a, n, k):
    """e_A * f_{k+1}: move the lowest entry of column k+1 left into column k."""
    for p in range(n - 1, -1, -1):
        if a[p * n + k + 1]:
            x = list(a)
            x[p * n + k] += 1
            x[p * n + k + 1] -= 1
            return tuple(x)
    return None


def right_e(a, n, k):
    """e_A * e_{k+1}: move the highest entry of column k right into column k+1."""
    for p in range(n):
        if a[p * n + k]:
            x = list(a)
            x[p * n + k] -= 1
            x[p * n + k + 1] += 1
            return tuple(x)
    return None


def row_sums(a, n):
    return tuple(sum(a[i * n:(i + 1) * n]) for i in range(n))


def col_sums(a, n):
    return tuple(sum(a[j::n]) for j in range(n))


def e_degree(a, n):
    out = []
    for k in range(n - 1):
        s = 0
        for l in range(k + 1):
            row = l * n
            for m in range(k + 1, n):
                s += a[row + m]
        out.append(s)
    return tuple(out)


def f_degree(a, n):
    out = []
    for k in range(n - 1):
        s = 0
        for l in range(k + 1, n):
            row = l * n
            for m in range(k + 1):
                s += a[row + m]
        out.append(s)
    return tuple(out)


def _move_down(x, n, k, times):
    # f_{k+1}^times applied to a mutable matrix; False if it dies
    base = k * n
    for _ in range(times):
        for p in range(n):
            if x[base + p]:
                x[base + p] -= 1
                x[base + n + p] += 1
                break
        else:
            return False
    return True


def _move_up(x, n, k, times):
    base = (k + 1) * n
    for _ in range(times):
        for p in range(n - 1, -1, -1):
            if x[base + p]:
                x[k * n + p] += 1
                x[base + p] -= 1
                break
        else:
            return False
    return True


def s0_product(a, b, n):
    """Product e_A e_B in S_0(n, r), or None.

    The monomial word of A (without its trailing idempotent) is applied to B
    letter by letter, rightmost letter first.
    """
    if col_sums(a, n) != row_sums(b, n):
        return None
    x = list(b)
    # f-part, rightmost block first: s = n-1..1, l = s..n-1 (1-based)
    for s in range(n - 2, -1, -1):
        for l in range(s, n - 1):
            times = 0
            for p in range(l + 1, n):
                times += a[p * n + s]
            if times and not _move_down(x, n, l, times):
                return None
    # e-part, rightmost block first: s = 1..n-1, l = s..1 (1-based)
    for s in range(n - 1):
        for l in range(s, -1, -1):
            times = 0
            for p in range(l + 1):
                times += a[p * n + s + 1]
            if times and not _move_up(x, n, l, times):
                return None
    return tuple(x)


def star_product(a, b, n):
    """Product in the associated graded algebra: kept only if e-degrees add."""
    c = s0_product(a, b, n)
    if c is None:
        return None
    ea, eb, ec = e_degree(a, n), e_degree(b, n), e_degree(c, n)
    for k in range(n - 1):
        if ea[k] + eb[k] != ec[k]:
            return None
    return c


def assoc_violation(table):
    """First (a, b, c) with (ab)c != a(bc) on product indices, or None.

    ``table`` is an (N+1, N+1) integer array where index N stands for zero and
    row/column N map to N.
    """
    p = np.asarray(table)
    size = p.shape[0] - 1
    chunk = max(1, 2_000_000 // max(1, size * size))
    cols = p[:size, :size]
    for start in range(0, size, chunk):
        stop = min(size, start + chunk)
        ab = p[start:stop, :size]
        lhs = p[ab][:, :, :size]
        rhs = p[np.arange(start, stop)[:, None, None], cols[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b, c = bad[0]
            return (int(a) + start, int(b), int(c))
    return None
