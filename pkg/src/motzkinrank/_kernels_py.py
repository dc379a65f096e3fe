"""Pure Python reference kernels.

These four loops dominate the runtime of the whole package: truncated
series convolution, the weighted lattice-path DP step, row echelon mod a
word-sized prime, and fraction-free (Bareiss) row echelon over the
integers.  ``motzkinrank._kernels`` is a Cython twin with identical
semantics; ``backend.py`` picks whichever is importable.  Both versions
must give bit-identical results on the same inputs.
"""

BACKEND = "pure"


def conv_trunc(a, b, n):
    """First n coefficients of the product of coefficient lists a and b.

    Missing coefficients (beyond the length of either list) are treated
    as zero.  Entries may be ints or Fractions.
    """
    out = [0] * n
    la = len(a)
    lb = len(b)
    for i in range(min(la, n)):
        ai = a[i]
        if not ai:
            continue
        hi = min(lb, n - i)
        for j in range(hi):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def dp_rows(deltas, weights, n, start, caps):
    """Forward DP over weighted steps with a per-row height cap.

    deltas and weights are parallel lists describing the step set; caps
    has length n+1 and caps[i] bounds the height kept after i steps.
    Returns n+1 rows, row i of length caps[i]+1, whose entry at height h
    is the total weight of length-i paths from ``start`` to h that stay
    at heights >= 0 and within the caps.
    """
    first = [0] * (caps[0] + 1)
    if 0 <= start <= caps[0]:
        first[start] = 1
    rows = [first]
    nsteps = len(deltas)
    for i in range(1, n + 1):
        cap = caps[i]
        prevcap = caps[i - 1]
        prev = rows[i - 1]
        cur = [0] * (cap + 1)
        for k in range(nsteps):
            d = deltas[k]
            w = weights[k]
            lo = d if d > 0 else 0
            hi = min(cap, prevcap + d)
            for h in range(lo, hi + 1):
                v = prev[h - d]
                if v:
                    cur[h] += v * w
        rows.append(cur)
    return rows


def modp_echelon(rows, p):
    """In-place row echelon mod the prime p, pivots normalized to 1.

    Entries must already lie in [0, p).  Returns the pivot column list in
    ascending order; rows below each pivot are zeroed, rows above are not
    touched (back substitution handles them).
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        rowr = rows[r]
        inv = pow(rowr[c], p - 2, p)
        if inv != 1:
            for j in range(c, ncols):
                if rowr[j]:
                    rowr[j] = rowr[j] * inv % p
        for i in range(r + 1, nrows):
            rowi = rows[i]
            m = rowi[c]
            if m:
                rowi[c] = 0
                for j in range(c + 1, ncols):
                    x = rowr[j]
                    if x:
                        rowi[j] = (rowi[j] - m * x) % p
        pivots.append(c)
        r += 1
    return pivots


def bareiss_echelon(rows):
    """In-place fraction-free row echelon over the integers.

    One-step Bareiss: every update divides exactly by the previous pivot,
    so entries stay minors of the input matrix (no rational blow-up
    beyond that).  Returns the pivot column list.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        rowr = rows[r]
        piv = rowr[c]
        for i in range(r + 1, nrows):
            rowi = rows[i]
            m = rowi[c]
            # The pivot rescaling applies to the whole row even when the
            # entry below the pivot is already zero; skipping it would
            # break exactness of later divisions.
            for j in range(c + 1, ncols):
                rowi[j] = (piv * rowi[j] - m * rowr[j]) // prev
            rowi[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots
