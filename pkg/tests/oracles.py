"""Brute-force reference computations used by the tests.

None of these share code paths with the library beyond the Word type.
"""

from itertools import permutations

from optb.words import Letter, conjugate, reduced_words


def balanced_cyclic_classes(p, q):
    """All cyclic arrangements of |p| x^sign(p) and |q| y^sign(q) that are balanced.

    Balanced: for every window length, the number of x-letters in any two
    cyclic windows of that length differs by at most one.  Returned as the set
    of rotation classes (each as the frozenset of its rotations).
    """
    lx = Letter.x if p > 0 else Letter.X
    ly = Letter.y if q > 0 else Letter.Y
    pool = [lx] * abs(p) + [ly] * abs(q)
    n = len(pool)
    classes = set()
    for arrangement in set(permutations(pool)):
        ok = True
        for k in range(1, n):
            counts = {
                sum(1 for i in range(k) if arrangement[(s + i) % n] == lx) for s in range(n)
            }
            if max(counts) - min(counts) > 1:
                ok = False
                break
        if ok:
            classes.add(frozenset(arrangement[r:] + arrangement[:r] for r in range(n)))
    return classes


def conjugates_within(v, max_len):
    """The set ``{g v g^-1 : |g| <= max_len}``."""
    return {conjugate(v, g) for g in reduced_words(max_len)}


def matrix_conjugators(A, B, bound):
    """All (p, n) with p A p^-1 = B computed entry-wise, det p = +-1, |entries| <= bound."""
    rng = range(-bound, bound + 1)
    hits = []
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    det = a * d - b * c
                    if det not in (1, -1):
                        continue
                    # p A == B p
                    pa = (a * A[0] + b * A[2], a * A[1] + b * A[3], c * A[0] + d * A[2], c * A[1] + d * A[3])
                    bp = (B[0] * a + B[1] * c, B[0] * b + B[1] * d, B[2] * a + B[3] * c, B[2] * b + B[3] * d)
                    if pa == bp:
                        hits.append((a, b, c, d))
    return hits
