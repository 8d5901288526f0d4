"""Compiled enumeration kernel for alternating-permutation statistics.

The brute-force oracle must walk through tens of millions of
permutations at the largest supported lengths, so the hot loop is an
iterative backtracker compiled with numba.  The module degrades to None
when numba is unavailable; callers then fall back to the pure generator.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None


if njit is not None:

    @njit(cache=True, nogil=True)
    def count_stratum(n, down, q1, q2, q3, q4, first):
        """Histogram of the pattern statistic over one enumeration stratum.

        down[i] is True when the step into 0-based position i must
        descend.  q1..q4 are the quadrant requirements, -1 meaning the
        quadrant must be empty.  first = 0 enumerates the whole class,
        first = v only the permutations starting with v.  Returns an
        int64 array c with c[k] = number of permutations whose statistic
        equals k.
        """
        counts = np.zeros(n + 1, dtype=np.int64)
        perm = np.zeros(n, dtype=np.int64)
        used = np.zeros(n + 1, dtype=np.bool_)
        nxt = np.ones(n + 1, dtype=np.int64)
        lo = 1 if first == 0 else first
        hi = n if first == 0 else first
        for start in range(lo, hi + 1):
            perm[0] = start
            used[start] = True
            i = 1
            nxt[1] = 1
            while i >= 1:
                prev = perm[i - 1]
                v = nxt[i]
                while v <= n:
                    if not used[v] and ((v < prev) if down[i] else (v > prev)):
                        break
                    v += 1
                if v > n:
                    nxt[i] = 1
                    i -= 1
                    if i >= 1:
                        used[perm[i]] = False
                    continue
                perm[i] = v
                used[v] = True
                nxt[i] = v + 1
                if i == n - 1:
                    stat = 0
                    for p in range(n):
                        vp = perm[p]
                        n1 = 0
                        n2 = 0
                        n3 = 0
                        n4 = 0
                        for j in range(p):
                            if perm[j] > vp:
                                n2 += 1
                            else:
                                n3 += 1
                        for j in range(p + 1, n):
                            if perm[j] > vp:
                                n1 += 1
                            else:
                                n4 += 1
                        if (
                            ((n1 == 0) if q1 < 0 else (n1 >= q1))
                            and ((n2 == 0) if q2 < 0 else (n2 >= q2))
                            and ((n3 == 0) if q3 < 0 else (n3 >= q3))
                            and ((n4 == 0) if q4 < 0 else (n4 >= q4))
                        ):
                            stat += 1
                    counts[stat] += 1
                    used[v] = False
                else:
                    i += 1
                    nxt[i] = 1
            used[start] = False
        return counts

else:  # pragma: no cover
    count_stratum = None
