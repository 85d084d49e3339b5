#!/usr/bin/env python3
"""Standalone route-walking oracle used to freeze expected values in the C++ tests.

Builds the mirrored circle-method schedule directly from its defining
formulas and walks every team's venue sequence.  Shares no code with the
C++ implementation.
"""
import sys


def circle(n):
    k = n - 1
    table = [[0] * k for _ in range(n)]
    for t in range(n):
        for s in range(k):
            if t != n - 1:
                table[t][s] = n - 1 if (s - t) % k == t % k else (s - t) % k
            else:
                table[t][s] = s // 2 if s % 2 == 0 else (s + n - 1) // 2
    return table


def is_home(n, t, s):
    if t < n // 2:
        return 2 * t <= s <= n + 2 * t - 2
    if t <= n - 2:
        return not (2 * t - n + 2 <= s <= 2 * t)
    return s >= n - 1


def athome_total(D, n, vertex_of_team, m=0):
    k = n - 1
    K = circle(n)
    total = 0
    per_team = []
    for t in range(n):
        home = vertex_of_team[t]
        seq = [home]
        for s in range(2 * k):
            src = (s + m) % (2 * k)
            opp = K[t][src % k]
            seq.append(home if is_home(n, t, src) else vertex_of_team[opp])
        seq.append(home)
        dist = sum(D[a][b] for a, b in zip(seq, seq[1:]))
        per_team.append(dist)
        total += dist
    return total, per_team


def row_sum_pivot(D):
    sums = [sum(r) for r in D]
    return sums.index(min(sums)), sums


if __name__ == "__main__":
    line = [[abs(i - j) for j in range(4)] for i in range(4)]
    print("line4 identity m=0:", athome_total(line, 4, list(range(4))))
    for m in range(6):
        print("  m", m, athome_total(line, 4, list(range(4)), m)[0])
    if len(sys.argv) > 1:
        D = [list(map(int, l.split())) for l in open(sys.argv[1]) if l.strip()]
        print("pivot, row sums:", row_sum_pivot(D))
