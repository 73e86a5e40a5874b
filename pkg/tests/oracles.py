"""Independent brute-force oracles, written straight from the definitions.

Everything here enumerates candidate objects over a bounded value box and
filters with plain predicates.  None of it shares code with the package
under test; it exists so the fast implementations are checked against a
second, dumb route.
"""

from itertools import combinations, product


def box_triangles(bottom, lo=None, hi=None):
    """All triangular arrays over the value box with the given bottom row.

    Entries of every triangle with this bottom row lie between the bottom
    row's minimum and maximum for each class checked here.
    """
    bottom = tuple(bottom)
    n = len(bottom)
    if lo is None:
        lo = min(bottom)
    if hi is None:
        hi = max(bottom)
    cells = n * (n - 1) // 2
    for values in product(range(lo, hi + 1), repeat=cells):
        rows = []
        pos = 0
        for i in range(1, n):
            rows.append(tuple(values[pos:pos + i]))
            pos += i
        rows.append(bottom)
        yield rows


def mt_ok(rows):
    for row in rows:
        for j in range(len(row) - 1):
            if not row[j] < row[j + 1]:
                return False
    for i in range(len(rows) - 1):
        up, lo = rows[i], rows[i + 1]
        for j in range(len(up)):
            if not lo[j] <= up[j] <= lo[j + 1]:
                return False
    return True


def dmt_ok(rows):
    for i in range(len(rows) - 1):
        up, lo = rows[i], rows[i + 1]
        for j in range(len(up)):
            if not lo[j] >= up[j] >= lo[j + 1]:
                return False
    for row in rows:
        for v in set(row):
            if row.count(v) > 2:
                return False
    for i in range(len(rows) - 1):
        up, lo = rows[i], rows[i + 1]
        for v in set(up):
            if up.count(v) == 1 and lo.count(v) == 1:
                return False
    return True


def gmt_ok(rows):
    for i in range(len(rows) - 1):
        up, lo = rows[i], rows[i + 1]
        for j in range(len(up)):
            if not min(lo[j], lo[j + 1]) <= up[j] <= max(lo[j], lo[j + 1]):
                return False
        for j in range(len(lo) - 2):
            if lo[j] <= lo[j + 1] <= lo[j + 2] and not up[j] < up[j + 1]:
                return False
        for j in range(len(lo) - 1):
            if lo[j] > lo[j + 1]:
                if up[j] == lo[j] and (j == 0 or up[j - 1] != up[j]):
                    return False
                if up[j] == lo[j + 1] and (j + 1 >= len(up) or up[j + 1] != up[j]):
                    return False
    return True


def sc_brute(rows):
    total = 0
    for i in range(len(rows) - 1):
        up, lo = rows[i], rows[i + 1]
        for j in range(len(up)):
            if lo[j] > up[j] > lo[j + 1]:
                total += 1
        for j in range(len(up) - 1):
            if up[j] == up[j + 1] == lo[j + 1]:
                total += 1
    return total


def gmt_set_brute(bottom):
    return [t for t in box_triangles(bottom) if gmt_ok(t)]


def signed_gmt_brute(bottom):
    return sum((-1) ** sc_brute(t) for t in gmt_set_brute(bottom))


def mt_count_brute(bottom):
    return sum(1 for t in box_triangles(bottom) if mt_ok(t))


def _exempt(special):
    out = set()
    for i, j in special:
        out.add((i - 1, j - 1))
        out.add((i - 1, j))
    return out


def tn_ok(rows, special):
    n = len(rows)
    for i, j in special:
        if not 1 < j < i <= n:
            return False
        if (i, j + 1) in special:
            return False
        v = rows[i - 1][j - 1]
        if rows[i - 2][j - 2] != v or rows[i - 2][j - 1] != v:
            return False
    exempt = _exempt(special)
    for i in range(1, n):
        for j in range(1, i + 1):
            if (i, j) in exempt:
                continue
            v = rows[i - 1][j - 1]
            lo1, lo2 = rows[i][j - 1], rows[i][j]
            if lo1 <= lo2:
                if not lo1 <= v <= lo2:
                    return False
            else:
                if not lo1 > v > lo2:
                    return False
    return True


def s_brute(rows, special):
    exempt = _exempt(special)
    inversions = 0
    for i in range(1, len(rows)):
        for j in range(1, i + 1):
            if (i, j) in exempt:
                continue
            if rows[i][j - 1] > rows[i - 1][j - 1] > rows[i][j]:
                inversions += 1
    return len(special) + inversions


def tn_objects_brute(bottom):
    """All (rows, special) pairs in the decorated class, via box enumeration."""
    bottom = tuple(bottom)
    n = len(bottom)
    interior = [(i, j) for i in range(3, n + 1) for j in range(2, i)]
    out = []
    for rows in box_triangles(bottom):
        for p in range(len(interior) + 1):
            for spec in combinations(interior, p):
                spec = frozenset(spec)
                if any((i, j + 1) in spec for i, j in spec):
                    continue
                if tn_ok(rows, spec):
                    out.append((tuple(rows), spec))
    return out
