"""Exact evaluation of the monotone-triangle counting polynomial.

For strictly increasing arguments the polynomial counts monotone triangles
with that bottom row; at arbitrary integer points it equals the signed
enumeration of generalized monotone triangles.  Five evaluation routes are
provided and must agree wherever they apply:

* ``operator``      -- the recursive summation operator (:func:`operator_apply`);
* ``operator_alt``  -- the alternative recursive description of the same
                       operator (:func:`operator_apply_alt`);
* ``gmt``           -- signed enumeration over generalized monotone triangles;
* ``third``         -- the inclusion-exclusion expansion into simple sums
                       (:func:`third_extension_eval`);
* ``mt``            -- direct monotone-triangle counting, strictly increasing
                       rows only.

All arithmetic is arbitrary-precision integer; there is no floating point in
any value path.
"""

from __future__ import annotations

import threading
from itertools import combinations
from typing import Callable, Iterator

from .rows import BudgetExceededError, enumerate_mt, signed_gmt_count

METHODS = ("operator", "operator_alt", "gmt", "third", "mt")

# Rows longer than this are rejected up front: evaluation cost grows
# super-exponentially and silently recursing would only hide the problem.
MAX_EVAL_LENGTH = 64

Row = tuple[int, ...]
RowFunction = Callable[[Row], int]


def extended_sum(f: Callable[[int], int], a: int, b: int) -> int:
    """Sum of f over a..b, extended to inverted bounds.

    Ordinary sum when a <= b; zero when b == a - 1; the negated sum over
    b+1..a-1 when b + 1 <= a - 1.
    """
    if b >= a:
        return sum(f(v) for v in range(a, b + 1))
    if b == a - 1:
        return 0
    return -sum(f(v) for v in range(b + 1, a))


def _op(k: Row, fn: RowFunction) -> int:
    # One-argument base: the operator over a single bound is the identity.
    if len(k) == 1:
        return fn(())
    second, last = k[-2], k[-1]

    def summed(prefix: Row) -> int:
        return extended_sum(lambda v: fn(prefix + (v,)), second + 1, last)

    def pinned(prefix: Row) -> int:
        return fn(prefix + (second,))

    return _op(k[:-1], summed) + _op(k[:-2] + (second - 1,), pinned)


def _op_alt(k: Row, fn: RowFunction) -> int:
    if len(k) == 1:
        return fn(())
    if len(k) == 2:
        return extended_sum(lambda v: fn((v,)), k[0], k[1])
    second, last = k[-2], k[-1]

    def summed(prefix: Row) -> int:
        return extended_sum(lambda v: fn(prefix + (v,)), second, last)

    def doubled(prefix: Row) -> int:
        return fn(prefix + (second, second))

    return _op_alt(k[:-1], summed) - _op_alt(k[:-2], doubled)


def operator_apply(k, fn: RowFunction) -> int:
    """Apply the summation operator with bounds ``k`` to a function of
    len(k) - 1 integer arguments (passed as one tuple).

    Defined recursively: the operator over (k_1..k_n) splits into the operator
    over (k_1..k_{n-1}) of the extended sum of the last argument over
    (k_{n-1}+1 .. k_n), plus the operator over (k_1..k_{n-2}, k_{n-1}-1) with
    the last argument pinned to k_{n-1}.
    """
    k = tuple(k)
    if len(k) < 2:
        raise ValueError("the operator needs at least two bounds")
    return _op(k, fn)


def operator_apply_alt(k, fn: RowFunction) -> int:
    """Alternative recursion for the same operator: the extended sum of the
    last argument over (k_{n-1} .. k_n) under the shorter operator, minus the
    operator over (k_1..k_{n-2}) with the last two arguments pinned to
    k_{n-1}.  Agrees with :func:`operator_apply` on every input."""
    k = tuple(k)
    if len(k) < 3:
        raise ValueError("the alternative recursion needs at least three bounds")
    return _op_alt(k, fn)


def nonadjacent_index_sets(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Subsets of {lo..hi} with no two consecutive elements, smallest size
    first, lexicographic within each size.  Yields just () when hi < lo."""
    idxs = range(lo, hi + 1)
    for p in range(len(idxs) + 1):
        for combo in combinations(idxs, p):
            if all(combo[t + 1] - combo[t] >= 2 for t in range(len(combo) - 1)):
                yield combo


class EvalCache:
    """Memo store for polynomial evaluations, keyed by (length, row).

    Values are translation invariant (shifting every argument by a constant
    shifts every triangle entry the same way), so keys are normalized by
    translating the row so its first entry is 0.  Set ``normalize=False`` to
    key on the raw row instead.  Reads and writes are lock-protected; hit and
    miss counters are kept for diagnostics.
    """

    def __init__(self, normalize: bool = True):
        self.normalize = normalize
        self.hits = 0
        self.misses = 0
        self._store: dict[tuple[int, Row], int] = {}
        self._lock = threading.Lock()

    def _key(self, row: Row) -> tuple[int, Row]:
        if self.normalize:
            base = row[0]
            return len(row), tuple(v - base for v in row)
        return len(row), row

    def get(self, row: Row) -> int | None:
        key = self._key(row)
        with self._lock:
            value = self._store.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, row: Row, value: int) -> None:
        key = self._key(row)
        with self._lock:
            self._store[key] = value

    def __len__(self) -> int:
        return len(self._store)

    def save(self, path) -> None:
        """One record per line: length, comma-separated row, decimal value."""
        with self._lock:
            records = sorted(self._store.items())
        with open(path, "w", encoding="ascii") as fh:
            for (n, row), value in records:
                fh.write(f"{n}\t{','.join(str(v) for v in row)}\t{value}\n")

    def load(self, path) -> int:
        """Merge records from ``path``; returns the number of records read."""
        count = 0
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                n_text, row_text, value_text = line.split("\t")
                row = tuple(int(v) for v in row_text.split(","))
                if len(row) != int(n_text):
                    raise ValueError(f"corrupt cache record: {line!r}")
                with self._lock:
                    self._store[(int(n_text), row)] = int(value_text)
                count += 1
        return count


def _check_row(row) -> Row:
    row = tuple(row)
    if not row:
        raise ValueError("the argument row must not be empty")
    for v in row:
        if not isinstance(v, int):
            raise TypeError(f"non-integer argument {v!r}")
    if len(row) > MAX_EVAL_LENGTH:
        raise BudgetExceededError(f"row length {len(row)} exceeds the evaluation bound {MAX_EVAL_LENGTH}")
    return row


def _alpha_operator(row: Row, cache: EvalCache, alt: bool) -> int:
    def ev(r: Row) -> int:
        if len(r) == 1:
            return 1
        cached = cache.get(r)
        if cached is not None:
            return cached
        if alt and len(r) >= 3:
            value = _op_alt(r, ev)
        else:
            value = _op(r, ev)
        cache.put(r, value)
        return value

    return ev(row)


def _alpha_third(row: Row, cache: EvalCache) -> int:
    def ev(r: Row) -> int:
        n = len(r)
        if n == 1:
            return 1
        cached = cache.get(r)
        if cached is not None:
            return cached
        total = 0
        for chosen in nonadjacent_index_sets(2, n - 1):
            # Free position j sums from r[j] to r[j+1]; each chosen index i
            # pins positions i-1 and i to the single value r[i-1] (1-based).
            bounds = [(r[j], r[j + 1]) for j in range(n - 1)]
            for i in chosen:
                bounds[i - 2] = (r[i - 1], r[i - 1])
                bounds[i - 1] = (r[i - 1], r[i - 1])

            def nested(j: int, prefix: Row) -> int:
                if j == n - 1:
                    return ev(prefix)
                a, b = bounds[j]
                return extended_sum(lambda v: nested(j + 1, prefix + (v,)), a, b)

            term = nested(0, ())
            total += term if len(chosen) % 2 == 0 else -term
        cache.put(r, total)
        return total

    return ev(row)


def alpha(row, method: str = "operator", cache: EvalCache | None = None) -> int:
    """Evaluate the counting polynomial at an integer row by the given method.

    All methods agree; ``mt`` requires a strictly increasing row.  ``cache``
    memoizes sub-evaluations for the recursive methods and may be shared
    across calls; results are identical with or without one.
    """
    row = _check_row(row)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    if method == "mt":
        if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
            raise ValueError("method 'mt' requires a strictly increasing row")
        return sum(1 for _ in enumerate_mt(row))
    if method == "gmt":
        return signed_gmt_count(row)
    if cache is None:
        cache = EvalCache()
    if method == "third":
        return _alpha_third(row, cache)
    return _alpha_operator(row, cache, alt=(method == "operator_alt"))


def third_extension_eval(row, cache: EvalCache | None = None) -> int:
    """Evaluate via the inclusion-exclusion expansion into simple sums.

    Sums over families of non-adjacent indices 2 <= i_1 < ... < i_p <= n-1
    with sign (-1)**p; each chosen index pins two adjacent positions of the
    inner row to a single value, the remaining positions range over extended
    sums between consecutive arguments.
    """
    row = _check_row(row)
    return _alpha_third(row, cache if cache is not None else EvalCache())


def applicable_methods(row) -> tuple[str, ...]:
    """Methods valid for the given row: all five when strictly increasing,
    otherwise everything except ``mt``."""
    row = tuple(row)
    if all(row[j] < row[j + 1] for j in range(len(row) - 1)):
        return METHODS
    return tuple(m for m in METHODS if m != "mt")
