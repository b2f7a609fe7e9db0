"""Isomorph-free exhaustive generation of small po-semirings.

Fast mode enumerates bounded join-semilattice addition tables (labels
restricted to linear extensions, which loses no isomorphism class), then
backtracks over multiplication tables with incremental pruning.  A naive
table-pair sweep serves as an independent oracle at small orders.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from .core import DomainError, PoSemiringTable, make_table, verify_axioms

FAST_CAP = 6
NAIVE_CAP = 4


@dataclass(frozen=True)
class CensusResult:
    order: int
    count_up_to_iso: int
    count_labeled: int
    instances: tuple[PoSemiringTable, ...]
    seconds: float
    mode: str


def _generic_names(n: int) -> tuple[str, ...]:
    return ("0",) + tuple(f"x{i}" for i in range(1, n - 1)) + ("1",)


def canonical_form(A: PoSemiringTable) -> bytes:
    """Minimal serialization of (add, mul) over all 0,1-fixing permutations."""
    n = A.order
    best = None
    for middle in itertools.permutations(range(1, n - 1)):
        perm = (0,) + middle + (n - 1,)
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        buf = bytearray()
        for tab in (A.add, A.mul):
            for x in range(n):
                for y in range(n):
                    buf.append(perm[tab[inv[x]][inv[y]]])
        data = bytes(buf)
        if best is None or data < best:
            best = data
    return best


def table_from_canonical(n: int, data: bytes) -> PoSemiringTable:
    cells = n * n
    add = [list(data[x * n:(x + 1) * n]) for x in range(n)]
    mul = [list(data[cells + x * n:cells + (x + 1) * n]) for x in range(n)]
    return make_table(n, _generic_names(n), add, mul)


def automorphism_count(A: PoSemiringTable) -> int:
    n = A.order
    count = 0
    for middle in itertools.permutations(range(1, n - 1)):
        perm = (0,) + middle + (n - 1,)
        if all(perm[A.add[x][y]] == A.add[perm[x]][perm[y]]
               and perm[A.mul[x][y]] == A.mul[perm[x]][perm[y]]
               for x in range(n) for y in range(n)):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Fast mode


def _bounded_semilattices(n: int):
    """Yield join tables of lattices on 0..n-1 with bottom 0 and top n-1.

    Strict down-sets are built one element at a time; indices form a linear
    extension of the order.
    """

    def downsets(below, i):
        ground = list(range(1, i))
        for r in range(len(ground) + 1):
            for extra in itertools.combinations(ground, r):
                s = frozenset((0,) + extra)
                if all(below[j] <= s for j in s):
                    yield s

    def rec(i, below):
        if i == n - 1:
            yield below + [frozenset(range(n - 1))]
            return
        for s in downsets(below, i):
            yield from rec(i + 1, below + [s])

    def join_table(below):
        leq = [[x == y or x in below[y] for y in range(n)] for x in range(n)]
        add = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
                least = [z for z in ubs if all(leq[z][w] for w in ubs)]
                if not least:
                    return None
                add[x][y] = least[0]
        return add

    if n == 2:
        yield [[0, 1], [1, 1]]
        return
    for below in rec(1, [frozenset()]):
        tab = join_table(below)
        if tab is not None:
            yield tab


def _mul_backtrack(n: int, add):
    """Yield all multiplication tables compatible with the given join table."""
    one = n - 1
    leq = [[add[x][y] == y for y in range(n)] for x in range(n)]
    down = [[z for z in range(n) if leq[z][x]] for x in range(n)]
    mul = [[None] * n for _ in range(n)]
    for x in range(n):
        mul[0][x] = mul[x][0] = 0
        mul[one][x] = mul[x][one] = x
    cells = [(x, y) for x in range(1, n - 1) for y in range(x, n - 1)]

    def partial_ok(cx, cy):
        rng = range(n)
        for x in rng:
            for y in rng:
                v = mul[x][y]
                if v is None:
                    continue
                for z in rng:
                    # associativity on filled triples
                    if mul[v][z] is not None and mul[y][z] is not None \
                            and mul[x][mul[y][z]] is not None \
                            and mul[v][z] != mul[x][mul[y][z]]:
                        return False
                    # distributivity on filled triples
                    w = mul[x][z]
                    if w is not None and mul[x][add[y][z]] is not None \
                            and mul[x][add[y][z]] != add[v][w]:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            yield [row[:] for row in mul]
            return
        x, y = cells[k]
        for v in down[x]:
            if not leq[v][y]:
                continue
            mul[x][y] = mul[y][x] = v
            if partial_ok(x, y):
                yield from rec(k + 1)
        mul[x][y] = mul[y][x] = None

    yield from rec(0)


def _fast_census(n: int):
    classes = {}
    for add in _bounded_semilattices(n):
        for mul in _mul_backtrack(n, add):
            A = make_table(n, _generic_names(n), add, mul)
            if not verify_axioms(A).valid:
                continue
            key = canonical_form(A)
            if key not in classes:
                classes[key] = table_from_canonical(n, key)
    reps = [classes[k] for k in sorted(classes)]
    labeled = sum(math.factorial(n - 2) // automorphism_count(A) for A in reps)
    return reps, labeled


# ---------------------------------------------------------------------------
# Naive oracle


def _naive_census(n: int):
    """Sweep all interior cell assignments and filter by verify_axioms.

    Rows forced by the identity, top, and absorption axioms are fixed up
    front (pure filtering); everything else is brute force.
    """
    one = n - 1
    interior = [(x, y) for x in range(1, n - 1) for y in range(x, n - 1)]

    def tables(fixed_rows):
        base = [[None] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                v = fixed_rows(x, y)
                if v is not None:
                    base[x][y] = v
        for values in itertools.product(range(n), repeat=len(interior)):
            tab = [row[:] for row in base]
            for (x, y), v in zip(interior, values):
                tab[x][y] = tab[y][x] = v
            yield tab

    def add_fixed(x, y):
        if x == 0:
            return y
        if y == 0:
            return x
        if x == one or y == one:
            return one
        return None

    def mul_fixed(x, y):
        if x == 0 or y == 0:
            return 0
        if x == one:
            return y
        if y == one:
            return x
        return None

    classes = {}
    labeled = 0
    adds = [t for t in tables(add_fixed)]
    muls = [t for t in tables(mul_fixed)]
    for add in adds:
        for mul in muls:
            A = make_table(n, _generic_names(n), add, mul)
            if not verify_axioms(A).valid:
                continue
            labeled += 1
            key = canonical_form(A)
            if key not in classes:
                classes[key] = table_from_canonical(n, key)
    reps = [classes[k] for k in sorted(classes)]
    return reps, labeled


def enumerate_posemirings(n: int, mode: str = "fast") -> CensusResult:
    cap = FAST_CAP if mode == "fast" else NAIVE_CAP
    if mode not in ("fast", "naive"):
        raise DomainError(f"unknown census mode {mode!r}")
    if not 2 <= n <= cap:
        raise DomainError(f"order {n} outside [2, {cap}] for mode {mode}")
    start = time.perf_counter()
    reps, labeled = _fast_census(n) if mode == "fast" else _naive_census(n)
    return CensusResult(order=n, count_up_to_iso=len(reps),
                        count_labeled=labeled, instances=tuple(reps),
                        seconds=time.perf_counter() - start, mode=mode)
