"""Finite commutative rings as tables, their ideal lattice, and the ideal
po-semiring I(R) with the annihilating-ideal graph AG(R)."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import DomainError, PoSemiringTable, StructureError, make_table, verify_axioms
from .graphs import GraphShape, ZdGraph, build_zdgraph, classify_shape

RING_ORDER_CAP = 512
IDEAL_COUNT_CAP = 64
ZPX_PRIME_CAP = 13


@dataclass(frozen=True)
class FiniteRing:
    order: int
    names: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    one: int

    def elements(self):
        return range(self.order)

    def __repr__(self):
        return f"FiniteRing(order={self.order})"


@dataclass(frozen=True)
class Ideal:
    members: frozenset[int]
    generators: tuple[int, ...] = ()


def _check_ring(R: FiniteRing):
    n, add, mul = R.order, R.add, R.mul
    for x in range(n):
        if add[0][x] != x:
            raise StructureError("0 is not the additive identity")
        if mul[R.one][x] != x:
            raise StructureError("recorded identity is not multiplicative identity")
        if not any(add[x][y] == 0 for y in range(n)):
            raise StructureError(f"element {x} has no additive inverse")
        for y in range(n):
            if add[x][y] != add[y][x] or mul[x][y] != mul[y][x]:
                raise StructureError("operations are not commutative")
            for z in range(n):
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    raise StructureError("addition is not associative")
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise StructureError("multiplication is not associative")
                if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
                    raise StructureError("distributivity fails")


def _make_ring(order, names, add, mul, one, check=True) -> FiniteRing:
    R = FiniteRing(order=order, names=tuple(names),
                   add=tuple(tuple(r) for r in add),
                   mul=tuple(tuple(r) for r in mul), one=one)
    if check:
        _check_ring(R)
    return R


def ring_zn(n: int) -> FiniteRing:
    if not 2 <= n <= RING_ORDER_CAP:
        raise DomainError(f"zn order must be in [2, {RING_ORDER_CAP}]")
    names = [str(i) for i in range(n)]
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[(x * y) % n for y in range(n)] for x in range(n)]
    return _make_ring(n, names, add, mul, one=1 % n, check=False)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def ring_quadratic(p: int, c1: int, c0: int) -> FiniteRing:
    """Z_p[x]/(x^2 + c1*x + c0); element a + b*x is index a*p + b."""
    if not _is_prime(p) or p > ZPX_PRIME_CAP:
        raise DomainError(f"zpx modulus must be a prime <= {ZPX_PRIME_CAP}")
    c1, c0 = c1 % p, c0 % p
    n = p * p

    def add(x, y):
        return ((x // p + y // p) % p) * p + (x % p + y % p) % p

    def mul(x, y):
        a, b = divmod(x, p)
        c, d = divmod(y, p)
        # x^2 = -(c1 x + c0)
        const = (a * c - b * d * c0) % p
        lin = (a * d + b * c - b * d * c1) % p
        return const * p + lin

    names = []
    for a in range(p):
        for b in range(p):
            if b == 0:
                names.append(str(a))
            else:
                bx = "x" if b == 1 else f"{b}x"
                names.append(bx if a == 0 else f"{a}+{bx}")
    addt = [[add(x, y) for y in range(n)] for x in range(n)]
    mult = [[mul(x, y) for y in range(n)] for x in range(n)]
    return _make_ring(n, names, addt, mult, one=p)


def ring_product(R: FiniteRing, S: FiniteRing) -> FiniteRing:
    ns = S.order
    n = R.order * ns
    if n > RING_ORDER_CAP:
        raise DomainError(f"product order {n} exceeds cap {RING_ORDER_CAP}")
    names = [f"({a},{b})" for a in R.names for b in S.names]

    def op(ta, tb):
        return [[ta[x // ns][y // ns] * ns + tb[x % ns][y % ns]
                 for y in range(n)] for x in range(n)]

    return _make_ring(n, names, op(R.add, S.add), op(R.mul, S.mul),
                      one=R.one * ns + S.one, check=False)


def parse_ring_file(text: str) -> FiniteRing:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    pos = 0

    def take(what):
        nonlocal pos
        if pos >= len(lines):
            raise StructureError(f"unexpected end of input, expected {what}")
        line = lines[pos]
        pos += 1
        return line

    if take("magic") != "ring 1":
        raise StructureError("missing 'ring 1' header")
    order = _keyed_int(take("order"), "order")
    one = _keyed_int(take("one"), "one")
    names_line = take("names").split()
    if names_line[:1] != ["names"] or len(names_line) != order + 1:
        raise StructureError("malformed names line")

    def table(label):
        if take(label) != label:
            raise StructureError(f"expected '{label}' section")
        rows = []
        for _ in range(order):
            try:
                row = [int(v) for v in take(f"{label} row").split()]
            except ValueError:
                raise StructureError(f"non-integer entry in {label}") from None
            if len(row) != order or any(not 0 <= v < order for v in row):
                raise StructureError(f"bad {label} row")
            rows.append(row)
        return rows

    add = table("add")
    mul = table("mul")
    if pos != len(lines):
        raise StructureError(f"trailing garbage: {lines[pos]!r}")
    if not 0 <= one < order:
        raise StructureError("identity index out of range")
    return _make_ring(order, names_line[1:], add, mul, one=one)


def _keyed_int(line, key):
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise StructureError(f"malformed {key} line")
    try:
        return int(parts[1])
    except ValueError:
        raise StructureError(f"{key} is not an integer") from None


def ring_to_text(R: FiniteRing) -> str:
    lines = ["ring 1", f"order {R.order}", f"one {R.one}",
             "names " + " ".join(R.names), "add"]
    lines += [" ".join(str(v) for v in row) for row in R.add]
    lines.append("mul")
    lines += [" ".join(str(v) for v in row) for row in R.mul]
    return "\n".join(lines) + "\n"


def make_ring(spec: str, read_file=None) -> FiniteRing:
    """Ring construction grammar: zn:N, zpx:p:c1:c0, prod(a,b), file:path."""
    spec = spec.strip()
    m = re.fullmatch(r"prod\((.*)\)", spec)
    if m:
        depth = 0
        for i, ch in enumerate(m.group(1)):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                left, right = m.group(1)[:i], m.group(1)[i + 1:]
                return ring_product(make_ring(left, read_file),
                                    make_ring(right, read_file))
        raise StructureError("prod() takes two specs")
    if spec.startswith("zn:"):
        try:
            return ring_zn(int(spec[3:]))
        except ValueError:
            raise StructureError(f"bad zn spec {spec!r}") from None
    if spec.startswith("zpx:"):
        parts = spec[4:].split(":")
        if len(parts) != 3:
            raise StructureError("zpx spec is zpx:p:c1:c0")
        try:
            p, c1, c0 = (int(v) for v in parts)
        except ValueError:
            raise StructureError(f"bad zpx spec {spec!r}") from None
        return ring_quadratic(p, c1, c0)
    if spec.startswith("file:"):
        path = spec[5:]
        if read_file is None:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = read_file(path)
        return parse_ring_file(text)
    raise StructureError(f"unknown ring spec {spec!r}")


# ---------------------------------------------------------------------------
# Ideals


def principal_ideal(R: FiniteRing, a: int) -> frozenset[int]:
    return frozenset(R.mul[r][a] for r in R.elements())


def ideal_sum(R: FiniteRing, I, J) -> frozenset[int]:
    return frozenset(R.add[i][j] for i in I for j in J)


def ideal_product(R: FiniteRing, I, J) -> frozenset[int]:
    prods = {R.mul[i][j] for i in I for j in J} | {0}
    while True:
        more = {R.add[a][b] for a in prods for b in prods} - prods
        if not more:
            return frozenset(prods)
        prods |= more


def enumerate_ring_ideals(R: FiniteRing) -> list[Ideal]:
    """All ideals: principal ideals closed under pairwise sums."""
    if R.order > RING_ORDER_CAP:
        raise DomainError(f"ring order {R.order} exceeds cap {RING_ORDER_CAP}")
    family = {principal_ideal(R, a) for a in R.elements()}
    while True:
        fresh = set()
        fam = list(family)
        for i, I in enumerate(fam):
            for J in fam[i + 1:]:
                s = ideal_sum(R, I, J)
                if s not in family:
                    fresh.add(s)
        if not fresh:
            break
        family |= fresh
    ordered = sorted(family, key=lambda m: (len(m), sorted(m)))
    out = []
    for mem in ordered:
        gens = tuple(a for a in sorted(mem) if principal_ideal(R, a) == mem)
        out.append(Ideal(members=mem, generators=gens[:1]))
    return out


def ideal_name(R: FiniteRing, ideal: Ideal) -> str:
    if ideal.generators:
        return f"({R.names[ideal.generators[0]]})"
    return "{" + ",".join(R.names[x] for x in sorted(ideal.members)) + "}"


def ideal_semiring(R: FiniteRing, cap: int = IDEAL_COUNT_CAP):
    """The po-semiring I(R): ideal sum, ideal product, ordered by inclusion.

    Returns (table, ideals) with ideals[i] the ideal at table index i.
    """
    ideals = enumerate_ring_ideals(R)
    k = len(ideals)
    if k > cap:
        raise DomainError(f"{k} ideals exceed cap {cap}")
    index = {i.members: pos for pos, i in enumerate(ideals)}
    names = []
    for ideal in ideals:
        nm = ideal_name(R, ideal)
        while nm in names:
            nm += "'"
        names.append(nm)
    add = [[index[ideal_sum(R, a.members, b.members)] for b in ideals]
           for a in ideals]
    mul = [[index[ideal_product(R, a.members, b.members)] for b in ideals]
           for a in ideals]
    table = make_table(k, names, add, mul)
    report = verify_axioms(table)
    if not report.valid:
        raise StructureError(f"I(R) fails the axioms: {report.violations[0]}")
    return table, tuple(ideals)


def annihilating_ideal_graph(R: FiniteRing) -> tuple[ZdGraph, GraphShape, PoSemiringTable]:
    table, _ = ideal_semiring(R)
    graph = build_zdgraph(table.mul, source_kind="posemiring")
    return graph, classify_shape(graph), table


def ring_zdgraph(R: FiniteRing) -> tuple[ZdGraph, GraphShape]:
    graph = build_zdgraph(R.mul, source_kind="ring")
    return graph, classify_shape(graph)


# ---------------------------------------------------------------------------
# Radicals and local structure


@dataclass(frozen=True)
class RadicalReport:
    nilradical: Ideal
    jacobson: Ideal
    idempotents: frozenset[int]


def nilpotents(R: FiniteRing) -> frozenset[int]:
    out = set()
    for x in R.elements():
        p = x
        for _ in range(R.order):
            if p == 0:
                out.add(x)
                break
            p = R.mul[p][x]
    return frozenset(out)


def maximal_ideals(R: FiniteRing) -> list[Ideal]:
    ideals = enumerate_ring_ideals(R)
    proper = [i for i in ideals if len(i.members) < R.order]
    return [i for i in proper
            if not any(i.members < j.members for j in proper)]


def radicals(R: FiniteRing) -> RadicalReport:
    nil = nilpotents(R)
    jac = frozenset.intersection(*(m.members for m in maximal_ideals(R)))
    idem = frozenset(x for x in R.elements() if R.mul[x][x] == x)

    def as_ideal(mem):
        gens = tuple(a for a in sorted(mem) if principal_ideal(R, a) == mem)
        return Ideal(members=mem, generators=gens[:1])

    return RadicalReport(nilradical=as_ideal(nil), jacobson=as_ideal(jac),
                         idempotents=idem)


def is_local(R: FiniteRing) -> bool:
    return len(maximal_ideals(R)) == 1
