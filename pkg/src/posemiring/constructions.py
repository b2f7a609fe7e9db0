"""Explicit po-semiring constructions and their inverse decompositions.

Infinite families are realized as finite truncations: the chain parameter k
replaces the trailing dots, and every constructed table is re-verified
against the axioms instead of being assumed correct.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (
    ClosureError,
    DomainError,
    NotApplicableError,
    PoSemiringTable,
    StructureError,
    analyze_elements,
    check_conditions,
    find_isomorphism,
    is_idempotent,
    is_minimal_element,
    make_table,
    orthogonal_complement,
    verify_axioms,
    zero_divisors,
    _lower_members,
)
from .graphs import ZdGraph, build_zdgraph, classify_shape

BOOLEAN_POWER_CAP = 6


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict
    children: tuple["ConstructionSpec", ...] = ()


def _table_from_ops(names, addf, mulf) -> PoSemiringTable:
    n = len(names)
    add = [[addf(x, y) for y in range(n)] for x in range(n)]
    mul = [[mulf(x, y) for y in range(n)] for x in range(n)]
    A = make_table(n, names, add, mul)
    report = verify_axioms(A)
    if not report.valid:
        raise StructureError(f"constructed table fails axioms: {report.violations[0]}")
    return A


def trivial() -> PoSemiringTable:
    return _table_from_ops(("0", "1"), max, min)


def chain_lattice(k: int) -> PoSemiringTable:
    """The integral chain 0 < c1 < ... < ck < 1 with max addition, min product."""
    if k < 0:
        raise DomainError("chain length must be >= 0")
    names = ("0",) + tuple(f"c{i}" for i in range(1, k + 1)) + ("1",)
    return _table_from_ops(names, max, min)


def example_2_6(k: int) -> PoSemiringTable:
    """Chain 0 < a < b1 < ... < bk < 1 with a annihilating every b_i."""
    if k < 1:
        raise DomainError("need at least one b element (k >= 1)")
    names = ("0", "a") + tuple(f"b{i}" for i in range(1, k + 1)) + ("1",)
    n = len(names)
    a, one = 1, n - 1

    def mul(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return 0
        if y == one:
            return x
        if x == a:
            return 0          # a*a = 0 and a*b_i = 0
        return x              # b_i * b_j = b_min

    return _table_from_ops(names, max, mul)


def example_3_2(k: int) -> PoSemiringTable:
    """Same chain as example_2_6 but with min multiplication except a*a = 0."""
    if k < 1:
        raise DomainError("need at least one b element (k >= 1)")
    names = ("0", "a") + tuple(f"b{i}" for i in range(1, k + 1)) + ("1",)
    a = 1

    def mul(x, y):
        if x == a and y == a:
            return 0
        return min(x, y)

    return _table_from_ops(names, max, mul)


def example_4_6(k: int, u_square: str) -> PoSemiringTable:
    """Chain 0 < c < u < b1 < ... < bk < 1 with c, u as zero divisors."""
    if k < 1:
        raise DomainError("need at least one b element (k >= 1)")
    if u_square not in ("zero", "c", "u"):
        raise DomainError(f"u_square must be zero/c/u, got {u_square!r}")
    names = ("0", "c", "u") + tuple(f"b{i}" for i in range(1, k + 1)) + ("1",)
    c, u = 1, 2
    u2 = {"zero": 0, "c": c, "u": u}[u_square]

    def mul(x, y):
        x, y = min(x, y), max(x, y)
        if x == c and y == c:
            return 0          # forced by c <= u and cu = 0
        if x == c and y == u:
            return 0
        if x == u and y == u:
            return u2
        return min(x, y)

    return _table_from_ops(names, max, mul)


def example_4_7(k: int, pos: int) -> PoSemiringTable:
    """Z(A) = {c, u} with Z(A)^2 = 0, u incomparable to b_1..b_{pos-1}, u < b_pos."""
    if pos < 2:
        raise DomainError("threshold position must be > 1")
    if pos > k:
        raise DomainError(f"threshold position {pos} needs chain length >= {pos}")
    names = ("0", "c", "u") + tuple(f"b{i}" for i in range(1, k + 1)) + ("1",)
    n = len(names)
    c, u, one = 1, 2, n - 1
    b = lambda i: 2 + i       # index of b_i

    def add(x, y):
        x, y = min(x, y), max(x, y)
        if x in (0, c):
            return y
        if x == u:
            if y in (u, one):
                return y
            return y if y >= b(pos) else b(pos)
        return max(x, y)      # within the chain part

    def mul(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return 0
        if y == one:
            return x
        if x == c:
            return c          # c * A1* = c; c^2 handled below
        if x == u:
            return 0 if y == u else c     # u^2 = 0, u * b_i = c
        return b(1)           # b_i * b_j = b_1
    # c^2 = cu = 0:

    def mul2(x, y):
        if {x, y} <= {c, u}:
            return 0
        return mul(x, y)

    return _table_from_ops(names, add, mul2)


def direct_product(A: PoSemiringTable, B: PoSemiringTable) -> PoSemiringTable:
    nb = B.order
    names = tuple(f"{a}×{b}" for a in A.names for b in B.names)

    def op(tab_a, tab_b):
        def f(x, y):
            xa, xb = divmod(x, nb)
            ya, yb = divmod(y, nb)
            return tab_a[xa][ya] * nb + tab_b[xb][yb]
        return f

    return _table_from_ops(names, op(A.add, B.add), op(A.mul, B.mul))


def boolean_power(n: int, cap: int = BOOLEAN_POWER_CAP) -> PoSemiringTable:
    if n < 1:
        raise DomainError("boolean power needs n >= 1")
    if n > cap:
        raise DomainError(f"boolean power {n} exceeds cap {cap}")
    A = trivial()
    for _ in range(n - 1):
        A = direct_product(A, trivial())
    return A


# ---------------------------------------------------------------------------
# Adjoining small zero-divisor sets to an integral base


def _require_integral(A1: PoSemiringTable):
    if zero_divisors(A1):
        raise DomainError("base instance is not integral")


def adjoin_z1(A1: PoSemiringTable) -> PoSemiringTable:
    """Insert a nilpotent c directly above 0; the result has Z = {c}."""
    _require_integral(A1)
    n1 = A1.order
    names = (A1.names[0], "z·c") + A1.names[1:]
    c = 1

    def addf(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return y
        if x == c:
            return y
        return A1.add[x - 1][y - 1] + 1

    def mulf(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return 0
        if x == c:
            return 0 if y == c else c
        return A1.mul[x - 1][y - 1] + 1

    return _table_from_ops(names, addf, mulf)


def _least_nonzero(A1: PoSemiringTable) -> int | None:
    for a0 in A1.nonzero():
        if all(A1.leq(a0, x) for x in A1.nonzero()):
            return a0
    return None


def adjoin_z2_incomparable(A1: PoSemiringTable) -> PoSemiringTable:
    """Insert incomparable idempotents c, u with c + u = a0; Z = {c, u}."""
    _require_integral(A1)
    a0 = _least_nonzero(A1)
    if a0 is None:
        raise DomainError("base instance has no least nonzero element")
    names = (A1.names[0], "z·c", "z·u") + A1.names[1:]
    c, u = 1, 2
    new_a0 = a0 + 2

    def addf(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return y
        if x in (c, u):
            if y == x:
                return x
            if y in (c, u):
                return new_a0
            return y
        return A1.add[x - 2][y - 2] + 2

    def mulf(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return 0
        if x in (c, u):
            if y == x:
                return x
            if y in (c, u):
                return 0
            return x
        return A1.mul[x - 2][y - 2] + 2

    return _table_from_ops(names, addf, mulf)


def adjoin_z2_chain(A1: PoSemiringTable, u_square: str) -> PoSemiringTable:
    """Insert a chain 0 < c < u below A1*; u^2 is c or u, so Z^2 != 0."""
    _require_integral(A1)
    if u_square not in ("c", "u"):
        raise DomainError(f"u_square must be c or u, got {u_square!r}")
    names = (A1.names[0], "z·c", "z·u") + A1.names[1:]
    c, u = 1, 2
    u2 = c if u_square == "c" else u

    def addf(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0 or x in (c, u):
            return y
        return A1.add[x - 2][y - 2] + 2

    def mulf(x, y):
        x, y = min(x, y), max(x, y)
        if x == 0:
            return 0
        if x == c:
            return 0 if y in (c, u) else c
        if x == u:
            return u2 if y == u else u
        return A1.mul[x - 2][y - 2] + 2

    return _table_from_ops(names, addf, mulf)


# ---------------------------------------------------------------------------
# Sub-instances and decompositions


def sub_posemiring(A: PoSemiringTable, members, top: int):
    """Re-index a closed subset (with multiplicative identity `top`) as an instance.

    Returns (table, old-to-new index map).
    """
    members = set(members)
    ordered = [0] + sorted(members - {0, top}) + [top]
    index = {old: new for new, old in enumerate(ordered)}
    for x in ordered:
        for y in ordered:
            if A.add[x][y] not in members:
                raise ClosureError((x, y, "add"))
            if A.mul[x][y] not in members:
                raise ClosureError((x, y, "mul"))
    names = tuple(A.names[x] for x in ordered)
    add = [[index[A.add[x][y]] for y in ordered] for x in ordered]
    mul = [[index[A.mul[x][y]] for y in ordered] for x in ordered]
    sub = make_table(len(ordered), names, add, mul)
    report = verify_axioms(sub)
    if not report.valid:
        raise StructureError(f"subset is not a po-semiring: {report.violations[0]}")
    return sub, index


@dataclass(frozen=True)
class Z1Decomposition:
    a1: PoSemiringTable
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Z2IncomparableDecomposition:
    a1: PoSemiringTable
    a0: int                     # least nonzero element of a1 (a1 index)
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Z2ChainDecomposition:
    a1: PoSemiringTable
    u_square: str               # "c" or "u"
    witness: tuple[int, ...]


@dataclass(frozen=True)
class BooleanPeel:
    n: int
    a1: PoSemiringTable
    witness: tuple[int, ...]


@dataclass(frozen=True)
class TwoStarSplit:
    s: PoSemiringTable
    r: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Prop45Report:
    a1: PoSemiringTable
    conditions: dict            # keys "1", "3".."6" -> bool

    @property
    def ok(self) -> bool:
        return all(self.conditions.values())


def _prop45_conditions(A: PoSemiringTable, c: int, u: int, rest: list[int]) -> dict:
    add, mul, one = A.add, A.mul, A.one
    rest_star = [x for x in rest if x != 0]
    a1_all = rest
    cond = {}
    cond["1"] = (
        all(add[0][x] == x for x in (c, u))
        and all(add[c][y] == y for y in A.nonzero())
        and add[u][one] == one and add[u][u] == u
        and all(add[u][add[x][y]] == add[add[u][x]][y]
                for x in rest_star for y in rest_star)
        and all(add[u][add[u][x]] == add[u][x] for x in rest_star)
    )
    cond["3"] = (
        all(mul[x][y] == 0 for x in (c, u) for y in (c, u))
        and all(mul[0][x] == 0 for x in (c, u))
        and all(mul[c][x] == c for x in rest_star)
        and all(mul[u][x] != 0 for x in rest_star)
    )
    cond["4"] = all(not (mul[x][u] == u and mul[y][u] == u)
                    or mul[mul[x][y]][u] == u
                    for x in a1_all for y in a1_all)
    cond["5"] = all(not (A.leq(y, x) and mul[y][u] == u) or mul[x][u] == u
                    for x in a1_all for y in a1_all)
    cond["6"] = (
        all(mul[x][add[y][u]] == add[mul[x][y]][mul[x][u]]
            for x in A.elements() for y in a1_all)
        and all(not (mul[u][y] == c and mul[u][z] == c)
                or mul[u][add[y][z]] == c
                for y in a1_all for z in a1_all)
    )
    return cond


def recognize_small_z(A: PoSemiringTable):
    """Recover the integral base of an instance with one or two zero divisors.

    Returns a decomposition with an isomorphism witness, or a Prop45Report
    for the |Z| = 2, Z^2 = 0 case.  Raises ClosureError if the complement of
    Z(A) is not closed (which would falsify the structure theorems).
    """
    zd = sorted(zero_divisors(A))
    if len(zd) not in (1, 2):
        raise NotApplicableError(f"|Z(A)| = {len(zd)}, expected 1 or 2")
    rest = [x for x in A.elements() if x not in zd]
    a1, _ = sub_posemiring(A, rest, top=A.one)

    if len(zd) == 1:
        rebuilt = adjoin_z1(a1)
        perm = find_isomorphism(A, rebuilt)
        if perm is None:
            raise StructureError("adjoin_z1 rebuild is not isomorphic to the input")
        return Z1Decomposition(a1=a1, witness=perm)

    c, u = zd
    z_sq_zero = all(A.mul[x][y] == 0 for x in zd for y in zd)
    if z_sq_zero:
        if A.leq(u, c):         # c plays the least-element role
            c, u = u, c
        return Prop45Report(a1=a1, conditions=_prop45_conditions(A, c, u, rest))
    if A.leq(c, u) or A.leq(u, c):
        if A.leq(u, c):
            c, u = u, c
        u2 = A.mul[u][u]
        u_square = "c" if u2 == c else "u"
        rebuilt = adjoin_z2_chain(a1, u_square)
        perm = find_isomorphism(A, rebuilt)
        if perm is None:
            raise StructureError("adjoin_z2_chain rebuild is not isomorphic")
        return Z2ChainDecomposition(a1=a1, u_square=u_square, witness=perm)
    a0_old = A.add[c][u]
    a0_new = [0] + sorted(set(rest) - {0, A.one}) + [A.one]
    rebuilt = adjoin_z2_incomparable(a1)
    perm = find_isomorphism(A, rebuilt)
    if perm is None:
        raise StructureError("adjoin_z2_incomparable rebuild is not isomorphic")
    return Z2IncomparableDecomposition(a1=a1, a0=a0_new.index(a0_old),
                                       witness=perm)


def peel_boolean(A: PoSemiringTable) -> BooleanPeel:
    """Repeatedly split off {0,1} factors at idempotent minimal elements."""
    if not check_conditions(A).c3:
        raise NotApplicableError("condition (C3) does not hold")
    count = 0
    cur = A
    while cur.order > 2:
        e = next((x for x in cur.nonzero()
                  if is_idempotent(cur, x) and is_minimal_element(cur, x)), None)
        if e is None:
            break
        f = orthogonal_complement(cur, e)
        if f is None or f == 0:
            break
        cur, _ = sub_posemiring(cur, _lower_members(cur, f), top=f)
        count += 1
    rebuilt = cur if count == 0 else direct_product(boolean_power(count), cur)
    perm = find_isomorphism(A, rebuilt)
    if perm is None:
        raise StructureError("boolean peel rebuild is not isomorphic to the input")
    return BooleanPeel(n=count, a1=cur, witness=perm)


def split_two_star(A: PoSemiringTable) -> TwoStarSplit | None:
    """Split A = {0,1} x S when its graph is the two-star K1+K1+K1+D_r."""
    if not check_conditions(A).c3:
        raise NotApplicableError("condition (C3) does not hold")
    shape = classify_shape(posemiring_zdgraph(A))
    if shape.tag != "two-star" or shape.params[0] != 1:
        raise NotApplicableError(f"shape is {shape.line()}, not K1+K1+K1+D_r")
    for e in A.nonzero():
        if not (is_idempotent(A, e) and is_minimal_element(A, e)):
            continue
        f = orthogonal_complement(A, e)
        if f in (None, 0):
            continue
        s, _ = sub_posemiring(A, _lower_members(A, f), top=f)
        if len(zero_divisors(s)) != 1:
            continue
        perm = find_isomorphism(A, direct_product(trivial(), s))
        if perm is not None:
            return TwoStarSplit(s=s, r=s.order - 2, witness=perm)
    return None


def posemiring_zdgraph(A: PoSemiringTable) -> ZdGraph:
    return build_zdgraph(A.mul, source_kind="posemiring")


# ---------------------------------------------------------------------------
# Construction spec grammar


_LEAF_KINDS = {
    "trivial": (),
    "chain": ("k",),
    "example-2.6": ("k",),
    "example-3.2": ("k",),
    "example-4.6": ("k", "u2"),
    "example-4.7": ("k", "n"),
    "bool": ("n",),
}


def parse_spec(text: str) -> ConstructionSpec:
    text = text.strip()
    m = re.fullmatch(r"(product|adjoin-z1|adjoin-z2i|adjoin-z2c)\((.*)\)", text)
    if m:
        kind, inner = m.group(1), m.group(2)
        parts = _split_args(inner)
        if kind == "product":
            if len(parts) != 2:
                raise StructureError("product() takes two specs")
            return ConstructionSpec("product", {},
                                    tuple(parse_spec(p) for p in parts))
        if kind == "adjoin-z2c":
            if len(parts) != 2 or not parts[1].startswith("u2="):
                raise StructureError("adjoin-z2c(<spec>,u2=c|u)")
            return ConstructionSpec("adjoin_z2_chain",
                                    {"u2": parts[1][3:]},
                                    (parse_spec(parts[0]),))
        if len(parts) != 1:
            raise StructureError(f"{kind}() takes one spec")
        name = "adjoin_z1" if kind == "adjoin-z1" else "adjoin_z2_incomparable"
        return ConstructionSpec(name, {}, (parse_spec(parts[0]),))

    head, _, tail = text.partition(":")
    if head not in _LEAF_KINDS:
        raise StructureError(f"unknown construction kind {head!r}")
    params = {}
    if tail:
        for item in tail.split(","):
            key, _, val = item.partition("=")
            if not val:
                raise StructureError(f"malformed parameter {item!r}")
            params[key.strip()] = val.strip()
    missing = set(_LEAF_KINDS[head]) - set(params)
    extra = set(params) - set(_LEAF_KINDS[head])
    if missing or extra:
        raise StructureError(
            f"{head}: missing {sorted(missing)}, unexpected {sorted(extra)}")
    return ConstructionSpec(head, params)


def _split_args(inner: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _int_param(params, key):
    try:
        return int(params[key])
    except ValueError:
        raise StructureError(f"parameter {key} must be an integer") from None


def construct(spec: ConstructionSpec) -> PoSemiringTable:
    kind = spec.kind
    if kind == "trivial":
        return trivial()
    if kind == "chain":
        return chain_lattice(_int_param(spec.params, "k"))
    if kind == "example-2.6":
        return example_2_6(_int_param(spec.params, "k"))
    if kind == "example-3.2":
        return example_3_2(_int_param(spec.params, "k"))
    if kind == "example-4.6":
        u2 = spec.params["u2"]
        return example_4_6(_int_param(spec.params, "k"), u2)
    if kind == "example-4.7":
        return example_4_7(_int_param(spec.params, "k"),
                           _int_param(spec.params, "n"))
    if kind == "bool":
        return boolean_power(_int_param(spec.params, "n"))
    if kind == "product":
        return direct_product(construct(spec.children[0]),
                              construct(spec.children[1]))
    if kind == "adjoin_z1":
        return adjoin_z1(construct(spec.children[0]))
    if kind == "adjoin_z2_incomparable":
        return adjoin_z2_incomparable(construct(spec.children[0]))
    if kind == "adjoin_z2_chain":
        return adjoin_z2_chain(construct(spec.children[0]), spec.params["u2"])
    raise StructureError(f"unknown construction kind {kind!r}")


def construct_from_text(text: str) -> PoSemiringTable:
    return construct(parse_spec(text))
