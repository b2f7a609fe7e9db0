"""Finite po-semirings as Cayley tables.

An instance is a pair of n x n operation tables over indices 0..n-1 with the
zero element at index 0 and the identity at index n-1.  The partial order is
never stored: x <= y holds exactly when add[x][y] == y.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class StructureError(ValueError):
    """Malformed tables or files: wrong shape, out-of-range entries, bad syntax."""


class DomainError(ValueError):
    """An operation was called with an argument outside its domain."""


class NotApplicableError(Exception):
    """The hypotheses of an operation do not hold for this instance."""


class ClosureError(Exception):
    """A subset expected to be closed under the operations is not.

    Carries a witness (x, y, op) with op in {"add", "mul"}.
    """

    def __init__(self, witness):
        super().__init__(f"closure failure at {witness}")
        self.witness = witness


@dataclass(frozen=True)
class PoSemiringTable:
    order: int
    names: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def one(self) -> int:
        return self.order - 1

    def elements(self):
        return range(self.order)

    def nonzero(self):
        return range(1, self.order)

    def leq(self, x: int, y: int) -> bool:
        return self.add[x][y] == y

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.add[x][y] == y

    def power(self, x: int, k: int) -> int:
        p = self.one
        for _ in range(k):
            p = self.mul[p][x]
        return p

    def name(self, x: int) -> str:
        return self.names[x]

    def __repr__(self):
        return f"PoSemiringTable(order={self.order}, names={list(self.names)})"


def make_table(order, names, add, mul) -> PoSemiringTable:
    """Build a table instance, raising StructureError on malformed input."""
    if order < 2:
        raise StructureError(f"order must be >= 2, got {order}")
    names = tuple(str(s) for s in names)
    if len(names) != order:
        raise StructureError(f"expected {order} names, got {len(names)}")
    if len(set(names)) != order or any(not s for s in names):
        raise StructureError("names must be distinct and non-empty")
    add = _check_matrix(add, order, "add")
    mul = _check_matrix(mul, order, "mul")
    return PoSemiringTable(order=order, names=names, add=add, mul=mul)


def _check_matrix(rows, order, label):
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if len(rows) != order or any(len(r) != order for r in rows):
        raise StructureError(f"{label} table is not {order}x{order}")
    for r in rows:
        for v in r:
            if not 0 <= v < order:
                raise StructureError(f"{label} entry {v} out of range [0, {order})")
    return rows


# ---------------------------------------------------------------------------
# Axiom verification


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]


#: reduced axiom checklist; boundedness plus distributivity force idempotent
#: addition and the compatible order, so those are not independent axioms.
AXIOM_IDS = (
    "add-commutative",
    "add-associative",
    "add-identity",
    "one-is-top",
    "mul-commutative",
    "mul-associative",
    "mul-identity",
    "zero-absorbs",
    "distributive",
)


def verify_axioms(A: PoSemiringTable) -> AxiomReport:
    """Check the reduced axiom list, reporting the first witness per axiom."""
    n, add, mul, one = A.order, A.add, A.mul, A.one
    violations = []

    def first(axiom, gen):
        for w in gen:
            violations.append((axiom, w))
            return

    first("add-commutative", ((x, y) for x in range(n) for y in range(n)
                              if add[x][y] != add[y][x]))
    first("add-associative", ((x, y, z) for x in range(n) for y in range(n)
                              for z in range(n)
                              if add[add[x][y]][z] != add[x][add[y][z]]))
    first("add-identity", ((x,) for x in range(n) if add[0][x] != x))
    first("one-is-top", ((x,) for x in range(n) if add[one][x] != one))
    first("mul-commutative", ((x, y) for x in range(n) for y in range(n)
                              if mul[x][y] != mul[y][x]))
    first("mul-associative", ((x, y, z) for x in range(n) for y in range(n)
                              for z in range(n)
                              if mul[mul[x][y]][z] != mul[x][mul[y][z]]))
    first("mul-identity", ((x,) for x in range(n) if mul[one][x] != x))
    first("zero-absorbs", ((x,) for x in range(n) if mul[0][x] != 0))
    first("distributive", ((x, y, z) for x in range(n) for y in range(n)
                           for z in range(n)
                           if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]))
    return AxiomReport(valid=not violations, violations=tuple(violations))


def replay_violation(A: PoSemiringTable, axiom: str, witness: tuple[int, ...]) -> bool:
    """True when the witness still exhibits the recorded axiom violation."""
    add, mul, one = A.add, A.mul, A.one
    if axiom == "add-commutative":
        x, y = witness
        return add[x][y] != add[y][x]
    if axiom == "add-associative":
        x, y, z = witness
        return add[add[x][y]][z] != add[x][add[y][z]]
    if axiom == "add-identity":
        return add[0][witness[0]] != witness[0]
    if axiom == "one-is-top":
        return add[one][witness[0]] != one
    if axiom == "mul-commutative":
        x, y = witness
        return mul[x][y] != mul[y][x]
    if axiom == "mul-associative":
        x, y, z = witness
        return mul[mul[x][y]][z] != mul[x][mul[y][z]]
    if axiom == "mul-identity":
        return mul[one][witness[0]] != witness[0]
    if axiom == "zero-absorbs":
        return mul[0][witness[0]] != 0
    if axiom == "distributive":
        x, y, z = witness
        return mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]
    raise DomainError(f"unknown axiom id {axiom!r}")


def derived_checks(A: PoSemiringTable) -> tuple[tuple[str, tuple[int, ...]], ...]:
    """Redundant consequences of the axioms, re-checked directly.

    Empty for every valid instance: idempotent addition, the add-derived
    relation being a partial order, and products being lower bounds.
    """
    n, add, mul = A.order, A.add, A.mul
    bad = []
    for x in range(n):
        if add[x][x] != x:
            bad.append(("add-idempotent", (x,)))
    for x in range(n):
        for y in range(n):
            if A.leq(x, y) and A.leq(y, x) and x != y:
                bad.append(("order-antisymmetric", (x, y)))
            for z in range(n):
                if A.leq(x, y) and A.leq(y, z) and not A.leq(x, z):
                    bad.append(("order-transitive", (x, y, z)))
            p = mul[x][y]
            if not (A.leq(p, x) and A.leq(p, y)):
                bad.append(("product-lower-bound", (x, y)))
    return tuple(bad)


def leq(A: PoSemiringTable, x: int, y: int) -> bool:
    return A.leq(x, y)


# ---------------------------------------------------------------------------
# Element analysis


@dataclass(frozen=True)
class ElementAnalysis:
    zero_divisors: frozenset[int]
    nilpotency: dict[int, int] = field(hash=False)
    idempotents: frozenset[int]
    primitive_idempotents: frozenset[int]
    primes: frozenset[int]
    maximals: frozenset[int]
    minimals: frozenset[int]


def nilpotency_index(A: PoSemiringTable, x: int) -> int | None:
    """Least k >= 1 with x^k = 0, or None.  Powers cycle within order steps."""
    if x == 0:
        raise DomainError("nilpotency index of the zero element is undefined")
    p = x
    for k in range(1, A.order + 1):
        if p == 0:
            return k
        p = A.mul[p][x]
    return None


def is_idempotent(A: PoSemiringTable, x: int) -> bool:
    return A.mul[x][x] == x


def is_prime_element(A: PoSemiringTable, p: int) -> bool:
    """p != 1 and xy <= p implies x <= p or y <= p."""
    if p == A.one:
        return False
    for x in A.elements():
        for y in A.elements():
            if A.leq(A.mul[x][y], p) and not (A.leq(x, p) or A.leq(y, p)):
                return False
    return True


def is_minimal_element(A: PoSemiringTable, x: int) -> bool:
    if x == 0:
        return False
    return all(y in (0, x) for y in A.elements() if A.leq(y, x))


def is_maximal_element(A: PoSemiringTable, m: int) -> bool:
    if m == A.one:
        return False
    return all(x in (m, A.one) for x in A.elements() if A.leq(m, x))


def zero_divisors(A: PoSemiringTable) -> frozenset[int]:
    return frozenset(x for x in A.nonzero()
                     if any(A.mul[x][y] == 0 for y in A.nonzero()))


def is_primitive_idempotent(A: PoSemiringTable, e: int) -> bool:
    """Nonzero idempotent not a sum of two orthogonal nontrivial idempotents."""
    if e == 0 or not is_idempotent(A, e):
        return False
    for w in A.nonzero():
        if w == e or not is_idempotent(A, w):
            continue
        for v in A.nonzero():
            if v == e or not is_idempotent(A, v):
                continue
            if A.mul[w][v] == 0 and A.add[w][v] == e:
                return False
    return True


def analyze_elements(A: PoSemiringTable) -> ElementAnalysis:
    nilp = {}
    for x in A.nonzero():
        k = nilpotency_index(A, x)
        if k is not None:
            nilp[x] = k
    idem = frozenset(x for x in A.nonzero() if is_idempotent(A, x))
    return ElementAnalysis(
        zero_divisors=zero_divisors(A),
        nilpotency=nilp,
        idempotents=idem,
        primitive_idempotents=frozenset(e for e in idem
                                        if is_primitive_idempotent(A, e)),
        primes=frozenset(p for p in A.elements() if is_prime_element(A, p)),
        maximals=frozenset(m for m in A.elements() if is_maximal_element(A, m)),
        minimals=frozenset(x for x in A.elements() if is_minimal_element(A, x)),
    )


# ---------------------------------------------------------------------------
# Ideals


@dataclass(frozen=True)
class IdealSubset:
    members: frozenset[int]
    hereditary: bool
    prime: bool
    principal_annihilating: bool
    lower_principal: int | None


def is_ideal(A: PoSemiringTable, members) -> bool:
    members = set(members)
    if 0 not in members:
        return False
    for i in members:
        for j in members:
            if A.add[i][j] not in members:
                return False
        for a in A.elements():
            if A.mul[i][a] not in members:
                return False
    return True


def _annihilator_members(A: PoSemiringTable, u: int) -> frozenset[int]:
    return frozenset(x for x in A.elements() if A.mul[x][u] == 0)


def _lower_members(A: PoSemiringTable, u: int) -> frozenset[int]:
    return frozenset(x for x in A.elements() if A.leq(x, u))


def _flag_ideal(A: PoSemiringTable, members: frozenset[int]) -> IdealSubset:
    hereditary = all(x in members
                     for u in members for x in A.elements() if A.leq(x, u))
    whole = frozenset(A.elements())
    prime = members != whole and all(
        not (A.mul[x][y] in members and x not in members and y not in members)
        for x in A.elements() for y in A.elements())
    princ_ann = any(_annihilator_members(A, u) == members for u in A.elements())
    lower_gen = None
    for u in sorted(members):
        if _lower_members(A, u) == members:
            lower_gen = u
            break
    return IdealSubset(members=members, hereditary=hereditary, prime=prime,
                       principal_annihilating=princ_ann,
                       lower_principal=lower_gen)


def annihilator(A: PoSemiringTable, u: int) -> IdealSubset:
    return _flag_ideal(A, _annihilator_members(A, u))


def lower_ideal(A: PoSemiringTable, u: int) -> IdealSubset:
    return _flag_ideal(A, _lower_members(A, u))


def ideal_closure(A: PoSemiringTable, seed) -> frozenset[int]:
    """Smallest ideal containing the seed set."""
    cur = set(seed) | {0}
    while True:
        new = set()
        for i in cur:
            for j in cur:
                new.add(A.add[i][j])
            for a in A.elements():
                new.add(A.mul[i][a])
        if new <= cur:
            return frozenset(cur)
        cur |= new


def enumerate_ideals(A: PoSemiringTable) -> list[IdealSubset]:
    """All ideals: principal ideals closed under pairwise ideal sum."""
    family = {frozenset({0})}
    for x in A.nonzero():
        family.add(ideal_closure(A, {x}))
    while True:
        fresh = set()
        for i_mem, j_mem in itertools.combinations(family, 2):
            s = ideal_closure(A, i_mem | j_mem)
            if s not in family:
                fresh.add(s)
        if not fresh:
            break
        family |= fresh
    ordered = sorted(family, key=lambda m: (len(m), sorted(m)))
    return [_flag_ideal(A, m) for m in ordered]


# ---------------------------------------------------------------------------
# Idempotent structure and the chain conditions


def orthogonal_complements(A: PoSemiringTable, w: int) -> tuple[int, ...]:
    if w == 0 or not is_idempotent(A, w):
        raise DomainError(f"element {w} is not a nonzero idempotent")
    return tuple(v for v in A.elements()
                 if A.mul[v][v] == v and A.add[w][v] == A.one
                 and A.mul[w][v] == 0)


def orthogonal_complement(A: PoSemiringTable, w: int) -> int | None:
    cs = orthogonal_complements(A, w)
    return cs[0] if cs else None


@dataclass(frozen=True)
class ConditionReport:
    c1: bool
    c2: bool
    c3: bool
    counterexamples: dict[str, int] = field(hash=False)
    witnesses: dict[str, dict[int, tuple[int, int]]] = field(hash=False)


def _dominated_complemented_idempotent(A: PoSemiringTable, u: int):
    """Least (w, v): w nonzero idempotent <= u with orthogonal complement v."""
    for w in A.nonzero():
        if not (is_idempotent(A, w) and A.leq(w, u)):
            continue
        for v in A.elements():
            if (A.mul[v][v] == v and A.add[w][v] == A.one
                    and A.mul[w][v] == 0):
                return (w, v)
    return None


def check_conditions(A: PoSemiringTable) -> ConditionReport:
    cex = {}
    wit = {"c1": {}, "c2": {}, "c3": {}}

    c1 = True
    for u in A.nonzero():
        if nilpotency_index(A, u) is not None:
            continue
        pair = _dominated_complemented_idempotent(A, u)
        if pair is None:
            if c1:
                c1 = False
                cex["c1"] = u
        else:
            wit["c1"][u] = pair

    c2 = True
    for u in A.nonzero():
        if not is_idempotent(A, u):
            continue
        pair = _dominated_complemented_idempotent(A, u)
        if pair is None:
            if c2:
                c2 = False
                cex["c2"] = u
        else:
            wit["c2"][u] = pair

    c3 = True
    for u in A.nonzero():
        if not (is_idempotent(A, u) and is_minimal_element(A, u)):
            continue
        v = orthogonal_complement(A, u)
        if v is None:
            if c3:
                c3 = False
                cex["c3"] = u
        else:
            wit["c3"][u] = (u, v)

    return ConditionReport(c1=c1, c2=c2, c3=c3, counterexamples=cex,
                           witnesses=wit)


def primitive_decomposition(A: PoSemiringTable, e: int) -> tuple[int, ...]:
    """Orthogonal primitive idempotents summing to e, ascending by index."""
    if e == 0 or not is_idempotent(A, e):
        raise DomainError(f"element {e} is not a nonzero idempotent")
    if not check_conditions(A).c2:
        raise NotApplicableError("condition (C2) does not hold")

    def split(x):
        for w in A.nonzero():
            if w == x or not is_idempotent(A, w):
                continue
            for v in A.nonzero():
                if (v != x and is_idempotent(A, v)
                        and A.mul[w][v] == 0 and A.add[w][v] == x):
                    return (w, v)
        return None

    def rec(x):
        pair = split(x)
        if pair is None:
            return [x]
        w, v = pair
        return rec(w) + rec(v)

    return tuple(sorted(rec(e)))


# ---------------------------------------------------------------------------
# Isomorphism


def _invariant_vector(A: PoSemiringTable, ana: ElementAnalysis, x: int):
    return (
        x == 0,
        x == A.one,
        is_idempotent(A, x),
        ana.nilpotency.get(x, 0),
        x in ana.zero_divisors,
        x in ana.primes,
        x in ana.minimals,
        x in ana.maximals,
        len(_lower_members(A, x)),
        len(_annihilator_members(A, x)),
    )


def _transports(A: PoSemiringTable, B: PoSemiringTable, perm) -> bool:
    for x in A.elements():
        for y in A.elements():
            if perm[A.add[x][y]] != B.add[perm[x]][perm[y]]:
                return False
            if perm[A.mul[x][y]] != B.mul[perm[x]][perm[y]]:
                return False
    return True


def find_isomorphism(A: PoSemiringTable, B: PoSemiringTable):
    """A bijection of indices fixing 0 and 1 that transports both tables.

    Backtracking over assignments with invariant-vector pruning; None when
    the instances are not isomorphic.
    """
    if A.order != B.order:
        return None
    n = A.order
    inv_a = [_invariant_vector(A, analyze_elements(A), x) for x in range(n)]
    inv_b = [_invariant_vector(B, analyze_elements(B), x) for x in range(n)]
    if sorted(inv_a) != sorted(inv_b):
        return None

    perm = [None] * n
    perm[0], perm[n - 1] = 0, n - 1
    used = {0, n - 1}
    middle = list(range(1, n - 1))

    def consistent(i):
        for x in range(n):
            if perm[x] is None:
                continue
            for (s, t) in ((i, x), (x, i)):
                for op_a, op_b in ((A.add, B.add), (A.mul, B.mul)):
                    img = op_b[perm[s]][perm[t]]
                    val = op_a[s][t]
                    if perm[val] is not None:
                        if perm[val] != img:
                            return False
                    elif img in used:
                        return False
        return True

    def rec(k):
        if k == len(middle):
            return _transports(A, B, perm)
        i = middle[k]
        for j in range(1, n - 1):
            if j in used or inv_b[j] != inv_a[i]:
                continue
            perm[i] = j
            used.add(j)
            if consistent(i) and rec(k + 1):
                return True
            perm[i] = None
            used.discard(j)
        return False

    if rec(0):
        return tuple(perm)
    return None


# ---------------------------------------------------------------------------
# Text format (psr 1)


def to_text(A: PoSemiringTable) -> str:
    lines = ["psr 1", f"order {A.order}", "names " + " ".join(A.names), "add"]
    lines += [" ".join(str(v) for v in row) for row in A.add]
    lines.append("mul")
    lines += [" ".join(str(v) for v in row) for row in A.mul]
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_psr(text: str) -> PoSemiringTable:
    lines = list(_content_lines(text))
    pos = 0

    def take(what):
        nonlocal pos
        if pos >= len(lines):
            raise StructureError(f"unexpected end of input, expected {what}")
        line = lines[pos]
        pos += 1
        return line

    if take("magic") != "psr 1":
        raise StructureError("missing 'psr 1' header")
    order_line = take("order").split()
    if len(order_line) != 2 or order_line[0] != "order":
        raise StructureError("malformed order line")
    try:
        order = int(order_line[1])
    except ValueError:
        raise StructureError("order is not an integer") from None
    names_line = take("names").split()
    if names_line[:1] != ["names"]:
        raise StructureError("malformed names line")
    names = names_line[1:]

    def table(label):
        if take(label) != label:
            raise StructureError(f"expected '{label}' section")
        rows = []
        for _ in range(order):
            try:
                rows.append([int(v) for v in take(f"{label} row").split()])
            except ValueError:
                raise StructureError(f"non-integer entry in {label} table") from None
        return rows

    add = table("add")
    mul = table("mul")
    if pos != len(lines):
        raise StructureError(f"trailing garbage: {lines[pos]!r}")
    return make_table(order, names, add, mul)
