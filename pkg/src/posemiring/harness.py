"""Executable catalog of the structure theorems, run over instance corpora.

Every check returns pass, fail (with a replayable witness), or
not-applicable when its hypotheses do not hold.  Chain conditions and
"no infinite orthogonal idempotent set" hypotheses are automatic on finite
instances; such checks carry the note "finite-case".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from . import constructions as cons
from . import ringlab
from .core import (
    ClosureError,
    PoSemiringTable,
    StructureError,
    analyze_elements,
    check_conditions,
    enumerate_ideals,
    find_isomorphism,
    is_idempotent,
    lower_ideal,
    orthogonal_complement,
    primitive_decomposition,
    verify_axioms,
)
from .graphs import INF, classify_shape, graph_metrics


def _pass():
    return CheckResult("pass")


def _fail(witness):
    return CheckResult("fail", witness=witness)


def _na(note):
    return CheckResult("not-applicable", note=note)


@dataclass(frozen=True)
class CheckResult:
    status: str
    witness: object = None
    note: str = ""


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    scope: str              # posemiring | product-pair | ring
    description: str
    fn: object
    note: str = ""


class Ctx:
    """Per-instance cache shared by the checks."""

    def __init__(self, A: PoSemiringTable):
        self.A = A

    @cached_property
    def ana(self):
        return analyze_elements(self.A)

    @cached_property
    def cond(self):
        return check_conditions(self.A)

    @cached_property
    def graph(self):
        return cons.posemiring_zdgraph(self.A)

    @cached_property
    def metrics(self):
        return graph_metrics(self.graph)

    @cached_property
    def shape(self):
        return classify_shape(self.graph)

    @property
    def zset(self):
        return self.ana.zero_divisors

    @cached_property
    def acyclic(self):
        return self.metrics.girth is None


class RingCtx:
    def __init__(self, R: ringlab.FiniteRing):
        self.R = R

    @cached_property
    def ideals(self):
        return ringlab.enumerate_ring_ideals(self.R)

    @cached_property
    def semiring(self):
        table, ideals = ringlab.ideal_semiring(self.R)
        return table

    @cached_property
    def ctx(self):
        return Ctx(self.semiring)

    @cached_property
    def rad(self):
        return ringlab.radicals(self.R)

    @cached_property
    def maximal_ideals(self):
        return ringlab.maximal_ideals(self.R)


# ---------------------------------------------------------------------------
# po-semiring checks


def chk_p21a(ctx):
    bad = sorted(ctx.ana.maximals - ctx.ana.primes)
    return _fail(bad[0]) if bad else _pass()


def chk_p21b(ctx):
    A = ctx.A
    for m in sorted(ctx.ana.maximals):
        for b in A.elements():
            if A.mul[m][b] == 0:
                if A.mul[m][m] != m and A.mul[b][b] != 0:
                    return _fail((m, b))
    return _pass()


def chk_p21c(ctx):
    A = ctx.A
    pairs = [(e, f) for e in A.elements() for f in A.elements()
             if A.mul[e][e] == e and A.mul[f][f] == f
             and A.add[e][f] == A.one and A.mul[e][f] == 0]
    for e1, f1 in pairs:
        for e2, f2 in pairs:
            if A.lt(e2, e1) and not A.lt(f1, f2):
                return _fail((e1, f1, e2, f2))
    return _pass()


def _chain_hypotheses(ctx):
    return ctx.cond.c1 or ctx.cond.c2


def chk_t22(ctx):
    if not _chain_hypotheses(ctx):
        return _na("neither (C1) nor (C2) holds")
    expected = frozenset(x for x in ctx.A.nonzero() if x != ctx.A.one)
    if ctx.zset != expected:
        return _fail(sorted(expected ^ ctx.zset))
    return _pass()


def chk_t22_tail(ctx):
    if not _chain_hypotheses(ctx):
        return _na("neither (C1) nor (C2) holds")
    A = ctx.A
    complemented = [e for e in A.nonzero()
                    if e != A.one and is_idempotent(A, e)
                    and orthogonal_complement(A, e) is not None]
    for c in A.nonzero():
        if c == A.one or c in ctx.ana.nilpotency:
            continue
        found = False
        for k in range(1, A.order + 1):
            p = A.power(c, k)
            if any(A.mul[p][e] == p for e in complemented):
                found = True
                break
        if not found:
            return _fail(c)
    return _pass()


def chk_t23(ctx):
    if not ctx.cond.c2:
        return _na("condition (C2) does not hold")
    A = ctx.A
    for e in sorted(ctx.ana.idempotents):
        if orthogonal_complement(A, e) is None:
            return _fail(("no-complement", e))
        if e != A.one and e not in ctx.zset:
            return _fail(("not-zero-divisor", e))
        parts = primitive_decomposition(A, e)
        total = 0
        for p in parts:
            if p not in ctx.ana.primitive_idempotents:
                return _fail(("not-primitive", e, p))
            total = A.add[total][p]
        if total != e:
            return _fail(("bad-sum", e, parts))
        for i, p in enumerate(parts):
            for q in parts[i + 1:]:
                if A.mul[p][q] != 0:
                    return _fail(("not-orthogonal", e, p, q))
    return _pass()


def chk_t27(ctx):
    if not ctx.cond.c2:
        return _na("condition (C2) does not hold")
    bad = sorted(ctx.ana.primes - ctx.ana.maximals)
    return _fail(bad[0]) if bad else _pass()


def chk_t29(ctx):
    if not ctx.cond.c2:
        return _na("condition (C2) does not hold")
    expected = frozenset(x for x in ctx.A.nonzero() if x != ctx.A.one)
    if ctx.zset != expected:
        return _fail(("Z", sorted(expected ^ ctx.zset)))
    if ctx.ana.primes != ctx.ana.maximals:
        return _fail(("primes!=maximals",
                      sorted(ctx.ana.primes ^ ctx.ana.maximals)))
    return _pass()


def chk_p213(ctx):
    A = ctx.A
    for u in A.elements():
        lu = lower_ideal(A, u).members
        for v in A.elements():
            if A.leq(u, v) != (lu <= lower_ideal(A, v).members):
                return _fail((u, v))
    return _pass()


def chk_p216(ctx):
    A = ctx.A
    for p in A.elements():
        if (p in ctx.ana.primes) != lower_ideal(A, p).prime:
            return _fail(p)
    return _pass()


def chk_t31(ctx):
    if not _chain_hypotheses(ctx):
        return _na("neither (C1) nor (C2) holds")
    if not ctx.zset:
        return _na("instance is integral")
    if ctx.graph.n != ctx.A.order - 2:
        return _fail((ctx.graph.n, ctx.A.order - 2))
    return _pass()


def chk_l34a(ctx):
    if not ctx.zset:
        return _na("Z(A) is empty")
    G = ctx.graph
    for u in range(G.n):
        nb = G.neighbors(u)
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if G.adjacency[a][b]:
                    continue        # path sits in a triangle
                if any(G.adjacency[a][w] and G.adjacency[w][b]
                       for w in range(G.n) if w not in (a, u, b)):
                    continue        # path sits in a quadrilateral
                if G.vertices[u] not in ctx.ana.minimals:
                    return _fail((G.vertices[a], G.vertices[u], G.vertices[b]))
    return _pass()


def chk_l34b(ctx):
    if not ctx.zset:
        return _na("Z(A) is empty")
    bad = sorted(ctx.ana.minimals - ctx.zset)
    if bad:
        return _fail(("minimal-not-zd", bad[0]))
    if ctx.metrics.clique_number < len(ctx.ana.minimals):
        return _fail(("clique", ctx.metrics.clique_number,
                      len(ctx.ana.minimals)))
    return _pass()


def _maximal_cliques(G):
    cliques = []

    def bron(r, p, x):
        if not p and not x:
            cliques.append(r)
            return
        for v in list(p):
            nb = set(G.neighbors(v))
            bron(r | {v}, p & nb, x & nb)
            p = p - {v}
            x = x | {v}

    bron(set(), set(range(G.n)), set())
    return cliques


def chk_l34c(ctx):
    if not ctx.zset:
        return _na("Z(A) is empty")
    G = ctx.graph
    pos = {v: i for i, v in enumerate(G.vertices)}
    cliques = _maximal_cliques(G)
    for u in sorted(ctx.ana.minimals):
        if u not in pos:
            return _fail(("not-a-vertex", u))
        i = pos[u]
        if ctx.metrics.eccentricity[i] > 2:
            return _fail(("eccentricity", u))
        nb = set(G.neighbors(i))
        for K in cliques:
            if len(K - nb) > 1:
                return _fail(("clique-coverage", u,
                              sorted(G.vertices[w] for w in K)))
    return _pass()


_ACYCLIC_SHAPES = {"single-vertex", "star", "two-star", "complete"}


def chk_t35a(ctx):
    if not ctx.cond.c3:
        return _na("condition (C3) does not hold")
    if not ctx.acyclic or ctx.graph.n == 0:
        return _na("graph is empty or has a cycle")
    s = ctx.shape
    if s.tag == "complete" and s.params[0] == 2:
        return _pass()                          # K2 is the star K_{1,1}
    if s.tag == "star" or s.tag == "single-vertex":
        return _pass()
    if s.tag == "two-star" and s.params[0] == 1:
        return _pass()
    return _fail(s.line())


def chk_t35b(ctx):
    if not ctx.cond.c3:
        return _na("condition (C3) does not hold")
    if ctx.shape.tag != "two-star" or ctx.shape.params[0] != 1:
        return _na("graph is not K1+K1+K1+D_r")
    split = cons.split_two_star(ctx.A)
    if split is None:
        return _fail("no {0,1} x S splitting found")
    if len(analyze_elements(split.s).zero_divisors) != 1:
        return _fail(("|Z(S)| != 1", split.s.order))
    if split.r != ctx.shape.params[1]:
        return _fail(("r mismatch", split.r, ctx.shape.params[1]))
    return _pass()


def chk_c38(ctx):
    if not ctx.cond.c1:
        return _na("condition (C1) does not hold")
    if ctx.acyclic and ctx.graph.n >= 1:
        s = ctx.shape
        ok = (s.tag in ("star", "single-vertex")
              or (s.tag == "complete" and s.params[0] == 2)
              or (s.tag == "two-star" and s.params == (1, 1)))
        if not ok:
            return _fail(s.line())
    nil3 = cons.adjoin_z1(cons.trivial())
    is_k4 = ctx.shape.tag == "two-star" and ctx.shape.params == (1, 1)
    iso = find_isomorphism(ctx.A, cons.direct_product(cons.trivial(), nil3))
    if is_k4 != (iso is not None):
        return _fail(("two-star-iff", is_k4, iso is not None))
    return _pass()


def chk_l41a(ctx):
    if len(ctx.zset) != 1:
        return _na("|Z(A)| != 1")
    A = ctx.A
    (c,) = ctx.zset
    if A.mul[c][c] != 0:
        return _fail(("c^2", c))
    if any(not A.lt(c, x) for x in A.nonzero() if x != c):
        return _fail(("not-least", c))
    if c not in ctx.ana.primes:
        return _fail(("not-prime", c))
    return _pass()


def chk_l41b(ctx):
    if len(ctx.zset) != 2:
        return _na("|Z(A)| != 2")
    A = ctx.A
    c, u = sorted(ctx.zset)
    rest = [x for x in A.nonzero() if x not in (c, u)]
    incomparable = not (A.leq(c, u) or A.leq(u, c))
    if incomparable:
        ok = (A.mul[c][c] == c and A.mul[u][u] == u
              and {c, u} <= ctx.ana.minimals
              and {c, u} <= ctx.ana.primes
              and all(A.lt(c, x) and A.lt(u, x) for x in rest))
        return _pass() if ok else _fail(("case-2.1", c, u))
    if A.leq(u, c):
        c, u = u, c
    ok = (A.mul[c][c] == 0
          and all(A.lt(c, x) for x in A.nonzero() if x != c)
          and u in ctx.ana.primes
          and all(A.lt(u, p) for p in ctx.ana.primes if p not in (c, u)))
    return _pass() if ok else _fail(("case-2.2", c, u))


def _z_square_zero(ctx):
    A = ctx.A
    return all(A.mul[x][y] == 0 for x in ctx.zset for y in ctx.zset)


def chk_t42(ctx):
    nz = len(ctx.zset)
    if nz not in (1, 2) or (nz == 2 and _z_square_zero(ctx)):
        return _na("|Z(A)| not in {1, 2} with Z(A)^2 != 0")
    try:
        dec = cons.recognize_small_z(ctx.A)
    except (ClosureError, StructureError) as exc:
        return _fail(str(exc))
    if analyze_elements(dec.a1).zero_divisors:
        return _fail("recovered base is not integral")
    return _pass()


def chk_c43(ctx):
    if not (ctx.cond.c3 and len(ctx.zset) == 2 and not _z_square_zero(ctx)):
        return _na("(C3), |Z(A)| = 2, Z(A)^2 != 0 required")
    boolean_square = cons.direct_product(cons.trivial(), cons.trivial())
    is_square = find_isomorphism(ctx.A, boolean_square) is not None
    try:
        dec = cons.recognize_small_z(ctx.A)
    except (ClosureError, StructureError) as exc:
        return _fail(str(exc))
    if not (is_square or isinstance(dec, cons.Z2ChainDecomposition)):
        return _fail("neither {0,1}^2 nor the chain construction")
    if not ctx.ana.nilpotency and not is_square:
        return _fail("nilpotent-free but not {0,1}^2")
    return _pass()


def chk_p45(ctx):
    if not (len(ctx.zset) == 2 and _z_square_zero(ctx)):
        return _na("|Z(A)| = 2 with Z(A)^2 = 0 required")
    try:
        rep = cons.recognize_small_z(ctx.A)
    except ClosureError as exc:
        return _fail(("closure", exc.witness))
    if not isinstance(rep, cons.Prop45Report):
        return _fail("expected a condition report")
    if analyze_elements(rep.a1).zero_divisors:
        return _fail("complement of Z(A) is not integral")
    bad = sorted(k for k, v in rep.conditions.items() if not v)
    return _fail(("conditions", bad)) if bad else _pass()


def chk_p48(ctx):
    if not ctx.cond.c3:
        return _na("condition (C3) does not hold")
    try:
        peel = cons.peel_boolean(ctx.A)
    except StructureError as exc:
        return _fail(str(exc))
    a1 = peel.a1
    leftover = [x for x in a1.nonzero()
                if is_idempotent(a1, x)
                and x in analyze_elements(a1).minimals]
    if leftover and a1.order > 2:
        return _fail(("residual idempotent minimal", leftover[0]))
    return _pass()


# ---------------------------------------------------------------------------
# product-pair checks


def chk_l33a(ctx1, ctx2, ctx_prod):
    lhs = ctx_prod.metrics.triangle_free
    rhs = any(not a.zset and len(b.zset) <= 1
              for a, b in ((ctx1, ctx2), (ctx2, ctx1)))
    return _pass() if lhs == rhs else _fail(("triangle", lhs, rhs))


def chk_l33b(ctx1, ctx2, ctx_prod):
    lhs = ctx_prod.acyclic
    rhs = any(a.A.order == 2 and len(b.zset) <= 1
              for a, b in ((ctx1, ctx2), (ctx2, ctx1)))
    return _pass() if lhs == rhs else _fail(("cycle", lhs, rhs))


def chk_l33c(ctx1, ctx2, ctx_prod):
    lhs = ctx_prod.metrics.quadrilateral_free

    def side(a, b):
        if a.A.order != 2:
            return False
        if len(b.zset) <= 1:
            return True
        return len(b.zset) == 2 and not b.ana.nilpotency

    rhs = side(ctx1, ctx2) or side(ctx2, ctx1)
    return _pass() if lhs == rhs else _fail(("quadrilateral", lhs, rhs))


def chk_t35b_conv(ctx1, ctx2, ctx_prod):
    match = any(a.A.order == 2 and len(b.zset) == 1
                for a, b in ((ctx1, ctx2), (ctx2, ctx1)))
    if not match:
        return _na("factors are not {0,1} x (|Z| = 1)")
    s_ctx = ctx2 if ctx1.A.order == 2 and len(ctx2.zset) == 1 else ctx1
    shape = ctx_prod.shape
    if shape.tag != "two-star" or shape.params != (1, s_ctx.A.order - 2):
        return _fail(shape.line())
    return _pass()


# ---------------------------------------------------------------------------
# ring checks


def chk_r12(rctx):
    cond = rctx.ctx.cond
    if not cond.c3:
        return _fail("I(R) fails (C3)")
    if not cond.c2:
        return _fail("I(R) fails (C2)")
    if not cond.c1:
        return _fail("I(R) fails (C1)")
    if rctx.rad.jacobson.members != rctx.rad.nilradical.members:
        return _fail(("J != N", sorted(rctx.rad.jacobson.members),
                      sorted(rctx.rad.nilradical.members)))
    return _pass()


def chk_c25(rctx):
    ctx = rctx.ctx
    A = ctx.A
    for e in sorted(ctx.ana.idempotents):
        if e != A.one and e not in ctx.zset:
            return _fail(("idempotent-not-annihilating", e))
        parts = primitive_decomposition(A, e)
        total = 0
        for p in parts:
            if p not in ctx.ana.primitive_idempotents:
                return _fail(("not-primitive", e, p))
            total = A.add[total][p]
        if total != e:
            return _fail(("bad-sum", e))
    return _pass()


def chk_c28(rctx):
    ctx = rctx.ctx
    if ctx.ana.primes != ctx.ana.maximals:
        return _fail(sorted(ctx.ana.primes ^ ctx.ana.maximals))
    return _pass()


def chk_c44(rctx):
    R = rctx.R
    shape = rctx.ctx.shape
    ag_is_k2 = shape.tag == "complete" and shape.params == (2,)
    two_fields = (len(rctx.maximal_ideals) == 2
                  and rctx.rad.nilradical.members == frozenset({0}))
    local = len(rctx.maximal_ideals) == 1
    nontrivial = len(rctx.ideals) - 2
    cond1 = two_fields or (local and nontrivial == 2)
    jac = rctx.rad.jacobson.members
    alpha_ok = any(
        ringlab.principal_ideal(R, a) == jac
        and _ring_power(R, a, 3) == 0 and _ring_power(R, a, 2) != 0
        for a in jac)
    cond3 = two_fields or (local and alpha_ok)
    if not (ag_is_k2 == cond1 == cond3):
        return _fail({"AG=K2": ag_is_k2, "fields-or-2-ideals": cond1,
                      "J=Ra,a^3=0!=a^2": cond3})
    return _pass()


def _ring_power(R, a, k):
    p = R.one
    for _ in range(k):
        p = R.mul[p][a]
    return p


# ---------------------------------------------------------------------------
# Catalog


def _checks():
    P, Q, S = "posemiring", "product-pair", "ring"
    fin = "finite-case"
    return [
        TheoremCheck("P2.1a", P, "maximal elements are prime", chk_p21a),
        TheoremCheck("P2.1b", P, "mb=0 forces m^2=m or b^2=0", chk_p21b),
        TheoremCheck("P2.1c", P, "complement pairs reverse order", chk_p21c),
        TheoremCheck("T2.2", P, "Z(A) = A minus {0,1}", chk_t22, fin),
        TheoremCheck("T2.2t", P, "c^n = c^n e for some complemented e",
                     chk_t22_tail, fin),
        TheoremCheck("T2.3", P, "idempotents complement and decompose",
                     chk_t23, fin),
        TheoremCheck("T2.7", P, "prime elements are maximal", chk_t27, fin),
        TheoremCheck("T2.9", P, "primes = maximals under (C2)", chk_t29, fin),
        TheoremCheck("P2.13", P, "u -> <u> is an order embedding",
                     chk_p213, fin),
        TheoremCheck("P2.16", P, "p prime iff <p> prime ideal", chk_p216),
        TheoremCheck("T3.1", P, "|V| = |A| - 2 when not integral",
                     chk_t31, fin),
        TheoremCheck("L3.3a", Q, "triangle-free product criterion", chk_l33a),
        TheoremCheck("L3.3b", Q, "cycle-free product criterion", chk_l33b),
        TheoremCheck("L3.3c", Q, "quadrilateral-free product criterion",
                     chk_l33c),
        TheoremCheck("L3.4a", P, "triangle/quad-free midpoints are minimal",
                     chk_l34a),
        TheoremCheck("L3.4b", P, "minimal elements are zero divisors",
                     chk_l34b),
        TheoremCheck("L3.4c", P, "minimal eccentricity and clique coverage",
                     chk_l34c),
        TheoremCheck("T3.5a", P, "acyclic graphs are stars or two-stars",
                     chk_t35a),
        TheoremCheck("T3.5b", P, "K1+K1+K1+D_r splits off {0,1}", chk_t35b),
        TheoremCheck("T3.5b-conv", Q, "{0,1} x (|Z|=1) gives K1+K1+K1+D_r",
                     chk_t35b_conv),
        TheoremCheck("C3.8", P, "star or K1+K1+K1+K1 under (C1)",
                     chk_c38, fin),
        TheoremCheck("L4.1a", P, "|Z| = 1 structure", chk_l41a),
        TheoremCheck("L4.1b", P, "|Z| = 2 dichotomy", chk_l41b),
        TheoremCheck("T4.2", P, "small-Z reconstruction round trip", chk_t42),
        TheoremCheck("C4.3", P, "(C3), |Z|=2, Z^2 != 0 classification",
                     chk_c43),
        TheoremCheck("P4.5", P, "Z^2 = 0 necessity conditions", chk_p45),
        TheoremCheck("P4.8", P, "boolean peeling round trip", chk_p48, fin),
        TheoremCheck("Prop1.2", S, "I(R) satisfies (C1)-(C3), J = N",
                     chk_r12, fin),
        TheoremCheck("C2.5", S, "idempotent ideals decompose", chk_c25, fin),
        TheoremCheck("C2.8", S, "prime ideals are maximal", chk_c28, fin),
        TheoremCheck("C4.4", S, "AG(R) = K2 three-way equivalence", chk_c44),
    ]


CATALOG = _checks()
CHECK_IDS = tuple(c.id for c in CATALOG)


# ---------------------------------------------------------------------------
# Corpus and the runner


@dataclass
class Corpus:
    posemirings: list = field(default_factory=list)   # (id, table)
    pairs: list = field(default_factory=list)          # (id, A, B)
    rings: list = field(default_factory=list)          # (id, ring)


@dataclass
class TheoremReport:
    results: list          # (check_id, instance_id, CheckResult)

    @property
    def counts(self):
        out = {"pass": 0, "fail": 0, "not-applicable": 0}
        for _, _, res in self.results:
            out[res.status] += 1
        return out

    @property
    def failures(self):
        return [(cid, iid, res) for cid, iid, res in self.results
                if res.status == "fail"]

    def to_json(self) -> str:
        rows = [{"check": cid, "instance": iid, "result": res.status,
                 **({"witness": repr(res.witness)}
                    if res.witness is not None else {}),
                 **({"note": res.note} if res.note else {})}
                for cid, iid, res in self.results]
        return json.dumps({"results": rows, "counts": self.counts},
                          sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        for cid, iid, res in self.results:
            mark = {"pass": "ok", "fail": "FAIL", "not-applicable": "n/a"}
            extra = f" witness={res.witness!r}" if res.status == "fail" else ""
            lines.append(f"{mark[res.status]:>4}  {cid:<12} {iid}{extra}")
        c = self.counts
        lines.append(f"pass={c['pass']} fail={c['fail']} "
                     f"na={c['not-applicable']}")
        return "\n".join(lines)


def run_catalog(corpus: Corpus, check_ids=None) -> TheoremReport:
    selected = [c for c in CATALOG
                if check_ids is None or c.id in set(check_ids)]
    if check_ids is not None:
        unknown = set(check_ids) - {c.id for c in CATALOG}
        if unknown:
            raise StructureError(f"unknown check ids {sorted(unknown)}")

    for iid, A in corpus.posemirings:
        rep = verify_axioms(A)
        if not rep.valid:
            raise StructureError(
                f"corpus instance {iid} is invalid: {rep.violations[0]}")

    ctxs = [(iid, Ctx(A)) for iid, A in corpus.posemirings]
    pair_ctxs = [(iid, Ctx(a), Ctx(b), Ctx(cons.direct_product(a, b)))
                 for iid, a, b in corpus.pairs]
    ring_ctxs = [(iid, RingCtx(R)) for iid, R in corpus.rings]

    results = []
    for check in selected:
        if check.scope == "posemiring":
            for iid, ctx in ctxs:
                results.append((check.id, iid, _run(check, ctx)))
        elif check.scope == "product-pair":
            for iid, c1, c2, cp in pair_ctxs:
                results.append((check.id, iid, _run(check, c1, c2, cp)))
        else:
            for iid, rctx in ring_ctxs:
                results.append((check.id, iid, _run(check, rctx)))
    results.sort(key=lambda row: (row[0], row[1]))
    return TheoremReport(results=results)


def _run(check, *args):
    res = check.fn(*args)
    if check.note and res.status == "pass":
        return CheckResult("pass", note=check.note)
    return res


# ---------------------------------------------------------------------------
# Default corpora


def census_corpus(max_n: int) -> Corpus:
    from .census import enumerate_posemirings

    corpus = Corpus()
    for n in range(2, max_n + 1):
        result = enumerate_posemirings(n, mode="fast")
        for i, A in enumerate(result.instances):
            corpus.posemirings.append((f"census{n}-{i}", A))
    return corpus


def construction_grid(max_k: int = 3) -> Corpus:
    corpus = Corpus()

    def put(name, A):
        corpus.posemirings.append((name, A))

    put("trivial", cons.trivial())
    for k in range(1, max_k + 1):
        put(f"chain-k{k}", cons.chain_lattice(k))
        put(f"ex2.6-k{k}", cons.example_2_6(k))
        put(f"ex3.2-k{k}", cons.example_3_2(k))
        for u2 in ("zero", "c", "u"):
            put(f"ex4.6-k{k}-{u2}", cons.example_4_6(k, u2))
    for k in range(2, max_k + 1):
        for pos in range(2, k + 1):
            put(f"ex4.7-k{k}-n{pos}", cons.example_4_7(k, pos))
    for n in range(1, 4):
        put(f"bool-{n}", cons.boolean_power(n))
    for k in range(1, max_k + 1):
        put(f"adjz1-chain{k}", cons.adjoin_z1(cons.chain_lattice(k)))
        put(f"adjz2i-chain{k}",
            cons.adjoin_z2_incomparable(cons.chain_lattice(k)))
        for u2 in ("c", "u"):
            put(f"adjz2c-chain{k}-{u2}",
                cons.adjoin_z2_chain(cons.chain_lattice(k), u2))
    return corpus


def census_pairs(max_n: int = 3) -> list:
    from .census import enumerate_posemirings

    bases = []
    for n in range(2, max_n + 1):
        result = enumerate_posemirings(n, mode="fast")
        for i, A in enumerate(result.instances):
            bases.append((f"census{n}-{i}", A))
    pairs = []
    for i, (ida, A) in enumerate(bases):
        for idb, B in bases[i:]:
            pairs.append((f"{ida}*{idb}", A, B))
    return pairs


def default_ring_corpus(max_zn: int = 64) -> list:
    rings = []
    for n in range(2, max_zn + 1):
        rings.append((f"zn:{n}", ringlab.ring_zn(n)))
    for p in (2, 3, 5):
        for c1 in range(p):
            for c0 in range(p):
                rings.append((f"zpx:{p}:{c1}:{c0}",
                              ringlab.ring_quadratic(p, c1, c0)))
    small = [(f"zn:{n}", ringlab.ring_zn(n)) for n in range(2, 9)]
    small += [(f"zpx:2:{c1}:{c0}", ringlab.ring_quadratic(2, c1, c0))
              for c1 in range(2) for c0 in range(2)]
    for i, (ida, A) in enumerate(small):
        for idb, B in small[i:]:
            rings.append((f"prod({ida},{idb})", ringlab.ring_product(A, B)))
    return rings


def full_corpus(census_max_n: int = 5, pair_max_n: int = 3,
                with_rings: bool = False) -> Corpus:
    corpus = census_corpus(census_max_n)
    grid = construction_grid()
    corpus.posemirings.extend(grid.posemirings)
    corpus.pairs.extend(census_pairs(pair_max_n))
    if with_rings:
        corpus.rings.extend(default_ring_corpus())
    return corpus
