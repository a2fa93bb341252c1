"""Body-and-spine hypergraphs, set-valued lifted colourings, piercing
numbers, sunflowers, a constructive monochromatic-copy finder, and the
two-part host colouring showing that bounded degeneracy does not bound
3-uniform Ramsey numbers linearly.

Hypergraph files: header ``r |V| |E|``, then one edge (r vertex labels)
per line.  Embedding witnesses serialize as JSON
``{"body": [...], "edges": [{"subset": [...], "private": [...],
"colour": "..."}]}``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    FileFormatError,
    ParameterError,
    PreconditionError,
    IncompleteSearchError,
)
from .stepup import Colouring, colour_str
from . import rainbow as _rainbow

__all__ = [
    "Hypergraph",
    "Hedgehog",
    "build_hedgehog",
    "degeneracy",
    "peel_trace",
    "peel_incidences",
    "PiercingResult",
    "piercing_number",
    "extract_sunflower",
    "LiftedColouring",
    "lift_colouring",
    "SpreadReport",
    "verify_hedgehog_spread",
    "HedgehogEmbedding",
    "find_mono_hedgehog",
    "BurrErdosHost",
    "burr_erdos_pair",
    "parse_hypergraph",
    "format_hypergraph",
]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on explicit integer vertices."""

    r: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ParameterError("duplicate vertices")
        seen = set()
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise ParameterError(f"edge {e} is not an {self.r}-set")
            if tuple(sorted(e)) != e:
                raise ParameterError(f"edge {e} is not sorted")
            if not set(e) <= vs:
                raise ParameterError(f"edge {e} uses unknown vertices")
            if e in seen:
                raise ParameterError(f"duplicate edge {e}")
            seen.add(e)

    def incident(self, v: int) -> list[tuple[int, ...]]:
        return [e for e in self.edges if v in e]


@dataclass(frozen=True)
class Hedgehog:
    """Body of t vertices plus one k-edge per s-subset of the body.

    Each spine edge owns k-s private vertices that appear in no other
    edge, so distinct edges intersect inside the body only.
    """

    t: int
    k: int
    s: int
    body: tuple[int, ...]
    spine: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # (subset, privates)

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(sub + priv)) for sub, priv in self.spine)

    @property
    def vertices(self) -> tuple[int, ...]:
        out = list(self.body)
        for _, priv in self.spine:
            out.extend(priv)
        return tuple(out)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.k, tuple(sorted(self.vertices)), tuple(sorted(self.edges)))


def build_hedgehog(t: int, k: int, s: int) -> Hedgehog:
    """Construct the body-and-spine hypergraph with parameters (t, k, s).

    The result has C(t, s) edges and t + (k-s)*C(t, s) vertices; the
    balanced variant takes s = ceil(k/2).
    """
    if not (k > s >= 1):
        raise ParameterError(f"need k > s >= 1, got k={k}, s={s}")
    if t < s:
        raise ParameterError(f"need t >= s, got t={t}, s={s}")
    body = tuple(range(1, t + 1))
    spine = []
    nxt = t + 1
    for sub in itertools.combinations(body, s):
        priv = tuple(range(nxt, nxt + (k - s)))
        nxt += k - s
        spine.append((sub, priv))
    return Hedgehog(t=t, k=k, s=s, body=body, spine=tuple(spine))


# ---------------------------------------------------------------------------
# Degeneracy by peeling
# ---------------------------------------------------------------------------

def peel_trace(h: Hypergraph) -> list[tuple[int, int]]:
    """Remove a minimum-incidence vertex (smallest label on ties) until no
    vertices remain; return the (vertex, incidence-at-removal) trace.

    The maximum incidence along the trace is the degeneracy.
    """
    alive_edges = set(h.edges)
    deg = {v: 0 for v in h.vertices}
    for e in h.edges:
        for v in e:
            deg[v] += 1
    alive = set(h.vertices)
    trace = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        trace.append((v, deg[v]))
        alive.remove(v)
        dead = [e for e in alive_edges if v in e]
        for e in dead:
            alive_edges.remove(e)
            for u in e:
                if u in alive:
                    deg[u] -= 1
    return trace


def degeneracy(h: Hypergraph) -> int:
    """Least d such that every induced subhypergraph has a vertex in at
    most d edges; computed exactly by min-incidence peeling."""
    trace = peel_trace(h)
    return max((d for _, d in trace), default=0)


def peel_incidences(h: Hypergraph, order) -> list[tuple[int, int]]:
    """Incidence of each vertex at its removal time under a given order."""
    order = list(order)
    if sorted(order) != sorted(h.vertices):
        raise ParameterError("order must list every vertex exactly once")
    alive_edges = set(h.edges)
    out = []
    for v in order:
        inc = [e for e in alive_edges if v in e]
        out.append((v, len(inc)))
        for e in inc:
            alive_edges.remove(e)
    return out


# ---------------------------------------------------------------------------
# Piercing numbers and sunflowers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiercingResult:
    lower: int
    upper: int
    witness: tuple[int, ...]
    exact: bool

    @property
    def value(self) -> int:
        if not self.exact:
            raise BudgetExceededError(
                "piercing number only bounded, not exact",
                partial=(self.lower, self.upper),
            )
        return self.lower


def piercing_number(
    h: Hypergraph,
    a,
    colouring: Colouring | None = None,
    colour=None,
    budget: int = DEFAULT_BUDGET,
) -> PiercingResult:
    """Exact minimum hitting set over the edges of ``h`` containing ``a``.

    ``a`` is a vertex set with fewer than r elements; optionally only
    edges of one colour (under ``colouring``) are considered.  Vertices of
    ``a`` itself are not allowed to pierce.  Branch-and-bound is exact
    within the budget; if the budget runs out the result carries certified
    bounds with ``exact=False`` instead of raising.
    """
    a = frozenset([a] if isinstance(a, int) else a)
    if len(a) >= h.r:
        raise ParameterError(f"|A| = {len(a)} must be below the uniformity {h.r}")
    rests = []
    for e in h.edges:
        if a <= set(e):
            if colour is not None and colouring.colour(e) != colour:
                continue
            rests.append(frozenset(e) - a)
    return _min_hitting_set(rests, budget)


def _min_hitting_set(sets, budget: int) -> PiercingResult:
    sets = [frozenset(s) for s in sets]
    if not sets:
        return PiercingResult(0, 0, (), True)
    # greedy upper bound: repeatedly hit the most common vertex
    remaining = list(sets)
    greedy: list[int] = []
    while remaining:
        counts: dict[int, int] = {}
        for s in remaining:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        v = min(counts, key=lambda u: (-counts[u], u))
        greedy.append(v)
        remaining = [s for s in remaining if v not in s]
    best = sorted(greedy)
    best_size = len(best)
    nodes = 0
    exhausted = False

    def dfs(uncovered, chosen):
        nonlocal best, best_size, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        if not uncovered:
            if len(chosen) < best_size or (
                len(chosen) == best_size and sorted(chosen) < best
            ):
                best = sorted(chosen)
                best_size = len(chosen)
            return
        if len(chosen) + 1 > best_size:
            return
        # branch on the smallest uncovered set
        pivot = min(uncovered, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pivot):
            dfs([s for s in uncovered if v not in s], chosen + [v])

    dfs(sets, [])
    if exhausted:
        # lower bound: a maximal collection of pairwise disjoint sets
        lower = 0
        used: set[int] = set()
        for s in sorted(sets, key=len):
            if not (s & used):
                lower += 1
                used |= s
        return PiercingResult(lower, best_size, tuple(best), False)
    return PiercingResult(best_size, best_size, tuple(best), True)


def extract_sunflower(h: Hypergraph, v: int, m: int, budget: int = DEFAULT_BUDGET):
    """``m`` edges through ``v`` whose pairwise intersections are exactly {v}.

    Greedy selection over the edges at ``v`` in sorted order; guaranteed to
    succeed whenever the piercing number of ``v`` is at least (r-1)*m,
    which is checked first (the failing value is reported otherwise).
    """
    if m < 1:
        raise ParameterError("m must be positive")
    tau = piercing_number(h, v, budget=budget)
    if tau.value < (h.r - 1) * m:
        raise PreconditionError(
            f"piercing number of {v} is {tau.value}, below (r-1)*m = "
            f"{(h.r - 1) * m}"
        )
    chosen: list[tuple[int, ...]] = []
    used: set[int] = set()
    for e in sorted(h.incident(v)):
        rest = set(e) - {v}
        if rest & used:
            continue
        chosen.append(e)
        used |= rest
        if len(chosen) == m:
            return tuple(chosen)
    raise IncompleteSearchError(
        "greedy selection fell short despite the piercing bound",
        stage="sunflower-greedy",
        details={"found": len(chosen), "wanted": m},
    )


# ---------------------------------------------------------------------------
# Lifted colourings
# ---------------------------------------------------------------------------

class LiftedColouring(Colouring):
    """k-uniform colouring whose colours are p-sets of base colours.

    Each k-edge collects the base colours of all its s-subedges
    (p = C(k, s) of them); when fewer than p distinct colours appear the
    set is padded with the smallest missing base colours, so every colour
    id is a p-subset of the base palette and the budget is C(q, p).
    """

    def __init__(self, base: Colouring, k: int):
        s = base.uniformity
        if k <= s:
            raise ParameterError(f"lifting needs k > s, got k={k}, s={s}")
        if base.num_vertices < k:
            raise ParameterError("universe smaller than the lifted uniformity")
        p = math.comb(k, s)
        if base.budget < p:
            raise ParameterError(
                f"padding to {p} colours impossible with only "
                f"{base.budget} base colours"
            )
        super().__init__(k, base.num_vertices)
        self.base = base
        self.p = p
        self.kind = "hedgehog-lifted"

    def _colour(self, e):
        got = {self.base.colour(f) for f in itertools.combinations(e, self.base.uniformity)}
        if len(got) < self.p:
            for c in self.base.palette():
                if c not in got:
                    got.add(c)
                    if len(got) == self.p:
                        break
        return ("set", tuple(sorted(got)))

    def _palette(self):
        return [
            ("set", combo)
            for combo in itertools.combinations(self.base.palette(), self.p)
        ]


def lift_colouring(base: Colouring, k: int) -> LiftedColouring:
    return LiftedColouring(base, k)


@dataclass(frozen=True)
class SpreadReport:
    """Certificate that bodies force many colours on lifted spine edges.

    For every body of t vertices the base colours it spans (at least
    p'*p + 1 by the verified rainbow property) each appear in some spine
    edge's colour set, and one set holds only p of them, so any copy on
    that body spans at least p'+1 lifted colours.  Random embeddings are
    also evaluated directly.
    """

    t: int
    p_prime: int
    p: int
    bodies_checked: int
    min_base_span: int
    embeddings_checked: int
    min_lifted_span: int
    violations: tuple = ()
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_hedgehog_spread(
    lifted: LiftedColouring,
    t: int,
    p_prime: int,
    base_report=None,
    embeddings: int = 1000,
    seed: int = 0,
) -> SpreadReport:
    """Certify the pigeonhole chain for every body and spot-check embeddings.

    The base colouring must verify (t, p'*p + 1)-rainbow exhaustively
    (done here when no passing report is supplied).  Every t-set body is
    then certified, and ``embeddings`` random placements with random
    disjoint private vertices are evaluated through the lifted colouring;
    each must span at least p'+1 distinct colour sets.
    """
    base = lifted.base
    s = base.uniformity
    k = lifted.uniformity
    p = lifted.p
    need = p_prime * p + 1
    if base_report is None:
        base_report = _rainbow.verify_rainbow(base, t, need, mode="exhaustive")
    if not base_report.passed or base_report.t != t or base_report.p < need:
        raise PreconditionError(
            f"base colouring is not verified ({t}, {need})-rainbow"
        )

    n = base.num_vertices
    if t < s:
        return SpreadReport(
            t=t, p_prime=p_prime, p=p, bodies_checked=0, min_base_span=0,
            embeddings_checked=0, min_lifted_span=0,
        )

    min_span = None
    bodies = 0
    for body in itertools.combinations(range(1, n + 1), t):
        span = len({base.colour(f) for f in itertools.combinations(body, s)})
        bodies += 1
        if min_span is None or span < min_span:
            min_span = span
    violations = []
    if min_span < need:
        violations.append({"stage": "body-span", "span": min_span})

    n_priv = (k - s) * math.comb(t, s)
    rng = random.Random(seed)
    min_lifted = None
    done = 0
    if t + n_priv <= n:
        for _ in range(embeddings):
            body = sorted(rng.sample(range(1, n + 1), t))
            pool = [v for v in range(1, n + 1) if v not in set(body)]
            rng.shuffle(pool)
            pos = 0
            cols = set()
            for sub in itertools.combinations(body, s):
                priv = pool[pos : pos + (k - s)]
                pos += k - s
                cols.add(lifted.colour(tuple(sub) + tuple(priv)))
            done += 1
            if min_lifted is None or len(cols) < min_lifted:
                min_lifted = len(cols)
            if len(cols) < p_prime + 1:
                violations.append(
                    {"stage": "embedding", "body": body, "span": len(cols)}
                )
    return SpreadReport(
        t=t,
        p_prime=p_prime,
        p=p,
        bodies_checked=bodies,
        min_base_span=min_span or 0,
        embeddings_checked=done,
        min_lifted_span=min_lifted if min_lifted is not None else 0,
        violations=tuple(violations),
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Monochromatic balanced copies in 2-colourings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HedgehogEmbedding:
    """A monochromatic embedded copy: body, one host edge per (k+1)-subset
    of the body (with its private vertices), and the common colour."""

    body: tuple[int, ...]
    edges: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # (subset, privates)
    colour: object
    stats: dict

    def host_edges(self):
        return [tuple(sorted(sub + priv)) for sub, priv in self.edges]

    def to_dict(self) -> dict:
        return {
            "body": list(self.body),
            "edges": [
                {
                    "subset": list(sub),
                    "private": list(priv),
                    "colour": colour_str(self.colour),
                }
                for sub, priv in self.edges
            ],
        }


def validate_embedding(emb: HedgehogEmbedding, colouring: Colouring, t: int) -> bool:
    """Re-check an embedding edge by edge."""
    k1 = colouring.uniformity // 2 + 1  # subsets have size k+1 for odd 2k+1
    if len(emb.body) != t:
        return False
    subs = {sub for sub, _ in emb.edges}
    if subs != set(itertools.combinations(emb.body, k1)):
        return False
    seen_priv: set[int] = set(emb.body)
    for sub, priv in emb.edges:
        if len(priv) != colouring.uniformity - k1:
            return False
        if seen_priv & set(priv):
            return False
        seen_priv |= set(priv)
        if colouring.colour(sub + priv) != emb.colour:
            return False
    return True


def find_mono_hedgehog(
    colouring: Colouring,
    t: int,
    budget: int = DEFAULT_BUDGET,
) -> HedgehogEmbedding:
    """Constructive monochromatic balanced copy in a 2-coloured K_n^(2k+1).

    Stage 1 classifies (k+1)-sets as endangered for a colour when few
    vertices pierce all their host edges of that colour; stage 2 colours
    each vertex by the side for which few vertices pierce its endangered
    sets (ties go to the first palette colour); stage 3 greedily finds a
    body avoiding endangered sets of the majority side; stage 4 grows the
    spine greedily, one fresh host edge per (k+1)-subset of the body.
    The thresholds are guaranteed to work out only for universes of size
    t^(k+3) and beyond with t large; every one of them is checked at
    runtime and failures are reported with the failing stage.
    """
    r = colouring.uniformity
    if r % 2 != 1 or r < 3:
        raise ParameterError(f"uniformity must be odd and >= 3, got {r}")
    k = (r - 1) // 2
    n = colouring.num_vertices
    need_vertices = t + k * math.comb(t, k + 1)
    if n < need_vertices:
        raise ParameterError(
            f"universe of {n} vertices cannot hold a copy with "
            f"{need_vertices} vertices"
        )
    palette = colouring.palette()
    if len(palette) != 2:
        raise ParameterError("a 2-colouring is required")
    c_first, c_second = palette
    danger_thr = t ** (k + 1)
    peril_thr = 2 * k * t ** (k + 1)

    if k == 1:
        danger = _pair_danger(colouring, n, danger_thr, c_first, c_second)
    else:
        danger = _general_danger(colouring, n, k, danger_thr, c_first, c_second, budget)

    # vertex sides: few endangered sets of a colour at the vertex
    deg = {c_first: [0] * (n + 1), c_second: [0] * (n + 1)}
    for e, col in danger.items():
        for v in e:
            deg[col][v] += 1
    side: dict[int, object] = {}
    for v in range(1, n + 1):
        if deg[c_first][v] <= peril_thr:
            side[v] = c_first  # ties go to the first colour
        elif deg[c_second][v] <= peril_thr:
            side[v] = c_second
        else:
            _refute_uncolourable_vertex(
                colouring, danger, v, k, t, c_first, c_second
            )

    first_side = [v for v in range(1, n + 1) if side[v] == c_first]
    if 2 * len(first_side) >= n:
        target, members = c_first, first_side
    else:
        target, members = c_second, [v for v in range(1, n + 1) if side[v] == c_second]

    # greedy body avoiding endangered sets of the target colour
    body: list[int] = []
    alive = sorted(members)
    danger_target = {e for e, col in danger.items() if col == target}
    while alive and len(body) < t:
        v = alive.pop(0)
        body.append(v)
        blocked = set()
        for e in danger_target:
            if v in e:
                blocked |= set(e) - {v}
        alive = [u for u in alive if u not in blocked]
    if len(body) < t:
        raise IncompleteSearchError(
            f"greedy body stalled at {len(body)} of {t} vertices",
            stage="body",
            details={"colour": colour_str(target), "candidates": len(members)},
        )
    body_t = tuple(body)

    # every (k+1)-subset of the body is now unendangered for the target
    # colour, so host edges of that colour are plentiful; grow the spine
    used = set(body_t)
    spine = []
    for sub in itertools.combinations(body_t, k + 1):
        priv = _find_private(colouring, sub, target, used, n, k)
        if priv is None:
            raise IncompleteSearchError(
                f"no fresh host edge of the majority colour through {sub}",
                stage="spine",
                details={"subset": sub},
            )
        used |= set(priv)
        spine.append((sub, priv))

    emb = HedgehogEmbedding(
        body=body_t,
        edges=tuple(spine),
        colour=target,
        stats={
            "danger_sets": len(danger),
            "majority": colour_str(target),
            "majority_size": len(members),
        },
    )
    if not validate_embedding(emb, colouring, t):
        raise IncompleteSearchError(
            "constructed embedding failed re-validation",
            stage="validate",
        )
    return emb


def _pair_danger(colouring, n, thr, c1, c2):
    """Endangered pairs at uniformity 3: the piercing number of a pair in
    one colour's host edges is its co-degree in that colour."""
    colour = colouring.colour
    danger = {}
    for e in itertools.combinations(range(1, n + 1), 2):
        a, b = e
        n1 = 0
        n2 = 0
        for w in range(1, n + 1):
            if w == a or w == b:
                continue
            if colour((a, b, w)) == c1:
                n1 += 1
            else:
                n2 += 1
        if n1 < thr:
            danger[e] = c1
        elif n2 < thr:
            danger[e] = c2
    return danger


def _general_danger(colouring, n, k, thr, c1, c2, budget):
    work = math.comb(n, k + 1) * math.comb(n - k - 1, k)
    if work > budget:
        raise BudgetExceededError(
            f"classifying endangered sets needs about {work} edge "
            f"evaluations, budget is {budget}",
            estimate=work,
            budget=budget,
        )
    danger = {}
    universe = range(1, n + 1)
    for e in itertools.combinations(universe, k + 1):
        rest = [v for v in universe if v not in e]
        hosts1 = []
        hosts2 = []
        for extra in itertools.combinations(rest, k):
            col = colouring.colour(e + extra)
            (hosts1 if col == c1 else hosts2).append(frozenset(extra))
        t1 = _min_hitting_set(hosts1, budget)
        t2 = _min_hitting_set(hosts2, budget)
        if t1.value < thr:
            danger[e] = c1
        elif t2.value < thr:
            danger[e] = c2
    return danger


def _refute_uncolourable_vertex(colouring, danger, v, k, t, c1, c2):
    """Run the crossing construction that shows a vertex cannot have many
    endangered sets of both colours; report the failing stage either way."""
    s = 2 * t ** (k + 1)
    star1 = sorted(e for e, col in danger.items() if col == c1 and v in e)
    star2 = sorted(e for e, col in danger.items() if col == c2 and v in e)
    details = {"vertex": v, "first": len(star1), "second": len(star2)}
    e_pick = _disjoint_star(star1, v, s)
    f_pick = _disjoint_star(star2, v, s)
    if e_pick is None or f_pick is None:
        raise IncompleteSearchError(
            f"vertex {v} is endangered on both sides but the crossing "
            "construction cannot be assembled at this scale",
            stage="vertex-colouring",
            details=details,
        )
    # pools of fresh vertices pad the crossed edges up to the uniformity
    used = set()
    for e in e_pick + f_pick:
        used |= set(e)
    fresh = [u for u in range(1, colouring.num_vertices + 1) if u not in used]
    pools = []
    for i in range(s):
        pools.append(fresh[i * (k - 1) : (i + 1) * (k - 1)])
    counts: dict[tuple, dict] = {tuple(e): {c1: 0, c2: 0} for e in e_pick}
    for i, e in enumerate(e_pick):
        for j, f in enumerate(f_pick):
            g = set(e) | set(f)
            pool = pools[(i + j) % s] if s else []
            for u in pool:
                if len(g) >= 2 * k + 1:
                    break
                g.add(u)
            if len(g) != 2 * k + 1:
                continue
            counts[tuple(e)][colouring.colour(tuple(sorted(g)))] += 1
    thr = t ** (k + 1)
    biggest = max(
        (max(c[c1], c[c2]) for c in counts.values()), default=0
    )
    raise IncompleteSearchError(
        f"vertex {v} is endangered on both sides; the crossing "
        f"construction builds a same-coloured star of size {biggest} "
        f"against the endangerment threshold {thr}, so the classification "
        "is inconsistent at this scale",
        stage="vertex-colouring",
        details=details,
    )


def _disjoint_star(edges, v, m):
    chosen = []
    used: set[int] = set()
    for e in edges:
        rest = set(e) - {v}
        if rest & used:
            continue
        chosen.append(e)
        used |= rest
        if len(chosen) == m:
            return chosen
    return None


def _find_private(colouring, sub, target, used, n, k):
    """Smallest fresh k-set completing ``sub`` to an edge of the target colour."""
    pool = [v for v in range(1, n + 1) if v not in used and v not in sub]
    for extra in itertools.combinations(pool, k):
        if colouring.colour(tuple(sub) + extra) == target:
            return extra
    return None


# ---------------------------------------------------------------------------
# The two-part host colouring
# ---------------------------------------------------------------------------

# the first palette colour wins danger/peril ties, so it is the red one
RED = ("base", 1)
BLUE = ("base", 2)


class BurrErdosHost(Colouring):
    """Host 2-colouring on n^3/8 vertices split into n/4 parts of n^2/2.

    A triple is red exactly when it has two vertices in one part and its
    third vertex elsewhere; triples inside a single part or meeting three
    distinct parts are blue.
    """

    def __init__(self, n: int):
        if n % 4 != 0 or n < 4:
            raise ParameterError("n must be a positive multiple of 4")
        self.n = n
        self.part_size = n * n // 2
        self.num_parts = n // 4
        super().__init__(3, self.part_size * self.num_parts)
        self.kind = "burr-erdos-host"

    def part_of(self, v: int) -> int:
        """1-based part index of a vertex."""
        return (v - 1) // self.part_size + 1

    def _colour(self, e):
        parts = [self.part_of(v) for v in e]
        distinct = len(set(parts))
        if distinct == 2:
            return RED
        return BLUE

    def _palette(self):
        return [RED, BLUE]


def burr_erdos_pair(n: int) -> tuple[Hypergraph, BurrErdosHost]:
    """The low-degeneracy 3-uniform hypergraph and its red/blue host.

    The hypergraph has an n-vertex base, one spine vertex per base pair
    plus one more, two triples tying each base pair to consecutive spine
    vertices, and all triples inside every five consecutive spine
    vertices; peeling the spine in order never meets more than 8 alive
    edges.  The host colouring on n^3/8 vertices contains no monochromatic
    copy of it.
    """
    if n % 4 != 0 or n < 4:
        raise ParameterError("n must be a positive multiple of 4")
    base = list(range(1, n + 1))
    pairs = list(itertools.combinations(base, 2))
    m = len(pairs)
    spine = [n + i for i in range(1, m + 2)]  # x_1 .. x_{m+1}
    edges = set()
    for i, (x, y) in enumerate(pairs, start=1):
        edges.add(tuple(sorted((x, y, spine[i - 1]))))
        edges.add(tuple(sorted((x, y, spine[i]))))
    for i in range(m - 3):
        five = spine[i : i + 5]
        for tri in itertools.combinations(five, 3):
            edges.add(tuple(sorted(tri)))
    h = Hypergraph(3, tuple(base + spine), tuple(sorted(edges)))
    return h, BurrErdosHost(n)


# ---------------------------------------------------------------------------
# Hypergraph files
# ---------------------------------------------------------------------------

def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.r} {len(h.vertices)} {len(h.edges)}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str, path=None) -> Hypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 3:
                raise FileFormatError(
                    "expected header 'r |V| |E|'", path=path, line=lineno
                )
            try:
                header = tuple(int(x) for x in toks)
            except ValueError:
                raise FileFormatError(
                    f"bad header {line!r}", path=path, line=lineno
                ) from None
            continue
        try:
            e = tuple(sorted(int(x) for x in toks))
        except ValueError:
            raise FileFormatError(
                f"bad vertex in {line!r}", path=path, line=lineno
            ) from None
        if len(e) != header[0]:
            raise FileFormatError(
                f"edge arity {len(e)} != {header[0]}", path=path, line=lineno
            )
        edges.append(e)
    if header is None:
        raise FileFormatError("empty hypergraph file", path=path)
    r, nv, ne = header
    if len(edges) != ne:
        raise FileFormatError(
            f"header promises {ne} edges, file has {len(edges)}", path=path
        )
    vertices = sorted(set(itertools.chain.from_iterable(edges)))
    if len(vertices) > nv:
        raise FileFormatError(
            f"header promises {nv} vertices, edges use {len(vertices)}",
            path=path,
        )
    if len(vertices) < nv:
        # isolated vertices are allowed; label them past the named ones
        present = set(vertices)
        extra = []
        v = 1
        while len(vertices) + len(extra) < nv:
            if v not in present:
                extra.append(v)
            v += 1
        vertices = sorted(vertices + extra)
    return Hypergraph(r, tuple(vertices), tuple(sorted(set(edges))))
