"""Brute-force ground-truth oracles for desk-scale verification.

Every oracle here works straight from the definitions: exhaustive
enumeration over subsets, bipartitions, bijections, or labellings, with
memoisation only where stated.  None of the production algorithms are
reused — this module deliberately re-implements its own component search,
module test, and decomposition so that agreement between the two code
paths is meaningful evidence.

Only the :class:`~nlc2.graphs.Graph` value type is shared, as the common
data substrate.

Budgets: each oracle refuses inputs whose size exceeds its configured
maximum, and a shared operation counter aborts runs that would exceed the
hard ceiling, raising :class:`OracleBudgetError` either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .graphs import Graph
from .errors import OracleBudgetError

__all__ = [
    "OracleBudget",
    "DEFAULT_BUDGET",
    "brute_iso",
    "brute_members",
    "brute_rho_free",
    "brute_nlc2",
    "brute_nlc2_prime",
]


@dataclass(frozen=True)
class OracleBudget:
    """Per-oracle size limits plus a hard operation-count ceiling."""

    max_iso_n: int = 10
    max_bipartition_n: int = 12
    max_module_n: int = 16
    max_rho_free_n: int = 10
    max_nlc2_prime_n: int = 8
    max_ops: int = 200_000_000


DEFAULT_BUDGET = OracleBudget()


class _Ops:
    """Mutable operation counter enforcing the budget ceiling."""

    __slots__ = ("count", "limit")

    def __init__(self, limit: int) -> None:
        self.count = 0
        self.limit = limit

    def spend(self, k: int) -> None:
        self.count += k
        if self.count > self.limit:
            raise OracleBudgetError(
                f"operation ceiling exceeded ({self.count} > {self.limit})"
            )


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise OracleBudgetError(what)


# ---------------------------------------------------------------------------
# brute_iso: backtracking bijection search
# ---------------------------------------------------------------------------


def brute_iso(
    g: Graph,
    h: Graph,
    labels_g: Sequence[object] | None = None,
    labels_h: Sequence[object] | None = None,
    budget: OracleBudget | None = None,
) -> bool:
    """Exact (labelled) isomorphism by degree/colour-pruned backtracking.

    Optional labels are arbitrary hashable per-vertex colours; a bijection
    must preserve them exactly.
    """
    budget = budget or DEFAULT_BUDGET
    _require(
        g.n <= budget.max_iso_n and h.n <= budget.max_iso_n,
        f"brute_iso limited to n <= {budget.max_iso_n}",
    )
    if g.n != h.n:
        return False
    n = g.n
    colours_g = [
        (g.adj[v].bit_count(), None if labels_g is None else labels_g[v])
        for v in range(n)
    ]
    colours_h = [
        (h.adj[v].bit_count(), None if labels_h is None else labels_h[v])
        for v in range(n)
    ]
    if sorted(map(repr, colours_g)) != sorted(map(repr, colours_h)):
        return False

    ops = _Ops(budget.max_ops)
    # Map g-vertices in order of rarest colour first to prune early.
    freq: dict[str, int] = {}
    for c in colours_g:
        freq[repr(c)] = freq.get(repr(c), 0) + 1
    order = sorted(range(n), key=lambda v: (freq[repr(colours_g[v])], v))
    mapped_h = [-1] * n  # g vertex (by order position) -> h vertex
    used_h = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        cu = repr(colours_g[u])
        for w in range(n):
            if used_h[w] or repr(colours_h[w]) != cu:
                continue
            ops.spend(1)
            ok = True
            for prev_pos in range(pos):
                p = order[prev_pos]
                q = mapped_h[prev_pos]
                if ((g.adj[u] >> p) & 1) != ((h.adj[w] >> q) & 1):
                    ok = False
                    break
            if ok:
                used_h[w] = True
                mapped_h[pos] = w
                if extend(pos + 1):
                    return True
                used_h[w] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# brute_members: exhaustive module / bipartition enumeration
# ---------------------------------------------------------------------------


def _def_is_module(g: Graph, x: int) -> bool:
    outside = g.vertex_mask & ~x
    v = 0
    rest = outside
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        inter = g.adj[v] & x
        if inter and inter != x:
            return False
    return True


def _def_is_split(adj: Sequence[int], x: int, y: int) -> bool:
    """All cross-active x-vertices share one y-neighbourhood, and symmetrically."""
    for side, other in ((x, y), (y, x)):
        shared = -1
        rest = side
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cross = adj[v] & other
            if not cross:
                continue
            if shared == -1:
                shared = cross
            elif cross != shared:
                return False
    return True


def _def_is_bijoin(adj: Sequence[int], x: int, y: int) -> bool:
    """Every two x-vertices induce the same unordered neighbourhood bipartition of y."""
    for side, other in ((x, y), (y, x)):
        first = -1
        rest = side
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cross = adj[v] & other
            if first == -1:
                first = cross
            elif cross != first and cross != (other & ~first):
                return False
    return True


def brute_members(
    g: Graph,
    predicate: str,
    budget: OracleBudget | None = None,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """All members and all strong members of one decomposition family.

    ``predicate`` is one of ``module``, ``split``, ``cosplit``, ``bijoin``.
    Modules are returned as subset masks (including all of V); bipartitions
    as the mask of the side not containing vertex 0.  Strong members are
    those overlapping no other member.
    """
    budget = budget or DEFAULT_BUDGET
    n = g.n
    full = g.vertex_mask
    members: list[int] = []

    if predicate == "module":
        _require(n <= budget.max_module_n, f"module enumeration limited to n <= {budget.max_module_n}")
        for x in range(1, 1 << n):
            if _def_is_module(g, x):
                members.append(x)
        strong = []
        for x in members:
            ok = True
            for y in members:
                if y == x:
                    continue
                if (x & y) and (x & ~y) and (y & ~x):
                    ok = False
                    break
            strong.append(ok)
        return tuple(members), tuple(m for m, s in zip(members, strong) if s)

    _require(
        n <= budget.max_bipartition_n,
        f"bipartition enumeration limited to n <= {budget.max_bipartition_n}",
    )
    if predicate == "split":
        adj: Sequence[int] = g.adj
        test = _def_is_split
    elif predicate == "cosplit":
        adj = tuple((full & ~a & ~(1 << v)) for v, a in enumerate(g.adj))
        test = _def_is_split
    elif predicate == "bijoin":
        adj = g.adj
        test = _def_is_bijoin
    else:
        raise ValueError(f"unknown predicate {predicate!r}")

    if n >= 2:
        # Enumerate by the side that avoids vertex 0.
        inner = full & ~1
        x = inner
        while True:
            if x:
                other = full & ~x
                if test(adj, x, other):
                    members.append(x)
            if x == 0:
                break
            x = (x - 1) & inner

    strong_flags = []
    for x in members:
        ok = True
        for y in members:
            if y == x:
                continue
            # Bipartition overlap: all four corners non-empty.
            if (x & y) and (x & ~y) and (y & ~x) and (full & ~x & ~y):
                ok = False
                break
        strong_flags.append(ok)
    members_sorted = sorted(members)
    strong_sorted = sorted(m for m, s in zip(members, strong_flags) if s)
    return tuple(members_sorted), tuple(strong_sorted)


# ---------------------------------------------------------------------------
# brute_rho_free: recursive cut search over all sub-vertex-sets
# ---------------------------------------------------------------------------


def _pure_cut(adj: Sequence[int], x: int, y: int, lam: int, ops: _Ops) -> bool:
    """True iff, for each ordered label-pair type, the cross pairs between
    ``x`` and ``y`` are uniformly edges or uniformly non-edges."""
    for xi in (x & ~lam, x & lam):
        if not xi:
            continue
        for yj in (y & ~lam, y & lam):
            if not yj:
                continue
            and_m = yj
            or_m = 0
            rest = xi
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                a = adj[v] & yj
                and_m &= a
                or_m |= a
                if or_m and and_m != yj:
                    return False
            ops.spend(xi.bit_count())
    return True


def _rho_free_search(
    adj: Sequence[int],
    w: int,
    lam: int,
    memo: dict[tuple[int, int], bool],
    ops: _Ops,
) -> bool:
    """Does the labelled subgraph on ``w`` (label-2 set ``lam``) admit a
    relabel-free construction?  ``lam`` must be a subset of ``w``."""
    if w & (w - 1) == 0:
        return True
    key_lam = min(lam, w & ~lam)
    key = (w, key_lam)
    hit = memo.get(key)
    if hit is not None:
        return hit
    result = False
    anchor = w & -w
    # Enumerate the proper subsets of w containing the anchor vertex
    # (each unordered cut visited once) via a submask walk.
    inner = w & ~anchor
    s = inner
    while True:
        s = (s - 1) & inner
        x_side = s | anchor
        if x_side != w:
            y_side = w & ~x_side
            ops.spend(1)
            if _pure_cut(adj, x_side, y_side, lam, ops):
                if _rho_free_search(adj, x_side, lam & x_side, memo, ops) and _rho_free_search(
                    adj, y_side, lam & y_side, memo, ops
                ):
                    result = True
                    break
        if s == 0:
            break
    memo[key] = result
    return result


def brute_rho_free(
    g: Graph | object,
    labels: Sequence[int] | None = None,
    budget: OracleBudget | None = None,
    _memo: dict[tuple[int, int], bool] | None = None,
) -> bool:
    """Exhaustively decide whether the labelled graph admits a relabel-free
    construction term.

    ``labels`` holds 1/2 per vertex.  Alternatively pass a single object
    with ``.graph`` and ``.labels`` attributes.
    """
    if labels is None:
        labels = g.labels  # type: ignore[attr-defined]
        g = g.graph  # type: ignore[attr-defined]
    assert isinstance(g, Graph)
    budget = budget or DEFAULT_BUDGET
    _require(g.n <= budget.max_rho_free_n, f"brute_rho_free limited to n <= {budget.max_rho_free_n}")
    if g.n == 0:
        return True
    lam = 0
    for v, lab in enumerate(labels):
        if lab == 2:
            lam |= 1 << v
        elif lab != 1:
            raise ValueError("labels must be 1 or 2")
    memo = _memo if _memo is not None else {}
    ops = _Ops(budget.max_ops)
    return _rho_free_search(g.adj, g.vertex_mask, lam, memo, ops)


# ---------------------------------------------------------------------------
# brute_nlc2: oracle-internal modular tree + labelling search
# ---------------------------------------------------------------------------


def _o_components(adj: Sequence[int], within: int) -> list[int]:
    comps = []
    remaining = within
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                nxt |= adj[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def brute_nlc2_prime(g: Graph, budget: OracleBudget | None = None) -> bool:
    """Does some 2-labelling make ``g`` relabel-free constructible?

    Intended for graphs that are prime in the modular sense; the search is
    over all labellings with vertex 0 fixed to label 1 (global label swap
    preserves the outcome).
    """
    budget = budget or DEFAULT_BUDGET
    _require(
        g.n <= budget.max_nlc2_prime_n,
        f"brute_nlc2_prime limited to n <= {budget.max_nlc2_prime_n}",
    )
    if g.n <= 1:
        return True
    memo: dict[tuple[int, int], bool] = {}
    ops = _Ops(budget.max_ops)
    n = g.n
    for lam_rest in range(1 << (n - 1)):
        lam = lam_rest << 1  # vertex 0 keeps label 1
        if _rho_free_search(g.adj, g.vertex_mask, lam, memo, ops):
            return True
    return False


def _o_strong_modules(g: Graph) -> list[int]:
    """All strong modules (overlap-free modules), by full enumeration."""
    n = g.n
    mods = [x for x in range(1, 1 << n) if _def_is_module(g, x)]
    strong = []
    for x in mods:
        ok = True
        for y in mods:
            if y != x and (x & y) and (x & ~y) and (y & ~x):
                ok = False
                break
        if ok:
            strong.append(x)
    return strong


def brute_nlc2(g: Graph, budget: OracleBudget | None = None) -> bool:
    """Exhaustive NLC-2 membership test.

    Builds the modular tree by brute strong-module enumeration, then for
    each internal node forms the quotient on its children; edgeless and
    complete quotients always pass, and any other (prime) quotient passes
    iff some 2-labelling admits a relabel-free construction.
    """
    budget = budget or DEFAULT_BUDGET
    _require(
        g.n <= budget.max_nlc2_prime_n + 4,
        f"brute_nlc2 limited to n <= {budget.max_nlc2_prime_n + 4}",
    )
    if g.n <= 1:
        return True
    strong = _o_strong_modules(g)
    strong.sort(key=lambda m: m.bit_count(), reverse=True)
    # children[i]: maximal strong modules properly below strong[i]
    for mod in strong:
        if mod.bit_count() == 1:
            continue
        # Children: maximal strong modules properly contained in mod.
        children: list[int] = []
        for other in strong:
            if other == mod or (other & ~mod):
                continue
            is_max = True
            for mid in strong:
                if mid == mod or mid == other or (mid & ~mod):
                    continue
                if (other & ~mid) == 0 and mid.bit_count() > other.bit_count():
                    is_max = False
                    break
            if is_max:
                children.append(other)
        covered = 0
        for c in children:
            assert not (c & covered), "strong modules are not laminar"
            covered |= c
        assert covered == mod, "strong modules failed to partition their parent"
        # Quotient on representatives.
        reps = [c & -c for c in children]
        k = len(children)
        qadj = [0] * k
        for a in range(k):
            va = reps[a].bit_length() - 1
            for b in range(a + 1, k):
                vb = reps[b].bit_length() - 1
                if (g.adj[va] >> vb) & 1:
                    qadj[a] |= 1 << b
                    qadj[b] |= 1 << a
        q = Graph(k, tuple(qadj))
        total = k * (k - 1) // 2
        if q.m == 0 or q.m == total:
            continue
        if not brute_nlc2_prime(q, budget):
            return False
    return True
