"""Exhaustive generation of small commutative semigroups with zero.

Tables are generated by backtracking over the upper triangle of the
multiplication table (row and column 0 are pinned to 0), pruning a
branch as soon as some fully determined associativity triple fails.
Emission order is ascending in the flat row-major table, so repeated
runs produce byte-identical output.

Commutativity lets the associativity check range over triples (x, y, z)
with x <= z only: the remaining instances follow by swapping factors.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import OrderTooLargeError, UnknownPredicateError
from .graph import (
    bridges,
    chromatic_number,
    clique_number,
    complete_multipartite_partition,
    cut_vertices,
    gamma,
    girth,
    metrics,
)
from .semigroup import CayleyTable, Semigroup
from .theorems import Verdict, all_clauses, run_all

MIN_ORDER = 2
MAX_ORDER = 6


@dataclass(frozen=True)
class EnumerationOptions:
    order: int
    up_to_iso: bool = False
    require_reduced: bool = False
    limit: int | None = None

    def __post_init__(self):
        if not MIN_ORDER <= self.order <= MAX_ORDER:
            raise OrderTooLargeError(
                "enumeration supports orders %d through %d, got %d"
                % (MIN_ORDER, MAX_ORDER, self.order)
            )
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be nonnegative")


def _cells(n: int) -> list[tuple[int, int]]:
    """Free table cells in fill order: upper triangle, row-major."""
    return [(i, j) for i in range(1, n) for j in range(i, n)]


def _prepare(n, cells):
    """Fill ranks and per-cell watch lists of associativity triples.

    rank[a*n+b] is the fill index of the cell holding a*b (-1 when the
    product involves 0 and is known from the start). A triple (x, y, z)
    lands on the watch list of the later of its two inner-product cells,
    the first moment both xy and yz are known.
    """
    rank = [-1] * (n * n)
    for k, (i, j) in enumerate(cells):
        rank[i * n + j] = k
        rank[j * n + i] = k
    watch = [[] for _ in cells]
    for x in range(1, n):
        for z in range(x, n):
            for y in range(1, n):
                k = max(rank[x * n + y], rank[y * n + z])
                watch[k].append((x, y, z))
    return rank, watch


def _watch_ok(n, t, rank, triples, k) -> bool:
    """Check the watched triples whose outer products are already set."""
    for x, y, z in triples:
        p = t[x * n + y]
        q = t[y * n + z]
        if rank[p * n + z] <= k and rank[x * n + q] <= k:
            if t[p * n + z] != t[x * n + q]:
                return False
    return True


def _assoc_full(n, t) -> bool:
    for x in range(1, n):
        for z in range(x, n):
            for y in range(1, n):
                if t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]:
                    return False
    return True


def _descend(n, cells, rank, watch, t, k, require_reduced):
    if k == len(cells):
        if _assoc_full(n, t):
            rows = [tuple(t[r * n:(r + 1) * n]) for r in range(n)]
            yield CayleyTable(order=n, entries=tuple(rows))
        return
    i, j = cells[k]
    ij, ji = i * n + j, j * n + i
    for v in range(n):
        if v == 0 and i == j and require_reduced:
            continue  # a zero square would make i nilpotent
        t[ij] = v
        t[ji] = v
        if _watch_ok(n, t, rank, watch[k], k):
            yield from _descend(n, cells, rank, watch, t, k + 1, require_reduced)
    t[ij] = 0
    t[ji] = 0


def canonical_form(s) -> CayleyTable:
    """Least relabeling of the table among all permutations fixing 0.

    Accepts a Semigroup or a bare CayleyTable; two semigroups are
    isomorphic exactly when their canonical forms are equal.
    """
    table = s.table if isinstance(s, Semigroup) else s
    n = table.order
    best = table.entries
    for p in itertools.permutations(range(1, n)):
        cand = table.relabeled((0,) + p).entries
        if cand < best:
            best = cand
    return CayleyTable(order=n, entries=best, names=None)


def _is_canonical(table: CayleyTable) -> bool:
    return canonical_form(table).entries == table.entries


def _generate(opts: EnumerationOptions, pinned: int | None = None):
    n = opts.order
    cells = _cells(n)
    rank, watch = _prepare(n, cells)
    t = [0] * (n * n)
    if pinned is None or not cells:
        gen = _descend(n, cells, rank, watch, t, 0, opts.require_reduced)
    else:
        i, j = cells[0]
        if pinned == 0 and i == j and opts.require_reduced:
            return
        t[i * n + j] = pinned
        t[j * n + i] = pinned
        if not _watch_ok(n, t, rank, watch[0], 0):
            return
        gen = _descend(n, cells, rank, watch, t, 1, opts.require_reduced)
    if opts.up_to_iso:
        gen = (tb for tb in gen if _is_canonical(tb))
    yield from gen


def _branch_entries(args):
    order, pinned, up_to_iso, require_reduced = args
    opts = EnumerationOptions(
        order=order, up_to_iso=up_to_iso, require_reduced=require_reduced
    )
    return [tb.entries for tb in _generate(opts, pinned)]


def enumerate_semigroups(opts: EnumerationOptions, workers: int = 1):
    """Yield every valid semigroup for the options, in ascending table order.

    With workers > 1 the value of the first free cell splits the search
    into independent branches run in separate processes; the merge keeps
    the serial emission order. A limit forces the serial path, which can
    stop early.
    """
    n = opts.order
    if workers <= 1 or opts.limit is not None:
        gen = _generate(opts)
        if opts.limit is not None:
            gen = itertools.islice(gen, opts.limit)
        for tb in gen:
            yield Semigroup(tb)
        return
    args = [
        (n, v, opts.up_to_iso, opts.require_reduced) for v in range(n)
    ]
    with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
        for chunk in pool.map(_branch_entries, args):
            for entries in chunk:
                yield Semigroup(CayleyTable(order=n, entries=entries))


# -- corpus audit --------------------------------------------------------------


@dataclass(frozen=True)
class ClauseTally:
    applicable: int = 0
    held: int = 0
    failed: int = 0


@dataclass(frozen=True)
class AuditReport:
    """Checker tallies over one enumerated corpus.

    counterexamples holds (table, clause verdict) pairs for every
    applicable clause that failed; an empty tuple is the expected
    outcome.
    """

    order: int
    up_to_iso: bool
    total: int
    tallies: dict
    counterexamples: tuple

    @property
    def clean(self) -> bool:
        return not self.counterexamples


def _gamma_facts(s: Semigroup) -> Verdict:
    """Background facts every zero-divisor graph satisfies.

    Connectedness with diameter <= 3 and girth in {3, 4, infinity} are
    classical; auditing them guards the graph layer itself.
    """
    g = gamma(s)
    if g.n == 0:
        return Verdict(
            "dms-gamma-facts", applicable=False, holds=True,
            notes="graph has no vertices",
        )
    m = metrics(g)
    gi = m.girth
    ok = m.connected and m.diameter <= 3 and (gi == 3 or gi == 4 or gi == math.inf)
    return Verdict(
        "dms-gamma-facts", applicable=True, holds=ok,
        witness={"vertices": g.n, "diameter": m.diameter, "girth": gi},
        notes="connected, diameter <= 3, girth 3, 4 or infinite",
    )


def audit(opts: EnumerationOptions, size_cap: int = 4, workers: int = 1) -> AuditReport:
    """Run every structure check across an enumerated corpus."""
    tallies: dict[str, list[int]] = {}
    counterexamples = []
    total = 0
    for s in enumerate_semigroups(opts, workers=workers):
        total += 1
        clauses = list(all_clauses(run_all(s, size_cap)))
        clauses.append(_gamma_facts(s))
        for c in clauses:
            row = tallies.setdefault(c.theorem_id, [0, 0, 0])
            if not c.applicable:
                continue
            row[0] += 1
            if c.holds:
                row[1] += 1
            else:
                row[2] += 1
                counterexamples.append((s.table, c))
    return AuditReport(
        order=opts.order,
        up_to_iso=opts.up_to_iso,
        total=total,
        tallies={k: ClauseTally(*v) for k, v in sorted(tallies.items())},
        counterexamples=tuple(counterexamples),
    )


# -- predicate search ----------------------------------------------------------


def _pred_complete_rpartite(s, g, arg):
    if g.n == 0:
        return False
    part = complete_multipartite_partition(g)
    if part is None or not part.parts:
        return False
    return arg is None or part.r == arg


def _pred_has_bridge(s, g, arg):
    return bool(bridges(g))


def _pred_has_cut_vertex(s, g, arg):
    return g.n >= 3 and bool(cut_vertices(g))


def _pred_girth(s, g, arg):
    return girth(g) == arg


def _pred_chi_omega_gap(s, g, arg):
    return chromatic_number(g)[0] > clique_number(g)[0]


def _pred_reduced(s, g, arg):
    return s.is_reduced()


_PREDICATES = {
    "complete-rpartite": (_pred_complete_rpartite, "int"),
    "has-bridge": (_pred_has_bridge, None),
    "has-cut-vertex": (_pred_has_cut_vertex, None),
    "girth": (_pred_girth, "int-or-inf"),
    "chi-omega-gap": (_pred_chi_omega_gap, None),
    "reduced": (_pred_reduced, None),
}


def available_predicates() -> tuple[str, ...]:
    return tuple(sorted(_PREDICATES))


def _parse_predicate(spec: str):
    name, sep, raw = spec.partition(":")
    if name not in _PREDICATES:
        raise UnknownPredicateError(
            "unknown predicate %r; available: %s"
            % (name, ", ".join(available_predicates()))
        )
    fn, kind = _PREDICATES[name]
    arg = None
    if sep:
        if kind is None:
            raise UnknownPredicateError("predicate %r takes no argument" % name)
        if kind == "int-or-inf" and raw == "inf":
            arg = math.inf
        else:
            try:
                arg = int(raw)
            except ValueError:
                raise UnknownPredicateError(
                    "predicate %r needs an integer argument, got %r" % (name, raw)
                ) from None
    elif name == "girth":
        raise UnknownPredicateError(
            "predicate 'girth' needs an argument, e.g. girth:4 or girth:inf"
        )
    return fn, arg


def search(opts: EnumerationOptions, predicate: str, workers: int = 1):
    """Yield enumerated semigroups whose graph satisfies the predicate.

    The predicate is a name with an optional colon argument, for
    example "girth:4" or "complete-rpartite:3"; girth also accepts
    "girth:inf" for acyclic graphs.
    """
    fn, arg = _parse_predicate(predicate)
    # the limit caps matches, not the enumerated universe
    inner = EnumerationOptions(
        order=opts.order,
        up_to_iso=opts.up_to_iso,
        require_reduced=opts.require_reduced,
    )
    matches = (
        s
        for s in enumerate_semigroups(inner, workers=workers)
        if fn(s, gamma(s), arg)
    )
    if opts.limit is not None:
        matches = itertools.islice(matches, opts.limit)
    yield from matches
