"""Structure checks tying graph shape to ideal structure.

Every check inspects one concrete semigroup and returns a Verdict whose
witness contains enough data to re-verify the claim with the primitive
operations alone. Identifiers such as "thm-2.2-median" are stable
interface strings used by the command line, reports and the corpus
audit; a composite check groups several clause verdicts.

Three clauses verify a weakened form of the classical statement because
the literal form fails on small valid tables (a witness is recorded for
the literal outcome in each case): the edge-cutset clause, the leaf
side of the bridge clause, and the all-parts-at-least-two clause.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    bridges,
    center,
    chromatic_number,
    clique_number,
    complete_multipartite_partition,
    components_without_edges,
    cut_vertices,
    gamma,
    girth,
    has_clique_of_size,
    median,
    metrics,
    minimal_edge_cutsets,
    minimal_vertex_cutsets,
)

DEFAULT_SIZE_CAP = 4


@dataclass(frozen=True)
class Verdict:
    """Outcome of one structure check.

    holds is forced to True whenever the check is not applicable, so a
    vacuous verdict can never read as a failure; failed is the one flag
    audits need.
    """

    theorem_id: str
    applicable: bool
    holds: bool
    witness: dict = field(default_factory=dict)
    notes: str = ""
    clauses: tuple = ()

    @property
    def failed(self) -> bool:
        return self.applicable and not self.holds

    @property
    def vacuous(self) -> bool:
        return not self.applicable


def _v(theorem_id, applicable, holds, witness=None, notes=""):
    return Verdict(
        theorem_id=theorem_id,
        applicable=applicable,
        holds=bool(holds) if applicable else True,
        witness=witness or {},
        notes=notes,
    )


def _composite(theorem_id, clauses, witness=None, notes=""):
    clauses = tuple(clauses)
    return Verdict(
        theorem_id=theorem_id,
        applicable=any(c.applicable for c in clauses),
        holds=all(c.holds for c in clauses),
        witness=witness or {},
        notes=notes,
        clauses=clauses,
    )


def _orbit(s, x) -> set[int]:
    """Sx = {rx : r in S}."""
    return {s.product(r, x) for r in s.elements}


# -- nilpotent subgraph -------------------------------------------------------


def check_nilpotent_subgraph(s) -> Verdict:
    """Nonzero nilpotents must induce a connected subgraph of diameter <= 2."""
    nstar = [x for x in s.nilpotents() if x != 0]
    if not nstar:
        clause = _v(
            "prop-2.1-nilpotent-subgraph", False, True,
            {"nilpotents": []}, "no nonzero nilpotent elements",
        )
    else:
        sub = gamma(s).induced(nstar)
        m = metrics(sub)
        clause = _v(
            "prop-2.1-nilpotent-subgraph", True,
            m.connected and m.diameter <= 2,
            {"nilpotents": nstar, "connected": m.connected, "diameter": m.diameter},
            "induced subgraph on nonzero nilpotents is connected with diameter <= 2",
        )
    return _composite("nilpotent-subgraph", [clause])


# -- median and center --------------------------------------------------------


def check_median_center_ideals(s) -> Verdict:
    """Median and center vertex sets, each joined with 0, must be ideals."""
    g = gamma(s)
    if g.n == 0:
        empty = {"vertices": []}
        return _composite("median-center", [
            _v("thm-2.2-median", False, True, empty, "graph has no vertices"),
            _v("thm-2.4-center", False, True, empty, "graph has no vertices"),
        ])
    med = sorted(median(g))
    cen = sorted(center(g))
    return _composite("median-center", [
        _v(
            "thm-2.2-median", True, s.is_ideal(set(med) | {0}),
            {"median": med},
            "median vertices with 0 form an ideal",
        ),
        _v(
            "thm-2.4-center", True, s.is_ideal(set(cen) | {0}),
            {"center": cen},
            "center vertices with 0 form an ideal",
        ),
    ])


# -- cut vertices and cutsets -------------------------------------------------


def check_cut_structures(s, size_cap: int = DEFAULT_SIZE_CAP) -> Verdict:
    """Separator structure: cut vertices, vertex cutsets, edge cutsets."""
    g = gamma(s)
    clauses = []

    cvs = sorted(cut_vertices(g)) if g.n >= 3 else []
    if not cvs:
        clauses.append(_v("cor-2.3-cut-vertices", False, True, {}, "no cut vertices"))
    else:
        recs = []
        ok = True
        for x in cvs:
            ideal_ok = s.is_ideal({0, x})
            adj_all = all(g.has_edge(x, y) for y in g.vertices if y != x)
            in_sx = x in _orbit(s, x)
            recs.append({
                "vertex": x,
                "pair_ideal": ideal_ok,
                "adjacent_to_all": adj_all,
                "in_own_orbit": in_sx,
            })
            ok = ok and ideal_ok and (adj_all or in_sx)
        clauses.append(_v(
            "cor-2.3-cut-vertices", True, ok, {"cut_vertices": recs},
            "{0,x} is an ideal and x is adjacent to every vertex or x in Sx",
        ))

    vcs = minimal_vertex_cutsets(g, size_cap) if g.n >= 3 else ()
    if not vcs:
        clauses.append(_v(
            "thm-2.2-minimal-vertex-cutsets", False, True,
            {"size_cap": size_cap}, "no minimal vertex cutsets within the cap",
        ))
    else:
        recs = []
        ok = True
        for t in vcs:
            ideal_ok = s.is_ideal(set(t) | {0})
            recs.append({"cutset": sorted(t), "ideal": ideal_ok})
            ok = ok and ideal_ok
        clauses.append(_v(
            "thm-2.2-minimal-vertex-cutsets", True, ok,
            {"size_cap": size_cap, "cutsets": recs},
            "every minimal vertex cutset with 0 forms an ideal",
        ))

    ecs = minimal_edge_cutsets(g, size_cap) if g.n >= 2 and g.edge_count else ()
    if not ecs:
        clauses.append(_v(
            "cor-2.6-minimal-edge-cutsets", False, True,
            {"size_cap": size_cap}, "no minimal edge cutsets within the cap",
        ))
    else:
        recs = []
        ok = True
        for cut in ecs:
            comps = [
                frozenset(g.vertices[i] for i in c)
                for c in components_without_edges(g, cut)
            ]
            vt = sorted({v for e in cut for v in e})
            vt_full = set(vt) | {0}
            side_recs = []
            cut_ok = True
            for comp in sorted(comps, key=min):
                crossing = sorted(set(vt) & comp)
                rec = {"side": sorted(comp), "endpoints": crossing}
                if len(comp) >= 2:
                    contained = {
                        x: sorted(_orbit(s, x) - vt_full) for x in crossing
                    }
                    bad = {x: esc for x, esc in contained.items() if esc}
                    rec["orbit_escapes"] = bad
                    rec["literal_side_ideal"] = s.is_ideal(set(crossing) | {0})
                    cut_ok = cut_ok and not bad
                side_recs.append(rec)
            both_big = all(len(c) >= 2 for c in comps)
            full_ideal = s.is_ideal(vt_full)
            if both_big:
                cut_ok = cut_ok and full_ideal
            recs.append({
                "cutset": [list(e) for e in cut],
                "sides": side_recs,
                "both_sides_large": both_big,
                "endpoint_union_ideal": full_ideal,
            })
            ok = ok and cut_ok
        clauses.append(_v(
            "cor-2.6-minimal-edge-cutsets", True, ok,
            {"size_cap": size_cap, "cutsets": recs},
            "endpoints on a side with >= 2 vertices satisfy Sx within "
            "V(T)+{0}; with both sides that large V(T)+{0} is an ideal "
            "(per-side literal ideal outcomes are witness data only)",
        ))

    return _composite("cut-structures", clauses)


# -- bridges ------------------------------------------------------------------


def check_bridge(s) -> Verdict:
    """Bridge edges force tiny ideals around their endpoints."""
    g = gamma(s)
    brs = bridges(g)
    two_recs = []
    leaf_recs = []
    two_ok = True
    leaf_ok = True
    minimal_members = None
    for (x, y) in brs:
        comps = components_without_edges(g, [(x, y)])
        sizes = {
            v: len(next(c for c in comps if g.position(v) in c)) for v in (x, y)
        }
        if sizes[x] >= 2 and sizes[y] >= 2:
            if minimal_members is None:
                minimal_members = {m.members for m in s.minimal_ideals()}
            sx, sy = _orbit(s, x), _orbit(s, y)
            ok = sx == {0, x} and sy == {0, y}
            two_recs.append({
                "bridge": [x, y],
                "Sx": sorted(sx),
                "Sy": sorted(sy),
                "minimal_ideals": [
                    frozenset({0, v}) in minimal_members for v in (x, y)
                ],
            })
            two_ok = two_ok and ok
        else:
            literal = s.is_ideal({0, x, y})
            for w, z in ((x, y), (y, x)):
                if sizes[w] != 1:
                    continue
                sz = _orbit(s, z)
                ok = sz <= {0, w, z}
                if sizes[x] == 1 and sizes[y] == 1:  # graph is one edge
                    ok = ok and literal
                leaf_recs.append({
                    "bridge": [x, y],
                    "leaf": w,
                    "neighbor": z,
                    "S_neighbor": sorted(sz),
                    "literal_triple_ideal": literal,
                })
                leaf_ok = leaf_ok and ok
    clauses = [
        _v(
            "thm-2.5-bridge-two-sided", bool(two_recs), two_ok,
            {"bridges": two_recs},
            "with >= 2 vertices on both sides, Sx = {0,x} and Sy = {0,y} "
            "are minimal ideals",
        ),
        _v(
            "thm-2.5-bridge-leaf", bool(leaf_recs), leaf_ok,
            {"bridges": leaf_recs},
            "a degree-1 endpoint w with neighbor z forces Sz within {0,w,z}; "
            "{0,w,z} being an ideal is required only when the graph is that "
            "single edge (otherwise recorded as witness data)",
        ),
    ]
    return _composite("bridges", clauses)


# -- annihilators and associated primes ----------------------------------------


def _associated_prime_witnesses(s):
    """Each associated prime with every nonzero element realizing it."""
    primes = [es.members for _, es in s.associated_primes()]
    witnesses = []
    for p in primes:
        witnesses.append(
            sorted(x for x in range(1, s.n) if s.annihilator(x).members == p)
        )
    return primes, witnesses


def check_ass_properties(s) -> Verdict:
    """Maximal annihilators are prime; associated primes shape the graph."""
    clauses = []

    maxanns = s.maximal_annihilators()
    if not maxanns:
        clauses.append(_v(
            "lem-2.8-maximal-annihilators", False, True, {},
            "no nonzero elements, hence no annihilators to inspect",
        ))
    else:
        recs = [
            {"witness": w, "annihilator": sorted(a.members),
             "prime": s.is_prime_ideal(a.members)}
            for w, a in maxanns
        ]
        clauses.append(_v(
            "lem-2.8-maximal-annihilators", True,
            all(r["prime"] for r in recs),
            {"maximal_annihilators": recs},
            "every inclusion-maximal annihilator of a nonzero element is prime",
        ))

    primes, witnesses = _associated_prime_witnesses(s)
    k = len(primes)
    ass_witness = {
        "associated_primes": [sorted(p) for p in primes],
        "realizing_elements": witnesses,
    }

    if k < 2:
        clauses.append(_v(
            "prop-2.9a-pairwise-products", False, True, ass_witness,
            "fewer than two associated primes",
        ))
    else:
        violations = []
        for i in range(k):
            for j in range(i + 1, k):
                for x in witnesses[i]:
                    for y in witnesses[j]:
                        if s.product(x, y) != 0:
                            violations.append([x, y])
        clauses.append(_v(
            "prop-2.9a-pairwise-products", True, not violations,
            dict(ass_witness, violations=violations),
            "elements realizing distinct associated primes multiply to 0",
        ))

    if k < 3:
        clauses.append(_v(
            "prop-2.9b-girth-3", False, True, {"count": k},
            "fewer than three associated primes",
        ))
    else:
        gi = girth(gamma(s))
        clauses.append(_v(
            "prop-2.9b-girth-3", True, gi == 3, {"count": k, "girth": gi},
            "three or more associated primes force girth 3",
        ))

    if k < 5:
        clauses.append(_v(
            "prop-2.9c-clique-5", False, True, {"count": k},
            "fewer than five associated primes",
        ))
    else:
        present = has_clique_of_size(gamma(s), 5)
        clauses.append(_v(
            "prop-2.9c-clique-5", True, present, {"count": k},
            "five or more associated primes force a 5-clique "
            "(a non-planarity witness)",
        ))

    return _composite("associated-primes", clauses, {"ass_count": k})


# -- complete multipartite structure -------------------------------------------


def _partition_conclusions(s, parts, zstar):
    """Part+0 ideal and complement-of-part prime, for every part."""
    recs = []
    ok = True
    for pv in parts:
        vset = set(pv)
        ideal_ok = s.is_ideal(vset | {0})
        prime_ok = s.is_prime_ideal((zstar - vset) | {0})
        recs.append({
            "part": sorted(vset),
            "part_ideal": ideal_ok,
            "complement_prime": prime_ok,
        })
        ok = ok and ideal_ok and prime_ok
    return ok, recs


def check_rpartite(s) -> Verdict:
    """Complete multipartite graphs reflect into ideal structure."""
    g = gamma(s)
    part = complete_multipartite_partition(g) if g.n else None
    parts = part.parts if part is not None and part.parts else None
    zstar = set(g.vertices)
    reduced = s.is_reduced()
    squares_nonzero = all(s.product(x, x) != 0 for x in range(1, s.n))
    part_sizes = sorted(len(p) for p in parts) if parts else None
    clauses = []

    if parts is None:
        na = {"partition": None}
        clauses.append(_v(
            "thm-3.1-parts-ideals-primes", False, True, na,
            "graph is empty or not complete multipartite",
        ))
        clauses.append(_v(
            "rem-3.2a-weakened-hypothesis", False, True, na,
            "graph is empty or not complete multipartite",
        ))
    else:
        witness_parts = [sorted(p) for p in parts]
        if not reduced:
            clauses.append(_v(
                "thm-3.1-parts-ideals-primes", False, True,
                {"partition": witness_parts, "reduced": False},
                "semigroup is not reduced",
            ))
        else:
            ok, recs = _partition_conclusions(s, parts, zstar)
            clauses.append(_v(
                "thm-3.1-parts-ideals-primes", True, ok, {"parts": recs},
                "reduced and complete multipartite: each part with 0 is an "
                "ideal and each complement is a prime ideal",
            ))
        if not squares_nonzero:
            clauses.append(_v(
                "rem-3.2a-weakened-hypothesis", False, True,
                {"partition": witness_parts, "squares_nonzero": False},
                "some nonzero element squares to zero",
            ))
        else:
            ok, recs = _partition_conclusions(s, parts, zstar)
            clauses.append(_v(
                "rem-3.2a-weakened-hypothesis", True, ok, {"parts": recs},
                "nonzero squares stay nonzero: the partition conclusions "
                "follow as under reducedness",
            ))

    if reduced and g.n >= 1 and g.is_bipartite():
        clauses.append(_v(
            "rem-3.2b-complete-bipartite", True,
            parts is not None and len(parts) == 2,
            {"partition": [sorted(p) for p in parts] if parts else None},
            "a reduced semigroup with bipartite graph has a complete "
            "bipartite graph",
        ))
    else:
        clauses.append(_v(
            "rem-3.2b-complete-bipartite", False, True, {},
            "inapplicable unless reduced with a nonempty bipartite graph",
        ))

    ass = s.associated_primes()
    if len(ass) == 2:
        p1, p2 = (es.members for _, es in ass)
        hyp = len(p1) >= 3 and len(p2) >= 3 and (p1 & p2) == {0}
    else:
        hyp = False
    if hyp:
        gi = girth(g)
        clauses.append(_v(
            "cor-3.3-girth-4", True, gi == 4,
            {"primes": [sorted(p1), sorted(p2)], "girth": gi},
            "two associated primes of size >= 3 meeting only in 0 force "
            "girth 4",
        ))
    else:
        clauses.append(_v(
            "cor-3.3-girth-4", False, True, {"ass_count": len(ass)},
            "needs exactly two associated primes of size >= 3 meeting "
            "only in 0",
        ))

    if parts is not None and all(sz >= 2 for sz in part_sizes):
        nil = [x for x in s.nilpotents() if x != 0]
        part_ideals = {
            tuple(sorted(p)): s.is_ideal(set(p) | {0}) for p in parts
        }
        nil_recs = {
            x: {"square_zero": s.product(x, x) == 0,
                "orbit": sorted(_orbit(s, x))}
            for x in nil
        }
        per_part_nil = [sum(1 for x in nil if x in p) for p in parts]
        ok = (
            all(part_ideals.values())
            and all(r["square_zero"] and set(r["orbit"]) <= {0, x}
                    for x, r in nil_recs.items())
            and all(c <= 1 for c in per_part_nil)
        )
        clauses.append(_v(
            "thm-3.6-reduced", True, ok,
            {
                "part_ideals": [
                    {"part": list(k), "ideal": v} for k, v in sorted(part_ideals.items())
                ],
                "nilpotents": [dict(r, element=x) for x, r in sorted(nil_recs.items())],
                "nilpotents_per_part": per_part_nil,
                "literal_reduced": reduced,
            },
            "all parts of size >= 2: each part with 0 is an ideal, nonzero "
            "nilpotents square to zero with Sx = {0,x}, and no part holds "
            "two of them; reducedness itself can fail and is recorded as "
            "witness data only",
        ))
    else:
        clauses.append(_v(
            "thm-3.6-reduced", False, True,
            {"part_sizes": part_sizes},
            "needs a complete multipartite graph with every part of size >= 2",
        ))

    return _composite(
        "rpartite", clauses,
        {"partition": [sorted(p) for p in parts] if parts else None},
    )


# -- chromatic and clique numbers ----------------------------------------------


def check_chromatic(s) -> Verdict:
    """Coloring facts, tied to prime decompositions of zero."""
    g = gamma(s)
    chi = chromatic_number(g)[0]
    omega = clique_number(g)[0]
    dec = s.zero_prime_decomposition()
    k = len(dec.primes) if dec is not None else None
    reduced = s.is_reduced()

    clauses = [
        _v(
            "fact-chi-ge-omega", True, omega <= chi,
            {"chi": chi, "omega": omega},
            "chromatic number is at least the clique number",
        ),
        _v(
            "thm-4.1-decomposition-exists", reduced, dec is not None,
            {"reduced": reduced, "prime_count": k},
            "a reduced semigroup decomposes zero as an intersection of primes",
        ),
        _v(
            "thm-4.1-coloring-bound", dec is not None,
            chi <= k if dec is not None else True,
            {"chi": chi, "prime_count": k},
            "a k-prime decomposition of zero yields a proper k-coloring",
        ),
        _v(
            "cor-4.2-chi-omega-count",
            reduced and dec is not None and dec.minimal and (k or 0) >= 2,
            chi == omega == k,
            {"chi": chi, "omega": omega, "prime_count": k},
            "reduced with a minimal decomposition into n >= 2 primes: "
            "chi = omega = n (a single prime allows an empty graph where "
            "both numbers are 0)",
        ),
        _v(
            "thm-4.4-chi-omega-small", chi <= 2 or omega <= 2,
            all((chi == n) == (omega == n) for n in (1, 2)),
            {"chi": chi, "omega": omega},
            "for n <= 2, chi = n exactly when omega = n",
        ),
    ]
    return _composite(
        "chromatic", clauses,
        {"chi": chi, "omega": omega, "prime_count": k},
    )


# -- aggregation ---------------------------------------------------------------


def run_all(s, size_cap: int = DEFAULT_SIZE_CAP) -> tuple[Verdict, ...]:
    """All checks in a fixed order."""
    return (
        check_nilpotent_subgraph(s),
        check_median_center_ideals(s),
        check_cut_structures(s, size_cap),
        check_bridge(s),
        check_ass_properties(s),
        check_rpartite(s),
        check_chromatic(s),
    )


def all_clauses(verdicts) -> tuple[Verdict, ...]:
    """Flatten composite verdicts into their clause verdicts."""
    out = []
    for v in verdicts:
        out.extend(v.clauses if v.clauses else (v,))
    return tuple(out)


def failures(verdicts) -> tuple[Verdict, ...]:
    """Applicable-and-failing clauses; counterexample candidates."""
    return tuple(c for c in all_clauses(verdicts) if c.failed)


def matches_selector(theorem_id: str, selector: str) -> bool:
    """True if a clause id matches a selector like "2.2", "2.9" or "all".

    Number tokens may carry a letter suffix ("2.9a"), which a bare
    numeric selector also matches. Full ids match themselves.
    """
    if selector in (None, "", "all"):
        return True
    if selector == theorem_id:
        return True
    for tok in theorem_id.split("-"):
        if tok == selector or tok.rstrip("abcdefghijklmnopqrstuvwxyz") == selector:
            return True
    return False
