"""Finite commutative semigroups with an absorbing zero.

Elements are the integers 0..n-1 and index 0 is always the zero element.
The multiplication table is the single source of truth; everything else
(ideals, annihilators, decompositions) is a pure, immutable view on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    EmptyPartListError,
    EmptySetError,
    MalformedTableError,
    OrderTooLargeError,
    ValidationError,
)

# role tags carried by ElementSet
GENERIC = "generic"
IDEAL = "ideal"
PRIME_IDEAL = "prime-ideal"
ANNIHILATOR = "annihilator"
ZERO_DIVISORS = "zero-divisors"
NILPOTENTS = "nilpotents"
PART = "part"

EXHAUSTIVE_ORDER_CAP = 16
POWERSET_GROUND_CAP = 5


@dataclass(frozen=True)
class CayleyTable:
    """Square multiplication table with optional display names.

    Immutable value object; equality and hashing go by entries and names.
    Index 0 is the zero element by convention (enforced by validate, not
    by the constructor).
    """

    order: int
    entries: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(str(x) for x in self.names))

    @classmethod
    def from_rows(cls, rows, names=None) -> "CayleyTable":
        rows = tuple(tuple(r) for r in rows)
        return cls(order=len(rows), entries=rows, names=tuple(names) if names else None)

    def relabeled(self, perm: tuple[int, ...]) -> "CayleyTable":
        """Apply a relabeling (perm[old] = new, perm[0] must be 0)."""
        n = self.order
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            row = self.entries[i]
            pi = perm[i]
            for j in range(n):
                new[pi][perm[j]] = perm[row[j]]
        names = None
        if self.names is not None:
            names = [""] * n
            for i in range(n):
                names[perm[i]] = self.names[i]
        return CayleyTable(order=n, entries=tuple(map(tuple, new)), names=names)


@dataclass(frozen=True)
class ElementSet:
    """A subset of semigroup elements with a role tag.

    Role tags other than "generic" are only attached by operations that
    actually checked the corresponding predicate.
    """

    members: frozenset[int]
    role: str = GENERIC

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class PrimeDecomposition:
    """A family of prime ideals whose intersection is the zero ideal."""

    primes: tuple[ElementSet, ...]
    minimal: bool


def _check_shape(table: CayleyTable) -> None:
    n = table.order
    if n < 1:
        raise MalformedTableError("order must be at least 1, got %r" % (n,))
    if len(table.entries) != n:
        raise MalformedTableError("expected %d rows, got %d" % (n, len(table.entries)))
    for i, row in enumerate(table.entries):
        if len(row) != n:
            raise MalformedTableError("row %d has length %d, expected %d" % (i, len(row), n))
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not (0 <= v < n):
                raise MalformedTableError(
                    "entry at (%d, %d) is %r, expected an integer in 0..%d" % (i, j, v, n - 1)
                )
    if table.names is not None:
        if len(table.names) != n:
            raise MalformedTableError(
                "expected %d names, got %d" % (n, len(table.names))
            )
        if len(set(table.names)) != n:
            raise MalformedTableError("names must be distinct")
        for nm in table.names:
            if not nm or any(c.isspace() for c in nm):
                raise MalformedTableError("name %r is empty or contains whitespace" % (nm,))


def validate(table: CayleyTable, max_violations: int = 20) -> "Semigroup":
    """Check the semigroup laws and wrap the table on success.

    Verifies that 0 is absorbing, the table is commutative and the
    operation is associative, reporting every violated pair/triple up to
    ``max_violations``. Raises MalformedTableError for shape problems and
    ValidationError for law violations.
    """
    _check_shape(table)
    n = table.order
    t = table.entries

    def name(x):
        return table.names[x] if table.names else str(x)

    violations = []
    truncated = False

    def add(kind, args, text):
        nonlocal truncated
        if len(violations) < max_violations:
            violations.append((kind, args, text))
        else:
            truncated = True

    for x in range(n):
        if t[0][x] != 0 or t[x][0] != 0:
            add("zero-not-absorbing", (x,), "0*%s or %s*0 is not 0" % (name(x), name(x)))
    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                add(
                    "not-commutative",
                    (x, y),
                    "%s*%s = %s but %s*%s = %s"
                    % (name(x), name(y), name(t[x][y]), name(y), name(x), name(t[y][x])),
                )
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            for z in range(n):
                left = t[xy][z]
                right = t[x][t[y][z]]
                if left != right:
                    add(
                        "not-associative",
                        (x, y, z),
                        "(%s*%s)*%s = %s but %s*(%s*%s) = %s"
                        % (name(x), name(y), name(z), name(left),
                           name(x), name(y), name(z), name(right)),
                    )
    if violations:
        head = "; ".join(v[2] for v in violations[:3])
        more = len(violations) - 3
        if more > 0 or truncated:
            head += "; ... and further violations"
        raise ValidationError(head, violations, truncated)
    return Semigroup(table)


class Semigroup:
    """A validated commutative semigroup with absorbing zero.

    Construct through validate() unless the table is known to be valid.
    Instances are immutable and safe to share; derived data is cached.
    """

    def __init__(self, table: CayleyTable):
        self.table = table
        self.n = table.order
        self._rows = table.entries

    # -- basics ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Semigroup) and self.table.entries == other.table.entries

    def __hash__(self):
        return hash(self.table.entries)

    def __repr__(self):
        return "Semigroup(order=%d)" % self.n

    @property
    def elements(self) -> range:
        return range(self.n)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        if self.table.names is not None:
            return self.table.names
        return ("0",) + tuple("x%d" % i for i in range(1, self.n))

    def label(self, x: int) -> str:
        return self.labels[x]

    def _check_element(self, x) -> None:
        if not isinstance(x, int) or isinstance(x, bool) or not (0 <= x < self.n):
            raise MalformedTableError("element %r is not an index in 0..%d" % (x, self.n - 1))

    def product(self, x: int, y: int) -> int:
        self._check_element(x)
        self._check_element(y)
        return self._rows[x][y]

    def element_set(self, members, role: str = GENERIC) -> ElementSet:
        members = frozenset(members)
        for x in members:
            self._check_element(x)
        return ElementSet(members, role)

    # -- zero divisors and nilpotents -----------------------------------

    @cached_property
    def _zero_divisor_tuple(self) -> tuple[int, ...]:
        out = []
        for x in range(1, self.n):
            row = self._rows[x]
            if any(row[y] == 0 for y in range(1, self.n)):
                out.append(x)
        return tuple(out)

    def zero_divisors(self) -> ElementSet:
        """Z(S): elements with a nonzero annihilating partner, plus 0."""
        return ElementSet(frozenset((0,) + self._zero_divisor_tuple), ZERO_DIVISORS)

    def nonzero_zero_divisors(self) -> ElementSet:
        """Z(S)*, the vertex set of the zero-divisor graph."""
        return ElementSet(frozenset(self._zero_divisor_tuple), ZERO_DIVISORS)

    @cached_property
    def _nilpotent_tuple(self) -> tuple[int, ...]:
        out = [0]
        for x in range(1, self.n):
            p = x
            for _ in range(self.n):  # x^k = 0 forces k <= n in a finite semigroup
                p = self._rows[p][x]
                if p == 0:
                    out.append(x)
                    break
        return tuple(out)

    def nilpotents(self) -> ElementSet:
        """N(S) = {x : x^k = 0 for some k}; always contains 0."""
        return ElementSet(frozenset(self._nilpotent_tuple), NILPOTENTS)

    def is_reduced(self) -> bool:
        """True iff 0 is the only nilpotent element."""
        return self._nilpotent_tuple == (0,)

    # -- ideals ----------------------------------------------------------

    def annihilator(self, x: int) -> ElementSet:
        """Ann(x) = {y : xy = 0}; always contains 0."""
        self._check_element(x)
        row = self._rows[x]
        return ElementSet(frozenset(y for y in range(self.n) if row[y] == 0), ANNIHILATOR)

    def _members(self, t) -> frozenset[int]:
        members = frozenset(t.members if isinstance(t, ElementSet) else t)
        if not members:
            raise EmptySetError("element set must be non-empty")
        for x in members:
            self._check_element(x)
        return members

    def is_ideal(self, t) -> bool:
        """True iff xS is contained in t for every x in t."""
        members = self._members(t)
        rows = self._rows
        for x in members:
            row = rows[x]
            for r in range(self.n):
                if row[r] not in members:
                    return False
        return True

    def is_prime_ideal(self, p) -> bool:
        """True iff p is an ideal and xSy in p forces x in p or y in p.

        A non-ideal input simply returns False. The quantifier runs over
        all of S, not only over zero divisors.
        """
        members = self._members(p)
        if not self.is_ideal(members):
            return False
        rows = self._rows
        outside = [x for x in range(self.n) if x not in members]
        for i, x in enumerate(outside):
            xr = rows[x]
            for y in outside[i:]:
                # prime demands some s with xsy outside p
                if all(rows[xr[s]][y] in members for s in range(self.n)):
                    return False
        return True

    def principal_ideal(self, x: int) -> ElementSet:
        """Smallest ideal containing x, i.e. Sx together with x itself."""
        self._check_element(x)
        members = {x}
        members.update(self._rows[r][x] for r in range(self.n))
        return ElementSet(frozenset(members), IDEAL)

    def minimal_ideals(self) -> tuple[ElementSet, ...]:
        """All nonzero ideals containing no strictly smaller nonzero ideal.

        Every minimal nonzero ideal is principal, so inclusion-minimal
        principal ideals of nonzero elements are exactly the answer.
        """
        principals = {self.principal_ideal(x).members for x in range(1, self.n)}
        minimal = [
            p for p in principals
            if not any(q < p for q in principals)
        ]
        minimal.sort(key=sorted)
        return tuple(ElementSet(p, IDEAL) for p in minimal)

    # -- associated primes ------------------------------------------------

    @cached_property
    def _annihilator_witnesses(self) -> tuple[tuple[int, frozenset[int]], ...]:
        """(x, Ann(x)) for nonzero x, deduplicated keeping the least witness."""
        seen = {}
        for x in range(1, self.n):
            ann = self.annihilator(x).members
            if ann not in seen:
                seen[ann] = x
        return tuple(sorted(((w, a) for a, w in seen.items())))

    def associated_primes(self) -> tuple[tuple[int, ElementSet], ...]:
        """All pairs (x, Ann(x)) with x nonzero and Ann(x) a prime ideal.

        Deduplicated by set equality; the least witness is retained and
        the result is ordered by witness.
        """
        out = []
        for w, ann in self._annihilator_witnesses:
            if self.is_prime_ideal(ann):
                out.append((w, ElementSet(ann, PRIME_IDEAL)))
        return tuple(out)

    def maximal_annihilators(self) -> tuple[tuple[int, ElementSet], ...]:
        """Inclusion-maximal annihilators of nonzero elements.

        These are always prime ideals; the structure checkers re-verify
        that through is_prime_ideal rather than trusting the tag.
        """
        pairs = self._annihilator_witnesses
        out = []
        for w, ann in pairs:
            if not any(ann < other for _, other in pairs):
                out.append((w, ElementSet(ann, PRIME_IDEAL)))
        return tuple(out)

    # -- zero as an intersection of primes ---------------------------------

    def all_prime_ideals(self) -> tuple[ElementSet, ...]:
        """Every prime ideal of S, by subset enumeration (order <= 16)."""
        if self.n > EXHAUSTIVE_ORDER_CAP:
            raise OrderTooLargeError(
                "prime ideal enumeration is capped at order %d, got %d"
                % (EXHAUSTIVE_ORDER_CAP, self.n)
            )
        found = []
        nonzero = list(range(1, self.n))
        # ideals always contain 0, so only subsets of S\{0} are extended
        for k in range(0, self.n):
            for combo in itertools.combinations(nonzero, k):
                cand = frozenset((0,) + combo)
                if self.is_prime_ideal(cand):
                    found.append(cand)
        found.sort(key=sorted)
        return tuple(ElementSet(p, PRIME_IDEAL) for p in found)

    @staticmethod
    def _intersect(sets) -> frozenset[int]:
        it = iter(sets)
        out = next(it)
        for s in it:
            out = out & s
        return out

    def _reduce_decomposition(self, primes: list[frozenset[int]]) -> list[frozenset[int]]:
        """Drop redundant primes greedily, smallest-index-first."""
        zero = frozenset({0})
        kept = list(primes)
        i = 0
        while i < len(kept):
            rest = kept[:i] + kept[i + 1:]
            if rest and self._intersect(rest) == zero:
                kept = rest
            else:
                i += 1
        return kept

    def zero_prime_decomposition(self, mode: str = "fast") -> PrimeDecomposition | None:
        """Express {0} as an intersection of prime ideals, if possible.

        fast mode intersects the maximal annihilators (always primes) and
        succeeds iff that intersection is {0}. exhaustive mode enumerates
        all prime ideals (order <= 16) and returns a smallest family.
        Returns None when no decomposition exists.
        """
        zero = frozenset({0})
        if mode == "fast":
            if self.n == 1:
                kept = [zero]  # {0} = S is itself a (vacuous) prime ideal
            else:
                primes = sorted(
                    {es.members for _, es in self.maximal_annihilators()}, key=sorted
                )
                if not primes or self._intersect(primes) != zero:
                    return None
                kept = self._reduce_decomposition(primes)
        elif mode == "exhaustive":
            primes = [p.members for p in self.all_prime_ideals()]
            if not primes or self._intersect(primes) != zero:
                return None
            upper = len(self._reduce_decomposition(primes))
            kept = None
            for k in range(1, upper + 1):
                for combo in itertools.combinations(primes, k):
                    if self._intersect(combo) == zero:
                        kept = list(combo)
                        break
                if kept is not None:
                    break
        else:
            raise ValueError("mode must be 'fast' or 'exhaustive', got %r" % (mode,))
        return PrimeDecomposition(
            primes=tuple(ElementSet(p, PRIME_IDEAL) for p in kept),
            minimal=True,
        )


# -- builders -------------------------------------------------------------


def _default_names(n: int) -> tuple[str, ...]:
    return ("0",) + tuple("x%d" % i for i in range(1, n))


def null_semigroup(n: int) -> Semigroup:
    """Order-n semigroup where every product is 0."""
    if n < 1:
        raise ValueError("order must be at least 1, got %r" % (n,))
    entries = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    return validate(CayleyTable(order=n, entries=entries, names=_default_names(n)))


def powerset_semigroup(n: int) -> Semigroup:
    """Subsets of an n-element set under intersection; empty set is zero.

    Elements are indexed by bitmask, so the product is bitwise AND.
    """
    if not (1 <= n <= POWERSET_GROUND_CAP):
        raise OrderTooLargeError(
            "ground set size must be in 1..%d, got %r" % (POWERSET_GROUND_CAP, n)
        )
    order = 1 << n
    entries = tuple(tuple(i & j for j in range(order)) for i in range(order))
    names = ["0"]
    for mask in range(1, order):
        names.append("{%s}" % ",".join(str(b + 1) for b in range(n) if mask >> b & 1))
    return validate(CayleyTable(order=order, entries=entries, names=names))


def group_with_zero(n: int) -> Semigroup:
    """Cyclic group of order n-1 with a zero adjoined; no zero divisors."""
    if n < 2:
        raise ValueError("order must be at least 2, got %r" % (n,))
    m = n - 1
    entries = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            entries[1 + i][1 + j] = 1 + (i + j) % m
    names = ["0", "e"] + ["g" if k == 1 else "g%d" % k for k in range(1, m)]
    return validate(CayleyTable(order=n, entries=tuple(map(tuple, entries)), names=names))


def orthogonal_union(parts) -> Semigroup:
    """0-orthogonal union: shared zero, cross products all zero.

    Element indexing is 0, then the nonzero elements of each part in
    order. Part labels get a ".k" suffix so names stay distinct.
    """
    parts = list(parts)
    if len(parts) < 2:
        raise EmptyPartListError("a 0-orthogonal union needs at least two parts")
    offsets = []
    total = 1
    for p in parts:
        offsets.append(total - 1)  # part element x>=1 lands at offset + x
        total += p.n - 1
    entries = [[0] * total for _ in range(total)]
    names = ["0"]
    for k, p in enumerate(parts):
        off = offsets[k]
        for x in range(1, p.n):
            names.append("%s.%d" % (p.label(x), k + 1))
            for y in range(1, p.n):
                v = p.product(x, y)
                entries[off + x][off + y] = 0 if v == 0 else off + v
    return validate(CayleyTable(order=total, entries=tuple(map(tuple, entries)), names=names))
