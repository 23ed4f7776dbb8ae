"""Finite monoids as explicit multiplication tables.

Element identity is by index; names are display labels.  A monoid and all
data derived from it are immutable after construction, so everything in
this module is safe to share between threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Sequence

DEFAULT_ELEMENT_CAP = 512


class InputError(ValueError):
    """Malformed input: bad file, unknown name, or a violated precondition."""


class CapExceeded(RuntimeError):
    """A closure computation grew past its configured cap."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


def configured_cap(default: int) -> int:
    """Default element/state cap, overridable via MONO_CAP."""
    raw = os.environ.get("MONO_CAP")
    return int(raw) if raw else default


def _check_name(name: str) -> None:
    if not name or "#" in name or any(ch.isspace() for ch in name):
        raise InputError(f"bad element name {name!r}")


@dataclass(frozen=True)
class FiniteMonoid:
    """A monoid given by its full multiplication table.

    ``table[x][y]`` is the index of x*y.  ``words`` optionally records a
    generator word per element, for monoids built by closure.
    """

    names: tuple[str, ...]
    identity: int
    table: tuple[tuple[int, ...], ...]
    words: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            raise InputError("negative exponent")
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][x]
        return acc

    def omega_power(self, x: int) -> int:
        """The unique idempotent among the positive powers of x."""
        p = x
        for _ in range(self.order):
            if self.table[p][p] == p:
                return p
            p = self.table[p][x]
        raise AssertionError("no idempotent power; is the table associative?")

    def is_idempotent(self, x: int) -> bool:
        return self.table[x][x] == x

    def idempotents(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if self.table[x][x] == x)

    def element(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown element {name!r}") from None

    def validate(self) -> None:
        """Check shape, associativity (naming a violating triple), identity."""
        n = len(self.names)
        if n == 0:
            raise InputError("monoid needs at least one element")
        for name in self.names:
            _check_name(name)
        if len(set(self.names)) != n:
            raise InputError("duplicate element names")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InputError("table is not order x order")
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise InputError(f"table entry {v} out of range")
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        na, nb, nc = self.names[a], self.names[b], self.names[c]
                        raise InputError(
                            f"not associative: ({na}*{nb})*{nc} != {na}*({nb}*{nc})")
        e = self.identity
        if not 0 <= e < n:
            raise InputError("identity index out of range")
        for x in range(n):
            if t[e][x] != x or t[x][e] != x:
                raise InputError(
                    f"{self.names[e]!r} is not an identity (fails at {self.names[x]!r})")


@dataclass(frozen=True)
class GeneratorMap:
    """Letters mapped to elements; the submonoid they generate is recorded."""

    alphabet: tuple[str, ...]
    images: tuple[int, ...]
    generated: tuple[int, ...]

    def image(self, letter: str) -> int:
        try:
            return self.images[self.alphabet.index(letter)]
        except ValueError:
            raise InputError(f"unknown letter {letter!r}") from None


def generator_map(M: FiniteMonoid, mapping: Mapping[str, int]) -> GeneratorMap:
    letters = tuple(mapping)
    images = tuple(mapping[a] for a in letters)
    for a in letters:
        if not a:
            raise InputError("empty letter")
    for x in images:
        if not 0 <= x < M.order:
            raise InputError(f"generator image {x} out of range")
    seen = {M.identity}
    frontier = [M.identity]
    while frontier:
        nxt = []
        for s in frontier:
            for x in images:
                v = M.table[s][x]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return GeneratorMap(letters, images, tuple(sorted(seen)))


def generate_from_transformations(
    degree: int,
    gens: Mapping[str, Sequence[int]],
    cap: int | None = None,
) -> tuple[FiniteMonoid, GeneratorMap]:
    """Close named maps on {0..degree-1} under composition, identity adjoined.

    Elements are ordered by shortlex-first generator word (generators in the
    given order) and each records that word.  Returns the monoid together
    with the name -> element generator map.
    """
    if degree < 1:
        raise InputError("degree must be >= 1")
    items = []
    for name, m in gens.items():
        _check_name(name)
        m = tuple(m)
        if len(m) != degree or any(not 0 <= v < degree for v in m):
            raise InputError(f"generator {name!r} is not a map on {degree} points")
        items.append((name, m))
    cap = configured_cap(DEFAULT_ELEMENT_CAP) if cap is None else cap
    ident = tuple(range(degree))
    elems = [ident]
    words = [""]
    index = {ident: 0}
    pos = 0
    while pos < len(elems):
        base = elems[pos]
        for name, m in items:
            nxt = tuple(m[base[p]] for p in range(degree))
            if nxt not in index:
                if len(elems) >= cap:
                    raise CapExceeded(
                        f"transformation closure exceeded cap of {cap} elements",
                        len(elems))
                index[nxt] = len(elems)
                elems.append(nxt)
                words.append(words[pos] + name)
        pos += 1
    names = tuple("1" if w == "" else w for w in words)
    if len(set(names)) != len(names):
        raise InputError("generator words collide as element names; rename generators")
    table = tuple(
        tuple(index[tuple(b[a[p]] for p in range(degree))] for b in elems)
        for a in elems)
    M = FiniteMonoid(names, 0, table, words=tuple(words))
    gm = generator_map(M, {name: index[m] for name, m in items})
    return M, gm


@dataclass(frozen=True)
class GreensData:
    """Green's relation partitions (class index per element) and the
    containment order on J-classes."""

    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    j_class: tuple[int, ...]
    h_class: tuple[int, ...]
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    j_leq: tuple[tuple[bool, ...], ...]


def _classify(keys) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    class_of = []
    classes: list[list[int]] = []
    seen: dict = {}
    for x, k in enumerate(keys):
        c = seen.get(k)
        if c is None:
            c = len(classes)
            seen[k] = c
            classes.append([])
        class_of.append(c)
        classes[c].append(x)
    return tuple(class_of), tuple(tuple(c) for c in classes)


@lru_cache(maxsize=None)
def greens(M: FiniteMonoid) -> GreensData:
    """Green's relations from the defining ideals xM, Mx, MxM."""
    n = M.order
    t = M.table
    rng = range(n)
    r_ideal = [frozenset(t[x]) for x in rng]
    l_ideal = [frozenset(t[y][x] for y in rng) for x in rng]
    j_ideal = [frozenset(t[t[u][x]][v] for u in rng for v in rng) for x in rng]
    r_of, r_classes = _classify(r_ideal)
    l_of, l_classes = _classify(l_ideal)
    j_of, j_classes = _classify(j_ideal)
    h_of, h_classes = _classify(list(zip(r_ideal, l_ideal)))
    reps = [cls[0] for cls in j_classes]
    j_leq = tuple(tuple(j_ideal[a] <= j_ideal[b] for b in reps) for a in reps)
    return GreensData(r_of, l_of, j_of, h_of,
                      r_classes, l_classes, j_classes, h_classes, j_leq)


def is_regular(M: FiniteMonoid, a: int) -> tuple[bool, int | None]:
    """Least b with a*b*a == a; cross-checked against the classical
    idempotent-in-the-R-class criterion."""
    t = M.table
    witness = None
    for b in range(M.order):
        if t[t[a][b]][a] == a:
            witness = b
            break
    gd = greens(M)
    via_r = any(M.is_idempotent(e) and gd.r_class[e] == gd.r_class[a]
                for e in range(M.order))
    assert (witness is not None) == via_r
    return witness is not None, witness


def is_aperiodic(M: FiniteMonoid) -> tuple[bool, int | None]:
    """x^omega == x^omega * x for every x; cross-checked against H triviality."""
    bad = None
    for a in range(M.order):
        w = M.omega_power(a)
        if M.table[w][a] != w:
            bad = a
            break
    h_trivial = all(len(c) == 1 for c in greens(M).h_classes)
    assert (bad is None) == h_trivial
    return bad is None, bad


def is_group_element(M: FiniteMonoid, a: int) -> bool:
    """a lies in the maximal subgroup of its H-class, i.e. a == a^omega * a."""
    w = M.omega_power(a)
    ok = M.table[w][a] == a
    gd = greens(M)
    assert ok == (gd.h_class[a] == gd.h_class[w])
    return ok


def ideal_generated(M: FiniteMonoid, gens: Iterable[int]) -> tuple[int, ...]:
    """The two-sided ideal {x*a*y : a in gens}, as a sorted element tuple."""
    gens = tuple(gens)
    if not gens:
        raise InputError("ideal needs at least one generator")
    t = M.table
    rng = range(M.order)
    out = {t[t[x][a]][y] for a in gens for x in rng for y in rng}
    return tuple(sorted(out))


def ideal_product(M: FiniteMonoid, I: Iterable[int], J: Iterable[int]) -> tuple[int, ...]:
    """{x*y : x in I, y in J}; an ideal inside both arguments when they are ideals."""
    t = M.table
    return tuple(sorted({t[x][y] for x in I for y in J}))


def is_ideal(M: FiniteMonoid, S: Iterable[int]) -> bool:
    s = set(S)
    if not s:
        return False
    t = M.table
    rng = range(M.order)
    return all(t[t[x][a]][y] in s for a in s for x in rng for y in rng)


def _require_ideal(M: FiniteMonoid, S: Iterable[int]) -> set[int]:
    s = set(S)
    if not is_ideal(M, s):
        raise InputError("input set is not an ideal")
    return s


def is_prime_ideal(M: FiniteMonoid, I: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    """No product of two outside elements may land inside; witness pair otherwise."""
    inside = _require_ideal(M, I)
    outside = [x for x in range(M.order) if x not in inside]
    for a in outside:
        for b in outside:
            if M.table[a][b] in inside:
                return False, (a, b)
    return True, None


def is_idempotent_ideal(M: FiniteMonoid, I: Iterable[int]) -> bool:
    inside = _require_ideal(M, I)
    return ideal_product(M, inside, inside) == tuple(sorted(inside))


def minimal_ideal(M: FiniteMonoid) -> tuple[int, ...]:
    """The kernel: the unique smallest ideal."""
    # The product of all elements lies in every ideal, so its principal
    # ideal is contained in every ideal and is itself one.
    p = reduce(M.mul, range(M.order), M.identity)
    return ideal_generated(M, (p,))
