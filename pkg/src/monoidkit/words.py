"""Free-monoid combinatorics: factorizations, cut profiles, factor location.

Words are plain strings of single-character letters; empty factors are
allowed everywhere and evaluate to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .monoid import FiniteMonoid, GeneratorMap, InputError


def factorizations(w: str, n: int) -> Iterator[tuple[str, ...]]:
    """All n-part factorizations of w, in lexicographic order of the
    cut-position vectors.  There are C(|w|+n-1, n-1) of them."""
    if n < 1:
        raise InputError("arity must be >= 1")
    L = len(w)
    for cuts in combinations_with_replacement(range(L + 1), n - 1):
        bounds = (0, *cuts, L)
        yield tuple(w[bounds[k]:bounds[k + 1]] for k in range(n))


def word_image(M: FiniteMonoid, g: GeneratorMap, w: str) -> int:
    """Image of a word under the letter map extended to a morphism."""
    acc = M.identity
    for ch in w:
        acc = M.table[acc][g.image(ch)]
    return acc


def segment_images(M: FiniteMonoid, g: GeneratorMap, w: str) -> list[list[int]]:
    """seg[i][j] = image of w[i:j]; quadratic precompute for repeated lookups."""
    L = len(w)
    imgs = [g.image(ch) for ch in w]
    seg = [[M.identity] * (L + 1) for _ in range(L + 1)]
    for i in range(L + 1):
        acc = M.identity
        row = seg[i]
        for j in range(i, L):
            acc = M.table[acc][imgs[j]]
            row[j + 1] = acc
    return seg


@dataclass(frozen=True)
class CutProfile:
    """The set of n-tuples of part images over all n-part factorizations
    of some word.

    Canonical encoding: tuples deduplicated and sorted ascending; equality
    is encoding equality.
    """

    n: int
    tuples: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, n: int, tuples: Iterable[tuple[int, ...]]) -> "CutProfile":
        return cls(n, tuple(sorted(set(tuples))))


def cut_brute(M: FiniteMonoid, g: GeneratorMap, w: str, n: int) -> CutProfile:
    """Profile by enumerating every factorization; the oracle implementation."""
    if n < 1:
        raise InputError("arity must be >= 1")
    seg = segment_images(M, g, w)
    L = len(w)
    out = set()
    for cuts in combinations_with_replacement(range(L + 1), n - 1):
        bounds = (0, *cuts, L)
        out.add(tuple(seg[bounds[k]][bounds[k + 1]] for k in range(n)))
    return CutProfile.make(n, out)


def cut(M: FiniteMonoid, g: GeneratorMap, w: str, n: int) -> CutProfile:
    """Profile by letter extension: appending a letter multiplies it into
    the last non-padding slot or starts any later slot."""
    if n < 1:
        raise InputError("arity must be >= 1")
    e = M.identity
    table = M.table
    tuples = {(e,) * n}
    for ch in w:
        x = g.image(ch)
        nxt = set()
        for t in tuples:
            p = -1
            for k in range(n - 1, -1, -1):
                if t[k] != e:
                    p = k
                    break
            for j in range(max(1, p + 1), n + 1):
                nxt.add(t[:j - 1] + (table[t[j - 1]][x],) + (e,) * (n - j))
        tuples = nxt
    return CutProfile.make(n, tuples)


def match_factorization(
    M: FiniteMonoid, g: GeneratorMap, w: str, targets: Sequence[int],
) -> tuple[str, ...] | None:
    """The factorization with the least cut vector whose part images equal
    targets, or None when targets is not in the cut profile."""
    targets = tuple(targets)
    n = len(targets)
    if n < 1:
        raise InputError("need at least one target")
    seg = segment_images(M, g, w)
    L = len(w)
    for cuts in combinations_with_replacement(range(L + 1), n - 1):
        bounds = (0, *cuts, L)
        if all(seg[bounds[k]][bounds[k + 1]] == targets[k] for k in range(n)):
            return tuple(w[bounds[k]:bounds[k + 1]] for k in range(n))
    return None


@dataclass(frozen=True)
class FactorWitness:
    """Locates part j of one factorization inside part i of another.

    i and j are 1-based part indices; offset is the 0-based start of the
    occurrence inside the u part.  For a non-empty located part the
    occurrence is position-aligned: in the common base word, the part's
    span lies inside the span of the enclosing u part.
    """

    i: int
    j: int
    offset: int


def lemma_factor(us: Sequence[str], vs: Sequence[str]) -> FactorWitness:
    """Given two factorizations u_1..u_m = v_1..v_n of one word with m <= n,
    locate some v_j inside some u_i.

    Constructive and deterministic: an empty v part wins immediately
    (least j, then i = 1); otherwise map each v part to the non-empty u
    part holding its last letter.  The map is monotone, so either two
    consecutive v parts share a u part (v_j sits inside it, aligned) or
    the map is a bijection and v_1 is a prefix of the first non-empty u.
    """
    us = tuple(us)
    vs = tuple(vs)
    m, n = len(us), len(vs)
    if m < 1:
        raise InputError("need at least one part")
    if m > n:
        raise InputError(f"first factorization has more parts ({m} > {n})")
    w = "".join(us)
    if "".join(vs) != w:
        raise InputError("factorizations concatenate to different words")
    for j, v in enumerate(vs):
        if not v:
            return FactorWitness(1, j + 1, 0)
    spans = []  # (original index, start, end) of the non-empty u parts
    pos = 0
    for i, u in enumerate(us):
        if u:
            spans.append((i, pos, pos + len(u)))
        pos += len(u)
    f = []  # for each v part, the span holding its last letter
    k = 0
    pos = 0
    for v in vs:
        last = pos + len(v) - 1
        while spans[k][2] <= last:
            k += 1
        f.append(k)
        pos += len(v)
    vstart = 0
    for j in range(1, n):
        vstart += len(vs[j - 1])
        if f[j - 1] == f[j]:
            orig, start, _end = spans[f[j]]
            return FactorWitness(orig + 1, j + 1, vstart - start)
    # f injective: it is a monotone bijection, and v_1 is a position-aligned
    # prefix of the first non-empty u part (which starts at 0)
    return FactorWitness(spans[0][0] + 1, 1, 0)
