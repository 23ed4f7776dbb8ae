"""The cut-profile expansion: the monoid of reachable profiles at a fixed
arity, projecting back onto the base monoid.

Two words are identified exactly when their cut profiles agree; that
identification is a finite-index congruence refining the word-image
kernel, so the reachable profiles form a monoid and the profile-to-image
map eta is a morphism onto the generated submonoid.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from .monoid import (CapExceeded, FiniteMonoid, GeneratorMap, InputError,
                     configured_cap)
from .words import CutProfile

DEFAULT_PROFILE_CAP = 20_000


def letter_profile(M: FiniteMonoid, g: GeneratorMap, a: str, n: int) -> CutProfile:
    """Profile of a single letter: its image in one slot, identity elsewhere."""
    if n < 1:
        raise InputError("arity must be >= 1")
    x = g.image(a)
    e = M.identity
    return CutProfile.make(
        n, ((e,) * k + (x,) + (e,) * (n - 1 - k) for k in range(n)))


def _last_nonidentity(t: tuple[int, ...], e: int) -> int:
    for k in range(len(t) - 1, -1, -1):
        if t[k] != e:
            return k
    return -1


def profile_product(M: FiniteMonoid, n: int, s: CutProfile, t: CutProfile) -> CutProfile:
    """Merge two profiles at every cut index.

    A tuple of the product glues a prefix reading of s to a suffix reading
    of t, multiplying the two slots that meet at the glue point; identity
    padding supplies the shorter readings.  Equals the profile of the
    concatenation when s and t are word profiles.
    """
    if s.n != n or t.n != n:
        raise InputError("profile arity mismatch")
    e = M.identity
    table = M.table
    out = set()
    tt = [(tup, _last_nonidentity(tup, e)) for tup in t.tuples]
    for stup in s.tuples:
        lo = max(1, _last_nonidentity(stup, e) + 1)
        for ttup, pt in tt:
            hi = n if pt < 0 else n - pt
            for i in range(lo, hi + 1):
                out.add(stup[:i - 1] + (table[stup[i - 1]][ttup[0]],) + ttup[1:n - i + 1])
    return CutProfile.make(n, out)


def identity_profile(M: FiniteMonoid, n: int) -> CutProfile:
    return CutProfile.make(n, [(M.identity,) * n])


def word_profile(M: FiniteMonoid, g: GeneratorMap, w: str, n: int) -> CutProfile:
    """Profile of a word as a fold of letter profiles under profile_product."""
    if n < 1:
        raise InputError("arity must be >= 1")
    acc = identity_profile(M, n)
    for ch in w:
        acc = profile_product(M, n, acc, letter_profile(M, g, ch, n))
    return acc


def _tuple_image(M: FiniteMonoid, t: tuple[int, ...]) -> int:
    acc = M.identity
    for x in t:
        acc = M.table[acc][x]
    return acc


@dataclass(frozen=True)
class ExpandedMonoid:
    """The monoid of reachable cut profiles, with the projection eta onto
    the base and a shortlex-least representative word per profile."""

    base: FiniteMonoid
    gmap: GeneratorMap
    n: int
    profiles: tuple[CutProfile, ...]
    table: tuple[tuple[int, ...], ...]
    eta: tuple[int, ...]
    representatives: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.profiles)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def index(self) -> dict[CutProfile, int]:
        return {p: i for i, p in enumerate(self.profiles)}

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(f"P{i}" for i in range(self.order))

    def as_monoid(self) -> FiniteMonoid:
        return FiniteMonoid(self.names, 0, self.table, words=self.representatives)

    def fiber(self, e: int) -> tuple[int, ...]:
        """All profiles projecting onto the base element e."""
        return tuple(x for x in range(self.order) if self.eta[x] == e)


def build_expansion(
    M: FiniteMonoid,
    g: GeneratorMap,
    n: int,
    cap: int | None = None,
    jobs: int = 1,
) -> ExpandedMonoid:
    """Breadth-first closure of the identity and letter profiles under
    profile products.

    Numbering is canonical: each generation of newly reached profiles is
    sorted by encoding before numbering, so the result is independent of
    scheduling; representatives are shortlex-least words.  A non-generating
    map is fine: the result is the expansion of the generated submonoid.
    """
    if n < 1:
        raise InputError("arity must be >= 1")
    cap = configured_cap(DEFAULT_PROFILE_CAP) if cap is None else cap
    ident = identity_profile(M, n)
    letters = [(a, letter_profile(M, g, a, n)) for a in g.alphabet]
    profiles = [ident]
    words = [""]
    index: dict[CutProfile, int] = {ident: 0}
    frontier = [0]
    while frontier:
        def expand(i: int):
            return [(a, profile_product(M, n, profiles[i], lp)) for a, lp in letters]

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(expand, frontier))
        else:
            batches = [expand(i) for i in frontier]
        found: dict[CutProfile, str] = {}
        for i, batch in zip(frontier, batches):
            for a, q in batch:
                if q in index:
                    continue
                cand = words[i] + a
                prev = found.get(q)
                if prev is None or cand < prev:
                    found[q] = cand
        new = sorted(found, key=lambda p: p.tuples)
        for q in new:
            if len(profiles) >= cap:
                raise CapExceeded(
                    f"expansion exceeded cap of {cap} profiles", len(profiles))
            index[q] = len(profiles)
            profiles.append(q)
            words.append(found[q])
        frontier = [index[q] for q in new]

    eta = []
    for p in profiles:
        vals = {_tuple_image(M, t) for t in p.tuples}
        assert len(vals) == 1  # every tuple of a profile multiplies to one image
        eta.append(vals.pop())
    table = []
    for p in profiles:
        row = []
        for q in profiles:
            r = profile_product(M, n, p, q)
            k = index.get(r)
            assert k is not None, "profiles are not closed under product"
            row.append(k)
        table.append(tuple(row))
    return ExpandedMonoid(M, g, n, tuple(profiles), tuple(table),
                          tuple(eta), tuple(words))


def check_eta_aperiodic(E: ExpandedMonoid) -> tuple[bool, tuple[int, int] | None]:
    """Aperiodicity of the projection: over each idempotent of the base,
    the preimage is an aperiodic subsemigroup.  Witness is (base idempotent,
    offending profile index)."""
    EM = E.as_monoid()
    for e in E.base.idempotents():
        for x in E.fiber(e):
            xo = EM.omega_power(x)
            if EM.table[xo][x] != xo:
                return False, (e, x)
    return True, None


def check_refinement(E_hi: ExpandedMonoid, E_lo: ExpandedMonoid) -> bool:
    """Truncation via padding maps the arity-(n+1) expansion onto the
    arity-n one; verify it is a well-defined surjective morphism commuting
    with eta."""
    if E_hi.base != E_lo.base or E_hi.gmap != E_lo.gmap:
        raise InputError("expansions have different bases or generators")
    if E_hi.n != E_lo.n + 1:
        raise InputError("refinement needs arities n+1 and n")
    e = E_hi.base.identity
    n = E_lo.n
    f = []
    for p in E_hi.profiles:
        q = CutProfile.make(n, (t[:-1] for t in p.tuples if t[-1] == e))
        k = E_lo.index.get(q)
        if k is None:
            return False
        f.append(k)
    if set(f) != set(range(E_lo.order)):
        return False
    if f[0] != 0:
        return False
    if any(E_lo.eta[f[i]] != E_hi.eta[i] for i in range(E_hi.order)):
        return False
    for i in range(E_hi.order):
        hi_row = E_hi.table[i]
        for j in range(E_hi.order):
            if f[hi_row[j]] != E_lo.table[f[i]][f[j]]:
                return False
    return True
