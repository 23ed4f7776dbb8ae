"""Omega terms and finite shadow checks.

Terms extend words with integer powers and the omega power, which
evaluates to the idempotent power of its argument.  Shadow checks run, in
a single finite monoid, statements whose general form is not decidable by
finite computation; each check reports exactly what this monoid sees,
including honest failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .monoid import (FiniteMonoid, GeneratorMap, InputError, ideal_generated,
                     ideal_product, is_group_element)
from .words import FactorWitness, cut, lemma_factor, match_factorization, word_image


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Concat:
    parts: tuple["OmegaTerm", ...]


@dataclass(frozen=True)
class Power:
    base: "OmegaTerm"
    exponent: int


@dataclass(frozen=True)
class OmegaPower:
    base: "OmegaTerm"


OmegaTerm = Letter | Concat | Power | OmegaPower


class _Parser:
    """Recursive descent for: expr := factor+; factor := atom ['^' (int|'w')];
    atom := letter | '(' expr ')'.  Whitespace is ignored between tokens."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise InputError(f"term syntax error at position {self.pos}: {msg}")

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> OmegaTerm:
        t = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.text[self.pos]!r}")
        return t

    def expr(self) -> OmegaTerm:
        parts = [self.factor()]
        while True:
            ch = self.peek()
            if ch is None or ch == ")":
                break
            parts.append(self.factor())
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def factor(self) -> OmegaTerm:
        a = self.atom()
        if self.peek() == "^":
            self.pos += 1
            ch = self.peek()
            if ch == "w":
                self.pos += 1
                return OmegaPower(a)
            if ch is None or not ch.isdigit():
                self.error("expected an integer or w after ^")
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            k = int(self.text[start:self.pos])
            if k < 1:
                self.pos = start
                self.error("exponent must be at least 1")
            return Power(a, k)
        return a

    def atom(self) -> OmegaTerm:
        ch = self.peek()
        if ch is None:
            self.error("unexpected end of input")
        if ch == "(":
            self.pos += 1
            t = self.expr()
            if self.peek() != ")":
                self.error("expected )")
            self.pos += 1
            return t
        if ch in ")^" or ch.isdigit():
            self.error(f"unexpected {ch!r}")
        self.pos += 1
        return Letter(ch)


def parse_term(text: str) -> OmegaTerm:
    """Parse an omega term; 'w' after '^' denotes the omega power."""
    return _Parser(text).parse()


def term_text(t: OmegaTerm) -> str:
    """Render a term back to parseable text."""
    if isinstance(t, Letter):
        return t.symbol
    if isinstance(t, Concat):
        return "".join(
            f"({term_text(p)})" if isinstance(p, Concat) else term_text(p)
            for p in t.parts)
    if isinstance(t, (Power, OmegaPower)):
        base = t.base
        inner = term_text(base)
        if not isinstance(base, Letter):
            inner = f"({inner})"
        exp = "w" if isinstance(t, OmegaPower) else str(t.exponent)
        return f"{inner}^{exp}"
    raise TypeError(f"not a term: {t!r}")


def evaluate(t: OmegaTerm, M: FiniteMonoid, g: GeneratorMap) -> int:
    """Homomorphic evaluation; the omega power maps to the idempotent power."""
    if isinstance(t, Letter):
        return g.image(t.symbol)
    if isinstance(t, Concat):
        acc = M.identity
        for p in t.parts:
            acc = M.table[acc][evaluate(p, M, g)]
        return acc
    if isinstance(t, Power):
        if t.exponent < 1:
            raise InputError("exponent must be at least 1")
        return M.power(evaluate(t.base, M, g), t.exponent)
    if isinstance(t, OmegaPower):
        return M.omega_power(evaluate(t.base, M, g))
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class StabilitySweep:
    """Result of the power-stability sweep; counterexamples are (a, n, lam)."""

    holds: bool
    counterexamples: tuple[tuple[int, int, int], ...]
    checked: int


def group_element_shadow(M: FiniteMonoid) -> StabilitySweep:
    """Sweep all a, 1 <= n <= order+1, 1 <= lam <= order: whenever
    a^n == a^(n+lam), the stabilized power a^n must be a group element.
    Holds in every finite monoid; any counterexample would be reported."""
    bad = []
    checked = 0
    top = 2 * M.order + 1
    for a in range(M.order):
        pw = [M.identity]
        x = M.identity
        for _ in range(top):
            x = M.table[x][a]
            pw.append(x)
        for nn in range(1, M.order + 2):
            for lam in range(1, M.order + 1):
                checked += 1
                if pw[nn] == pw[nn + lam] and not is_group_element(M, pw[nn]):
                    bad.append((a, nn, lam))
    return StabilitySweep(not bad, tuple(bad), checked)


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of the ideal-product membership check.

    hypothesis: the product of the elements lies in the product of the
    ideals.  witness: 1-based (i, j) with element i inside ideal j, when
    one exists.  membership[i][j] is the full element-by-ideal matrix.
    """

    hypothesis: bool
    witness: tuple[int, int] | None
    membership: tuple[tuple[bool, ...], ...]
    product: int
    ideal_product: tuple[int, ...]

    @property
    def verdict(self) -> str:
        return "violated" if self.hypothesis and self.witness is None else "holds"


def ideal_product_shadow(
    M: FiniteMonoid,
    g: GeneratorMap,
    alphas: Sequence[OmegaTerm],
    ideal_gens: Sequence[Sequence[OmegaTerm]],
) -> MembershipVerdict:
    """Evaluate m elements and n ideals (m <= n) and test whether membership
    of the element product in the ideal product localizes to one element
    inside one ideal.  Finite monoids may genuinely violate this."""
    m, n = len(alphas), len(ideal_gens)
    if m < 1 or n < 1:
        raise InputError("need at least one element and one ideal")
    if m > n:
        raise InputError(f"more elements than ideals ({m} > {n})")
    avals = [evaluate(t, M, g) for t in alphas]
    ideals = [ideal_generated(M, tuple(evaluate(t, M, g) for t in gens))
              for gens in ideal_gens]
    ideal_sets = [set(I) for I in ideals]
    product = reduce(M.mul, avals, M.identity)
    iprod = reduce(lambda I, J: ideal_product(M, I, J), ideals)
    membership = tuple(
        tuple(avals[i] in ideal_sets[j] for j in range(n)) for i in range(m))
    hypothesis = product in set(iprod)
    witness = None
    if hypothesis:
        for j in range(n):
            for i in range(m):
                if membership[i][j]:
                    witness = (i + 1, j + 1)
                    break
            if witness:
                break
    return MembershipVerdict(hypothesis, witness, membership, product, iprod)


class ProfileMismatch(Exception):
    """The two word sequences have different cut profiles; replay cannot run."""


@dataclass(frozen=True)
class ReplayResult:
    """Outcome of the factorization-transfer replay.

    parts: the produced factorization v_1..v_n of the u concatenation.
    witness: locates v_j inside u_i.  part_image is the image of that v_j
    (equal to the image of w_j); membership records that the image of u_i
    lies in the principal ideal of w_j's image.
    """

    parts: tuple[str, ...]
    witness: FactorWitness
    part_image: int
    source_image: int
    membership: bool


def replay_factorization(
    M: FiniteMonoid,
    g: GeneratorMap,
    n: int,
    us: Sequence[str],
    ws: Sequence[str],
) -> ReplayResult:
    """Re-factor the u concatenation so the part images match the w parts,
    then locate one new part inside one u part and record the resulting
    ideal membership.

    Precondition (checked): the two concatenations have equal cut profiles
    at arity n; ProfileMismatch is raised otherwise.
    """
    us, ws = tuple(us), tuple(ws)
    m = len(us)
    if n != len(ws):
        raise InputError(f"arity {n} must equal the number of w parts ({len(ws)})")
    if m < 1:
        raise InputError("need at least one u part")
    if m > n:
        raise InputError(f"more u parts than w parts ({m} > {n})")
    u = "".join(us)
    w = "".join(ws)
    pu = cut(M, g, u, n)
    pw = pu if u == w else cut(M, g, w, n)
    if pu != pw:
        raise ProfileMismatch(
            f"cut profiles at arity {n} differ between {u!r} and {w!r}")
    targets = tuple(word_image(M, g, part) for part in ws)
    vs = match_factorization(M, g, u, targets)
    assert vs is not None  # targets belong to the shared profile
    fw = lemma_factor(us, vs)
    for v, target in zip(vs, targets):
        assert word_image(M, g, v) == target
    vj = targets[fw.j - 1]
    ui = word_image(M, g, us[fw.i - 1])
    membership = ui in set(ideal_generated(M, (vj,)))
    return ReplayResult(vs, fw, vj, ui, membership)
