"""The `mono` command line: load monoids, inspect structure, build
expansions, and run the shadow checks.

Machine format (`--format machine`) is line-oriented `key=value` with keys
sorted, byte-stable across runs on identical inputs; human format keeps
insertion order and adds a timing line.  Exit codes: 0 success/holds,
1 a checked property failed or a hypothesis did not hold, 2 input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .expansion import ExpandedMonoid, build_expansion, check_eta_aperiodic
from .formats import (dfa_to_transition_monoid, load_table, parse_dfa,
                      parse_tgen, serialize_monoid)
from .monoid import (CapExceeded, FiniteMonoid, GeneratorMap, InputError,
                     generator_map, greens, ideal_generated, is_aperiodic,
                     is_idempotent_ideal, is_prime_ideal, is_regular,
                     minimal_ideal)
from .shadows import (ProfileMismatch, group_element_shadow,
                      ideal_product_shadow, parse_term, replay_factorization)
from .words import CutProfile, cut, lemma_factor, word_image


@dataclass
class Report:
    command: str
    fields: dict[str, str]

    def machine(self) -> str:
        items = {"command": self.command, **self.fields}
        return "".join(f"{k}={items[k]}\n" for k in sorted(items))

    def human(self, elapsed_ms: float) -> str:
        lines = [f"mono {self.command}"]
        lines += [f"  {k}: {v}" for k, v in self.fields.items()]
        lines.append(f"  elapsed: {elapsed_ms:.1f} ms")
        return "\n".join(lines) + "\n"


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:12]


def _read(path: str) -> tuple[str, str]:
    data = Path(path).read_bytes()
    return data.decode("utf-8"), _digest(data)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _names(M: FiniteMonoid, ids) -> str:
    return "{" + ",".join(M.names[x] for x in sorted(ids)) + "}"


def _pair(M: FiniteMonoid, pair) -> str:
    return "(" + ",".join(M.names[x] for x in pair) + ")"


def _profile(M: FiniteMonoid, p: CutProfile) -> str:
    return "{" + ",".join(
        "(" + ",".join(M.names[x] for x in t) + ")" for t in p.tuples) + "}"


def _parse_map(M: FiniteMonoid, text: str) -> GeneratorMap:
    mapping: dict[str, int] = {}
    for item in text.split(","):
        letter, eq, name = item.partition("=")
        if not eq or not letter or not name:
            raise InputError(f"bad letter mapping {item!r} (want letter=element)")
        if len(letter) != 1:
            raise InputError(f"letters are single symbols, got {letter!r}")
        if letter in mapping:
            raise InputError(f"duplicate letter {letter!r}")
        mapping[letter] = M.element(name)
    return generator_map(M, mapping)


def _split_words(text: str) -> tuple[str, ...]:
    return tuple(text.split(","))


def _cmd_info(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    aper, witness = is_aperiodic(M)
    fields = {
        "input": digest,
        "order": str(M.order),
        "identity": M.names[M.identity],
        "aperiodic": _bool(aper),
    }
    if not aper:
        fields["aperiodic_witness"] = M.names[witness]
    fields["idempotents"] = _names(M, M.idempotents())
    fields["regular_elements"] = _names(
        M, [a for a in range(M.order) if is_regular(M, a)[0]])
    fields["minimal_ideal"] = _names(M, minimal_ideal(M))
    return fields, 0


def _cmd_greens(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    gd = greens(M)

    def classes(cs) -> str:
        return "[" + ",".join(_names(M, c) for c in cs) + "]"

    strict = sorted(
        (a, b)
        for a in range(len(gd.j_classes))
        for b in range(len(gd.j_classes))
        if a != b and gd.j_leq[a][b])
    fields = {
        "input": digest,
        "r_classes": classes(gd.r_classes),
        "l_classes": classes(gd.l_classes),
        "j_classes": classes(gd.j_classes),
        "h_classes": classes(gd.h_classes),
        "j_order": ",".join(f"{a}<{b}" for a, b in strict),
    }
    return fields, 0


def _cmd_ideal(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    gens = [M.element(nm) for nm in args.elements]
    ideal = ideal_generated(M, gens)
    prime, witness = is_prime_ideal(M, ideal)
    fields = {
        "input": digest,
        "generators": _names(M, gens),
        "ideal": _names(M, ideal),
        "idempotent": _bool(is_idempotent_ideal(M, ideal)),
        "prime": _bool(prime),
    }
    if witness is not None:
        fields["prime_witness"] = _pair(M, witness)
    return fields, 0


def _cmd_cut(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    g = _parse_map(M, args.map)
    profile = cut(M, g, args.word, args.n)
    fields = {
        "input": digest,
        "word": args.word,
        "n": str(args.n),
        "image": M.names[word_image(M, g, args.word)],
        "size": str(len(profile.tuples)),
        "profile": _profile(M, profile),
    }
    return fields, 0


def _expansion_sidecar(E: ExpandedMonoid) -> str:
    lines = []
    for i in range(E.order):
        lines.append(
            f"P{i} eta={E.base.names[E.eta[i]]} rep={E.representatives[i]} "
            f"profile={_profile(E.base, E.profiles[i])}")
    return "\n".join(lines) + "\n"


def _cmd_expand(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    g = _parse_map(M, args.gens)
    E = build_expansion(M, g, args.n, jobs=args.jobs)
    aper, witness = check_eta_aperiodic(E)
    fibers = [(e, len(E.fiber(e))) for e in sorted(set(E.eta))]
    fields = {
        "input": digest,
        "n": str(args.n),
        "base_order": str(M.order),
        "order": str(E.order),
        "generated_size": str(len(g.generated)),
        "eta_fibers": ",".join(f"{M.names[e]}:{k}" for e, k in fibers),
        "eta_aperiodic": _bool(aper),
    }
    if not aper:
        fields["eta_witness"] = f"({M.names[witness[0]]},P{witness[1]})"
    if args.table:
        fields["table"] = ";".join(
            f"P{i}:" + ",".join(f"P{v}" for v in row)
            for i, row in enumerate(E.table))
    if args.out:
        Path(args.out).write_text(serialize_monoid(E.as_monoid()), encoding="utf-8")
        Path(args.out + ".map").write_text(_expansion_sidecar(E), encoding="utf-8")
        fields["out"] = args.out
    return fields, 0 if aper else 1


def _cmd_lemma(args) -> tuple[dict[str, str], int]:
    us = _split_words(args.u)
    vs = _split_words(args.v)
    witness = lemma_factor(us, vs)
    fields = {
        "input": _digest(f"{args.u}|{args.v}".encode("utf-8")),
        "u_parts": args.u,
        "v_parts": args.v,
        "i": str(witness.i),
        "j": str(witness.j),
        "offset": str(witness.offset),
    }
    return fields, 0


def _cmd_replay(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    g = _parse_map(M, args.map)
    us = _split_words(args.u)
    ws = _split_words(args.w)
    fields = {
        "input": digest,
        "n": str(args.n),
        "u_parts": args.u,
        "w_parts": args.w,
    }
    try:
        result = replay_factorization(M, g, args.n, us, ws)
    except ProfileMismatch as exc:
        fields["hypothesis"] = "false"
        fields["reason"] = str(exc)
        return fields, 1
    fields["hypothesis"] = "true"
    fields["v_parts"] = ",".join(result.parts)
    fields["i"] = str(result.witness.i)
    fields["j"] = str(result.witness.j)
    fields["offset"] = str(result.witness.offset)
    fields["part_image"] = M.names[result.part_image]
    fields["source_image"] = M.names[result.source_image]
    fields["membership"] = _bool(result.membership)
    return fields, 0


def _cmd_shadow(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M = load_table(text)
    fields = {"input": digest}
    if args.alphas is None and args.ideals is None:
        sweep = group_element_shadow(M)
        fields["mode"] = "group_element"
        fields["checked"] = str(sweep.checked)
        fields["verdict"] = "holds" if sweep.holds else "violated"
        if not sweep.holds:
            fields["counterexamples"] = ";".join(
                f"({M.names[a]},{n},{lam})" for a, n, lam in sweep.counterexamples)
        return fields, 0 if sweep.holds else 1
    if args.alphas is None or args.ideals is None:
        raise InputError("--alphas and --ideals must be given together")
    if args.map is None:
        raise InputError("--map is required with --alphas/--ideals")
    g = _parse_map(M, args.map)
    alphas = [parse_term(t) for t in args.alphas.split(";")]
    ideal_gens = [[parse_term(t) for t in group.split(",")]
                  for group in args.ideals.split("|")]
    verdict = ideal_product_shadow(M, g, alphas, ideal_gens)
    fields["mode"] = "ideal_product"
    fields["m"] = str(len(alphas))
    fields["n"] = str(len(ideal_gens))
    fields["alphas"] = args.alphas
    fields["ideals"] = args.ideals
    fields["product"] = M.names[verdict.product]
    fields["ideal_product"] = _names(M, verdict.ideal_product)
    fields["hypothesis"] = _bool(verdict.hypothesis)
    fields["verdict"] = verdict.verdict
    if verdict.witness is not None:
        fields["witness_i"] = str(verdict.witness[0])
        fields["witness_j"] = str(verdict.witness[1])
    else:
        fields["membership"] = ";".join(
            f"{i + 1}:{j + 1}={_bool(verdict.membership[i][j])}"
            for i in range(len(alphas)) for j in range(len(ideal_gens)))
    return fields, 0 if verdict.verdict == "holds" else 1


def _letter_images(M: FiniteMonoid, g: GeneratorMap) -> str:
    return ",".join(f"{a}:{M.names[x]}" for a, x in zip(g.alphabet, g.images))


def _cmd_from_dfa(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    d = parse_dfa(text)
    M, g = dfa_to_transition_monoid(d)
    fields = {
        "input": digest,
        "states": str(len(d.states)),
        "letters": ",".join(d.alphabet),
        "order": str(M.order),
        "letter_images": _letter_images(M, g),
    }
    if args.out:
        Path(args.out).write_text(serialize_monoid(M), encoding="utf-8")
        fields["out"] = args.out
    return fields, 0


def _cmd_from_tgen(args) -> tuple[dict[str, str], int]:
    text, digest = _read(args.file)
    M, g = parse_tgen(text)
    fields = {
        "input": digest,
        "order": str(M.order),
        "letter_images": _letter_images(M, g),
    }
    if args.out:
        Path(args.out).write_text(serialize_monoid(M), encoding="utf-8")
        fields["out"] = args.out
    return fields, 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human",
                        help="output rendering (default human)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized generation (default MONO_SEED or 0)")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker threads for expansion builds")
    p = argparse.ArgumentParser(
        prog="mono", description="finite monoid workbench")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", parents=[common],
                        help="order, aperiodicity, idempotents, minimal ideal")
    sp.add_argument("file")
    sp.set_defaults(handler=_cmd_info)

    sp = sub.add_parser("greens", parents=[common],
                        help="Green's relation classes and the J-order")
    sp.add_argument("file")
    sp.set_defaults(handler=_cmd_greens)

    sp = sub.add_parser("ideal", parents=[common],
                        help="generated ideal with idempotency and primality")
    sp.add_argument("file")
    sp.add_argument("elements", nargs="+", help="generator element names")
    sp.set_defaults(handler=_cmd_ideal)

    sp = sub.add_parser("cut", parents=[common],
                        help="cut profile of a word at a given arity")
    sp.add_argument("file")
    sp.add_argument("-n", type=int, required=True, help="arity")
    sp.add_argument("--map", required=True, help="letter map a=elem,b=elem")
    sp.add_argument("word")
    sp.set_defaults(handler=_cmd_cut)

    sp = sub.add_parser("expand", parents=[common],
                        help="build the cut-profile expansion")
    sp.add_argument("file")
    sp.add_argument("-n", type=int, required=True, help="arity")
    sp.add_argument("--gens", required=True, help="letter map a=elem,b=elem")
    sp.add_argument("-o", "--out", help="write the expansion as .mon plus sidecar")
    sp.add_argument("--table", action="store_true", help="include the full table")
    sp.set_defaults(handler=_cmd_expand)

    sp = sub.add_parser("lemma", parents=[common],
                        help="locate a part of one factorization inside another")
    sp.add_argument("--u", required=True, help="comma-separated u parts")
    sp.add_argument("--v", required=True, help="comma-separated v parts")
    sp.set_defaults(handler=_cmd_lemma)

    sp = sub.add_parser("replay", parents=[common],
                        help="re-factor matching part images and locate a factor")
    sp.add_argument("file")
    sp.add_argument("-n", type=int, required=True, help="arity")
    sp.add_argument("--map", required=True, help="letter map a=elem,b=elem")
    sp.add_argument("--u", required=True, help="comma-separated u parts")
    sp.add_argument("--w", required=True, help="comma-separated w parts")
    sp.set_defaults(handler=_cmd_replay)

    sp = sub.add_parser("shadow", parents=[common],
                        help="finite shadow checks (stability sweep, or "
                             "ideal-product membership with --alphas/--ideals)")
    sp.add_argument("file")
    sp.add_argument("--map", help="letter map a=elem,b=elem")
    sp.add_argument("--alphas", help="';'-separated omega terms")
    sp.add_argument("--ideals", help="'|'-separated ideals, ',' between generators")
    sp.set_defaults(handler=_cmd_shadow)

    sp = sub.add_parser("from-dfa", parents=[common],
                        help="transition monoid of a .dfa file")
    sp.add_argument("file")
    sp.add_argument("-o", "--out", help="write the monoid as .mon")
    sp.set_defaults(handler=_cmd_from_dfa)

    sp = sub.add_parser("from-tgen", parents=[common],
                        help="transformation monoid generated by a .tgen file")
    sp.add_argument("file")
    sp.add_argument("-o", "--out", help="write the monoid as .mon")
    sp.set_defaults(handler=_cmd_from_tgen)
    return p


def cli_dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    t0 = time.perf_counter()
    try:
        fields, code = args.handler(args)
    except (InputError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = (time.perf_counter() - t0) * 1000
    report = Report(args.command, fields)
    out = report.machine() if args.format == "machine" else report.human(elapsed)
    sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))
