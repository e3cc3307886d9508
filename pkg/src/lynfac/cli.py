"""Command-line front end.

Subcommands: ``factorize`` | ``verify`` | ``bound`` | ``overlap``.
Exit codes: 0 ok, 1 property violation, 2 usage/input error,
3 precondition not applicable (e.g. the LCP bound on an inverse Lyndon
word, or no overlap between the given words).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from lynfac._backend import BACKEND_NAME
from lynfac.alphabet import BYTE_ALPHABET, OrderedAlphabet, Word
from lynfac.errors import LynfacError, NotApplicableError
from lynfac.icfl import cfl_in, grouping_witness, icfl
from lynfac.lyndon import Factorization, FactorizationKind, cfl
from lynfac.overlap import analyze_overlap, overlap_candidates
from lynfac.suffixes import verify_lcp_bound
from lynfac.verify import SUITES, SweepConfig, run_suites

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_NOT_APPLICABLE = 3

MAX_INPUT_BYTES = 64 * 1024 * 1024

_ESCAPES = {0x5C: "\\\\", 0x09: "\\t", 0x0A: "\\n", 0x0D: "\\r"}


def escape_bytes(data: bytes) -> str:
    """Printable, tab-safe rendering of factor bytes; reversible."""
    out = []
    for b in data:
        if b in _ESCAPES:
            out.append(_ESCAPES[b])
        elif 32 <= b <= 126:
            out.append(chr(b))
        else:
            out.append(f"\\x{b:02x}")
    return "".join(out)


def unescape_bytes(text: str) -> bytes:
    out = bytearray()
    i = 0
    while i < len(text):
        c = text[i]
        if c != "\\":
            out.append(ord(c))
            i += 1
            continue
        marker = text[i + 1]
        if marker == "x":
            out.append(int(text[i + 2:i + 4], 16))
            i += 4
        else:
            out.append({"\\": 0x5C, "t": 0x09, "n": 0x0A, "r": 0x0D}[marker])
            i += 2
    return bytes(out)


def format_records(f: Factorization) -> str:
    """Line-delimited factor records: kind, index, start, end, bytes."""
    lines = []
    for i, ((start, end), factor) in enumerate(zip(f.bounds, f.factors), start=1):
        lines.append("\t".join((f.kind.value, str(i), str(start), str(end),
                                escape_bytes(factor.data))))
    return "\n".join(lines)


def parse_records(text: str, alphabet: OrderedAlphabet | None = None) -> list[Factorization]:
    """Rebuild factorizations from record output (inverse of format_records)."""
    alphabet = alphabet or BYTE_ALPHABET
    by_kind: dict[str, list[tuple[int, int, int, bytes]]] = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        kind, idx, start, end, payload = line.split("\t")
        by_kind.setdefault(kind, []).append(
            (int(idx), int(start), int(end), unescape_bytes(payload)))
    out = []
    for kind, rows in by_kind.items():
        rows.sort()
        data = b"".join(r[3] for r in rows)
        cuts = tuple(r[2] for r in rows)
        for idx, start, end, payload in rows:
            if end - start + 1 != len(payload):
                raise ValueError(f"record {idx}: span and payload length differ")
        out.append(Factorization(Word(data, alphabet), cuts, FactorizationKind(kind)))
    return out


def _load_alphabet(spec: str | None) -> OrderedAlphabet:
    if spec is None:
        return BYTE_ALPHABET
    return OrderedAlphabet.from_order_string(spec)


def _read_input(args, positional: bytes | None) -> bytes:
    sources = [positional is not None, args.file is not None]
    if sum(sources) > 1:
        raise LynfacError("give the word either inline or with --file, not both")
    if positional is not None:
        data = positional
    elif args.file is not None:
        data = Path(args.file).read_bytes()
    else:
        data = sys.stdin.buffer.read()
    if len(data) > MAX_INPUT_BYTES:
        raise LynfacError(
            f"input of {len(data)} bytes exceeds the {MAX_INPUT_BYTES >> 20} MiB limit; "
            "split the input or run the library API directly")
    return data


def _factorizations(word: Word, kind: str) -> list[Factorization]:
    picks = {
        "cfl": [lambda: cfl(word)],
        "cfl-in": [lambda: cfl_in(word)],
        "icfl": [lambda: icfl(word)],
        "all": [lambda: cfl(word), lambda: cfl_in(word), lambda: icfl(word)],
    }[kind]
    return [make() for make in picks]


def cmd_factorize(args) -> int:
    alphabet = _load_alphabet(args.order)
    data = _read_input(args, args.word.encode("latin-1") if args.word is not None else None)
    if not data:
        print("error: the empty word has no factorization", file=sys.stderr)
        return EXIT_USAGE
    word = Word(data, alphabet)
    results = _factorizations(word, args.kind)
    if args.format == "records":
        print(f"# input bytes: {len(word)}")
        for f in results:
            print(format_records(f))
        return EXIT_OK
    print(f"input: {escape_bytes(word.data)} ({len(word)} bytes)")
    for f in results:
        name = f.kind.value
        print(f"{name}: " + " | ".join(escape_bytes(x.data) for x in f.factors))
        print(f"{name} cuts: " + " ".join(str(c) for c in f.cuts))
        exponents = " ".join(
            escape_bytes(base.data) + (f"^{count}" if count > 1 else "")
            for base, count in f.exponent_form())
        print(f"{name} exponents: {exponents}")
        if f.kind is FactorizationKind.ICFL:
            witness = grouping_witness(f, cfl_in(word))
            if witness is None:
                print(f"{name} grouping of cfl-in: MISSING (internal error)")
                return EXIT_VIOLATION
            print(f"{name} grouping of cfl-in boundaries: "
                  + " ".join(str(b) for b in witness.boundaries))
    return EXIT_OK


def cmd_verify(args) -> int:
    scales = None
    if args.max_len is not None or args.alphabet_size is not None:
        size = args.alphabet_size if args.alphabet_size is not None else 2
        max_len = args.max_len if args.max_len is not None else 8
        scales = ((size, max_len),)
    cfg = SweepConfig(scales=scales, seed=args.seed)
    names = args.suite or None
    try:
        results = run_suites(names, cfg)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status}  {r.name:<22} {r.cases} cases"
        if not r.ok:
            failed += 1
            line += f", {r.failure_count} failures"
        print(line)
        if not r.ok and r.failures:
            print(f"      first: {r.failures[0]}")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_bound(args) -> int:
    alphabet = _load_alphabet(args.order)
    data = _read_input(args, args.word.encode("latin-1") if args.word is not None else None)
    if not data:
        print("error: the bound is defined for nonempty words", file=sys.stderr)
        return EXIT_USAGE
    word = Word(data, alphabet)
    try:
        report = verify_lcp_bound(word, seed=args.seed)
    except NotApplicableError as exc:
        print(f"bound not defined: {exc}")
        return EXIT_NOT_APPLICABLE
    f = icfl(word)
    i = report.argmax_pair
    if args.format == "records":
        print(f"m_bound\t{report.m_bound}")
        print(f"argmax_pair\t{i}")
        print(f"max_observed_lcp\t{report.max_observed_lcp}")
        (s1, e1), (s2, e2) = report.witness_pair
        print(f"witness\t{s1}\t{e1}\t{s2}\t{e2}")
        print(f"method\t{report.method}")
        print(f"holds\t{str(report.holds).lower()}")
    else:
        print(f"input: {len(word)} bytes, {f.factor_count} inverse Lyndon factors")
        print(f"M = {report.m_bound} (adjacent pair {i}: "
              f"|m{i}| + |m{i + 1}| = {len(f.factor(i))} + {len(f.factor(i + 1))})")
        (s1, e1), (s2, e2) = report.witness_pair
        print(f"max observed lcp: {report.max_observed_lcp} "
              f"(occurrences [{s1},{e1}] and [{s2},{e2}])")
        print(f"method: {report.method}")
        print(f"bound holds: {'yes' if report.holds else 'NO'}")
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_overlap(args) -> int:
    alphabet = _load_alphabet(args.order)
    w = Word(args.word.encode("latin-1"), alphabet)
    w2 = Word(args.word2.encode("latin-1"), alphabet)
    if w.is_empty() or w2.is_empty():
        print("error: overlap analysis requires nonempty words", file=sys.stderr)
        return EXIT_USAGE
    if args.overlap_len is not None:
        lengths = [args.overlap_len]
        if args.overlap_len not in overlap_candidates(w, w2):
            print(f"no overlap of length {args.overlap_len}")
            return EXIT_NOT_APPLICABLE
    else:
        lengths = overlap_candidates(w, w2)
        if not lengths:
            print("no overlap")
            return EXIT_NOT_APPLICABLE
    for length in lengths:
        report = analyze_overlap(w, w2, length)
        parts = [f"len {length}: {report.case.value}"]
        if report.w_factor_run:
            parts.append(f"left factors {report.w_factor_run[0]}..{report.w_factor_run[1]}")
        if report.w2_factor_run:
            parts.append(f"right factors {report.w2_factor_run[0]}..{report.w2_factor_run[1]}")
        if report.shared_equalities:
            eq = ", ".join(f"f{a}=l{b}" for a, b in report.shared_equalities)
            parts.append(f"shared: {eq}")
        if report.ambiguous:
            parts.append("(ambiguous)")
        if report.note:
            parts.append(f"[{report.note}]")
        print("  ".join(parts))
        factors = " | ".join(escape_bytes(x.data) for x in report.overlap_cfl.factors)
        print(f"  overlap cfl: {factors}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lynfac",
        description="Lyndon / inverse Lyndon factorization toolkit "
                    f"(kernel backend: {BACKEND_NAME})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_word_io(p, positional=True):
        if positional:
            p.add_argument("word", nargs="?", help="inline input word (latin-1)")
        p.add_argument("--file", help="read the input word from this file")
        p.add_argument("--order", metavar="SYMBOLS",
                       help="custom symbol order, smallest first; unlisted "
                            "bytes rank afterwards in numeric order")

    p = sub.add_parser("factorize", help="compute factorizations of a word")
    add_word_io(p)
    p.add_argument("--kind", choices=("cfl", "cfl-in", "icfl", "all"), default="icfl")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="run property sweeps against the oracles")
    p.add_argument("--suite", action="append", choices=sorted(SUITES),
                   help="suite to run (repeatable); default: all")
    p.add_argument("--max-len", type=int, help="override sweep max word length")
    p.add_argument("--alphabet-size", type=int, help="override sweep alphabet size")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="LCP upper bound from the inverse factorization")
    add_word_io(p)
    p.add_argument("--seed", type=int, default=0, help="sampling seed for huge inputs")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("overlap", help="classify the overlap of two words")
    p.add_argument("word", help="left word (its suffix overlaps)")
    p.add_argument("word2", help="right word (its prefix overlaps)")
    p.add_argument("--overlap-len", type=int)
    p.add_argument("--order", metavar="SYMBOLS")
    p.set_defaults(func=cmd_overlap)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LynfacError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
