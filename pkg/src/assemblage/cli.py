"""Command-line interface.

Exit codes: 0 on success, 2 for input errors (bad flags, unparsable files,
malformed streams), 3 when a computational guard trips (length cap without
--allow-inexact, oracle budget, enumeration guard, inexact index inside an
experiment).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (
    DEFAULT_LENGTH_CAP,
    AssemblyResult,
    EmptyObjectError,
    assembly_index,
)
from .ensemble import EnsembleFormatError, InexactIndexError, ensemble_terms, load_ensemble
from .entropy import shannon_entropy
from .experiments import (
    DEFAULT_BASE,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    SIZE_METRICS,
    EnumerationGuardError,
    ExperimentConfig,
    counterexample_suite,
    run_comparison,
    scaling_table,
)
from .huffman import (
    HuffmanDecodeError,
    assign_codes,
    build_frequency_table,
    build_huffman_tree,
    huffman_encode,
    pack_bits,
    unpack_bits,
)
from .lzw import CompressedStream, LzwDecodeError, lzw_compress, lzw_decompress
from .oracle import ORACLE_MAX_LENGTH, OracleBudgetError, oracle_assembly_index
from .report import write_histogram_svg, write_records_csv, write_summary_json

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_GUARD = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _input_string(args: argparse.Namespace, attr: str = "string") -> str:
    """The raw argument, or its UTF-8 bytes as one symbol each under --bytes."""
    text = getattr(args, attr)
    if getattr(args, "bytes", False):
        return text.encode("utf-8").decode("latin-1")
    return text


def _fmt_operand(ref: str | int) -> str:
    return f"#{ref + 1}" if isinstance(ref, int) else repr(ref)


def _print_witness(result: AssemblyResult) -> None:
    if not result.witness.steps:
        print("no joins needed: the target is a basic symbol")
    for i, step in enumerate(result.witness.steps, start=1):
        print(f"  {i}. {_fmt_operand(step.left)} + {_fmt_operand(step.right)} -> {step.product!r}")


def cmd_index(args: argparse.Namespace) -> int:
    target = _input_string(args)
    try:
        result = assembly_index(target, args.cap)
    except EmptyObjectError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    if not result.exact and not args.allow_inexact:
        raise CliError(
            f"index only bracketed to [{result.lower}, {result.upper}] under cap "
            f"{args.cap}; pass --allow-inexact to accept bounds",
            EXIT_GUARD,
        )
    qualifier = "exact" if result.exact else f"inexact, bounds [{result.lower}, {result.upper}]"
    if args.oracle_check:
        if len(target) > ORACLE_MAX_LENGTH:
            raise CliError(
                f"oracle budget allows length <= {ORACLE_MAX_LENGTH}", EXIT_GUARD
            )
        reference = oracle_assembly_index(target)
        if result.exact and reference != result.index:
            print(f"a = {result.index} but oracle found {reference}: MISMATCH")
            return EXIT_GUARD
        qualifier += ", oracle agrees" if result.exact else f", oracle says {reference}"
    print(f"a = {result.index} ({qualifier})")
    if args.witness:
        _print_witness(result)
    return EXIT_OK


def cmd_path(args: argparse.Namespace) -> int:
    target = _input_string(args)
    try:
        result = assembly_index(target, args.cap)
    except EmptyObjectError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    if not result.exact:
        raise CliError(
            f"no exact path under cap {args.cap}; bounds [{result.lower}, {result.upper}]",
            EXIT_GUARD,
        )
    _print_witness(result)
    print(f"a = {result.index} (exact)")
    return EXIT_OK


def cmd_assembly(args: argparse.Namespace) -> int:
    try:
        ens = load_ensemble(args.file)
    except OSError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    except EnsembleFormatError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    try:
        rows = ensemble_terms(ens, args.cap)
    except InexactIndexError as exc:
        raise CliError(str(exc), EXIT_GUARD) from None
    for obj, copies, index, term in rows:
        print(f"  {obj!r}: a = {index}, copies = {copies}, term = {term:.5f}")
    print(f"A = {sum(term for *_, term in rows):.5f}")
    return EXIT_OK


def _decode_with_codes(bits: str, codes: dict[str, str]) -> str:
    decoder = {code: sym for sym, code in codes.items()}
    out, current = [], ""
    for bit in bits:
        if bit not in "01":
            raise HuffmanDecodeError(f"invalid bit {bit!r}")
        current += bit
        if current in decoder:
            out.append(decoder[current])
            current = ""
    if current:
        raise HuffmanDecodeError("bitstream ends inside a code")
    return "".join(out)


def cmd_huffman(args: argparse.Namespace) -> int:
    if args.direction == "encode":
        text = _input_string(args, "input")
        try:
            table = build_frequency_table(text)
        except EmptyObjectError as exc:
            raise CliError(str(exc), EXIT_INPUT) from None
        codes = assign_codes(build_huffman_tree(table))
        bits = huffman_encode(text, codes)
        print(f"bits {bits}")
        print(f"packed {pack_bits(bits).hex()}")
        if args.show_tree:
            print(json.dumps(codes, sort_keys=True))
        return EXIT_OK
    if not args.codes:
        raise CliError("decode requires --codes with the JSON codebook", EXIT_INPUT)
    try:
        codes = json.loads(args.codes)
        if not isinstance(codes, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in codes.items()
        ):
            raise CliError("--codes must be a JSON object of symbol -> code", EXIT_INPUT)
        bits = unpack_bits(bytes.fromhex(args.input)) if args.packed else args.input
        print(_decode_with_codes(bits, codes))
    except (json.JSONDecodeError, ValueError, HuffmanDecodeError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    return EXIT_OK


def cmd_lzw(args: argparse.Namespace) -> int:
    if args.direction == "encode":
        try:
            stream = lzw_compress(_input_string(args, "input"))
        except EmptyObjectError as exc:
            raise CliError(str(exc), EXIT_INPUT) from None
        print(f"codes {' '.join(map(str, stream.codes))}")
        print(f"alphabet {''.join(stream.alphabet)}")
        print(
            f"{stream.code_count} codes, {stream.bit_width} bits each, "
            f"{stream.byte_size} bytes"
        )
        if args.show_dict:
            entries = list(stream.alphabet)
            # replay compression to reconstruct the dictionary for display
            rebuilt = lzw_decompress(stream)
            table = {sym: i for i, sym in enumerate(entries)}
            current = rebuilt[0]
            for ch in rebuilt[1:]:
                if current + ch in table:
                    current += ch
                else:
                    table[current + ch] = len(table)
                    current = ch
            print(json.dumps({str(i): e for e, i in sorted(table.items(), key=lambda kv: kv[1])}))
        return EXIT_OK
    if not args.alphabet:
        raise CliError("decode requires --alphabet", EXIT_INPUT)
    try:
        codes = tuple(int(tok) for tok in args.input.split())
    except ValueError:
        raise CliError("decode input must be space-separated integers", EXIT_INPUT) from None
    alphabet = tuple(sorted(set(args.alphabet)))
    stream = CompressedStream(codes, alphabet, len(alphabet) + max(len(codes) - 1, 0))
    try:
        print(lzw_decompress(stream))
    except LzwDecodeError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    return EXIT_OK


def cmd_entropy(args: argparse.Namespace) -> int:
    try:
        h = shannon_entropy(build_frequency_table(_input_string(args)))
    except (EmptyObjectError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    print(f"H = {h!r} bits/symbol")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    if args.kind == "counterexamples":
        checks = counterexample_suite()
        for c in checks:
            print(f"[{'pass' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
        failed = [c for c in checks if not c.passed]
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
        return EXIT_OK if not failed else EXIT_GUARD

    if args.kind == "scaling":
        try:
            rows = scaling_table(args.steps)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INPUT) from None
        print("steps  lzw_closed  lzw_measured  agree  assembly_longest")
        disagreements = 0
        for r in rows:
            disagreements += not r.lzw_agrees
            print(
                f"{r.steps:>5}  {r.lzw_closed_form:>10}  {r.lzw_measured:>12}  "
                f"{'yes' if r.lzw_agrees else 'NO':>5}  {r.assembly_longest:>16}"
            )
        return EXIT_OK if not disagreements else EXIT_GUARD

    try:
        config = ExperimentConfig(
            base=args.base,
            samples=args.samples,
            seed=args.seed,
            mode="exhaustive" if args.exhaustive else "sampled",
            size_metric=args.metric,
            workers=args.workers,
        )
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    try:
        report = run_comparison(config)
    except (EnumerationGuardError, InexactIndexError) as exc:
        raise CliError(str(exc), EXIT_GUARD) from None
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        write_records_csv(report, os.path.join(args.out, "records.csv"))
        write_summary_json(report, os.path.join(args.out, "summary.json"))
        if args.svg:
            write_histogram_svg(report, os.path.join(args.out, "histogram.svg"))
    elif args.svg:
        raise CliError("--svg requires --out", EXIT_INPUT)
    r = report.pearson_r
    r_text = f"{r:.4f}" if r is not None else "undefined"
    print(f"pearson_r = {r_text} ({config.size_metric}, n = {len(report.records)})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assemblage",
        description="Exact assembly indices of strings, compression comparators, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="exact assembly index of one string")
    p.add_argument("string")
    p.add_argument("--cap", type=int, default=DEFAULT_LENGTH_CAP)
    p.add_argument("--witness", action="store_true", help="print the join path")
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--allow-inexact", action="store_true")
    p.add_argument("--bytes", action="store_true", help="treat UTF-8 bytes as symbols")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("path", help="print a minimal join path for one string")
    p.add_argument("string")
    p.add_argument("--cap", type=int, default=DEFAULT_LENGTH_CAP)
    p.add_argument("--bytes", action="store_true", help="treat UTF-8 bytes as symbols")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("assembly", help="evaluate the assembly equation over an ensemble file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_LENGTH_CAP)
    p.set_defaults(func=cmd_assembly)

    p = sub.add_parser("huffman", help="Huffman encode/decode")
    p.add_argument("direction", choices=["encode", "decode"])
    p.add_argument("input")
    p.add_argument("--show-tree", action="store_true", help="print the JSON codebook")
    p.add_argument("--bytes", action="store_true", help="treat UTF-8 bytes as symbols")
    p.add_argument("--codes", help="JSON codebook for decoding")
    p.add_argument("--packed", action="store_true", help="decode input is hex-packed bytes")
    p.set_defaults(func=cmd_huffman)

    p = sub.add_parser("lzw", help="LZW encode/decode")
    p.add_argument("direction", choices=["encode", "decode"])
    p.add_argument("input")
    p.add_argument("--show-dict", action="store_true", help="print the JSON dictionary")
    p.add_argument("--bytes", action="store_true", help="treat UTF-8 bytes as symbols")
    p.add_argument("--alphabet", help="initial alphabet for decoding")
    p.set_defaults(func=cmd_lzw)

    p = sub.add_parser("entropy", help="Shannon entropy of a string")
    p.add_argument("string")
    p.add_argument("--bytes", action="store_true", help="treat UTF-8 bytes as symbols")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("experiment", help="run one of the experiments")
    p.add_argument("kind", choices=["permutations", "scaling", "counterexamples"])
    p.add_argument("--base", default=DEFAULT_BASE)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--metric", choices=list(SIZE_METRICS), default="lzw_bytes")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--steps", type=int, default=12, help="scaling table rows")
    p.add_argument("--out", help="directory for records.csv and summary.json")
    p.add_argument("--svg", action="store_true", help="also render histogram.svg under --out")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
