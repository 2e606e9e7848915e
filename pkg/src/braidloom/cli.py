"""Command-line surface for the package.

Verbs map one-to-one onto library pipelines:

    weave         conjugate a braid word into woven form
    comb          factor a pure braid into free components
    move          apply a conjugation / (de)stabilization move
    encode        tight woven word -> integer code
    decode        integer code -> tight woven word
    invariant     closure invariants of a braid word
    verify-table  recompute the embedded minimal-web table
    enumerate     list all tight words up to a length

Every verb accepts ``--format records`` to emit one JSON object per
result line instead of human-readable text.  Exit status: 0 success or
all checks pass, 1 verification failures, 2 usage or input errors,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys

from .codec import (
    encode_word,
    is_alternating,
    step_code,
    steps_from_int,
    symmetry_class,
    word_from_code,
)
from .combing import band_text, comb, parse_bands
from .invariants import (
    closure_components,
    homfly,
    jones_via_bracket,
    mfw_bound,
    writhe,
)
from .limits import ResourceLimitError
from .moves import (
    MoveRecord,
    conjugation_move,
    destabilization_move,
    stabilization_move,
)
from .tables import (
    enumerate_webs,
    load_table,
    minimality_check,
    verify_row,
    verify_table,
)
from .weaving import weave, woven_from_word
from .words import (
    BraidWord,
    TypeVector,
    braids_equal,
    free_reduce,
    parse_word,
    word_text,
)

__all__ = ["main"]


def _emit(args: argparse.Namespace, record: dict, lines: list[str]) -> None:
    if args.format == "records":
        print(json.dumps(record, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _parse_type(text: str) -> TypeVector:
    try:
        parts = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise ValueError(f"bad type vector {text!r}") from exc
    return TypeVector(parts)


def _woven_input(args: argparse.Namespace):
    w = parse_word(args.word, args.strands)
    tv = _parse_type(args.type) if getattr(args, "type", None) else None
    return woven_from_word(w, tv)


def _cmd_weave(args: argparse.Namespace) -> int:
    w = parse_word(args.word, args.strands)
    woven, conj = weave(w)
    ww = free_reduce(woven.word())
    certified = braids_equal(free_reduce(conj * ww * conj.inverse()), w)
    record = {
        "verb": "weave",
        "word": word_text(w),
        "strands": w.strands,
        "type": list(woven.tv.parts),
        "woven": word_text(ww),
        "conjugator": word_text(conj),
        "components": [band_text(c) for c in woven.components],
        "certified": certified,
    }
    lines = [
        f"type: ({', '.join(str(p) for p in woven.tv.parts)})",
        f"woven: {word_text(ww)}",
        f"conjugator: {word_text(conj)}",
    ]
    for end, c in zip(woven.tv.block_ends(), woven.components):
        lines.append(f"component {end}: {band_text(c)}")
    lines.append(f"certified: {'yes' if certified else 'NO'}")
    _emit(args, record, lines)
    return 0 if certified else 1


def _cmd_comb(args: argparse.Namespace) -> int:
    w = parse_word(args.word, args.strands)
    f = comb(w, args.order)
    ok = braids_equal(f.recompose(), w)
    record = {
        "verb": "comb",
        "word": word_text(w),
        "strands": f.strands,
        "order": f.order,
        "components": {str(j): band_text(f.component(j)) for j in range(2, f.strands + 1)},
        "certified": ok,
    }
    lines = [f"order: {f.order}"]
    for j in range(2, f.strands + 1):
        lines.append(f"component {j}: {band_text(f.component(j))}")
    lines.append(f"certified: {'yes' if ok else 'NO'}")
    _emit(args, record, lines)
    return 0 if ok else 1


_MOVE_KINDS = {
    "conjugate": "conjugation",
    "stabilize": "stabilization",
    "destabilize": "destabilization",
}


def _cmd_move(args: argparse.Namespace) -> int:
    before = _woven_input(args)
    kind = _MOVE_KINDS[args.kind]
    if args.kind == "conjugate":
        if not args.kappa:
            raise ValueError("move conjugate requires --kappa")
        kappa = parse_bands(args.kappa, before.strands)
        after = conjugation_move(before, kappa)
        parameter: object = kappa
        param_out: object = band_text(kappa)
    elif args.kind == "stabilize":
        after = stabilization_move(before, args.sign)
        parameter = args.sign
        param_out = args.sign
    else:
        after = destabilization_move(before)
        parameter = None
        param_out = None
    rec = MoveRecord(kind=kind, parameter=parameter, before=before, after=after)
    after_word = free_reduce(after.word())
    record = {
        "verb": "move",
        "kind": rec.kind,
        "parameter": param_out,
        "before": word_text(free_reduce(before.word())),
        "after": word_text(after_word),
        "strands": after.strands,
        "type": list(after.tv.parts),
    }
    lines = [
        f"kind: {rec.kind}",
        f"after: {word_text(after_word)}",
        f"type: ({', '.join(str(p) for p in after.tv.parts)})",
    ]
    _emit(args, record, lines)
    return 0


def _cmd_encode(args: argparse.Namespace) -> int:
    w = parse_word(args.word, args.strands)
    sc = step_code(w)
    code = encode_word(w)
    record = {
        "verb": "encode",
        "word": word_text(w),
        "strands": w.strands,
        "length": len(w.letters),
        "steps": str(sc),
        "code": code,
    }
    lines = [f"code: {code}", f"steps: {sc}"]
    _emit(args, record, lines)
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    if args.code is not None and args.code_flag is not None:
        raise ValueError("give the code once, positionally or with --code")
    code = args.code if args.code is not None else args.code_flag
    if code is None:
        raise ValueError("decode requires an integer code")
    w = word_from_code(code)
    sc = steps_from_int(code)
    record = {
        "verb": "decode",
        "code": code,
        "word": word_text(w),
        "strands": w.strands,
        "length": len(w.letters),
        "steps": str(sc),
        "symmetry": symmetry_class(w),
        "alternating": is_alternating(w),
    }
    lines = [
        f"word: {word_text(w)}",
        f"strands: {w.strands}",
        f"length: {len(w.letters)}",
        f"steps: {sc}",
        f"symmetry: {record['symmetry']}",
        f"alternating: {'yes' if record['alternating'] else 'no'}",
    ]
    _emit(args, record, lines)
    return 0


def _cmd_invariant(args: argparse.Namespace) -> int:
    w = parse_word(args.word, args.strands)
    comps = closure_components(w)
    wr = writhe(w)
    jones = jones_via_bracket(w, max_letters=args.max_word)
    p = homfly(w, max_letters=args.max_word)
    record = {
        "verb": "invariant",
        "word": word_text(w),
        "strands": w.strands,
        "components": comps,
        "writhe": wr,
        "jones": {"terms": [list(t) for t in jones.terms], "text": jones.text("A")},
        "homfly": {
            "terms": [[list(vz), c] for vz, c in p.terms],
            "text": p.text(),
        },
        "mfw_bound": mfw_bound(p),
    }
    lines = [
        f"components: {comps}",
        f"writhe: {wr}",
        f"jones: {jones.text('A')}",
        f"homfly: {p.text()}",
        f"mfw_bound: {mfw_bound(p)}",
    ]
    _emit(args, record, lines)
    return 0


def _row_lines(report) -> list[str]:
    status = "pass" if report.passed else "FAIL"
    strict = "" if report.mfw_equal else " (strict)"
    lines = [f"{report.label:<6} {status}  mfw={report.mfw_bound}{strict}"]
    lines.extend(f"    {f}" for f in report.failures)
    return lines


def _row_minimality(row, max_frontier):
    target = homfly(word_from_code(row.all_codes()[0]))
    return minimality_check(
        target, row.braid_index, row.tight_length, max_frontier=max_frontier
    )


# Enumeration frontiers stay tame for braid index <= 3 and length <= 10;
# beyond that minimality sweeps need an explicit --row (and likely a raised
# --max-frontier) to opt in.
_MINIMALITY_B = 3
_MINIMALITY_L = 10


def _cmd_verify_table(args: argparse.Namespace) -> int:
    rows = load_table()
    if args.row:
        by_label = {r.label: r for r in rows}
        missing = [x for x in args.row if x not in by_label]
        if missing:
            raise ValueError("unknown row label(s): " + " ".join(missing))
        selected = [by_label[x] for x in args.row]
        reports = [verify_row(r, check_jones=True) for r in selected]
        ok = all(r.passed for r in reports)
        if args.format == "records":
            for r in reports:
                print(json.dumps(r.record(), sort_keys=True))
        else:
            for r in reports:
                for line in _row_lines(r):
                    print(line)
    else:
        selected = list(rows)
        report = verify_table(jobs=args.jobs, check_jones=True)
        ok = report.passed
        if args.format == "records":
            for rec in report.records():
                print(json.dumps(rec, sort_keys=True))
        else:
            print(report.to_text())
    if args.minimality:
        if args.row:
            targets = selected
        else:
            targets = [
                r
                for r in selected
                if r.braid_index <= _MINIMALITY_B and r.tight_length <= _MINIMALITY_L
            ]
        for row in targets:
            rep = _row_minimality(row, args.max_frontier)
            ok = ok and rep.passed
            if args.format == "records":
                print(json.dumps({"minimality": row.label, **rep.record()}, sort_keys=True))
            else:
                status = "pass" if rep.passed else "FAIL"
                print(
                    f"minimality {row.label}: {status}  "
                    f"{len(rep.matches)} match(es) at length {rep.tight_length}"
                )
                for code, word in rep.shorter_matches:
                    print(f"    shorter match: code {code} word {word}")
    return 0 if ok else 1


def _enum_task(max_len, n_range, max_frontier, prefix):
    out = []
    for w in enumerate_webs(
        max_len, n_range=n_range, max_frontier=max_frontier, prefix=prefix
    ):
        out.append((w.strands, w.letters))
    return out


def _enum_emit(args: argparse.Namespace, w: BraidWord) -> None:
    code = encode_word(w)
    if args.format == "records":
        record = {
            "verb": "enumerate",
            "strands": w.strands,
            "length": len(w.letters),
            "code": code,
            "word": word_text(w),
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"n={w.strands} len={len(w.letters)} code={code} word: {word_text(w)}")


def _cmd_enumerate(args: argparse.Namespace) -> int:
    n_range = (args.strands,) if args.strands else None
    jobs = args.jobs or 1
    if jobs <= 1 or args.max_len <= 1:
        for w in enumerate_webs(
            args.max_len, n_range=n_range, max_frontier=args.max_frontier
        ):
            _enum_emit(args, w)
        return 0
    # Split the search tree by lead sign and first step; the bare one-letter
    # words need their own max_len=1 tasks to keep the serial order.
    tasks = []
    for lead in (1, -1):
        tasks.append((1, n_range, args.max_frontier, (lead, ())))
        for c in (0, 1, 2):
            tasks.append((args.max_len, n_range, args.max_frontier, (lead, (c,))))
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        for chunk in pool.starmap(_enum_task, tasks):
            for strands, letters in chunk:
                _enum_emit(args, BraidWord(strands, letters))
    return 0


def _add_word_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--word", required=True, help="braid word, e.g. '1 -2 -2 1'")
    p.add_argument("--strands", type=int, help="strand count (default: smallest)")


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("text", "records"),
        default="text",
        help="output style: human text or JSON lines",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidloom",
        description="Weave braids, code tight words, verify the minimal-web table.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("weave", help="conjugate a braid word into woven form")
    _add_word_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_weave)

    p = sub.add_parser("comb", help="factor a pure braid into free components")
    _add_word_flags(p)
    p.add_argument(
        "--order",
        choices=("ascending", "descending"),
        default="ascending",
        help="component order in the recomposition",
    )
    _add_format_flag(p)
    p.set_defaults(func=_cmd_comb)

    p = sub.add_parser("move", help="apply a move to a woven braid word")
    p.add_argument("kind", choices=tuple(_MOVE_KINDS), help="move to apply")
    _add_word_flags(p)
    p.add_argument("--type", help="expected type vector, e.g. '3' or '2,2'")
    p.add_argument("--kappa", help="conjugator band word, e.g. 'A[1,3] A[2,3]^-1'")
    p.add_argument("--sign", type=int, choices=(1, -1), default=1, help="stabilization sign")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("encode", help="integer code of a tight woven word")
    _add_word_flags(p)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="tight woven word of an integer code")
    p.add_argument("code", type=int, nargs="?", help="signed integer code, e.g. -5")
    p.add_argument("--code", dest="code_flag", type=int, help="alternative to the positional code")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("invariant", help="closure invariants of a braid word")
    _add_word_flags(p)
    p.add_argument(
        "--max-word",
        type=int,
        help="raise the polynomial oracles' word-length caps",
    )
    _add_format_flag(p)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("verify-table", help="recompute the embedded table")
    p.add_argument("--row", action="append", help="restrict to a row label, e.g. 9_34")
    p.add_argument("--jobs", type=int, help="worker processes (default: BRAIDLOOM_JOBS or 1)")
    p.add_argument(
        "--minimality",
        action="store_true",
        help="also search for shorter words with the same HOMFLY polynomial",
    )
    p.add_argument("--max-frontier", type=int, help="enumeration frontier cap")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_verify_table)

    p = sub.add_parser("enumerate", help="list all tight words up to a length")
    p.add_argument("--max-len", type=int, required=True, help="maximum word length")
    p.add_argument("--strands", type=int, help="restrict to one strand count")
    p.add_argument("--jobs", type=int, help="worker processes (default: 1)")
    p.add_argument("--max-frontier", type=int, help="enumeration frontier cap")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
