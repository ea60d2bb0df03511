"""
Command line front end.

    klmask classify 3412
    klmask kl --w 4231 --x 1234
    klmask verify --n 5

Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

import argparse
import json
import sys

from . import perm as P
from .cluster import ClusterDecomposition, contract
from .errors import InvalidPermutation, KLMaskError
from .heap import commutativity_classes, heap_of, render_heap
from .hecke import cprime
from .ideals import CLASSES, is_ideal_pattern, upper_set
from .kl import kl_masks, kl_recursion, kl_table, verify
from .mask import (bound_violations, defect_stats, deodhar_bound_holds,
                   enumerate_masks, format_mask, is_deodhar_element,
                   parse_mask, subword_eval)
from .sweeps import CENSUS_LABELS, census, verify_sweep
from .words import format_word, is_reduced, parse_word, some_reduced_word

__all__ = ["parse_permutation", "build_parser", "dispatch", "main"]


def parse_permutation(text: str) -> tuple:
    """
    Accept ``"3,4,1,2"`` or, for ranks up to 9, the compact ``"3412"``.

    >>> parse_permutation("3412")
    (3, 4, 1, 2)
    """
    text = text.strip()
    if "," in text:
        toks = text.split(",")
        vals = []
        for pos, tok in enumerate(toks, 1):
            tok = tok.strip()
            if not tok.lstrip("-").isdigit():
                raise InvalidPermutation(f"entry {tok!r} at position {pos} is not an integer",
                                         position=pos)
            vals.append(int(tok))
    else:
        for pos, ch in enumerate(text, 1):
            if not ch.isdigit():
                raise InvalidPermutation(f"character {ch!r} at position {pos} is not a digit",
                                         position=pos)
        vals = [int(ch) for ch in text]
        if len(vals) > 9:
            raise InvalidPermutation("compact form needs n <= 9; use commas",
                                     position=10)
    return P.check(vals)


def _perm_arg(text):
    try:
        return parse_permutation(text)
    except InvalidPermutation as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _word_arg(text):
    try:
        return parse_word(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad word {text!r}; expected e.g. 2,3,1,2")


def _mask_arg(text):
    try:
        return parse_mask(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _oneline(w):
    return P.oneline_str(w)


def _emit(fmt, payload, text, tsv=None):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    if fmt == "tsv" and tsv is not None:
        return tsv.rstrip("\n")
    return text


def _need_w(args):
    w = args.w if args.w is not None else args.perm
    if w is None:
        raise UsageError("a permutation is required (positional or --w)")
    return w


class UsageError(Exception):
    pass


# --- verbs ------------------------------------------------------------------

def cmd_classify(args):
    w = _need_w(args)
    c = P.classify(w)
    data = {"w": list(w), **{k: getattr(c, k) for k in (
        "fully_commutative", "maximally_clustered", "freely_braided",
        "hexagon_pattern_free", "mc_hexagon_avoiding", "n321")}}
    text = "\n".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                     for k, v in data.items() if k != "w")
    tsv = "\t".join(data) + "\n" + "\t".join(
        _oneline(w) if k == "w" else str(v).lower() for k, v in data.items())
    return _emit(args.format, data, f"w={_oneline(w)}\n" + text, tsv)


def cmd_contract(args):
    w = _need_w(args)
    d = contract(w)
    lines = [f"w={_oneline(w)}", f"word={format_word(d.word)}", f"M={d.M}"]
    for start, c in d.clusters:
        lines.append(f"cluster start={start + 1} m={c.m} k={c.k} "
                     f"letters={format_word(c.letters)}")
    segs = " | ".join(format_word(d.word[lo:hi]) or "-" for _, lo, hi in d.segments)
    lines.append(f"segments={segs}")
    return _emit(args.format, {"w": list(w), **d.to_json()}, "\n".join(lines))


def _word_and_rank(args):
    if args.word is not None:
        n = args.rank or (max(args.word, default=0) + 1)
        if not is_reduced(args.word, n):
            raise UsageError(f"word {format_word(args.word)} is not reduced")
        return args.word, n
    w = _need_w(args)
    if P.classify(w).maximally_clustered:
        return contract(w).word, len(w)
    return some_reduced_word(w), len(w)


def cmd_heap(args):
    if args.all_classes:
        w = _need_w(args)
        heaps = sorted(commutativity_classes(w, args.cap), key=lambda h: h.word)
        blocks = [f"# word {format_word(h.word)}\n{render_heap(h)}" for h in heaps]
        data = {"w": list(w), "classes": [list(h.word) for h in heaps]}
        return _emit(args.format, data, "\n\n".join(blocks))
    word, n = _word_and_rank(args)
    h = heap_of(word, n)
    defects = None
    if args.mask is not None:
        defects = defect_stats(word, args.mask, n).defect_positions
    text = f"# word {format_word(word)}\n" + render_heap(h, args.mask, defects)
    data = {"word": list(word), "n": n,
            "entries": [{"column": x, "level": y} for x, y in h.entries],
            "covers": sorted([a, b] for a, b in h.covers)}
    if args.mask is not None:
        data["mask"] = format_mask(args.mask)
    return _emit(args.format, data, text)


def _method_values(method, x, w):
    out = {}
    if method in ("masks", "both"):
        out["masks"] = kl_masks(x, w)
    if method in ("recursion", "both"):
        out["recursion"] = kl_recursion(x, w)
    return out


def cmd_kl(args):
    w = _need_w(args)
    if args.x is None:
        method = "masks" if args.method == "both" else args.method
        table = kl_table(w, method)
        text = "\n".join(f"P[{_oneline(x)}] = {p}" for x, p in table.rows.items())
        return _emit(args.format, table.to_json(), text, table.to_tsv())
    if len(args.x) != len(w):
        raise UsageError("--x and --w must have the same rank")
    vals = _method_values(args.method, args.x, w)
    if args.method == "both":
        agree = vals["masks"] == vals["recursion"]
        text = f"P = {vals['masks']}\nrecursion: P = {vals['recursion']}\nagree={str(agree).lower()}"
    else:
        text = f"P = {next(iter(vals.values()))}"
    data = {"w": list(w), "x": list(args.x),
            **{k: {"P": v.to_json(), "text": str(v)} for k, v in vals.items()}}
    tsv = "x\tw\tmethod\tP\n" + "\n".join(
        f"{_oneline(args.x)}\t{_oneline(w)}\t{k}\t{v}" for k, v in vals.items())
    return _emit(args.format, data, text, tsv)


def cmd_cbasis(args):
    w = _need_w(args)
    h = cprime(w)
    ell = P.length(w)
    lines = [f"C'_{_oneline(w)} = q^{{-{ell}/2}} * (" if ell else f"C'_{_oneline(w)} = ("]
    for x, c in h.items():
        lines.append(f"  ({c.shift(ell)}) T[{_oneline(x)}]")
    lines.append(")")
    data = {"w": list(w), "terms": h.to_json()}
    tsv = "x\tcoefficient\n" + "\n".join(f"{_oneline(x)}\t{c}" for x, c in h.items())
    return _emit(args.format, data, "\n".join(lines), tsv)


def cmd_masks(args):
    if args.word is not None:
        word, n = _word_and_rank(args)
        d = ClusterDecomposition(n, word, ())
        if args.filter == "10star":
            raise UsageError("--filter 10star needs --w (a contracted expression)")
        args.filter = args.filter or "all"
    else:
        w = _need_w(args)
        d = contract(w)
        word, n = d.word, d.n
        args.filter = args.filter or "10star"
    rows = []
    for m in enumerate_masks(d, args.filter):
        st = defect_stats(word, m, n)
        proper = not all(m)
        rows.append({
            "mask": format_mask(m),
            "x": list(subword_eval(word, m, n)),
            "d": st.d,
            "zero_defects": st.zero_defects,
            "plain_zeros": st.plain_zeros,
            "bound_ok": deodhar_bound_holds(st, proper),
        })
    header = ["mask", "x", "d", "zero_defects", "plain_zeros", "bound_ok"]

    def fmt(r):
        return [r["mask"], _oneline(r["x"]), str(r["d"]), str(r["zero_defects"]),
                str(r["plain_zeros"]), str(r["bound_ok"]).lower()]

    body = "\n".join("\t".join(fmt(r)) for r in rows)
    tsv = "\t".join(header) + "\n" + body
    text = f"# word {format_word(word)} filter={args.filter} count={len(rows)}\n" + body
    data = {"word": list(word), "n": n, "filter": args.filter, "masks": rows}
    return _emit(args.format, data, text, tsv)


def cmd_verify(args):
    if args.n is not None:
        res = verify_sweep(args.n, sample=args.sample, seed=args.seed)
        data = {"n": res.n, "elements": res.elements, "pairs_checked": res.pairs_checked,
                "ok": res.ok, "failures": [f.to_json() for f in res.failures]}
        text = (f"n={res.n} elements={res.elements} pairs_checked={res.pairs_checked} "
                f"result={'pass' if res.ok else 'FAIL'}")
        return _emit(args.format, data, text), (0 if res.ok else 1)
    w = _need_w(args)
    rep = verify(w)
    text = (f"w={_oneline(w)} pairs_checked={rep.pairs_checked} "
            f"result={'pass' if rep.ok else 'FAIL'}")
    for x, a, b in rep.mismatches:
        text += f"\nmismatch x={_oneline(x)} masks={a} recursion={b}"
    for x, reason in rep.violations:
        text += f"\nviolation x={_oneline(x)} {reason}"
    return _emit(args.format, rep.to_json(), text), (0 if rep.ok else 1)


def cmd_census(args):
    if args.n is None:
        raise UsageError("census needs --n")
    rows = []
    for n in range(1, args.n + 1):
        counts = census(n)
        for label in sorted(CENSUS_LABELS):
            rows.append({"n": n, "label": label, "count": counts[label]})
    body = "\n".join(f"{r['n']}\t{r['label']}\t{r['count']}" for r in rows)
    return _emit(args.format, {"rows": rows}, body, "n\tlabel\tcount\n" + body)


def cmd_ideal(args):
    p = _need_w(args)
    cls = CLASSES[args.cls]
    ideal = is_ideal_pattern(p, cls, args.cap)
    data = {"p": list(p), "class": cls.name, "ideal": ideal}
    text = f"p={_oneline(p)} class={cls.name} ideal={str(ideal).lower()}"
    if args.upper:
        up = upper_set(p, cls, args.cap)
        data["upper_set"] = up.to_json()
        text += "\nupper_set=" + " ".join(up.to_json())
    return _emit(args.format, data, text)


def cmd_deodhar(args):
    w = _need_w(args)
    word = some_reduced_word(w)
    ok = is_deodhar_element(w)
    data = {"w": list(w), "word": list(word), "deodhar": ok,
            "violations": bound_violations(word, len(w))}
    return _emit(args.format, data,
                 f"w={_oneline(w)} word={format_word(word)} deodhar={str(ok).lower()}")


VERBS = {
    "classify": cmd_classify,
    "contract": cmd_contract,
    "heap": cmd_heap,
    "kl": cmd_kl,
    "cbasis": cmd_cbasis,
    "masks": cmd_masks,
    "verify": cmd_verify,
    "census": cmd_census,
    "ideal": cmd_ideal,
    "deodhar": cmd_deodhar,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("perm", nargs="?", type=_perm_arg, help="permutation in 1-line notation")
    common.add_argument("--w", type=_perm_arg)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--cap", type=int, default=10000, help="commutativity class cap")

    parser = argparse.ArgumentParser(prog="klmask", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("classify", parents=[common])
    sub.add_parser("contract", parents=[common])

    p = sub.add_parser("heap", parents=[common])
    p.add_argument("--word", type=_word_arg)
    p.add_argument("--rank", type=int)
    p.add_argument("--mask", type=_mask_arg)
    p.add_argument("--all-classes", action="store_true")

    p = sub.add_parser("kl", parents=[common])
    p.add_argument("--x", type=_perm_arg)
    p.add_argument("--method", choices=("masks", "recursion", "both"), default="masks")

    sub.add_parser("cbasis", parents=[common])

    p = sub.add_parser("masks", parents=[common])
    p.add_argument("--word", type=_word_arg)
    p.add_argument("--rank", type=int)
    p.add_argument("--filter", choices=("10star", "all"),
                   help="default 10star with --w, all with --word")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("census", parents=[common])
    p.add_argument("--n", type=int)

    p = sub.add_parser("ideal", parents=[common])
    p.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="mc")
    p.add_argument("--upper", action="store_true", help="also print U^P(p)")

    sub.add_parser("deodhar", parents=[common])
    return parser


def dispatch(args) -> tuple:
    """Run a parsed command; return ``(exit code, stdout text)``."""
    try:
        out = VERBS[args.verb](args)
    except UsageError as exc:
        return 2, _error(args, "UsageError", str(exc))
    except KLMaskError as exc:
        return 1, _error(args, type(exc).__name__, str(exc))
    if isinstance(out, tuple):
        text, code = out
        return code, text
    return 0, out


def _error(args, name, message):
    if args.format == "json":
        return json.dumps({"error": name, "message": message}, sort_keys=True)
    print(f"error: {name}: {message}", file=sys.stderr)
    return ""


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, text = dispatch(args)
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
