"""
Command-line interface.

Exit codes: 0 success / true verdict, 1 false verdict, 2 usage error,
3 search cap exceeded or question left undecided.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import factorsearch as fs
from . import hurwitz as hw
from .garside import CLASSICAL, DUAL, equal, format_canonical, normalize
from .polygon import (
    ExcludedClass,
    GarsidePowerError,
    analyse_e2,
    antisymmetries,
    closed_representative,
    right_normal_form,
)
from .rewrite import PreconditionError, lemma5_match, lemma6_shift, verify_shift
from .words import ARTIN, BKL, WordError, exponent_sum, format_word, parse_word

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word(text: str, mode: str | None = None):
    try:
        return parse_word(text, mode)
    except WordError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from None


def _factorization(text: str) -> hw.Factorization:
    try:
        return hw.Factorization.from_json(text)
    except (ValueError, WordError) as exc:
        raise UsageError(f"bad factorization {text!r}: {exc}") from None


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# -- commands --------------------------------------------------------------------

def cmd_nf(args):
    structure = DUAL if args.dual else CLASSICAL
    nf = normalize(_word(args.word), structure)
    _emit(args, {"structure": structure, "inf": nf.inf, "factors": [format_word(f) for f in nf.factor_words()],
                 "form": format_canonical(nf)}, format_canonical(nf))
    return EXIT_OK


def cmd_eq(args):
    verdict = equal(_word(args.word1), _word(args.word2))
    _emit(args, {"equal": verdict}, str(verdict).lower())
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_e(args):
    e = exponent_sum(_word(args.word))
    _emit(args, {"exponent_sum": e}, str(e))
    return EXIT_OK


def _mode(args):
    return BKL if getattr(args, "bkl", False) else ARTIN


def cmd_qp(args):
    x = _word(args.word)
    rep = fs.report(x, _mode(args), args.cap)
    pf = rep["positive_form"]
    text = (f"quasipositive: {str(rep['quasipositive']).lower()}\n"
            f"positive form: {pf['W'] or '(empty)'} · {'D' if _mode(args) == ARTIN else 'd'}^-{pf['p']}\n"
            f"orbit_count: {rep['orbit_count']}")
    _emit(args, rep, text)
    return EXIT_OK if rep["quasipositive"] else EXIT_FALSE


def cmd_reps(args):
    x = _word(args.word)
    reps = fs.orbit_representatives(x, _mode(args), args.cap)
    payload = {"input": format_word(x), "mode": _mode(args), "representatives": [c.to_json() for c in reps]}
    lines = [f"I={list(c.index_set)}  {c.factorization}" for c in reps] or ["(not quasipositive)"]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if reps else EXIT_FALSE


def _orbit_summary(f: hw.Factorization, cap: int) -> dict:
    try:
        return {"size": hw.orbit(f, cap).size, "finite": True}
    except hw.InfiniteOrbit as exc:
        return {"size": None, "finite": False, "reason": str(exc)}
    except hw.CapExceeded:
        return {"size": None, "finite": None, "reason": f"cap {cap} exceeded"}


def cmd_orbits(args):
    x = _word(args.word)
    mode = _mode(args)
    W, p = fs.positive_form(x, mode)
    candidates = [fs.Candidate(W, I, p, mode, fs.build_W_I(W, I, mode)) for I in fs.iter_index_sets(W, p, mode)]
    groups = hw.orbit_partition([c.factorization for c in candidates], args.cap)
    by_key: dict = {}
    for c in candidates:
        by_key.setdefault(c.factorization.key, []).append(c)
    out = []
    for group in groups:
        sets = sorted({c.index_set for f in group for c in by_key[f.key]})
        rep = min((c for f in group for c in by_key[f.key]), key=lambda c: c.index_set)
        out.append({"representative": rep.to_json(), "index_sets": [list(s) for s in sets],
                    "orbit": _orbit_summary(rep.factorization, args.cap)})
    out.sort(key=lambda g: g["representative"]["I"])
    lines = []
    for g in out:
        o = g["orbit"]
        size = o["size"] if o["finite"] else ("infinite" if o["finite"] is False else "unknown")
        lines.append(f"I={g['representative']['I']}  candidates={len(g['index_sets'])}  orbit size={size}")
    _emit(args, {"input": format_word(x), "orbit_count": len(out), "orbits": out},
          "\n".join(lines) or "(not quasipositive)")
    return EXIT_OK if out else EXIT_FALSE


def cmd_equiv(args):
    f1, f2 = _factorization(args.f1), _factorization(args.f2)
    ok, moves = hw.equivalent(f1, f2, args.cap)
    witness = [str(m) for m in moves] if ok else None
    _emit(args, {"equivalent": ok, "witness": witness},
          f"{str(ok).lower()}" + (f"\nwitness: {' '.join(witness) or '(empty)'}" if ok else ""))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_orbit(args):
    f = _factorization(args.factorization)
    orb = hw.orbit(f, args.cap)
    payload = orb.to_json(witnesses=args.witnesses)
    _emit(args, payload, "\n".join([f"size: {orb.size}"] + [str(m) for m in orb.members]))
    return EXIT_OK


def cmd_rnf(args):
    try:
        form = right_normal_form(_word(args.word))
    except GarsidePowerError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"u": form.blocks(), "p": form.p, "closed": form.closed}, str(form))
    return EXIT_OK


def cmd_antisym(args):
    x = _word(args.word)
    try:
        form = closed_representative(x)
    except ExcludedClass as exc:
        _emit(args, {"excluded": exc.label}, str(exc))
        return EXIT_FALSE
    axes = antisymmetries(form.labels)
    payload = {"n": form.n, "labels": list(form.labels), "p": form.p,
               "antisymmetries": [list(a.axis) for a in axes], "count": len(axes)}
    _emit(args, payload, f"{form}\nlabels: {list(form.labels)}\nantisymmetries: {[list(a.axis) for a in axes]}")
    return EXIT_OK


def cmd_count_e2(args):
    x = _word(args.word)
    try:
        rep = analyse_e2(x)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = rep.to_json()
    _emit(args, payload, str(rep.count) + (f"  ({rep.note})" if rep.note else ""))
    return EXIT_OK


def cmd_selftest(args):
    from .selftest import run

    results = run(args.level, args.seed)
    if args.json:
        print(json.dumps([{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FALSE


def cmd_partner(args):
    w = _word(args.word, BKL).as_mode(BKL)
    try:
        m = lemma5_match(w, args.position)
    except (PreconditionError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    _emit(args, m.to_json(), f"{m.side.value} l={m.l} k={m.k}")
    return EXIT_OK


def cmd_shift(args):
    w = _word(args.word, BKL).as_mode(BKL)
    try:
        I = tuple(json.loads(args.index_set))
        J, moves = lemma6_shift(w, I, args.position)
    except (PreconditionError, IndexError, ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    ok = verify_shift(w, I, J, moves)
    _emit(args, {"J": list(J), "moves": [str(m) for m in moves], "verified": ok},
          f"J={list(J)}  moves: {' '.join(map(str, moves)) or '(none)'}  verified: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_FALSE


# -- parser ------------------------------------------------------------------------

def _common(defaults: bool) -> argparse.ArgumentParser:
    # The flags are accepted before or after the command name; only the
    # top-level copy carries real defaults.
    p = argparse.ArgumentParser(add_help=False)
    sup = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--json", action="store_true", help="machine-readable output", **sup)
    p.add_argument("--cap", type=int, help="search cap in states (default 10^6)",
                   **({"default": hw.DEFAULT_CAP} if defaults else sup))
    p.add_argument("--seed", type=int, help="seed for randomized checks",
                   **({"default": 0} if defaults else sup))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpbraid3",
        description="Quasipositive factorizations and Hurwitz orbits in the 3-strand braid group.",
        parents=[_common(True)],
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    common = _common(False)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("nf", cmd_nf, "Garside normal form")
    p.add_argument("word")
    p.add_argument("--dual", action="store_true", help="use the dual (band generator) structure")
    p = add("eq", cmd_eq, "decide equality of two braids")
    p.add_argument("word1")
    p.add_argument("word2")
    p = add("e", cmd_e, "exponent sum")
    p.add_argument("word")
    for name, fn, text in (("qp", cmd_qp, "quasipositivity verdict and positive form"),
                           ("reps", cmd_reps, "one factorization per Hurwitz orbit"),
                           ("orbits", cmd_orbits, "partition of all candidates into orbits")):
        p = add(name, fn, text)
        p.add_argument("word")
        p.add_argument("--bkl", action="store_true", help="use band-generator words (dual structure)")
    p = add("equiv", cmd_equiv, "Hurwitz equivalence of two factorizations (JSON)")
    p.add_argument("f1")
    p.add_argument("f2")
    p = add("orbit", cmd_orbit, "enumerate a finite Hurwitz orbit")
    p.add_argument("factorization")
    p.add_argument("--witnesses", action="store_true", help="include move sequences to every member")
    p = add("rnf", cmd_rnf, "right normal form u_1 ... u_n D^-p")
    p.add_argument("word")
    p = add("antisym", cmd_antisym, "closed representative and polygon antisymmetries")
    p.add_argument("word")
    p = add("count-e2", cmd_count_e2, "orbit count for exponent sum 2 via antisymmetries")
    p.add_argument("word")
    p = add("selftest", cmd_selftest, "run built-in checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")

    dev = sub.add_parser("dev", help="inspect the rewriting engines")
    dev_sub = dev.add_subparsers(dest="dev_command", metavar="TOOL", required=True)
    p = dev_sub.add_parser("partner", help="partner letter in a word equal to d^p", parents=[common])
    p.add_argument("word")
    p.add_argument("position", type=int)
    p.set_defaults(func=cmd_partner)
    p = dev_sub.add_parser("shift", help="shift an index set off a pair multiplying to d", parents=[common])
    p.add_argument("word")
    p.add_argument("index_set", help="JSON list of 1-based positions")
    p.add_argument("position", type=int)
    p.set_defaults(func=cmd_shift)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is not None and args.cap <= 0:
        parser.error("--cap must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except hw.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
