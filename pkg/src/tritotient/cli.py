"""Command-line entry point: ``tritotient <command> ...``.

Plain output prints one result per line. ``--json`` prints one JSON object per
line instead. Exit status: 0 on success, 1 when a ``verify`` suite fails, 2 on
bad input (with a one-line message on stderr).
"""
import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import enumeration, lattice, polytope, word
from .suites import SUITES, run_suite

__all__ = ["CommandResult", "run", "main"]


@dataclass
class CommandResult:
    status: int = 0
    records: list = field(default_factory=list)  # (plain line, json object)
    error: str = ""
    json: bool = False

    def emit(self, text, obj):
        self.records.append((text, obj))

    def render(self, as_json=False):
        if as_json:
            return "".join(json.dumps(obj, sort_keys=True) + "\n" for _, obj in self.records)
        return "".join(text + "\n" for text, _ in self.records)


def _csv(xs):
    return ",".join(str(x) for x in xs)


def _parse_word(text):
    try:
        w = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    return w


def _cmd_word(args, res):
    if args.runs:
        rw = word.word_of_fast(args.a, args.N)
        res.emit(str(rw), {"a": args.a, "N": args.N, "runs": [list(r) for r in rw.runs]})
    else:
        w = word.word_of(args.a, args.N)
        res.emit(_csv(w), {"a": args.a, "N": args.N, "word": list(w)})


def _cmd_residue(args, res):
    w = _parse_word(args.word)
    r = enumeration.word_to_residue(w)
    res.emit(f"{r.a} {r.N}", {"word": list(w), "a": r.a, "N": r.N})


def _cmd_sigma(args, res):
    v = word.sigma(args.a, args.N)
    res.emit(str(v), {"a": args.a, "N": args.N, "sigma": v})


def _cmd_powersum(args, res):
    v = word.power_sum(args.a, args.N, args.e)
    res.emit(str(v), {"a": args.a, "N": args.N, "e": args.e, "power_sum": v})


def _cmd_cfrac(args, res):
    cf = word.cfrac(args.a, args.N)
    res.emit(str(cf), {"a": args.a, "N": args.N, "cfrac": list(cf.terms)})


def _cmd_enumerate(args, res):
    if args.count_only:
        n = enumeration.count_words(args.N)
        res.emit(str(n), {"N": args.N, "count": n})
        return
    for w in enumeration.enumerate_words(args.N):
        res.emit(_csv(w), {"N": args.N, "word": list(w)})


def _cmd_catalan(args, res):
    words = enumeration.enumerate_unimodular(args.n)
    if args.count_only:
        res.emit(str(len(words)), {"n": args.n, "count": len(words)})
        return
    for w in words:
        res.emit(_csv(w), {"n": args.n, "word": list(w)})


def _cmd_classes(args, res):
    for cls in enumeration.reversal_orbits(enumeration.enumerate_words(args.N)):
        res.emit(" ".join(_csv(w) for w in cls), {"N": args.N, "class": [list(w) for w in cls]})


def _cmd_latnorm(args, res):
    w = _parse_word(args.word)
    v = lattice.minimal_norm(lattice.LatticeT(w))
    res.emit(str(v), {"word": list(w), "minimal_norm": v})


def _load_matrix(path):
    try:
        return polytope.SymMatrix.load(path)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None


def _cmd_levelset(args, res):
    A = _load_matrix(args.file)
    for p in polytope.enumerate_level_set(A, args.N):
        res.emit(_csv(p), {"N": args.N, "point": list(p)})


def _cmd_hull(args, res):
    A = _load_matrix(args.file)
    pts = polytope.enumerate_level_set(A, args.N)
    if not pts:
        raise ValueError(f"L_A({args.N}) is empty")
    h = polytope.hull(pts)
    res.emit(f"dim {h.dim}", {"dim": h.dim, "simplex": h.is_simplex})
    for v in h.vertices:
        res.emit(f"vertex {_csv(v)}", {"vertex": list(v)})
    for n, c in h.equations:
        res.emit(f"equation {_csv(n)} = {c}", {"equation": list(n), "offset": c})
    for f in h.facets:
        res.emit(
            f"facet {f} : {' '.join(_csv(v) for v in f.vertices)}",
            {
                "facet": list(f.normal),
                "sense": f.sense,
                "offset": f.offset,
                "vertices": [list(v) for v in f.vertices],
            },
        )


def _cmd_sigma_table(args, res):
    if args.n_max < 2:
        raise ValueError("Nmax must be >= 2")
    text = word.format_sigma_table(args.n_max)
    rows = word.sigma_table(args.n_max)
    lines = text.rstrip("\n").split("\n")
    res.emit(lines[0], {"header": list(range(1, args.n_max))})
    for line, (N, cells) in zip(lines[1:], rows):
        res.emit(line, {"N": N, "sigma": cells})


def _cmd_verify(args, res):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        rep = run_suite(name)
        res.emit(
            str(rep),
            {"suite": name, "ok": rep.ok, "checked": rep.checked, "violations": rep.violations},
        )
        if not rep.ok:
            res.status = 1


def _cmd_bench_powersum(args, res):
    if args.bits < 2:
        raise ValueError("BITS must be >= 2")
    N = (1 << args.bits) - 1
    cases = [(N - 1, N), (1, N), (2, N), ((N + 1) // 2, N)]
    for a, M in cases:
        for e in (0, 1):
            t0 = time.perf_counter()
            fast = word.power_sum(a, M, e)
            t_fast = time.perf_counter() - t0
            length = word.power_sum(a, M, 0)
            if length <= args.naive_cap:
                t0 = time.perf_counter()
                naive = word.power_sum_naive(a, M, e, cap=args.naive_cap)
                t_naive = time.perf_counter() - t0
                agree = naive == fast
                naive_txt = f"{t_naive:.6f}s agree={agree}"
            else:
                t_naive = None
                agree = None
                naive_txt = "skipped"
            res.emit(
                f"a={a} e={e} length={length} fast={t_fast:.6f}s naive={naive_txt}",
                {
                    "bits": args.bits,
                    "a": a,
                    "N": M,
                    "e": e,
                    "length": length,
                    "fast_seconds": t_fast,
                    "naive_seconds": t_naive,
                    "agree": agree,
                },
            )
            if agree is False:
                res.status = 1


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="line-delimited JSON output")
    p = argparse.ArgumentParser(prog="tritotient", parents=[common],
                                description="Tridiagonal words, totients and level-set polytopes.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    def pair(sp):
        sp.add_argument("a", type=int)
        sp.add_argument("N", type=int)

    sp = add("word", _cmd_word, "W(a, N), comma-separated")
    pair(sp)
    sp.add_argument("--runs", action="store_true", help="run-length form letter^count")
    sp = add("residue", _cmd_residue, "residue class of a word")
    sp.add_argument("word", help="comma-separated letters")
    pair(add("sigma", _cmd_sigma, "trace minus dimension of T(W(a, N))"))
    sp = add("powersum", _cmd_powersum, "sum of letter**e over W(a, N)")
    pair(sp)
    sp.add_argument("e", type=int)
    pair(add("cfrac", _cmd_cfrac, "continued fraction of a/N"))
    sp = add("enumerate", _cmd_enumerate, "all words of determinant N")
    sp.add_argument("N", type=int)
    sp.add_argument("--count-only", action="store_true")
    sp = add("catalan", _cmd_catalan, "unimodular positive definite words of length n")
    sp.add_argument("n", type=int)
    sp.add_argument("--count-only", action="store_true")
    sp = add("classes", _cmd_classes, "words of determinant N up to reversal")
    sp.add_argument("N", type=int)
    sp = add("latnorm", _cmd_latnorm, "minimal norm of the type T lattice of a word")
    sp.add_argument("word", help="comma-separated letters >= 2")
    sp = add("levelset", _cmd_levelset, "integral diagonal shifts with determinant N")
    sp.add_argument("file")
    sp.add_argument("N", type=int)
    sp = add("hull", _cmd_hull, "vertices and facets of the level-set hull")
    sp.add_argument("file")
    sp.add_argument("N", type=int)
    sp = add("sigma-table", _cmd_sigma_table, "table of sigma(a, N) for N <= Nmax")
    sp.add_argument("n_max", type=int, metavar="Nmax")
    sp = add("verify", _cmd_verify, "run a named invariant suite")
    sp.add_argument("suite", choices=list(SUITES) + ["all"])
    sp = add("bench-powersum", _cmd_bench_powersum, "time fast against naive power sums")
    sp.add_argument("bits", type=int, metavar="BITS")
    sp.add_argument("--naive-cap", type=int, default=10**6,
                    help="longest word to materialize for the naive sum")
    return p


def run(argv) -> CommandResult:
    """Parse ``argv`` and execute; never writes to stdout or exits."""
    args = _parser().parse_args(argv)
    res = CommandResult()
    try:
        args.func(args, res)
    except (ValueError, ArithmeticError) as exc:
        res.status = 2
        res.records = []
        res.error = str(exc) or type(exc).__name__
    res.json = getattr(args, "json", False)
    return res


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    res = run(argv)
    if res.status == 2:
        print(f"error: {res.error}", file=sys.stderr)
        return 2
    sys.stdout.write(res.render(res.json))
    return res.status


if __name__ == "__main__":
    sys.exit(main())
