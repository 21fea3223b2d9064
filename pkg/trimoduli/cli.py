"""Command-line entry point: python -m trimoduli <subcommand> ..."""

import argparse
import sys

from .cliquer import (Clique, ColoringError, a_of_k_scan, clique_number,
                      construct_coloring, divisibility_sequences, max_cliques,
                      sequence_is_clique, upper_bound, verify_clique)
from .cofactor import (CertificateError, certificate_text, check_certificate,
                       scalable_inverse_pair, verify_scalability)
from .handling import atomic_write_text, parse_clique_spec, parse_members, parse_range, read_text
from .hyperparams import load_hp
from .logger import Logger
from .reporting import stats_csv, yaml_report
from .rns import (ModulusSystemError, bench_roundtrip, build_system, load_system,
                  system_to_text)
from .trigraph import EXPORT_FORMATS, cached_graph, graph_stats, graph_to_text, export_graph

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# Divisibility-sequence cliques are checked by resultants below this host size
SEQ_RESULTANT_LIMIT = 10000


class UsageError(ValueError):
    pass


def build_parser():
    pa = argparse.ArgumentParser(
        prog="trimoduli", allow_abbrev=False,
        description="Pairwise coprime trinomial moduli 2^n - 2^k + 1 with scalable inverses.")
    pa.add_argument("--config", default=None, help="YAML file overriding hyperparameters.")
    pa.add_argument("--cache-dir", default=None, help="Graph cache root.")
    pa.add_argument("--no-cache", action="store_true", help="Rebuild graphs, ignoring the cache.")
    pa.add_argument("--quiet", action="store_true", help="No progress or log output.")
    sub = pa.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="Build T(n) and export it.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=EXPORT_FORMATS + ("trigraph",), default="edge-list")
    p.add_argument("--out", default=None)
    p.add_argument("--budget", action="store_true", help="Allow n above the default ceiling.")

    p = sub.add_parser("clique", help="Maximum cliques of T(n), or the a(k) table.")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", dest="n_range")
    p.add_argument("--table", action="store_true",
                   help="Print a(k) up to the range's upper end (range must start at 2 or 3).")
    p.add_argument("--all", action="store_true", help="List every maximum clique.")
    p.add_argument("--out", default=None)
    p.add_argument("--budget", action="store_true")

    p = sub.add_parser("color", help="Certified coloring of T(n) within the clique bound.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--budget", action="store_true")

    p = sub.add_parser("moduli", help="Build and verify a modulus system.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--members", required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="Re-verify a clique, certificate or system file.")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--clique", help="n=<n>,members=<a>,<b>,...")
    g.add_argument("--scalable", help="SCALABLE certificate file.")
    g.add_argument("--system", help="Moduli-set file.")

    p = sub.add_parser("stats", help="Edge and coprime densities as CSV.")
    p.add_argument("--range", dest="n_range", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--budget", action="store_true")

    p = sub.add_parser("seq", help="Divisibility-sequence cliques.")
    p.add_argument("--steps", type=int, default=5)

    p = sub.add_parser("bench", help="RNS roundtrip micro benchmark.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--members", required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--values", type=int, default=None)
    p.add_argument("--bits", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("inverse", help="Scalable inverse pair certificate.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--out", default=None)
    return pa


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        atomic_write_text(out, text)


def _guard(n, args, hp):
    if n < 2:
        raise UsageError(f"n must be at least 2, got {n}")
    if n > hp["n_max_unbudgeted"] and not getattr(args, "budget", False):
        raise UsageError(f"n={n} is above {hp['n_max_unbudgeted']}; this can take hours. "
                         f"Pass --budget to proceed.")


def _graph(n, args, hp, logger):
    return cached_graph(n, cache_dir=hp["cache_dir"], method=hp["graph_method"],
                        use_cache=not args.no_cache, logger=logger)


def cmd_graph(args, hp, logger):
    _guard(args.n, args, hp)
    g = _graph(args.n, args, hp, logger)
    text = graph_to_text(g) if args.format == "trigraph" else export_graph(g, args.format)
    _emit(text, args.out)
    return EXIT_OK


def cmd_clique(args, hp, logger):
    if args.n is not None:
        _guard(args.n, args, hp)
        g = _graph(args.n, args, hp, logger)
        if args.all:
            omega, cliques = max_cliques(g)
        else:
            omega, witness = clique_number(g)
            cliques = [witness]
        logger.log(f"omega(T({args.n})) = {omega}, bound {upper_bound(args.n)}")
        _emit("".join(c.to_record() + "\n" for c in cliques), args.out)
        return EXIT_OK
    rng = parse_range(args.n_range)
    if not rng:
        _emit("", args.out)
        return EXIT_OK
    _guard(rng[-1], args, hp)
    if args.table:
        if rng[0] > 3:
            raise UsageError("--table scans from n=3; the range must start at 2 or 3")
        k_max = upper_bound(rng[-1]) if rng[-1] > 1 else 2
        table, witnesses = a_of_k_scan(max(k_max, 2), rng[-1],
                                       graph_of=lambda n: _graph(n, args, hp, logger),
                                       logger=logger)
        lines = ["k,a(k),witness"]
        lines += [f"{k},{a},{' '.join(map(str, witnesses[k].members))}"
                  for k, a in table.items() if a is not None]
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    records = []
    for n in logger.progress(rng, desc="cliques"):
        _guard(n, args, hp)
        omega, witness = clique_number(_graph(n, args, hp, logger))
        records.append(witness.to_record())
    _emit("".join(r + "\n" for r in records), args.out)
    return EXIT_OK


def cmd_color(args, hp, logger):
    _guard(args.n, args, hp)
    coloring = construct_coloring(args.n, graph=_graph(args.n, args, hp, logger))
    _emit(coloring.to_text(), args.out)
    return EXIT_OK


def cmd_moduli(args, hp, logger):
    clique = Clique(args.n, parse_members(args.members))
    system = build_system(clique, args.c, scale_range=range(hp["c_min"], hp["c_max"] + 1),
                          logger=logger)
    _emit(system_to_text(system), args.out)
    return EXIT_OK


def cmd_verify(args, hp, logger):
    if args.clique is not None:
        n, members = parse_clique_spec(args.clique)
        ok = verify_clique(n, members)
    elif args.scalable is not None:
        check = check_certificate(read_text(args.scalable))
        ok = bool(check)
        if not ok:
            logger.log(f"identity_ok={check.identity_ok} failing_c={list(check.failing_c)}")
    else:
        load_system(args.system)
        ok = True
    print("OK" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_stats(args, hp, logger):
    rng = parse_range(args.n_range)
    stats = []
    for n in logger.progress(rng, desc="stats"):
        _guard(n, args, hp)
        stats.append(graph_stats(_graph(n, args, hp, logger)))
    _emit(stats_csv(stats), args.out)
    return EXIT_OK


def cmd_seq(args, hp, logger):
    if args.steps < 0:
        raise UsageError("--steps must be nonnegative")
    ok = True
    for seq in divisibility_sequences(args.steps):
        host = seq.members[-1] + 1
        if host < 3:
            how, good = "divisibility", True
        elif host <= SEQ_RESULTANT_LIMIT:
            how, good = "resultants", verify_clique(host, seq.members)
        else:
            how, good = "divisibility", sequence_is_clique(seq, host)
        ok &= good
        print(f"n={host} members={','.join(map(str, seq.members))} "
              f"verified={'yes' if good else 'no'} by={how}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_bench(args, hp, logger):
    system = build_system(Clique(args.n, parse_members(args.members)), args.c, scale_range=None,
                          logger=logger)
    values = hp["bench_values"] if args.values is None else args.values
    bits = args.bits or hp["bench_bits"] or None
    report = bench_roundtrip(system, values, bits, seed=hp["seed"])
    _emit(yaml_report(report), args.out)
    return EXIT_OK


def cmd_inverse(args, hp, logger):
    pair = scalable_inverse_pair(args.n, args.k, args.j)
    c_range = range(hp["c_min"], hp["c_max"] + 1)
    check = verify_scalability(pair, c_range)
    if not check.identity_ok:
        raise CertificateError("inverse polynomials fail the exact identity")
    if check.failing_c:
        logger.log(f"below scalability threshold at c={list(check.failing_c)}; "
                   f"passing from c={check.threshold}")
        c_range = range(check.threshold, hp["c_max"] + 1) if check.threshold else None
    if not c_range:
        raise CertificateError("no verified scale in range")
    _emit(certificate_text(pair, c_range), args.out)
    return EXIT_OK


COMMANDS = {
    "graph": cmd_graph, "clique": cmd_clique, "color": cmd_color, "moduli": cmd_moduli,
    "verify": cmd_verify, "stats": cmd_stats, "seq": cmd_seq, "bench": cmd_bench,
    "inverse": cmd_inverse,
}


def main(argv=None):
    pa = build_parser()
    try:
        args = pa.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        hp = load_hp(args.config)
        if args.cache_dir is not None:
            hp["cache_dir"] = args.cache_dir
        logger = Logger(frequency=hp["log_frequency"], silent=args.quiet)
        return COMMANDS[args.command](args, hp, logger)
    except (ColoringError, CertificateError) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError) as e:
        if isinstance(e, ModulusSystemError) and args.command == "verify":
            print(f"verification failed: {e}", file=sys.stderr)
            return EXIT_FAILED
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
