"""Command-line front end.

    wstrees free 8 --count
    wstrees rooted 4 --format ws
    wstrees free 10 --format edges --output trees.txt
    wstrees bench free 18 --repeat 3
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, TextIO

from . import convert
from .freegen import free_partition, free_partitions
from .rootedgen import (
    ConfigError,
    RootedCache,
    free_cache_bound,
    get_cache,
    ilen,
    rooted_cache_bound,
    rooted_partition,
)
from .wseq import MAX_ENCODABLE, WeightSeq, format_ws

FORMATS = ("ws", "edges", "adjlist", "matrix")


@dataclass(frozen=True)
class GenConfig:
    mode: str  # "rooted" | "free"
    n: int
    format: str = "ws"
    count_only: bool = False
    cache_L: int | None = None  # None means automatic
    output: str | None = None
    bench_repeat: int = 1
    parallel: bool = False

    def __post_init__(self):
        if self.mode not in ("rooted", "free"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.n < 1:
            raise ConfigError(f"order must be at least 1, got {self.n}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if self.cache_L is not None:
            if self.cache_L < 4:
                raise ConfigError(f"--cache must be at least 4, got {self.cache_L}")
            if self.mode == "free" and self.cache_L < self.n // 2 + 1:
                raise ConfigError(f"free trees of order {self.n} need --cache >= {self.n // 2 + 1}")

    @property
    def L(self) -> int:
        if self.cache_L is not None:
            return self.cache_L
        return free_cache_bound(self.n) if self.mode == "free" else rooted_cache_bound(self.n)

    @property
    def needs_adjacency(self) -> bool:
        return self.mode == "free" and self.format != "ws"


def _partitions(cfg: GenConfig) -> list:
    if cfg.mode == "free":
        return free_partitions(cfg.n)
    if cfg.n == 1:
        return [0]
    return list(range(cfg.n - 1, 0, -1))


def _stream(cfg: GenConfig, part, cache: RootedCache) -> Iterator[WeightSeq]:
    if cfg.mode == "free":
        return free_partition(cfg.n, part, cache)
    if cfg.n == 1:
        return iter([(1,)])
    return rooted_partition(cfg.n, part, cache)


def _formatter(cfg: GenConfig, cache: RootedCache) -> Callable[[WeightSeq], str]:
    if cfg.format == "ws":
        return format_ws
    if cfg.mode == "free":
        def to_adj(s):
            return convert.adj_from_free_ws(s, cache)
    else:
        def to_adj(s):
            return convert.adj_list_from_ws(s, free=False)
    render = {
        "edges": convert.format_edges,
        "adjlist": convert.format_adjlist,
        "matrix": convert.format_matrix,
    }[cfg.format]
    return lambda s: render(to_adj(s))


def _records(cfg: GenConfig, parts, cache) -> Iterator[str]:
    fmt = _formatter(cfg, cache)
    for part in parts:
        for s in _stream(cfg, part, cache):
            yield fmt(s)


def _work(cfg: GenConfig, part):
    # runs in a worker process; the cache is rebuilt there once per process
    cache = get_cache(cfg.L, cfg.needs_adjacency)
    if cfg.count_only:
        return ilen(_stream(cfg, part, cache))
    return list(_records(cfg, [part], cache))


def count(cfg: GenConfig) -> int:
    parts = _partitions(cfg)
    if cfg.parallel:
        with ProcessPoolExecutor() as pool:
            return sum(pool.map(_work, [cfg] * len(parts), parts))
    cache = get_cache(cfg.L)
    return sum(ilen(_stream(cfg, p, cache)) for p in parts)


def iter_records(cfg: GenConfig) -> Iterator[str]:
    """Formatted records in enumeration order (the order is the same with ``parallel``)."""
    parts = _partitions(cfg)
    if cfg.parallel:
        with ProcessPoolExecutor() as pool:
            for chunk in pool.map(_work, [cfg] * len(parts), parts):
                yield from chunk
        return
    cache = get_cache(cfg.L, cfg.needs_adjacency)
    yield from _records(cfg, parts, cache)


def run(cfg: GenConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    t0 = time.perf_counter()
    if cfg.count_only:
        total = count(cfg)
        out.write(f"{total}\n")
        err.write(f"elapsed {1000 * (time.perf_counter() - t0):.1f} ms\n")
        return 0
    if cfg.format == "ws" and cfg.n > MAX_ENCODABLE:
        err.write(f"warning: weights above {MAX_ENCODABLE} present; writing dotted decimal sequences\n")
    sep = "\n\n" if cfg.format == "matrix" else "\n"
    first = True
    for rec in iter_records(cfg):
        if first:
            first = False
            out.write(rec)
        else:
            out.write(sep)
            out.write(rec)
    if not first:
        out.write("\n")
    out.flush()
    return 0


def bench(cfg: GenConfig, out: TextIO | None = None) -> int:
    """Time ``bench_repeat`` full count-only passes and report them."""
    out = out or sys.stdout
    if cfg.bench_repeat < 1:
        raise ConfigError("--repeat must be at least 1")
    get_cache(cfg.L)  # cache construction is not part of the timed pass
    times, counts = [], set()
    for _ in range(cfg.bench_repeat):
        t0 = time.perf_counter()
        counts.add(count(cfg))
        times.append(time.perf_counter() - t0)
    if len(counts) != 1:
        raise RuntimeError(f"counts differ between repeats: {sorted(counts)}")
    (total,) = counts
    out.write(
        f"mode={cfg.mode} n={cfg.n} L={cfg.L} count={total} "
        f"min={1000 * min(times):.1f}ms median={1000 * statistics.median(times):.1f}ms "
        f"repeats={cfg.bench_repeat}\n"
    )
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wstrees", description="Generate non-isomorphic rooted and free trees."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cache", type=int, default=None, metavar="L",
                       help="largest cached rooted-tree order (default: automatic)")
        p.add_argument("--parallel", action="store_true",
                       help="split the work by first-subtree order across processes")

    for mode in ("rooted", "free"):
        p = sub.add_parser(mode, help=f"enumerate {mode} trees of order n")
        p.add_argument("n", type=_positive_int)
        p.add_argument("--count", action="store_true", help="print only the number of trees")
        p.add_argument("--format", choices=FORMATS, default="ws")
        p.add_argument("--output", metavar="PATH")
        common(p)

    b = sub.add_parser("bench", help="time count-only passes")
    b.add_argument("mode", choices=("rooted", "free"))
    b.add_argument("n", type=_positive_int)
    b.add_argument("--repeat", type=_positive_int, default=3)
    common(b)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "bench":
            cfg = GenConfig(args.mode, args.n, count_only=True, cache_L=args.cache,
                            bench_repeat=args.repeat, parallel=args.parallel)
            return bench(cfg)
        cfg = GenConfig(args.command, args.n, format=args.format, count_only=args.count,
                        cache_L=args.cache, output=args.output, parallel=args.parallel)
    except ConfigError as exc:
        parser.error(str(exc))
    if cfg.output:
        with open(cfg.output, "w", newline="\n") as fh:
            return run(cfg, out=fh)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
