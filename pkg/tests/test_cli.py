import io
import subprocess
import sys

import pytest

from wstrees import free_trees
from wstrees.cli import GenConfig, bench, count, iter_records, main, run
from wstrees.convert import adj_list_from_ws, parse_edges
from wstrees.rootedgen import ConfigError
from wstrees.wseq import decode_str


def run_text(*argv):
    out, err = io.StringIO(), io.StringIO()
    from wstrees import cli

    args = cli.build_parser().parse_args(argv)
    if args.command == "bench":
        cfg = GenConfig(args.mode, args.n, count_only=True, cache_L=args.cache, bench_repeat=args.repeat)
        bench(cfg, out)
    else:
        cfg = GenConfig(args.command, args.n, format=args.format, count_only=args.count, cache_L=args.cache,
                        parallel=args.parallel)
        assert run(cfg, out, err) == 0
    return out.getvalue(), err.getvalue()


def test_free_count():
    out, err = run_text("free", "8", "--count")
    assert out == "23\n"
    assert "ms" in err


def test_rooted_ws():
    out, _ = run_text("rooted", "4", "--format", "ws")
    assert out == "4321\n4311\n4211\n4111\n"


def test_free_edges():
    out, _ = run_text("free", "2", "--format", "edges")
    assert out == "1-2\n"


def test_single_vertex():
    assert run_text("free", "1")[0] == "1\n"
    assert run_text("free", "1", "--format", "edges")[0] == "\n"
    assert run_text("rooted", "1", "--count")[0] == "1\n"


def test_edges_round_trip():
    out, _ = run_text("free", "9", "--format", "edges")
    lines = out.splitlines()
    assert [parse_edges(x) for x in lines] == [adj_list_from_ws(s) for s in free_trees(9)]


def test_adjlist_and_matrix():
    out, _ = run_text("free", "4", "--format", "adjlist")
    assert out == "2 3 4;1;1;1\n2 3;1;1 4;3\n"
    out, _ = run_text("free", "4", "--format", "matrix")
    assert out == "0111\n1000\n1000\n1000\n\n0110\n1000\n1001\n0010\n"
    out, _ = run_text("rooted", "3", "--format", "edges")
    assert out == "1-2 2-3\n1-2 1-3\n"


def test_deterministic_output():
    first = run_text("free", "10", "--format", "adjlist")[0]
    assert first == run_text("free", "10", "--format", "adjlist")[0]


def test_parallel_same_output():
    for mode in ("free", "rooted"):
        serial = list(iter_records(GenConfig(mode, 9, format="edges")))
        para = list(iter_records(GenConfig(mode, 9, format="edges", parallel=True)))
        assert serial == para
    assert count(GenConfig("free", 14, count_only=True, parallel=True)) == 3159


def test_dotted_fallback_warning():
    # order 36 is far too many trees; only the first few records are read
    cfg = GenConfig("rooted", 36, cache_L=5)
    first = next(iter_records(cfg))
    assert first == ".".join(str(k) for k in range(36, 0, -1))
    assert decode_str(first)[0] == 36
    out, err = io.StringIO(), io.StringIO()

    class Stop(Exception):
        pass

    class Limited(io.StringIO):
        def write(self, s):
            if self.tell() > 200:
                raise Stop
            return super().write(s)

    with pytest.raises(Stop):
        run(cfg, Limited(), err)
    assert "warning" in err.getvalue()


def test_bench_report():
    out, _ = run_text("bench", "free", "1", "--repeat", "2")
    assert "count=1 " in out and "repeats=2" in out
    out, _ = run_text("bench", "free", "12", "--repeat", "1")
    assert "count=551 " in out


def test_config_errors():
    with pytest.raises(ConfigError):
        GenConfig("free", 0)
    with pytest.raises(ConfigError):
        GenConfig("free", 10, cache_L=3)
    with pytest.raises(ConfigError):
        GenConfig("free", 20, cache_L=6)
    with pytest.raises(ConfigError):
        GenConfig("forest", 5)
    assert GenConfig("free", 22).L == 12
    assert GenConfig("rooted", 10).L == 9
    assert GenConfig("rooted", 30).L == 16


@pytest.mark.parametrize(
    "argv",
    [["free", "0"], ["free", "x"], ["free", "5", "--format", "dot"], ["free", "5", "--cache", "2"], []],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code != 0


def test_output_file(tmp_path):
    target = tmp_path / "trees.txt"
    assert main(["rooted", "5", "--output", str(target)]) == 0
    assert target.read_bytes() == b"54321\n54311\n54211\n54111\n53211\n53111\n52121\n52111\n51111\n"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "wstrees", "free", "8", "--count"], capture_output=True, text=True, check=True
    )
    assert res.stdout == "23\n"
