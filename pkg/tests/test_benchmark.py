import runpy
from pathlib import Path

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


def test_benchmark_runs(capsys):
    mod = runpy.run_path(str(BENCH))
    mod["main"](["--max-n", "4", "--repeat", "1"])
    out = capsys.readouterr().out
    assert "trace_grids" in out and "speedup" in out
