"""File format round-trips and every subcommand, driven through main()."""

import subprocess
import sys

import pytest

import woodall_packer as wp
from woodall_packer import cli


def gen(tmp_path, name="inst.txt", n=6, seed=4, extra=()):
    path = tmp_path / name
    code = cli.main([
        "gen", "--n", str(n), "--seed", str(seed), "--require-dicycle",
        "--out", str(path), *extra,
    ])
    assert code == cli.EXIT_OK
    return path


def test_format_parse_round_trip_is_byte_identical(tmp_path):
    seq, g = wp.generate(wp.GenConfig(n=9, seed=13, require_dicycle=True))
    p = wp.pack(g)
    inst = cli.instance_from(g, seq, p)
    text = cli.format_instance(inst)
    again = cli.format_instance(cli.parse_instance(text))
    assert text == again
    path = tmp_path / "roundtrip.txt"
    cli.write_instance(path, inst)
    assert cli.read_instance(path) == cli.parse_instance(text)


def test_parse_rejects_malformed_files():
    for text in (
        "not a header\n",
        "woodall-packer v1\nn 3\nm 1\n",
        "woodall-packer v1\nn 3\nm 1\narc 0 5\n",
        "woodall-packer v1\nn 3\nm 1\narc 0 1\nwat 0\n",
        "woodall-packer v1\nn 3\nm 1\narc 0 1\ntransversal 1 0 1\n",
        "woodall-packer v1\nn 4\nm 1\narc 0 1\nstep 3 0 1 1\n",
    ):
        with pytest.raises(cli.FormatError):
            cli.parse_instance(text)


def test_gen_is_deterministic(tmp_path):
    a = gen(tmp_path, "a.txt", n=11, seed=7)
    b = gen(tmp_path, "b.txt", n=11, seed=7)
    assert a.read_text() == b.read_text()


def test_gen_rejects_tiny_n(tmp_path, capsys):
    code = cli.main(["gen", "--n", "2", "--seed", "0", "--out", str(tmp_path / "x")])
    assert code == cli.EXIT_USAGE
    assert "usage error" in capsys.readouterr().err


def test_pack_writes_three_transversals(tmp_path, capsys):
    tri = tmp_path / "tri.txt"
    cli.write_instance(tri, cli.instance_from(wp.make_digraph(3, [(0, 1), (1, 2), (2, 0)])))
    assert cli.main(["pack", "--in", str(tri)]) == cli.EXIT_OK
    assert "packed 3 transversals" in capsys.readouterr().out
    inst = cli.read_instance(tri)
    assert inst.packing_value() is not None and len(inst.packing_value()) == 3


def test_pack_gen_output_end_to_end(tmp_path):
    src = gen(tmp_path, n=15, seed=3)
    out = tmp_path / "packed.txt"
    assert cli.main(["pack", "--in", str(src), "--out", str(out)]) == cli.EXIT_OK
    inst = cli.read_instance(out)
    report = wp.verify_packing(inst.digraph(), inst.packing_value())
    assert report.verdict
    # growth steps survive the round trip
    assert inst.construction() is not None


def test_pack_acyclic_input(tmp_path, capsys):
    path = tmp_path / "dag.txt"
    acyclic = wp.make_digraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    cli.write_instance(path, cli.instance_from(acyclic))
    assert cli.main(["pack", "--in", str(path)]) == cli.EXIT_ACYCLIC
    assert "acyclic" in capsys.readouterr().err


def test_pack_non_three_tree_is_usage(tmp_path, capsys):
    path = tmp_path / "c5.txt"
    cli.write_instance(path, cli.instance_from(
        wp.make_digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    ))
    assert cli.main(["pack", "--in", str(path)]) == cli.EXIT_USAGE
    assert "unsupported input" in capsys.readouterr().err


def test_pack_construction_failure_dumps_instance(tmp_path, capsys, monkeypatch):
    path = gen(tmp_path, n=7, seed=2)

    def refuse(g, deep_verify=False):
        raise wp.ConstructionFailed(g, "refused for the test")

    monkeypatch.setattr(cli, "pack", refuse)
    assert cli.main(["pack", "--in", str(path)]) == cli.EXIT_CONSTRUCTION
    assert "dumped" in capsys.readouterr().err
    dumped = path.with_name(path.name + ".failed")
    assert dumped.exists()
    assert cli.read_instance(dumped).digraph() == cli.read_instance(path).digraph()


def test_verify_accepts_and_reports(tmp_path, capsys):
    path = gen(tmp_path, n=8, seed=6)
    assert cli.main(["pack", "--in", str(path)]) == cli.EXIT_OK
    capsys.readouterr()
    assert cli.main(["verify", "--in", str(path)]) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert '"verdict": true' in out and '"disjoint": true' in out


def test_verify_flags_corruption(tmp_path, capsys):
    path = gen(tmp_path, n=8, seed=6)
    assert cli.main(["pack", "--in", str(path)]) == cli.EXIT_OK
    inst = cli.read_instance(path)
    # drop a whole class: the remaining ones are still transversals but a
    # dicycle now evades class 0 only if it relied on the dropped arcs
    broken = cli.InstanceFile(inst.n, inst.arcs, inst.steps, (inst.packing[0], inst.packing[0]) + inst.packing[2:])
    cli.write_instance(path, broken)
    capsys.readouterr()
    assert cli.main(["verify", "--in", str(path)]) == cli.EXIT_VERIFY
    assert '"disjoint": false' in capsys.readouterr().out


def test_verify_without_packing_is_usage(tmp_path, capsys):
    path = gen(tmp_path, n=5, seed=1)
    assert cli.main(["verify", "--in", str(path)]) == cli.EXIT_USAGE
    assert "no packing" in capsys.readouterr().err


def test_nu_values(tmp_path, capsys):
    tri = tmp_path / "tri.txt"
    cli.write_instance(tri, cli.instance_from(wp.make_digraph(3, [(0, 1), (1, 2), (2, 0)])))
    assert cli.main(["nu", "--in", str(tri)]) == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "3"
    digon = tmp_path / "digon.txt"
    cli.write_instance(digon, cli.instance_from(wp.make_digraph(2, [(0, 1), (1, 0)])))
    assert cli.main(["nu", "--in", str(digon)]) == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "2"


def test_nu_budget_exhaustion(tmp_path, capsys):
    path = gen(tmp_path, n=14, seed=5)
    assert cli.main(["nu", "--in", str(path), "--budget", "3"]) == cli.EXIT_BUDGET
    captured = capsys.readouterr()
    assert captured.out.strip() in {"1", "2", "3"}
    assert "lower bound" in captured.err


def test_fuzz_happy_path(tmp_path, capsys):
    code = cli.main([
        "fuzz", "--count", "8", "--min-n", "4", "--max-n", "9",
        "--seed", "1", "--out", str(tmp_path),
    ])
    assert code == cli.EXIT_OK
    out = capsys.readouterr().out
    assert "fuzzed 8 instances" in out and "girth 3:" in out
    assert not list(tmp_path.glob("fuzz-failure-*"))


def test_fuzz_dumps_on_injected_failure(tmp_path, capsys, monkeypatch):
    calls = []

    def sabotage(g, deep_verify=False):
        calls.append(g)
        raise wp.ConstructionFailed(g, "sabotaged")

    monkeypatch.setattr(cli, "pack", sabotage)
    code = cli.main([
        "fuzz", "--count", "3", "--min-n", "4", "--max-n", "6",
        "--seed", "2", "--out", str(tmp_path),
    ])
    assert code == cli.EXIT_CONSTRUCTION
    assert "dumped" in capsys.readouterr().err
    dumps = list(tmp_path.glob("fuzz-failure-*.txt"))
    assert len(dumps) == 1
    assert cli.read_instance(dumps[0]).digraph() == calls[0]


def test_fuzz_dumps_on_bad_packing(tmp_path, capsys, monkeypatch):
    def shortchange(g, deep_verify=False):
        return wp.Packing((frozenset(), frozenset(), frozenset()))

    monkeypatch.setattr(cli, "pack", shortchange)
    code = cli.main([
        "fuzz", "--count", "1", "--min-n", "5", "--max-n", "5",
        "--seed", "3", "--out", str(tmp_path),
    ])
    assert code == cli.EXIT_VERIFY
    assert "verification failed" in capsys.readouterr().err
    assert (tmp_path / "fuzz-failure-0.txt").exists()


def test_fuzz_usage_errors(capsys):
    assert cli.main(["fuzz", "--count", "-1"]) == cli.EXIT_USAGE
    assert cli.main(["fuzz", "--count", "1", "--min-n", "9", "--max-n", "4"]) == cli.EXIT_USAGE
    capsys.readouterr()


def test_unknown_command_is_usage(capsys):
    assert cli.main(["frobnicate"]) == cli.EXIT_USAGE
    capsys.readouterr()


def test_missing_file_is_io_error(tmp_path, capsys):
    assert cli.main(["pack", "--in", str(tmp_path / "absent.txt")]) == cli.EXIT_IO
    capsys.readouterr()


def test_module_entry_point(tmp_path):
    path = tmp_path / "inst.txt"
    run = subprocess.run(
        [sys.executable, "-m", "woodall_packer", "gen", "--n", "6", "--seed", "9",
         "--require-dicycle", "--out", str(path)],
        capture_output=True, text=True,
    )
    assert run.returncode == 0, run.stderr
    run = subprocess.run(
        [sys.executable, "-m", "woodall_packer", "pack", "--in", str(path)],
        capture_output=True, text=True,
    )
    assert run.returncode == 0, run.stderr
    assert "packed 3 transversals" in run.stdout
