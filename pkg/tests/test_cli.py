import json

import pytest

from spacekern.cli import main
from spacekern.graphcore import KernelGraph, load_graph


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.gr"
    path.write_text("p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n")
    return path


def test_pc_kernel_exit_zero(tmp_path, c4_file, capsys):
    out = tmp_path / "kernel.gr"
    rc = main(["pc", "--input", str(c4_file), "--k", "2", "--out", str(out)])
    assert rc == 0
    kernel = KernelGraph.from_text(out.read_text())
    assert kernel.edge_multiset() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_fvs_forest_empty_kernel(tmp_path):
    path = tmp_path / "forest.gr"
    path.write_text("p 4 3\ne 0 1\ne 1 2\ne 2 3\n")
    rc = main(["fvs", "--input", str(path), "--k", "0"])
    assert rc == 0


def test_ce_no_instance_exit_one_with_report(tmp_path):
    path = tmp_path / "p3.gr"
    path.write_text("p 3 2\ne 0 1\ne 1 2\n")
    report = tmp_path / "run.json"
    rc = main(["ce", "--input", str(path), "--k", "0",
               "--report", str(report)])
    assert rc == 1
    data = json.loads(report.read_text())
    assert data["verdict"] == "no-instance"
    assert data["peak_words"] > 0
    assert report.with_suffix(".png").exists()


def test_usage_errors_exit_two(tmp_path):
    missing = tmp_path / "nope.gr"
    assert main(["pc", "--input", str(missing), "--k", "1"]) == 2
    bad = tmp_path / "bad.gr"
    bad.write_text("p 2 1\ne 0 9\n")
    assert main(["pc", "--input", str(bad), "--k", "1"]) == 2
    neg = tmp_path / "ok.gr"
    neg.write_text("p 2 1\ne 0 1\n")
    assert main(["pc", "--input", str(neg), "--k", "-1"]) == 2


def test_gen_is_deterministic(tmp_path, capsys):
    rc = main(["gen", "--family", "cycle-chord", "--n", "30", "--param", "2",
               "--seed", "5"])
    assert rc == 0
    first = capsys.readouterr().out
    main(["gen", "--family", "cycle-chord", "--n", "30", "--param", "2",
          "--seed", "5"])
    assert capsys.readouterr().out == first
    g = load_graph(first)
    assert g.n == 30 and g.m == 32


def test_oracle_subcommand(tmp_path, capsys):
    path = tmp_path / "k3.gr"
    path.write_text("p 3 3\ne 0 1\ne 1 2\ne 0 2\n")
    rc = main(["oracle", "--problem", "pc", "--input", str(path), "--k", "1"])
    assert rc == 0
    data = json.loads(capsys.readouterr().out)
    assert data["answer"] == "yes"
    assert len(data["minimal_solutions"]) == 3


def test_identical_invocations_byte_identical(tmp_path, c4_file):
    outs, reports = [], []
    for tag in ("a", "b"):
        out = tmp_path / f"kernel_{tag}.gr"
        rep = tmp_path / f"report_{tag}.json"
        rc = main(["pc", "--input", str(c4_file), "--k", "2",
                   "--out", str(out), "--report", str(rep)])
        assert rc == 0
        outs.append(out.read_bytes())
        data = json.loads(rep.read_text())
        data.pop("wall_time_ms")  # the one nondeterministic field
        reports.append(data)
    assert outs[0] == outs[1]
    assert reports[0] == reports[1]


def test_sidecar_written_for_truncated_chain(tmp_path):
    path = tmp_path / "p9.gr"
    g_text = "p 9 8\n" + "".join(f"e {i} {i+1}\n" for i in range(8))
    path.write_text(g_text)
    out = tmp_path / "kernel.gr"
    rc = main(["pc", "--input", str(path), "--k", "1", "--out", str(out)])
    assert rc == 0
    sidecar = out.with_suffix(out.suffix + ".sidecar").read_text().splitlines()
    assert any(line.startswith("chain ") for line in sidecar)


def test_ce_sidecar_lists_mods_and_triples(tmp_path):
    # the middle edge of a 5-path sits in two triples, so k=1 forces it
    path = tmp_path / "p5.gr"
    path.write_text("p 5 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n")
    out = tmp_path / "kernel.gr"
    rc = main(["ce", "--input", str(path), "--k", "1", "--out", str(out)])
    assert rc == 0
    lines = out.with_suffix(out.suffix + ".sidecar").read_text().splitlines()
    kinds = {line.split()[0] for line in lines}
    assert kinds == {"mod", "triple"}
    assert "mod del 1 2" in lines


def test_cd_subcommand_runs(tmp_path):
    path = tmp_path / "k13.gr"
    path.write_text("p 4 3\ne 0 1\ne 0 2\ne 0 3\n")
    rc = main(["cd", "--input", str(path), "--k", "2"])
    assert rc == 0  # two deletions make the star a cluster graph
