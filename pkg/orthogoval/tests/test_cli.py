import json

import pytest

from orthogoval.cli import RunConfig, build_parser, main, run


def test_construct_then_verify(tmp_path, capsys):
    out = tmp_path / "p.json"
    assert main(["construct", "--family", "ds13", "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["verify", "--in", str(out), "--mutual"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["orthogoval"] is True


def test_bounds(capsys):
    assert main(["bounds", "--q", "3", "--kind", "projective"]) == 0
    assert main(["bounds", "--q", "2", "--kind", "affine"]) == 0
    assert main(["bounds", "--johnson", "13", "4"]) == 0
    assert capsys.readouterr().out.split() == ["5", "unbounded", "65"]


def test_missing_cphf_is_a_usage_error(tmp_path):
    code = main(
        ["ca", "build", "--cphf", "missing.txt", "--out", str(tmp_path / "x")]
    )
    assert code == 2


def test_cphf_and_ca_pipeline(tmp_path, capsys):
    planes, cphf, ca = (tmp_path / name for name in ("p.json", "c.txt", "a.txt"))
    construct = ["construct", "--family", "cremona-pg", "--q", "2"]
    assert main([*construct, "--out", str(planes)]) == 0
    assert main(["cphf", "build", "--planes", str(planes), "--out", str(cphf)]) == 0
    assert main(["cphf", "verify", "--in", str(cphf)]) == 0
    assert main(["ca", "build", "--cphf", str(cphf), "--out", str(ca)]) == 0
    assert main(["ca", "verify", "--in", str(ca)]) == 0
    assert main(["ca", "verify", "--in", str(ca), "--lambda", "2"]) == 1
    assert "CA_1(15;3,7,2)" in capsys.readouterr().out


def test_extended_flag_must_match(tmp_path):
    planes, cphf = tmp_path / "p.json", tmp_path / "c.txt"
    main(["construct", "--family", "pencil-ag", "--q", "4", "--out", str(planes)])
    main(["cphf", "build", "--planes", str(planes), "--out", str(cphf), "--extended"])
    out = str(tmp_path / "a.txt")
    assert main(["ca", "build", "--cphf", str(cphf), "--out", out]) == 2
    assert main(["ca", "build", "--cphf", str(cphf), "--out", out, "--extended"]) == 0
    assert main(["ca", "verify", "--in", out]) == 0


def test_reproduce(capsys):
    assert main(["reproduce", "--list"]) == 0
    assert "q8-extended-λ1" in capsys.readouterr().out
    assert main(["reproduce", "q2-proj-lambda1"]) == 0
    assert main(["reproduce", "q99-proj-λ1"]) == 2


def test_search_and_clique(tmp_path, capsys):
    mats = tmp_path / "m.txt"
    search = ["search", "matrices", "--n", "2", "--count", "3"]
    assert main([*search, "--out", str(mats)]) == 0
    capsys.readouterr()
    assert main(["search", "clique", "--matrices", str(mats)]) == 0
    assert json.loads(capsys.readouterr().out)["vertices"] == 4


def test_scan_and_ovals(capsys):
    assert main(["scan", "multipliers", "--limit", "100"]) == 0
    assert json.loads(capsys.readouterr().out) == [3]
    assert main(["search", "ovals", "--q", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["max_set_size"] == 2


def test_design(tmp_path, capsys):
    out = tmp_path / "m4.json"
    construct = ["construct", "--family", "matrix-power", "--q", "4"]
    assert main([*construct, "--out", str(out)]) == 0
    capsys.readouterr()
    assert main(["design", "--in", str(out), "--point", "0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["union"]["steiner"] is True
    assert payload["derived"]["parallel_classes"] == 7


def test_family_order_errors(tmp_path):
    out = str(tmp_path / "p.json")
    assert main(["construct", "--family", "phi-k", "--q", "3", "--out", out]) == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "format-version 1" in capsys.readouterr().out


def test_run_config_seed():
    args = build_parser().parse_args(["search", "matrices", "--n", "2", "--count", "1"])
    config = RunConfig.from_namespace(args)
    assert config.command == ("search", "matrices")
    assert config.seed() == 0
    assert RunConfig(("bounds",), {"seed": 5}).seed() == 5
    assert run(RunConfig(("nothing",))) == 2


def test_ca_build_expands_every_row_unless_told(tmp_path, capsys):
    planes, cphf = tmp_path / "p.json", tmp_path / "c.txt"
    out = str(tmp_path / "a.txt")
    main(["construct", "--family", "ds13", "--out", str(planes)])
    main(["cphf", "build", "--planes", str(planes), "--out", str(cphf)])
    capsys.readouterr()
    assert main(["ca", "build", "--cphf", str(cphf), "--out", out]) == 0
    assert "CA_1(105;3,13,3)" in capsys.readouterr().out
    build = ["ca", "build", "--cphf", str(cphf), "--out", out, "--rows", "2"]
    assert main(build) == 0
    assert "CA_1(53;3,13,3)" in capsys.readouterr().out
    assert main(["ca", "verify", "--in", out]) == 0
    assert main([*build[:-1], "9"]) == 2


def test_clique_over_plane_directory(tmp_path, capsys):
    folder = tmp_path / "planes"
    folder.mkdir()
    main(["construct", "--family", "ds13", "--out", str(folder / "ds13.json")])
    capsys.readouterr()
    assert main(["search", "clique", "--planes", str(folder)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vertices"] == 4
    assert payload["size"] == 4
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["search", "clique", "--planes", str(empty)]) == 2
    assert main(["verify", "--in", str(empty)]) == 2
