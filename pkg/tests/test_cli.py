import mrgeom as M
from mrgeom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["name", "v", "g", "r", "minimal"]
    assert len(lines) == 11
    assert any(row.split() == ["MR12", "12", "6", "6", "yes"] for row in lines)
    assert any(row.split() == ["MR15_5", "15", "7", "8", "yes"] for row in lines)


def test_catalog_tsv(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "tsv")
    assert code == 0
    assert "MR13\t13\t7\t6\tno" in out.splitlines()


def test_verify_pass_and_golden(capsys):
    code, out, _ = run(capsys, "verify", "--name", "MR15_5", "--format", "tsv")
    assert code == 0
    rows = dict(line.split("\t", 1) for line in out.splitlines())
    assert rows["proper"] == "yes"
    assert rows["minimal"] == "yes"
    assert rows["weight-sum-green"] == "28 expected 28 ok"
    assert rows["weight-sum-red"] == "21 expected 21 ok"
    assert rows["result"] == "pass"


def test_verify_improper_file(tmp_path, capsys):
    bad = tmp_path / "bad.fls"
    mr = M.named("MR12").geometry
    flipped = list(mr.colours)
    flipped[0] = 1 - flipped[0]
    M.flsio.save(bad, M.MRGeometry(mr.space, tuple(flipped)))
    code, out, _ = run(capsys, "verify", str(bad))
    assert code == 1
    assert "result" in out and "fail" in out


def test_verify_uncoloured_is_usage_error(tmp_path, capsys):
    path = tmp_path / "plain.fls"
    M.flsio.save(path, M.pg2(3))
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "colouring" in err


def test_show_round_trip_byte_identical(tmp_path, capsys):
    first = tmp_path / "one.fls"
    second = tmp_path / "two.fls"
    assert run(capsys, "show", "--name", "MR14_2", "--out", str(first))[0] == 0
    obj = M.flsio.load(first)
    M.flsio.save(second, obj)
    assert first.read_bytes() == second.read_bytes()
    assert M.find_isomorphism(obj, M.named("MR14_2").geometry, mode="first")


def test_iso_exit_codes(tmp_path, capsys):
    a = tmp_path / "a.fls"
    b = tmp_path / "b.fls"
    M.flsio.save(a, M.named("MR15_3r").geometry)
    M.flsio.save(b, M.named("MR15_3g").geometry)
    assert run(capsys, "iso", str(a), str(b), "--mr")[0] == 1
    code, out, _ = run(capsys, "iso", str(a), str(b))
    assert code == 0 and out.startswith("isomorphic yes")
    code, out, _ = run(capsys, "iso", str(a), str(a), "--mr", "--all")
    assert code == 0


def test_extend_writes_classes(tmp_path, capsys):
    src = tmp_path / "m14.fls"
    M.flsio.save(src, M.named("MR14_1").geometry)
    code, out, _ = run(capsys, "extend", str(src))
    assert code == 0
    assert "classes 2" in out
    assert (tmp_path / "m14-ext-1.fls").exists()
    assert (tmp_path / "m14-ext-2.fls").exists()
    assert "MR15_1" in out and "MR15_2" in out


def test_enumerate_filter(capsys):
    code, out, _ = run(capsys, "enumerate", "--points", "7",
                       "--filter", "2:3,3:6")
    assert code == 0
    assert out.splitlines()[:2] == ["points 7", "classes 1"]


def test_enumerate_out_dir(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--points", "5",
                       "--out", str(tmp_path / "c5"))
    assert code == 0
    files = sorted(p.name for p in (tmp_path / "c5").iterdir())
    assert "census.txt" in files
    assert sum(name.endswith(".fls") for name in files) == 4


def test_exist(tmp_path, capsys):
    out_path = tmp_path / "q4v16.fls"
    code, _, _ = run(capsys, "exist", "--q", "4", "--v", "16",
                     "--out", str(out_path))
    assert code == 0
    mr = M.flsio.load(out_path)
    assert mr.space.v == 16 and M.is_proper(mr.space, mr.colours)
    assert run(capsys, "exist", "--q", "3", "--v", "20")[0] == 2


def test_embed_check(capsys):
    code, out, _ = run(capsys, "embed-check")
    assert code == 0
    assert out.strip().splitlines()[-1] == "result pass"


def test_blocking(capsys, tmp_path):
    code, out, _ = run(capsys, "blocking", "--name", "MR13", "--essential")
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "blocking-sets 468"
    assert rows[1] == "sizes 6,7"
    assert rows[2] == "orbits 1"

    fano = tmp_path / "fano.fls"
    M.flsio.save(fano, M.pg2(2))
    code, out, _ = run(capsys, "blocking", str(fano))
    assert code == 1
    assert out.splitlines()[0] == "blocking-sets 0"


def test_byte_stable_reports(capsys):
    one = run(capsys, "verify", "--name", "MR12")[1]
    two = run(capsys, "verify", "--name", "MR12")[1]
    assert one == two
