import json

import pytest

from latrad import serialize
from latrad.cli import main
from latrad.complete_intersection import ci_search
from latrad.configuration import configuration_of
from latrad.lattice import from_generators
from latrad.radical_cert import check_radical_generation, is_cover


def test_lattice_roundtrip(veronese):
    obj = serialize.lattice_to_obj(veronese.lattice)
    assert serialize.lattice_from_obj(obj) == veronese.lattice
    # entries travel as decimal strings
    assert all(isinstance(x, str) for row in obj["generators"] for x in row)


def test_lattice_roundtrip_big_entries():
    L = from_generators(2, [(10**40, -(10**40))])
    assert serialize.lattice_from_obj(serialize.lattice_to_obj(L)) == L


def test_vectors_roundtrip(veronese):
    vecs = [veronese.named["u1"], veronese.named["u11"]]
    obj = serialize.vectors_to_obj(vecs, ["u1", "u11"])
    got, names = serialize.vectors_from_obj(obj)
    assert got == vecs and names == ["u1", "u11"]
    obj = serialize.vectors_to_obj(vecs)
    got, names = serialize.vectors_from_obj(obj)
    assert got == vecs and names is None


def test_verdict_roundtrips(veronese, ojeda8):
    L = veronese.lattice
    seven = [veronese.named[k] for k in ("u1", "u3", "u4", "u6", "u7", "u9", "v")]
    for char in (0, 3):
        r = check_radical_generation(L, seven, char)
        obj = serialize.loads(serialize.dumps(serialize.radical_verdict_to_obj(r)))
        assert serialize.radical_verdict_from_obj(obj) == r
    c = is_cover(configuration_of(L), seven, with_map=True)
    obj = serialize.loads(serialize.dumps(serialize.cover_verdict_to_obj(c)))
    assert serialize.cover_verdict_from_obj(obj) == c
    v = ci_search(ojeda8.lattice, 1)
    obj = serialize.loads(serialize.dumps(serialize.ci_verdict_to_obj(v)))
    assert serialize.ci_verdict_from_obj(obj) == v


@pytest.fixture()
def ver_files(tmp_path):
    assert main(["instance", "veronese33", "-o", str(tmp_path / "lat.json"),
                 "--vectors-out", str(tmp_path / "vecs.json")]) == 0
    return tmp_path / "lat.json", tmp_path / "vecs.json"


def test_cli_faces(ver_files, capsys):
    lat, _ = ver_files
    assert main(["faces", str(lat)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["faces"]) == 8


def test_cli_check_cover(ver_files, tmp_path, capsys):
    lat, vecs_file = ver_files
    obj = json.loads(vecs_file.read_text())
    by_name = dict(zip(obj["names"], obj["vectors"]))
    good = [by_name[k] for k in ("u1", "u3", "u4", "u6", "u7", "u9", "u11")]
    cover_file = tmp_path / "cover.json"
    cover_file.write_text(json.dumps({"vectors": good}))
    assert main(["check-cover", str(lat), str(cover_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "pass"
    bad = [by_name[k] for k in ("u1", "u3", "u4", "u6", "u7", "u9")]
    bad_file = tmp_path / "bad.json"
    bad_file.write_text(json.dumps({"vectors": bad}))
    assert main(["check-cover", str(lat), str(bad_file)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["witness"] == [10]


def test_cli_check_radical(ver_files, tmp_path, capsys):
    lat, vecs_file = ver_files
    obj = json.loads(vecs_file.read_text())
    by_name = dict(zip(obj["names"], obj["vectors"]))
    seven = [by_name[k] for k in ("u1", "u3", "u4", "u6", "u7", "u9", "v")]
    f = tmp_path / "seven.json"
    f.write_text(json.dumps({"vectors": seven}))
    assert main(["check-radical", "--char", "3", str(lat), str(f)]) == 0
    capsys.readouterr()
    assert main(["check-radical", "--char", "0", str(lat), str(f)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "fail"
    assert out["cover"]["status"] == "pass"


def test_cli_make_cover(ver_files, capsys):
    lat, _ = ver_files
    assert main(["make-cover", str(lat)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["vectors"]) == 7


def test_cli_make_generators(tmp_path, capsys):
    lat = tmp_path / "oj.json"
    assert main(["instance", "ojeda:8", "-o", str(lat)]) == 0
    assert main(["make-generators", "--char", "0", str(lat)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["vectors"]) == 4
    assert main(["make-generators", "--char", "2", str(lat)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["vectors"]) == 3


def test_cli_make_generators_rejects_non_full(ver_files, capsys):
    lat, _ = ver_files
    assert main(["make-generators", "--char", "0", str(lat)]) == 2


def test_cli_ci(tmp_path, capsys):
    lat = tmp_path / "oj.json"
    assert main(["instance", "ojeda:8", "-o", str(lat)]) == 0
    assert main(["ci", "--bound", "1", str(lat)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "unknown_within_bound"
    rank1 = tmp_path / "r1.json"
    rank1.write_text(json.dumps({"ambient": 2, "generators": [["2", "-3"]]}))
    assert main(["ci", "--bound", "1", str(rank1)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "ci_certified"


def test_cli_min_cover(tmp_path, capsys):
    lat = tmp_path / "oj.json"
    vecs = tmp_path / "four.json"
    assert main(["instance", "ojeda:8", "-o", str(lat), "--vectors-out", str(tmp_path / "all.json")]) == 0
    obj = json.loads((tmp_path / "all.json").read_text())
    by_name = dict(zip(obj["names"], obj["vectors"]))
    vecs.write_text(json.dumps({"vectors": [by_name[k] for k in ("f1", "f2", "f3", "f123")]}))
    assert main(["min-cover", "--limit", "4", str(lat), str(vecs)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["exact"] == 4


def test_cli_random_instance(tmp_path):
    out = tmp_path / "r.json"
    assert main(["instance", "random:4,2,7,3", "-o", str(out)]) == 0
    L = serialize.lattice_from_obj(json.loads(out.read_text()))
    assert L.ambient == 4 and L.rank == 2


def test_cli_usage_errors(tmp_path, capsys):
    assert main(["instance", "nonsense", "-o", str(tmp_path / "x.json")]) == 2
    assert main(["faces", str(tmp_path / "missing.json")]) == 2
    # vectors outside the lattice are a usage error
    lat = tmp_path / "oj.json"
    assert main(["instance", "ojeda:8", "-o", str(lat)]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vectors": [["1", "0", "0", "0"]]}))
    assert main(["check-cover", str(lat), str(bad)]) == 2
