import json
import xml.etree.ElementTree as ET

import pytest

from pointcircle import catalog, configs, graphs, maps
from pointcircle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_lists_every_entry(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    names = [line.split()[0] for line in out.splitlines()]
    assert names == [e.name for e in catalog.entries()]
    assert len(set(names)) == len(names)


@pytest.mark.parametrize("entry", [e.name for e in catalog.entries()])
def test_every_entry_builds_and_round_trips(entry, tmp_path, capsys):
    name = entry.replace(":p", ":3")
    target = tmp_path / "obj"
    code, _, _ = run(capsys, "build", name, "-o", str(target))
    assert code == 0
    built = catalog.build(name)
    from pointcircle.cli import load

    back = load(str(target))
    if isinstance(built, graphs.Multigraph):
        assert graphs.graph_isomorphic(back, built) is not None
    elif isinstance(built, maps.RegularMap):
        assert back.counts == built.counts
        assert graphs.graph_isomorphic(maps.underlying_graph(back), maps.underlying_graph(built)) is not None
    else:
        assert configs.is_isomorphic(back, built) is not None


def test_build_klein_map_json(capsys):
    code, out, _ = run(capsys, "build", "klein-map")
    rec = json.loads(out)
    assert code == 0 and (rec["V"], rec["E"], rec["F"], rec["genus"]) == (56, 84, 24, 3)
    assert all(len(a) == 3 for a in rec["adjacency"])


def test_build_dot(capsys):
    code, out, _ = run(capsys, "build", "petersen", "--format", "dot")
    assert code == 0 and out.startswith("graph G {") and out.count("--") == 15


def test_analyze_pentagon_geometry(tmp_path, capsys):
    f = tmp_path / "pent.json"
    f.write_text(configs.to_json(catalog.build("pentagon-geometry")))
    code, out, _ = run(capsys, "analyze", str(f))
    rec = json.loads(out)
    assert code == 0
    assert rec["summary"]["v"] == 5 and rec["summary"]["r"] == 2 and rec["summary"]["linear"]
    assert rec["pentagonal"]["holds"]


def test_analyze_graph_text(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text(graphs.to_text(graphs.generalized_petersen(5, 2)))
    code, out, _ = run(capsys, "analyze", str(f))
    rec = json.loads(out)
    assert rec["graph"]["moore"] and rec["graph"]["automorphism_order"] == 120
    assert rec["geometry"]["pentagonal"]["holds"]


def test_quotient(capsys):
    code, out, _ = run(capsys, "quotient", "yp-map:5", "ab^-1")
    assert code == 0
    assert graphs.graph_isomorphic(graphs.from_text(out), graphs.cycle(10)) is not None
    code, out, _ = run(capsys, "quotient", "yp-map:3", "a b")
    assert graphs.graph_isomorphic(graphs.from_text(out), graphs.cycle(6)) is not None


def test_quotient_errors(capsys):
    assert run(capsys, "quotient", "klein-map", "a")[0] == 2
    assert run(capsys, "quotient", "petersen", "x")[0] == 2
    assert run(capsys, "quotient", "klein-map", "q")[0] == 2


def test_render(tmp_path, capsys):
    svg, js = tmp_path / "t.svg", tmp_path / "t.json"
    code, _, _ = run(capsys, "render", "7", "3", "--depth", "2", "-o", str(svg), "--json", str(js))
    assert code == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    assert json.loads(js.read_text())["p"] == 7


def test_exit_codes(tmp_path, capsys):
    assert run(capsys, "build", "no-such-thing")[0] == 2
    assert run(capsys, "build", "yp-map:4")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(capsys, "analyze", str(bad))[0] == 3
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == 3
    assert run(capsys, "render", "4", "4", "-o", str(tmp_path / "x.svg"))[0] == 3
    assert run(capsys, "render", "7", "3", "--depth", "12", "-o", str(tmp_path / "x.svg"))[0] == 4
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_seed_is_accepted_and_ignored(capsys):
    a = run(capsys, "--seed", "1", "build", "petersen")[1]
    b = run(capsys, "build", "petersen")[1]
    assert a == b


def test_verify_paper(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "paper", "--json", str(report))
    assert code == 0
    rec = json.loads(report.read_text())
    assert rec["passed"] and all(c["pass"] for c in rec["claims"])
    assert out.splitlines()[-1].endswith("claims passed")
    ids = [c["id"] for c in rec["claims"]]
    assert len(ids) == len(set(ids))
