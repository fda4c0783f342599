import io
import subprocess
import sys

import pytest

from girthbound.bound import parse_certificate, verify_for_graph
from girthbound.cli import cli_main
from girthbound.colouring import format_rotation, icosahedron_rotation, parse_colouring
from girthbound.families import FAMILIES, c8pp, named
from girthbound.graph import format_graph, parse_graph
from girthbound.sp import is_hom, parse_hom


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli_main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


class TestGen:
    @pytest.mark.parametrize("argv", [["c8pp"], ["cycle", "5"], ["pc", "2"], ["kneser", "7", "3"], ["at", "3"],
                                      ["mycielski", "4"], ["gadget", "3", "1", "2", "3"], ["icosahedron"]])
    def test_round_trip(self, argv, capsys):
        code, out, _ = run(["gen"] + argv, capsys)
        assert code == 0
        g = parse_graph(out)
        assert format_graph(g) == out
        assert g == named(argv[0], *map(int, argv[1:]))

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        assert run(["gen", "c8pp", "-o", str(path)], capsys)[0] == 0
        assert parse_graph(path.read_text()) == c8pp()

    def test_bad_family(self, capsys):
        code, _, err = run(["gen", "nosuch"], capsys)
        assert code == 2 and err.startswith("error:")


class TestCheck:
    def test_yes_from_stdin(self, capsys, monkeypatch):
        code, out, _ = run(["check", "-", "--k", "2"], capsys, format_graph(c8pp()), monkeypatch)
        assert code == 0 and out.startswith("YES")

    def test_no_from_stdin(self, capsys, monkeypatch):
        code, out, _ = run(["check", "-", "--k", "2"], capsys, format_graph(named("cycle", 5)), monkeypatch)
        assert code == 1 and out.startswith("no ODD_GIRTH_MISMATCH")

    def test_mycielski_10(self, capsys, monkeypatch):
        code, _, _ = run(["check", "-", "--k", "10"], capsys, format_graph(named("mycielski", 10)), monkeypatch)
        assert code == 0

    def test_cert_always_verifies(self, files, tmp_path, capsys):
        for name, k in (("c8pp", 2), ("x15", 3), ("petersen", 2), ("coxeter", 3), ("pc", 2), ("at", 3)):
            b = named(name, k) if name in ("pc", "at") else named(name)
            g = files(f"{name}.txt", format_graph(b))
            cert = str(tmp_path / f"{name}.cert")
            assert run(["check", g, "--k", str(k), "--cert", cert], capsys)[0] == 0
            assert verify_for_graph(b, parse_certificate(open(cert).read()), k)
            code, out, _ = run(["verifycert", g, cert], capsys)
            assert code == 0 and out.strip() == "valid"

    def test_verifycert_rejects_other_graph(self, files, tmp_path, capsys):
        cert = str(tmp_path / "c.cert")
        run(["check", files("c8.txt", format_graph(c8pp())), "--k", "2", "--cert", cert], capsys)
        code, out, _ = run(["verifycert", files("p.txt", format_graph(named("cycle", 8))), cert], capsys)
        assert code == 1 and out.strip() == "invalid"
        # a supergraph with the same odd-girth is covered by the same certificate
        code, out, _ = run(["verifycert", files("w.txt", format_graph(named("wagner"))), cert], capsys)
        assert code == 0

    def test_no_witness(self, files, tmp_path, capsys):
        out_path = tmp_path / "w.txt"
        code, _, _ = run(["check", files("c5.txt", format_graph(named("cycle", 5))), "--k", "2",
                          "--no-witness", str(out_path)], capsys)
        assert code == 1
        w = parse_graph(out_path.read_text())
        code, out, _ = run(["issp", str(out_path)], capsys)
        assert code == 0
        code, out, _ = run(["oddgirth", str(out_path)], capsys)
        assert int(out) >= 5
        assert w.n > 5

    def test_no_witness_cap(self, files, tmp_path, capsys):
        code, _, err = run(["check", files("c7.txt", format_graph(named("cycle", 7))), "--k", "3",
                            "--no-witness", str(tmp_path / "w"), "--cap", "10"], capsys)
        assert code == 2 and "cap" in err

    def test_gate_has_no_witness(self, files, tmp_path, capsys):
        code, _, err = run(["check", files("c9.txt", format_graph(named("cycle", 9))), "--k", "2",
                            "--no-witness", str(tmp_path / "w")], capsys)
        assert code == 2

    @pytest.mark.parametrize("text", ["graph 2\ne 0 0\n", "nonsense\n"])
    def test_parse_errors_exit_2(self, text, files, capsys):
        code, _, err = run(["check", files("bad.txt", text), "--k", "2"], capsys)
        assert code == 2 and err.count("\n") == 1

    def test_missing_file(self, capsys):
        assert run(["check", "/nonexistent/x", "--k", "2"], capsys)[0] == 2

    def test_usage_error(self, capsys):
        assert run(["check"], capsys)[0] == 2
        assert run([], capsys)[0] == 2


class TestOtherCommands:
    def test_oddgirth(self, files, capsys):
        assert run(["oddgirth", files("g", format_graph(named("petersen")))], capsys)[1].strip() == "5"
        assert run(["oddgirth", files("h", format_graph(named("cycle", 6)))], capsys)[1].strip() == "INF"

    def test_issp(self, files, capsys):
        assert run(["issp", files("g", format_graph(named("cycle", 6)))], capsys)[0] == 0
        assert run(["issp", files("h", format_graph(named("complete", 4)))], capsys)[0] == 1

    def test_triples(self, capsys):
        code, out, _ = run(["triples", "2"], capsys)
        assert code == 0 and out == "1 1 2\n1 2 2\n2 2 2\n"
        assert run(["triples", "0"], capsys)[0] == 2

    def test_hom(self, files, capsys):
        c5 = files("c5", format_graph(named("cycle", 5)))
        p = files("p", format_graph(named("petersen")))
        code, out, _ = run(["hom", c5, p], capsys)
        m, n = parse_hom(out)
        assert code == 0 and n == 10 and is_hom(named("cycle", 5), named("petersen"), m)
        code, out, _ = run(["hom", p, c5], capsys)
        assert code == 1 and out.strip() == "NONE"
        assert run(["hom", p, c5, "--budget", "1"], capsys)[0] == 2
        assert run(["hom", c5, p, "--injective"], capsys)[0] == 0

    def test_budget_env(self, files, capsys, monkeypatch):
        monkeypatch.setenv("GIRTHBOUND_BUDGET", "1")
        c5 = files("c5", format_graph(named("cycle", 5)))
        p = files("p", format_graph(named("petersen")))
        assert run(["hom", p, c5], capsys)[0] == 2

    def test_randsp_and_maphom(self, files, tmp_path, capsys):
        g_path = str(tmp_path / "r.txt")
        assert run(["randsp", "--k", "2", "--n", "40", "--seed", "3", "-o", g_path], capsys)[0] == 0
        b = files("b", format_graph(c8pp()))
        cert = str(tmp_path / "b.cert")
        run(["check", b, "--k", "2", "--cert", cert], capsys)
        code, out, _ = run(["maphom", g_path, b, cert], capsys)
        m, _ = parse_hom(out)
        assert code == 0 and is_hom(parse_graph(open(g_path).read()), c8pp(), m)
        assert run(["randsp", "--k", "3", "--n", "3", "--seed", "0"], capsys)[0] == 2

    def test_lint(self, files, capsys):
        code, out, _ = run(["lint", files("g", format_graph(c8pp())), "--k", "2"], capsys)
        assert code == 0 and out.strip() == "clean"
        code, out, _ = run(["lint", files("h", format_graph(named("cycle", 5))), "--k", "2"], capsys)
        assert code == 1 and "adjacent-deg2" in out


class TestEdgecolour:
    def test_pc(self, capsys):
        code, out, _ = run(["edgecolour", "pc", "--k", "2"], capsys)
        col = parse_colouring(out)
        assert code == 0 and col.c == 5 and len(col.colour) == 40

    def test_induced(self, files, capsys):
        from girthbound.colouring import c8pp_embedding
        from girthbound.sp import format_hom
        g = files("g", format_graph(c8pp()))
        emb = files("e", format_hom(c8pp_embedding(), 16))
        code, out, _ = run(["edgecolour", "induced", g, emb], capsys)
        assert code == 0 and parse_colouring(out).is_proper(c8pp())
        bad = files("bad", format_hom([0] * 8, 16))
        assert run(["edgecolour", "induced", g, bad], capsys)[0] == 2
        odd = files("odd", format_hom(list(range(8)), 12))
        assert run(["edgecolour", "induced", g, odd], capsys)[0] == 2

    def test_superproper(self, files, capsys):
        g, rot = icosahedron_rotation()
        gp, rp = files("g", format_graph(g)), files("r", format_rotation(rot))
        code, out, _ = run(["edgecolour", "superproper", gp, rp, "--pairs", "1,2", "3,4"], capsys)
        assert code == 1 and out.strip() == "UNSAT"
        code, out, _ = run(["edgecolour", "superproper", gp, rp], capsys)
        assert code == 0 and parse_colouring(out).is_proper(g)
        assert run(["edgecolour", "superproper", gp, rp, "--pairs", "1-2"], capsys)[0] == 2


class TestReproduceAndEntryPoints:
    def test_reproduce_prints_table(self, capsys):
        code, out, _ = run(["reproduce", "--level", "quick"], capsys)
        lines = out.splitlines()
        assert lines[0].startswith("case")
        assert lines[-1].startswith("overall")
        assert any(line.startswith("c8pp@2") and line.endswith("pass") for line in lines)
        assert code == (0 if "overall PASS" in out else 1)

    def test_module_pipeline(self):
        gen = subprocess.run([sys.executable, "-m", "girthbound", "gen", "c8pp"], capture_output=True, text=True)
        chk = subprocess.run([sys.executable, "-m", "girthbound", "check", "-", "--k", "2"], input=gen.stdout,
                             capture_output=True, text=True)
        assert gen.returncode == 0 and chk.returncode == 0

    def test_every_family_name_has_generator(self):
        assert "c8pp" in FAMILIES
