import math
import shutil
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cosetinv import io
from cosetinv.cli import main
from cosetinv.errors import ParseError
from cosetinv.invariants import Affine, Diagonal, Extension, Parafermion, PsuRestricted, U1, tau
from cosetinv.surgery import BraidWord, Chain, FramedLink, Lens, format_link_text


@pytest.fixture(autouse=True)
def cache(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("COSETINV_CACHE_DIR", str(d))
    return d


THEORIES = ["su:N=2,k=1", "su:N=3,k=2", "u1:k=3", "parafermion:k=2", "diagonal:N=2,m1=1,m2=1",
            "extension:N=2,k=4,m=2", "psu:m=2,n=3"]


@pytest.mark.parametrize("spec", THEORIES)
def test_theory_roundtrip(spec):
    assert io.format_theory(io.parse_theory(spec)) == spec


def test_parse_theory_values():
    assert io.parse_theory("su:N=2,k=1") == Affine(2, 1)
    assert io.parse_theory("diagonal: N = 3 , m1=1,m2=2") == Diagonal(3, 1, 2)
    assert io.parse_theory("extension:m=2,N=2,k=4") == Extension(2, 4, 2)
    assert io.parse_theory("psu:m=3,n=2") == PsuRestricted(3, 2)
    assert io.parse_theory("u1:k=4") == U1(4)


@pytest.mark.parametrize("spec,pos", [
    ("su", 2), ("so:N=2", 0), ("su:N=2", 6), ("su:N=2,k=x", 7), ("su:N=2,k=1,k=2", 11),
    ("su:N=1,k=2", 3), ("su:N=2,q=1", 7), ("parafermion:k=0", 12),
])
def test_parse_theory_errors(spec, pos):
    with pytest.raises(ParseError) as e:
        io.parse_theory(spec)
    assert e.value.position == pos


def test_parse_manifold(tmp_path):
    assert io.parse_manifold("lens:5,3") == Lens(5, 3)
    assert io.parse_manifold("lens:1,1") == Lens(1, 0)
    assert io.parse_manifold("chain:2,-3,4") == Chain((2, -3, 4))
    link = FramedLink(BraidWord(2, (1, 1)), None, (1, -1))
    f = tmp_path / "hopf.link"
    f.write_text(format_link_text(link))
    assert io.parse_manifold(f"link:{f}") == link
    for bad in ["lens:4,2", "lens:3", "chain:2,a", "torus:2", "link:/nonexistent/x", "lens"]:
        with pytest.raises(ParseError):
            io.parse_manifold(bad)


def test_table_contents():
    text = io.render_table(Affine(2, 1))
    vals = io.parse_table_floats(text)
    assert text.startswith(io.TABLE_VERSION + "\n")
    assert abs(vals["rank"] - math.sqrt(2)) < 1e-15
    assert "size 2" in text.splitlines()
    assert vals["dims"] == pytest.approx([1.0, 1.0], abs=1e-15)
    t = io.render_table(Parafermion(2))
    assert "size 3" in t.splitlines()
    assert sum(1 for line in t.splitlines() if line.startswith("sector ")) == 3
    r = io.render_table(PsuRestricted(2, 3))
    assert "size 2" in r.splitlines()


def test_table_floats_lossless():
    from cosetinv.affine import build_affine
    md = build_affine(3, 2)
    vals = io.parse_table_floats(io.render_table(Affine(3, 2)))
    assert vals["rank"] == float(md.rank)
    assert vals["anomaly"] == complex(md.anomaly)
    assert vals["dims"] == [float(d) for d in md.dims]


@pytest.mark.parametrize("spec", THEORIES)
def test_cache_byte_identical(spec, cache):
    th = io.parse_theory(spec)
    fresh = io.render_table(th)
    first, hit1 = io.cached_table(th)
    second, hit2 = io.cached_table(th)
    assert (hit1, hit2) == (False, True)
    assert first == second == fresh
    files = list(cache.iterdir())
    assert len(files) == 1 and files[0].read_text() == fresh
    assert files[0].name.startswith(io.cache_key(th))


def test_cache_unwritable_is_not_fatal(monkeypatch, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    monkeypatch.setenv("COSETINV_CACHE_DIR", str(blocker / "sub"))
    text, hit = io.cached_table(Affine(2, 1))
    assert not hit and text == io.render_table(Affine(2, 1))


def test_result_format_and_parse():
    from cosetinv.invariants import TauResult
    r = TauResult(complex(-1e-17, 1.5), 2, 1, 9, 0.25)
    text = io.format_result("su:N=2,k=1", "lens:2,1", r)
    assert "value 0.000000000000 1.500000000000" in text
    back = io.parse_result(text)
    assert back["value"] == 1.5j and back["b_plus"] == 2 and back["b_minus"] == 1
    assert back["colorings"] == 9 and back["theory"] == "su:N=2,k=1" and back["manifold"] == "lens:2,1"


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_tau_examples(capsys):
    code, out, _ = _run(["tau", "--theory", "su:N=2,k=1", "--manifold", "lens:2,1"], capsys)
    assert code == 0
    assert "value 0.000000000000 0.000000000000" in out
    code, out, _ = _run(["tau", "--theory", "diagonal:N=2,m1=1,m2=1", "--manifold", "lens:1,1"], capsys)
    assert code == 0 and "value 1.000000000000 0.000000000000" in out
    code, out, _ = _run(["tau", "--theory", "parafermion:k=3", "--manifold", "chain:2,3"], capsys)
    from cosetinv.invariants import tau_so3
    from cosetinv.u1 import tau_u1_mod_z2
    expect = tau_so3(3, Chain((2, 3))) * np.conj(tau_u1_mod_z2(Chain((2, 3)), 3))
    assert abs(io.parse_result(out)["value"] - expect) < 1e-11


def test_cli_tau_deterministic(capsys):
    argv = ["tau", "--theory", "parafermion:k=2", "--manifold", "chain:3,2,2"]
    a = _run(argv, capsys)[1]
    b = _run(argv, capsys)[1]
    strip = lambda s: [line for line in s.splitlines() if not line.startswith("wall_time")]
    assert strip(a) == strip(b)


def test_cli_tau_link_file(tmp_path, capsys):
    f = tmp_path / "t.link"
    f.write_text("# framed trefoil\nstrands 2\nword 1 1 1\nframings 1\n")
    code, out, _ = _run(["tau", "--theory", "su:N=2,k=3", "--manifold", f"link:{f}"], capsys)
    assert code == 0
    link = FramedLink(BraidWord(2, (1, 1, 1)), None, (1,))
    assert abs(io.parse_result(out)["value"] - tau(Affine(2, 3), link)) < 1e-11


def test_cli_data(tmp_path, capsys):
    out_file = tmp_path / "t.txt"
    code, _, err = _run(["data", "--theory", "su:N=2,k=1", "--output", str(out_file)], capsys)
    assert code == 0 and "computed" in err
    code, _, err = _run(["data", "--theory", "su:N=2,k=1", "--output", str(out_file)], capsys)
    assert code == 0 and "cache hit" in err
    assert out_file.read_text() == io.render_table(Affine(2, 1))
    code, out, _ = _run(["data", "--theory", "parafermion:k=2", "--output", "-"], capsys)
    assert code == 0 and "size 3" in out.splitlines()


def test_cli_exit_codes(tmp_path, capsys):
    assert _run(["tau", "--theory", "su:N=2,k=x", "--manifold", "lens:2,1"], capsys)[0] == 2
    assert _run(["tau", "--theory", "su:N=2,k=1", "--manifold", "lens:4,2"], capsys)[0] == 2
    assert _run(["data", "--theory", "extension:N=2,k=3,m=2", "--output", "-"], capsys)[0] == 2
    assert _run(["data", "--theory", "psu:m=2,n=4", "--output", "-"], capsys)[0] == 2
    f = tmp_path / "big.link"
    f.write_text("strands 7\nword\n")
    code, _, err = _run(["tau", "--theory", "su:N=2,k=1", "--manifold", f"link:{f}"], capsys)
    assert code == 3 and "cap" in err
    f.write_text("strands 2\nword 1 1 1\n")
    code, _, err = _run(["tau", "--theory", "su:N=3,k=2", "--manifold", f"link:{f}"], capsys)
    assert code == 3 and "chain" in err
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


def test_cli_verify(capsys):
    code, out, _ = _run(["verify", "crossfamily"], capsys)
    assert code == 0
    assert out.splitlines()[-1].startswith("summary suite=crossfamily")
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_cli_verify_failure_exit(monkeypatch, capsys):
    from cosetinv import verify
    monkeypatch.setitem(verify.SUITES, "modular", lambda: [("forced", False, "x")])
    code, out, _ = _run(["verify", "modular"], capsys)
    assert code == 4 and "FAIL forced" in out


@pytest.mark.skipif(shutil.which("cosetinv") is None, reason="console script not installed")
def test_console_script(cache):
    p = subprocess.run(["cosetinv", "tau", "--theory", "su:N=2,k=1", "--manifold", "lens:2,1"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "value 0.000000000000 0.000000000000" in p.stdout
    p = subprocess.run([sys.executable, "-m", "cosetinv.cli", "tau", "--theory", "su:N=9",
                        "--manifold", "lens:2,1"], capture_output=True, text=True)
    assert p.returncode == 2 and "parse error" in p.stderr


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["su", "u1", "parafermion", "diagonal", "extension", "psu"]), st.data())
def test_parse_theory_roundtrip_random(family, data):
    names = io._FAMILIES[family][1]
    vals = {n: data.draw(st.integers(2, 9)) for n in names}
    spec = f"{family}:" + ",".join(f"{n}={vals[n]}" for n in names)
    th = io.parse_theory(spec)
    assert io.format_theory(th) == spec
