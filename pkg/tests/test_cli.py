import io
import subprocess
import sys


from cutshuffle.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_measure_riffle_cut_two_cards():
    code, text = run("measure", "--law", "riffle-cut", "--n", "2", "--k", "2")
    assert code == 0
    assert text == "1 2\t1/2\n2 1\t1/2\n"


def test_measure_by_class_and_affine():
    code, text = run("measure", "--law", "affine", "--n", "3", "--k", "2", "--by-class")
    assert code == 0
    assert sum(1 for _ in text.splitlines()) >= 2
    code, text = run("measure", "--law", "affine", "--n", "2", "--k", "2", "--method", "vectors")
    assert (code, text) == (0, "1 2\t1/2\n2 1\t1/2\n")


def test_measure_laws_all_run():
    for law in ("riffle", "cut", "cut-riffle"):
        code, text = run("measure", "--law", law, "--n", "3")
        assert code == 0 and text


def test_tv_table():
    code, text = run("tv", "--n", "3", "--k", "2", "--max-shuffles", "2")
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines()]
    assert [r[0] for r in rows] == ["1", "2"]


def test_patience_command():
    assert run("patience", "--word", "7 5 1 3 6 2 4", "--ties", "forbidden") == (0, "3 2 2\n")
    assert run("patience", "--word", "b a a", "--ties", "allowed") == (0, "3\n")


def test_sample_is_deterministic():
    a = run("sample", "--law", "gsr", "--n", "6", "--count", "3", "--seed", "5")
    b = run("sample", "--law", "gsr", "--n", "6", "--count", "3", "--seed", "5")
    assert a == b and a[0] == 0 and len(a[1].splitlines()) == 3
    code, text = run("sample", "--law", "affine2", "--n", "5", "--seed", "1")
    assert code == 0 and sorted(map(int, text.split())) == [1, 2, 3, 4, 5]


def test_sample_affine_needs_k_two():
    assert run("sample", "--law", "affine2", "--n", "5", "--k", "3", "--seed", "1")[0] == 2


def test_reciprocity_command():
    assert run("reciprocity", "--m", "1", "--x", "2", "--y", "3") == (0, "2\t2\tsymmetric\n")


def test_verify_suite():
    code, text = run("verify", "--suite", "affine", "--max-n", "4")
    assert code == 0
    assert all(line.startswith(("PASS", "XFAIL", "all")) for line in text.splitlines())


def test_exit_codes():
    assert run("measure", "--law", "riffle", "--n", "12")[0] == 3
    assert run("bogus")[0] == 2
    assert run("measure", "--law", "affine", "--n", "1")[0] == 2
    assert run("patience", "--word", "  ")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cutshuffle", "patience", "--word", "3 1 2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "2 1\n"
