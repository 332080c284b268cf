import io
import random
import subprocess
import sys

import pytest
from hypothesis import given

from hfset import gen
from hfset.cli import syntax
from hfset.cli.main import main
from hfset.cli.session import SessionEnv, evaluate, execute, print_canonical
from hfset.cli.suites import SUITES, run_suite
from hfset.errors import ParseError, UnboundIdentifierError, UnknownSuiteError
from hfset.kernel import from_elements, ord, singleton, to_text
from hfset.show import show

from conftest import hsets


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ev(text, env=None):
    return evaluate(syntax.parse(text), env or SessionEnv())


def test_eval_examples():
    assert ev("pow(ord(1))") is ord(2)
    assert ev("im(fun e -> {e}, ord(2))") is from_elements([singleton(ord(0)), singleton(ord(1))])
    assert ev("union(ord(3))") is ord(2)
    assert ev("pair({},{})") is singleton(singleton(ord(0)))
    assert print_canonical(ord(2)) == "{{},{{}}}"


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        syntax.parse("{,}")
    assert (info.value.line, info.value.column) == (1, 2)
    assert "'}'" in info.value.expected
    assert str(info.value).startswith("1:2:")


@pytest.mark.parametrize("text,col", [("ord(x)", 5), ("{{}", 4), ("pair({})", 8), ("im(e -> e, {})", 4), ("{} {}", 4)])
def test_parse_errors(text, col):
    with pytest.raises(ParseError) as info:
        syntax.parse(text)
    assert info.value.column == col


def test_tag_vs_comment():
    assert syntax.parse_statement("# just a comment") is None
    assert syntax.parse_statement("#plus.2") == syntax.TagLit("plus", 2)
    assert syntax.parse_statement("ord(1) # trailing") == syntax.Ord(1)


def test_unbound():
    with pytest.raises(UnboundIdentifierError):
        ev("nope")


def test_session_statements():
    env = SessionEnv()
    assert execute(syntax.parse_statement("let a = ord(3)"), env) is None
    assert execute(syntax.parse_statement("card {a, {a}}"), env) == to_text(ord(2))
    assert execute(syntax.parse_statement("ordinal? a"), env) == "true"
    assert execute(syntax.parse_statement("ordinal? {a}"), env) == "false"
    assert execute(syntax.parse_statement("show #plus.2"), env) == "#plus.2"
    assert execute(syntax.parse_statement("chain id 3"), env) == "{} < {{}} < {{},{{}}}"
    assert execute(syntax.parse_statement("chain const({}) 3"), env).endswith("# stopped: next element repeats")
    text = execute(syntax.parse_statement("zorn order({{},{{}}}; ({},{}), ({},{{}}), ({{}},{{}}))"), env)
    assert text == "{{}}"
    assert execute(syntax.parse_statement("woord order(a; (ord(0),ord(0)), (ord(1),ord(1)), (ord(2),ord(2)), (ord(0),ord(1)), (ord(0),ord(2)), (ord(1),ord(2)))"), env) == to_text(ord(3))
    assert "expressions" in execute(syntax.parse_statement("help"), env)


def test_bcs_verb():
    env = SessionEnv()
    out = execute(syntax.parse_statement("bcs ord(1) {ord(2)} {pair({},ord(2))} {pair(ord(2),{})}"), env)
    assert out == to_text(from_elements([from_elements([singleton(ord(0)), from_elements([ord(0), ord(2)])])]))


@given(hsets())
def test_print_parse_roundtrip(x):
    text = to_text(x)
    tree = syntax.parse(text)
    assert ev(text) is x
    assert syntax.parse(to_text(ev(text))) == tree
    assert ev(show(x)) is x


def test_cli_eval_and_codes():
    assert run("eval", "-e", "ord(2)") == (0, "{{},{{}}}\n", "")
    code, _, err = run("eval", "-e", "{,}")
    assert code == 2 and "1:2" in err
    assert run("eval", "-e", "foo")[0] == 2
    assert run("eval", "-e", "ordinal? {}")[1] == "true\n"
    assert run("--max-rank", "5", "eval", "-e", "ord(6)")[0] == 1
    assert run("bogus")[0] == 2


def test_cli_run_batch(tmp_path):
    script = tmp_path / "s.hf"
    script.write_text("# numerals\nlet a = ord(2)\n\na\ncard pow(a)  # four\n")
    assert run("run", str(script)) == (0, "{{},{{}}}\n" + to_text(ord(4)) + "\n", "")
    script.write_text("ord(1)\nnope\nord(0)\n")
    code, out, err = run("run", str(script))
    assert code == 2 and out == "{{}}\n{}\n" and "line 2" in err


def test_cli_check():
    code, out, _ = run("check", "--suite", "axioms", "--size", "20", "--seed", "3")
    assert code == 0 and out.startswith("suite axioms size=20 seed=3: PASS")
    assert run("--seed", "5", "check", "--suite", "numerals", "--size", "2")[1].startswith("suite numerals size=2 seed=5:")
    code, _, err = run("check", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_run_suite_examples():
    assert run_suite("bcs", 32, 42).passed
    assert run_suite("axioms", 100, 7).passed
    with pytest.raises(UnknownSuiteError):
        run_suite("nope", 1, 0)


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"characterization"}))
def test_every_suite_small(name):
    report = run_suite(name, 5, 1)
    assert report.passed, report.render()


def test_reports_deterministic():
    assert run_suite("order", 30, 11).render() == run_suite("order", 30, 11).render()


def test_repl_via_module():
    proc = subprocess.run(
        [sys.executable, "-m", "hfset", "repl"],
        input="let x = ord(1)\npair(x, x)\n",
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "{{{{}}}}\n"


def test_random_set_text_is_stable():
    rng = random.Random(4)
    x = gen.random_hset(rng, 5)
    assert ev(to_text(x)) is x
