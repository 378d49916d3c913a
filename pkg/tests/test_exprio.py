import random

import pytest

from qschubert.exprio import ExprError, TPoly, elaborate, in_qtilde_basis, parse
from qschubert.partitions import enumerate_partitions
from qschubert.qtilde import qtilde, qtilde_pair
from qschubert.sympoly import SymPoly
from qschubert.thomtables import TExpansion

c1, c2 = SymPoly.gen(1), SymPoly.gen(2)


def const(node):
    tp = elaborate(node)
    return tp.constant_part().terms.get((), 0) if set(tp.parts) <= {0} else None


def test_parse_basic_shapes():
    assert parse("3*Q[2] + t*Q[1]") == (
        "add", ("mul", ("int", 3), ("q", (2,))), ("mul", ("t",), ("q", (1,))))
    assert parse("c12") == ("gen", 12)
    assert parse("Q[]") == ("q", ())
    assert parse("Q[ 3 , 1 ]") == ("q", (3, 1))
    assert parse("Q[2,0]") == ("q", (2,))
    assert parse(" ( t ) ") == ("t",)


def test_precedence_and_associativity():
    assert const(parse("2 - 3 - 4")) == -5
    assert const(parse("2^3")) == 8
    assert const(parse("-2^2")) == -4
    assert const(parse("2*3^2")) == 18
    assert const(parse("(2+3)*4")) == 20
    assert elaborate(parse("-c1^2")).constant_part() == -(c1 ** 2)
    assert elaborate(parse("c1*-c2")).constant_part() == -(c1 * c2)
    assert elaborate(parse("2*c1^2")).constant_part() == 2 * c1 ** 2


def test_parse_errors_carry_position():
    with pytest.raises(ExprError) as e:
        parse("(")
    assert e.value.line == 1 and e.value.col == 2
    with pytest.raises(ExprError) as e:
        parse("c1 +\n Q[1,2]")
    assert e.value.line == 2 and e.value.col == 2
    for text in ("", "c", "c0", "2t", "2 t", "$", "Q[2,]", "Q[1,2]", "Q",
                 "Q[1", "c1^-2", "c1^t", "1 + ", "(1))", "*2", "Q[x]"):
        with pytest.raises(ExprError):
            parse(text)


def test_no_implicit_multiplication():
    with pytest.raises(ExprError):
        parse("2c1")
    with pytest.raises(ExprError):
        parse("t Q[1]")


def test_elaborate_examples():
    assert elaborate(parse("Q[2,1]")).constant_part() == c2 * c1 - 2 * SymPoly.gen(3)
    assert elaborate(parse("c1*0 + Q[1]")).constant_part() == c1
    assert elaborate(parse("c1^2 - 2*c2")).constant_part() == qtilde_pair(1, 1)
    tp = elaborate(parse("t*t*c1 + t^2*c2 + 5"))
    assert tp.parts == {0: SymPoly.const(5), 2: c1 + c2}
    assert elaborate(parse("t - t")) == TPoly({})


def test_elaborate_is_invariant_under_commutation():
    a = elaborate(parse("3*Q[2] + t*Q[1]"))
    b = elaborate(parse("t*Q[1] + 3*Q[2]"))
    c = elaborate(parse("Q[2]*3 + Q[1]*t"))
    assert a == b == c


def test_tpoly_arithmetic():
    t = TPoly.t()
    p = TPoly.of(c1)
    assert (t + p).parts == {0: c1, 1: SymPoly.one()}
    assert (t * t).parts == {2: SymPoly.one()}
    assert (t ** 3).parts == {3: SymPoly.one()}
    assert (p - p) == TPoly({})
    with pytest.raises(ValueError):
        TPoly({-1: c1})


def test_in_qtilde_basis():
    texp = in_qtilde_basis(elaborate(parse("3*Q[2] + t*Q[1]")))
    assert texp.coeffs == {((2,), 0): 3, ((1,), 1): 1}
    texp = in_qtilde_basis(elaborate(parse("c1^3")))
    assert texp.coeffs == {((1, 1, 1), 0): 1, ((2, 1), 0): 2, ((3,), 0): 4}
    bounded = in_qtilde_basis(elaborate(parse("c1^2")), max_part=2)
    assert bounded.coeffs == {((1, 1), 0): 1, ((2,), 0): 2}


def rand_texpansion(rng):
    coeffs = {}
    for _ in range(rng.randint(1, 5)):
        d = rng.randint(0, 5)
        options = enumerate_partitions(d)
        i = rng.choice(options) if options else ()
        j = rng.randint(0, 3)
        c = rng.choice([-3, -2, -1, 1, 2, 3, 5])
        coeffs[(i, j)] = c
    return TExpansion(coeffs)


def test_round_trip_parse_render():
    rng = random.Random(99)
    for _ in range(150):
        texp = rand_texpansion(rng)
        back = in_qtilde_basis(elaborate(parse(str(texp))))
        assert back == texp, str(texp)


def test_fuzz_parser_never_crashes():
    rng = random.Random(1234)
    alphabet = "ctQ[]()+-*^0123456789 ,\n\tzäé"
    for _ in range(5000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 30)))
        try:
            parse(text)
        except ExprError:
            pass


def test_deep_nesting_is_rejected_not_crashed():
    with pytest.raises(ExprError):
        parse("(" * 2000 + "1" + ")" * 2000)
    with pytest.raises(ExprError):
        parse("-" * 2000 + "1")
    # moderately deep input still parses
    assert const(parse("(" * 50 + "1" + ")" * 50)) == 1
