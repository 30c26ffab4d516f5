import pytest

from qshrb import BraidedSpace, QMBDef, YDModuleDef, load_definitions, parse_definition
from qshrb.braided_algebra import BraidedAlgebraDef
from qshrb.errors import ParseError, ValidationError
from qshrb.fileformat import parse_text
from qshrb.fixtures import HECKE2, Z2_YD
from qshrb.scalar import q

FLIP = """
[space]
dim = 2
label = F
scalar = rational

[braiding]
1 1 1 1  1
1 2 2 1  1
2 1 1 2  1
2 2 2 2  1
"""


def test_hecke_file_matches_fixture(data):
    sp_ = parse_definition(data / "hecke2.def")
    assert isinstance(sp_, BraidedSpace)
    ref = HECKE2()
    assert all(sp_.sigma_raw(i, j) == ref.sigma_raw(i, j) for i in range(2) for j in range(2))
    assert sp_.names == ["e1", "e2"] and sp_.label == "HECKE2"


@pytest.mark.parametrize(
    "fname, kind",
    [
        ("flip2.def", BraidedSpace),
        ("idem2_flip2.def", BraidedAlgebraDef),
        ("dual_numbers.def", BraidedAlgebraDef),
        ("qmb_m11_idem2.def", QMBDef),
        ("qmb_trivial_hecke2.def", QMBDef),
        ("z2_yd.def", YDModuleDef),
        ("z2_yd_mixed.def", YDModuleDef),
        ("trivial_yd.def", YDModuleDef),
    ],
)
def test_primary_object(data, fname, kind):
    assert isinstance(parse_definition(data / fname), kind)


def test_every_shipped_file_loads(data):
    for path in sorted(data.glob("*.def")):
        if path.name == "singular.def":
            continue
        defs = load_definitions(path)
        assert defs.primary is not None


def test_singular_braiding_is_rejected(data):
    with pytest.raises(ValidationError, match="not invertible"):
        load_definitions(data / "singular.def")


def test_deferred_files_keep_bad_structures(data):
    defs = load_definitions(data / "hecke2_corrupt.def")
    assert defs.defer_checks and defs.space.deferred
    assert load_definitions(data / "idem2_flip2_dropmiddle.def").variant == "drop-middle"


def test_yd_file_matches_fixture(data):
    yd = parse_definition(data / "z2_yd.def")
    ref = Z2_YD()
    for h in range(2):
        for v in range(2):
            assert yd.act(h, v) == ref.act(h, v)
    for v in range(2):
        assert yd.coact(v) == ref.coact(v)
    defs = load_definitions(data / "z2_yd.def")
    assert defs.space.sigma_raw(0, 1) == {(1, 0): -1}


def test_scalars_with_spaces_and_comments():
    defs = parse_text(FLIP.replace("scalar = rational", "") + "\n[product]\n1 1 1  1   # idempotent\n")
    assert defs.algebra.mul_raw(0, 0) == {0: 1}
    text = FLIP.replace("scalar = rational", "").replace("1 2 2 1  1", "1 2 2 1  3 q^2 - 2 q^2").replace("2 1 1 2  1", "2 1 1 2  q^-2")
    sp_ = parse_text(text, defer_checks=True).space
    assert sp_.sigma_raw(0, 1) == {(1, 0): (q**2).raw}
    assert sp_.sigma_raw(1, 0) == {(0, 1): (q**-2).raw}


def test_repeated_rows_accumulate():
    defs = parse_text(FLIP + "\n[product]\n1 1 1  1/2\n1 1 1  1/2\n")
    assert defs.algebra.mul_raw(0, 0) == {0: 1}


@pytest.mark.parametrize(
    "text, line, fld",
    [
        (FLIP.replace("dim = 2", "dim = two"), 3, "dim"),
        (FLIP.replace("1 2 2 1  1", "1 2 2 3  1"), 9, "column 4"),
        (FLIP.replace("1 2 2 1  1", "1 2 2 1  q"), 9, "coeff"),
        (FLIP.replace("1 2 2 1  1", "1 2 2 1"), 9, None),
        (FLIP + "\n[nonsense]\n", 13, None),
        ("dim = 2\n" + FLIP, 1, None),
        (FLIP + "\n[qmb]\n1 0  1 1  1\n", 14, "q"),
        (FLIP.replace("label = F", "label = F\nlabel = G"), 5, "label"),
        ("[hopf]\ngroup = 2\n[yd]\ndim = 1\n[yd.action]\n1 1 1 1\n[braiding]\n1 1 1 1 1\n", 7, None),
    ],
)
def test_parse_errors_carry_location(text, line, fld):
    with pytest.raises(ParseError) as exc:
        parse_text(text)
    if line is not None:
        assert exc.value.line == line
    if fld is not None:
        assert exc.value.field == fld


def test_missing_file():
    with pytest.raises(ParseError, match="cannot read"):
        load_definitions("/nonexistent/x.def")


def test_qmb_rows(data):
    qmb = parse_definition(data / "qmb_m11_idem2.def")
    assert qmb.M((0,), (0,)) == {(0,): 1}
    assert qmb.M((1,), (0,)) == {}
    assert qmb.label == "QMB[IDEM2+FLIP2]"
