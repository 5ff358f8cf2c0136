import pytest

from digitop import formats
from digitop.errors import ParseError
from digitop.group import cyclic_group
from digitop.homotopy import homotopic
from digitop.hspace import FIXTURES, HSpaceStructure, MagmaStructure, fixture
from digitop.image import cycle, enumerate_images
from digitop.maps import DigitalMap, identity_map


def test_image_round_trip():
    for n in range(1, 5):
        for img in enumerate_images(n):
            assert formats.parse_image(formats.dump_image(img)) == img


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip(name):
    obj = fixture(name)
    if isinstance(obj, HSpaceStructure):
        assert formats.parse_hspace(formats.dump_hspace(obj)) == obj
    elif isinstance(obj, MagmaStructure):
        assert formats.parse_magma(formats.dump_magma(obj)) == obj
    elif isinstance(obj, DigitalMap):
        assert formats.parse_map(formats.dump_map(obj)) == obj
    else:
        assert formats.parse_image(formats.dump_image(obj)) == obj


def test_map_between_different_images():
    f = DigitalMap(cycle(3), cycle(5), [0, 1, 2])
    text = formats.dump_map(f)
    assert text.count("image") == 2
    assert formats.parse_map(text) == f
    bare = formats.dump_map(f, images=False)
    assert formats.parse_map(bare, domain=cycle(3), codomain=cycle(5)) == f


def test_multiplication_and_group_round_trip():
    mu = fixture("five_twist_tau").mu
    assert formats.parse_multiplication(formats.dump_multiplication(mu), 6) == mu
    G, S = formats.parse_group(formats.dump_group(cyclic_group(4), {1, 2}))
    assert G == cyclic_group(4) and S == {1, 2}
    G, S = formats.parse_group(formats.dump_group(cyclic_group(3)))
    assert S is None


def test_certificate_round_trip():
    rho = fixture("rho")
    v = homotopic(rho, identity_map(rho.domain), 1)
    text = formats.dump_certificate(v.certificate)
    assert formats.parse_certificate(text, rho.domain, rho.codomain) == v.certificate


def test_comments_and_blank_lines():
    img = formats.parse_image("# a path\n\nimage 3   # three points\nedge 0 1\nedge 1 2\n")
    assert img.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("image 3\nedge 0 3\n", 2, "out of range"),
        ("image 3\nedge 0\n", 2, "takes 2"),
        ("image 3\nvertex 1\n", 2, "unknown keyword"),
        ("image x\n", 1, "non-integer"),
        ("edge 0 1\n", 1, "outside"),
        ("image 0\n", 1, "at least one"),
        ("image 2\nedge -1 0\n", 2, "negative"),
    ],
)
def test_image_parse_errors_name_the_line(text, line, fragment):
    with pytest.raises(ParseError) as info:
        formats.parse_image(text, path="bad.img")
    assert info.value.line == line and info.value.path == "bad.img"
    assert fragment in str(info.value) and str(info.value).startswith(f"bad.img:{line}:")


def test_table_errors():
    with pytest.raises(ParseError, match="missing"):
        formats.parse_multiplication("mul 2\nm 0 0 0\n", 2)
    with pytest.raises(ParseError, match="twice"):
        formats.parse_multiplication("mul 1\nm 0 0 0\nm 0 0 0\n", 1)
    with pytest.raises(ParseError, match="cat must be"):
        formats.parse_hspace("image 1\nbase 0\ncat 3\nmul 1\nm 0 0 0\n")
    with pytest.raises(ParseError, match="missing base"):
        formats.parse_hspace("image 1\ncat 1\nmul 1\nm 0 0 0\n")
    with pytest.raises(ParseError, match="no image block"):
        formats.parse_map("map 1 1\nf 0 0\n")
    with pytest.raises(ParseError, match="unassigned"):
        formats.parse_map("image 2\nmap 2 2\nf 0 0\n")


def test_group_axiom_failure_is_a_parse_error():
    with pytest.raises(ParseError, match="identity"):
        formats.parse_group("group 2\ng 0 0 0\ng 0 1 0\ng 1 0 1\ng 1 1 1\n")


def test_dot_export():
    dot = formats.to_dot(cycle(3), "C3")
    assert dot.startswith("graph C3 {") and "0 -- 1;" in dot


def test_records():
    text = formats.records([{"a": 1, "b": [1, 2]}, {"c": "x"}])
    assert text == "a=1\nb=1 2\n\nc=x\n"
