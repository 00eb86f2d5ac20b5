import pytest

from latquot import (
    delta,
    dump_lattice_text,
    free_modular_3,
    n5,
    parse_congruence_text,
    parse_lattice_text,
    to_dot,
)
from latquot.errors import LatticeError, NotALattice


def test_parse_basic_file():
    lat = parse_lattice_text(
        "# the pentagon\n"
        "elements: 0 a b c 1\n"
        "\n"
        "covers: 0<b b<a a<1 0<c c<1\n"
    )
    assert lat.elements == ("0", "a", "b", "c", "1")
    assert lat.meet("a", "c") == "0"


def test_parse_singleton_and_antichain():
    assert len(parse_lattice_text("elements: x\ncovers:\n")) == 1
    with pytest.raises(NotALattice):
        parse_lattice_text("elements: x y\ncovers:\n")


def test_parse_rejects_garbage():
    with pytest.raises(LatticeError):
        parse_lattice_text("covers: a<b\n")
    with pytest.raises(LatticeError):
        parse_lattice_text("elements: a b\nedges: a<b\n")
    with pytest.raises(LatticeError):
        parse_lattice_text("elements: a b\ncovers: a<b<c\n")


def test_dump_round_trip_catalog(catalog):
    for named in catalog:
        text = dump_lattice_text(named.lattice)
        assert dump_lattice_text(parse_lattice_text(text)) == text


def test_congruence_block_notation():
    assert parse_congruence_text("{a,b}{0}{c}{1}") == [["a", "b"], ["0"], ["c"], ["1"]]


def test_congruence_block_notation_nested_names():
    # product ids carry commas/parens, fd ids carry braces
    blocks = parse_congruence_text("{(p,a),(p,b)}{(q,c)}")
    assert blocks == [["(p,a)", "(p,b)"], ["(q,c)"]]
    blocks = parse_congruence_text("{{x}{y,z},{x}}{{y}}")
    assert blocks == [["{x}{y,z}", "{x}"], ["{y}"]]


def test_congruence_render_round_trip():
    lat = free_modular_3().lattice
    theta = delta(lat)
    from latquot import congruence_from_blocks

    assert congruence_from_blocks(lat, parse_congruence_text(theta.render(lat))) == theta


def test_congruence_notation_errors():
    with pytest.raises(LatticeError):
        parse_congruence_text("a,b")
    with pytest.raises(LatticeError):
        parse_congruence_text("{a,b")
    with pytest.raises(LatticeError):
        parse_congruence_text("")


def test_dot_plain():
    text = to_dot(n5().lattice)
    assert text.startswith("digraph")
    assert "rankdir=BT" in text
    assert text.count("->") == 5


def test_dot_singleton():
    from latquot import chain

    text = to_dot(chain(1).lattice)
    assert "->" not in text


def test_dot_highlight_clusters():
    lat = n5().lattice
    text = to_dot(lat, highlight=delta(lat))
    assert "subgraph cluster_0" in text
    assert text.count("fillcolor") == 2


def test_dot_highlight_fm3_cluster_count():
    lat = free_modular_3().lattice
    text = to_dot(lat, highlight=delta(lat))
    # six doubletons plus the five-element diamond block
    assert sum(1 for line in text.splitlines() if "subgraph cluster_" in line) == 7
