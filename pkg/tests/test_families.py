import pytest

from nearly_indep.errors import DomainError
from nearly_indep.families import (
    FamilySpec,
    UnsupportedFamilyError,
    closed_form_alpha0_path,
    closed_form_alpha1,
    generate,
)
from nearly_indep.graph_core import is_connected
from nearly_indep.solver import alpha0_exact, alpha1_exact, validate_witness


def spec(text):
    return FamilySpec.parse(text)


class TestGenerate:
    def test_broom(self):
        g = generate(spec("broom:6,3"))
        assert list(g.edges()) == [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)]
        assert sorted(g.degrees(), reverse=True) == [4, 2, 1, 1, 1, 1]

    def test_unicyclic_star(self):
        g = generate(spec("unicyclic_star:5"))
        assert list(g.edges()) == [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]
        assert g.m == 5

    def test_wheel_4_is_k4(self):
        assert generate(spec("wheel:4")) == generate(spec("complete:4"))

    def test_wheel_hub_last(self):
        g = generate(spec("wheel:6"))
        assert g.degree(5) == 5 and all(g.degree(v) == 3 for v in range(5))

    def test_cycle_order(self):
        assert list(generate(spec("cycle:4")).edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_one_edge(self):
        g = generate(spec("one_edge:4"))
        assert list(g.edges()) == [(0, 1)]

    def test_bipartite(self):
        g = generate(spec("bip:2,3"))
        assert (g.n, g.m) == (5, 6)


class TestSpecParsing:
    @pytest.mark.parametrize("text", ["path:0", "cycle:2", "wheel:3", "broom:3,4", "broom:5,1",
                                      "unicyclic_star:2", "one_edge:1", "bip:0,3"])
    def test_range_errors(self, text):
        with pytest.raises(DomainError, match="requires"):
            spec(text)

    @pytest.mark.parametrize("text", ["path", "hypercube:3", "path:x", "broom:5", "path:3,4"])
    def test_malformed(self, text):
        with pytest.raises(DomainError):
            spec(text)

    def test_str_round_trip(self):
        assert spec(str(spec("broom:6,3"))) == spec("broom:6,3")


class TestClosedForms:
    def test_path(self):
        assert closed_form_alpha1(spec("path:9")) == 5

    def test_wheel(self):
        assert closed_form_alpha1(spec("wheel:7")) == 3

    def test_unicyclic_star(self):
        assert closed_form_alpha1(spec("unicyclic_star:8")) == 7

    @pytest.mark.parametrize("text", ["bip:2,3", "broom:6,4", "path:1", "complete:1"])
    def test_unsupported(self, text):
        with pytest.raises(UnsupportedFamilyError):
            closed_form_alpha1(spec(text))


SUPPORTED = (
    [f"complete:{n}" for n in range(2, 61)]
    + [f"path:{n}" for n in range(2, 61)]
    + [f"cycle:{n}" for n in range(3, 61)]
    + [f"wheel:{n}" for n in range(4, 61)]
    + [f"star:{n}" for n in range(2, 61)]
    + [f"empty:{n}" for n in range(0, 61)]
    + [f"broom:{n},3" for n in range(3, 61)]
    + [f"unicyclic_star:{n}" for n in range(3, 61)]
    + [f"one_edge:{n}" for n in range(2, 61)]
)


def test_closed_forms_match_solver():
    for text in SUPPORTED:
        s = spec(text)
        g = generate(s)
        r = alpha1_exact(g)
        assert r.value == closed_form_alpha1(s), text
        if r.witness is not None:
            assert validate_witness(g, r)


def test_extremal_families_connected():
    for n in range(3, 61):
        for text in (f"broom:{n},3", f"unicyclic_star:{n}"):
            g = generate(spec(text))
            assert is_connected(g) and alpha1_exact(g).value == n - 1


def test_path_independence_number():
    for n in range(1, 61):
        assert alpha0_exact(generate(spec(f"path:{n}"))).value == closed_form_alpha0_path(n)
