import pytest
from hypothesis import given, settings

from thinpos.errors import MalformedWord, NotBridgePosition, NotLinkWord
from thinpos.morse import (
    MAX,
    MIN,
    MorseWord,
    WidthProfile,
    bridge_number,
    is_bridge_position,
    nbridge_word,
    profile,
    reflect,
    running_counts,
    thin_thick_levels,
    vminus,
    vplus,
    width_graph,
    width_link,
)

from conftest import link_words, scan_width


def W(text):
    return MorseWord.parse(text)


class TestRunningCounts:
    def test_unknot(self):
        assert running_counts(W("MIN MAX")) == [2, 0]

    def test_two_bumps(self):
        assert running_counts(W("MIN MIN MAX MIN MAX MAX")) == [2, 4, 2, 4, 2, 0]

    @pytest.mark.parametrize("text", ["MIN MAX MAX", "MIN MIN MAX", "MAX MIN"])
    def test_malformed(self, text):
        with pytest.raises(MalformedWord):
            W(text)

    def test_vertex_in_the_middle_rejected(self):
        with pytest.raises(MalformedWord, match="prefix"):
            MorseWord([MIN, vplus(2), MIN, MAX, MAX])

    @pytest.mark.parametrize("deg", [0, 1, 3])
    def test_bad_degree(self, deg):
        with pytest.raises(MalformedWord):
            vminus(deg)

    def test_parse_comments_and_vertices(self):
        w = W("# a monotone tangle\nV-4  # bottom\nV+4\n")
        assert [str(e) for e in w] == ["V-4", "V+4"]
        with pytest.raises(MalformedWord):
            W("MIN FOO MAX")


class TestWidth:
    def test_two_thick_profile_46(self):
        w = W("MIN MIN MIN MIN MAX MIN MAX MAX MAX MAX")
        assert profile(w).counts == (2, 4, 6, 8, 6, 8, 6, 4, 2)
        assert width_link(w) == 46
        assert w.n_max == 5

    def test_small(self):
        assert width_link(W("MIN MAX")) == 2
        assert width_link(W("MIN MIN MAX MIN MAX MAX")) == 14

    def test_link_width_rejects_vertices(self):
        with pytest.raises(NotLinkWord):
            width_link(W("V-2 MIN MAX V+2"))

    def test_graph_widths(self):
        assert width_graph(MorseWord([vminus(2), vplus(2)])) == 0
        assert width_graph(MorseWord([MIN, MIN, MAX, vplus(2)])) == 6
        # the single level between V-2 and MIN is not between critical values
        assert width_graph(W("V-2 MIN MAX MAX")) == 4 + 2

    @given(link_words())
    def test_graph_width_agrees_on_links(self, w):
        assert width_graph(w) == width_link(w) == scan_width(w)


class TestBridge:
    def test_positions(self):
        assert is_bridge_position(W("MIN MIN MAX MAX"))
        assert not is_bridge_position(W("MIN MAX MIN MAX"))
        assert is_bridge_position(W("V-2 MIN MAX V+2"))

    def test_numbers(self):
        assert bridge_number(W("MIN MIN MAX MAX")) == 2
        assert bridge_number(nbridge_word(6)) == 6
        assert bridge_number(W("V-4 V+4")) == 2
        with pytest.raises(NotBridgePosition):
            bridge_number(W("MIN MAX MIN MAX"))

    @pytest.mark.parametrize("n, width", [(1, 2), (3, 18), (6, 72)])
    def test_nbridge_examples(self, n, width):
        w = nbridge_word(n)
        assert w.n_min == w.n_max == n
        assert width_link(w) == scan_width(w) == width

    @pytest.mark.parametrize("n", range(1, 33))
    def test_nbridge_formula(self, n):
        assert width_link(nbridge_word(n)) == 2 * n * n

    @given(link_words())
    def test_bridge_profile_is_a_tent(self, w):
        if not is_bridge_position(w):
            return
        b = bridge_number(w)
        up = list(range(2, 2 * b + 1, 2))
        assert list(profile(w).counts) == up + up[-2::-1]


class TestThinThick:
    def test_two_thick_profile(self):
        assert thin_thick_levels(WidthProfile((2, 4, 6, 8, 6, 8, 6, 4, 2))) == ([4], [3, 5])

    def test_bridge_profile(self):
        assert thin_thick_levels([2, 4, 2]) == ([], [1])

    def test_two_bumps(self):
        assert thin_thick_levels([2, 4, 2, 4, 2]) == ([2], [1, 3])

    @given(link_words())
    def test_thick_and_thin_alternate(self, w):
        thin, thick = thin_thick_levels(profile(w))
        assert len(thick) == len(thin) + 1
        merged = sorted([(i, "k") for i in thick] + [(i, "n") for i in thin])
        assert [t for _, t in merged] == ["k", "n"] * len(thin) + ["k"]


class TestReflect:
    def test_examples(self):
        assert reflect(W("MIN MAX")) == W("MIN MAX")
        w = W("MIN MIN MAX MIN MAX MAX")
        assert reflect(w) == w and width_link(reflect(w)) == 14
        assert reflect(W("V-2 MIN MAX V+2")) == W("V-2 MIN MAX V+2")

    def test_swaps_vertex_sides(self):
        assert reflect(W("V-4 MAX V+2")) == W("V-2 MIN V+4")

    @settings(max_examples=300)
    @given(link_words())
    def test_width_invariant(self, w):
        assert width_link(reflect(w)) == width_link(w)
        assert reflect(reflect(w)) == w

    @given(link_words())
    def test_conservation(self, w):
        counts = running_counts(w)
        assert min(counts) >= 0 and counts[-1] == 0
        assert w.n_min == w.n_max
