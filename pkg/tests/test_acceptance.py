"""Exit criteria for the package, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists
PASS/FAIL per criterion.
"""
import io
import json
import random
import time

from thinpos.assembly import decompose_width
from thinpos.cli import main
from thinpos.decomposition import crossing_count
from thinpos.instance_io import bundled_instances, parse_instance
from thinpos.morse import (
    MorseWord,
    nbridge_word,
    profile,
    reflect,
    running_counts,
    thin_thick_levels,
    width_link,
)
from thinpos.search import (
    build_candidate_set,
    lower_bound_thick,
    oracle_search,
    search,
    thick_level_lower_bound,
)

from conftest import random_link_word, scan_width

SEED = 20261016


def test_criterion_1_nbridge_width_and_reflection_invariance():
    t0 = time.perf_counter()
    for n in range(1, 33):
        assert width_link(nbridge_word(n)) == 2 * n * n
    assert width_link(nbridge_word(6)) == 72
    assert time.perf_counter() - t0 < 1.0

    rng = random.Random(SEED)
    for _ in range(10**4):
        w = random_link_word(rng)
        assert width_link(reflect(w)) == width_link(w)


def test_criterion_2_printed_arithmetic():
    w = MorseWord.parse("MIN MIN MIN MIN MAX MIN MAX MAX MAX MAX")
    assert profile(w).counts == (2, 4, 6, 8, 6, 8, 6, 4, 2)
    assert width_link(w) == 46
    assert lower_bound_thick(4, 4) == 60


def test_criterion_3_two_thick_levels_bound():
    rng = random.Random(SEED)
    checked = violations = 0
    while checked < 10**4:
        counts = profile(random_link_word(rng, max_bridges=10)).counts
        _, thick = thin_thick_levels(counts)
        if len(thick) < 2:
            continue
        checked += 1
        width = sum(counts)
        n1, n2 = counts[thick[-1]] // 2, counts[thick[0]] // 2  # highest, lowest
        if width < thick_level_lower_bound(n1, n2):
            violations += 1
        for i in thick:
            for j in thick:
                if i < j and width < thick_level_lower_bound(counts[j] // 2, counts[i] // 2):
                    violations += 1
    assert violations == 0


def test_criterion_4_pruned_search_matches_oracle():
    t0 = time.perf_counter()
    names = bundled_instances()
    assert names
    for name in names:
        inst = parse_instance(name)
        for ss in inst.systems:
            assert len(ss.system) <= 6
        pruned = search(inst, prune=True).winner
        exhaustive = oracle_search(inst)
        assert pruned.width == exhaustive.width, name
        assert pruned.profile == exhaustive.profile, name
        n_ext = len(build_candidate_set(inst, prune=False)) - 1
        assert n_ext <= 10**4
    assert time.perf_counter() - t0 < 10.0


def test_criterion_5_connected_sum():
    inst = parse_instance("connected_sum")
    best = search(inst).winner
    assert scan_width(best.word) == best.width == 14
    assert oracle_search(inst).width == 14
    assert inst.baseline_width == scan_width(nbridge_word(3)) == 18
    assert best.width < inst.baseline_width


def test_criterion_6_pretzel_width_48():
    out = io.StringIO()
    assert main(["search", "pretzel6x3", "--format", "json"], out=out) == 0
    doc = json.loads(out.getvalue())
    assert doc["overall_min"] == 48
    assert doc["baseline_width"] == 72
    assert doc["overall_min"] < doc["baseline_width"]
    assert doc["winner"]["origin"] != "BASELINE"
    assert scan_width(MorseWord.parse(doc["winner"]["word"])) == 48


def test_criterion_7_conservation_on_every_candidate():
    composed = 0
    for name in bundled_instances():
        inst = parse_instance(name)
        for c in build_candidate_set(inst, prune=False):
            cp = c.presentation
            if cp is None:
                continue
            system = inst.systems[c.origin.system_index].system
            counts = running_counts(cp.word)
            for k in range(1, len(cp.order)):
                start = cp.interval_map[cp.order[k]][0]
                entering = counts[start - 1] if start else 0
                assert entering == cp.gap_counts[k - 1] == crossing_count(system, cp.order, k - 1)
            assert sum(decompose_width(cp)) == cp.total_width == scan_width(cp.word)
            composed += 1
    assert composed > 0
