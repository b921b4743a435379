import random

import pytest
from hypothesis import strategies as st

from thinpos.decomposition import BowlSphere, GraphTable, SphereSystem, enumerate_sign_assignments, vertex_signs
from thinpos.graphs import Vertex, SignedVertexGraphSpec
from thinpos.morse import MAX, MIN, MorseWord
from thinpos.search import Instance, SurfaceSystem


def scan_width(tokens):
    """Reference width: sum the strand counts after every event but the last."""
    count, levels = 0, []
    for t in tokens:
        count += 2 if str(t) == "MIN" else -2
        levels.append(count)
    assert count == 0
    return sum(levels[:-1])


def random_link_word(rng, max_bridges=8):
    """Random walk on strand counts that returns to 0."""
    events, count = [], 0
    mins_left = rng.randint(1, max_bridges)
    while mins_left or count:
        if mins_left and (count == 0 or rng.random() < 0.5):
            events.append(MIN)
            count += 2
            mins_left -= 1
        else:
            events.append(MAX)
            count -= 2
    return MorseWord(events)


@st.composite
def link_words(draw, max_bridges=8):
    n = draw(st.integers(1, max_bridges))
    choices = draw(st.lists(st.booleans(), min_size=2 * n, max_size=2 * n))
    events, count, mins_left = [], 0, n
    for up in choices:
        if mins_left and (count == 0 or up):
            events.append(MIN)
            count += 2
            mins_left -= 1
        elif count:
            events.append(MAX)
            count -= 2
    events += [MAX] * (count // 2)
    return MorseWord(events)


def random_instance(rng, max_spheres=4, n=None, thinner_rate=0.2, name="random"):
    """Random sphere forest with a complete graph table of consistent bridge numbers."""
    m = rng.randint(0, max_spheres)
    if n is None:
        n = rng.randint(2, 5)
    spheres = []
    for i in range(1, m + 1):
        parent = rng.choice([None] + list(range(1, i)))
        spheres.append(BowlSphere(i, parent, 2 * rng.randint(1, n - 1)))
    system = SphereSystem(spheres)
    table = GraphTable()
    seen = set()
    for a in enumerate_sign_assignments(system):
        for r in system.region_ids:
            signs = vertex_signs(system, r, a)
            key = (r, tuple(sorted(signs.items())))
            if key in seen:
                continue
            seen.add(key)
            verts = tuple(Vertex(s, g, system.punctures(s)) for s, g in sorted(signs.items()))
            d_minus = sum(v.degree for v in verts if v.sign == "-")
            d_plus = sum(v.degree for v in verts if v.sign == "+")
            b = max(d_minus, d_plus, 2) // 2 + rng.randint(0, 2)
            table.add(SignedVertexGraphSpec(r, verts, b, rng.random() < thinner_rate))
    return Instance(name, n, [SurfaceSystem(system, table, "random")])


@pytest.fixture
def rng():
    return random.Random(20261016)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
