"""Backend selection and pure/compiled agreement."""

import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from troplines.analysis import analyze_config
from troplines.incidence import ordinary_stable_lines, point_config
from troplines.kernel import (
    COORD_LIMIT,
    MAX_KERNEL_POINTS,
    analyze,
    backend_name,
    has_ordinary_line,
    kernel_eligible,
)

compiled_only = pytest.mark.skipif(
    backend_name() != "compiled", reason="compiled extension not active"
)


def test_backend_name_is_one_of_the_two():
    assert backend_name() in ("pure", "compiled")


int_configs = st.lists(
    st.tuples(st.integers(-15, 15), st.integers(-15, 15)),
    min_size=2,
    max_size=7,
    unique=True,
)


@settings(max_examples=50, deadline=None)
@given(int_configs)
def test_analyze_matches_the_pure_reference(points):
    cfg = point_config(sorted(points))
    assert analyze(cfg) == analyze_config(cfg)


@settings(max_examples=50, deadline=None)
@given(int_configs)
def test_has_ordinary_line_matches_the_pure_reference(points):
    cfg = point_config(sorted(points))
    assert has_ordinary_line(cfg) == (len(ordinary_stable_lines(cfg)) > 0)


@compiled_only
def test_small_integer_configs_are_kernel_eligible():
    assert kernel_eligible(point_config([(0, 0), (3, 1), (-2, 5)]))


def test_eligibility_fallbacks():
    fractional = point_config([(0, 0), (Fraction(1, 2), 3)])
    assert not kernel_eligible(fractional)
    huge = point_config([(0, 0), (COORD_LIMIT + 1, 1)])
    assert not kernel_eligible(huge)
    many = point_config([(i, i * i) for i in range(MAX_KERNEL_POINTS + 1)])
    assert not kernel_eligible(many)
    # all three still analyze through the fallback path
    for cfg in (fractional, huge):
        assert analyze(cfg) == analyze_config(cfg)


_PROBE = (
    "import json\n"
    "from troplines.incidence import point_config\n"
    "from troplines.kernel import analyze, backend_name\n"
    "cfg = point_config([(0, 0), (3, 1), (1, 4), (-2, 2), (5, 5)])\n"
    "print(backend_name())\n"
    "print(json.dumps(analyze(cfg), sort_keys=True))\n"
)


def _probe(extra_env):
    env = dict(os.environ)
    env.pop("TROPLINES_PURE", None)
    env.update(extra_env)
    out = subprocess.run(
        [sys.executable, "-c", _PROBE],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    name, record = out.stdout.splitlines()
    return name, record


def test_pure_env_switch_forces_the_fallback():
    name, _ = _probe({"TROPLINES_PURE": "1"})
    assert name == "pure"


@compiled_only
def test_both_backends_serialize_identically():
    pure_name, pure_record = _probe({"TROPLINES_PURE": "1"})
    fast_name, fast_record = _probe({})
    assert (pure_name, fast_name) == ("pure", "compiled")
    assert pure_record == fast_record
    assert json.loads(pure_record)["v"] == 5
