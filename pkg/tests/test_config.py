"""Tests for loading, validating and writing configuration files."""

import json
from fractions import Fraction

import pytest

from cc_padic.config import config_from_dict, dump_config, parse_config
from cc_padic.errors import (
    ConfigError,
    DistributionError,
    LiteralError,
    NotAutomorphismError,
    NotPrimeError,
)
from cc_padic.measure import canonical_form, degenerate, haar, mixture
from cc_padic.padic import INF, PAdicScalar


def base(**overrides):
    data = {
        "p": 3,
        "alpha": "9",
        "mu1": [{"weight": "1", "kind": "ball", "level": 0}],
        "mu2": [{"weight": "1", "kind": "point", "shift": "2"}],
    }
    data.update(overrides)
    return data


def test_minimal_config():
    config = config_from_dict(base(label="demo"))
    assert config.p == 3
    assert config.alpha == PAdicScalar.of(9, 3)
    assert config.mu1 == haar(3, 0)
    assert config.mu2 == degenerate(3, 2)
    assert config.label == "demo"
    assert config.forms is None


def test_kind_defaults_to_ball():
    config = config_from_dict(base(mu1=[{"weight": "1/2", "level": 1}, {"weight": "1/2", "level": 0, "shift": "1/3"}]))
    assert config.mu1 == mixture(3, (Fraction(1, 2), 1), (Fraction(1, 2), 0, Fraction(1, 3)))


@pytest.mark.parametrize(
    "overrides, error, message",
    [
        ({"p": 4}, NotPrimeError, "4"),
        ({"p": "3"}, ConfigError, "integer"),
        ({"alpha": "0"}, NotAutomorphismError, "alpha"),
        ({"alpha": "1/0"}, LiteralError, "zero denominator"),
        ({"alpha": 0.5}, ConfigError, "literal"),
        ({"mu1": []}, ConfigError, "nonempty"),
        ({"mu1": [{"weight": "1", "kind": "disc", "level": 0}]}, ConfigError, "kind"),
        ({"mu1": [{"weight": "1", "kind": "ball"}]}, ConfigError, "integer level"),
        ({"mu1": [{"weight": "1", "kind": "point", "level": 0}]}, ConfigError, "no level"),
        ({"mu1": [{"weight": "1", "level": 0, "size": 2}]}, ConfigError, "unknown keys"),
        ({"mu1": [{"level": 0}]}, ConfigError, "weight"),
        (
            {"mu1": [{"weight": "1/2", "level": 0}, {"weight": "1/3", "level": 1}]},
            DistributionError,
            "5/6",
        ),
    ],
)
def test_rejections(overrides, error, message):
    with pytest.raises(error, match=message):
        config_from_dict(base(**overrides))


@pytest.mark.parametrize("missing", ["p", "mu1", "mu2", "alpha"])
def test_missing_keys(missing):
    data = base()
    del data[missing]
    with pytest.raises(ConfigError, match=missing):
        config_from_dict(data)


def test_not_an_object():
    with pytest.raises(ConfigError, match="object"):
        config_from_dict([1, 2])


class TestForms:
    def test_forms_reduce_to_alpha(self):
        data = base(alpha1="3", alpha2="1", beta1="2", beta2="4")
        del data["alpha"]
        config = config_from_dict(data)
        assert config.alpha == PAdicScalar.of(6, 3)
        assert config.mu1 == haar(3, 1)
        assert config.mu2 == degenerate(3, 2)
        assert [str(f) for f in config.forms] == ["3", "1", "2", "4"]

    def test_forms_and_alpha_conflict(self):
        with pytest.raises(ConfigError, match="not both"):
            config_from_dict(base(alpha1="1", alpha2="1", beta1="1", beta2="2"))

    def test_incomplete_forms(self):
        data = base(alpha1="1", alpha2="1")
        del data["alpha"]
        with pytest.raises(ConfigError, match="beta1"):
            config_from_dict(data)

    def test_zero_coefficient(self):
        data = base(alpha1="1", alpha2="0", beta1="1", beta2="2")
        del data["alpha"]
        with pytest.raises(NotAutomorphismError, match="alpha2"):
            config_from_dict(data)


class TestFiles:
    def test_syntax_error_reports_position(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "p": 3,\n  "alpha": \n}\n', encoding="utf-8")
        with pytest.raises(ConfigError, match="line 4"):
            parse_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            parse_config(tmp_path / "absent.json")

    def test_dump_then_parse(self, tmp_path):
        half = Fraction(1, 2)
        data = base(
            label="mixed",
            alpha="-2/5",
            mu1=[
                {"weight": "1/2", "kind": "ball", "level": -1, "shift": "1/3"},
                {"weight": "1/2", "kind": "point", "shift": "-7"},
            ],
        )
        config = config_from_dict(data)
        path = tmp_path / "out.json"
        text = dump_config(config, path)
        assert path.read_text(encoding="utf-8") == text
        assert json.loads(text)["alpha"] == "-2/5"

        again = parse_config(path)
        assert again == config
        assert canonical_form(again.mu1) == canonical_form(
            mixture(3, (half, -1, Fraction(1, 3)), (half, None, -7))
        )
        assert again.mu1.components[1].level is INF

    def test_dump_writes_reduced_alpha(self):
        data = base(alpha1="3", alpha2="1", beta1="2", beta2="4")
        del data["alpha"]
        dumped = json.loads(dump_config(config_from_dict(data)))
        assert dumped["alpha"] == "6"
        assert not set(dumped) & {"alpha1", "alpha2", "beta1", "beta2"}
