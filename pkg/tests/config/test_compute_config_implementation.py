"""Test the computation config implementation."""

import pytest

try:
    from src.scietex.torelli.config import (
        ComputeConfig,
        ComputeConfigModel,
        TorelliConfigError,
        resolve_config,
    )
    from src.scietex.torelli.config.defaults import DEFAULT_CACHE_ENV, DEFAULT_RANK_CAP
except ModuleNotFoundError:
    from scietex.torelli.config import (
        ComputeConfig,
        ComputeConfigModel,
        TorelliConfigError,
        resolve_config,
    )
    from scietex.torelli.config.defaults import DEFAULT_CACHE_ENV, DEFAULT_RANK_CAP


def test_defaults() -> None:
    """
    Test a config built without arguments carries the defaults.
    """
    config = ComputeConfig()
    assert isinstance(config, ComputeConfigModel)
    assert config.rank_cap == DEFAULT_RANK_CAP
    assert config.dialect == "v1"
    assert config.cache_dir is None
    data = config.to_dict()
    assert set(data) == {
        "lambda_max_genus",
        "inv_max_genus",
        "inv_max_folds",
        "rank_cap",
        "threads",
        "dialect",
        "cache_dir",
    }
    assert data["cache_dir"] is None


def test_setters_validate() -> None:
    """
    Test setters run the validators.
    """
    config = ComputeConfig(threads=1, rank_cap=16)
    assert config.to_dict()["rank_cap"] == 16
    config.threads = 2
    assert config.threads == 2
    with pytest.raises(TorelliConfigError):
        config.threads = 0
    with pytest.raises(TorelliConfigError):
        config.dialect = "maxima"
    with pytest.raises(TorelliConfigError):
        ComputeConfig(inv_max_genus=-1)


def test_from_env(tmp_path, monkeypatch) -> None:
    """
    Test the cache directory is read from the environment.
    """
    monkeypatch.setenv(DEFAULT_CACHE_ENV, str(tmp_path))
    config = ComputeConfig.from_env(threads=1)
    assert config.cache_dir == tmp_path
    assert config.threads == 1
    assert config.to_dict()["cache_dir"] == str(tmp_path)
    monkeypatch.delenv(DEFAULT_CACHE_ENV)
    assert ComputeConfig.from_env().cache_dir is None


def test_resolve_config() -> None:
    """
    Test a missing config is replaced by the default one.
    """
    config = ComputeConfig(rank_cap=9)
    assert resolve_config(config) is config
    assert isinstance(resolve_config(None), ComputeConfig)


if __name__ == "__main__":
    pytest.main()
