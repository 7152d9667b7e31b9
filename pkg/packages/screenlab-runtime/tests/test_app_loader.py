import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from screenlab.runtime import ScreenlabConfig, initialize_logging, load_screenlab_config


@pytest.fixture
def config_path(tmp_path: Path, monkeypatch) -> Path:
    """Point the loader at an empty temporary config directory"""
    monkeypatch.setenv("SCREENLAB_CONFIG_PATH", str(tmp_path))
    monkeypatch.delenv("SCREENLAB_JOBS", raising=False)
    return tmp_path


@pytest.mark.unit
class TestLoadScreenlabConfig:

    def test_defaults_without_file(self, config_path):
        """Test a missing screenlab.yaml yields the built-in defaults"""
        config = load_screenlab_config()
        assert config.tolerance == 1e-8
        assert config.shell_cap_for(2) == 400
        assert config.shell_cap_for(3) == 120
        assert config.shell_cap_for(5) == 40
        assert config.factorial_cap == 10
        assert config.truncation == 6

    def test_reads_aliases(self, config_path):
        """Test yaml keys are read through their aliases"""
        (config_path / "screenlab.yaml").write_text("tol: 1.0e-6\nmatrix_columns: 64\nseed: 7\n", encoding="utf-8")
        config = load_screenlab_config()
        assert config.tolerance == 1e-6
        assert config.matrix_column_cap == 64
        assert config.seed == 7

    def test_jobs_env_override(self, config_path, monkeypatch):
        """Test SCREENLAB_JOBS wins over the yaml value"""
        (config_path / "screenlab.yaml").write_text("jobs: 2\n", encoding="utf-8")
        monkeypatch.setenv("SCREENLAB_JOBS", "5")
        assert load_screenlab_config().jobs == 5

    def test_rejects_non_positive_tolerance(self):
        """Test tolerance must be positive"""
        with pytest.raises(ValidationError):
            ScreenlabConfig(tol=0.0)

    def test_config_is_frozen(self):
        """Test the config cannot be mutated after loading"""
        config = ScreenlabConfig()
        with pytest.raises(ValidationError):
            config.jobs = 3


@pytest.mark.unit
class TestInitializeLogging:

    def test_applies_yaml(self, config_path):
        """Test the logging yaml is applied via dictConfig"""
        (config_path / "screenlab-logging.yaml").write_text(
            "version: 1\n"
            "disable_existing_loggers: false\n"
            "loggers:\n"
            "  screenlab:\n"
            "    level: WARNING\n",
            encoding="utf-8",
        )
        initialize_logging()
        assert logging.getLogger("screenlab").level == logging.WARNING

    def test_missing_file_falls_back(self, config_path):
        """Test a missing logging yaml does not raise"""
        initialize_logging()
