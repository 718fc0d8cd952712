"""
Pytest configuration and shared fixtures for fadingcap tests.

Fixtures:
- geometric_config: α_ℓ = 0.5^ℓ, AR(1) taps with a = 0.5, σ² = 1
- finite_memory_config: single IID tap
- run_config_file: the geometric reference config written to tmp_path
"""

import os
import sys
from pathlib import Path

# Add src directory to Python path for imports
_src_path = Path(__file__).parent.parent / "src"
if str(_src_path) not in sys.path:
    sys.path.insert(0, str(_src_path))

# =============================================================================
# Disable OpenTelemetry Tracing for Unit Tests
# =============================================================================

# Set this BEFORE pytest starts to prevent any tracing initialization
os.environ["OTEL_SDK_DISABLED"] = "true"

import pytest  # noqa: E402
from hypothesis import Phase, Verbosity, settings  # noqa: E402

from channel import (  # noqa: E402
    ChannelConfig,
    DecayProfile,
    GeometricTail,
    TapAssignment,
    ZeroTail,
)


def pytest_configure(config: pytest.Config) -> None:
    """Configure pytest with custom markers."""
    config.addinivalue_line("markers", "integration: mark test as integration test")
    config.addinivalue_line("markers", "property: mark test as property-based")
    config.addinivalue_line("markers", "slow: mark test as slow running")

    # Register Hypothesis profiles
    settings.register_profile(
        "thorough",
        max_examples=500,
        deadline=None,
        phases=[Phase.explicit, Phase.reuse, Phase.generate, Phase.target, Phase.shrink],
        verbosity=Verbosity.verbose,
    )
    settings.register_profile(
        "dev",
        max_examples=50,
        deadline=None,
        verbosity=Verbosity.normal,
    )
    settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(scope="session")
def project_root() -> Path:
    """Get project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture(scope="session")
def configs_dir(project_root: Path) -> Path:
    """Get example configs directory."""
    return project_root / "configs"


@pytest.fixture
def geometric_profile() -> DecayProfile:
    return DecayProfile((1.0,), GeometricTail(ratio=0.5))


@pytest.fixture
def geometric_config(geometric_profile: DecayProfile) -> ChannelConfig:
    """Geometric reference channel at SNR 10 (10 dB)."""
    return ChannelConfig(
        profile=geometric_profile,
        taps=TapAssignment(default=0.5),
        noise_var=1.0,
        power=10.0,
        blocklength=6,
    )


@pytest.fixture
def finite_memory_config() -> ChannelConfig:
    """Single IID tap, α_0 = 1."""
    return ChannelConfig(
        profile=DecayProfile((1.0,), ZeroTail()),
        taps=TapAssignment(coefficients=(0.0,)),
        noise_var=1.0,
        power=10.0,
        blocklength=6,
    )


@pytest.fixture
def run_config_file(tmp_path: Path, configs_dir: Path) -> Path:
    """Geometric reference config with a small sample budget and tmp output."""
    text = (configs_dir / "geometric_reference.yaml").read_text(encoding="utf-8")
    text = text.replace("samples: 200000", "samples: 2000")
    text = text.replace("directory: out/geometric_reference", f"directory: {tmp_path / 'out'}")
    text = text.replace("snr_db: [0, 10, 20, 30, 40, 50, 60]", "snr_db: [0, 20]")
    path = tmp_path / "run.yaml"
    path.write_text(text, encoding="utf-8")
    return path
