"""Test package version is correctly set"""

import re

import pytest

try:
    from src.scietex.torelli import __version__ as version
    from src.scietex.torelli.emit import TautExpr, header_line
except ModuleNotFoundError:
    from scietex.torelli import __version__ as version
    from scietex.torelli.emit import TautExpr, header_line


def test_check_version_numbering() -> None:
    """
    Version is three non-negative integers, not all zero, with no padding.
    """
    assert re.fullmatch(r"\d+\.\d+\.\d+", version)
    assert sum(int(x) for x in version.split(".")) > 0


def test_version_in_script_header() -> None:
    """
    Generated scripts name the version that produced them.
    """
    assert f" {version} input-sha256:" in header_line(TautExpr.zero(2, 0))


if __name__ == "__main__":
    pytest.main()
