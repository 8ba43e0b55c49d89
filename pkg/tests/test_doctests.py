from __future__ import annotations

import doctest

import ncproj

from conftest import ROOT


def test_package_docstring_examples():
    result = doctest.testmod(ncproj)
    assert result.attempted > 0 and result.failed == 0


def test_readme_session():
    result = doctest.testfile(str(ROOT / "README.md"), module_relative=False)
    assert result.attempted > 0 and result.failed == 0
