# -*- coding: UTF-8 -*-
"""
setup module for laplace-expansion
"""

import typing as t
from os.path import dirname, join, realpath
from setuptools import setup, find_packages


fdir = dirname(realpath(__file__))


NAME = "laplace-expansion"
PACKAGE = "laplace_expansion"


SHORT_DESC = (
    "Exact rational coefficients of Laplace-type asymptotic expansions"
)

with open(join(fdir, "README.rst"), encoding="utf-8") as readmefile:
    LONG_DESC = readmefile.read()


KEYWORDS = [
    "asymptotics",
    "laplace method",
    "bell polynomials",
    "stirling series",
]


PACKAGE_DEPENDENCIES = []
SETUP_DEPENDENCIES: t.List[str] = []
TEST_DEPENDENCIES = []

ENTRY_POINTS = {
    "console_scripts": ["laplace-coeffs = laplace_expansion.cli:main"]
}


with open(join(fdir, "requirements.txt")) as reqfile:
    for ln in reqfile:
        if ln.strip() and not ln.startswith("#"):
            PACKAGE_DEPENDENCIES.append(ln.strip())


with open(join(fdir, "requirements-dev.txt")) as reqfile:
    for ln in reqfile:
        if ln.strip() and not ln.startswith(("#", "-r")):
            TEST_DEPENDENCIES.append(ln.strip())


EXTRAS_DEPENDENCIES = {"dev": TEST_DEPENDENCIES}


# See https://pypi.python.org/pypi?%3Aaction=list_classifiers for all
# available setup classifiers
CLASSIFIERS = [
    "Development Status :: 4 - Beta",
    "Environment :: Console",
    "Intended Audience :: Science/Research",
    "License :: OSI Approved :: MIT License",
    "Natural Language :: English",
    "Operating System :: POSIX :: Linux",
    "Programming Language :: Python :: 3 :: Only",
    "Programming Language :: Python :: 3.8",
    "Programming Language :: Python :: 3.9",
    "Programming Language :: Python :: 3.10",
    "Programming Language :: Python :: 3.11",
    "Topic :: Scientific/Engineering :: Mathematics",
]


__version__ = "0.0.0"

with open(join(fdir, "src/{0}/_version.py".format(PACKAGE))) as version_file:
    for line in version_file:
        # This will populate the __version__ and __version_info__ variables
        if line.startswith("__"):
            exec(line)

setup(
    name=NAME,
    version=__version__,
    description=SHORT_DESC,
    long_description=LONG_DESC,
    classifiers=CLASSIFIERS,
    keywords=KEYWORDS,
    package_dir={"": "src"},
    packages=find_packages(where="src"),
    python_requires=">=3.8",
    install_requires=PACKAGE_DEPENDENCIES,
    setup_requires=SETUP_DEPENDENCIES,
    tests_require=TEST_DEPENDENCIES,
    extras_require=EXTRAS_DEPENDENCIES,
    entry_points=ENTRY_POINTS,
)
