#!/usr/bin/env python3
"""
setup.py for older setuptools that cannot build from pyproject.toml alone.

Keep the metadata in step with pyproject.toml.
"""
from setuptools import setup, find_packages

setup(
    name="collineate",
    version="0.1.0",
    description="Lie and Noether point symmetries of quasilinear second-order systems from collineations",
    license="MIT",
    python_requires=">=3.10",
    package_dir={"": "src"},
    packages=find_packages(where="src", include=["collineate*"]),
    package_data={"collineate": ["templates/*.j2"]},
    include_package_data=True,
    install_requires=[
        "sympy>=1.12",
        "mpmath>=1.3",
        "Jinja2>=3.1.0",
        "PyYAML>=6.0",
    ],
    extras_require={
        "dev": ["pytest>=7.0", "pytest-cov>=4.0", "black>=23.0", "isort>=5.12", "mypy>=1.0", "ruff>=0.1.0"],
    },
    entry_points={
        "console_scripts": [
            "collineate=collineate.main:cli",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
