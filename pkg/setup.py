"""
Setup configuration for cyclo
"""

from setuptools import setup, find_packages
from pathlib import Path

readme_file = Path(__file__).parent / "README.md"
long_description = readme_file.read_text(encoding='utf-8') if readme_file.exists() else ""

setup(
    name="cyclo",
    version="1.0.0",
    description="Exact spectral classification of digraphs whose Hermitian adjacency matrix has spectral radius at most 2",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="cyclo contributors",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "click>=8.0.0",
        "pyyaml>=6.0",
        "jsonschema>=4.0.0",
        "rich>=13.0.0",
        "networkx>=2.6",
        "numpy>=1.21",
    ],
    python_requires=">=3.8",
    entry_points={
        "console_scripts": [
            "cyclo=cyclo.cli:main",
        ],
    },
    license="MIT",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Utilities",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
    ],
    keywords="digraph hermitian adjacency spectral radius signed graph switching root lattice cli",
)
