# Copyright (C) 2026 cubemorse developers
# SPDX-License-Identifier: BSD-3-Clause

import os
from pathlib import Path

from setuptools import find_packages, setup


# extend the package files by directory or by file
def extend_cubemorse_package(data_list):
    for data in data_list:
        if os.path.isdir(data):
            cubemorse_files.extend(
                [
                    os.path.relpath(os.path.join(root, f), "cubemorse")
                    for root, _, files in os.walk(data)
                    for f in files
                    if not f.endswith((".py", ".pyc"))
                ]
            )
        elif os.path.isfile(data):
            cubemorse_files.append(os.path.relpath(data, "cubemorse"))


# Get the version
with open("./cubemorse/version.txt", "r") as ver_file:
    ver_str = ver_file.readline().strip()

# read the contents of your README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text()


# Get the files
cubemorse_files = []

extend_cubemorse_package(
    [
        "cubemorse/version.txt",
    ]
)

# Required packages
required = ["setuptools>=24.2.0", "numpy", "tqdm", "networkx>=3.0"]

extras = {"test": ["pytest", "hypothesis"]}


setup(
    name="cubemorse",
    version=ver_str,
    description="Hyperplane well-separation and sublinearly Morse diagnostics for finite CAT(0) cube complexes",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="cubemorse developers",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=required,
    extras_require=extras,
    python_requires=">=3.10",
    package_data={
        "cubemorse": cubemorse_files,
    },
    entry_points={
        "console_scripts": [
            "cubemorse = cubemorse.cli.main:main",
        ],
    },
    zip_safe=False,
    license="BSD 3-Clause",
)
