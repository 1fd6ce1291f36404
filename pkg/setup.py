#!/usr/bin/env python

from setuptools import find_packages, setup

with open("requirements.txt") as req_file:
    install_requires = [
        req for req in req_file if req.strip() and not req.lstrip().startswith("#")
    ]

with open("README.md") as readme_file:
    description = readme_file.read()


setup(
    name="paramreals",
    long_description=description,
    long_description_content_type="text/markdown",
    version="0.1.0",
    python_requires="~=3.9",
    packages=find_packages(exclude=["examples", "examples.*"]),
    include_package_data=True,
    install_requires=install_requires,
    entry_points={"console_scripts": ["pr=paramreals.cli:main"]},
    zip_safe=False,
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Environment :: Console",
        "Framework :: Django",
        "License :: OSI Approved :: MIT License",
        "Operating System :: POSIX",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="exact-real-arithmetic interval-arithmetic computable-analysis complexity",
)
