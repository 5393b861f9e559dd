from setuptools import setup, find_packages

setup(
    name="gmdual",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    package_data={
        "gmdual.core": ["*.json"],
        "gmdual.schemas": ["*.json"],
        "gmdual": ["instances/*.json", "instances/*.yaml", "instances/invalid/*.json"],
    },
    install_requires=[
        "click>=8.0.0",
        "pyyaml>=6.0",
        "jsonschema>=4.0.0",
        "sympy>=1.12",
    ],
    entry_points={
        "console_scripts": [
            "gmdual=gmdual.cli:main",
        ],
    },
    python_requires=">=3.8",
    description="Exact verification of self-duality for Gauss-Manin systems of linear free divisors",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
)
