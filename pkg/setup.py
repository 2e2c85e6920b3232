from pathlib import Path

from setuptools import find_packages, setup

ROOT = Path(__file__).parent
PACKAGE_ROOT = ROOT / "quartseq"

with open("requirements.txt", "r") as f:
    requirements = [pac.strip() for pac in f.readlines() if pac.strip()]

setup(
    name="quartseq",
    version="0.1.0",
    packages=find_packages(exclude=["test", "test.*"]),
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "quartseq=quartseq.__main__:main",
        ]
    },
)
