from setuptools import find_packages, setup


# Import __version__ from code base.
exec(open("edgegame/version.py").read())

setup(
    name="edgegame",
    version=__version__,
    description=(
        "A library for secure routing with multistage edge-games and a "
        "path versus edge attack meta-game."
    ),
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "numpy>=1.17",
        "scipy>=1.4",
        "pandas>=1.0",
        "networkx>=2.4",
        "pydantic>=2.0",
    ],
    extras_require={"test": ["pytest>=6.0"]},
    entry_points={"console_scripts": ["edgegame=edgegame.cli:main"]},
    keywords="game theory security routing zero-sum dynamic games",
    license="MIT License"
)
