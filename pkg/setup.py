from setuptools import setup, find_packages

setup(
    name="mixed_dgs",
    version="0.1.0",
    description="Exact generalized-spectrum computations for mixed graphs over the Gaussian integers",
    packages=find_packages(include=["src", "src.*"]),
    install_requires=[
        "numpy>=1.19.0",
        "pandas>=1.1.0",
        "matplotlib>=3.3.0",
        "networkx>=2.5.0",
        "sympy>=1.13",
        "joblib>=1.0.0",
        "tqdm>=4.50.0",
    ],
    extras_require={
        "test": ["pytest>=7.0.0", "hypothesis>=6.0.0"],
    },
    entry_points={
        "console_scripts": ["mixed-dgs=src.cli:main"],
    },
)
