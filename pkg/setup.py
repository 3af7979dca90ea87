from setuptools import setup, find_packages

setup(
    name="magspec",
    version="0.0.1",
    description=(
        "Numerical lab for magnetic Schrodinger operators, their ground state energies and Mane critical values"),
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy",         # math library
        "scipy",         # sparse operators, eigensolvers, golden-section search
        "matplotlib",    # plotting library
        "seaborn",    # plotting library
        "pandas",
        "autopep8",      # code quality tool
        "torch-testing",  # testing library for pytorch
        "ray",  # multiprocessing tool
        "pytest",  # python testing library
        "pytest-benchmark",
        "gitpython"
        # these should be installed globally:
        # "tensorflow",  # needed for tensorboard
        # "torch",       # lanczos kernels and the critical value minimax
    ],
    extras_require={
        "pytorch": [
            "torch",
            "tensorboard"
        ],
    },
    entry_points={
        "console_scripts": [
            "magspec=magspec.cli:main",
        ],
    },
)
