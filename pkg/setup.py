import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="dickson-invariants",
    version="0.1.0",
    author="Dickson invariants contributors",
    description="Exact computer algebra for Dickson, Mui and parabolic invariants over F_p, Steenrod operations, free module bases over the Dickson algebra and the transfer.",
    entry_points={"console_scripts": ["dickson=dickson.cli:main"]},
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["test"]),
    install_requires=["appdirs", "tabulate", "msgpack", "numpy", "sympy"],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.7",
)
