import setuptools
import pyknotslopes

with open("README.md", "r", encoding="utf-8") as fh:
    longDescription = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as r:
    requires = [x.strip() for x in r if x.strip() and x.strip() not in {"pyinstaller", "pylint", "pytest"}]

setuptools.setup(
    name="pyknotslopes",
    version=pyknotslopes.__version__,
    description="Colored Jones polynomials, adequacy and boundary slopes of knot diagrams",
    long_description=longDescription,
    long_description_content_type="text/markdown",
    author=pyknotslopes.__author__,
    license="GNU General Public License v3.0",
    packages=setuptools.find_packages(exclude=("tests", "examples")),
    include_package_data=True,
    install_requires=requires,
    entry_points={
        "console_scripts": ["pyknotslopes=pyknotslopes.__main__:main"]
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
)
