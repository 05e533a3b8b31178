from setuptools import setup

with open("README.md", "r", encoding="utf-8") as f:
    LONG_DESCRIPTION = f.read()

VERSION = "0.1.0"
LICENSE = "MIT"

with open("requirements.txt", "r") as f:
    REQUIREMENTS = f.readlines()

    while "\n" in REQUIREMENTS:
        REQUIREMENTS.remove("\n")

PACKAGES = [
    "qslope",
    "qslope.core",
    "qslope.models",
]

setup(
    name="qslope",
    author="The qslope developers",
    version=VERSION,
    license=LICENSE,
    description="Colored Jones polynomials, Jones slopes and adequacy of knot diagrams.",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    include_package_data=True,
    package_data={"qslope": ["data/*.json"]},
    install_requires=REQUIREMENTS,
    extras_require={"test": ["pytest"]},
    packages=PACKAGES,
    entry_points={"console_scripts": ["qslope = qslope.cli:main"]},
    python_requires='>=3.8.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Typing :: Typed',
    ]
)
