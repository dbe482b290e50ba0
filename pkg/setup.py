from setuptools import setup
import sys

if sys.version_info < (3, 8):
    sys.exit("Python 3.8 (or newer) is required to use this package.")


requirements = ["numpy>=1.22", "scipy>=1.8"]

setup(
    name="falconer",
    version="1.0.0",
    description="Congruence classes of simplices, lattice censuses and Fourier estimators for fractal measures",
    author="The falconer developers",
    license="BSD",
    packages=["falconer", "falconer.tools"],
    entry_points={"console_scripts": [
        "falconer = falconer.tools.main:main",
        "falconer-census = falconer.tools.census:main",
        "falconer-frostman = falconer.tools.frostman:main",
        "falconer-group-energy = falconer.tools.group_energy:main",
        "falconer-growth = falconer.tools.growth:main",
        "falconer-mattila = falconer.tools.mattila:main",
        "falconer-run = falconer.tools.run:main",
        "falconer-sharpness = falconer.tools.sharpness:main",
        "falconer-spectral = falconer.tools.spectral:main",
        "falconer-spheres = falconer.tools.spheres:main",
        "falconer-three-spheres = falconer.tools.three_spheres:main",
        "falconer-thresholds = falconer.tools.thresholds:main",
        "falconer-validate = falconer.tools.validate:main",
    ]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=requirements,
    extras_require={"tables": ["tabulate"], "progress": ["tqdm"]},
)

# To get more output formatting options for the tool summaries install 'tabulate'

# To see progress bars for long enumerations install 'tqdm'
