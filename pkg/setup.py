import os
from setuptools import setup, find_packages

# Utility function to read the README file.
# Used for the long_description.
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


setup(
    name            = "ptep",
    version         = "0.1.0",
    author          = "ptep contributors",
    description     = ("Spectra, exceptional points and metrics of small "
                       "PT-symmetric matrix models."),
    long_description= read("README.rst"),
    license         = "MIT",
    keywords        = "pt-symmetry exceptional-points quasi-hermiticity",
    packages        = find_packages(exclude = ["tests"]),
    entry_points    = {"console_scripts": ["ptep = ptep.ptep:main"]},
    package_data    = {"ptep": ["records.schema.json"]},
    python_requires = ">=3.7",
    install_requires = [
        "numpy>=1.17",
        "pyyaml",
        "matplotlib>=3.1",
        "jsonschema>=3.0",
        "setuptools>=20.7.0"
    ],
    extras_require  = {
        "test": ["pytest>=5.0", "hypothesis>=4.0"]
    },
    zip_safe        = True
)
