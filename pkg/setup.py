# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
from setuptools import setup, find_packages

setup(
    name='jlint',
    version='1.0',
    description='Exact averaged Jones polynomials of links and integrality '
    'checks of their Taylor coefficients at t=1.',
    author='Facebook AI Research',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={'jlint': ['test_data/*.pd']},
    install_requires=['sympy', 'numpy', 'tqdm'],
    extras_require={'test': ['pynose']},
    entry_points={'console_scripts': ['jlint=jlint.cli:run']},
    classifiers=["License :: OSI Approved :: MIT License",
                 "Intended Audience :: Science/Research",
                 "Topic :: Scientific/Engineering :: Mathematics",
                 "Programming Language :: Python"],
)
