#!/usr/bin/env python
"""
Deployment script for hypercubix.
"""

from setuptools import setup
import os
import re


CLASSIFIERS = [
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: GNU Lesser General Public License v3 or later (LGPLv3+)',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics'
]

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

README = open('README.rst').read()

# the package imports numpy, so the version is read rather than imported
VERSION = re.search(r"^VERSION = '([^']+)'", open(os.path.join('hypercubix', '__init__.py')).read(), re.M).group(1)

setup(
    name='hypercubix',
    version=VERSION,
    description='Hypercubically-contoured densities with standard normal marginals',
    long_description=README,
    license='GNU Lesser General Public License',
    platforms=['OS Independent'],
    classifiers=CLASSIFIERS,
    python_requires='>=3.7',
    packages=[
     'hypercubix',
     'hypercubix.numerics',
     'hypercubix.model',
     'hypercubix.cli',
    ],
    install_requires=[
     'numpy>=1.17',
     'scipy>=1.6',
    ],
    extras_require={
     'test': ['pytest>=6'],
    },
    entry_points={
     'console_scripts': [
      'hypercubix = hypercubix.cli.cli:main',
     ],
    },
)
