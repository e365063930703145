import setuptools

import os, sys

import version

if sys.version_info.major == 3:
    with open('README.rst', 'r', encoding='utf-8') as fh:
        long_description = fh.read()
else:
    with open('README.rst', 'r') as fh:
        long_description = fh.read()

# copy version file over
src_path = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(src_path, 'version.py')) as fh:
    with open(os.path.join(src_path, 'idealclose', 'version.py'), 'w') as out:
        out.write(fh.read())

setuptools.setup(
    name="idealclose",
    version=version.__version__,
    description="Exact experiments with closure operations on ideals of commutative rings.",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    packages=setuptools.find_packages(exclude=['tests', 'examples', 'examples.*']),
    package_data={'idealclose': ['sessions/*.ics']},
    setup_requires=['wheel'],
    install_requires=['numpy>=1.16.2', 'sympy>=1.13'],
    entry_points={
        'console_scripts': ['idealclose=idealclose.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="commutative algebra ideal closure operation groebner basis frobenius integral closure",
)
