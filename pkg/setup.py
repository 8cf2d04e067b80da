# coding: utf-8

from __future__ import unicode_literals

from codecs import open   # pylint:disable=redefined-builtin
from os.path import dirname, join
import re

from setuptools import setup, find_packages


CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: Apache Software License',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9',
    'Programming Language :: Python :: 3.10',
    'Programming Language :: Python :: 3.11',
    'Programming Language :: Python :: Implementation :: CPython',
    'Operating System :: OS Independent',
    'Topic :: Scientific/Engineering :: Image Processing',
    'Topic :: Scientific/Engineering :: Mathematics',
]


def main():
    base_dir = dirname(__file__)
    install_requires = [
        'attrs>=19.2.0',
        'six>=1.9.0',
        'wrapt>=1.10.1',
        'numpy>=1.20.0',
        'scipy>=1.5.0',
        'Pillow>=8.0.0',
    ]
    test_requires = [
        'mock>=2.0.0',
        'pycodestyle',
        'pylint',
        'tox',
        'pytest>=6.0.0',
        'pytest-cov',
        'pytest-xdist',
        'coverage',
    ]
    extra_requires = {'test': test_requires}
    with open(join(base_dir, 'quatinpaint', 'version.py'), 'r', encoding='utf-8') as version_py:
        version = re.search(r'^\s*__version__\s*=\s*[\'"]([^\'"]*)[\'"]', version_py.read(), re.MULTILINE).group(1)
    setup(
        name='quatinpaint',
        version=version,
        description='Robust quaternion tensor completion for color video inpainting',
        long_description=open(join(base_dir, 'README.rst'), encoding='utf-8').read(),
        packages=find_packages(exclude=['test', 'test*', '*test', '*test*']),
        install_requires=install_requires,
        extras_require=extra_requires,
        tests_require=test_requires,
        python_requires='>=3.8',
        entry_points={'console_scripts': ['quatinpaint=quatinpaint.cli:main']},
        classifiers=CLASSIFIERS,
        keywords='quaternion tensor completion inpainting admm',
        license='Apache Software License, Version 2.0, http://www.apache.org/licenses/LICENSE-2.0',
    )


if __name__ == '__main__':
    main()
