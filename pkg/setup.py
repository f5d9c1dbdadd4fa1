"""
Just a regular `setup.py` file.

Author: Nikolay Lysenko
"""


import os
from setuptools import setup, find_packages


current_dir = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(current_dir, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='swapcodes',
    version='0.1.0',
    description='Codes correcting transpositions of consecutive symbols',
    long_description=long_description,
    long_description_content_type='text/markdown',
    url='https://github.com/Nikolay-Lysenko/swapcodes',
    author='Nikolay Lysenko',
    author_email='nikolay-lysenco@yandex.ru',
    license='MIT',
    keywords='coding_theory transpositions zero_error_capacity bounds',
    packages=find_packages(exclude=['tests', 'examples']),
    python_requires='>=3.8',
    install_requires=[
        'click', 'networkx', 'numpy', 'pyparsing', 'scipy', 'sympy'
    ],
    entry_points={
        'console_scripts': [
            'swapcodes = swapcodes.cli:cli'
        ]
    }
)
