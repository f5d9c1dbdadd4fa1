"""
This module allows running the package with `python -m swapcodes`.

Author: Nikolay Lysenko
"""


from swapcodes.cli import cli


if __name__ == '__main__':
    cli(prog_name='swapcodes')
