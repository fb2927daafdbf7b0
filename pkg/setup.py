from setuptools import setup

NAME = 'LibSnake'
VERSION = '1.0'


def main():
    setup(name=NAME,
          version=VERSION,
          provides=['libsnake'],
          license='LGPL',
          description='Snakes and coils in hypercubes: validation, exact '
                      'and beam search, record bounds',
          long_description='A library and command line tool that models '
                           'induced paths (snakes) and induced cycles '
                           '(coils) in n-dimensional hypercubes, verifies '
                           'record sequences, recomputes small optima '
                           'exactly and searches long snakes and coils with '
                           'a seeded stochastic beam search.',
          packages=['libsnake', 'libsnake.test'],
          package_dir={'libsnake': 'libsnake'},
          package_data={'libsnake': ['data/records/*.seq',
                                     'data/records/manifest.txt']},
          python_requires='>=3.8',
          install_requires=['numpy>=1.17'],
          extras_require={'docs': ['sphinx'],
                          'test': ['pytest']},
          entry_points={'console_scripts':
                        ['libsnake = libsnake.cli:main']})

if __name__ == '__main__':
    main()

# To install
# pip install .

# To run the tests
# pytest

# To run the tests that take minutes as well
# LIBSNAKE_EXTENDED_TESTS=1 pytest
