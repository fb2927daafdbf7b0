"""
The :mod:`path` module provides functions for portable access to
LibSnake's installed folders, especially the ones that contain data.
"""

import os


def lib_path(relative_path='.'):
    """
    Return the absolute file path of a file, specified by a *relative_path*
    to the libsnake module root directory.
    """
    return os.path.join(os.path.split(os.path.abspath(__file__))[0],
                        relative_path)


def data_path(relative_path='.'):
    """
    Return the absolute file path of a file, specified by a *relative_path*
    to the libsnake data root directory.
    """
    path = os.path.join('data', relative_path)
    return lib_path(path)


def records_path(relative_path='.'):
    """
    Return the absolute file path of a file, specified by a *relative_path*
    to the libsnake data/records directory, where the record sequences and
    their manifest live.
    """
    path = os.path.join('records', relative_path)
    return data_path(path)
