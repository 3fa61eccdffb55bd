import unittest
import doctest

from . import config, experiments, io, main

modules = (config, experiments, io, main)


def suite():
    loader = unittest.TestLoader()
    suite = loader.discover('.', 'test_*')
    for m in modules:
        suite.addTests(doctest.DocTestSuite(m))
    return suite


def load_tests(loader, tests, ignore):
    for m in modules:
        tests.addTests(doctest.DocTestSuite(m))
    return tests


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
