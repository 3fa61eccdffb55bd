import os
import unittest
import doctest

import nlselab.utils
import nlselab.field.tests, nlselab.models.tests, nlselab.evolution.tests, nlselab.analysis.tests, \
    nlselab.soliton.tests, nlselab.motion.tests, nlselab.cli.tests

packages = (nlselab.field, nlselab.models, nlselab.evolution, nlselab.analysis, nlselab.soliton, nlselab.motion,
            nlselab.cli)


def suite():
    here = os.path.dirname(os.path.abspath(__file__))
    loader = unittest.TestLoader()
    suite = loader.discover(here, 'test_*', top_level_dir=os.path.dirname(here))
    suite.addTests(doctest.DocTestSuite(nlselab.utils))
    for package in packages:
        for m in package.tests.modules:
            suite.addTests(doctest.DocTestSuite(m))
    return suite


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    runner.run(suite())
