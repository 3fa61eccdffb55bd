import doctest
import os
import runpy
import unittest

DOC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'doc')


@unittest.skipUnless(os.path.isdir(DOC), "documentation sources not available")
class TestTutorial(unittest.TestCase):

    def test_conf_setup(self):
        conf = runpy.run_path(os.path.join(DOC, 'conf.py'))
        self.assertEqual(conf['extensions'], ['sphinx.ext.autodoc', 'sphinx.ext.doctest', 'sphinx.ext.intersphinx'])
        for name in ('latex_documents', 'htmlhelp_basename', 'templates_path', 'unused_docs'):
            self.assertNotIn(name, conf)
        globs = {}
        exec(conf['doctest_global_setup'], globs)
        self.assertIn('ModelSpec', globs)
        self.assertIn('make_grid', globs)

    def test_tutorial(self):
        conf = runpy.run_path(os.path.join(DOC, 'conf.py'))
        globs = {'math': __import__('math')}
        exec(conf['doctest_global_setup'], globs)
        failed, attempted = doctest.testfile(os.path.join(DOC, 'tutorial.rst'), module_relative=False,
                                             globs=globs, optionflags=doctest.ELLIPSIS)
        self.assertGreater(attempted, 0)
        self.assertEqual(failed, 0)


if __name__ == '__main__':
    unittest.main()
