"""
Copyright (C) 2020-2026 The Algorithmic Dimensions authors

This file is part of "Algorithmic Dimensions".

"Algorithmic Dimensions" is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your
option) any later version.

"Algorithmic Dimensions" is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along
with this program. If not, see <http://www.gnu.org/licenses/>.
"""
import io
import json
import os
import shutil
import tempfile
from contextlib import redirect_stdout
from unittest import mock
from unittest.case import TestCase

from algorithmic_dimensions import app, configure


class AppTests(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.directory = tempfile.mkdtemp()
        cls.config_path = os.path.join(cls.directory, 'dimensions.json')
        with open(cls.config_path, 'w') as file:
            json.dump(
                {
                    'table.path': os.path.join(cls.directory, 'tables', 'table'),
                    'table.max_length': 14,
                    'domination.r_max': 6,
                    'domination.random_sets': 4,
                },
                file,
            )
        cls.output = os.path.join(cls.directory, 'results')
        cls.invoke(['table', 'build'])

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.directory)

    @classmethod
    def invoke(cls, arguments):
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            code = app.main(['--config', cls.config_path, '--output', cls.output] + arguments)
        return code, stdout.getvalue()

    def test_table_build(self):
        code, printed = self.invoke(['table', 'build', '--max-length', '12'])
        self.assertEqual(code, app.EXIT_SUCCESS)
        self.assertIn('entries: ', printed)
        self.invoke(['table', 'build'])

    def test_measure_eval(self):
        code, printed = self.invoke(['measure', 'eval', 'kappa', 'point:0'])
        self.assertEqual(code, app.EXIT_SUCCESS)
        self.assertTrue(printed.startswith('1/512'))

    def test_overrides(self):
        code, _ = self.invoke(['--set', 'space.dimension=2', 'measure', 'eval', 'nu', 'all'])
        self.assertEqual(code, app.EXIT_SUCCESS)
        code, _ = self.invoke(['--set', 'space.colour=2', 'measure', 'eval', 'nu', 'all'])
        self.assertEqual(code, app.EXIT_CONFIG)

    def test_dominate(self):
        code, printed = self.invoke(['--seed', '5', 'dominate', 'm', 'kappa', '--family', 'balls'])
        self.assertEqual(code, app.EXIT_SUCCESS)
        self.assertIn('verdict: dominates', printed)

    def test_failed_verdict(self):
        code, printed = self.invoke(['--seed', '5', 'dominate', 'zero', 'kappa'])
        self.assertEqual(code, app.EXIT_VERDICT)
        self.assertIn('verdict: fails', printed)

    def test_missing_seed(self):
        code, _ = self.invoke(['dominate', 'm', 'kappa'])
        self.assertEqual(code, app.EXIT_CONFIG)

    def test_budget_exceeded(self):
        code, _ = self.invoke(['table', 'build', '--max-length', '40'])
        self.assertEqual(code, app.EXIT_BUDGET)

    def test_counterexample(self):
        code, printed = self.invoke(['counterexample', '--alphas', '8,14'])
        self.assertEqual(code, app.EXIT_SUCCESS)
        self.assertIn('alpha=14\tempty=True', printed)

    def test_failing_counterexample_row(self):
        rows = [{'alpha': 4, 'holds': True}, {'alpha': 6, 'holds': False}]
        target = 'algorithmic_dimensions.app.ExperimentRunner.counterexample'
        with mock.patch(target, return_value=rows):
            code, printed = self.invoke(['counterexample'])
        self.assertEqual(code, app.EXIT_VERDICT)
        self.assertIn('alpha=6\tholds=False', printed)

    def test_parser(self):
        args = app.build_parser().parse_args(['axioms', '--measures', 'kappa,nu'])
        self.assertEqual(args.measures, ['kappa', 'nu'])
        args = app.build_parser().parse_args(['ballcube', '--seeds', '1,2'])
        self.assertEqual(args.seeds, [1, 2])


class ConfigureTests(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.directory.name, 'dimensions.json')

    def tearDown(self):
        self.directory.cleanup()

    def _stored(self):
        with open(self.path) as file:
            return json.load(file)

    def test_set_and_unset(self):
        configure.main(['--config', self.path, '--set', 'table.max_length=16'])
        configure.main(['--config', self.path, '--set', 'experiment.seed=4'])
        configure.main(['--config', self.path, '--unset', 'experiment.seed'])
        self.assertEqual(self._stored(), {'table.max_length': 16})

    def test_show(self):
        configure.main(['--config', self.path, '--set', 'space.dimension=2'])
        stdout = io.StringIO()
        with redirect_stdout(stdout):
            configure.main(['--config', self.path, '--show'])
        self.assertEqual(json.loads(stdout.getvalue())['config']['space.dimension'], 2)

    def test_copy_from(self):
        source = os.path.join(self.directory.name, 'source.json')
        with open(source, 'w') as file:
            json.dump({'table.step_budget': 256}, file)
        configure.main(['--config', self.path, '--set', 'table.max_length=16'])
        configure.main(['--config', self.path, '--copy_from', source])
        self.assertEqual(self._stored(), {'table.step_budget': 256})

    def test_manual_flow(self):
        answers = iter(['2', '', '', '', '11', ''])
        with mock.patch('builtins.input', lambda: next(answers)), redirect_stdout(io.StringIO()):
            configure.main(['--config', self.path])
        self.assertEqual(self._stored(), {'space.dimension': 2, 'experiment.seed': 11})
