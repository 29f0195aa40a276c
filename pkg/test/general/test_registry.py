"""Unit tests for Registry class."""

import unittest

from quiverpoly.general.registry import Registry


class Tests(unittest.TestCase):

    def test_register_and_find(self):
        class MyRegistry(Registry):
            pass
        MyRegistry.register(42, ['the_answer', 'my answer'])
        self.assertEqual(MyRegistry.find('the_answer'), 42)
        self.assertIsNone(MyRegistry.find('no answer'))
        self.assertEqual(MyRegistry.registered_keys(), ['my answer', 'the_answer'])

    def test_empty(self):
        class EmptyRegistry(Registry):
            pass
        self.assertIsNone(EmptyRegistry.find('anything'))
        self.assertEqual(EmptyRegistry.registered_keys(), [])

    def test_separate_registries(self):
        class FirstRegistry(Registry):
            pass

        class SecondRegistry(Registry):
            pass
        FirstRegistry.register('first', ['key'])
        SecondRegistry.register('second', ['key'])
        self.assertEqual(FirstRegistry.find('key'), 'first')
        self.assertEqual(SecondRegistry.find('key'), 'second')
