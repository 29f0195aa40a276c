"""Unit tests for DocumentWriter class."""

import pathlib
import tempfile
import unittest

from quiverpoly.general.document_reader import DocumentReader
from quiverpoly.general.document_writer import DocumentWriter


class Tests(unittest.TestCase):

    def test_construct(self):
        writer = DocumentWriter()
        self.assertEqual(writer.extension, '.json')
        self.assertIn('.json', str(writer))
        self.assertIsNone(DocumentWriter(None).extension)

    def test_write_text(self):
        writer = DocumentWriter()
        document = {'vertices': 2, 'arrows': [[1, 2]]}
        text = writer.write_text(document)
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(text, writer.write_text(dict(document)))
        self.assertEqual(DocumentReader.read_text(text), document)
        self.assertEqual(DocumentWriter(indent=None).write_text([1, 2]), '[1, 2]\n')

    def test_write_file(self):
        writer = DocumentWriter()
        with tempfile.TemporaryDirectory() as directory:
            path = pathlib.Path(directory, 'example.json')
            writer.write_file({'degree': 3}, path)
            self.assertEqual(DocumentReader().read_file(path), {'degree': 3})
            with self.assertRaises(ValueError):
                writer.write_file({'degree': 3}, pathlib.Path(directory, 'example.txt'))
