"""Structured-text document reader."""

import json
import pathlib
import typing as t

from encrypted_config import normalize_path

from .exc import DocumentError

JSON = t.Union[dict, list, str, int, float, bool, None]


class DocumentReader:

    """Read whole JSON documents from files or from inline text."""

    def __init__(self, extensions: t.Iterable[str] = ('.json',)):
        """Initialize new instance of DocumentReader.

        :param extensions: if provided, any files with extensions different than given ones will
            cause errors when using read_file()
        """
        if __debug__:
            for extension in extensions:
                assert isinstance(extension, str), (type(extension), extension, extensions)
                assert len(extension) > 1 and extension[0] == '.', extension
        self._extensions = {extension for extension in extensions}

    @property
    def extensions(self) -> t.Set[str]:
        return self._extensions

    def read_file(self, path: pathlib.Path) -> JSON:
        """Read and decode a single document file."""
        assert isinstance(path, (pathlib.Path, str)), type(path)
        path = normalize_path(pathlib.Path(path))
        if self._extensions and path.suffix not in self._extensions:
            raise DocumentError('incompatible path {} given to {}'.format(path, self))
        try:
            with path.open() as document_file:
                contents = document_file.read()
        except OSError as err:
            raise DocumentError('cannot read document {}: {}'.format(path, err)) from err
        return self.read_text(contents, source=str(path))

    @staticmethod
    def read_text(text: str, source: str = '<text>') -> JSON:
        assert isinstance(text, str), type(text)
        try:
            return json.loads(text)
        except json.JSONDecodeError as err:
            raise DocumentError('malformed JSON in {}: {}'.format(source, err)) from err

    def read_argument(self, value: str) -> JSON:
        """Decode a command-line value which is either a path to a document or inline JSON."""
        assert isinstance(value, str), type(value)
        stripped = value.strip()
        if stripped[:1] in ('[', '{') or stripped.lstrip('-').isdigit():
            return self.read_text(stripped)
        return self.read_file(pathlib.Path(stripped))

    def __str__(self):
        return '{}(extensions={})'.format(type(self).__qualname__, sorted(self._extensions))
