"""Structured-text document writers."""

import json
import pathlib
import typing as t

from encrypted_config import normalize_path


class DocumentWriter:

    """Output JSON documents, byte-for-byte deterministic for equal inputs."""

    def __init__(self, extension: t.Optional[str] = '.json', indent: t.Optional[int] = 2):
        assert extension is None or isinstance(extension, str), type(extension)
        assert extension is None or len(extension) > 1 and extension[0] == '.', extension
        self._extension = extension
        self._indent = indent

    @property
    def extension(self) -> t.Optional[str]:
        return self._extension

    def write_text(self, document) -> str:
        return json.dumps(document, indent=self._indent, ensure_ascii=False) + '\n'

    def write_file(self, document, path: pathlib.Path) -> None:
        """Write a single document file."""
        assert isinstance(path, (pathlib.Path, str)), type(path)
        path = normalize_path(pathlib.Path(path))
        if self._extension is not None and path.suffix != self._extension:
            raise ValueError('incompatible path {} given to {}'.format(path, self))
        with path.open('w') as target_file:
            target_file.write(self.write_text(document))

    def __str__(self):
        return '{}(extension={})'.format(type(self).__qualname__, self._extension)
