"""Registry of objects which can be queried by name."""

import typing as t


class Registry:

    """General-purpose registry of objects.

    Each direct subclass keeps its own mapping, created on first registration.
    """

    registered = None

    @classmethod
    def register(cls, member, keys: t.Iterable[str]) -> None:
        if cls.registered is None:
            cls.registered = {}
        for key in keys:
            cls.registered[key] = member

    @classmethod
    def find(cls, key) -> t.Any:
        if cls.registered is None:
            return None
        return cls.registered.get(key, None)

    @classmethod
    def registered_keys(cls) -> t.List[str]:
        if cls.registered is None:
            return []
        return sorted(cls.registered)
