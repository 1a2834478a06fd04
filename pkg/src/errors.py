"""
Exception hierarchy for hyperbox.

InputError and its subclasses are user-fixable problems (bad documents,
bad anchors, incompatible morphisms) and map to CLI exit code 2.
InternalError means a construction produced an invalid object, which is
a library bug.
"""

from typing import Any, Optional


class HyperboxError(Exception):
    """Base class for every error raised by hyperbox."""


class InputError(HyperboxError):
    """Invalid input supplied by the caller."""


class ValidationError(InputError):
    """An object or morphism violates one of its structural constraints."""

    def __init__(self, constraint: str, element: Any = None, message: Optional[str] = None):
        self.constraint = constraint
        self.element = element
        if message is None:
            message = constraint if element is None else f"{constraint}: {element}"
        super().__init__(message)


class DocumentError(InputError):
    """A JSON document is malformed or uses an unknown category/field."""


class AnchorError(InputError):
    """An anchor names an element missing from the domain or codomain."""


class MorphismMismatchError(InputError):
    """Morphisms or objects do not fit together (domain/codomain/variant)."""


class ParityError(InputError):
    """Walk endpoints do not match the parity of the requested length."""


class SizeGuardError(InputError):
    """An enumeration would exceed the configured size guard."""


class HomCountOverflowError(HyperboxError):
    """A count or matrix entry left the signed 64-bit range."""


class InternalError(HyperboxError):
    """A constructed object or structure map failed its own validation."""
