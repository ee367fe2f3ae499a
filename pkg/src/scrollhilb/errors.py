"""Shared error type for hypothesis violations.

Every validation in this package rejects the *first* inequality that fails,
in a fixed documented order, and names it with a stable kebab-case code so
that callers (and the CLI) can rely on deterministic diagnostics.
"""

from __future__ import annotations


class InvalidParameters(ValueError):
    """Input violates a documented hypothesis.

    ``code`` is a stable kebab-case identifier of the violated inequality
    (e.g. ``"speciality-out-of-range"``); ``str(exc)`` is a one-line
    diagnostic of the form ``"<code>: <detail>"``.
    """

    def __init__(self, code: str, detail: str):
        super().__init__(f"{code}: {detail}")
        self.code = code
        self.detail = detail
