"""Identity records and verification reports."""

from .models import IdentityRecord, Report, Scope, record

__all__ = ["IdentityRecord", "Report", "Scope", "record"]
