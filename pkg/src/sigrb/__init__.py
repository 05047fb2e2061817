"""Signature-based and Buchberger Groebner basis engines with zero-reduction accounting."""

__version__ = "0.1.0"
