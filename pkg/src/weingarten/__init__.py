"""Exact and numeric tools for special Weingarten surfaces foliated by circles."""

__version__ = "0.1.0"
