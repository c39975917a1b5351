"""Exact normal forms of jet Lie algebra actions and checks of positive energy."""

__version__ = '0.1.0'
