"""Exact toolkit for a family of Prym surfaces."""
