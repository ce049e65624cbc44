"""Proper h-conflict-free and odd graph coloring."""
