"""Nilpotent-orbit data of Iwahori-Matsumoto / Aubert-Zelevinsky duals for
tempered unipotent representations of classical groups."""

__version__ = "0.1.0"
