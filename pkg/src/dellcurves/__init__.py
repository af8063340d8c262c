"""Modular curves of D-elliptic sheaves over F_q(T): invariants, local points, quaternions."""

__version__ = "0.1.0"
