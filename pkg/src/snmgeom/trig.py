"""Least-squares trigonometric polynomial fits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

__all__ = ["FourierCoefficients", "trig_design", "fit_trig_polynomial", "equispaced_angles"]


@dataclass(frozen=True)
class FourierCoefficients:
    """``f(t) = sum_n A[n] cos(n t) + B[n] sin(n t)``; ``B[0]`` is always zero."""

    A: np.ndarray
    B: np.ndarray

    @property
    def order(self) -> int:
        return len(self.A) - 1

    def _get(self, arr, n):
        return float(arr[n]) if n < len(arr) else 0.0

    A0 = property(lambda self: self._get(self.A, 0))
    A1 = property(lambda self: self._get(self.A, 1))
    B1 = property(lambda self: self._get(self.B, 1))
    A2 = property(lambda self: self._get(self.A, 2))
    B2 = property(lambda self: self._get(self.B, 2))
    A3 = property(lambda self: self._get(self.A, 3))
    B3 = property(lambda self: self._get(self.B, 3))

    def __call__(self, t: ArrayLike) -> np.ndarray:
        t = np.asarray(t, float)
        return trig_design(t, self.order) @ self.as_vector()

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.A, self.B[1:]])

    def padded(self, order: int) -> "FourierCoefficients":
        A = np.zeros(order + 1)
        B = np.zeros(order + 1)
        A[: len(self.A)] = self.A
        B[: len(self.B)] = self.B
        return FourierCoefficients(A, B)

    def max_abs_diff(self, other: "FourierCoefficients") -> float:
        n = max(self.order, other.order)
        a, b = self.padded(n), other.padded(n)
        return float(max(np.max(np.abs(a.A - b.A)), np.max(np.abs(a.B - b.B))))


def equispaced_angles(n: int) -> np.ndarray:
    return 2 * np.pi * np.arange(n) / n


def trig_design(t: np.ndarray, order: int) -> np.ndarray:
    """Columns ``1, cos t, ..., cos(order t), sin t, ..., sin(order t)``."""
    t = np.ravel(t)
    n = np.arange(order + 1)
    cols = [np.cos(np.outer(t, n)), np.sin(np.outer(t, n[1:]))]
    return np.hstack(cols)


def fit_trig_polynomial(t: ArrayLike, values: ArrayLike, order: int) -> FourierCoefficients:
    t = np.ravel(np.asarray(t, float))
    values = np.ravel(np.asarray(values, float))
    if len(t) < 2 * order + 1:
        raise ValueError("not enough samples for the requested order")
    coef, *_ = np.linalg.lstsq(trig_design(t, order), values, rcond=None)
    A = coef[: order + 1]
    B = np.concatenate([[0.0], coef[order + 1:]])
    return FourierCoefficients(A, B)
