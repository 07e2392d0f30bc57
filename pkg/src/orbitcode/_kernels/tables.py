"""Arithmetic tables handed to the matrix kernels.

A field of order q is presented to the kernels as dense lookup tables
over the integer codes 0..q-1.  Both kernel backends consume the same
object: the compiled backend reads the numpy arrays through typed
memoryviews, the pure backend indexes the plain nested lists.
"""

from __future__ import annotations

import numpy as np


class FieldTables:
    """Immutable add/mul/neg/inv lookup tables for one field.

    ``inv[0]`` is a sentinel 0; kernels only invert nonzero pivots.
    """

    __slots__ = ("q", "add", "mul", "neg", "inv", "add_list", "mul_list", "neg_list", "inv_list")

    def __init__(self, q, add_rows, mul_rows, neg_row, inv_row):
        self.q = q
        self.add_list = add_rows
        self.mul_list = mul_rows
        self.neg_list = neg_row
        self.inv_list = inv_row
        self.add = np.asarray(add_rows, dtype=np.int64)
        self.mul = np.asarray(mul_rows, dtype=np.int64)
        self.neg = np.asarray(neg_row, dtype=np.int64)
        self.inv = np.asarray(inv_row, dtype=np.int64)
        for arr in (self.add, self.mul, self.neg, self.inv):
            arr.flags.writeable = False
