"""Kernel backend selection: compiled extension when available, pure Python otherwise.

Set ORDKIT_PURE=1 to force the Python lane (used by the benchmark and the
parity tests).  The compiled lane only accepts instances that fit its fixed
word size; anything larger silently routes to the Python lane, which works
on arbitrary-width integers.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _kernels_py as _py

_c = None
if os.environ.get("ORDKIT_PURE") != "1":
    try:
        from . import _kernels as _c  # type: ignore[no-redef]
    except ImportError:
        _c = None

BACKEND = "compiled" if _c is not None else "python"

_MASK_BITS = 60
_MEMO_LIMIT = 1 << 22


def _compiled_ok(member_masks: Sequence[int], support_mask: int) -> bool:
    if _c is None or support_mask.bit_length() > _MASK_BITS:
        return False
    total = 0
    for m in set(member_masks):
        total += 1 << bin(m).count("1")
        if total > _MEMO_LIMIT:
            return False
    return True


def production_rank(member_masks: Sequence[int], support_mask: int) -> int:
    masks = tuple(member_masks)
    if _compiled_ok(masks, support_mask):
        return _c.production_rank(masks, support_mask)
    return _py.production_rank(masks, support_mask)


def production_state_rank(
    member_masks: Sequence[int], support_mask: int, seen: int, hyp: int
) -> int:
    masks = tuple(member_masks)
    if _compiled_ok(masks, support_mask):
        return _c.production_state_rank(masks, support_mask, seen, hyp)
    return _py.production_state_rank(masks, support_mask, seen, hyp)


def bad_sequence_rank(up_masks: Sequence[int]) -> int:
    masks = tuple(up_masks)
    if _c is not None and len(masks) <= 20:
        return _c.bad_sequence_rank(masks)
    return _py.bad_sequence_rank(masks)


def ramsey_search(l1: int, l2: int, n: int) -> Optional[list[int]]:
    if _c is not None and n <= 10:
        return _c.ramsey_search(l1, l2, n)
    return _py.ramsey_search(l1, l2, n)
