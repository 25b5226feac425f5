"""Kernel backend selection.

The compiled extension is preferred when importable; set ``GRAPHDEGEN_PURE=1``
to force the pure-Python lane (used by the test suite and the benchmark to
exercise both).
"""

import os

from . import pure

if os.environ.get("GRAPHDEGEN_PURE") == "1":
    impl = pure
else:
    try:
        from . import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

BACKEND = impl.BACKEND

StateBudgetExceeded = impl.StateBudgetExceeded
strict_peel = impl.strict_peel
peel_order = impl.peel_order
weak_game = impl.weak_game
diff_counts = impl.diff_counts
independent_transversal = impl.independent_transversal
choosable_check = impl.choosable_check
dp_universal = impl.dp_universal
sfdt_search = impl.sfdt_search
sfdt_product_sweep = impl.sfdt_product_sweep


def backends():
    """All importable kernel backends, pure last."""
    out = []
    try:
        from . import _core
        out.append(_core)
    except ImportError:
        pass
    out.append(pure)
    return out
