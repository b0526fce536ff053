"""Global verification switch.

When verification is on, operations re-derive their results along a second
route (primed form of Δ, the five commutator aliases, the generic ↔ search
behind the P_nk fast path, ...) and raise ``InternalInconsistency`` on any
disagreement. Off by default; the test suite turns it on.
"""

import os
from contextlib import contextmanager

VERIFY = os.environ.get("ORTHOPOSETS_VERIFY", "") not in ("", "0")


def set_verification(enabled: bool) -> None:
    global VERIFY
    VERIFY = bool(enabled)


@contextmanager
def verification(enabled: bool = True):
    global VERIFY
    saved = VERIFY
    VERIFY = bool(enabled)
    try:
        yield
    finally:
        VERIFY = saved
