"""Ring exchange files and structured-text report serialization.

The exchange format is canonical JSON (sorted keys, two-space indent,
trailing newline), so identical objects always serialize to identical
bytes and a save/load/save round trip is bit-exact.

A ring document has fields `p`, `dim`, `table`, where table[i][j] is the
length-d coefficient row of the basis product e_i * e_j.  Ideals are
stored as echelon row lists alongside the side tag; cover results carry
the eta value (or "infinity"), the ideal list, the certificate kind, the
node count, and the elapsed time.
"""

import json

from .cover import INFINITY
from .errors import AssociativityError, ExchangeFormatError
from .ring import make_ring


def dumps(obj):
    """Canonical JSON text for any report object."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def ring_to_obj(R):
    return {
        "p": R.p,
        "dim": R.d,
        "table": [[list(R.sc[i][j]) for j in range(R.d)] for i in range(R.d)],
    }


def ring_from_obj(obj):
    try:
        p = obj["p"]
        d = obj["dim"]
        table = obj["table"]
    except (KeyError, TypeError) as exc:
        raise ExchangeFormatError(f"missing ring field: {exc}") from None
    if not isinstance(p, int) or not isinstance(d, int):
        raise ExchangeFormatError("fields p and dim must be integers")
    try:
        return make_ring(p, d, table)
    except (ValueError, AssociativityError) as exc:
        raise ExchangeFormatError(str(exc)) from None


def save_ring(R, path):
    with open(path, "w") as fh:
        fh.write(dumps(ring_to_obj(R)))


def load_ring(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ExchangeFormatError(f"cannot read ring file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ExchangeFormatError(f"ring file is not valid JSON: {exc}") from None
    return ring_from_obj(obj)


def ideal_to_obj(I):
    return {"side": I.side, "rows": [list(row) for row in I.basis]}


def eta_to_obj(eta):
    return "infinity" if eta is INFINITY else eta


def cover_to_obj(result, timings=False):
    return {
        "eta": eta_to_obj(result.eta),
        "cover": [ideal_to_obj(I) for I in result.cover],
        "certificate": result.certificate,
        "node_count": result.node_count,
        "elapsed_ms": round(result.elapsed * 1000.0, 3) if timings else 0,
    }
