"""JSON serialization with a fixed field order, so reports diff cleanly."""
from __future__ import annotations

import json

from ..dim2 import GradedDims, OrderingCertificate
from ..monomial import Monomial, MonomialIdeal, format_exps
from ..resolution import BettiTable, RegularityReport
from ..verdict import Verdict
from ..verify import CampaignReport

VERDICT_FIELDS = ("criterion", "applicable", "conclusion", "witnesses", "bounds", "inputs",
                  "direct", "consistent", "details")


def plain(x):
    """Recursively turn library objects into JSON-ready values."""
    if isinstance(x, (MonomialIdeal, Monomial)):
        return str(x)
    if isinstance(x, Verdict):
        return verdict_dict(x)
    if isinstance(x, BettiTable):
        return betti_dict(x)
    if isinstance(x, RegularityReport):
        return {"reg": x.reg, "pd": x.pd, "witness": {"i": x.witness[0],
                                                      "multidegree": list(x.witness[1])}}
    if isinstance(x, OrderingCertificate):
        return certificate_dict(x)
    if isinstance(x, CampaignReport):
        return plain(x.to_dict())
    if isinstance(x, GradedDims):
        return {"d_max": x.d_max, "dims": list(x.dims)}
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [plain(v) for v in x]
        return sorted(items, key=str) if isinstance(x, (set, frozenset)) else items
    return x


def verdict_dict(v):
    d = {}
    for k in VERDICT_FIELDS:
        val = getattr(v, k)
        if k == "witnesses":
            val = [{"label": lab, "value": plain(w)} for lab, w in val]
        d[k] = plain(val)
    return d


def betti_dict(t):
    ring = t.ring
    return {
        "ring": list(ring.names),
        "reg": t.reg, "pd": t.pd,
        "entries": [{"i": i, "multidegree": list(a), "monomial": format_exps(ring, a), "rank": r}
                    for (i, a), r in t.sorted_entries()],
        "graded": [{"i": i, "degree": d, "rank": r} for (i, d), r in sorted(t.graded().items())],
    }


def certificate_dict(c):
    return {
        "ideal": str(c.ideal), "success": c.success, "order": [str(f) for f in c.order],
        "degrees": c.degrees, "colon_vars": list(c.colon_vars), "prefix_cwl": list(c.prefix_cwl),
        "failure_step": c.failure_step, "obstruction": c.obstruction, "consistent": c.consistent,
    }


def report(obj, indent=2):
    return json.dumps(plain(obj), indent=indent)


def campaign_from_json(text):
    return CampaignReport.from_dict(json.loads(text))
