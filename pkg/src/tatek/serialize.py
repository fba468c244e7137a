"""JSON interchange: exact numbers only, deterministic layout.

Rationals travel as strings ("p" or "p/q"), cyclotomics as term lists
over their order, series as exponent/coefficient records plus the
truncation order. Groups are permutation generators (1-based image
lists); wreath groups nest a base-group record with a copy count, and
wreath elements are {"base": [...], "perm": [...]}. Every emitter sorts
its keys and terms so identical values produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .devoto import DevotoElement
from .groups import FiniteGroup, permutation_group
from .series import BivariateSeries, PuiseuxSeries
from .wreath import WreathElement, WreathGroup, wreath


class FormatError(ValueError):
    """Malformed interchange data."""


def fraction_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fraction_from_str(s) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}") from exc


def cyclotomic_to_json(c: Cyclotomic) -> dict:
    return {"order": c.order,
            "terms": [[e, fraction_to_str(v)] for e, v in sorted(c.terms.items())]}


def cyclotomic_from_json(data) -> Cyclotomic:
    try:
        return Cyclotomic(int(data["order"]),
                          {int(e): fraction_from_str(v) for e, v in data["terms"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad cyclotomic record: {exc}") from exc


def series_to_json(s: PuiseuxSeries) -> dict:
    terms = [{"num": e.numerator, "den": e.denominator, "coeff": cyclotomic_to_json(c)}
             for e, c in sorted(s.terms.items())]
    return {"terms": terms,
            "truncation": None if s.truncation is None else fraction_to_str(s.truncation)}


def series_from_json(data) -> PuiseuxSeries:
    try:
        terms = {Fraction(t["num"], t["den"]): cyclotomic_from_json(t["coeff"])
                 for t in data["terms"]}
        trunc = data.get("truncation")
        return PuiseuxSeries(terms, None if trunc is None else fraction_from_str(trunc))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad series record: {exc}") from exc


def bivariate_to_json(b: BivariateSeries) -> dict:
    return {"t_truncation": b.t_truncation,
            "coefficients": [{"t": n, "series": series_to_json(s)}
                             for n, s in sorted(b.terms.items())]}


def bivariate_from_json(data) -> BivariateSeries:
    try:
        return BivariateSeries({int(c["t"]): series_from_json(c["series"])
                                for c in data["coefficients"]},
                               int(data["t_truncation"]))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad bivariate record: {exc}") from exc


# -- groups and elements -------------------------------------------------


def group_to_json(G: FiniteGroup) -> dict:
    if isinstance(G, WreathGroup):
        return {"wreath": {"base_group": group_to_json(G.base_group), "copies": G.copies}}
    gens = getattr(G, "generators", None)
    if gens is None:
        raise FormatError(f"group {G.name} has no generator presentation to serialize")
    out = {"degree": G.degree, "generators": [[i + 1 for i in g] for g in gens]}
    if G.name:
        out["name"] = G.name
    return out


def group_from_json(data, size_cap: int = 20000) -> FiniteGroup:
    try:
        if "wreath" in data:
            inner = group_from_json(data["wreath"]["base_group"], size_cap)
            return wreath(inner, int(data["wreath"]["copies"]), size_cap)
        degree = int(data["degree"])
        gens = [tuple(i - 1 for i in g) for g in data["generators"]]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise FormatError(f"not a permutation of 1..{degree}: {g}")
        return permutation_group(degree, gens, name=data.get("name"), size_cap=size_cap)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad group record: {exc}") from exc


def element_to_json(g):
    if isinstance(g, WreathElement):
        return {"base": [element_to_json(x) for x in g.base],
                "perm": [i + 1 for i in g.perm]}
    if isinstance(g, tuple):
        return [i + 1 for i in g]
    raise FormatError(f"cannot serialize element {g!r}")


def element_from_json(data, group: FiniteGroup):
    try:
        if isinstance(data, dict):
            if not isinstance(group, WreathGroup):
                raise FormatError("wreath element given for a plain group")
            base = tuple(element_from_json(x, group.base_group) for x in data["base"])
            perm = tuple(i - 1 for i in data["perm"])
            el = WreathElement(base, perm)
        else:
            el = tuple(i - 1 for i in data)
        if el not in group:
            raise FormatError(f"element {data!r} is not in the group")
        return el
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad element record: {exc}") from exc


# -- composite values -----------------------------------------------------


def devoto_to_json(x: DevotoElement) -> dict:
    entries = []
    for (g, h), s in x.table.items():
        entries.append({"g": element_to_json(g), "h": element_to_json(h),
                        "series": series_to_json(s)})
    entries.sort(key=lambda e: json.dumps(e, sort_keys=True))
    return {"group": group_to_json(x.group), "level": x.level, "entries": entries}


def devoto_from_json(data, group: FiniteGroup | None = None,
                     size_cap: int = 20000) -> DevotoElement:
    try:
        G = group if group is not None else group_from_json(data["group"], size_cap)
        seen = set()
        table = {}
        for entry in data["entries"]:
            g = element_from_json(entry["g"], G)
            h = element_from_json(entry["h"], G)
            if (g, h) in seen:
                raise FormatError(f"duplicate entry for ({entry['g']}, {entry['h']})")
            seen.add((g, h))
            if G.mul(g, h) != G.mul(h, g):
                raise FormatError(f"non-commuting entry ({entry['g']}, {entry['h']})")
            table[(g, h)] = series_from_json(entry["series"])
        return DevotoElement(G, table, int(data.get("level", 1)))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad element table: {exc}") from exc


def repchar_to_json(chi) -> dict:
    return {"group": group_to_json(chi.group),
            "values": [{"class_rep": element_to_json(g), "value": cyclotomic_to_json(v)}
                       for g, v in sorted(chi.values.items())]}


def repchar_from_json(data, group: FiniteGroup | None = None, size_cap: int = 20000):
    from .characters import RepCharacter

    try:
        G = group if group is not None else group_from_json(data["group"], size_cap)
        values = {element_from_json(v["class_rep"], G): cyclotomic_from_json(v["value"])
                  for v in data["values"]}
        return RepCharacter(G, values)
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad character record: {exc}") from exc


def coeffs_to_json(c: dict[int, int]) -> dict:
    return {"coeffs": [{"i": i, "c": v} for i, v in sorted(c.items())]}


def coeffs_from_json(data) -> dict[int, int]:
    try:
        out = {}
        for item in data["coeffs"]:
            i, v = int(item["i"]), int(item["c"])
            if i in out:
                raise FormatError(f"duplicate coefficient index {i}")
            out[i] = v
        return out
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad coefficient map: {exc}") from exc


def dumps(value) -> str:
    """Deterministic JSON encoding (sorted keys, no floats anywhere)."""
    return json.dumps(value, sort_keys=True, separators=(", ", ": "), indent=1)
