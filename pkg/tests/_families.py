"""Canonical seminorm families at legal parameters, shared by the seminorm suites."""

from qstein.seminorm import (
    PDK,
    RN,
    MaxSeminorm,
    NormC_Azb,
    NormC_Charges,
    NormC_OC,
    NormC_OCx,
    NormN_OZ,
    NormN_RstarCx,
    Weighted_r,
)


def canonical_families():
    """(label, seminorm) pairs; every entry must be submultiplicative."""
    out = [
        ("NormC_OC(0)", NormC_OC(0)),
        ("NormC_OC(3/2)", NormC_OC("3/2")),
        ("NormC_OCx(2)", NormC_OCx(2)),
        ("NormN_OZ(2)", NormN_OZ(2)),
        ("NormN_RstarCx(3)", NormN_RstarCx(3)),
        ("NormC_Charges(5/2)", NormC_Charges("5/2")),
        ("Weighted_r charges", Weighted_r({n: 2 ** abs(n) for n in range(-6, 7)}, "charges")),
        ("Weighted_r currents_Cx", Weighted_r({n: 1 for n in range(-3, 4)}, "currents_Cx")),
        ("Weighted_r currents_C", Weighted_r({0: 1, 1: 3, 2: "9/2", 3: "9/2"}, "currents_C")),
        ("PDK(4,2,1/2)", PDK(4, 2, "1/2")),
        ("PDK(2,1,1/2)", PDK(2, 1, "1/2")),
        ("PDK(8,3,2)", PDK(8, 3, 2)),
        ("PDK(4,2,3/10+2/5*i)", PDK(4, 2, "3/10+2/5*i")),
        ("RN(3)", RN(3, "1/2")),
        ("NormC_Azb(2,i)", NormC_Azb(2, "i")),
        ("NormC_Azb(3/2,-1)", NormC_Azb("3/2", -1)),
        ("max PDK", MaxSeminorm([(1, PDK(4, 2, "1/2")), (2, PDK(2, 1, "1/2"))])),
    ]
    return out
