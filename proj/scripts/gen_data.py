#!/usr/bin/env python3
# Regenerates data/catalog.json and data/paper_tables.json from the compact
# table encodings below. Run from the repository root.
import json, os

DEF_SAMPLES = ["0", "1", "-1", "2", "3"]

def P(i, j, *outs):
    return {"i": i, "j": j, "out": [{"k": k, "coeff": c} for k, c in outs]}

def entry(name, dim, products, prov, jordan, params=None, ext=None, iso=None):
    e = {"name": name, "dim": dim, "products": products, "provenance": prov,
         "expected": {"jordan": jordan}}
    if params:
        e["params"] = params
    if ext:
        e["extension_of"] = ext
    if iso:
        e["iso_exceptions"] = iso
    return e

def param(name, excluded=(), samples=None):
    p = {"name": name, "samples": samples or DEF_SAMPLES}
    if excluded:
        p["excluded"] = list(excluded)
    return p

def ext(base, cocycle, base_params=None, perm=None):
    x = {"base": base, "cocycle": cocycle}
    if base_params:
        x["base_params"] = base_params
    if perm:
        x["perm"] = perm
    return x

E = []

# ---- 3-dimensional --------------------------------------------------------
E.append(entry("C3s_01", 3, [P(1,1,(2,"1"))], "3dim base table", True))
E.append(entry("C3s_02", 3, [P(1,1,(2,"1")), P(1,2,(3,"1"))], "3dim base table", True))
E.append(entry("C3s_03", 3, [P(1,2,(3,"1"))], "3dim base table", True))
E.append(entry("C3_01", 3, [P(1,1,(2,"1")), P(2,2,(3,"1"))], "3dim base table", False))

# ---- 4-dimensional, Jordan (starred) ---------------------------------------
E.append(entry("C4s_01", 4, [P(1,1,(2,"1"))], "4dim base table", True))
E.append(entry("C4s_02", 4, [P(1,1,(2,"1")), P(1,2,(3,"1"))], "4dim base table", True))
E.append(entry("C4s_03", 4, [P(1,2,(3,"1"))], "4dim base table", True))
E.append(entry("C4s_04", 4, [P(1,1,(3,"1")), P(2,2,(4,"1"))], "4dim base table", True))
E.append(entry("C4s_05", 4, [P(1,1,(3,"1")), P(1,2,(4,"1"))], "4dim base table", True))
E.append(entry("C4s_06", 4, [P(1,1,(4,"1")), P(2,3,(4,"1"))], "4dim base table", True))
E.append(entry("C4s_07", 4, [P(1,1,(2,"1")), P(2,3,(4,"1"))],
               "1dim extensions of C3s_01", True,
               ext=ext("C3s_01", [[[2,3,"1"]]])))
E.append(entry("C4s_08", 4, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(3,3,(4,"1"))],
               "1dim extensions of C3s_01", True,
               ext=ext("C3s_01", [[[1,2,"1"],[3,3,"1"]]])))
E.append(entry("C4s_09", 4, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,2,(4,"1"))],
               "1dim extensions of C3s_02", True,
               ext=ext("C3s_02", [[[1,3,"1"],[2,2,"1"]]])))
E.append(entry("C4s_10", 4, [P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,2,(4,"1"))],
               "1dim extensions of C3s_03", True,
               ext=ext("C3s_03", [[[1,3,"1"],[2,2,"1"]]])))
E.append(entry("C4s_11", 4, [P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,3,(4,"1"))],
               "1dim extensions of C3s_03", True,
               ext=ext("C3s_03", [[[1,3,"1"],[2,3,"1"]]])))
E.append(entry("C4s_12", 4, [P(1,2,(3,"1")), P(1,3,(4,"1"))],
               "1dim extensions of C3s_03", True,
               ext=ext("C3s_03", [[[1,3,"1"]]])))

# ---- 4-dimensional, non-Jordan ---------------------------------------------
E.append(entry("C4_01", 4, [P(1,1,(2,"1")), P(2,2,(3,"1"))],
               "4dim base table", False,
               ext=ext("C3s_01", [[[2,2,"1"]]], perm=[1,2,4,3])))
E.append(entry("C4_02", 4, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"a")), P(2,2,(4,"a+1"))],
               "1dim extensions of C3s_02; the base table lists the a=0 member in a permuted basis",
               False, params=[param("a")],
               ext=ext("C3s_02", [[[1,3,"a"],[2,2,"a+1"]]])))
E.append(entry("C4_03", 4, [P(1,1,(2,"1")), P(1,3,(4,"1")), P(2,2,(4,"1"))],
               "1dim extensions of C3s_01", False,
               ext=ext("C3s_01", [[[1,3,"1"],[2,2,"1"]]])))
E.append(entry("C4_04", 4, [P(1,1,(2,"1")), P(2,2,(4,"1")), P(3,3,(4,"1"))],
               "1dim extensions of C3s_01", False,
               ext=ext("C3s_01", [[[2,2,"1"],[3,3,"1"]]])))
E.append(entry("C4_05", 4, [P(1,2,(3,"1")), P(3,3,(4,"1"))],
               "1dim extensions of C3s_03", False,
               ext=ext("C3s_03", [[[3,3,"1"]]])))
E.append(entry("C4_06", 4, [P(1,1,(4,"1")), P(1,2,(3,"1")), P(2,2,(4,"1")), P(3,3,(4,"1"))],
               "1dim extensions of C3s_03", False,
               ext=ext("C3s_03", [[[1,1,"1"],[2,2,"1"],[3,3,"1"]]])))
E.append(entry("C4_07", 4, [P(1,1,(4,"1")), P(1,2,(3,"1")), P(3,3,(4,"1"))],
               "1dim extensions of C3s_03", False,
               ext=ext("C3s_03", [[[1,1,"1"],[3,3,"1"]]])))

# ---- 5-dimensional (classification list) ------------------------------------------
T = "classification list"
E.append(entry("C5_01", 5, [P(1,1,(2,"1")), P(2,2,(3,"1"))], T, False))
E.append(entry("C5_02", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"a")), P(2,2,(4,"a+1"))],
               T, False, params=[param("a")]))
E.append(entry("C5_03", 5, [P(1,1,(2,"1")), P(1,3,(4,"1")), P(2,2,(4,"1"))], T, False))
E.append(entry("C5_04", 5, [P(1,1,(2,"1")), P(2,2,(4,"1")), P(3,3,(4,"1"))], T, False))
E.append(entry("C5_05", 5, [P(1,2,(3,"1")), P(3,3,(4,"1"))], T, False))
E.append(entry("C5_06", 5, [P(1,1,(4,"1")), P(1,2,(3,"1")), P(2,2,(4,"1")), P(3,3,(4,"1"))], T, False))
E.append(entry("C5_07", 5, [P(1,1,(4,"1")), P(1,2,(3,"1")), P(3,3,(4,"1"))], T, False))

# 2-dim extensions of C3s_01 (e4 <- first component, e5 <- second)
def ext01(c4, c5):
    return ext("C3s_01", [c4, c5])

E.append(entry("C5_08", 5, [P(1,1,(2,"1")), P(1,3,(4,"1")), P(2,2,(5,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[1,3,"1"]], [[2,2,"1"]])))
E.append(entry("C5_09", 5, [P(1,1,(2,"1")), P(1,3,(4,"1")), P(2,2,(5,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[1,3,"1"]], [[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_10", 5, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(2,2,(5,"1"))],
               "2dim extensions of C3s_01; decomposable (e3 is an annihilator component)",
               False,
               ext=ext01([[1,2,"1"]], [[2,2,"1"]]),
               iso=["C5_10 ~ C5_02(0) via the coordinate permutation (3 4 5); the recorded "
                    "cocycle pair fails the T_2 condition, so this member of the list is a "
                    "split extension"]))
E.append(entry("C5_11", 5, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(1,3,(5,"1")), P(2,2,(5,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[1,2,"1"]], [[1,3,"1"],[2,2,"1"]])))
E.append(entry("C5_12", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(5,"a+1")), P(2,2,(5,"a")),
                            P(2,4,(5,"1"))],
               T + "; also reached as a 2dim extension of C3s_01 in another basis at a=-1",
               False, params=[param("a")],
               ext=ext("C4s_02", [[[1,3,"a+1"],[2,2,"a"],[2,4,"1"]]])))
E.append(entry("C5_13", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(5,"a+1")), P(2,2,(5,"a")),
                            P(2,4,(5,"b")), P(4,4,(5,"1"))],
               T + "; also reached as a 2dim extension of C3s_01 in another basis at a=-1",
               False, params=[param("a"), param("b")],
               ext=ext("C4s_02", [[[1,3,"a+1"],[2,2,"a"],[2,4,"b"],[4,4,"1"]]]),
               iso=["C5_13(a,b) ~ C5_13(a,-b) via e4 -> -e4, exact over Q(a,b)"]))
E.append(entry("C5_14", 5, [P(1,1,(2,"1")), P(2,2,(5,"1")), P(3,3,(4,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[3,3,"1"]], [[2,2,"1"]])))
E.append(entry("C5_15", 5, [P(1,1,(2,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")), P(3,3,(4,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[3,3,"1"]], [[1,3,"1"],[2,2,"1"]])))
E.append(entry("C5_16", 5, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(1,4,(5,"a+1")), P(2,2,(5,"a")),
                            P(3,3,(4,"1"))],
               T + "; the a=-1 member appears among the 2dim extensions of C3s_01",
               False, params=[param("a", excluded=["-1"], samples=["0","1","2","3","-2"])],
               ext=ext("C4s_08", [[[1,4,"a+1"],[2,2,"a"]]])))
E.append(entry("C5_17", 5, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")),
                            P(3,3,(4,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[1,2,"1"],[3,3,"1"]], [[1,3,"1"],[2,2,"1"]])))
E.append(entry("C5_18", 5, [P(1,1,(2,"1")), P(2,2,(5,"1")), P(2,3,(4,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[2,3,"1"]], [[2,2,"1"]])))
E.append(entry("C5_19", 5, [P(1,1,(2,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[2,3,"1"]], [[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_20", 5, [P(1,1,(2,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")), P(2,3,(4,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[2,3,"1"]], [[1,3,"1"],[2,2,"1"]])))
E.append(entry("C5_21", 5, [P(1,1,(2,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")),
                            P(3,3,(5,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[2,3,"1"]], [[1,3,"1"],[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_22", 5, [P(1,1,(2,"1")), P(1,2,(5,"1")), P(2,2,(5,"1")), P(2,3,(4,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[2,3,"1"]], [[1,2,"1"],[2,2,"1"]])))
E.append(entry("C5_23", 5, [P(1,1,(2,"1")), P(1,2,(5,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")),
                            P(3,3,(5,"1"))],
               "2dim extensions of C3s_01", False,
               ext=ext01([[2,3,"1"]], [[1,2,"1"],[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_24", 5, [P(1,1,(2,"1")), P(1,2,(5,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")),
                            P(2,3,(4,"1")), P(3,3,(5,"a"))],
               "2dim extensions of C3s_01", False, params=[param("a")],
               ext=ext01([[2,3,"1"]], [[1,2,"1"],[1,3,"1"],[2,2,"1"],[3,3,"a"]])))
E.append(entry("C5_25", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,2,(5,"1"))],
               "2dim extensions of C3s_02", False,
               ext=ext("C3s_02", [[[1,3,"1"]], [[2,2,"1"]]])))

# 2-dim extensions of C3s_03
def ext03(c4, c5):
    return ext("C3s_03", [c4, c5])

E.append(entry("C5_26", 5, [P(1,1,(5,"a")), P(1,2,(3,"1")), P(2,2,(5,"b")), P(1,3,(4,"1"),(5,"1")),
                            P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False, params=[param("a"), param("b")],
               ext=ext03([[1,3,"1"],[2,3,"1"]], [[1,1,"a"],[2,2,"b"],[1,3,"1"],[3,3,"1"]]),
               iso=["C5_26(a,b) ~ C5_26(b,a), established by finite-field search"]))
E.append(entry("C5_27", 5, [P(1,1,(5,"a")), P(1,2,(3,"1")), P(2,2,(5,"1")), P(1,3,(4,"1")),
                            P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False, params=[param("a")],
               ext=ext03([[1,3,"1"],[2,3,"1"]], [[1,1,"a"],[2,2,"1"],[3,3,"1"]]),
               iso=["C5_27(a) ~ C5_27(1/a) for a != 0, established by finite-field search"]))
E.append(entry("C5_28", 5, [P(1,1,(5,"1")), P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,3,(4,"1")),
                            P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[1,3,"1"],[2,3,"1"]], [[1,1,"1"],[3,3,"1"]])))
E.append(entry("C5_29", 5, [P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[1,3,"1"],[2,3,"1"]], [[3,3,"1"]])))
E.append(entry("C5_30", 5, [P(1,1,(4,"1"),(5,"a")), P(1,2,(3,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")),
                            P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False, params=[param("a")],
               ext=ext03([[1,1,"1"],[2,3,"1"]], [[1,1,"a"],[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_31", 5, [P(1,1,(4,"1"),(5,"1")), P(1,2,(3,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[1,1,"1"],[2,3,"1"]], [[1,1,"1"],[3,3,"1"]])))
E.append(entry("C5_32", 5, [P(1,1,(4,"1")), P(1,2,(3,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[1,1,"1"],[2,3,"1"]], [[3,3,"1"]])))
E.append(entry("C5_33", 5, [P(1,1,(5,"1")), P(1,2,(3,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")),
                            P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[2,3,"1"]], [[1,1,"1"],[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_34", 5, [P(1,1,(5,"1")), P(1,2,(3,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[2,3,"1"]], [[1,1,"1"],[3,3,"1"]])))
E.append(entry("C5_35", 5, [P(1,2,(3,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[2,3,"1"]], [[2,2,"1"],[3,3,"1"]])))
E.append(entry("C5_36", 5, [P(1,2,(3,"1")), P(2,3,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[2,3,"1"]], [[3,3,"1"]])))
E.append(entry("C5_37", 5, [P(1,1,(4,"1"),(5,"1")), P(1,2,(3,"1")), P(2,2,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[1,1,"1"],[2,2,"1"]], [[1,1,"1"],[3,3,"1"]])))
E.append(entry("C5_38", 5, [P(1,1,(4,"1")), P(1,2,(3,"1")), P(2,2,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[1,1,"1"],[2,2,"1"]], [[3,3,"1"]])))
E.append(entry("C5_39", 5, [P(1,1,(5,"1")), P(1,2,(3,"1")), P(2,2,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[2,2,"1"]], [[1,1,"1"],[3,3,"1"]])))
E.append(entry("C5_40", 5, [P(1,2,(3,"1")), P(2,2,(4,"1")), P(3,3,(5,"1"))],
               "2dim extensions of C3s_03", False,
               ext=ext03([[2,2,"1"]], [[3,3,"1"]])))

# 1-dim extensions of the 4-dimensional algebras
E.append(entry("C5_41", 5, [P(1,1,(2,"1")), P(2,2,(5,"1")), P(3,4,(5,"1"))],
               "1dim extensions of C4s_01", False,
               ext=ext("C4s_01", [[[2,2,"1"],[3,4,"1"]]])))
E.append(entry("C5_42", 5, [P(1,1,(2,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_01", False,
               ext=ext("C4s_01", [[[1,3,"1"],[2,2,"1"],[4,4,"1"]]])))
E.append(entry("C5_43", 5, [P(1,2,(3,"1")), P(1,1,(5,"1")), P(2,4,(5,"1")), P(3,3,(5,"1"))],
               "1dim extensions of C4s_03", False,
               ext=ext("C4s_03", [[[1,1,"1"],[2,4,"1"],[3,3,"1"]]])))
E.append(entry("C5_44", 5, [P(1,2,(3,"1")), P(1,1,(5,"1")), P(2,2,(5,"1")), P(3,3,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_03", False,
               ext=ext("C4s_03", [[[1,1,"1"],[2,2,"1"],[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_45", 5, [P(1,2,(3,"1")), P(1,1,(5,"1")), P(3,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_03", False,
               ext=ext("C4s_03", [[[1,1,"1"],[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_46", 5, [P(1,2,(3,"1")), P(1,4,(5,"1")), P(2,4,(5,"1")), P(3,3,(5,"1"))],
               "1dim extensions of C4s_03", False,
               ext=ext("C4s_03", [[[1,4,"1"],[2,4,"1"],[3,3,"1"]]])))
E.append(entry("C5_47", 5, [P(1,2,(3,"1")), P(2,4,(5,"1")), P(3,3,(5,"1"))],
               "1dim extensions of C4s_03", False,
               ext=ext("C4s_03", [[[2,4,"1"],[3,3,"1"]]])))
E.append(entry("C5_48", 5, [P(1,2,(3,"1")), P(3,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_03", False,
               ext=ext("C4s_03", [[[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_49", 5, [P(1,1,(3,"1")), P(1,2,(5,"1")), P(2,2,(4,"1")), P(3,3,(5,"a")),
                            P(3,4,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False, params=[param("a")],
               ext=ext("C4s_04", [[[1,2,"1"],[3,3,"a"],[3,4,"1"],[4,4,"1"]]])))
E.append(entry("C5_50", 5, [P(1,1,(3,"1")), P(1,2,(5,"1")), P(2,2,(4,"1")), P(3,3,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[1,2,"1"],[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_51", 5, [P(1,1,(3,"1")), P(1,2,(5,"1")), P(2,2,(4,"1")), P(3,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[1,2,"1"],[3,4,"1"]]])))
E.append(entry("C5_52", 5, [P(1,1,(3,"1")), P(1,3,(5,"a")), P(2,2,(4,"1")), P(2,3,(5,"1")),
                            P(3,3,(5,"1")), P(3,4,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_04; the orbit parameter satisfies O(a)=O(-a)=O(1/a)=O(-1/a)",
               False, params=[param("a")],
               ext=ext("C4s_04", [[[1,3,"a"],[2,3,"1"],[3,3,"1"],[3,4,"1"],[4,4,"1"]]])))
E.append(entry("C5_53", 5, [P(1,1,(3,"1")), P(1,3,(5,"1")), P(2,2,(4,"1")), P(2,3,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[1,3,"1"],[2,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_54", 5, [P(1,1,(3,"1")), P(1,3,(5,"1")), P(2,2,(4,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[1,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_55", 5, [P(1,1,(3,"1")), P(2,2,(4,"1")), P(2,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[2,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_56", 5, [P(1,1,(3,"1")), P(2,2,(4,"1")), P(3,3,(5,"a")), P(3,4,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False, params=[param("a")],
               ext=ext("C4s_04", [[[3,3,"a"],[3,4,"1"],[4,4,"1"]]])))
E.append(entry("C5_57", 5, [P(1,1,(3,"1")), P(2,2,(4,"1")), P(3,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_58", 5, [P(1,1,(3,"1")), P(2,2,(4,"1")), P(3,4,(5,"1"))],
               "1dim extensions of C4s_04", False,
               ext=ext("C4s_04", [[[3,4,"1"]]])))
E.append(entry("C5_59", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(1,3,(5,"1")), P(2,2,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[1,3,"1"],[2,2,"1"],[4,4,"1"]]])))
E.append(entry("C5_60", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(1,3,(5,"1")), P(2,3,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[1,3,"1"],[2,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_61", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(1,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[1,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_62", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(1,4,(5,"1")), P(2,2,(5,"a")),
                            P(3,3,(5,"1"))],
               "1dim extensions of C4s_05", False, params=[param("a")],
               ext=ext("C4s_05", [[[1,4,"1"],[2,2,"a"],[3,3,"1"]]])))
E.append(entry("C5_63", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(2,2,(5,"1")), P(3,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[2,2,"1"],[3,4,"1"]]])))
E.append(entry("C5_64", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(2,3,(5,"1")), P(3,3,(5,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[2,3,"1"],[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_65", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(2,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[2,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_66", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(2,4,(5,"1")), P(3,3,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[2,4,"1"],[3,3,"1"]]])))
E.append(entry("C5_67", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(3,3,(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[3,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_68", 5, [P(1,1,(3,"1")), P(1,2,(4,"1")), P(3,4,(5,"1"))],
               "1dim extensions of C4s_05", False,
               ext=ext("C4s_05", [[[3,4,"1"]]])))
E.append(entry("C5_69", 5, [P(1,1,(4,"1")), P(1,2,(5,"a")), P(1,3,(5,"1")), P(2,2,(5,"1")),
                            P(2,3,(4,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False, params=[param("a")],
               ext=ext("C4s_06", [[[1,2,"a"],[1,3,"1"],[2,2,"1"],[4,4,"1"]]]),
               iso=["C5_69(a) ~ C5_69(w*a) for w a primitive cube root of unity, established by finite-field search"]))
E.append(entry("C5_70", 5, [P(1,1,(4,"1")), P(1,2,(5,"1")), P(1,3,(5,"1")), P(2,3,(4,"1")),
                            P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False,
               ext=ext("C4s_06", [[[1,2,"1"],[1,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_71", 5, [P(1,1,(4,"1")), P(1,2,(5,"1")), P(2,3,(4,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False,
               ext=ext("C4s_06", [[[1,2,"1"],[4,4,"1"]]])))
E.append(entry("C5_72", 5, [P(1,1,(4,"1")), P(2,2,(5,"1")), P(2,3,(4,"1"),(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False,
               ext=ext("C4s_06", [[[2,2,"1"],[2,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_73", 5, [P(1,1,(4,"1")), P(2,2,(5,"1")), P(2,3,(4,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False,
               ext=ext("C4s_06", [[[2,2,"1"],[4,4,"1"]]])))
E.append(entry("C5_74", 5, [P(1,1,(4,"1")), P(2,3,(4,"1"),(5,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False,
               ext=ext("C4s_06", [[[2,3,"1"],[4,4,"1"]]])))
E.append(entry("C5_75", 5, [P(1,1,(4,"1")), P(2,3,(4,"1")), P(4,4,(5,"1"))],
               "1dim extensions of C4s_06", False,
               ext=ext("C4s_06", [[[4,4,"1"]]])))
E.append(entry("C5_76", 5, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(1,4,(5,"1")), P(2,2,(5,"-2")),
                            P(3,3,(4,"1"),(5,"3"))],
               "1dim extensions of C4s_08", False,
               ext=ext("C4s_08", [[[1,4,"1"],[2,2,"-2"],[3,3,"3"]]])))
E.append(entry("C5_77", 5, [P(1,1,(2,"1")), P(1,2,(4,"1")), P(1,4,(5,"1")), P(2,3,(5,"1")),
                            P(3,3,(4,"1"))],
               "1dim extensions of C4s_08", False,
               ext=ext("C4s_08", [[[1,4,"1"],[2,3,"1"]]])))
E.append(entry("C5_78", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"1")), P(1,4,(5,"1")),
                            P(2,2,(4,"1"),(5,"1")), P(2,3,(5,"1"))],
               "1dim extensions of C4s_09", False,
               ext=ext("C4s_09", [[[1,4,"1"],[2,2,"1"],[2,3,"1"]]])))
E.append(entry("C5_79", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"1")), P(1,4,(5,"1")),
                            P(2,2,(4,"2"),(5,"1")), P(2,3,(5,"4"))],
               "1dim extensions of C4_02 at a=1", False,
               ext=ext("C4_02", [[[1,4,"1"],[2,2,"1"],[2,3,"4"]]], base_params={"a": "1"})))
E.append(entry("C5_80", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"a")), P(1,4,(5,"1")),
                            P(2,2,(4,"a+1")), P(2,3,(5,"a+3"))],
               "1dim extensions of C4_02", False, params=[param("a")],
               ext=ext("C4_02", [[[1,4,"1"],[2,3,"a+3"]]], base_params={"a": "a"})))
E.append(entry("C5_81", 5, [P(1,1,(2,"1")), P(1,2,(3,"1")), P(1,3,(4,"1")), P(2,2,(4,"2")),
                            P(2,4,(5,"1"))],
               "1dim extensions of C4_02 at a=1", False,
               ext=ext("C4_02", [[[2,4,"1"]]], base_params={"a": "1"})))

catalog = {"algebras": E}

# ---------------------------------------------------------------------------
# classification tables: cohomology bases, automorphism families, action formulas
# ---------------------------------------------------------------------------

def cls(*terms):
    return [[i, j, c] for i, j, c in terms]

def D(i, j, c="1"):
    return (i, j, c)

tables = {"cohomology": [], "actions": [], "trivial_z2": {}}

def coh(algebra, ccd, j, h_j=None, h_extra=None, h_ccd=None, params=None):
    row = {"algebra": algebra, "dim_h_ccd": ccd}
    if j is not None:
        row["dim_h_j"] = j
    if h_j:
        row["h_j_classes"] = h_j
    if h_extra:
        row["h_extra_classes"] = h_extra
    if h_ccd:
        row["h_ccd_classes"] = h_ccd
    if params:
        row["params"] = params
    tables["cohomology"].append(row)

coh("C3s_01", 5, 4,
    h_j=[cls(D(1,2)), cls(D(1,3)), cls(D(2,3)), cls(D(3,3))],
    h_extra=[cls(D(2,2))])
coh("C3s_02", 2, 1,
    h_j=[cls(D(1,3), D(2,2))],
    h_extra=[cls(D(2,2))])
coh("C3s_03", 5, 4,
    h_j=[cls(D(1,1)), cls(D(2,2)), cls(D(1,3)), cls(D(2,3))],
    h_extra=[cls(D(3,3))])
coh("C3_01", 1, 0, h_ccd=[cls(D(1,2))])
coh("C4s_01", 9, 8,
    h_j=[cls(D(1,2)), cls(D(1,3)), cls(D(1,4)), cls(D(2,3)), cls(D(2,4)), cls(D(3,3)),
         cls(D(3,4)), cls(D(4,4))],
    h_extra=[cls(D(2,2))])
coh("C4s_02", 5, 4,
    h_j=[cls(D(1,3), D(2,2)), cls(D(1,4)), cls(D(2,4)), cls(D(4,4))],
    h_extra=[cls(D(1,3))])
coh("C4s_03", 9, 8,
    h_j=[cls(D(1,1)), cls(D(1,3)), cls(D(1,4)), cls(D(2,2)), cls(D(2,3)), cls(D(2,4)),
         cls(D(3,4)), cls(D(4,4))],
    h_extra=[cls(D(3,3))])
coh("C4s_04", 8, 5,
    h_j=[cls(D(1,2)), cls(D(1,3)), cls(D(1,4)), cls(D(2,3)), cls(D(2,4))],
    h_extra=[cls(D(3,3)), cls(D(3,4)), cls(D(4,4))])
coh("C4s_05", 8, 5,
    h_j=[cls(D(1,3)), cls(D(1,4)), cls(D(2,2)), cls(D(2,3)), cls(D(2,4))],
    h_extra=[cls(D(3,3)), cls(D(3,4)), cls(D(4,4))])
# The stated basis lists the eight classes [D_ij], (i,j) not in {(1,1),(4,4)},
# plus [D44]; the dimensions follow from that listing.
coh("C4s_06", 9, 8,
    h_j=[cls(D(1,2)), cls(D(1,3)), cls(D(1,4)), cls(D(2,2)), cls(D(2,3)), cls(D(2,4)),
         cls(D(3,3)), cls(D(3,4))],
    h_extra=[cls(D(4,4))])
coh("C4s_08", 5, 4,
    h_j=[cls(D(1,3)), cls(D(1,4), D(2,2)), cls(D(2,3)), cls(D(3,3))],
    h_extra=[cls(D(1,4))])
coh("C4s_09", 2, 1,
    h_j=[cls(D(1,4), D(2,3))],
    h_extra=[cls(D(2,2))])
coh("C4_02", 2, 0, h_ccd=[cls(D(2,2)), cls(D(1,4), (2,3,"3+a"))], params={"a": "2"})
coh("C4_02", 2, 0, h_ccd=[cls(D(2,2)), cls(D(1,4), (2,3,"3+a"))], params={"a": "3"})
coh("C4_02", 3, 0, h_ccd=[cls(D(2,2)), cls(D(1,4), (2,3,"4")), cls(D(2,4))], params={"a": "1"})
coh("C4_02", 2, 0, h_ccd=[cls(D(1,3)), cls(D(1,4), (2,3,"3"))], params={"a": "0"})

def action(section, base, nablas, vars_, matrix, alpha_star=None, sampler="generic",
           constraints=None, fixed=None, base_params=None):
    row = {"section": section, "base": base, "nablas": nablas, "vars": vars_,
           "matrix": matrix, "sampler": sampler}
    if alpha_star:
        row["alpha_star"] = alpha_star
    if constraints:
        row["constraints"] = constraints
    if fixed:
        row["fixed_alphas"] = fixed
    if base_params:
        row["base_params"] = base_params
    tables["actions"].append(row)

action("ext2-C3s_01", "C3s_01",
       [cls(D(1,2)), cls(D(1,3)), cls(D(2,3)), cls(D(3,3)), cls(D(2,2))],
       ["x", "y", "z", "u", "v"],
       [["x", "0", "0"], ["y", "x^2", "u"], ["z", "0", "v"]],
       alpha_star=[
           "(a1*x+a3*z+a5*y)*x^2",
           "(a1*x+a3*z+a5*y)*u+(a2*x+a3*y+a4*z)*v",
           "(a5*u+a3*v)*x^2",
           "2*a3*u*v+a4*v^2+a5*u^2",
           "a5*x^4",
       ])
action("ext2-C3s_02", "C3s_02",
       [cls(D(1,3), D(2,2)), cls(D(2,2))],
       ["x", "y", "z"],
       [["x", "0", "0"], ["y", "x^2", "0"], ["z", "2*x*y", "x^3"]])
action("ext2-C3s_03", "C3s_03",
       [cls(D(1,1)), cls(D(2,2)), cls(D(1,3)), cls(D(2,3)), cls(D(3,3))],
       ["x", "u", "z", "v"],
       [["x", "0", "0"], ["0", "u", "0"], ["z", "v", "x*u"]],
       alpha_star=[
           "x^2*a1+2*x*z*a3+z^2*a5",
           "u^2*a2+2*u*v*a4+v^2*a5",
           "x*u*(x*a3+z*a5)",
           "x*u*(u*a4+v*a5)",
           "x^2*u^2*a5",
       ])
action("ext1-C4s_01", "C4s_01",
       [cls(D(1,2)), cls(D(1,3)), cls(D(1,4)), cls(D(2,3)), cls(D(2,4)), cls(D(3,3)),
        cls(D(3,4)), cls(D(4,4)), cls(D(2,2))],
       ["x", "q", "w", "e", "r", "u", "t", "k", "y", "l"],
       [["x", "0", "0", "0"], ["q", "x^2", "r", "u"], ["w", "0", "t", "k"],
        ["e", "0", "y", "l"]],
       fixed={"a9": "1"},
       alpha_star=[
           "x^2*(q+x*a1+w*a4+e*a5)",
           "r*(q+x*a1+w*a4+e*a5)+t*(x*a2+q*a4+w*a6+e*a7)+y*(x*a3+q*a5+w*a7+e*a8)",
           "u*(q+x*a1+w*a4+e*a5)+k*(x*a2+q*a4+w*a6+e*a7)+l*(x*a3+q*a5+w*a7+e*a8)",
           "x^2*(r+t*a4+y*a5)",
           "x^2*(u+k*a4+l*a5)",
           "r^2+2*r*(t*a4+y*a5)+t^2*a6+2*t*y*a7+y^2*a8",
           "r*(u+k*a4+l*a5)+t*(u*a4+k*a6+l*a7)+y*(u*a5+k*a7+l*a8)",
           "u^2+2*u*(k*a4+l*a5)+k^2*a6+2*k*l*a7+l^2*a8",
           "x^4",
       ])
action("ext1-C4s_02", "C4s_02",
       [cls(D(1,3), D(2,2)), cls(D(1,4)), cls(D(2,4)), cls(D(4,4)), cls(D(1,3))],
       ["x", "q", "w", "e", "r", "t"],
       [["x", "0", "0", "0"], ["q", "x^2", "0", "0"], ["w", "2*x*q", "x^3", "r"],
        ["e", "0", "0", "t"]],
       fixed={"a5": "1"},
       alpha_star=[
           "x^4*a1",
           "r*x*(1+a1)+t*(x*a2+q*a3+e*a4)",
           "t*x^2*a3",
           "t^2*a4",
           "x^4",
       ])
action("ext1-C4s_03", "C4s_03",
       [cls(D(1,1)), cls(D(1,3)), cls(D(1,4)), cls(D(2,2)), cls(D(2,3)), cls(D(2,4)),
        cls(D(3,4)), cls(D(4,4)), cls(D(3,3))],
       ["x", "e", "q", "r", "y", "w", "t", "u"],
       [["x", "0", "0", "0"], ["0", "e", "0", "0"], ["q", "r", "x*e", "y"],
        ["w", "t", "0", "u"]],
       fixed={"a9": "1"},
       alpha_star=[
           "q^2+x^2*a1+2*w*x*a3+2*q*(x*a2+w*a7)+w^2*a8",
           "e*x*(q+x*a2+w*a7)",
           "x*y*a2+u*x*a3+w*y*a7+q*(y+u*a7)+u*w*a8",
           "r^2+e^2*a4+2*e*t*a6+2*r*(e*a5+t*a7)+t^2*a8",
           "e*x*(r+e*a5+t*a7)",
           "e*y*a5+e*u*a6+t*y*a7+r*(y+u*a7)+t*u*a8",
           "e*x*(y+u*a7)",
           "y^2+2*u*y*a7+u^2*a8",
           "e^2*x^2",
       ])
action("ext1-C4s_04", "C4s_04",
       [cls(D(1,2)), cls(D(1,3)), cls(D(1,4)), cls(D(2,3)), cls(D(2,4)), cls(D(3,3)),
        cls(D(3,4)), cls(D(4,4))],
       ["x", "e", "q", "r", "w", "t"],
       [["x", "0", "0", "0"], ["0", "e", "0", "0"], ["q", "r", "x^2", "0"],
        ["w", "t", "0", "e^2"]])
action("ext1-C4s_05", "C4s_05",
       [cls(D(1,3)), cls(D(1,4)), cls(D(2,2)), cls(D(2,3)), cls(D(2,4)), cls(D(3,3)),
        cls(D(3,4)), cls(D(4,4))],
       ["x", "q", "r", "w", "t", "e", "y"],
       [["x", "0", "0", "0"], ["q", "r", "0", "0"], ["w", "t", "x^2", "0"],
        ["e", "y", "2*x*q", "x*r"]],
       alpha_star=[
           "x*(x^2*a1+x*(q*(2*a2+a4)+w*a6+e*a7)+2*q*(q*a5+w*a7+e*a8))",
           "r*x*(x*a2+q*a5+w*a7+e*a8)",
           "r^2*a3+2*r*(t*a4+y*a5)+t^2*a6+2*t*y*a7+y^2*a8",
           "x*(r*x*a4+2*q*r*a5+t*x*a6+2*q*t*a7+x*y*a7+2*q*y*a8)",
           "r*x*(r*a5+t*a7+y*a8)",
           "x^2*(x^2*a6+4*q*x*a7+4*q^2*a8)",
           "r*x^2*(x*a7+2*q*a8)",
           "r^2*x^2*a8",
       ])
action("ext1-C4s_06", "C4s_06",
       [cls(D(1,2)), cls(D(1,3)), cls(D(1,4)), cls(D(2,2)), cls(D(2,3)), cls(D(2,4)),
        cls(D(3,3)), cls(D(3,4)), cls(D(4,4))],
       ["x", "y", "z", "t", "a", "b", "c", "d", "p", "q", "r", "s"],
       [["x", "a", "p", "0"], ["y", "b", "q", "0"], ["z", "c", "r", "0"],
        ["t", "d", "s", "x^2+2*y*z"]],
       sampler="c4s06",
       constraints=["x*a+y*c+z*b", "x*p+y*r+z*q", "a^2+2*b*c", "p^2+2*q*r",
                    "x^2+2*y*z-a*p-b*r-c*q"],
       fixed={"a9": "1"},
       alpha_star=[
           "x*(b*a1+c*a2+d*a3)+y*(a*a1+b*a4+c*a5+d*a6)+t*(d+a*a3+b*a6+c*a8)+z*(a*a2+b*a5+c*a7+d*a8)",
           "x*(q*a1+r*a2+s*a3)+y*(p*a1+q*a4+r*a5+s*a6)+t*(s+p*a3+q*a6+r*a8)+z*(p*a2+q*a5+r*a7+s*a8)",
           "(x^2+2*y*z)*(t+x*a3+y*a6+z*a8)",
           "d^2+2*a*(b*a1+c*a2)+b^2*a4+2*b*c*a5+c^2*a7+2*d*(a*a3+b*a6+c*a8)",
           "-1*t^2+a*(q*a1+r*a2+s*a3)-2*x*(y*a1+z*a2+t*a3)-1*y^2*a4+b*(p*a1+q*a4+r*a5+s*a6)-2*y*(z*a5+t*a6)-1*z^2*a7-2*t*z*a8+d*(s+p*a3+q*a6+r*a8)+c*(p*a2+q*a5+r*a7+s*a8)",
           "(x^2+2*y*z)*(d+a*a3+b*a6+c*a8)",
           "s^2+2*p*(q*a1+r*a2)+q^2*a4+2*q*r*a5+r^2*a7+2*s*(p*a3+q*a6+r*a8)",
           "(x^2+2*y*z)*(s+p*a3+q*a6+r*a8)",
           "(x^2+2*y*z)^2",
       ])
# the constraint r^2 = x^3 is solved by x = m^2, r = m^3, which also
# turns the -z*r/x entry into the polynomial -z*m
action("ext1-C4s_08", "C4s_08",
       [cls(D(1,3)), cls(D(1,4), D(2,2)), cls(D(2,3)), cls(D(3,3)), cls(D(1,4))],
       ["m", "y", "z", "t", "s"],
       [["m^2", "0", "0", "0"], ["y", "m^4", "-1*z*m", "0"], ["z", "0", "m^3", "0"],
        ["t", "z^2+2*m^2*y", "s", "m^6"]])
action("ext1-C4s_09", "C4s_09",
       [cls(D(1,4), D(2,3)), cls(D(2,2))],
       ["x", "y", "z", "t"],
       [["x", "0", "0", "0"], ["y", "x^2", "0", "0"], ["z", "2*x*y", "x^3", "0"],
        ["t", "y^2+2*x*z", "3*x^2*y", "x^4"]],
       fixed={"a2": "1"},
       alpha_star=["x^5*a1", "x^4"])
# the stated matrix had x^3 and x^4 swapped and wrote y for the row-2 entry q;
# the corrected family below passes the automorphism check
action("ext1-C4_02", "C4_02",
       [cls(D(2,2)), cls(D(1,4), (2,3,"3+a"))],
       ["x", "q", "w", "e"],
       [["x", "0", "0", "0"], ["q", "x^2", "0", "0"], ["w", "2*q*x", "x^3", "0"],
        ["e", "(1+a)*q^2+2*a*x*w", "(1+3*a)*x^2*q", "x^4"]],
       base_params={"a": "2"})

tables["trivial_z2"] = {
    "algebras": ["C4s_07", "C4s_10", "C4s_11", "C4s_12", "C4_03", "C4_04", "C4_05",
                 "C4_06", "C4_07"],
    "span": [[1, 1], [1, 2], [2, 2], [1, 3], [2, 3], [3, 3]],
    "ts_only": ["C4_01"],
}

os.makedirs("data", exist_ok=True)
with open("data/catalog.json", "w") as f:
    json.dump(catalog, f, indent=1)
    f.write("\n")
with open("data/class_tables.json", "w") as f:
    json.dump(tables, f, indent=1)
    f.write("\n")
with open("data/maps/c513_sign.json", "w") as f:
    os.makedirs("data/maps", exist_ok=True)
    json.dump(["1","0","0","0","0",
               "0","1","0","0","0",
               "0","0","1","0","0",
               "0","0","0","-1","0",
               "0","0","0","0","1"], f, indent=1)
    f.write("\n")
print("entries:", len(E))
