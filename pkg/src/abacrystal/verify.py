"""Verification matrices shared by the command line and the acceptance suite.

Each function returns a JSON-ready dict with a boolean ``pass`` entry.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence

from . import charformula as cf
from .abacus import (
    AbacusCrystal,
    abacus_e_descending,
    abacus_f_descending,
    compact_for_weight,
    compactify,
    decompose,
    descending_configs,
    is_tight,
    recompose,
    sources,
    tighten,
    untighten,
    weight,
)
from .commutor import (
    cactus_violations,
    involution_violations,
    is_crystal_isomorphism,
    longest_words,
    shapes_up_to,
    sigma_table,
    verify_star_characterization,
)
from .cpp import abacus_to_cpp, cpp_e, cpp_f, cpp_to_abacus, enumerate_cpps
from .crystal import affine_cartan, check_local_axioms, explore, q_character
from .kyoto import J, PathCrystal, PerfectCrystal, ground_state_path
from .partitions import partitions_of

PERFECT_3_2_EDGES = {
    ((0, 0), 1, (0, 1)),
    ((0, 1), 1, (1, 1)),
    ((0, 2), 1, (1, 2)),
    ((0, 1), 2, (0, 2)),
    ((1, 1), 2, (1, 2)),
    ((1, 2), 2, (2, 2)),
    ((0, 2), 0, (0, 0)),
    ((2, 2), 0, (0, 2)),
    ((1, 2), 0, (0, 1)),
}


def genfunc_report(lam: Sequence[int], degree: int = 15, enumerate_too: bool = True) -> dict:
    lam = tuple(lam)
    n, ell = len(lam), sum(lam)
    weyl = cf.Z_weyl(lam, n, degree)
    borodin = cf.Z_borodin(cf.profile_of(lam, n, ell), degree)
    out = {
        "n": n,
        "l": ell,
        "lambda": list(lam),
        "degree": degree,
        "weyl": list(weyl),
        "borodin": list(borodin),
    }
    equal = weyl == borodin
    if enumerate_too:
        psi0 = compact_for_weight(lam)
        counts = Counter(p.size for p in enumerate_cpps(n, psi0.charges, degree))
        enum = [counts[k] for k in range(degree + 1)]
        out["enumerate"] = enum
        equal = equal and enum == list(weyl)
    out["three-way-equal"] = equal
    out["pass"] = equal
    return out


def duality_report(lam: Sequence[int], degree: int = 15) -> dict:
    lam = tuple(lam)
    n, ell = len(lam), sum(lam)
    dual = cf.lambda_prime(lam)
    left = cf.Z_weyl(lam, n, degree)
    right = cf.Z_weyl(dual, ell, degree)
    return {
        "lambda": list(lam),
        "lambda_prime": list(dual),
        "n": n,
        "l": ell,
        "series": list(left),
        "dual_series": list(right),
        "pass": left == right,
    }


def bijection_report(lam: Sequence[int], max_weight: int, transport_weight: int | None = None) -> dict:
    """Round trip, weight preservation, image equality and operator transport."""
    psi0 = compact_for_weight(lam)
    n = psi0.n
    descs = list(descending_configs(psi0, max_weight))
    cpps = set(enumerate_cpps(n, psi0.charges, max_weight))
    image = {}
    round_trip = weight_ok = True
    for d in descs:
        p = abacus_to_cpp(d)
        image[d] = p
        round_trip &= cpp_to_abacus(p) == d
        weight_ok &= p.size == weight(d)
    bijective = len(set(image.values())) == len(descs) and set(image.values()) == cpps
    if transport_weight is None:
        transport_weight = max_weight - 1
    transport = True
    for d in descs:
        if weight(d) > transport_weight:
            continue
        for i in range(n):
            x = abacus_f_descending(d, i)
            y = cpp_f(image[d], i)
            transport &= (x is None and y is None) or (x is not None and y == abacus_to_cpp(x))
            x = abacus_e_descending(d, i)
            y = cpp_e(image[d], i)
            transport &= (x is None and y is None) or (x is not None and y == abacus_to_cpp(x))
    return {
        "lambda": list(lam),
        "max_weight": max_weight,
        "objects": len(descs),
        "cpps": len(cpps),
        "round_trip": round_trip,
        "weight_preserved": weight_ok,
        "bijective": bijective,
        "operators_transport": transport,
        "pass": round_trip and weight_ok and bijective and transport,
    }


def structure_report(lam: Sequence[int], max_weight: int) -> dict:
    """decompose is a weight-compatible bijection; T_k and T_k* commute with e_i, f_i."""
    psi0 = compact_for_weight(lam)
    n = psi0.n
    tight_ball = explore(AbacusCrystal(n, "descending"), psi0, max_weight)
    descs = list(descending_configs(psi0, max_weight))
    pairs = set()
    weight_ok = tight_ok = inverse_ok = True
    for d in descs:
        gamma, part = decompose(d)
        pairs.add((gamma, part))
        tight_ok &= is_tight(gamma) and compactify(gamma) == psi0 and gamma in tight_ball.degree
        weight_ok &= gamma in tight_ball.degree and weight(d) == tight_ball.degree[gamma] + n * sum(part)
        inverse_ok &= recompose(gamma, part) == d
    expected = sum(
        1
        for gamma in tight_ball.vertices
        for s in range((max_weight - tight_ball.degree[gamma]) // n + 1)
        for _ in partitions_of(s)
    )
    bijective = len(pairs) == len(descs) == expected
    commute_violations = []
    for d in descs:
        depth = d.depth() + 2
        for k in range(1, depth + 1):
            for move in (tighten, untighten):
                for i in range(n):
                    for op in (abacus_f_descending, abacus_e_descending):
                        t = move(d, k)
                        left = None if t is None else op(t, i)
                        s = op(d, i)
                        right = None if s is None else move(s, k)
                        if left != right:
                            commute_violations.append([repr(d), move.__name__, k, op.__name__, i])
    return {
        "lambda": list(lam),
        "max_weight": max_weight,
        "objects": len(descs),
        "bijective": bijective,
        "weight_identity": weight_ok,
        "gamma_tight": tight_ok,
        "recompose_inverts": inverse_ok,
        "commute_violations": len(commute_violations),
        "first_violation": commute_violations[:1],
        "pass": bijective and weight_ok and tight_ok and inverse_ok and not commute_violations,
    }


def descending_ball(lam: Sequence[int], degree: int):
    psi0 = compact_for_weight(lam)
    seeds = list(sources(psi0, degree))
    return explore(AbacusCrystal(psi0.n, "descending"), seeds, degree)


def axioms_report(lam: Sequence[int], degree: int = 8) -> dict:
    g = descending_ball(lam, degree)
    rep = check_local_axioms(g, affine_cartan(len(lam)))
    out = rep.to_json()
    out.update({"lambda": list(lam), "degree": degree, "vertices": len(g)})
    return out


def kyoto_report(lam: Sequence[int], degree: int = 8) -> dict:
    lam = tuple(lam)
    n = len(lam)
    psi0 = compact_for_weight(lam)
    ga = explore(AbacusCrystal(n, "descending"), psi0, degree)
    gp = explore(PathCrystal(n), ground_state_path(lam), degree)
    image = {v: J(v) for v in ga.vertices}
    injective = len(set(image.values())) == len(ga)
    surjective = set(image.values()) == gp.vertex_set()
    intertwines = {(image[s], i, image[t]) for s, i, t in ga.edges} == gp.edge_set()
    ground = image[psi0] == ground_state_path(lam)
    return {
        "lambda": list(lam),
        "degree": degree,
        "vertices": len(ga),
        "path_vertices": len(gp),
        "injective": injective,
        "surjective": surjective,
        "intertwines": intertwines,
        "ground_state": ground,
        "pass": injective and surjective and intertwines and ground,
    }


def perfect_crystal_edges(n: int, ell: int) -> set:
    pc = PerfectCrystal(n, ell)
    return {(b, i, pc.f(b, i)) for b in pc.elements() for i in range(n) if pc.f(b, i) is not None}


def character_report(lam: Sequence[int], degree: int = 8) -> dict:
    lam = tuple(lam)
    g = explore(AbacusCrystal(len(lam), "descending"), compact_for_weight(lam), degree)
    counts = q_character(g, degree)
    series = list(cf.dimq_V(lam, len(lam), degree))
    return {"lambda": list(lam), "degree": degree, "counts": counts, "dimq": series, "pass": counts == series}


def commutor_report(m: int, max_size: int = 4, cactus_size: int | None = 6) -> dict:
    shapes = shapes_up_to(max_size, m)
    failures = []
    checked = 0
    star_words = longest_words(m)
    for lam in shapes:
        for mu in shapes:
            checked += 1
            if not is_crystal_isomorphism(sigma_table((lam,), (mu,), m), m):
                failures.append({"check": "isomorphism", "lambda": lam, "mu": mu})
            if involution_violations(lam, mu, m):
                failures.append({"check": "squares_to_one", "lambda": lam, "mu": mu})
            for w in star_words:
                for r in verify_star_characterization(lam, mu, m, w):
                    if not r["pass"]:
                        failures.append({"check": "kashiwara_data", "lambda": lam, "mu": mu, "detail": r})
    triples = 0
    if cactus_size is not None:
        small = [s for s in shapes_up_to(cactus_size, m) if s]
        for a in small:
            for b in small:
                for c in small:
                    if sum(a) + sum(b) + sum(c) > cactus_size:
                        continue
                    triples += 1
                    if cactus_violations(a, b, c, m):
                        failures.append({"check": "cactus", "shapes": [a, b, c]})
    return {
        "m": m,
        "max_size": max_size,
        "pairs": checked,
        "cactus_triples": triples,
        "reduced_words": [list(w) for w in star_words],
        "failures": failures[:10],
        "failure_count": len(failures),
        "pass": not failures,
    }
