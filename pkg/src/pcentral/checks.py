"""Statement checkers: each evaluates a hypothesis and a conclusion separately.

Every checker returns a Verdict.  Hypotheses are computed, never assumed, so a
corpus row that fails a hypothesis is recorded as skipped rather than silently
passing, and the suite doubles as a counterexample hunter.  Sweep-style
checkers (those quantified over an index k, i or n) treat the hypothesis as
"some index qualifies" and the conclusion as "every qualifying index checks
out", recording the per-index detail in the witnesses.
"""

from __future__ import annotations

import functools
import math
import time
from typing import Callable, Dict, List, Optional

from .actions import (
    ActionPair,
    aut_as_perm_group,
    aut_perm_realization,
    commutator_group_of_pair,
    gamma_term,
    induced_quotient_action,
    is_p_central_action,
    mixed_commutator,
    mixed_lower_central_series,
    mixed_series_definitional,
    restrict_action,
    order_matches_quotient_triviality,
)
from .autsearch import brute_force_aut, sylow_p_subgroup
from .catalog import paper_sigma_pair, sigma_matrix, sigma_power_closed_form
from .groups import (
    GroupTable,
    Subgroup,
    center,
    commutator_subgroup,
    quotient,
)
from .series import (
    central_order_bound,
    is_omega_regular,
    is_p_central_of_height,
    lower_central_series,
    nilpotency_class,
    omega_conv,
    omega_subgroup,
    upper_central_series,
    xu_inequality,
)
from .verdict import PASS, Verdict, conclude

__all__ = [
    "PAIR_CHECKS",
    "GROUP_CHECKS",
    "GROUP_PRIME_CHECKS",
    "SIGMA_CHECKS",
    "FACT_CHECKS",
    "ALL_CHECK_NAMES",
    "check_catalog_facts",
    "check_mixed_series_ladder",
    "check_mixed_series_oracle",
    "check_omega_center_sandwich",
    "check_xu_regularity",
    "check_omega_exponent_bound",
    "check_prime_order_action",
    "check_quotient_inheritance",
    "check_omega_ladder",
    "check_faithful_p_group",
    "check_power_order_criterion",
    "check_main_regularity",
    "check_derived_exponent",
    "check_derived_omega_identity",
    "check_sylow_aut_exponent",
    "check_normal_p_complement",
    "check_height_p_complement",
    "check_sigma_example_tightness",
]


def _timed(fn: Callable[..., Verdict]) -> Callable[..., Verdict]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> Verdict:
        t0 = time.perf_counter()
        v = fn(*args, **kwargs)
        v.millis = (time.perf_counter() - t0) * 1000.0
        return v
    return wrapper


def _plog(x: int, p: int) -> Optional[int]:
    """m with x = p^m, or None."""
    m = 0
    while x % p == 0:
        x //= p
        m += 1
    return m if x == 1 else None


def _gens_or_elements(sub: Subgroup):
    return sub.gens if sub.gens else sub.elements


def _p_central_on_term(pair: ActionPair, k: int) -> bool:
    return is_p_central_action(pair, gamma_term(pair, k))


def _lift(G: GroupTable, sub: Subgroup) -> Subgroup:
    """The same element set, viewed as a subgroup of the (super)table G."""
    return Subgroup(G, (G._bykey[k] for k in sub.keys), sub.gens)


def _pprime_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def _has_normal_p_complement(G: GroupTable, p: int) -> Dict[str, object]:
    """Do the p'-elements form a subgroup of full p'-order?"""
    members = [x for x in G.elements if math.gcd(x.order(), p) == 1]
    keys = {x.key for x in members}
    target = _pprime_part(G.order, p)
    closed = all(G.mul(x, y).key in keys for x in members for y in members)
    return {
        "p_prime_element_count": len(members),
        "p_prime_part": target,
        "set_is_closed": closed,
        "complement_exists": closed and len(members) == target,
    }


# -- catalog self-description --------------------------------------------


@_timed
def check_catalog_facts(G: GroupTable, expected: Dict[str, object]) -> Verdict:
    """Structural facts (order, exponent, class, order histogram) against the
    values frozen from an enumeration run."""
    actual: Dict[str, object] = {
        "order": G.order,
        "exponent": G.exponent(),
        "nilpotency_class": nilpotency_class(G),
        "order_stats": {str(k): v for k, v in sorted(G.order_stats().items())},
    }
    mismatches = {k: {"expected": v, "actual": actual.get(k)}
                  for k, v in expected.items() if actual.get(k) != v}
    unknown = [k for k in expected if k not in actual]
    return conclude("catalog_facts", True, not mismatches and not unknown,
                    {"expected": expected, "actual": actual,
                     "mismatches": mismatches, "unknown_fields": unknown})


# -- mixed series structure ----------------------------------------------


@_timed
def check_mixed_series_ladder(pair: ActionPair) -> Verdict:
    """Graded containment of mixed terms against the acting group's own lower
    central series, plus strict descent down to 1 for p-group pairs."""
    G = pair.G
    P = aut_as_perm_group(pair)
    hyp = G.p is not None and G.is_p_group and P.is_p_group
    if not hyp:
        return conclude("mixed_series_ladder", False, None,
                        {"group_is_p_group": bool(G.p and G.is_p_group),
                         "acting_group_is_p_group": P.is_p_group})
    s = mixed_lower_central_series(pair)
    real = aut_perm_realization(pair)
    alcs = lower_central_series(P)
    graded_bad: List[Dict[str, object]] = []
    for i in range(1, s.stabilized_at + 2):
        for j in range(1, alcs.stabilized_at + 2):
            target = s.term(i + j)
            for aperm in _gens_or_elements(alcs.term(j)):
                a = real.aut_of(aperm)
                for c in _gens_or_elements(s.term(i)):
                    w = mixed_commutator(c, a)
                    if w.key not in target.keys:
                        graded_bad.append({"i": i, "j": j, "witness": w.key.hex()})
    orders = s.orders()
    descending = all(orders[i + 1] < orders[i] for i in range(s.stabilized_at))
    reaches_one = s.terms[s.stabilized_at].order == 1
    ok = not graded_bad and descending and reaches_one
    return conclude("mixed_series_ladder", True, ok,
                    {"series_orders": orders, "graded_violations": graded_bad,
                     "strictly_descending": descending, "reaches_one": reaches_one})


@_timed
def check_mixed_series_oracle(pair: ActionPair, *, k_max: int = 5,
                              size_limit: int = 256) -> Verdict:
    """Recursive mixed series vs the raw left-normed-commutator enumeration.

    The size limit is the budget gate and plays the hypothesis role.
    """
    G = pair.G
    if G.order > size_limit:
        return conclude("mixed_series_oracle", False, None,
                        {"order": G.order, "size_limit": size_limit})
    defs = mixed_series_definitional(pair, k_max)
    diffs = [{"k": k, "definitional_order": defs[k - 1].order,
              "recursive_order": gamma_term(pair, k).order}
             for k in range(1, k_max + 1)
             if defs[k - 1].keys != gamma_term(pair, k).keys]
    return conclude("mixed_series_oracle", True, not diffs,
                    {"k_max": k_max,
                     "orders": [t.order for t in defs],
                     "mismatches": diffs})


@_timed
def check_omega_center_sandwich(pair: ActionPair) -> Verdict:
    """For k >= 2 with the action small-element-trivial on the k-th mixed term:
    omega of the (k-1)-th lower central term of H sits inside omega of the k-th
    mixed term, which sits inside the center of H."""
    G = pair.G
    base = G.p is not None and G.is_p_group
    results: List[Dict[str, object]] = []
    any_hyp = False
    all_ok = True
    if base:
        Hgrp = commutator_group_of_pair(pair)
        lcsH = lower_central_series(Hgrp)
        Zkeys = center(Hgrp).keys
        s = mixed_lower_central_series(pair)
        k_hi = max(s.stabilized_at + 1, lcsH.stabilized_at + 2, G.p, 2)
        for k in range(2, k_hi + 1):
            hyp_k = _p_central_on_term(pair, k)
            row: Dict[str, object] = {"k": k, "hypothesis": hyp_k}
            if hyp_k:
                any_hyp = True
                left = omega_conv(lcsH.term(k - 1).to_group())
                mid = omega_conv(gamma_term(pair, k).to_group())
                ok = left.keys <= mid.keys and mid.keys <= Zkeys
                row.update(lower_omega=left.order, mid_omega=mid.order,
                           ok=ok)
                all_ok &= ok
            results.append(row)
    return conclude("omega_center_sandwich", base and any_hyp,
                    all_ok, {"group_is_p_group": base, "per_k": results})


# -- regularity ----------------------------------------------------------


@_timed
def check_xu_regularity(G: GroupTable) -> Verdict:
    """If small elements of the (p-1)-th lower central term are central, the
    order-p^n element sets are subgroups, and (p odd) the agemo index is
    bounded by the omega order."""
    base = G.p is not None and G.is_p_group
    hyp = False
    witnesses: Dict[str, object] = {"group_is_p_group": base}
    if base:
        p = G.p
        term = lower_central_series(G).term(max(p - 1, 1))
        om = omega_conv(term.to_group())
        hyp = om.keys <= center(G).keys
        witnesses["omega_of_term_order"] = om.order
        witnesses["central"] = hyp
    if not hyp:
        return conclude("xu_regularity", False, None, witnesses)
    m = _plog(G.exponent(), p) or 1
    per_n = []
    ok = True
    for n in range(1, m + 1):
        reg = is_omega_regular(G, n)
        row = {"n": n, "omega_set_is_subgroup": reg}
        if p != 2:
            v = xu_inequality(G, n)
            row["index_bounded"] = v.conclusion == PASS
            row.update({k: v.witnesses[k] for k in ("index", "omega_order")})
            ok &= row["index_bounded"]
        ok &= reg
        per_n.append(row)
    witnesses["per_n"] = per_n
    return conclude("xu_regularity", True, ok, witnesses)


@_timed
def check_omega_exponent_bound(pair: ActionPair) -> Verdict:
    """Under the p-central hypothesis on the p-th mixed term, omega_n of
    H = [G,A] has exponent at most p^n, and for odd p the agemo index of H is
    bounded by the omega order."""
    G = pair.G
    base = G.p is not None and G.is_p_group
    hyp = base and _p_central_on_term(pair, G.p)
    if not hyp:
        return conclude("omega_exponent_bound", False, None,
                        {"group_is_p_group": base})
    p = G.p
    H = commutator_group_of_pair(pair)
    m = _plog(H.exponent(), p)
    per_n = []
    ok = m is not None
    for n in range(1, (m or 0) + 1):
        om = omega_subgroup(H, n)
        worst = max(x.order() for x in om.elements)
        row: Dict[str, object] = {"n": n, "omega_order": om.order,
                                  "max_element_order": worst,
                                  "exponent_bounded": worst <= p ** n}
        ok &= row["exponent_bounded"]
        if p != 2:
            v = xu_inequality(H, n)
            row["index_bounded"] = v.conclusion == PASS
            ok &= row["index_bounded"]
        per_n.append(row)
    return conclude("omega_exponent_bound", True, ok,
                    {"H_order": H.order, "H_exponent": H.exponent(),
                     "per_n": per_n})


@_timed
def check_prime_order_action(pair: ActionPair) -> Verdict:
    """An acting group of order exactly p, small-element-trivial on the p-th
    mixed term, forces exponent at most p on [G,A]."""
    G = pair.G
    base = G.p is not None and G.is_p_group
    hyp = base and pair.A_order == G.p and _p_central_on_term(pair, G.p)
    if not hyp:
        return conclude("prime_order_action", False, None,
                        {"group_is_p_group": base, "A_order": pair.A_order})
    H = commutator_group_of_pair(pair)
    return conclude("prime_order_action", True, H.exponent() <= G.p,
                    {"H_order": H.order, "H_exponent": H.exponent()})


# -- inheritance under quotients -----------------------------------------


def _qualifying_ks(pair: ActionPair) -> List[int]:
    """k in [1, p] with the action small-element-trivial on the k-th term."""
    p = pair.G.p
    s = mixed_lower_central_series(pair)
    hi = min(p, s.stabilized_at + 1)
    ks = [k for k in range(1, hi + 1) if _p_central_on_term(pair, k)]
    if not ks and s.stabilized_at + 1 < p:
        # terms past stabilization repeat; test one representative index
        for k in range(s.stabilized_at + 1, p + 1):
            if _p_central_on_term(pair, k):
                ks.append(k)
                break
    return ks


@_timed
def check_quotient_inheritance(pair: ActionPair) -> Verdict:
    """A p-group action small-element-trivial on the k-th mixed term (k <= p)
    stays so after factoring out each omega term of H = [G,A]."""
    G = pair.G
    P = aut_as_perm_group(pair)
    base = G.p is not None and G.is_p_group and P.is_p_group
    ks = _qualifying_ks(pair) if base else []
    if not (base and ks):
        return conclude("quotient_inheritance", False, None,
                        {"group_is_p_group": bool(G.p and G.is_p_group),
                         "acting_group_is_p_group": P.is_p_group,
                         "qualifying_ks": ks})
    H = commutator_group_of_pair(pair)
    detail = []
    ok = True
    for k in ks:
        i = 1
        while True:
            om = omega_subgroup(H, i)
            qpair = induced_quotient_action(pair, _lift(G, om))
            good = _p_central_on_term(qpair, k)
            detail.append({"k": k, "i": i, "omega_order": om.order,
                           "quotient_order": qpair.G.order, "ok": good})
            ok &= good
            if om.order == H.order:
                break
            i += 1
    return conclude("quotient_inheritance", True, ok,
                    {"qualifying_ks": ks, "per_quotient": detail})


@_timed
def check_omega_ladder(pair: ActionPair) -> Verdict:
    """With L the k-th mixed term (k <= p qualifying): the action is
    small-element-trivial on L mod each omega term of L, and commutators of
    omega_i(L) with the action land in omega_{i-1}(L)."""
    G = pair.G
    P = aut_as_perm_group(pair)
    base = G.p is not None and G.is_p_group and P.is_p_group
    ks = _qualifying_ks(pair) if base else []
    if not (base and ks):
        return conclude("omega_ladder", False, None,
                        {"group_is_p_group": bool(G.p and G.is_p_group),
                         "acting_group_is_p_group": P.is_p_group,
                         "qualifying_ks": ks})
    detail = []
    ok = True
    for k in ks:
        L = gamma_term(pair, k)
        rpair = restrict_action(pair, L)
        Lgrp = rpair.G
        i = 1
        while True:
            omL = omega_subgroup(Lgrp, i)
            qpair = induced_quotient_action(rpair, omL)
            central_above = is_p_central_action(qpair)
            prev = (omega_subgroup(Lgrp, i - 1) if i > 1
                    else Lgrp.trivial_subgroup)
            steps_down = all(
                mixed_commutator(x, a).key in prev.keys
                for x in omL.elements for a in rpair.A_generators)
            detail.append({"k": k, "i": i, "omega_order": omL.order,
                           "quotient_action_small_trivial": central_above,
                           "commutators_drop_a_level": steps_down})
            ok &= central_above and steps_down
            if omL.order == Lgrp.order:
                break
            i += 1
    return conclude("omega_ladder", True, ok,
                    {"qualifying_ks": ks, "per_level": detail})


# -- the acting group itself ---------------------------------------------


@_timed
def check_faithful_p_group(pair: ActionPair) -> Verdict:
    """If the action is small-element-trivial on some mixed term, the (always
    faithful, automorphism-realized) acting group must be a p-group."""
    G = pair.G
    base = G.p is not None and G.is_p_group
    per_i = []
    any_hyp = False
    if base:
        s = mixed_lower_central_series(pair)
        for i in range(1, s.stabilized_at + 3):
            h = _p_central_on_term(pair, i)
            per_i.append({"i": i, "hypothesis": h})
            any_hyp |= h
    if not (base and any_hyp):
        return conclude("faithful_p_group", False, None,
                        {"group_is_p_group": base, "per_i": per_i})
    is_pg = _plog(pair.A_order, G.p) is not None
    return conclude("faithful_p_group", True, is_pg,
                    {"per_i": per_i, "A_order": pair.A_order})


@_timed
def check_power_order_criterion(pair: ActionPair) -> Verdict:
    """Under the p-central hypothesis on the p-th mixed term: an acting element
    has order dividing p^n exactly when all its mixed commutators land in
    omega_n of H = [G,A] (for every element and every n)."""
    G = pair.G
    base = G.p is not None and G.is_p_group
    hyp = base and _p_central_on_term(pair, G.p)
    if not hyp:
        return conclude("power_order_criterion", False, None,
                        {"group_is_p_group": base})
    p = G.p
    exp_a = aut_as_perm_group(pair).exponent()
    m = _plog(exp_a, p)
    if m is None:
        return conclude("power_order_criterion", True, False,
                        {"acting_exponent": exp_a,
                         "reason": "acting exponent is not a p-power"})
    failures = []
    count = 0
    for sigma in pair.A_elements:
        for n in range(1, m + 2):
            count += 1
            v = order_matches_quotient_triviality(pair, sigma, n)
            if v.conclusion != PASS:
                failures.append({"n": n, "sigma_order": sigma.order(),
                                 "detail": v.witnesses})
    return conclude("power_order_criterion", True, not failures,
                    {"pairs_checked": count, "n_max": m + 1,
                     "failures": failures})


@_timed
def check_main_regularity(pair: ActionPair) -> Verdict:
    """The main regularity bundle, under small-element-triviality on the p-th
    mixed term: omega sets of H = [G,A] and of the acting group are subgroups,
    the two exponents agree, and both nilpotency classes obey n + p - 2."""
    G = pair.G
    base = G.p is not None and G.is_p_group
    hyp = base and _p_central_on_term(pair, G.p)
    if not hyp:
        return conclude("main_regularity", False, None,
                        {"group_is_p_group": base})
    p = G.p
    H = commutator_group_of_pair(pair)
    P = aut_as_perm_group(pair)
    parts: Dict[str, object] = {}

    mH = _plog(H.exponent(), p)
    parts["omega_sets_subgroups_in_H"] = mH is not None and all(
        is_omega_regular(H, i) for i in range(1, mH + 1))

    if P.is_p_group:
        mA = _plog(P.exponent(), p)
        parts["omega_sets_subgroups_in_A"] = mA is not None and all(
            is_omega_regular(P, i) for i in range(1, mA + 1))
    else:
        parts["omega_sets_subgroups_in_A"] = False

    parts["equal_exponents"] = H.exponent() == P.exponent()

    n = _plog(P.exponent(), p)
    cH = nilpotency_class(H)
    cA = nilpotency_class(P)
    bound = None if n is None else n + p - 2
    parts["class_bound"] = (bound is not None and cH is not None
                            and cA is not None and cH <= bound and cA <= bound)
    ok = all(bool(v) for v in parts.values())
    return conclude("main_regularity", True, ok,
                    {**parts, "H_exponent": H.exponent(),
                     "A_exponent": P.exponent(), "H_class": cH,
                     "A_class": cA, "class_limit": bound})


# -- conjugation corollaries ---------------------------------------------


def _inner_small_central(G: GroupTable) -> bool:
    """Does conjugation fix every small element of the p-th lower central term?"""
    p = G.p
    bound = central_order_bound(p)
    term = lower_central_series(G).term(p)
    Zkeys = center(G).keys
    return all(x.key in Zkeys for x in term.elements if bound % x.order() == 0)


@_timed
def check_derived_exponent(G: GroupTable) -> Verdict:
    """Conjugation small-element-trivial on the p-th lower central term forces
    equal exponents for the derived subgroup and the central quotient."""
    base = G.p is not None and G.is_p_group
    hyp = base and _inner_small_central(G)
    if not hyp:
        return conclude("derived_exponent", False, None,
                        {"group_is_p_group": base})
    derived = lower_central_series(G).term(2).to_group()
    Q = quotient(G, center(G))
    return conclude("derived_exponent", True,
                    derived.exponent() == Q.exponent(),
                    {"derived_exponent": derived.exponent(),
                     "central_quotient_exponent": Q.exponent()})


@_timed
def check_derived_omega_identity(G: GroupTable) -> Verdict:
    """Sharper form: commutating the preimage of omega_k(G/Z) with G yields
    exactly omega_k of the derived subgroup, for every k."""
    base = G.p is not None and G.is_p_group
    hyp = base and _inner_small_central(G)
    if not hyp:
        return conclude("derived_omega_identity", False, None,
                        {"group_is_p_group": base})
    p = G.p
    Q = quotient(G, center(G))
    derived = lower_central_series(G).term(2).to_group()
    m = _plog(Q.exponent(), p) or 0
    per_k = []
    ok = True
    for k in range(1, max(m, 1) + 1):
        X = Q.preimage(omega_subgroup(Q, k))
        left = commutator_subgroup(G, X, G.top)
        right = omega_subgroup(derived, k)
        same = left.keys == right.keys
        per_k.append({"k": k, "commutator_order": left.order,
                      "omega_order": right.order, "equal": same})
        ok &= same
    return conclude("derived_omega_identity", True, ok, {"per_k": per_k})


# -- full automorphism group rows ----------------------------------------


@_timed
def check_sylow_aut_exponent(G: GroupTable) -> Verdict:
    """Non-cyclic exponent-p groups of order at most p^p have Sylow p-subgroups
    of the automorphism group of exponent (dividing) p."""
    base = G.p is not None and G.is_p_group
    p = G.p or 0
    hyp = (base and G.exponent() == p and G.order >= p * p
           and G.order <= p ** p)
    if not hyp:
        return conclude("sylow_aut_exponent", False, None,
                        {"group_is_p_group": base,
                         "order": G.order,
                         "exponent": G.exponent() if base else None})
    result = brute_force_aut(G)
    S = sylow_p_subgroup(result.perm_group, p)
    exp_s = max(x.order() for x in S.elements)
    return conclude("sylow_aut_exponent", True, exp_s <= p,
                    {"aut_order": result.order, "sylow_order": S.order,
                     "sylow_exponent": exp_s})


# -- general finite groups: complements ----------------------------------


@_timed
def check_normal_p_complement(G: GroupTable, p: int) -> Verdict:
    """Conjugation small-element-trivial on some lower central term forces a
    normal p-complement (the p'-elements form a full-order subgroup)."""
    bound = central_order_bound(p)
    Zkeys = center(G).keys
    s = lower_central_series(G)
    per_i = []
    any_hyp = False
    for i in range(1, s.stabilized_at + 2):
        term = s.term(i)
        h = all(x.key in Zkeys
                for x in term.elements if bound % x.order() == 0)
        per_i.append({"i": i, "term_order": term.order, "hypothesis": h})
        any_hyp |= h
    if not any_hyp:
        return conclude("normal_p_complement", False, None,
                        {"p": p, "per_i": per_i})
    facts = _has_normal_p_complement(G, p)
    return conclude("normal_p_complement", True,
                    bool(facts["complement_exists"]),
                    {"p": p, "per_i": per_i, **facts})


@_timed
def check_height_p_complement(G: GroupTable, p: int) -> Verdict:
    """Small elements inside the k-th upper central term (some k) force a
    normal p-complement."""
    s = upper_central_series(G)
    per_k = []
    any_hyp = False
    for k in range(1, s.stabilized_at + 2):
        h = is_p_central_of_height(G, k, p)
        per_k.append({"k": k, "hypothesis": h})
        any_hyp |= h
    if not any_hyp:
        return conclude("height_p_complement", False, None,
                        {"p": p, "per_k": per_k})
    facts = _has_normal_p_complement(G, p)
    return conclude("height_p_complement", True,
                    bool(facts["complement_exists"]),
                    {"p": p, "per_k": per_k, **facts})


# -- the explicit example ------------------------------------------------


@_timed
def check_sigma_example_tightness(p: int) -> Verdict:
    """Report on the explicit rank-(p+1) example: both readings of its p-th
    mixed term, the p-squared acting order against the exponent-p commutator
    subgroup, and the binomial closed form for the acting matrix's powers."""
    pair = paper_sigma_pair(p)
    sig = pair.A_generators[0]
    H = commutator_group_of_pair(pair)
    term_def = gamma_term(pair, p)        # reading: >= p-1 acting entries
    term_deep = gamma_term(pair, p + 1)   # reading: >= p acting entries
    sig_mat = sigma_matrix(p)
    closed_form_ok = all(sigma_power_closed_form(p, n) == sig_mat ** n
                         for n in range(0, p * p + 1))
    facts = {
        "sigma_order": sig.order(),
        "H_order": H.order,
        "H_exponent": H.exponent(),
        "term_orders": mixed_lower_central_series(pair).orders(),
        "definition_reading_order": term_def.order,
        "definition_reading_small_trivial": is_p_central_action(pair, term_def),
        "deep_reading_order": term_deep.order,
        "deep_reading_small_trivial": is_p_central_action(pair, term_deep),
        "closed_form_matches_powers": closed_form_ok,
    }
    consistent = (
        facts["sigma_order"] == p * p
        and facts["H_exponent"] == p
        and facts["definition_reading_order"] == p * p
        and facts["definition_reading_small_trivial"] is False
        and facts["deep_reading_order"] == p
        and facts["deep_reading_small_trivial"] is True
        and closed_form_ok
    )
    return conclude("sigma_example_tightness", True, consistent, facts)


# -- registry ------------------------------------------------------------


PAIR_CHECKS: Dict[str, Callable[[ActionPair], Verdict]] = {
    "mixed_series_ladder": check_mixed_series_ladder,
    "mixed_series_oracle": check_mixed_series_oracle,
    "omega_center_sandwich": check_omega_center_sandwich,
    "omega_exponent_bound": check_omega_exponent_bound,
    "prime_order_action": check_prime_order_action,
    "quotient_inheritance": check_quotient_inheritance,
    "omega_ladder": check_omega_ladder,
    "faithful_p_group": check_faithful_p_group,
    "power_order_criterion": check_power_order_criterion,
    "main_regularity": check_main_regularity,
}

GROUP_CHECKS: Dict[str, Callable[[GroupTable], Verdict]] = {
    "xu_regularity": check_xu_regularity,
    "derived_exponent": check_derived_exponent,
    "derived_omega_identity": check_derived_omega_identity,
    "sylow_aut_exponent": check_sylow_aut_exponent,
}

GROUP_PRIME_CHECKS: Dict[str, Callable[[GroupTable, int], Verdict]] = {
    "normal_p_complement": check_normal_p_complement,
    "height_p_complement": check_height_p_complement,
}

SIGMA_CHECKS: Dict[str, Callable[[int], Verdict]] = {
    "sigma_example_tightness": check_sigma_example_tightness,
}

FACT_CHECKS: Dict[str, Callable[[GroupTable, Dict[str, object]], Verdict]] = {
    "catalog_facts": check_catalog_facts,
}

ALL_CHECK_NAMES = (set(PAIR_CHECKS) | set(GROUP_CHECKS) | set(GROUP_PRIME_CHECKS)
                   | set(SIGMA_CHECKS) | set(FACT_CHECKS))
