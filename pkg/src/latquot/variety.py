"""Least congruences with quotient in an equational class of lattices.

``kappa`` computes, for a lattice L and a class given by identities, the
least congruence whose quotient satisfies every identity; ``delta`` is the
distributive special case.  ``kappa_oracle`` recomputes the same congruence
by brute force over the whole congruence lattice, and the ``verify_*``
functions machine-check the structural facts the construction relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .congruence import (
    Congruence,
    _congruence_closure,
    all_congruences,
    cong_join,
    cong_meet,
    identity_congruence,
    leq_congruence,
    push_congruence,
    quotient,
)
from .core import product
from .terms import DISTRIBUTIVE, Meet, Var, variables


def _eval_idx(term, lat, env):
    """Term evaluation at index level (env: name -> index)."""
    if isinstance(term, Var):
        return env[term.name]
    left = _eval_idx(term.left, lat, env)
    right = _eval_idx(term.right, lat, env)
    table = lat.meet_table if isinstance(term, Meet) else lat.join_table
    return table[left][right]


def _assignments(lat, names):
    n = len(lat)
    for combo in itertools.product(range(n), repeat=len(names)):
        yield dict(zip(names, combo))


def satisfies(lat, spec):
    """True, or a witness (identity, assignment) for the first failure."""
    for ident in spec.identities:
        names = variables(ident.lhs) + [
            v for v in variables(ident.rhs) if v not in variables(ident.lhs)
        ]
        for env in _assignments(lat, names):
            if _eval_idx(ident.lhs, lat, env) != _eval_idx(ident.rhs, lat, env):
                named = {v: lat.elements[i] for v, i in env.items()}
                return (ident, named)
    return True


def kappa(lat, spec):
    """Least congruence whose quotient lies in the class.

    Generated-join method: join, over every identity t1 = t2 and every
    assignment of lattice elements to its variables, of the principal
    congruences theta(t1, t2).  Any congruence with quotient in the class
    must collapse each such pair, and the quotient by the join satisfies
    every identity, so the join is exactly the least such congruence.
    The quotient is re-checked before returning.
    """
    pairs = []
    for ident in spec.identities:
        names = variables(ident.lhs) + [
            v for v in variables(ident.rhs) if v not in variables(ident.lhs)
        ]
        for env in _assignments(lat, names):
            a = _eval_idx(ident.lhs, lat, env)
            b = _eval_idx(ident.rhs, lat, env)
            if a != b:
                pairs.append((a, b))
    result = _congruence_closure(lat, pairs)
    if satisfies(quotient(lat, result).target, spec) is not True:
        raise RuntimeError("internal error: quotient by kappa escapes the class")
    return result


def delta(lat):
    """Least congruence with distributive quotient."""
    return kappa(lat, DISTRIBUTIVE)


def class_filter(lat, spec, max_size=12):
    """All congruences whose quotient lies in the class, sorted canonically.

    Cross-checked against the principal up-set of kappa before returning.
    """
    filtered = [
        theta
        for theta in all_congruences(lat, max_size=max_size)
        if satisfies(quotient(lat, theta).target, spec) is True
    ]
    kap = kappa(lat, spec)
    upset = [t for t in all_congruences(lat, max_size=max_size) if leq_congruence(kap, t)]
    if set(filtered) != set(upset):
        raise RuntimeError("internal error: class filter is not the up-set of kappa")
    return sorted(filtered, key=lambda t: (-t.num_blocks(), t.block_of))


def kappa_oracle(lat, spec, max_size=12):
    """kappa by brute force: meet of all class-quotient congruences.

    The meet of the filtered set is itself in the set (closure of the
    filter under arbitrary intersections); this is asserted.
    """
    filtered = [
        theta
        for theta in all_congruences(lat, max_size=max_size)
        if satisfies(quotient(lat, theta).target, spec) is True
    ]
    result = filtered[0]
    for theta in filtered[1:]:
        result = cong_meet(result, theta)
    if result not in filtered:
        raise RuntimeError("internal error: meet of the class filter escapes it")
    return result


@dataclass
class Report:
    """Outcome of one structural verification."""

    name: str
    ok: bool
    details: list = field(default_factory=list)

    def fail(self, message):
        self.ok = False
        self.details.append(message)

    def note(self, message):
        self.details.append(message)


def verify_theorem1(lat, spec, max_size=12, subset_cap=12):
    """The class-quotient congruences form an up-set closed under all meets."""
    report = Report("filter-structure", True)
    cons = all_congruences(lat, max_size=max_size)
    filtered = set(class_filter(lat, spec, max_size=max_size))
    for t0 in filtered:
        for t in cons:
            if leq_congruence(t0, t) and t not in filtered:
                report.fail(f"not an up-set: above {t0.render(lat)} lies {t.render(lat)}")
    members = sorted(filtered, key=lambda t: t.block_of)
    if len(members) <= subset_cap:
        subsets = []
        for r in range(1, len(members) + 1):
            subsets.extend(itertools.combinations(members, r))
    else:
        subsets = list(itertools.combinations(members, 2)) + [tuple(members)]
    for subset in subsets:
        acc = subset[0]
        for t in subset[1:]:
            acc = cong_meet(acc, t)
        if acc not in filtered:
            report.fail(f"meet of a subset escapes the filter: {acc.render(lat)}")
    report.note(f"filter size {len(filtered)} of {len(cons)} congruences")
    return report


def verify_theorem2(lat, theta, spec):
    """kappa of L/theta equals the pushforward of kappa(L) joined with theta."""
    report = Report("quotient-kappa", True)
    qmap = quotient(lat, theta)
    lhs = kappa(qmap.target, spec)
    rhs = push_congruence(qmap, cong_join(lat, kappa(lat, spec), theta))
    if lhs != rhs:
        report.fail(
            f"mismatch on quotient by {theta.render(lat)}: "
            f"direct {lhs.render(qmap.target)} vs pushed {rhs.render(qmap.target)}"
        )
    return report


def _product_congruence(l1, l2, t1, t2):
    """The congruence t1 x t2 on product(l1, l2) (same element layout)."""
    n2 = len(l2)
    block_of = []
    for i in range(len(l1)):
        for j in range(n2):
            block_of.append(t1.block_of[i] * n2 + t2.block_of[j])
    return Congruence(len(l1) * n2, block_of)


def _factor_congruence(l1, l2, theta):
    """Try to factor theta on product(l1, l2) as t1 x t2; None if impossible."""
    n2 = len(l2)
    pairs1, pairs2 = [], []
    size = len(l1) * n2
    for a in range(size):
        for b in range(a + 1, size):
            if theta.same(a, b):
                pairs1.append((a // n2, b // n2))
                pairs2.append((a % n2, b % n2))
    t1 = _congruence_closure(l1, pairs1)
    t2 = _congruence_closure(l2, pairs2)
    if _product_congruence(l1, l2, t1, t2) == theta:
        return (t1, t2)
    return None


def verify_theorem3(l1, l2, spec, max_size=12):
    """kappa of a product is the product of the factor kappas.

    Also checks, when both factors fit under the enumeration cap, that
    every congruence of the product factors componentwise (the structural
    fact behind the equality).
    """
    report = Report("product-kappa", True)
    prod = product(l1, l2)
    direct = kappa(prod, spec)
    expected = _product_congruence(l1, l2, kappa(l1, spec), kappa(l2, spec))
    if direct != expected:
        report.fail(
            f"kappa of the product is {direct.render(prod)}, "
            f"product of kappas is {expected.render(prod)}"
        )
    if len(l1) <= max_size and len(l2) <= max_size:
        cons = all_congruences(prod, max_size=len(prod))
        for theta in cons:
            if _factor_congruence(l1, l2, theta) is None:
                report.fail(f"unfactorable product congruence: {theta.render(prod)}")
        report.note(f"factored all {len(cons)} product congruences")
    else:
        report.note("factor-wise premise skipped (factors exceed the cap)")
    return report
