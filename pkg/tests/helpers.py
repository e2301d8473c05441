"""Shared generators and independent oracles.

The oracles deliberately use different algorithms (and different
normalizations) than the library so that agreement actually means
something: isomorphism by exhaustive search over all condition
bijections, rank-1 grid factorization anchored on the first row's gcd,
and decomposability by a from-scratch bipartition sweep.
"""

from collections import Counter
from itertools import combinations, permutations
from math import gcd

from petripoly import Event, PetriNet, are_isomorphic, nat_of_bits, tau_poly


# --------------------------------------------------------------- oracles

def iso_oracle(n1, n2):
    """Isomorphic? — decided by trying every condition bijection."""
    if len(n1.conditions) != len(n2.conditions) or len(n1.events) != len(n2.events):
        return False
    conds1 = sorted(n1.conditions)
    target = Counter((e.pre, e.post) for e in n2.events)
    for perm in permutations(sorted(n2.conditions)):
        beta = dict(zip(conds1, perm))
        image = Counter(
            (frozenset(beta[b] for b in e.pre), frozenset(beta[b] for b in e.post))
            for e in n1.events
        )
        if image == target:
            return True
    return False


def naive_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def rank1_oracle(cells):
    """Positive row/col weights for a {(r, c): value} grid, or None.

    Enumerates the first row weight over divisors of the first row's
    gcd — a different anchor than the library's divisor search.
    """
    nrows = 1 + max(r for r, _ in cells)
    ncols = 1 + max(c for _, c in cells)
    if len(cells) != nrows * ncols or any(v < 1 for v in cells.values()):
        return None
    row0 = [cells[(0, c)] for c in range(ncols)]
    for b0 in naive_divisors(gcd(*row0)):
        cvec = [v // b0 for v in row0]
        if any(cells[(r, 0)] % cvec[0] for r in range(nrows)):
            continue
        bvec = [cells[(r, 0)] // cvec[0] for r in range(nrows)]
        if all(bvec[r] * cvec[c] == cells[(r, c)]
               for r in range(nrows) for c in range(ncols)):
            return bvec, cvec
    return None


def splits_oracle(poly):
    """Does the polynomial factor nontrivially?  Exhaustive re-derivation."""
    coeffs = list(poly.terms.values())
    content = gcd(*coeffs)
    if content > 1:
        if len(poly.terms) > 1:
            return True
        return any(content % d == 0 for d in range(2, content))  # composite constant
    support = sorted(tau_poly(poly))
    for size in range(1, len(support)):
        for sub in combinations(support[1:], size - 1):
            s1 = {support[0], *sub}
            m1 = nat_of_bits(s1)
            m2 = nat_of_bits(set(support) - s1)
            left = sorted({(i & m1, j & m1) for (i, j) in poly.terms})
            right = sorted({(i & m2, j & m2) for (i, j) in poly.terms})
            cells = {
                (left.index((i & m1, j & m1)), right.index((i & m2, j & m2))): a
                for (i, j), a in poly.terms.items()
            }
            if len(cells) == len(left) * len(right) and rank1_oracle(cells):
                return True
    return False


def is_valid_witness(n1, n2, beta, eta):
    """Check that (beta, eta) really is an isomorphism between the nets."""
    if sorted(beta) != sorted(n1.conditions) or sorted(beta.values()) != sorted(n2.conditions):
        return False
    events2 = {e.id: e for e in n2.events}
    if sorted(eta) != sorted(e.id for e in n1.events) or sorted(eta.values()) != sorted(events2):
        return False
    for e1 in n1.events:
        e2 = events2[eta[e1.id]]
        if {beta[b] for b in e1.pre} != set(e2.pre):
            return False
        if {beta[b] for b in e1.post} != set(e2.post):
            return False
    return True


def match_up_to_iso(nets1, nets2):
    """Multiset equality of two net lists modulo isomorphism."""
    if len(nets1) != len(nets2):
        return False
    remaining = list(nets2)
    for a in nets1:
        for k, b in enumerate(remaining):
            if are_isomorphic(a, b) is not None:
                del remaining[k]
                break
        else:
            return False
    return True


# ------------------------------------------------------------ generators

def random_net(rng, max_conditions=5, max_events=6, keep_isolated=False):
    """A random net; unless asked otherwise, unused conditions are dropped."""
    conditions = [f"b{k}" for k in range(rng.randint(0, max_conditions))]
    events = []
    for k in range(rng.randint(0, max_events)):
        pre = [b for b in conditions if rng.random() < 0.4]
        post = [b for b in conditions if rng.random() < 0.4]
        events.append(Event(f"e{k}", pre, post))
    if keep_isolated:
        return PetriNet(conditions, events)
    used = set()
    for event in events:
        used |= event.pre | event.post
    return PetriNet(used, events)


def random_labeling(rng, net, offset=0):
    """A random injective labeling with values from a smallish pool."""
    ids = sorted(net.conditions)
    pool = range(offset, offset + 2 * len(ids) + 1)
    return dict(zip(ids, rng.sample(pool, len(ids))))


def disjoint_labelings(rng, n1, n2):
    l1 = random_labeling(rng, n1)
    l2 = random_labeling(rng, n2, offset=max(l1.values(), default=-1) + 1)
    return l1, l2


def product_labeling(l1, l2):
    """Labeling of a product net from labelings of the two sides."""
    combined = {f"L:{b}": t for b, t in l1.items()}
    combined.update({f"R:{b}": t for b, t in l2.items()})
    return combined


def random_poly_terms(rng, max_support=6, max_terms=5, max_coeff=9):
    """Terms of a random polynomial with positive constant term and
    support inside {0, ..., max_support-1}."""
    mask = nat_of_bits(rng.sample(range(max_support), rng.randint(0, max_support)))
    terms = {(0, 0): rng.randint(1, max_coeff)}
    for _ in range(rng.randint(0, max_terms)):
        i = mask & rng.getrandbits(max_support)
        j = mask & rng.getrandbits(max_support)
        terms[(i, j)] = rng.randint(1, max_coeff)
    return terms


def rename_conditions(net, mapping):
    """Apply a condition-id bijection to a net."""
    return PetriNet(
        [mapping[b] for b in net.conditions],
        [Event(e.id, {mapping[b] for b in e.pre}, {mapping[b] for b in e.post})
         for e in net.events],
    )
