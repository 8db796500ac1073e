"""Corpus-wide spot checks of the core witness identities.

The acceptance module exercises the theorem-level checks; these tests
sweep the witness identities themselves across every default corpus
ring with seeded element pairs (exhaustive pair coverage for the small
rings lives in test_rings).
"""

import random

import pytest

from ringlab import lab
from ringlab.concrete import make_ring
from ringlab.errors import NotBezout
from ringlab.rings import verify_bezout


@pytest.fixture(scope="module")
def corpus_rings():
    return [make_ring(spec) for spec in lab.default_corpus_specs()]


def test_bezout_identities_across_corpus(corpus_rings):
    rng = random.Random("corpus-bezout")
    for ring in corpus_rings:
        elems = list(ring.elements())
        for _ in range(30):
            a, b = rng.choice(elems), rng.choice(elems)
            try:
                data = ring.bezout_gcd(a, b)
            except NotBezout:
                continue  # the control ring has non-principal pair ideals
            failed = verify_bezout(ring, a, b, data)
            assert failed == [], (ring.spec_string(), str(a), str(b), failed)


def test_divides_witnesses_across_corpus(corpus_rings):
    rng = random.Random("corpus-divides")
    for ring in corpus_rings:
        elems = list(ring.elements())
        for _ in range(30):
            a, b = rng.choice(elems), rng.choice(elems)
            t = ring.divides(a, b)
            if t is not None:
                assert ring.mul(a, t) == b, (ring.spec_string(), str(a), str(b))
            prod = ring.mul(a, b)
            t = ring.divides(a, prod)
            assert t is not None and ring.mul(a, t) == prod


def test_unit_witnesses_across_corpus(corpus_rings):
    for ring in corpus_rings:
        for a in ring.elements():
            inv = ring.is_unit(a)
            if inv is not None:
                assert ring.mul(a, inv) == ring.one, (ring.spec_string(), str(a))
