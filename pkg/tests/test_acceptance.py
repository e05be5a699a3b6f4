"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Every criterion runs through coalgkit.suites at its stated scale with exact
(zero-failure) tolerances; the whole battery is budgeted to finish well
under two minutes on a laptop.
"""


from coalgkit import suites


def _run(criterion, fn, **kwargs):
    report = fn(**kwargs)
    status = "PASS" if report["ok"] else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status} counts={report['counts']} failures={report['failures'][:5]}")
    assert report["ok"], report["failures"][:5]
    return report


def test_criterion_1_axiom_suite():
    """1000 randomized coalgebras over Q, F2, F3, F5 (dims <= 6, from the
    construction toolkit) all validate; constructed morphisms validate."""
    _run("1 axiom-suite", suites.suite_axioms, seed=0, count=1000, morphisms=200)


def test_criterion_2_ftc_oracle():
    """generated_subcoalgebra equals the brute-force minimal subcoalgebra on
    >= 200 F2 instances of dim <= 4."""
    _run("2 ftc-oracle", suites.suite_ftc, seed=0, count=200)


def test_criterion_3_etale_retraction():
    """r o i = id exactly; etale part idempotent; component sum an exact
    isomorphism; naturality on >= 200 randomized morphisms."""
    _run("3 etale-retraction", suites.suite_etale, seed=0, count=1000, morphisms=200)


def test_criterion_4_group_like_oracle():
    """group_likes matches exhaustive enumeration whenever p^dim <= 10^4; the
    counit always factors through the etale part; split instances give the
    pointwise-coalgebra isomorphism."""
    _run("4 group-like-oracle", suites.suite_grouplike, seed=0, count=1000)


def test_criterion_5_hensel_witness():
    """F2[x]/((x^2+x+1)^2): lifted root xbar^2+1, subfield F4, A = K (+) m,
    against exhaustive root search over all 16 elements."""
    _run("5 hensel-witness", suites.suite_hensel, seed=0)


def test_criterion_6_galois_adjunction():
    """For F4/F2, F8/F2, F9/F3, F16/F2 and all subgroups: unit bijections on
    every G-set of size <= 6, counit image = etale part on 100 compatible
    coalgebras, faithfulness on small G-sets."""
    _run("6 galois-adjunction", suites.suite_galois, seed=0, counit_count=100,
         unit_size=6, faithful_size=4)


def test_criterion_7_day_suite():
    """Yoneda monoidality in four categories, graded-convolution dimensions,
    hom-tensor dimension identity on 50 triples, unit/symmetry/associativity
    isomorphisms."""
    _run("7 day-suite", suites.suite_day, seed=0, hom_triples=50, iso_rounds=8)


def test_criterion_8_closure_suite():
    """Purity and invariance closures meet their defining predicates;
    generated Day subcoalgebras validate, contain their seeds, and are
    minimal at dim <= 4 over F2; 50 separations of distinct morphisms."""
    _run("8 closure-suite", suites.suite_closure, seed=0, separation_pairs=50)


def test_criterion_9_determinism():
    """Every suite, rerun with the same seed, emits byte-identical canonical
    JSON reports."""
    _run("9 determinism", suites.suite_determinism, seed=0)
