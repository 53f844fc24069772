"""Services: rewriting, Hopf structure, cocycles, SU(2) oracle, verification suites."""
