"""criterion number -> (passed, one-line description), filled by test_acceptance."""

RESULTS: dict = {}
