"""Named parameter bundles for one-command figure reproduction.

The published iteration counts come with no steady-state rule, so the
thresholds below are reverse-engineered, not authoritative: CAL_TAU is a
first-passage tolerance under which the closed-form estimate settles at
k=29 (chi=0.25) and k=5 (chi=1.75); the per-chi plateau deltas make the
corrected estimate settle at k=414 and k=56.  Any tau in roughly
(7.102e-4, 9.119e-4) reproduces the first pair, so the shipped value is
one point of a window, chosen round.

The fractional order behind the published actual-run counts is likewise
undisclosed; the rate presets default to nu=0.25, which keeps the run on
the positive reals for both chi values.
"""

CAL_TAU = 7.2e-4
CAL_DELTA_CHI025 = 1.1e-4
CAL_DELTA_CHI175 = 8.8e-4

#: Published actual-run steady-state counts for (chi=0.25, chi=1.75).
TARGET_FAL_COUNTS = (1948, 1741)

PRESETS = {
    "fig1a": {
        "nu": 0.5,
        "e_min": 10.0,
        "eta": 2.0,
        "s_star": 5.0,
        "domain": (-4.0, 8.0, 121),
    },
    "fig1b": {
        "nu": 1.5,
        "e_min": 10.0,
        "eta": 2.0,
        "s_star": 5.0,
        "domain": (-4.0, 8.0, 121),
    },
    "fig2a": {
        "chi": 0.25,
        "nu": 0.25,
        "e_min": 10.0,
        "eta": 2.0,
        "s_star": 4.2856,
        "s0": 15.0,
        "criterion": f"plateau:{CAL_DELTA_CHI025!r}",
        "max_iters": 2000,
    },
    "fig2b": {
        "chi": 1.75,
        "nu": 0.25,
        "e_min": 10.0,
        "eta": 2.0,
        "s_star": 4.2856,
        "s0": 15.0,
        "criterion": f"plateau:{CAL_DELTA_CHI175!r}",
        "max_iters": 2000,
    },
}


def preset_names() -> list:
    return sorted(PRESETS)
