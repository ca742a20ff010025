"""What each case of the classification of alpha predicts.

For alpha = p^k c with c a unit and c0 = c mod p, independence of
L1 = xi1 + xi2 and L2 = xi1 + alpha xi2 forces a structure on the
distributions that depends only on k and c0. This table carries the
human-readable conclusion and what the harness checks for each case.
"""

CASE_K0_DEGENERATE = "K0-degenerate"
CASE_K0_IDEMPOTENT = "K0-idempotent"
CASE_K1 = "K1"
CASE_COUNTEREXAMPLE = "K-counterexample"

CASE_TAGS = (CASE_K0_DEGENERATE, CASE_K0_IDEMPOTENT, CASE_K1, CASE_COUNTEREXAMPLE)


CASE_INFO = {
    CASE_K0_DEGENERATE: {
        "friendly_name": "Unit alpha with c0 = 1",
        "applies_when": "k = 0 and c0 = 1 (always the case for p = 2 and k = 0)",
        "conclusion": "mu1 and mu2 are both degenerate distributions.",
        "harness_assertion": "every independent pair consists of two point masses",
        "witness": "none needed: point masses are always independent",
    },
    CASE_K0_IDEMPOTENT: {
        "friendly_name": "Unit alpha with c0 != 1",
        "applies_when": "k = 0 and c0 != 1 (only possible for p > 2)",
        "conclusion": "mu1 and mu2 are both idempotent: mu_j = m_K * E_{x_j} for one compact subgroup K.",
        "harness_assertion": "every independent pair is a pair of shifted Haar distributions of the same ball",
        "witness": "(m_K, m_K) for any ball K",
    },
    CASE_K1: {
        "friendly_name": "|k| = 1",
        "applies_when": "v(alpha) = 1 or v(alpha) = -1",
        "conclusion": "at least one of mu1, mu2 is idempotent; the other need not be.",
        "harness_assertion": "every independent pair has at least one idempotent member",
        "witness": "(m_L1, a m_L1 + (1 - a) m_L0), the second one not idempotent",
    },
    CASE_COUNTEREXAMPLE: {
        "friendly_name": "|k| >= 2",
        "applies_when": "|v(alpha)| >= 2",
        "conclusion": "there are independent pairs with neither mu1 nor mu2 idempotent.",
        "harness_assertion": "none for family sweeps; the constructed pair is checked instead",
        "witness": "a m_L1 + (1 - a) m_L(-k+2) and a m_L(-k+2) + (1 - a) m_L(-k+1)",
    },
}


def get_case_info(tag: str) -> dict:
    """Get the table entry for a case tag.

    Args:
        tag: One of CASE_TAGS

    Returns:
        Dictionary with the case description

    Raises:
        KeyError: unknown tag
    """
    if tag not in CASE_INFO:
        raise KeyError(f"unknown case tag {tag!r}; expected one of {', '.join(CASE_TAGS)}")
    return CASE_INFO[tag]


def get_conclusion(tag: str) -> str:
    return get_case_info(tag)["conclusion"]
