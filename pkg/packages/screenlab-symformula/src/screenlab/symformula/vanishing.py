import math

from screenlab.core import inversions, parse_rational, phase_eval, shuffles


def alternating_shuffle_sum(n: int, q: complex, w: complex) -> complex:
    """
    Σ_k (−1)^k w^{n−k} Σ_{η ∈ S_{k,n−k}} q^{ℓ(η)}.

    Vanishes whenever w = q^{−(n−1)}: pairing the shuffles that differ in where
    the letter n goes cancels every term.
    """
    total = 0j
    for k in range(n + 1):
        inner = sum((q ** len(inversions(eta)) for eta in shuffles(k, n)), 0j)
        total += (-1) ** k * w ** (n - k) * inner
    return total


def vanishing_coefficient(n: int, m_i, m_ij) -> complex:
    """
    The Selberg-free coefficient of F̃₋ for equal m_i and equal m_ij,
    (2πi)⁻ⁿ Σ_k (−1)^k e^{2πi m_i (n−k)} Σ_η ∏_{inversions} e^{πi m_ij}.

    Zero when 2m_i + (n−1)m_ij ∈ 2ℤ.
    """
    q = phase_eval(parse_rational(m_ij))
    w = phase_eval(2 * parse_rational(m_i))
    return alternating_shuffle_sum(n, q, w) / (2j * math.pi) ** n
