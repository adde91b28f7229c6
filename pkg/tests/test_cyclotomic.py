"""Tests for exact arithmetic in Z[zeta_M] and modular fingerprints"""
import unittest

from sympy import isprime, primefactors

from models.cyclotomic import (
    CyclotomicFingerprint,
    CyclotomicValue,
    cyclotomic_coefficients,
    cyclotomic_degree,
)
from models.errors import ParameterError


# ---------------------------------------------------------------------------
class TestCyclotomicPolynomials(unittest.TestCase):

    def test_small_polynomials(self):
        """Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_8 = x^4 + 1."""
        self.assertEqual(cyclotomic_coefficients(1), (1, -1))
        self.assertEqual(cyclotomic_coefficients(4), (1, 0, 1))
        self.assertEqual(cyclotomic_coefficients(8), (1, 0, 0, 0, 1))

    def test_degree_is_totient(self):
        """deg Phi_M = phi(M)."""
        self.assertEqual(cyclotomic_degree(1), 1)
        self.assertEqual(cyclotomic_degree(15), 8)
        self.assertEqual(cyclotomic_degree(80), 32)

    def test_rejects_zero(self):
        """M must be positive."""
        with self.assertRaises(ParameterError):
            cyclotomic_coefficients(0)


# ---------------------------------------------------------------------------
class TestCyclotomicValue(unittest.TestCase):

    def test_half_turn(self):
        """zeta_8^4 = -1."""
        value = CyclotomicValue.from_exponents(8, [4])
        self.assertEqual(value.coefficients, (-1, 0, 0, 0))

    def test_cancellation(self):
        """zeta_8 + zeta_8^5 = 0."""
        self.assertTrue(CyclotomicValue.from_exponents(8, [1, 5]).is_zero)

    def test_sum_of_roots(self):
        """1 + zeta_3 + zeta_3^2 = 0."""
        self.assertTrue(CyclotomicValue.from_exponents(3, [0, 1, 2]).is_zero)

    def test_modulus_one_is_integers(self):
        """Z[zeta_1] = Z."""
        self.assertEqual(CyclotomicValue.from_exponents(1, [0, 0, 0]).coefficients, (3,))

    def test_modulus_two(self):
        """zeta_2 = -1."""
        self.assertEqual(CyclotomicValue.from_exponents(2, [1]).coefficients, (-1,))

    def test_exponents_folded(self):
        """Exponents are taken mod M."""
        self.assertEqual(CyclotomicValue.from_exponents(8, [9]), CyclotomicValue.from_exponents(8, [1]))
        self.assertEqual(CyclotomicValue.from_exponents(8, [-1]), CyclotomicValue.from_exponents(8, [7]))

    def test_sign(self):
        """sign = -1 negates every coefficient."""
        plus = CyclotomicValue.from_exponents(8, [1, 3])
        minus = CyclotomicValue.from_exponents(8, [1, 3], sign=-1)
        self.assertEqual(minus, -plus)
        self.assertEqual(minus.coefficients, (0, -1, 0, -1))

    def test_arithmetic(self):
        """Addition and subtraction are coefficientwise."""
        a = CyclotomicValue.from_exponents(15, [1, 2])
        b = CyclotomicValue.from_exponents(15, [2, 4])
        self.assertEqual(a + b, CyclotomicValue.from_exponents(15, [1, 2, 2, 4]))
        self.assertTrue((a - a).is_zero)
        self.assertEqual(a + CyclotomicValue.zero(15), a)

    def test_mixed_moduli(self):
        """Values of different rings do not combine."""
        with self.assertRaises(ParameterError):
            CyclotomicValue.from_exponents(8, [1]) + CyclotomicValue.from_exponents(3, [1])

    def test_length_checked(self):
        """The power basis has phi(M) entries."""
        with self.assertRaises(ParameterError):
            CyclotomicValue(8, (1, 2))

    def test_approximation(self):
        """zeta_4 is approximately i."""
        value = CyclotomicValue.from_exponents(4, [1])
        self.assertAlmostEqual(value.approximate(), 1j)
        self.assertEqual(value.approximate_text(), "0.000000000000+1.000000000000i")

    def test_negative_zero_printed_as_zero(self):
        """Zero prints without a sign."""
        self.assertEqual(CyclotomicValue.zero(8).approximate_text(), "0.000000000000+0.000000000000i")

    def test_to_dict(self):
        """Records carry the exact vector and a labeled approximation."""
        record = CyclotomicValue.from_exponents(8, [4]).to_dict()
        self.assertEqual(record["modulus"], 8)
        self.assertEqual(record["coefficients"], [-1, 0, 0, 0])
        self.assertEqual(record["approx_decimal"], "-1.000000000000+0.000000000000i")

    def test_str(self):
        """Text form lists nonzero terms."""
        self.assertEqual(str(CyclotomicValue.zero(8)), "0")
        self.assertEqual(str(CyclotomicValue.from_exponents(8, [0, 1])), "1 + 1*z^1")

    def test_exponents_agree_with_dense_reduction(self):
        """Sparse reduction of a few exponents matches reducing the dense polynomial."""
        for modulus in (1, 2, 3, 8, 12, 15, 21, 63, 80, 255, 624):
            exponents = [(7 * i * i + 3 * i + 1) % (3 * modulus) for i in range(6)] + [modulus - 1]
            dense = [0] * (max(exponents) + 1)
            for e in exponents:
                dense[e] += 1
            for sign in (1, -1):
                expected = CyclotomicValue.reduce(modulus, [sign * c for c in dense])
                self.assertEqual(CyclotomicValue.from_exponents(modulus, exponents, sign), expected, msg=str(modulus))

    def test_large_modulus(self):
        """A handful of exponents over M = 2^12 - 1 reduces without a dense pass."""
        modulus = 2 ** 12 - 1
        orbit = [2 ** i for i in range(12)]
        value = CyclotomicValue.from_exponents(modulus, orbit)
        self.assertEqual(len(value.coefficients), cyclotomic_degree(modulus))
        self.assertEqual(value, CyclotomicValue.from_exponents(modulus, [2 * e for e in orbit]))
        fingerprint = CyclotomicFingerprint(modulus)
        self.assertEqual(fingerprint.of_value(value), fingerprint.of_exponents(orbit))


# ---------------------------------------------------------------------------
class TestFingerprint(unittest.TestCase):

    def test_prime_and_root(self):
        """P = 1 mod M is prime and omega has order exactly M."""
        for modulus in (1, 2, 3, 8, 15, 80, 255):
            fingerprint = CyclotomicFingerprint(modulus)
            P = fingerprint.prime
            self.assertTrue(isprime(P))
            self.assertEqual((P - 1) % modulus, 0)
            self.assertEqual(pow(fingerprint.root, modulus, P), 1)
            for r in primefactors(modulus):
                self.assertNotEqual(pow(fingerprint.root, modulus // r, P), 1)

    def test_homomorphism(self):
        """Fingerprint of the reduced value equals fingerprint of the exponents."""
        fingerprint = CyclotomicFingerprint(15)
        for exponents in ([1, 2, 4, 8], [0, 5, 10], [3, 3, 7], [14]):
            value = CyclotomicValue.from_exponents(15, exponents)
            self.assertEqual(fingerprint.of_value(value), fingerprint.of_exponents(exponents))

    def test_zero_maps_to_zero(self):
        """1 + zeta_3 + zeta_3^2 has fingerprint 0."""
        fingerprint = CyclotomicFingerprint(3)
        self.assertEqual(fingerprint.of_exponents([0, 1, 2]), 0)

    def test_wrong_modulus(self):
        """A fingerprint only reads values of its own ring."""
        with self.assertRaises(ParameterError):
            CyclotomicFingerprint(8).of_value(CyclotomicValue.zero(15))


if __name__ == "__main__":
    unittest.main()
