import math
import pickle
import random
import unittest
from fractions import Fraction
from gaussharmonic.tools import (
    GaussianInt, GaussianRational, I, reciprocal, valuation, valuation_int, valuation_fraction,
    valuation_rat, is_p_integral, GaussianZeroDivisionError, InvalidBaseError,
)


class TestGaussianInt(unittest.TestCase):
    def test_arithmetic(self):
        self.z1 = GaussianInt(1, 2)
        self.z2 = GaussianInt(3, -1)

        self.assertEqual(self.z1 + self.z2, GaussianInt(4, 1))
        self.assertEqual(self.z1 - self.z2, GaussianInt(-2, 3))
        self.assertEqual(self.z1 * self.z2, GaussianInt(5, 5))
        self.assertEqual(3 - self.z1, GaussianInt(2, -2))
        self.assertEqual(2 * self.z1, GaussianInt(2, 4))
        self.assertEqual(I * I, -1)
        self.assertEqual(GaussianInt(1, 1) ** 4, -4)
        self.assertEqual(self.z1 ** 0, 1)

    def test_norm_conjugate(self):
        self.z = GaussianInt(3, 4)
        self.assertEqual(self.z.norm(), 25)
        self.assertEqual(self.z.conjugate(), GaussianInt(3, -4))
        self.assertEqual(self.z * self.z.conjugate(), 25)

    def test_negative_power(self):
        with self.assertRaises(ValueError):
            GaussianInt(1, 1) ** -1

    def test_str(self):
        self.assertEqual(str(GaussianInt(1, 1)), '1+i')
        self.assertEqual(str(GaussianInt(0, -1)), '-i')
        self.assertEqual(str(GaussianInt(0, 2)), '2i')
        self.assertEqual(str(GaussianInt(-27, 27)), '-27+27i')
        self.assertEqual(str(GaussianInt(5)), '5')

    def test_hash_pickle(self):
        self.z = GaussianInt(7, -3)
        self.assertEqual(len({self.z, GaussianInt(7, -3)}), 1)
        self.assertEqual(pickle.loads(pickle.dumps(self.z)), self.z)

    def test_hash_matches_equality(self):
        self.assertEqual(GaussianInt(3), 3)
        self.assertEqual(hash(GaussianInt(3)), hash(3))
        self.assertEqual(len({GaussianInt(3), 3}), 1)
        self.assertEqual(hash(GaussianInt(-5, 0)), hash(-5))
        self.assertEqual(hash(GaussianRational(3)), hash(3))
        self.assertEqual(hash(GaussianRational(GaussianInt(1, 1))), hash(GaussianInt(1, 1)))
        self.assertEqual(GaussianRational(1, 2), Fraction(1, 2))
        self.assertEqual(hash(GaussianRational(1, 2)), hash(Fraction(1, 2)))


class TestGaussianRational(unittest.TestCase):
    def test_canonical_form(self):
        self.q1 = GaussianRational(GaussianInt(2, 4), 6)
        self.assertEqual(self.q1.num, GaussianInt(1, 2))
        self.assertEqual(self.q1.den, 3)

        self.q2 = GaussianRational(GaussianInt(1, 1), -2)
        self.assertEqual(self.q2.num, GaussianInt(-1, -1))
        self.assertEqual(self.q2.den, 2)

        self.assertEqual(GaussianRational(0, 7).den, 1)

    def test_zero_denominator(self):
        with self.assertRaises(GaussianZeroDivisionError):
            GaussianRational(1, 0)
        with self.assertRaises(ZeroDivisionError):
            GaussianRational(1) / 0

    def test_reciprocal(self):
        self.assertEqual(str(reciprocal(GaussianInt(1, 2))), '(1-2i)/5')
        self.assertEqual(str(reciprocal(GaussianInt(2, 2))), '(1-i)/4')
        self.assertEqual(reciprocal(I), -I)
        for re, im in ((1, 2), (3, -7), (-4, 5), (6, 0)):
            self.z = GaussianInt(re, im)
            self.assertEqual(reciprocal(self.z) * self.z, 1)
        with self.assertRaises(GaussianZeroDivisionError):
            reciprocal(GaussianInt(0, 0))

    def test_arithmetic(self):
        self.half = GaussianRational(1, 2)
        self.third = GaussianRational(I, 3)
        self.assertEqual(self.half + self.third, GaussianRational(GaussianInt(3, 2), 6))
        self.assertEqual((self.half + self.third) - self.third, self.half)
        self.assertEqual(self.half * 2, 1)
        self.assertEqual(1 / GaussianRational(GaussianInt(1, 1)), GaussianRational(GaussianInt(1, -1), 2))

    def test_fractions(self):
        self.q = GaussianRational.from_fractions(Fraction(1, 2), Fraction(-1, 3))
        self.assertEqual(self.q.real, Fraction(1, 2))
        self.assertEqual(self.q.imag, Fraction(-1, 3))
        self.assertEqual(self.q.den, 6)
        self.assertEqual(GaussianRational.coerce(Fraction(3, 4)), GaussianRational(3, 4))


class TestValuation(unittest.TestCase):
    def test_integer(self):
        self.assertEqual(valuation(250, 5), 3)
        self.assertEqual(valuation(-49, 7), 2)
        self.assertEqual(valuation(12, 5), 0)
        self.assertEqual(valuation(0, 3), math.inf)
        self.assertEqual(valuation(21 * 21 * 2, 21), 2)

    def test_gaussian(self):
        self.assertEqual(valuation_int(GaussianInt(50, 25), 5), 2)
        self.assertEqual(valuation_int(GaussianInt(0, 0), 13), math.inf)
        self.assertEqual(valuation_int(GaussianInt(9, 1), 3), 0)

    def test_rational(self):
        self.assertEqual(valuation_fraction(Fraction(25, 12), 5), 2)
        self.assertEqual(valuation_fraction(Fraction(1, 25), 5), -2)
        self.assertEqual(valuation_rat(GaussianRational(GaussianInt(49, 98), 3), 7), 2)
        self.assertEqual(valuation_rat(GaussianRational(GaussianInt(1, 1), 49), 7), -2)
        self.assertEqual(valuation_rat(0, 7), math.inf)

    def test_bad_base(self):
        with self.assertRaises(InvalidBaseError):
            valuation(5, 1)
        with self.assertRaises(InvalidBaseError):
            valuation_rat(GaussianRational(1, 2), 0)

    def test_p_integral(self):
        self.assertTrue(is_p_integral(GaussianRational(GaussianInt(39, 0), 5), 7))
        self.assertFalse(is_p_integral(GaussianRational(GaussianInt(39, 0), 5), 5))


class TestProperties(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20240501)

    def random_gaussian(self, bound):
        return GaussianInt(self.rng.randint(-bound, bound), self.rng.randint(-bound, bound))

    def test_norm_multiplicative(self):
        for _ in range(1000):
            self.z1 = self.random_gaussian(2 ** 64)
            self.z2 = self.random_gaussian(2 ** 64)
            self.assertEqual((self.z1 * self.z2).norm(), self.z1.norm() * self.z2.norm())

    def test_product_valuation(self):
        for b in (3, 5, 7, 13, 21, 25):
            for _ in range(200):
                self.z1 = self.random_gaussian(10 ** 6) * b ** self.rng.randint(0, 3)
                self.z2 = self.random_gaussian(10 ** 6) * b ** self.rng.randint(0, 3)
                if not self.z1 or not self.z2:
                    continue
                self.assertGreaterEqual(valuation_int(self.z1 * self.z2, b),
                                        valuation_int(self.z1, b) + valuation_int(self.z2, b))

        # 5 splits in Z[i], so the inequality can be strict.
        self.assertEqual(valuation_int(GaussianInt(2, 1) * GaussianInt(2, -1), 5), 1)
        self.assertEqual(valuation_int(GaussianInt(2, 1), 5) + valuation_int(GaussianInt(2, -1), 5), 0)

    def test_product_valuation_rational(self):
        for _ in range(200):
            self.q1 = GaussianRational(self.random_gaussian(10 ** 4) * 7 ** self.rng.randint(0, 2),
                                       self.rng.randint(1, 10 ** 4))
            self.q2 = GaussianRational(self.random_gaussian(10 ** 4), self.rng.randint(1, 10 ** 4))
            if self.q1.is_zero() or self.q2.is_zero():
                continue
            self.assertGreaterEqual(valuation_rat(self.q1 * self.q2, 7),
                                    valuation_rat(self.q1, 7) + valuation_rat(self.q2, 7))


if __name__ == '__main__':
    unittest.main()
