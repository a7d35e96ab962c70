import random
import unittest
from gaussharmonic.tools import (
    GaussianInt, GaussianRational, Modulus, ModGaussian, reduce, mg_inverse, mg_pow, residue_valuation,
    valuation_int,
    InvalidBaseError, MalformedSpecError, NotInvertibleError,
)


class TestModulus(unittest.TestCase):
    def test_modulus(self):
        self.mod = Modulus(7, 3)
        self.assertEqual(self.mod.modulus, 343)
        self.assertEqual(str(self.mod), '7^3')

    def test_bad_modulus(self):
        with self.assertRaises(InvalidBaseError):
            Modulus(1, 3)
        with self.assertRaises(MalformedSpecError):
            Modulus(7, 0)


class TestModGaussian(unittest.TestCase):
    def setUp(self):
        self.mod = Modulus(5, 4)

    def test_reduction(self):
        self.x = ModGaussian(-1, 626, self.mod)
        self.assertEqual((self.x.re, self.x.im), (624, 1))
        self.assertEqual(self.x.signed(), (-1, 1))

    def test_arithmetic(self):
        self.x = ModGaussian(1, 1, self.mod)
        self.assertEqual(self.x ** 4, ModGaussian(-4, 0, self.mod))
        self.assertEqual(self.x * self.x.conjugate(), 2)
        self.assertEqual(self.x + GaussianInt(0, -1), 1)
        self.assertEqual(3 - self.x, ModGaussian(2, -1, self.mod))

    def test_mixed_moduli(self):
        with self.assertRaises(MalformedSpecError):
            ModGaussian(1, 0, self.mod) + ModGaussian(1, 0, Modulus(5, 3))

    def test_inverse(self):
        for re, im in ((1, 1), (3, 7), (2, 0), (0, 4), (12, 5)):
            self.x = ModGaussian(re, im, self.mod)
            self.assertEqual(self.x * mg_inverse(self.x), 1)
        self.assertEqual(mg_inverse(ModGaussian(1, 1, Modulus(3, 1))), ModGaussian(2, 1, Modulus(3, 1)))

    def test_not_invertible(self):
        with self.assertRaises(NotInvertibleError):
            mg_inverse(ModGaussian(1, 2, Modulus(5, 1)))
        with self.assertRaises(NotInvertibleError):
            mg_inverse(ModGaussian(5, 0, self.mod))

    def test_power(self):
        self.x = ModGaussian(2, 3, self.mod)
        self.assertEqual(mg_pow(self.x, 0), 1)
        self.assertEqual(mg_pow(self.x, 5), self.x * self.x * self.x * self.x * self.x)
        with self.assertRaises(MalformedSpecError):
            mg_pow(self.x, -1)


class TestReduce(unittest.TestCase):
    def test_rational(self):
        self.mod = Modulus(7, 2)
        self.q = GaussianRational(GaussianInt(1, 2), 3)
        self.r = reduce(self.q, self.mod)
        self.assertEqual(self.r * 3, ModGaussian(1, 2, self.mod))

    def test_rational_not_invertible(self):
        with self.assertRaises(NotInvertibleError):
            reduce(GaussianRational(1, 7), Modulus(7, 2))

    def test_residue_valuation(self):
        self.mod = Modulus(7, 6)
        self.assertEqual(residue_valuation(ModGaussian(0, 0, self.mod)), (6, True))
        self.assertEqual(residue_valuation(ModGaussian(343, 343, self.mod)), (3, False))
        self.assertEqual(residue_valuation(ModGaussian(49, 343, self.mod)), (2, False))
        self.assertEqual(residue_valuation(ModGaussian(1, 0, self.mod)), (0, False))


class TestProperties(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20240501)

    def test_reduction_homomorphism(self):
        self.mod = Modulus(7, 5)
        for _ in range(500):
            self.z1 = GaussianInt(self.rng.randint(-10 ** 12, 10 ** 12), self.rng.randint(-10 ** 12, 10 ** 12))
            self.z2 = GaussianInt(self.rng.randint(-10 ** 12, 10 ** 12), self.rng.randint(-10 ** 12, 10 ** 12))
            self.assertEqual(reduce(self.z1 + self.z2, self.mod), reduce(self.z1, self.mod) + reduce(self.z2, self.mod))
            self.assertEqual(reduce(self.z1 * self.z2, self.mod), reduce(self.z1, self.mod) * reduce(self.z2, self.mod))

    def test_reduction_homomorphism_rational(self):
        self.mod = Modulus(7, 5)
        for _ in range(500):
            self.q1 = GaussianRational(GaussianInt(self.rng.randint(-999, 999), self.rng.randint(-999, 999)),
                                       7 * self.rng.randint(1, 999) + self.rng.randint(1, 6))
            self.q2 = GaussianRational(GaussianInt(self.rng.randint(-999, 999), self.rng.randint(-999, 999)),
                                       7 * self.rng.randint(1, 999) + self.rng.randint(1, 6))
            self.assertEqual(reduce(self.q1 * self.q2, self.mod), reduce(self.q1, self.mod) * reduce(self.q2, self.mod))
            self.assertEqual(reduce(self.q1 + self.q2, self.mod), reduce(self.q1, self.mod) + reduce(self.q2, self.mod))

    def test_inverse_exhaustive(self):
        self.mod = Modulus(3, 2)
        self.units = 0
        for re in range(9):
            for im in range(9):
                self.x = ModGaussian(re, im, self.mod)
                if re % 3 == 0 and im % 3 == 0:
                    with self.assertRaises(NotInvertibleError):
                        mg_inverse(self.x)
                    continue
                self.units += 1
                self.assertEqual(self.x * mg_inverse(self.x), 1)
                self.assertEqual(mg_inverse(mg_inverse(self.x)), self.x)
        self.assertEqual(self.units, 81 - 9)

    def test_residue_valuation_matches_lift(self):
        self.mod = Modulus(7, 5)
        for e in range(6):
            for _ in range(50):
                self.x = ModGaussian(7 ** e * self.rng.randrange(7 ** 5), 7 ** e * self.rng.randrange(7 ** 5), self.mod)
                if self.x.is_zero():
                    self.assertEqual(residue_valuation(self.x), (5, True))
                else:
                    self.assertEqual(residue_valuation(self.x), (valuation_int(self.x.lift(), 7), False))


if __name__ == '__main__':
    unittest.main()
