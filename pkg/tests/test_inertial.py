"""Tests for simple inertial triples, lifts and beta-extension labels"""
import random
import unittest

from models.errors import ParameterError
from models.inertial import (
    BetaExtensionLabel,
    EndoClassDescriptor,
    LiftIndex,
    Side,
    SimpleInertialTriple,
    beta_twist_level_zero,
    beta_twist_triple,
    canonical_beta_label,
    canonical_triple,
    change_lift,
    epsilon_gal,
    equivalent_presentations,
    inflate_simple,
    level_zero_twist,
    level_zero_twist_triple,
    multiplicity,
    parametric_degree,
    rec_inverse,
    rec_triple,
    reduce_triple_mod_ell,
    residue_context,
    triples_equal,
)
from models.lattice import FieldSpec
from tests.factories import random_triple

UNRAMIFIED_2 = EndoClassDescriptor(p=2, q=2, delta=2, e=1, f=2)


# ---------------------------------------------------------------------------
class TestDescriptors(unittest.TestCase):

    def test_valid(self):
        """delta = e*f and p^r | delta."""
        endo = EndoClassDescriptor(3, 3, 6, 2, 3, 1)
        self.assertEqual(endo.wild_degree, 3)
        self.assertEqual(endo.tame_degree, 2)
        self.assertEqual(endo.residue_q, 27)

    def test_e_times_f(self):
        """e*f must equal delta."""
        with self.assertRaises(ParameterError):
            EndoClassDescriptor(2, 2, 4, 1, 2)

    def test_wild_degree_divides(self):
        """p^r = 3 does not divide delta = 2."""
        with self.assertRaises(ParameterError):
            EndoClassDescriptor(3, 3, 2, 2, 1, 1)

    def test_q_power_of_p(self):
        """q = 3 is not a power of 2."""
        with self.assertRaises(ParameterError):
            EndoClassDescriptor(2, 3, 1, 1, 1)

    def test_residue_context(self):
        """delta = f = 2 over q = 2, n = 4: degree 2 over F_4, M = 15."""
        context = residue_context(UNRAMIFIED_2, 4)
        self.assertEqual(context, FieldSpec(2, 4, 2))
        with self.assertRaises(ParameterError):
            residue_context(UNRAMIFIED_2, 3)

    def test_lift_index_range(self):
        """Lifts are residues mod f."""
        with self.assertRaises(ParameterError):
            LiftIndex(2, 2)
        self.assertEqual(LiftIndex(1, 2).shifted(1), LiftIndex(0, 2))


# ---------------------------------------------------------------------------
class TestTriples(unittest.TestCase):

    def test_build_validates_orbit_field(self):
        """The orbit has to live in the residue context."""
        with self.assertRaises(ParameterError):
            SimpleInertialTriple(4, UNRAMIFIED_2, LiftIndex(0, 2), FieldSpec(3, 3, 2).orbit_of(1))

    def test_multiplicity(self):
        """Orbit {5} over base 4 is Frobenius fixed: m = 2."""
        t = SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 5)
        self.assertEqual(t.orbit.members, (5,))
        self.assertEqual(multiplicity(t), 2)
        self.assertEqual(parametric_degree(t), 1)

    def test_regular_multiplicity_one(self):
        """Regular orbits give supercuspidal classes."""
        t = SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 1)
        self.assertEqual(multiplicity(t), 1)
        self.assertEqual(parametric_degree(t), 2)

    def test_trivial_orbit(self):
        """{0} with n/delta = 2 has m = 2."""
        self.assertEqual(multiplicity(SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 0)), 2)

    def test_change_lift(self):
        """Base 2, f = 2, context F_4: {1} moves to {2} with the lift."""
        t = SimpleInertialTriple.build(2, UNRAMIFIED_2, 0, 1)
        moved = change_lift(t, 1)
        self.assertEqual(moved.lift.gamma, 1)
        self.assertEqual(moved.orbit.members, (2,))

    def test_canonical_triple(self):
        """(lift 1, {2}) normalizes to (lift 0, {1})."""
        t = SimpleInertialTriple.build(2, UNRAMIFIED_2, 1, 2)
        canonical = canonical_triple(t)
        self.assertEqual((canonical.lift.gamma, canonical.orbit.members), (0, (1,)))

    def test_canonical_of_trivial_orbit(self):
        """(lift 1, {0}) normalizes to (lift 0, {0})."""
        t = SimpleInertialTriple.build(2, UNRAMIFIED_2, 1, 0)
        self.assertEqual(canonical_triple(t), SimpleInertialTriple.build(2, UNRAMIFIED_2, 0, 0))

    def test_equality(self):
        """Equality goes through canonical presentations."""
        t = SimpleInertialTriple.build(2, UNRAMIFIED_2, 0, 1)
        self.assertTrue(triples_equal(t, change_lift(t, 1)))
        self.assertFalse(triples_equal(t, SimpleInertialTriple.build(2, UNRAMIFIED_2, 0, 0)))

    def test_equality_sees_descriptor(self):
        """Same orbit, different wild exponent: different classes."""
        tame = SimpleInertialTriple.build(2, EndoClassDescriptor(2, 2, 2, 2, 1, 0), 0, 1)
        wild = SimpleInertialTriple.build(2, EndoClassDescriptor(2, 2, 2, 2, 1, 1), 0, 1)
        self.assertFalse(triples_equal(tame, wild))

    def test_equality_across_sides(self):
        """GL and Galois triples are not compared."""
        t = SimpleInertialTriple.build(2, UNRAMIFIED_2, 0, 1)
        with self.assertRaises(ParameterError):
            triples_equal(t, rec_triple(t))

    def test_fiber(self):
        """An f = 2 class has two presentations."""
        t = SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 1)
        fiber = equivalent_presentations(t)
        self.assertEqual(len(fiber), 2)
        self.assertEqual([p.lift.gamma for p in fiber], [0, 1])


# ---------------------------------------------------------------------------
class TestLevelZeroMaps(unittest.TestCase):

    def test_twist_moves(self):
        """Base 4, M = 15, p = 2, r = 1: {1,4} goes to {2,8}."""
        endo = EndoClassDescriptor(2, 4, 2, 2, 1, 1)
        t = SimpleInertialTriple.build(4, endo, 0, 1)
        self.assertEqual(t.context.M, 15)
        twisted = level_zero_twist_triple(t)
        self.assertEqual(twisted.orbit.members, (2, 8))
        self.assertEqual(level_zero_twist_triple(twisted, inverse=True), t)

    def test_twist_fixing(self):
        """Base 3, M = 8, p = 3, r = 1: {2,6} is mapped to itself."""
        endo = EndoClassDescriptor(3, 3, 3, 3, 1, 1)
        orbit = FieldSpec(3, 3, 2).orbit_of(2)
        self.assertEqual(level_zero_twist(endo, orbit), orbit)

    def test_tame_twist_is_identity(self):
        """r = 0 leaves every orbit alone."""
        endo = EndoClassDescriptor(3, 3, 2, 2, 1, 0)
        field = FieldSpec(3, 3, 1)
        for orbit in field.enumerate_orbits():
            self.assertEqual(level_zero_twist(endo, orbit), orbit)

    def test_inflate_simple(self):
        """{1} over M = 3 (base 4) inflates to {5} over M = 15."""
        t0 = SimpleInertialTriple.build(2, UNRAMIFIED_2, 0, 1)
        t = inflate_simple(t0, 2)
        self.assertEqual((t.n, t.orbit.members), (4, (5,)))
        self.assertEqual(multiplicity(t), 2)

    def test_inflate_trivial(self):
        """GL_1 over F_2, orbit {0}, m = 2: orbit {0} over M = 3."""
        endo = EndoClassDescriptor(2, 2, 1, 1, 1)
        t = inflate_simple(SimpleInertialTriple.build(1, endo, 0, 0), 2)
        self.assertEqual(t.context.M, 3)
        self.assertEqual(t.orbit.members, (0,))
        self.assertEqual(multiplicity(t), 2)

    def test_inflate_identity(self):
        """m = 1 keeps the triple."""
        t0 = SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 1)
        self.assertEqual(inflate_simple(t0, 1), t0)

    def test_inflate_needs_regular(self):
        """Non-regular classes are not inflated."""
        with self.assertRaises(ParameterError):
            inflate_simple(SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 5), 2)

    def test_inflate_multiplicity_law(self):
        """multiplicity(inflate_simple(t0, m)) = m for regular t0."""
        endo = EndoClassDescriptor(3, 3, 1, 1, 1)
        for k in range(1, 8):
            t0 = SimpleInertialTriple.build(2, endo, 0, k)
            if not t0.orbit.is_regular:
                continue
            for m in (1, 2, 3):
                self.assertEqual(multiplicity(inflate_simple(t0, m)), m)


# ---------------------------------------------------------------------------
class TestBetaExtensions(unittest.TestCase):

    def test_beta_twist(self):
        """Context M = 8 base 3, s = 1: {1,3} goes to {5,7}."""
        orbit = FieldSpec(3, 3, 2).orbit_of(1)
        self.assertEqual(beta_twist_level_zero(orbit, 1).members, (5, 7))
        self.assertEqual(beta_twist_level_zero(orbit, 0), orbit)

    def test_beta_twist_inverse(self):
        """Twisting by s and then -s is the identity."""
        field = FieldSpec(5, 5, 2)
        for orbit in field.enumerate_orbits():
            for s in range(4):
                self.assertEqual(beta_twist_level_zero(beta_twist_level_zero(orbit, s), -s), orbit)

    def test_beta_twist_triple(self):
        """Triples twist through their orbit."""
        endo = EndoClassDescriptor(3, 3, 1, 1, 1)
        t = SimpleInertialTriple.build(2, endo, 0, 1)
        self.assertEqual(beta_twist_triple(t, 1).orbit.members, (5, 7))

    def test_epsilon_gal(self):
        """Quadratic exactly when p is odd and the tame degree is even."""
        self.assertEqual(epsilon_gal(EndoClassDescriptor(2, 2, 2, 1, 2)), 0)
        self.assertEqual(epsilon_gal(EndoClassDescriptor(3, 3, 2, 1, 2)), 4)
        self.assertEqual(epsilon_gal(EndoClassDescriptor(3, 9, 2, 1, 2)), 40)
        self.assertEqual(epsilon_gal(EndoClassDescriptor(3, 3, 3, 3, 1, 1)), 0)

    def test_canonical_label_p2(self):
        """For p = 2 the canonical beta-extension is the p-primary one."""
        label = canonical_beta_label(EndoClassDescriptor(2, 4, 2, 2, 1))
        self.assertEqual(label.twist, 0)

    def test_canonical_label_quadratic(self):
        """p = 3, f = 1, tame degree 2: twist (3-1)/2 = 1."""
        endo = EndoClassDescriptor(3, 3, 2, 2, 1)
        self.assertEqual(canonical_beta_label(endo).twist, 1)
        self.assertEqual(canonical_beta_label(endo, eps1_flag=True).twist, 0)

    def test_eps1_needs_odd_residue_field(self):
        """F_2^x has no quadratic character."""
        with self.assertRaises(ParameterError):
            canonical_beta_label(EndoClassDescriptor(2, 2, 1, 1, 1), eps1_flag=True)

    def test_label_range(self):
        """Twists are residues mod q^f - 1."""
        with self.assertRaises(ParameterError):
            BetaExtensionLabel(EndoClassDescriptor(3, 3, 1, 1, 1), 2)
        record = canonical_beta_label(EndoClassDescriptor(3, 3, 2, 1, 2)).to_dict()
        self.assertEqual(record["twist"], 4)
        self.assertFalse(record["eps1"])


# ---------------------------------------------------------------------------
class TestRecAndReduction(unittest.TestCase):

    def test_rec(self):
        """rec keeps the data and switches the side."""
        t = SimpleInertialTriple.build(4, UNRAMIFIED_2, 1, 3)
        galois = rec_triple(t)
        self.assertIs(galois.side, Side.GALOIS)
        self.assertEqual((galois.n, galois.endo, galois.lift, galois.orbit), (t.n, t.endo, t.lift, t.orbit))
        self.assertEqual(rec_inverse(galois), t)

    def test_rec_wrong_side(self):
        """rec takes GL triples, its inverse Galois ones."""
        t = SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 1)
        with self.assertRaises(ParameterError):
            rec_triple(rec_triple(t))
        with self.assertRaises(ParameterError):
            rec_inverse(t)

    def test_reduce_gl2_f3(self):
        """Trivial endo-class, q = 3, n = 2, {1,3} mod 2 is {0}."""
        endo = EndoClassDescriptor(3, 3, 1, 1, 1)
        t = SimpleInertialTriple.build(2, endo, 0, 1)
        reduced = reduce_triple_mod_ell(t, 2)
        self.assertEqual(reduced.orbit.members, (0,))
        self.assertEqual(reduced.char, 2)
        self.assertEqual(reduce_triple_mod_ell(reduced, 2), reduced)

    def test_reduce_ell_not_dividing(self):
        """7 does not divide M = 15: the orbit is kept."""
        t = SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 1)
        self.assertEqual(reduce_triple_mod_ell(t, 7).orbit, t.orbit)

    def test_reduce_ell_equal_p(self):
        """ell = p is rejected."""
        with self.assertRaises(ParameterError):
            reduce_triple_mod_ell(SimpleInertialTriple.build(4, UNRAMIFIED_2, 0, 1), 2)

    def test_char_must_be_ell_regular(self):
        """A characteristic 2 triple needs a 2-regular orbit."""
        endo = EndoClassDescriptor(3, 3, 1, 1, 1)
        with self.assertRaises(ParameterError):
            SimpleInertialTriple.build(2, endo, 0, 1, char=2)


# ---------------------------------------------------------------------------
class TestRandomizedLaws(unittest.TestCase):

    def setUp(self):
        rng = random.Random(20240611)
        self.rng = rng
        self.triples = [random_triple(rng) for _ in range(1000)]

    def test_torsor_composition(self):
        """change_lift(change_lift(t, a), b) = change_lift(t, a + b)."""
        for t in self.triples:
            a, b = self.rng.randrange(-5, 6), self.rng.randrange(-5, 6)
            self.assertEqual(change_lift(change_lift(t, a), b), change_lift(t, a + b))

    def test_torsor_periodicity(self):
        """change_lift(t, f) = t."""
        for t in self.triples:
            self.assertEqual(change_lift(t, t.endo.f), t)

    def test_canonical_constant_on_fiber(self):
        """canonical_triple is constant on the f presentations."""
        for t in self.triples:
            fiber = equivalent_presentations(t)
            self.assertEqual(len(fiber), t.endo.f)
            canonical = canonical_triple(t)
            self.assertEqual(canonical.lift.gamma, 0)
            for presentation in fiber:
                self.assertEqual(canonical_triple(presentation), canonical)
                self.assertTrue(triples_equal(presentation, t))

    def test_rec_commutes(self):
        """rec commutes with lifts, twists and reduction."""
        for t in self.triples:
            gl = t if t.side is Side.GL else rec_inverse(t)
            shift = self.rng.randrange(gl.endo.f)
            s = self.rng.randrange(gl.endo.residue_q - 1)
            self.assertEqual(rec_triple(change_lift(gl, shift)), change_lift(rec_triple(gl), shift))
            self.assertEqual(rec_triple(beta_twist_triple(gl, s)), beta_twist_triple(rec_triple(gl), s))
            self.assertEqual(rec_triple(level_zero_twist_triple(gl)), level_zero_twist_triple(rec_triple(gl)))
            self.assertEqual(rec_triple(canonical_triple(gl)), canonical_triple(rec_triple(gl)))
            for ell in (2, 3, 5, 7, 11):
                if ell != gl.endo.p:
                    self.assertEqual(rec_triple(reduce_triple_mod_ell(gl, ell)),
                                     reduce_triple_mod_ell(rec_triple(gl), ell))
                    break

    def test_reduction_commutes_with_lift(self):
        """Reducing mod ell commutes with change_lift."""
        for t in self.triples:
            ell = 2 if t.endo.p != 2 else 3
            self.assertEqual(reduce_triple_mod_ell(change_lift(t, 1), ell),
                             change_lift(reduce_triple_mod_ell(t, ell), 1))

    def test_twists_preserve_multiplicity(self):
        """beta twists and the level zero twist keep the parametric degree."""
        for t in self.triples:
            s = self.rng.randrange(t.endo.residue_q - 1)
            self.assertEqual(parametric_degree(beta_twist_triple(t, s)), parametric_degree(t))
            self.assertEqual(multiplicity(level_zero_twist_triple(t)), multiplicity(t))


if __name__ == "__main__":
    unittest.main()
