use std::collections::BTreeSet;

use cornerideal::betti::{betti_koszul, taylor_betti};
use cornerideal::combinatorics::{cycle_binomial, enumerate_cycles, IntervalGraph, MinorCollection};
use cornerideal::fibers::{fiber_connected, Connectivity, ContingencyTable, MoveBasis};
use cornerideal::grading::Grading;
use cornerideal::groebner::{hilbert_function_from_slices, IdealGb, Ideal};
use cornerideal::hilbert::{hilbert_of_binomial_quotient, hilbert_of_monomial_quotient};
use cornerideal::primes::{contains_component_pair, enumerate_admissible, minimal_primes, AdmissibleSet};
use cornerideal::{coeff, Caps, Cell, Monomial, Polynomial, Ring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn caps() -> Caps {
    Caps::default()
}

fn poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, nvars), -5i64..=5), 0..5).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), coeff(c))))
    })
}

fn corner_collection(corner: bool) -> impl Strategy<Value = MinorCollection> {
    (2usize..=3, 2usize..=4, 1usize..=4, any::<u64>()).prop_map(move |(m, n, k, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if corner {
            MinorCollection::random_corner(m, n, k, &mut rng)
        } else {
            MinorCollection::random_corner_interval(m, n, k, &mut rng)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn leading_monomials_multiply(a in poly(4), b in poly(4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ring = Ring::new(2, 2);
        for order in [ring.grevlex(), ring.diagonal_lex()] {
            let lhs = (&a * &b).leading_monomial(&order).unwrap();
            let rhs = a.leading_monomial(&order).unwrap().mul(&b.leading_monomial(&order).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every enumerated set passes the admissibility constructor, and a brute
    /// force over all vertex subsets finds exactly the enumerated ones.
    #[test]
    fn admissible_sets_reconstruct(c in corner_collection(false)) {
        let vs = c.vertices();
        prop_assume!(vs.len() <= 12);
        let listed: BTreeSet<Vec<Cell>> = enumerate_admissible(&c, &caps()).unwrap().iter().map(|w| w.cells().to_vec()).collect();
        let mut brute = BTreeSet::new();
        for mask in 0u32..1 << vs.len() {
            let cells: Vec<Cell> = (0..vs.len()).filter(|k| mask >> k & 1 == 1).map(|k| vs[k]).collect();
            if AdmissibleSet::new(&c, cells.clone()).is_ok() {
                brute.insert(cells);
            }
        }
        prop_assert_eq!(listed, brute);
    }

    #[test]
    fn minimal_primes_form_an_antichain(c in corner_collection(false)) {
        prop_assume!(c.vertices().len() <= 10);
        let ps = minimal_primes(&c, &caps()).unwrap();
        for (i, p) in ps.iter().enumerate() {
            for (j, q) in ps.iter().enumerate() {
                if i != j {
                    prop_assert!(!contains_component_pair(p, q, &caps()).unwrap());
                }
            }
        }
    }

    /// x11·f_σ lies in I(C) exactly when σ passes through an interval of x11.
    #[test]
    fn x11_cycle_dichotomy(c in corner_collection(true)) {
        let g = IntervalGraph::new(&c);
        let (Some(h1), Some(v1)) = (g.h1(), g.v1()) else { return Ok(()) };
        let ring = c.ring();
        let longest = 2 * g.h.len().min(g.v.len());
        prop_assume!(longest >= 4);
        let i = IdealGb::new(c.ideal(), &caps()).unwrap();
        let x11 = Monomial::var(ring.var(Cell::new(1, 1)));
        for s in enumerate_cycles(&g, longest, false, &caps()).unwrap() {
            let f = cycle_binomial(&s, &g, &ring).mul_monomial(&x11);
            prop_assert_eq!(i.contains(&f), s.meets_h(h1) || s.meets_v(v1));
        }
    }

    /// Moves keep margins, a move followed by its reverse is the identity,
    /// and a BFS witness replays from u to v.
    #[test]
    fn moves_conserve_margins(c in corner_collection(false), entries in prop::collection::vec(0u32..3, 16), steps in prop::collection::vec((0usize..8, any::<bool>()), 0..6)) {
        let b = MoveBasis::new(&c);
        let u = ContingencyTable::new(b.vertices().iter().copied().zip(entries.iter().copied().cycle()));
        let mut v = u.clone();
        for (k, up) in steps {
            let s = (k % b.len()) as i64 + 1;
            let s = if up { s } else { -s };
            if let Some(next) = b.replay(&v, &[s]) {
                prop_assert!(next.same_margins(&v));
                prop_assert_eq!(b.replay(&next, &[-s]), Some(v.clone()));
                v = next;
            }
        }
        let r = fiber_connected(&u, &v, &b, 100_000).unwrap();
        prop_assert_eq!(r.verdict, Connectivity::Connected);
        prop_assert_eq!(b.replay(&u, r.witness.as_ref().unwrap()), Some(v));
    }

    /// Alternating Betti sums give the K-polynomial, and both Betti routines
    /// agree on monomial ideals.
    #[test]
    fn betti_euler_characteristic(gens in prop::collection::vec(prop::collection::vec(0u16..3, 5), 1..7)) {
        let ring = Ring::new(1, 5);
        let monos: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exponents(e)).filter(|m| !m.is_one()).collect();
        prop_assume!(!monos.is_empty());
        let i = Ideal::monomial(ring, monos).with_vars(0..5);
        let k = betti_koszul(&i, None, None, &caps()).unwrap();
        prop_assert_eq!(&k, &taylor_betti(&i, &caps()).unwrap());
        let h = hilbert_of_monomial_quotient(&i, &caps()).unwrap();
        prop_assert_eq!(k.euler_polynomial(), h.k_polynomial);
    }

    /// The Hilbert function of I(C) from graded slices matches the one read
    /// off its initial ideal.
    #[test]
    fn initial_ideal_keeps_hilbert_function(c in corner_collection(false)) {
        let ring = c.ring();
        let i = c.ideal().with_vars(0..ring.cell_count());
        let h = hilbert_of_binomial_quotient(&i, &ring.grevlex(), &caps()).unwrap();
        let slices = hilbert_function_from_slices(&i, 4, Grading::Standard, &caps()).unwrap();
        prop_assert_eq!(h.hilbert_function(4), slices);
    }
}
