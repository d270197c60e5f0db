//! Property tests for the algebraic invariants: heredity and spreading
//! under random data, norm axioms, unconditionality, and round-trips of
//! the external encodings.

use num::{BigRational, One, Zero};
use proptest::prelude::*;

use schreier_core::family::{is_member, spread};
use schreier_core::norm::{apply_diagonal, norm, Exponent};
use schreier_core::rational::abs_pow;
use schreier_core::{FinSet, FinVector, Ordinal, SignSeq};

fn ordinal_strategy() -> impl Strategy<Value = Ordinal> {
    (0u32..4, 0u32..6).prop_map(|(q, r)| Ordinal::new(q, r))
}

fn small_order() -> impl Strategy<Value = Ordinal> {
    prop_oneof![
        Just(Ordinal::finite(1)),
        Just(Ordinal::finite(2)),
        Just(Ordinal::finite(3)),
        Just(Ordinal::OMEGA),
        Just(Ordinal::new(1, 1)),
    ]
}

fn finset_strategy(max: u32) -> impl Strategy<Value = FinSet> {
    prop::collection::btree_set(1..=max, 0..8)
        .prop_map(|s| FinSet::new(s.into_iter().collect()).expect("sorted"))
}

fn vector_strategy() -> impl Strategy<Value = FinVector> {
    prop::collection::btree_map(1u32..=12, (-9i64..=9, 1i64..=9), 0..7).prop_map(|m| {
        FinVector::from_pairs(
            m.into_iter()
                .map(|(i, (n, d))| (i, BigRational::new(n.into(), d.into()))),
        )
        .expect("distinct indices")
    })
}

proptest! {
    #[test]
    fn ordinal_string_round_trips(alpha in ordinal_strategy()) {
        let s = alpha.to_string();
        prop_assert_eq!(s.parse::<Ordinal>().unwrap(), alpha);
    }

    #[test]
    fn membership_is_hereditary(f in finset_strategy(14), alpha in small_order(), mask in any::<u16>()) {
        prop_assume!(is_member(&f, alpha));
        let sub: Vec<u32> = f
            .elements()
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        let sub = FinSet::new(sub).unwrap();
        prop_assert!(is_member(&sub, alpha), "{} lost membership below {}", sub, f);
    }

    #[test]
    fn membership_spreads_right(
        f in finset_strategy(10),
        alpha in small_order(),
        shifts in prop::collection::vec(0u32..5, 8),
    ) {
        prop_assume!(!f.is_empty() && is_member(&f, alpha));
        // Build a pointwise >= image by accumulating shifts.
        let mut image = Vec::with_capacity(f.len());
        let mut prev = 0u32;
        for (k, &e) in f.elements().iter().enumerate() {
            let v = e.max(prev + 1) + shifts[k % shifts.len()];
            image.push(v);
            prev = v;
        }
        let image = FinSet::new(image).unwrap();
        let spread_set = spread(&f, &image).unwrap();
        prop_assert!(is_member(&spread_set, alpha), "spread {} of {}", image, f);
    }

    #[test]
    fn diagonal_maps_preserve_norms(
        x in vector_strategy(),
        flips in prop::collection::vec(any::<bool>(), 12),
        alpha in small_order(),
        pe in 1u32..=3,
    ) {
        let theta = SignSeq::new(flips.iter().map(|&b| if b { -1 } else { 1 }).collect()).unwrap();
        let p = Exponent::Exact(pe);
        let tx = apply_diagonal(&theta, &x).unwrap();
        let n1 = norm(&x, alpha, &p).unwrap();
        let n2 = norm(&tx, alpha, &p).unwrap();
        prop_assert_eq!(n1.pth_power(), n2.pth_power());
    }

    #[test]
    fn norm_dominated_by_full_sum(x in vector_strategy(), alpha in small_order(), pe in 1u32..=3) {
        let p = Exponent::Exact(pe);
        let full: BigRational = x.iter().map(|(_, v)| abs_pow(v, pe)).sum();
        let nv = norm(&x, alpha, &p).unwrap();
        let pth = nv.pth_power().unwrap();
        prop_assert!(*pth <= full);
        let support_admissible = is_member(&x.support(), alpha);
        prop_assert_eq!(*pth == full, support_admissible || x.is_zero());
    }

    #[test]
    fn basis_vectors_are_normalized(i in 1u32..=40, alpha in small_order(), pe in 1u32..=3) {
        let nv = norm(&FinVector::basis(i), alpha, &Exponent::Exact(pe)).unwrap();
        prop_assert!(nv.pth_power().unwrap().is_one());
    }

    #[test]
    fn triangle_inequality_holds(x in vector_strategy(), y in vector_strategy(), alpha in small_order(), pe in 1u32..=2) {
        let p = Exponent::Exact(pe);
        let ns = norm(&(&x + &y), alpha, &p).unwrap().approx();
        let nx = norm(&x, alpha, &p).unwrap().approx();
        let ny = norm(&y, alpha, &p).unwrap().approx();
        prop_assert!(ns <= nx + ny + 1e-9);
    }

    #[test]
    fn vector_json_round_trips(x in vector_strategy()) {
        let json = serde_json::to_string(&x).unwrap();
        let back: FinVector = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn finset_json_round_trips(f in finset_strategy(30)) {
        let json = serde_json::to_string(&f).unwrap();
        let back: FinSet = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }
}

