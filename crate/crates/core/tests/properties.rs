use proptest::prelude::*;

use qleech_core::diagram::roots14;
use qleech_core::heightred::{reduce, HeightKey, Heights};
use qleech_core::reflect::{self, Reflection};
use qleech_core::{make_lattice, Hq, LVec, LatticeName};

const UNITS: [[i64; 4]; 7] = [[0, 2, 0, 0], [0, -2, 0, 0], [0, 0, 2, 0], [0, 0, -2, 0], [0, 0, 0, 2], [0, 0, 0, -2], [-2, 0, 0, 0]];

fn hq() -> impl Strategy<Value = Hq> {
    (any::<bool>(), prop::array::uniform4(-3i64..=3))
        .prop_map(|(odd, x)| Hq::from_doubled(x.map(|c| 2 * c + i64::from(odd))).unwrap())
}

fn vec8() -> impl Strategy<Value = LVec> {
    prop::collection::vec(hq(), 8).prop_map(LVec::new)
}

fn unit() -> impl Strategy<Value = Hq> {
    (0..7usize).prop_map(|s| Hq::from_doubled(UNITS[s]).unwrap())
}

/// Hamilton product on doubled coordinates.
fn hamilton(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
    .map(|c| c / 2)
}

proptest! {
    #[test]
    fn product_matches_hamilton(a in hq(), b in hq()) {
        prop_assert_eq!((a * b).doubled(), hamilton(a.doubled(), b.doubled()));
    }

    #[test]
    fn norm_is_multiplicative(a in hq(), b in hq(), c in hq()) {
        prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
        prop_assert_eq!((a * b).conj(), b.conj() * a.conj());
        prop_assert_eq!((a * b) * c, a * (b * c));
    }

    #[test]
    fn text_round_trip(v in vec8()) {
        prop_assert_eq!(v.to_string().parse::<LVec>().unwrap(), v);
    }

    #[test]
    fn inner_product_is_sesquilinear(x in vec8(), y in vec8(), a in hq(), b in hq()) {
        let lat = make_lattice(LatticeName::L3E8H);
        let xy = lat.inner(&x, &y).unwrap();
        prop_assert_eq!(lat.inner(&y, &x).unwrap(), xy.conj());
        prop_assert_eq!(lat.inner(&x.mul_right(a), &y.mul_right(b)).unwrap(), a.conj() * xy * b);
        prop_assert_eq!(lat.inner(&(&x + &y), &y).unwrap(), xy + lat.inner(&y, &y).unwrap());
    }

    #[test]
    fn diagram_reflections_are_isometries(s in 0..14usize, mu in unit(), v in vec8(), w in vec8()) {
        let d = roots14();
        let lat = &d.lattice;
        let phi = Reflection::new(lat, d.roots[s].clone(), mu).unwrap();
        prop_assert_eq!(lat.inner(&phi.apply(lat, &v), &phi.apply(lat, &w)).unwrap(), lat.inner(&v, &w).unwrap());
        prop_assert_eq!(phi.apply(lat, &d.roots[s]), d.roots[s].mul_right(mu));
        // nodes of the same kind are orthogonal, so they are fixed
        let other = if s < 7 { (s + 1) % 7 } else { 7 + (s - 6) % 7 };
        prop_assert_eq!(phi.apply(lat, &d.roots[other]), d.roots[other].clone());
        let m = phi.matrix(lat);
        prop_assert!(reflect::is_automorphism_hq(lat, &m));
        prop_assert_eq!(LVec::new(m.mul_vec(&v.coords)), phi.apply(lat, &v));
    }

    #[test]
    fn height_key_order_agrees_with_floats(a in -200i64..200, b in -200i64..200, c in -200i64..200, d in -200i64..200) {
        let (x, y) = (HeightKey { n: a, m2: b }, HeightKey { n: c, m2: d });
        let (fx, fy) = (x.x().to_f64(), y.x().to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        } else {
            prop_assert_eq!(x == y, a == c && b == d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Words in diagram reflections applied to a diagram root give roots of
    /// height at least one that reduce back to the diagram.
    #[test]
    fn random_roots_reduce(start in 0..14usize, word in prop::collection::vec((0..14usize, unit()), 0..8)) {
        let h = Heights::new(roots14()).unwrap();
        let lat = h.lattice();
        let mut r = h.diagram.roots[start].clone();
        for (s, mu) in word {
            r = reflect::reflect_vec(lat, &h.diagram.roots[s], mu, &r).unwrap();
        }
        prop_assert_eq!(lat.norm(&r), -2);
        prop_assert!(h.key(&r) >= HeightKey::ONE);
        let t = reduce(&h, &r).unwrap();
        prop_assert!(t.perturbations <= 1);
        prop_assert_eq!(h.key(&t.terminal), HeightKey::ONE);
        prop_assert!(h.unit_multiple_of_diagram_root(&t.terminal).is_some());
    }
}
