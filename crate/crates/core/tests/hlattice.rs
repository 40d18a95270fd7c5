use std::collections::BTreeSet;

use qleech_core::hlattice::leech_contains;
use qleech_core::{make_lattice, Hq, LVec, LatticeName};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn hurwitz_up_to_norm(n: i64) -> Vec<Hq> {
    (0..=n).flat_map(Hq::of_norm).collect()
}

#[test]
fn e8_roots_by_brute_force() {
    let e8 = make_lattice(LatticeName::E8);
    let small = hurwitz_up_to_norm(2);
    let naive: BTreeSet<Vec<Hq>> = small
        .iter()
        .flat_map(|&x| small.iter().map(move |&y| vec![x, y]))
        .filter(|v| v[0].norm() + v[1].norm() == 2 && e8.from_ambient(v).is_some())
        .collect();
    assert_eq!(naive.len(), 240);
    let enumerated: BTreeSet<Vec<Hq>> = e8.shell_enumerate(-2).unwrap().iter().map(|r| e8.to_ambient(r).unwrap()).collect();
    assert_eq!(naive, enumerated);
}

#[test]
fn leech_minimal_vectors() {
    let leech = make_lattice(LatticeName::Leech);
    let shell = leech.shell_enumerate(-4).unwrap();
    assert_eq!(shell.len(), 196_560);
    let ambient: Vec<Vec<Hq>> = shell.iter().map(|v| leech.to_ambient(v).unwrap()).collect();
    assert!(ambient.iter().all(|a| leech_contains(a) && a.iter().map(Hq::norm).sum::<i64>() == 8));
    let set: BTreeSet<&LVec> = shell.iter().collect();
    for v in shell.iter().step_by(997) {
        assert!(set.contains(&v.mul_right(Hq::OMEGA)));
        assert!(set.contains(&-v));
    }
    // vectors supported on two coordinates, found directly from the congruences
    let small = hurwitz_up_to_norm(8);
    for (s, t) in [(0, 1), (2, 3), (1, 5)] {
        let mut direct = BTreeSet::new();
        for &x in &small {
            for &y in &small {
                if x.norm() + y.norm() == 8 {
                    let mut v = vec![Hq::ZERO; 6];
                    v[s] = x;
                    v[t] = y;
                    if leech_contains(&v) {
                        direct.insert(v);
                    }
                }
            }
        }
        let from_shell: BTreeSet<Vec<Hq>> =
            ambient.iter().filter(|a| (0..6).all(|u| u == s || u == t || a[u].is_zero())).cloned().collect();
        assert!(!direct.is_empty());
        assert_eq!(direct, from_shell, "support {s},{t}");
    }
}

#[test]
fn leech_basis_spans_the_congruence_lattice() {
    let leech = make_lattice(LatticeName::Leech);
    for t in 0..6 {
        for m in [Hq::ONE, Hq::I, Hq::J, Hq::OMEGA] {
            let v = leech.to_ambient(&LVec::basis(6, t).mul_right(m)).unwrap();
            assert!(leech_contains(&v));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let units = Hq::units();
    let mut hits = 0;
    while hits < 50 {
        let v: Vec<Hq> = (0..6).map(|_| units[rng.gen_range(0..24)] * Hq::from_int(rng.gen_range(0..3))).collect();
        if leech_contains(&v) {
            hits += 1;
            assert!(leech.from_ambient(&v).is_some(), "{v:?}");
        } else {
            assert!(leech.from_ambient(&v).is_none());
        }
    }
}

#[test]
fn sums_are_p_modular_with_the_right_signature() {
    for l in [LatticeName::L3E8H, LatticeName::LLeechH] {
        let lat = make_lattice(l);
        assert!(lat.is_p_modular().unwrap());
        assert_eq!(lat.real_form_signature(), (4, 28));
        assert!(lat.shell_enumerate(-2).is_err());
    }
    assert_eq!(make_lattice(LatticeName::Standard(3)).real_form_signature(), (0, 12));
}
