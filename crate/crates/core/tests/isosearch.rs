use std::sync::OnceLock;

use qleech_core::fixtures::Fixtures;
use qleech_core::heisen;
use qleech_core::isosearch::*;
use qleech_core::reflect::{self, braid_type, BraidType};
use qleech_core::{make_lattice, Hq, LVec, LatticeName};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn shell() -> &'static Vec<LVec> {
    static SHELL: OnceLock<Vec<LVec>> = OnceLock::new();
    SHELL.get_or_init(|| leech().shell_enumerate(-4).unwrap())
}

fn reference() -> BasisChange {
    let lat = make_lattice(LatticeName::LLeechH);
    reference_basis_change(&lat, &Fixtures::embedded()).unwrap()
}

fn reference_candidates() -> Vec<CandidateRoot> {
    reference().rows[..6].iter().map(|r| CandidateRoot::from_root(r).unwrap()).collect()
}

#[test]
fn reference_matrix_is_an_isomorphism() {
    let lat = make_lattice(LatticeName::LLeechH);
    let bc = reference();
    assert_eq!(bc.ambient_rows(&lat), Fixtures::embedded().basis_change.iter().map(|r| r.coords.clone()).collect::<Vec<_>>());
    let first = CandidateRoot::from_root(&bc.rows[0]).unwrap();
    assert_eq!(first.beta, Hq::I);
}

#[test]
fn reference_rows_satisfy_pair_conditions() {
    let leech = leech();
    let c = reference_candidates();
    for s in 0..6 {
        for t in s + 1..6 {
            let want = if s / 2 == t / 2 { PairType::Braid } else { PairType::Commute };
            assert_eq!(pair_condition(&leech, &c[s], &c[t]), want, "{s} {t}");
        }
    }
    for p in c.chunks(2) {
        assert_eq!(dist2(&leech, &p[0].l, &p[1].l), -6);
    }
}

#[test]
fn reference_seed_filter_contains_rows() {
    let leech = leech();
    let c = reference_candidates();
    let filtered = filter_shell(&leech, shell(), &c[0], &c[1]);
    for row in &c[2..6] {
        assert!(filtered.contains(row));
    }
    let sys = find_3e8_system(&leech, shell(), &Seed::Pair(c[0].clone(), c[1].clone())).unwrap();
    assert_eq!(sys.roots.len(), 6);
}

#[test]
fn pipeline_from_several_seeds() {
    let leech = leech();
    let lat = make_lattice(LatticeName::LLeechH);
    assert_eq!(shell().len(), 196560);
    for seed in [Seed::First, Seed::Random(1), Seed::Random(2), Seed::Random(3)] {
        let sys = find_3e8_system(&leech, shell(), &seed).unwrap();
        let roots: Vec<LVec> = sys.roots.iter().map(CandidateRoot::root).collect();
        for r in &roots {
            assert_eq!(lat.norm(r), -2);
        }
        let cell = hyperbolic_complement(&lat, &roots).unwrap();
        assert_eq!(lat.norm(&cell[0]), 0);
        assert_eq!(lat.inner(&cell[0], &cell[1]).unwrap(), Hq::P.conj());
        for r in &roots {
            assert!(lat.inner(&cell[0], r).unwrap().is_zero());
        }
        assemble(&lat, &sys, &cell).unwrap();
    }
}

#[test]
fn pair_condition_matches_braid_type() {
    let leech = leech();
    let lat = make_lattice(LatticeName::LLeechH);
    let betas: Vec<Hq> = heisen::imaginary_candidates(9).into_iter().filter(|&b| beta_admissible(b)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = reference_candidates();
    let mut pairs: Vec<(CandidateRoot, CandidateRoot)> = (0..6).flat_map(|s| (0..6).map(move |t| (s, t))).map(|(s, t)| (c[s].clone(), c[t].clone())).collect();
    let near = filter_shell(&leech, shell(), &c[0], &c[1]);
    while pairs.len() < 500 {
        let pick = |rng: &mut ChaCha8Rng| {
            let l = if rng.gen_bool(0.5) { near[rng.gen_range(0..near.len())].l.clone() } else { shell()[rng.gen_range(0..shell().len())].clone() };
            CandidateRoot::new(l, betas[rng.gen_range(0..betas.len())]).unwrap()
        };
        let a = pick(&mut rng);
        // bias toward related pairs by reusing the bracket-determined beta
        let mut b = pick(&mut rng);
        if rng.gen_bool(0.5) {
            let beta = a.beta - bracket(&leech, &a.l, &b.l) - if rng.gen_bool(0.5) { Hq::I } else { Hq::ZERO };
            if let Some(x) = CandidateRoot::new(b.l.clone(), beta) {
                b = x;
            }
        }
        pairs.push((a, b));
    }
    for (a, b) in &pairs {
        let ma = reflect::reflection_matrix(&lat, &a.root(), Hq::I).unwrap();
        let mb = reflect::reflection_matrix(&lat, &b.root(), Hq::I).unwrap();
        let bt = braid_type(&ma, &mb);
        let pc = pair_condition(&leech, a, b);
        let ip = lat.inner(&a.root(), &b.root()).unwrap();
        match pc {
            PairType::Commute => assert_eq!(bt, BraidType::Commute),
            PairType::Braid => assert_eq!(bt, BraidType::Braid),
            PairType::Neither => {
                if a != b {
                    assert!(bt == BraidType::Other || !(ip.is_zero() || ip == Hq::P || ip == Hq::P.conj()), "{ip}");
                }
            }
        }
    }
}

#[test]
fn conversion_round_trip_and_isometry() {
    let lat = make_lattice(LatticeName::LLeechH);
    let target = make_lattice(LatticeName::L3E8H);
    let bc = reference();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let units = Hq::units();
    for _ in 0..100 {
        let v = LVec::new((0..8).map(|_| units[rng.gen_range(0..24)] * Hq::from_int(rng.gen_range(-2..3))).collect());
        let w = bc.convert(&v, Direction::To3E8H);
        assert_eq!(bc.convert(&w, Direction::ToLeechH), v);
        assert_eq!(target.norm(&w), lat.norm(&v));
    }
    assert!(bc.convert(&LVec::zero(8), Direction::To3E8H).is_zero());
    for g in heisen::generators81(&lat) {
        assert_eq!(target.norm(&bc.convert(&g.root, Direction::To3E8H)), -2);
    }
}

#[test]
fn bad_rows_are_rejected() {
    let lat = make_lattice(LatticeName::LLeechH);
    let mut rows = reference().rows;
    rows.swap(0, 1);
    assert!(change_of_basis(&lat, rows).is_err());
}
