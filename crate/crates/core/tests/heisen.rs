use qleech_core::heisen::*;
use qleech_core::hquat::Qq;
use qleech_core::{Hq, LVec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_admissible(rng: &mut ChaCha8Rng, n: usize) -> Vec<Translation> {
    let lat = lattice();
    let units = Hq::units();
    let zs = imaginary_candidates(9);
    let mut out = Vec::new();
    while out.len() < n {
        let lambda = LVec::new((0..6).map(|_| units[rng.gen_range(0..24)] * Hq::from_int(rng.gen_range(-1..=2))).collect());
        let z = zs[rng.gen_range(0..zs.len())];
        if let Ok(t) = translation(&lat, &lambda, z) {
            out.push(t);
        }
    }
    out
}

/// `(w; a, b) ↦ (w + λa; a, b − p̄⁻¹⟨λ, w⟩ + p̄⁻¹(z − ⟨λ,λ⟩/2)a)` computed over Q.
fn act(t: &Translation, v: &LVec) -> Vec<Qq> {
    let lat = lattice();
    let pad = |x: &[Hq]| x.iter().copied().chain([Hq::ZERO, Hq::ZERO]).collect::<Vec<_>>();
    let lam = pad(&t.lambda.coords);
    let w = pad(&v.coords[..6]);
    let (a, b) = (v.coords[6].to_qq(), v.coords[7].to_qq());
    let pinv = Hq::P.conj().to_qq().inv().unwrap();
    let half = Hq::ONE.to_qq().scale(&qleech_core::hquat::rat(1, 2));
    let corner = pinv.clone() * (t.z.to_qq() - half * lat.ip(&lam, &lam).to_qq());
    let mut out: Vec<Qq> = (0..6).map(|s| v.coords[s].to_qq() + t.lambda.coords[s].to_qq() * a.clone()).collect();
    out.push(a.clone());
    out.push(b - pinv * lat.ip(&lam, &w).to_qq() + corner * a);
    out
}

#[test]
fn matrices_act_as_the_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let units = Hq::units();
    for t in random_admissible(&mut rng, 30) {
        let v = LVec::new((0..8).map(|_| units[rng.gen_range(0..24)]).collect());
        let got: Vec<Qq> = t.matrix.mul_vec(&v.coords).iter().map(Hq::to_qq).collect();
        assert_eq!(got, act(&t, &v));
    }
}

#[test]
fn group_laws_on_random_parameters() {
    let lat = lattice();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let ts = random_admissible(&mut rng, 100);
    let r = r_element(&lat);
    for pair in ts.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        assert!(compose_law_check(&lat, a, b));
        assert!(commutator_check(&lat, a, b));
        let inv = inverse(&lat, a).unwrap();
        assert!((&a.matrix * &inv.matrix).is_identity());
        assert!(conjugation_check(&lat, &r, a));
        assert!(commutator_identity_check(&lat, &r, a));
    }
}

#[test]
fn central_commutators_are_conjugation_by_epsilon() {
    let lat = lattice();
    let r = r_element(&lat);
    let e = Hq::EPSILON.to_qq();
    let ebar = e.conj();
    for z in [Hq::I + Hq::J, Hq::I + Hq::K, Hq::from_int(2) * Hq::J, Hq::J + Hq::K] {
        let oracle = e.clone() * z.to_qq() * ebar.clone() - z.to_qq();
        assert_eq!(central_commutator(&lat, &r, z).unwrap().to_qq(), oracle);
    }
    assert_eq!(central_commutator(&lat, &r, Hq::I + Hq::J).unwrap(), -Hq::I - Hq::K);
    assert_eq!(central_commutator(&lat, &r, Hq::I + Hq::K).unwrap(), Hq::J - Hq::K - Hq::I - Hq::I);
}

#[test]
fn generators_are_distinct_roots_in_orbit_form() {
    let lat = lattice();
    let g = generators81(&lat);
    let mut roots: Vec<&LVec> = g.iter().map(|x| &x.root).collect();
    roots.sort();
    roots.dedup();
    // T_{0,i+j}(r2) = (0; 1, -ε) = r3
    assert_eq!(roots.len(), 80);
    let by_name = |n: &str| &g.iter().find(|x| x.name == n).unwrap().root;
    assert_eq!(by_name("T(0,i+j)(r2)"), by_name("r3"));
    for x in g.iter().filter(|x| x.name.ends_with("(r2)")) {
        assert!(has_orbit_form(&lat, &x.root), "{}", x.name);
    }
    for lambda in lambda_basis() {
        let z = minimal_z(&lat, &lambda).unwrap();
        assert!(imaginary_candidates(4).iter().take_while(|&&c| c != z).all(|&c| !is_admissible(&lat, &lambda, c)));
    }
}

#[test]
fn r_has_the_block_form() {
    let lat = lattice();
    let b = r_block(&r_element(&lat)).unwrap();
    assert_eq!(b.epsilon, Hq::EPSILON);
    assert_eq!(Some(b.u), Hq::from_doubled([3, -1, 1, -1]));
    let pinv = Hq::P.conj().to_qq().inv().unwrap();
    assert_eq!(b.delta.to_qq() * pinv.clone(), pinv * Hq::EPSILON.to_qq());
}
