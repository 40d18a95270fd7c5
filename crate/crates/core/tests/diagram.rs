use qleech_core::diagram::*;
use qleech_core::hquat::{rat, R2Quat};
use qleech_core::linalg;
use qleech_core::reflect::{self, braid_type, element_order, BraidType};
use qleech_core::{Hq, LVec, Mat, R2};

fn r2(a: i64, b: i64) -> R2 {
    R2::new(rat(a, 1), rat(b, 1))
}

#[test]
fn line_relations_are_constant() {
    let d = roots14();
    let w = w_p_from_line(&d, 0);
    for l in 0..7 {
        assert_eq!(w_p_from_line(&d, l), w);
    }
    let w = w_l_from_point(&d, 0);
    for x in 0..7 {
        assert_eq!(w_l_from_point(&d, x), w);
    }
}

#[test]
fn weyl_vector_identities() {
    let d = roots14();
    let w = weyl_data(&d).unwrap();
    let l = &d.lattice;
    assert_eq!(l.norm(&w.w_p), 2);
    assert_eq!(l.norm(&w.w_l), 2);
    for x in 0..7 {
        assert!(l.inner(&w.w_p, d.point(x)).unwrap().is_zero());
        assert!(l.inner(&w.w_l, d.line(x)).unwrap().is_zero());
    }
    let rho2 = as_real(&l.inner_ext(&w.rho_bar, &w.rho_bar)).unwrap();
    assert_eq!(rho2, rho_norm_expected());
    for rs in &w.rho_list {
        assert_eq!(as_real(&l.inner_ext(&w.rho_bar, rs)).unwrap(), rho2);
    }
    let half_sqrt2 = R2::new(rat(0, 1), rat(1, 2));
    let with_wp = as_real(&l.inner_ext(&w.rho_bar, &w.w_p.to_r2q())).unwrap();
    assert_eq!(with_wp, half_sqrt2);
    let wl_xi: Vec<R2Quat> = w.w_l.to_r2q().into_iter().map(|c| c * R2Quat::xi()).collect();
    assert_eq!(as_real(&l.inner_ext(&w.rho_bar, &wl_xi)).unwrap(), half_sqrt2);
    assert_eq!(with_wp * rho2.inv().unwrap(), r2(3, 1));
}

#[test]
fn joined_nodes_pair_to_sqrt2() {
    let d = roots14();
    let w = weyl_data(&d).unwrap();
    for x in 0..7 {
        for l in 0..7 {
            let ip = as_real(&d.lattice.inner_ext(&w.rho_list[x], &w.rho_list[7 + l])).unwrap();
            let want = if d.fano.incidence[x][l] { r2(0, 1) } else { r2(0, 0) };
            assert_eq!(ip, want);
        }
    }
}

#[test]
fn collineation_lifts() {
    let d = roots14();
    let all = d.fano.collineations();
    let id = all.iter().find(|g| g.points == [0, 1, 2, 3, 4, 5, 6]).unwrap();
    assert!(lift_collineation(&d, id).unwrap().is_identity());
    let gens = collineation_generators(&d);
    let rot = lift_collineation(&d, &gens[0]).unwrap();
    assert_eq!(element_order(&rot, 1000), Some(3));
    let mats: Vec<Mat<Hq>> = gens.iter().map(|g| lift_collineation(&d, g).unwrap()).collect();
    assert_eq!(group_closure(&mats, 1000).len(), 168);
    for g in all.iter().step_by(17) {
        let m = lift_collineation(&d, g).unwrap();
        assert!(reflect::is_automorphism_hq(&d.lattice, &m));
    }
}

#[test]
fn conjugating_a_reflection_by_a_lift() {
    let d = roots14();
    let gens = collineation_generators(&d);
    let g = lift_collineation(&d, &gens[1]).unwrap();
    let ginv = reflect::isometry_inverse(&d.lattice, &g).unwrap();
    for label in ["a", "c2", "e1", "f", "d3"] {
        let r = d.root(label);
        let gr = LVec::new(g.mul_vec(&r.coords));
        for mu in [Hq::I, Hq::J, -Hq::ONE] {
            let lhs = &(&g * &reflect::reflection_matrix(&d.lattice, r, mu).unwrap()) * &ginv;
            assert_eq!(lhs, reflect::reflection_matrix(&d.lattice, &gr, mu).unwrap());
        }
    }
}

#[test]
fn duality_and_fixed_points() {
    let d = roots14();
    let w = weyl_data(&d).unwrap();
    let (_, sigma) = sigma_duality(&d).unwrap();
    assert!(reflect::is_automorphism_hq(&d.lattice, &sigma));
    assert_eq!(sigma.mul_vec(&w.w_l.coords), w.w_p.coords);
    assert_eq!(sigma.mul_vec(&w.sigma_l.coords), w.sigma_p.coords);
    assert_eq!(sigma.mul_vec(&w.sigma_p.coords), w.sigma_l.mul_right(Hq::I).coords);

    let gens: Vec<Mat<Hq>> = collineation_generators(&d).iter().map(|g| lift_collineation(&d, g).unwrap()).collect();
    let fixed = fixed_subspace(&gens);
    assert_eq!(fixed.len(), 2);
    assert!(same_span(&fixed, &[w.w_p.to_qq(), w.w_l.to_qq()]));
    assert_eq!(fixed_subspace(&[Mat::identity(8)]).len(), 8);

    let mut with_sigma = gens.clone();
    with_sigma.push(sigma.clone());
    assert!(fixed_subspace(&with_sigma).is_empty());
    let fp = extended_fixed_point(&d, &sigma).unwrap();
    assert_eq!(fp.b, R2Quat::xi());
    assert_eq!(fp.scale.signum(), std::cmp::Ordering::Greater);
    assert_eq!(fp.norm.signum(), std::cmp::Ordering::Greater);
}

#[test]
fn deflate_and_spider() {
    let d = roots14();
    assert!(deflate_check(&d));
    assert_eq!(d.lattice.norm(&deflate_image(&d)), -2);
    assert_eq!(element_order(&spider_element(&d), 1000), Some(40));
}

#[test]
fn m444_arms() {
    let d = roots14();
    let sub = m444_subset(&d).unwrap();
    assert_eq!(sub.len(), 10);
    assert_eq!(braid_type(&d.i_reflection("a"), &d.i_reflection("b2")), BraidType::Braid);
    assert_eq!(braid_type(&d.i_reflection("b1"), &d.i_reflection("b2")), BraidType::Commute);
    assert_eq!(braid_type(&d.i_reflection("a"), &d.i_reflection("f")), BraidType::Commute);
    assert_eq!(braid_type(&d.i_reflection("c1"), &d.i_reflection("d1")), BraidType::Braid);
    for s in 1..=3 {
        for label in [format!("c{s}"), format!("d{s}")] {
            let r = d.root(&label);
            for (t, c) in r.coords.iter().enumerate() {
                if t / 2 != s - 1 {
                    assert!(c.is_zero(), "{label}");
                }
            }
        }
    }
}

#[test]
fn relations_span_six_dimensions() {
    let d = roots14();
    let cols: Vec<_> = d.roots.iter().map(LVec::to_qq).collect();
    let m = Mat::from_cols(&cols);
    assert_eq!(linalg::rank(&m), 8);
    assert_eq!(linalg::right_kernel(&m).len(), 6);
    // line relations l p̄ + Σ x = l' p̄ + Σ x' as coefficient vectors
    let rel = |l: usize| {
        let mut c = vec![Hq::ZERO; 14];
        c[7 + l] = Hq::P.conj();
        for x in d.fano.points_on(l) {
            c[x] = Hq::ONE;
        }
        c
    };
    let rels: Vec<Vec<_>> = (1..7)
        .map(|l| rel(0).iter().zip(rel(l)).map(|(a, b)| (*a - b).to_qq()).collect())
        .collect();
    for r in &rels {
        assert!(m.mul_vec(r).iter().all(|x| x.is_zero()));
    }
    assert_eq!(linalg::rank(&Mat::from_cols(&rels)), 6);
}
