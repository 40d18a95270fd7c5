//! Unit reflections and lattice automorphisms.
//!
//! A matrix `m` acts on coordinate columns, `φ(e_t) = Σ_s e_s·m[s][t]`, and a
//! product `φ1φ2` is the matrix product `mat(φ1)·mat(φ2)` (apply `φ2` first).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hlattice::{HLattice, LVec};
use crate::hquat::{Hq, Qq};
use crate::linalg::{self, Mat};

/// The `μ`-reflection in a norm `−2` root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reflection {
    pub root: LVec,
    pub mu: Hq,
}

impl Reflection {
    pub fn new(lat: &HLattice, root: LVec, mu: Hq) -> Result<Reflection> {
        if root.len() != lat.rank() {
            return Err(Error::LatticeMismatch);
        }
        if lat.norm(&root) != -2 {
            return Err(Error::NotARoot);
        }
        if !mu.is_unit() || mu == Hq::ONE {
            return Err(Error::BadReflectionUnit);
        }
        // integrality is a property of the root; test it on the basis
        reflection_matrix(lat, &root, mu)?;
        Ok(Reflection { root, mu })
    }

    pub fn apply(&self, lat: &HLattice, v: &LVec) -> LVec {
        reflect_vec(lat, &self.root, self.mu, v).expect("checked at construction")
    }

    pub fn matrix(&self, lat: &HLattice) -> Mat<Hq> {
        reflection_matrix(lat, &self.root, self.mu).expect("checked at construction")
    }
}

/// `v ↦ v − r(1 − μ)⟨r, v⟩/|r|²` for a root of norm `−2`.
pub fn reflect_vec(lat: &HLattice, r: &LVec, mu: Hq, v: &LVec) -> Result<LVec> {
    let c = ((Hq::ONE - mu) * lat.inner(r, v)?).half().ok_or(Error::ReflectionNotIntegral)?;
    Ok(v + &r.mul_right(c))
}

pub fn reflection_matrix(lat: &HLattice, r: &LVec, mu: Hq) -> Result<Mat<Hq>> {
    if r.len() != lat.rank() {
        return Err(Error::LatticeMismatch);
    }
    if lat.norm(r) != -2 {
        return Err(Error::NotARoot);
    }
    if !mu.is_unit() || mu == Hq::ONE {
        return Err(Error::BadReflectionUnit);
    }
    let n = lat.rank();
    let row = lat.dual_row(&r.coords);
    let c: Vec<Hq> = row
        .iter()
        .map(|&x| ((Hq::ONE - mu) * x).half().ok_or(Error::ReflectionNotIntegral))
        .collect::<Result<_>>()?;
    let mut m = Mat::identity(n);
    for s in 0..n {
        for t in 0..n {
            m[(s, t)] += r.coords[s] * c[t];
        }
    }
    Ok(m)
}

/// `m*·G·m = G` with `m` and `m⁻¹` both Hurwitz.
pub fn is_automorphism(lat: &HLattice, m: &Mat<Qq>) -> bool {
    if m.rows() != lat.rank() || m.cols() != lat.rank() {
        return false;
    }
    let g = lat.gram_qq();
    if &(&m.adjoint() * &g) * m != g {
        return false;
    }
    if linalg::qq_to_hq(m).is_none() {
        return false;
    }
    matches!(linalg::inverse(m), Some(inv) if linalg::qq_to_hq(&inv).is_some())
}

pub fn is_automorphism_hq(lat: &HLattice, m: &Mat<Hq>) -> bool {
    is_automorphism(lat, &linalg::hq_to_qq(m))
}

/// Inverse of an isometry, computed as `G⁻¹·m*·G`.
pub fn isometry_inverse(lat: &HLattice, m: &Mat<Hq>) -> Option<Mat<Hq>> {
    let g = lat.gram_qq();
    let ginv = linalg::inverse(&g)?;
    let inv = &(&ginv * &linalg::hq_to_qq(&m.adjoint())) * &g;
    linalg::qq_to_hq(&inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidType {
    Commute,
    Braid,
    Other,
}

pub fn braid_type(m1: &Mat<Hq>, m2: &Mat<Hq>) -> BraidType {
    let m12 = m1 * m2;
    let m21 = m2 * m1;
    if m12 == m21 {
        BraidType::Commute
    } else if &m12 * m1 == &m21 * m2 {
        BraidType::Braid
    } else {
        BraidType::Other
    }
}

/// Least `n ≤ cutoff` with `mⁿ = 1`.
pub fn element_order(m: &Mat<Hq>, cutoff: u64) -> Option<u64> {
    let mut acc = m.clone();
    for n in 1..=cutoff {
        if acc.is_identity() {
            return Some(n);
        }
        acc = &acc * m;
    }
    None
}

/// Product `m_1·m_2·…·m_k`.
pub fn product<'a>(n: usize, ms: impl IntoIterator<Item = &'a Mat<Hq>>) -> Mat<Hq> {
    ms.into_iter().fold(Mat::identity(n), |acc, m| &acc * m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hlattice::{make_lattice, LatticeName};

    fn cell_root(b: Hq) -> LVec {
        LVec::new(vec![Hq::ONE, b])
    }

    #[test]
    fn reflection_on_root_and_perp() {
        let h = make_lattice(LatticeName::HyperbolicCell);
        let r = cell_root(Hq::I);
        assert_eq!(h.norm(&r), -2);
        for mu in Hq::order_four_units().into_iter().chain([-Hq::ONE]) {
            let m = reflection_matrix(&h, &r, mu).unwrap();
            assert_eq!(m.mul_vec(&r.coords), r.mul_right(mu).coords);
            assert!(is_automorphism_hq(&h, &m));
        }
    }

    #[test]
    fn rejects_non_roots_and_trivial_unit() {
        let h = make_lattice(LatticeName::HyperbolicCell);
        let n = LVec::new(vec![Hq::ONE, Hq::ZERO]);
        assert_eq!(reflection_matrix(&h, &n, Hq::I), Err(Error::NotARoot));
        assert_eq!(reflection_matrix(&h, &cell_root(Hq::I), Hq::ONE), Err(Error::BadReflectionUnit));
        assert_eq!(reflection_matrix(&h, &cell_root(Hq::I), Hq::OMEGA), Err(Error::ReflectionNotIntegral));
    }

    #[test]
    fn orders() {
        let h = make_lattice(LatticeName::HyperbolicCell);
        let r = cell_root(-Hq::ONE);
        let mi = reflection_matrix(&h, &r, Hq::I).unwrap();
        let m1 = reflection_matrix(&h, &r, -Hq::ONE).unwrap();
        assert_eq!(element_order(&mi, 1000), Some(4));
        assert_eq!(element_order(&m1, 1000), Some(2));
        assert_eq!(&mi * &mi, m1);
        assert_eq!(element_order(&Mat::identity(2), 10), Some(1));
    }

    #[test]
    fn perturbed_matrix_is_not_automorphism() {
        let h = make_lattice(LatticeName::HyperbolicCell);
        let mut m = reflection_matrix(&h, &cell_root(Hq::I), Hq::J).unwrap();
        m[(0, 1)] += Hq::ONE;
        assert!(!is_automorphism_hq(&h, &m));
        assert!(is_automorphism_hq(&h, &Mat::identity(2)));
    }

    #[test]
    fn isometry_inverse_matches() {
        let h = make_lattice(LatticeName::HyperbolicCell);
        let m = reflection_matrix(&h, &cell_root(Hq::I), Hq::J).unwrap();
        let inv = isometry_inverse(&h, &m).unwrap();
        assert!((&m * &inv).is_identity());
    }
}
