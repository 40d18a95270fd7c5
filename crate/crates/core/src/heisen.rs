//! Heisenberg translations of `Λ ⊕ H` and the generating roots of its
//! reflection group.
//!
//! Coordinates are those of `LLeechH`: six Leech basis coordinates followed by
//! the two hyperbolic cell coordinates `(a, b)`. The translation `T_{λ,z}` is
//! `(v; a, b) ↦ (v + λa; a, b − p̄⁻¹⟨λ, v⟩ + p̄⁻¹(z − λ²/2)a)` with `λ² = ⟨λ, λ⟩`.

use crate::error::{Error, Result};
use crate::hlattice::{make_lattice, HLattice, LVec, LatticeName};
use crate::hquat::Hq;
use crate::linalg::Mat;
use crate::reflect;

const LEECH_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    pub lambda: LVec,
    pub z: Hq,
    pub matrix: Mat<Hq>,
}

pub fn lattice() -> HLattice {
    make_lattice(LatticeName::LLeechH)
}

fn extend(lambda: &LVec) -> Vec<Hq> {
    let mut v = lambda.coords.clone();
    v.extend([Hq::ZERO, Hq::ZERO]);
    v
}

/// Imaginary part, when it is again a Hurwitz integer.
pub fn im_hq(x: Hq) -> Option<Hq> {
    Hq::from_qq(&x.im())
}

/// `p̄⁻¹(z − λ²/2)`, if `(λ, z)` is admissible.
fn corner(lat: &HLattice, lambda: &LVec, z: Hq) -> Option<Hq> {
    if !z.is_imaginary() {
        return None;
    }
    let l = extend(lambda);
    let n = lat.ip(&l, &l);
    let half = n.half()?;
    (z - half).pbar_inv_mul()
}

pub fn is_admissible(lat: &HLattice, lambda: &LVec, z: Hq) -> bool {
    lambda.len() == LEECH_RANK && corner(lat, lambda, z).is_some()
}

/// Matrix of `T_{λ,z}`; fails unless it is a lattice automorphism.
pub fn translation(lat: &HLattice, lambda: &LVec, z: Hq) -> Result<Translation> {
    if lambda.len() != LEECH_RANK {
        return Err(Error::LatticeMismatch);
    }
    let c = corner(lat, lambda, z).ok_or(Error::Inadmissible)?;
    let mut m = Mat::identity(LEECH_RANK + 2);
    for s in 0..LEECH_RANK {
        m[(s, LEECH_RANK)] = lambda.coords[s];
    }
    let row = lat.dual_row(&extend(lambda));
    for t in 0..LEECH_RANK {
        m[(LEECH_RANK + 1, t)] = -row[t].pbar_inv_mul().ok_or(Error::Inadmissible)?;
    }
    m[(LEECH_RANK + 1, LEECH_RANK)] = c;
    if !reflect::is_automorphism_hq(lat, &m) {
        return Err(Error::Inadmissible);
    }
    Ok(Translation { lambda: lambda.clone(), z, matrix: m })
}

/// Imaginary Hurwitz integers of norm at most `max_norm`, by norm then doubled coordinates.
pub fn imaginary_candidates(max_norm: i64) -> Vec<Hq> {
    let r = (max_norm as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for b in -r..=r {
        for c in -r..=r {
            for d in -r..=r {
                let q = Hq::new(0, b, c, d);
                if q.norm() <= max_norm {
                    out.push(q);
                }
            }
        }
    }
    out.sort_by_key(|q| (q.norm(), q.doubled()));
    out
}

/// The smallest admissible `z` for `λ`, ties broken on doubled coordinates.
pub fn minimal_z(lat: &HLattice, lambda: &LVec) -> Option<Hq> {
    imaginary_candidates(4).into_iter().find(|&z| is_admissible(lat, lambda, z))
}

pub fn inverse(lat: &HLattice, t: &Translation) -> Result<Translation> {
    translation(lat, &-&t.lambda, -t.z)
}

/// Parameters of `T_{λ,z}T_{λ′,z′} = T_{λ+λ′, z+z′+Im⟨λ′,λ⟩}`.
pub fn compose_params(lat: &HLattice, t1: &Translation, t2: &Translation) -> (LVec, Hq) {
    let ip = lat.ip(&extend(&t2.lambda), &extend(&t1.lambda));
    let im = im_hq(ip).expect("Hurwitz imaginary part");
    (&t1.lambda + &t2.lambda, t1.z + t2.z + im)
}

pub fn compose_law_check(lat: &HLattice, t1: &Translation, t2: &Translation) -> bool {
    let (lambda, z) = compose_params(lat, t1, t2);
    matches!(translation(lat, &lambda, z), Ok(t) if t.matrix == &t1.matrix * &t2.matrix)
}

/// `T⁻¹T′⁻¹TT′ = T_{0, 2Im⟨λ′,λ⟩}`
pub fn commutator_check(lat: &HLattice, t1: &Translation, t2: &Translation) -> bool {
    let (Ok(i1), Ok(i2)) = (inverse(lat, t1), inverse(lat, t2)) else {
        return false;
    };
    let lhs = &(&(&i1.matrix * &i2.matrix) * &t1.matrix) * &t2.matrix;
    let ip = lat.ip(&extend(&t2.lambda), &extend(&t1.lambda));
    let z = im_hq(ip).expect("Hurwitz imaginary part") * Hq::from_int(2);
    matches!(translation(lat, &LVec::zero(LEECH_RANK), z), Ok(t) if t.matrix == lhs)
}

pub fn r1() -> LVec {
    cell_root(Hq::I)
}

pub fn r2() -> LVec {
    cell_root(-Hq::ONE)
}

pub fn r3() -> LVec {
    cell_root(-Hq::EPSILON)
}

fn cell_root(b: Hq) -> LVec {
    let mut v = LVec::zero(LEECH_RANK + 2);
    v.coords[LEECH_RANK] = Hq::ONE;
    v.coords[LEECH_RANK + 1] = b;
    v
}

/// `R = φ_{r3}^i φ_{r2}^j`
pub fn r_element(lat: &HLattice) -> Mat<Hq> {
    let a = reflect::reflection_matrix(lat, &r3(), Hq::I).expect("r3 is a root");
    let b = reflect::reflection_matrix(lat, &r2(), Hq::J).expect("r2 is a root");
    &a * &b
}

/// The block data of `R`: the identity on `Λ`, and `[[ε, 0], [u, δ]]` on the cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBlock {
    pub epsilon: Hq,
    pub u: Hq,
    pub delta: Hq,
}

pub fn r_block(r: &Mat<Hq>) -> Option<RBlock> {
    let n = LEECH_RANK;
    for s in 0..n + 2 {
        for t in 0..n + 2 {
            let inside = s >= n && t >= n;
            let want = if s == t { Hq::ONE } else { Hq::ZERO };
            if !inside && r[(s, t)] != want {
                return None;
            }
        }
    }
    if !r[(n, n + 1)].is_zero() {
        return None;
    }
    Some(RBlock { epsilon: r[(n, n)], u: r[(n + 1, n)], delta: r[(n + 1, n + 1)] })
}

/// `R T_{λ,z} R⁻¹ = T_{λε̄, εzε̄}`
pub fn conjugation_check(lat: &HLattice, r: &Mat<Hq>, t: &Translation) -> bool {
    let Some(rinv) = reflect::isometry_inverse(lat, r) else {
        return false;
    };
    let e = Hq::EPSILON;
    let lhs = &(r * &t.matrix) * &rinv;
    matches!(translation(lat, &t.lambda.mul_right(e.conj()), e * t.z * e.conj()), Ok(x) if x.matrix == lhs)
}

/// `T_{λ,z}⁻¹ R T_{λ,z} R⁻¹ = T_{λ(ε̄−1), εzε̄ − z + Im⟨λε̄, −λ⟩}`
pub fn commutator_identity_check(lat: &HLattice, r: &Mat<Hq>, t: &Translation) -> bool {
    let (Some(rinv), Ok(tinv)) = (reflect::isometry_inverse(lat, r), inverse(lat, t)) else {
        return false;
    };
    let lhs = &(&(&tinv.matrix * r) * &t.matrix) * &rinv;
    let e = Hq::EPSILON;
    let lam = t.lambda.mul_right(e.conj() - Hq::ONE);
    let ip = lat.ip(&extend(&t.lambda.mul_right(e.conj())), &extend(&-&t.lambda));
    let z = e * t.z * e.conj() - t.z + im_hq(ip).expect("Hurwitz imaginary part");
    matches!(translation(lat, &lam, z), Ok(x) if x.matrix == lhs)
}

/// `T_{0,z}⁻¹ R T_{0,z} R⁻¹` as a central translation parameter.
pub fn central_commutator(lat: &HLattice, r: &Mat<Hq>, z: Hq) -> Result<Hq> {
    let t = translation(lat, &LVec::zero(LEECH_RANK), z)?;
    let tinv = inverse(lat, &t)?;
    let rinv = reflect::isometry_inverse(lat, r).ok_or(Error::Inadmissible)?;
    let lhs = &(&(&tinv.matrix * r) * &t.matrix) * &rinv;
    let w = Hq::EPSILON * z * Hq::EPSILON.conj() - z;
    let c = translation(lat, &LVec::zero(LEECH_RANK), w)?;
    if c.matrix == lhs {
        Ok(w)
    } else {
        Err(Error::Inadmissible)
    }
}

/// `λ_s = e_t·m` for `m ∈ {1, i, j, ω}`, a Z-basis of `Λ`.
pub fn lambda_basis() -> Vec<LVec> {
    let mut out = Vec::with_capacity(24);
    for t in 0..LEECH_RANK {
        for m in [Hq::ONE, Hq::I, Hq::J, Hq::OMEGA] {
            let mut v = LVec::zero(LEECH_RANK);
            v.coords[t] = m;
            out.push(v);
        }
    }
    out
}

/// One generating root with how it was produced.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GeneratorRoot {
    pub name: String,
    pub root: LVec,
}

/// The 81 roots `T_{λ_s,z_s}(r_t)`, `T_{0,i+j}(r_t)`, `T_{0,i+k}(r_t)`, `r_t`.
pub fn generators81(lat: &HLattice) -> Vec<GeneratorRoot> {
    let rs = [r1(), r2(), r3()];
    let apply = |t: &Translation, r: &LVec| LVec::new(t.matrix.mul_vec(&r.coords));
    let mut out = Vec::with_capacity(81);
    for (s, lambda) in lambda_basis().iter().enumerate() {
        let z = minimal_z(lat, lambda).expect("some z is admissible");
        let t = translation(lat, lambda, z).expect("admissible translation");
        for (k, r) in rs.iter().enumerate() {
            out.push(GeneratorRoot { name: format!("T(lambda{},z={z})(r{})", s + 1, k + 1), root: apply(&t, r) });
        }
    }
    for (label, z) in [("i+j", Hq::I + Hq::J), ("i+k", Hq::I + Hq::K)] {
        let t = translation(lat, &LVec::zero(LEECH_RANK), z).expect("central translation");
        for (k, r) in rs.iter().enumerate() {
            out.push(GeneratorRoot { name: format!("T(0,{label})(r{})", k + 1), root: apply(&t, r) });
        }
    }
    for (k, r) in rs.iter().enumerate() {
        out.push(GeneratorRoot { name: format!("r{}", k + 1), root: r.clone() });
    }
    out
}

/// Whether `v = (λ; 1, p̄⁻¹(β − 1 − λ²/2))` for some imaginary `β`.
pub fn has_orbit_form(lat: &HLattice, v: &LVec) -> bool {
    if v.len() != LEECH_RANK + 2 || v.coords[LEECH_RANK] != Hq::ONE {
        return false;
    }
    let lambda: Vec<Hq> = v.coords[..LEECH_RANK].iter().copied().chain([Hq::ZERO, Hq::ZERO]).collect();
    let Some(half) = lat.ip(&lambda, &lambda).half() else {
        return false;
    };
    // β = p̄·b + 1 + λ²/2
    (Hq::P.conj() * v.coords[LEECH_RANK + 1] + Hq::ONE + half).is_imaginary()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_translation() {
        let lat = lattice();
        let t = translation(&lat, &LVec::zero(6), Hq::ZERO).unwrap();
        assert!(t.matrix.is_identity());
    }

    #[test]
    fn inadmissible_parameters() {
        let lat = lattice();
        assert_eq!(translation(&lat, &LVec::zero(6), Hq::ONE).unwrap_err(), Error::Inadmissible);
        assert_eq!(translation(&lat, &LVec::zero(6), Hq::I).unwrap_err(), Error::Inadmissible);
        assert_eq!(translation(&lat, &LVec::zero(5), Hq::ZERO).unwrap_err(), Error::LatticeMismatch);
    }

    #[test]
    fn generator_roots_have_norm_minus_two() {
        let lat = lattice();
        assert_eq!(lat.norm(&r1()), -2);
        let g = generators81(&lat);
        assert_eq!(g.len(), 81);
        assert!(g.iter().all(|r| lat.norm(&r.root) == -2));
    }

    #[test]
    fn r_block_data() {
        let lat = lattice();
        let b = r_block(&r_element(&lat)).unwrap();
        assert_eq!(b.epsilon, Hq::EPSILON);
        assert_eq!(b.u, Hq::from_doubled([3, -1, 1, -1]).unwrap());
        let pbar_inv = Hq::P.conj().inverse().unwrap();
        assert_eq!(b.delta.to_qq() * pbar_inv.clone(), pbar_inv * Hq::EPSILON.to_qq());
    }
}
