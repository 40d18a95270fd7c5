//! Search for an explicit isomorphism `Λ ⊕ H ≅ 3E8 ⊕ H`.
//!
//! Vectors of `Λ ⊕ H` are in `LLeechH` coordinates. A candidate root is
//! `(l; 1, p̄⁻¹(1 + β))` with `l` a minimal vector of `Λ` and `β` imaginary;
//! for two of them `⟨r, r′⟩ = ⟨l, l′⟩ + 2 + β′ − β`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::Fixtures;
use crate::hlattice::{make_lattice, HLattice, LVec, LatticeName};
use crate::hquat::Hq;
use crate::linalg::{self, Mat};

const LEECH_RANK: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateRoot {
    pub l: LVec,
    pub beta: Hq,
}

/// `1 + β ∈ p̄H`, so that the last coordinate is integral.
pub fn beta_admissible(beta: Hq) -> bool {
    beta.is_imaginary() && (Hq::ONE + beta).in_p_ideal()
}

impl CandidateRoot {
    pub fn new(l: LVec, beta: Hq) -> Option<CandidateRoot> {
        (l.len() == LEECH_RANK && beta_admissible(beta)).then_some(CandidateRoot { l, beta })
    }

    pub fn root(&self) -> LVec {
        let b = (Hq::ONE + self.beta).pbar_inv_mul().expect("admissible beta");
        let mut coords = self.l.coords.clone();
        coords.extend([Hq::ONE, b]);
        LVec::new(coords)
    }

    /// Reads `(l; 1, b)` back as `(l, β = p̄b − 1)`.
    pub fn from_root(v: &LVec) -> Option<CandidateRoot> {
        if v.len() != LEECH_RANK + 2 || v.coords[LEECH_RANK] != Hq::ONE {
            return None;
        }
        let beta = Hq::P.conj() * v.coords[LEECH_RANK + 1] - Hq::ONE;
        CandidateRoot::new(LVec::new(v.coords[..LEECH_RANK].to_vec()), beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairType {
    Commute,
    Braid,
    Neither,
}

/// `[l, l′] = Im⟨l, l′⟩`
pub fn bracket(leech: &HLattice, l: &LVec, m: &LVec) -> Hq {
    let ip = leech.ip(&l.coords, &m.coords);
    ip - Hq::from_int(ip.re2() / 2)
}

/// `|l − l′|²`
pub fn dist2(leech: &HLattice, l: &LVec, m: &LVec) -> i64 {
    leech.norm(&(l - m))
}

/// Commute: `|l − l′|² = −4` and `β − β′ = [l, l′]`.
/// Braid: `|l − l′|² = −6` and `β − β′ = [l, l′] ± i`.
pub fn pair_condition(leech: &HLattice, r: &CandidateRoot, s: &CandidateRoot) -> PairType {
    let d = dist2(leech, &r.l, &s.l);
    let diff = r.beta - s.beta - bracket(leech, &r.l, &s.l);
    if d == -4 && diff.is_zero() {
        PairType::Commute
    } else if d == -6 && (diff == Hq::I || diff == -Hq::I) {
        PairType::Braid
    } else {
        PairType::Neither
    }
}

/// Six candidate roots: three mutually orthogonal braiding pairs.
#[derive(Clone, Debug, Serialize)]
pub struct E8System {
    pub roots: Vec<CandidateRoot>,
    /// `s` with `β₁ − β₂ = [l₁, l₂] + s·i`, per pair.
    pub braid_signs: Vec<i64>,
    /// Size of the filtered list in step (ii).
    pub filtered: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seed {
    /// First vector of the shell and the first admissible partner.
    First,
    /// A random first vector.
    Random(u64),
    Pair(CandidateRoot, CandidateRoot),
}

fn imaginary_betas() -> Vec<Hq> {
    crate::heisen::imaginary_candidates(9).into_iter().filter(|&b| beta_admissible(b)).collect()
}

/// Completes `l₁, l₂` at distance `−6` to a braiding seed pair.
fn seed_pair(leech: &HLattice, l1: &LVec, l2: &LVec) -> Option<(CandidateRoot, CandidateRoot)> {
    if dist2(leech, l1, l2) != -6 {
        return None;
    }
    let br = bracket(leech, l1, l2);
    for b1 in imaginary_betas() {
        for s in [Hq::I, -Hq::I] {
            let b2 = b1 - br - s;
            if beta_admissible(b2) {
                return Some((CandidateRoot { l: l1.clone(), beta: b1 }, CandidateRoot { l: l2.clone(), beta: b2 }));
            }
        }
    }
    None
}

fn braid_sign(leech: &HLattice, r: &CandidateRoot, s: &CandidateRoot) -> i64 {
    let diff = r.beta - s.beta - bracket(leech, &r.l, &s.l);
    if diff == Hq::I {
        1
    } else {
        -1
    }
}

/// Shell vectors `l` whose root commutes with both seed roots, with their `β`.
///
/// Such `l` satisfy `|l − l₁|² = |l − l₂|² = −4` and the cocycle condition
/// `[l₁, l₂] − [l₁, l] + [l₂, l] = −s·i`, and then `β = β₁ − [l₁, l]`.
pub fn filter_shell(leech: &HLattice, shell: &[LVec], r1: &CandidateRoot, r2: &CandidateRoot) -> Vec<CandidateRoot> {
    let s = Hq::from_int(braid_sign(leech, r1, r2));
    let target = -(s * Hq::I);
    let b12 = bracket(leech, &r1.l, &r2.l);
    shell
        .par_iter()
        .filter_map(|l| {
            if dist2(leech, l, &r1.l) != -4 || dist2(leech, l, &r2.l) != -4 {
                return None;
            }
            let b1 = bracket(leech, &r1.l, l);
            if b12 - b1 + bracket(leech, &r2.l, l) != target {
                return None;
            }
            CandidateRoot::new(l.clone(), r1.beta - b1)
        })
        .collect()
}

pub fn find_3e8_system(leech: &HLattice, shell: &[LVec], seed: &Seed) -> Result<E8System> {
    let fail = |m: &str| Error::SearchFailed(m.to_string());
    let (r1, r2) = match seed {
        Seed::Pair(a, b) => (a.clone(), b.clone()),
        Seed::First | Seed::Random(_) => {
            let start = match seed {
                Seed::Random(s) => ChaCha8Rng::seed_from_u64(*s).gen_range(0..shell.len().max(1)),
                _ => 0,
            };
            let l1 = shell.get(start).ok_or_else(|| fail("empty shell"))?;
            shell
                .iter()
                .find_map(|l2| seed_pair(leech, l1, l2))
                .ok_or_else(|| fail("no braiding partner for the seed"))?
        }
    };
    if pair_condition(leech, &r1, &r2) != PairType::Braid {
        return Err(fail("seed pair does not braid"));
    }
    let filtered = filter_shell(leech, shell, &r1, &r2);
    let braids: Vec<(usize, usize)> = (0..filtered.len())
        .flat_map(|a| (a + 1..filtered.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| pair_condition(leech, &filtered[a], &filtered[b]) == PairType::Braid)
        .collect();
    let commute = |a: usize, b: usize| pair_condition(leech, &filtered[a], &filtered[b]) == PairType::Commute;
    for (n, &(a, b)) in braids.iter().enumerate() {
        for &(c, d) in &braids[n + 1..] {
            if commute(a, c) && commute(a, d) && commute(b, c) && commute(b, d) {
                let roots = vec![r1.clone(), r2.clone(), filtered[a].clone(), filtered[b].clone(), filtered[c].clone(), filtered[d].clone()];
                let braid_signs = roots.chunks(2).map(|p| braid_sign(leech, &p[0], &p[1])).collect();
                return Ok(E8System { roots, braid_signs, filtered: filtered.len() });
            }
        }
    }
    Err(fail("no orthogonal pair of E8 diagrams in the filtered list"))
}

/// Column Euclidean reduction of `a` over the Hurwitz order. Returns the
/// unimodular `u` with `a·u` in column echelon form and the number of nonzero
/// columns.
fn column_echelon(a: &Mat<Hq>) -> (Mat<Hq>, usize) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut u = Mat::identity(cols);
    let mut pivot = 0;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pivot..cols).filter(|&c| !m[(r, c)].is_zero()).collect();
            let Some(&best) = nonzero.iter().min_by_key(|&&c| m[(r, c)].norm()) else {
                break;
            };
            if nonzero.len() == 1 {
                swap_cols(&mut m, &mut u, best, pivot);
                pivot += 1;
                break;
            }
            let a_inv = m[(r, best)].inverse().expect("nonzero");
            for &c in &nonzero {
                if c != best {
                    let q = Hq::nearest(&(a_inv.clone() * m[(r, c)].to_qq()));
                    sub_col(&mut m, c, best, q);
                    sub_col(&mut u, c, best, q);
                }
            }
        }
    }
    (u, pivot)
}

fn swap_cols(m: &mut Mat<Hq>, u: &mut Mat<Hq>, a: usize, b: usize) {
    for mat in [m, u] {
        for r in 0..mat.rows() {
            let t = mat[(r, a)];
            mat[(r, a)] = mat[(r, b)];
            mat[(r, b)] = t;
        }
    }
}

/// `col_c -= col_s · q`
fn sub_col(m: &mut Mat<Hq>, c: usize, s: usize, q: Hq) {
    for r in 0..m.rows() {
        let v = m[(r, s)] * q;
        m[(r, c)] -= v;
    }
}

/// A basis of the orthogonal complement of `vs` in the lattice.
pub fn orthogonal_complement(lat: &HLattice, vs: &[LVec]) -> Vec<LVec> {
    let rows: Vec<Vec<Hq>> = vs.iter().map(|v| lat.dual_row(&v.coords)).collect();
    let (u, rank) = column_echelon(&Mat::from_rows(rows));
    (rank..lat.rank()).map(|c| LVec::new(u.col(c))).collect()
}

/// Bezout data for the right ideal `s₁H + s₂H = gH`: returns `(g, a, b)` with `s₁a + s₂b = g`.
fn right_gcd(s1: Hq, s2: Hq) -> (Hq, Hq, Hq) {
    let (u, _) = column_echelon(&Mat::from_rows(vec![vec![s1, s2]]));
    let (a, b) = (u[(0, 0)], u[(1, 0)]);
    (s1 * a + s2 * b, a, b)
}

/// `g` with `Hc₁ + Hc₂ = Hg`.
fn left_gcd(c1: Hq, c2: Hq) -> Hq {
    right_gcd(c1.conj(), c2.conj()).0.conj()
}

/// Two null vectors with `⟨n₁, n₂⟩ = p̄` spanning the orthogonal complement of a 3E8 system.
///
/// With complement basis `u₁, u₂`, `α = |u₁|²`, `β = ⟨u₁, u₂⟩`, the vector
/// `u₁(w − β) + u₂α` is null whenever `|w|² = |β|² − α|u₂|²`. Dividing out the
/// left gcd of its coordinates gives a primitive `n₁`; then `n₂` solves
/// `⟨n₁, n₂⟩ = p̄` and is shifted along `n₁` to norm zero.
pub fn hyperbolic_complement(lat: &HLattice, roots: &[LVec]) -> Result<[LVec; 2]> {
    let fail = |m: &str| Error::SearchFailed(format!("hyperbolic cell: {m}"));
    let basis = orthogonal_complement(lat, roots);
    let [u1, u2] = <[LVec; 2]>::try_from(basis).map_err(|_| fail("complement is not of rank 2"))?;
    let alpha = lat.norm(&u1);
    let n1 = if alpha == 0 {
        u1.clone()
    } else {
        let beta = lat.inner(&u1, &u2)?;
        let m = beta.norm() - alpha * lat.norm(&u2);
        let w = *Hq::of_norm(m).first().ok_or_else(|| fail("no quaternion of the required norm"))?;
        let (c1, c2) = (w - beta, Hq::from_int(alpha));
        let g = left_gcd(c1, c2).inverse().ok_or_else(|| fail("zero gcd"))?;
        let h1 = Hq::from_qq(&(c1.to_qq() * g.clone())).ok_or_else(|| fail("gcd"))?;
        let h2 = Hq::from_qq(&(c2.to_qq() * g)).ok_or_else(|| fail("gcd"))?;
        &u1.mul_right(h1) + &u2.mul_right(h2)
    };
    if lat.norm(&n1) != 0 {
        return Err(fail("null vector construction"));
    }
    let (g, a, b) = right_gcd(lat.inner(&n1, &u1)?, lat.inner(&n1, &u2)?);
    let t = Hq::from_qq(&(g.inverse().ok_or_else(|| fail("degenerate pairing"))? * Hq::P.conj().to_qq()))
        .ok_or_else(|| fail("pairing ideal is not pH"))?;
    let v0 = &u1.mul_right(a * t) + &u2.mul_right(b * t);
    let n2 = &v0 - &n1.mul_right(Hq::from_int(lat.norm(&v0) / 2));
    if lat.norm(&n2) != 0 || lat.inner(&n1, &n2)? != Hq::P.conj() {
        return Err(fail("second null vector"));
    }
    Ok([n1, n2])
}

/// A change of basis from `LLeechH` coordinates to `3E8 ⊕ H` coordinates.
#[derive(Clone, Debug)]
pub struct BasisChange {
    /// The new basis in `LLeechH` coordinates.
    pub rows: Vec<LVec>,
    /// Columns are the rows above.
    pub matrix: Mat<Hq>,
    pub inverse: Mat<Hq>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    To3E8H,
    ToLeechH,
}

pub fn change_of_basis(lat: &HLattice, rows: Vec<LVec>) -> Result<BasisChange> {
    let target = make_lattice(LatticeName::L3E8H);
    if rows.len() != lat.rank() || rows.iter().any(|r| r.len() != lat.rank()) {
        return Err(Error::LatticeMismatch);
    }
    let gram = Mat::from_rows(rows.iter().map(|a| rows.iter().map(|b| lat.ip(&a.coords, &b.coords)).collect()).collect());
    if &gram != target.gram() {
        return Err(Error::NotHurwitzIsomorphism);
    }
    let matrix = Mat::from_cols(&rows.iter().map(|r| r.coords.clone()).collect::<Vec<_>>());
    let inverse = linalg::inverse(&linalg::hq_to_qq(&matrix))
        .and_then(|m| linalg::qq_to_hq(&m))
        .ok_or(Error::NotHurwitzIsomorphism)?;
    Ok(BasisChange { rows, matrix, inverse })
}

/// Orders a system and its cell so the Gram is exactly that of `3E8 ⊕ H`.
pub fn assemble(lat: &HLattice, sys: &E8System, cell: &[LVec; 2]) -> Result<BasisChange> {
    let mut rows = Vec::with_capacity(8);
    for pair in sys.roots.chunks(2) {
        let (x, y) = (pair[0].root(), pair[1].root());
        // E8 blocks have ⟨first, second⟩ = p̄
        if lat.ip(&x.coords, &y.coords) == Hq::P.conj() {
            rows.extend([x, y]);
        } else {
            rows.extend([y, x]);
        }
    }
    rows.extend(cell.iter().cloned());
    change_of_basis(lat, rows)
}

impl BasisChange {
    pub fn convert(&self, v: &LVec, dir: Direction) -> LVec {
        let m = match dir {
            Direction::To3E8H => &self.inverse,
            Direction::ToLeechH => &self.matrix,
        };
        LVec::new(m.mul_vec(&v.coords))
    }

    /// Rows in ambient `H⁶ ⊕ H` coordinates.
    pub fn ambient_rows(&self, lat: &HLattice) -> Vec<Vec<Hq>> {
        self.rows.iter().map(|r| lat.to_ambient(r).expect("lattice with ambient")).collect()
    }
}

/// The reference basis change, read from ambient rows.
pub fn reference_basis_change(lat: &HLattice, fixtures: &Fixtures) -> Result<BasisChange> {
    let rows = fixtures
        .basis_change
        .iter()
        .map(|r| lat.from_ambient(&r.coords).ok_or(Error::NotHurwitzIsomorphism))
        .collect::<Result<Vec<_>>>()?;
    change_of_basis(lat, rows)
}

pub fn leech() -> HLattice {
    make_lattice(LatticeName::Leech)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidate_roots_have_norm_minus_two() {
        let lat = make_lattice(LatticeName::LLeechH);
        let l = LVec::basis(6, 1);
        let r = CandidateRoot::new(l, Hq::I).unwrap();
        assert_eq!(lat.norm(&r.root()), -2);
        assert_eq!(CandidateRoot::from_root(&r.root()), Some(r));
        assert!(CandidateRoot::new(LVec::basis(6, 1), Hq::I + Hq::J).is_none());
    }

    #[test]
    fn equal_candidates_are_neither() {
        let leech = leech();
        let r = CandidateRoot::new(LVec::basis(6, 0), Hq::I).unwrap();
        assert_eq!(pair_condition(&leech, &r, &r), PairType::Neither);
    }

    #[test]
    fn nearest_rounding() {
        let l = make_lattice(LatticeName::LLeechH);
        let comp = orthogonal_complement(&l, &[LVec::basis(8, 0), LVec::basis(8, 3)]);
        assert_eq!(comp.len(), 6);
        for c in &comp {
            assert!(l.ip(&LVec::basis(8, 0).coords, &c.coords).is_zero());
        }
    }
}
