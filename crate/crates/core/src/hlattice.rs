//! Hermitian lattices over the Hurwitz integers.
//!
//! A lattice is a free right `H`-module with basis `e_1..e_n` and Gram matrix
//! `G[s][t] = ⟨e_s, e_t⟩`. Vectors are coordinate columns in that basis, and
//! `⟨x, y⟩ = x*·G·y`, which is conjugate-linear in the first slot and linear in
//! the second.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, ParseError, Result};
use crate::hquat::{rat, Hq, Qq, R2Quat, Rational};
use crate::linalg::{self, Mat, Scalar};

/// A lattice vector given by its coordinates in the lattice basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LVec {
    pub coords: Vec<Hq>,
}

impl LVec {
    pub fn new(coords: Vec<Hq>) -> LVec {
        LVec { coords }
    }

    pub fn zero(n: usize) -> LVec {
        LVec { coords: vec![Hq::ZERO; n] }
    }

    pub fn basis(n: usize, t: usize) -> LVec {
        let mut v = LVec::zero(n);
        v.coords[t] = Hq::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Hq::is_zero)
    }

    /// Right scalar multiplication `v·a`.
    pub fn mul_right(&self, a: Hq) -> LVec {
        LVec { coords: self.coords.iter().map(|&x| x * a).collect() }
    }

    pub fn to_qq(&self) -> Vec<Qq> {
        linalg::vec_hq_to_qq(&self.coords)
    }

    pub fn to_r2q(&self) -> Vec<R2Quat> {
        linalg::vec_hq_to_r2q(&self.coords)
    }

    pub fn from_qq(v: &[Qq]) -> Option<LVec> {
        linalg::vec_qq_to_hq(v).map(LVec::new)
    }

    /// Concatenation, used for direct sums.
    pub fn concat(&self, other: &LVec) -> LVec {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        LVec { coords }
    }
}

impl Add for &LVec {
    type Output = LVec;
    fn add(self, o: &LVec) -> LVec {
        assert_eq!(self.len(), o.len(), "lattice mismatch");
        LVec { coords: self.coords.iter().zip(&o.coords).map(|(&a, &b)| a + b).collect() }
    }
}

impl Sub for &LVec {
    type Output = LVec;
    fn sub(self, o: &LVec) -> LVec {
        assert_eq!(self.len(), o.len(), "lattice mismatch");
        LVec { coords: self.coords.iter().zip(&o.coords).map(|(&a, &b)| a - b).collect() }
    }
}

impl Neg for &LVec {
    type Output = LVec;
    fn neg(self) -> LVec {
        LVec { coords: self.coords.iter().map(|&a| -a).collect() }
    }
}

impl fmt::Display for LVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(Hq::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for LVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for LVec {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<LVec, ParseError> {
        let coords = s
            .split_whitespace()
            .map(str::parse::<Hq>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ParseError::Vector(s.to_string()))?;
        Ok(LVec { coords })
    }
}

impl serde::Serialize for LVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An embedding of the lattice into a coordinate space with a fixed form.
#[derive(Clone, Debug)]
pub struct Ambient {
    /// Gram matrix of the ambient coordinate space.
    pub form: Mat<Qq>,
    /// Columns are the lattice basis vectors in ambient coordinates.
    pub basis: Mat<Hq>,
}

/// Named lattices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeName {
    /// `Hⁿ` with `⟨x, y⟩ = −Σ x̄_s y_s`.
    Standard(usize),
    /// The hyperbolic cell with Gram `[[0, p̄], [p, 0]]`.
    HyperbolicCell,
    E8,
    Leech,
    /// `E8 ⊕ E8 ⊕ E8 ⊕ H`.
    L3E8H,
    /// `Λ ⊕ H`.
    LLeechH,
}

#[derive(Clone, Debug)]
pub struct HLattice {
    pub name: String,
    gram: Mat<Hq>,
    ambient: Option<Ambient>,
}

/// The six Leech lattice basis vectors in `H⁶`.
pub fn leech_basis() -> [[Hq; 6]; 6] {
    let z = Hq::ZERO;
    let two = Hq::from_int(2);
    let one = Hq::ONE;
    let ijk = Hq::I + Hq::J + Hq::K;
    let one_k = Hq::ONE + Hq::K;
    let one_j = Hq::ONE + Hq::J;
    [
        [Hq::new(2, 2, 0, 0), z, z, z, z, z],
        [two, two, z, z, z, z],
        [z, two, two, z, z, z],
        [ijk, one, one, one, one, one],
        [z, z, one_k, one_j, one_j, one_k],
        [z, one_j, one_j, one_k, z, one_k],
    ]
}

/// The three congruences cutting `Λ` out of `H⁶`, coordinates ordered
/// `(v∞, v0, v1, v2, v3, v4)`.
pub fn leech_contains(v: &[Hq]) -> bool {
    assert_eq!(v.len(), 6);
    let [vinf, v0, v1, v2, v3, v4] = [v[0], v[1], v[2], v[3], v[4], v[5]];
    let in_2h = |x: Hq| x.half().is_some();
    if !(v2 - v3).in_p_ideal() || !(v3 - v4).in_p_ideal() {
        return false;
    }
    let w = Hq::OMEGA;
    let wb = w.conj();
    if !in_2h((v1 + v4) * wb + (v2 + v3) * w) || !in_2h((v0 + v1) * w + (v2 + v4) * wb) {
        return false;
    }
    let s = -(vinf * (Hq::I + Hq::J + Hq::K)) + v0 + v1 + v2 + v3 + v4;
    // (2+2i)H = 2pH
    matches!(s.half(), Some(h) if h.in_p_ideal())
}

/// Gram of the rank-2 `E8` in the basis `((−p, 0), (1, −1))` of the standard lattice `H²`.
pub fn e8_gram() -> Mat<Hq> {
    Mat::from_rows(vec![vec![Hq::from_int(-2), Hq::P.conj()], vec![Hq::P, Hq::from_int(-2)]])
}

/// Columns are the `E8` basis vectors in `H²`.
pub fn e8_basis() -> Mat<Hq> {
    Mat::from_cols(&[vec![-Hq::P, Hq::ZERO], vec![Hq::ONE, -Hq::ONE]])
}

pub fn hyperbolic_gram() -> Mat<Hq> {
    Mat::from_rows(vec![vec![Hq::ZERO, Hq::P.conj()], vec![Hq::P, Hq::ZERO]])
}

/// Z-basis of the Hurwitz order used for real forms.
const Z_BASIS: [Hq; 4] = [Hq::ONE, Hq::I, Hq::J, Hq::OMEGA];

impl HLattice {
    pub fn new(name: impl Into<String>, gram: Mat<Hq>) -> Result<HLattice> {
        if !gram.is_hermitian() {
            return Err(Error::BadGram);
        }
        Ok(HLattice { name: name.into(), gram, ambient: None })
    }

    /// Lattice spanned by the columns of `basis` inside a space with Gram `form`.
    pub fn with_ambient(name: impl Into<String>, form: Mat<Qq>, basis: Mat<Hq>) -> Result<HLattice> {
        let b = linalg::hq_to_qq(&basis);
        let g = &(&b.adjoint() * &form) * &b;
        let gram = linalg::qq_to_hq(&g).ok_or(Error::BadGram)?;
        let mut lat = HLattice::new(name, gram)?;
        lat.ambient = Some(Ambient { form, basis });
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Mat<Hq> {
        &self.gram
    }

    pub fn gram_qq(&self) -> Mat<Qq> {
        linalg::hq_to_qq(&self.gram)
    }

    pub fn ambient(&self) -> Option<&Ambient> {
        self.ambient.as_ref()
    }

    /// `⟨x, y⟩` for coordinate slices; panics on length mismatch.
    pub fn ip(&self, x: &[Hq], y: &[Hq]) -> Hq {
        let n = self.rank();
        assert!(x.len() == n && y.len() == n, "lattice mismatch");
        let mut acc = Hq::ZERO;
        for s in 0..n {
            if x[s].is_zero() {
                continue;
            }
            let xs = x[s].conj();
            let mut row = Hq::ZERO;
            for t in 0..n {
                let g = self.gram[(s, t)];
                if !g.is_zero() && !y[t].is_zero() {
                    row += g * y[t];
                }
            }
            acc += xs * row;
        }
        acc
    }

    pub fn inner(&self, x: &LVec, y: &LVec) -> Result<Hq> {
        if x.len() != self.rank() || y.len() != self.rank() {
            return Err(Error::LatticeMismatch);
        }
        Ok(self.ip(&x.coords, &y.coords))
    }

    pub fn norm(&self, x: &LVec) -> i64 {
        let n = self.ip(&x.coords, &x.coords);
        debug_assert!(n.is_real());
        n.re2() / 2
    }

    /// Inner product of rational vectors.
    pub fn inner_qq(&self, x: &[Qq], y: &[Qq]) -> Qq {
        generic_inner(&self.gram_qq(), x, y)
    }

    /// Inner product of vectors with `Q(√2)` quaternion coordinates.
    pub fn inner_ext(&self, x: &[R2Quat], y: &[R2Quat]) -> R2Quat {
        generic_inner(&self.gram.map(Hq::to_r2q), x, y)
    }

    /// The row `y ↦ ⟨x, y⟩` as coefficients, i.e. `x*·G`.
    pub fn dual_row(&self, x: &[Hq]) -> Vec<Hq> {
        let n = self.rank();
        (0..n)
            .map(|t| {
                let mut acc = Hq::ZERO;
                for s in 0..n {
                    acc += x[s].conj() * self.gram[(s, t)];
                }
                acc
            })
            .collect()
    }

    pub fn to_ambient(&self, v: &LVec) -> Option<Vec<Hq>> {
        let amb = self.ambient.as_ref()?;
        Some(amb.basis.mul_vec(&v.coords))
    }

    /// Span membership: coordinates of an ambient vector, if it lies in the lattice.
    pub fn from_ambient(&self, v: &[Hq]) -> Option<LVec> {
        let amb = self.ambient.as_ref()?;
        let b = linalg::hq_to_qq(&amb.basis);
        let c = linalg::solve(&b, &linalg::vec_hq_to_qq(v))?;
        LVec::from_qq(&c)
    }

    /// Whether `L′p = L`, tested as `G⁻¹p` and `p⁻¹G` both being Hurwitz matrices.
    pub fn is_p_modular(&self) -> Result<bool> {
        let g = self.gram_qq();
        let ginv = linalg::inverse(&g).ok_or(Error::DegenerateLattice)?;
        let p = Hq::P.to_qq();
        let pinv = p.inv().expect("p is invertible");
        let a = ginv.map(|x| x.clone() * p.clone());
        let b = g.map(|x| pinv.clone() * x.clone());
        Ok(linalg::qq_to_hq(&a).is_some() && linalg::qq_to_hq(&b).is_some())
    }

    /// Real Gram `Re⟨b_a, b_b⟩` over the Z-basis `e_s·m`, `m ∈ {1, i, j, ω}`.
    fn real_gram(&self) -> Vec<Vec<Rational>> {
        let n = self.rank();
        let dim = 4 * n;
        let mut out = vec![vec![rat(0, 1); dim]; dim];
        for s in 0..n {
            for t in 0..n {
                let g = self.gram[(s, t)];
                for (a, ma) in Z_BASIS.iter().enumerate() {
                    for (b, mb) in Z_BASIS.iter().enumerate() {
                        out[4 * s + a][4 * t + b] = (ma.conj() * g * *mb).re();
                    }
                }
            }
        }
        out
    }

    pub fn real_form_signature(&self) -> (usize, usize) {
        linalg::signature(&self.real_gram())
    }

    /// Regroups integer coordinates over the Z-basis into Hurwitz coordinates.
    pub fn from_z_coords(&self, x: &[i64]) -> LVec {
        LVec::new(
            x.chunks(4)
                .map(|c| c.iter().zip(Z_BASIS).fold(Hq::ZERO, |acc, (&k, m)| acc + Hq::from_int(k) * m))
                .collect(),
        )
    }

    /// Integer matrix of `−2·Re⟨·,·⟩` on the Z-basis, positive definite for
    /// negative definite lattices.
    pub fn negated_real_gram_int(&self) -> Vec<Vec<i64>> {
        self.real_gram()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let y = x * rat(-2, 1);
                        debug_assert!(y.is_integer());
                        y.to_integer().to_i64().expect("small real gram")
                    })
                    .collect()
            })
            .collect()
    }

    /// All lattice vectors of the given (negative) norm, in canonical order.
    pub fn shell_enumerate(&self, norm: i64) -> Result<Vec<LVec>> {
        let a = self.negated_real_gram_int();
        let dim = a.len();
        let sig = self.real_form_signature();
        if sig != (0, dim) {
            return Err(Error::IndefiniteEnumeration);
        }
        if norm > 0 {
            return Ok(Vec::new());
        }
        if norm == 0 {
            return Ok(vec![LVec::zero(self.rank())]);
        }
        let fp = FinckePohst::new(&a)?;
        let target = i128::from(-2 * norm);
        let mut out: Vec<LVec> = fp.enumerate(target).into_iter().map(|x| self.from_z_coords(&x)).collect();
        out.sort();
        Ok(out)
    }

    pub fn direct_sum(name: impl Into<String>, parts: &[&HLattice]) -> Result<HLattice> {
        let gram = Mat::block_diag(&parts.iter().map(|l| l.gram.clone()).collect::<Vec<_>>());
        let ambients: Option<Vec<&Ambient>> = parts.iter().map(|l| l.ambient.as_ref()).collect();
        let mut lat = HLattice::new(name, gram)?;
        if let Some(ambs) = ambients {
            let form = Mat::block_diag(&ambs.iter().map(|a| a.form.clone()).collect::<Vec<_>>());
            let basis = Mat::block_diag(&ambs.iter().map(|a| a.basis.clone()).collect::<Vec<_>>());
            lat.ambient = Some(Ambient { form, basis });
        }
        Ok(lat)
    }

    /// Text form: `rank n` followed by `n` Gram rows.
    pub fn to_text(&self) -> String {
        let mut s = format!("rank {}\n", self.rank());
        for r in 0..self.rank() {
            let row: Vec<String> = self.gram.row(r).iter().map(Hq::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(name: &str, text: &str) -> Result<HLattice> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| ParseError::Lattice("empty file".into()))?;
        let n: usize = header
            .strip_prefix("rank")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| ParseError::Lattice(format!("bad header `{header}`")))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines.next().ok_or_else(|| ParseError::Lattice("missing gram row".into()))?;
            let v: LVec = line.parse()?;
            if v.len() != n {
                return Err(ParseError::Lattice(format!("row has {} entries, expected {n}", v.len())).into());
            }
            rows.push(v.coords);
        }
        HLattice::new(name, Mat::from_rows(rows))
    }
}

fn generic_inner<T: Scalar>(g: &Mat<T>, x: &[T], y: &[T]) -> T {
    let gy = g.mul_vec(y);
    x.iter().zip(gy).fold(T::zero(), |acc, (a, b)| acc + a.conj() * b)
}

fn standard_form(n: usize, scale: Rational) -> Mat<Qq> {
    let mut m = Mat::zeros(n, n);
    for t in 0..n {
        m[(t, t)] = Qq::scalar(scale.clone());
    }
    m
}

pub fn make_lattice(name: LatticeName) -> HLattice {
    match name {
        LatticeName::Standard(n) => {
            HLattice::with_ambient(format!("H^{n}"), standard_form(n, rat(-1, 1)), Mat::identity(n))
                .expect("standard lattice")
        }
        LatticeName::HyperbolicCell => {
            HLattice::with_ambient("H", linalg::hq_to_qq(&hyperbolic_gram()), Mat::identity(2))
                .expect("hyperbolic cell")
        }
        LatticeName::E8 => HLattice::with_ambient("E8", standard_form(2, rat(-1, 1)), e8_basis()).expect("E8"),
        LatticeName::Leech => {
            let bb = leech_basis();
            let cols: Vec<Vec<Hq>> = bb.iter().map(|v| v.to_vec()).collect();
            HLattice::with_ambient("Leech", standard_form(6, rat(-1, 2)), Mat::from_cols(&cols)).expect("Leech")
        }
        LatticeName::L3E8H => {
            let e8 = make_lattice(LatticeName::E8);
            let h = make_lattice(LatticeName::HyperbolicCell);
            HLattice::direct_sum("3E8+H", &[&e8, &e8, &e8, &h]).expect("3E8+H")
        }
        LatticeName::LLeechH => {
            let l = make_lattice(LatticeName::Leech);
            let h = make_lattice(LatticeName::HyperbolicCell);
            HLattice::direct_sum("Leech+H", &[&l, &h]).expect("Leech+H")
        }
    }
}

/// Exact Fincke–Pohst enumeration for a positive definite integer quadratic form.
///
/// Fraction-free elimination gives `Q(x) = Σ_k Y_k² / (d_k·d_{k+1})` where
/// `d_k` are the leading principal minors and `Y_k = Σ_{j≥k} U_kj x_j` has
/// integer coefficients. The remaining budget is carried scaled by the common
/// denominator, so every pruning decision is an integer comparison.
pub struct FinckePohst {
    n: usize,
    /// Upper-triangular fraction-free rows; `u[k][k] = d_{k+1}`.
    u: Vec<Vec<i128>>,
    /// `lcm(d_k d_{k+1}) / (d_k d_{k+1})`
    weight: Vec<i128>,
    scale: i128,
}

impl FinckePohst {
    pub fn new(a: &[Vec<i64>]) -> Result<FinckePohst> {
        let n = a.len();
        let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut d = vec![BigInt::from(1)];
        let mut u = Vec::with_capacity(n);
        let mut prev = BigInt::from(1);
        for k in 0..n {
            let pk = m[k][k].clone();
            if !pk.is_positive() {
                return Err(Error::IndefiniteEnumeration);
            }
            d.push(pk.clone());
            let row: Vec<i128> = (0..n)
                .map(|j| if j < k { 0 } else { m[k][j].to_i128().expect("fraction-free row fits i128") })
                .collect();
            u.push(row);
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&pk * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = pk;
        }
        let mut lcm = BigInt::from(1);
        for k in 0..n {
            let prod = &d[k] * &d[k + 1];
            lcm = num_integer::Integer::lcm(&lcm, &prod);
        }
        let weight = (0..n)
            .map(|k| (&lcm / (&d[k] * &d[k + 1])).to_i128().expect("weight fits i128"))
            .collect();
        let scale = lcm.to_i128().expect("denominator fits i128");
        Ok(FinckePohst { n, u, weight, scale })
    }

    /// All `x` with `xᵀAx = target`.
    pub fn enumerate(&self, target: i128) -> Vec<Vec<i64>> {
        let budget = target.checked_mul(self.scale).expect("enumeration budget overflow");
        // split the top levels into independent prefixes
        let mut prefixes: Vec<(Vec<i64>, i128)> = vec![(vec![0; self.n], budget)];
        let split_depth = self.n.min(3);
        for lvl in (self.n - split_depth..self.n).rev() {
            let mut next = Vec::new();
            for (x, b) in prefixes {
                for (xi, rem) in self.level_values(&x, lvl, b) {
                    let mut y = x.clone();
                    y[lvl] = xi;
                    next.push((y, rem));
                }
            }
            prefixes = next;
        }
        let start = self.n - split_depth;
        let mut out: Vec<Vec<i64>> = prefixes
            .into_par_iter()
            .flat_map_iter(|(mut x, b)| {
                let mut found = Vec::new();
                if start == 0 {
                    if b == 0 {
                        found.push(x.clone());
                    }
                } else {
                    self.recurse(&mut x, start - 1, b, &mut found);
                }
                found
            })
            .collect();
        out.sort();
        out
    }

    fn level_values(&self, x: &[i64], k: usize, budget: i128) -> Vec<(i64, i128)> {
        let row = &self.u[k];
        let mut c: i128 = 0;
        for j in k + 1..self.n {
            if x[j] != 0 {
                c = c.checked_add(row[j].checked_mul(i128::from(x[j])).expect("overflow")).expect("overflow");
            }
        }
        let dk = row[k];
        let w = self.weight[k];
        // Y² · w ≤ budget
        let ymax = (budget / w).sqrt();
        let lo = div_ceil(-ymax - c, dk);
        let hi = div_floor(ymax - c, dk);
        let mut vals = Vec::new();
        for xi in lo..=hi {
            let y = dk * xi + c;
            let cost = y.checked_mul(y).and_then(|v| v.checked_mul(w)).expect("overflow");
            if cost <= budget {
                vals.push((i64::try_from(xi).expect("coordinate fits i64"), budget - cost));
            }
        }
        vals
    }

    fn recurse(&self, x: &mut [i64], k: usize, budget: i128, out: &mut Vec<Vec<i64>>) {
        for (xi, rem) in self.level_values(x, k, budget) {
            x[k] = xi;
            if k == 0 {
                if rem == 0 {
                    out.push(x.to_vec());
                }
            } else {
                self.recurse(x, k - 1, rem, out);
            }
        }
        x[k] = 0;
    }
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

impl Zero for LVec {
    fn zero() -> Self {
        LVec::default()
    }
    fn is_zero(&self) -> bool {
        LVec::is_zero(self)
    }
}

impl Add for LVec {
    type Output = LVec;
    fn add(self, o: LVec) -> LVec {
        if self.is_empty() {
            return o;
        }
        if o.is_empty() {
            return self;
        }
        &self + &o
    }
}
