//! Heights of roots relative to the Weyl vector, greedy height reduction, and
//! the exhaustive search for roots of minimal height.
//!
//! For a root `r` put `A = ⟨Σ_P, r⟩` and `B = ⟨Σ_L, r⟩`. Then
//! `⟨ρ̄, r⟩ = (A + ξ̄B)/14` and `ht(r)² = X·(22 + 12√2)/196` with
//! `X = |A|² + |B|² + √2·Re(Ā(1 − i)B)`, so heights compare as the values `X`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{rho_norm_expected, weyl_data, Diagram, WeylData};
use crate::error::{Error, Result};
use crate::hlattice::{HLattice, LVec};
use crate::hquat::{rat, Hq, R2};
use crate::reflect;

/// `X = n + √2·m2/2`, ordered exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HeightKey {
    pub n: i64,
    pub m2: i64,
}

impl HeightKey {
    /// The key of every diagram root, `22 − 12√2`.
    pub const ONE: HeightKey = HeightKey { n: 22, m2: -24 };

    pub fn x(&self) -> R2 {
        R2::new(rat(self.n, 1), rat(self.m2, 2))
    }

    /// Exact `ht²`.
    pub fn squared(&self) -> R2 {
        self.x() * R2::new(rat(22, 196), rat(12, 196))
    }

    pub fn display(&self) -> f64 {
        self.squared().to_f64().sqrt()
    }
}

impl Ord for HeightKey {
    fn cmp(&self, o: &Self) -> Ordering {
        // sign of (2n − 2n′) + √2(m2 − m2′)
        let a = 2 * (i128::from(self.n) - i128::from(o.n));
        let b = i128::from(self.m2) - i128::from(o.m2);
        match (a.signum(), b.signum()) {
            (x, y) if x >= 0 && y >= 0 => (x + y).cmp(&0),
            (x, y) if x <= 0 && y <= 0 => 0.cmp(&-(x + y)),
            // opposite signs: compare a² with 2b²
            (x, _) => {
                let c = (a * a).cmp(&(2 * b * b));
                if x > 0 {
                    c
                } else {
                    c.reverse()
                }
            }
        }
    }
}

impl PartialOrd for HeightKey {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeightValue {
    /// `ht²` in `Q(√2)`.
    pub squared: String,
    pub display: f64,
}

impl From<HeightKey> for HeightValue {
    fn from(k: HeightKey) -> Self {
        HeightValue { squared: k.squared().to_string(), display: k.display() }
    }
}

/// Everything needed to compute heights and reflect in diagram roots.
pub struct Heights {
    pub diagram: Diagram,
    pub weyl: WeylData,
    sigma_p_row: Vec<Hq>,
    sigma_l_row: Vec<Hq>,
}

/// Units of the 98 candidate reflections, per diagram root.
pub fn reflection_units() -> [(&'static str, Hq); 7] {
    [("i", Hq::I), ("-i", -Hq::I), ("j", Hq::J), ("-j", -Hq::J), ("k", Hq::K), ("-k", -Hq::K), ("-1", -Hq::ONE)]
}

fn dot(row: &[Hq], v: &[Hq]) -> Hq {
    row.iter().zip(v).fold(Hq::ZERO, |acc, (&a, &b)| if b.is_zero() { acc } else { acc + a * b })
}

impl Heights {
    pub fn new(diagram: Diagram) -> Result<Heights> {
        let weyl = weyl_data(&diagram)?;
        let sigma_p_row = diagram.lattice.dual_row(&weyl.sigma_p.coords);
        let sigma_l_row = diagram.lattice.dual_row(&weyl.sigma_l.coords);
        Ok(Heights { diagram, weyl, sigma_p_row, sigma_l_row })
    }

    pub fn lattice(&self) -> &HLattice {
        &self.diagram.lattice
    }

    pub fn key(&self, r: &LVec) -> HeightKey {
        let a = dot(&self.sigma_p_row, &r.coords);
        let b = dot(&self.sigma_l_row, &r.coords);
        let m = a.conj() * Hq::P * b;
        HeightKey { n: a.norm() + b.norm(), m2: m.re2() }
    }

    pub fn height(&self, r: &LVec) -> HeightValue {
        self.key(r).into()
    }

    /// Index of the diagram root `d` and the unit `u` with `r = d·u`.
    pub fn unit_multiple_of_diagram_root(&self, r: &LVec) -> Option<(usize, Hq)> {
        for (s, d) in self.diagram.roots.iter().enumerate() {
            let t = d.coords.iter().position(|c| !c.is_zero())?;
            let Some(inv) = d.coords[t].inverse() else { continue };
            if let Some(u) = Hq::from_qq(&(inv * r.coords[t].to_qq())) {
                if u.is_unit() && d.mul_right(u) == *r {
                    return Some((s, u));
                }
            }
        }
        None
    }

    fn reflect(&self, s: usize, mu: Hq, r: &LVec) -> LVec {
        reflect::reflect_vec(self.lattice(), &self.diagram.roots[s], mu, r).expect("diagram reflections are integral")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub label: &'static str,
    pub unit: &'static str,
    pub height: HeightValue,
    pub perturbation: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionTrace {
    pub start: LVec,
    pub start_height: HeightValue,
    pub steps: Vec<TraceStep>,
    pub terminal: LVec,
    pub terminal_label: &'static str,
    pub terminal_unit: Hq,
    pub perturbations: usize,
}

pub const STEP_CAP: usize = 10_000;

enum Descent {
    Done(LVec),
    Stuck(LVec, HeightKey),
}

/// Pure greedy descent, appending to `steps`.
fn descend(h: &Heights, mut cur: LVec, steps: &mut Vec<TraceStep>) -> Result<Descent> {
    let labels: Vec<&'static str> = Diagram::labels().collect();
    let units = reflection_units();
    let mut key = h.key(&cur);
    while key != HeightKey::ONE {
        if steps.len() >= STEP_CAP {
            return Err(Error::ReductionFailed("step cap exceeded".into()));
        }
        let mut best: Option<(HeightKey, usize, usize, LVec)> = None;
        for s in 0..14 {
            for (ui, &(_, mu)) in units.iter().enumerate() {
                let v = h.reflect(s, mu, &cur);
                let k = h.key(&v);
                if k < key && best.as_ref().is_none_or(|b| k < b.0) {
                    best = Some((k, s, ui, v));
                }
            }
        }
        let Some((k, s, ui, v)) = best else { return Ok(Descent::Stuck(cur, key)) };
        steps.push(TraceStep { label: labels[s], unit: units[ui].0, height: k.into(), perturbation: false });
        cur = v;
        key = k;
    }
    Ok(Descent::Done(cur))
}

/// Greedy descent through the 98 diagram reflections. When no reflection
/// lowers the height, the candidates are tried in turn as a single
/// perturbation (`φ_a^i` first) until one leads to an unobstructed descent.
pub fn reduce(h: &Heights, r: &LVec) -> Result<ReductionTrace> {
    if h.lattice().norm(r) != -2 {
        return Err(Error::NotARoot);
    }
    let labels: Vec<&'static str> = Diagram::labels().collect();
    let mut steps = Vec::new();
    let (terminal, perturbations) = match descend(h, r.clone(), &mut steps)? {
        Descent::Done(t) => (t, 0),
        Descent::Stuck(cur, key) => {
            let mut found = None;
            'outer: for s in 0..14 {
                for &(name, mu) in &reflection_units() {
                    let v = h.reflect(s, mu, &cur);
                    let mut tail = steps.clone();
                    tail.push(TraceStep { label: labels[s], unit: name, height: h.key(&v).into(), perturbation: true });
                    if let Descent::Done(t) = descend(h, v, &mut tail)? {
                        found = Some((t, tail));
                        break 'outer;
                    }
                }
            }
            let (t, tail) = found.ok_or_else(|| {
                Error::ReductionFailed(format!("stuck at height squared {} with no escaping perturbation", key.squared()))
            })?;
            steps = tail;
            (t, 1)
        }
    };
    let (s, u) = h
        .unit_multiple_of_diagram_root(&terminal)
        .ok_or_else(|| Error::ReductionFailed("height one but not a diagram root".into()))?;
    Ok(ReductionTrace {
        start: r.clone(),
        start_height: h.key(r).into(),
        steps,
        terminal,
        terminal_label: labels[s],
        terminal_unit: u,
        perturbations,
    })
}

/// Canonical representative of `{r·u}`: the least under the vector order.
pub fn unit_class_rep(r: &LVec) -> LVec {
    Hq::units().into_iter().map(|u| r.mul_right(u)).min().expect("24 units")
}

#[derive(Clone, Debug, Serialize)]
pub struct MinHeightReport {
    /// Whether every pattern block was searched.
    pub exhaustive: bool,
    pub attempts: u64,
    pub integral: u64,
    /// Unit classes of roots with height at most one.
    pub classes: Vec<LVec>,
    /// Labels of the diagram roots the classes are unit multiples of.
    pub labels: Vec<Option<&'static str>>,
    pub all_height_one: bool,
}

/// One block of the search: which point slots carry norm 2 and norm 4 values.
#[derive(Clone, Debug)]
struct Pattern {
    w: Hq,
    twos: Vec<usize>,
    fours: Vec<usize>,
}

fn patterns() -> Vec<Pattern> {
    use itertools::Itertools;
    let mut out = Vec::new();
    // Σ|⟨x_s, r⟩|² = 4 + |⟨w_P, r⟩|², with ⟨w_P, r⟩ scaled into {0, p, 2}
    for (w, total) in [(Hq::ZERO, 4), (Hq::P, 6), (Hq::from_int(2), 8)] {
        for n4 in 0..=total / 4 {
            let n2 = (total - 4 * n4) / 2;
            if n2 + n4 > 7 {
                continue;
            }
            for fours in (0..7).combinations(n4) {
                let rest: Vec<usize> = (0..7).filter(|s| !fours.contains(s)).collect();
                for twos in rest.into_iter().combinations(n2) {
                    out.push(Pattern { w, twos, fours: fours.clone() });
                }
            }
        }
    }
    out
}

/// Exhaustive search over the values `⟨x_s, r⟩` and `⟨w_P, r⟩`, reconstructing
/// `r = Σ −x_s⟨x_s, r⟩/2 + w_P⟨w_P, r⟩/2` and keeping lattice roots of height at most one.
pub fn enumerate_min_height(h: &Heights) -> MinHeightReport {
    enumerate_min_height_sampled(h, 1)
}

/// Searches every `stride`-th pattern block only.
pub fn enumerate_min_height_sampled(h: &Heights, stride: usize) -> MinHeightReport {
    let blocks: Vec<Pattern> = patterns().into_iter().step_by(stride.max(1)).collect();
    let n2 = Hq::of_norm(2);
    let n4 = Hq::of_norm(4);
    let points: Vec<&LVec> = (0..7).map(|x| h.diagram.point(x)).collect();
    let w_p = &h.weyl.w_p;
    let results: Vec<(u64, u64, Vec<LVec>)> = blocks
        .par_iter()
        .map(|pat| {
            let mut slots: Vec<(usize, bool)> =
                pat.twos.iter().map(|&s| (s, false)).chain(pat.fours.iter().map(|&s| (s, true))).collect();
            slots.sort();
            // with ⟨w_P, r⟩ = 0 the unit freedom fixes the first nonzero value to p or 2
            let opts: Vec<Vec<Hq>> = slots
                .iter()
                .enumerate()
                .map(|(k, &(_, four))| match (k == 0 && pat.w.is_zero(), four) {
                    (true, false) => vec![Hq::P],
                    (true, true) => vec![Hq::from_int(2)],
                    (false, false) => n2.clone(),
                    (false, true) => n4.clone(),
                })
                .collect();
            let base: Vec<Hq> = w_p.coords.iter().map(|&c| c * pat.w).collect();
            let mut attempts = 0u64;
            let mut integral = 0u64;
            let mut found = Vec::new();
            let mut idx = vec![0usize; slots.len()];
            loop {
                attempts += 1;
                let mut twice = base.clone();
                for (k, &(s, _)) in slots.iter().enumerate() {
                    let c = opts[k][idx[k]];
                    for (t, x) in points[s].coords.iter().enumerate() {
                        if !x.is_zero() {
                            twice[t] -= *x * c;
                        }
                    }
                }
                if let Some(coords) = twice.iter().map(Hq::half).collect::<Option<Vec<_>>>() {
                    integral += 1;
                    let r = LVec::new(coords);
                    if h.lattice().norm(&r) == -2 && h.key(&r) <= HeightKey::ONE {
                        found.push(unit_class_rep(&r));
                    }
                }
                // odometer
                let mut k = 0;
                loop {
                    if k == slots.len() {
                        return (attempts, integral, found);
                    }
                    idx[k] += 1;
                    if idx[k] < opts[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
            }
        })
        .collect();
    let attempts = results.iter().map(|r| r.0).sum();
    let integral = results.iter().map(|r| r.1).sum();
    let classes: BTreeSet<LVec> = results.into_iter().flat_map(|r| r.2).collect();
    let classes: Vec<LVec> = classes.into_iter().collect();
    let labels_all: Vec<&'static str> = Diagram::labels().collect();
    let labels = classes.iter().map(|c| h.unit_multiple_of_diagram_root(c).map(|(s, _)| labels_all[s])).collect();
    let all_height_one = classes.iter().all(|c| h.key(c) == HeightKey::ONE);
    MinHeightReport { exhaustive: stride <= 1, attempts, integral, classes, labels, all_height_one }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    /// `|ρ̄|²`
    pub rho_norm: String,
    /// `2cosh(2 sinh⁻¹(|ρ̄|/√2))`
    pub first_bound: f64,
    /// `2sinh(sinh⁻¹(|ρ̄|/√2) + cosh⁻¹(1/(2|ρ̄|)))`
    pub second_bound: f64,
    /// `−|⟨ρ̄, x⟩|²/(|ρ̄|²|x|²) = |ρ̄|²/2` for every point `x`.
    pub sinh_identity: bool,
    /// `|⟨ρ̄, w_P⟩|²/(|ρ̄|²|w_P|²) = 1/(4|ρ̄|²)`.
    pub cosh_identity: bool,
    /// `c(ρ̄, ρ̄) = 1`
    pub self_cosine: bool,
}

pub fn bound_report(h: &Heights) -> BoundReport {
    use crate::diagram::as_real;
    let lat = h.lattice();
    let rho = &h.weyl.rho_bar;
    let rho2 = as_real(&lat.inner_ext(rho, rho)).expect("real norm");
    let abs2 = |v: &[crate::hquat::R2Quat]| lat.inner_ext(rho, v).norm();
    let half = R2::new(rat(1, 2), rat(0, 1));
    let sinh_identity = rho2 == rho_norm_expected()
        && (0..7).all(|x| {
            let v = h.diagram.point(x).to_r2q();
            let xn = R2::new(rat(lat.norm(h.diagram.point(x)), 1), rat(0, 1));
            -(abs2(&v) * (rho2.clone() * xn).inv().expect("nonzero")) == rho2.clone() * half.clone()
        });
    let wp = h.weyl.w_p.to_r2q();
    let wn = R2::new(rat(lat.norm(&h.weyl.w_p), 1), rat(0, 1));
    let cosh_identity = abs2(&wp) * (rho2.clone() * wn).inv().expect("nonzero")
        == (R2::new(rat(4, 1), rat(0, 1)) * rho2.clone()).inv().expect("nonzero");
    let self_cosine = abs2(rho) == rho2.clone() * rho2.clone();
    let r = rho2.to_f64().sqrt();
    let s = (r / 2f64.sqrt()).asinh();
    BoundReport {
        rho_norm: rho2.to_string(),
        first_bound: 2.0 * (2.0 * s).cosh(),
        second_bound: 2.0 * (s + (1.0 / (2.0 * r)).acosh()).sinh(),
        sinh_identity,
        cosh_identity,
        self_cosine,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::roots14;

    #[test]
    fn key_order_matches_floats() {
        let ks = [HeightKey { n: 22, m2: -24 }, HeightKey { n: 10, m2: 0 }, HeightKey { n: 0, m2: 8 }, HeightKey { n: 30, m2: -40 }];
        for a in &ks {
            for b in &ks {
                let (x, y) = (a.x().to_f64(), b.x().to_f64());
                assert_eq!(a.cmp(b), x.partial_cmp(&y).unwrap(), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn diagram_roots_have_height_one() {
        let h = Heights::new(roots14()).unwrap();
        for r in &h.diagram.roots {
            assert_eq!(h.key(r), HeightKey::ONE);
            for u in Hq::units() {
                assert_eq!(h.key(&r.mul_right(u)), HeightKey::ONE);
            }
        }
        assert_eq!(HeightKey::ONE.squared(), R2::int(1));
    }

    #[test]
    fn trivial_reductions() {
        let h = Heights::new(roots14()).unwrap();
        let a = h.diagram.root("a").clone();
        let t = reduce(&h, &a).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.terminal_label, "a");
        let t = reduce(&h, &a.mul_right(Hq::J)).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.terminal_unit, Hq::J);
    }

    #[test]
    fn pattern_count() {
        // 21 + 7 (w = 0), 35 + 42 (w = p), 35 + 105 + 21 (w = 2)
        assert_eq!(patterns().len(), 266);
    }
}
