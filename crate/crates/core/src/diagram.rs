//! The 14-node diagram: seven point roots and seven line roots of `3E8 ⊕ H`
//! whose incidence graph is the Fano plane's, together with the Weyl vector,
//! diagram automorphisms and the point/line duality.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::fixtures::{Fixtures, NodeKind, RootEntry};
use crate::hlattice::{make_lattice, HLattice, LVec, LatticeName};
use crate::hquat::{rat, Hq, Qq, R2Quat, Rational, R2};
use crate::linalg::{self, Mat};
use crate::reflect::{self, braid_type, BraidType};

pub const POINTS: [&str; 7] = ["a", "c1", "c2", "c3", "e1", "e2", "e3"];
pub const LINES: [&str; 7] = ["f", "b1", "b2", "b3", "d1", "d2", "d3"];

/// Incidence of the Fano plane, `incidence[x][l]` for point `x` and line `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fano {
    pub incidence: [[bool; 7]; 7],
}

impl Fano {
    pub fn new(incidence: [[bool; 7]; 7]) -> Result<Fano> {
        let fano = Fano { incidence };
        fano.check_axioms()?;
        Ok(fano)
    }

    /// The plane with lines `{s+1, s+2, s+4} mod 7`.
    pub fn difference_set() -> Fano {
        let mut inc = [[false; 7]; 7];
        for (l, row) in (0..7).map(|l| (l, [1, 2, 4].map(|d| (l + d) % 7))) {
            for x in row {
                inc[x][l] = true;
            }
        }
        Fano::new(inc).expect("difference set plane")
    }

    pub fn points_on(&self, l: usize) -> Vec<usize> {
        (0..7).filter(|&x| self.incidence[x][l]).collect()
    }

    pub fn lines_through(&self, x: usize) -> Vec<usize> {
        (0..7).filter(|&l| self.incidence[x][l]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.incidence.iter().flatten().filter(|&&b| b).count()
    }

    fn check_axioms(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::IncidenceMismatch(m.to_string()));
        if (0..7).any(|l| self.points_on(l).len() != 3) {
            return fail("a line without exactly three points");
        }
        if (0..7).any(|x| self.lines_through(x).len() != 3) {
            return fail("a point without exactly three lines");
        }
        for l in 0..7 {
            for m in l + 1..7 {
                if (0..7).filter(|&x| self.incidence[x][l] && self.incidence[x][m]).count() != 1 {
                    return fail("two lines not meeting in one point");
                }
            }
        }
        Ok(())
    }

    /// Adjacency lists of the bipartite incidence graph; points are `0..7`, lines `7..14`.
    pub fn incidence_graph(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); 14];
        for x in 0..7 {
            for l in self.lines_through(x) {
                adj[x].push(7 + l);
                adj[7 + l].push(x);
            }
        }
        adj
    }

    /// Heawood graph check: 14 vertices, cubic, 21 edges, girth 6.
    pub fn is_heawood(&self) -> bool {
        let adj = self.incidence_graph();
        adj.len() == 14 && adj.iter().all(|a| a.len() == 3) && self.edge_count() == 21 && girth(&adj) == Some(6)
    }

    /// Point permutation carrying this plane onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &Fano) -> Option<[usize; 7]> {
        let target: HashSet<Vec<usize>> = (0..7).map(|l| other.points_on(l)).collect();
        permutations7().into_iter().find(|perm| {
            (0..7).all(|l| {
                let mut img: Vec<usize> = self.points_on(l).iter().map(|&x| perm[x]).collect();
                img.sort_unstable();
                target.contains(&img)
            })
        })
    }

    /// Line permutation induced by a point permutation, if it preserves lines.
    pub fn induced_line_map(&self, points: &[usize; 7]) -> Option<[usize; 7]> {
        let mut lines = [0; 7];
        for (l, slot) in lines.iter_mut().enumerate() {
            let mut img: Vec<usize> = self.points_on(l).iter().map(|&x| points[x]).collect();
            img.sort_unstable();
            *slot = (0..7).find(|&m| self.points_on(m) == img)?;
        }
        Some(lines)
    }

    /// All 168 collineations, as (point map, line map), in lexicographic order of point maps.
    pub fn collineations(&self) -> Vec<Collineation> {
        permutations7()
            .into_iter()
            .filter_map(|p| self.induced_line_map(&p).map(|l| Collineation { points: p, lines: l }))
            .collect()
    }

    /// All incidence-reversing bijections: lines to points together with the induced points to lines.
    pub fn correlations(&self) -> Vec<Correlation> {
        let mut out = Vec::new();
        for delta in permutations7() {
            // delta sends line l to point delta[l]; point x goes to the line through the images of lines through x
            let mut dual = [0usize; 7];
            let mut ok = true;
            for (x, slot) in dual.iter_mut().enumerate() {
                let mut img: Vec<usize> = self.lines_through(x).iter().map(|&l| delta[l]).collect();
                img.sort_unstable();
                match (0..7).find(|&m| self.points_on(m) == img) {
                    Some(m) => *slot = m,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                out.push(Correlation { line_to_point: delta, point_to_line: dual });
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Collineation {
    pub points: [usize; 7],
    pub lines: [usize; 7],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Correlation {
    pub line_to_point: [usize; 7],
    pub point_to_line: [usize; 7],
}

fn permutations7() -> Vec<[usize; 7]> {
    use itertools::Itertools;
    (0..7)
        .permutations(7)
        .map(|p| p.try_into().expect("seven entries"))
        .collect()
}

fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    let c = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

/// The 14 diagram roots in `3E8 ⊕ H` basis coordinates.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub lattice: HLattice,
    /// Points first (in `POINTS` order), then lines (in `LINES` order).
    pub roots: Vec<LVec>,
    pub fano: Fano,
}

impl Diagram {
    pub fn point(&self, x: usize) -> &LVec {
        &self.roots[x]
    }

    pub fn line(&self, l: usize) -> &LVec {
        &self.roots[7 + l]
    }

    pub fn labels() -> impl Iterator<Item = &'static str> {
        POINTS.into_iter().chain(LINES)
    }

    pub fn index_of(label: &str) -> Option<usize> {
        Diagram::labels().position(|l| l == label)
    }

    pub fn root(&self, label: &str) -> &LVec {
        &self.roots[Diagram::index_of(label).unwrap_or_else(|| panic!("unknown diagram label {label}"))]
    }

    pub fn i_reflection(&self, label: &str) -> Mat<Hq> {
        reflect::reflection_matrix(&self.lattice, self.root(label), Hq::I).expect("diagram roots reflect")
    }

    pub fn from_entries(entries: &[RootEntry]) -> Result<Diagram> {
        let lattice = make_lattice(LatticeName::L3E8H);
        let mut roots = Vec::with_capacity(14);
        for (label, kind) in POINTS.iter().map(|l| (l, NodeKind::Point)).chain(LINES.iter().map(|l| (l, NodeKind::Line))) {
            let e = entries
                .iter()
                .find(|e| e.label == *label)
                .ok_or_else(|| Error::IncidenceMismatch(format!("missing root {label}")))?;
            if e.kind != kind {
                return Err(Error::IncidenceMismatch(format!("{label} has the wrong kind")));
            }
            let v = lattice
                .from_ambient(&e.ambient)
                .ok_or_else(|| Error::IncidenceMismatch(format!("{label} is not in the lattice")))?;
            if lattice.norm(&v) != -2 {
                return Err(Error::IncidenceMismatch(format!("{label} does not have norm -2")));
            }
            roots.push(v);
        }
        let mut inc = [[false; 7]; 7];
        for x in 0..7 {
            for l in 0..7 {
                let ip = lattice.ip(&roots[x].coords, &roots[7 + l].coords);
                if ip == Hq::P {
                    inc[x][l] = true;
                } else if !ip.is_zero() {
                    return Err(Error::IncidenceMismatch(format!("<{}, {}> = {ip}", POINTS[x], LINES[l])));
                }
            }
        }
        for s in 0..7 {
            for t in s + 1..7 {
                for off in [0, 7] {
                    if !lattice.ip(&roots[off + s].coords, &roots[off + t].coords).is_zero() {
                        return Err(Error::IncidenceMismatch("nodes of the same kind are not orthogonal".into()));
                    }
                }
            }
        }
        let fano = Fano::new(inc)?;
        Ok(Diagram { lattice, roots, fano })
    }
}

pub fn roots14() -> Diagram {
    Diagram::from_entries(&Fixtures::embedded().roots).expect("embedded diagram is valid")
}

/// `l·p̄ + Σ_{x∈l} x`
pub fn w_p_from_line(d: &Diagram, l: usize) -> LVec {
    d.fano
        .points_on(l)
        .iter()
        .fold(d.line(l).mul_right(Hq::P.conj()), |acc, &x| &acc + d.point(x))
}

/// `x·p + Σ_{l∋x} l`
pub fn w_l_from_point(d: &Diagram, x: usize) -> LVec {
    d.fano
        .lines_through(x)
        .iter()
        .fold(d.point(x).mul_right(Hq::P), |acc, &l| &acc + d.line(l))
}

#[derive(Clone, Debug)]
pub struct WeylData {
    pub w_p: LVec,
    pub w_l: LVec,
    pub sigma_p: LVec,
    pub sigma_l: LVec,
    /// `(Σ_P + Σ_L ξ)/14`
    pub rho_bar: Vec<R2Quat>,
    /// `x_1..x_7, l_1ξ..l_7ξ`
    pub rho_list: Vec<Vec<R2Quat>>,
}

fn scale_vec(v: &[R2Quat], s: &R2Quat) -> Vec<R2Quat> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

fn add_vec(a: &[R2Quat], b: &[R2Quat]) -> Vec<R2Quat> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn r2q(x: R2) -> R2Quat {
    R2Quat::scalar(x)
}

pub fn weyl_data(d: &Diagram) -> Result<WeylData> {
    let w_p = w_p_from_line(d, 0);
    if (1..7).any(|l| w_p_from_line(d, l) != w_p) {
        return Err(Error::IncidenceMismatch("w_P depends on the line".into()));
    }
    let w_l = w_l_from_point(d, 0);
    if (1..7).any(|x| w_l_from_point(d, x) != w_l) {
        return Err(Error::IncidenceMismatch("w_L depends on the point".into()));
    }
    let n = d.lattice.rank();
    let sigma_p = (0..7).fold(LVec::zero(n), |acc, x| &acc + d.point(x));
    let sigma_l = (0..7).fold(LVec::zero(n), |acc, l| &acc + d.line(l));
    let xi = R2Quat::xi();
    let fourteenth = r2q(R2::new(rat(1, 14), rat(0, 1)));
    let rho_bar = scale_vec(&add_vec(&sigma_p.to_r2q(), &scale_vec(&sigma_l.to_r2q(), &xi)), &fourteenth);
    let rho_list = (0..7)
        .map(|x| d.point(x).to_r2q())
        .chain((0..7).map(|l| scale_vec(&d.line(l).to_r2q(), &xi)))
        .collect();
    Ok(WeylData { w_p, w_l, sigma_p, sigma_l, rho_bar, rho_list })
}

/// Real part of a quaternion over `Q(√2)` when it is real.
pub fn as_real(q: &R2Quat) -> Option<R2> {
    q.im().is_zero().then(|| q.re())
}

/// `|ρ̄|² = 1/(2 + 3√2)`
pub fn rho_norm_expected() -> R2 {
    R2::new(rat(2, 1), rat(3, 1)).inv().expect("nonzero")
}

/// Eight diagram roots that are linearly independent, by index.
fn independent_roots(d: &Diagram) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for s in 0..14 {
        let mut cols: Vec<Vec<Qq>> = chosen.iter().map(|&t| d.roots[t].to_qq()).collect();
        cols.push(d.roots[s].to_qq());
        if linalg::rank(&Mat::from_cols(&cols)) == cols.len() {
            chosen.push(s);
        }
        if chosen.len() == d.lattice.rank() {
            break;
        }
    }
    chosen
}

/// The linear map sending diagram root `s` to `images[s]`, verified on all 14.
fn lift_images(d: &Diagram, images: &[LVec]) -> Option<Mat<Hq>> {
    let idx = independent_roots(d);
    let b = Mat::from_cols(&idx.iter().map(|&s| d.roots[s].to_qq()).collect::<Vec<_>>());
    let bi = Mat::from_cols(&idx.iter().map(|&s| images[s].to_qq()).collect::<Vec<_>>());
    let m = &bi * &linalg::inverse(&b)?;
    let m = linalg::qq_to_hq(&m)?;
    let ok = (0..14).all(|s| m.mul_vec(&d.roots[s].coords) == images[s].coords);
    (ok && reflect::is_automorphism_hq(&d.lattice, &m)).then_some(m)
}

pub fn lift_collineation(d: &Diagram, g: &Collineation) -> Result<Mat<Hq>> {
    let images: Vec<LVec> = (0..7)
        .map(|x| d.point(g.points[x]).clone())
        .chain((0..7).map(|l| d.line(g.lines[l]).clone()))
        .collect();
    lift_images(d, &images).ok_or(Error::LiftFailed)
}

/// Closure of a set of matrices under multiplication.
pub fn group_closure(gens: &[Mat<Hq>], cap: usize) -> Vec<Mat<Hq>> {
    let n = gens.first().map_or(0, |g| g.rows());
    let id = Mat::identity(n);
    let mut seen: HashSet<Vec<Hq>> = HashSet::from([id.entries().copied().collect()]);
    let mut elems = vec![id];
    let mut frontier = 0;
    while frontier < elems.len() && elems.len() <= cap {
        let e = elems[frontier].clone();
        frontier += 1;
        for g in gens {
            let h = &e * g;
            if seen.insert(h.entries().copied().collect()) {
                elems.push(h);
            }
        }
    }
    elems
}

/// Two collineations generating the whole group: the index rotation and a second generator.
pub fn collineation_generators(d: &Diagram) -> Vec<Collineation> {
    let all = d.fano.collineations();
    // rotation of indices s -> s+1 fixing a and f
    let rot = |labels: [&str; 7], s: usize| {
        let l = labels[s];
        if s == 0 {
            return 0;
        }
        let (head, idx) = l.split_at(1);
        let k: usize = idx.parse().expect("indexed label");
        let target = format!("{head}{}", k % 3 + 1);
        labels.iter().position(|&m| m == target).expect("rotated label")
    };
    let rotation = Collineation { points: std::array::from_fn(|s| rot(POINTS, s)), lines: std::array::from_fn(|s| rot(LINES, s)) };
    debug_assert!(all.contains(&rotation));
    let mut gens = vec![rotation];
    for g in &all {
        let trial: Vec<Collineation> = gens.iter().copied().chain([*g]).collect();
        if perm_group_order(&trial) == 168 {
            gens.push(*g);
            break;
        }
    }
    gens
}

fn perm_group_order(gens: &[Collineation]) -> usize {
    let id = Collineation { points: std::array::from_fn(|s| s), lines: std::array::from_fn(|s| s) };
    let mut seen = HashSet::from([id]);
    let mut queue = vec![id];
    while let Some(e) = queue.pop() {
        for g in gens {
            let h = Collineation {
                points: std::array::from_fn(|s| g.points[e.points[s]]),
                lines: std::array::from_fn(|s| g.lines[e.lines[s]]),
            };
            if seen.insert(h) {
                queue.push(h);
            }
        }
    }
    seen.len()
}

/// The duality lift: `σ(l) = δ(l)` and `σ(x) = δ′(x)·i`, chosen as the first
/// correlation whose lift is an automorphism with `σ(w_P) = w_L·i`.
pub fn sigma_duality(d: &Diagram) -> Result<(Correlation, Mat<Hq>)> {
    let w = weyl_data(d)?;
    for c in d.fano.correlations() {
        let images: Vec<LVec> = (0..7)
            .map(|x| d.line(c.point_to_line[x]).mul_right(Hq::I))
            .chain((0..7).map(|l| d.point(c.line_to_point[l]).clone()))
            .collect();
        if let Some(m) = lift_images(d, &images) {
            if m.mul_vec(&w.w_p.coords) == w.w_l.mul_right(Hq::I).coords && m.mul_vec(&w.w_l.coords) == w.w_p.coords {
                return Ok((c, m));
            }
        }
    }
    Err(Error::DualityLiftFailed)
}

/// Common fixed vectors of the given maps, as a basis of a right subspace.
pub fn fixed_subspace(gens: &[Mat<Hq>]) -> Vec<Vec<Qq>> {
    let Some(n) = gens.first().map(|g| g.rows()) else {
        return Vec::new();
    };
    let id = Mat::<Hq>::identity(n);
    let mut rows = Vec::new();
    for g in gens {
        let diff = linalg::hq_to_qq(&(g - &id));
        for r in 0..n {
            rows.push(diff.row(r));
        }
    }
    linalg::right_kernel(&Mat::from_rows(rows))
}

/// Whether the right span of `vs` equals the right span of `ws`.
pub fn same_span(vs: &[Vec<Qq>], ws: &[Vec<Qq>]) -> bool {
    let r = |cols: &[Vec<Qq>]| if cols.is_empty() { 0 } else { linalg::rank(&Mat::from_cols(cols)) };
    let both: Vec<Vec<Qq>> = vs.iter().chain(ws).cloned().collect();
    r(vs) == r(ws) && r(&both) == r(vs)
}

/// Fixed point of the extended group in hyperbolic space.
#[derive(Clone, Debug)]
pub struct ExtendedFixedPoint {
    /// `w_P + w_L·b`
    pub b: R2Quat,
    /// `σ(v) = v·λ`
    pub lambda: R2Quat,
    pub vector: Vec<R2Quat>,
    pub norm: R2,
    /// `ρ̄ = vector·scale`
    pub scale: R2,
}

/// Restricted to the span of `w_P, w_L`, `σ` has matrix `[[0, 1], [i, 0]]`.
/// Then `σ(w_P + w_L b) = (w_P + w_L b)λ` forces `λ = b` and `b² = i`, so
/// `b = ±ξ`; the positive-norm choice is the fixed point.
pub fn extended_fixed_point(d: &Diagram, sigma: &Mat<Hq>) -> Result<ExtendedFixedPoint> {
    let w = weyl_data(d)?;
    let fail = || Error::DualityLiftFailed;
    if sigma.mul_vec(&w.w_p.coords) != w.w_l.mul_right(Hq::I).coords || sigma.mul_vec(&w.w_l.coords) != w.w_p.coords {
        return Err(fail());
    }
    let sig = sigma.map(Hq::to_r2q);
    let xi = R2Quat::xi();
    for b in [xi.clone(), -xi] {
        let v = add_vec(&w.w_p.to_r2q(), &scale_vec(&w.w_l.to_r2q(), &b));
        if sig.mul_vec(&v) != scale_vec(&v, &b) {
            return Err(fail());
        }
        let norm = as_real(&d.lattice.inner_ext(&v, &v)).ok_or_else(fail)?;
        if norm.signum() != std::cmp::Ordering::Greater {
            continue;
        }
        // ρ̄ must be a real multiple of v; compare on a nonzero coordinate
        let t = v.iter().position(|c| !c.is_zero()).ok_or_else(fail)?;
        let ratio = v[t].inv().ok_or_else(fail)? * w.rho_bar[t].clone();
        let scale = as_real(&ratio).ok_or_else(fail)?;
        if scale_vec(&v, &r2q(scale.clone())) != w.rho_bar {
            return Err(fail());
        }
        return Ok(ExtendedFixedPoint { lambda: b.clone(), b, vector: v, norm, scale });
    }
    Err(fail())
}

/// `φ_{d1}^i φ_{c1}^i φ_{b1}^i φ_a^i φ_{b2}^i φ_{c2}^i (d2) = −e3`
pub fn deflate_image(d: &Diagram) -> LVec {
    let word = ["d1", "c1", "b1", "a", "b2", "c2"];
    let m = reflect::product(d.lattice.rank(), word.iter().map(|l| d.i_reflection(l)).collect::<Vec<_>>().iter());
    LVec::new(m.mul_vec(&d.root("d2").coords))
}

pub fn deflate_check(d: &Diagram) -> bool {
    deflate_image(d) == -d.root("e3")
}

/// `a b1 c1 a b2 c2 a b3 c3` in order-four `i`-reflections.
pub fn spider_element(d: &Diagram) -> Mat<Hq> {
    let word = ["a", "b1", "c1", "a", "b2", "c2", "a", "b3", "c3"];
    reflect::product(d.lattice.rank(), word.iter().map(|l| d.i_reflection(l)).collect::<Vec<_>>().iter())
}

pub const M444: [&str; 10] = ["a", "b1", "b2", "b3", "c1", "c2", "c3", "d1", "d2", "d3"];

fn m444_edge(x: &str, y: &str) -> bool {
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    match (x.split_at(1), y.split_at(1)) {
        (("a", _), ("b", _)) => true,
        (("b", s), ("c", t)) | (("c", s), ("d", t)) => s == t,
        _ => false,
    }
}

/// The ten roots `a, b_s, c_s, d_s`, verified to form three arms `a-b_s-c_s-d_s`.
pub fn m444_subset(d: &Diagram) -> Result<Vec<(&'static str, LVec)>> {
    let mats: Vec<Mat<Hq>> = M444.iter().map(|l| d.i_reflection(l)).collect();
    for s in 0..10 {
        for t in s + 1..10 {
            let want = if m444_edge(M444[s], M444[t]) { BraidType::Braid } else { BraidType::Commute };
            if braid_type(&mats[s], &mats[t]) != want {
                return Err(Error::IncidenceMismatch(format!("{} and {}", M444[s], M444[t])));
            }
        }
    }
    Ok(M444.iter().map(|&l| (l, d.root(l).clone())).collect())
}

/// Exact `Q(√2)` real number as a rational pair, for reports.
pub fn r2_parts(x: &R2) -> (Rational, Rational) {
    (x.a.clone(), x.b.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_from_gram() {
        let d = roots14();
        assert_eq!(d.fano.edge_count(), 21);
        let a = Diagram::index_of("a").unwrap();
        let through: Vec<&str> = d.fano.lines_through(a).iter().map(|&l| LINES[l]).collect();
        assert_eq!(through, vec!["b1", "b2", "b3"]);
        assert!(d.fano.is_heawood());
        assert!(d.fano.isomorphism_to(&Fano::difference_set()).is_some());
    }

    #[test]
    fn sample_inner_products() {
        let d = roots14();
        let l = &d.lattice;
        assert_eq!(l.inner(d.root("a"), d.root("a")).unwrap(), Hq::from_int(-2));
        assert_eq!(l.inner(d.root("c1"), d.root("b1")).unwrap(), Hq::P);
        assert!(l.inner(d.root("c1"), d.root("c2")).unwrap().is_zero());
        assert!(l.inner(d.root("a"), d.root("f")).unwrap().is_zero());
    }

    #[test]
    fn broken_table_is_rejected() {
        let mut entries = Fixtures::embedded().roots;
        entries[1].ambient[0] = -entries[1].ambient[0];
        assert!(Diagram::from_entries(&entries).is_err());
    }

    #[test]
    fn non_plane_rejected() {
        let mut inc = Fano::difference_set().incidence;
        inc[0][0] = !inc[0][0];
        assert!(matches!(Fano::new(inc), Err(Error::IncidenceMismatch(_))));
    }

    #[test]
    fn collineation_count() {
        assert_eq!(roots14().fano.collineations().len(), 168);
        assert_eq!(roots14().fano.correlations().len(), 168);
    }

    #[test]
    fn m444_edges() {
        assert!(m444_edge("a", "b2"));
        assert!(m444_edge("d3", "c3"));
        assert!(!m444_edge("b1", "b2"));
        assert!(!m444_edge("c1", "d2"));
    }
}
