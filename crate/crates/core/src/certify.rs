//! Machine-readable certificates for every verified claim.
//!
//! A certificate records its inputs as text, so [`recheck`] can rerun the same
//! check from the certificate alone.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{self, Diagram};
use crate::error::{Error, ParseError, Result};
use crate::fixtures::{self, parse_roots, parse_rows};
use crate::heightred::{self, reflection_units, HeightKey, Heights};
use crate::heisen;
use crate::hlattice::{leech_basis, make_lattice, LVec, LatticeName};
use crate::hquat::{rat, Hq, R2Quat, R2};
use crate::isosearch::{self, BasisChange, Direction, Seed};
use crate::reflect;

pub const SCHEMA: u32 = 1;

pub type Inputs = BTreeMap<String, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub claim: String,
    pub criterion: u8,
    pub statement: String,
    /// False for sampled runs.
    pub certifying: bool,
    pub inputs: Inputs,
    pub verdict: Verdict,
    pub witness: BTreeMap<String, String>,
    pub display: BTreeMap<String, f64>,
    pub wall_ms: u64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub pass: bool,
    pub witness: BTreeMap<String, String>,
    pub display: BTreeMap<String, f64>,
}

impl Outcome {
    fn with(mut self, k: &str, v: impl ToString) -> Self {
        self.witness.insert(k.to_string(), v.to_string());
        self
    }

    fn show(mut self, k: &str, v: f64) -> Self {
        self.display.insert(k.to_string(), v);
        self
    }
}

type Check = fn(&Inputs) -> Result<Outcome>;

pub struct Claim {
    pub id: &'static str,
    pub criterion: u8,
    pub statement: &'static str,
    check: Check,
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: "structure.lattices", criterion: 13, statement: "E8, Leech, H and L are p-modular; L has real signature (4,28); shells of 240 and 196560", check: check_structure },
    Claim { id: "diagram.integrity", criterion: 1, statement: "14 roots of norm -2 with 21 incidences equal to p, 70 zero pairs, Heawood incidence graph", check: check_integrity },
    Claim { id: "diagram.line_relations", criterion: 2, statement: "l p̄ + Σ x over the points of l is the same for every line, dually for points", check: check_line_relations },
    Claim { id: "diagram.w_norms", criterion: 2, statement: "w_P norm = 2 and w_L norm = 2", check: check_w_norms },
    Claim { id: "diagram.weyl", criterion: 3, statement: "|ρ̄|² = 1/(2+3√2), ⟨ρ̄,ρ_s⟩ = |ρ̄|², ⟨ρ̄,w_P⟩ = 1/√2, ⟨ρ̄,w_P⟩/|ρ̄|² = 3+√2", check: check_weyl },
    Claim { id: "diagram.deflate", criterion: 9, statement: "φ_d1 φ_c1 φ_b1 φ_a φ_b2 φ_c2 maps d2 to -e3", check: check_deflate },
    Claim { id: "diagram.spider", criterion: 10, statement: "a b1 c1 a b2 c2 a b3 c3 has order 40", check: check_spider },
    Claim { id: "diagram.fixed_space", criterion: 12, statement: "the collineation group fixes span(w_P, w_L); with σ only the line through ρ̄ remains", check: check_fixed_space },
    Claim { id: "iso.reference_matrix", criterion: 4, statement: "the reference basis change has Gram equal to 3E8+H and a Hurwitz inverse", check: check_reference_matrix },
    Claim { id: "iso.search", criterion: 5, statement: "the 3E8 search over the first Leech shell yields a basis change from every seed", check: check_search },
    Claim { id: "heisen.identities", criterion: 6, statement: "translation composition, inverse, commutator and conjugation identities, R block data", check: check_heisen },
    Claim { id: "heisen.central_cases", criterion: 6, statement: "T_{0,z}⁻¹ R T_{0,z} R⁻¹ is T_{0,-i-2j-k} for z = i+j and T_{0,-j-k} for z = i+k", check: check_central_cases },
    Claim { id: "height.generation", criterion: 7, statement: "the generator root reduces to a unit multiple of a diagram root", check: check_generation },
    Claim { id: "height.min_mirrors", criterion: 8, statement: "the roots of height at most 1 are exactly the 14 diagram roots up to units", check: check_min_mirrors },
    Claim { id: "height.bounds", criterion: 11, statement: "2cosh(2 asinh(|ρ̄|/√2)) ≈ 2.32 and the w_P bound ≈ 2.26 with exact preimages", check: check_bounds },
];

pub fn claim(id: &str) -> Result<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Text of the reference data.
#[derive(Clone, Debug)]
pub struct Sources {
    pub leech_basis: String,
    pub roots: String,
    pub basis_change: String,
}

impl Sources {
    pub fn embedded() -> Sources {
        Sources {
            leech_basis: fixtures::LEECH_BASIS.to_string(),
            roots: fixtures::ROOTS14.to_string(),
            basis_change: fixtures::BASIS_CHANGE.to_string(),
        }
    }
}

fn get<'a>(i: &'a Inputs, k: &str) -> Result<&'a str> {
    i.get(k).map(String::as_str).ok_or_else(|| ParseError::Missing(k.to_string()).into())
}

fn quick(i: &Inputs) -> bool {
    i.get("mode").is_some_and(|m| m == "quick")
}

fn inputs(pairs: &[(&str, &str)]) -> Inputs {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn mode(q: bool) -> &'static str {
    if q {
        "quick"
    } else {
        "full"
    }
}

/// Runs a claim on the given inputs.
pub fn run(id: &str, inputs: Inputs) -> Result<Certificate> {
    let c = claim(id)?;
    let start = Instant::now();
    let outcome = (c.check)(&inputs).unwrap_or_else(|e| Outcome::default().with("error", e));
    Ok(Certificate {
        schema: SCHEMA,
        claim: c.id.to_string(),
        criterion: c.criterion,
        statement: c.statement.to_string(),
        certifying: !quick(&inputs),
        verdict: if outcome.pass { Verdict::Pass } else { Verdict::Fail },
        inputs,
        witness: outcome.witness,
        display: outcome.display,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// Reruns the check from the printed inputs; true when verdict and witness agree.
pub fn recheck(cert: &Certificate) -> Result<bool> {
    if cert.schema != SCHEMA {
        return Ok(false);
    }
    let again = run(&cert.claim, cert.inputs.clone())?;
    Ok(again.verdict == cert.verdict && again.witness == cert.witness && cert.passed())
}

fn diagram_from(i: &Inputs) -> Result<Diagram> {
    Diagram::from_entries(&parse_roots(get(i, "roots")?)?)
}

fn check_structure(i: &Inputs) -> Result<Outcome> {
    let fixture_basis = parse_rows(get(i, "leech_basis")?, 6)?;
    let builtin: Vec<LVec> = leech_basis().iter().map(|r| LVec::new(r.to_vec())).collect();
    let mut out = Outcome::default().with("leech_basis_matches", fixture_basis == builtin);
    let mut pass = fixture_basis == builtin;
    for (name, l) in [
        ("E8", LatticeName::E8),
        ("Leech", LatticeName::Leech),
        ("H", LatticeName::HyperbolicCell),
        ("3E8+H", LatticeName::L3E8H),
        ("Leech+H", LatticeName::LLeechH),
    ] {
        let m = make_lattice(l).is_p_modular()?;
        pass &= m;
        out = out.with(&format!("p_modular:{name}"), m);
    }
    for (name, l) in [("3E8+H", LatticeName::L3E8H), ("Leech+H", LatticeName::LLeechH)] {
        let sig = make_lattice(l).real_form_signature();
        pass &= sig == (4, 28);
        out = out.with(&format!("signature:{name}"), format!("({},{})", sig.0, sig.1));
    }
    let e8 = make_lattice(LatticeName::E8).shell_enumerate(-2)?.len();
    pass &= e8 == 240;
    out = out.with("shell:E8", e8);
    if !quick(i) {
        let leech = make_lattice(LatticeName::Leech).shell_enumerate(-4)?.len();
        pass &= leech == 196_560;
        out = out.with("shell:Leech", leech);
    }
    out.pass = pass;
    Ok(out)
}

fn check_integrity(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let lat = &d.lattice;
    let norms_ok = d.roots.iter().all(|r| lat.norm(r) == -2);
    let (mut p_pairs, mut zero_pairs, mut other) = (0, 0, 0);
    for s in 0..14 {
        for t in s + 1..14 {
            let ip = lat.ip(&d.roots[s].coords, &d.roots[t].coords);
            if ip.is_zero() {
                zero_pairs += 1;
            } else if ip == Hq::P && s < 7 && t >= 7 {
                p_pairs += 1;
            } else {
                other += 1;
            }
        }
    }
    let heawood = d.fano.is_heawood();
    Ok(Outcome {
        pass: norms_ok && p_pairs == 21 && zero_pairs == 70 && other == 0 && heawood,
        ..Default::default()
    }
    .with("norms", if norms_ok { "-2" } else { "mixed" })
    .with("incident_pairs", p_pairs)
    .with("zero_pairs", zero_pairs)
    .with("other_pairs", other)
    .with("heawood", heawood))
}

fn check_line_relations(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let w_p: Vec<LVec> = (0..7).map(|l| diagram::w_p_from_line(&d, l)).collect();
    let w_l: Vec<LVec> = (0..7).map(|x| diagram::w_l_from_point(&d, x)).collect();
    // all 7×7 ordered pairs
    let same = |v: &[LVec]| v.iter().all(|a| v.iter().all(|b| a == b));
    Ok(Outcome { pass: same(&w_p) && same(&w_l), ..Default::default() }
        .with("w_P", &w_p[0])
        .with("w_L", &w_l[0]))
}

fn check_w_norms(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let w = diagram::weyl_data(&d)?;
    let (np, nl) = (d.lattice.norm(&w.w_p), d.lattice.norm(&w.w_l));
    Ok(Outcome { pass: np == 2 && nl == 2, ..Default::default() }
        .with("w_P", &w.w_p)
        .with("w_P_norm", np)
        .with("w_L", &w.w_l)
        .with("w_L_norm", nl))
}

fn check_weyl(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let w = diagram::weyl_data(&d)?;
    let lat = &d.lattice;
    let real = |x: &R2Quat| diagram::as_real(x).ok_or(Error::Inadmissible);
    let rho2 = real(&lat.inner_ext(&w.rho_bar, &w.rho_bar))?;
    let mut all_rho = true;
    for rs in &w.rho_list {
        all_rho &= real(&lat.inner_ext(&w.rho_bar, rs))? == rho2;
    }
    let with_wp = real(&lat.inner_ext(&w.rho_bar, &w.w_p.to_r2q()))?;
    let ratio = with_wp.clone() * rho2.inv().ok_or(Error::Inadmissible)?;
    let pass = rho2 == diagram::rho_norm_expected()
        && all_rho
        && with_wp == R2::new(rat(0, 1), rat(1, 2))
        && ratio == R2::new(rat(3, 1), rat(1, 1));
    Ok(Outcome { pass, ..Default::default() }
        .with("rho_norm", &rho2)
        .with("rho_pairs_equal_norm", all_rho)
        .with("rho_w_P", &with_wp)
        .with("rho_w_P_over_rho_norm", &ratio)
        .show("rho_norm", rho2.to_f64()))
}

fn check_deflate(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let img = diagram::deflate_image(&d);
    Ok(Outcome { pass: img == -d.root("e3"), ..Default::default() }.with("image", &img))
}

fn check_spider(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let order = reflect::element_order(&diagram::spider_element(&d), 1000);
    Ok(Outcome { pass: order == Some(40), ..Default::default() }
        .with("order", order.map_or("none".to_string(), |o| o.to_string())))
}

fn check_fixed_space(i: &Inputs) -> Result<Outcome> {
    let d = diagram_from(i)?;
    let w = diagram::weyl_data(&d)?;
    let gens = diagram::collineation_generators(&d)
        .iter()
        .map(|g| diagram::lift_collineation(&d, g))
        .collect::<Result<Vec<_>>>()?;
    let order = diagram::group_closure(&gens, 1000).len();
    let fixed = diagram::fixed_subspace(&gens);
    let spans = diagram::same_span(&fixed, &[w.w_p.to_qq(), w.w_l.to_qq()]);
    let (_, sigma) = diagram::sigma_duality(&d)?;
    let mut with_sigma = gens.clone();
    with_sigma.push(sigma.clone());
    let fixed_sigma = diagram::fixed_subspace(&with_sigma).len();
    let fp = diagram::extended_fixed_point(&d, &sigma)?;
    let positive = |x: &R2| x.signum() == std::cmp::Ordering::Greater;
    let pass = order == 168 && fixed.len() == 2 && spans && fixed_sigma == 0 && positive(&fp.scale) && positive(&fp.norm);
    Ok(Outcome { pass, ..Default::default() }
        .with("group_order", order)
        .with("fixed_dimension", fixed.len())
        .with("spans_w_P_w_L", spans)
        .with("fixed_dimension_with_sigma", fixed_sigma)
        .with("fixed_point", format!("w_P + w_L·{}", fp.b))
        .with("fixed_point_norm", &fp.norm)
        .with("rho_over_fixed_point", &fp.scale))
}

fn basis_change_from(i: &Inputs) -> Result<BasisChange> {
    let lat = make_lattice(LatticeName::LLeechH);
    let rows = parse_rows(get(i, "basis_change")?, 8)?
        .iter()
        .map(|r| lat.from_ambient(&r.coords).ok_or(Error::NotHurwitzIsomorphism))
        .collect::<Result<Vec<_>>>()?;
    isosearch::change_of_basis(&lat, rows)
}

fn rows_text(rows: &[LVec]) -> String {
    rows.iter().map(LVec::to_string).collect::<Vec<_>>().join("; ")
}

fn check_reference_matrix(i: &Inputs) -> Result<Outcome> {
    let bc = basis_change_from(i)?;
    let inverse: Vec<LVec> = (0..8).map(|s| LVec::new(bc.inverse.row(s).to_vec())).collect();
    Ok(Outcome { pass: true, ..Default::default() }.with("inverse_rows", rows_text(&inverse)))
}

fn parse_seed(s: &str) -> Result<Seed> {
    match s.split_once(':') {
        None if s == "first" => Ok(Seed::First),
        Some(("random", n)) => n.parse().map(Seed::Random).map_err(|_| ParseError::Vector(s.to_string()).into()),
        _ => Err(ParseError::Vector(s.to_string()).into()),
    }
}

fn check_search(i: &Inputs) -> Result<Outcome> {
    let leech = isosearch::leech();
    let lat = make_lattice(LatticeName::LLeechH);
    let shell = leech.shell_enumerate(-4)?;
    let seeds: Vec<&str> = get(i, "seeds")?.split_whitespace().collect();
    let mut out = Outcome::default().with("shell_size", shell.len());
    let enough = quick(i) || seeds.len() >= 3;
    if !enough {
        out = out.with("error", format!("{} seeds given, at least 3 needed", seeds.len()));
    }
    let mut pass = shell.len() == 196_560 && enough;
    for s in seeds {
        let found = (|| {
            let sys = isosearch::find_3e8_system(&leech, &shell, &parse_seed(s)?)?;
            let roots: Vec<LVec> = sys.roots.iter().map(isosearch::CandidateRoot::root).collect();
            let cell = isosearch::hyperbolic_complement(&lat, &roots)?;
            isosearch::assemble(&lat, &sys, &cell)
        })();
        match found {
            Ok(bc) => out = out.with(&format!("rows:{s}"), rows_text(&bc.rows)),
            Err(e) => {
                pass = false;
                out = out.with(&format!("error:{s}"), e);
            }
        }
    }
    out.pass = pass;
    Ok(out)
}

fn random_translation(lat: &crate::HLattice, rng: &mut ChaCha8Rng, zs: &[Hq]) -> heisen::Translation {
    let units = Hq::units();
    loop {
        let lambda = LVec::new((0..6).map(|_| units[rng.gen_range(0..24)] * Hq::from_int(rng.gen_range(-1..=2))).collect());
        let z = zs[rng.gen_range(0..zs.len())];
        if let Ok(t) = heisen::translation(lat, &lambda, z) {
            return t;
        }
    }
}

fn check_heisen(i: &Inputs) -> Result<Outcome> {
    let lat = heisen::lattice();
    let seed: u64 = get(i, "seed")?.parse().map_err(|_| ParseError::Missing("seed".into()))?;
    let count: usize = get(i, "count")?.parse().map_err(|_| ParseError::Missing("count".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zs = heisen::imaginary_candidates(9);
    let ts: Vec<heisen::Translation> = (0..count).map(|_| random_translation(&lat, &mut rng, &zs)).collect();
    let r = heisen::r_element(&lat);
    let mut failures = Vec::new();
    for (n, t) in ts.iter().enumerate() {
        let next = &ts[(n + 1) % ts.len()];
        let inv_ok = heisen::inverse(&lat, t).is_ok_and(|x| (&t.matrix * &x.matrix).is_identity());
        for (name, ok) in [
            ("composition", heisen::compose_law_check(&lat, t, next)),
            ("inverse", inv_ok),
            ("commutator", heisen::commutator_check(&lat, t, next)),
            ("conjugation", heisen::conjugation_check(&lat, &r, t)),
            ("r_commutator", heisen::commutator_identity_check(&lat, &r, t)),
        ] {
            if !ok {
                failures.push(format!("{name}#{n}"));
            }
        }
    }
    let block = heisen::r_block(&r);
    let pbar_inv = Hq::P.conj().inverse().ok_or(Error::Inadmissible)?;
    let block_ok = block.as_ref().is_some_and(|b| {
        b.epsilon == Hq::EPSILON
            && Hq::from_doubled([3, -1, 1, -1]) == Some(b.u)
            && b.delta.to_qq() * pbar_inv.clone() == pbar_inv.clone() * Hq::EPSILON.to_qq()
    });
    let pass = failures.is_empty() && block_ok;
    let mut out = Outcome { pass, ..Default::default() }.with("samples", ts.len()).with("failures", failures.join(" "));
    if let Some(b) = block {
        out = out.with("R_epsilon", b.epsilon).with("R_u", b.u).with("R_delta", b.delta);
    }
    Ok(out)
}

/// Whether `2i, 2j, 2k` and the given imaginary values span the imaginary part of `pH`.
fn spans_imaginary_p_ideal(zs: &[Hq]) -> bool {
    // imaginary elements of pH are integral with even coordinate sum
    let even = zs.iter().all(|z| z.is_imaginary() && z.doubled().iter().all(|c| c % 2 == 0) && z.in_p_ideal());
    let residues: Vec<[i64; 3]> = zs.iter().map(|z| {
        let d = z.doubled();
        [(d[1] / 2).rem_euclid(2), (d[2] / 2).rem_euclid(2), (d[3] / 2).rem_euclid(2)]
    }).collect();
    // the even-weight subspace of F2³ has dimension 2
    let nonzero: Vec<&[i64; 3]> = residues.iter().filter(|r| r.iter().any(|&c| c != 0)).collect();
    let two_independent = nonzero.iter().any(|a| nonzero.iter().any(|b| a != b));
    even && two_independent
}

fn check_central_cases(i: &Inputs) -> Result<Outcome> {
    let lat = heisen::lattice();
    let r = heisen::r_element(&lat);
    let mut out = Outcome::default();
    let mut computed = Vec::new();
    let mut pass = true;
    for (name, z, want) in [
        ("i+j", Hq::I + Hq::J, get(i, "expected:i+j")?.parse::<Hq>()?),
        ("i+k", Hq::I + Hq::K, get(i, "expected:i+k")?.parse::<Hq>()?),
    ] {
        let w = heisen::central_commutator(&lat, &r, z)?;
        pass &= w == want;
        computed.push(w);
        out = out.with(&format!("computed:{name}"), w);
    }
    out.pass = pass;
    Ok(out.with("generates_central_translations", spans_imaginary_p_ideal(&computed)))
}

fn unit_by_name(name: &str) -> Result<Hq> {
    reflection_units()
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, u)| u)
        .ok_or_else(|| ParseError::Quaternion(name.to_string()).into())
}

fn steps_text(t: &heightred::ReductionTrace) -> String {
    t.steps
        .iter()
        .map(|s| format!("{}{}:{}", if s.perturbation { "*" } else { "" }, s.label, s.unit))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Replays a recorded reduction.
fn check_generation(i: &Inputs) -> Result<Outcome> {
    let h = Heights::new(diagram_from(i)?)?;
    let bc = basis_change_from(i)?;
    let root: LVec = get(i, "root")?.parse()?;
    if heisen::lattice().norm(&root) != -2 {
        return Err(Error::NotARoot);
    }
    let mut cur = bc.convert(&root, Direction::To3E8H);
    let mut key = h.key(&cur);
    let start = key;
    let (mut perturbations, mut steps, mut descending) = (0, 0, true);
    for tok in get(i, "steps")?.split_whitespace() {
        let (pert, tok) = tok.strip_prefix('*').map_or((false, tok), |t| (true, t));
        let (label, unit) = tok.split_once(':').ok_or_else(|| ParseError::Vector(tok.to_string()))?;
        let idx = Diagram::index_of(label).ok_or_else(|| ParseError::Vector(label.to_string()))?;
        cur = reflect::reflect_vec(h.lattice(), &h.diagram.roots[idx], unit_by_name(unit)?, &cur)?;
        let k = h.key(&cur);
        descending &= pert || k < key;
        perturbations += usize::from(pert);
        steps += 1;
        key = k;
    }
    let terminal = h.unit_multiple_of_diagram_root(&cur);
    let labels: Vec<&str> = Diagram::labels().collect();
    let mut out = Outcome {
        pass: descending && perturbations <= 1 && key == HeightKey::ONE && terminal.is_some(),
        ..Default::default()
    }
    .with("start_height_squared", start.squared())
    .with("steps", steps)
    .with("perturbations", perturbations)
    .with("strict_descent", descending)
    .show("start_height", start.display());
    if let Some((s, u)) = terminal {
        out = out.with("terminal", labels[s]).with("terminal_unit", u);
    }
    Ok(out)
}

fn check_min_mirrors(i: &Inputs) -> Result<Outcome> {
    let h = Heights::new(diagram_from(i)?)?;
    let rep = if quick(i) { heightred::enumerate_min_height_sampled(&h, 9) } else { heightred::enumerate_min_height(&h) };
    let labelled = rep.labels.iter().all(Option::is_some);
    let mut labels: Vec<&str> = rep.labels.iter().flatten().copied().collect();
    labels.sort();
    labels.dedup();
    let complete = rep.exhaustive && rep.classes.len() == 14 && labels.len() == 14;
    Ok(Outcome {
        pass: rep.all_height_one && labelled && (complete || quick(i)),
        ..Default::default()
    }
    .with("attempts", rep.attempts)
    .with("integral", rep.integral)
    .with("classes", rep.classes.len())
    .with("labels", labels.join(" "))
    .with("all_height_one", rep.all_height_one))
}

fn check_bounds(i: &Inputs) -> Result<Outcome> {
    let h = Heights::new(diagram_from(i)?)?;
    let b = heightred::bound_report(&h);
    let pass = b.sinh_identity
        && b.cosh_identity
        && b.self_cosine
        && (b.first_bound - 2.32).abs() <= 0.01
        && (b.second_bound - 2.26).abs() <= 0.01;
    Ok(Outcome { pass, ..Default::default() }
        .with("rho_norm", &b.rho_norm)
        .with("sinh_squared_is_half_rho_norm", b.sinh_identity)
        .with("cosh_squared_is_quarter_inverse_rho_norm", b.cosh_identity)
        .with("rho_self_cosine", b.self_cosine)
        .show("first_bound", b.first_bound)
        .show("second_bound", b.second_bound))
}

pub fn structure_certificates(src: &Sources, q: bool) -> Vec<Certificate> {
    vec![cert("structure.lattices", inputs(&[("leech_basis", &src.leech_basis), ("mode", mode(q))]))]
}

pub fn diagram_certificates(src: &Sources) -> Vec<Certificate> {
    let i = inputs(&[("roots", &src.roots)]);
    ["diagram.integrity", "diagram.line_relations", "diagram.w_norms", "diagram.weyl", "diagram.deflate", "diagram.spider", "diagram.fixed_space"]
        .iter()
        .map(|id| cert(id, i.clone()))
        .collect()
}

pub fn reference_matrix_certificate(src: &Sources) -> Certificate {
    cert("iso.reference_matrix", inputs(&[("basis_change", &src.basis_change)]))
}

pub const DEFAULT_SEEDS: &str = "first random:1 random:2";

pub fn search_certificate(seeds: &str, q: bool) -> Certificate {
    let seeds = if q { seeds.split_whitespace().next().unwrap_or("first") } else { seeds };
    cert("iso.search", inputs(&[("seeds", seeds), ("mode", mode(q))]))
}

pub fn heisen_certificates(q: bool) -> Vec<Certificate> {
    let count = if q { "10" } else { "100" };
    vec![
        cert("heisen.identities", inputs(&[("seed", "20240601"), ("count", count), ("mode", mode(q))])),
        cert("heisen.central_cases", inputs(&[("expected:i+j", "(0,-2,-4,-2)/2"), ("expected:i+k", "(0,0,-2,-2)/2")])),
    ]
}

/// One certificate per generator root, in generator order.
pub fn generation_certificates(src: &Sources) -> Result<Vec<Certificate>> {
    let h = Heights::new(Diagram::from_entries(&parse_roots(&src.roots)?)?)?;
    let lat = heisen::lattice();
    let bc = basis_change_from(&inputs(&[("basis_change", &src.basis_change)]))?;
    Ok(heisen::generators81(&lat)
        .par_iter()
        .map(|g| {
            let steps = heightred::reduce(&h, &bc.convert(&g.root, Direction::To3E8H))
                .map(|t| steps_text(&t))
                .unwrap_or_default();
            cert(
                "height.generation",
                inputs(&[
                    ("roots", &src.roots),
                    ("basis_change", &src.basis_change),
                    ("generator", &g.name),
                    ("root", &g.root.to_string()),
                    ("steps", &steps),
                ]),
            )
        })
        .collect())
}

pub fn min_mirror_certificate(src: &Sources, q: bool) -> Certificate {
    cert("height.min_mirrors", inputs(&[("roots", &src.roots), ("mode", mode(q))]))
}

pub fn bounds_certificate(src: &Sources) -> Certificate {
    cert("height.bounds", inputs(&[("roots", &src.roots)]))
}

fn cert(id: &str, i: Inputs) -> Certificate {
    run(id, i).expect("registered claim")
}

/// Everything, in dependency order.
pub fn verify_all(src: &Sources, q: bool) -> Result<Vec<Certificate>> {
    let mut out = structure_certificates(src, q);
    out.extend(diagram_certificates(src));
    out.push(reference_matrix_certificate(src));
    out.push(search_certificate(DEFAULT_SEEDS, q));
    out.extend(heisen_certificates(q));
    out.extend(generation_certificates(src)?);
    out.push(min_mirror_certificate(src, q));
    out.push(bounds_certificate(src));
    Ok(out)
}
