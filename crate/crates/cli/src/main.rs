use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qleech_core::certify::{self, Certificate, Sources};
use qleech_core::diagram::Diagram;
use qleech_core::fixtures::{BASIS_CHANGE_FILE, LEECH_BASIS_FILE, ROOTS14_FILE};
use qleech_core::heightred::{self, Heights};
use qleech_core::{heisen, make_lattice, reflect, HLattice, Hq, LVec, LatticeName};

#[derive(Parser)]
#[command(name = "qleech", version, about = "Exact checks for the quaternionic Lorentzian Leech lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel steps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Sample the long searches; the resulting certificates are marked non-certifying.
    #[arg(long, global = true)]
    quick: bool,
    /// Directory holding leech_basis.txt, roots14.txt and basis_change.txt.
    #[arg(long, global = true, env = "QLEECH_FIXTURES")]
    fixtures: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Gram matrix, real signature and p-modularity of a named lattice.
    Lattice {
        /// e8, leech, h, 3e8h, leechh or std:N
        name: String,
        /// Also count vectors of this (negative) norm.
        #[arg(long, allow_hyphen_values = true)]
        shell: Option<i64>,
    },
    /// The 14-root diagram.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Isomorphism between Leech+H and 3E8+H.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// Heisenberg translations and the 81 generators.
    #[command(subcommand)]
    Heisen(HeisenCmd),
    /// Heights and reduction to the diagram.
    #[command(subcommand)]
    Height(HeightCmd),
    /// Complex reflections in a named lattice.
    #[command(subcommand)]
    Reflect(ReflectCmd),
    /// Every certificate, in dependency order.
    VerifyAll,
    /// Re-run every certificate in a JSON report from its recorded inputs.
    Recheck { file: PathBuf },
}

#[derive(Subcommand)]
enum DiagramCmd {
    /// Incidences, relations, Weyl vector, deflate, spider and fixed space.
    Verify,
}

#[derive(Subcommand)]
enum IsoCmd {
    /// Search the first Leech shell for a 3E8 system and complete it to a basis change.
    Search {
        /// Space-separated seeds: `first` or `random:N`.
        #[arg(long, default_value = certify::DEFAULT_SEEDS)]
        seeds: String,
    },
    /// Check the shipped basis change.
    VerifyReferenceMatrix,
}

#[derive(Subcommand)]
enum HeisenCmd {
    /// Composition, inverse, commutator and conjugation identities.
    CheckIdentities,
    /// The 81 generating roots, one per line, in ambient Leech+H coordinates.
    EmitGenerators,
}

#[derive(Subcommand)]
enum HeightCmd {
    /// Reduce roots to the diagram.
    Reduce {
        /// Reduce each of the 81 generating roots.
        #[arg(long, conflicts_with = "root")]
        all_generators: bool,
        /// A root in 3E8+H basis coordinates.
        #[arg(long)]
        root: Option<String>,
    },
    /// Exhaustive search for roots of height at most one.
    EnumerateMin,
    /// The distance bounds and their exact preimages.
    Bounds,
}

#[derive(Subcommand)]
enum ReflectCmd {
    /// Image of a vector under the reflection in a root.
    Apply {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        root: String,
        #[arg(long, default_value = "(0,2,0,0)/2")]
        unit: String,
        #[arg(long)]
        vector: String,
    },
    /// Whether two reflections commute, braid or neither.
    BraidType {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        root: String,
        #[arg(long)]
        other: String,
        #[arg(long, default_value = "(0,2,0,0)/2")]
        unit: String,
    },
    /// Order of the reflection.
    Order {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        root: String,
        #[arg(long, default_value = "(0,2,0,0)/2")]
        unit: String,
    },
}

enum Report {
    Certificates(Vec<Certificate>),
    Json(serde_json::Value),
    /// Written like `Json`, but the run fails.
    Failed(serde_json::Value),
    Text(String),
}

fn lattice_name(s: &str) -> anyhow::Result<LatticeName> {
    Ok(match s.to_ascii_lowercase().as_str() {
        "e8" => LatticeName::E8,
        "leech" => LatticeName::Leech,
        "h" => LatticeName::HyperbolicCell,
        "3e8h" => LatticeName::L3E8H,
        "leechh" => LatticeName::LLeechH,
        other => match other.strip_prefix("std:").map(str::parse) {
            Some(Ok(n)) => LatticeName::Standard(n),
            _ => bail!("unknown lattice `{s}`"),
        },
    })
}

fn read_sources(dir: Option<&Path>) -> anyhow::Result<Sources> {
    let Some(dir) = dir else { return Ok(Sources::embedded()) };
    let read = |f: &str| std::fs::read_to_string(dir.join(f)).with_context(|| format!("reading {}", dir.join(f).display()));
    Ok(Sources { leech_basis: read(LEECH_BASIS_FILE)?, roots: read(ROOTS14_FILE)?, basis_change: read(BASIS_CHANGE_FILE)? })
}

fn diagram_from(src: &Sources) -> anyhow::Result<Diagram> {
    Ok(Diagram::from_entries(&qleech_core::fixtures::parse_roots(&src.roots)?)?)
}

#[derive(Serialize)]
struct LatticeInfo {
    name: String,
    rank: usize,
    gram: Vec<Vec<Hq>>,
    real_signature: (usize, usize),
    p_modular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    shell: Option<(i64, usize)>,
}

fn lattice_info(lat: &HLattice, shell: Option<i64>) -> anyhow::Result<LatticeInfo> {
    let n = lat.rank();
    Ok(LatticeInfo {
        name: lat.name.clone(),
        rank: n,
        gram: (0..n).map(|s| lat.gram().row(s)).collect(),
        real_signature: lat.real_form_signature(),
        p_modular: lat.is_p_modular()?,
        shell: shell.map(|m| lat.shell_enumerate(m).map(|v| (m, v.len()))).transpose()?,
    })
}

fn reflect_cmd(cmd: ReflectCmd) -> anyhow::Result<Report> {
    let parse_vec = |s: &str| -> anyhow::Result<LVec> { Ok(s.parse()?) };
    let parse_unit = |s: &str| -> anyhow::Result<Hq> { Ok(s.parse()?) };
    Ok(match cmd {
        ReflectCmd::Apply { lattice, root, unit, vector } => {
            let lat = make_lattice(lattice_name(&lattice)?);
            let phi = reflect::Reflection::new(&lat, parse_vec(&root)?, parse_unit(&unit)?)?;
            let v = parse_vec(&vector)?;
            if v.len() != lat.rank() {
                bail!("vector has {} entries, lattice rank is {}", v.len(), lat.rank());
            }
            Report::Text(phi.apply(&lat, &v).to_string())
        }
        ReflectCmd::BraidType { lattice, root, other, unit } => {
            let lat = make_lattice(lattice_name(&lattice)?);
            let mu = parse_unit(&unit)?;
            let a = reflect::reflection_matrix(&lat, &parse_vec(&root)?, mu)?;
            let b = reflect::reflection_matrix(&lat, &parse_vec(&other)?, mu)?;
            Report::Json(serde_json::to_value(reflect::braid_type(&a, &b))?)
        }
        ReflectCmd::Order { lattice, root, unit } => {
            let lat = make_lattice(lattice_name(&lattice)?);
            let m = reflect::reflection_matrix(&lat, &parse_vec(&root)?, parse_unit(&unit)?)?;
            Report::Json(serde_json::json!({ "order": reflect::element_order(&m, 1000) }))
        }
    })
}

fn execute(cli: Cli) -> anyhow::Result<Report> {
    let g = &cli.global;
    let src = || read_sources(g.fixtures.as_deref());
    Ok(match cli.command {
        Command::Lattice { name, shell } => {
            let lat = make_lattice(lattice_name(&name)?);
            Report::Json(serde_json::to_value(lattice_info(&lat, shell)?)?)
        }
        Command::Diagram(DiagramCmd::Verify) => Report::Certificates(certify::diagram_certificates(&src()?)),
        Command::Iso(IsoCmd::Search { seeds }) => Report::Certificates(vec![certify::search_certificate(&seeds, g.quick)]),
        Command::Iso(IsoCmd::VerifyReferenceMatrix) => {
            Report::Certificates(vec![certify::reference_matrix_certificate(&src()?)])
        }
        Command::Heisen(HeisenCmd::CheckIdentities) => Report::Certificates(certify::heisen_certificates(g.quick)),
        Command::Heisen(HeisenCmd::EmitGenerators) => {
            let lat = heisen::lattice();
            let lines: Vec<String> = heisen::generators81(&lat)
                .iter()
                .map(|r| {
                    let amb = lat.to_ambient(&r.root).expect("ambient coordinates");
                    format!("{}\t{}", r.name, LVec::new(amb))
                })
                .collect();
            Report::Text(lines.join("\n"))
        }
        Command::Height(HeightCmd::Reduce { all_generators: true, .. }) => {
            Report::Certificates(certify::generation_certificates(&src()?)?)
        }
        Command::Height(HeightCmd::Reduce { root: Some(root), .. }) => {
            let h = Heights::new(diagram_from(&src()?)?)?;
            let trace = heightred::reduce(&h, &root.parse()?)?;
            Report::Json(serde_json::to_value(trace)?)
        }
        Command::Height(HeightCmd::Reduce { .. }) => bail!("give --all-generators or --root"),
        Command::Height(HeightCmd::EnumerateMin) => Report::Certificates(vec![certify::min_mirror_certificate(&src()?, g.quick)]),
        Command::Height(HeightCmd::Bounds) => Report::Certificates(vec![certify::bounds_certificate(&src()?)]),
        Command::Reflect(cmd) => reflect_cmd(cmd)?,
        Command::VerifyAll => Report::Certificates(certify::verify_all(&src()?, g.quick)?),
        Command::Recheck { file } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let certs: Vec<Certificate> = serde_json::from_str(&text)?;
            let results = certs
                .iter()
                .map(|c| Ok(serde_json::json!({ "claim": c.claim, "criterion": c.criterion, "rechecked": certify::recheck(c)? })))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let all = results.iter().all(|r| r["rechecked"] == true);
            let value = serde_json::json!({ "schema": certify::SCHEMA, "all_rechecked": all, "results": results });
            if all {
                Report::Json(value)
            } else {
                Report::Failed(value)
            }
        }
    })
}

fn emit(report: &Report, output: Option<&Path>) -> anyhow::Result<()> {
    let text = match report {
        Report::Certificates(c) => serde_json::to_string_pretty(c)?,
        Report::Json(v) | Report::Failed(v) => serde_json::to_string_pretty(v)?,
        Report::Text(t) => t.clone(),
    };
    match output {
        Some(p) => std::fs::write(p, text + "\n").with_context(|| format!("writing {}", p.display()))?,
        None => writeln!(std::io::stdout(), "{text}")?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let output = cli.global.output.clone();
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&report, output.as_deref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if matches!(report, Report::Failed(_)) {
        return ExitCode::from(1);
    }
    if let Report::Certificates(certs) = &report {
        let failed: Vec<&Certificate> = certs.iter().filter(|c| !c.passed()).collect();
        eprintln!("{} certificates, {} failed", certs.len(), failed.len());
        for c in &failed {
            eprintln!("  FAIL {} (criterion {})", c.claim, c.criterion);
        }
        if !failed.is_empty() {
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}

#[cfg(test)]
mod tests {
    use super::*;
    use qleech_core::diagram::roots14;

    #[test]
    fn lattice_names() {
        assert!(matches!(lattice_name("E8").unwrap(), LatticeName::E8));
        assert!(matches!(lattice_name("std:3").unwrap(), LatticeName::Standard(3)));
        assert!(lattice_name("std:x").is_err());
        assert!(lattice_name("d4").is_err());
    }

    #[test]
    fn embedded_sources_build_the_diagram() {
        let d = diagram_from(&read_sources(None).unwrap()).unwrap();
        assert_eq!(d.roots, roots14().roots);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
