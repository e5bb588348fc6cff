mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use polypair::characterize::{
    fatness, flag_necessary_bounds, membership, nonsimplicial_facet_bound,
    resolve_kind, FlagPairKind, PairKind, Verdict,
};
use polypair::cyclic::{
    cyclic_facet_count, cyclic_g_vector, gale_facets, simplicial_fd_spectrum_with_budget,
    DEFAULT_SPECTRUM_BUDGET,
};
use polypair::io::{
    export_seeds, load_seed, parse_facet_list, seed_database, serialize_bracket,
    serialize_facet_list,
};
use polypair::witness::{
    execute, execute_with, plan, region_scan, Recipe, RegionBounds, ScanOptions, Verification,
    WitnessCache, WitnessError,
};
use polypair::incidence::FlagIdentity;
use polypair::VertexFacetIncidence;

#[derive(Parser)]
#[command(name = "polypair", version, about = "Face and flag vector pairs of polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a pair is polytopal.
    Check(CheckArgs),
    /// Build and verify a witness polytope for an (f0,f03) pair.
    Witness(WitnessArgs),
    /// Verify a facet-list file or a recipe file.
    Verify(VerifyArgs),
    /// Verdict table over a box of pairs.
    Region(RegionArgs),
    /// Cyclic polytope counts and facets.
    Cyclic(CyclicArgs),
    /// List, dump or export the seed database.
    Seeds(SeedsArgs),
}

#[derive(Args)]
struct RefineFlags {
    /// Use the smaller d-large thresholds for d = 5, 6 (default).
    #[arg(long, overrides_with = "no_refined")]
    refined: bool,
    #[arg(long)]
    no_refined: bool,
}

impl RefineFlags {
    fn enabled(&self) -> bool {
        !self.no_refined
    }
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// Pair kind such as f0,f03 or f1,f2; defaults to f0,f{dim-1}.
    #[arg(long)]
    kind: Option<String>,
    #[command(flatten)]
    refine: RefineFlags,
    a: u64,
    b: u64,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long, default_value = "f0,f03")]
    kind: String,
    /// Directory for the recipe and facet files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Skip the face-lattice check after every step.
    #[arg(long)]
    final_only: bool,
    f0: u64,
    f03: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Facet list (line or bracket format) or recipe (.json).
    file: PathBuf,
    /// Dimension for files without a header.
    #[arg(long)]
    dim: Option<usize>,
}

#[derive(Args)]
struct RegionArgs {
    #[arg(long, default_value = "f0,f03")]
    kind: String,
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// For f0,f03: every pair with f03 up to this value.
    #[arg(long)]
    max_f03: Option<u64>,
    #[arg(long)]
    min_a: Option<u64>,
    #[arg(long)]
    max_a: Option<u64>,
    #[arg(long)]
    min_b: Option<u64>,
    #[arg(long)]
    max_b: Option<u64>,
    /// Attach witness recipes (default for f0,f03).
    #[arg(long, overrides_with = "no_witness")]
    witness: bool,
    #[arg(long)]
    no_witness: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct CyclicArgs {
    #[arg(long, default_value_t = 4)]
    dim: usize,
    n: usize,
    /// Print the facets.
    #[arg(long)]
    facets: bool,
    /// Print every facet count of a simplicial polytope with n vertices.
    #[arg(long)]
    spectrum: bool,
}

#[derive(Args)]
struct SeedsArgs {
    #[command(subcommand)]
    action: Option<SeedsAction>,
}

#[derive(Subcommand)]
enum SeedsAction {
    /// Name, pair and origin of every seed.
    List,
    /// Facet list of one seed.
    Dump {
        name: String,
        #[arg(long)]
        bracket: bool,
    },
    /// Write every seed as <name>.fl.
    Export {
        #[arg(long, default_value = "seeds")]
        out: PathBuf,
    },
}

/// Error classes with their exit codes.
enum Failure {
    Usage(anyhow::Error),
    Verification(anyhow::Error),
    Plan(anyhow::Error),
    Other(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Plan(_) => 4,
            Failure::Other(_) => 1,
        }
    }

    fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Usage(e) | Failure::Verification(e) | Failure::Plan(e) | Failure::Other(e) => e,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

fn classify(e: WitnessError) -> Failure {
    match e {
        WitnessError::PlanFailure { .. } => Failure::Plan(e.into()),
        WitnessError::NotPolytopal { .. } | WitnessError::UnknownSeed(_) | WitnessError::Json(_) => {
            Failure::Usage(e.into())
        }
        _ => Failure::Verification(e.into()),
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => check(a),
        Command::Witness(a) => witness(a),
        Command::Verify(a) => verify(a),
        Command::Region(a) => region(a),
        Command::Cyclic(a) => cyclic(a),
        Command::Seeds(a) => seeds(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error());
            ExitCode::from(f.code())
        }
    }
}

fn check(a: CheckArgs) -> Outcome {
    let kind = a.kind.unwrap_or_else(|| format!("f0,f{}", a.dim.saturating_sub(1)));
    let flag = match kind.replace(' ', "").as_str() {
        "f0,f02" => Some(FlagPairKind::F0F02),
        "f1,f02" => Some(FlagPairKind::F1F02),
        _ => None,
    };
    if let Some(fk) = flag {
        let ok = flag_necessary_bounds(fk, a.a, a.b);
        return Ok(format!(
            "{} (necessary bounds only)\n",
            if ok { "WithinBounds" } else { "OutOfBounds" }
        ));
    }
    let status = membership(&kind, a.dim, a.a, a.b, a.refine.enabled()).map_err(|e| Failure::Usage(e.into()))?;
    let mut out = format!("{status}\n");
    if let Some(h) = &status.witness_hint {
        writeln!(out, "hint: {h}").unwrap();
    }
    Ok(out)
}

fn witness(a: WitnessArgs) -> Outcome {
    let (f0, f03) = match a.kind.replace(' ', "").as_str() {
        "f0,f03" => (a.f0, a.f03),
        "f03,f0" => (a.f03, a.f0),
        _ => return Err(Failure::Usage(anyhow!("witnesses are built for f0,f03 pairs only"))),
    };
    let cache = WitnessCache::from_env();
    let label = PairKind::F0F03.label();
    let (recipe, p) = match cache.get(&label, (f0, f03)) {
        Some(hit) => hit,
        None => {
            let recipe = plan(f0, f03).map_err(classify)?;
            let level = if a.final_only { Verification::Final } else { Verification::EveryStep };
            let (p, _) = execute_with(&recipe, level).map_err(classify)?;
            cache.put(&label, &recipe, &p).map_err(classify)?;
            (recipe, p)
        }
    };
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let stem = a.out.join(format!("{f0}_{f03}"));
    let recipe_path = stem.with_extension("recipe.json");
    let facets_path = stem.with_extension("facets");
    write_file(&recipe_path, (recipe.to_json() + "\n").as_bytes())?;
    write_file(&facets_path, serialize_facet_list(&p).as_bytes())?;
    Ok(format!(
        "recipe {}\npair ({f0},{f03})\nwrote {}\nwrote {}\n",
        recipe.id(),
        recipe_path.display(),
        facets_path.display()
    ))
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn describe(p: &VertexFacetIncidence, out: &mut String) -> bool {
    let lattice = match p.face_lattice() {
        Ok(l) => l,
        Err(e) => {
            writeln!(out, "graded: FAIL ({e})").unwrap();
            return false;
        }
    };
    let fv = lattice.flag_vector();
    let f = fv.f_vector();
    writeln!(out, "dim {}", p.dim()).unwrap();
    writeln!(out, "f-vector {f}").unwrap();
    writeln!(out, "flag vector {fv}").unwrap();
    let (_, fi) = fv.pair();
    writeln!(out, "f0{} = {fi}", p.dim() - 1).unwrap();
    let checks = lattice.checks();
    writeln!(out, "graded: {}", pass(checks.graded)).unwrap();
    writeln!(out, "lattice: {}", pass(checks.lattice)).unwrap();
    writeln!(out, "diamond: {}", pass(checks.diamond)).unwrap();
    writeln!(out, "euler characteristic: {}", pass(checks.euler)).unwrap();
    let violated = fv.violated_identities();
    if p.dim() == 4 {
        for id in FlagIdentity::ALL {
            writeln!(out, "{}: {}", id.name(), pass(!violated.contains(&id))).unwrap();
        }
    }
    if p.dim() == 4 {
        match fatness(&f) {
            Ok(x) => writeln!(out, "fatness {x}").unwrap(),
            Err(e) => writeln!(out, "fatness undefined ({e})").unwrap(),
        }
    }
    checks.all_pass() && violated.is_empty()
}

fn verify(a: VerifyArgs) -> Outcome {
    let text = fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let mut out = String::new();
    if a.file.extension().is_some_and(|e| e == "json") {
        let recipe = Recipe::from_json(&text).map_err(classify)?;
        let (p, report) = execute(&recipe).map_err(classify)?;
        writeln!(out, "recipe {}", recipe.id()).unwrap();
        for s in &report.steps {
            let (x, y) = s.delta();
            writeln!(out, "{} {:?} -> {:?} ({x:+},{y:+})", s.op, s.before, s.after).unwrap();
        }
        let ok = describe(&p, &mut out);
        writeln!(out, "expected {:?}: {}", report.expected, pass(report.matches())).unwrap();
        return if ok { Ok(out) } else { Err(Failure::Verification(anyhow!("{out}checks failed"))) };
    }
    let text = match a.dim {
        Some(d) if !text.lines().any(|l| l.trim_start().starts_with("dim=")) => format!("dim={d}\n{text}"),
        _ => text,
    };
    let p = parse_facet_list(&text).map_err(|e| Failure::Verification(e.into()))?;
    if describe(&p, &mut out) {
        Ok(out)
    } else {
        Err(Failure::Verification(anyhow!("{out}checks failed")))
    }
}

fn region(a: RegionArgs) -> Outcome {
    let r = resolve_kind(&a.kind, a.dim).map_err(|e| Failure::Usage(e.into()))?;
    let kind = r.kind;
    if matches!(kind, PairKind::HighDim(_)) {
        return Err(Failure::Usage(anyhow!("region scans cover 4-dimensional kinds")));
    }
    let mut bounds = match a.max_f03 {
        Some(m) if kind == PairKind::F0F03 => RegionBounds::f0f03_up_to(m),
        Some(_) => return Err(Failure::Usage(anyhow!("--max-f03 needs --kind f0,f03"))),
        None => RegionBounds {
            a_min: 1,
            a_max: 12,
            b_min: 1,
            b_max: 80,
        },
    };
    bounds.a_min = a.min_a.unwrap_or(bounds.a_min);
    bounds.a_max = a.max_a.unwrap_or(bounds.a_max);
    bounds.b_min = a.min_b.unwrap_or(bounds.b_min);
    bounds.b_max = a.max_b.unwrap_or(bounds.b_max);
    let options = ScanOptions {
        witnesses: kind == PairKind::F0F03 && !a.no_witness,
        cache: None,
    };
    let cells = region_scan(kind, bounds, &options).map_err(classify)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["a", "b", "verdict", "reason", "recipe"]).map_err(anyhow::Error::from)?;
    for c in &cells {
        w.write_record([
            c.a.to_string(),
            c.b.to_string(),
            c.status.verdict.to_string(),
            c.status.reason.to_string(),
            c.recipe.clone().unwrap_or_default(),
        ])
        .map_err(anyhow::Error::from)?;
    }
    let table = w.into_inner().map_err(|e| anyhow!("{e}"))?;
    let mut out = String::new();
    match &a.csv {
        Some(path) => write_file(path, &table)?,
        None => out.push_str(&String::from_utf8(table).expect("csv output is utf-8")),
    }
    if let Some(path) = &a.svg {
        write_file(path, svg::scatter(kind, &cells).as_bytes())?;
    }
    let count = |v: Verdict| cells.iter().filter(|c| c.status.verdict == v).count();
    writeln!(
        out,
        "{} cells: {} polytopal, {} exceptional, {} unknown",
        cells.len(),
        count(Verdict::Polytopal),
        count(Verdict::Exceptional),
        count(Verdict::Unknown)
    )
    .unwrap();
    Ok(out)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn cyclic(a: CyclicArgs) -> Outcome {
    let usage = |e: polypair::cyclic::CyclicError| Failure::Usage(e.into());
    let count = cyclic_facet_count(a.dim, a.n).map_err(usage)?;
    let g = cyclic_g_vector(a.dim, a.n).map_err(usage)?;
    let mut out = format!("C_{}({})\nfacets {count}\ng-vector {g}\n", a.dim, a.n);
    if let Ok(b) = nonsimplicial_facet_bound(a.dim, a.n as u64) {
        writeln!(out, "non-simplicial facet bound {b}").unwrap();
    }
    if a.spectrum {
        let spec = simplicial_fd_spectrum_with_budget(a.dim, a.n, DEFAULT_SPECTRUM_BUDGET).map_err(usage)?;
        let items: Vec<String> = spec.iter().map(ToString::to_string).collect();
        writeln!(out, "spectrum {}", items.join(" ")).unwrap();
    }
    if a.facets {
        for f in gale_facets(a.dim, a.n).map_err(usage)? {
            let ids: Vec<String> = f.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", ids.join(" ")).unwrap();
        }
    }
    Ok(out)
}

fn seeds(a: SeedsArgs) -> Outcome {
    let mut out = String::new();
    match a.action.unwrap_or(SeedsAction::List) {
        SeedsAction::List => {
            for e in seed_database().map_err(|e| Failure::Other(e.into()))? {
                writeln!(out, "{}\t({},{})\t{}", e.name, e.expected_pair.0, e.expected_pair.1, e.source).unwrap();
            }
        }
        SeedsAction::Dump { name, bracket } => {
            let e = load_seed(&name).map_err(|e| Failure::Usage(e.into()))?;
            if bracket {
                out = serialize_bracket(&e.incidence).map_err(|e| Failure::Usage(e.into()))? + "\n";
            } else {
                out = serialize_facet_list(&e.incidence);
            }
        }
        SeedsAction::Export { out: dir } => {
            let paths = export_seeds(&dir).map_err(|e| Failure::Other(e.into()))?;
            writeln!(out, "wrote {} files to {}", paths.len(), dir.display()).unwrap();
        }
    }
    Ok(out)
}
