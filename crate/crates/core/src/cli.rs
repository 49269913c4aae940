//! Command-line front end. Every command builds a typed report, printed as
//! JSON (`--output json`) or as a short table.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 a checked property failed.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::arrangement::{
    abelian_duality_constraints, build_flat_poset, corank, duality_dimension, parse_arrangement, whitney_poincare, Arrangement,
    DualityConstraints, DualityKind,
};
use crate::charvar::{run_sweep, GenericVanishingReport, PropagationReport};
use crate::error::{Error, Result};
use crate::exactlin::is_prime;
use crate::orbitconfig::{
    classify_duality, count_strata, euler_orbit_config, euler_unordered_series_check, signed_euler_consistency, DualityClassification,
    OrbitConfigSpec, SignedEulerReport,
};
use crate::salvetti::{betti_sweep, build_cw_model, enumerate_faces, sweep_characters, twisted_betti, Character, SweepMode};
use crate::toric::{layer_poset, parse_toric, toric_duality_check, toric_poincare, ToricDualityReport};
use crate::wonderful::{all_gamma_classes, building_set, nested_set_complex, BuildingFlavor};

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "arrcoh", version, about = "Exact cohomology computations for arrangement complements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Intersection poset with Möbius values.
    Flats(FileArgs),
    /// Poincaré polynomial of the complement.
    Poincare(FileArgs),
    /// Building set and nested set complex.
    Nested(FileArgs),
    /// Meridian classes of the building set members.
    Gamma(FileArgs),
    /// Twisted Betti numbers for one character or a sweep.
    Betti(FileArgs),
    /// Points of a characteristic variety seen by a sweep.
    Charvar(FileArgs),
    /// Propagation of characteristic varieties.
    Propagate(FileArgs),
    /// Vanishing of cohomology for nonresonant characters.
    GenericVanish(FileArgs),
    /// Layers, Poincaré polynomial and duality constraints of a toric arrangement.
    Toric(FileArgs),
    /// Strata, Euler characteristic and duality of an orbit configuration space.
    Orbit(OrbitArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Building {
    Minimal,
    Maximal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Args, Debug)]
pub struct FileArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = 5)]
    pub prime: u64,
    #[arg(long, conflicts_with_all = ["samples", "seed"])]
    pub exhaustive: bool,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Building::Minimal)]
    pub building: Building,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub output: OutputFormat,
    /// Cohomological degree for `charvar`.
    #[arg(long, default_value_t = 1)]
    pub degree: usize,
    /// Comma-separated character values for `betti`.
    #[arg(long, value_delimiter = ',')]
    pub character: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Order of the group.
    #[arg(long)]
    pub gamma: u32,
    #[arg(long)]
    pub cyclic: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub output: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Flats,
    Poincare,
    Nested,
    Gamma,
    Betti,
    Charvar,
    Propagate,
    GenericVanish,
    Toric,
    Orbit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    pub prime: u64,
    pub mode: SweepMode,
    pub building: BuildingFlavor,
    pub output: OutputFormat,
    pub degree: usize,
    pub character: Option<Vec<u64>>,
    pub orbit: Option<OrbitConfigSpec>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig> {
        let (command, args) = match cli.command {
            CliCommand::Orbit(o) => {
                let spec = OrbitConfigSpec { genus: o.g, punctures: o.k, points: o.n, group_order: o.gamma, cyclic: o.cyclic };
                spec.validate()?;
                return Ok(RunConfig {
                    command: Command::Orbit,
                    input: None,
                    prime: 5,
                    mode: SweepMode::Exhaustive,
                    building: BuildingFlavor::Minimal,
                    output: o.output,
                    degree: 1,
                    character: None,
                    orbit: Some(spec),
                });
            }
            CliCommand::Flats(a) => (Command::Flats, a),
            CliCommand::Poincare(a) => (Command::Poincare, a),
            CliCommand::Nested(a) => (Command::Nested, a),
            CliCommand::Gamma(a) => (Command::Gamma, a),
            CliCommand::Betti(a) => (Command::Betti, a),
            CliCommand::Charvar(a) => (Command::Charvar, a),
            CliCommand::Propagate(a) => (Command::Propagate, a),
            CliCommand::GenericVanish(a) => (Command::GenericVanish, a),
            CliCommand::Toric(a) => (Command::Toric, a),
        };
        if args.prime < 3 || !is_prime(args.prime) {
            return Err(Error::NotPrime(args.prime));
        }
        let mode = match (args.samples, args.seed) {
            (None, None) => SweepMode::Exhaustive,
            (Some(samples), Some(seed)) => SweepMode::Sampled { samples, seed },
            (Some(_), None) => return Err(Error::Usage("--samples needs --seed".into())),
            (None, Some(_)) => return Err(Error::Usage("--seed needs --samples".into())),
        };
        Ok(RunConfig {
            command,
            input: Some(args.input),
            prime: args.prime,
            mode,
            building: match args.building {
                Building::Minimal => BuildingFlavor::Minimal,
                Building::Maximal => BuildingFlavor::Maximal,
            },
            output: args.output,
            degree: args.degree,
            character: args.character,
            orbit: None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(msg: String) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: msg }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::error(text),
            };
        }
    };
    match RunConfig::from_cli(cli) {
        Ok(config) => run(&config),
        Err(e) => Outcome::error(format!("error: {e}\n")),
    }
}

#[derive(Serialize)]
struct ConfigEcho {
    prime: u64,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    building: BuildingFlavor,
    degree: usize,
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize, T: Serialize> {
    schema: u32,
    command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
    config: &'a C,
    result: &'a T,
}

struct Rendered {
    json: String,
    table: String,
    violation: bool,
}

pub fn run(config: &RunConfig) -> Outcome {
    let rendered = match config.command {
        Command::Orbit => orbit(config),
        _ => match load(config) {
            Ok(text) => dispatch(config, &text),
            Err(e) => Err(e),
        },
    };
    match rendered {
        Ok(r) => {
            let mut stdout = match config.output {
                OutputFormat::Json => r.json,
                OutputFormat::Table => r.table,
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: if r.violation { 2 } else { 0 }, stdout, stderr: String::new() }
        }
        Err(msg) => Outcome::error(msg),
    }
}

fn input_name(config: &RunConfig) -> String {
    config.input.as_ref().map(|p| p.display().to_string()).unwrap_or_default()
}

fn load(config: &RunConfig) -> std::result::Result<String, String> {
    let path = config.input.as_ref().ok_or("error: missing input file\n")?;
    std::fs::read_to_string(path).map_err(|e| format!("error: cannot read {}: {e}\n", path.display()))
}

fn render<T: Serialize>(config: &RunConfig, result: &T, table: String, violation: bool) -> Rendered {
    let (mode, samples, seed) = match config.mode {
        SweepMode::Exhaustive => ("exhaustive", None, None),
        SweepMode::Sampled { samples, seed } => ("sampled", Some(samples), Some(seed)),
    };
    let echo = ConfigEcho { prime: config.prime, mode, samples, seed, building: config.building, degree: config.degree };
    let env = Envelope { schema: SCHEMA, command: config.command, input: config.input.as_ref().map(|_| input_name(config)), config: &echo, result };
    Rendered { json: serde_json::to_string_pretty(&env).expect("reports serialize"), table, violation }
}

fn dispatch(config: &RunConfig, text: &str) -> std::result::Result<Rendered, String> {
    let name = input_name(config);
    let diag = |e: Error| format!("error: {name}: {e}\n");
    if config.command == Command::Toric {
        return Ok(toric(config, &parse_toric(text).map_err(diag)?));
    }
    let a = parse_arrangement(text).map_err(diag)?;
    let r = match config.command {
        Command::Flats => flats(config, &a),
        Command::Poincare => poincare(config, &a),
        Command::Nested => nested(config, &a),
        Command::Gamma => gamma(config, &a),
        Command::Betti => betti(config, &a),
        Command::Charvar => charvar(config, &a),
        Command::Propagate => propagate(config, &a),
        Command::GenericVanish => generic_vanish(config, &a),
        Command::Toric | Command::Orbit => unreachable!(),
    };
    r.map_err(diag)
}

fn int(x: &BigInt) -> String {
    x.to_string()
}

#[derive(Serialize)]
struct FlatRow {
    id: usize,
    codim: usize,
    hyperplanes: Vec<usize>,
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    mobius: BigInt,
}

#[derive(Serialize)]
struct FlatsResult {
    dim: usize,
    hyperplanes: usize,
    rank_counts: Vec<usize>,
    flats: Vec<FlatRow>,
}

fn flats(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let p = build_flat_poset(a);
    let rows: Vec<FlatRow> = p
        .ids()
        .map(|id| FlatRow { id, codim: p.rank(id), hyperplanes: p.flat(id).indices().to_vec(), mobius: p.mobius(id).clone() })
        .collect();
    let mut table = String::from("id\tcodim\tmobius\thyperplanes\n");
    for r in &rows {
        let _ = writeln!(table, "{}\t{}\t{}\t{:?}", r.id, r.codim, int(&r.mobius), r.hyperplanes);
    }
    let res = FlatsResult { dim: a.dim(), hyperplanes: a.len(), rank_counts: p.rank_counts(), flats: rows };
    Ok(render(config, &res, table, false))
}

#[derive(Serialize)]
struct PoincareResult {
    polynomial: String,
    #[serde(serialize_with = "crate::report::bigints_as_i64_or_string")]
    coefficients: Vec<BigInt>,
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    euler: BigInt,
    corank: usize,
    duality: DualityConstraints,
}

fn poincare(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let poin = whitney_poincare(&build_flat_poset(a));
    let r = corank(a);
    let d = duality_dimension(DualityKind::Linear, a.dim(), r, a.len())?;
    let res = PoincareResult {
        polynomial: poin.to_string(),
        coefficients: poin.coeffs().to_vec(),
        euler: poin.eval_i64(-1),
        corank: r,
        duality: abelian_duality_constraints(&poin, d),
    };
    Ok(render(config, &res, res.polynomial.clone(), false))
}

#[derive(Serialize)]
struct NestedResult {
    building: BuildingFlavor,
    /// Hyperplane sets of the members.
    members: Vec<Vec<usize>>,
    f_vector: Vec<usize>,
    /// Faces as indices into `members`.
    faces: Vec<Vec<usize>>,
}

fn nested(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let p = build_flat_poset(a);
    let g = building_set(a, &p, config.building);
    let cx = nested_set_complex(&g);
    let members: Vec<Vec<usize>> = g.members().iter().map(|&x| p.flat(x).indices().to_vec()).collect();
    let pos = |x| g.members().iter().position(|&m| m == x).expect("faces use members");
    let faces: Vec<Vec<usize>> = cx.faces().iter().map(|f| f.iter().map(|&x| pos(x)).collect()).collect();
    let mut table = String::new();
    for (i, m) in members.iter().enumerate() {
        let _ = writeln!(table, "G{i}\t{m:?}");
    }
    let _ = writeln!(table, "f-vector\t{:?}", cx.f_vector());
    for f in &faces {
        let names: Vec<String> = f.iter().map(|i| format!("G{i}")).collect();
        let _ = writeln!(table, "{{{}}}", names.join(", "));
    }
    let res = NestedResult { building: config.building, members, f_vector: cx.f_vector(), faces };
    Ok(render(config, &res, table, false))
}

#[derive(Serialize)]
struct GammaResult {
    building: BuildingFlavor,
    classes: Vec<Vec<i64>>,
}

fn gamma(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let p = build_flat_poset(a);
    let classes = all_gamma_classes(&building_set(a, &p, config.building));
    let table = classes.iter().map(|c| format!("{c:?}\n")).collect();
    Ok(render(config, &GammaResult { building: config.building, classes }, table, false))
}

#[derive(Serialize)]
struct BettiRow {
    character: Vec<u64>,
    betti: Vec<usize>,
}

fn betti_table(rows: &[BettiRow]) -> String {
    rows.iter().map(|r| format!("{:?}\t{:?}\n", r.character, r.betti)).collect()
}

fn betti(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let model = build_cw_model(&enumerate_faces(a)?);
    let rows: Vec<BettiRow> = match &config.character {
        Some(v) => {
            let rho = Character::new(config.prime, v.clone())?;
            vec![BettiRow { betti: twisted_betti(&model, &rho)?, character: v.clone() }]
        }
        None => {
            let chars = sweep_characters(config.prime, a.len(), config.mode)?;
            let betti = betti_sweep(&model, &chars)?;
            chars.into_iter().zip(betti).map(|(c, betti)| BettiRow { character: c.values().to_vec(), betti }).collect()
        }
    };
    Ok(render(config, &rows, betti_table(&rows), false))
}

#[derive(Serialize)]
struct CharvarResult {
    degree: usize,
    evaluated: usize,
    count: usize,
    characters: Vec<Vec<u64>>,
}

fn charvar(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let model = build_cw_model(&enumerate_faces(a)?);
    let chars = sweep_characters(config.prime, a.len(), config.mode)?;
    let betti = betti_sweep(&model, &chars)?;
    let q = config.degree;
    let mut members: Vec<Vec<u64>> = chars
        .iter()
        .zip(&betti)
        .filter(|(_, b)| b.get(q).is_some_and(|&v| v > 0))
        .map(|(c, _)| c.values().to_vec())
        .collect();
    members.sort();
    members.dedup();
    let mut table = format!("V^{q}: {} of {} characters\n", members.len(), chars.len());
    for m in &members {
        let _ = writeln!(table, "{m:?}");
    }
    let res = CharvarResult { degree: q, evaluated: chars.len(), count: members.len(), characters: members };
    Ok(render(config, &res, table, false))
}

fn gammas(config: &RunConfig, a: &Arrangement) -> Vec<Vec<i64>> {
    let p = build_flat_poset(a);
    all_gamma_classes(&building_set(a, &p, config.building))
}

fn histogram_table(h: &std::collections::BTreeMap<String, usize>) -> String {
    h.iter().map(|(k, v)| format!("  ({k})\t{v}\n")).collect()
}

fn propagate(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let data = run_sweep(a, config.prime, config.mode)?;
    let mut r: PropagationReport = data.propagation(&gammas(config, a));
    r.arrangement = input_name(config);
    let mut table = format!(
        "evaluated {}\tn_eff {}\tviolations {}\teuler mismatches {}\tV^0 trivial {}\n",
        r.evaluated,
        r.n_eff,
        r.violations.len(),
        r.euler_mismatches.len(),
        r.v0_is_trivial
    );
    table.push_str(&histogram_table(&r.betti_histogram));
    for v in &r.violations {
        let _ = writeln!(table, "violation {:?}: b_{} > 0 but b_{} = 0 {:?}", v.character, v.lower, v.upper, v.betti);
    }
    Ok(render(config, &r, table, !r.passed()))
}

fn generic_vanish(config: &RunConfig, a: &Arrangement) -> Result<Rendered> {
    let data = run_sweep(a, config.prime, config.mode)?;
    let mut r: GenericVanishingReport = data.generic_vanishing(&gammas(config, a), config.building);
    r.arrangement = input_name(config);
    let mut table = format!(
        "evaluated {}\tnonresonant {}\tn_eff {}\texpected b_top {}\tviolations {}\n",
        r.evaluated,
        r.nonresonant_count,
        r.n_eff,
        r.expected_top,
        r.violations.len()
    );
    for v in &r.violations {
        let _ = writeln!(table, "violation {:?} {:?}", v.character, v.betti);
    }
    Ok(render(config, &r, table, !r.passed()))
}

#[derive(Serialize)]
struct LayerRow {
    codim: usize,
    hypersurfaces: Vec<usize>,
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    mobius: BigInt,
}

#[derive(Serialize)]
struct ToricResult {
    polynomial: String,
    codim_counts: Vec<usize>,
    layers: Vec<LayerRow>,
    duality: ToricDualityReport,
}

fn toric(config: &RunConfig, t: &crate::toric::ToricArrangement) -> Rendered {
    let lp = layer_poset(t);
    let poin = toric_poincare(&lp);
    let layers = (0..lp.len())
        .map(|i| LayerRow { codim: lp.layer(i).codim(), hypersurfaces: lp.layer(i).indices().to_vec(), mobius: lp.mobius(i).clone() })
        .collect();
    let duality = toric_duality_check(t);
    let c = &duality.constraints;
    let table = format!(
        "{poin}\nlayers by codimension {:?}\neuler {}\nb_i > 0 {}\tb_1 >= {} {}\tsigned euler {}\n",
        lp.codim_counts(),
        duality.euler,
        c.betti_positive,
        c.dimension,
        c.b1_at_least_d,
        c.signed_euler_ok
    );
    let res = ToricResult { polynomial: poin.to_string(), codim_counts: lp.codim_counts(), layers, duality };
    render(config, &res, table, false)
}

#[derive(Serialize)]
struct OrbitResult {
    #[serde(serialize_with = "crate::report::biguint_as_u64_or_string")]
    strata: BigUint,
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    euler: BigInt,
    classification: DualityClassification,
    consistency: SignedEulerReport,
    /// Closed-surface series identity through `n`; only meaningful for `k = 0`.
    unordered_series_ok: bool,
}

fn verdict(v: crate::orbitconfig::Verdict) -> &'static str {
    match v {
        crate::orbitconfig::Verdict::Yes => "yes",
        crate::orbitconfig::Verdict::No => "no",
        crate::orbitconfig::Verdict::Unknown => "unknown",
    }
}

fn orbit(config: &RunConfig) -> std::result::Result<Rendered, String> {
    let spec = config.orbit.ok_or("error: missing orbit parameters\n")?;
    let err = |e: Error| format!("error: {e}\n");
    let strata = count_strata(&spec).map_err(err)?;
    let c = classify_duality(&spec);
    let res = OrbitResult {
        strata,
        euler: euler_orbit_config(&spec),
        classification: c,
        consistency: signed_euler_consistency(&spec),
        unordered_series_ok: euler_unordered_series_check(spec.genus, spec.points),
    };
    let dim = c.dimension.map_or("none".to_string(), |d| d.to_string());
    let table = format!(
        "strata {}\neuler {}\nduality {}\tabelian duality {}\tdimension {}\nsigned euler consistent {}\n",
        res.strata,
        res.euler,
        verdict(c.is_duality),
        verdict(c.is_abelian_duality),
        dim,
        res.consistency.consistent
    );
    let env = Envelope { schema: SCHEMA, command: Command::Orbit, input: None, config: &spec, result: &res };
    let json = serde_json::to_string_pretty(&env).expect("reports serialize");
    Ok(Rendered { json, table, violation: !res.consistency.consistent })
}
