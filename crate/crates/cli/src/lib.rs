//! Command-line front end: input parsing, commands and report rendering.

pub mod formats;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use tqd::*;

use crate::formats::*;

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or files; exit code 2.
    Input(String),
    /// A verification check failed; exit code 1.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn engine<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Verification(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "tqd", version, about = "Fusion subcategories of twisted quantum doubles")]
pub struct Cli {
    #[command(flatten)]
    pub source: Source,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "group_source")]
pub struct GroupSource {
    /// Group file (JSON multiplication table or permutation generators).
    #[arg(long = "group", global = true, value_name = "FILE")]
    pub file: Option<PathBuf>,
    /// Builtin group: Zn, Z2xZ2, S3, S4, D4, Q8.
    #[arg(long = "builtin", global = true, value_name = "NAME")]
    pub builtin: Option<String>,
}

#[derive(Debug, Args)]
pub struct Source {
    #[command(flatten)]
    pub group: GroupSource,
    /// `trivial`, `cyclic:n,q` or a cocycle JSON file.
    #[arg(long, global = true, default_value = "trivial", value_name = "SPEC")]
    pub cocycle: String,
    /// Largest accepted group order.
    #[arg(long, global = true, default_value_t = 128, value_name = "ORDER")]
    pub cap: usize,
    /// Largest number of simples the fusion oracle will process.
    #[arg(long, global = true, default_value_t = 512, value_name = "COUNT")]
    pub oracle_cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group structure.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Fusion subcategories.
    Subcats {
        #[command(subcommand)]
        action: SubcatsAction,
    },
    /// Subcategory lattice.
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Invariants of one triple `K,H,BFILE` (K, H are normal subgroup ids
    /// from `group info`; BFILE is a `{"dlog": [...]}` file or `trivial`).
    Invariants {
        #[arg(long, value_name = "K,H,BFILE")]
        triple: String,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupAction {
    Info {
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Debug, Subcommand)]
pub enum SubcatsAction {
    List {
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeAction {
    Export {
        #[arg(long, value_enum)]
        format: LatticeFormat,
        /// Output file; stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyAction {
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeFormat {
    Dot,
    Json,
}

/// Where the cocycle comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleSource {
    Trivial,
    Cyclic { n: usize, q: usize },
    File(PathBuf),
}

impl CocycleSource {
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        if spec == "trivial" {
            return Ok(CocycleSource::Trivial);
        }
        if let Some(rest) = spec.strip_prefix("cyclic:") {
            let parts: Vec<&str> = rest.split(',').collect();
            let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.trim().parse().ok()).collect();
            return match parsed.as_deref() {
                Some(&[n, q]) => Ok(CocycleSource::Cyclic { n, q }),
                _ => Err(CliError::Input(format!("expected cyclic:n,q, got {spec:?}"))),
            };
        }
        Ok(CocycleSource::File(PathBuf::from(spec)))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_group(source: &Source) -> Result<Arc<FiniteGroup>, CliError> {
    let g = match (&source.group.builtin, &source.group.file) {
        (Some(name), None) => FiniteGroup::builtin(name).map_err(input)?,
        (None, Some(path)) => {
            let name = path.file_stem().map_or("group".into(), |s| s.to_string_lossy().into_owned());
            match read_json::<GroupFile>(path)? {
                GroupFile::Table { order, mult } => {
                    if mult.len() != order {
                        return Err(CliError::Input(format!("order {order} but {} rows", mult.len())));
                    }
                    if order > source.cap {
                        return Err(CliError::Input(format!("GroupTooLarge: order {order} exceeds cap {}", source.cap)));
                    }
                    FiniteGroup::from_mult_table(&mult, name).map_err(input)?
                }
                GroupFile::Permutations { perm_gens } => {
                    FiniteGroup::from_permutation_generators(&perm_gens, name, source.cap).map_err(input)?
                }
            }
        }
        _ => return Err(CliError::Input("give exactly one of --group and --builtin".into())),
    };
    if g.order() > source.cap {
        return Err(CliError::Input(format!("GroupTooLarge: order {} exceeds cap {}", g.order(), source.cap)));
    }
    Ok(Arc::new(g))
}

/// The cocycle as given, without checking the cocycle condition.
pub fn load_cocycle_unchecked(source: &Source, g: &Arc<FiniteGroup>) -> Result<ThreeCocycle, CliError> {
    match CocycleSource::parse(&source.cocycle)? {
        CocycleSource::Trivial => Ok(ThreeCocycle::trivial(g.clone())),
        CocycleSource::Cyclic { n, q } => {
            let w = ThreeCocycle::builtin_cyclic(n, q).map_err(input)?;
            if w.group().mult_table() != g.mult_table() {
                return Err(CliError::Input(format!("cyclic:{n},{q} needs the group Z{n} in its standard labelling")));
            }
            Ok(w)
        }
        CocycleSource::File(path) => {
            let file: CocycleFile = read_json(&path)?;
            ThreeCocycle::new_unchecked(g.clone(), file.modulus, file.dlog).map_err(input)
        }
    }
}

pub fn load_double(source: &Source) -> Result<TwistedDouble, CliError> {
    let g = load_group(source)?;
    let w = load_cocycle_unchecked(source, &g)?;
    w.validate().map_err(input)?;
    TwistedDouble::new(w).map_err(input)
}

fn subgroup_text(s: &Subgroup) -> String {
    s.to_string()
}

pub fn group_info(source: &Source, format: TextOrJson) -> Result<String, CliError> {
    let g = load_group(source)?;
    let series = g.central_series();
    let normals = g.normal_subgroups();
    if format == TextOrJson::Json {
        let classes: Vec<_> = (0..g.num_classes())
            .map(|c| {
                json!({
                    "rep": g.class_reps()[c],
                    "size": g.class(c).len(),
                    "centralizer_order": g.class_centralizer(c).len(),
                })
            })
            .collect();
        let doc = json!({
            "name": g.name(),
            "order": g.order(),
            "exponent": g.exponent(),
            "abelian": g.is_abelian(),
            "classes": classes,
            "normal_subgroups": normals.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(),
            "center": g.center().members().to_vec(),
            "upper_central_series": series.upper.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(),
            "lower_central_series": series.lower.iter().map(|s| s.members().to_vec()).collect::<Vec<_>>(),
        });
        return Ok(serde_json::to_string_pretty(&doc).expect("serializable") + "\n");
    }
    let mut out = String::new();
    writeln!(out, "group: {}", g.name()).unwrap();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "exponent: {}", g.exponent()).unwrap();
    writeln!(out, "abelian: {}", g.is_abelian()).unwrap();
    writeln!(out, "classes: {}", g.num_classes()).unwrap();
    for c in 0..g.num_classes() {
        writeln!(
            out,
            "  class {c}: rep {}, size {}, centralizer order {}",
            g.class_reps()[c],
            g.class(c).len(),
            g.class_centralizer(c).len()
        )
        .unwrap();
    }
    writeln!(out, "normal subgroups: {}", normals.len()).unwrap();
    for (i, s) in normals.iter().enumerate() {
        writeln!(out, "  N{i}: {} (order {})", subgroup_text(s), s.len()).unwrap();
    }
    writeln!(out, "center: {}", subgroup_text(&g.center())).unwrap();
    let join = |v: &[Subgroup]| v.iter().map(subgroup_text).collect::<Vec<_>>().join(" <= ");
    writeln!(out, "upper central series: {}", join(&series.upper)).unwrap();
    writeln!(out, "lower central series: {}", join(&series.lower)).unwrap();
    Ok(out)
}

fn describe(d: &TwistedDouble, id: usize, s: &FusionSubcat) -> Result<SubcatJson, CliError> {
    let t = &s.triple;
    let flags: Flags = classify(d, t).map_err(engine)?.into();
    let tau = gauss_sum(d, t).map_err(engine)?;
    let zeta = central_charge(d, t).map_err(engine)?;
    Ok(SubcatJson {
        id,
        triple: t.into(),
        dim: s.dim,
        simples: s.simples.clone(),
        flags,
        gauss_sum: (&tau).into(),
        central_charge: zeta.into(),
    })
}

fn describe_all(d: &TwistedDouble) -> Result<(Vec<FusionSubcat>, Vec<SubcatJson>), CliError> {
    let subcats = enumerate_subcats(d).map_err(engine)?;
    let rows = subcats.iter().enumerate().map(|(i, s)| describe(d, i, s)).collect::<Result<_, _>>()?;
    Ok((subcats, rows))
}

fn format_complex(z: &JsonComplex) -> String {
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    format!("{:.9}{:+.9}i", clean(z.re), clean(z.im))
}

pub fn subcats_list(source: &Source, format: TextOrJson) -> Result<String, CliError> {
    let d = load_double(source)?;
    let (subcats, rows) = describe_all(&d)?;
    if format == TextOrJson::Json {
        return Ok(serde_json::to_string_pretty(&rows).expect("serializable") + "\n");
    }
    let mut out = String::new();
    writeln!(out, "# {} subcategories, root order N = {}", rows.len(), d.root_order()).unwrap();
    for (s, row) in subcats.iter().zip(&rows) {
        let tau = gauss_sum(&d, &s.triple).map_err(engine)?;
        writeln!(
            out,
            "{:>3} {} dim={} flags={} tau={} zeta={}",
            row.id,
            s.triple,
            row.dim,
            row.flags.short(),
            tau,
            format_complex(&row.central_charge)
        )
        .unwrap();
    }
    Ok(out)
}

/// Covering pairs of the inclusion order given by `contains`.
pub fn hasse_edges(triples: &[Triple]) -> Vec<[usize; 2]> {
    let n = triples.len();
    let le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| contains(&triples[i], &triples[j])).collect()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !le[i][j] {
                continue;
            }
            if !(0..n).any(|k| k != i && k != j && le[i][k] && le[k][j]) {
                edges.push([i, j]);
            }
        }
    }
    edges
}

pub fn lattice(d: &TwistedDouble) -> Result<LatticeJson, CliError> {
    let (subcats, nodes) = describe_all(d)?;
    let triples: Vec<Triple> = subcats.into_iter().map(|s| s.triple).collect();
    Ok(LatticeJson {
        group: d.group().name().to_string(),
        group_order: d.group().order(),
        cocycle_modulus: d.cocycle().modulus(),
        root_order: d.root_order(),
        nodes,
        edges: hasse_edges(&triples),
    })
}

pub fn lattice_dot(l: &LatticeJson) -> String {
    let set = |v: &[usize]| format!("{{{}}}", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for n in &l.nodes {
        writeln!(
            out,
            "  n{} [label=\"K={};H={};dim={};flags={}\"];",
            n.id,
            set(&n.triple.k),
            set(&n.triple.h),
            n.dim,
            n.flags.short()
        )
        .unwrap();
    }
    for [a, b] in &l.edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Re-validates every node of a parsed lattice against the double.
pub fn triples_from_lattice(d: &TwistedDouble, l: &LatticeJson) -> Result<Vec<Triple>, CliError> {
    l.nodes.iter().map(|n| triple_from_json(d, &n.triple)).collect()
}

pub fn triple_from_json(d: &TwistedDouble, t: &TripleJson) -> Result<Triple, CliError> {
    let g = d.group();
    if t.root_order != d.root_order() {
        return Err(CliError::Input(format!("root order {} does not match {}", t.root_order, d.root_order())));
    }
    let sub = |m: &[usize]| g.subgroup_from_members(m).ok_or_else(|| CliError::Input(format!("{m:?} is not a subgroup")));
    Triple::from_parts(d, sub(&t.k)?, sub(&t.h)?, t.dlog.clone()).map_err(input)
}

pub fn lattice_export(source: &Source, format: LatticeFormat) -> Result<String, CliError> {
    let d = load_double(source)?;
    let l = lattice(&d)?;
    Ok(match format {
        LatticeFormat::Json => serde_json::to_string_pretty(&l).expect("serializable") + "\n",
        LatticeFormat::Dot => lattice_dot(&l),
    })
}

fn normal_by_id(g: &FiniteGroup, id: &str) -> Result<Subgroup, CliError> {
    let idx: usize = id
        .trim()
        .trim_start_matches('N')
        .parse()
        .map_err(|_| CliError::Input(format!("bad normal subgroup id {id:?}")))?;
    g.normal_subgroups()
        .get(idx)
        .cloned()
        .ok_or_else(|| CliError::Input(format!("no normal subgroup N{idx}")))
}

pub fn invariants(source: &Source, spec: &str) -> Result<String, CliError> {
    let d = load_double(source)?;
    let g = d.group().clone();
    let parts: Vec<&str> = spec.splitn(3, ',').collect();
    let [k, h, bfile] = parts.as_slice() else {
        return Err(CliError::Input(format!("expected K,H,BFILE, got {spec:?}")));
    };
    let (k, h) = (normal_by_id(&g, k)?, normal_by_id(&g, h)?);
    let dlog = if bfile.trim() == "trivial" {
        vec![0; k.len() * h.len()]
    } else {
        read_json::<BicharacterFile>(Path::new(bfile.trim()))?.dlog
    };
    let t = Triple::from_parts(&d, k, h, dlog).map_err(input)?;
    let s = build_subcat(&d, &t).map_err(engine)?;
    let report = InvariantsJson {
        subcategory: describe(&d, 0, &s)?,
        centralizer: (&centralizer(&t)).into(),
        muger_center: (&muger_center(&d, &t).map_err(engine)?).into(),
        adjoint: adjoint(&d, &t).ok().map(|a| (&a).into()),
    };
    Ok(serde_json::to_string_pretty(&report).expect("serializable") + "\n")
}

fn check(name: &str, r: Result<String, String>) -> CheckJson {
    match r {
        Ok(detail) => CheckJson { name: name.into(), passed: true, detail },
        Err(detail) => CheckJson { name: name.into(), passed: false, detail },
    }
}

fn character_checks(d: &TwistedDouble) -> Result<String, String> {
    let g = d.group();
    let ctx = CycloContext::new(g.exponent());
    let t = CharacterTable::ordinary(g.clone(), &ctx).map_err(|e| e.to_string())?;
    t.verify(&ctx).map_err(|e| e.to_string())?;
    for cid in 0..g.num_classes() {
        let table = d.table(cid);
        table.verify(d.context()).map_err(|e| format!("class {cid}: {e}"))?;
        let sum: usize = table.degrees().iter().map(|&x| (x as usize).pow(2)).sum();
        if sum != g.class_centralizer(cid).len() {
            return Err(format!("class {cid}: degree squares sum to {sum}"));
        }
    }
    Ok(format!("ordinary table and {} projective tables", g.num_classes()))
}

fn invariant_checks(d: &TwistedDouble) -> Result<String, String> {
    let g = d.group();
    let g2 = (g.order() * g.order()) as u64;
    let subcats = enumerate_subcats(d).map_err(|e| e.to_string())?;
    for s in &subcats {
        let t = &s.triple;
        let c = centralizer(t);
        if &centralizer(&c) != t {
            return Err(format!("{t}: centralizer is not an involution"));
        }
        let cd = build_subcat(d, &c).map_err(|e| e.to_string())?.dim;
        if s.dim * cd != g2 {
            return Err(format!("{t}: dim product {}", s.dim * cd));
        }
        let back = triple_of(d, &s.simples).map_err(|e| e.to_string())?;
        if &back != t {
            return Err(format!("{t}: round trip gave {back}"));
        }
        gauss_sum(d, t).map_err(|e| format!("{t}: {e}"))?;
        let z = muger_center(d, t).map_err(|e| e.to_string())?;
        let nondeg = classify(d, t).map_err(|e| e.to_string())?.nondegenerate;
        if nondeg != (build_subcat(d, &z).map_err(|e| e.to_string())?.simples.len() == 1) {
            return Err(format!("{t}: nondegeneracy disagrees with the Müger center"));
        }
    }
    Ok(format!("{} triples", subcats.len()))
}

pub fn verify_all(source: &Source) -> Result<VerifyReport, CliError> {
    let g = load_group(source)?;
    let w = load_cocycle_unchecked(source, &g)?;
    let mut checks = Vec::new();
    checks.push(check(
        "cocycle identities",
        w.check_identities().map(|r| format!("{} instances", r.total())).map_err(|e| e.to_string()),
    ));
    checks.push(check("cocycle condition", w.validate().map(|_| "ok".into()).map_err(|e| e.to_string())));
    let modulus = w.modulus();
    if checks.iter().all(|c| c.passed) {
        match TwistedDouble::new(w) {
            Err(e) => checks.push(check("double construction", Err(e.to_string()))),
            Ok(d) => {
                checks.push(check("character orthogonality", character_checks(&d)));
                checks.push(check(
                    "oracle certify",
                    match certify(&d, source.oracle_cap) {
                        Ok(r) if r.matched => Ok(format!("{} closed sets", r.closed_sets.len())),
                        Ok(r) => Err(r.mismatches.join("; ")),
                        Err(e) => Err(e.to_string()),
                    },
                ));
                checks.push(check("invariant suite", invariant_checks(&d)));
            }
        }
    }
    Ok(VerifyReport {
        group: g.name().to_string(),
        cocycle_modulus: modulus,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Runs a parsed command; `Ok` carries the text for stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Group { action: GroupAction::Info { format } } => group_info(&cli.source, *format),
        Command::Subcats { action: SubcatsAction::List { format } } => subcats_list(&cli.source, *format),
        Command::Lattice { action: LatticeAction::Export { format, out } } => {
            let text = lattice_export(&cli.source, *format)?;
            match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Invariants { triple } => invariants(&cli.source, triple),
        Command::Verify { action: VerifyAction::All } => {
            let report = verify_all(&cli.source)?;
            let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
            if report.passed {
                Ok(text)
            } else {
                print!("{text}");
                let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
                Err(CliError::Verification(failed.join(", ")))
            }
        }
    }
}
