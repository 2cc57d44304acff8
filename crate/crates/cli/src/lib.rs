//! The `loctri` command line.
//!
//! [`run`] parses arguments and writes to the given streams, so tests can
//! drive it without spawning a process. Exit codes: 0 on success, 1 on usage
//! errors, 2 on domain errors (with a JSON error object on stderr).

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use loctri::automorphism::{enumerate_weakly_admissible, parse_generator};
use loctri::classify::{classify, maximal_cy_generator, DEFAULT_D_MAX};
use loctri::dynkin::{DynkinTree, Family};
use loctri::mesh::{
    additivity_failures, hom_knit, hom_oracle, l_function, orbit_hom, orbit_hom_batch, total_hom, DimensionFunction,
};
use loctri::ppa::{build_algebra, invariant_report, DoubleQuiver, NCPolynomial, DEFAULT_CHARACTERISTIC};
use loctri::zquiver::{identify_type, orbit_quotient, parse_vertex, OrbitQuiver, ValuedArrow};
use loctri::{Error, SlicedAutomorphism, ZVertex};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "loctri",
    version,
    about = "Combinatorics of locally finite triangulated categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a Dynkin tree.
    Dynkin {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Automorphisms of Z Delta.
    #[command(subcommand)]
    Auto(AutoCommand),
    /// The orbit quiver Z Delta / <g>, or identification of a given quiver.
    Orbit(OrbitArgs),
    /// Hom dimensions in the mesh category.
    #[command(subcommand)]
    Mesh(MeshCommand),
    /// Standardness criteria and Calabi-Yau dimension.
    Classify(ClassifyArgs),
    /// Deformed preprojective algebras.
    #[command(subcommand)]
    Ppa(PpaCommand),
}

#[derive(Args, Debug, Clone)]
struct TreeArgs {
    /// A, D, E or L.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug, Clone)]
struct GenArgs {
    #[command(flatten)]
    tree: TreeArgs,
    /// Generator, e.g. `tau^2`, `phi*tau^3`, `rho`, `phi(123)*tau`.
    #[arg(long)]
    gen: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Tsv,
    Text,
}

#[derive(Subcommand, Debug)]
enum AutoCommand {
    /// Action, period and admissibility of a generator.
    Show {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generators of the weakly admissible groups up to an exponent.
    List {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long, default_value_t = 3)]
        max_exponent: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Whether two generators give conjugate groups.
    Conj {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        other: String,
    },
}

#[derive(Args, Debug)]
struct OrbitArgs {
    #[arg(long, requires = "rank", requires = "gen", conflicts_with = "input")]
    family: Option<Family>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    gen: Option<String>,
    /// JSON quiver `{vertices, arrows: [{src, dst, val}], tau: [[v, tau v]]}` to identify.
    #[arg(long, required_unless_present = "family")]
    input: Option<std::path::PathBuf>,
    /// Identify the quotient as `(Delta, g)` instead of printing it.
    #[arg(long)]
    identify: bool,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum MeshCommand {
    /// `dim Hom(x, -)` by knitting.
    Hom {
        #[command(flatten)]
        tree: TreeArgs,
        /// Source vertex `p,q` (q is a tree label).
        #[arg(long)]
        from: String,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// `dim Hom(x, y)` from the path-space oracle.
    Oracle {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// `dim Hom(x, y)` in the orbit category.
    Orbit {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Orbit-category queries from a file, one `p,q<TAB>p,q` per line.
    Batch {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        queries: std::path::PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Total Hom matrix, the function `l` and its additivity defects.
    Total {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    tree: TreeArgs,
    #[arg(long, required_unless_present = "max_cy", conflicts_with = "max_cy")]
    gen: Option<String>,
    /// Classify the maximal `d`-Calabi-Yau generator `tau^-1 S^(d-1)` instead.
    #[arg(long)]
    max_cy: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_D_MAX)]
    d_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum PpaCommand {
    /// Build `P^f(Delta)` and report its invariants (`--format tsv` dumps the basis).
    Build {
        #[command(flatten)]
        tree: TreeArgs,
        #[arg(long = "char", default_value_t = DEFAULT_CHARACTERISTIC)]
        characteristic: u64,
        /// Deformation in `x`, `y`, e.g. `1*x*y + 1*y*x`.
        #[arg(long = "f", default_value = "0")]
        f: String,
        #[arg(long)]
        degree_cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The double quiver `Q_Delta`.
    Quiver {
        #[command(flatten)]
        tree: TreeArgs,
    },
}

/// A failure with a machine-readable code.
#[derive(Debug)]
struct Failure {
    code: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code().to_string(),
            message: e.to_string(),
        }
    }
}

macro_rules! impl_failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::from(Error::from(e))
            }
        }
    )*};
}

impl_failure_from!(
    loctri::DynkinError,
    loctri::AutError,
    loctri::QuiverError,
    loctri::mesh::MeshError,
    loctri::classify::ClassifyError,
    loctri::ppa::PpaError
);

fn input_error(message: String) -> Failure {
    Failure {
        code: "InvalidInput".into(),
        message,
    }
}

fn unsupported_format(format: Format) -> Failure {
    Failure {
        code: "UnsupportedFormat".into(),
        message: format!("format {format:?} is not available for this command"),
    }
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    schema_version: &'a str,
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: &'a str,
}

type Out<'a> = &'a mut dyn Write;

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn tree_of(t: &TreeArgs) -> Result<Arc<DynkinTree>, Failure> {
    Ok(Arc::new(DynkinTree::build(t.family, t.rank)?))
}

fn generator(g: &GenArgs) -> Result<SlicedAutomorphism, Failure> {
    Ok(parse_generator(tree_of(&g.tree)?, &g.gen)?)
}

fn vertex(tree: &DynkinTree, s: &str) -> Result<ZVertex, Failure> {
    Ok(parse_vertex(tree, s)?)
}

/// Run the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let body = ErrorJson {
                schema_version: SCHEMA_VERSION,
                error: ErrorBody {
                    code: &f.code,
                    message: &f.message,
                },
            };
            let _ = err.write_all(json(&body).as_bytes());
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Dynkin { tree, format } => dynkin_cmd(&tree, format),
        Command::Auto(a) => auto_cmd(a),
        Command::Orbit(o) => orbit_cmd(o),
        Command::Mesh(m) => mesh_cmd(m),
        Command::Classify(c) => classify_cmd(c),
        Command::Ppa(p) => ppa_cmd(p),
    }
}

#[derive(Serialize)]
struct DynkinJson {
    schema_version: &'static str,
    name: String,
    #[serde(flatten)]
    tree: loctri::dynkin::TreeJson,
    coxeter_number: Option<usize>,
    positive_roots: Option<usize>,
    cartan_matrix: Vec<Vec<i64>>,
}

fn dynkin_cmd(t: &TreeArgs, format: Format) -> Result<String, Failure> {
    let tree = tree_of(t)?;
    let h = tree.coxeter_number().ok();
    let roots = tree.positive_root_count().ok();
    match format {
        Format::Json => Ok(json(&DynkinJson {
            schema_version: SCHEMA_VERSION,
            name: tree.name(),
            tree: tree.to_json(),
            coxeter_number: h,
            positive_roots: roots,
            cartan_matrix: tree.cartan_matrix(),
        })),
        Format::Dot => Ok(tree.to_dot()),
        Format::Text => {
            let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            let arrows: Vec<String> = tree
                .arrows()
                .iter()
                .map(|&(s, t)| format!("{}->{}", tree.label(s), tree.label(t)))
                .collect();
            Ok(format!(
                "{}\ncoxeter number: {}\npositive roots: {}\narrows: {}\n",
                tree.name(),
                opt(h),
                opt(roots),
                arrows.join(" ")
            ))
        }
        Format::Tsv => Err(unsupported_format(format)),
    }
}

#[derive(Serialize)]
struct AutoJson {
    schema_version: &'static str,
    generator: String,
    #[serde(flatten)]
    action: loctri::automorphism::AutomorphismJson,
    /// `(N, s)` with `g^N = tau^-s`.
    period: (usize, i64),
    weakly_admissible: bool,
    admissible: bool,
}

#[derive(Serialize)]
struct GeneratorListJson {
    schema_version: &'static str,
    tree: String,
    generators: Vec<GeneratorEntry>,
}

#[derive(Serialize)]
struct GeneratorEntry {
    name: String,
    exponent: u32,
}

fn auto_cmd(cmd: AutoCommand) -> Result<String, Failure> {
    match cmd {
        AutoCommand::Show { gen, format } => {
            let g = generator(&gen)?;
            let report = AutoJson {
                schema_version: SCHEMA_VERSION,
                generator: gen.gen.clone(),
                action: g.to_json(),
                period: g.period(),
                weakly_admissible: g.is_weakly_admissible()?,
                admissible: g.is_admissible()?,
            };
            match format {
                Format::Json => Ok(json(&report)),
                Format::Text => {
                    let mut s = format!("{} on {}\n", report.generator, report.action.tree);
                    for [q, shift, image] in &report.action.action {
                        s.push_str(&format!("(p,{q}) -> (p{shift:+},{image})\n"));
                    }
                    s.push_str(&format!(
                        "period: g^{} = tau^{}\nweakly admissible: {}\nadmissible: {}\n",
                        report.period.0, -report.period.1, report.weakly_admissible, report.admissible
                    ));
                    Ok(s)
                }
                _ => Err(unsupported_format(format)),
            }
        }
        AutoCommand::List {
            tree,
            max_exponent,
            format,
        } => {
            let t = tree_of(&tree)?;
            let list = enumerate_weakly_admissible(t.clone(), max_exponent)?;
            match format {
                Format::Json => Ok(json(&GeneratorListJson {
                    schema_version: SCHEMA_VERSION,
                    tree: t.name(),
                    generators: list
                        .into_iter()
                        .map(|g| GeneratorEntry {
                            name: g.name,
                            exponent: g.exponent,
                        })
                        .collect(),
                })),
                Format::Text => Ok(list.into_iter().map(|g| g.name + "\n").collect()),
                _ => Err(unsupported_format(format)),
            }
        }
        AutoCommand::Conj { gen, other } => {
            let g = generator(&gen)?;
            let h = parse_generator(g.tree().clone(), &other)?;
            Ok(format!("{}\n", g.conjugacy_equal(&h)?))
        }
    }
}

#[derive(Deserialize)]
struct QuiverInput {
    vertices: Vec<String>,
    arrows: Vec<ArrowInput>,
    tau: Vec<[String; 2]>,
}

#[derive(Deserialize)]
struct ArrowInput {
    src: String,
    dst: String,
    #[serde(default = "one")]
    val: u32,
}

fn one() -> u32 {
    1
}

fn read_quiver(path: &std::path::Path) -> Result<OrbitQuiver, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let q: QuiverInput = serde_json::from_str(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let idx = |name: &str| {
        q.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| input_error(format!("unknown vertex `{name}`")))
    };
    let arrows = q
        .arrows
        .iter()
        .map(|a| {
            Ok(ValuedArrow {
                src: idx(&a.src)?,
                dst: idx(&a.dst)?,
                val: a.val,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let mut tau = vec![usize::MAX; q.vertices.len()];
    for [v, t] in &q.tau {
        tau[idx(v)?] = idx(t)?;
    }
    if tau.contains(&usize::MAX) {
        return Err(input_error("tau must be given on every vertex".into()));
    }
    Ok(OrbitQuiver::new(q.vertices.clone(), arrows, tau))
}

#[derive(Serialize)]
struct IdentifiedJson {
    schema_version: &'static str,
    tree: String,
    generator: String,
    exponent: u32,
    /// Input vertex label and the matching orbit representative.
    isomorphism: Vec<[String; 2]>,
}

fn orbit_cmd(o: OrbitArgs) -> Result<String, Failure> {
    let q = match (&o.input, o.family, o.rank, &o.gen) {
        (Some(path), ..) => read_quiver(path)?,
        (None, Some(family), Some(rank), Some(gen)) => {
            let g = generator(&GenArgs {
                tree: TreeArgs { family, rank },
                gen: gen.clone(),
            })?;
            orbit_quotient(&g)?
        }
        _ => {
            return Err(input_error(
                "either --input or --family/--rank/--gen is required".into(),
            ))
        }
    };
    if o.identify || o.input.is_some() {
        let id = identify_type(&q)?;
        let target = orbit_quotient(&id.generator.aut)?;
        let report = IdentifiedJson {
            schema_version: SCHEMA_VERSION,
            tree: id.tree.name(),
            generator: id.generator.name.clone(),
            exponent: id.generator.exponent,
            isomorphism: id
                .isomorphism
                .iter()
                .enumerate()
                .map(|(v, &w)| [q.labels()[v].clone(), target.labels()[w].clone()])
                .collect(),
        };
        return match o.format {
            Format::Json | Format::Dot => Ok(json(&report)),
            Format::Text => Ok(format!("{} / <{}>\n", report.tree, report.generator)),
            Format::Tsv => Err(unsupported_format(o.format)),
        };
    }
    match o.format {
        Format::Dot => Ok(q.to_dot()),
        Format::Json => Ok(json(&q.to_json())),
        Format::Text => {
            let mut s = format!("{} vertices\n", q.vertex_count());
            for a in q.arrows() {
                s.push_str(&format!("{} -> {} ({})\n", q.labels()[a.src], q.labels()[a.dst], a.val));
            }
            Ok(s)
        }
        Format::Tsv => Err(unsupported_format(o.format)),
    }
}

#[derive(Serialize)]
struct HomJson {
    schema_version: &'static str,
    tree: String,
    from: String,
    values: Vec<(i64, usize, u64)>,
}

fn dimension_output(tree: &DynkinTree, d: &DimensionFunction, format: Format) -> Result<String, Failure> {
    match format {
        Format::Tsv => Ok(d.to_tsv(tree)),
        Format::Dot => Ok(d.to_dot(tree)),
        Format::Json => Ok(json(&HomJson {
            schema_version: SCHEMA_VERSION,
            tree: tree.name(),
            from: d.base().display(tree),
            values: d.iter().map(|(v, x)| (v.p, tree.label(v.q), x)).collect(),
        })),
        Format::Text => Ok(d
            .iter()
            .map(|(v, x)| format!("Hom({}, {}) = {x}\n", d.base().display(tree), v.display(tree)))
            .collect()),
    }
}

#[derive(Serialize)]
struct TotalJson {
    schema_version: &'static str,
    tree: String,
    generator: String,
    vertices: Vec<String>,
    hom: Vec<Vec<u64>>,
    l: Vec<u64>,
    additivity_failures: Vec<String>,
}

fn mesh_cmd(cmd: MeshCommand) -> Result<String, Failure> {
    match cmd {
        MeshCommand::Hom { tree, from, format } => {
            let t = tree_of(&tree)?;
            let x = vertex(&t, &from)?;
            dimension_output(&t, &hom_knit(&t, x)?, format)
        }
        MeshCommand::Oracle { tree, from, to } => {
            let t = tree_of(&tree)?;
            let (x, y) = (vertex(&t, &from)?, vertex(&t, &to)?);
            Ok(format!("{}\n", hom_oracle(&t, x, y)?))
        }
        MeshCommand::Orbit { gen, from, to } => {
            let g = generator(&gen)?;
            let (x, y) = (vertex(g.tree(), &from)?, vertex(g.tree(), &to)?);
            Ok(format!("{}\n", orbit_hom(&g, x, y)?))
        }
        MeshCommand::Batch { gen, queries, jobs } => {
            let g = generator(&gen)?;
            let text =
                std::fs::read_to_string(&queries).map_err(|e| input_error(format!("{}: {e}", queries.display())))?;
            let mut pairs = Vec::new();
            let mut raw = Vec::new();
            for line in text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
            {
                let (a, b) = line
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| input_error(format!("expected two vertices in `{line}`")))?;
                pairs.push((vertex(g.tree(), a.trim())?, vertex(g.tree(), b.trim())?));
                raw.push((a.trim().to_string(), b.trim().to_string()));
            }
            let mut s = String::from("from\tto\tdim\n");
            for ((a, b), r) in raw.iter().zip(orbit_hom_batch(&g, &pairs, jobs)) {
                s.push_str(&format!("{a}\t{b}\t{}\n", r?));
            }
            Ok(s)
        }
        MeshCommand::Total { gen, format } => {
            let g = generator(&gen)?;
            let (q, m) = total_hom(&g)?;
            let (_, l) = l_function(&g)?;
            let fails = additivity_failures(&q, &l);
            let report = TotalJson {
                schema_version: SCHEMA_VERSION,
                tree: g.tree().name(),
                generator: gen.gen.clone(),
                vertices: q.labels().to_vec(),
                hom: m,
                l,
                additivity_failures: fails.iter().map(|&z| q.labels()[z].clone()).collect(),
            };
            match format {
                Format::Json => Ok(json(&report)),
                Format::Tsv => {
                    let mut s = String::from("from\tto\tdim\n");
                    for (i, row) in report.hom.iter().enumerate() {
                        for (j, d) in row.iter().enumerate() {
                            s.push_str(&format!("{}\t{}\t{d}\n", report.vertices[i], report.vertices[j]));
                        }
                    }
                    Ok(s)
                }
                _ => Err(unsupported_format(format)),
            }
        }
    }
}

fn classify_cmd(c: ClassifyArgs) -> Result<String, Failure> {
    let t = tree_of(&c.tree)?;
    let g = match (&c.gen, c.max_cy) {
        (Some(s), _) => parse_generator(t, s)?,
        (None, Some(d)) => maximal_cy_generator(t, d)?,
        (None, None) => return Err(input_error("--gen or --max-cy is required".into())),
    };
    let report = classify(&g, c.d_max)?;
    match c.format {
        Format::Json => Ok(json(&report)),
        Format::Text => Ok(format!(
            "{} / <{}>\nby_table: {}\nby_hom_condition: {}\nby_vertex_count: {}\ncy_dimension: {}\nvertex_count: {}\nroot_count: {}\n",
            report.tree,
            report.generator,
            report.by_table,
            report.by_hom_condition,
            report.by_vertex_count,
            report.cy_dimension.map_or("none".into(), |d| d.to_string()),
            report.vertex_count,
            report.root_count
        )),
        _ => Err(unsupported_format(c.format)),
    }
}

fn ppa_cmd(cmd: PpaCommand) -> Result<String, Failure> {
    match cmd {
        PpaCommand::Build {
            tree,
            characteristic,
            f,
            degree_cap,
            format,
        } => {
            let t = tree_of(&tree)?;
            let f = NCPolynomial::parse(&f)?;
            match format {
                Format::Json => Ok(json(&invariant_report(&t, &f, characteristic, degree_cap)?)),
                Format::Tsv => Ok(build_algebra(&t, &f, characteristic, degree_cap)?.basis_tsv()),
                Format::Text => {
                    let r = invariant_report(&t, &f, characteristic, degree_cap)?;
                    let nu = r.nakayama.as_ref().map_or("undefined".into(), |v| format!("{v:?}"));
                    Ok(format!(
                        "P^f({}) over GF({}), f = {} (reduced {})\ndim: {}\nloewy length: {}\ncartan: {:?}\nnakayama: {}\nsocle dims: {:?}\ncenter dim: {}\n",
                        r.tree, r.characteristic, r.f, r.reduced_f, r.dim, r.loewy_length, r.cartan, nu, r.socle_dims, r.center_dim
                    ))
                }
                Format::Dot => Err(unsupported_format(format)),
            }
        }
        PpaCommand::Quiver { tree } => {
            let t = tree_of(&tree)?;
            #[derive(Serialize)]
            struct QuiverJson {
                schema_version: &'static str,
                #[serde(flatten)]
                quiver: loctri::ppa::DoubleQuiverJson,
                exceptional: usize,
            }
            let dq = DoubleQuiver::build(&t);
            Ok(json(&QuiverJson {
                schema_version: SCHEMA_VERSION,
                quiver: dq.to_json(),
                exceptional: dq.exceptional,
            }))
        }
    }
}

/// Convenience for the binary: run on the process arguments with stdio.
pub fn main_with_stdio() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    run(std::env::args_os(), &mut out, &mut err)
}
