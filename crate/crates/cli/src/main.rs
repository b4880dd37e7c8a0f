//! Command line surface over the representation toolkit.  Every subcommand
//! prints one JSON document on standard output; `--output` additionally
//! writes the same bytes to a file.  Output is deterministic for fixed
//! arguments and seed.  Exit codes: 0 success, 1 failed theorem check with
//! the failing check named on standard error, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use hecke_core::calibration::verify_tau_identities;
use hecke_core::characters::{
    borderstrip_character, restriction_multiplicities, trace_on_gamma,
};
use hecke_core::combinatorics::{
    enumerate_standard_tableaux, ContentsSpec, Partition, PlacedSkewShape, SkewShape,
};
use hecke_core::induction::{glue_shapes, enumerate_connected_ribbons, verify_induction_decomposition};
use hecke_core::natural_basis::{
    snakes, verify_column_relations, verify_garnir_relation, verify_quantum_factorial,
};
use hecke_core::seminormal::{
    build_module, commutant_dimension, verify_defining_relations, RelationCheck, RelationReport,
};
use hecke_core::suite::run_suite;
use hecke_core::{Matrix, RationalFn};

/// Exhaustive enumeration cap.
const MAX_ENUM_BOXES: usize = 7;
/// Symbolic matrix cap.
const MAX_MODULE_BOXES: usize = 6;

#[derive(Parser)]
#[command(name = "hecke", version, about = "Exact calibrated representations on placed skew shapes")]
struct Cli {
    /// Also write the JSON document to this file
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct BareShape {
    /// Outer partition, comma separated (e.g. 3,2,1)
    #[arg(long)]
    lambda: String,
    /// Inner partition, comma separated; omit for a straight shape
    #[arg(long, default_value = "")]
    mu: String,
}

#[derive(Args)]
struct PlacedShape {
    #[command(flatten)]
    bare: BareShape,
    /// Contents in box order as comma separated rationals, or "auto"
    #[arg(long, default_value = "auto")]
    contents: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the standard fillings of a skew shape
    Tableaux(BareShape),
    /// Print the seminormal T and x matrices of a placed module
    Matrices(PlacedShape),
    /// Check the defining and rotation relations on a placed module
    Verify {
        #[command(flatten)]
        shape: PlacedShape,
        /// Check commutation with this many seeded random monomials
        #[arg(long)]
        gamma_samples: Option<usize>,
        /// Seed for the monomial sample
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check that the commutant at this value of q is scalar
        #[arg(long)]
        q0: Option<String>,
    },
    /// Check the intertwiner identities on a placed module
    Tau(PlacedShape),
    /// Check column, shuffle, and factorial relations on a placed module
    Garnir(PlacedShape),
    /// Compare the trace on a block cycle with the border strip sum
    Char {
        #[command(flatten)]
        shape: PlacedShape,
        /// Block sizes, comma separated, summing to the box count
        #[arg(long)]
        beta: String,
    },
    /// Decompose the restriction to the finite subalgebra
    Restrict(PlacedShape),
    /// Glue a second placed shape onto the first and check the decomposition
    Induce {
        #[command(flatten)]
        shape: PlacedShape,
        /// Outer partition of the second shape
        #[arg(long)]
        phi_lambda: String,
        /// Inner partition of the second shape
        #[arg(long, default_value = "")]
        phi_mu: String,
        /// Contents of the second shape, or "auto"
        #[arg(long, default_value = "auto")]
        phi_contents: String,
    },
    /// Enumerate connected ribbons and count their standard fillings
    Ribbons {
        /// Number of boxes
        #[arg(long)]
        n: usize,
    },
    /// Run the full verification battery
    Suite,
}

/// A finished run: the JSON document plus the name of the first failed
/// check, if any.
struct Outcome {
    doc: String,
    failed: Option<String>,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Outcome { doc: render(&doc), failed: None }
    }

    fn checked(doc: Value, failed: Option<String>) -> Self {
        Outcome { doc: render(&doc), failed }
    }
}

fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string(doc).expect("value serializes");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.doc);
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, outcome.doc.as_bytes()) {
                    eprintln!("cannot write {}: {}", path.display(), e);
                    return ExitCode::from(2);
                }
            }
            match outcome.failed {
                None => ExitCode::SUCCESS,
                Some(name) => {
                    eprintln!("failed check: {}", name);
                    ExitCode::from(1)
                }
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.cmd {
        Cmd::Tableaux(shape) => cmd_tableaux(shape),
        Cmd::Matrices(shape) => cmd_matrices(shape),
        Cmd::Verify { shape, gamma_samples, seed, q0 } => {
            cmd_verify(shape, *gamma_samples, *seed, q0.as_deref())
        }
        Cmd::Tau(shape) => cmd_tau(shape),
        Cmd::Garnir(shape) => cmd_garnir(shape),
        Cmd::Char { shape, beta } => cmd_char(shape, beta),
        Cmd::Restrict(shape) => cmd_restrict(shape),
        Cmd::Induce { shape, phi_lambda, phi_mu, phi_contents } => {
            cmd_induce(shape, phi_lambda, phi_mu, phi_contents)
        }
        Cmd::Ribbons { n } => cmd_ribbons(*n),
        Cmd::Suite => cmd_suite(),
    }
}

impl BareShape {
    fn shape(&self) -> Result<SkewShape, String> {
        let lambda = Partition::parse(&self.lambda).map_err(|e| e.to_string())?;
        let mu = Partition::parse(&self.mu).map_err(|e| e.to_string())?;
        SkewShape::new(lambda, mu).map_err(|e| e.to_string())
    }
}

impl PlacedShape {
    fn placed(&self) -> Result<PlacedSkewShape, String> {
        let shape = self.bare.shape()?;
        let spec = parse_contents(&self.contents)?;
        PlacedSkewShape::from_spec(shape, &spec).map_err(|e| e.to_string())
    }

    fn placed_module_scale(&self) -> Result<PlacedSkewShape, String> {
        let p = self.placed()?;
        if p.n_boxes() > MAX_MODULE_BOXES {
            return Err(format!("symbolic matrices are capped at {} boxes", MAX_MODULE_BOXES));
        }
        Ok(p)
    }
}

fn parse_contents(s: &str) -> Result<ContentsSpec, String> {
    if s == "auto" {
        return Ok(ContentsSpec::Auto);
    }
    let vals = s
        .split(',')
        .map(|t| t.trim().parse::<BigRational>().map_err(|e| format!("bad content {:?}: {}", t, e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ContentsSpec::Explicit(vals))
}

fn contents_strings(p: &PlacedSkewShape) -> Vec<Value> {
    p.contents().iter().map(|c| Value::String(c.to_string())).collect()
}

fn matrix_json(m: &Matrix) -> Value {
    let mut rows = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let row: Vec<Value> = (0..m.cols).map(|c| m.get(r, c).to_json()).collect();
        rows.push(Value::Array(row));
    }
    Value::Array(rows)
}

fn report_json(report: &RelationReport) -> Vec<Value> {
    report
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "ok": c.ok}))
        .collect()
}

fn first_failure(report: &RelationReport) -> Option<String> {
    report.failures().first().map(|s| s.to_string())
}

fn cmd_tableaux(args: &BareShape) -> Result<Outcome, String> {
    let shape = args.shape()?;
    if shape.n_boxes() > MAX_ENUM_BOXES {
        return Err(format!("enumeration is capped at {} boxes", MAX_ENUM_BOXES));
    }
    let tabs = enumerate_standard_tableaux(&shape);
    let mut list = Vec::with_capacity(tabs.len());
    for t in &tabs {
        let mut rows = Vec::new();
        for r in 1..=shape.lambda().len() {
            let row: Vec<Value> = (1..=shape.lambda().part(r - 1) as usize)
                .map(|c| {
                    if shape.contains_cell((r, c)) {
                        Value::from(t.value_at((r, c)))
                    } else {
                        Value::Null
                    }
                })
                .collect();
            rows.push(Value::Array(row));
        }
        list.push(Value::Array(rows));
    }
    Ok(Outcome::ok(json!({
        "shape": shape.to_string(),
        "boxes": shape.n_boxes(),
        "count": tabs.len(),
        "tableaux": list,
    })))
}

fn cmd_matrices(args: &PlacedShape) -> Result<Outcome, String> {
    let p = args.placed_module_scale()?;
    let m = build_module(&p);
    let mut t = Map::new();
    for i in 1..m.n() {
        t.insert(i.to_string(), matrix_json(m.t_matrix(i)));
    }
    let mut x = Map::new();
    for i in 1..=m.n() {
        x.insert(i.to_string(), matrix_json(&m.x_matrix(i)));
    }
    Ok(Outcome::ok(json!({
        "shape": p.shape().to_string(),
        "contents": contents_strings(&p),
        "dim": m.dim(),
        "t": Value::Object(t),
        "x": Value::Object(x),
    })))
}

fn cmd_verify(
    args: &PlacedShape,
    gamma_samples: Option<usize>,
    seed: u64,
    q0: Option<&str>,
) -> Result<Outcome, String> {
    let p = args.placed_module_scale()?;
    let m = build_module(&p);
    let sample: Option<Vec<Vec<i64>>> = gamma_samples.map(|k| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..k).map(|_| (0..m.n()).map(|_| rng.gen_range(-2i64..=2)).collect()).collect()
    });
    let mut report = verify_defining_relations(&m, sample.as_deref());
    if let Some(q0) = q0 {
        let q0: BigRational =
            q0.parse().map_err(|e| format!("bad q0 {:?}: {}", q0, e))?;
        let dim = commutant_dimension(&m, &q0).map_err(|e| e.to_string())?;
        report
            .checks
            .push(RelationCheck { name: "commutant is scalar at q0".into(), ok: dim == 1 });
    }
    let failed = first_failure(&report);
    Ok(Outcome::checked(
        json!({"checks": report_json(&report), "all_ok": report.all_ok()}),
        failed,
    ))
}

fn cmd_tau(args: &PlacedShape) -> Result<Outcome, String> {
    let p = args.placed_module_scale()?;
    let report = verify_tau_identities(&build_module(&p));
    let failed = first_failure(&report);
    Ok(Outcome::checked(
        json!({"checks": report_json(&report), "all_ok": report.all_ok()}),
        failed,
    ))
}

fn cmd_garnir(args: &PlacedShape) -> Result<Outcome, String> {
    let p = args.placed_module_scale()?;
    let m = build_module(&p);
    let column = verify_column_relations(&m);
    let mut all = column;
    let mut failed = if column { None } else { Some("column relation".to_string()) };
    let mut snake_list = Vec::new();
    for s in snakes(p.shape()) {
        let shuffle = verify_garnir_relation(&m, &s);
        let factorial = verify_quantum_factorial(&m, &s);
        if !shuffle && failed.is_none() {
            failed = Some(format!("shuffle sum at pivot {:?}", s.pivot));
        }
        if !factorial && failed.is_none() {
            failed = Some(format!("factorial eigenvalue at pivot {:?}", s.pivot));
        }
        all &= shuffle && factorial;
        snake_list.push(json!({
            "pivot": [s.pivot.0, s.pivot.1],
            "shuffle": shuffle,
            "factorial": factorial,
        }));
    }
    Ok(Outcome::checked(
        json!({"column_relation": column, "snakes": snake_list, "all_ok": all}),
        failed,
    ))
}

fn cmd_char(args: &PlacedShape, beta: &str) -> Result<Outcome, String> {
    let p = args.placed_module_scale()?;
    let beta: Vec<usize> = beta
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("bad block size {:?}: {}", t, e)))
        .collect::<Result<_, _>>()?;
    if beta.iter().any(|&b| b == 0) || beta.iter().sum::<usize>() != p.n_boxes() {
        return Err(format!("block sizes must be positive and sum to {}", p.n_boxes()));
    }
    let m = build_module(&p);
    let trace = trace_on_gamma(&m, &beta);
    let strip_sum = borderstrip_character(&p, &beta);
    let ok = trace == RationalFn::from_laurent(strip_sum.clone());
    let failed = (!ok).then(|| "border strip agreement".to_string());
    Ok(Outcome::checked(
        json!({
            "beta": beta,
            "borderstrip": strip_sum.to_json(),
            "trace": trace.to_json(),
            "match": ok,
        }),
        failed,
    ))
}

fn cmd_restrict(args: &PlacedShape) -> Result<Outcome, String> {
    let p = args.placed_module_scale()?;
    let m = build_module(&p);
    match restriction_multiplicities(&m) {
        Ok(mults) => {
            let mut doc = String::from("{");
            for (i, (nu, c)) in mults.iter().rev().enumerate() {
                if i > 0 {
                    doc.push(',');
                }
                doc.push('"');
                doc.push_str(&nu.to_string());
                doc.push_str("\":");
                doc.push_str(&c.to_string());
            }
            doc.push_str("}\n");
            Ok(Outcome { doc, failed: None })
        }
        Err(e) => Ok(Outcome {
            doc: "{}\n".to_string(),
            failed: Some(e.to_string()),
        }),
    }
}

fn cmd_induce(
    args: &PlacedShape,
    phi_lambda: &str,
    phi_mu: &str,
    phi_contents: &str,
) -> Result<Outcome, String> {
    let theta = args.placed()?;
    let phi_shape = SkewShape::new(
        Partition::parse(phi_lambda).map_err(|e| e.to_string())?,
        Partition::parse(phi_mu).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let phi = PlacedSkewShape::from_spec(phi_shape, &parse_contents(phi_contents)?)
        .map_err(|e| e.to_string())?;
    if theta.n_boxes() + phi.n_boxes() > MAX_MODULE_BOXES {
        return Err(format!("glued pairs are capped at {} boxes total", MAX_MODULE_BOXES));
    }
    let pair = glue_shapes(&theta, &phi).map_err(|e| e.to_string())?;
    let report = verify_induction_decomposition(&theta, &phi).map_err(|e| e.to_string())?;
    let failed = first_failure(&report);
    Ok(Outcome::checked(
        json!({
            "vertical": {
                "shape": pair.vertical.shape().to_string(),
                "contents": contents_strings(&pair.vertical),
            },
            "horizontal": {
                "shape": pair.horizontal.shape().to_string(),
                "contents": contents_strings(&pair.horizontal),
            },
            "checks": report_json(&report),
            "all_ok": report.all_ok(),
        }),
        failed,
    ))
}

fn cmd_ribbons(n: usize) -> Result<Outcome, String> {
    if n == 0 || n > MAX_ENUM_BOXES {
        return Err(format!("ribbon enumeration needs 1 <= n <= {}", MAX_ENUM_BOXES));
    }
    let ribbons = enumerate_connected_ribbons(n);
    let mut total = 0usize;
    let mut list = Vec::with_capacity(ribbons.len());
    for r in &ribbons {
        let count = enumerate_standard_tableaux(r).len();
        total += count;
        list.push(json!({"shape": r.to_string(), "tableaux": count}));
    }
    let factorial: usize = (1..=n).product();
    let failed = if ribbons.len() != 1 << (n - 1) {
        Some("ribbon count".to_string())
    } else if total != factorial {
        Some("tableau total".to_string())
    } else {
        None
    };
    Ok(Outcome::checked(
        json!({
            "n": n,
            "count": ribbons.len(),
            "total_tableaux": total,
            "ribbons": list,
        }),
        failed,
    ))
}

fn cmd_suite() -> Result<Outcome, String> {
    let results = run_suite();
    let mut all = true;
    let mut failed = None;
    let mut list = Vec::with_capacity(results.len());
    for r in &results {
        all &= r.passed;
        if !r.passed && failed.is_none() {
            failed = Some(format!("criterion {}", r.name));
        }
        list.push(json!({
            "name": r.name,
            "passed": r.passed,
            "detail": r.detail,
            "millis": r.millis as u64,
        }));
    }
    Ok(Outcome::checked(json!({"criteria": list, "all_passed": all}), failed))
}
