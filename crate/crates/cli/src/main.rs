use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poset_polytopes::geometry::{
    central_symmetry_check, count_dilation, count_interior, ehrhart, facet_count_formulas, facets,
    lattice_points, max_facet_bounds, reflexivity_check, scan_max_facets, verify_facet_system,
};
use poset_polytopes::partitions::{
    count_left_enriched, left_enriched_polynomial, order_polynomial, set_difference_demo,
};
use poset_polytopes::poset::PosetSpec;
use poset_polytopes::reproduce::{criterion_ids, run_criterion};
use poset_polytopes::toric::{
    buchberger_verify, generators, initial_ideal, initial_isomorphism_check, MonomialOrderSpec,
};
use poset_polytopes::{Error, Poset, PolytopeKind, RationalPolynomial, ToricKind};
use serde_json::{json, Value};

const COUNTING_LIMIT: usize = 7;
const SCAN_LIMIT: usize = 5;
const GROEBNER_LIMIT: usize = 4;

/// Lattice points, facets, Ehrhart polynomials and toric Gröbner bases of
/// order, chain, enriched order and enriched chain polytopes.
#[derive(Parser)]
#[command(name = "posetpoly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Poset JSON file: {"n": 3, "covers": [[1,3],[2,3]]}, 1-based labels.
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "inline")]
    poset: Option<PathBuf>,

    /// Poset JSON given directly on the command line.
    #[arg(long, global = true, value_name = "JSON")]
    inline: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Lift the size guards (n <= 7 counting, n <= 5 scans, n <= 4 Gröbner).
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Basic statistics: extremal elements, ideals, chains, facet formulas.
    Info,
    /// Vertices of the polytope.
    Points {
        #[arg(long)]
        kind: PolytopeKind,
    },
    /// Facet inequalities <normal, x> <= rhs.
    Facets {
        #[arg(long)]
        kind: PolytopeKind,
        /// Check the system against the vertex description.
        #[arg(long)]
        verify: bool,
    },
    /// Lattice points of the m-th dilate.
    Count {
        #[arg(long)]
        kind: PolytopeKind,
        #[arg(short = 'm', long = "max-value")]
        m: u32,
        /// Count interior points only.
        #[arg(long)]
        interior: bool,
    },
    /// Ehrhart polynomial by exact interpolation.
    Ehrhart {
        #[arg(long)]
        kind: PolytopeKind,
    },
    /// Order polynomial: order-preserving maps into {0, .., m}.
    OrderPoly,
    /// Left enriched P-partitions with |f| <= m for m = 0 .. max-value.
    LeftEnrichedPoly {
        #[arg(short = 'm', long = "max-value", default_value_t = 2)]
        m: u32,
        /// Emit the interpolated polynomial.
        #[arg(long)]
        poly: bool,
        /// Compare with the lattice points of the m-th enriched order dilate.
        #[arg(long)]
        diff: bool,
    },
    /// Partitions versus dilate lattice points at one value of m.
    DiffSets {
        #[arg(short = 'm', long = "max-value", default_value_t = 2)]
        m: u32,
    },
    /// Quadratic binomial generators of a toric ideal and their checks.
    Groebner {
        #[arg(long)]
        kind: ToricKind,
        /// Reduce every S-pair.
        #[arg(long)]
        verify: bool,
        /// Report the initial ideal and its flags.
        #[arg(long)]
        initial: bool,
        /// Compare the initial ideal with that of the partner family.
        #[arg(long)]
        compare_initial: bool,
        /// Include the generators themselves.
        #[arg(long)]
        list: bool,
    },
    /// Whether an enriched polytope is reflexive.
    Reflexive {
        #[arg(long, default_value = "eorder")]
        kind: PolytopeKind,
    },
    /// Whether the vertex set is centrally symmetric.
    Symmetry {
        #[arg(long, default_value = "eorder")]
        kind: PolytopeKind,
    },
    /// Closed-form upper bounds on enriched facet numbers.
    Bounds {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Maximal enriched facet numbers over all posets on n elements.
    ScanMaxFacets {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Run the full verification suite.
    ReproducePaper {
        /// Restrict to these criteria.
        #[arg(long)]
        criterion: Vec<u32>,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// A report plus whether every verification it contains succeeded.
struct Report {
    value: Value,
    verified: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report { value, verified: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.value).expect("serializable"),
                Format::Text => render_text(&cli.command, &report.value),
            };
            println!("{out}");
            ExitCode::from(if report.verified { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_poset(cli: &Cli) -> Result<Poset, Failure> {
    let text = match (&cli.poset, &cli.inline) {
        (Some(path), _) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        (None, Some(s)) => s.clone(),
        (None, None) => return Err(Failure::Input("a poset is required: use --poset or --inline".into())),
    };
    let spec: PosetSpec =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("malformed poset JSON: {e}")))?;
    Ok(Poset::try_from(spec)?)
}

fn guard(cli: &Cli, n: usize, limit: usize, what: &str) -> Result<(), Failure> {
    if n > limit && !cli.force {
        return Err(Failure::Input(format!(
            "n = {n} exceeds the {what} guard of {limit}; pass --force to override"
        )));
    }
    Ok(())
}

fn polynomial_json(p: &RationalPolynomial) -> Value {
    json!({ "coefficients": p, "display": p.to_string() })
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

/// Relabels along a linear extension when needed and reports the map.
fn naturally_labeled(p: Poset) -> (Poset, Value) {
    let (q, new_label) = p.natural_relabeling();
    let info = if q == p {
        Value::Null
    } else {
        json!({ "original": p, "new_label_of": one_based(&new_label) })
    };
    (q, info)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Bounds { n } => return Ok(Report::ok(json!(max_facet_bounds(*n)?))),
        Command::ScanMaxFacets { n } => {
            guard(cli, *n, SCAN_LIMIT, "scan")?;
            let scan = scan_max_facets(*n)?;
            let verified = scan.matches_bounds;
            return Ok(Report { value: json!(scan), verified });
        }
        Command::ReproducePaper { criterion } => {
            let ids = if criterion.is_empty() { criterion_ids() } else { criterion.clone() };
            let results = ids.iter().map(|&id| run_criterion(id)).collect::<Result<Vec<_>, _>>()?;
            let verified = results.iter().all(|r| r.passed);
            return Ok(Report { value: json!({ "criteria": results, "passed": verified }), verified });
        }
        _ => {}
    }

    let p = load_poset(cli)?;
    let n = p.n();
    let report = match &cli.command {
        Command::Info => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let chains = p.chains();
            Report::ok(json!({
                "poset": p,
                "naturally_labeled": p.is_naturally_labeled(),
                "linear_extension": one_based(&p.linear_extension()),
                "minimal": p.minimal().labels(),
                "maximal": p.maximal().labels(),
                "relations": p.relations().len(),
                "ideals": p.ideals().len(),
                "is_chain": p.is_chain(),
                "is_antichain": p.is_antichain(),
                "contains_x_poset": p.contains_x_poset(),
                "saturated_chains": chains.sc(),
                "maximal_chains": chains.mc(),
                "facet_counts": facet_count_formulas(&p),
            }))
        }
        Command::Points { kind } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let points = lattice_points(&p, *kind);
            Report::ok(json!({ "kind": kind, "count": points.len(), "points": points }))
        }
        Command::Facets { kind, verify } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let hs = facets(&p, *kind);
            let mut value = json!({ "kind": kind, "count": hs.len(), "facets": hs });
            let mut verified = true;
            if *verify {
                let r = verify_facet_system(&p, *kind);
                verified = r.passed();
                value["verification"] = json!(r);
                value["verification"]["passed"] = json!(verified);
            }
            Report { value, verified }
        }
        Command::Count { kind, m, interior } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let count =
                if *interior { count_interior(&p, *kind, *m) } else { count_dilation(&p, *kind, *m) };
            Report::ok(json!({ "kind": kind, "m": m, "interior": interior, "count": count }))
        }
        Command::Ehrhart { kind } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            Report::ok(json!({ "kind": kind, "polynomial": polynomial_json(&ehrhart(&p, *kind)?) }))
        }
        Command::OrderPoly => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            Report::ok(json!({ "polynomial": polynomial_json(&order_polynomial(&p)?) }))
        }
        Command::LeftEnrichedPoly { m, poly, diff } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let (q, relabeling) = naturally_labeled(p);
            let counts = (0..=*m).map(|k| count_left_enriched(&q, k)).collect::<Result<Vec<_>, _>>()?;
            let mut value = json!({ "poset": q, "relabeling": relabeling, "counts": counts });
            let mut verified = true;
            if *poly {
                value["polynomial"] = polynomial_json(&left_enriched_polynomial(&q)?);
            }
            if *diff {
                let d = set_difference_demo(&q, *m)?;
                verified = d.partition_count == d.polytope_count;
                value["difference"] = json!(d);
            }
            Report { value, verified }
        }
        Command::DiffSets { m } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let (q, relabeling) = naturally_labeled(p);
            let d = set_difference_demo(&q, *m)?;
            let verified = d.partition_count == d.polytope_count;
            Report {
                value: json!({ "poset": q, "relabeling": relabeling, "sets_equal": d.sets_equal(), "difference": d }),
                verified,
            }
        }
        Command::Groebner { kind, verify, initial, compare_initial, list } => {
            guard(cli, n, GROEBNER_LIMIT, "Gröbner")?;
            groebner_report(&p, *kind, *verify, *initial, *compare_initial, *list)?
        }
        Command::Reflexive { kind } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let reflexive = reflexivity_check(&p, *kind)?;
            Report { value: json!({ "kind": kind, "reflexive": reflexive }), verified: reflexive }
        }
        Command::Symmetry { kind } => {
            guard(cli, n, COUNTING_LIMIT, "counting")?;
            let symmetric = central_symmetry_check(&lattice_points(&p, *kind));
            let mut value = json!({ "kind": kind, "centrally_symmetric": symmetric });
            let mut verified = true;
            if *kind == PolytopeKind::EnrichedOrder {
                let f = facet_count_formulas(&p);
                let antichain = p.is_antichain();
                value["is_antichain"] = json!(antichain);
                value["f_eorder_equals_f_echain"] = json!(f.f_eorder == f.f_echain);
                verified = symmetric == antichain && antichain == (f.f_eorder == f.f_echain);
            }
            Report { value, verified }
        }
        Command::Bounds { .. } | Command::ScanMaxFacets { .. } | Command::ReproducePaper { .. } => {
            unreachable!("handled before loading a poset")
        }
    };
    Ok(report)
}

fn groebner_report(
    p: &Poset,
    kind: ToricKind,
    verify: bool,
    initial: bool,
    compare_initial: bool,
    list: bool,
) -> Result<Report, Failure> {
    let (verify, initial) = if verify || initial || compare_initial { (verify, initial) } else { (true, true) };
    let family = generators(p, kind);
    let order = MonomialOrderSpec::for_kind(p, &family.vars)?;
    let mut value = json!({
        "kind": kind,
        "variables": family.vars.len(),
        "generator_count": family.len(),
        "order": { "kind": order.kind() },
    });
    if let Some((w_sharp, w_ce)) = order.weights() {
        value["order"]["w_sharp"] = json!(w_sharp);
        value["order"]["w_ce"] = json!(w_ce);
    }
    if list {
        let strings: Vec<String> = family.binomials.iter().map(|b| family.binomial_string(b)).collect();
        value["generators"] = json!(strings);
    }
    let mut verified = true;
    if verify {
        let r = buchberger_verify(&family.binomials, &order);
        verified &= r.passed();
        value["buchberger"] = json!(r);
        value["buchberger"]["passed"] = json!(r.passed());
    }
    if initial {
        let init = initial_ideal(&family, &order);
        verified &= init.flags_hold();
        value["initial_ideal"] = json!(init);
        if list {
            let strings: Vec<String> = init.generators.iter().map(|m| family.vars.monomial_string(m)).collect();
            value["initial_ideal"]["generators"] = json!(strings);
        }
    }
    if compare_initial {
        let iso = initial_isomorphism_check(p, kind)?;
        verified &= iso.isomorphic;
        value["isomorphism"] = json!(iso);
    }
    Ok(Report { value, verified })
}

fn render_text(command: &Command, value: &Value) -> String {
    let mut out = String::new();
    if let Command::ReproducePaper { .. } = command {
        for c in value["criteria"].as_array().into_iter().flatten() {
            let verdict = if c["passed"] == json!(true) { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict}  {:>2}  {:<42} {}",
                c["id"],
                c["name"].as_str().unwrap_or(""),
                c["detail"].as_str().unwrap_or("")
            );
        }
        return out.trim_end().to_string();
    }
    render_value(&mut out, value, 0);
    out.trim_end().to_string()
}

fn render_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if is_scalar_like(v) {
                    let _ = writeln!(out, "{pad}{k}: {}", inline(v));
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_value(out, v, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if is_scalar_like(v) {
                    let _ = writeln!(out, "{pad}- {}", inline(v));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render_value(out, v, indent + 1);
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", inline(value));
        }
    }
}

// Scalars and arrays of scalars print on one line.
fn is_scalar_like(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array() || is_flat_array(i)),
        _ => true,
    }
}

fn is_flat_array(v: &Value) -> bool {
    v.as_array().is_some_and(|a| a.iter().all(|x| !x.is_object() && !x.is_array()))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
