//! Command-line frontend for the toppling-game library.
//!
//! Every subcommand prints a human-readable report by default and a
//! machine-readable JSON document with `--json`. All numeric values in
//! JSON output are exact decimal strings, never floats.
//!
//! Exit codes: 0 success, 2 command-line parse error (from the argument
//! parser), 3 invalid input values, 4 enumeration budget exceeded.

mod paper_examples;

use clap::{Parser, Subcommand};
use serde_json::json;

use toppling_core::algebra::format_rat;
use toppling_core::decomp::{
    self, enumerate_decompositions, enumerate_square_free, reduced_interval_decomposition,
};
use toppling_core::graph::GraphError;
use toppling_core::hl::{hall_littlewood_r, expand_schur_expansion, kostka_oracle, kostka_via_toppling};
use toppling_core::ortho::{verify_orthogonality, MomentSequence, OrthoError};
use toppling_core::tableaux::{
    minimal_yamanouchi_count, minimal_yamanouchi_sequences, MinimalSequencesError,
    TableauxError,
};
use toppling_core::{
    enumeration_cap, solve_dominance, subset_budget, Configuration, DominanceFailure,
    DominantElement, Graph, Partition,
};

#[derive(Parser)]
#[command(name = "toppling", version, about = "Exact toppling-game calculator")]
struct Cli {
    /// Emit machine-readable JSON (numbers rendered as exact strings)
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a toppling word (or exponent vector) to a configuration
    Topple {
        /// Graph: path:n, complete:n, cycle:n or edges:n:1-2,2-3,...
        #[arg(long)]
        graph: String,
        /// Starting configuration, comma-separated integers
        #[arg(long, allow_hyphen_values = true)]
        config: String,
        /// Toppling word: digits (1112) or comma-separated vertices
        #[arg(long, conflicts_with = "exponents", allow_hyphen_values = true)]
        word: Option<String>,
        /// Exponent vector a_1,...,a_n: apply T_i a_i times
        #[arg(long, allow_hyphen_values = true)]
        exponents: Option<String>,
    },
    /// Solve beta = T^lambda(alpha) for the unique dominant lambda
    Dominate {
        #[arg(long)]
        graph: String,
        /// Starting configuration alpha
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Target configuration beta
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// List all minimal-length toppling sequences between configurations
    Sequences {
        #[arg(long)]
        graph: String,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Only report the count (hook-length formula; never enumerates)
        #[arg(long)]
        count_only: bool,
    },
    /// Enumerate interval decompositions of T^lambda with statistics
    Decomps {
        /// Partition lambda, comma-separated parts (e.g. 4,3,1)
        #[arg(long)]
        lambda: String,
        /// Number of vertices (default: one more than the number of parts)
        #[arg(long)]
        n: Option<usize>,
        /// Restrict to square-free decompositions
        #[arg(long)]
        square_free: bool,
        /// Also print the coefficient polynomials C, C' and the signed
        /// square-free t-polynomial
        #[arg(long)]
        polys: bool,
    },
    /// Truncated series: all (lambda, beta, coefficient) with |lambda| <= max-l1
    Series {
        #[arg(long)]
        graph: String,
        /// Base configuration alpha
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        max_l1: u64,
    },
    /// Schur expansion of the Hall-Littlewood polynomial R_alpha
    Hl {
        /// Composition alpha, comma-separated parts (empty string allowed)
        #[arg(long, default_value = "")]
        alpha: String,
        /// Number of variables
        #[arg(long)]
        n: usize,
        /// Also print the full monomial expansion in x_1..x_n
        #[arg(long)]
        expanded: bool,
    },
    /// Kostka number, computed by toppling-game counting and by tableau
    /// enumeration
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Number of vertices (default: the larger number of parts)
        #[arg(long)]
        n: Option<usize>,
    },
    /// Orthogonal polynomials from a moment sequence
    Ortho {
        /// Moments: hermite, legendre, charlier:r, or explicit:a0,a1,...
        #[arg(long)]
        moments: String,
        /// Highest polynomial degree to compute
        #[arg(long)]
        degree: usize,
        /// Check pairwise orthogonality and the norm factorization
        #[arg(long)]
        verify: bool,
    },
    /// Replay the embedded worked examples against expected values
    PaperExamples,
}

/// Errors mapped to distinct process exit codes.
enum CliError {
    /// Invalid input values (exit code 3).
    Input(String),
    /// Enumeration budget exceeded (exit code 4).
    Budget(String),
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<toppling_core::group::DominanceError> for CliError {
    fn from(e: toppling_core::group::DominanceError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<decomp::DecompError> for CliError {
    fn from(e: decomp::DecompError) -> Self {
        match e {
            decomp::DecompError::CapExceeded(_) => CliError::Budget(e.to_string()),
            decomp::DecompError::Graph(g) => g.into(),
        }
    }
}

impl From<TableauxError> for CliError {
    fn from(e: TableauxError) -> Self {
        match e {
            TableauxError::CapExceeded(_) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<MinimalSequencesError> for CliError {
    fn from(e: MinimalSequencesError) -> Self {
        match e {
            MinimalSequencesError::Dominance(d) => d.into(),
            MinimalSequencesError::Tableaux(t) => t.into(),
        }
    }
}

impl From<toppling_core::hl::HlError> for CliError {
    fn from(e: toppling_core::hl::HlError) -> Self {
        use toppling_core::hl::HlError;
        match e {
            HlError::FactorialBudget(..) => CliError::Budget(e.to_string()),
            HlError::Decomp(d) => d.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<OrthoError> for CliError {
    fn from(e: OrthoError) -> Self {
        match e {
            OrthoError::SubsetBudget(..) => CliError::Budget(e.to_string()),
            OrthoError::MissingMoment { .. } => CliError::Input(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        let (kind, msg, code) = match e {
            CliError::Input(m) => ("input", m, 3),
            CliError::Budget(m) => ("budget", m, 4),
        };
        if cli.json {
            eprintln!("{}", json!({ "error": { "kind": kind, "message": msg } }));
        } else {
            eprintln!("error ({kind}): {msg}");
        }
        std::process::exit(code);
    }
}

fn parse_graph(s: &str) -> Result<Graph, CliError> {
    if let Some(rest) = s.strip_prefix("edges:") {
        let mut it = rest.splitn(2, ':');
        let n: usize = it
            .next()
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| CliError::Input(format!("bad edge-list graph `{s}`")))?;
        let edge_str = it
            .next()
            .ok_or_else(|| CliError::Input(format!("bad edge-list graph `{s}`")))?;
        let mut edges = Vec::new();
        for part in edge_str.split(',') {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| CliError::Input(format!("bad edge `{part}`")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad edge `{part}`")))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| CliError::Input(format!("bad edge `{part}`")))?;
            edges.push((a, b));
        }
        return Ok(Graph::from_edges(n, &edges)?);
    }
    Ok(Graph::from_shorthand(s)?)
}

fn parse_config(s: &str) -> Result<Configuration, CliError> {
    Configuration::parse(s).ok_or_else(|| CliError::Input(format!("bad configuration `{s}`")))
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::parse(s).ok_or_else(|| CliError::Input(format!("bad partition `{s}`")))
}

fn parse_word(s: &str) -> Result<Vec<usize>, CliError> {
    let letters: Option<Vec<usize>> = if s.contains(',') {
        s.split(',').map(|p| p.trim().parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
    };
    let letters = letters.ok_or_else(|| CliError::Input(format!("bad word `{s}`")))?;
    if letters.contains(&0) {
        return Err(CliError::Input("vertex labels start at 1".into()));
    }
    Ok(letters)
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| CliError::Input(format!("bad integer list `{s}`"))))
        .collect()
}

fn dominant_from(parts_str: &str, n: Option<usize>) -> Result<DominantElement, CliError> {
    let p = parse_partition(parts_str)?;
    let n = n.unwrap_or(p.num_parts() + 1);
    DominantElement::from_parts(p.parts(), n).ok_or_else(|| {
        CliError::Input(format!(
            "partition {p} does not fit: need at most {} parts for n = {n}",
            n - 1
        ))
    })
}

/// Configuration as a JSON array of exact strings.
fn config_json(c: &Configuration) -> serde_json::Value {
    json!(c.weights().iter().map(|w| w.to_string()).collect::<Vec<_>>())
}

/// Dominant exponent vector as a JSON array of exact strings.
fn lambda_json(l: &DominantElement) -> serde_json::Value {
    json!(l.lambda().iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Topple {
            graph,
            config,
            word,
            exponents,
        } => cmd_topple(cli.json, graph, config, word.as_deref(), exponents.as_deref()),
        Command::Dominate { graph, from, to } => cmd_dominate(cli.json, graph, from, to),
        Command::Sequences {
            graph,
            from,
            to,
            count_only,
        } => cmd_sequences(cli.json, graph, from, to, *count_only),
        Command::Decomps {
            lambda,
            n,
            square_free,
            polys,
        } => cmd_decomps(cli.json, lambda, *n, *square_free, *polys),
        Command::Series {
            graph,
            alpha,
            max_l1,
        } => cmd_series(cli.json, graph, alpha, *max_l1),
        Command::Hl { alpha, n, expanded } => cmd_hl(cli.json, alpha, *n, *expanded),
        Command::Kostka { lambda, mu, n } => cmd_kostka(cli.json, lambda, mu, *n),
        Command::Ortho {
            moments,
            degree,
            verify,
        } => cmd_ortho(cli.json, moments, *degree, *verify),
        Command::PaperExamples => paper_examples::run(cli.json),
    }
}

fn cmd_topple(
    as_json: bool,
    graph: &str,
    config: &str,
    word: Option<&str>,
    exponents: Option<&str>,
) -> Result<(), CliError> {
    let g = parse_graph(graph)?;
    let c = parse_config(config)?;
    let result = match (word, exponents) {
        (Some(w), None) => g.apply_word(&c, &parse_word(w)?)?,
        (None, Some(e)) => g.apply_exponents(&c, &parse_i64_list(e)?)?,
        _ => {
            return Err(CliError::Input(
                "exactly one of --word or --exponents is required".into(),
            ))
        }
    };
    if as_json {
        println!(
            "{}",
            json!({
                "graph": graph,
                "config": config_json(&c),
                "result": config_json(&result),
            })
        );
    } else {
        println!("result: {result}");
    }
    Ok(())
}

fn cmd_dominate(as_json: bool, graph: &str, from: &str, to: &str) -> Result<(), CliError> {
    let g = parse_graph(graph)?;
    let alpha = parse_config(from)?;
    let beta = parse_config(to)?;
    match solve_dominance(&g, &alpha, &beta)? {
        Ok(lambda) => {
            if as_json {
                println!(
                    "{}",
                    json!({ "status": "dominated", "lambda": lambda_json(&lambda) })
                );
            } else {
                let parts: Vec<String> = lambda.lambda().iter().map(|x| x.to_string()).collect();
                println!("dominated: lambda = [{}]", parts.join(","));
            }
        }
        Err(f) => {
            let (status, detail) = match f {
                DominanceFailure::SizeMismatch { from_size, to_size } => (
                    "size-mismatch",
                    format!("total weight differs: {from_size} vs {to_size}"),
                ),
                DominanceFailure::NotEquivalent => (
                    "not-equivalent",
                    "no toppling sequence connects the configurations".to_string(),
                ),
                DominanceFailure::NotDominated { exponents } => (
                    "not-dominated",
                    format!(
                        "reachable with exponents [{}], which are not weakly decreasing",
                        exponents
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                ),
            };
            if as_json {
                println!("{}", json!({ "status": status, "detail": detail }));
            } else {
                println!("{status}: {detail}");
            }
        }
    }
    Ok(())
}

fn cmd_sequences(
    as_json: bool,
    graph: &str,
    from: &str,
    to: &str,
    count_only: bool,
) -> Result<(), CliError> {
    let g = parse_graph(graph)?;
    let alpha = parse_config(from)?;
    let beta = parse_config(to)?;
    let count = minimal_yamanouchi_count(&g, &alpha, &beta)?;
    if count_only {
        if as_json {
            println!("{}", json!({ "count": count.to_string() }));
        } else {
            println!("count: {count}");
        }
        return Ok(());
    }
    let words = minimal_yamanouchi_sequences(&g, &alpha, &beta, enumeration_cap())?;
    let rendered: Vec<String> = words.iter().map(|w| w.display_string()).collect();
    if as_json {
        println!(
            "{}",
            json!({ "count": count.to_string(), "sequences": rendered })
        );
    } else {
        println!("count: {count}");
        for w in &rendered {
            println!("{w}");
        }
    }
    Ok(())
}

fn cmd_decomps(
    as_json: bool,
    lambda: &str,
    n: Option<usize>,
    square_free: bool,
    polys: bool,
) -> Result<(), CliError> {
    let lam = dominant_from(lambda, n)?;
    let cap = enumeration_cap();
    let reduced = reduced_interval_decomposition(&lam);
    let total = decomp::count_decompositions(&lam);
    let list = if square_free {
        enumerate_square_free(&lam, cap)?
    } else {
        enumerate_decompositions(&lam, cap)?
    };
    let entries: Vec<serde_json::Value> = list
        .iter()
        .map(|d| {
            let s = decomp::stats(d);
            json!({
                "decomposition": d.display_string(),
                "l1": s.l1.to_string(),
                "l2": s.l2.to_string(),
                "l3": s.l3.to_string(),
                "d": s.d.to_string(),
                "square_free": d.is_square_free(),
            })
        })
        .collect();
    let mut doc = json!({
        "lambda": lambda_json(&lam),
        "reduced": reduced.display_string(),
        "total_count": total.to_string(),
        "listed": entries,
    });
    if polys {
        doc["c_poly"] = json!(decomp::c_polynomial(&lam, cap)?.to_string());
        doc["c_prime_poly"] = json!(decomp::c_prime_polynomial(&lam, cap)?.to_string());
        doc["square_free_t_poly"] = json!(decomp::square_free_signed_t_poly(&lam, cap)?.to_string());
    }
    if as_json {
        println!("{doc}");
        return Ok(());
    }
    println!("reduced: {}", reduced.display_string());
    println!("total decompositions: {total}");
    println!(
        "{} listed{}:",
        list.len(),
        if square_free { " (square-free only)" } else { "" }
    );
    for d in &list {
        let s = decomp::stats(d);
        println!(
            "  {}  (l1={}, l2={}, l3={}, d={})",
            d.display_string(),
            s.l1,
            s.l2,
            s.l3,
            s.d
        );
    }
    if polys {
        println!("C  = {}", decomp::c_polynomial(&lam, cap)?);
        println!("C' = {}", decomp::c_prime_polynomial(&lam, cap)?);
        println!("square-free signed t-poly = {}", decomp::square_free_signed_t_poly(&lam, cap)?);
    }
    Ok(())
}

fn cmd_series(as_json: bool, graph: &str, alpha: &str, max_l1: u64) -> Result<(), CliError> {
    let g = parse_graph(graph)?;
    let a = parse_config(alpha)?;
    let entries = decomp::hat_h_truncated(&g, &a, max_l1, enumeration_cap())?;
    if as_json {
        let rows: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "lambda": lambda_json(&e.lambda),
                    "beta": config_json(&e.beta),
                    "coefficient": e.coefficient.to_string(),
                })
            })
            .collect();
        println!("{}", json!({ "alpha": config_json(&a), "entries": rows }));
        return Ok(());
    }
    println!("{} entries with |lambda| <= {max_l1}:", entries.len());
    for e in &entries {
        let parts: Vec<String> = e.lambda.lambda().iter().map(|x| x.to_string()).collect();
        println!("  [{}]  beta = {}  coeff = {}", parts.join(","), e.beta, e.coefficient);
    }
    Ok(())
}

fn cmd_hl(as_json: bool, alpha: &str, n: usize, expanded: bool) -> Result<(), CliError> {
    let a = parse_partition(alpha)?;
    let exp = hall_littlewood_r(&a, n, enumeration_cap())?;
    if as_json {
        let terms: Vec<serde_json::Value> = exp
            .terms()
            .iter()
            .map(|(p, c)| {
                json!({
                    "partition": p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        let mut doc = json!({ "alpha": a.to_string(), "n": n.to_string(), "schur_terms": terms });
        if expanded {
            doc["expanded"] = json!(expand_schur_expansion(&exp, n)?.to_string());
        }
        println!("{doc}");
        return Ok(());
    }
    println!("R_{a} in {n} variables, Schur expansion:");
    if exp.terms().is_empty() {
        println!("  0");
    }
    for (p, c) in exp.terms() {
        println!("  s_{p}: {c}");
    }
    if expanded {
        println!("expanded: {}", expand_schur_expansion(&exp, n)?);
    }
    Ok(())
}

fn cmd_kostka(as_json: bool, lambda: &str, mu: &str, n: Option<usize>) -> Result<(), CliError> {
    let l = parse_partition(lambda)?;
    let m = parse_partition(mu)?;
    let n = n.unwrap_or_else(|| l.num_parts().max(m.num_parts()).max(1));
    let via_toppling = kostka_via_toppling(&l, &m, n)?;
    let via_tableaux = kostka_oracle(&l, &m);
    let agree = via_toppling >= 0 && via_toppling as u128 == via_tableaux;
    if as_json {
        println!(
            "{}",
            json!({
                "lambda": l.to_string(),
                "mu": m.to_string(),
                "n": n.to_string(),
                "via_toppling": via_toppling.to_string(),
                "via_tableaux": via_tableaux.to_string(),
                "agree": agree,
            })
        );
    } else {
        println!("K[{l}][{m}] via toppling counts: {via_toppling}");
        println!("K[{l}][{m}] via tableaux:        {via_tableaux}");
        println!("agreement: {}", if agree { "yes" } else { "NO" });
    }
    Ok(())
}

fn parse_moments(spec: &str, len: usize) -> Result<MomentSequence, CliError> {
    if spec == "hermite" {
        return Ok(MomentSequence::hermite(len));
    }
    if spec == "legendre" {
        return Ok(MomentSequence::legendre(len));
    }
    if let Some(r) = spec.strip_prefix("charlier:") {
        let r = toppling_core::algebra::parse_rat(r)
            .ok_or_else(|| CliError::Input(format!("bad rational `{r}`")))?;
        return Ok(MomentSequence::charlier(r, len));
    }
    if let Some(list) = spec.strip_prefix("explicit:") {
        let moments: Option<Vec<_>> = list
            .split(',')
            .map(|p| toppling_core::algebra::parse_rat(p.trim()))
            .collect();
        let moments =
            moments.ok_or_else(|| CliError::Input(format!("bad moment list `{list}`")))?;
        return Ok(MomentSequence::explicit(moments));
    }
    Err(CliError::Input(format!(
        "unknown moment sequence `{spec}` (expected hermite, legendre, charlier:r or explicit:...)"
    )))
}

fn cmd_ortho(as_json: bool, moments: &str, degree: usize, verify: bool) -> Result<(), CliError> {
    let needed = 2 * degree + 3;
    let m = parse_moments(moments, needed)?;
    let max_n = subset_budget();
    let coeff_strings = |p: &[toppling_core::BigRational]| -> Vec<String> {
        p.iter().map(format_rat).collect()
    };
    if !verify {
        let mut polys = Vec::new();
        for d in 0..=degree {
            polys.push(toppling_core::ortho::ortho_poly(&m, d, max_n)?);
        }
        if as_json {
            let rows: Vec<serde_json::Value> =
                polys.iter().map(|p| json!(coeff_strings(p))).collect();
            println!("{}", json!({ "moments": moments, "polys": rows }));
        } else {
            for (d, p) in polys.iter().enumerate() {
                println!("p_{d}: [{}]", coeff_strings(p).join(", "));
            }
        }
        return Ok(());
    }
    let report = verify_orthogonality(&m, degree, max_n)?;
    if as_json {
        let polys: Vec<serde_json::Value> = report
            .polys
            .iter()
            .map(|p| json!(coeff_strings(p)))
            .collect();
        let pairs: Vec<serde_json::Value> = report
            .pair_products
            .iter()
            .map(|p| json!({ "m": p.m.to_string(), "n": p.n.to_string(), "value": format_rat(&p.value) }))
            .collect();
        let norms: Vec<serde_json::Value> = report
            .norm_checks
            .iter()
            .map(|c| {
                json!({
                    "n": c.n.to_string(),
                    "squared_norm": format_rat(&c.squared_norm),
                    "leading_product": format_rat(&c.leading_product),
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "moments": moments,
                "polys": polys,
                "leading": report.leading.iter().map(format_rat).collect::<Vec<_>>(),
                "pair_products": pairs,
                "norm_checks": norms,
                "degenerate": report.degenerate.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "all_orthogonal": report.all_orthogonal(),
                "norms_consistent": report.norms_consistent(),
                "leading_consistent": report.leading_consistent(),
            })
        );
        return Ok(());
    }
    for (d, p) in report.polys.iter().enumerate() {
        println!("p_{d}: [{}]", coeff_strings(p).join(", "));
    }
    println!(
        "orthogonal: {}",
        if report.all_orthogonal() { "yes" } else { "NO" }
    );
    for c in &report.norm_checks {
        let ok = c.squared_norm == c.leading_product;
        println!(
            "norm n={}: L(p^2) = {}  signed leading product = {}  [{}]",
            c.n,
            format_rat(&c.squared_norm),
            format_rat(&c.leading_product),
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    if !report.degenerate.is_empty() {
        let ds: Vec<String> = report.degenerate.iter().map(|d| d.to_string()).collect();
        println!("degenerate degrees (vanishing leading coefficient): {}", ds.join(","));
    }
    Ok(())
}
