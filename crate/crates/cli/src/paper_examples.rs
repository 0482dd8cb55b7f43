//! Embedded worked examples with known expected values, replayed on
//! demand so a user can confirm the binary computes what the
//! documentation claims.

use serde_json::json;

use toppling_core::decomp::{
    self, count_decompositions, enumerate_square_free, reduced_interval_decomposition,
};
use toppling_core::hl::{hall_littlewood_r, kostka_oracle, kostka_via_toppling};
use toppling_core::ortho::{ortho_poly, verify_orthogonality, MomentSequence};
use toppling_core::tableaux::{minimal_yamanouchi_sequences, word_to_syt, YamanouchiWord};
use toppling_core::{
    enumeration_cap, solve_dominance, subset_budget, Configuration, DominantElement, Graph,
    Partition,
};

use crate::CliError;

struct Outcome {
    name: &'static str,
    expected: String,
    actual: String,
}

impl Outcome {
    fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

fn check(name: &'static str, expected: impl Into<String>, actual: impl Into<String>) -> Outcome {
    Outcome {
        name,
        expected: expected.into(),
        actual: actual.into(),
    }
}

fn collect() -> Result<Vec<Outcome>, CliError> {
    let cap = enumeration_cap();
    let mut out = Vec::new();

    let k5 = Graph::complete(5)?;
    let alpha = Configuration::new(vec![5, -3, 0, 1, -4]);
    let beta = Configuration::new(vec![-6, -4, 4, 5, 0]);

    out.push(check(
        "topple word 1112 on complete:5",
        "-6,-4,4,5,0",
        k5.apply_word(&alpha, &[1, 1, 1, 2])?.to_string(),
    ));

    let lambda = match solve_dominance(&k5, &alpha, &beta)? {
        Ok(l) => {
            let parts: Vec<String> = l.lambda().iter().map(|x| x.to_string()).collect();
            parts.join(",")
        }
        Err(f) => format!("{f:?}"),
    };
    out.push(check("dominance on complete:5", "3,1,0,0,0", lambda));

    let words = minimal_yamanouchi_sequences(&k5, &alpha, &beta, cap)?;
    let rendered: Vec<String> = words.iter().map(|w| w.display_string()).collect();
    out.push(check(
        "minimal sequences on complete:5",
        "1112 1121 1211",
        rendered.join(" "),
    ));

    let word = YamanouchiWord::new(vec![1, 1, 1, 2]).map_err(CliError::from)?;
    out.push(check(
        "tableau of word 1112",
        "[[1, 2, 3], [4]]",
        format!("{:?}", word_to_syt(&word).rows()),
    ));

    let big = DominantElement::new(vec![8, 7, 4, 3, 2, 2, 1, 0])
        .expect("weakly decreasing with last entry 0");
    let reduced = reduced_interval_decomposition(&big);
    out.push(check(
        "reduced decomposition of (8,7,4,3,2,2,1,0)",
        "T[1,5]*T[2,3]^2*T[6,8]",
        reduced.display_string(),
    ));
    let s = decomp::stats(&reduced);
    out.push(check(
        "stats of the reduced decomposition",
        "l1=27 l2=8 l3=4 d=3",
        format!("l1={} l2={} l3={} d={}", s.l1, s.l2, s.l3, s.d),
    ));
    out.push(check(
        "conjugate of (8,7,4,3,2,2,1)",
        "(7,6,4,3,2,2,2,1)",
        Partition::new(vec![8, 7, 4, 3, 2, 2, 1])
            .map_err(CliError::from)?
            .conjugate()
            .to_string(),
    ));

    let lam431 = DominantElement::new(vec![4, 3, 1, 0]).expect("dominant");
    out.push(check(
        "decomposition count of (4,3,1,0)",
        "5",
        count_decompositions(&lam431).to_string(),
    ));
    let sf: Vec<String> = enumerate_square_free(&lam431, cap)?
        .iter()
        .filter(|d| decomp::stats(d).l3 == 2)
        .map(|d| d.display_string())
        .collect();
    out.push(check(
        "minimal-length square-free decompositions of (4,3,1,0)",
        "T[1,3]*T[2,4] T[1,4]*T[2,3]",
        sf.join(" "),
    ));

    let a1 = Partition::new(vec![1]).map_err(CliError::from)?;
    let exp = hall_littlewood_r(&a1, 2, cap)?;
    let terms: Vec<String> = exp
        .terms()
        .iter()
        .map(|(p, c)| format!("s_{p}: {c}"))
        .collect();
    out.push(check(
        "Hall-Littlewood R_(1) in 2 variables",
        "s_(1): 1",
        terms.join("; "),
    ));

    let l21 = Partition::new(vec![2, 1]).map_err(CliError::from)?;
    let m111 = Partition::new(vec![1, 1, 1]).map_err(CliError::from)?;
    out.push(check(
        "Kostka K[(2,1)][(1,1,1)] via toppling",
        "2",
        kostka_via_toppling(&l21, &m111, 3)?.to_string(),
    ));
    out.push(check(
        "Kostka K[(2,1)][(1,1,1)] via tableaux",
        "2",
        kostka_oracle(&l21, &m111).to_string(),
    ));

    let hermite = MomentSequence::hermite(9);
    let p2: Vec<String> = ortho_poly(&hermite, 2, subset_budget())?
        .iter()
        .map(toppling_core::algebra::format_rat)
        .collect();
    out.push(check("Hermite p_2 coefficients", "1, 0, -1", p2.join(", ")));
    let report = verify_orthogonality(&hermite, 3, subset_budget())?;
    out.push(check(
        "Hermite orthogonality and norm factorization up to degree 3",
        "orthogonal=true norms=true leading=true",
        format!(
            "orthogonal={} norms={} leading={}",
            report.all_orthogonal(),
            report.norms_consistent(),
            report.leading_consistent()
        ),
    ));

    Ok(out)
}

pub fn run(as_json: bool) -> Result<(), CliError> {
    let outcomes = collect()?;
    let failures = outcomes.iter().filter(|o| !o.ok()).count();
    if as_json {
        let rows: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.name,
                    "status": if o.ok() { "ok" } else { "fail" },
                    "expected": o.expected,
                    "actual": o.actual,
                })
            })
            .collect();
        println!(
            "{}",
            json!({
                "examples": rows,
                "total": outcomes.len().to_string(),
                "failures": failures.to_string(),
            })
        );
    } else {
        for o in &outcomes {
            if o.ok() {
                println!("ok    {}", o.name);
            } else {
                println!("FAIL  {} (expected `{}`, got `{}`)", o.name, o.expected, o.actual);
            }
        }
        println!("{}/{} examples passed", outcomes.len() - failures, outcomes.len());
    }
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
