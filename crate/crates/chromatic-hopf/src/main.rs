//! Command-line front end: graph listings, expansions, alphabet
//! transforms, batch identity verification and statistic tables.

use chromatic_hopf::algebra::Element;
use chromatic_hopf::chromatic::{
    llt_phicheck, llt_qsym, llt_wqsym, sw_f_expansion, x1_mt, x_phi, x_phicheck, x_qsym,
    x_wqsym,
};
use chromatic_hopf::graphs::{
    catalan, code, des_set_g, enumerate_dyck, insertion_increments, insertion_order, inv_g,
    maj_g, st_g, DyckGraph, LabeledGraph,
};
use chromatic_hopf::json;
use chromatic_hopf::transforms::{transform_element, VirtualAlphabet};
use chromatic_hopf::verify::{self, Identity, ALL_IDENTITIES};
use chromatic_hopf::words::{permutations, Permutation};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "chromatic-hopf",
    version,
    about = "Exact chromatic quasi-symmetric functions, LLT polynomials and their Hopf-algebra identities"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List all Dyck graphs on [n] with Hessenberg vector, edges and diagram.
    Graphs {
        #[arg(long)]
        n: usize,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Expand a chromatic or LLT function of a graph in a chosen basis.
    Expand {
        /// Graph: `h:2,2,3` (Hessenberg) or `e:3;1-2,2-3` (edge list).
        #[arg(long)]
        graph: String,
        /// One of X:qsym-M, X:wqsym-M, X:wqsym-Phi, X:wqsym-PhiCheck,
        /// X:t1-mt, X:qsym-F, LLT:qsym-M, LLT:wqsym-M, LLT:wqsym-PhiCheck.
        #[arg(long)]
        target: String,
        /// Emit the element as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Apply an alphabet transform to an element file.
    Transform {
        /// Alphabet name: "1/(1-t)", "1/(t-1)", "1-t" or "t-1".
        #[arg(long)]
        alphabet: String,
        /// Path to a JSON element (schema of `expand --json`).
        #[arg(long)]
        input: PathBuf,
        /// Emit the result as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a named identity suite for all sizes up to a bound.
    Verify {
        /// Identity name, or "all".
        #[arg(long)]
        identity: String,
        /// Size bound (defaults per identity).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Tables of graph statistics on permutations.
    Stats {
        #[arg(long)]
        graph: String,
        /// One of st, inv, maj, code, increments.
        #[arg(long)]
        statistic: String,
        /// A single permutation, e.g. 35142 (for `increments`: of [n-1]).
        #[arg(long)]
        perm: Option<String>,
        /// Output format: text or csv.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn resource_ceiling() -> usize {
    std::env::var("CHROMATIC_HOPF_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(EXIT_USAGE)
}

fn parse_graph(spec: &str) -> Result<LabeledGraph, String> {
    if let Some(h) = spec.strip_prefix("h:") {
        let parts: Result<Vec<u8>, _> = h.split(',').map(|p| p.trim().parse::<u8>()).collect();
        let parts = parts.map_err(|e| format!("bad Hessenberg vector: {}", e))?;
        return DyckGraph::new(parts).map(|g| g.to_graph()).map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("e:") {
        let (n_str, edges_str) = match rest.split_once(';') {
            Some((a, b)) => (a, b),
            None => (rest, ""),
        };
        let n: usize = n_str.trim().parse().map_err(|e| format!("bad vertex count: {}", e))?;
        let mut edges = Vec::new();
        for tok in edges_str.split(',').filter(|t| !t.trim().is_empty()) {
            let (i, j) = tok
                .trim()
                .split_once('-')
                .ok_or_else(|| format!("bad edge '{}'", tok))?;
            let i: usize = i.parse().map_err(|e| format!("bad edge '{}': {}", tok, e))?;
            let j: usize = j.parse().map_err(|e| format!("bad edge '{}': {}", tok, e))?;
            edges.push((i, j));
        }
        return LabeledGraph::new(n, edges).map_err(|e| e.to_string());
    }
    Err("graph must start with 'h:' or 'e:'".into())
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    let letters: Vec<u8> = if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<u8>())
            .collect::<Result<_, _>>()
            .map_err(|e| format!("bad permutation: {}", e))?
    } else {
        s.bytes()
            .map(|b| {
                if b.is_ascii_digit() {
                    Ok(b - b'0')
                } else {
                    Err(format!("bad permutation digit '{}'", b as char))
                }
            })
            .collect::<Result<_, _>>()?
    };
    Permutation::new(letters).map_err(|e| e.to_string())
}

fn require_dyck(g: &LabeledGraph, target: &str) -> Result<DyckGraph, String> {
    g.as_dyck()
        .map_err(|_| format!("target {} requires an interval-closed (Dyck) graph", target))
}

fn expand_target(g: &LabeledGraph, target: &str) -> Result<Element, String> {
    match target {
        "X:qsym-M" => Ok(x_qsym(g)),
        "X:wqsym-M" => Ok(x_wqsym(g)),
        "LLT:qsym-M" => Ok(llt_qsym(g)),
        "LLT:wqsym-M" => Ok(llt_wqsym(g)),
        "X:wqsym-Phi" => Ok(x_phi(&require_dyck(g, target)?)),
        "X:wqsym-PhiCheck" => Ok(x_phicheck(&require_dyck(g, target)?)),
        "X:t1-mt" => Ok(x1_mt(&require_dyck(g, target)?)),
        "X:qsym-F" => Ok(sw_f_expansion(&require_dyck(g, target)?)),
        "LLT:wqsym-PhiCheck" => Ok(llt_phicheck(&require_dyck(g, target)?)),
        _ => Err(format!("unknown target '{}'", target)),
    }
}

fn run_graphs(n: usize, format: &str) -> ExitCode {
    if n > resource_ceiling() {
        return usage_error(format!(
            "n = {} exceeds the configured maximum {} (set CHROMATIC_HOPF_MAX_N to raise it)",
            n,
            resource_ceiling()
        ));
    }
    let graphs = enumerate_dyck(n);
    match format {
        "json" => {
            let records: Vec<serde_json::Value> =
                graphs.iter().map(json::dyck_to_json).collect();
            println!("{}", serde_json::Value::Array(records));
        }
        "text" => {
            for g in &graphs {
                let edges: Vec<String> =
                    g.edges().iter().map(|(i, j)| format!("{}-{}", i, j)).collect();
                println!("{} edges={} diagram={}", g, edges.join(","), g.to_diagram());
            }
            println!("{} graphs (Catalan({}) = {})", graphs.len(), n, catalan(n));
        }
        other => return usage_error(format!("unknown format '{}'", other)),
    }
    ExitCode::SUCCESS
}

fn run_expand(graph: &str, target: &str, as_json: bool) -> ExitCode {
    let g = match parse_graph(graph) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    match expand_target(&g, target) {
        Ok(e) => {
            if as_json {
                println!("{}", json::element_to_json(&e));
            } else {
                println!("{}", e);
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn run_transform(alphabet: &str, input: &PathBuf, as_json: bool) -> ExitCode {
    let Some(t) = VirtualAlphabet::from_name(alphabet) else {
        return usage_error(format!(
            "unknown alphabet '{}': use 1/(1-t), 1/(t-1), 1-t or t-1",
            alphabet
        ));
    };
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {}", input.display(), e)),
    };
    let value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return usage_error(format!("bad JSON: {}", e)),
    };
    let element = match json::element_from_json(&value) {
        Ok(e) => e,
        Err(e) => return usage_error(e),
    };
    match transform_element(&element, &t) {
        Ok(out) => {
            if as_json {
                println!("{}", json::element_to_json(&out));
            } else {
                println!("{}", out);
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn run_verify(identity: &str, n: Option<usize>) -> ExitCode {
    let ceiling = resource_ceiling();
    let ids: Vec<Identity> = if identity == "all" {
        ALL_IDENTITIES.to_vec()
    } else {
        match Identity::from_str(identity) {
            Ok(id) => vec![id],
            Err(e) => return usage_error(e),
        }
    };
    let mut all_pass = true;
    let mut truncated = false;
    for id in ids {
        let requested = n.unwrap_or_else(|| id.default_bound());
        let bound = requested.min(ceiling);
        if bound < requested {
            truncated = true;
        }
        match verify::run(id, bound) {
            Ok(report) => {
                println!("{}", report);
                if bound < requested {
                    println!(
                        "  (truncated at n = {} by resource ceiling; requested {})",
                        bound, requested
                    );
                }
                all_pass &= report.pass();
            }
            Err(e) => {
                eprintln!("error running {}: {}", id, e);
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    if truncated {
        ExitCode::from(EXIT_RESOURCE)
    } else if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY_FAIL)
    }
}

fn stat_rows(
    g: &LabeledGraph,
    statistic: &str,
    perm: Option<Permutation>,
) -> Result<(Vec<String>, Vec<Vec<String>>), String> {
    let dyck = g.as_dyck().ok();
    let perms: Vec<Permutation> = match (&perm, statistic) {
        (Some(p), "increments") => {
            if p.len() + 1 != g.n() {
                return Err(format!(
                    "increments needs a permutation of [{}]",
                    g.n() - 1
                ));
            }
            vec![p.clone()]
        }
        (Some(p), _) => {
            if p.len() != g.n() {
                return Err(format!("permutation size must be {}", g.n()));
            }
            vec![p.clone()]
        }
        (None, "increments") => permutations(g.n().saturating_sub(1)),
        (None, _) => permutations(g.n()),
    };
    match statistic {
        "st" => {
            let header = vec!["perm".into(), "inv".into(), "maj".into(), "st".into()];
            let rows = perms
                .iter()
                .map(|p| {
                    vec![
                        p.to_string(),
                        inv_g(g, p).to_string(),
                        maj_g(g, p).to_string(),
                        st_g(g, p).to_string(),
                    ]
                })
                .collect();
            Ok((header, rows))
        }
        "inv" => Ok((
            vec!["perm".into(), "inv".into()],
            perms.iter().map(|p| vec![p.to_string(), inv_g(g, p).to_string()]).collect(),
        )),
        "maj" => {
            let header = vec!["perm".into(), "des".into(), "maj".into()];
            let rows = perms
                .iter()
                .map(|p| {
                    let des: Vec<String> =
                        des_set_g(g, p).into_iter().map(|d| d.to_string()).collect();
                    vec![p.to_string(), format!("{{{}}}", des.join(",")), maj_g(g, p).to_string()]
                })
                .collect();
            Ok((header, rows))
        }
        "code" => {
            let d = dyck.ok_or("code requires a Dyck graph")?;
            let header = vec!["perm".into(), "code".into()];
            let rows = perms
                .iter()
                .map(|p| {
                    let c: Vec<String> =
                        code(&d, p).into_iter().map(|v| v.to_string()).collect();
                    vec![p.to_string(), c.join(" ")]
                })
                .collect();
            Ok((header, rows))
        }
        "increments" => {
            let d = dyck.ok_or("increments requires a Dyck graph")?;
            let header =
                vec!["perm".into(), "slot-increments".into(), "annotated".into()];
            let rows = perms
                .iter()
                .map(|p| {
                    let incs = insertion_increments(&d, p).unwrap();
                    let order = insertion_order(&d, p).unwrap();
                    let mut annotated = String::new();
                    for (slot, &inc) in incs.iter().enumerate() {
                        annotated.push_str(&format!("^{} ", inc));
                        if slot < p.len() {
                            annotated.push_str(&format!("{} ", p.letters()[slot]));
                        }
                    }
                    let _ = order;
                    let incs_str: Vec<String> =
                        incs.iter().map(|v| v.to_string()).collect();
                    vec![p.to_string(), incs_str.join(" "), annotated.trim().to_string()]
                })
                .collect();
            Ok((header, rows))
        }
        other => Err(format!("unknown statistic '{}'", other)),
    }
}

fn run_stats(graph: &str, statistic: &str, perm: Option<String>, format: &str) -> ExitCode {
    let g = match parse_graph(graph) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    let perm = match perm.map(|p| parse_perm(&p)).transpose() {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    if perm.is_none() && g.n() > resource_ceiling() {
        eprintln!(
            "error: tabulating S_{} exceeds the resource ceiling {}",
            g.n(),
            resource_ceiling()
        );
        return ExitCode::from(EXIT_RESOURCE);
    }
    match stat_rows(&g, statistic, perm) {
        Ok((header, rows)) => {
            match format {
                "csv" => {
                    println!("{}", header.join(","));
                    for row in rows {
                        println!("{}", row.join(","));
                    }
                }
                "text" => {
                    println!("{}", header.join("\t"));
                    for row in rows {
                        println!("{}", row.join("\t"));
                    }
                }
                other => return usage_error(format!("unknown format '{}'", other)),
            }
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Graphs { n, format } => run_graphs(n, &format),
        Cmd::Expand { graph, target, json } => run_expand(&graph, &target, json),
        Cmd::Transform { alphabet, input, json } => run_transform(&alphabet, &input, json),
        Cmd::Verify { identity, n } => run_verify(&identity, n),
        Cmd::Stats { graph, statistic, perm, format } => {
            run_stats(&graph, &statistic, perm, &format)
        }
    }
}
