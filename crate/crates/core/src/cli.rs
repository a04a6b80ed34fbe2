//! Command-line front end. [`run`] parses arguments and performs the
//! computation without touching stdout, so it can be tested directly.

use std::ffi::OsString;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::branching::{
    branch_first, branch_first_labellings, branch_second, enumerate_good_labellings, wreath_specht_dimension,
    young_layer, BranchDocument, BranchRule, MultiplicityMap,
};
use crate::cosets::{double_coset_reps, enumerate_weakly_increasing, rho_cosets_for_sizes};
use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, lr_multi};
use crate::multipartition::Multipartition;
use crate::notation::{parse_composition, parse_multipartition, parse_partition};
use crate::partition::{enumerate_partitions, Composition, Partition};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub human: String,
    pub exit_code: i32,
    /// Whether `--json` was given.
    pub json: bool,
}

impl CommandResult {
    fn ok(payload: Value, human: String) -> Self {
        CommandResult { status: Status::Ok, payload, human, exit_code: EXIT_OK, json: false }
    }

    fn failure(code: &str, message: String, exit_code: i32) -> Self {
        let payload = json!({ "status": "error", "code": code, "message": message });
        let human = payload.to_string();
        CommandResult { status: Status::Error, payload, human, exit_code, json: false }
    }

    fn from_error(e: &Error) -> Self {
        Self::failure(e.code(), e.to_string(), EXIT_COMPUTATION)
    }

    /// The text to print: the JSON payload under `--json`, otherwise the
    /// plain rendering.
    pub fn rendered(&self) -> String {
        if self.json {
            self.payload.to_string()
        } else {
            self.human.clone()
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "wreath-specht", version, about = "Branching multiplicities for Specht modules of S_m wr S_n")]
struct Cli {
    /// Print the JSON payload instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn partition_arg(s: &str) -> std::result::Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn multipartition_arg(s: &str) -> std::result::Result<Multipartition, String> {
    parse_multipartition(s).map_err(|e| e.to_string())
}

fn composition_arg(s: &str) -> std::result::Result<Composition, String> {
    parse_composition(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Labellings,
    Matrices,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of m in descending lexicographic order.
    Partitions { m: usize },
    /// Dimension of the Specht module of a partition.
    Dim {
        #[arg(long, value_parser = partition_arg)]
        partition: Partition,
    },
    /// Littlewood-Richardson coefficient c^lambda_{alpha,beta}.
    Lr {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        alpha: Partition,
        #[arg(long, value_parser = partition_arg)]
        beta: Partition,
    },
    /// Generalized coefficient c(lambda; parts), parts separated by ';'.
    LrMulti {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg, value_delimiter = ';', required = true)]
        parts: Vec<Partition>,
    },
    /// Partitions of m and m-1 with the box-removal edges between them.
    YoungLayer { m: usize },
    /// Good labellings of the layer for lambda and nu, each with its coefficient.
    Labellings {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_parser = multipartition_arg)]
        lambda: Multipartition,
        #[arg(long, value_parser = multipartition_arg)]
        nu: Multipartition,
    },
    /// Restriction from S_m wr S_n to S_{m-1} wr S_n.
    BranchFirst {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_parser = multipartition_arg)]
        lambda: Multipartition,
        #[arg(long, value_enum, default_value_t = Method::Matrices)]
        method: Method,
    },
    /// Restriction from S_m wr S_n to S_m wr S_{n-1}.
    BranchSecond {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_parser = multipartition_arg)]
        lambda: Multipartition,
    },
    /// Dimension of the Specht module of S_m wr S_n indexed by lambda.
    WreathDim {
        #[arg(short = 'm')]
        m: usize,
        #[arg(long, value_parser = multipartition_arg)]
        lambda: Multipartition,
    },
    /// (S_gamma, S_alpha)-double coset representatives and their tableaux.
    Cosets {
        #[arg(long, value_parser = composition_arg)]
        gamma: Composition,
        #[arg(long, value_parser = composition_arg)]
        alpha: Composition,
    },
    /// The cycles rho_i for a composition of component sizes.
    Rho {
        #[arg(long, value_parser = composition_arg)]
        sizes: Composition,
    },
    /// Run a verification suite.
    Verify {
        /// lr-oracle, cosets, dimensions-first, dimensions-second, labelling-equivalence, stabilizers,
        /// length-lemma, minimal-length, rho, specht-dimension or degeneration.
        #[arg(long, value_parser = |s: &str| s.parse::<Suite>().map_err(|e| e.to_string()))]
        suite: Suite,
        /// Largest m to check; each suite has its own default.
        #[arg(long)]
        max_m: Option<usize>,
        /// Largest n (or total size) to check; each suite has its own default.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let mut result = match Cli::try_parse_from(&argv) {
        Ok(cli) => {
            let mut r = execute(cli.command).unwrap_or_else(|e| CommandResult::from_error(&e));
            r.json = cli.json;
            return r;
        }
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let text = e.render().to_string();
                CommandResult::ok(json!({ "status": "ok", "message": text }), text)
            }
            _ => {
                let mut r = CommandResult::failure("usage", e.to_string(), EXIT_USAGE);
                r.human = e.render().to_string();
                r
            }
        },
    };
    // parsing failed, so look for the flag directly
    result.json = argv.iter().skip(1).any(|a| a == "--json");
    result
}

fn nested(p: &Partition) -> Value {
    json!(p.parts())
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().collect::<Vec<_>>().join("\n")
}

fn map_human(map: &MultiplicityMap) -> String {
    lines(map.sorted_entries().into_iter().map(|(nu, mult)| format!("{nu} {mult}")))
}

fn branch_result(
    m: usize,
    rule: BranchRule,
    lambda: &Multipartition,
    map: &MultiplicityMap,
    method: &str,
) -> CommandResult {
    let mut payload = serde_json::to_value(BranchDocument::new(m, rule, lambda, map)).expect("document serializes");
    payload["method"] = json!(method);
    CommandResult::ok(payload, map_human(map))
}

fn execute(command: Command) -> Result<CommandResult> {
    Ok(match command {
        Command::Partitions { m } => {
            let ps = enumerate_partitions(m);
            CommandResult::ok(json!(ps.iter().map(nested).collect::<Vec<_>>()), lines(ps.iter().map(|p| p.to_string())))
        }
        Command::Dim { partition } => {
            let d = partition.specht_dimension()?;
            CommandResult::ok(json!({ "partition": partition.parts(), "dimension": d }), d.to_string())
        }
        Command::Lr { lambda, alpha, beta } => {
            let c = lr_coefficient(&lambda, &alpha, &beta);
            CommandResult::ok(
                json!({ "lambda": lambda.parts(), "alpha": alpha.parts(), "beta": beta.parts(), "coefficient": c }),
                c.to_string(),
            )
        }
        Command::LrMulti { lambda, parts } => {
            let c = lr_multi(&lambda, &parts)?;
            CommandResult::ok(
                json!({ "lambda": lambda.parts(), "parts": parts.iter().map(nested).collect::<Vec<_>>(), "coefficient": c }),
                c.to_string(),
            )
        }
        Command::YoungLayer { m } => {
            let layer = young_layer(m)?;
            let edges: Vec<Value> = layer
                .edges()
                .iter()
                .map(|&(i, j)| json!({ "upper": layer.upper()[i].parts(), "lower": layer.lower()[j].parts() }))
                .collect();
            let human =
                lines(layer.edges().iter().map(|&(i, j)| format!("{} -> {}", layer.upper()[i], layer.lower()[j])));
            CommandResult::ok(
                json!({
                    "m": m,
                    "upper": layer.upper().iter().map(nested).collect::<Vec<_>>(),
                    "lower": layer.lower().iter().map(nested).collect::<Vec<_>>(),
                    "edges": edges,
                    "adjacency": layer.adjacency().to_rows(),
                }),
                human,
            )
        }
        Command::Labellings { m, lambda, nu } => {
            let layer = young_layer(m)?;
            let mut docs = Vec::new();
            let mut human = Vec::new();
            let mut total: u64 = 0;
            for l in enumerate_good_labellings(&layer, &lambda, &nu)? {
                let c = l.coefficient()?;
                total = total.checked_add(c).ok_or(Error::Overflow("labelling total"))?;
                let labels: Vec<Value> = layer
                    .edges()
                    .iter()
                    .zip(l.labels())
                    .map(|(&(i, j), p)| {
                        json!({ "upper": layer.upper()[i].parts(), "lower": layer.lower()[j].parts(), "label": p.parts() })
                    })
                    .collect();
                let text: Vec<String> = l.labels().iter().map(|p| p.to_string()).collect();
                human.push(format!("{} {c}", text.join(" ")));
                docs.push(json!({ "labels": labels, "coefficient": c }));
            }
            human.push(format!("total {total}"));
            CommandResult::ok(
                json!({ "m": m, "lambda": lambda.to_nested(), "nu": nu.to_nested(), "labellings": docs, "total": total }),
                lines(human),
            )
        }
        Command::BranchFirst { m, lambda, method } => match method {
            Method::Matrices => branch_result(m, BranchRule::First, &lambda, &branch_first(m, &lambda)?, "matrices"),
            Method::Labellings => {
                branch_result(m, BranchRule::First, &lambda, &branch_first_labellings(m, &lambda)?, "labellings")
            }
            Method::Both => {
                let a = branch_first(m, &lambda)?;
                let b = branch_first_labellings(m, &lambda)?;
                if a == b {
                    branch_result(m, BranchRule::First, &lambda, &a, "both")
                } else {
                    CommandResult::failure(
                        "disagreement",
                        format!("matrices give {{{}}}, labellings give {{{}}}", map_human(&a), map_human(&b)),
                        EXIT_VERIFICATION,
                    )
                }
            }
        },
        Command::BranchSecond { m, lambda } => {
            branch_result(m, BranchRule::Second, &lambda, &branch_second(m, &lambda)?, "removable-boxes")
        }
        Command::WreathDim { m, lambda } => {
            let d = wreath_specht_dimension(m, &lambda)?;
            CommandResult::ok(json!({ "m": m, "lambda": lambda.to_nested(), "dimension": d }), d.to_string())
        }
        Command::Cosets { gamma, alpha } => {
            let system = double_coset_reps(&gamma, &alpha)?;
            let tableaux = enumerate_weakly_increasing(&alpha, &gamma)?;
            let mut docs = Vec::new();
            let mut human = Vec::new();
            for (rep, t) in system.reps.iter().zip(&tableaux) {
                docs.push(json!({ "permutation": rep.to_string(), "tableau": t.rows() }));
                human.push(format!("{rep}\n{t}"));
            }
            CommandResult::ok(
                json!({ "gamma": gamma.parts(), "alpha": alpha.parts(), "count": docs.len(), "representatives": docs }),
                human.join("\n\n"),
            )
        }
        Command::Rho { sizes } => {
            let reps = rho_cosets_for_sizes(&sizes)?;
            let docs: Vec<Value> =
                reps.iter().map(|(i, p)| json!({ "index": i, "permutation": p.to_string() })).collect();
            CommandResult::ok(
                json!({ "sizes": sizes.parts(), "n": sizes.size(), "representatives": docs }),
                lines(reps.iter().map(|(i, p)| format!("{i} {p}"))),
            )
        }
        Command::Verify { suite, max_m, max_n } => {
            let mut bounds = suite.default_bounds();
            if let Some(m) = max_m {
                bounds.max_m = m;
            }
            if let Some(n) = max_n {
                bounds.max_n = n;
            }
            let report = run_suite(suite, bounds)?;
            let mut r =
                CommandResult::ok(serde_json::to_value(&report).expect("report serializes"), report.to_string());
            if !report.passed() {
                r.status = Status::Error;
                r.exit_code = EXIT_VERIFICATION;
            }
            r
        }
    })
}
