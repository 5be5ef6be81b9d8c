//! Command-line front end. JSON goes to stdout; `--pretty` prints tables.
//!
//! Exit codes: 0 pass, 1 assertion failure, 2 budget exceeded, 3 input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use shellable::graph::{general_lex_product_by_labels, main_theorem_condition};
use shellable::json::{parse_complex, parse_family, parse_graph, ComplexJson, GraphJson};
use shellable::polyjoin::is_pure_criterion;
use shellable::verify;
use shellable::{Error, OrderConstraint, SearchOutcome, ShellingSearch, SimplicialComplex};

#[derive(Parser)]
#[command(name = "shellable", version, about = "Shellability of polyhedral joins and lexicographic products")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Single complexes.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Polyhedral joins of a pair family.
    #[command(subcommand)]
    Polyjoin(PolyjoinCmd),
    /// Graphs, independence complexes and lexicographic products.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Statement checks, campaigns and fixtures.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Search for a shelling order.
    Shellable {
        file: PathBuf,
        /// none | size-nonincreasing | first-block:a,b/c,d | fixed-minimum:a,b
        #[arg(long, default_value = "none")]
        constraint: String,
        #[command(flatten)]
        budget: Budget,
    },
    /// Whether all facets have the same size.
    Pure { file: PathBuf },
}

#[derive(Args)]
struct Budget {
    #[arg(long, default_value_t = verify::CHECK_MAX_FACETS)]
    max_facets: usize,
    #[arg(long, default_value_t = verify::CHECK_MAX_STATES)]
    max_states: u64,
}

#[derive(Subcommand)]
enum PolyjoinCmd {
    /// Facets of Z*.
    Build {
        family: PathBuf,
        /// Also run the brute-force enumeration and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Pureness of Z*, directly and by the constant-pair criterion.
    Pure { family: PathBuf },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Facets of I(G).
    Indcomplex { graph: PathBuf },
    /// G[H;U].
    Product {
        g: PathBuf,
        h: PathBuf,
        /// Comma-separated vertices of H.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        u: Vec<String>,
    },
    /// The four-clause condition on (H, v0).
    Condition {
        h: PathBuf,
        #[arg(long)]
        v0: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check one statement on a JSON instance.
    Theorem {
        name: String,
        #[arg(long)]
        instance: PathBuf,
    },
    /// Seeded random campaign.
    Campaign {
        name: String,
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Replay a printed example.
    Fixture { id: String },
}

struct Output {
    json: Value,
    pretty: String,
    code: u8,
}

impl Output {
    fn ok(json: Value, pretty: String) -> Self {
        Self { json, pretty, code: 0 }
    }

    fn pass_if(json: Value, pretty: String, passed: bool) -> Self {
        Self { json, pretty, code: if passed { 0 } else { 1 } }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli.group) {
        Ok(out) => {
            if cli.pretty {
                print!("{}", out.pretty);
            } else {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 2 } else { 3 })
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn run(group: Group) -> Result<Output, Error> {
    match group {
        Group::Complex(c) => complex_cmd(c),
        Group::Polyjoin(c) => polyjoin_cmd(c),
        Group::Graph(c) => graph_cmd(c),
        Group::Verify(c) => verify_cmd(c),
    }
}

fn parse_constraint(k: &SimplicialComplex, spec: &str) -> Result<OrderConstraint, Error> {
    let facet = |s: &str| k.vertices().simplex(s.split(',').filter(|x| !x.is_empty()));
    match spec.split_once(':') {
        None if spec == "none" => Ok(OrderConstraint::None),
        None if spec == "size-nonincreasing" => Ok(OrderConstraint::SizeNonincreasing),
        Some(("first-block", rest)) => {
            let block = rest.split('/').map(facet).collect::<Result<Vec<_>, _>>()?;
            OrderConstraint::first_block(k, &block)
        }
        Some(("fixed-minimum", rest)) => OrderConstraint::fixed_minimum(k, &facet(rest)?),
        _ => Err(Error::Invalid(format!("unknown constraint `{spec}`"))),
    }
}

fn facet_lines(k: &SimplicialComplex) -> String {
    let mut s = String::new();
    for f in k.facets() {
        let _ = writeln!(s, "  {{{}}}", k.render(f).join(", "));
    }
    s
}

fn complex_cmd(cmd: ComplexCmd) -> Result<Output, Error> {
    match cmd {
        ComplexCmd::Shellable { file, constraint, budget } => {
            let k = parse_complex(&read(&file)?)?;
            let c = parse_constraint(&k, &constraint)?;
            let outcome = ShellingSearch::new(&k)
                .constraint(c)
                .max_facets(budget.max_facets)
                .max_states(budget.max_states)
                .run()?;
            let (json, pretty) = match &outcome {
                SearchOutcome::Shellable(cert) => {
                    let order = cert.labelled(&k);
                    let mut p = format!("shellable: yes ({} facets)\norder:\n", k.num_facets());
                    for (i, f) in order.iter().enumerate() {
                        let _ = writeln!(p, "  {:>3}  {{{}}}", i + 1, f.join(", "));
                    }
                    (json!({"shellable": true, "certificate": order}), p)
                }
                SearchOutcome::NotShellable { explored } => (
                    json!({"shellable": false, "certificate": null, "explored": explored}),
                    format!("shellable: no ({} facets, {explored} states exhausted)\n", k.num_facets()),
                ),
            };
            Ok(Output::ok(json, pretty))
        }
        ComplexCmd::Pure { file } => {
            let k = parse_complex(&read(&file)?)?;
            let pure = k.is_pure();
            Ok(Output::ok(
                json!({"pure": pure, "dim": k.dim(), "facets": k.num_facets()}),
                format!("pure: {}\ndim: {}\nfacets: {}\n", yes(pure), k.dim(), k.num_facets()),
            ))
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn polyjoin_cmd(cmd: PolyjoinCmd) -> Result<Output, Error> {
    match cmd {
        PolyjoinCmd::Build { family, oracle } => {
            let f = parse_family(&read(&family)?)?;
            let z = f.facets()?;
            let mut json = json!({"complex": ComplexJson::from(&z)});
            let mut pretty = format!("Z*: {} facets, dim {}\n{}", z.num_facets(), z.dim(), facet_lines(&z));
            let mut agree = true;
            if oracle {
                agree = f.facets_bruteforce()? == z;
                json["oracle_agrees"] = json!(agree);
                let _ = writeln!(pretty, "oracle agrees: {}", yes(agree));
            }
            Ok(Output::pass_if(json, pretty, agree))
        }
        PolyjoinCmd::Pure { family } => {
            let f = parse_family(&read(&family)?)?;
            let pure = f.facets()?.is_pure();
            let criterion = match f.uniform_pair() {
                Some(p) => Some(is_pure_criterion(f.m(), p)?),
                None => None,
            };
            let mut pretty = format!("pure: {}\n", yes(pure));
            if let Some(c) = criterion {
                let _ = writeln!(pretty, "criterion: {}", yes(c));
            }
            Ok(Output::ok(json!({"pure": pure, "criterion": criterion}), pretty))
        }
    }
}

fn graph_cmd(cmd: GraphCmd) -> Result<Output, Error> {
    match cmd {
        GraphCmd::Indcomplex { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let ic = g.independence_complex()?;
            Ok(Output::ok(
                json!({"complex": ComplexJson::from(&ic), "well_covered": ic.is_pure()}),
                format!(
                    "I(G): {} facets, well-covered: {}\n{}",
                    ic.num_facets(),
                    yes(ic.is_pure()),
                    facet_lines(&ic)
                ),
            ))
        }
        GraphCmd::Product { g, h, u } => {
            let g = parse_graph(&read(&g)?)?;
            let h = parse_graph(&read(&h)?)?;
            let p = general_lex_product_by_labels(&g, &h, u.iter())?;
            let mut pretty = format!("G[H;U]: {} vertices, {} edges\n", p.num_vertices(), p.num_edges());
            for (a, b) in p.edges() {
                let _ = writeln!(pretty, "  {} -- {}", p.vertices().label(a), p.vertices().label(b));
            }
            Ok(Output::ok(json!({"graph": GraphJson::from(&p)}), pretty))
        }
        GraphCmd::Condition { h, v0 } => {
            let h = parse_graph(&read(&h)?)?;
            let r = main_theorem_condition(&h, &v0)?;
            let pretty = format!(
                "well-covered          {}\nshellable             {}\ndeletion shellable    {}\nneighbour in every τ  {}\nholds                 {}\n",
                yes(r.well_covered),
                yes(r.shellable),
                yes(r.deletion_shellable),
                yes(r.neighbor_in_every_maximal_set),
                yes(r.holds)
            );
            Ok(Output::ok(serde_json::to_value(&r)?, pretty))
        }
    }
}

fn verify_cmd(cmd: VerifyCmd) -> Result<Output, Error> {
    match cmd {
        VerifyCmd::Theorem { name, instance } => {
            let inst: Value = serde_json::from_str(&read(&instance)?)?;
            let c = verify::check_theorem(&name, &inst)?;
            let mut pretty = format!("{}\n", c.theorem);
            for cl in &c.clauses {
                let _ = writeln!(pretty, "  {:<40} {}", cl.name, yes(cl.holds));
            }
            let concl = c.conclusion.map_or("undecided", yes);
            let _ = writeln!(pretty, "hypothesis: {}\nconclusion: {concl}", yes(c.hypothesis));
            let _ = writeln!(pretty, "result: {}", if c.passes() { "pass" } else { "FAIL" });
            let passed = c.passes();
            Ok(Output::pass_if(serde_json::to_value(&c)?, pretty, passed))
        }
        VerifyCmd::Campaign { name, trials, seed } => {
            let t = verify::Theorem::parse(&name)?;
            let s = verify::random_campaign(t.id(), trials, seed, None)?;
            let pretty = format!(
                "{}  trials {}  seed {}\n  vacuous      {}\n  non-vacuous  {}\n  passed       {}\n  failed       {}\n  budget       {}\n",
                s.theorem, s.trials, s.seed, s.vacuous, s.non_vacuous, s.passed, s.failed, s.budget_exceeded
            );
            let passed = s.failed == 0;
            let code = if !passed {
                1
            } else if s.budget_exceeded > 0 {
                2
            } else {
                0
            };
            Ok(Output { json: serde_json::to_value(&s)?, pretty, code })
        }
        VerifyCmd::Fixture { id } => {
            let r = verify::replay_fixture(&id)?;
            let mut pretty = format!("{}\n", r.fixture);
            for a in &r.assertions {
                let _ = writeln!(pretty, "  {:<62} {}", a.name, if a.passed { "pass" } else { "FAIL" });
            }
            let passed = r.passed;
            Ok(Output::pass_if(serde_json::to_value(&r)?, pretty, passed))
        }
    }
}
