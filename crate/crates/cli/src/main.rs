use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fasnu::harness::{random_check, summary_line, verify_paper_with, RandomModel, Status, VerifyOptions};
use fasnu::instances::{letter, Builtin};
use fasnu::textio::{parse_graph, write_graph};
use fasnu::tournament::{enumerate_codes, order_summary, search_counterexamples, Predicate};
use fasnu::{
    max_cycles_through, max_triangles_through, min_arc_cover_through, nu_exact, tau_exact, Budget, CyclePacking, Digraph, Vertex,
};

#[derive(Parser)]
#[command(name = "fasnu", version, about = "Exact feedback arc sets and arc-disjoint cycle packings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in claim suite; exits nonzero if any claim fails.
    VerifyPaper {
        /// Claim ids to report as SKIPPED.
        #[arg(long)]
        skip: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Minimum feedback arc set.
    Tau { graph: String },
    /// Maximum arc-disjoint cycle packing.
    Nu {
        graph: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Maximum arc-disjoint cycles through a vertex, with a minimum cut.
    CyclesThrough { graph: String, vertex: String },
    /// Maximum arc-disjoint 3-cycles through a vertex.
    TriThrough { graph: String, vertex: String },
    /// Tournaments of order n up to isomorphism.
    Enum {
        n: usize,
        /// nu_lt_tau, florek_conjecture_fails or seymour_fails.
        #[arg(long)]
        predicate: Option<Predicate>,
    },
    /// Cross-check solvers on seeded random instances.
    RandomCheck {
        #[arg(long)]
        model: RandomModel,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a built-in instance in the graph file format.
    Show { builtin: String },
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let mut b = Budget::from_env();
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        if let Some(s) = self.budget_secs {
            b.max_time = Duration::from_secs(s);
        }
        b
    }
}

struct Source {
    graph: Digraph,
    lettered: bool,
}

impl Source {
    fn load(spec: &str) -> Result<Self> {
        if let Ok(b) = spec.parse::<Builtin>() {
            return Ok(Self { graph: b.graph()?, lettered: b.lettered() });
        }
        let path = Path::new(spec);
        if !path.exists() {
            bail!("`{spec}` is neither a builtin nor a readable file");
        }
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        Ok(Self { graph: parse_graph(&text)?, lettered: false })
    }

    fn name(&self, v: Vertex) -> String {
        if self.lettered {
            letter(v).to_string()
        } else {
            v.to_string()
        }
    }

    fn vertex(&self, s: &str) -> Result<Vertex> {
        let v = match s.parse::<usize>() {
            Ok(v) => v,
            Err(_) if self.lettered && s.len() == 1 && s.as_bytes()[0].is_ascii_lowercase() => (s.as_bytes()[0] - b'a') as usize,
            Err(_) => bail!("bad vertex `{s}`"),
        };
        self.graph.check_vertex(v)?;
        Ok(v)
    }

    fn arc(&self, (u, v): (Vertex, Vertex)) -> String {
        format!("{} {}", self.name(u), self.name(v))
    }

    fn cycle(&self, c: &[Vertex]) -> String {
        c.iter().map(|&v| self.name(v)).collect::<Vec<_>>().join(" ")
    }

    fn print_cycles(&self, p: &CyclePacking) {
        for c in &p.cycles {
            println!("cycle {}", self.cycle(c));
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::VerifyPaper { skip, budget } => {
            let opts = VerifyOptions { budget: budget.budget(), skip };
            let results = verify_paper_with(&opts);
            for r in &results {
                println!("{r}");
            }
            println!("{}", summary_line(&results));
            Ok(results.iter().all(|r| r.status != Status::Fail))
        }
        Command::Tau { graph } => {
            let src = Source::load(&graph)?;
            let r = tau_exact(&src.graph)?;
            println!("tau={}", r.tau);
            println!("ordering {}", src.cycle(r.ordering.as_slice()));
            for &a in r.fas.iter() {
                println!("arc {}", src.arc(a));
            }
            Ok(true)
        }
        Command::Nu { graph, budget } => {
            let src = Source::load(&graph)?;
            let r = nu_exact(&src.graph, budget.budget());
            println!("nu={} optimal={}", r.value, r.optimal);
            println!("nodes={} secs={:.3}", r.nodes_explored, r.elapsed.as_secs_f64());
            src.print_cycles(&r.certificate);
            Ok(true)
        }
        Command::CyclesThrough { graph, vertex } => {
            let src = Source::load(&graph)?;
            let v = src.vertex(&vertex)?;
            let (k, p) = max_cycles_through(&src.graph, v)?;
            let cut = min_arc_cover_through(&src.graph, v)?;
            println!("cycles_through={k}");
            for &a in cut.iter() {
                println!("cut {}", src.arc(a));
            }
            src.print_cycles(&p);
            Ok(true)
        }
        Command::TriThrough { graph, vertex } => {
            let src = Source::load(&graph)?;
            let v = src.vertex(&vertex)?;
            let (k, p) = max_triangles_through(&src.graph, v)?;
            println!("triangles_through={k}");
            src.print_cycles(&p);
            Ok(true)
        }
        Command::Enum { n, predicate } => {
            let codes = enumerate_codes(n)?;
            let summary = order_summary(n, &codes)?;
            let shown = match predicate {
                Some(p) => search_counterexamples(n, p)?,
                None => codes,
            };
            for c in &shown {
                println!("{c}");
            }
            println!(
                "order={n} classes={} labeled_sum={} labeled_total={} identity={}",
                summary.classes,
                summary.labeled_sum,
                summary.labeled_total,
                summary.identity_holds()
            );
            if let Some(p) = predicate {
                println!("{}={}", p.name(), shown.len());
            }
            Ok(summary.identity_holds())
        }
        Command::RandomCheck { model, n, count, seed, budget } => {
            let tally = random_check(model, n, count, seed, budget.budget())?;
            for f in &tally.failures {
                println!("FAIL {f}");
            }
            println!("instances={} checks={} failures={}", tally.instances, tally.checks, tally.failures.len());
            Ok(tally.failures.is_empty())
        }
        Command::Show { builtin } => {
            let b: Builtin = builtin.parse()?;
            let g = b.graph()?;
            print!("{}", write_graph(&g));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
