use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use winmp::boolean::solve;
use winmp::check::{check, Family};
use winmp::io::{export_dot, fixture, load_game, load_strategy, write_strategy, NamedGame};
use winmp::objective::parse_objective;
use winmp::oracle::{random_game, RandomGameParams};
use winmp::reductions::DEFAULT_NODE_BUDGET;
use winmp::strategy::{certify, evaluate, play_out, CertifyConfig};
use winmp::{Error, Player, VertexSet};

#[derive(Parser)]
#[command(name = "winmp", version, about = "Window mean-payoff games: solve, extract strategies, simulate, cross-check")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Who {
    P1,
    P2,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print both winning regions and the solving route.
    Solve {
        /// Game file, or the name of a bundled example (fig1 .. fig8).
        game: String,
        #[arg(long)]
        obj: String,
        /// Comma separated vertices to report on.
        #[arg(long)]
        from: Option<String>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
        /// Also write the regions as Graphviz.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Print a winning Moore machine.
    Strategy {
        game: String,
        #[arg(long)]
        obj: String,
        #[arg(long, value_enum, default_value = "p1")]
        player: Who,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        dot: Option<String>,
    },
    /// Play two strategy files against each other and print the lasso.
    Simulate {
        game: String,
        #[arg(long)]
        s1: String,
        #[arg(long)]
        s2: String,
        #[arg(long)]
        from: String,
        /// Evaluate the play against this objective.
        #[arg(long)]
        obj: Option<String>,
    },
    /// Compare solver families with the oracle on seeded random games.
    OracleCheck {
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        /// Family name, or `all`.
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = 0)]
        start: u64,
        /// Also certify strategies against enumerated and sampled opponents.
        #[arg(long)]
        certify: bool,
    },
    /// Time the single window solver over a grid and print CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "2,4,8,16")]
        lambdas: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2.0)]
        degree: f64,
        #[arg(long, default_value_t = 5)]
        max_weight: i64,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Fail {
    Usage(String),
    Lib(Error),
    Divergence(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

fn game_arg(s: &str) -> Result<NamedGame, Fail> {
    if Path::new(s).exists() {
        return Ok(load_game(s)?);
    }
    fixture(s).ok_or_else(|| Fail::Usage(format!("no such game file or bundled example: {s}")))
}

fn vertices(g: &NamedGame, list: &str) -> Result<Vec<usize>, Fail> {
    g.vertex_list(list).map_err(|_| Fail::Usage(format!("unknown vertex in '{list}'")))
}

fn names(g: &NamedGame, s: &VertexSet) -> String {
    let v: Vec<&str> = s.iter_ones().map(|v| g.names[v].as_str()).collect();
    format!("{{{}}}", v.join(", "))
}

fn write_out(path: &str, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| Fail::Lib(e.into()))
}

fn run(cmd: Cmd) -> Result<(), Fail> {
    match cmd {
        Cmd::Solve { game, obj, from, budget, dot } => {
            let g = game_arg(&game)?;
            let expr = parse_objective(&obj, g.game.dim())?;
            let d = solve(&g.game, &expr, budget)?;
            let r = &d.solution.regions;
            println!("route: {}", d.report);
            println!("W1: {}", names(&g, &r.w1));
            println!("W2: {}", names(&g, &r.w2));
            if let Some(list) = from {
                for v in vertices(&g, &list)? {
                    println!("{}: WIN {}", g.names[v], r.winner(v));
                }
            }
            if let Some(path) = dot {
                write_out(&path, &export_dot(&g, Some(r), None))?;
            }
        }
        Cmd::Strategy { game, obj, player, budget, out, dot } => {
            let g = game_arg(&game)?;
            let expr = parse_objective(&obj, g.game.dim())?;
            let d = solve(&g.game, &expr, budget)?;
            let p = match player {
                Who::P1 => Player::P1,
                Who::P2 => Player::P2,
            };
            let s = d.solution.strategy(p);
            let text = write_strategy(&g, s);
            match out {
                Some(path) => write_out(&path, &text)?,
                None => print!("{text}"),
            }
            if let Some(path) = dot {
                write_out(&path, &export_dot(&g, Some(&d.solution.regions), Some(s)))?;
            }
        }
        Cmd::Simulate { game, s1, s2, from, obj } => {
            let g = game_arg(&game)?;
            let m1 = load_strategy(&s1, &g)?;
            let m2 = load_strategy(&s2, &g)?;
            if m1.owner != Player::P1 || m2.owner != Player::P2 {
                return Err(Fail::Usage("--s1 must be a P1 strategy and --s2 a P2 strategy".into()));
            }
            let v = match vertices(&g, &from)?.as_slice() {
                [v] => *v,
                _ => return Err(Fail::Usage("--from takes exactly one vertex".into())),
            };
            let lasso = play_out(&g.game, v, &m1, &m2);
            let seq = |vs: Vec<usize>| vs.iter().map(|&v| g.names[v].as_str()).collect::<Vec<_>>().join(" ");
            println!("stem: {}", seq(lasso.stem_vertices(&g.game)));
            println!("period: {}", seq(lasso.period_vertices(&g.game)));
            if let Some(o) = obj {
                let expr = parse_objective(&o, g.game.dim())?;
                let verdict = evaluate(&g.game, &lasso, &expr);
                for ((a, ok), bad) in expr.atoms().iter().zip(&verdict.atoms).zip(&verdict.bad_windows) {
                    match bad {
                        Some(k) => println!("{a}: {ok} (bad window at position {k})"),
                        None => println!("{a}: {ok}"),
                    }
                }
                println!("objective: {}", verdict.overall);
            }
        }
        Cmd::OracleCheck { seeds, family, start, certify: cert } => {
            let families: Vec<Family> = if family == "all" {
                Family::ALL.to_vec()
            } else {
                vec![Family::from_name(&family).ok_or_else(|| Fail::Usage(format!("unknown family '{family}'")))?]
            };
            let mut diverged = Vec::new();
            for f in families {
                let mut bad = 0;
                let mut cex = 0;
                for seed in start..start + seeds {
                    let c = check(f, seed, DEFAULT_NODE_BUDGET)?;
                    if !c.agrees() {
                        bad += 1;
                        diverged.push(format!("{f} seed {seed}"));
                    }
                    if cert && c.game.num_vertices() <= 5 {
                        let cfg = CertifyConfig { samples: 200, seed, ..CertifyConfig::default() };
                        if !certify(&c.game, &c.solution, c.target.goal(), &cfg)?.is_ok() {
                            cex += 1;
                            diverged.push(format!("{f} seed {seed} (strategy)"));
                        }
                    }
                }
                println!("{f}: {seeds} instances, {bad} divergent, {cex} uncertified");
            }
            if !diverged.is_empty() {
                return Err(Fail::Divergence(diverged.join(", ")));
            }
        }
        Cmd::Bench { lambdas, sizes, degree, max_weight, reps, seed } => {
            println!("vertices,edges,lambda,max_weight,seconds");
            for &n in &sizes {
                let p = RandomGameParams { vertices: n, avg_degree: degree, dim: 1, max_weight, p2_fraction: 0.5 };
                let g = random_game(seed ^ n as u64, &p);
                for &l in &lambdas {
                    let t = Instant::now();
                    for _ in 0..reps.max(1) {
                        std::hint::black_box(winmp::window::wmp_single_region(&g, l));
                    }
                    let secs = t.elapsed().as_secs_f64() / reps.max(1) as f64;
                    println!("{n},{},{l},{},{secs:.6}", g.num_edges(), g.max_weight());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Fail::Usage(m) => (1, m),
                Fail::Divergence(m) => (4, format!("oracle divergence: {m}")),
                Fail::Lib(e) => {
                    let code = match e {
                        Error::ProductTooLarge { .. } | Error::BudgetExceeded(_) => 3,
                        Error::ParseError { .. } | Error::SyntaxError { .. } | Error::BadWindow(_) | Error::BadDimension(_) => 2,
                        Error::IoError(_) => 2,
                        _ => 1,
                    };
                    (code, e.to_string())
                }
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
