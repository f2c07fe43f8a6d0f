//! Command-line front end for the `colourful` crate.
//!
//! Exit codes: 0 success / yes, 1 no, 2 unknown, 64 usage, 65 bad data,
//! 66 missing input, 74 i/o failure. `-` reads the graph from stdin. Every
//! random operation takes `--seed`, default 0.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use colourful::census::{self, CensusOptions};
use colourful::constructions::{self, ConstructionParams};
use colourful::format::{parse_cgf, to_cgf, to_dot};
use colourful::genus::embedded_residues;
use colourful::topology::{self, Certificate, Status, TopologyVerdict};
use colourful::{kappa_table, residues, ColourSet, ColourfulGraph};

const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NOINPUT: u8 = 66;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "colourful", version, about = "Coloured triangulations as colourful graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// CGF file, or `-` for stdin.
    file: PathBuf,
}

#[derive(Args)]
struct Verdict {
    #[command(flatten)]
    input: Input,
    /// Print the certificate backing the verdict.
    #[arg(long)]
    certificate: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph and report its size and connectivity.
    Validate(Input),
    /// List the components of G_I.
    Residues {
        #[command(flatten)]
        input: Input,
        /// Colour set, e.g. `1,2,3`.
        #[arg(long)]
        colours: ColourSet,
    },
    /// Component counts for every nonempty colour set.
    Kappa(Input),
    /// Genus of every 3-coloured residue.
    Genus(Input),
    CheckManifold(Verdict),
    CheckSphere(Verdict),
    /// Rational Betti numbers of X(G), or of each residue of G_I.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        colours: Option<ColourSet>,
    },
    /// Melonic reduction trace.
    Reduce(Input),
    /// Build G(sigma, tau), printed as CGF.
    Gen {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Images sigma(1), ..., sigma(k), comma separated.
        #[arg(long, requires = "tau", conflicts_with = "random_perms")]
        sigma: Option<String>,
        #[arg(long, requires = "sigma")]
        tau: Option<String>,
        #[arg(long)]
        random_perms: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Add the vertical colours 5..=D2+1 (needs d = 3).
        #[arg(long)]
        planar_extend: Option<usize>,
    },
    /// Uniform random colourful graph.
    Random {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate and classify every graph with n vertices.
    Census {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        emit_graphs: Option<PathBuf>,
        #[arg(long, default_value_t = census::DEFAULT_BUDGET)]
        budget: u128,
        /// Print `class,count` rows instead of the table.
        #[arg(long)]
        csv: bool,
    },
    /// Check the pair inequalities on every graph with n vertices.
    VerifyLemmas {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = census::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Count planar third-colour extensions of a 2-coloured graph.
    BoundCheck {
        #[arg(long)]
        cgf2: PathBuf,
    },
    /// Vertex counts of X(G(sigma, tau)) for k = 1..=kmax.
    StatsVn {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Explicit k values, overriding 1..=kmax.
        #[arg(long, value_delimiter = ',')]
        ks: Option<Vec<usize>>,
    },
    /// Graphviz DOT rendering.
    ExportDot(Input),
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }

    fn data(message: impl ToString) -> Self {
        Failure::new(EXIT_DATA, message)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    if io::stdout().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(EXIT_IO);
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(EXIT_IO, format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == io::ErrorKind::NotFound {
            EXIT_NOINPUT
        } else {
            EXIT_IO
        };
        Failure::new(code, format!("{}: {e}", path.display()))
    })
}

fn load(path: &PathBuf) -> Result<ColourfulGraph, Failure> {
    let text = read_text(path)?;
    parse_cgf(&text).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn exit_for(status: Status) -> u8 {
    match status {
        Status::Yes => 0,
        Status::No => EXIT_NO,
        Status::Unknown => EXIT_UNKNOWN,
    }
}

fn parse_perm(s: &str, k: usize) -> Result<Vec<usize>, Failure> {
    let p: Vec<usize> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::new(EXIT_USAGE, format!("bad permutation entry `{t}`"))))
        .collect::<Result<_, _>>()?;
    if p.len() != k {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("permutation `{s}` has {} entries, expected {k}", p.len()),
        ));
    }
    Ok(p)
}

fn print_verdict(out: &mut String, what: &str, scope: &str, v: &TopologyVerdict, certificate: bool) {
    out.push_str(&format!("{what}: {} ({scope})\n", v.status));
    if certificate {
        out.push_str(&format!("certificate: {}\n", v.certificate));
    }
}

fn run(cmd: Command, out: &mut String) -> Outcome {
    match cmd {
        Command::Validate(i) => {
            let g = load(&i.file)?;
            let comps = g.component_count(g.colours());
            out.push_str(&format!(
                "valid: d={} n={} colours={}\nconnected: {}\ncomponents: {comps}\n",
                g.d(),
                g.n(),
                g.colour_count(),
                comps == 1
            ));
            Ok(0)
        }
        Command::Residues { input, colours } => {
            let g = load(&input.file)?;
            let p = residues(&g, colours).map_err(Failure::data)?;
            out.push_str(&format!("colours: {colours}\nkappa: {}\n", p.len()));
            for (i, comp) in p.components().iter().enumerate() {
                let names: Vec<String> = comp.iter().map(|&v| g.vertex_name(v)).collect();
                out.push_str(&format!("{}: {}\n", i + 1, names.join(" ")));
            }
            Ok(0)
        }
        Command::Kappa(i) => {
            let g = load(&i.file)?;
            let t = kappa_table(&g);
            out.push_str("colours,kappa\n");
            for r in 1..=g.colour_count() {
                for j in g.colours().subsets_of_size(r) {
                    out.push_str(&format!("\"{j}\",{}\n", t.get(j)));
                }
            }
            Ok(0)
        }
        Command::Genus(i) => {
            let g = load(&i.file)?;
            out.push_str("colours,vertex,vertices,edges,faces,genus\n");
            let mut planar = true;
            for j in g.colours().subsets_of_size(3) {
                for r in embedded_residues(&g, j).map_err(Failure::data)? {
                    planar &= r.genus == 0;
                    out.push_str(&format!(
                        "\"{j}\",{},{},{},{},{}\n",
                        g.vertex_name(r.min_vertex()),
                        r.vertices,
                        r.edges,
                        r.faces,
                        r.genus
                    ));
                }
            }
            out.push_str(&format!("property P: {}\n", if planar { "yes" } else { "no" }));
            Ok(0)
        }
        Command::CheckManifold(v) => {
            let g = load(&v.input.file)?;
            let verdict = topology::is_manifold(&g);
            let scope = if g.d() <= 3 {
                format!("d={} exact", g.d())
            } else {
                format!("d={} partial", g.d())
            };
            print_verdict(out, "manifold", &scope, &verdict, v.certificate);
            Ok(exit_for(verdict.status))
        }
        Command::CheckSphere(v) => {
            let g = load(&v.input.file)?;
            let scope = if g.d() <= 2 {
                format!("d={} exact", g.d())
            } else {
                format!("d={} partial", g.d())
            };
            let verdict = match topology::is_sphere(&g) {
                Ok(v) => v,
                Err(topology::TopologyError::Disconnected) => TopologyVerdict::no(Certificate::Disconnected {
                    components: g.component_count(g.colours()),
                }),
                Err(e) => return Err(Failure::data(e)),
            };
            print_verdict(out, "sphere", &scope, &verdict, v.certificate);
            Ok(exit_for(verdict.status))
        }
        Command::Betti { input, colours } => {
            let g = load(&input.file)?;
            match colours {
                None => {
                    let b = topology::betti_fast(&g, g.colours());
                    out.push_str(&format!("betti: {b}\n"));
                }
                Some(c) => {
                    let p = residues(&g, c).map_err(Failure::data)?;
                    for comp in p.components() {
                        let b = if c.len() == 1 {
                            topology::BettiVector::sphere(0)
                        } else {
                            let h = g.residue_graph(c, comp).map_err(Failure::data)?;
                            topology::betti_fast(&h, h.colours())
                        };
                        out.push_str(&format!("{c} {}: {b}\n", g.vertex_name(comp[0])));
                    }
                }
            }
            Ok(0)
        }
        Command::Reduce(i) => {
            let g = load(&i.file)?;
            let trace = match topology::find_melonic_trace(&g).map_err(Failure::data)? {
                Some(t) => t,
                None => topology::melonic_reduce(&g).map_err(Failure::data)?,
            };
            out.push_str(&format!(
                "moves: {}\ntrace: {}\nreached dipole: {}\nterminal vertices: {}\n",
                trace.moves.len(),
                trace.certificate(),
                trace.reached_dipole,
                trace.terminal.n()
            ));
            Ok(0)
        }
        Command::Gen {
            d,
            k,
            sigma,
            tau,
            random_perms,
            seed,
            planar_extend,
        } => {
            let params = match (sigma, tau) {
                (Some(s), Some(t)) => ConstructionParams {
                    d,
                    k,
                    sigma: parse_perm(&s, k)?,
                    tau: parse_perm(&t, k)?,
                },
                _ if random_perms => {
                    let mut rng = constructions::rng_from_seed(seed);
                    constructions::random_params(d, k, &mut rng)
                }
                _ => ConstructionParams::identity(d, k),
            };
            let mut g = constructions::build_manifold(&params).map_err(|e| Failure::new(EXIT_USAGE, e))?;
            if let Some(d2) = planar_extend {
                g = constructions::build_planar_family(&g, d2).map_err(|e| Failure::new(EXIT_USAGE, e))?;
            }
            let show = |p: &[usize]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            out.push_str(&format!(
                "# G(sigma, tau) d={d} k={k} sigma={} tau={}\n",
                show(&params.sigma),
                show(&params.tau)
            ));
            out.push_str(&to_cgf(&g));
            Ok(0)
        }
        Command::Random { d, n, seed } => {
            let g = constructions::random_graph(d, n, seed).map_err(|e| Failure::new(EXIT_USAGE, e))?;
            out.push_str(&to_cgf(&g));
            Ok(0)
        }
        Command::Census {
            d,
            n,
            emit_graphs,
            budget,
            csv,
        } => {
            eprintln!("enumerating {} tuples", census::tuple_count(d, n));
            let opts = CensusOptions {
                budget,
                emit_dir: emit_graphs,
            };
            let r = census::enumerate(d, n, &census::classify, &opts).map_err(census_failure)?;
            out.push_str(&if csv { r.rows() } else { r.table() });
            Ok(0)
        }
        Command::VerifyLemmas { d, n, budget } => {
            let r = census::verify_lemma_bounds(d, n, budget).map_err(census_failure)?;
            out.push_str(&format!("graphs: {}\n", r.graphs));
            for (name, c) in [
                ("pair bound n/6", &r.lemma1),
                ("triple bound 3n/20", &r.lemma2),
                ("planar residue identity", &r.euler_poincare),
            ] {
                out.push_str(&format!("{name}: checked {} violations {}", c.checked, c.violations));
                if let Some(e) = &c.extremal {
                    let cols: Vec<String> = e.colours.iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!(
                        " min slack {} (graph {}, colours {})",
                        e.slack,
                        e.index,
                        cols.join(",")
                    ));
                }
                out.push('\n');
            }
            Ok(if r.violations() == 0 { 0 } else { EXIT_NO })
        }
        Command::BoundCheck { cgf2 } => {
            let c = load(&cgf2)?;
            let r = census::verify_extension_bound(&c).map_err(census_failure)?;
            out.push_str(&format!(
                "n: {}\nc: {}\nnonplanar: {}\nk,count,bound\n",
                r.n, r.c, r.nonplanar
            ));
            for b in &r.buckets {
                out.push_str(&format!("{},{},{}\n", b.k, b.count, b.bound));
            }
            out.push_str(&format!("violations: {}\n", r.violations));
            Ok(if r.violations == 0 { 0 } else { EXIT_NO })
        }
        Command::StatsVn {
            kmax,
            samples,
            seed,
            d,
            ks,
        } => {
            if d < 3 || samples == 0 {
                return Err(Failure::new(EXIT_USAGE, "need d >= 3 and samples >= 1"));
            }
            let ks = ks.unwrap_or_else(|| (1..=kmax).collect());
            let r = census::vn_experiment(d, &ks, samples, seed);
            out.push_str(&r.rows_csv());
            Ok(0)
        }
        Command::ExportDot(i) => {
            let g = load(&i.file)?;
            out.push_str(&to_dot(&g));
            Ok(0)
        }
    }
}

fn census_failure(e: census::CensusError) -> Failure {
    match e {
        census::CensusError::Io(m) => Failure::new(EXIT_IO, m),
        census::CensusError::NotTwoColoured(_) => Failure::data(e),
        _ => Failure::new(EXIT_USAGE, e),
    }
}
