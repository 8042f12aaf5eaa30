//! Command-line interface for the arfsemi toolkit.
//!
//! Every command takes the semigroup either as `--gens a,b,c` (a generating
//! set) or as `--small 0,a,b,…` (the small elements). Results go to stdout,
//! diagnostics to stderr. Exit codes: 0 on success, 1 on a domain error
//! (including `--verify` mismatches), 2 on a usage or parse error.

use std::process::ExitCode;

use arfsemi::oracle::{
    brute_arf_closure, brute_arf_oversemigroups, brute_arf_special_gaps, brute_is_arf,
    brute_is_semigroup, brute_minimal_arf_generators,
};
use arfsemi::{
    arf_closure, arf_irreducible_oversemigroups_with_cap, chain_between,
    decompose_arf_irreducible_with_cap, over_graph_with_cap, NumericalSemigroup, OverGraph,
    DEFAULT_GENUS_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Environment variable overriding the enumeration genus cap.
const GENUS_CAP_VAR: &str = "ARFSEMI_GENUS_CAP";

#[derive(Parser)]
#[command(
    name = "arfsemi",
    version,
    about = "Numerical semigroup toolkit centered on the Arf property"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity, embedding dimension, Frobenius number, conductor,
    /// genus, minimal generators and the basic predicates.
    Info(CommonArgs),
    /// Gaps whose adjunction yields a numerical semigroup.
    SpecialGaps(VerifiableArgs),
    /// Gaps whose adjunction yields an Arf numerical semigroup.
    ArfSpecialGaps(VerifiableArgs),
    /// Maximal gaps under the order induced by membership.
    PseudoFrobenius(CommonArgs),
    /// Least member of each residue class modulo a member.
    Apery(AperyArgs),
    /// Whether the semigroup is Arf.
    IsArf(VerifiableArgs),
    /// Whether the semigroup is Arf-irreducible.
    IsArfIrreducible(CommonArgs),
    /// Whether the semigroup is irreducible (symmetric or pseudo-symmetric).
    IsIrreducible(CommonArgs),
    /// Whether the semigroup is a leaf of the tree of Arf semigroups.
    IsLeaf(CommonArgs),
    /// Smallest Arf numerical semigroup containing the generators.
    ArfClosure(ClosureArgs),
    /// Minimal Arf system of generators.
    MinArfGens(VerifiableArgs),
    /// All Arf oversemigroups; `--format dot` draws the adjunction graph.
    Over(VerifiableArgs),
    /// The Arf-irreducible oversemigroups.
    Qa(CommonArgs),
    /// Irredundant decomposition into Arf-irreducible oversemigroups.
    Decompose(CommonArgs),
    /// Chain of Arf semigroups from the input up to `--to`, adjoining the
    /// largest missing element at each step.
    Chain(ChainArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Generators, comma separated (e.g. 6,9,11,13,14,16).
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    gens: Option<String>,
    /// Small elements starting with 0, comma separated (e.g. 0,6,9,11).
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    small: Option<String>,
}

#[derive(Args)]
struct CommonArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifiableArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Recompute with the brute-force oracle and fail on any mismatch.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct AperyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// The modulus; must be a positive member of the semigroup.
    #[arg(long = "mod", value_name = "H")]
    modulus: u64,
}

#[derive(Args)]
struct ClosureArgs {
    /// Generators, comma separated.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    gens: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Recompute with the brute-force oracle and fail on any mismatch.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct ChainArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Target semigroup, as `gens:a,b,c` or `small:0,a,b`.
    #[arg(long, value_name = "SPEC")]
    to: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

enum CliError {
    Usage(String),
    Domain(String),
    Verify {
        command: &'static str,
        fast: String,
        oracle: String,
    },
}

impl From<arfsemi::Error> for CliError {
    fn from(e: arfsemi::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("arfsemi: {msg}");
                ExitCode::from(2)
            }
            CliError::Domain(msg) => {
                eprintln!("arfsemi: {msg}");
                ExitCode::from(1)
            }
            CliError::Verify {
                command,
                fast,
                oracle,
            } => {
                eprintln!("arfsemi: verification mismatch in `{command}`");
                eprintln!("  fast:   {fast}");
                eprintln!("  oracle: {oracle}");
                ExitCode::from(1)
            }
        }
    }
}

#[derive(Serialize)]
struct SemigroupJson {
    small: Vec<u64>,
    min_gens: Vec<u64>,
    frobenius: i64,
    genus: u64,
}

impl SemigroupJson {
    fn of(h: &NumericalSemigroup) -> Self {
        SemigroupJson {
            small: h.small_elements().to_vec(),
            min_gens: h.minimal_generators(),
            frobenius: h.frobenius(),
            genus: h.genus(),
        }
    }
}

#[derive(Serialize)]
struct InfoJson {
    small: Vec<u64>,
    min_gens: Vec<u64>,
    multiplicity: u64,
    embedding_dimension: usize,
    frobenius: i64,
    conductor: u64,
    genus: u64,
    is_arf: bool,
    is_symmetric: bool,
    is_pseudo_symmetric: bool,
}

#[derive(Serialize)]
struct AperyJson {
    modulus: u64,
    witnesses: Vec<u64>,
}

#[derive(Serialize)]
struct DecompositionJson {
    factors: Vec<SemigroupJson>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => e.report(),
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Info(args) => {
            let h = parse_input(&args.input)?;
            render_info(&h, text_or_json(args.format, "info")?)
        }
        Command::SpecialGaps(args) => {
            let h = parse_input(&args.common.input)?;
            let gaps = h.special_gaps();
            if args.verify {
                let oracle: Vec<u64> = h
                    .gaps()
                    .into_iter()
                    .filter(|&x| {
                        let mut cand = h.small_elements().to_vec();
                        cand.push(x);
                        cand.sort_unstable();
                        brute_is_semigroup(&cand)
                    })
                    .collect();
                check_verified("special-gaps", &gaps, &oracle)?;
            }
            render_ints(&gaps, text_or_json(args.common.format, "special-gaps")?)
        }
        Command::ArfSpecialGaps(args) => {
            let h = parse_input(&args.common.input)?;
            let gaps = h.arf_special_gaps()?;
            if args.verify {
                check_verified("arf-special-gaps", &gaps, &brute_arf_special_gaps(&h))?;
            }
            render_ints(&gaps, text_or_json(args.common.format, "arf-special-gaps")?)
        }
        Command::PseudoFrobenius(args) => {
            let h = parse_input(&args.input)?;
            render_ints(
                &h.pseudo_frobenius(),
                text_or_json(args.format, "pseudo-frobenius")?,
            )
        }
        Command::Apery(args) => {
            let h = parse_input(&args.common.input)?;
            let ap = h.apery_set(args.modulus)?;
            match text_or_json(args.common.format, "apery")? {
                Format::Json => Ok(json_line(&AperyJson {
                    modulus: ap.modulus,
                    witnesses: ap.witnesses,
                })),
                _ => Ok(int_line(&ap.witnesses)),
            }
        }
        Command::IsArf(args) => {
            let h = parse_input(&args.common.input)?;
            let fast = h.is_arf();
            if args.verify {
                check_verified("is-arf", &fast, &brute_is_arf(h.small_elements()))?;
            }
            render_bool(fast, text_or_json(args.common.format, "is-arf")?)
        }
        Command::IsArfIrreducible(args) => {
            let h = parse_input(&args.input)?;
            render_bool(
                h.is_arf_irreducible()?,
                text_or_json(args.format, "is-arf-irreducible")?,
            )
        }
        Command::IsIrreducible(args) => {
            let h = parse_input(&args.input)?;
            render_bool(
                h.is_irreducible(),
                text_or_json(args.format, "is-irreducible")?,
            )
        }
        Command::IsLeaf(args) => {
            let h = parse_input(&args.input)?;
            render_bool(h.is_leaf()?, text_or_json(args.format, "is-leaf")?)
        }
        Command::ArfClosure(args) => {
            let gens = parse_list(&args.gens, "generator")?;
            let closed = arf_closure(&gens)?;
            if args.verify {
                let oracle = brute_arf_closure(&gens)?;
                check_verified("arf-closure", &closed, &oracle)?;
            }
            render_semigroup(&closed, text_or_json(args.format, "arf-closure")?)
        }
        Command::MinArfGens(args) => {
            let h = parse_input(&args.common.input)?;
            let gens = h.minimal_arf_generators()?;
            if args.verify {
                check_verified("min-arf-gens", &gens, &brute_minimal_arf_generators(&h))?;
            }
            render_ints(&gens, text_or_json(args.common.format, "min-arf-gens")?)
        }
        Command::Over(args) => {
            let h = parse_input(&args.common.input)?;
            let graph = over_graph_with_cap(&h, genus_cap()?)?;
            if args.verify {
                let oracle = brute_arf_oversemigroups(&h)?;
                check_verified("over", &graph.nodes, &oracle)?;
            }
            match args.common.format {
                Format::Dot => Ok(render_dot(&graph)),
                Format::Json => Ok(json_line(
                    &graph.nodes.iter().map(SemigroupJson::of).collect::<Vec<_>>(),
                )),
                Format::Text => Ok(semigroup_lines(&graph.nodes)),
            }
        }
        Command::Qa(args) => {
            let h = parse_input(&args.input)?;
            let qa = arf_irreducible_oversemigroups_with_cap(&h, genus_cap()?)?;
            render_semigroup_list(&qa, text_or_json(args.format, "qa")?)
        }
        Command::Decompose(args) => {
            let h = parse_input(&args.input)?;
            let dec = decompose_arf_irreducible_with_cap(&h, genus_cap()?)?;
            match text_or_json(args.format, "decompose")? {
                Format::Json => Ok(json_line(&DecompositionJson {
                    factors: dec.factors.iter().map(SemigroupJson::of).collect(),
                })),
                _ => Ok(semigroup_lines(&dec.factors)),
            }
        }
        Command::Chain(args) => {
            let lower = parse_input(&args.common.input)?;
            let upper = parse_target(&args.to)?;
            let chain = chain_between(&lower, &upper)?;
            render_semigroup_list(&chain, text_or_json(args.common.format, "chain")?)
        }
    }
}

fn parse_list(s: &str, what: &str) -> Result<Vec<u64>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let n: i64 = tok
                .parse()
                .map_err(|_| CliError::Usage(format!("cannot parse `{tok}` as an integer")))?;
            if n < 0 {
                return Err(CliError::Domain(format!(
                    "{what} entries must be non-negative, got {n}"
                )));
            }
            Ok(n as u64)
        })
        .collect()
}

fn parse_input(input: &InputArgs) -> Result<NumericalSemigroup, CliError> {
    match (&input.gens, &input.small) {
        (Some(gens), None) => {
            let list = parse_list(gens, "generator")?;
            Ok(NumericalSemigroup::from_generators(&list)?)
        }
        (None, Some(small)) => {
            let list = parse_list(small, "small-element")?;
            Ok(NumericalSemigroup::from_small_elements(&list)?)
        }
        _ => unreachable!("clap enforces exactly one input form"),
    }
}

fn parse_target(spec: &str) -> Result<NumericalSemigroup, CliError> {
    if let Some(rest) = spec.strip_prefix("gens:") {
        let list = parse_list(rest, "generator")?;
        Ok(NumericalSemigroup::from_generators(&list)?)
    } else if let Some(rest) = spec.strip_prefix("small:") {
        let list = parse_list(rest, "small-element")?;
        Ok(NumericalSemigroup::from_small_elements(&list)?)
    } else {
        Err(CliError::Usage(format!(
            "target must look like `gens:a,b,c` or `small:0,a,b`, got `{spec}`"
        )))
    }
}

fn genus_cap() -> Result<u64, CliError> {
    match std::env::var(GENUS_CAP_VAR) {
        Ok(value) => value.parse().map_err(|_| {
            CliError::Usage(format!(
                "{GENUS_CAP_VAR} must be an unsigned integer, got `{value}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_GENUS_CAP),
    }
}

fn text_or_json(format: Format, command: &'static str) -> Result<Format, CliError> {
    if format == Format::Dot && command != "over" {
        return Err(CliError::Usage(format!(
            "dot output is only available for `over`, not `{command}`"
        )));
    }
    Ok(format)
}

fn check_verified<T: PartialEq + std::fmt::Debug>(
    command: &'static str,
    fast: &T,
    oracle: &T,
) -> Result<(), CliError> {
    if fast == oracle {
        Ok(())
    } else {
        Err(CliError::Verify {
            command,
            fast: format!("{fast:?}"),
            oracle: format!("{oracle:?}"),
        })
    }
}

fn int_line(values: &[u64]) -> String {
    let mut line = values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    line.push('\n');
    line
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("serializable output");
    line.push('\n');
    line
}

fn render_ints(values: &[u64], format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => json_line(&values),
        _ => int_line(values),
    })
}

fn render_bool(value: bool, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => json_line(&value),
        _ => format!("{value}\n"),
    })
}

fn render_semigroup(h: &NumericalSemigroup, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => json_line(&SemigroupJson::of(h)),
        _ => int_line(h.small_elements()),
    })
}

fn semigroup_lines(list: &[NumericalSemigroup]) -> String {
    list.iter().map(|h| int_line(h.small_elements())).collect()
}

fn render_semigroup_list(
    list: &[NumericalSemigroup],
    format: Format,
) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => json_line(&list.iter().map(SemigroupJson::of).collect::<Vec<_>>()),
        _ => semigroup_lines(list),
    })
}

fn render_info(h: &NumericalSemigroup, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json_line(&InfoJson {
            small: h.small_elements().to_vec(),
            min_gens: h.minimal_generators(),
            multiplicity: h.multiplicity(),
            embedding_dimension: h.embedding_dimension(),
            frobenius: h.frobenius(),
            conductor: h.conductor(),
            genus: h.genus(),
            is_arf: h.is_arf(),
            is_symmetric: h.is_symmetric(),
            is_pseudo_symmetric: h.is_pseudo_symmetric(),
        })),
        _ => {
            let mut out = String::new();
            out.push_str(&format!("small_elements: {}", int_line(h.small_elements())));
            out.push_str(&format!(
                "minimal_generators: {}",
                int_line(&h.minimal_generators())
            ));
            out.push_str(&format!("multiplicity: {}\n", h.multiplicity()));
            out.push_str(&format!(
                "embedding_dimension: {}\n",
                h.embedding_dimension()
            ));
            out.push_str(&format!("frobenius: {}\n", h.frobenius()));
            out.push_str(&format!("conductor: {}\n", h.conductor()));
            out.push_str(&format!("genus: {}\n", h.genus()));
            out.push_str(&format!("is_arf: {}\n", h.is_arf()));
            out.push_str(&format!("is_symmetric: {}\n", h.is_symmetric()));
            out.push_str(&format!(
                "is_pseudo_symmetric: {}\n",
                h.is_pseudo_symmetric()
            ));
            Ok(out)
        }
    }
}

fn render_dot(graph: &OverGraph) -> String {
    let mut out = String::from("digraph arf_oversemigroups {\n");
    for (i, node) in graph.nodes.iter().enumerate() {
        let label = node
            .minimal_generators()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for e in &graph.edges {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            e.from, e.to, e.gap
        ));
    }
    out.push_str("}\n");
    out
}
