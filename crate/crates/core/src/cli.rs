//! The `oinf` command-line front end.
//!
//! [`run`] parses an argument vector, runs one library operation and returns
//! the exit code with the text for standard output and standard error, so the
//! binary stays a thin wrapper and tests can drive the CLI in-process.
//!
//! Output is one JSON object per invocation (keys sorted), or tab-separated
//! lines with `--format tsv`. Errors go to standard error as
//! `{"error":{"kind":…,"message":…}}` with exit code 2 for usage errors and 3
//! for domain errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hecke::{kl_poly, kl_poly_slow, mu_coeff, KLPoly, KlEngine, Perm};
use crate::mult::{
    ext_delta_simple_with_margin, ext_delta_verma, graded_ext_table_with_margin, hom_delta_nabla, hom_dim_verma,
    verma_mult_with_margin,
};
use crate::oracle::{self, ModuleKind};
use crate::ringel::{ringel_weight, semiinfinite_check, tilting_flag, CoidealSpec};
use crate::trunc::{cartan_matrix, idempotent_truncation_check, projective_flag, window_slice};
use crate::weights::{ideal_contains, ideal_slice, interval, leq, IdealSpec, IndexScheme, Weight};
use crate::weyl::{
    bruhat_covers, bruhat_leq, classify, cover_count_invariant, cover_count_stable, dot, dot_zero, min_rank,
    same_block, IndexWindow, WeylElt,
};

/// Subcommand paths and the library operation each one runs.
pub const COMMANDS: &[(&str, &str)] = &[
    ("leq", "leq"),
    ("interval", "interval"),
    ("ideal", "ideal_contains"),
    ("slice", "ideal_slice"),
    ("dot", "dot"),
    ("classify", "classify"),
    ("block", "same_block"),
    ("bruhat", "bruhat_leq"),
    ("covers", "bruhat_covers"),
    ("cover-count", "cover_count_invariant"),
    ("borel-distinguish", "cover_count_stable"),
    ("minrank", "min_rank"),
    ("kl", "kl_poly"),
    ("kl-slow", "kl_poly_slow"),
    ("mu", "mu_coeff"),
    ("mult", "verma_mult"),
    ("hom", "hom_dim_verma"),
    ("homdn", "hom_delta_nabla"),
    ("ext", "ext_delta_simple"),
    ("gext", "graded_ext_table"),
    ("extvv", "ext_delta_verma"),
    ("pflag", "projective_flag"),
    ("cartan", "cartan_matrix"),
    ("idemcheck", "idempotent_truncation_check"),
    ("ringel", "ringel_weight"),
    ("tilting", "tilting_flag"),
    ("semiinf", "semiinfinite_check"),
    ("oracle shapovalov", "shapovalov_rank"),
    ("oracle vermamult", "verma_mult_oracle"),
    ("oracle singvec", "singular_vector_dim"),
    ("oracle cohom", "nplus_cohomology"),
    ("oracle ext2", "ce_ext2_trivial"),
    ("oracle simplechar", "simple_character"),
    ("oracle vermachar", "verma_character"),
    ("oracle kostant", "kostant_partition_count"),
];

/// The public library operations that the CLI must expose.
pub const LIBRARY_OPERATIONS: &[&str] = &[
    "leq",
    "interval",
    "ideal_contains",
    "ideal_slice",
    "dot",
    "classify",
    "same_block",
    "bruhat_leq",
    "bruhat_covers",
    "cover_count_invariant",
    "cover_count_stable",
    "min_rank",
    "kl_poly",
    "kl_poly_slow",
    "mu_coeff",
    "verma_mult",
    "hom_dim_verma",
    "hom_delta_nabla",
    "ext_delta_simple",
    "graded_ext_table",
    "ext_delta_verma",
    "projective_flag",
    "cartan_matrix",
    "idempotent_truncation_check",
    "ringel_weight",
    "tilting_flag",
    "semiinfinite_check",
    "shapovalov_rank",
    "verma_mult_oracle",
    "singular_vector_dim",
    "nplus_cohomology",
    "ce_ext2_trivial",
    "simple_character",
    "verma_character",
    "kostant_partition_count",
];

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleArg {
    Simple,
    Verma,
    Dual,
}

#[derive(Debug, Parser)]
#[command(name = "oinf", version, about = "Category O for Dynkin Borels of gl(n) and gl(infinity)")]
pub struct Cli {
    /// Index scheme for `w:` literals and words: fin<n>, nat or int.
    #[arg(long, global = true, default_value = "nat", value_parser = parse_scheme)]
    scheme: IndexScheme,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// KL cache file, loaded before and appended to after the command.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Extra positions added to the reduction window.
    #[arg(long, global = true, default_value_t = 0)]
    rank_margin: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct MuLam {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    lam: String,
}

#[derive(Debug, Args)]
struct Pair {
    /// One-line notation, 1-based, e.g. [2,1,3].
    #[arg(long)]
    x: String,
    #[arg(long)]
    w: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// μ ≤ λ.
    Leq(MuLam),
    /// All κ with μ ≤ κ ≤ λ.
    Interval(MuLam),
    /// Membership of μ in the ideal generated by the --gen weights.
    Ideal {
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long)]
        mu: String,
    },
    /// Ideal ∩ block of --block, above --floor.
    Slice {
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long)]
        block: String,
        #[arg(long)]
        floor: String,
    },
    /// w·λ.
    Dot {
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "w:e")]
        lam: String,
    },
    /// Regularity, dominance and antidominance of λ.
    Classify {
        #[arg(long)]
        lam: String,
    },
    /// Whether λ and μ lie in one block.
    Block {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
    },
    /// μ ↑ λ in the Bruhat order of the block.
    Bruhat(MuLam),
    /// Bruhat covers of λ inside a window `lo..hi`.
    Covers {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        window: String,
    },
    /// c(coatom) inside a window.
    CoverCount {
        #[arg(long)]
        coatom: String,
        #[arg(long)]
        window: String,
    },
    /// c-profiles of s_i·0 for both Borels, with window stability.
    BorelDistinguish {
        #[arg(long, default_value_t = 4)]
        upto: i64,
        /// First index tested for the ℤ-indexed Borel.
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
    },
    /// Smallest finite gl whose root lattice contains λ − μ.
    Minrank {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
    },
    /// P_{x,w} by the fast engine.
    Kl(Pair),
    /// P_{x,w} by the Hecke algebra oracle.
    KlSlow(Pair),
    /// μ(x,w), the coefficient of q^{(ℓ(w)−ℓ(x)−1)/2} in P_{x,w}.
    Mu(Pair),
    /// [Δ(λ):L(μ)].
    Mult {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
    },
    /// dim Hom(Δ(μ), Δ(λ)).
    Hom(MuLam),
    /// dim Hom(Δ(λ), ∇(μ)).
    Homdn {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
    },
    /// i ↦ dim Ext^i(Δ(μ), L(λ)).
    Ext(MuLam),
    /// (i,j) ↦ dim Ext^i(Δ(μ), L(λ)⟨j⟩).
    Gext(MuLam),
    /// i ↦ dim Ext^i(Δ(μ), Δ(λ)), reduction rank at most 3.
    Extvv(MuLam),
    /// Δ-flag of P_K(μ).
    Pflag {
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long)]
        mu: String,
    },
    /// Cartan matrix over --slice weights, or over the finite slice of
    /// --block on --window.
    Cartan {
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long = "slice")]
        slice: Vec<String>,
        #[arg(long, requires = "window", conflicts_with = "slice")]
        block: Option<String>,
        #[arg(long, requires = "block")]
        window: Option<String>,
    },
    /// Compares the Cartan matrices of the inner slice computed in the
    /// inner and outer windows.
    Idemcheck {
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
        #[arg(long)]
        block: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        outer: String,
    },
    /// −λ − 2ρ.
    Ringel {
        #[arg(long)]
        lam: String,
    },
    /// ∇-flag of T_C(ν) above --floor.
    Tilting {
        #[arg(long = "cogen", required = true)]
        cogenerators: Vec<String>,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        floor: String,
    },
    /// Semi-infinite character check; --character is 2rho, rho, zero or
    /// `i:v,...` on simple coroots.
    Semiinf {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "2rho")]
        character: String,
    },
    /// Finite-rank ground truth.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Rank of the Shapovalov form on Δ(λ)_ν.
    Shapovalov {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        nu: String,
    },
    /// [Δ(λ):L(μ)] from characters.
    Vermamult {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// dim Hom(Δ(μ), Δ(λ)) from singular vectors.
    Singvec {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        lam: String,
    },
    /// dim H^degree(n⁺, M)_μ.
    Cohom {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[arg(long, value_enum, default_value = "simple")]
        module: ModuleArg,
    },
    /// Weight-zero relative Ext² of the trivial module.
    Ext2 {
        #[arg(long)]
        n: usize,
    },
    /// ch L(λ) on [floor, λ].
    Simplechar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        floor: String,
    },
    /// ch Δ(λ) on [floor, λ].
    Vermachar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lam: String,
        #[arg(long)]
        floor: String,
    },
    /// Kostant partition count of Σ γ_k α_k, γ given as `c0,c1,...`.
    Kostant {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
}

fn parse_scheme(s: &str) -> std::result::Result<IndexScheme, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Splits a Weyl word into `s<i>` tokens; accepts `s0 s1`, `s0,s1` and `s0s1`.
fn word_tokens(word: &str) -> String {
    let mut out = String::new();
    for ch in word.chars() {
        match ch {
            ',' | '*' | '.' => out.push(' '),
            's' => out.push_str(" s"),
            c => out.push(c),
        }
    }
    out
}

/// A weight literal, or `w:<word>` for the dot action of the word on 0.
pub fn parse_weight(s: &str, scheme: IndexScheme) -> Result<Weight> {
    match s.trim().strip_prefix("w:") {
        Some(word) => {
            let word = word.trim();
            if word.is_empty() || word == "0" || word == "e" {
                return Ok(Weight::zero(scheme));
            }
            Ok(dot_zero(&WeylElt::parse_word(scheme, &word_tokens(word))?))
        }
        None => s.parse(),
    }
}

fn weights(lits: &[String], scheme: IndexScheme) -> Result<Vec<Weight>> {
    lits.iter().map(|s| parse_weight(s, scheme)).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn kl_json(p: &KLPoly) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(|c| Value::String(c.to_string())).collect();
    json!({ "coeffs": coeffs, "poly": p.to_string() })
}

fn degree_map<K: ToString>(m: impl IntoIterator<Item = (K, u64)>) -> Value {
    Value::Object(m.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect())
}

fn parse_character(n: usize, text: &str) -> Result<BTreeMap<usize, i64>> {
    let simple = n.saturating_sub(1);
    match text.trim() {
        "2rho" => Ok((0..simple).map(|i| (i, 2)).collect()),
        "rho" => Ok((0..simple).map(|i| (i, 1)).collect()),
        "zero" | "0" | "" => Ok(BTreeMap::new()),
        other => other
            .split(',')
            .map(|kv| {
                let (k, v) = kv
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("bad character entry `{kv}`")))?;
                let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad coroot index `{k}`")))?;
                let v = v.trim().parse().map_err(|_| Error::Parse(format!("bad character value `{v}`")))?;
                Ok((k, v))
            })
            .collect(),
    }
}

struct Rendered {
    json: Value,
    tsv: Option<String>,
}

impl From<Value> for Rendered {
    fn from(json: Value) -> Self {
        Rendered { json, tsv: None }
    }
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let scheme = cli.scheme;
    let margin = cli.rank_margin;
    let w = |s: &String| parse_weight(s, scheme);
    let out: Value = match &cli.command {
        Command::Leq(a) => json!({ "leq": leq(&w(&a.mu)?, &w(&a.lam)?)? }),
        Command::Interval(a) => json!({ "interval": strings(&interval(&w(&a.mu)?, &w(&a.lam)?)?) }),
        Command::Ideal { generators, mu } => {
            let k = IdealSpec::new(weights(generators, scheme)?)?;
            json!({ "ideal_contains": ideal_contains(&k, &w(mu)?)? })
        }
        Command::Slice { generators, block, floor } => {
            let k = IdealSpec::new(weights(generators, scheme)?)?;
            json!({ "slice": strings(&ideal_slice(&k, &w(block)?, &w(floor)?)?) })
        }
        Command::Dot { word, lam } => {
            let lam = w(lam)?;
            let elt = WeylElt::parse_word(lam.scheme(), &word_tokens(word))?;
            json!({ "dot": dot(&elt, &lam)?.to_string() })
        }
        Command::Classify { lam } => serde_json::to_value(classify(&w(lam)?)?).expect("plain record"),
        Command::Block { lam, mu } => {
            let (lam, mu) = (w(lam)?, w(mu)?);
            lam.check_scheme(&mu)?;
            json!({ "same_block": same_block(&lam, &mu) })
        }
        Command::Bruhat(a) => json!({ "bruhat_leq": bruhat_leq(&w(&a.mu)?, &w(&a.lam)?)? }),
        Command::Covers { lam, window } => {
            let window: IndexWindow = window.parse()?;
            json!({ "covers": strings(&bruhat_covers(&w(lam)?, window)?) })
        }
        Command::CoverCount { coatom, window } => {
            let c = w(coatom)?;
            json!({ "cover_count": cover_count_invariant(c.scheme(), &c, window.parse()?)? })
        }
        Command::BorelDistinguish { upto, from } => {
            let mut stable = true;
            let mut profile = |scheme: IndexScheme, lo: i64| -> Result<Value> {
                let mut m = Map::new();
                for i in lo..*upto {
                    let (c, s) = cover_count_stable(scheme, i)?;
                    stable &= s;
                    m.insert(format!("s{i}"), json!(c));
                }
                Ok(Value::Object(m))
            };
            let nat = profile(IndexScheme::Nat, 0)?;
            let int = profile(IndexScheme::Int, (*from).min(*upto))?;
            json!({ "nat": nat, "int": int, "stable": stable })
        }
        Command::Minrank { lam, mu } => {
            let win = min_rank(&w(lam)?, &w(mu)?)?;
            json!({ "min_rank": win.to_string(), "rank": win.len })
        }
        Command::Kl(p) => json!({ "kl": kl_json(&kl_poly(&p.x.parse()?, &p.w.parse()?)?) }),
        Command::KlSlow(p) => json!({ "kl_slow": kl_json(&kl_poly_slow(&p.x.parse()?, &p.w.parse()?)?) }),
        Command::Mu(p) => {
            let (x, wp): (Perm, Perm) = (p.x.parse()?, p.w.parse()?);
            json!({ "mu": mu_coeff(&x, &wp)?.to_string().parse::<u64>().map_err(|_| Error::Overflow)? })
        }
        Command::Mult { lam, mu } => json!({ "verma_mult": verma_mult_with_margin(&w(lam)?, &w(mu)?, margin)? }),
        Command::Hom(a) => json!({ "hom_dim_verma": hom_dim_verma(&w(&a.mu)?, &w(&a.lam)?)? }),
        Command::Homdn { lam, mu } => {
            let (lam, mu) = (w(lam)?, w(mu)?);
            lam.check_scheme(&mu)?;
            json!({ "hom_delta_nabla": hom_delta_nabla(&lam, &mu) })
        }
        Command::Ext(a) => {
            let v = ext_delta_simple_with_margin(&w(&a.mu)?, &w(&a.lam)?, margin)?;
            json!({ "ext": degree_map(v.dims) })
        }
        Command::Gext(a) => {
            let t = graded_ext_table_with_margin(&w(&a.mu)?, &w(&a.lam)?, margin)?;
            json!({ "gext": degree_map(t.cells.into_iter().map(|((i, j), d)| (format!("{i},{j}"), d))) })
        }
        Command::Extvv(a) => json!({ "ext_delta_verma": degree_map(ext_delta_verma(&w(&a.mu)?, &w(&a.lam)?)?) }),
        Command::Pflag { generators, mu } => {
            let k = IdealSpec::new(weights(generators, scheme)?)?;
            json!({ "projective_flag": projective_flag(&k, &w(mu)?)?.to_json() })
        }
        Command::Cartan { generators, slice, block, window } => {
            let k = IdealSpec::new(weights(generators, scheme)?)?;
            let slice = match (block, window) {
                (Some(b), Some(win)) => window_slice(&k, &w(b)?, win.parse()?)?,
                _ => weights(slice, scheme)?,
            };
            if slice.is_empty() {
                return Err(Error::Parse("cartan needs --slice weights or --block with --window".into()));
            }
            let c = cartan_matrix(&k, &slice)?;
            return Ok(Rendered { json: c.to_json(), tsv: Some(c.to_tsv()) });
        }
        Command::Idemcheck { generators, block, inner, outer } => {
            let k = IdealSpec::new(weights(generators, scheme)?)?;
            let ok = idempotent_truncation_check(&k, &w(block)?, inner.parse()?, outer.parse()?)?;
            json!({ "idempotent_truncation": ok })
        }
        Command::Ringel { lam } => json!({ "ringel": ringel_weight(&w(lam)?).to_string() }),
        Command::Tilting { cogenerators, nu, floor } => {
            let c = CoidealSpec::new(weights(cogenerators, scheme)?)?;
            json!({ "tilting_flag": tilting_flag(&c, &w(nu)?, &w(floor)?)?.to_json() })
        }
        Command::Semiinf { n, character } => {
            json!({ "semiinfinite": semiinfinite_check(*n, &parse_character(*n, character)?)? })
        }
        Command::Oracle(cmd) => return oracle_command(cmd).map(Rendered::from),
    };
    Ok(out.into())
}

fn oracle_command(cmd: &OracleCommand) -> Result<Value> {
    let fw = |n: usize, s: &String| {
        if n == 0 {
            return Err(Error::BadRank(0));
        }
        parse_weight(s, IndexScheme::FiniteA(n))
    };
    let table = |t: oracle::CharacterTable| degree_map(t.iter().map(|(k, &v)| (k.to_string(), v)));
    Ok(match cmd {
        OracleCommand::Shapovalov { n, lam, nu } => {
            json!({ "shapovalov_rank": oracle::shapovalov_rank(*n, &fw(*n, lam)?, &fw(*n, nu)?)? })
        }
        OracleCommand::Vermamult { n, lam, mu, depth } => {
            json!({ "verma_mult": oracle::verma_mult_oracle(*n, &fw(*n, lam)?, &fw(*n, mu)?, *depth)? })
        }
        OracleCommand::Singvec { n, mu, lam } => {
            json!({ "singular_vector_dim": oracle::singular_vector_dim(*n, &fw(*n, mu)?, &fw(*n, lam)?)? })
        }
        OracleCommand::Cohom { n, lam, mu, degree, depth, module } => {
            let kind = match module {
                ModuleArg::Simple => ModuleKind::Simple,
                ModuleArg::Verma => ModuleKind::Verma,
                ModuleArg::Dual => ModuleKind::DualVerma,
            };
            let d = oracle::nplus_cohomology_of(kind, *n, &fw(*n, lam)?, &fw(*n, mu)?, *degree, *depth)?;
            json!({ "cohomology": d })
        }
        OracleCommand::Ext2 { n } => json!({ "ext2": oracle::ce_ext2_trivial(*n)? }),
        OracleCommand::Simplechar { n, lam, floor } => {
            json!({ "character": table(oracle::simple_character(*n, &fw(*n, lam)?, &fw(*n, floor)?)?) })
        }
        OracleCommand::Vermachar { n, lam, floor } => {
            json!({ "character": table(oracle::verma_character(*n, &fw(*n, lam)?, &fw(*n, floor)?)?) })
        }
        OracleCommand::Kostant { n, gamma } => {
            let gamma: Vec<i64> = gamma
                .split(',')
                .map(|c| c.trim().parse().map_err(|_| Error::Parse(format!("bad coefficient `{c}`"))))
                .collect::<Result<_>>()?;
            if *n < 2 || gamma.len() != n - 1 {
                return Err(Error::BadRank(*n));
            }
            json!({ "kostant": oracle::kostant_partition_count(*n, &gamma).to_string() })
        }
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join("\t"),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            for item in items {
                out.push_str(&format!("{prefix}\t{}\n", scalar(item)));
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), item, out);
            }
        }
        other => out.push_str(&format!("{prefix}\t{}\n", scalar(other))),
    }
}

/// Tab-separated rendering of a JSON result: one `key\tvalue` line per leaf,
/// nested keys joined by dots, one line per array element.
pub fn to_tsv(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": { "kind": kind, "message": message } }).to_string() + "\n"
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        _ => 3,
    }
}

fn with_cache<T>(path: Option<&PathBuf>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let Some(path) = path else { return f() };
    let engine = KlEngine::global();
    engine.attach_cache_file(path)?;
    let out = f()?;
    engine.flush()?;
    Ok(out)
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: error_json("Usage", text.trim_end()) },
            };
        }
    };
    match with_cache(cli.cache.as_ref(), || execute(&cli)) {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => r.json.to_string() + "\n",
                Format::Tsv => r.tsv.unwrap_or_else(|| to_tsv(&r.json)),
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: error_json(e.kind(), &e.to_string()) },
    }
}

/// Every leaf subcommand path, e.g. `"mult"` or `"oracle cohom"`.
pub fn subcommand_paths() -> Vec<String> {
    fn walk(cmd: &clap::Command, prefix: &str, out: &mut Vec<String>) {
        for sub in cmd.get_subcommands() {
            let path = if prefix.is_empty() { sub.get_name().to_string() } else { format!("{prefix} {}", sub.get_name()) };
            if sub.has_subcommands() {
                walk(sub, &path, out);
            } else {
                out.push(path);
            }
        }
    }
    let mut out = Vec::new();
    walk(&Cli::command(), "", &mut out);
    out
}
