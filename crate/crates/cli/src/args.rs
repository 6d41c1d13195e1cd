use adjnorm::group::Caps;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "adjnorm", version, about = "Adjoint rings, tensor products and normalizers over finite fields")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Input JSON file (`-` for stdin).
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Use a named bimap (`sympl2-3`, `heis-5`, `tensor-22-2`, ...) instead of `--in`.
    #[arg(long, global = true)]
    pub fixture: Option<String>,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Enumeration limits, e.g. `orbit=100000,closure=100000,filter=1000000`.
    #[arg(long, global = true, value_parser = parse_caps, default_value = "orbit=1000000,closure=1000000,filter=1000000")]
    pub caps: Caps,
    /// Group strategy: `structural` or `brute`.
    #[arg(long, global = true, default_value = "structural")]
    pub strategy: String,
}

pub fn parse_caps(s: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for part in s.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part}"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("bad number in {part}"))?;
        match k.trim() {
            "orbit" => caps.orbit = v,
            "closure" => caps.closure = v,
            "filter" => caps.filter = v,
            other => return Err(format!("unknown cap {other}")),
        }
    }
    Ok(caps)
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Adjoint ring of a bimap (with its involution when symmetric or alternating).
    Adjoint,
    /// Tensor product over a subring: input is an algebra pair.
    Tensor,
    /// Exterior (alternating) or symmetric square over a subring.
    Exterior {
        #[arg(long)]
        symmetric: bool,
    },
    /// Meet or join of two bimaps given as {"left": …, "right": …}.
    Lattice {
        #[arg(value_enum)]
        op: LatticeOp,
    },
    /// Normalizer of an algebra pair, or of Adj(∘) when the input is a bimap.
    Normalizer,
    /// N*(Adj(∘)) for a symmetric or alternating bimap.
    StarNormalizer,
    /// Pseudo-isometry group of a symmetric or alternating bimap.
    Pseudo,
    /// Class-2 p-groups given by commutator structure constants.
    Pgroup {
        #[arg(value_enum)]
        action: PGroupAction,
        /// Assert that Aut(G) maps onto Pseudo(∘); reports |Pseudo|·p^{nm} as |Aut(G)|.
        #[arg(long)]
        surjective: bool,
    },
    /// Stabilizer of a matrix space: {(x, y) : x·W·yᵗ = W}.
    Quadstab,
    /// Exhaustive enumeration.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
    },
    /// Run verification suites against the oracles.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Seeded random instances.
    Random {
        #[arg(value_enum)]
        kind: RandomKind,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 2)]
        a: usize,
        #[arg(long, default_value_t = 2)]
        b: usize,
        #[arg(long, default_value_t = 1)]
        w: usize,
        /// Number of generators for algebras.
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum LatticeOp {
    Meet,
    Join,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum PGroupAction {
    /// The commutator bimap.
    Bimap,
    /// Pseudo-isometries of the commutator bimap.
    Pseudo,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum OracleKind {
    Autotopisms,
    Isometries,
    Pseudo,
    Normalizer,
    StarNormalizer,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum RandomKind {
    Bimap,
    Algebra,
    Subspace,
}
