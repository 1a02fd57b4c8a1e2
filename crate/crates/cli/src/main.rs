//! `splitrel`: JSON front end to the splitrel library.
//!
//! Inputs come from named file flags or, when a flag is absent, from the
//! same-named field of a bundle document read from `--in` or stdin.
//! Exit codes: 0 success, 2 malformed input, 3 failed precondition,
//! 4 mathematical failure (the payload carries a certificate).

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Map, Value};

use splitrel::psm::{symplectic_target_obstruction, verify_psm, PolyTruncation};
use splitrel::reduction::{
    check_neat, dim_counts, find_neat_complement, minus_relation, neat_reduction_is_split,
    reduce_lagrangian, reduce_space, reduction_relation, validate_c_triple, NeatFailure,
    NeatSearch,
};
use splitrel::relations::{compose, compose_split, neatly_related};
use splitrel::symplectic::{
    average_complement, lagrangian_complement, random_lagrangian, SymplecticSpace,
};
use splitrel::wire::{
    NeatFailureDocument, PairDocument, RelationDocument, SpaceDocument, SubspaceDocument,
    TripleDocument, WireError,
};
use splitrel::{Error, Subspace};

#[derive(Parser)]
#[command(
    name = "splitrel",
    version,
    about = "Exact split Lagrangian and canonical relation calculus"
)]
struct Cli {
    /// Bundle document supplying inputs not given by file flags (default: stdin).
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long = "out", global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isotropy flags and dimensions of a subspace.
    Classify {
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long)]
        subspace: Option<PathBuf>,
    },
    /// Isotropic complement of a Lagrangian obtained by averaging a complement.
    Average {
        #[arg(long)]
        space: Option<PathBuf>,
        #[arg(long)]
        l: Option<PathBuf>,
        #[arg(long)]
        k: Option<PathBuf>,
    },
    /// Check the conditions of a splitting c-triple.
    Validate {
        #[arg(long)]
        triple: Option<PathBuf>,
    },
    /// Reduced space, reduction relations and the reduction of a Lagrangian.
    Reduce {
        #[arg(long)]
        triple: Option<PathBuf>,
        #[arg(long)]
        l: Option<PathBuf>,
    },
    /// Compose two canonical relations (first, then second).
    Compose {
        #[arg(long)]
        first: Option<PathBuf>,
        #[arg(long)]
        second: Option<PathBuf>,
        /// Fail unless both relations are split and neatly related.
        #[arg(long)]
        require_neat: bool,
    },
    /// Neatness of an l-pair against a c-triple, with the reduced split pair.
    Neat {
        #[arg(long)]
        triple: Option<PathBuf>,
        #[arg(long)]
        pair: Option<PathBuf>,
    },
    /// Search for a Lagrangian complement of `l` that is neat for the triple.
    FindNeat {
        #[arg(long)]
        triple: Option<PathBuf>,
        #[arg(long)]
        l: Option<PathBuf>,
    },
    /// Dimension counts for a coisotropic of dimension n + k in dimension 2n.
    DimCounts { n: u64, k: u64 },
    /// Verify the polynomial truncation of the zero-Poisson boundary model.
    PsmDemo {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        target: usize,
    },
    /// Dimensions witnessing the symplectic-target obstruction.
    PsmObstruction {
        #[arg(long)]
        degree: usize,
    },
    /// Seeded random Lagrangian of the standard space, with a Lagrangian complement.
    RandomLagrangian {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failed run, classified by exit code.
enum Failure {
    Parse(anyhow::Error),
    Precondition(anyhow::Error),
    Math { message: String, payload: Value },
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Math { .. } => 4,
        }
    }
}

impl From<WireError> for Failure {
    fn from(e: WireError) -> Self {
        match e {
            WireError::Malformed(_) => Failure::Parse(e.into()),
            WireError::Invalid(inner) => Failure::from(inner),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse(e.into()),
            Error::NotNeat(cert) => neat_failure("neat", &cert, None),
            other => Failure::Precondition(other.into()),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn neat_failure(operation: &str, cert: &NeatFailure, extra: Option<(&str, Value)>) -> Failure {
    let mut payload = json!({
        "operation": operation,
        "neat": false,
        "certificate": NeatFailureDocument::from(cert),
    });
    if let Some((k, v)) = extra {
        payload[k] = v;
    }
    Failure::Math {
        message: format!("neat intersection fails: {cert}"),
        payload,
    }
}

/// Lazily loaded bundle document.
struct Inputs {
    bundle_path: Option<PathBuf>,
    bundle: Option<Map<String, Value>>,
}

impl Inputs {
    fn bundle(&mut self) -> Result<&Map<String, Value>, Failure> {
        if self.bundle.is_none() {
            let text = match &self.bundle_path {
                Some(p) => read_file(p)?,
                None => {
                    let mut s = String::new();
                    io::stdin()
                        .read_to_string(&mut s)
                        .context("reading stdin")
                        .map_err(Failure::Parse)?;
                    s
                }
            };
            let value: Value = serde_json::from_str(&text)
                .context("bundle is not valid JSON")
                .map_err(Failure::Parse)?;
            match value {
                Value::Object(map) => self.bundle = Some(map),
                _ => return Err(Failure::Parse(anyhow!("bundle must be a JSON object"))),
            }
        }
        Ok(self.bundle.as_ref().expect("loaded above"))
    }

    fn load<T: DeserializeOwned>(
        &mut self,
        flag: &Option<PathBuf>,
        key: &str,
    ) -> Result<T, Failure> {
        match flag {
            Some(path) => {
                let text = read_file(path)?;
                serde_json::from_str(&text)
                    .with_context(|| format!("parsing {}", path.display()))
                    .map_err(Failure::Parse)
            }
            None => {
                let value = self
                    .bundle()?
                    .get(key)
                    .cloned()
                    .ok_or_else(|| Failure::Parse(anyhow!("missing input `{key}`")))?;
                serde_json::from_value(value)
                    .with_context(|| format!("parsing input `{key}`"))
                    .map_err(Failure::Parse)
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Parse)
}

/// `{"operation": op, ...fields of body}`.
fn document<T: Serialize>(operation: &str, body: &T) -> Value {
    let mut out = Map::new();
    out.insert("operation".into(), Value::String(operation.into()));
    match serde_json::to_value(body).expect("documents serialize") {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("result".into(), other);
        }
    }
    Value::Object(out)
}

fn subspace_doc(s: &Subspace) -> Value {
    serde_json::to_value(SubspaceDocument::from(s)).expect("documents serialize")
}

fn run(cli: &Cli) -> Outcome {
    let mut inputs = Inputs {
        bundle_path: cli.input.clone(),
        bundle: None,
    };
    match &cli.command {
        Command::Classify { space, subspace } => {
            let space = inputs.load::<SpaceDocument>(space, "space")?.to_space()?;
            let w = inputs
                .load::<SubspaceDocument>(subspace, "subspace")?
                .to_subspace_in(&space)?;
            let class = space.classify(&w)?;
            let mut out = document("classify", &class);
            out["dim"] = json!(w.dim());
            out["dim_orthogonal"] = json!(space.orthogonal(&w)?.dim());
            Ok(out)
        }
        Command::Average { space, l, k } => {
            let space = inputs.load::<SpaceDocument>(space, "space")?.to_space()?;
            let l = inputs
                .load::<SubspaceDocument>(l, "l")?
                .to_subspace_in(&space)?;
            let k = inputs
                .load::<SubspaceDocument>(k, "k")?
                .to_subspace_in(&space)?;
            let avg = average_complement(&space, &l, &k)?;
            let mut out = document("average", &json!({}));
            out["complement"] = subspace_doc(&avg);
            out["unchanged"] = json!(avg == k);
            Ok(out)
        }
        Command::Validate { triple } => {
            let doc = inputs.load::<TripleDocument>(triple, "triple")?;
            let space = doc.space.to_space()?;
            let report = validate_c_triple(
                &space,
                &doc.c.to_subspace_in(&space)?,
                &doc.c_c.to_subspace_in(&space)?,
                &doc.c_prime.to_subspace_in(&space)?,
            )?;
            let mut out = document("validate", &report);
            out["valid"] = json!(report.is_valid());
            out["failures"] = json!(report.failures());
            if report.is_valid() {
                Ok(out)
            } else {
                Err(Failure::Math {
                    message: format!(
                        "invalid splitting c-triple: {}",
                        report.failures().join("; ")
                    ),
                    payload: out,
                })
            }
        }
        Command::Reduce { triple, l } => {
            let t = inputs
                .load::<TripleDocument>(triple, "triple")?
                .to_triple()?;
            let l = inputs
                .load::<SubspaceDocument>(l, "l")?
                .to_subspace_in(t.space())?;
            let reduced = reduce_lagrangian(&t, &l)?;
            let red = reduce_space(&t);
            let mut out = document("reduce", &json!({}));
            out["reduced_space"] = json!(SpaceDocument::from(red.space()));
            out["reduced"] = subspace_doc(&reduced);
            out["reduction_relation"] = json!(RelationDocument::from(&reduction_relation(&t)));
            out["minus_relation"] = subspace_doc(&minus_relation(&t));
            Ok(out)
        }
        Command::Compose {
            first,
            second,
            require_neat,
        } => {
            let a = inputs.load::<RelationDocument>(first, "first")?;
            let b = inputs.load::<RelationDocument>(second, "second")?;
            let (r1, r2) = (a.to_relation()?, b.to_relation()?);
            if a.complement.is_some() && b.complement.is_some() {
                let (s1, s2) = (a.to_split()?, b.to_split()?);
                if neatly_related(&s1, &s2)? {
                    let mut out = document(
                        "compose",
                        &RelationDocument::from(&compose_split(&s1, &s2)?),
                    );
                    out["neat"] = json!(true);
                    return Ok(out);
                }
                if *require_neat {
                    return match compose_split(&s1, &s2) {
                        Err(Error::NotNeat(cert)) => Err(neat_failure("compose", &cert, None)),
                        Err(e) => Err(e.into()),
                        Ok(_) => unreachable!("pair is not neatly related"),
                    };
                }
            } else if *require_neat {
                return Err(Failure::Precondition(anyhow!(
                    "--require-neat needs both relations to carry a complement"
                )));
            }
            let mut out = document("compose", &RelationDocument::from(&compose(&r1, &r2)?));
            out["neat"] = json!(false);
            Ok(out)
        }
        Command::Neat { triple, pair } => {
            let t = inputs
                .load::<TripleDocument>(triple, "triple")?
                .to_triple()?;
            let pair = inputs
                .load::<PairDocument>(pair, "pair")?
                .to_pair(t.space())?;
            if check_neat(&pair, &t)? {
                let (l_bar, comp) = neat_reduction_is_split(&pair, &t)?;
                let mut out = document("neat", &json!({ "neat": true }));
                out["reduced_space"] = json!(SpaceDocument::from(reduce_space(&t).space()));
                out["reduced"] =
                    json!({ "l": subspace_doc(&l_bar), "l_prime": subspace_doc(&comp) });
                return Ok(out);
            }
            let cp = t.c_prime();
            let cert = NeatFailure {
                l_part: pair.l().intersect(cp)?,
                l_prime_part: Some(pair.l_prime().intersect(cp)?),
                c_prime_dim: cp.dim(),
            };
            let alternative = match find_neat_complement(pair.l(), &t)? {
                NeatSearch::Found(lp) => subspace_doc(&lp),
                NeatSearch::Impossible(_) => Value::Null,
            };
            Err(neat_failure(
                "neat",
                &cert,
                Some(("neat_complement", alternative)),
            ))
        }
        Command::FindNeat { triple, l } => {
            let t = inputs
                .load::<TripleDocument>(triple, "triple")?
                .to_triple()?;
            let l = inputs
                .load::<SubspaceDocument>(l, "l")?
                .to_subspace_in(t.space())?;
            match find_neat_complement(&l, &t)? {
                NeatSearch::Found(lp) => {
                    let mut out = document("find-neat", &json!({ "neat": true }));
                    out["l_prime"] = subspace_doc(&lp);
                    Ok(out)
                }
                NeatSearch::Impossible(cert) => Err(neat_failure("find-neat", &cert, None)),
            }
        }
        Command::DimCounts { n, k } => {
            let counts = dim_counts(*n, *k)?;
            let mut out = document("dim-counts", &counts);
            out["n"] = json!(n);
            out["k"] = json!(k);
            Ok(out)
        }
        Command::PsmDemo { degree, target } => {
            let report = verify_psm(PolyTruncation::new(*degree, *target)?);
            let out = document("psm-demo", &report);
            if report.all_passed {
                Ok(out)
            } else {
                Err(Failure::Math {
                    message: format!("failed checks: {}", report.failed().join(", ")),
                    payload: out,
                })
            }
        }
        Command::PsmObstruction { degree } => Ok(document(
            "psm-obstruction",
            &symplectic_target_obstruction(*degree)?,
        )),
        Command::RandomLagrangian { n, seed } => {
            let space = SymplecticSpace::standard(*n);
            let l = random_lagrangian(&space, *seed)?;
            let lp = lagrangian_complement(&space, &l)?;
            let mut out = document("random-lagrangian", &json!({ "seed": seed }));
            out["space"] = json!(SpaceDocument::from(&space));
            out["l"] = subspace_doc(&l);
            out["l_prime"] = subspace_doc(&lp);
            Ok(out)
        }
    }
}

fn emit(path: &Option<PathBuf>, value: &Value) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let (code, payload, message) = match outcome {
        Ok(v) => (0, Some(v), None),
        Err(f) => {
            let code = f.code();
            match f {
                Failure::Parse(e) | Failure::Precondition(e) => {
                    (code, None, Some(format!("{e:#}")))
                }
                Failure::Math { message, payload } => (code, Some(payload), Some(message)),
            }
        }
    };
    if let Some(v) = payload {
        if let Err(e) = emit(&cli.output, &v) {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    }
    if let Some(m) = message {
        eprintln!("error: {m}");
    }
    ExitCode::from(code)
}
