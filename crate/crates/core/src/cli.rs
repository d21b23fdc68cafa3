//! Command-line front end. Every command reads at most one JSON document and
//! writes one pretty-printed JSON document to stdout.
//!
//! Exit codes: 0 decided, 2 input error, 3 budget or cap exceeded,
//! 4 corollary hypotheses fail, 5 discrepancy or conclusion violation.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::de::{self, DeserializeSeed, Deserializer, IgnoredAny, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::algebra::{Field, Matrix, Scalar, Vector};
use crate::error::Error;
use crate::linear::{self, LinearClass, VectorSet};
use crate::oracle::{self, SearchBudget};
use crate::perm::Permutation;
use crate::projective::{self, ProjClass, ProjPoint, ProjSet};
use crate::reps::{self, CorollaryStatus, MatrixGroupGens};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INAPPLICABLE: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "permext",
    version,
    about = "Extendability of permutations on vector and point sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a vector set: independent, basis plus negative sum, or not homogeneous.
    ClassifyLinear {
        file: PathBuf,
        /// Override the document's field.
        #[arg(long)]
        field: Option<Field>,
    },
    /// Classify a point set: independent, simplex, harmonic (char 3), or not homogeneous.
    ClassifyProjective {
        file: PathBuf,
        #[arg(long)]
        field: Option<Field>,
    },
    /// Extend the document's permutation to a matrix, or report that none exists.
    Extend {
        file: PathBuf,
        /// Extend to PGL on the document's points instead of GL on its vectors.
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        field: Option<Field>,
    },
    /// Certify a classification against exhaustive enumeration of GL(n, p).
    OracleVerify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Largest subset size (defaults to 6 for theorem 1, 8 for theorem 2).
        #[arg(long)]
        max_size: Option<usize>,
        /// Largest admissible group order.
        #[arg(long, default_value_t = oracle::DEFAULT_MAX_GROUP_ORDER)]
        budget: u128,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Check the recognition corollaries for the group generated by the document's generators.
    VerifyCorollary {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        m: usize,
        /// Seed vector as comma-separated scalars (defaults to the document's
        /// `seed`, then to the first basis vector).
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        field: Option<Field>,
    },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json<T: Serialize>(code: i32, value: &T) -> Outcome {
        let mut stdout = serde_json::to_string_pretty(value).expect("serializable output");
        stdout.push('\n');
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: impl fmt::Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::ClassifyLinear { file, field } => classify_linear(&file, field),
        Command::ClassifyProjective { file, field } => classify_projective(&file, field),
        Command::Extend {
            file,
            projective,
            field,
        } => extend(&file, projective, field),
        Command::OracleVerify {
            theorem,
            n,
            p,
            max_size,
            budget,
            workers,
        } => oracle_verify(theorem, n, p, max_size, budget, workers),
        Command::VerifyCorollary {
            file,
            which,
            m,
            seed,
            field,
        } => verify_corollary(&file, which, m, seed.as_deref(), field),
    };
    result.unwrap_or_else(|e| e)
}

type CmdResult = std::result::Result<Outcome, Outcome>;

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(|e| Outcome::error(exit_code(&e), e))
}

#[derive(Serialize)]
struct Classification {
    verdict: String,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Permutation>,
}

fn classify_linear(file: &PathBuf, field: Option<Field>) -> CmdResult {
    let doc = read_document(file, field)?;
    let set = lib(VectorSet::new(doc.field, doc.dim, doc.require_vectors()?))?;
    let class = lib(linear::classify_linear(&set))?;
    let witness = match &class {
        LinearClass::NotHomogeneous { witness } => Some(witness.clone()),
        _ => None,
    };
    Ok(Outcome::json(
        EXIT_OK,
        &Classification {
            verdict: class.name().to_string(),
            rank: set.rank(),
            m: None,
            witness,
        },
    ))
}

fn classify_projective(file: &PathBuf, field: Option<Field>) -> CmdResult {
    let doc = read_document(file, field)?;
    let set = lib(ProjSet::new(doc.field, doc.dim, doc.require_points()?))?;
    let class = lib(projective::classify_projective(&set))?;
    let (m, witness) = match &class {
        ProjClass::Simplex { m } => (Some(*m), None),
        ProjClass::NotHomogeneous { witness } => (None, Some(witness.clone())),
        _ => (None, None),
    };
    Ok(Outcome::json(
        EXIT_OK,
        &Classification {
            verdict: class.label(),
            rank: set.rank(),
            m,
            witness,
        },
    ))
}

#[derive(Serialize)]
struct Extension {
    extension: Option<Matrix>,
}

fn extend(file: &PathBuf, projective: bool, field: Option<Field>) -> CmdResult {
    let doc = read_document(file, field)?;
    let sigma = doc
        .permutation
        .clone()
        .ok_or_else(|| Outcome::error(EXIT_INPUT, "document has no \"permutation\""))?;
    let extension = if projective {
        let set = lib(ProjSet::new(doc.field, doc.dim, doc.require_points()?))?;
        lib(projective::extend_permutation_projective(&set, &sigma))?.map(|g| g.into_matrix())
    } else {
        let set = lib(VectorSet::new(doc.field, doc.dim, doc.require_vectors()?))?;
        lib(linear::extend_permutation_linear(&set, &sigma))?
    };
    Ok(Outcome::json(EXIT_OK, &Extension { extension }))
}

fn oracle_verify(
    theorem: u8,
    n: usize,
    p: u64,
    max_size: Option<usize>,
    budget: u128,
    workers: Option<usize>,
) -> CmdResult {
    let budget = SearchBudget {
        max_group_order: budget,
        workers,
    };
    let start = Instant::now();
    let report = if theorem == 1 {
        lib(oracle::exhaustive_theorem1_check(n, p, max_size.unwrap_or(6), &budget))?
    } else {
        lib(oracle::exhaustive_theorem2_check(n, p, max_size.unwrap_or(8), &budget))?
    };
    let code = if report.is_clean() { EXIT_OK } else { EXIT_VIOLATION };
    let mut out = Outcome::json(code, &report);
    out.stderr = format!("elapsed: {:.3}s\n", start.elapsed().as_secs_f64());
    Ok(out)
}

fn verify_corollary(file: &PathBuf, which: u8, m: usize, seed: Option<&str>, field: Option<Field>) -> CmdResult {
    let doc = read_document(file, field)?;
    let generators = doc
        .generators
        .clone()
        .ok_or_else(|| Outcome::error(EXIT_INPUT, "document has no \"generators\""))?;
    let gens = lib(MatrixGroupGens::new(doc.field, doc.dim, generators))?;
    let seed = match seed {
        Some(text) => {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            let v = lib(Vector::parse(doc.field, &parts))?;
            if v.dim() != doc.dim {
                return Err(Outcome::error(
                    EXIT_INPUT,
                    Error::DimensionMismatch {
                        expected: doc.dim,
                        found: v.dim(),
                    },
                ));
            }
            v
        }
        None => doc.seed.clone().unwrap_or_else(|| Vector::basis(doc.field, doc.dim, 0)),
    };
    let report = if which == 1 {
        lib(reps::verify_corollary1(&gens, m, &seed))?
    } else {
        let point = lib(ProjPoint::new(&seed))?;
        lib(reps::verify_corollary2(&gens, m, &point))?
    };
    let code = match report.status {
        CorollaryStatus::Verified => EXIT_OK,
        CorollaryStatus::Inapplicable => EXIT_INAPPLICABLE,
        CorollaryStatus::Violated => EXIT_VIOLATION,
    };
    Ok(Outcome::json(code, &report))
}

/// A validated input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub dim: usize,
    pub vectors: Option<Vec<Vector>>,
    pub points: Option<Vec<ProjPoint>>,
    pub permutation: Option<Permutation>,
    pub generators: Option<Vec<Matrix>>,
    pub seed: Option<Vector>,
}

impl Document {
    fn require_vectors(&self) -> std::result::Result<Vec<Vector>, Outcome> {
        self.vectors
            .clone()
            .ok_or_else(|| Outcome::error(EXIT_INPUT, "document has no \"vectors\""))
    }

    /// The document's points, or its vectors read as point representatives.
    fn require_points(&self) -> std::result::Result<Vec<ProjPoint>, Outcome> {
        if let Some(points) = &self.points {
            return Ok(points.clone());
        }
        let vectors = self
            .vectors
            .as_ref()
            .ok_or_else(|| Outcome::error(EXIT_INPUT, "document has neither \"points\" nor \"vectors\""))?;
        lib(vectors.iter().map(ProjPoint::new).collect())
    }
}

fn read_document(path: &PathBuf, field: Option<Field>) -> std::result::Result<Document, Outcome> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Outcome::error(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    parse_document(&text, field).map_err(|e| Outcome::error(EXIT_INPUT, format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
struct Header {
    field: Option<String>,
    dim: Option<usize>,
}

/// Parses and validates a document. Scalars, dimensions, duplicates, zero
/// points, singular generators and the permutation are checked while
/// reading, so errors carry the line and column of the offending value.
pub fn parse_document(text: &str, field_override: Option<Field>) -> Result<Document, serde_json::Error> {
    let header: Header = serde_json::from_str(text)?;
    let field = match (field_override, header.field) {
        (Some(f), _) => f,
        (None, Some(s)) => s.parse().map_err(|e: Error| de::Error::custom(e))?,
        (None, None) => return Err(de::Error::missing_field("field")),
    };
    let dim = header.dim.ok_or_else(|| de::Error::missing_field("dim"))?;
    if dim < 2 {
        return Err(de::Error::custom(Error::DimensionTooSmall(dim)));
    }
    let mut de = serde_json::Deserializer::from_str(text);
    let doc = DocumentSeed { field, dim }.deserialize(&mut de)?;
    de.end()?;
    Ok(doc)
}

#[derive(Clone, Copy)]
struct DocumentSeed {
    field: Field,
    dim: usize,
}

impl<'de> DeserializeSeed<'de> for DocumentSeed {
    type Value = Document;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> Result<Document, D::Error> {
        deserializer.deserialize_map(self)
    }
}

impl<'de> Visitor<'de> for DocumentSeed {
    type Value = Document;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an input document object")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Document, A::Error> {
        let (field, dim) = (self.field, self.dim);
        let mut doc = Document {
            field,
            dim,
            vectors: None,
            points: None,
            permutation: None,
            generators: None,
            seed: None,
        };
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "vectors" => doc.vectors = Some(map.next_value_seed(ListSeed(VectorSeed { field, dim }))?),
                "points" => doc.points = Some(map.next_value_seed(ListSeed(PointSeed(VectorSeed { field, dim })))?),
                "generators" => doc.generators = Some(map.next_value_seed(ListSeed(MatrixSeed { field, dim }))?),
                "seed" => doc.seed = Some(map.next_value_seed(VectorSeed { field, dim })?),
                "permutation" => {
                    let images: Vec<usize> = map.next_value()?;
                    doc.permutation = Some(Permutation::new(images).map_err(de::Error::custom)?);
                }
                "field" | "dim" => {
                    map.next_value::<IgnoredAny>()?;
                }
                other => {
                    return Err(de::Error::unknown_field(
                        other,
                        &["field", "dim", "vectors", "points", "permutation", "generators", "seed"],
                    ))
                }
            }
        }
        Ok(doc)
    }
}

/// List items; vectors and points must be distinct, generators may repeat.
trait Element: Clone + PartialEq {
    const WHAT: &'static str;
    const UNIQUE: bool = true;
}

impl Element for Vector {
    const WHAT: &'static str = "vector";
}

impl Element for ProjPoint {
    const WHAT: &'static str = "point";
}

impl Element for Matrix {
    const WHAT: &'static str = "generator";
    const UNIQUE: bool = false;
}

struct ListSeed<S>(S);

impl<'de, S> DeserializeSeed<'de> for ListSeed<S>
where
    S: DeserializeSeed<'de> + Copy,
    S::Value: Element,
{
    type Value = Vec<S::Value>;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> Result<Self::Value, D::Error> {
        deserializer.deserialize_seq(self)
    }
}

impl<'de, S> Visitor<'de> for ListSeed<S>
where
    S: DeserializeSeed<'de> + Copy,
    S::Value: Element,
{
    type Value = Vec<S::Value>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a list of {}s", S::Value::WHAT)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
        let mut out: Vec<S::Value> = Vec::new();
        while let Some(x) = seq.next_element_seed(self.0)? {
            if S::Value::UNIQUE {
                if let Some(first) = out.iter().position(|y| *y == x) {
                    return Err(de::Error::custom(Error::Duplicate {
                        index: out.len(),
                        first,
                    }));
                }
            }
            out.push(x);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy)]
struct ScalarSeed(Field);

impl<'de> DeserializeSeed<'de> for ScalarSeed {
    type Value = Scalar;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> Result<Scalar, D::Error> {
        let text = String::deserialize(deserializer)?;
        Scalar::parse(self.0, &text).map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy)]
struct VectorSeed {
    field: Field,
    dim: usize,
}

impl<'de> DeserializeSeed<'de> for VectorSeed {
    type Value = Vector;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> Result<Vector, D::Error> {
        deserializer.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for VectorSeed {
    type Value = Vector;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a list of {} scalar strings", self.dim)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vector, A::Error> {
        let mut coords = Vec::with_capacity(self.dim);
        while let Some(c) = seq.next_element_seed(ScalarSeed(self.field))? {
            coords.push(c);
        }
        if coords.len() != self.dim {
            return Err(de::Error::custom(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            }));
        }
        Vector::new(self.field, coords).map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy)]
struct PointSeed(VectorSeed);

impl<'de> DeserializeSeed<'de> for PointSeed {
    type Value = ProjPoint;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> Result<ProjPoint, D::Error> {
        let v = self.0.deserialize(deserializer)?;
        ProjPoint::new(&v).map_err(de::Error::custom)
    }
}

#[derive(Clone, Copy)]
struct MatrixSeed {
    field: Field,
    dim: usize,
}

impl<'de> DeserializeSeed<'de> for MatrixSeed {
    type Value = Matrix;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> Result<Matrix, D::Error> {
        deserializer.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for MatrixSeed {
    type Value = Matrix;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a {0}x{0} matrix given as rows of scalar strings", self.dim)
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Matrix, A::Error> {
        let row = VectorSeed {
            field: self.field,
            dim: self.dim,
        };
        let mut rows = Vec::with_capacity(self.dim);
        while let Some(r) = seq.next_element_seed(row)? {
            rows.push(r);
        }
        if rows.len() != self.dim {
            return Err(de::Error::custom(Error::NotSquare {
                rows: rows.len(),
                cols: self.dim,
            }));
        }
        let m = Matrix::from_row_vectors(self.field, self.dim, &rows).map_err(de::Error::custom)?;
        if !m.is_invertible() {
            return Err(de::Error::custom("singular generator matrix"));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_document() {
        let doc = parse_document(
            r#"{"field": "GF(5)", "dim": 2, "vectors": [["1","0"],["0","1"],["4","4"]], "permutation": [2,1,0]}"#,
            None,
        )
        .unwrap();
        assert_eq!(doc.field, Field::prime(5).unwrap());
        assert_eq!(doc.vectors.unwrap()[2], Vector::from_i64(doc.field, &[-1, -1]));
        assert_eq!(doc.permutation.unwrap().images(), &[2, 1, 0]);
    }

    #[test]
    fn errors_are_line_anchored() {
        let text =
            "{\n  \"field\": \"Q\",\n  \"dim\": 2,\n  \"vectors\": [[\"1\", \"0\"],\n              [\"1\", \"0\"]]\n}";
        let e = parse_document(text, None).unwrap_err();
        assert_eq!(e.line(), 5);
        assert!(e.to_string().contains("duplicate"), "{e}");

        let e = parse_document(
            "{\"field\": \"Q\", \"dim\": 2,\n \"vectors\": [[\"1/0\", \"1\"]]}",
            None,
        )
        .unwrap_err();
        assert_eq!(e.line(), 2);

        let e = parse_document("{\"field\": \"GF(6)\", \"dim\": 2}", None).unwrap_err();
        assert!(e.to_string().contains("not prime"), "{e}");

        let e = parse_document(
            "{\"field\": \"GF(3)\", \"dim\": 2,\n\"generators\": [[[\"1\",\"1\"],[\"2\",\"2\"]]]}",
            None,
        )
        .unwrap_err();
        assert!(e.to_string().contains("singular"), "{e}");
        assert_eq!(e.line(), 2);
    }

    #[test]
    fn field_override_applies() {
        let doc = parse_document(
            r#"{"field": "Q", "dim": 2, "vectors": [["1","0"]]}"#,
            Some(Field::prime(2).unwrap()),
        )
        .unwrap();
        assert_eq!(doc.field, Field::prime(2).unwrap());
    }

    #[test]
    fn oracle_budget_refusal_exits_3() {
        let out = run(["permext", "oracle-verify", "--theorem", "1", "--n", "4", "--p", "5"]);
        assert_eq!(out.code, EXIT_BUDGET);
        assert!(out.stdout.is_empty());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run(["permext", "oracle-verify", "--theorem", "3", "--n", "2", "--p", "2"]).code,
            EXIT_INPUT
        );
        assert_eq!(run(["permext", "bogus"]).code, EXIT_INPUT);
    }
}
