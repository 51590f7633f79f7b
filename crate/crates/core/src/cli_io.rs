//! JSON file formats and the command-line frontend.
//!
//! All scalars serialize as strings ("p" or "p/q" over Q in lowest terms,
//! residues in [0, p) over a prime field) so exactness survives the wire.
//! Emission is canonical: entries sorted, zeros omitted, scalars normalized.
//! Reports are deterministic; identical inputs give byte-identical `--json`
//! output.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cochain_complex::{
    cohomology_dim, comparison_sign, loday_delta, yamaguti_delta, Cochain,
};
use crate::deformation::{
    check_infinitesimal_deformation, compatibility_report, is_nijenhuis, nijenhuis_report,
    operator_polynomial, trivial_deformation, NijenhuisOperator,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{Field, Matrix, Scalar};
use crate::extension::{
    are_equivalent, build_extension, induced_data, AbelianExtension,
};
use crate::lts_core::{verify_lts, LieTripleSystem};
use crate::representation::{adjoint_rep, verify_representation, Representation};

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

/// `"Q"` or `{"Fp": p}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldSpec::Name(s) if s == "Q" => Ok(Field::Rational),
            FieldSpec::Name(s) => Err(Error::Parse(format!("unknown field {:?}", s))),
            FieldSpec::Prime { fp } => Field::prime(*fp),
        }
    }

    pub fn from_field(f: Field) -> FieldSpec {
        match f {
            Field::Rational => FieldSpec::Name("Q".to_string()),
            Field::Prime(p) => FieldSpec::Prime { fp: p },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Pairs (l, scalar literal) giving the e_l coordinates of
    /// `[e_i, e_j, e_k]`.
    pub value: Vec<(usize, String)>,
}

/// Sparse structure-constant file for a Lie triple system.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LtsFile {
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub bracket: Vec<BracketEntry>,
}

impl LtsFile {
    /// Raw tensor, without axiom validation (the `validate` command wants to
    /// inspect invalid systems).
    pub fn to_raw(&self) -> Result<(Field, usize, Vec<Scalar>)> {
        let field = self.field.to_field()?;
        let n = self.dim;
        if let Some(names) = &self.basis {
            if names.len() != n {
                return Err(Error::Parse(format!(
                    "{} basis names for dimension {}",
                    names.len(),
                    n
                )));
            }
        }
        let mut c = vec![field.zero(); n * n * n * n];
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.bracket {
            if e.i >= n || e.j >= n || e.k >= n {
                return Err(Error::IndexOutOfRange(format!(
                    "bracket index ({},{},{}) with dim {}",
                    e.i, e.j, e.k, n
                )));
            }
            for (l, lit) in &e.value {
                if *l >= n {
                    return Err(Error::IndexOutOfRange(format!(
                        "bracket component {} with dim {}",
                        l, n
                    )));
                }
                if !seen.insert((e.i, e.j, e.k, *l)) {
                    return Err(Error::Parse(format!(
                        "duplicate bracket entry ({},{},{},{})",
                        e.i, e.j, e.k, l
                    )));
                }
                c[((e.i * n + e.j) * n + e.k) * n + l] = Scalar::parse(lit, field)?;
            }
        }
        Ok((field, n, c))
    }

    pub fn to_validated(&self) -> Result<LieTripleSystem> {
        let (field, n, c) = self.to_raw()?;
        LieTripleSystem::new(field, n, c)
    }

    pub fn from_system(t: &LieTripleSystem) -> LtsFile {
        let n = t.dim();
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let value: Vec<(usize, String)> = t
                        .bracket_basis(i, j, k)
                        .iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .map(|(l, s)| (l, s.to_literal()))
                        .collect();
                    if !value.is_empty() {
                        bracket.push(BracketEntry { i, j, k, value });
                    }
                }
            }
        }
        LtsFile {
            field: FieldSpec::from_field(t.field()),
            dim: n,
            basis: None,
            bracket,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThetaEntry {
    pub i: usize,
    pub j: usize,
    pub matrix: Vec<Vec<String>>,
}

/// Representation file: dimension of V plus the nonzero theta blocks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepFile {
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub theta: Vec<ThetaEntry>,
}

impl RepFile {
    pub fn to_representation(&self, field: Field, dim_g: usize) -> Result<Representation> {
        let m = self.dim_v;
        let mut blocks = vec![Matrix::zero(field, m, m); dim_g * dim_g];
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.theta {
            if e.i >= dim_g || e.j >= dim_g {
                return Err(Error::IndexOutOfRange(format!(
                    "theta block ({},{}) with dim {}",
                    e.i, e.j, dim_g
                )));
            }
            if !seen.insert((e.i, e.j)) {
                return Err(Error::Parse(format!("duplicate theta block ({},{})", e.i, e.j)));
            }
            blocks[e.i * dim_g + e.j] = parse_matrix(&e.matrix, field, m, m)?;
        }
        Representation::new(field, dim_g, m, blocks)
    }

    pub fn from_representation(rep: &Representation) -> RepFile {
        let n = rep.dim_g();
        let mut theta = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let block = rep.theta(i, j);
                if !block.is_zero() {
                    theta.push(ThetaEntry {
                        i,
                        j,
                        matrix: emit_matrix(block),
                    });
                }
            }
        }
        RepFile {
            dim_v: rep.dim_v(),
            theta,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CochainEntry {
    pub index: Vec<usize>,
    pub component: usize,
    pub value: String,
}

/// Sparse cochain file: level plus nonzero tensor entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CochainFile {
    pub level: usize,
    pub entries: Vec<CochainEntry>,
}

impl CochainFile {
    pub fn to_cochain(&self, field: Field, dim_g: usize, dim_v: usize) -> Result<Cochain> {
        let mut w = Cochain::zero(field, dim_g, dim_v, self.level);
        let d = 2 * self.level + 1;
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.entries {
            if e.index.len() != d {
                return Err(Error::Parse(format!(
                    "cochain index {:?} has length {}, expected {}",
                    e.index,
                    e.index.len(),
                    d
                )));
            }
            if e.index.iter().any(|&i| i >= dim_g) || e.component >= dim_v {
                return Err(Error::IndexOutOfRange(format!(
                    "cochain entry {:?} component {}",
                    e.index, e.component
                )));
            }
            if !seen.insert((e.index.clone(), e.component)) {
                return Err(Error::Parse(format!(
                    "duplicate cochain entry {:?} component {}",
                    e.index, e.component
                )));
            }
            w.set_value(&e.index, e.component, Scalar::parse(&e.value, field)?);
        }
        Ok(w)
    }

    pub fn from_cochain(w: &Cochain) -> CochainFile {
        let mut entries = Vec::new();
        let d = w.degree();
        let n = w.dim_g();
        crate::cochain_complex::for_each_tuple(n, d, |idx| {
            for (a, s) in w.value(idx).iter().enumerate() {
                if !s.is_zero() {
                    entries.push(CochainEntry {
                        index: idx.to_vec(),
                        component: a,
                        value: s.to_literal(),
                    });
                }
            }
        });
        CochainFile {
            level: w.level(),
            entries,
        }
    }
}

/// Role-tagged dense matrix: a Nijenhuis candidate ("nijenhuis"), a linear map
/// g -> V ("cochain1"), or a section of a projection ("section").
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorFile {
    pub role: String,
    pub matrix: Vec<Vec<String>>,
}

impl OperatorFile {
    pub fn to_matrix(&self, field: Field, expect_role: &str) -> Result<Matrix> {
        if self.role != expect_role {
            return Err(Error::Parse(format!(
                "operator role {:?}, expected {:?}",
                self.role, expect_role
            )));
        }
        let rows = self.matrix.len();
        let cols = self.matrix.first().map_or(0, Vec::len);
        parse_matrix(&self.matrix, field, rows, cols)
    }
}

/// An extension file: the total system plus injection/projection matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtensionFile {
    pub lts: LtsFile,
    pub inj: Vec<Vec<String>>,
    pub proj: Vec<Vec<String>>,
}

impl ExtensionFile {
    pub fn to_extension(&self) -> Result<AbelianExtension> {
        let total = self.lts.to_validated()?;
        let f = total.field();
        let rows = self.inj.len();
        let cols = self.inj.first().map_or(0, Vec::len);
        let inj = parse_matrix(&self.inj, f, rows, cols)?;
        let rows = self.proj.len();
        let cols = self.proj.first().map_or(0, Vec::len);
        let proj = parse_matrix(&self.proj, f, rows, cols)?;
        AbelianExtension::new(total, inj, proj)
    }

    pub fn from_extension(e: &AbelianExtension) -> ExtensionFile {
        ExtensionFile {
            lts: LtsFile::from_system(e.total()),
            inj: emit_matrix(e.inj()),
            proj: emit_matrix(e.proj()),
        }
    }
}

fn parse_matrix(rows: &[Vec<String>], field: Field, r: usize, c: usize) -> Result<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(Error::Parse(format!("matrix is not {}x{}", r, c)));
    }
    let mut data = Vec::with_capacity(r * c);
    for row in rows {
        for lit in row {
            data.push(Scalar::parse(lit, field)?);
        }
    }
    Matrix::new(field, r, c, data)
}

fn emit_matrix(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(Scalar::to_literal).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "ltscalc",
    version,
    about = "Exact calculator for finite-dimensional Lie triple systems"
)]
pub struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the triple-system axioms (and optionally a representation).
    Validate {
        lts: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Cohomology dimension and representatives in degree 1, 3 or 5.
    Cohomology {
        lts: PathBuf,
        rep: Option<PathBuf>,
        #[arg(long)]
        degree: usize,
        /// Use the adjoint representation instead of a representation file.
        #[arg(long)]
        adjoint: bool,
    },
    /// Apply the coboundary operator to a cochain.
    Delta {
        lts: PathBuf,
        rep: PathBuf,
        cochain: PathBuf,
        /// Apply the Loday-Pirashvili operator and report the sign relation.
        #[arg(long)]
        loday: bool,
    },
    /// Nijenhuis checks: the operator itself, powers, polynomials,
    /// compatibility.
    Nijenhuis {
        lts: PathBuf,
        op: PathBuf,
        #[arg(long)]
        power: Option<u32>,
        /// Comma-separated coefficients c1,c2,... of P(X) = sum c_i X^i.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        compatible: Option<PathBuf>,
    },
    /// Check whether a cochain generates an infinitesimal deformation.
    Deform { lts: PathBuf, cochain: PathBuf },
    /// The trivial deformation induced by a Nijenhuis operator.
    TrivialDeform { lts: PathBuf, op: PathBuf },
    /// Build the extension g (+)_omega V from a representation and 3-cocycle.
    Extend {
        lts: PathBuf,
        rep: PathBuf,
        cochain: PathBuf,
    },
    /// Recover the representation and 3-cocycle from an extension file.
    Extract {
        ext: PathBuf,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Decide equivalence of two 3-cocycles; print a witness when equivalent.
    Equivalent {
        lts: PathBuf,
        rep: PathBuf,
        c1: PathBuf,
        c2: PathBuf,
    },
    /// Classify abelian extensions by the third cohomology group.
    Classify { lts: PathBuf, rep: PathBuf },
}

/// Exit codes: 0 success/true, 1 mathematical falsity, 2 input error.
fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NotACocycle
        | Error::NotNijenhuis
        | Error::InvalidWitness
        | Error::NotAnExtension(_)
        | Error::NotALieTripleSystem { .. }
        | Error::NotALieAlgebra { .. }
        | Error::NotASubspace
        | Error::NotConstrained => 1,
        _ => 2,
    }
}

/// Run the CLI on the given argv (including the program name). Returns the
/// exit code and the report text (no trailing newline).
pub fn cli_dispatch<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (code, e.render().to_string().trim_end().to_string());
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok((code, out)) => (code, out),
        Err(e) => {
            let code = exit_code_for(&e);
            let msg = if json {
                pretty(&json!({ "error": e.to_string() }))
            } else {
                format!("error: {}", e)
            };
            (code, msg)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))
}

fn load_lts(path: &Path) -> Result<LtsFile> {
    read_json::<LtsFile>(path)
}

fn field_json(f: Field) -> Value {
    serde_json::to_value(FieldSpec::from_field(f)).expect("serializable")
}

fn violations_json(violations: &[crate::lts_core::LtsViolation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|v| json!({ "axiom": v.axiom.to_string(), "indices": v.indices }))
            .collect(),
    )
}

fn run(cli: Cli) -> Result<(i32, String)> {
    match cli.command {
        Command::Validate { lts, rep } => {
            let file = load_lts(&lts)?;
            let (field, dim, c) = file.to_raw()?;
            let report = verify_lts(field, dim, &c)?;
            let mut ok = report.ok;
            let mut rep_json = Value::Null;
            let mut rep_lines = Vec::new();
            if let Some(rep_path) = rep {
                if !report.ok {
                    rep_lines.push("representation: skipped (system invalid)".to_string());
                } else {
                    let t = LieTripleSystem::new(field, dim, c)?;
                    let rep_file: RepFile = read_json(&rep_path)?;
                    let r = rep_file.to_representation(field, dim)?;
                    let rr = verify_representation(&t, &r)?;
                    ok = ok && rr.ok();
                    rep_json = json!({
                        "dim_v": r.dim_v(),
                        "r1_ok": rr.r1_ok,
                        "r2_ok": rr.r2_ok,
                        "r3_ok": rr.r3_ok,
                        "ok": rr.ok(),
                    });
                    rep_lines.push(format!(
                        "representation: r1 {} r2 {} r3 {}",
                        verdict(rr.r1_ok),
                        verdict(rr.r2_ok),
                        verdict(rr.r3_ok)
                    ));
                }
            }
            let out = if cli.json {
                pretty(&json!({
                    "command": "validate",
                    "field": field_json(field),
                    "dim": dim,
                    "lts_ok": report.ok,
                    "violations": violations_json(&report.violations),
                    "rep": rep_json,
                    "ok": ok,
                }))
            } else {
                let mut lines = vec![format!(
                    "system: dim {} over {}: {}",
                    dim,
                    field,
                    verdict(report.ok)
                )];
                for v in report.violations.iter().take(10) {
                    lines.push(format!("  {} violated at {:?}", v.axiom, v.indices));
                }
                if report.violations.len() > 10 {
                    lines.push(format!("  ... {} violations total", report.violations.len()));
                }
                lines.extend(rep_lines);
                lines.join("\n")
            };
            Ok((if ok { 0 } else { 1 }, out))
        }

        Command::Cohomology {
            lts,
            rep,
            degree,
            adjoint,
        } => {
            let t = load_lts(&lts)?.to_validated()?;
            let r = resolve_rep(&t, rep.as_deref(), adjoint)?;
            let report = cohomology_dim(&t, &r, degree)?;
            let reps: Vec<CochainFile> = report
                .representatives
                .iter()
                .map(CochainFile::from_cochain)
                .collect();
            let out = if cli.json {
                pretty(&json!({
                    "command": "cohomology",
                    "field": field_json(t.field()),
                    "dim": t.dim(),
                    "dim_v": r.dim_v(),
                    "degree": degree,
                    "cochain_space_dim": report.cochain_space_dim,
                    "cocycle_dim": report.cocycle_dim,
                    "coboundary_dim": report.coboundary_dim,
                    "h_dim": report.dim,
                    "representatives": serde_json::to_value(&reps).expect("serializable"),
                }))
            } else {
                format!(
                    "H^{}: dim {} (cochain space {}, cocycles {}, coboundaries {})",
                    degree,
                    report.dim,
                    report.cochain_space_dim,
                    report.cocycle_dim,
                    report.coboundary_dim
                )
            };
            Ok((0, out))
        }

        Command::Delta {
            lts,
            rep,
            cochain,
            loday,
        } => {
            let t = load_lts(&lts)?.to_validated()?;
            let r = resolve_rep(&t, Some(&rep), false)?;
            let cfile: CochainFile = read_json(&cochain)?;
            let w = cfile.to_cochain(t.field(), t.dim(), r.dim_v())?;
            let y = yamaguti_delta(&t, &r, &w)?;
            let (result, sign_info) = if loday {
                let l = loday_delta(&t, &r, &w)?;
                let sign = comparison_sign(w.level());
                let agrees = y == l.scale(&t.field().from_i64(sign));
                (l, Some((sign, agrees)))
            } else {
                (y, None)
            };
            let artifact = CochainFile::from_cochain(&result);
            let out = if cli.json {
                let mut report = json!({
                    "command": "delta",
                    "field": field_json(t.field()),
                    "dim": t.dim(),
                    "dim_v": r.dim_v(),
                    "level_in": w.level(),
                    "operator": if loday { "loday" } else { "yamaguti" },
                    "cochain": serde_json::to_value(&artifact).expect("serializable"),
                });
                if let Some((sign, agrees)) = sign_info {
                    report["sign"] = json!(sign);
                    report["yamaguti_equals_sign_times_loday"] = json!(agrees);
                }
                pretty(&report)
            } else {
                serde_json::to_string_pretty(&artifact).expect("serializable")
            };
            Ok((0, out))
        }

        Command::Nijenhuis {
            lts,
            op,
            power,
            poly,
            compatible,
        } => {
            let t = load_lts(&lts)?.to_validated()?;
            let opfile: OperatorFile = read_json(&op)?;
            let n_matrix = opfile.to_matrix(t.field(), "nijenhuis")?;
            let base = nijenhuis_report(&t, &n_matrix)?;
            let mut all_ok = base.ok();
            let mut report = json!({
                "command": "nijenhuis",
                "field": field_json(t.field()),
                "dim": t.dim(),
                "is_nijenhuis": base.ok(),
                "image_bracket_zero": base.image_bracket_zero,
                "square_identity": base.square_identity,
            });
            let mut lines = vec![format!("nijenhuis: {}", verdict(base.ok()))];

            if let Some(k) = power {
                let pk = n_matrix.pow(k)?;
                let ok = is_nijenhuis(&t, &pk)?;
                all_ok = all_ok && ok;
                report["power"] = json!({ "k": k, "is_nijenhuis": ok });
                lines.push(format!("power {}: {}", k, verdict(ok)));
            }
            if let Some(coeffs) = poly {
                let parsed = parse_poly(&coeffs, t.field())?;
                let p = operator_polynomial(&n_matrix, &parsed)?;
                let ok = is_nijenhuis(&t, &p)?;
                all_ok = all_ok && ok;
                report["poly"] = json!({
                    "coefficients": parsed.iter().skip(1).map(Scalar::to_literal).collect::<Vec<_>>(),
                    "is_nijenhuis": ok,
                    "matrix": emit_matrix(&p),
                });
                lines.push(format!("polynomial: {}", verdict(ok)));
            }
            if let Some(op2_path) = compatible {
                let opfile2: OperatorFile = read_json(&op2_path)?;
                let m2 = opfile2.to_matrix(t.field(), "nijenhuis")?;
                let second_ok = is_nijenhuis(&t, &m2)?;
                if base.ok() && second_ok {
                    let n1 = NijenhuisOperator::verify(&t, n_matrix.clone())?;
                    let n2 = NijenhuisOperator::verify(&t, m2)?;
                    let cr = compatibility_report(&t, &n1, &n2)?;
                    all_ok = all_ok && cr.compatible();
                    report["compatible"] = json!({
                        "op2_is_nijenhuis": true,
                        "bracket_identity": cr.bracket_identity,
                        "triple_identity": cr.triple_identity,
                        "sum_is_nijenhuis": cr.sum_is_nijenhuis,
                        "compatible": cr.compatible(),
                    });
                    lines.push(format!("compatible: {}", verdict(cr.compatible())));
                } else {
                    all_ok = false;
                    report["compatible"] = json!({
                        "op2_is_nijenhuis": second_ok,
                        "compatible": false,
                    });
                    lines.push("compatible: no (operands must both be Nijenhuis)".to_string());
                }
            }
            report["ok"] = json!(all_ok);
            let out = if cli.json {
                pretty(&report)
            } else {
                lines.join("\n")
            };
            Ok((if all_ok { 0 } else { 1 }, out))
        }

        Command::Deform { lts, cochain } => {
            let t = load_lts(&lts)?.to_validated()?;
            let cfile: CochainFile = read_json(&cochain)?;
            let w = cfile.to_cochain(t.field(), t.dim(), t.dim())?;
            let report = check_infinitesimal_deformation(&t, &w)?;
            let out = if cli.json {
                pretty(&json!({
                    "command": "deform",
                    "field": field_json(t.field()),
                    "dim": t.dim(),
                    "lts_ok": report.lts_ok,
                    "cocycle_ok": report.cocycle_ok,
                    "valid": report.valid(),
                    "lts_violations": violations_json(&report.lts_violations),
                }))
            } else {
                format!(
                    "deformation: structure {}, cocycle {} -> {}",
                    verdict(report.lts_ok),
                    verdict(report.cocycle_ok),
                    verdict(report.valid())
                )
            };
            Ok((if report.valid() { 0 } else { 1 }, out))
        }

        Command::TrivialDeform { lts, op } => {
            let t = load_lts(&lts)?.to_validated()?;
            let opfile: OperatorFile = read_json(&op)?;
            let n_matrix = opfile.to_matrix(t.field(), "nijenhuis")?;
            let n_op = NijenhuisOperator::verify(&t, n_matrix)?;
            let w = trivial_deformation(&t, &n_op)?;
            let artifact = CochainFile::from_cochain(&w);
            let out = if cli.json {
                pretty(&json!({
                    "command": "trivial-deform",
                    "field": field_json(t.field()),
                    "dim": t.dim(),
                    "nijenhuis_ok": true,
                    "cochain": serde_json::to_value(&artifact).expect("serializable"),
                }))
            } else {
                serde_json::to_string_pretty(&artifact).expect("serializable")
            };
            Ok((0, out))
        }

        Command::Extend { lts, rep, cochain } => {
            let t = load_lts(&lts)?.to_validated()?;
            let r = resolve_rep(&t, Some(&rep), false)?;
            let cfile: CochainFile = read_json(&cochain)?;
            let w = cfile.to_cochain(t.field(), t.dim(), r.dim_v())?;
            let ext = build_extension(&t, &r, &w)?;
            let artifact = ExtensionFile::from_extension(&ext);
            let out = if cli.json {
                pretty(&json!({
                    "command": "extend",
                    "field": field_json(t.field()),
                    "base_dim": t.dim(),
                    "fiber_dim": r.dim_v(),
                    "extension": serde_json::to_value(&artifact).expect("serializable"),
                }))
            } else {
                serde_json::to_string_pretty(&artifact).expect("serializable")
            };
            Ok((0, out))
        }

        Command::Extract { ext, section } => {
            let efile: ExtensionFile = read_json(&ext)?;
            let e = efile.to_extension()?;
            let sigma = match section {
                Some(path) => {
                    let sfile: OperatorFile = read_json(&path)?;
                    sfile.to_matrix(e.total().field(), "section")?
                }
                None => e.canonical_section()?,
            };
            let data = induced_data(&e, &sigma)?;
            let rep_file = RepFile::from_representation(&data.rep);
            let coc_file = CochainFile::from_cochain(&data.cocycle);
            let artifact = json!({
                "rep": serde_json::to_value(&rep_file).expect("serializable"),
                "cochain": serde_json::to_value(&coc_file).expect("serializable"),
            });
            let out = if cli.json {
                pretty(&json!({
                    "command": "extract",
                    "field": field_json(e.total().field()),
                    "base_dim": e.base_dim(),
                    "fiber_dim": e.fiber_dim(),
                    "rep": serde_json::to_value(&rep_file).expect("serializable"),
                    "cochain": serde_json::to_value(&coc_file).expect("serializable"),
                }))
            } else {
                pretty(&artifact)
            };
            Ok((0, out))
        }

        Command::Equivalent { lts, rep, c1, c2 } => {
            let t = load_lts(&lts)?.to_validated()?;
            let r = resolve_rep(&t, Some(&rep), false)?;
            let f1: CochainFile = read_json(&c1)?;
            let f2: CochainFile = read_json(&c2)?;
            let w1 = f1.to_cochain(t.field(), t.dim(), r.dim_v())?;
            let w2 = f2.to_cochain(t.field(), t.dim(), r.dim_v())?;
            let witness = are_equivalent(&t, &r, &w1, &w2)?;
            let equivalent = witness.is_some();
            let out = if cli.json {
                pretty(&json!({
                    "command": "equivalent",
                    "field": field_json(t.field()),
                    "dim": t.dim(),
                    "dim_v": r.dim_v(),
                    "equivalent": equivalent,
                    "witness": witness.as_ref().map(|nu| json!(OperatorFile {
                        role: "cochain1".to_string(),
                        matrix: emit_matrix(&nu.matrix),
                    })),
                }))
            } else {
                match &witness {
                    Some(nu) => {
                        let f = OperatorFile {
                            role: "cochain1".to_string(),
                            matrix: emit_matrix(&nu.matrix),
                        };
                        serde_json::to_string_pretty(&f).expect("serializable")
                    }
                    None => "not equivalent".to_string(),
                }
            };
            Ok((if equivalent { 0 } else { 1 }, out))
        }

        Command::Classify { lts, rep } => {
            let t = load_lts(&lts)?.to_validated()?;
            let r = resolve_rep(&t, Some(&rep), false)?;
            let cls = crate::extension::classify_extensions(&t, &r)?;
            let reps: Vec<CochainFile> = cls
                .representatives
                .iter()
                .map(CochainFile::from_cochain)
                .collect();
            let out = if cli.json {
                pretty(&json!({
                    "command": "classify",
                    "field": field_json(t.field()),
                    "dim": t.dim(),
                    "dim_v": r.dim_v(),
                    "h3_dim": cls.h3_dim,
                    "representatives": serde_json::to_value(&reps).expect("serializable"),
                }))
            } else {
                format!(
                    "abelian extensions up to equivalence: H^3 has dimension {}",
                    cls.h3_dim
                )
            };
            Ok((0, out))
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn resolve_rep(
    t: &LieTripleSystem,
    rep_path: Option<&Path>,
    adjoint: bool,
) -> Result<Representation> {
    match (rep_path, adjoint) {
        (Some(_), true) => Err(Error::Parse(
            "pass either a representation file or --adjoint, not both".to_string(),
        )),
        (None, true) => Ok(adjoint_rep(t)),
        (Some(path), false) => {
            let rep_file: RepFile = read_json(path)?;
            rep_file.to_representation(t.field(), t.dim())
        }
        (None, false) => Err(Error::Parse(
            "a representation file or --adjoint is required".to_string(),
        )),
    }
}

/// Parse `--poly c1,c2,...` into coefficients by degree with a zero constant
/// slot.
fn parse_poly(s: &str, field: Field) -> Result<Vec<Scalar>> {
    let mut out = vec![field.zero()];
    for part in s.split(',') {
        out.push(Scalar::parse(part.trim(), field)?);
    }
    Ok(out)
}
