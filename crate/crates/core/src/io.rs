//! JSON files for algebras, representations, maps, solution spaces and
//! reports. Scalars are written in their textual form (`-1/2*z^3 + 1`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra3Rho, AlgebraKind, GradedBasis, TernaryBracket};
use crate::error::{Error, Result};
use crate::forms::BilinearForm;
use crate::grading::{GradingGroup, TwoCycle};
use crate::linalg::Matrix;
use crate::prelie::PreLieRepBundle;
use crate::report::ValidationReport;
use crate::representations::RepresentationBundle;
use crate::scalar::{CyclotomicOrder, Scalar};

pub const SCHEMA: &str = "colorlie/1";

fn schema() -> String {
    SCHEMA.to_string()
}

/// A scalar as text, or a bare JSON integer on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    fn render(s: &Scalar) -> Self {
        ScalarText::Text(s.to_string())
    }

    fn parse(&self, order: CyclotomicOrder) -> Result<Scalar> {
        match self {
            ScalarText::Int(v) => Ok(Scalar::from_int(order, *v)),
            ScalarText::Text(t) => Scalar::parse(order, t),
        }
    }
}

pub type MatrixText = Vec<Vec<ScalarText>>;

fn render_matrix(m: &Matrix) -> MatrixText {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ScalarText::render).collect())
        .collect()
}

fn parse_matrix(order: CyclotomicOrder, rows: &MatrixText, what: &str) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|c| c.parse(order)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Format(format!("{what}: empty matrix")));
    }
    Matrix::from_rows(order, rows).map_err(|e| Error::Format(format!("{what}: {e}")))
}

/// `"identity"` or an explicit matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapText {
    Named(String),
    Matrix(MatrixText),
}

impl MapText {
    fn render(m: &Matrix) -> Self {
        if m.is_identity() {
            MapText::Named("identity".into())
        } else {
            MapText::Matrix(render_matrix(m))
        }
    }

    fn parse(&self, order: CyclotomicOrder, dim: usize, what: &str) -> Result<Matrix> {
        match self {
            MapText::Named(n) if n == "identity" => Ok(Matrix::identity(order, dim)),
            MapText::Named(n) => Err(Error::Format(format!("{what}: unknown map {n:?}"))),
            MapText::Matrix(rows) => parse_matrix(order, rows, what),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupText {
    pub moduli: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub name: String,
    pub degree: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub args: [usize; 3],
    /// Output basis name (or index) to coefficient.
    pub value: BTreeMap<String, ScalarText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Split {
    pub base_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub construction: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parameters: Vec<String>,
    pub inputs: Vec<InputDigest>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default = "schema")]
    pub schema: String,
    pub scalar_order: u32,
    pub group: GroupText,
    pub rho_exponents: Vec<Vec<i64>>,
    pub basis: Vec<BasisEntry>,
    pub kind: AlgebraKind,
    pub twist: MapText,
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, MatrixText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra3Rho) -> Self {
        let names = alg.basis().names();
        let bracket = alg
            .bracket()
            .support()
            .into_iter()
            .map(|(i, j, k)| BracketEntry {
                args: [i, j, k],
                value: alg
                    .bracket()
                    .get(i, j, k)
                    .iter()
                    .map(|(l, c)| (names[*l].clone(), ScalarText::render(c)))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            schema: schema(),
            scalar_order: alg.order().get(),
            group: GroupText {
                moduli: alg.group().moduli().to_vec(),
            },
            rho_exponents: alg
                .rho()
                .exponent_matrix()
                .iter()
                .map(|r| r.iter().map(|&e| e as i64).collect())
                .collect(),
            basis: names
                .iter()
                .zip(alg.basis().degrees())
                .map(|(n, d)| BasisEntry {
                    name: n.clone(),
                    degree: d.residues().iter().map(|&r| r as i64).collect(),
                })
                .collect(),
            kind: alg.kind(),
            twist: MapText::render(alg.twist()),
            bracket,
            forms: BTreeMap::new(),
            split: None,
            provenance: None,
        }
    }

    pub fn with_form(mut self, name: &str, form: &BilinearForm) -> Self {
        self.forms.insert(name.to_string(), render_matrix(form.matrix()));
        self
    }

    pub fn order(&self) -> Result<CyclotomicOrder> {
        CyclotomicOrder::new(self.scalar_order)
    }

    pub fn to_basis(&self) -> Result<GradedBasis> {
        let group = GradingGroup::new(self.group.moduli.clone())?;
        basis_from(&group, &self.basis)
    }

    pub fn to_algebra(&self) -> Result<Algebra3Rho> {
        if self.schema != SCHEMA {
            return Err(Error::Format(format!("unsupported schema {:?}", self.schema)));
        }
        let order = self.order()?;
        let group = GradingGroup::new(self.group.moduli.clone())?;
        let rho = TwoCycle::new_validated(group.clone(), order, &self.rho_exponents)?;
        let basis = basis_from(&group, &self.basis)?;
        let d = basis.dim();
        let mut bracket = TernaryBracket::zero(order, d);
        let mut seen = std::collections::HashSet::new();
        for (n, entry) in self.bracket.iter().enumerate() {
            let [i, j, k] = entry.args;
            if i >= d || j >= d || k >= d {
                return Err(Error::Format(format!("bracket[{n}]: args {:?} out of range", entry.args)));
            }
            if !seen.insert(entry.args) {
                return Err(Error::Format(format!("bracket[{n}]: args {:?} listed twice", entry.args)));
            }
            let mut v = vec![Scalar::zero(order); d];
            for (key, c) in &entry.value {
                let l = index_of(&basis, key).ok_or_else(|| {
                    Error::Format(format!("bracket[{n}]: unknown basis element {key:?}"))
                })?;
                v[l] = c.parse(order)?;
            }
            bracket.set(i, j, k, &v);
        }
        let twist = self.twist.parse(order, d, "twist")?;
        Algebra3Rho::new(basis, rho, bracket, Some(twist), self.kind)
    }

    pub fn form(&self, name: &str) -> Result<BilinearForm> {
        let rows = self
            .forms
            .get(name)
            .ok_or_else(|| Error::Format(format!("no form named {name:?}")))?;
        BilinearForm::new(parse_matrix(self.order()?, rows, name)?)
    }

    /// The only form in the file, or the named one.
    pub fn pick_form(&self, name: Option<&str>) -> Result<BilinearForm> {
        match name {
            Some(n) => self.form(n),
            None if self.forms.len() == 1 => self.form(self.forms.keys().next().expect("one form")),
            None => Err(Error::Format(format!(
                "file has {} forms; name one of them",
                self.forms.len()
            ))),
        }
    }
}

fn basis_from(group: &GradingGroup, entries: &[BasisEntry]) -> Result<GradedBasis> {
    let names = entries.iter().map(|b| b.name.clone()).collect();
    let degrees = entries
        .iter()
        .map(|b| group.element(&b.degree))
        .collect::<Result<Vec<_>>>()?;
    GradedBasis::new(group.clone(), names, degrees)
}

fn render_basis(basis: &GradedBasis) -> Vec<BasisEntry> {
    basis
        .names()
        .iter()
        .zip(basis.degrees())
        .map(|(n, d)| BasisEntry {
            name: n.clone(),
            degree: d.residues().iter().map(|&r| r as i64).collect(),
        })
        .collect()
}

fn index_of(basis: &GradedBasis, key: &str) -> Option<usize> {
    basis
        .index_of(key)
        .or_else(|| key.parse::<usize>().ok().filter(|&i| i < basis.dim()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub args: [usize; 2],
    pub matrix: MatrixText,
}

/// A representation (mu only), a pre-Lie representation (mu and mu_tilde)
/// and optionally an operator T from the space to the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    #[serde(default = "schema")]
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_ref: Option<String>,
    pub space: Vec<BasisEntry>,
    pub beta: MapText,
    pub mu: Vec<ActionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_tilde: Option<Vec<ActionEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<MatrixText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

fn render_actions(mats: &[Matrix], d: usize) -> Vec<ActionEntry> {
    mats.iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(p, m)| ActionEntry {
            args: [p / d, p % d],
            matrix: render_matrix(m),
        })
        .collect()
}

fn parse_actions(order: CyclotomicOrder, entries: &[ActionEntry], d: usize, n: usize, what: &str) -> Result<Vec<Matrix>> {
    let mut out = vec![Matrix::zeros(order, n, n); d * d];
    let mut seen = std::collections::HashSet::new();
    for (t, e) in entries.iter().enumerate() {
        let [i, j] = e.args;
        if i >= d || j >= d {
            return Err(Error::Format(format!("{what}[{t}]: args {:?} out of range", e.args)));
        }
        if !seen.insert(e.args) {
            return Err(Error::Format(format!("{what}[{t}]: args {:?} listed twice", e.args)));
        }
        out[i * d + j] = parse_matrix(order, &e.matrix, &format!("{what}[{t}]"))?;
    }
    Ok(out)
}

impl RepresentationFile {
    pub fn from_bundle(b: &RepresentationBundle) -> Self {
        let d = b.algebra().dim();
        RepresentationFile {
            schema: schema(),
            algebra: Some(AlgebraFile::from_algebra(b.algebra())),
            algebra_ref: None,
            space: render_basis(b.space()),
            beta: MapText::render(b.beta()),
            mu: render_actions(b.mu_all(), d),
            mu_tilde: None,
            operator: None,
            provenance: None,
        }
    }

    pub fn from_pre_bundle(b: &PreLieRepBundle) -> Self {
        let d = b.prelie().dim();
        RepresentationFile {
            schema: schema(),
            algebra: Some(AlgebraFile::from_algebra(b.prelie())),
            algebra_ref: None,
            space: render_basis(b.space()),
            beta: MapText::render(b.beta()),
            mu: render_actions(b.mu_all(), d),
            mu_tilde: Some(render_actions(b.mu_tilde_all(), d)),
            operator: None,
            provenance: None,
        }
    }

    pub fn with_operator(mut self, t: &Matrix) -> Self {
        self.operator = Some(render_matrix(t));
        self
    }

    /// The inline algebra, or the one supplied for `algebra_ref`.
    pub fn algebra_file<'a>(&'a self, referenced: Option<&'a AlgebraFile>) -> Result<&'a AlgebraFile> {
        match (&self.algebra, referenced) {
            (Some(a), _) => Ok(a),
            (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::Format(match &self.algebra_ref {
                Some(r) => format!("algebra_ref {r:?} was not resolved"),
                None => "representation names no algebra".into(),
            })),
        }
    }

    fn parts(&self, alg: &Algebra3Rho) -> Result<(GradedBasis, Vec<Matrix>, Matrix)> {
        if self.schema != SCHEMA {
            return Err(Error::Format(format!("unsupported schema {:?}", self.schema)));
        }
        let space = basis_from(alg.group(), &self.space)?;
        let n = space.dim();
        let mu = parse_actions(alg.order(), &self.mu, alg.dim(), n, "mu")?;
        let beta = self.beta.parse(alg.order(), n, "beta")?;
        Ok((space, mu, beta))
    }

    pub fn to_bundle(&self, referenced: Option<&AlgebraFile>) -> Result<RepresentationBundle> {
        let alg = self.algebra_file(referenced)?.to_algebra()?;
        let (space, mu, beta) = self.parts(&alg)?;
        RepresentationBundle::new(alg, space, mu, Some(beta))
    }

    pub fn to_pre_bundle(&self, referenced: Option<&AlgebraFile>) -> Result<PreLieRepBundle> {
        let alg = self.algebra_file(referenced)?.to_algebra()?;
        let (space, mu, beta) = self.parts(&alg)?;
        let tilde = self
            .mu_tilde
            .as_ref()
            .ok_or_else(|| Error::Format("pre-Lie representation needs mu_tilde".into()))?;
        let tilde = parse_actions(alg.order(), tilde, alg.dim(), space.dim(), "mu_tilde")?;
        PreLieRepBundle::new(alg, space, mu, tilde, Some(beta))
    }

    pub fn operator(&self, order: CyclotomicOrder) -> Result<Matrix> {
        let rows = self
            .operator
            .as_ref()
            .ok_or_else(|| Error::Format("file has no operator".into()))?;
        parse_matrix(order, rows, "operator")
    }
}

/// A single linear map, optionally with a declared degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default = "schema")]
    pub schema: String,
    pub scalar_order: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<i64>>,
    pub matrix: MatrixText,
}

impl MapFile {
    pub fn new(m: &Matrix, degree: Option<Vec<i64>>) -> Self {
        MapFile {
            schema: schema(),
            scalar_order: m.order().get(),
            degree,
            matrix: render_matrix(m),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        parse_matrix(CyclotomicOrder::new(self.scalar_order)?, &self.matrix, "matrix")
    }
}

/// A basis of a solution space of maps or forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    #[serde(default = "schema")]
    pub schema: String,
    pub kind: String,
    pub scalar_order: u32,
    /// Absent when members of every degree are listed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<i64>>,
    pub dimension: usize,
    pub members: Vec<MatrixText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nondegenerate_combinations: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl SolutionFile {
    pub fn new(kind: &str, order: CyclotomicOrder, degree: Option<Vec<i64>>, members: &[Matrix]) -> Self {
        SolutionFile {
            schema: schema(),
            kind: kind.to_string(),
            scalar_order: order.get(),
            degree,
            dimension: members.len(),
            members: members.iter().map(render_matrix).collect(),
            nondegenerate_combinations: None,
            provenance: None,
        }
    }

    pub fn to_matrices(&self) -> Result<Vec<Matrix>> {
        let order = CyclotomicOrder::new(self.scalar_order)?;
        self.members
            .iter()
            .enumerate()
            .map(|(i, m)| parse_matrix(order, m, &format!("members[{i}]")))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationText {
    pub identity: String,
    pub indices: Vec<usize>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportText {
    pub check: String,
    pub passed: bool,
    pub violations: Vec<ViolationText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    #[serde(default = "schema")]
    pub schema: String,
    pub passed: bool,
    pub reports: Vec<ReportText>,
}

impl ReportText {
    /// Violations sorted by identity, then indices.
    pub fn new(report: &ValidationReport) -> Self {
        let mut violations: Vec<ViolationText> = report
            .violations
            .iter()
            .map(|v| ViolationText {
                identity: v.identity.clone(),
                indices: v.indices.clone(),
                residual: v.residual.to_string(),
            })
            .collect();
        violations.sort_by(|a, b| (&a.identity, &a.indices).cmp(&(&b.identity, &b.indices)));
        ReportText {
            check: report.check.clone(),
            passed: report.passed(),
            violations,
        }
    }
}

impl ReportFile {
    pub fn new(reports: &[ValidationReport]) -> Self {
        let reports: Vec<ReportText> = reports.iter().map(ReportText::new).collect();
        ReportFile {
            schema: schema(),
            passed: reports.iter().all(|r| r.passed),
            reports,
        }
    }
}

/// Deserializes with line and column in the error message.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("line {}, column {}: {e}", e.line(), e.column())))
}

/// Pretty JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{z2_cubed, z2_cubed_hom, z2_cubed_symplectic};

    #[test]
    fn algebra_round_trip() {
        for alg in [z2_cubed(), z2_cubed_hom()] {
            let file = AlgebraFile::from_algebra(&alg).with_form("omega1", &z2_cubed_symplectic(1));
            let text = render(&file);
            let back: AlgebraFile = parse(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(render(&back), text);
            assert_eq!(back.to_algebra().unwrap(), alg);
            assert_eq!(back.form("omega1").unwrap(), z2_cubed_symplectic(1));
        }
    }

    #[test]
    fn representation_round_trip() {
        let ad = crate::representations::adjoint(&z2_cubed()).unwrap();
        let file = RepresentationFile::from_bundle(&ad);
        let back: RepresentationFile = parse(&render(&file)).unwrap();
        assert_eq!(back.to_bundle(None).unwrap(), ad);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse::<AlgebraFile>("{\n  \"scalar_order\": \"two\"\n}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn integers_are_accepted_for_scalars() {
        let text = r#"{"scalar_order": 1, "group": {"moduli": []}, "rho_exponents": [],
            "basis": [{"name": "a", "degree": []}], "kind": "lie", "twist": [[2]]}"#;
        let alg = parse::<AlgebraFile>(text).unwrap().to_algebra().unwrap();
        assert_eq!(alg.twist().get(0, 0), &Scalar::from_int(alg.order(), 2));
    }
}
