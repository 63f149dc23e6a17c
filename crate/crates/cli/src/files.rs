//! Reading inputs with their digests, writing outputs.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use colorlie::io::{self, AlgebraFile, InputDigest, MapFile, Provenance, RepresentationFile, SCHEMA};
use colorlie::representations::FundamentalAlgebra;
use colorlie::{Algebra3Rho, BilinearForm, GradedBasis, HomogeneousMap, Matrix};
use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

/// A file as read from disk.
pub struct Input {
    pub path: PathBuf,
    pub text: String,
}

impl Input {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
        Ok(Self { path: path.to_path_buf(), text })
    }

    pub fn parse<T: DeserializeOwned>(&self) -> Result<T> {
        io::parse(&self.text).map_err(|e| self.fail(e))
    }

    /// Wraps an error with this file's path.
    pub fn fail(&self, source: colorlie::Error) -> CliError {
        CliError::Input { path: self.path.clone(), source }
    }

    /// File name and SHA-256 of the bytes read.
    pub fn digest(&self) -> InputDigest {
        let name = self.path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let hash = Sha256::digest(self.text.as_bytes());
        InputDigest {
            path: name,
            sha256: hash.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }

    pub fn algebra_file(&self) -> Result<AlgebraFile> {
        self.parse()
    }

    pub fn algebra(&self) -> Result<(AlgebraFile, Algebra3Rho)> {
        let file: AlgebraFile = self.parse()?;
        let alg = file.to_algebra().map_err(|e| self.fail(e))?;
        Ok((file, alg))
    }

    pub fn form(&self, file: &AlgebraFile, name: Option<&str>) -> Result<BilinearForm> {
        file.pick_form(name).map_err(|e| self.fail(e))
    }

    /// A map file as a homogeneous map between two bases; a declared degree wins
    /// over the inferred one.
    pub fn map(&self, domain: &GradedBasis, codomain: &GradedBasis) -> Result<HomogeneousMap> {
        let file: MapFile = self.parse()?;
        let m = file.to_matrix().map_err(|e| self.fail(e))?;
        let h = match &file.degree {
            Some(d) => domain
                .group()
                .element(d)
                .and_then(|g| HomogeneousMap::new(domain, codomain, m, g)),
            None => HomogeneousMap::infer(domain, codomain, m),
        };
        h.map_err(|e| self.fail(e))
    }
}

/// A representation file together with the algebra file it names, if any.
pub struct RepInput {
    pub input: Input,
    pub file: RepresentationFile,
    pub algebra: Option<Input>,
}

impl RepInput {
    /// `algebra_ref` is resolved against `explicit`, else relative to the file.
    pub fn read(path: &Path, explicit: Option<&Path>) -> Result<Self> {
        let input = Input::read(path)?;
        let file: RepresentationFile = input.parse()?;
        let algebra = match (&file.algebra, explicit, &file.algebra_ref) {
            (Some(_), _, _) => None,
            (None, Some(p), _) => Some(Input::read(p)?),
            (None, None, Some(r)) => Some(Input::read(&path.parent().unwrap_or(Path::new(".")).join(r))?),
            (None, None, None) => None,
        };
        Ok(Self { input, file, algebra })
    }

    fn referenced(&self) -> Result<Option<AlgebraFile>> {
        self.algebra.as_ref().map(Input::algebra_file).transpose()
    }

    pub fn bundle(&self) -> Result<colorlie::representations::RepresentationBundle> {
        self.file.to_bundle(self.referenced()?.as_ref()).map_err(|e| self.input.fail(e))
    }

    pub fn pre_bundle(&self) -> Result<colorlie::prelie::PreLieRepBundle> {
        self.file.to_pre_bundle(self.referenced()?.as_ref()).map_err(|e| self.input.fail(e))
    }

    pub fn operator(&self, b: &colorlie::representations::RepresentationBundle) -> Result<Matrix> {
        self.file.operator(b.order()).map_err(|e| self.input.fail(e))
    }

    pub fn digests(&self) -> Vec<InputDigest> {
        std::iter::once(self.input.digest()).chain(self.algebra.as_ref().map(Input::digest)).collect()
    }
}

pub fn provenance(construction: &str, parameters: Vec<String>, inputs: Vec<InputDigest>) -> Provenance {
    Provenance {
        construction: construction.to_string(),
        parameters,
        inputs,
    }
}

/// Writes to the path, or stdout when there is none.
pub fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Write { path: p.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
pub struct PairBracket {
    pub args: [usize; 2],
    pub value: BTreeMap<String, String>,
}

/// The binary algebra on ordered pairs of basis elements.
#[derive(Serialize)]
pub struct FundamentalFile {
    pub schema: String,
    pub scalar_order: u32,
    pub pairs: Vec<String>,
    pub twist: Vec<Vec<String>>,
    pub bracket: Vec<PairBracket>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    pub provenance: Provenance,
}

fn text_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

impl FundamentalFile {
    pub fn new(alg: &Algebra3Rho, fa: &FundamentalAlgebra, form: Option<&BilinearForm>, provenance: Provenance) -> Self {
        let names = alg.basis().names();
        let pairs: Vec<String> = (0..fa.dim())
            .map(|p| format!("({},{})", names[p / fa.base_dim()], names[p % fa.base_dim()]))
            .collect();
        let mut bracket = Vec::new();
        for p in 0..fa.dim() {
            for q in 0..fa.dim() {
                let value: BTreeMap<String, String> = fa
                    .value(p, q)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(r, c)| (pairs[r].clone(), c.to_string()))
                    .collect();
                if !value.is_empty() {
                    bracket.push(PairBracket { args: [p, q], value });
                }
            }
        }
        Self {
            schema: SCHEMA.to_string(),
            scalar_order: alg.order().get(),
            pairs,
            twist: text_rows(fa.twist()),
            bracket,
            form: form.map(|f| text_rows(f.matrix())),
            provenance,
        }
    }
}
