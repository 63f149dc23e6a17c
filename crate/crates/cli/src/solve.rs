use std::path::Path;

use colorlie::constructions::{
    centroid, centromorphisms, check_centroid, check_centromorphism, check_derivation, derivations, MapSpace,
};
use colorlie::forms::{check_quadratic, check_symplectic, solve_quadratic_forms, solve_symplectic_forms, NONDEGENERACY};
use colorlie::io::{self, SolutionFile};
use colorlie::{Algebra3Rho, BilinearForm, Error, GroupElement, Matrix, Scalar, ValidationReport};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::cli::SolveKind;
use crate::error::{CliError, Result};
use crate::files::{provenance, Input};

pub struct Request<'a> {
    pub kind: SolveKind,
    pub file: &'a Path,
    pub degree: Option<&'a [i64]>,
    pub antisymmetric: Option<&'a Path>,
    pub form: Option<&'a str>,
    pub samples: usize,
}

/// Fixed so that repeated runs write identical files.
const SAMPLING_SEED: u64 = 0x5eed;

fn degree(alg: &Algebra3Rho, residues: &[i64]) -> Result<GroupElement> {
    let g = alg.group();
    if residues == [0] && g.rank() != 1 {
        return Ok(g.zero());
    }
    g.element(residues).map_err(CliError::from)
}

fn residues(g: &GroupElement) -> Vec<i64> {
    g.residues().iter().map(|&r| r as i64).collect()
}

fn closure(mut report: ValidationReport, next: ValidationReport) -> ValidationReport {
    report.absorb(next);
    report
}

fn require(report: ValidationReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::ClosureFailure(Box::new(report)).into())
    }
}

/// How many of `samples` random integer combinations of the members are invertible,
/// and which members are invertible on their own.
fn nondegeneracy(members: &[Matrix], samples: usize) -> String {
    let Some(first) = members.first() else {
        return "no members".into();
    };
    let o = first.order();
    let alone: Vec<String> = members
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_invertible())
        .map(|(i, _)| i.to_string())
        .collect();
    let mut rng = StdRng::seed_from_u64(SAMPLING_SEED);
    let draws: Vec<Vec<i64>> = (0..samples)
        .map(|_| members.iter().map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    let hits = draws
        .par_iter()
        .filter(|coeffs| {
            let sum = members
                .iter()
                .zip(coeffs.iter())
                .fold(Matrix::zeros(o, first.rows(), first.cols()), |acc, (m, &c)| {
                    acc.add(&m.scale(&Scalar::from_int(o, c)))
                });
            sum.is_invertible()
        })
        .count();
    let alone = if alone.is_empty() { "none".to_string() } else { alone.join(", ") };
    format!("non-degenerate members: {alone}; {hits} of {samples} sampled combinations are non-degenerate")
}

fn maps(space: &MapSpace) -> Vec<Matrix> {
    space.maps.iter().map(|h| h.matrix().clone()).collect()
}

/// Keeps the forms of one degree when a degree is given.
fn forms_of(alg: &Algebra3Rho, forms: Vec<BilinearForm>, deg: Option<&GroupElement>) -> Vec<BilinearForm> {
    match deg {
        Some(d) => forms.into_iter().filter(|f| f.degree(alg.basis()).as_ref() == Some(d)).collect(),
        None => forms,
    }
}

pub fn run(req: &Request) -> Result<SolutionFile> {
    let input = Input::read(req.file)?;
    let (file, alg) = input.algebra()?;
    let mut digests = vec![input.digest()];
    let mut params = Vec::new();
    if let Some(d) = req.degree {
        params.push(format!("degree={}", d.iter().map(i64::to_string).collect::<Vec<_>>().join(",")));
    }
    let deg = req.degree.map(|d| degree(&alg, d)).transpose()?;
    let zero = alg.group().zero();
    let o = alg.order();
    let name = req.kind.name();

    let out = match req.kind {
        SolveKind::Derivations => {
            let deg = deg.unwrap_or(zero);
            let form = match req.antisymmetric {
                Some(p) => {
                    let f_input = Input::read(p)?;
                    let f_file = f_input.algebra_file()?;
                    digests.push(f_input.digest());
                    params.push("antisymmetric".into());
                    Some(f_input.form(&f_file, req.form)?)
                }
                None => None,
            };
            let space = derivations(&alg, &deg, form.as_ref())?;
            require(space.maps.iter().fold(ValidationReport::new("derivations"), |r, h| {
                closure(r, check_derivation(&alg, h, form.as_ref()))
            }))?;
            SolutionFile::new(name, o, Some(residues(&deg)), &maps(&space))
        }
        SolveKind::Centroid => {
            let deg = deg.unwrap_or(zero);
            let space = centroid(&alg, &deg)?;
            require(
                space
                    .maps
                    .iter()
                    .fold(ValidationReport::new("centroid"), |r, h| closure(r, check_centroid(&alg, h))),
            )?;
            SolutionFile::new(name, o, Some(residues(&deg)), &maps(&space))
        }
        SolveKind::Centromorphisms => {
            let deg = deg.unwrap_or(zero);
            let chi = input.form(&file, req.form)?;
            params.extend(req.form.map(|f| format!("form={f}")));
            let space = centromorphisms(&alg, &chi, &deg)?;
            require(space.maps.iter().fold(ValidationReport::new("centromorphisms"), |r, h| {
                closure(r, check_centromorphism(&alg, &chi, h))
            }))?;
            SolutionFile::new(name, o, Some(residues(&deg)), &maps(&space))
        }
        SolveKind::QuadraticForms | SolveKind::SymplecticForms => {
            let symplectic = req.kind == SolveKind::SymplecticForms;
            let all = if symplectic { solve_symplectic_forms(&alg)? } else { solve_quadratic_forms(&alg)? };
            let forms = forms_of(&alg, all, deg.as_ref());
            let mut report = ValidationReport::new(name);
            for f in &forms {
                let mut r = if symplectic { check_symplectic(&alg, f) } else { check_quadratic(&alg, f) };
                r.violations.retain(|v| v.identity != NONDEGENERACY);
                report.absorb(r);
            }
            require(report)?;
            let members: Vec<Matrix> = forms.iter().map(|f| f.matrix().clone()).collect();
            params.push(format!("samples={}", req.samples));
            let mut sol = SolutionFile::new(name, o, deg.as_ref().map(residues), &members);
            sol.nondegenerate_combinations = Some(nondegeneracy(&members, req.samples));
            sol
        }
    };
    Ok(SolutionFile {
        provenance: Some(provenance(name, params, digests)),
        ..out
    })
}

pub fn render(sol: &SolutionFile) -> String {
    io::render(sol)
}
