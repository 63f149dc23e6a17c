use std::path::{Path, PathBuf};

use colorlie::axioms::sub_adjacent;
use colorlie::constructions::{symplectic_from_derivation, tensor_with_associative, twist_by_centroid, yau_twist, TwistMode};
use colorlie::io::{self, AlgebraFile, InputDigest, RepresentationFile, Split};
use colorlie::prelie::{phase_space, pre_lie_from_o_operator, pre_lie_from_symplectic, OOperator};
use colorlie::representations::{
    check_fundamental, check_fundamental_metric, coadjoint, double_metric_algebra, dual_representation,
    fundamental_algebra, fundamental_metric, semidirect_sum,
};
use colorlie::{Algebra3Rho, BilinearForm, Error};

use crate::cli::Construction;
use crate::error::{CliError, Result};
use crate::files::{provenance, FundamentalFile, Input, RepInput};

pub struct Request<'a> {
    pub name: Construction,
    pub inputs: &'a [PathBuf],
    pub form: Option<&'a str>,
    pub assoc_form: Option<&'a str>,
    pub algebra: Option<&'a Path>,
}

fn arity(req: &Request, n: usize) -> Result<()> {
    if req.inputs.len() != n {
        return Err(CliError::Usage(format!(
            "{} takes {n} input file(s), got {}",
            req.name.name(),
            req.inputs.len()
        )));
    }
    Ok(())
}

fn algebra_out(
    alg: &Algebra3Rho,
    forms: &[(&str, &BilinearForm)],
    split: Option<usize>,
    req: &Request,
    parameters: Vec<String>,
    inputs: Vec<InputDigest>,
) -> String {
    let mut file = AlgebraFile::from_algebra(alg);
    for (name, f) in forms {
        file = file.with_form(name, f);
    }
    file.split = split.map(|base_dim| Split { base_dim });
    file.provenance = Some(provenance(req.name.name(), parameters, inputs));
    io::render(&file)
}

fn form_parameter(form: Option<&str>) -> Vec<String> {
    form.map(|f| vec![format!("form={f}")]).unwrap_or_default()
}

/// The rendered output file; every construction re-verifies what it builds.
pub fn run(req: &Request) -> Result<String> {
    let first = || Input::read(&req.inputs[0]);
    match req.name {
        Construction::Twist | Construction::Twist3 | Construction::Yau => {
            arity(req, 2)?;
            let input = first()?;
            let (file, alg) = input.algebra()?;
            let map_input = Input::read(&req.inputs[1])?;
            let psi = map_input.map(alg.basis(), alg.basis())?;
            let out = match req.name {
                Construction::Twist => twist_by_centroid(&alg, &psi, TwistMode::Once)?,
                Construction::Twist3 => twist_by_centroid(&alg, &psi, TwistMode::Thrice)?,
                _ => yau_twist(&alg, &psi)?,
            };
            let mut text_file = AlgebraFile::from_algebra(&out);
            if req.name == Construction::Yau {
                // same space; the forms are carried over for re-checking
                text_file.forms = file.forms.clone();
            }
            text_file.provenance = Some(provenance(req.name.name(), vec![], vec![input.digest(), map_input.digest()]));
            Ok(io::render(&text_file))
        }
        Construction::Tensor => {
            arity(req, 2)?;
            let input = first()?;
            let (file, alg) = input.algebra()?;
            let chi = input.form(&file, req.form)?;
            let assoc_input = Input::read(&req.inputs[1])?;
            let (afile, assoc) = assoc_input.algebra()?;
            let chi_g = assoc_input.form(&afile, req.assoc_form)?;
            let (out, form) = tensor_with_associative(&alg, &chi, &assoc, &chi_g)?;
            let mut params = form_parameter(req.form);
            params.extend(req.assoc_form.map(|f| format!("assoc-form={f}")));
            Ok(algebra_out(&out, &[("chi", &form)], None, req, params, vec![input.digest(), assoc_input.digest()]))
        }
        Construction::Semidirect => {
            arity(req, 1)?;
            let rep = RepInput::read(&req.inputs[0], req.algebra)?;
            let b = rep.bundle()?;
            let out = semidirect_sum(&b)?;
            Ok(algebra_out(&out, &[], Some(b.algebra().dim()), req, vec![], rep.digests()))
        }
        Construction::DualRep => {
            arity(req, 1)?;
            let rep = RepInput::read(&req.inputs[0], req.algebra)?;
            let dual = dual_representation(&rep.bundle()?)?;
            let mut file = RepresentationFile::from_bundle(&dual);
            file.provenance = Some(provenance(req.name.name(), vec![], rep.digests()));
            Ok(io::render(&file))
        }
        Construction::Coadjoint => {
            arity(req, 1)?;
            let input = first()?;
            let co = coadjoint(&input.algebra()?.1)?;
            let mut file = RepresentationFile::from_bundle(&co);
            file.provenance = Some(provenance(req.name.name(), vec![], vec![input.digest()]));
            Ok(io::render(&file))
        }
        Construction::DoubleMetric => {
            arity(req, 1)?;
            let input = first()?;
            let alg = input.algebra()?.1;
            let (big, metric) = double_metric_algebra(&alg)?;
            Ok(algebra_out(&big, &[("metric", &metric)], Some(alg.dim()), req, vec![], vec![input.digest()]))
        }
        Construction::Subadjacent => {
            arity(req, 1)?;
            let input = first()?;
            let out = sub_adjacent(&input.algebra()?.1)?;
            Ok(algebra_out(&out, &[], None, req, vec![], vec![input.digest()]))
        }
        Construction::PreLieFromSymplectic => {
            arity(req, 1)?;
            let input = first()?;
            let (file, alg) = input.algebra()?;
            let omega = input.form(&file, req.form)?;
            let out = pre_lie_from_symplectic(&alg, &omega)?;
            Ok(algebra_out(&out, &[], None, req, form_parameter(req.form), vec![input.digest()]))
        }
        Construction::PreLieFromOOperator => {
            arity(req, 1)?;
            let rep = RepInput::read(&req.inputs[0], req.algebra)?;
            let b = rep.bundle()?;
            let t = rep.operator(&b)?;
            let (out, _) = pre_lie_from_o_operator(&OOperator::new(t, b)?)?;
            Ok(algebra_out(&out, &[], None, req, vec![], rep.digests()))
        }
        Construction::PhaseSpace => {
            arity(req, 1)?;
            let input = first()?;
            let ps = phase_space(&input.algebra()?.1)?;
            Ok(algebra_out(&ps.big, &[("omega", &ps.omega)], Some(ps.base_dim), req, vec![], vec![input.digest()]))
        }
        Construction::Fundamental => {
            arity(req, 1)?;
            let input = first()?;
            let (file, alg) = input.algebra()?;
            let fa = fundamental_algebra(&alg);
            let mut report = check_fundamental(&fa);
            let form = match req.form {
                Some(name) => {
                    let varphi = input.form(&file, Some(name))?;
                    let f = fundamental_metric(&alg, &varphi)?;
                    report.absorb(check_fundamental_metric(&fa, &f));
                    Some(f)
                }
                None => None,
            };
            if !report.passed() {
                return Err(Error::ClosureFailure(Box::new(report)).into());
            }
            let prov = provenance(req.name.name(), form_parameter(req.form), vec![input.digest()]);
            Ok(io::render(&FundamentalFile::new(&alg, &fa, form.as_ref(), prov)))
        }
        Construction::SymplecticFromDerivation => {
            arity(req, 2)?;
            let input = first()?;
            let (file, alg) = input.algebra()?;
            let varphi = input.form(&file, req.form)?;
            let map_input = Input::read(&req.inputs[1])?;
            let d = map_input.map(alg.basis(), alg.basis())?;
            let omega = symplectic_from_derivation(&alg, &varphi, &d)?;
            Ok(algebra_out(
                &alg,
                &[("metric", &varphi), ("omega", &omega)],
                None,
                req,
                form_parameter(req.form),
                vec![input.digest(), map_input.digest()],
            ))
        }
    }
}
