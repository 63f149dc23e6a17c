use std::path::Path;

use colorlie::axioms::{check_3_associative, check_lie, check_morphism, check_pre_lie, twist_flags, TwistFlags};
use colorlie::forms::{check_metric, check_quadratic, check_symplectic};
use colorlie::prelie::{check_o_operator, check_phase_space, check_pre_lie_representation, PhaseSpace};
use colorlie::representations::check_representation;
use colorlie::ValidationReport;

use crate::cli::Check;
use crate::error::{CliError, Result};
use crate::files::{Input, RepInput};

pub struct Options<'a> {
    pub form: Option<&'a str>,
    pub algebra: Option<&'a Path>,
    pub target: Option<&'a Path>,
    pub map: Option<&'a Path>,
}

/// One report per check, plus twist properties when `hom` was asked for.
pub fn run(file: &Path, checks: &[Check], opts: &Options) -> Result<(Vec<ValidationReport>, Option<TwistFlags>)> {
    let input = Input::read(file)?;
    let mut reports = Vec::with_capacity(checks.len());
    let mut flags = None;
    for &check in checks {
        reports.push(match check {
            Check::Lie => check_lie(&input.algebra()?.1),
            Check::Hom => {
                let alg = input.algebra()?.1;
                flags = Some(twist_flags(&alg));
                check_lie(&alg)
            }
            Check::PreLie => check_pre_lie(&input.algebra()?.1),
            Check::Associative => check_3_associative(&input.algebra()?.1),
            Check::Quadratic | Check::Metric | Check::Symplectic => {
                let (f, alg) = input.algebra()?;
                let form = input.form(&f, opts.form)?;
                match check {
                    Check::Quadratic => check_quadratic(&alg, &form),
                    Check::Metric => check_metric(&alg, &form),
                    _ => check_symplectic(&alg, &form),
                }
            }
            Check::Representation => check_representation(&RepInput::read(file, opts.algebra)?.bundle()?),
            Check::PreRepresentation => {
                check_pre_lie_representation(&RepInput::read(file, opts.algebra)?.pre_bundle()?)
            }
            Check::OOperator => {
                let rep = RepInput::read(file, opts.algebra)?;
                let b = rep.bundle()?;
                check_o_operator(&rep.operator(&b)?, &b)
            }
            Check::PhaseSpace => check_phase_space(&phase_space(&input, opts.form)?),
            Check::Morphism => {
                let (Some(target), Some(map)) = (opts.target, opts.map) else {
                    return Err(CliError::Usage("morphism needs --target and --map".into()));
                };
                let src = input.algebra()?.1;
                let dst = Input::read(target)?.algebra()?.1;
                let alpha = Input::read(map)?.map(src.basis(), dst.basis())?;
                check_morphism(&src, &dst, &alpha)
            }
        });
    }
    Ok((reports, flags))
}

/// An algebra file with a `split` and a symplectic form (default name `omega`).
pub fn phase_space(input: &Input, form: Option<&str>) -> Result<PhaseSpace> {
    let (f, big) = input.algebra()?;
    let base_dim = f
        .split
        .as_ref()
        .map(|s| s.base_dim)
        .ok_or_else(|| CliError::Usage(format!("{}: no split recorded", input.path.display())))?;
    let name = form.or(f.forms.contains_key("omega").then_some("omega"));
    let omega = input.form(&f, name)?;
    Ok(PhaseSpace { big, omega, base_dim })
}
