//! The `report` verb: what a file is and every check that applies to it.

use std::path::Path;

use colorlie::axioms::{check_3_associative, check_lie, check_pre_lie, twist_flags};
use colorlie::forms::{check_metric, check_quadratic, check_symplectic};
use colorlie::io::{AlgebraFile, RepresentationFile};
use colorlie::prelie::{check_o_operator, check_phase_space, check_pre_lie_representation};
use colorlie::representations::check_representation;
use colorlie::{AlgebraKind, ValidationReport};

use crate::error::Result;
use crate::files::{Input, RepInput};
use crate::verify::phase_space;

pub struct Summary {
    pub lines: Vec<String>,
    pub reports: Vec<ValidationReport>,
}

pub fn run(path: &Path, algebra: Option<&Path>) -> Result<Summary> {
    let input = Input::read(path)?;
    if let Ok(file) = input.parse::<AlgebraFile>() {
        return algebra_summary(&input, &file);
    }
    if input.parse::<RepresentationFile>().is_ok() {
        return representation_summary(path, algebra);
    }
    // reports the algebra parse error, the most common file type
    input.parse::<AlgebraFile>().map(|_| unreachable!())
}

fn algebra_summary(input: &Input, file: &AlgebraFile) -> Result<Summary> {
    let alg = file.to_algebra().map_err(|e| input.fail(e))?;
    let flags = twist_flags(&alg);
    let mut lines = vec![
        format!("kind: {}", alg.kind()),
        format!("dimension: {}", alg.dim()),
        format!("scalars: Q(z_{})", alg.order()),
        format!("grading group moduli: {:?}", alg.group().moduli()),
        format!(
            "twist: {}",
            if alg.is_hom() {
                format!(
                    "multiplicative {}, regular {}, involutive {}",
                    flags.multiplicative, flags.regular, flags.involutive
                )
            } else {
                "identity".into()
            }
        ),
    ];
    let mut reports = vec![match alg.kind() {
        AlgebraKind::Lie => check_lie(&alg),
        AlgebraKind::PreLie => check_pre_lie(&alg),
        AlgebraKind::Associative => check_3_associative(&alg),
    }];
    if alg.kind() == AlgebraKind::Lie {
        for name in file.forms.keys() {
            let f = input.form(file, Some(name))?;
            let degree = match f.degree(alg.basis()) {
                Some(g) => format!("degree {:?}", g.residues()),
                None => "not homogeneous".to_string(),
            };
            lines.push(format!("form {name}: {degree}"));
            for mut r in [check_quadratic(&alg, &f), check_metric(&alg, &f), check_symplectic(&alg, &f)] {
                r.check = format!("{} ({name})", r.check);
                reports.push(r);
            }
        }
        if file.split.is_some() && file.forms.contains_key("omega") {
            reports.push(check_phase_space(&phase_space(input, Some("omega"))?));
        }
    }
    if let Some(p) = &file.provenance {
        lines.push(format!("built by: {}", p.construction));
    }
    Ok(Summary { lines, reports })
}

fn representation_summary(path: &Path, algebra: Option<&Path>) -> Result<Summary> {
    let rep = RepInput::read(path, algebra)?;
    let b = rep.bundle()?;
    let mut lines = vec![
        format!("representation of a {}-dimensional algebra", b.algebra().dim()),
        format!("space dimension: {}", b.space().dim()),
    ];
    let mut reports = Vec::new();
    if rep.file.mu_tilde.is_some() {
        lines.push("pre-Lie representation (mu, mu_tilde)".into());
        reports.push(check_pre_lie_representation(&rep.pre_bundle()?));
    } else {
        reports.push(check_representation(&b));
    }
    if rep.file.operator.is_some() {
        reports.push(check_o_operator(&rep.operator(&b)?, &b));
    }
    Ok(Summary { lines, reports })
}
