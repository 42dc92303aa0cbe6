//! Command bodies. Each returns the text destined for stdout.

use std::fmt::Write as _;
use std::path::Path;

use dec_core::{d, wedge, wilson_product, Cochain, DecError, SimplicialMap, WedgeMethod};

use crate::documents::{to_json, CochainDocument, ComplexDocument, LabeledComplex, MapDocument};
use crate::error::CliError;

/// `--method` values of `dec wedge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ProductMethod {
    Perm,
    #[default]
    AvgLeft,
    AvgRight,
    Whitney,
}

impl ProductMethod {
    pub fn apply(self, on: &LabeledComplex, a: &Cochain, b: &Cochain) -> Cochain {
        let x = &on.complex;
        match self {
            ProductMethod::Perm => wedge(x, a, b, WedgeMethod::PermutationSum),
            ProductMethod::AvgLeft => wedge(x, a, b, WedgeMethod::AverageOuterLeft),
            ProductMethod::AvgRight => wedge(x, a, b, WedgeMethod::AverageOuterRight),
            ProductMethod::Whitney => wilson_product(x, a, b),
        }
    }
}

pub fn cmd_d(complex: &Path, cochain: &Path) -> Result<String, CliError> {
    let x = ComplexDocument::load(complex)?;
    let a = CochainDocument::load(cochain, &x)?;
    Ok(to_json(&CochainDocument::from_cochain(&d(&x.complex, &a), &x)))
}

/// Output text plus an optional warning for stderr.
pub fn cmd_wedge(
    complex: &Path,
    left: &Path,
    right: &Path,
    method: ProductMethod,
) -> Result<(String, Option<String>), CliError> {
    let x = ComplexDocument::load(complex)?;
    let a = CochainDocument::load(left, &x)?;
    let b = CochainDocument::load(right, &x)?;
    let degree = a.degree() + b.degree();
    let warning = (degree > x.complex.dimension()).then(|| {
        format!(
            "warning: product degree {degree} exceeds complex dimension {}; result is the zero cochain",
            x.complex.dimension()
        )
    });
    let product = method.apply(&x, &a, &b);
    Ok((to_json(&CochainDocument::from_cochain(&product, &x)), warning))
}

pub fn cmd_pullback(source: &Path, target: &Path, map: &Path, cochain: &Path) -> Result<String, CliError> {
    let x = ComplexDocument::load(source)?;
    let y = ComplexDocument::load(target)?;
    let vertex_map = MapDocument::load(map, &x, &y)?;
    let f = SimplicialMap::validate(&x.complex, &y.complex, vertex_map).map_err(|e| describe_map_error(e, &x, &y))?;
    let a = CochainDocument::load(cochain, &y)?;
    Ok(to_json(&CochainDocument::from_cochain(&f.pullback(&a), &x)))
}

fn describe_map_error(e: DecError, x: &LabeledComplex, y: &LabeledComplex) -> CliError {
    CliError::validation(match e {
        DecError::SpanningViolation(s) => {
            format!("spanning violation: image of {} is not a simplex of the target", x.labels.bracket(&s))
        }
        DecError::MissingVertexImage(v) => format!("vertex map has no image for {:?}", x.labels.name(v)),
        DecError::ImageNotInTarget(v) => format!("vertex map sends a vertex to {:?}, not in the target", y.labels.name(v)),
        other => other.to_string(),
    })
}

pub fn cmd_info(complex: &Path) -> Result<String, CliError> {
    let x = ComplexDocument::load(complex)?;
    let counts = x.complex.counts();
    let mut out = String::new();
    writeln!(out, "dimension: {}", x.complex.dimension()).unwrap();
    for (k, n) in counts.iter().enumerate() {
        writeln!(out, "{k}-simplices: {n}").unwrap();
    }
    let joined: Vec<String> = counts.iter().map(ToString::to_string).collect();
    writeln!(out, "counts: {}", joined.join("/")).unwrap();
    writeln!(out, "euler characteristic: {}", x.complex.euler_characteristic()).unwrap();
    Ok(out)
}
