//! Parsers for the textual function, class and Schwarz-function specs.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use schwarzian_lab::{
    build_from_schwarz, extremal_g, extremal_omega, AnalyticFunction, ClassSpec, Complex64,
    SchwarzFunction, TaylorSeries,
};

/// Accepts `0.3`, `-0.2i`, `0.3+0.2i`, `0.3-0.2i` and `re:im`.
pub fn complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some((re, im)) = t.split_once(':') {
        return Ok(Complex64::new(number(re)?, number(im)?));
    }
    t.parse::<Complex64>()
        .map_err(|_| anyhow!("invalid complex number `{s}`"))
}

fn number(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .with_context(|| format!("invalid number `{s}`"))
}

/// `g:<beta>` or `f:<alpha>`, validated.
pub fn class(s: &str) -> Result<ClassSpec> {
    let (kind, value) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("class spec must look like g:<beta> or f:<alpha>, got `{s}`"))?;
    let v = number(value)?;
    let spec = match kind.trim() {
        "g" | "G" => ClassSpec::g(v)?,
        "f" | "F" => ClassSpec::f(v)?,
        other => bail!("unknown class `{other}` (expected g or f)"),
    };
    Ok(spec)
}

/// `identity`, `blaschke:re:im/re:im@theta` or `poly:re:im/...` (the
/// coefficients of `z, z^2, ...`).
pub fn omega(s: &str) -> Result<SchwarzFunction> {
    let s = s.trim();
    if s == "identity" || s == "z" {
        return Ok(SchwarzFunction::identity());
    }
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("Schwarz function must start with blaschke: or poly:, got `{s}`"))?;
    match kind {
        "blaschke" => {
            let (zeros, theta) = match body.rsplit_once('@') {
                Some((z, t)) => (z, number(t)?),
                None => (body, 0.0),
            };
            let zeros = zeros.split('/').map(complex).collect::<Result<Vec<_>>>()?;
            Ok(SchwarzFunction::blaschke(zeros, theta)?)
        }
        "poly" => {
            let mut coeffs = vec![Complex64::new(0.0, 0.0)];
            for c in body.split('/') {
                coeffs.push(complex(c)?);
            }
            Ok(SchwarzFunction::series(TaylorSeries::new(coeffs)?)?)
        }
        other => bail!("unknown Schwarz function kind `{other}`"),
    }
}

/// Coefficients from a JSON list of `[re, im]` pairs.
pub fn series_file(path: &Path) -> Result<TaylorSeries> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let pairs: Vec<[f64; 2]> = serde_json::from_str(&text)
        .with_context(|| format!("{} must hold a JSON list of [re, im] pairs", path.display()))?;
    Ok(TaylorSeries::new(
        pairs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect(),
    )?)
}

/// A parsed `--fn` argument.
pub struct FunctionSpec {
    pub text: String,
    pub function: AnalyticFunction,
}

/// `extremal-g:<beta>`, `extremal-f:<alpha>,<z0>`, `series:<file>`,
/// `subord:<class>;<omega>` (a comma also separates), `identity` or `koebe`.
pub fn function(s: &str, order: usize) -> Result<FunctionSpec> {
    let text = s.trim().to_string();
    let function = match text.split_once(':') {
        None if text == "identity" => AnalyticFunction::identity(),
        None if text == "koebe" => AnalyticFunction::koebe(order),
        Some(("extremal-g", beta)) => extremal_g(number(beta)?)?,
        Some(("extremal-f", rest)) => {
            let (a, z0) = rest
                .split_once(',')
                .ok_or_else(|| anyhow!("extremal-f needs <alpha>,<z0>, got `{rest}`"))?;
            let alpha = number(a)?;
            build_from_schwarz(
                ClassSpec::f(alpha)?,
                extremal_omega(alpha, number(z0)?)?,
                order,
            )?
        }
        Some(("series", path)) => AnalyticFunction::Series(series_file(Path::new(path))?),
        Some(("subord", rest)) => {
            let cut = rest
                .find([';', ','])
                .ok_or_else(|| anyhow!("subord needs <class>;<omega>, got `{rest}`"))?;
            build_from_schwarz(class(&rest[..cut])?, omega(&rest[cut + 1..])?, order)?
        }
        _ => bail!("unknown function spec `{text}`"),
    };
    Ok(FunctionSpec { text, function })
}
