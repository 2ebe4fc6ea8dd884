use std::collections::BTreeMap;

use ginvar::hermitian::Signature;
use ginvar::maps::{catalog, source_roster, RationalMap};
use ginvar::parse::{parse_polynomial, parse_polynomial_list};
use ginvar::{Error, Polynomial, Result, Roster};

use crate::MapArgs;

pub fn roster(vars: &[String]) -> Result<Roster> {
    let vars: Vec<&str> = vars.iter().map(|v| v.trim()).collect();
    if vars.is_empty() {
        return Err(Error::InvalidParam { name: "vars".into(), reason: "at least one variable is required".into() });
    }
    for (k, v) in vars.iter().enumerate() {
        let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || ["i", "sqrt", "root4"].contains(v) {
            return Err(Error::InvalidParam { name: "vars".into(), reason: format!("`{v}` is not a usable variable name") });
        }
        if vars[..k].contains(v) {
            return Err(Error::InvalidParam { name: "vars".into(), reason: format!("`{v}` is listed twice") });
        }
    }
    Ok(Roster::new(vars))
}

pub fn params(pairs: &[String]) -> Result<BTreeMap<String, String>> {
    pairs
        .iter()
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| Error::InvalidParam {
                name: p.clone(),
                reason: "expected KEY=VALUE".into(),
            })?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

pub fn signature(name: &str, text: &str) -> Result<Signature> {
    let invalid = || Error::InvalidParam { name: name.into(), reason: format!("expected `a,b`, got `{text}`") };
    let (a, b) = text.split_once(',').ok_or_else(invalid)?;
    let a = a.trim().parse().map_err(|_| invalid())?;
    let b = b.trim().parse().map_err(|_| invalid())?;
    Signature::new(a, b)
}

pub fn map(args: &MapArgs) -> Result<RationalMap> {
    if let Some(name) = &args.map {
        return catalog(name, &params(&args.params)?);
    }
    let (Some(source), Some(target), Some(num)) = (&args.source, &args.target, &args.num) else {
        return Err(Error::MissingParam("--map, or --source with --target and --num".into()));
    };
    let source = signature("source", source)?;
    let target = signature("target", target)?;
    let roster = source_roster(source.affine_dim());
    let mut numerators = parse_polynomial_list(num, &roster)?;
    // Fewer components than target slots means composing with the
    // inclusion that pads trailing zeros.
    if numerators.len() < target.affine_dim() {
        numerators.resize(target.affine_dim(), Polynomial::zero(roster.clone()));
    }
    let denominator = parse_polynomial(args.den.as_deref().unwrap_or("1"), &roster)?;
    RationalMap::new(source, target, numerators, denominator)
}

/// Splits a trailing `+ O(k)` truncation marker off `text`.
pub fn strip_truncation(text: &str) -> (&str, bool) {
    let trimmed = text.trim_end();
    let Some(body) = trimmed.strip_suffix(')') else {
        return (text, false);
    };
    let Some(open) = body.rfind("O(") else {
        return (text, false);
    };
    if open + 2 >= body.len() || !body[open + 2..].trim().chars().all(|c| c.is_ascii_digit()) {
        return (text, false);
    }
    match body[..open].trim_end().strip_suffix('+') {
        Some(rest) => (rest, true),
        None => (text, false),
    }
}
