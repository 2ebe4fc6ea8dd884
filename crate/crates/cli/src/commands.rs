use std::fmt::Write as _;
use std::io::Write;

use ginvar::gin::{gin_ideal, gin_subspace, GinConfig, MonomialSubspace};
use ginvar::hermitian::{holomorphic_decomposition_span, quotient_gin_of_form, real_form_gin, FormBasis, HermitianForm};
use ginvar::maps::{catalog, compare, homogenize_map, invariants, quotient, InvariantReport, RationalMap, CATALOG};
use ginvar::parse::{parse_polynomial, parse_polynomial_list};
use ginvar::{Error, Ideal, MonomialIdeal, MonomialOrder, Polynomial, Result, Roster};
use serde_json::json;

use crate::{input, CatalogAction, Cli, Command};

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let cfg = cli.global.config();
    cfg.validate()?;
    let json = cli.global.json;
    let text = match &cli.command {
        Command::GinIdeal { vars, order, polys } => gin_ideal_cmd(vars, *order, polys, &cfg, json)?,
        Command::SubspaceGin { vars, order, assume_truncation_faithful, polys } => {
            subspace_gin_cmd(vars, *order, polys, *assume_truncation_faithful, &cfg, json, err)?
        }
        Command::MapInvariants { map, orders } => {
            let report = invariants(&input::map(map)?, &cfg, orders)?;
            if json {
                pretty(&report.to_json())
            } else {
                report_text(&report)
            }
        }
        Command::Quotient { map, order } => quotient_cmd(&input::map(map)?, *order, &cfg, json)?,
        Command::Compare { map_a, map_b, params_a, params_b, orders } => {
            let a = catalog(map_a, &input::params(params_a)?)?;
            let b = catalog(map_b, &input::params(params_b)?)?;
            compare_cmd(&a, &b, orders, &cfg, json)?
        }
        Command::Catalog { action } => catalog_cmd(action, json)?,
        Command::RealformGin { vars, degree, order, assume_truncation_faithful, expr } => {
            realform_cmd(vars, *degree, *order, expr, *assume_truncation_faithful, &cfg, json, err)?
        }
    };
    // A closed stdout is not a computation error.
    let _ = out.write_all(text.as_bytes());
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn ideal_text(ideal: &MonomialIdeal, ord: MonomialOrder) -> String {
    if ideal.is_zero() {
        "0".into()
    } else {
        ideal.display_with(ord)
    }
}

fn gin_ideal_cmd(vars: &[String], ord: MonomialOrder, polys: &str, cfg: &GinConfig, json: bool) -> Result<String> {
    let roster = input::roster(vars)?;
    let ideal = Ideal::new(parse_polynomial_list(polys, &roster)?)?;
    let gin = gin_ideal(&ideal, ord, cfg)?;
    Ok(if json {
        pretty(&json!({ "order": ord.name(), "seed": cfg.seed, "gin": gin.render(ord) }))
    } else {
        format!("{}\n", ideal_text(&gin, ord))
    })
}

fn check_truncation<'a>(text: &'a str, allowed: bool, err: &mut dyn Write) -> Result<&'a str> {
    let (body, truncated) = input::strip_truncation(text);
    if truncated {
        if !allowed {
            return Err(Error::InvalidParam {
                name: "input".into(),
                reason: "truncated series are unsound under affine changes; pass --assume-truncation-faithful to accept them".into(),
            });
        }
        let _ = writeln!(err, "warning: treating truncated input `{}` as exact", text.trim());
    }
    Ok(body)
}

fn subspace_text(s: &MonomialSubspace, ord: MonomialOrder) -> String {
    if s.dim() == 0 {
        "0".into()
    } else {
        s.display_with(ord)
    }
}

fn subspace_gin_cmd(
    vars: &[String],
    ord: MonomialOrder,
    polys: &str,
    allow_truncated: bool,
    cfg: &GinConfig,
    json: bool,
    err: &mut dyn Write,
) -> Result<String> {
    let roster = input::roster(vars)?;
    let mut xs = Vec::new();
    for piece in polys.split(';').filter(|p| !p.trim().is_empty()) {
        xs.push(parse_polynomial(check_truncation(piece, allow_truncated, err)?, &roster)?);
    }
    let gin = gin_subspace(&roster, &xs, ord, cfg)?;
    Ok(if json {
        pretty(&json!({ "order": ord.name(), "seed": cfg.seed, "gin": gin.render(ord) }))
    } else {
        format!("{}\n", subspace_text(&gin, ord))
    })
}

fn report_text(r: &InvariantReport) -> String {
    let ord = r.primary_order();
    let mut s = String::new();
    let _ = writeln!(s, "map: {}", r.map);
    let _ = writeln!(s, "degree: {}", r.degree);
    let _ = writeln!(s, "source: {}  target: {}", r.source, r.target);
    let _ = writeln!(s, "seed: {}", r.seed);
    let _ = writeln!(s, "side: {:+}", r.side);
    for (o, g) in r.orders.iter().zip(&r.gin_components) {
        let _ = writeln!(s, "gin(I(F)) [{o}]: {}", ideal_text(g, *o));
    }
    let _ = writeln!(s, "gin(I(H(q))) [{ord}]: {}", ideal_text(&r.gin_quotient, ord));
    let green = MonomialOrder::GreenGrLex;
    let _ = writeln!(s, "gin(afspan F) [{green}]: {}", subspace_text(&r.gin_afspan, green));
    let _ = writeln!(s, "afspan cross-check: {}", if r.afspan_crosscheck { "agree" } else { "DISAGREE" });
    s
}

fn quotient_cmd(map: &RationalMap, ord: MonomialOrder, cfg: &GinConfig, json: bool) -> Result<String> {
    let h = homogenize_map(map);
    let (q, side) = quotient(&h)?;
    let span = holomorphic_decomposition_span(&q);
    let gin = quotient_gin_of_form(&q, cfg, ord)?;
    let basis: Vec<String> = span.iter().map(|p| p.display_with(ord)).collect();
    if json {
        return Ok(pretty(&json!({
            "map": map.label(),
            "side": side,
            "q": q.display_with(ord),
            "rank": span.len(),
            "span": basis,
            "order": ord.name(),
            "seed": cfg.seed,
            "gin_quotient": gin.render(ord),
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "map: {}", map.label());
    let _ = writeln!(s, "side: {side:+}");
    let _ = writeln!(s, "q = {}", q.display_with(ord));
    let _ = writeln!(s, "rank: {}", span.len());
    let _ = writeln!(s, "H(q) basis:");
    for p in &basis {
        let _ = writeln!(s, "  {p}");
    }
    let _ = writeln!(s, "gin [{ord}]: {}", ideal_text(&gin, ord));
    Ok(s)
}

fn compare_cmd(a: &RationalMap, b: &RationalMap, orders: &[MonomialOrder], cfg: &GinConfig, json: bool) -> Result<String> {
    let (ra, rb) = rayon::join(|| invariants(a, cfg, orders), || invariants(b, cfg, orders));
    let (ra, rb) = (ra?, rb?);
    let cmp = compare(&ra, &rb)?;
    if json {
        let value = serde_json::to_value(&cmp).expect("comparison serializes");
        return Ok(pretty(&value));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{} vs {}", cmp.map_a, cmp.map_b);
    for d in &cmp.invariants {
        let _ = writeln!(s, "  {}: {}", d.invariant, if d.equal { "equal" } else { "differ" });
    }
    let _ = writeln!(s, "verdict: {}", cmp.verdict.as_str());
    Ok(s)
}

fn catalog_cmd(action: &CatalogAction, json: bool) -> Result<String> {
    match action {
        CatalogAction::List => {
            if json {
                let entries: Vec<_> =
                    CATALOG.iter().map(|e| json!({ "name": e.name, "summary": e.summary, "params": e.params })).collect();
                return Ok(pretty(&serde_json::Value::Array(entries)));
            }
            let width = CATALOG.iter().map(|e| e.name.len()).max().unwrap_or(0);
            let mut s = String::new();
            for e in CATALOG {
                let needs =
                    if e.params.is_empty() { String::new() } else { format!("  [requires {}]", e.params.join(", ")) };
                let _ = writeln!(s, "{:width$}  {}{needs}", e.name, e.summary);
            }
            Ok(s)
        }
        CatalogAction::Show { name, params } => {
            let map = catalog(name, &input::params(params)?)?;
            let h = homogenize_map(&map);
            let ord = MonomialOrder::GrLex;
            let show = |ps: &[Polynomial]| ps.iter().map(|p| p.display_with(ord)).collect::<Vec<_>>();
            if json {
                return Ok(pretty(&json!({
                    "map": map.label(),
                    "source": map.source(),
                    "target": map.target(),
                    "numerators": show(map.numerators()),
                    "denominator": map.denominator().display_with(ord),
                    "degree": h.degree(),
                    "homogenized": show(h.components()),
                })));
            }
            let mut s = String::new();
            let _ = writeln!(s, "map: {}", map.label());
            let _ = writeln!(s, "source: {}  target: {}", map.source(), map.target());
            let _ = writeln!(s, "numerators: {}", show(map.numerators()).join("; "));
            let _ = writeln!(s, "denominator: {}", map.denominator().display_with(ord));
            let _ = writeln!(s, "homogenized (degree {}): {}", h.degree(), show(h.components()).join("; "));
            Ok(s)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn realform_cmd(
    vars: &[String],
    degree: u32,
    ord: MonomialOrder,
    expr: &str,
    allow_truncated: bool,
    cfg: &GinConfig,
    json: bool,
    err: &mut dyn Write,
) -> Result<String> {
    let roster = input::roster(vars)?;
    let conj: Vec<String> = (1..=roster.len()).map(|k| format!("w{k}")).collect();
    if let Some(clash) = conj.iter().find(|w| roster.position(w).is_some()) {
        return Err(Error::InvalidParam { name: "vars".into(), reason: format!("`{clash}` is reserved for conjugates") });
    }
    let both = Roster::new(roster.names().iter().chain(&conj));
    let p = parse_polynomial(check_truncation(expr, allow_truncated, err)?, &both)?;
    let form = HermitianForm::from_bipolynomial(roster, FormBasis::UpTo(degree), &p)?;
    let gin = real_form_gin(&form, cfg, ord)?;
    Ok(if json {
        pretty(&json!({ "order": ord.name(), "seed": cfg.seed, "rank": form.rank(), "gin": gin.render(ord) }))
    } else {
        format!("{}\n", subspace_text(&gin, ord))
    })
}
