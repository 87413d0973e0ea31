//! Parsing of command-line values and input files.

use std::fs;

use anyhow::{anyhow, bail, Context};
use edfun::crg::presets as crg_presets;
use edfun::edf::{self, Envelope, LinFrac};
use edfun::graph::parse_graph_any;
use edfun::rational::{check_open_unit_interval, dyadic_grid, parse_rational};
use edfun::{Crg, ForbFamily, Graph, Rational};

/// Probability in `(0, 1)` given as `a/b`; decimals are rejected.
pub fn parse_p(s: &str) -> Result<Rational, String> {
    let p = parse_rational(s).map_err(|e| e.to_string())?;
    check_open_unit_interval(&p).map_err(|e| e.to_string())?;
    Ok(p)
}

pub fn points(p: Option<&Rational>, grid: Option<u32>) -> anyhow::Result<Vec<Rational>> {
    match (p, grid) {
        (Some(p), _) => Ok(vec![p.clone()]),
        (None, Some(n)) if n < 2 => bail!("--grid needs n >= 2"),
        (None, Some(n)) => Ok(dyadic_grid(n)),
        (None, None) => Ok(edf::default_grid()),
    }
}

pub fn crg(s: &str) -> anyhow::Result<Crg> {
    if let Some(k) = crg_presets::by_name(s) {
        return Ok(k);
    }
    s.parse().with_context(|| format!("cannot parse CRG `{s}`"))
}

pub fn graph(s: &str) -> anyhow::Result<Graph> {
    parse_graph_any(s).with_context(|| format!("cannot parse graph `{s}`"))
}

pub fn graph_file(path: &str) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
    graph(&text)
}

/// Graphs from `--forb` values followed by those in the `--input` file.
pub fn family(forb: &[String], input: Option<&str>) -> anyhow::Result<ForbFamily> {
    let mut graphs = forb.iter().map(|s| graph(s)).collect::<anyhow::Result<Vec<_>>>()?;
    if let Some(path) = input {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            let listed: Vec<Graph> =
                serde_json::from_str(trimmed).with_context(|| format!("bad graph list in {path}"))?;
            graphs.extend(listed);
        } else {
            for line in trimmed.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
                graphs.push(graph(line)?);
            }
        }
    }
    if graphs.is_empty() {
        bail!("no forbidden graphs given (use --forb or --input)");
    }
    Ok(ForbFamily::new(graphs)?)
}

fn args_of<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

fn usize_args(s: &str) -> anyhow::Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| anyhow!("bad number `{t}`")))
        .collect()
}

/// Named closed forms or explicit pieces `a,b,c,d;...`.
pub fn envelope(spec: &str) -> anyhow::Result<Envelope> {
    let s = spec.trim().to_ascii_lowercase().replace(' ', "");
    match s.as_str() {
        "h9" => return Ok(edf::h9_edf()),
        "c6star" | "c6*" => return Ok(edf::c6_star_edf()),
        _ => {}
    }
    if let Some(a) = args_of(&s, "split") {
        let v = usize_args(a)?;
        if v.len() != 2 {
            bail!("split takes (alpha,omega)");
        }
        return Ok(edf::split_edf(v[0], v[1])?);
    }
    if let Some(a) = args_of(&s, "complete") {
        return Ok(edf::forb_complete_edf(a.parse()?)?);
    }
    if let Some(a) = args_of(&s, "empty") {
        return Ok(edf::forb_empty_edf(a.parse()?)?);
    }
    let pieces = s
        .split(';')
        .map(|piece| {
            let c: Vec<Rational> = piece
                .split(',')
                .map(|t| parse_rational(t).map_err(|e| anyhow!("{e}")))
                .collect::<anyhow::Result<_>>()?;
            match <[Rational; 4]>::try_from(c) {
                Ok([a, b, c, d]) => Ok(LinFrac::new(a, b, c, d)?),
                Err(_) => bail!("piece `{piece}` needs four coefficients a,b,c,d"),
            }
        })
        .collect::<anyhow::Result<Vec<_>>>()
        .with_context(|| format!("unknown envelope `{spec}`"))?;
    Ok(Envelope::new(pieces)?)
}
