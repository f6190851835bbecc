//! Text formats: bitstrings, triple lists, domain/profile files, linear
//! orders, stick orientation files, and majority system files.
//!
//! A pseudo-tiling is written either as a bitstring of exactly `C(n,3)`
//! characters (leftmost = lexicographic rank 0) or as a comma-separated
//! triple list such as `123,124` (`-` for the empty set). Colors above 9 use
//! dash-separated form, e.g. `9-10-11`. Domain, profile, and super-domain
//! files start with a header line `n=<k>` followed by one pseudo-tiling per
//! line; blank lines and `#` comments are skipped.

use crate::aggregation::{MajoritySystem, Profile};
use crate::cubillage::{Orientation, StickOrientations};
use crate::error::{Error, Result};
use crate::invset::InversionSet;
use crate::lambda::{lambda_size, Lambda};
use crate::snakes::LinearOrder;
use crate::tiling::Tiling;
use crate::triple::Triple;

fn parse_color(tok: &str) -> Result<u8> {
    tok.parse::<u8>()
        .map_err(|_| Error::Parse(format!("bad color {tok:?}")))
}

/// Parses one triple token: three digits (`123`) or dash-separated (`1-2-3`).
pub fn parse_triple(tok: &str) -> Result<Triple> {
    let tok = tok.trim();
    let colors: Vec<u8> = if tok.contains('-') {
        tok.split('-').map(parse_color).collect::<Result<_>>()?
    } else {
        if tok.len() != 3 || !tok.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad triple {tok:?}")));
        }
        tok.chars().map(|c| c.to_digit(10).unwrap() as u8).collect()
    };
    if colors.len() != 3 {
        return Err(Error::Parse(format!("bad triple {tok:?}")));
    }
    Triple::new(colors[0], colors[1], colors[2])
        .map_err(|_| Error::Parse(format!("bad triple {tok:?}")))
}

/// Parses a pseudo-tiling in either text format against a known `n`.
pub fn parse_invset(line: &str, n: u8) -> Result<InversionSet> {
    let line = line.trim();
    if line == "-" {
        return InversionSet::empty(n);
    }
    if line.len() == lambda_size(n) && line.chars().all(|c| c == '0' || c == '1') {
        let mut s = InversionSet::empty(n)?;
        for (r, c) in line.chars().enumerate() {
            if c == '1' {
                s.insert_rank(r);
            }
        }
        return Ok(s);
    }
    let mut s = InversionSet::empty(n)?;
    for tok in line.split(',') {
        let t = parse_triple(tok)?;
        s.insert(t)
            .map_err(|_| Error::Parse(format!("triple {tok:?} out of range for n={n}")))?;
    }
    Ok(s)
}

pub fn format_bits(p: &InversionSet) -> String {
    if p.size() == 0 {
        // zero-width bitstrings (n < 3) would emit blank lines
        "-".into()
    } else {
        p.to_bitstring()
    }
}

pub fn format_triples(p: &InversionSet) -> String {
    if p.is_empty() {
        return "-".into();
    }
    p.iter_triples()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a file of pseudo-tilings with an `n=<k>` header.
pub fn parse_domain_file(text: &str) -> Result<(u8, Vec<InversionSet>)> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
    let n = header
        .strip_prefix("n=")
        .ok_or_else(|| Error::Parse(format!("expected header n=<k>, got {header:?}")))?
        .trim()
        .parse::<u8>()
        .map_err(|_| Error::Parse(format!("bad header {header:?}")))?;
    let sets = lines.map(|l| parse_invset(l, n)).collect::<Result<_>>()?;
    Ok((n, sets))
}

fn certify(sets: Vec<InversionSet>) -> Result<Vec<Tiling>> {
    sets.into_iter().map(Tiling::new).collect()
}

/// Parses a profile file: header plus one tiling per voter line.
pub fn parse_profile_file(text: &str) -> Result<Profile> {
    let (_, sets) = parse_domain_file(text)?;
    Profile::new(certify(sets)?)
}

/// Parses a super-domain file: header plus one tiling per line.
pub fn parse_super_domain_file(text: &str) -> Result<crate::csd::SuperDomain> {
    let (n, sets) = parse_domain_file(text)?;
    crate::csd::SuperDomain::new(n, certify(sets)?)
}

pub fn format_domain_file(n: u8, sets: impl IntoIterator<Item = InversionSet>, triples: bool) -> String {
    let mut out = format!("n={n}\n");
    for s in sets {
        out.push_str(&if triples { format_triples(&s) } else { format_bits(&s) });
        out.push('\n');
    }
    out
}

/// Parses linear orders, one comma-separated sequence per line, e.g.
/// `3,4,2,1,5`. All lines must be permutations of the same `[n]`.
pub fn parse_orders_file(text: &str) -> Result<Vec<LinearOrder>> {
    let mut orders: Vec<LinearOrder> = Vec::new();
    for line in content_lines(text) {
        let seq: Vec<u8> = line.split(',').map(parse_color).collect::<Result<_>>()?;
        let order = LinearOrder::new(seq)
            .map_err(|_| Error::Parse(format!("not a permutation: {line:?}")))?;
        if let Some(first) = orders.first() {
            if first.n() != order.n() {
                return Err(Error::MixedN(first.n(), order.n()));
            }
        }
        orders.push(order);
    }
    Ok(orders)
}

/// Parses a split sequence or any comma-separated color list, e.g. `3,2`.
pub fn parse_color_seq(text: &str) -> Result<Vec<u8>> {
    text.trim().split(',').map(parse_color).collect()
}

/// Parses a linear order on the triple set: comma-separated triples on one
/// line (or several; line breaks are treated as commas).
pub fn parse_triple_seq(text: &str) -> Result<Vec<Triple>> {
    content_lines(text)
        .flat_map(|l| l.split(','))
        .filter(|tok| !tok.trim().is_empty())
        .map(parse_triple)
        .collect()
}

/// Parses a stick orientation file: one `ijkl:D` or `ijkl:R` line per stick,
/// covering every stick of `[n]` exactly once. Quadruples with colors above
/// 9 use dashes (`1-2-3-10`).
pub fn parse_orientation_file(text: &str, n: u8) -> Result<StickOrientations> {
    let lam = Lambda::get(n)?;
    let mut orient: Vec<Option<Orientation>> = vec![None; lam.sticks().len()];
    for line in content_lines(text) {
        let (quad_str, dir_str) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected ijkl:D or ijkl:R, got {line:?}")))?;
        let quad_str = quad_str.trim();
        let colors: Vec<u8> = if quad_str.contains('-') {
            quad_str.split('-').map(parse_color).collect::<Result<_>>()?
        } else {
            if quad_str.len() != 4 || !quad_str.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad quadruple {quad_str:?}")));
            }
            quad_str.chars().map(|c| c.to_digit(10).unwrap() as u8).collect()
        };
        if colors.len() != 4 {
            return Err(Error::Parse(format!("bad quadruple {quad_str:?}")));
        }
        let idx = lam
            .sticks()
            .iter()
            .position(|s| s.quad() == colors[..])
            .ok_or_else(|| Error::Parse(format!("quadruple {quad_str:?} not valid for n={n}")))?;
        let o = match dir_str.trim() {
            "D" | "d" => Orientation::Direct,
            "R" | "r" => Orientation::Reverse,
            other => return Err(Error::Parse(format!("bad orientation {other:?}"))),
        };
        if orient[idx].is_some() {
            return Err(Error::Parse(format!("stick {quad_str} assigned twice")));
        }
        orient[idx] = Some(o);
    }
    let orient: Vec<Orientation> = orient
        .into_iter()
        .enumerate()
        .map(|(i, o)| o.ok_or_else(|| Error::Parse(format!("stick {} unassigned", lam.sticks()[i]))))
        .collect::<Result<_>>()?;
    StickOrientations::new(n, orient)
}

pub fn format_orientation_file(o: &StickOrientations) -> String {
    let lam = Lambda::get(o.n()).expect("n validated");
    lam.sticks()
        .iter()
        .zip(o.orientations())
        .map(|(s, dir)| format!("{s}:{dir}\n"))
        .collect()
}

/// Parses a majority system file: one big coalition per line as a bitmask
/// over voters, leftmost character = voter 0. All lines share one length,
/// which fixes the voter count.
pub fn parse_majority_file(text: &str) -> Result<MajoritySystem> {
    let mut voters = None;
    let mut coalitions = Vec::new();
    for line in content_lines(text) {
        if !line.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Parse(format!("bad coalition mask {line:?}")));
        }
        match voters {
            None => voters = Some(line.len()),
            Some(v) if v != line.len() => {
                return Err(Error::Parse("coalition masks differ in length".into()))
            }
            _ => {}
        }
        let mask = line
            .chars()
            .enumerate()
            .filter(|&(_, c)| c == '1')
            .fold(0u32, |acc, (v, _)| acc | 1 << v);
        coalitions.push(mask);
    }
    let voters = voters.ok_or_else(|| Error::Parse("empty majority system file".into()))?;
    MajoritySystem::from_coalitions(voters, &coalitions)
}
