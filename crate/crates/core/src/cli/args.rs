//! Value parsers for command-line flags.

use std::ops::RangeInclusive;

use crate::geometry::{DivisorPieces, WeightedPlane};

/// `A..B`, `A..=B` or a single `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| format!("`{s}` is not a range A..B"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(a..=b)
        }
        None => num(s).map(|a| a..=a),
    }
}

/// Comma-separated unsigned integers; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| format!("`{x}` is not a nonnegative integer"))).collect()
}

/// Integer list flag value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct List(pub Vec<u32>);

pub fn parse_list_arg(s: &str) -> Result<List, String> {
    parse_list(s).map(List)
}

pub fn parse_tuple(s: &str) -> Result<[u32; 4], String> {
    parse_list(s)?.try_into().map_err(|_| format!("`{s}` must be four integers P1,P2,n,m"))
}

pub fn parse_plane(s: &str) -> Result<WeightedPlane, String> {
    s.parse().map_err(|e: crate::geometry::GeometryError| e.to_string())
}

pub fn parse_pair(s: &str) -> Result<[i64; 2], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad integer in `{s}`")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("`{s}` must be two integers"))
}

pub fn parse_triple(s: &str) -> Result<[i64; 3], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad integer in `{s}`")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("`{s}` must be three integers"))
}

/// `NAME:W1,W2,W3:DxE,DxE,...`, e.g. `D:1,1,1:2x2,2x2,2x2`.
pub fn parse_divisor(s: &str) -> Result<DivisorPieces, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [name, plane, pairs] = parts.as_slice() else {
        return Err(format!("`{s}` must look like NAME:W1,W2,W3:DxE,DxE"));
    };
    let pairs = pairs
        .split(',')
        .map(|p| {
            let (d, e) = p.trim().split_once('x').ok_or_else(|| format!("piece `{p}` must look like DxE"))?;
            let d = d.parse().map_err(|_| format!("bad degree in `{p}`"))?;
            let e = e.parse().map_err(|_| format!("bad degree in `{p}`"))?;
            if d == 0 || e == 0 {
                return Err(format!("degrees in `{p}` must be positive"));
            }
            Ok((d, e))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(DivisorPieces { name: name.trim().to_string(), plane: parse_plane(plane)?, pairs })
}

/// `W1,W2,W3@S`: the unprojection of a plane by a variable of degree `S`.
pub fn parse_term(s: &str) -> Result<(WeightedPlane, u32), String> {
    let (plane, deg) = s.split_once('@').ok_or_else(|| format!("`{s}` must look like W1,W2,W3@S"))?;
    let deg: u32 = deg.trim().parse().map_err(|_| format!("bad degree in `{s}`"))?;
    if deg == 0 {
        return Err("unprojection degree must be positive".into());
    }
    Ok((parse_plane(plane)?, deg))
}
