//! Polytopes given by vertices (and optionally an inequality description),
//! with exact lattice-point membership.

use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_rational, Rational};

/// `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Halfspace {
    fn value(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .map(|(a, b)| Rational::from_integer(BigInt::from(*a)) * b)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Membership {
    /// `w = E mu` with `mu >= 0`, `sum mu <= n`, where `w = x + v - n v_0`.
    /// `inverse` solves for `mu` from the rows `rows` of `E`.
    Simplex {
        base: Vec<Rational>,
        edges: Vec<Vec<Rational>>,
        rows: Vec<usize>,
        inverse: Vec<Vec<Rational>>,
    },
    Halfspaces,
    Unsupported,
}

/// Convex hull of finitely many rational points in `Q^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    vertices: Vec<Vec<Rational>>,
    halfspaces: Option<Vec<Halfspace>>,
    dim: usize,
    membership: Membership,
}

/// Gaussian elimination; returns the indices of a maximal independent subset
/// of `rows`, scanned in order.
fn independent_rows(rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        for (pivot, b) in &basis {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone() / &b[*pivot];
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &factor * y;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            basis.push((pivot, v));
            chosen.push(idx);
        }
    }
    chosen
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let k = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[k..].to_vec()).collect())
}

fn dedup(vertices: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(vertices.len());
    for v in vertices {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

impl Polytope {
    pub fn new(vertices: Vec<Vec<Rational>>, halfspaces: Option<Vec<Halfspace>>) -> Result<Self> {
        let vertices = dedup(vertices);
        let Some(first) = vertices.first() else {
            return Err(Error::Polytope("no vertices".into()));
        };
        let m = first.len();
        if m == 0 {
            return Err(Error::Polytope("vertices must have at least one coordinate".into()));
        }
        if vertices.iter().any(|v| v.len() != m) {
            return Err(Error::Polytope("vertices have differing dimensions".into()));
        }
        let base = first.clone();
        let diffs: Vec<Vec<Rational>> = vertices[1..]
            .iter()
            .map(|v| v.iter().zip(&base).map(|(a, b)| a - b).collect())
            .collect();
        let dim = independent_rows(&diffs).len();

        if let Some(hs) = &halfspaces {
            for h in hs {
                if h.normal.len() != m {
                    return Err(Error::Polytope(format!(
                        "halfspace normal has {} entries, expected {m}",
                        h.normal.len()
                    )));
                }
            }
            for (k, v) in vertices.iter().enumerate() {
                let mut tight = 0;
                for h in hs {
                    let lhs = h.value(v);
                    let rhs = Rational::from_integer(BigInt::from(h.offset));
                    if lhs > rhs {
                        return Err(Error::Polytope(format!("vertex {k} violates a halfspace")));
                    }
                    if lhs == rhs {
                        tight += 1;
                    }
                }
                if tight < dim {
                    return Err(Error::Polytope(format!(
                        "vertex {k} is tight on {tight} halfspaces, expected at least {dim}"
                    )));
                }
            }
        }

        let membership = if halfspaces.is_some() {
            Membership::Halfspaces
        } else if vertices.len() == dim + 1 {
            // edges as an m x dim matrix, column j = v_{j+1} - v_0
            let edges: Vec<Vec<Rational>> = (0..m)
                .map(|row| diffs.iter().map(|d| d[row].clone()).collect())
                .collect();
            let rows = independent_rows(&edges);
            let square: Vec<Vec<Rational>> = rows.iter().map(|&r| edges[r].clone()).collect();
            let inverse = invert(&square).ok_or_else(|| Error::Invariant("singular simplex basis".into()))?;
            Membership::Simplex {
                base,
                edges,
                rows,
                inverse,
            }
        } else {
            Membership::Unsupported
        };

        Ok(Polytope {
            vertices,
            halfspaces,
            dim,
            membership,
        })
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> Option<&[Halfspace]> {
        self.halfspaces.as_deref()
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().flatten().all(|c| c.is_integer())
    }

    /// Smallest `l >= 1` with `l P` a lattice polytope.
    pub fn period(&self) -> u64 {
        self.vertices
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
            .to_u64()
            .expect("denominators fit in u64")
    }

    /// `r P`.
    pub fn dilate(&self, r: u64) -> Polytope {
        let rr = Rational::from_integer(BigInt::from(r));
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|c| c * &rr).collect())
            .collect();
        let halfspaces = self.halfspaces.as_ref().map(|hs| {
            hs.iter()
                .map(|h| Halfspace {
                    normal: h.normal.clone(),
                    offset: h.offset * r as i64,
                })
                .collect()
        });
        Polytope::new(vertices, halfspaces).expect("dilating a valid polytope")
    }

    fn contains_scaled(&self, y: &[Rational], n: u64) -> Result<bool> {
        let nn = Rational::from_integer(BigInt::from(n));
        match &self.membership {
            Membership::Halfspaces => Ok(self
                .halfspaces
                .as_ref()
                .expect("halfspace membership")
                .iter()
                .all(|h| h.value(y) <= Rational::from_integer(BigInt::from(h.offset)) * &nn)),
            Membership::Simplex {
                base,
                edges,
                rows,
                inverse,
            } => {
                let w: Vec<Rational> = y.iter().zip(base).map(|(a, b)| a - b * &nn).collect();
                let mu: Vec<Rational> = inverse
                    .iter()
                    .map(|inv_row| inv_row.iter().zip(rows).map(|(c, &r)| c * &w[r]).sum())
                    .collect();
                if mu.iter().any(|x: &Rational| x.is_negative()) {
                    return Ok(false);
                }
                if mu.iter().sum::<Rational>() > nn {
                    return Ok(false);
                }
                Ok(edges
                    .iter()
                    .zip(&w)
                    .all(|(row, wj)| &row.iter().zip(&mu).map(|(e, m)| e * m).sum::<Rational>() == wj))
            }
            Membership::Unsupported => Err(Error::Polytope(
                "membership needs a simplex or an explicit halfspace description".into(),
            )),
        }
    }
}

/// `|{x in Z^m : x + v in nP}|`, enumerated over the integer bounding box of
/// `nP - v`.
pub fn count_points(p: &Polytope, n: u64, shift: Option<&[Rational]>) -> Result<u64> {
    let m = p.ambient_dim();
    let zero = vec![Rational::zero(); m];
    let v = shift.unwrap_or(&zero);
    if v.len() != m {
        return Err(Error::Polytope(format!("shift has {} entries, expected {m}", v.len())));
    }
    if p.membership == Membership::Unsupported {
        return Err(Error::Polytope(
            "membership needs a simplex or an explicit halfspace description".into(),
        ));
    }
    let nn = Rational::from_integer(BigInt::from(n));
    let mut lo = Vec::with_capacity(m);
    let mut hi = Vec::with_capacity(m);
    for j in 0..m {
        let coords = p.vertices.iter().map(|x| &x[j] * &nn - &v[j]);
        let min = coords.clone().min().expect("nonempty");
        let max = coords.max().expect("nonempty");
        let (Some(a), Some(b)) = (min.ceil().to_integer().to_i64(), max.floor().to_integer().to_i64()) else {
            return Err(Error::Polytope("bounding box does not fit in i64".into()));
        };
        if a > b {
            return Ok(0);
        }
        lo.push(a);
        hi.push(b);
    }

    let mut count = 0u64;
    let mut x = lo.clone();
    loop {
        let y: Vec<Rational> = x
            .iter()
            .zip(v)
            .map(|(xi, vi)| Rational::from_integer(BigInt::from(*xi)) + vi)
            .collect();
        if p.contains_scaled(&y, n)? {
            count += 1;
        }
        // odometer step
        let mut j = 0;
        loop {
            if j == m {
                return Ok(count);
            }
            if x[j] < hi[j] {
                x[j] += 1;
                break;
            }
            x[j] = lo[j];
            j += 1;
        }
    }
}

/// A polytope whose vertices are integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope(Polytope);

impl LatticePolytope {
    pub fn new(vertices: &[Vec<i64>], halfspaces: Option<Vec<Halfspace>>) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|v| v.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
            .collect();
        Ok(LatticePolytope(Polytope::new(vs, halfspaces)?))
    }

    pub fn from_polytope(p: Polytope) -> Result<Self> {
        if !p.is_lattice() {
            return Err(Error::Polytope("vertices are not all integral".into()));
        }
        Ok(LatticePolytope(p))
    }

    pub fn dilate(&self, r: u64) -> LatticePolytope {
        LatticePolytope(self.0.dilate(r))
    }
}

impl std::ops::Deref for LatticePolytope {
    type Target = Polytope;
    fn deref(&self) -> &Polytope {
        &self.0
    }
}

/// A polytope with rational vertices and its period `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    polytope: Polytope,
    pub period_l: u64,
}

impl RationalPolytope {
    pub fn new(vertices: Vec<Vec<Rational>>, halfspaces: Option<Vec<Halfspace>>) -> Result<Self> {
        Ok(Self::from_polytope(Polytope::new(vertices, halfspaces)?))
    }

    pub fn from_polytope(polytope: Polytope) -> Self {
        let period_l = polytope.period();
        RationalPolytope { polytope, period_l }
    }
}

impl std::ops::Deref for RationalPolytope {
    type Target = Polytope;
    fn deref(&self) -> &Polytope {
        &self.polytope
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn value(&self) -> Result<Rational> {
        match self {
            Entry::Int(n) => Ok(Rational::from_integer(BigInt::from(*n))),
            Entry::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolytopeFile {
    vertices: Vec<Vec<Entry>>,
    #[serde(default)]
    halfspaces: Option<Vec<Halfspace>>,
    #[serde(default)]
    shift: Option<Vec<Entry>>,
}

/// Contents of a polytope description file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeFile {
    pub polytope: Polytope,
    pub shift: Option<Vec<Rational>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileFormat {
    Json,
    Toml,
}

impl PolytopeFile {
    pub fn parse(text: &str, format: FileFormat) -> Result<Self> {
        let parse_err = |detail: String| Error::Parse {
            what: "polytope file".into(),
            detail,
        };
        let raw: RawPolytopeFile = match format {
            FileFormat::Json => serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?,
            FileFormat::Toml => toml::from_str(text).map_err(|e| parse_err(e.to_string()))?,
        };
        let vertices = raw
            .vertices
            .iter()
            .map(|v| v.iter().map(Entry::value).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let shift = raw
            .shift
            .map(|s| s.iter().map(Entry::value).collect::<Result<Vec<_>>>())
            .transpose()?;
        Ok(PolytopeFile {
            polytope: Polytope::new(vertices, raw.halfspaces)?,
            shift,
        })
    }

    /// Reads a file; `.toml` files are TOML, everything else JSON.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            what: format!("polytope file {}", path.display()),
            detail: e.to_string(),
        })?;
        let format = match path.extension().and_then(|e| e.to_str()) {
            Some("toml") => FileFormat::Toml,
            _ => FileFormat::Json,
        };
        Self::parse(&text, format)
    }
}
