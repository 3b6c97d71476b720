//! Line arrangements in the projective plane and their combinatorics.
//!
//! Rational arrangements are given by integer linear forms. Arrangements whose
//! natural equations need roots of unity (Ceva) are builtins that know their
//! own intersection lattice.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repring::{EquivPoly, ReprClass};

/// The form `a x + b y + c z`, with coprime coefficients and positive leading entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ProjLine {
    coeffs: [i64; 3],
}

impl ProjLine {
    /// Returns `None` for the zero form.
    pub fn new(coeffs: [i64; 3]) -> Option<Self> {
        canonical_triple(coeffs.map(i128::from)).map(|c| Self { coeffs: c.map(|v| v as i64) })
    }

    pub fn coeffs(&self) -> [i64; 3] {
        self.coeffs
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coeffs;
        write!(f, "{a} {b} {c}")
    }
}

fn canonical_triple(v: [i128; 3]) -> Option<[i128; 3]> {
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    if g == 0 {
        return None;
    }
    let lead = v.iter().copied().find(|&x| x != 0).unwrap();
    let g = if lead < 0 { -g } else { g };
    Some(v.map(|x| x / g))
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i128; 3] {
    let [a0, a1, a2] = a.map(i128::from);
    let [b0, b1, b2] = b.map(i128::from);
    [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0]
}

/// Arrangements known by name rather than by rational equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Builtin {
    /// `(x^3 - y^3)(x^3 - z^3)(y^3 - z^3)`: nine lines, twelve triple points.
    Ceva,
}

impl Builtin {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "ceva" => Some(Builtin::Ceva),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Builtin::Ceva => "ceva",
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Builtin::Ceva => 9,
        }
    }

    /// Lines `0..3` are `x - w^i y`, `3..6` are `x - w^i z`, `6..9` are `y - w^i z`,
    /// with `w` a primitive cube root of unity.
    fn intersection_data(&self) -> Vec<IntersectionPoint> {
        match self {
            Builtin::Ceva => {
                let mut pts = vec![
                    IntersectionPoint::named("[1:0:0]", [6, 7, 8]),
                    IntersectionPoint::named("[0:1:0]", [3, 4, 5]),
                    IntersectionPoint::named("[0:0:1]", [0, 1, 2]),
                ];
                // [1 : w^s : w^t] lies on x - w^{-s} y, x - w^{-t} z, y - w^{s-t} z
                for s in 0..3usize {
                    for t in 0..3usize {
                        pts.push(IntersectionPoint::named(
                            &format!("[1:w^{s}:w^{t}]"),
                            [(3 - s) % 3, 3 + (3 - t) % 3, 6 + (3 + s - t) % 3],
                        ));
                    }
                }
                pts
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Rational(Vec<ProjLine>),
    Builtin(Builtin),
}

/// A reduced central arrangement of `d >= 1` distinct lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    kind: Kind,
}

impl LineArrangement {
    pub fn rational(forms: &[[i64; 3]]) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::Parse { line: 0, message: "arrangement has no lines".into() });
        }
        let mut lines = Vec::with_capacity(forms.len());
        let mut seen: BTreeMap<ProjLine, usize> = BTreeMap::new();
        for (i, &f) in forms.iter().enumerate() {
            let line = ProjLine::new(f).ok_or(Error::ZeroForm { line: i + 1 })?;
            if let Some(&first) = seen.get(&line) {
                return Err(Error::DuplicateLine { first, second: i + 1 });
            }
            seen.insert(line, i + 1);
            lines.push(line);
        }
        Ok(Self { kind: Kind::Rational(lines) })
    }

    pub fn builtin(b: Builtin) -> Self {
        Self { kind: Kind::Builtin(b) }
    }

    /// The three coordinate lines `xyz = 0`.
    pub fn boolean() -> Self {
        Self::rational(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()
    }

    pub fn degree(&self) -> usize {
        match &self.kind {
            Kind::Rational(lines) => lines.len(),
            Kind::Builtin(b) => b.degree(),
        }
    }

    /// Integer forms, or `None` for builtins.
    pub fn lines(&self) -> Option<&[ProjLine]> {
        match &self.kind {
            Kind::Rational(lines) => Some(lines),
            Kind::Builtin(_) => None,
        }
    }

    pub fn as_builtin(&self) -> Option<Builtin> {
        match &self.kind {
            Kind::Rational(_) => None,
            Kind::Builtin(b) => Some(*b),
        }
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            Kind::Rational(lines) => format!("{} rational lines", lines.len()),
            Kind::Builtin(b) => format!("builtin {}", b.name()),
        }
    }
}

/// Parses the arrangement file format: one form `a b c` per line, `#` comments,
/// or a single `builtin: <name>` directive.
pub fn parse_arrangement(text: &str) -> Result<LineArrangement> {
    let mut forms = Vec::new();
    let mut builtin: Option<(usize, Builtin)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("builtin:") {
            let name = rest.trim();
            let b = Builtin::from_name(name).ok_or_else(|| Error::UnknownBuiltin(name.to_owned()))?;
            if builtin.is_some() {
                return Err(Error::Parse { line: lineno, message: "repeated builtin directive".into() });
            }
            builtin = Some((lineno, b));
            continue;
        }
        let nums: Vec<i64> = line
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|e| Error::Parse { line: lineno, message: format!("`{tok}`: {e}") }))
            .collect::<Result<_>>()?;
        if nums.len() != 3 {
            return Err(Error::Parse { line: lineno, message: format!("expected 3 integers, found {}", nums.len()) });
        }
        forms.push([nums[0], nums[1], nums[2]]);
    }
    match builtin {
        Some((lineno, _)) if !forms.is_empty() => {
            Err(Error::Parse { line: lineno, message: "builtin directive cannot be mixed with explicit forms".into() })
        }
        Some((_, b)) => Ok(LineArrangement::builtin(b)),
        None => LineArrangement::rational(&forms),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointCoords {
    Integer([i128; 3]),
    Named(String),
}

/// A point of the plane where at least two lines meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionPoint {
    pub point: PointCoords,
    pub incident: BTreeSet<usize>,
}

impl IntersectionPoint {
    fn named(label: &str, incident: [usize; 3]) -> Self {
        Self { point: PointCoords::Named(label.to_owned()), incident: incident.into_iter().collect() }
    }

    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }
}

pub fn intersection_data(a: &LineArrangement) -> Vec<IntersectionPoint> {
    match &a.kind {
        Kind::Builtin(b) => b.intersection_data(),
        Kind::Rational(lines) => {
            let mut pts: BTreeMap<[i128; 3], BTreeSet<usize>> = BTreeMap::new();
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    let p = canonical_triple(cross(lines[i].coeffs, lines[j].coeffs))
                        .expect("distinct lines meet in a point");
                    let inc = pts.entry(p).or_default();
                    inc.insert(i);
                    inc.insert(j);
                }
            }
            pts.into_iter()
                .map(|(p, incident)| IntersectionPoint { point: PointCoords::Integer(p), incident })
                .collect()
        }
    }
}

/// Line count and census of intersection points by multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakCombData {
    pub d: usize,
    pub m: BTreeMap<usize, usize>,
}

impl WeakCombData {
    /// Checks `sum_k m_k C(k,2) = C(d,2)` and `2 <= k <= d`.
    pub fn new(d: usize, m: BTreeMap<usize, usize>) -> Result<Self> {
        let m: BTreeMap<usize, usize> = m.into_iter().filter(|&(_, c)| c > 0).collect();
        if d == 0 {
            return Err(Error::Parse { line: 0, message: "weak data needs d >= 1".into() });
        }
        if let Some((&k, _)) = m.iter().find(|(&k, _)| k < 2 || k > d) {
            return Err(Error::InvalidSing { k, d });
        }
        let pairs: usize = m.iter().map(|(&k, &c)| c * k * (k - 1) / 2).sum();
        if pairs != d * (d - 1) / 2 {
            return Err(Error::Parse {
                line: 0,
                message: format!("weak data covers {pairs} line pairs, expected {}", d * (d - 1) / 2),
            });
        }
        Ok(Self { d, m })
    }

    pub fn from_points(d: usize, points: &[IntersectionPoint]) -> Self {
        let mut m = BTreeMap::new();
        for p in points {
            *m.entry(p.multiplicity()).or_insert(0) += 1;
        }
        Self::new(d, m).expect("intersection data covers every line pair once")
    }

    pub fn count(&self, k: usize) -> usize {
        self.m.get(&k).copied().unwrap_or(0)
    }

    /// `sum_p (m_p - 1)` over intersection points.
    pub fn excess(&self) -> i64 {
        self.m.iter().map(|(&k, &c)| (c * (k - 1)) as i64).sum()
    }

    /// Number of singular points of the arrangement.
    pub fn point_count(&self) -> usize {
        self.m.values().sum()
    }

    /// `(k, count)` pairs in increasing `k`.
    pub fn census(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.m.iter().map(|(&k, &c)| (k, c))
    }
}

pub fn weak_comb_data(a: &LineArrangement) -> WeakCombData {
    WeakCombData::from_points(a.degree(), &intersection_data(a))
}

/// Betti and Euler data of `M = P^2 \ V` and of the Milnor fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombInvariants {
    pub b1_m: i64,
    pub b2_m: i64,
    pub chi_m: i64,
    pub chi_f: i64,
    /// Characteristic polynomial of the central arrangement, constant term first.
    pub charpoly: Vec<i64>,
}

impl CombInvariants {
    pub fn charpoly_at(&self, t: i64) -> i64 {
        self.charpoly.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

/// Mobius-function invariants of the rank-3 intersection lattice.
pub fn comb_invariants(w: &WeakCombData) -> CombInvariants {
    let d = w.d as i64;
    let s = w.excess();
    let b1_m = d - 1;
    let b2_m = s - (d - 1);
    let chi_m = 1 - b1_m + b2_m;
    // chi(t) = t^3 - d t^2 + s t - (s - d + 1) = (t - 1)(t^2 - b1 t + b2)
    let charpoly = vec![-b2_m, s, -d, 1];
    CombInvariants { b1_m, b2_m, chi_m, chi_f: d * chi_m, charpoly }
}

/// `E(V) = d (uv + 1) - sum_p (m_p - 1)` with trivial `mu_d`-action.
pub fn epoly_v(w: &WeakCombData) -> EquivPoly {
    let d = w.d;
    let mut e = EquivPoly::new(d, "E(V)");
    e.add_at(1, 1, &ReprClass::trivial(d, d as i64));
    e.add_at(0, 0, &ReprClass::trivial(d, d as i64 - w.excess()));
    e
}
