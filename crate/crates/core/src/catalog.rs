//! Named bound quiver algebras, with the numbers of two-term silting
//! complexes where these are known.
//!
//! Names take an optional parameter after a colon, e.g. `A:3`, `D:5`,
//! `muJ_B:4`. Vertices are 1-based in presentations.

use crate::algebra::{AlgebraFile, BasedAlgebra, Quiver, Relation, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Smallest allowed parameter for families, `None` for single algebras.
    pub min_param: Option<usize>,
    pub description: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "F", min_param: None, description: "the field, one vertex" },
    CatalogEntry { name: "example23", min_param: None, description: "two-cycle 1⇄2 with αβ = βα = 0" },
    CatalogEntry { name: "A", min_param: Some(2), description: "representation-finite Schur block A_m" },
    CatalogEntry { name: "K4", min_param: None, description: "wild Schur block K₄ on a line of 4 vertices" },
    CatalogEntry { name: "M4", min_param: None, description: "wild Schur block M₄ with a branch vertex" },
    CatalogEntry { name: "L5", min_param: None, description: "wild Schur block L₅ on 5 vertices" },
    CatalogEntry { name: "N5", min_param: None, description: "τ-tilting infinite Schur block N₅" },
    CatalogEntry { name: "gentleN5", min_param: None, description: "gentle quotient of a truncation of N₅ with loops" },
    CatalogEntry { name: "D", min_param: Some(3), description: "Schur block D_m" },
    CatalogEntry { name: "Dprime", min_param: Some(3), description: "quotient of D_m by central elements" },
    CatalogEntry { name: "B", min_param: Some(3), description: "symmetric algebra B_m covering D'_m" },
    CatalogEntry { name: "muJ_B", min_param: Some(3), description: "tilting mutation of B_m at the odd vertices ≥ 3" },
    CatalogEntry { name: "U4", min_param: None, description: "Schur block U₄" },
    CatalogEntry { name: "R4", min_param: None, description: "Schur block R₄" },
    CatalogEntry { name: "H4", min_param: None, description: "Schur block H₄" },
    CatalogEntry { name: "pathA3", min_param: None, description: "path algebra of 1 ← 2 → 3" },
    CatalogEntry { name: "muJ_pathA3", min_param: None, description: "path algebra of 1 → 2 ← 3" },
];

pub fn list() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
}

/// Splits `NAME[:m]`.
pub fn parse_spec(spec: &str) -> Result<(&str, Option<usize>)> {
    match spec.split_once(':') {
        None => Ok((spec, None)),
        Some((name, m)) => {
            let m = m.trim().parse().map_err(|_| Error::BadParameter(format!("bad parameter in {spec:?}")))?;
            Ok((name, Some(m)))
        }
    }
}

fn check_param(name: &str, param: Option<usize>) -> Result<Option<usize>> {
    let e = entry(name)?;
    match (e.min_param, param) {
        (None, None) => Ok(None),
        (None, Some(_)) => Err(Error::BadParameter(format!("{name} takes no parameter"))),
        (Some(min), None) => Err(Error::BadParameter(format!("{name} needs a parameter m ≥ {min}"))),
        (Some(min), Some(m)) if m < min => Err(Error::BadParameter(format!("{name} needs m ≥ {min}, got {m}"))),
        (Some(_), Some(m)) => Ok(Some(m)),
    }
}

/// Canonical display name, e.g. `D:4`.
pub fn display_name(name: &str, param: Option<usize>) -> String {
    match param {
        Some(m) => format!("{name}:{m}"),
        None => name.to_string(),
    }
}

/// Number of two-term silting complexes, when known.
pub fn expected_count(name: &str, param: Option<usize>) -> Option<u64> {
    match (name, param) {
        ("F", _) => Some(2),
        ("example23", _) => Some(6),
        ("A", Some(m)) => Some(binomial(2 * m as u64, m as u64)),
        ("K4", _) => Some(136),
        ("M4", _) => Some(152),
        ("L5", _) => Some(1656),
        ("D", Some(m)) | ("Dprime", Some(m)) => d_count(m),
        ("B", Some(3)) => Some(32),
        ("U4", _) => Some(136),
        ("R4", _) => Some(88),
        ("H4", _) => Some(96),
        ("pathA3", _) | ("muJ_pathA3", _) => Some(14),
        _ => None,
    }
}

/// False for algebras with infinitely many two-term silting complexes.
pub fn expected_complete(name: &str) -> bool {
    !matches!(name, "N5" | "gentleN5")
}

/// `#2-silt D_m` for `3 ≤ m ≤ 10`.
pub fn d_count(m: usize) -> Option<u64> {
    const COUNTS: [u64; 8] = [28, 114, 456, 1816, 4012, 13238, 45238, 151568];
    m.checked_sub(3).and_then(|k| COUNTS.get(k)).copied()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Vertex set `J` (0-based) of the tilting mutation relating `name` to its
/// `muJ_` partner, if it has one.
pub fn mutation_partner(name: &str, param: Option<usize>) -> Option<(String, Vec<usize>)> {
    match (name, param) {
        ("pathA3", None) => Some(("muJ_pathA3".into(), vec![0, 2])),
        ("B", Some(m)) => Some((display_name("muJ_B", Some(m)), (3..=m).filter(|v| v % 2 == 1).map(|v| v - 1).collect())),
        _ => None,
    }
}

struct Builder {
    q: Quiver,
    rels: Vec<Relation>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Builder { q: Quiver::new(n), rels: Vec::new() }
    }

    fn arrow(&mut self, name: &str, from: usize, to: usize) -> &mut Self {
        self.q.add_arrow(name, from, to);
        self
    }

    fn zero(&mut self, path: &str) -> &mut Self {
        self.rels.push(Relation::monomial(&split(path)));
        self
    }

    fn eq(&mut self, left: &str, right: &str) -> &mut Self {
        self.rels.push(Relation::difference(&split(left), &split(right)));
        self
    }

    fn file(&self, p: u32) -> AlgebraFile {
        AlgebraFile::new(&self.q, &self.rels, p)
    }
}

/// Splits a path written as space-separated arrow names.
fn split(path: &str) -> Vec<&str> {
    path.split_whitespace().collect()
}

fn a_m(m: usize) -> Builder {
    let mut b = Builder::new(m);
    for i in 1..m {
        b.arrow(&format!("α{i}"), i, i + 1).arrow(&format!("β{i}"), i + 1, i);
    }
    b.zero("α1 β1");
    for i in 1..=m.saturating_sub(2) {
        let j = i + 1;
        b.zero(&format!("α{i} α{j}"))
            .zero(&format!("β{j} β{i}"))
            .eq(&format!("β{i} α{i}"), &format!("α{j} β{j}"));
    }
    b
}

/// Quiver shared by `D_m`, `D'_m` and `B_m`.
fn d_quiver(m: usize) -> Builder {
    let mut b = Builder::new(m);
    b.arrow("α1", 1, 3).arrow("β1", 3, 1).arrow("α2", 2, 3).arrow("β2", 3, 2);
    for i in 3..m {
        b.arrow(&format!("μ{i}"), i, i + 1).arrow(&format!("ν{i}"), i + 1, i);
    }
    b
}

/// Zero relations at the junction with the tail `3 - 4 - … - m`.
fn junction_zeros(b: &mut Builder, m: usize) {
    if m >= 4 {
        b.zero("α2 μ3").zero("α1 μ3").zero("ν3 β2").zero("ν3 β1");
    }
}

/// `μ_iμ_{i+1}`, `ν_{i+1}ν_i`, `ν_iμ_i − μ_{i+1}ν_{i+1}` along the tail.
fn tail_relations(b: &mut Builder, m: usize) {
    for i in 3..m.saturating_sub(1) {
        let j = i + 1;
        b.zero(&format!("μ{i} μ{j}"))
            .zero(&format!("ν{j} ν{i}"))
            .eq(&format!("ν{i} μ{i}"), &format!("μ{j} ν{j}"));
    }
}

fn d_m(m: usize) -> Builder {
    let mut b = d_quiver(m);
    b.zero("α2 β2").zero("α1 β1").zero("α2 β1 α1").zero("β1 α1 β2");
    junction_zeros(&mut b, m);
    if m >= 4 {
        b.eq("μ3 ν3", "β1 α1");
    }
    tail_relations(&mut b, m);
    b
}

/// Presentation of `D'_m` as a bound quiver algebra; the catalog builds
/// `D'_m` as a central quotient of `D_m` and uses this as a cross-check.
pub fn dprime_presentation(m: usize, p: u32) -> AlgebraFile {
    let mut b = d_quiver(m);
    b.zero("α2 β2").zero("α1 β1").zero("β1 α1");
    junction_zeros(&mut b, m);
    b.zero("α1 β2 α2 β1");
    if m >= 4 {
        b.eq("μ3 ν3", "β1 α1");
        let l = m - 1;
        b.zero(&format!("ν{l} μ{l}"));
    }
    for i in 3..m.saturating_sub(1) {
        let j = i + 1;
        b.zero(&format!("μ{i} μ{j}"))
            .zero(&format!("ν{j} ν{i}"))
            .zero(&format!("ν{i} μ{i}"))
            .zero(&format!("μ{j} ν{j}"));
    }
    b.file(p)
}

fn b_m(m: usize) -> Builder {
    let mut b = d_quiver(m);
    b.zero("α2 β2").zero("α1 β1");
    junction_zeros(&mut b, m);
    b.zero("α2 β1 α1 β2 α2").zero("α1 β2 α2 β1 α1");
    if m >= 4 {
        b.eq("μ3 ν3", "β1 α1 β2 α2").eq("μ3 ν3", "β2 α2 β1 α1");
    } else {
        b.eq("β1 α1 β2 α2", "β2 α2 β1 α1");
    }
    tail_relations(&mut b, m);
    b
}

fn muj_b_m(m: usize) -> Builder {
    let mut b = d_quiver(m);
    b.arrow("α3", 1, 2).arrow("β3", 2, 1);
    b.zero("β1 α3").zero("α3 α2").zero("α2 β1").zero("α1 β2").zero("β2 β3").zero("β3 α1");
    junction_zeros(&mut b, m);
    b.eq("α1 β1", "α3 β3").eq("α2 β2", "β3 α3");
    if m >= 4 {
        b.eq("β1 α1", "μ3 ν3");
    }
    b.eq("β2 α2", "β1 α1");
    tail_relations(&mut b, m);
    b
}

fn k4() -> Builder {
    let mut b = Builder::new(4);
    for i in 1..4 {
        b.arrow(&format!("α{i}"), i, i + 1).arrow(&format!("β{i}"), i + 1, i);
    }
    b.zero("α1 β1").zero("α2 β2").zero("β3 α3").zero("α1 α2 α3").zero("β3 β2 β1");
    b.eq("β1 α1 α2", "α2 α3 β3").eq("β2 β1 α1", "α3 β3 β2");
    b
}

fn m4() -> Builder {
    let mut b = Builder::new(4);
    b.arrow("α1", 1, 2).arrow("β1", 2, 1).arrow("α2", 2, 3).arrow("β2", 3, 2).arrow("α3", 2, 4).arrow("β3", 4, 2);
    b.zero("α1 β1").zero("β3 α3").zero("α1 α2").zero("β2 β1").zero("α1 α3 β3").zero("α3 β3 β1");
    b.eq("β1 α1", "α2 β2");
    b
}

fn l5() -> Builder {
    let mut b = Builder::new(5);
    b.arrow("α1", 1, 2).arrow("β1", 2, 1);
    b.arrow("α2", 2, 4).arrow("β2", 4, 2);
    b.arrow("α3", 4, 5).arrow("β3", 5, 4);
    b.arrow("α4", 2, 3).arrow("β4", 3, 2);
    for z in [
        "α1 β1", "α1 α4", "β3 α3", "β2 α2", "β4 α4", "β4 β1", "β4 α2 β2", "α1 α2 α3", "α2 β2 α4", "β3 β2 β1",
    ] {
        b.zero(z);
    }
    b.eq("β1 α1 α2", "α2 α3 β3").eq("β2 β1 α1", "α3 β3 β2").eq("α2 β2 β1 α1", "β1 α1 α2 β2");
    b
}

fn n5() -> Builder {
    let mut b = Builder::new(5);
    for i in 1..5 {
        b.arrow(&format!("α{i}"), i, i + 1).arrow(&format!("β{i}"), i + 1, i);
    }
    b.zero("α1 β1").zero("α2 β2").zero("α3 β3").zero("β4 α4").zero("α1 α2 α3 α4").zero("β4 β3 β2 β1");
    b.eq("β2 α2", "α3 α4 β4 β3").eq("α2 α3 α4 β4", "β1 α1 α2 α3").eq("β3 β2 β1 α1", "α4 β4 β3 β2");
    b
}

fn gentle_n5() -> Builder {
    let mut b = Builder::new(3);
    b.arrow("a", 1, 2).arrow("b", 3, 2).arrow("α", 1, 1).arrow("β", 3, 3);
    b.zero("α α").zero("β β");
    b
}

fn u4() -> Builder {
    let mut b = Builder::new(4);
    for i in 1..4 {
        b.arrow(&format!("α{i}"), i, i + 1).arrow(&format!("β{i}"), i + 1, i);
    }
    b.zero("α1 β1").zero("α2 β2").zero("α1 α2 α3").zero("β3 β2 β1");
    b.eq("α3 β3", "β2 α2");
    b
}

fn r4() -> Builder {
    let mut b = Builder::new(4);
    for i in 1..4 {
        b.arrow(&format!("α{i}"), i, i + 1).arrow(&format!("β{i}"), i + 1, i);
    }
    b.zero("α1 β1").zero("α1 α2").zero("β2 β1");
    b.eq("α2 β2", "β1 α1").eq("α3 β3", "β2 α2");
    b
}

fn h4() -> Builder {
    let mut b = Builder::new(4);
    b.arrow("α1", 1, 2).arrow("β1", 2, 1).arrow("β2", 2, 3).arrow("α2", 3, 2).arrow("α3", 2, 4).arrow("β3", 4, 2);
    b.zero("α1 β1").zero("α1 β2").zero("α2 β1").zero("α2 β2").zero("α1 α3").zero("β3 β1");
    b.rels.push(Relation::linear(&[(1, &["α3", "β3"]), (-1, &["β1", "α1"]), (-1, &["β2", "α2"])]));
    b
}

fn path_a3() -> Builder {
    let mut b = Builder::new(3);
    b.arrow("α", 2, 1).arrow("β", 2, 3);
    b
}

fn muj_path_a3() -> Builder {
    let mut b = Builder::new(3);
    b.arrow("α", 1, 2).arrow("β", 3, 2);
    b
}

fn two_cycle() -> Builder {
    let mut b = Builder::new(2);
    b.arrow("α", 1, 2).arrow("β", 2, 1);
    b.zero("α β").zero("β α");
    b
}

/// The presentation of a catalog algebra. `Dprime` is given by its
/// cross-check presentation here; [`get`] builds it as a quotient.
pub fn presentation(name: &str, param: Option<usize>, p: u32) -> Result<AlgebraFile> {
    let param = check_param(name, param)?;
    let m = param.unwrap_or(0);
    let b = match name {
        "F" => Builder::new(1),
        "example23" => two_cycle(),
        "A" => a_m(m),
        "K4" => k4(),
        "M4" => m4(),
        "L5" => l5(),
        "N5" => n5(),
        "gentleN5" => gentle_n5(),
        "D" => d_m(m),
        "Dprime" => return Ok(dprime_presentation(m, p)),
        "B" => b_m(m),
        "muJ_B" => muj_b_m(m),
        "U4" => u4(),
        "R4" => r4(),
        "H4" => h4(),
        "pathA3" => path_a3(),
        "muJ_pathA3" => muj_path_a3(),
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    };
    Ok(b.file(p))
}

/// Central elements of `D_m` whose quotient is `D'_m`:
/// `β₁α₁`, `α₁β₂α₂β₁` and `ν_iμ_i` for `3 ≤ i ≤ m−1`.
pub fn dprime_generators(d: &BasedAlgebra, m: usize) -> Result<Vec<Vec<u32>>> {
    let mut gens = vec![d.path_element(&["β1", "α1"])?, d.path_element(&["α1", "β2", "α2", "β1"])?];
    for i in 3..m {
        gens.push(d.path_element(&[&format!("ν{i}"), &format!("μ{i}")])?);
    }
    Ok(gens)
}

pub fn get(name: &str, param: Option<usize>, p: u32) -> Result<BasedAlgebra> {
    if name == "Dprime" {
        let m = check_param(name, param)?.unwrap_or(3);
        let d = presentation("D", Some(m), p)?.build(DEFAULT_LENGTH_CAP)?;
        return d.quotient_central(&dprime_generators(&d, m)?);
    }
    presentation(name, param, p)?.build(DEFAULT_LENGTH_CAP)
}

/// [`get`] for a `NAME[:m]` string.
pub fn get_by_spec(spec: &str, p: u32) -> Result<BasedAlgebra> {
    let (name, param) = parse_spec(spec)?;
    get(name, param, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_has_dimension_five() {
        let a = get("A", Some(2), 2).unwrap();
        assert_eq!((a.n(), a.dim()), (2, 5));
    }

    #[test]
    fn every_entry_builds() {
        for e in list() {
            let param = e.min_param;
            let a = get(e.name, param, 2).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert!(a.is_associative(), "{}", e.name);
            let a3 = get(e.name, param, 3).unwrap_or_else(|err| panic!("{} at p=3: {err}", e.name));
            assert_eq!(a.dim(), a3.dim(), "{}", e.name);
        }
    }

    #[test]
    fn parameters_are_checked() {
        assert!(matches!(get("A", Some(1), 2), Err(Error::BadParameter(_))));
        assert!(matches!(get("D", None, 2), Err(Error::BadParameter(_))));
        assert!(matches!(get("K4", Some(3), 2), Err(Error::BadParameter(_))));
        assert!(matches!(get("Z9", None, 2), Err(Error::UnknownAlgebra(_))));
        assert!(get_by_spec("D:x", 2).is_err());
        assert_eq!(parse_spec("D:4").unwrap(), ("D", Some(4)));
    }

    #[test]
    fn vertex_counts() {
        for (spec, n) in [("D:5", 5), ("L5", 5), ("N5", 5), ("gentleN5", 3), ("muJ_B:6", 6), ("H4", 4)] {
            assert_eq!(get_by_spec(spec, 2).unwrap().n(), n, "{spec}");
        }
    }

    #[test]
    fn expected_counts() {
        assert_eq!(expected_count("A", Some(3)), Some(20));
        assert_eq!(expected_count("D", Some(10)), Some(151568));
        assert_eq!(expected_count("D", Some(11)), None);
        assert_eq!(expected_count("N5", None), None);
        assert!(!expected_complete("N5"));
    }

    #[test]
    fn mutation_partners() {
        assert_eq!(mutation_partner("B", Some(6)), Some(("muJ_B:6".into(), vec![2, 4])));
        assert_eq!(mutation_partner("pathA3", None), Some(("muJ_pathA3".into(), vec![0, 2])));
    }
}
