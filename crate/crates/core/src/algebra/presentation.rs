//! Quivers, relations, and the construction of `FQ/I` by linear algebra on
//! paths.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::BasedAlgebra;
use crate::error::{Error, Result};
use crate::field::{check_prime, reduce_i64, Subspace};

pub const DEFAULT_LENGTH_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    /// 1-based vertex labels.
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    pub n: usize,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(n: usize) -> Self {
        Quiver { n, arrows: Vec::new() }
    }

    /// Adds an arrow between 1-based vertices.
    pub fn add_arrow(&mut self, name: &str, from: usize, to: usize) -> &mut Self {
        self.arrows.push(Arrow { name: name.to_string(), from, to });
        self
    }

    pub fn arrow_count(&self, from: usize, to: usize) -> usize {
        self.arrows.iter().filter(|a| a.from == from && a.to == to).count()
    }

    /// True if arrows run both ways between the two vertices.
    pub fn has_double_arrow(&self, a: usize, b: usize) -> bool {
        a != b && self.arrow_count(a, b) > 0 && self.arrow_count(b, a) > 0
    }

    /// Detects four distinct vertices `a - b - c - d - a` joined by arrows in
    /// both directions along each side. An algebra whose quiver contains this
    /// square is τ-tilting infinite.
    pub fn has_tau_infinite_square(&self) -> bool {
        let n = self.n;
        let nbrs: Vec<Vec<usize>> =
            (1..=n).map(|a| (1..=n).filter(|&b| self.has_double_arrow(a, b)).collect()).collect();
        for a in 1..=n {
            for c in a + 1..=n {
                let common = nbrs[a - 1].iter().filter(|b| nbrs[c - 1].contains(b)).count();
                if common >= 2 {
                    return true;
                }
            }
        }
        false
    }

    fn validate(&self) -> Result<()> {
        for (k, a) in self.arrows.iter().enumerate() {
            if a.from == 0 || a.from > self.n || a.to == 0 || a.to > self.n {
                return Err(Error::Parse(format!("arrow {} has an endpoint outside 1..{}", a.name, self.n)));
            }
            if self.arrows[..k].iter().any(|b| b.name == a.name) {
                return Err(Error::Parse(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(())
    }
}

/// Free function form of [`Quiver::has_tau_infinite_square`].
pub fn detect_tau_infinite_square(q: &Quiver) -> bool {
    q.has_tau_infinite_square()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

fn words(path: &[&str]) -> Vec<String> {
    path.iter().map(|s| s.to_string()).collect()
}

impl Relation {
    pub fn monomial(path: &[&str]) -> Self {
        Relation { terms: vec![RelationTerm { coeff: 1, path: words(path) }] }
    }

    /// `left - right`.
    pub fn difference(left: &[&str], right: &[&str]) -> Self {
        Relation {
            terms: vec![RelationTerm { coeff: 1, path: words(left) }, RelationTerm { coeff: -1, path: words(right) }],
        }
    }

    pub fn linear(terms: &[(i64, &[&str])]) -> Self {
        Relation { terms: terms.iter().map(|(c, p)| RelationTerm { coeff: *c, path: words(p) }).collect() }
    }
}

/// Relation resolved to arrow indices, with 0-based endpoints.
struct ResolvedRelation {
    source: usize,
    target: usize,
    terms: Vec<(u32, Vec<usize>)>,
    min_len: usize,
}

fn resolve(q: &Quiver, rel: &Relation, p: u32) -> Result<ResolvedRelation> {
    let index: HashMap<&str, usize> = q.arrows.iter().enumerate().map(|(k, a)| (a.name.as_str(), k)).collect();
    let mut ends = None;
    let mut terms = Vec::new();
    for t in &rel.terms {
        if t.path.len() < 2 {
            return Err(Error::Parse(format!("relation term {:?} has length < 2", t.path)));
        }
        let idx: Vec<usize> = t
            .path
            .iter()
            .map(|name| index.get(name.as_str()).copied().ok_or_else(|| Error::Parse(format!("unknown arrow {name}"))))
            .collect::<Result<_>>()?;
        for w in idx.windows(2) {
            if q.arrows[w[0]].to != q.arrows[w[1]].from {
                return Err(Error::Parse(format!("path {:?} does not compose", t.path)));
            }
        }
        let st = (q.arrows[idx[0]].from - 1, q.arrows[*idx.last().unwrap()].to - 1);
        match ends {
            None => ends = Some(st),
            Some(e) if e != st => return Err(Error::Parse(format!("relation terms are not parallel: {:?}", t.path))),
            _ => {}
        }
        terms.push((reduce_i64(t.coeff, p), idx));
    }
    let (source, target) = ends.ok_or_else(|| Error::Parse("empty relation".into()))?;
    let min_len = terms.iter().map(|(_, w)| w.len()).min().unwrap();
    Ok(ResolvedRelation { source, target, terms, min_len })
}

/// All paths of length at most `max_len`, grouped by length.
fn paths_up_to(q: &Quiver, max_len: usize) -> Vec<Vec<(usize, usize, Vec<usize>)>> {
    let mut by_len = vec![(0..q.n).map(|v| (v, v, Vec::new())).collect::<Vec<_>>()];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for (s, t, w) in &by_len[len - 1] {
            for (k, a) in q.arrows.iter().enumerate() {
                if a.from - 1 == *t {
                    let mut w2 = w.clone();
                    w2.push(k);
                    next.push((*s, a.to - 1, w2));
                }
            }
        }
        by_len.push(next);
    }
    by_len
}

impl BasedAlgebra {
    /// Builds `FQ/I` over `F_p`.
    ///
    /// For increasing `L`, computes the span `W` of the ideal modulo paths of
    /// length `> L`. Once every path of length `L` lies in `W`, the ideal
    /// contains all paths of length `>= L`, and the quotient of paths of
    /// length `<= L` by `W` is the algebra. Columns are ordered longest
    /// path first so that echelon pivots fall on long paths and the surviving
    /// basis consists of short paths (idempotents and arrows always survive).
    pub fn from_presentation(q: &Quiver, rels: &[Relation], p: u32, length_cap: usize) -> Result<BasedAlgebra> {
        check_prime(p)?;
        q.validate()?;
        let rels: Vec<ResolvedRelation> = rels.iter().map(|r| resolve(q, r, p)).collect::<Result<_>>()?;
        let n = q.n;
        for cap in 1..=length_cap {
            let by_len = paths_up_to(q, cap);
            // Column layout per block: longest paths first.
            let mut columns: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); n * n];
            let mut col_of: Vec<HashMap<&Vec<usize>, usize>> = vec![HashMap::new(); n * n];
            for len in (0..=cap).rev() {
                for (s, t, w) in &by_len[len] {
                    let b = s * n + t;
                    col_of[b].insert(w, columns[b].len());
                    columns[b].push(w);
                }
            }
            let mut ideal: Vec<Subspace> = columns.iter().map(|c| Subspace::new(c.len(), p)).collect();
            for rel in rels.iter().filter(|r| r.min_len <= cap) {
                for ulen in 0..=cap - rel.min_len {
                    for (us, ut, u) in &by_len[ulen] {
                        if *ut != rel.source {
                            continue;
                        }
                        for vlen in 0..=cap - ulen - rel.min_len {
                            for (vs, vt, v) in &by_len[vlen] {
                                if *vs != rel.target {
                                    continue;
                                }
                                let b = us * n + vt;
                                let mut vec = vec![0u32; columns[b].len()];
                                for (c, w) in &rel.terms {
                                    if ulen + w.len() + vlen > cap {
                                        continue;
                                    }
                                    let full: Vec<usize> = u.iter().chain(w).chain(v).copied().collect();
                                    let col = col_of[b][&full];
                                    vec[col] = (vec[col] + c) % p;
                                }
                                ideal[b].insert(vec);
                            }
                        }
                    }
                }
            }
            let top_in_ideal = by_len[cap].iter().all(|(s, t, w)| {
                let b = s * n + t;
                let mut v = vec![0u32; columns[b].len()];
                v[col_of[b][w]] = 1;
                ideal[b].contains(&v)
            });
            if !top_in_ideal {
                continue;
            }
            let frees: Vec<Vec<usize>> = ideal.iter().map(Subspace::free_positions).collect();
            let label = |w: &[usize], s: usize| {
                if w.is_empty() {
                    format!("e{}", s + 1)
                } else {
                    w.iter().map(|&k| q.arrows[k].name.as_str()).collect::<String>()
                }
            };
            let elems = (0..n * n)
                .map(|b| frees[b].iter().map(|&c| (label(columns[b][c], b / n), !columns[b][c].is_empty())).collect())
                .collect();
            return Ok(BasedAlgebra::from_blocks(n, p, elems, |i, j, k, a, bb| {
                let u = columns[i * n + j][frees[i * n + j][a]];
                let v = columns[j * n + k][frees[j * n + k][bb]];
                let target = i * n + k;
                if u.len() + v.len() >= cap {
                    return vec![0; frees[target].len()];
                }
                let full: Vec<usize> = u.iter().chain(v).copied().collect();
                let mut vec = vec![0u32; columns[target].len()];
                vec[col_of[target][&full]] = 1;
                ideal[target].reduce(&mut vec);
                frees[target].iter().map(|&c| vec[c]).collect()
            }));
        }
        Err(Error::NotAdmissible { cap: length_cap })
    }
}

/// The JSON algebra definition format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u32,
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
}

impl AlgebraFile {
    pub fn new(q: &Quiver, rels: &[Relation], p: u32) -> Self {
        AlgebraFile {
            p,
            vertices: q.n,
            arrows: q.arrows.clone(),
            relations: rels.iter().map(|r| r.terms.clone()).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }

    pub fn quiver(&self) -> Quiver {
        Quiver { n: self.vertices, arrows: self.arrows.clone() }
    }

    pub fn relations(&self) -> Vec<Relation> {
        self.relations.iter().map(|t| Relation { terms: t.clone() }).collect()
    }

    pub fn build(&self, length_cap: usize) -> Result<BasedAlgebra> {
        BasedAlgebra::from_presentation(&self.quiver(), &self.relations(), self.p, length_cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_is_the_field() {
        let a = BasedAlgebra::from_presentation(&Quiver::new(1), &[], 2, DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.cartan_matrix(), vec![vec![1]]);
    }

    #[test]
    fn two_cycle_has_dimension_four() {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2).add_arrow("β", 2, 1);
        let rels = [Relation::monomial(&["α", "β"]), Relation::monomial(&["β", "α"])];
        let a = BasedAlgebra::from_presentation(&q, &rels, 2, DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(a.dim(), 4);
        let mut labels: Vec<&str> = a.basis().iter().map(|b| b.label.as_str()).collect();
        labels.sort();
        assert_eq!(labels, vec!["e1", "e2", "α", "β"]);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn a2_basis() {
        let mut q = Quiver::new(2);
        q.add_arrow("α1", 1, 2).add_arrow("β1", 2, 1);
        let a = BasedAlgebra::from_presentation(&q, &[Relation::monomial(&["α1", "β1"])], 2, DEFAULT_LENGTH_CAP)
            .unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![1, 2]]);
        assert!(a.find_label("β1α1").is_some());
    }

    #[test]
    fn free_cycle_is_not_admissible() {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2).add_arrow("β", 2, 1);
        let err = BasedAlgebra::from_presentation(&q, &[], 2, 5).unwrap_err();
        assert!(matches!(err, Error::NotAdmissible { cap: 5 }));
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        // Square 1->2->4, 1->3->4 with commutativity: dim = 4 + 4 + 1.
        let mut q = Quiver::new(4);
        q.add_arrow("a", 1, 2).add_arrow("b", 2, 4).add_arrow("c", 1, 3).add_arrow("d", 3, 4);
        let a = BasedAlgebra::from_presentation(&q, &[Relation::difference(&["a", "b"], &["c", "d"])], 3, 12)
            .unwrap();
        assert_eq!(a.dim(), 9);
        assert!(a.is_associative());
        let ab = a.path_element(&["a", "b"]).unwrap();
        let cd = a.path_element(&["c", "d"]).unwrap();
        assert_eq!(ab, cd);
    }

    #[test]
    fn rejects_bad_relations() {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2).add_arrow("β", 2, 1);
        let short = Relation::monomial(&["α"]);
        assert!(BasedAlgebra::from_presentation(&q, &[short], 2, 12).is_err());
        let broken = Relation::monomial(&["α", "α"]);
        assert!(BasedAlgebra::from_presentation(&q, &[broken], 2, 12).is_err());
        assert!(BasedAlgebra::from_presentation(&q, &[], 4, 12).is_err());
    }

    #[test]
    fn square_detector() {
        let mut chain = Quiver::new(4);
        for i in 1..4 {
            chain.add_arrow(&format!("a{i}"), i, i + 1).add_arrow(&format!("b{i}"), i + 1, i);
        }
        assert!(!detect_tau_infinite_square(&chain));
        let mut square = chain.clone();
        square.add_arrow("a4", 4, 1).add_arrow("b4", 1, 4);
        assert!(detect_tau_infinite_square(&square));
        // One-way closing arrow is not enough.
        let mut half = chain;
        half.add_arrow("a4", 4, 1);
        assert!(!detect_tau_infinite_square(&half));
    }

    #[test]
    fn json_round_trip() {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2).add_arrow("β", 2, 1);
        let rels = vec![Relation::monomial(&["α", "β"]), Relation::linear(&[(1, &["β", "α"])])];
        let file = AlgebraFile::new(&q, &rels, 2);
        let parsed = AlgebraFile::parse(&file.to_json()).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.build(12).unwrap(), file.build(12).unwrap());
    }
}
