//! Schur algebras `S(n,r)`: the quiver of the basic algebra of `S(2,r)`,
//! its blocks, and τ-tilting finiteness with counts of two-term silting
//! complexes.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::Quiver;
use crate::catalog::{binomial, d_count};
use crate::error::{Error, Result};
use crate::field::check_prime;
use crate::search::{enumerate, SearchOptions};

/// Number of arrows `v^s -> v^t` in the quiver of the basic algebra of
/// `S(2,r)`; symmetric in `s`, `t` and zero for `s = t`.
pub fn arrow_count(s: u64, t: u64, p: u64) -> u32 {
    let (s, t) = if s >= t { (s, t) } else { (t, s) };
    if s == t {
        return 0;
    }
    let (s0, s1, t0, t1) = (s % p, s / p, t % p, t / p);
    if p == 2 {
        if (s0 == 1 && t0 == 1) || (s0 == 0 && t0 == 0 && s1 % 2 == t1 % 2) {
            arrow_count(s1, t1, p)
        } else if s0 == 0 && t0 == 0 && t1 + 1 == s1 && s1 % 2 != 0 {
            1
        } else {
            0
        }
    } else if s0 == t0 {
        arrow_count(s1, t1, p)
    } else if s0 + t0 == p - 2 && t1 + 1 == s1 && s1 % p != 0 {
        1
    } else {
        0
    }
}

/// Vertex labels `s = λ₁ − λ₂` for the two-part partitions of `r`.
pub fn schur2_vertices(r: u64) -> Vec<u64> {
    (r % 2..=r).step_by(2).collect()
}

/// The quiver of the basic algebra of `S(2,r)`; vertex `k` (1-based) is
/// the `k`-th smallest label, arrows come in opposite pairs named
/// `s>t`.
pub fn schur2_quiver(r: u64, p: u32) -> Result<Quiver> {
    check_prime(p)?;
    if r == 0 {
        return Err(Error::BadParameter("r must be at least 1".into()));
    }
    let vs = schur2_vertices(r);
    let mut q = Quiver::new(vs.len());
    for (a, &s) in vs.iter().enumerate() {
        for (b, &t) in vs.iter().enumerate() {
            if a != b && arrow_count(s, t, p as u64) == 1 {
                q.add_arrow(&format!("{s}>{t}"), a + 1, b + 1);
            }
        }
    }
    Ok(q)
}

/// Morita classes of the blocks that occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MoritaClass {
    F,
    A(usize),
    D(usize),
    K4,
    L5,
    M4,
    N5,
    U4,
    R4,
    H4,
    Infinite,
}

impl MoritaClass {
    pub fn is_finite(self) -> bool {
        !matches!(self, MoritaClass::N5 | MoritaClass::Infinite)
    }

    /// Number of simple modules.
    pub fn size(self) -> usize {
        match self {
            MoritaClass::F => 1,
            MoritaClass::A(m) | MoritaClass::D(m) => m,
            MoritaClass::K4 | MoritaClass::M4 | MoritaClass::U4 | MoritaClass::R4 | MoritaClass::H4 => 4,
            MoritaClass::L5 | MoritaClass::N5 => 5,
            MoritaClass::Infinite => 0,
        }
    }

    /// Catalog name and parameter of the class.
    pub fn catalog_name(self) -> Option<(&'static str, Option<usize>)> {
        Some(match self {
            MoritaClass::F => ("F", None),
            MoritaClass::A(m) => ("A", Some(m)),
            MoritaClass::D(m) => ("D", Some(m)),
            MoritaClass::K4 => ("K4", None),
            MoritaClass::L5 => ("L5", None),
            MoritaClass::M4 => ("M4", None),
            MoritaClass::N5 => ("N5", None),
            MoritaClass::U4 => ("U4", None),
            MoritaClass::R4 => ("R4", None),
            MoritaClass::H4 => ("H4", None),
            MoritaClass::Infinite => return None,
        })
    }
}

fn subscript(m: usize) -> String {
    m.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap()).collect()
}

impl fmt::Display for MoritaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoritaClass::F => write!(f, "𝔽"),
            MoritaClass::A(m) => write!(f, "A{}", subscript(*m)),
            MoritaClass::D(m) => write!(f, "D{}", subscript(*m)),
            MoritaClass::K4 => write!(f, "K₄"),
            MoritaClass::L5 => write!(f, "L₅"),
            MoritaClass::M4 => write!(f, "M₄"),
            MoritaClass::N5 => write!(f, "N₅"),
            MoritaClass::U4 => write!(f, "U₄"),
            MoritaClass::R4 => write!(f, "R₄"),
            MoritaClass::H4 => write!(f, "H₄"),
            MoritaClass::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// Class of a block of `S(2,r)` with `size` simples.
pub fn block_class(size: usize, p: u32) -> MoritaClass {
    let p = p as usize;
    match (p, size) {
        (_, 1) => MoritaClass::F,
        (2, 2) => MoritaClass::A(2),
        (2, 3) => MoritaClass::D(3),
        (2, 4) => MoritaClass::K4,
        (2, 5) => MoritaClass::L5,
        (2, _) => MoritaClass::Infinite,
        (_, m) if m <= p => MoritaClass::A(m),
        (_, m) if m == p + 1 => MoritaClass::D(m),
        _ => MoritaClass::Infinite,
    }
}

fn d_cache() -> &'static Mutex<HashMap<usize, Option<u64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Option<u64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `#2-silt D_m`, from the known values or else by enumeration (cached).
/// `None` if the enumeration exceeds the default budget.
pub fn d_block_count(m: usize) -> Option<u64> {
    if let Some(c) = d_count(m) {
        return Some(c);
    }
    if let Some(&c) = d_cache().lock().unwrap().get(&m) {
        return c;
    }
    let c = crate::catalog::get("D", Some(m), 2)
        .and_then(|a| enumerate(&a, "D", &SearchOptions::default()))
        .ok()
        .filter(|r| r.complete)
        .map(|r| r.count() as u64);
    *d_cache().lock().unwrap().entry(m).or_insert(c)
}

/// Number of two-term silting complexes of a block of the given class.
pub fn class_count(c: MoritaClass) -> Option<u64> {
    match c {
        MoritaClass::F => Some(2),
        MoritaClass::A(m) => Some(binomial(2 * m as u64, m as u64)),
        MoritaClass::D(m) => d_block_count(m),
        MoritaClass::K4 => Some(136),
        MoritaClass::L5 => Some(1656),
        MoritaClass::M4 => Some(152),
        MoritaClass::U4 => Some(136),
        MoritaClass::R4 => Some(88),
        MoritaClass::H4 => Some(96),
        MoritaClass::N5 | MoritaClass::Infinite => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurBlock {
    /// Vertex labels `s`, ascending.
    pub vertices: Vec<u64>,
    pub size: usize,
    pub class: MoritaClass,
    pub finite: bool,
    pub count: Option<u64>,
    /// Whether the block quiver contains a doubled square.
    pub infinite_square: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurBlockReport {
    pub r: u64,
    pub p: u32,
    /// Blocks by decreasing size, then by smallest vertex.
    pub blocks: Vec<SchurBlock>,
    pub total_finite: bool,
    pub total_count: Option<u64>,
}

/// Blocks of the basic algebra of `S(2,r)`: connected components of its
/// quiver, classified by size.
pub fn schur2_blocks(r: u64, p: u32) -> Result<SchurBlockReport> {
    let q = schur2_quiver(r, p)?;
    let vs = schur2_vertices(r);
    let n = vs.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for a in &q.arrows {
        let (x, y) = (find(&mut parent, a.from - 1), find(&mut parent, a.to - 1));
        parent[x] = y;
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut root_of: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        let k = *root_of.entry(root).or_insert_with(|| {
            comps.push(Vec::new());
            comps.len() - 1
        });
        comps[k].push(v);
    }
    let mut blocks: Vec<SchurBlock> = comps
        .into_iter()
        .map(|c| {
            let mut sub = Quiver::new(c.len());
            for a in &q.arrows {
                if let (Some(x), Some(y)) =
                    (c.iter().position(|&v| v + 1 == a.from), c.iter().position(|&v| v + 1 == a.to))
                {
                    sub.add_arrow(&a.name, x + 1, y + 1);
                }
            }
            let class = block_class(c.len(), p);
            SchurBlock {
                vertices: c.iter().map(|&v| vs[v]).collect(),
                size: c.len(),
                class,
                finite: class.is_finite(),
                count: class_count(class),
                infinite_square: sub.has_tau_infinite_square(),
            }
        })
        .collect();
    blocks.sort_by(|a, b| b.size.cmp(&a.size).then(a.vertices.cmp(&b.vertices)));
    let total_finite = blocks.iter().all(|b| b.finite);
    let total_count = product(blocks.iter().map(|b| b.count));
    Ok(SchurBlockReport { r, p, blocks, total_finite, total_count })
}

fn product(counts: impl Iterator<Item = Option<u64>>) -> Option<u64> {
    counts.fold(Some(1u64), |acc, c| acc.zip(c).and_then(|(a, b)| a.checked_mul(b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RepresentationType {
    Semisimple,
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepresentationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepresentationType::Semisimple => "SEMISIMPLE",
            RepresentationType::Finite => "FINITE",
            RepresentationType::Tame => "TAME",
            RepresentationType::Wild => "WILD",
        })
    }
}

pub fn representation_type(n: u64, r: u64, p: u32) -> RepresentationType {
    let p = p as u64;
    if p > r || (p == 2 && n == 2 && r == 3) {
        RepresentationType::Semisimple
    } else if (p == 2 && n == 2 && (r == 5 || r == 7)) || (n == 2 && r < p * p) || (n >= 3 && r < 2 * p) {
        RepresentationType::Finite
    } else if (p == 2 && n == 2 && matches!(r, 4 | 9 | 11))
        || (p == 3 && n == 2 && matches!(r, 9..=11))
        || (p == 3 && n == 3 && matches!(r, 7 | 8))
    {
        RepresentationType::Tame
    } else {
        RepresentationType::Wild
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub n: u64,
    pub r: u64,
    pub p: u32,
    pub finite: bool,
    /// Block classes of the basic algebra, when known.
    pub basic_algebra: Option<Vec<MoritaClass>>,
    pub count: Option<u64>,
    pub representation_type: RepresentationType,
}

impl Classification {
    pub fn basic_algebra_string(&self) -> Option<String> {
        self.basic_algebra.as_ref().map(|bs| bs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ⊕ "))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "S({},{}) p={}: {}",
            self.n,
            self.r,
            self.p,
            if self.finite { "τ-tilting finite" } else { "τ-tilting infinite" }
        );
        if let Some(b) = self.basic_algebra_string() {
            s.push_str(&format!(", basic algebra {b}"));
        }
        match self.count {
            Some(c) => s.push_str(&format!(", count {c}")),
            None if self.finite => s.push_str(", count undetermined"),
            None => {}
        }
        s.push_str(&format!(", representation type {}", self.representation_type));
        s
    }
}

use MoritaClass::{A, F, H4, M4, N5, R4, U4};

/// Basic algebras of `S(n,r)`, `3 ≤ n ≤ r`, for `p = 2, 3`; `None` marks
/// τ-tilting infinite cases whose basic algebra is not recorded.
fn small_table(n: u64, r: u64, p: u32) -> Option<Vec<MoritaClass>> {
    let v = match (p, n, r) {
        (2, 3, 3) => vec![A(2), F],
        (2, 3, 4) => vec![M4],
        (2, 3, 5) => vec![U4],
        (2, 4, 5) => vec![U4, A(2)],
        (2, 5, 5) => vec![N5, A(2)],
        (3, 3, 3) => vec![A(3)],
        (3, 3, 4) => vec![A(2), F, F],
        (3, 3, 5) => vec![A(2), A(2), F],
        (3, 3, 7) => vec![R4, A(2), A(2)],
        (3, 3, 8) => vec![R4, H4, A(2)],
        (3, 4, 4) => vec![A(3), F, F],
        (3, 4, 5) => vec![A(3), A(2), F],
        (3, 5, 5) => vec![A(3), A(3), F],
        _ => return None,
    };
    Some(v)
}

fn finite_small(n: u64, r: u64, p: u32) -> bool {
    match p {
        2 => (n == 3 && r <= 5) || (n == 4 && matches!(r, 1 | 2 | 3 | 5)) || (n >= 5 && r <= 3),
        3 => (n == 3 && (r <= 5 || r == 7 || r == 8)) || (n >= 4 && r <= 5),
        _ => r < 2 * p as u64,
    }
}

/// τ-tilting finiteness of `S(n,r)` with block structure and count where
/// known.
pub fn classify(n: u64, r: u64, p: u32) -> Result<Classification> {
    check_prime(p)?;
    if n < 2 || r < 1 {
        return Err(Error::BadParameter(format!("need n ≥ 2 and r ≥ 1, got n={n}, r={r}")));
    }
    let representation_type = representation_type(n, r, p);
    // S(n,r) is Morita equivalent to S(r,r) for n ≥ r.
    let m = if n > r { r.max(2) } else { n };
    if m == 2 {
        let rep = schur2_blocks(r, p)?;
        return Ok(Classification {
            n,
            r,
            p,
            finite: rep.total_finite,
            basic_algebra: Some(rep.blocks.iter().map(|b| b.class).collect()),
            count: rep.total_count,
            representation_type,
        });
    }
    let finite = finite_small(m, r, p);
    let basic_algebra = if p <= 3 { small_table(m, r, p) } else { None };
    let count = basic_algebra.as_ref().filter(|_| finite).and_then(|bs| product(bs.iter().map(|&c| class_count(c))));
    Ok(Classification { n, r, p, finite, basic_algebra, count, representation_type })
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixRow {
    pub n: u64,
    pub r: u64,
    pub basic_algebra: String,
    pub count: u64,
    pub note: Option<String>,
}

impl fmt::Display for AppendixRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{}): {}, {}", self.n, self.r, self.basic_algebra, self.count)?;
        if let Some(note) = &self.note {
            write!(f, "  [{note}]")?;
        }
        Ok(())
    }
}

/// Largest `r` scanned for `S(2,r)`; beyond it every case is infinite for
/// `p = 2, 3`.
const SCAN_LIMIT: u64 = 40;

/// All τ-tilting finite `S(n,r)` up to Morita equivalence, for `p = 2, 3`.
/// Consecutive `S(2,r)`, `S(2,r+1)` with the same blocks are merged, and
/// `S(n,n)` stands for every `S(n',n)` with `n' > n`.
pub fn appendix_report(p: u32) -> Result<Vec<AppendixRow>> {
    if p != 2 && p != 3 {
        return Err(Error::BadParameter(format!("appendix tables exist for p = 2, 3 only, got {p}")));
    }
    let mut rows: Vec<AppendixRow> = Vec::new();
    let mut prev: Option<String> = None;
    for r in 1..=SCAN_LIMIT {
        let c = classify(2, r, p)?;
        if !c.finite {
            prev = None;
            continue;
        }
        let b = c.basic_algebra_string().unwrap_or_default();
        if prev.as_deref() == Some(b.as_str()) {
            let last = rows.last_mut().expect("previous row exists");
            last.note = Some(format!("≃ S(2,{r})"));
            continue;
        }
        prev = Some(b.clone());
        rows.push(AppendixRow { n: 2, r, basic_algebra: b, count: c.count.unwrap_or(0), note: None });
    }
    for n in 3..=SCAN_LIMIT {
        for r in n..=SCAN_LIMIT {
            let c = classify(n, r, p)?;
            if c.finite {
                rows.push(AppendixRow {
                    n,
                    r,
                    basic_algebra: c.basic_algebra_string().unwrap_or_default(),
                    count: c.count.unwrap_or(0),
                    note: None,
                });
            }
        }
    }
    for row in &mut rows {
        if row.n >= row.r && row.note.is_none() {
            row.note = Some(format!("≃ S(n,{}) for any n ≥ {}", row.r, row.n + 1));
        }
    }
    Ok(rows)
}

pub fn appendix_text(p: u32) -> Result<String> {
    let rows = appendix_report(p)?;
    let mut s = format!("τ-tilting finite Schur algebras over p={p}\n");
    for row in rows {
        s.push_str(&row.to_string());
        s.push('\n');
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_count_examples() {
        assert_eq!(arrow_count(2, 0, 2), 1);
        assert_eq!(arrow_count(1, 0, 2), 0);
        assert_eq!(arrow_count(3, 0, 5), 0);
        assert_eq!(arrow_count(7, 2, 5), 0);
        assert_eq!(arrow_count(8, 0, 5), 1);
        assert_eq!(arrow_count(29, 19, 5), 1);
        assert_eq!(arrow_count(0, 8, 5), 1);
        assert_eq!(arrow_count(4, 4, 3), 0);
    }

    #[test]
    fn small_quivers() {
        let q = schur2_quiver(2, 2).unwrap();
        assert_eq!(q.n, 2);
        assert!(q.has_double_arrow(1, 2));
        let q = schur2_quiver(3, 2).unwrap();
        assert!(q.arrows.is_empty());
        assert!(schur2_quiver(0, 2).is_err());
        assert!(schur2_quiver(4, 4).is_err());
    }

    #[test]
    fn block_examples() {
        let r8 = schur2_blocks(8, 2).unwrap();
        assert_eq!(r8.blocks.len(), 1);
        assert_eq!(r8.blocks[0].class, MoritaClass::L5);
        assert_eq!(r8.total_count, Some(1656));
        let r19 = schur2_blocks(19, 2).unwrap();
        let sizes: Vec<usize> = r19.blocks.iter().map(|b| b.size).collect();
        assert_eq!(sizes, vec![5, 3, 1, 1]);
        assert_eq!(r19.total_count, Some(185472));
        let r10 = schur2_blocks(10, 2).unwrap();
        assert!(r10.blocks.iter().any(|b| b.size == 6 && b.class == MoritaClass::Infinite && b.infinite_square));
        assert!(!r10.total_finite);
        assert_eq!(r10.total_count, None);
    }

    #[test]
    fn representation_types() {
        assert_eq!(representation_type(2, 3, 2), RepresentationType::Semisimple);
        assert_eq!(representation_type(2, 4, 2), RepresentationType::Tame);
        assert_eq!(representation_type(3, 7, 3), RepresentationType::Tame);
        assert_eq!(representation_type(2, 5, 2), RepresentationType::Finite);
        assert_eq!(representation_type(2, 6, 2), RepresentationType::Wild);
        assert_eq!(representation_type(3, 2, 3), RepresentationType::Semisimple);
    }

    #[test]
    fn classify_examples() {
        let c = classify(3, 4, 2).unwrap();
        assert!(c.finite);
        assert_eq!(c.basic_algebra_string().unwrap(), "M₄");
        assert_eq!(c.count, Some(152));
        let c = classify(5, 5, 2).unwrap();
        assert!(!c.finite);
        assert_eq!(c.basic_algebra, Some(vec![MoritaClass::N5, MoritaClass::A(2)]));
        let c = classify(4, 5, 3).unwrap();
        assert_eq!((c.basic_algebra_string().unwrap().as_str(), c.count), ("A₃ ⊕ A₂ ⊕ 𝔽", Some(240)));
        assert!(classify(1, 3, 2).is_err());
        assert!(classify(2, 0, 2).is_err());
        let c = classify(3, 9, 5).unwrap();
        assert!(c.finite && c.count.is_none());
        assert!(!classify(3, 10, 5).unwrap().finite);
    }

    #[test]
    fn larger_n_reduces_to_square_case() {
        assert_eq!(classify(7, 3, 2).unwrap().count, Some(12));
        assert_eq!(classify(9, 5, 3).unwrap().count, Some(800));
        assert_eq!(classify(6, 2, 3).unwrap().count, Some(4));
    }
}
