//! Breadth-first exploration of two-term silting complexes by irreducible
//! left mutation.
//!
//! Objects are identified by their summand g-vectors (two-term silting
//! complexes are determined by their g-vectors), and each distinct summand
//! g-vector is assigned one fixed representative complex. Hom-spaces
//! between representatives are cached by summand id.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::BasedAlgebra;
use crate::complex::{ChainMap, TwoTermComplex};
use crate::error::{Error, Result};
use crate::hom::{self, approximate, mutate_summand, radical_endomorphisms, HomProvider, HomSpace};
use crate::sign::SignVector;

pub const DEFAULT_BUDGET: usize = 500_000;

/// Largest summand, counted in indecomposable projectives over both
/// degrees, the search will construct. Hom-spaces cost roughly the sixth
/// power of this, and summands of τ-tilting infinite algebras grow without
/// bound along the search.
pub const DEFAULT_MAX_SUMMAND_SIZE: usize = 24;

/// Frontier nodes mutated per parallel batch; fixed so that where a
/// truncated search stops does not depend on the thread count.
const CHUNK: usize = 64;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of distinct objects.
    pub budget: usize,
    /// Re-check every object (silting, unimodular g-matrix) and every
    /// repeated summand (isomorphic to its stored representative).
    pub validate: bool,
    /// Worker threads; `None` runs on the current rayon pool.
    pub threads: Option<usize>,
    /// The search stops, incomplete, at the first new summand larger than
    /// this.
    pub max_summand_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, validate: false, threads: None, max_summand_size: DEFAULT_MAX_SUMMAND_SIZE }
    }
}

/// Why an incomplete search stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Budget,
    SummandSize,
}

impl std::fmt::Display for StopReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StopReason::Budget => "budget",
            StopReason::SummandSize => "summand size",
        })
    }
}

impl SearchOptions {
    pub fn with_budget(budget: usize) -> Self {
        SearchOptions { budget, ..Self::default() }
    }
}

/// A basic two-term silting complex, as indices into the summand table of
/// its [`EnumerationResult`], sorted by summand g-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiltingObject {
    pub summands: Vec<usize>,
    /// Summand g-vectors, lexicographically sorted.
    pub key: Vec<Vec<i32>>,
}

impl SiltingObject {
    pub fn total_g_vector(&self) -> Vec<i32> {
        let n = self.key.first().map_or(0, Vec::len);
        (0..n).map(|i| self.key.iter().map(|g| g[i]).sum()).collect()
    }

    /// Orthant of the total g-vector; every entry is nonzero for silting
    /// objects.
    pub fn orthant(&self) -> SignVector {
        SignVector::of(&self.total_g_vector())
    }

    /// `|det|` of the g-matrix.
    pub fn abs_det(&self) -> i128 {
        abs_det(&self.key)
    }
}

pub fn orthant_of(t: &SiltingObject) -> SignVector {
    t.orthant()
}

/// Absolute determinant of an integer matrix by fraction-free elimination.
pub fn abs_det(rows: &[Vec<i32>]) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&s| m[s][k] != 0) else {
                return 0;
            };
            m.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        (sign * m[n - 1][n - 1]).abs()
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub algebra: String,
    pub p: u32,
    pub n: usize,
    /// Objects in canonical order (by key).
    pub objects: Vec<SiltingObject>,
    /// Hasse arrows `T -> μ⁻(T)` as object indices, sorted.
    pub arrows: Vec<(usize, usize)>,
    pub complete: bool,
    /// Set exactly when `complete` is false.
    pub stopped_by: Option<StopReason>,
    /// Number of successful mutations performed.
    pub mutation_count: usize,
    /// Representative complex of each summand, sorted by g-vector.
    pub summands: Vec<TwoTermComplex>,
}

#[derive(Serialize)]
struct JsonResult<'a> {
    algebra: &'a str,
    p: u32,
    count: usize,
    complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    stopped_by: Option<StopReason>,
    g_vectors: Vec<Vec<i32>>,
    hasse: Vec<[usize; 2]>,
    g_matrices: Vec<&'a Vec<Vec<i32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    complexes: Option<Vec<ComplexRecord>>,
}

/// Serialized form of a summand complex.
#[derive(Serialize)]
pub struct ComplexRecord {
    pub g: Vec<i32>,
    pub deg0: Vec<usize>,
    pub degm1: Vec<usize>,
    pub diff: Vec<Vec<u32>>,
}

impl EnumerationResult {
    pub fn count(&self) -> usize {
        self.objects.len()
    }

    pub fn total_g_vectors(&self) -> Vec<Vec<i32>> {
        self.objects.iter().map(SiltingObject::total_g_vector).collect()
    }

    pub fn index_of_key(&self, key: &[Vec<i32>]) -> Option<usize> {
        self.objects.binary_search_by(|o| o.key.as_slice().cmp(key)).ok()
    }

    pub fn summand_complexes(&self, object: usize) -> Vec<TwoTermComplex> {
        self.objects[object].summands.iter().map(|&s| self.summands[s].clone()).collect()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.count()];
        for &(a, _) in &self.arrows {
            d[a] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.count()];
        for &(_, b) in &self.arrows {
            d[b] += 1;
        }
        d
    }

    /// Number of objects in each orthant, keyed by sign vector.
    pub fn orthant_counts(&self) -> HashMap<SignVector, usize> {
        let mut m = HashMap::new();
        for o in &self.objects {
            *m.entry(o.orthant()).or_insert(0) += 1;
        }
        m
    }

    pub fn to_json(&self, include_complexes: bool) -> String {
        let complexes = include_complexes.then(|| {
            self.summands
                .iter()
                .map(|s| ComplexRecord {
                    g: s.g_vector_unchecked(self.n),
                    deg0: s.deg0.iter().map(|v| v + 1).collect(),
                    degm1: s.deg_m1.iter().map(|v| v + 1).collect(),
                    diff: s.diff.entries.clone(),
                })
                .collect()
        });
        let out = JsonResult {
            algebra: &self.algebra,
            p: self.p,
            count: self.count(),
            complete: self.complete,
            stopped_by: self.stopped_by,
            g_vectors: self.total_g_vectors(),
            hasse: self.arrows.iter().map(|&(a, b)| [a, b]).collect(),
            g_matrices: self.objects.iter().map(|o| &o.key).collect(),
            complexes,
        };
        let mut s = serde_json::to_string(&out).expect("result serializes");
        s.push('\n');
        s
    }

    /// Graphviz rendering of the Hasse quiver labelled by total g-vectors.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n");
        for (k, g) in self.total_g_vectors().iter().enumerate() {
            let label: Vec<String> = g.iter().map(i32::to_string).collect();
            let _ = writeln!(s, "  n{k} [label=\"({})\"];", label.join(","));
        }
        for &(a, b) in &self.arrows {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }

    pub fn summary(&self) -> String {
        let mut s = format!("algebra={} p={} count={} complete={}", self.algebra, self.p, self.count(), self.complete);
        if let Some(r) = self.stopped_by {
            let _ = write!(s, " stopped_by={}", r.to_string().replace(' ', "_"));
        }
        s
    }
}

/// Outcome of a single left mutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// The mutated object, summands sorted by g-vector.
    Mutated(Vec<TwoTermComplex>),
    LeavesTwoTerm,
}

/// Left mutation of the silting object `summands` at summand `k`.
pub fn left_mutation(alg: &BasedAlgebra, summands: &[TwoTermComplex], k: usize, validate: bool) -> Result<Mutation> {
    let x = &summands[k];
    let ys: Vec<TwoTermComplex> =
        summands.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, s)| s.clone()).collect();
    let approx = hom::minimal_left_approximation(alg, x, &ys)?;
    let Some(new) = mutate_summand(alg, x, &approx) else {
        return Ok(Mutation::LeavesTwoTerm);
    };
    let mut out = ys;
    out.push(new);
    out.sort_by_key(|s| s.g_vector_unchecked(alg.n()));
    if validate && !hom::is_two_term_silting(alg, &out) {
        return Err(Error::ValidationFailure("mutation produced a non-silting object".into()));
    }
    Ok(Mutation::Mutated(out))
}

/// The regular object `A = ⊕ (0 -> P_i)`.
pub fn regular_object(alg: &BasedAlgebra) -> Vec<TwoTermComplex> {
    (0..alg.n()).map(|i| TwoTermComplex::stalk(alg, i)).collect()
}

/// `A[1] = ⊕ (P_i -> 0)`.
pub fn shifted_regular_object(alg: &BasedAlgebra) -> Vec<TwoTermComplex> {
    (0..alg.n()).map(|i| TwoTermComplex::shifted(alg, i)).collect()
}

struct Engine<'a> {
    alg: &'a BasedAlgebra,
    homs: RwLock<HashMap<(usize, usize), Arc<HomSpace>>>,
    rads: RwLock<HashMap<usize, Arc<Vec<ChainMap>>>>,
}

impl Engine<'_> {
    fn hom(&self, table: &[Arc<TwoTermComplex>], a: usize, b: usize) -> Arc<HomSpace> {
        if let Some(h) = self.homs.read().unwrap().get(&(a, b)) {
            return h.clone();
        }
        let h = Arc::new(HomSpace::compute(self.alg, &table[a], &table[b]));
        self.homs.write().unwrap().entry((a, b)).or_insert(h).clone()
    }

    fn rad(&self, table: &[Arc<TwoTermComplex>], a: usize) -> Result<Arc<Vec<ChainMap>>> {
        if let Some(r) = self.rads.read().unwrap().get(&a) {
            return Ok(r.clone());
        }
        let end = self.hom(table, a, a);
        let r = Arc::new(radical_endomorphisms(self.alg, &table[a], &end)?);
        Ok(self.rads.write().unwrap().entry(a).or_insert(r).clone())
    }
}

struct CachedHoms<'e, 'a> {
    engine: &'e Engine<'a>,
    table: &'e [Arc<TwoTermComplex>],
    x: usize,
    ys: Vec<usize>,
}

impl HomProvider for CachedHoms<'_, '_> {
    fn from_source(&self, j: usize) -> Arc<HomSpace> {
        self.engine.hom(self.table, self.x, self.ys[j])
    }

    fn between(&self, k: usize, j: usize) -> Arc<HomSpace> {
        self.engine.hom(self.table, self.ys[k], self.ys[j])
    }

    fn radical_end(&self, j: usize) -> Result<Arc<Vec<ChainMap>>> {
        self.engine.rad(self.table, self.ys[j])
    }
}

/// Two indecomposables with local endomorphism rings are isomorphic iff
/// some composite `X -> Y -> X` is a unit.
pub fn are_isomorphic(alg: &BasedAlgebra, x: &TwoTermComplex, y: &TwoTermComplex) -> bool {
    if x.g_vector_unchecked(alg.n()) != y.g_vector_unchecked(alg.n()) {
        return false;
    }
    let Ok(lambda) = hom::residue_functional(alg, x) else {
        return false;
    };
    let xy = HomSpace::compute(alg, x, y);
    let yx = HomSpace::compute(alg, y, x);
    xy.reps.iter().any(|f| yx.reps.iter().any(|g| lambda(&g.compose(alg, f)) != 0))
}

/// Enumerates two-term silting complexes of `alg` reachable from `A` by
/// left mutation, breadth first.
pub fn enumerate(alg: &BasedAlgebra, name: &str, opts: &SearchOptions) -> Result<EnumerationResult> {
    if opts.budget == 0 {
        return Err(Error::BadParameter("budget must be at least 1".into()));
    }
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::BadParameter(e.to_string()))?
            .install(|| run(alg, name, opts)),
        None => run(alg, name, opts),
    }
}

fn run(alg: &BasedAlgebra, name: &str, opts: &SearchOptions) -> Result<EnumerationResult> {
    let n = alg.n();
    let engine = Engine { alg, homs: RwLock::new(HashMap::new()), rads: RwLock::new(HashMap::new()) };
    let mut table: Vec<Arc<TwoTermComplex>> = Vec::new();
    let mut gs: Vec<Vec<i32>> = Vec::new();
    let mut ids: HashMap<Vec<i32>, usize> = HashMap::new();
    for s in regular_object(alg) {
        let g = s.g_vector_unchecked(n);
        ids.insert(g.clone(), table.len());
        gs.push(g);
        table.push(Arc::new(s));
    }
    let mut objects: Vec<Vec<usize>> = vec![(0..n).collect()];
    objects[0].sort_by(|&a, &b| gs[a].cmp(&gs[b]));
    let key_of = |obj: &[usize], gs: &[Vec<i32>]| -> Vec<Vec<i32>> { obj.iter().map(|&s| gs[s].clone()).collect() };
    let mut keys: HashMap<Vec<Vec<i32>>, usize> = HashMap::new();
    keys.insert(key_of(&objects[0], &gs), 0);
    let mut arrows = Vec::new();
    let mut frontier = vec![0usize];
    let mut stopped_by = None;
    let mut mutation_count = 0usize;

    'levels: while !frontier.is_empty() {
        let mut next = Vec::new();
        for chunk in frontier.chunks(CHUNK) {
            let snapshot = &table;
            let results: Vec<Vec<Option<TwoTermComplex>>> = chunk
                .par_iter()
                .map(|&o| {
                    let obj = &objects[o];
                    (0..n)
                        .map(|k| {
                            let x = obj[k];
                            let ys: Vec<usize> = obj.iter().copied().filter(|&s| s != x).collect();
                            let refs: Vec<&TwoTermComplex> = ys.iter().map(|&s| snapshot[s].as_ref()).collect();
                            let homs = CachedHoms { engine: &engine, table: snapshot, x, ys };
                            let approx = approximate(alg, &snapshot[x], &refs, &homs)?;
                            Ok(mutate_summand(alg, &snapshot[x], &approx))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;

            for (&o, res) in chunk.iter().zip(results) {
                for (k, new) in res.into_iter().enumerate() {
                    let Some(new) = new else { continue };
                    let g = new.g_vector_unchecked(n);
                    let id = match ids.get(&g) {
                        Some(&id) => {
                            if opts.validate && !are_isomorphic(alg, &new, &table[id]) {
                                return Err(Error::ValidationFailure(format!(
                                    "two non-isomorphic summands share g-vector {g:?}"
                                )));
                            }
                            id
                        }
                        None => {
                            if new.deg0.len() + new.deg_m1.len() > opts.max_summand_size {
                                stopped_by = Some(StopReason::SummandSize);
                                break 'levels;
                            }
                            let id = table.len();
                            ids.insert(g.clone(), id);
                            gs.push(g);
                            table.push(Arc::new(new));
                            id
                        }
                    };
                    let mut obj = objects[o].clone();
                    obj[k] = id;
                    obj.sort_by(|&a, &b| gs[a].cmp(&gs[b]));
                    let key = key_of(&obj, &gs);
                    mutation_count += 1;
                    let target = match keys.get(&key) {
                        Some(&t) => t,
                        None => {
                            if objects.len() >= opts.budget {
                                stopped_by = Some(StopReason::Budget);
                                break 'levels;
                            }
                            let t = objects.len();
                            keys.insert(key, t);
                            objects.push(obj);
                            next.push(t);
                            t
                        }
                    };
                    arrows.push((o, target));
                }
            }
        }
        frontier = next;
    }
    let complete = stopped_by.is_none();

    // Canonical order: objects by key, summands by g-vector.
    let mut summand_order: Vec<usize> = (0..table.len()).collect();
    summand_order.sort_by(|&a, &b| gs[a].cmp(&gs[b]));
    let mut summand_rank = vec![0; table.len()];
    for (r, &s) in summand_order.iter().enumerate() {
        summand_rank[s] = r;
    }
    let mut order: Vec<usize> = (0..objects.len()).collect();
    let obj_keys: Vec<Vec<Vec<i32>>> = objects.iter().map(|o| key_of(o, &gs)).collect();
    order.sort_by(|&a, &b| obj_keys[a].cmp(&obj_keys[b]));
    let mut rank = vec![0; objects.len()];
    for (r, &o) in order.iter().enumerate() {
        rank[o] = r;
    }
    let final_objects: Vec<SiltingObject> = order
        .iter()
        .map(|&o| SiltingObject {
            summands: objects[o].iter().map(|&s| summand_rank[s]).collect(),
            key: obj_keys[o].clone(),
        })
        .collect();
    let mut final_arrows: Vec<(usize, usize)> = arrows.iter().map(|&(a, b)| (rank[a], rank[b])).collect();
    final_arrows.sort_unstable();
    final_arrows.dedup();
    let summands: Vec<TwoTermComplex> = summand_order.iter().map(|&s| (*table[s]).clone()).collect();

    let result = EnumerationResult {
        algebra: name.to_string(),
        p: alg.p(),
        n,
        objects: final_objects,
        arrows: final_arrows,
        complete,
        stopped_by,
        mutation_count,
        summands,
    };
    if opts.validate {
        validate(alg, &result)?;
    }
    Ok(result)
}

/// Checks every object: silting, unimodular g-matrix, nonzero total
/// g-vector entries, and arrows replacing exactly one summand.
pub fn validate(alg: &BasedAlgebra, result: &EnumerationResult) -> Result<()> {
    let n = alg.n();
    let shift_zero: Vec<Vec<bool>> = result
        .summands
        .par_iter()
        .map(|a| result.summands.iter().map(|b| hom::hom_shift1(alg, a, b) == 0).collect())
        .collect();
    for (k, o) in result.objects.iter().enumerate() {
        if o.summands.len() != n || !o.summands.iter().all(|&a| o.summands.iter().all(|&b| shift_zero[a][b])) {
            return Err(Error::ValidationFailure(format!("object {k} with key {:?} is not silting", o.key)));
        }
        if o.abs_det() != 1 {
            return Err(Error::ValidationFailure(format!("object {k} has |det| != 1: {:?}", o.key)));
        }
        if o.total_g_vector().iter().any(|&x| x == 0) {
            return Err(Error::ValidationFailure(format!("object {k} has a zero g-vector entry: {:?}", o.key)));
        }
    }
    for &(a, b) in &result.arrows {
        let shared = result.objects[a].key.iter().filter(|g| result.objects[b].key.contains(g)).count();
        if shared + 1 != n {
            return Err(Error::ValidationFailure(format!("arrow {a}->{b} changes more than one summand")));
        }
    }
    Ok(())
}
