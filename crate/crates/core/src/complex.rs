//! Complexes of projective modules with algebra-valued differentials.
//!
//! A map `⊕ P_{c_j} -> ⊕ P_{r_i}` is a [`BlockMatrix`] whose `(i, j)` entry
//! lies in `e_{r_i} A e_{c_j}`. Composition is matrix multiplication.

use serde::Serialize;

use crate::algebra::{unit, BasedAlgebra};
use crate::error::{Error, Result};
use crate::field::{neg_mod, FMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlockMatrix {
    /// Vertex of each target summand.
    pub rows: Vec<usize>,
    /// Vertex of each source summand.
    pub cols: Vec<usize>,
    /// Row-major entries, each in coordinates of `e_{rows[r]} A e_{cols[c]}`.
    pub entries: Vec<Vec<u32>>,
}

impl BlockMatrix {
    pub fn zero(alg: &BasedAlgebra, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows.iter().flat_map(|&r| cols.iter().map(move |&c| vec![0; alg.block_dim(r, c)])).collect();
        BlockMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries }
    }

    pub fn identity(alg: &BasedAlgebra, vertices: &[usize]) -> Self {
        let mut m = Self::zero(alg, vertices, vertices);
        for (k, &v) in vertices.iter().enumerate() {
            *m.entry_mut(k, k) = alg.unit_vector(v);
        }
        m
    }

    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> &[u32] {
        &self.entries[r * self.cols.len() + c]
    }

    #[inline]
    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Vec<u32> {
        let w = self.cols.len();
        &mut self.entries[r * w + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(|&x| x == 0))
    }

    /// `self · other`, i.e. first `other` then `self`.
    pub fn mul(&self, alg: &BasedAlgebra, other: &BlockMatrix) -> BlockMatrix {
        assert_eq!(self.cols, other.rows, "incompatible block matrices");
        let mut out = Self::zero(alg, &self.rows, &other.cols);
        for (r, &vr) in self.rows.iter().enumerate() {
            for (m, &vm) in self.cols.iter().enumerate() {
                let x = self.entry(r, m);
                if x.iter().all(|&v| v == 0) {
                    continue;
                }
                for (c, &vc) in other.cols.iter().enumerate() {
                    let w = other.cols.len();
                    alg.mul_acc(vr, vm, vc, x, other.entry(m, c), 1, &mut out.entries[r * w + c]);
                }
            }
        }
        out
    }

    pub fn add(&self, alg: &BasedAlgebra, other: &BlockMatrix) -> BlockMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let p = alg.p();
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| crate::field::add_mod(x, y, p)).collect())
            .collect();
        BlockMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries }
    }

    pub fn neg(&self, alg: &BasedAlgebra) -> BlockMatrix {
        let p = alg.p();
        let entries = self.entries.iter().map(|e| e.iter().map(|&x| neg_mod(x, p)).collect()).collect();
        BlockMatrix { rows: self.rows.clone(), cols: self.cols.clone(), entries }
    }

    /// No entry between equal vertices has a unit component.
    pub fn is_radical(&self, alg: &BasedAlgebra) -> bool {
        self.rows.iter().enumerate().all(|(r, &vr)| {
            self.cols.iter().enumerate().all(|(c, &vc)| alg.block_is_radical(vr, vc, self.entry(r, c)))
        })
    }

    /// Concatenated coordinates of all entries.
    pub fn flatten(&self) -> Vec<u32> {
        self.entries.concat()
    }

    pub fn flat_len(alg: &BasedAlgebra, rows: &[usize], cols: &[usize]) -> usize {
        rows.iter().map(|&r| cols.iter().map(|&c| alg.block_dim(r, c)).sum::<usize>()).sum()
    }

    pub fn from_flat(alg: &BasedAlgebra, rows: &[usize], cols: &[usize], flat: &[u32]) -> BlockMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        let mut at = 0;
        for &r in rows {
            for &c in cols {
                let d = alg.block_dim(r, c);
                entries.push(flat[at..at + d].to_vec());
                at += d;
            }
        }
        assert_eq!(at, flat.len());
        BlockMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries }
    }

    /// Stacks blocks `[self; other]` (same columns).
    pub fn vstack(&self, other: &BlockMatrix) -> BlockMatrix {
        assert_eq!(self.cols, other.cols);
        let mut rows = self.rows.clone();
        rows.extend(&other.rows);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        BlockMatrix { rows, cols: self.cols.clone(), entries }
    }

    /// Juxtaposes blocks `[self, other]` (same rows).
    pub fn hstack(&self, other: &BlockMatrix) -> BlockMatrix {
        assert_eq!(self.rows, other.rows);
        let mut cols = self.cols.clone();
        cols.extend(&other.cols);
        let mut entries = Vec::with_capacity(self.rows.len() * cols.len());
        for r in 0..self.rows.len() {
            for c in 0..self.cols.len() {
                entries.push(self.entry(r, c).to_vec());
            }
            for c in 0..other.cols.len() {
                entries.push(other.entry(r, c).to_vec());
            }
        }
        BlockMatrix { rows: self.rows.clone(), cols, entries }
    }

    /// Block-diagonal sum.
    pub fn diagonal_sum(alg: &BasedAlgebra, parts: &[&BlockMatrix]) -> BlockMatrix {
        let rows: Vec<usize> = parts.iter().flat_map(|m| m.rows.iter().copied()).collect();
        let cols: Vec<usize> = parts.iter().flat_map(|m| m.cols.iter().copied()).collect();
        let mut out = Self::zero(alg, &rows, &cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for r in 0..m.rows.len() {
                for c in 0..m.cols.len() {
                    *out.entry_mut(r0 + r, c0 + c) = m.entry(r, c).to_vec();
                }
            }
            r0 += m.rows.len();
            c0 += m.cols.len();
        }
        out
    }

    fn remove_row(&mut self, r: usize) {
        let w = self.cols.len();
        self.entries.drain(r * w..(r + 1) * w);
        self.rows.remove(r);
    }

    fn remove_col(&mut self, c: usize) {
        let w = self.cols.len();
        let mut k = 0;
        self.entries.retain(|_| {
            let keep = k % w != c;
            k += 1;
            keep
        });
        self.cols.remove(c);
    }
}

/// Multiplicities `m_i` of a sum `⊕ P_i^{m_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectiveSum(pub Vec<usize>);

impl ProjectiveSum {
    pub fn of(n: usize, vertices: &[usize]) -> Self {
        let mut m = vec![0; n];
        for &v in vertices {
            m[v] += 1;
        }
        ProjectiveSum(m)
    }
}

/// A complex `T^{-1} -> T^0` of projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermComplex {
    pub deg_m1: Vec<usize>,
    pub deg0: Vec<usize>,
    /// Rows indexed by `deg0`, columns by `deg_m1`.
    pub diff: BlockMatrix,
}

impl TwoTermComplex {
    pub fn new(deg_m1: Vec<usize>, deg0: Vec<usize>, diff: BlockMatrix) -> Self {
        assert_eq!(diff.rows, deg0, "differential rows must match degree 0");
        assert_eq!(diff.cols, deg_m1, "differential columns must match degree -1");
        TwoTermComplex { deg_m1, deg0, diff }
    }

    /// `0 -> P_i`.
    pub fn stalk(alg: &BasedAlgebra, i: usize) -> Self {
        Self::new(vec![], vec![i], BlockMatrix::zero(alg, &[i], &[]))
    }

    /// `P_i -> 0`.
    pub fn shifted(alg: &BasedAlgebra, i: usize) -> Self {
        Self::new(vec![i], vec![], BlockMatrix::zero(alg, &[], &[i]))
    }

    /// The single-entry complex `P_from -> P_to` with differential `x`.
    pub fn arrow(from: usize, to: usize, x: Vec<u32>) -> Self {
        Self::new(vec![from], vec![to], BlockMatrix { rows: vec![to], cols: vec![from], entries: vec![x] })
    }

    pub fn is_zero(&self) -> bool {
        self.deg0.is_empty() && self.deg_m1.is_empty()
    }

    pub fn direct_sum(alg: &BasedAlgebra, parts: &[&TwoTermComplex]) -> Self {
        let diffs: Vec<&BlockMatrix> = parts.iter().map(|t| &t.diff).collect();
        let diff = BlockMatrix::diagonal_sum(alg, &diffs);
        Self::new(diff.cols.clone(), diff.rows.clone(), diff)
    }

    pub fn degree0_sum(&self, n: usize) -> ProjectiveSum {
        ProjectiveSum::of(n, &self.deg0)
    }

    pub fn degree_m1_sum(&self, n: usize) -> ProjectiveSum {
        ProjectiveSum::of(n, &self.deg_m1)
    }

    pub fn is_minimal(&self, alg: &BasedAlgebra) -> bool {
        self.diff.is_radical(alg)
    }

    /// Multiplicity in degree 0 minus multiplicity in degree −1, per vertex.
    pub fn g_vector(&self, alg: &BasedAlgebra) -> Result<Vec<i32>> {
        if !self.is_minimal(alg) {
            return Err(Error::NotMinimal);
        }
        Ok(self.g_vector_unchecked(alg.n()))
    }

    pub(crate) fn g_vector_unchecked(&self, n: usize) -> Vec<i32> {
        let mut g = vec![0i32; n];
        for &v in &self.deg0 {
            g[v] += 1;
        }
        for &v in &self.deg_m1 {
            g[v] -= 1;
        }
        g
    }

    /// Dimension vector of `H^0 = coker(d)`.
    pub fn h0_dimension_vector(&self, alg: &BasedAlgebra) -> Vec<usize> {
        (0..alg.n())
            .map(|j| {
                let target: usize = self.deg0.iter().map(|&r| alg.block_dim(r, j)).sum();
                let mut columns = Vec::new();
                for (c, &vc) in self.deg_m1.iter().enumerate() {
                    for b in 0..alg.block_dim(vc, j) {
                        let x = unit(alg.block_dim(vc, j), b);
                        let mut col = Vec::with_capacity(target);
                        for (r, &vr) in self.deg0.iter().enumerate() {
                            col.extend(alg.mul_block(vr, vc, j, self.diff.entry(r, c), &x));
                        }
                        columns.push(col);
                    }
                }
                if columns.is_empty() || target == 0 {
                    return target;
                }
                target - FMatrix::from_columns(target, &columns, alg.p()).rank()
            })
            .collect()
    }
}

/// A morphism of two-term complexes `T -> U`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    /// `T^0 -> U^0`.
    pub f0: BlockMatrix,
    /// `T^{-1} -> U^{-1}`.
    pub fm1: BlockMatrix,
}

impl ChainMap {
    pub fn zero(alg: &BasedAlgebra, t: &TwoTermComplex, u: &TwoTermComplex) -> Self {
        ChainMap { f0: BlockMatrix::zero(alg, &u.deg0, &t.deg0), fm1: BlockMatrix::zero(alg, &u.deg_m1, &t.deg_m1) }
    }

    pub fn identity(alg: &BasedAlgebra, t: &TwoTermComplex) -> Self {
        ChainMap { f0: BlockMatrix::identity(alg, &t.deg0), fm1: BlockMatrix::identity(alg, &t.deg_m1) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, alg: &BasedAlgebra, other: &ChainMap) -> ChainMap {
        ChainMap { f0: self.f0.mul(alg, &other.f0), fm1: self.fm1.mul(alg, &other.fm1) }
    }

    pub fn is_chain_map(&self, alg: &BasedAlgebra, t: &TwoTermComplex, u: &TwoTermComplex) -> bool {
        self.f0.mul(alg, &t.diff) == u.diff.mul(alg, &self.fm1)
    }
}

/// A bounded complex of projectives in degrees `-(len-1) ..= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    /// Vertices of the terms, lowest degree first.
    pub terms: Vec<Vec<usize>>,
    /// `diffs[k]` maps `terms[k]` to `terms[k + 1]`.
    pub diffs: Vec<BlockMatrix>,
}

impl ProjComplex {
    pub fn from_two_term(t: &TwoTermComplex) -> Self {
        ProjComplex { terms: vec![t.deg_m1.clone(), t.deg0.clone()], diffs: vec![t.diff.clone()] }
    }

    /// The complex if it is concentrated in degrees −1 and 0.
    pub fn to_two_term(&self) -> Option<TwoTermComplex> {
        let len = self.terms.len();
        if len < 2 {
            return None;
        }
        if self.terms[..len - 2].iter().any(|t| !t.is_empty()) {
            return None;
        }
        Some(TwoTermComplex::new(self.terms[len - 2].clone(), self.terms[len - 1].clone(), self.diffs[len - 2].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    /// Cancels contractible summands `P_i --unit--> P_i` one at a time until
    /// every differential entry lies in the radical.
    pub fn minimize(mut self, alg: &BasedAlgebra) -> Self {
        while let Some((k, r, c)) = self.find_unit(alg) {
            let d = &self.diffs[k];
            let i = d.rows[r];
            let uinv = local_inverse(alg, i, d.entry(r, c)).expect("unit entry is invertible");
            let mut next = d.clone();
            // D' = D - w u^{-1} v on the surviving rows and columns.
            for rr in 0..d.rows.len() {
                if rr == r {
                    continue;
                }
                let w = d.entry(rr, c);
                if w.iter().all(|&x| x == 0) {
                    continue;
                }
                let wu = alg.mul_block(d.rows[rr], i, i, w, &uinv);
                for cc in 0..d.cols.len() {
                    if cc == c {
                        continue;
                    }
                    let v = d.entry(r, cc);
                    let p = alg.p();
                    alg.mul_acc(d.rows[rr], i, d.cols[cc], &wu, v, p - 1, next.entry_mut(rr, cc));
                }
            }
            next.remove_row(r);
            next.remove_col(c);
            self.diffs[k] = next;
            self.terms[k].remove(c);
            self.terms[k + 1].remove(r);
            if k > 0 {
                self.diffs[k - 1].remove_row(c);
            }
            if k + 1 < self.diffs.len() {
                self.diffs[k + 1].remove_col(r);
            }
        }
        self
    }

    fn find_unit(&self, alg: &BasedAlgebra) -> Option<(usize, usize, usize)> {
        for (k, d) in self.diffs.iter().enumerate() {
            for (r, &vr) in d.rows.iter().enumerate() {
                for (c, &vc) in d.cols.iter().enumerate() {
                    if vr == vc && !alg.block_is_radical(vr, vc, d.entry(r, c)) {
                        return Some((k, r, c));
                    }
                }
            }
        }
        None
    }
}

/// Inverse of a unit `u` of the local ring `e_i A e_i`, found by solving
/// `u x = e_i`.
pub fn local_inverse(alg: &BasedAlgebra, i: usize, u: &[u32]) -> Option<Vec<u32>> {
    let d = alg.block_dim(i, i);
    let columns: Vec<Vec<u32>> = (0..d).map(|b| alg.mul_block(i, i, i, u, &unit(d, b))).collect();
    FMatrix::from_columns(d, &columns, alg.p()).solve(&alg.unit_vector(i))
}

/// Mapping cone of `f: X -> Z`, in degrees −2..0:
/// `X^{-1} --[-d_X; f^{-1}]--> X^0 ⊕ Z^{-1} --[f^0, d_Z]--> Z^0`.
pub fn cone(alg: &BasedAlgebra, x: &TwoTermComplex, z: &TwoTermComplex, f: &ChainMap) -> ProjComplex {
    let d2 = x.diff.neg(alg).vstack(&f.fm1);
    let d1 = f.f0.hstack(&z.diff);
    let mut middle = x.deg0.clone();
    middle.extend(&z.deg_m1);
    ProjComplex { terms: vec![x.deg_m1.clone(), middle, z.deg0.clone()], diffs: vec![d2, d1] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, Relation, DEFAULT_LENGTH_CAP};

    /// `1 ⇄ 2` with `αβ = βα = 0`.
    fn two_cycle() -> BasedAlgebra {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2).add_arrow("β", 2, 1);
        let rels = [Relation::monomial(&["α", "β"]), Relation::monomial(&["β", "α"])];
        BasedAlgebra::from_presentation(&q, &rels, 2, DEFAULT_LENGTH_CAP).unwrap()
    }

    fn arrow_coords(alg: &BasedAlgebra, name: &str) -> (usize, usize, Vec<u32>) {
        let g = alg.find_label(name).unwrap();
        let b = &alg.basis()[g];
        let mut v = vec![0; alg.block_dim(b.source, b.target)];
        v[alg.local_index(g)] = 1;
        (b.source, b.target, v)
    }

    #[test]
    fn g_vectors_of_simple_sums() {
        let a = two_cycle();
        let t = TwoTermComplex::direct_sum(&a, &[&TwoTermComplex::stalk(&a, 0), &TwoTermComplex::stalk(&a, 1)]);
        assert_eq!(t.g_vector(&a).unwrap(), vec![1, 1]);
        let s = TwoTermComplex::direct_sum(&a, &[&TwoTermComplex::shifted(&a, 0), &TwoTermComplex::shifted(&a, 1)]);
        assert_eq!(s.g_vector(&a).unwrap(), vec![-1, -1]);
        // (0 -> P1) ⊕ (P2 -α-> P1).
        let (s1, t1, alpha) = arrow_coords(&a, "α");
        assert_eq!((s1, t1), (0, 1));
        let u = TwoTermComplex::direct_sum(&a, &[&TwoTermComplex::stalk(&a, 0), &TwoTermComplex::arrow(1, 0, alpha)]);
        assert_eq!(u.g_vector(&a).unwrap(), vec![2, -1]);
    }

    #[test]
    fn non_minimal_g_vector_fails() {
        let a = two_cycle();
        let t = TwoTermComplex::arrow(0, 0, a.unit_vector(0));
        assert!(matches!(t.g_vector(&a), Err(Error::NotMinimal)));
    }

    #[test]
    fn h0_dimension_vectors() {
        let a = two_cycle();
        let t = TwoTermComplex::direct_sum(&a, &[&TwoTermComplex::stalk(&a, 0), &TwoTermComplex::stalk(&a, 1)]);
        assert_eq!(t.h0_dimension_vector(&a), vec![2, 2]);
        let (_, _, alpha) = arrow_coords(&a, "α");
        assert_eq!(TwoTermComplex::arrow(1, 0, alpha).h0_dimension_vector(&a), vec![1, 0]);
        let s = TwoTermComplex::direct_sum(&a, &[&TwoTermComplex::shifted(&a, 0), &TwoTermComplex::shifted(&a, 1)]);
        assert_eq!(s.h0_dimension_vector(&a), vec![0, 0]);
    }

    #[test]
    fn identity_complex_minimizes_to_zero() {
        let a = two_cycle();
        let t = TwoTermComplex::arrow(0, 0, a.unit_vector(0));
        assert!(ProjComplex::from_two_term(&t).minimize(&a).is_zero());
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let a = two_cycle();
        let (_, _, beta) = arrow_coords(&a, "β");
        let t = TwoTermComplex::arrow(0, 1, beta);
        let c = cone(&a, &t, &t, &ChainMap::identity(&a, &t));
        assert!(c.minimize(&a).is_zero());
    }

    #[test]
    fn cone_of_beta_approximation() {
        let a = two_cycle();
        let (s, t, beta) = arrow_coords(&a, "β");
        assert_eq!((s, t), (1, 0));
        let x = TwoTermComplex::stalk(&a, 0);
        let z = TwoTermComplex::stalk(&a, 1);
        let f = ChainMap { f0: BlockMatrix { rows: vec![1], cols: vec![0], entries: vec![beta.clone()] }, fm1: BlockMatrix::zero(&a, &[], &[]) };
        assert!(f.is_chain_map(&a, &x, &z));
        let m = cone(&a, &x, &z, &f).minimize(&a).to_two_term().unwrap();
        assert_eq!(m, TwoTermComplex::arrow(0, 1, beta));
        assert_eq!(m.g_vector(&a).unwrap(), vec![-1, 1]);
    }

    #[test]
    fn local_inverse_of_unit_plus_nilpotent() {
        let mut q = Quiver::new(2);
        q.add_arrow("α1", 1, 2).add_arrow("β1", 2, 1);
        let a = BasedAlgebra::from_presentation(&q, &[Relation::monomial(&["α1", "β1"])], 3, 12).unwrap();
        let ba = a.component(&a.path_element(&["β1", "α1"]).unwrap(), 1, 1);
        let u: Vec<u32> = a.unit_vector(1).iter().zip(&ba).map(|(x, y)| (x + 2 * y) % 3).collect();
        let inv = local_inverse(&a, 1, &u).unwrap();
        assert_eq!(a.mul_block(1, 1, 1, &u, &inv), a.unit_vector(1));
    }
}
