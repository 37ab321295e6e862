//! Finite-dimensional basic algebras given by Peirce bases and structure
//! constants.
//!
//! A [`BasedAlgebra`] never remembers a quiver presentation: everything
//! downstream (Hom-spaces, mutation, sign decomposition) only needs the
//! Peirce components `e_i A e_j`, a basis of each, and the multiplication.

mod presentation;

pub use presentation::{
    detect_tau_infinite_square, AlgebraFile, Arrow, Quiver, Relation, RelationTerm, DEFAULT_LENGTH_CAP,
};

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{add_mod, check_prime, lift_symmetric, mul_mod, neg_mod, Subspace};

/// A full coordinate vector with respect to the global basis.
pub type Element = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    /// Vertex `i` with the element in `e_i A e_j` (0-based).
    pub source: usize,
    pub target: usize,
    pub label: String,
    /// False exactly for the idempotents.
    pub radical: bool,
}

/// Non-zero structure constant `basis[a] * basis[b] = coeff * basis[c]`,
/// stored per left factor `a` as `(b, c, coeff)`, all in local indices.
type ProductRow = Vec<(u32, u32, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedAlgebra {
    n: usize,
    p: u32,
    basis: Vec<BasisElement>,
    /// `blocks[i * n + j]` lists global indices of the basis of `e_i A e_j`.
    blocks: Vec<Vec<usize>>,
    /// Position of each global basis element inside its block.
    local: Vec<usize>,
    /// Local index of `e_i` inside `e_i A e_i`.
    units: Vec<usize>,
    /// `products[(i * n + j) * n + k][a]` for `a` in block `(i, j)`.
    products: Vec<Vec<ProductRow>>,
}

impl BasedAlgebra {
    /// Assembles an algebra from per-block labelled bases and a product rule.
    ///
    /// `elems[i * n + j]` holds `(label, radical)` for the basis of
    /// `e_i A e_j`; `mul(i, j, k, a, b)` returns the coordinates of
    /// `basis(i,j)[a] * basis(j,k)[b]` in block `(i, k)`.
    pub(crate) fn from_blocks(
        n: usize,
        p: u32,
        elems: Vec<Vec<(String, bool)>>,
        mul: impl Fn(usize, usize, usize, usize, usize) -> Vec<u32>,
    ) -> BasedAlgebra {
        assert_eq!(elems.len(), n * n);
        let mut basis = Vec::new();
        let mut blocks = vec![Vec::new(); n * n];
        let mut local = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (pos, (label, radical)) in elems[i * n + j].iter().enumerate() {
                    blocks[i * n + j].push(basis.len());
                    local.push(pos);
                    basis.push(BasisElement { source: i, target: j, label: label.clone(), radical: *radical });
                }
            }
        }
        let units = (0..n)
            .map(|i| {
                let units: Vec<usize> =
                    blocks[i * n + i].iter().enumerate().filter(|(_, &g)| !basis[g].radical).map(|(l, _)| l).collect();
                assert_eq!(units.len(), 1, "vertex {i} needs exactly one idempotent");
                units[0]
            })
            .collect();
        let mut products = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (dij, djk) = (blocks[i * n + j].len(), blocks[j * n + k].len());
                    let rows = (0..dij)
                        .map(|a| {
                            let mut row = Vec::new();
                            for b in 0..djk {
                                for (c, &v) in mul(i, j, k, a, b).iter().enumerate() {
                                    if v != 0 {
                                        row.push((b as u32, c as u32, v));
                                    }
                                }
                            }
                            row
                        })
                        .collect();
                    products.push(rows);
                }
            }
        }
        BasedAlgebra { n, p, basis, blocks, local, units, products }
    }

    /// The semisimple algebra `F^n`.
    pub fn semisimple(n: usize, p: u32) -> Result<BasedAlgebra> {
        check_prime(p)?;
        let elems = (0..n * n)
            .map(|ij| if ij / n == ij % n { vec![(format!("e{}", ij / n + 1), false)] } else { vec![] })
            .collect();
        Ok(Self::from_blocks(n, p, elems, |_, _, _, _, _| vec![1]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Global basis indices of `e_i A e_j`.
    pub fn block(&self, i: usize, j: usize) -> &[usize] {
        &self.blocks[i * self.n + j]
    }

    #[inline]
    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        self.blocks[i * self.n + j].len()
    }

    /// Local index of `e_i` in `e_i A e_i`.
    #[inline]
    pub fn unit_index(&self, i: usize) -> usize {
        self.units[i]
    }

    pub fn local_index(&self, global: usize) -> usize {
        self.local[global]
    }

    /// Entry `(i, j)` is `dim e_i A e_j`, the multiplicity of `S_j` in `P_i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.block_dim(i, j)).collect()).collect()
    }

    /// Adds `coeff * x * y` to `out`, with `x` in block `(i, j)`, `y` in
    /// block `(j, k)` and `out` in block `(i, k)`.
    #[inline]
    pub fn mul_acc(&self, i: usize, j: usize, k: usize, x: &[u32], y: &[u32], coeff: u32, out: &mut [u32]) {
        let p = self.p;
        let rows = &self.products[(i * self.n + j) * self.n + k];
        for (a, row) in rows.iter().enumerate() {
            let xa = x[a];
            if xa == 0 {
                continue;
            }
            let xa = mul_mod(xa, coeff, p);
            for &(b, c, v) in row {
                let yb = y[b as usize];
                if yb != 0 {
                    let t = mul_mod(mul_mod(xa, yb, p), v, p);
                    out[c as usize] = add_mod(out[c as usize], t, p);
                }
            }
        }
    }

    pub fn mul_block(&self, i: usize, j: usize, k: usize, x: &[u32], y: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.block_dim(i, k)];
        self.mul_acc(i, j, k, x, y, 1, &mut out);
        out
    }

    /// Coordinates of `e_i` in block `(i, i)`.
    pub fn unit_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.block_dim(i, i)];
        v[self.units[i]] = 1;
        v
    }

    /// True if the block element (in `e_i A e_i`) has no `e_i` component.
    pub fn block_is_radical(&self, i: usize, j: usize, x: &[u32]) -> bool {
        i != j || x[self.units[i]] == 0
    }

    pub fn zero(&self) -> Element {
        vec![0; self.dim()]
    }

    pub fn one(&self) -> Element {
        let mut v = self.zero();
        for i in 0..self.n {
            v[self.block(i, i)[self.units[i]]] = 1;
        }
        v
    }

    pub fn basis_element(&self, g: usize) -> Element {
        let mut v = self.zero();
        v[g] = 1;
        v
    }

    /// Restricts a global element to block `(i, j)`.
    pub fn component(&self, x: &[u32], i: usize, j: usize) -> Vec<u32> {
        self.block(i, j).iter().map(|&g| x[g]).collect()
    }

    fn embed(&self, out: &mut [u32], i: usize, j: usize, v: &[u32]) {
        for (&g, &x) in self.block(i, j).iter().zip(v) {
            out[g] = add_mod(out[g], x, self.p);
        }
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Element {
        let n = self.n;
        let mut out = self.zero();
        for i in 0..n {
            for j in 0..n {
                let xij = self.component(x, i, j);
                if xij.iter().all(|&v| v == 0) {
                    continue;
                }
                for k in 0..n {
                    let yjk = self.component(y, j, k);
                    let prod = self.mul_block(i, j, k, &xij, &yjk);
                    self.embed(&mut out, i, k, &prod);
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Element {
        x.iter().zip(y).map(|(&a, &b)| add_mod(a, b, self.p)).collect()
    }

    pub fn neg(&self, x: &[u32]) -> Element {
        x.iter().map(|&a| neg_mod(a, self.p)).collect()
    }

    pub fn is_central(&self, x: &[u32]) -> bool {
        (0..self.dim()).all(|g| {
            let b = self.basis_element(g);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    /// True if `x` lies in the span of the radical-flagged basis elements.
    pub fn is_in_radical(&self, x: &[u32]) -> bool {
        x.iter().zip(&self.basis).all(|(&v, b)| v == 0 || b.radical)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// Evaluates a path given as arrow labels, multiplying left to right.
    pub fn path_element(&self, arrows: &[&str]) -> Result<Element> {
        let mut acc: Option<Element> = None;
        for name in arrows {
            let g = self.find_label(name).ok_or_else(|| Error::Parse(format!("no basis element labelled {name}")))?;
            let b = self.basis_element(g);
            acc = Some(match acc {
                None => b,
                Some(a) => self.mul(&a, &b),
            });
        }
        acc.ok_or_else(|| Error::Parse("empty path".into()))
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &[u32]) -> String {
        let mut s = String::new();
        for (g, &v) in x.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let c = lift_symmetric(v, self.p);
            if s.is_empty() {
                if c == -1 {
                    s.push('-');
                }
            } else {
                s.push_str(if c < 0 { " - " } else { " + " });
            }
            if c.abs() != 1 {
                let _ = write!(s, "{}·", c.abs());
            }
            s.push_str(&self.basis[g].label);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// The opposite algebra: `e_i A^op e_j = e_j A e_i` with reversed product.
    pub fn opposite(&self) -> BasedAlgebra {
        let n = self.n;
        let elems = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                self.block(j, i).iter().map(|&g| (self.basis[g].label.clone(), self.basis[g].radical)).collect()
            })
            .collect();
        BasedAlgebra::from_blocks(n, self.p, elems, |i, j, k, a, b| {
            // a in e_j A e_i, b in e_k A e_j; a * b := b · a in e_k A e_i.
            let mut x = vec![0; self.block_dim(j, i)];
            x[a] = 1;
            let mut y = vec![0; self.block_dim(k, j)];
            y[b] = 1;
            self.mul_block(k, j, i, &y, &x)
        })
    }

    /// Builds a sub-quotient: keeps the vertices `keep` (in that order) and
    /// for each kept block either drops it (`None`) or quotients it by the
    /// given subspace of radical coordinates. The caller guarantees the
    /// result is an algebra (the killed span is an ideal of what remains
    /// and no product of kept blocks lands in a dropped one).
    pub(crate) fn subquotient(&self, keep: &[usize], kill: impl Fn(usize, usize) -> Option<Subspace>) -> BasedAlgebra {
        let m = keep.len();
        let kills: Vec<Option<Subspace>> =
            (0..m * m).map(|ij| kill(keep[ij / m], keep[ij % m])).collect();
        let frees: Vec<Vec<usize>> = kills.iter().map(|k| k.as_ref().map_or(Vec::new(), |s| s.free_positions())).collect();
        let elems = (0..m * m)
            .map(|ij| {
                let (i, j) = (keep[ij / m], keep[ij % m]);
                frees[ij]
                    .iter()
                    .map(|&l| {
                        let b = &self.basis[self.block(i, j)[l]];
                        (b.label.clone(), b.radical)
                    })
                    .collect()
            })
            .collect();
        BasedAlgebra::from_blocks(m, self.p, elems, |ni, nj, nk, a, b| {
            let (i, j, k) = (keep[ni], keep[nj], keep[nk]);
            let Some(target) = kills[ni * m + nk].as_ref() else {
                return Vec::new();
            };
            let mut x = vec![0; self.block_dim(i, j)];
            x[frees[ni * m + nj][a]] = 1;
            let mut y = vec![0; self.block_dim(j, k)];
            y[frees[nj * m + nk][b]] = 1;
            let mut prod = self.mul_block(i, j, k, &x, &y);
            target.reduce(&mut prod);
            frees[ni * m + nk].iter().map(|&l| prod[l]).collect()
        })
    }

    /// The algebra `eAe` for `e` the sum of idempotents in `keep` (0-based).
    pub fn idempotent_truncation(&self, keep: &[usize]) -> Result<BasedAlgebra> {
        if keep.is_empty() {
            return Err(Error::BadParameter("vertex subset must be nonempty".into()));
        }
        for (pos, &v) in keep.iter().enumerate() {
            if v >= self.n || keep[..pos].contains(&v) {
                return Err(Error::BadParameter(format!("bad vertex subset {keep:?}")));
            }
        }
        Ok(self.subquotient(keep, |i, j| Some(Subspace::new(self.block_dim(i, j), self.p))))
    }

    /// Quotient by the ideal generated by central radical elements.
    pub fn quotient_central(&self, gens: &[Element]) -> Result<BasedAlgebra> {
        let n = self.n;
        for g in gens {
            if !self.is_in_radical(g) {
                return Err(Error::NotInRadical { generator: self.format_element(g) });
            }
            if !self.is_central(g) {
                return Err(Error::NotCentral { generator: self.format_element(g) });
            }
        }
        let mut ideal: Vec<Subspace> =
            (0..n * n).map(|ij| Subspace::new(self.block_dim(ij / n, ij % n), self.p)).collect();
        // For central g the two-sided ideal AgA equals gA = span{g b}.
        for g in gens {
            for b in 0..self.dim() {
                let prod = self.mul(g, &self.basis_element(b));
                for i in 0..n {
                    for j in 0..n {
                        let c = self.component(&prod, i, j);
                        if c.iter().any(|&v| v != 0) {
                            ideal[i * n + j].insert(c);
                        }
                    }
                }
            }
        }
        let keep: Vec<usize> = (0..n).collect();
        Ok(self.subquotient(&keep, |i, j| Some(ideal[i * n + j].clone())))
    }

    /// Spans of `rad^k` per block, for `k >= 1`.
    fn radical_power(&self, k: usize) -> Vec<Subspace> {
        let n = self.n;
        let rad1: Vec<Subspace> = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let d = self.block_dim(i, j);
                Subspace::spanned_by(
                    d,
                    self.p,
                    (0..d).filter(|&l| i != j || l != self.units[i]).map(|l| {
                        let mut v = vec![0; d];
                        v[l] = 1;
                        v
                    }),
                )
            })
            .collect();
        let mut cur = rad1.clone();
        for _ in 1..k {
            let mut next: Vec<Subspace> =
                (0..n * n).map(|ij| Subspace::new(self.block_dim(ij / n, ij % n), self.p)).collect();
            for i in 0..n {
                for j in 0..n {
                    for x in cur[i * n + j].basis() {
                        for kk in 0..n {
                            for y in rad1[j * n + kk].basis() {
                                let prod = self.mul_block(i, j, kk, x, y);
                                if prod.iter().any(|&v| v != 0) {
                                    next[i * n + kk].insert(prod);
                                }
                            }
                        }
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// True iff every product of `k` radical elements vanishes.
    pub fn radical_power_zero(&self, k: usize) -> bool {
        assert!(k >= 1);
        self.radical_power(k).iter().all(|s| s.dim() == 0)
    }

    /// Smallest `k` with `rad^k = 0`.
    pub fn loewy_length(&self) -> usize {
        (1..).find(|&k| self.radical_power_zero(k)).unwrap()
    }

    /// Exhaustive associativity check on basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        for a in 0..self.block_dim(i, j) {
                            let x = unit(self.block_dim(i, j), a);
                            for b in 0..self.block_dim(j, k) {
                                let y = unit(self.block_dim(j, k), b);
                                let xy = self.mul_block(i, j, k, &x, &y);
                                for c in 0..self.block_dim(k, l) {
                                    let z = unit(self.block_dim(k, l), c);
                                    let left = self.mul_block(i, k, l, &xy, &z);
                                    let yz = self.mul_block(j, k, l, &y, &z);
                                    if left != self.mul_block(i, j, l, &x, &yz) {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn unit(len: usize, pos: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[pos] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> BasedAlgebra {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2);
        q.add_arrow("β", 2, 1);
        let rels = vec![Relation::monomial(&["α", "β"]), Relation::monomial(&["β", "α"])];
        BasedAlgebra::from_presentation(&q, &rels, 2, DEFAULT_LENGTH_CAP).unwrap()
    }

    fn a2() -> BasedAlgebra {
        let mut q = Quiver::new(2);
        q.add_arrow("α1", 1, 2);
        q.add_arrow("β1", 2, 1);
        BasedAlgebra::from_presentation(&q, &[Relation::monomial(&["α1", "β1"])], 2, DEFAULT_LENGTH_CAP).unwrap()
    }

    #[test]
    fn semisimple_cartan_is_identity() {
        let a = BasedAlgebra::semisimple(2, 3).unwrap();
        assert_eq!(a.cartan_matrix(), vec![vec![1, 0], vec![0, 1]]);
        assert!(a.radical_power_zero(1));
    }

    #[test]
    fn a2_identity_and_powers() {
        let a = a2();
        let one = a.one();
        for g in 0..a.dim() {
            let b = a.basis_element(g);
            assert_eq!(a.mul(&one, &b), b);
            assert_eq!(a.mul(&b, &one), b);
        }
        assert!(!a.radical_power_zero(2));
        assert!(a.radical_power_zero(3));
        assert_eq!(a.loewy_length(), 3);
    }

    #[test]
    fn a2_alpha_is_not_central() {
        let a = a2();
        let alpha = a.path_element(&["α1"]).unwrap();
        assert!(!a.is_central(&alpha));
        assert!(a.is_central(&a.one()));
    }

    #[test]
    fn quotient_by_non_central_generator_fails() {
        let a = a2();
        let beta = a.path_element(&["β1"]).unwrap();
        assert!(matches!(a.quotient_central(&[beta]), Err(Error::NotCentral { .. })));
        assert!(matches!(a.quotient_central(&[a.one()]), Err(Error::NotInRadical { .. })));
    }

    #[test]
    fn empty_quotient_is_identity() {
        let a = a2();
        assert_eq!(a.quotient_central(&[]).unwrap(), a);
    }

    #[test]
    fn opposite_transposes_cartan() {
        let a = two_cycle();
        let op = a.opposite();
        assert!(op.is_associative());
        assert_eq!(op.opposite(), a);
        let mut q = Quiver::new(2);
        q.add_arrow("a", 1, 2);
        let path = BasedAlgebra::from_presentation(&q, &[], 2, DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(path.cartan_matrix(), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(path.opposite().cartan_matrix(), vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn truncation_to_one_vertex() {
        let a = two_cycle();
        let t = a.idempotent_truncation(&[0]).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(a.idempotent_truncation(&[0, 1]).unwrap(), a);
        assert!(a.idempotent_truncation(&[]).is_err());
    }

    #[test]
    fn format_element_signs() {
        let a = a2();
        let x = a.add(&a.path_element(&["β1", "α1"]).unwrap(), &a.neg(&a.one()));
        let s = a.format_element(&x);
        assert!(s.contains("β1α1"), "{s}");
    }
}
