//! Sign decomposition: the triangular algebras `A_ε` whose two-term silting
//! complexes in the orthant `ε` match those of `A` with the same g-vectors.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{unit, BasedAlgebra};
use crate::error::{Error, Result};
use crate::field::{FMatrix, Subspace};
use crate::search::{enumerate, EnumerationResult, SearchOptions};

/// A map from vertices to `{+1, -1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadParameter(format!("sign vector entries must be ±1, got {signs:?}")));
        }
        Ok(SignVector(signs))
    }

    /// Entrywise sign; zero entries are mapped to `+`.
    pub fn of(g: &[i32]) -> Self {
        SignVector(g.iter().map(|&x| if x < 0 { -1 } else { 1 }).collect())
    }

    pub fn all_plus(n: usize) -> Self {
        SignVector(vec![1; n])
    }

    pub fn all_minus(n: usize) -> Self {
        SignVector(vec![-1; n])
    }

    /// All `2^n` sign vectors, `+` before `-`, first vertex most significant.
    pub fn all(n: usize) -> impl Iterator<Item = SignVector> {
        (0u64..1 << n).map(move |bits| SignVector((0..n).map(|i| if bits >> (n - 1 - i) & 1 == 1 { -1 } else { 1 }).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn is_plus(&self, i: usize) -> bool {
        self.0[i] > 0
    }

    pub fn negate(&self) -> Self {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    pub fn plus_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_plus(i)).collect()
    }

    pub fn minus_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.is_plus(i)).collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Accepts `+-+`, `(+,-,+)` or `1,-1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let body: String = s.chars().filter(|c| !matches!(c, '(' | ')' | ' ')).collect();
        let parts: Vec<&str> = if body.contains(',') { body.split(',').collect() } else { body.split("").filter(|p| !p.is_empty()).collect() };
        let signs = parts
            .iter()
            .map(|p| match *p {
                "+" | "1" | "+1" => Ok(1),
                "-" | "-1" => Ok(-1),
                _ => Err(Error::Parse(format!("bad sign {p:?} in {s:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        if signs.is_empty() {
            return Err(Error::Parse("empty sign vector".into()));
        }
        Ok(SignVector(signs))
    }
}

impl Serialize for SignVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Radical elements of `e_i A e_j` killed by every linear map in `maps`,
/// where each map sends a block element to a vector.
fn radical_kernel(alg: &BasedAlgebra, i: usize, j: usize, maps: impl Fn(&[u32]) -> Vec<u32>) -> Subspace {
    let p = alg.p();
    let d = alg.block_dim(i, j);
    let rad: Vec<usize> = (0..d).filter(|&l| alg.basis()[alg.block(i, j)[l]].radical).collect();
    let images: Vec<Vec<u32>> = rad.iter().map(|&l| maps(&unit(d, l))).collect();
    let rows = images.first().map_or(0, Vec::len);
    let kernel = if rows == 0 {
        (0..rad.len()).map(|c| unit(rad.len(), c)).collect()
    } else {
        FMatrix::from_columns(rows, &images, p).kernel_basis()
    };
    Subspace::spanned_by(
        d,
        p,
        kernel.into_iter().map(|k| {
            let mut v = vec![0; d];
            for (c, &l) in rad.iter().enumerate() {
                v[l] = k[c];
            }
            v
        }),
    )
}

/// The upper triangular algebra
/// `A_ε = ((e₊Ae₊)/J₊, e₊Ae₋; 0, (e₋Ae₋)/J₋)` on the same vertices.
pub fn build_a_epsilon(alg: &BasedAlgebra, eps: &SignVector) -> Result<BasedAlgebra> {
    let n = alg.n();
    if eps.len() != n {
        return Err(Error::BadParameter(format!("sign vector has length {}, expected {n}", eps.len())));
    }
    let plus = eps.plus_vertices();
    let minus = eps.minus_vertices();
    let keep: Vec<usize> = (0..n).collect();
    Ok(alg.subquotient(&keep, |i, j| match (eps.is_plus(i), eps.is_plus(j)) {
        (false, true) => None,
        (true, false) => Some(Subspace::new(alg.block_dim(i, j), alg.p())),
        // x · e_j A e_k = 0 for every k in -.
        (true, true) => Some(radical_kernel(alg, i, j, |x| {
            let mut out = Vec::new();
            for &k in &minus {
                for b in 0..alg.block_dim(j, k) {
                    out.extend(alg.mul_block(i, j, k, x, &unit(alg.block_dim(j, k), b)));
                }
            }
            out
        })),
        // e_k A e_i · x = 0 for every k in +.
        (false, false) => Some(radical_kernel(alg, i, j, |x| {
            let mut out = Vec::new();
            for &k in &plus {
                for b in 0..alg.block_dim(k, i) {
                    out.extend(alg.mul_block(k, i, j, &unit(alg.block_dim(k, i), b), x));
                }
            }
            out
        })),
    }))
}

/// Two-term silting objects of `A` in the orthant `ε`, obtained from a full
/// enumeration of `A_ε`.
#[derive(Clone, Debug)]
pub struct OrthantResult {
    pub eps: SignVector,
    /// Total g-vectors of the objects in the orthant, sorted.
    pub g_vectors: Vec<Vec<i32>>,
    /// Whether the enumeration of `A_ε` finished within the budget.
    pub complete: bool,
    pub a_epsilon_dim: usize,
}

impl OrthantResult {
    pub fn count(&self) -> usize {
        self.g_vectors.len()
    }
}

pub fn enumerate_orthant(alg: &BasedAlgebra, eps: &SignVector, opts: &SearchOptions) -> Result<OrthantResult> {
    let ae = build_a_epsilon(alg, eps)?;
    let r = enumerate(&ae, "A_eps", opts)?;
    let mut g_vectors: Vec<Vec<i32>> =
        r.objects.iter().filter(|o| &o.orthant() == eps).map(|o| o.total_g_vector()).collect();
    g_vectors.sort();
    Ok(OrthantResult { eps: eps.clone(), g_vectors, complete: r.complete, a_epsilon_dim: ae.dim() })
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthantRow {
    pub eps: SignVector,
    pub count: usize,
    pub complete: bool,
    pub a_epsilon_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignReport {
    pub algebra: String,
    pub p: u32,
    pub orthants: Vec<OrthantRow>,
    /// Sum of the per-orthant counts.
    pub sum: usize,
    /// Count from enumerating `A` directly.
    pub direct: usize,
    pub complete: bool,
    pub consistent: bool,
}

impl SignReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("{} (p={})\n", self.algebra, self.p);
        for row in &self.orthants {
            s.push_str(&format!(
                "  {}  {}{}\n",
                row.eps,
                row.count,
                if row.complete { "" } else { " (incomplete)" }
            ));
        }
        s.push_str(&format!(
            "sum={} direct={} complete={} consistent={}\n",
            self.sum, self.direct, self.complete, self.consistent
        ));
        s
    }
}

pub const MAX_SIGN_VERTICES: usize = 20;

/// Per-orthant counts over all `2^n` sign vectors, compared with a direct
/// enumeration of `A`.
pub fn sign_decomposition_report(alg: &BasedAlgebra, name: &str, opts: &SearchOptions) -> Result<SignReport> {
    let n = alg.n();
    if n > MAX_SIGN_VERTICES {
        return Err(Error::BadParameter(format!("sign decomposition supports at most {MAX_SIGN_VERTICES} vertices")));
    }
    let run = || -> Result<SignReport> {
        let inner = SearchOptions { threads: None, ..opts.clone() };
        let signs: Vec<SignVector> = SignVector::all(n).collect();
        let parts = signs.par_iter().map(|e| enumerate_orthant(alg, e, &inner)).collect::<Result<Vec<_>>>()?;
        let direct: EnumerationResult = enumerate(alg, name, &inner)?;
        let sum = parts.iter().map(OrthantResult::count).sum();
        let complete = direct.complete && parts.iter().all(|r| r.complete);
        Ok(SignReport {
            algebra: name.to_string(),
            p: alg.p(),
            orthants: parts
                .into_iter()
                .map(|r| OrthantRow { count: r.count(), complete: r.complete, a_epsilon_dim: r.a_epsilon_dim, eps: r.eps })
                .collect(),
            sum,
            direct: direct.count(),
            complete,
            consistent: sum == direct.count(),
        })
    };
    match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::BadParameter(e.to_string()))?
            .install(run),
        None => run(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionCheck {
    /// Objects of `A` negative on every vertex of `J`.
    pub count_a: usize,
    /// Objects of `B` positive on every vertex of `J`.
    pub count_b: usize,
    pub complete: bool,
    pub equal: bool,
}

/// Compares the objects of `A` with `ε = -` on `J` against those of `B` with
/// `ε = +` on `J` (`J` 0-based), where `B` is the tilting mutation of `A`
/// at `J`.
pub fn tilting_bijection_counts(
    a: &BasedAlgebra,
    b: &BasedAlgebra,
    j: &[usize],
    opts: &SearchOptions,
) -> Result<BijectionCheck> {
    if a.n() != b.n() {
        return Err(Error::BadParameter("algebras have different vertex counts".into()));
    }
    if let Some(&v) = j.iter().find(|&&v| v >= a.n()) {
        return Err(Error::BadParameter(format!("vertex {} out of range", v + 1)));
    }
    let ra = enumerate(a, "A", opts)?;
    let rb = enumerate(b, "B", opts)?;
    let count_a = ra.objects.iter().filter(|o| j.iter().all(|&v| !o.orthant().is_plus(v))).count();
    let count_b = rb.objects.iter().filter(|o| j.iter().all(|&v| o.orthant().is_plus(v))).count();
    let complete = ra.complete && rb.complete;
    Ok(BijectionCheck { count_a, count_b, complete, equal: count_a == count_b })
}

/// [`tilting_bijection_counts`] for two catalog algebras given by name.
pub fn verify_tilting_bijection(
    name_a: &str,
    name_b: &str,
    j: &[usize],
    p: u32,
    opts: &SearchOptions,
) -> Result<BijectionCheck> {
    let a = crate::catalog::get_by_spec(name_a, p)?;
    let b = crate::catalog::get_by_spec(name_b, p)?;
    tilting_bijection_counts(&a, &b, j, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, Relation, DEFAULT_LENGTH_CAP};

    fn two_cycle() -> BasedAlgebra {
        let mut q = Quiver::new(2);
        q.add_arrow("α", 1, 2).add_arrow("β", 2, 1);
        let rels = [Relation::monomial(&["α", "β"]), Relation::monomial(&["β", "α"])];
        BasedAlgebra::from_presentation(&q, &rels, 2, DEFAULT_LENGTH_CAP).unwrap()
    }

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn sign_vector_parsing_and_display() {
        assert_eq!(sv("+-").to_string(), "(+,-)");
        assert_eq!(sv("(+,-,+)"), sv("1,-1,1"));
        assert_eq!(sv("+-").negate().negate(), sv("+-"));
        assert!("+0".parse::<SignVector>().is_err());
        assert_eq!(SignVector::all(3).count(), 8);
        assert_eq!(SignVector::all(2).next().unwrap(), SignVector::all_plus(2));
    }

    #[test]
    fn a_epsilon_of_two_cycle() {
        let a = two_cycle();
        let pm = build_a_epsilon(&a, &sv("+-")).unwrap();
        assert_eq!(pm.dim(), 3);
        assert_eq!(pm.cartan_matrix(), vec![vec![1, 1], vec![0, 1]]);
        let pp = build_a_epsilon(&a, &sv("++")).unwrap();
        assert_eq!(pp.dim(), 2);
        assert!(pp.radical_power_zero(1));
    }

    #[test]
    fn a_epsilon_of_semisimple_is_itself() {
        let a = BasedAlgebra::semisimple(3, 3).unwrap();
        for e in SignVector::all(3) {
            assert_eq!(build_a_epsilon(&a, &e).unwrap().dim(), 3);
        }
    }

    #[test]
    fn two_cycle_orthants() {
        let a = two_cycle();
        let counts: Vec<usize> = ["++", "+-", "-+", "--"]
            .iter()
            .map(|e| enumerate_orthant(&a, &sv(e), &SearchOptions::default()).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 2, 1]);
        let r = sign_decomposition_report(&a, "example23", &SearchOptions::default()).unwrap();
        assert_eq!((r.sum, r.direct, r.consistent), (6, 6, true));
    }

    #[test]
    fn empty_subset_compares_totals() {
        let a = two_cycle();
        let c = tilting_bijection_counts(&a, &a, &[], &SearchOptions::default()).unwrap();
        assert_eq!((c.count_a, c.count_b, c.equal), (6, 6, true));
    }
}
