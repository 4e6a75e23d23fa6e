//! Exact and floating eigenvalue machinery for symmetric integer matrices.
//!
//! The exact path computes integer characteristic polynomials
//! (Faddeev–LeVerrier), locates roots with Sturm sequences against
//! quadratic-surd thresholds, and classifies positive semidefiniteness with
//! rational elimination. The floating path is a cyclic Jacobi sweep used for
//! large matrices and as a cross-check; `approx_spectrum` ties the two
//! together by certifying every Jacobi value inside an exact rational
//! enclosure.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::AlgebraicThreshold;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matrix::SymmetricIntMatrix;
use crate::poly::{IntPoly, RootCounter};

/// Monic integer characteristic polynomial `det(xI - M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    poly: IntPoly,
}

impl CharPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn counter(&self) -> RootCounter {
        RootCounter::new(self.poly.clone())
    }
}

/// Characteristic polynomial by the Faddeev–LeVerrier recurrence; all
/// divisions are exact over the integers.
pub fn char_poly(m: &SymmetricIntMatrix) -> CharPoly {
    CharPoly { poly: char_poly_any(&to_bigint_rows(m)) }
}

/// Same recurrence for an arbitrary (possibly nonsymmetric) integer matrix.
/// Needed for quotient matrices whose spectra are still real.
pub fn char_poly_rows(rows: &[Vec<i64>]) -> CharPoly {
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    CharPoly { poly: char_poly_any(&big) }
}

fn to_bigint_rows(m: &SymmetricIntMatrix) -> Vec<Vec<BigInt>> {
    let n = m.dim();
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect()
}

fn char_poly_any(a: &[Vec<BigInt>]) -> IntPoly {
    let n = a.len();
    if n == 0 {
        return IntPoly::constant(1);
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m_1 = I; c_{n-k} = -tr(A m_k)/k; m_{k+1} = A m_k + c_{n-k} I.
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for k in 1..=n {
        let am = mat_mul(a, &m);
        let tr: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let c = -tr / BigInt::from(k as i64);
        coeffs[n - k] = c.clone();
        if k < n {
            m = am;
            for i in 0..n {
                m[i][i] += &c;
            }
        }
    }
    IntPoly::new(coeffs)
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            let aik = &a[i][k];
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Exact number of roots of `p` strictly below `t`, with multiplicity.
pub fn count_roots_below(p: &CharPoly, t: &AlgebraicThreshold) -> usize {
    p.counter().count_below(t)
}

/// Exact number of roots of `p` at most `t`, with multiplicity.
pub fn count_roots_at_most(p: &CharPoly, t: &AlgebraicThreshold) -> usize {
    p.counter().count_at_most(t)
}

/// Result of comparing the smallest eigenvalue with a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trichotomy {
    Less,
    Equal,
    Greater,
}

/// Exact trichotomy of the smallest eigenvalue of `m` against `t`.
pub fn lambda_min_cmp_matrix(m: &SymmetricIntMatrix, t: &AlgebraicThreshold) -> Trichotomy {
    if m.dim() == 0 {
        // Empty matrix: no eigenvalues; treat min as +infinity.
        return Trichotomy::Greater;
    }
    lambda_min_cmp_poly(&char_poly(m), t)
}

pub fn lambda_min_cmp_poly(p: &CharPoly, t: &AlgebraicThreshold) -> Trichotomy {
    let rc = p.counter();
    if rc.count_below(t) > 0 {
        Trichotomy::Less
    } else if rc.multiplicity_at(t) > 0 {
        Trichotomy::Equal
    } else {
        Trichotomy::Greater
    }
}

/// Exact trichotomy of a signed graph's smallest adjacency eigenvalue.
pub fn lambda_min_cmp(g: &SignedGraph, t: &AlgebraicThreshold) -> Trichotomy {
    lambda_min_cmp_matrix(&g.adjacency_matrix(), t)
}

/// Exact classification of `m + shift*I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PsdStatus {
    /// Strictly positive definite: smallest eigenvalue of `m` above `-shift`.
    PositiveDefinite,
    /// Positive semidefinite and singular: smallest eigenvalue exactly `-shift`.
    PsdSingular,
    /// Not positive semidefinite: smallest eigenvalue below `-shift`.
    NotPsd,
}

/// Rational symmetric elimination. A zero pivot with a nonzero residual row
/// kills semidefiniteness (the 2x2 minor is negative); a zero pivot with a
/// zero row records singularity.
pub fn is_psd_shifted(m: &SymmetricIntMatrix, shift: i64) -> PsdStatus {
    let n = m.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = m.get(i, j) + if i == j { shift } else { 0 };
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let mut singular = false;
    for k in 0..n {
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            return PsdStatus::NotPsd;
        }
        if pivot.is_zero() {
            if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                return PsdStatus::NotPsd;
            }
            singular = true;
            continue;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    if singular {
        PsdStatus::PsdSingular
    } else {
        PsdStatus::PositiveDefinite
    }
}

/// Graph-level PSD test of `A(S) + shift*I`.
pub fn graph_psd_shifted(g: &SignedGraph, shift: i64) -> PsdStatus {
    is_psd_shifted(&g.adjacency_matrix(), shift)
}

/// Cyclic Jacobi eigenvalue sweep for a symmetric matrix, eigenvalues sorted
/// ascending. Convergence is unconditional for symmetric input; the sweep cap
/// exists to surface non-symmetric misuse.
pub fn jacobi_eigenvalues(mat: &[Vec<f64>]) -> Result<Vec<f64>> {
    const MAX_SWEEPS: usize = 100;
    let n = mat.len();
    if n == 0 {
        return Ok(vec![]);
    }
    let mut a: Vec<Vec<f64>> = mat.to_vec();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape("jacobi needs a square matrix".into()));
        }
        for j in 0..n {
            if (row[j] - mat[j][i]).abs() > 1e-12 * (1.0 + row[j].abs()) {
                return Err(Error::Shape("jacobi needs a symmetric matrix".into()));
            }
        }
    }
    let scale: f64 = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, &x| acc.max(x.abs()))
        .max(1.0);
    for _sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(eig);
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::Shape("jacobi failed to converge within the sweep cap".into()))
}

/// Floating smallest eigenvalue of a symmetric integer matrix.
pub fn lambda_min_float(m: &SymmetricIntMatrix) -> Result<f64> {
    if m.dim() == 0 {
        return Ok(f64::INFINITY);
    }
    Ok(jacobi_eigenvalues(&m.to_f64())?[0])
}

/// Floating approximations plus certified rational enclosures.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Jacobi eigenvalues, ascending.
    pub values: Vec<f64>,
    /// Rational enclosures `[lo, hi]`, one per eigenvalue (with multiplicity),
    /// pairwise ordered, each of width at most the requested tolerance, each
    /// containing both the true eigenvalue and its approximation.
    pub enclosures: Vec<(BigRational, BigRational)>,
}

impl Spectrum {
    /// Number of enclosures lying entirely below `t`.
    pub fn count_enclosures_below(&self, t: &AlgebraicThreshold) -> usize {
        self.enclosures
            .iter()
            .filter(|(_, hi)| t.cmp_rational(hi) == std::cmp::Ordering::Greater)
            .count()
    }
}

/// Computes all eigenvalues with Jacobi and certifies each inside an exact
/// enclosure of width at most `tol`, found by Sturm bisection on the
/// characteristic polynomial.
pub fn approx_spectrum(m: &SymmetricIntMatrix, tol: f64) -> Result<Spectrum> {
    if tol <= 0.0 {
        return Err(Error::Hypothesis("tolerance must be positive".into()));
    }
    let n = m.dim();
    if n == 0 {
        return Ok(Spectrum { values: vec![], enclosures: vec![] });
    }
    let values = jacobi_eigenvalues(&m.to_f64())?;
    let cp = char_poly(m);
    let rc = cp.counter();
    // Gershgorin bound.
    let radius: i64 = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).abs()).sum::<i64>())
        .max()
        .unwrap_or(0);
    let tol_r = BigRational::from_float(tol).expect("finite tolerance");
    let quarter = &tol_r / BigRational::from_integer(BigInt::from(4));
    let half = &tol_r / BigRational::from_integer(BigInt::from(2));
    let mut enclosures = Vec::with_capacity(n);
    for k in 0..n {
        let mut lo = BigRational::from_integer(BigInt::from(-radius - 1));
        let mut hi = BigRational::from_integer(BigInt::from(radius + 1));
        // Invariant: #eigenvalues <= lo is at most k, #eigenvalues <= hi is
        // at least k+1, so the k-th (ascending) eigenvalue lies in (lo, hi].
        while &hi - &lo > half {
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            let at_most = rc.count_at_most(&AlgebraicThreshold::from_rational(mid.clone()));
            if at_most >= k + 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        enclosures.push((&lo - &quarter, &hi + &quarter));
    }
    // Certify the floating values inside their enclosures.
    for (k, v) in values.iter().enumerate() {
        let vr = BigRational::from_float(*v)
            .ok_or_else(|| Error::Shape("non-finite jacobi eigenvalue".into()))?;
        let (lo, hi) = &enclosures[k];
        if &vr < lo || &vr > hi {
            return Err(Error::Shape(format!(
                "jacobi eigenvalue {v} escaped its certified enclosure"
            )));
        }
    }
    Ok(Spectrum { values, enclosures })
}

/// Exact smallest-eigenvalue enclosure of width at most `tol` (no floating
/// path involved).
pub fn lambda_min_enclosure(m: &SymmetricIntMatrix, tol: f64) -> Result<(BigRational, BigRational)> {
    let s = approx_spectrum(m, tol)?;
    s.enclosures
        .first()
        .cloned()
        .ok_or_else(|| Error::Shape("empty matrix has no eigenvalues".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, star, SignedGraph};
    use num_traits::Signed as _;

    /// Independent oracle: det(xI - M) by cofactor expansion over
    /// polynomials. Exponential; fine for n <= 6.
    fn naive_char_poly(m: &SymmetricIntMatrix) -> IntPoly {
        fn det(rows: &[Vec<IntPoly>]) -> IntPoly {
            let n = rows.len();
            if n == 0 {
                return IntPoly::constant(1);
            }
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = IntPoly::zero();
            for (j, cof) in rows[0].iter().enumerate() {
                if cof.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<IntPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = cof.mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let n = m.dim();
        let rows: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            IntPoly::new(vec![BigInt::from(-m.get(i, j)), BigInt::one()])
                        } else {
                            IntPoly::constant(-m.get(i, j))
                        }
                    })
                    .collect()
            })
            .collect();
        det(&rows)
    }

    fn thr(s: &str) -> AlgebraicThreshold {
        s.parse().unwrap()
    }

    fn c4_one_negative() -> SignedGraph {
        SignedGraph::with_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, -1)]).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        // P3 all positive: x^3 - 2x.
        let p3 = char_poly(&path(3).adjacency_matrix());
        assert_eq!(p3.poly(), &IntPoly::from_i64(&[0, -2, 0, 1]));
        // Zero 2x2: x^2.
        let z = char_poly(&SymmetricIntMatrix::zero(2));
        assert_eq!(z.poly(), &IntPoly::from_i64(&[0, 0, 1]));
        // C4 with one negative edge: x^4 - 4x^2 + 4 = (x^2-2)^2.
        let c = char_poly(&c4_one_negative().adjacency_matrix());
        assert_eq!(c.poly(), &IntPoly::from_i64(&[4, 0, -4, 0, 1]));
    }

    #[test]
    fn char_poly_matches_cofactor_oracle() {
        let graphs = vec![
            path(4),
            cycle(5),
            complete(4),
            c4_one_negative(),
            SignedGraph::with_edges(5, &[(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 4, 1), (0, 4, -1)])
                .unwrap(),
        ];
        for g in graphs {
            let m = g.adjacency_matrix();
            assert_eq!(char_poly(&m).poly(), &naive_char_poly(&m));
        }
    }

    #[test]
    fn char_poly_switching_invariant_and_multiplicative() {
        let g = SignedGraph::with_edges(
            6,
            &[(0, 1, -1), (1, 2, 1), (2, 3, -1), (3, 4, 1), (4, 5, -1), (0, 5, 1), (1, 4, 1)],
        )
        .unwrap();
        let base = char_poly(&g.adjacency_matrix());
        for bits in [0u32, 3, 17, 42, 63] {
            let w: Vec<usize> = (0..6).filter(|&v| bits >> v & 1 == 1).collect();
            let s = g.switch(&w).unwrap();
            assert_eq!(char_poly(&s.adjacency_matrix()), base);
        }
        // Disjoint union: product of the parts' char polys.
        let mut disj = SignedGraph::empty(5);
        for (u, v, s) in path(3).edges() {
            disj.add_edge(u, v, s).unwrap();
        }
        disj.add_edge(3, 4, -1).unwrap();
        let whole = char_poly(&disj.adjacency_matrix());
        let left = char_poly(&path(3).adjacency_matrix());
        let right = char_poly(
            &SignedGraph::with_edges(2, &[(0, 1, -1)]).unwrap().adjacency_matrix(),
        );
        assert_eq!(whole.poly(), &left.poly().mul(right.poly()));
    }

    #[test]
    fn lambda_min_examples() {
        // Paw: triangle with a pendant edge, all positive; below -sqrt2.
        let paw =
            SignedGraph::with_edges(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        assert_eq!(lambda_min_cmp(&paw, &thr("-sqrt2")), Trichotomy::Less);

        // K_{1,1,2}: lambda_min = (1-sqrt17)/2 < -sqrt2, exactly.
        let k112 = SignedGraph::with_edges(
            4,
            &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1)],
        )
        .unwrap();
        assert_eq!(lambda_min_cmp(&k112, &thr("-sqrt2")), Trichotomy::Less);
        assert_eq!(lambda_min_cmp(&k112, &thr("(1-sqrt17)/2")), Trichotomy::Equal);

        // P5: lambda_min = -sqrt3 < -sqrt2.
        assert_eq!(lambda_min_cmp(&path(5), &thr("-sqrt2")), Trichotomy::Less);
        assert_eq!(lambda_min_cmp(&path(5), &thr("-sqrt3")), Trichotomy::Equal);

        // C4 with one negative edge: exactly -sqrt2.
        assert_eq!(lambda_min_cmp(&c4_one_negative(), &thr("-sqrt2")), Trichotomy::Equal);
        assert_eq!(lambda_min_cmp(&c4_one_negative(), &thr("-2")), Trichotomy::Greater);

        // K4 all positive at -1: EQUAL with boundary multiplicity 3.
        let cp = char_poly(&complete(4).adjacency_matrix());
        assert_eq!(lambda_min_cmp_poly(&cp, &thr("-1")), Trichotomy::Equal);
        assert_eq!(cp.counter().multiplicity_at(&thr("-1")), 3);
        assert_eq!(count_roots_below(&cp, &thr("-1")), 0);
    }

    #[test]
    fn psd_examples() {
        // All-negative C5 switches to -C5, smallest eigenvalue exactly -2.
        let mut c5n = SignedGraph::empty(5);
        for i in 0..5 {
            c5n.add_edge(i, (i + 1) % 5, -1).unwrap();
        }
        assert_eq!(graph_psd_shifted(&c5n, 2), PsdStatus::PsdSingular);
        // K3 all positive: lambda_min = -1 > -2.
        assert_eq!(graph_psd_shifted(&complete(3), 2), PsdStatus::PositiveDefinite);
        // K_{1,5}: lambda_min = -sqrt5 < -2.
        assert_eq!(graph_psd_shifted(&star(5), 2), PsdStatus::NotPsd);
    }

    #[test]
    fn psd_agrees_with_charpoly_and_minors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=5);
            let mut m = SymmetricIntMatrix::zero(n);
            for i in 0..n {
                for j in i..n {
                    m.set(i, j, rng.gen_range(-2..=2));
                }
            }
            let status = is_psd_shifted(&m, 0);
            let cp = char_poly(&m);
            let zero = thr("0");
            let by_poly = match lambda_min_cmp_poly(&cp, &zero) {
                Trichotomy::Greater => PsdStatus::PositiveDefinite,
                Trichotomy::Equal => PsdStatus::PsdSingular,
                Trichotomy::Less => PsdStatus::NotPsd,
            };
            assert_eq!(status, by_poly, "matrix {:?}", m.rows());
            // For PD instances, all leading principal minors are positive.
            if status == PsdStatus::PositiveDefinite {
                for k in 1..=n {
                    let keep: Vec<usize> = (0..k).collect();
                    assert!(m.principal_submatrix(&keep).determinant().is_positive());
                }
            }
        }
    }

    #[test]
    fn jacobi_and_enclosures() {
        // C4 one negative: eigenvalues ±sqrt2, each twice.
        let spec = approx_spectrum(&c4_one_negative().adjacency_matrix(), 1e-9).unwrap();
        let s2 = 2f64.sqrt();
        let expect = [-s2, -s2, s2, s2];
        for (v, e) in spec.values.iter().zip(expect.iter()) {
            assert!((v - e).abs() < 1e-9, "{v} vs {e}");
        }
        assert_eq!(spec.count_enclosures_below(&thr("0")), 2);
        assert_eq!(spec.count_enclosures_below(&thr("-sqrt2")), 0);

        // Zero matrix.
        let spec = approx_spectrum(&SymmetricIntMatrix::zero(3), 1e-9).unwrap();
        assert!(spec.values.iter().all(|v| v.abs() < 1e-12));

        // [[-1,1],[1,-1]]: eigenvalues -2, 0.
        let m = SymmetricIntMatrix::from_rows(&[vec![-1, 1], vec![1, -1]]);
        let spec = approx_spectrum(&m, 1e-9).unwrap();
        assert!((spec.values[0] + 2.0).abs() < 1e-9);
        assert!(spec.values[1].abs() < 1e-9);
    }

    #[test]
    fn jacobi_rejects_nonsymmetric() {
        let m = vec![vec![0.0, 1.0], vec![2.0, 0.0]];
        assert!(jacobi_eigenvalues(&m).is_err());
    }

    #[test]
    fn enclosure_counts_match_sturm() {
        let graphs = vec![path(5), cycle(5), complete(4), c4_one_negative()];
        let thresholds = ["-2", "-sqrt2", "-1", "0"];
        for g in graphs {
            let m = g.adjacency_matrix();
            let cp = char_poly(&m);
            let spec = approx_spectrum(&m, 1e-9).unwrap();
            for t in thresholds {
                let t = thr(t);
                assert_eq!(
                    count_roots_below(&cp, &t),
                    spec.count_enclosures_below(&t),
                    "graph {:?} at {t}",
                    g.edges()
                );
            }
        }
    }
}
