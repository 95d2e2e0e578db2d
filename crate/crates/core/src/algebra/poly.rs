//! Integer polynomials, coefficients stored highest degree first.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// `det(xI - A)` by the Faddeev–LeVerrier recurrence over big integers.
/// Returns `order + 1` coefficients, leading coefficient first.
pub fn characteristic_polynomial(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    let mut coeffs = vec![BigInt::one()];
    // m holds M_k; A·M_k is formed row by row from the neighbour lists.
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut am = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in am.iter_mut().enumerate() {
            for l in g.neighbors(i).ones() {
                for (dst, src) in row.iter_mut().zip(&m[l]) {
                    *dst += src;
                }
            }
        }
        // M_k = A·M_{k-1} + c_{k-1} I
        let c_prev = coeffs[k - 1].clone();
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        m = am;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in g.neighbors(i).ones() {
                trace += &m[l][i];
            }
        }
        let c_k = -trace / BigInt::from(k as u64);
        coeffs.push(c_k);
    }
    coeffs
}

pub fn evaluate(poly: &[BigInt], x: &BigInt) -> BigInt {
    poly.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Divides by `(x - r)`; returns the quotient when the remainder is zero.
fn divide_by_root(poly: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let mut out = Vec::with_capacity(poly.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in poly {
        acc = acc * r + c;
        out.push(acc.clone());
    }
    let rem = out.pop()?;
    rem.is_zero().then_some(out)
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let lead = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    p.drain(..lead);
    p
}

fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    let d = degree(p);
    trim(
        p.iter()
            .take(d)
            .enumerate()
            .map(|(i, c)| c * BigInt::from((d - i) as u64))
            .collect(),
    )
}

fn primitive_part(p: Vec<BigInt>) -> Vec<BigInt> {
    let content = p.iter().fold(BigInt::zero(), |g, c| num_integer_gcd(&g, c));
    if content.is_zero() || content.is_one() {
        return p;
    }
    let sign = if p[0].is_negative() { -content.clone() } else { content };
    p.into_iter().map(|c| c / &sign).collect()
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Pseudo-remainder of `a` by `b` (`lc(b)^k · a mod b`).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = &b[0];
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r[0].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i] -= &lr * bc;
        }
        r = trim(r);
    }
    r
}

/// Gcd over the rationals, returned primitive.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive_part(trim(a.to_vec()));
    let mut y = primitive_part(trim(b.to_vec()));
    while !y.is_empty() {
        let r = primitive_part(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Number of distinct complex roots: degree of the square-free part.
pub(crate) fn distinct_root_count(p: &[BigInt]) -> usize {
    let p = trim(p.to_vec());
    if degree(&p) == 0 {
        return 0;
    }
    let g = poly_gcd(&p, &derivative(&p));
    degree(&p) - degree(&g)
}

/// Integer eigenvalues with multiplicities, plus the unsplit remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// `(eigenvalue, multiplicity)`, eigenvalues descending.
    pub roots: Vec<(i64, usize)>,
    /// Factor with no integer roots, leading coefficient first; empty when
    /// the characteristic polynomial splits over the integers.
    pub residual: Vec<BigInt>,
}

impl SpectrumReport {
    pub fn distinct_eigenvalues(&self) -> usize {
        self.roots.len() + distinct_root_count(&self.residual)
    }
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpectrumReport", 2)?;
        let roots: Vec<[i64; 2]> = self.roots.iter().map(|&(v, m)| [v, m as i64]).collect();
        st.serialize_field("roots", &roots)?;
        let residual: Vec<String> = self.residual.iter().map(|c| c.to_string()).collect();
        st.serialize_field("residual", &residual)?;
        st.end()
    }
}

/// Finds every integer eigenvalue in `[-Δ, Δ]` by repeated exact division.
pub fn integer_spectrum(g: &Graph) -> SpectrumReport {
    let mut poly = characteristic_polynomial(g);
    let bound = g.degrees().into_iter().max().unwrap_or(0) as i64;
    let mut roots = Vec::new();
    for r in (-bound..=bound).rev() {
        let rb = BigInt::from(r);
        let mut mult = 0;
        while let Some(q) = divide_by_root(&poly, &rb) {
            poly = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    let residual = if poly.len() == 1 { Vec::new() } else { poly };
    SpectrumReport { roots, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, dihedral_cayley, path};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// `det(xI - A)` at an integer point by fraction-free Bareiss elimination.
    fn det_at(g: &Graph, x: i64) -> BigInt {
        let n = g.order();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigInt::from(x)
                        } else if g.is_adjacent(i, j) {
                            BigInt::from(-1)
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * a[n - 1][n - 1].clone()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(characteristic_polynomial(&complete(2)), ints(&[1, 0, -1]));
        assert_eq!(characteristic_polynomial(&cycle(4)), ints(&[1, 0, -4, 0, 0]));
    }

    #[test]
    fn agrees_with_determinant_oracle() {
        let graphs = [cycle(5), path(6), complete(4), dihedral_cayley(4).unwrap(), dihedral_cayley(6).unwrap()];
        for g in &graphs {
            let p = characteristic_polynomial(g);
            assert_eq!(p.len(), g.order() + 1);
            for x in -4..=8 {
                assert_eq!(evaluate(&p, &BigInt::from(x)), det_at(g, x));
            }
        }
    }

    #[test]
    fn trace_and_edge_identities() {
        for g in [cycle(7), dihedral_cayley(8).unwrap(), path(4)] {
            let p = characteristic_polynomial(&g);
            assert!(p[0].is_one());
            assert!(p[1].is_zero());
            assert_eq!(p[2], BigInt::from(-(g.edge_count() as i64)));
        }
    }

    #[test]
    fn spectra() {
        let s = integer_spectrum(&dihedral_cayley(6).unwrap());
        assert_eq!(s.roots, vec![(7, 1), (1, 4), (-1, 6), (-5, 1)]);
        assert!(s.residual.is_empty());
        let k5 = integer_spectrum(&complete(5));
        assert_eq!(k5.roots, vec![(4, 1), (-1, 4)]);
        let c5 = integer_spectrum(&cycle(5));
        assert_eq!(c5.roots, vec![(2, 1)]);
        // (x^2 + x - 1)^2
        assert_eq!(c5.residual, ints(&[1, 2, -1, -2, 1]));
        assert_eq!(c5.distinct_eigenvalues(), 3);
    }

    #[test]
    fn square_free_degree() {
        assert_eq!(distinct_root_count(&ints(&[1, 2, -1, -2, 1])), 2);
        assert_eq!(distinct_root_count(&ints(&[1, 0, -2])), 2);
        assert_eq!(distinct_root_count(&ints(&[1, 0, 0])), 1);
        assert_eq!(distinct_root_count(&ints(&[1])), 0);
    }

    #[test]
    fn json_shape() {
        let s = integer_spectrum(&complete(3));
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"roots":[[2,1],[-1,2]],"residual":[]}"#);
    }
}
