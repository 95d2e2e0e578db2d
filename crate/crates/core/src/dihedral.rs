//! Elements of the dihedral group of order `2n`, written `a^i b^f`.

use std::fmt;

/// `a^rot` when `refl` is false, `a^rot b` when true. The group order `n`
/// is carried alongside so products stay reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub rot: usize,
    pub refl: bool,
    n: usize,
}

impl DihedralElement {
    pub fn new(n: usize, rot: usize, refl: bool) -> Self {
        assert!(n > 0, "dihedral group needs n >= 1");
        DihedralElement {
            rot: rot % n,
            refl,
            n,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, false)
    }

    /// The rotation generator `a`.
    pub fn a(n: usize) -> Self {
        Self::new(n, 1, false)
    }

    /// The reflection generator `b`.
    pub fn b(n: usize) -> Self {
        Self::new(n, 0, true)
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    /// `(i, f)·(j, g) = (i + (-1)^f j, f xor g)`, since `b a^j = a^{-j} b`.
    pub fn mul(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let j = if self.refl { (n - other.rot) % n } else { other.rot };
        Self::new(n, self.rot + j, self.refl ^ other.refl)
    }

    pub fn inverse(self) -> Self {
        if self.refl {
            self
        } else {
            Self::new(self.n, self.n - self.rot, false)
        }
    }

    pub fn pow(self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| acc.mul(self))
    }

    /// Enumerates rotations then reflections, each as `a^1, ..., a^n`
    /// (so `a^n`, the identity, is the last rotation).
    pub fn all(n: usize) -> impl Iterator<Item = DihedralElement> {
        (0..2 * n).map(move |idx| Self::from_vertex_index(n, idx))
    }

    /// Vertex index in the graph convention: `a^i` is `i - 1`, `a^i b` is `n + i - 1`,
    /// with exponents taken in `1..=n`.
    pub fn vertex_index(&self) -> usize {
        let exp = if self.rot == 0 { self.n } else { self.rot };
        exp - 1 + if self.refl { self.n } else { 0 }
    }

    pub fn from_vertex_index(n: usize, idx: usize) -> Self {
        assert!(idx < 2 * n, "vertex index {idx} out of range for D_{}", 2 * n);
        let refl = idx >= n;
        Self::new(n, idx % n + 1, refl)
    }
}

impl fmt::Display for DihedralElement {
    /// Labels with exponents in `1..=n`: `a`, `a^2`, ..., `a^n`, `ab`, ..., `a^nb`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exp = if self.rot == 0 { self.n } else { self.rot };
        if exp == 1 {
            write!(f, "a")?;
        } else {
            write!(f, "a^{exp}")?;
        }
        if self.refl {
            write!(f, "b")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        for n in [3, 4, 6, 8, 10] {
            let a = DihedralElement::a(n);
            let b = DihedralElement::b(n);
            let e = DihedralElement::identity(n);
            assert_eq!(a.pow(n), e);
            assert_eq!(b.mul(b), e);
            assert_eq!(b.mul(a), a.pow(n - 1).mul(b));
        }
    }

    #[test]
    fn inverses() {
        let n = 6;
        for x in DihedralElement::all(n) {
            assert_eq!(x.mul(x.inverse()), DihedralElement::identity(n));
            assert_eq!(x.inverse().mul(x), DihedralElement::identity(n));
        }
        assert_eq!(DihedralElement::new(6, 2, false).inverse().rot, 4);
        assert_eq!(DihedralElement::new(6, 2, true).inverse(), DihedralElement::new(6, 2, true));
    }

    #[test]
    fn associativity() {
        let n = 4;
        for x in DihedralElement::all(n) {
            for y in DihedralElement::all(n) {
                for z in DihedralElement::all(n) {
                    assert_eq!(x.mul(y).mul(z), x.mul(y.mul(z)));
                }
            }
        }
    }

    #[test]
    fn labels_and_indices() {
        let n = 6;
        let labels: Vec<String> = DihedralElement::all(n).map(|e| e.to_string()).collect();
        assert_eq!(labels[0], "a");
        assert_eq!(labels[5], "a^6");
        assert_eq!(labels[6], "ab");
        assert_eq!(labels[9], "a^4b");
        for (idx, e) in DihedralElement::all(n).enumerate() {
            assert_eq!(e.vertex_index(), idx);
        }
        assert_eq!(DihedralElement::identity(n).vertex_index(), n - 1);
    }
}
