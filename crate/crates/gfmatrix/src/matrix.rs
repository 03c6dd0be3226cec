//! Square matrices over a finite field and groups of invertible matrices.
//!
//! Vectors are row vectors acted on the right (`v * M`), so the
//! matrix-to-permutation bridge is a homomorphism under apply-left-then-right
//! permutation composition.

use std::sync::{Arc, OnceLock};

use permcore::{PermGroup, Permutation};

use crate::error::{FieldError, Result};
use crate::field::FieldSpec;

/// Point budget for the permutation bridge.
pub const BRIDGE_SPACE_LIMIT: u128 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub dim: usize,
    /// Row-major field-encoded entries.
    pub entries: Vec<u64>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.dim {
            writeln!(f, "{:?}", &self.entries[r * self.dim..(r + 1) * self.dim])?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn identity(dim: usize) -> Mat {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Mat { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Mat> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            if r.len() != dim {
                return Err(FieldError::DimensionMismatch(dim, r.len()));
            }
            entries.extend_from_slice(r);
        }
        Ok(Mat { dim, entries })
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.dim + c]
    }

    pub fn mul(&self, other: &Mat, f: &FieldSpec) -> Mat {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if b != 0 {
                        out[i * n + j] = f.add(out[i * n + j], f.mul(a, b));
                    }
                }
            }
        }
        Mat { dim: n, entries: out }
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u64], f: &FieldSpec) -> Vec<u64> {
        let n = self.dim;
        let mut out = vec![0u64; n];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..n {
                let m = self.at(i, j);
                if m != 0 {
                    out[j] = f.add(out[j], f.mul(x, m));
                }
            }
        }
        out
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, f: &FieldSpec) -> u64 {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = 1u64;
        for col in 0..n {
            let mut pivot = None;
            for row in col..n {
                if a[row * n + col] != 0 {
                    pivot = Some(row);
                    break;
                }
            }
            let Some(pr) = pivot else { return 0 };
            if pr != col {
                for j in 0..n {
                    a.swap(pr * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pv_inv = f.inv(pv).expect("pivot nonzero");
            for row in col + 1..n {
                let factor = f.mul(a[row * n + col], pv_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, a[col * n + j]);
                    a[row * n + j] = f.sub(a[row * n + j], sub);
                }
            }
        }
        det
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .all(|(idx, &e)| e == if idx / n == idx % n { 1 } else { 0 })
    }

    /// Kronecker product; basis index of the result is `i1 * dim2 + i2`.
    pub fn kronecker(&self, other: &Mat, f: &FieldSpec) -> Mat {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 * n2;
        let mut entries = vec![0u64; n * n];
        for i1 in 0..n1 {
            for j1 in 0..n1 {
                let a = self.at(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..n2 {
                    for j2 in 0..n2 {
                        let b = other.at(i2, j2);
                        if b != 0 {
                            entries[(i1 * n2 + i2) * n + (j1 * n2 + j2)] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Mat { dim: n, entries }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let n = self.dim + other.dim;
        let mut entries = vec![0u64; n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * n + j] = self.at(i, j);
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                entries[(self.dim + i) * n + (self.dim + j)] = other.at(i, j);
            }
        }
        Mat { dim: n, entries }
    }
}

/// A group of invertible matrices over a finite field, with a cached
/// permutation image on the nonzero vectors.
pub struct MatrixGroup {
    pub field: Arc<FieldSpec>,
    pub dim: usize,
    generators: Vec<Mat>,
    bridge: OnceLock<PermGroup>,
}

impl Clone for MatrixGroup {
    fn clone(&self) -> Self {
        MatrixGroup {
            field: self.field.clone(),
            dim: self.dim,
            generators: self.generators.clone(),
            bridge: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MatrixGroup(GF({}^{}), dim {}, {} generators)",
            self.field.characteristic(),
            self.field.extension_degree(),
            self.dim,
            self.generators.len()
        )
    }
}

impl MatrixGroup {
    /// Builds a matrix group, rejecting singular generators.
    pub fn new(field: Arc<FieldSpec>, dim: usize, generators: Vec<Mat>) -> Result<Self> {
        for g in &generators {
            if g.dim != dim {
                return Err(FieldError::DimensionMismatch(dim, g.dim));
            }
            for &e in &g.entries {
                field.check_element(e)?;
            }
            if g.det(&field) == 0 {
                return Err(FieldError::Singular);
            }
        }
        let generators = if generators.is_empty() {
            vec![Mat::identity(dim)]
        } else {
            generators
        };
        Ok(MatrixGroup {
            field,
            dim,
            generators,
            bridge: OnceLock::new(),
        })
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    /// Number of vectors in the underlying space, q^dim.
    pub fn space_size(&self) -> u128 {
        (self.field.size() as u128).pow(self.dim as u32)
    }

    pub fn vector_from_index(&self, mut idx: u64) -> Vec<u64> {
        let q = self.field.size();
        let mut v = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            v.push(idx % q);
            idx /= q;
        }
        v
    }

    pub fn index_of_vector(&self, v: &[u64]) -> u64 {
        let q = self.field.size();
        let mut acc = 0u64;
        for &x in v.iter().rev() {
            acc = acc * q + x;
        }
        acc
    }

    /// Faithful permutation image on the nonzero vectors; point `i`
    /// corresponds to the vector with index `i + 1`.
    pub fn to_perm(&self) -> Result<&PermGroup> {
        if self.space_size() > BRIDGE_SPACE_LIMIT {
            return Err(FieldError::Budget(format!(
                "bridge space {} exceeds {}",
                self.space_size(),
                BRIDGE_SPACE_LIMIT
            )));
        }
        if let Some(g) = self.bridge.get() {
            return Ok(g);
        }
        let space = self.space_size() as u64;
        let degree = (space - 1) as usize;
        let mut perms = Vec::with_capacity(self.generators.len());
        for m in &self.generators {
            let mut images = Vec::with_capacity(degree);
            for idx in 1..space {
                let v = self.vector_from_index(idx);
                let w = m.apply_row(&v, &self.field);
                let widx = self.index_of_vector(&w);
                debug_assert!(widx != 0, "invertible matrix sent nonzero to zero");
                images.push((widx - 1) as u32);
            }
            perms.push(
                Permutation::from_images(images)
                    .map_err(|e| FieldError::Internal(format!("bridge not bijective: {e}")))?,
            );
        }
        let group = PermGroup::new(degree, perms)?;
        let _ = self.bridge.set(group);
        Ok(self.bridge.get().expect("just set"))
    }

    /// Exact order via the permutation bridge; stable across recomputation.
    pub fn order(&self) -> Result<u128> {
        Ok(self.to_perm()?.order())
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.to_perm()?.is_solvable())
    }

    /// Enumerates all group elements as matrices by closure; budgeted.
    pub fn element_matrices(&self, budget: usize) -> Result<Vec<Mat>> {
        let mut seen = std::collections::HashSet::new();
        let id = Mat::identity(self.dim);
        seen.insert(id.entries.clone());
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            let m = out[i].clone();
            for g in &self.generators {
                let prod = m.mul(g, &self.field);
                if seen.insert(prod.entries.clone()) {
                    if out.len() >= budget {
                        return Err(FieldError::Budget(format!(
                            "element enumeration exceeds {budget}"
                        )));
                    }
                    out.push(prod);
                }
            }
            i += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::prime_field(2).unwrap())
    }

    fn gl22() -> MatrixGroup {
        let f = gf2();
        let a = Mat::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Mat::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        MatrixGroup::new(f, 2, vec![a, b]).unwrap()
    }

    #[test]
    fn gl22_bridge() {
        let g = gl22();
        let p = g.to_perm().unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.order(), 6);
        assert_eq!(g.order().unwrap(), 6);
    }

    #[test]
    fn singular_generator_rejected() {
        let f = gf2();
        let z = Mat::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(MatrixGroup::new(f, 2, vec![z]).is_err());
    }

    #[test]
    fn trivial_group_bridge_is_identity() {
        let f = gf2();
        let g = MatrixGroup::new(f, 2, vec![]).unwrap();
        let p = g.to_perm().unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.order(), 1);
    }

    #[test]
    fn element_enumeration_matches_order() {
        let g = gl22();
        let elems = g.element_matrices(100).unwrap();
        assert_eq!(elems.len() as u128, g.order().unwrap());
    }

    #[test]
    fn determinant_multiplicative() {
        let f = Arc::new(FieldSpec::prime_field(3).unwrap());
        let a = Mat::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let b = Mat::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap();
        let ab = a.mul(&b, &f);
        assert_eq!(ab.det(&f), f.mul(a.det(&f), b.det(&f)));
        assert_eq!(b.det(&f), 1); // -2 = 1 mod 3
    }
}
