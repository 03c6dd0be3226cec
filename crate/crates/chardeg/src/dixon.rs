//! Irreducible character degrees from simultaneous eigenvectors of the class
//! matrices over a suitable prime field.
//!
//! With classes K_1..K_c (K_1 the identity), the class-multiplication counts
//! a_{jkl} = #{(x,y) in K_j x K_k : xy = z_l} assemble, for each j, a matrix
//! A_j with (A_j)_{k,l} = a_{jkl}. The central-character vectors
//! w_i = (chi_i(g_j) |K_j| / chi_i(1))_j are the common eigenvectors of all
//! A_j. Over GF(ell) with ell = 1 mod exp(G) and ell > max(2 sqrt(|G|), c)
//! the common eigenspaces are one-dimensional and each degree is the unique
//! d <= sqrt(|G|) with d^2 = |G| (sum_j w(j) w(j*) / |K_j|)^-1 mod ell.

use permcore::PermGroup;

use crate::classes::{conjugacy_classes, ConjugacyClasses};
use crate::error::{DegreeError, Result};
use crate::modular::{
    add_mod, char_poly, inv_mod, is_prime_u64, kernel, mul_mod, poly_roots, sub_mod, ModMat,
};

/// A sorted multiset of irreducible character degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeList(pub Vec<u64>);

impl DegreeList {
    pub fn largest(&self) -> u64 {
        *self.0.last().expect("nonempty")
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    /// Whether `self` is a sub-multiset of `other`.
    pub fn sub_multiset_of(&self, other: &DegreeList) -> bool {
        let mut pool = other.0.clone();
        for d in &self.0 {
            match pool.iter().position(|x| x == d) {
                Some(i) => {
                    pool.swap_remove(i);
                }
                None => return false,
            }
        }
        true
    }
}

/// Exponent of the group: lcm of the class representative orders.
fn exponent(classes: &ConjugacyClasses) -> u128 {
    let mut e: u128 = 1;
    for r in &classes.representatives {
        let o = r.order();
        e = e / gcd(e, o) * o;
    }
    e
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128 + 2;
    while x * x > n {
        x -= 1;
    }
    x
}

/// Smallest prime ell = 1 mod exponent with ell > 2 sqrt(|G|) and ell > c.
fn choose_prime(exponent: u128, order: u128, class_count: usize) -> Result<u64> {
    let sqrt_bound = 2 * isqrt(order) + 1;
    let lower = sqrt_bound.max(class_count as u128 + 1);
    let mut t = 1u128;
    loop {
        let cand = exponent * t + 1;
        if cand > u32::MAX as u128 * 4 {
            return Err(DegreeError::NoSplittingPrime);
        }
        if cand >= lower && cand * cand > 4 * order && is_prime_u64(cand as u64) {
            return Ok(cand as u64);
        }
        t += 1;
    }
}

/// The class matrix A_j over GF(ell): (A_j)_{k,l} = a_{jkl}.
fn class_matrix(classes: &ConjugacyClasses, j: usize, ell: u64) -> ModMat {
    let c = classes.count();
    let mut a = ModMat::zero(c);
    // members of class j
    let members: Vec<&permcore::Permutation> = classes
        .elements
        .iter()
        .zip(&classes.class_of_element)
        .filter(|(_, &cl)| cl as usize == j)
        .map(|(e, _)| e)
        .collect();
    for (l, z) in classes.representatives.iter().enumerate() {
        for x in &members {
            let y = x.inverse().mul(z);
            let k = classes.class_of(&y).expect("closed under products");
            let idx = k * c + l;
            a.a[idx] = add_mod(a.a[idx], 1, ell);
        }
    }
    a
}

/// A subspace of GF(ell)^c, stored as a list of column vectors.
struct Subspace {
    basis: Vec<Vec<u64>>,
}

/// Expresses `v` in the subspace basis via Gaussian elimination, or fails.
fn coordinates(basis: &[Vec<u64>], v: &[u64], ell: u64) -> Option<Vec<u64>> {
    let c = v.len();
    let r = basis.len();
    // solve B x = v where B has the basis vectors as columns
    let mut aug: Vec<Vec<u64>> = (0..c)
        .map(|row| {
            let mut line: Vec<u64> = basis.iter().map(|b| b[row]).collect();
            line.push(v[row]);
            line
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r {
        let pr = (row..c).find(|&rr| aug[rr][col] != 0)?;
        aug.swap(row, pr);
        let inv = inv_mod(aug[row][col], ell);
        for x in aug[row].iter_mut() {
            *x = mul_mod(*x, inv, ell);
        }
        for rr in 0..c {
            if rr != row && aug[rr][col] != 0 {
                let f = aug[rr][col];
                for j in 0..=r {
                    let s = mul_mod(f, aug[row][j], ell);
                    aug[rr][j] = sub_mod(aug[rr][j], s, ell);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    // consistency: rows beyond the pivots must have zero rhs
    for rr in row..c {
        if aug[rr][r] != 0 {
            return None;
        }
    }
    let mut x = vec![0u64; r];
    for (ri, &col) in pivots.iter().enumerate() {
        x[col] = aug[ri][r];
    }
    Some(x)
}

/// Splits `space` into eigenspaces of the restriction of `a`.
fn split_by(space: &Subspace, a: &ModMat, ell: u64) -> Result<Vec<Subspace>> {
    let r = space.basis.len();
    if r == 1 {
        return Ok(vec![Subspace {
            basis: space.basis.clone(),
        }]);
    }
    // restricted operator R: images of basis vectors expressed in the basis
    let mut rmat = ModMat::zero(r);
    for (bi, b) in space.basis.iter().enumerate() {
        let image = a.apply(b, ell);
        let coords = coordinates(&space.basis, &image, ell).ok_or_else(|| {
            DegreeError::Internal("class matrix does not preserve the eigenspace".into())
        })?;
        for (ci, &x) in coords.iter().enumerate() {
            rmat.set(ci, bi, x);
        }
    }
    let cp = char_poly(&rmat, ell);
    let roots = poly_roots(&cp, ell);
    if roots.is_empty() {
        return Err(DegreeError::Internal(
            "restricted class matrix has no eigenvalues in the field".into(),
        ));
    }
    let mut out = Vec::new();
    for mu in roots {
        // kernel of (R - mu I)
        let mut shifted = rmat.clone();
        for i in 0..r {
            let v = shifted.at(i, i);
            shifted.set(i, i, sub_mod(v, mu, ell));
        }
        let ker = kernel(&shifted, ell);
        if ker.is_empty() {
            continue;
        }
        // lift back to ambient coordinates
        let lifted: Vec<Vec<u64>> = ker
            .iter()
            .map(|k| {
                let c = space.basis[0].len();
                let mut v = vec![0u64; c];
                for (bi, b) in space.basis.iter().enumerate() {
                    if k[bi] != 0 {
                        for row in 0..c {
                            v[row] = add_mod(v[row], mul_mod(k[bi], b[row], ell), ell);
                        }
                    }
                }
                v
            })
            .collect();
        out.push(Subspace { basis: lifted });
    }
    let total: usize = out.iter().map(|s| s.basis.len()).sum();
    if total != r {
        return Err(DegreeError::Internal(
            "eigenspace dimensions do not add up".into(),
        ));
    }
    Ok(out)
}

/// Character degrees of the group, smallest first.
pub fn character_degrees(g: &PermGroup) -> Result<DegreeList> {
    let order = g.order();
    if g.is_abelian() {
        return Ok(DegreeList(vec![1; order as usize]));
    }
    let classes = conjugacy_classes(g)?;
    degrees_from_classes(&classes, order)
}

pub fn degrees_from_classes(classes: &ConjugacyClasses, order: u128) -> Result<DegreeList> {
    let c = classes.count();
    let exp = exponent(classes);
    let ell = choose_prime(exp, order, c)?;

    // identity basis of GF(ell)^c
    let mut spaces = vec![Subspace {
        basis: (0..c)
            .map(|i| {
                let mut v = vec![0u64; c];
                v[i] = 1;
                v
            })
            .collect(),
    }];

    // classes by ascending size, identity class skipped (its matrix is I)
    let mut class_order: Vec<usize> = (1..c).collect();
    class_order.sort_by_key(|&j| (classes.sizes[j], j));

    for &j in &class_order {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let a = class_matrix(classes, j, ell);
        let mut next = Vec::new();
        for s in &spaces {
            next.extend(split_by(&s, &a, ell)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.basis.len() != 1) {
        return Err(DegreeError::Internal(
            "common eigenspaces failed to split to dimension one".into(),
        ));
    }

    // identity class index: the class of the identity element
    let id_class = classes
        .class_of(&permcore::Permutation::identity(
            classes.representatives[0].degree(),
        ))
        .expect("identity present");

    let order_mod = (order % ell as u128) as u64;
    let sqrt_order = isqrt(order) as u64;
    let mut degrees = Vec::with_capacity(c);
    for s in &spaces {
        let mut w = s.basis[0].clone();
        if w[id_class] == 0 {
            return Err(DegreeError::Internal(
                "central character vanishes on the identity class".into(),
            ));
        }
        let norm = inv_mod(w[id_class], ell);
        for x in w.iter_mut() {
            *x = mul_mod(*x, norm, ell);
        }
        // sum_j w(j) w(j*) / |K_j|
        let mut sum = 0u64;
        for j in 0..c {
            let kj = (classes.sizes[j] as u128 % ell as u128) as u64;
            let term = mul_mod(
                mul_mod(w[j], w[classes.inverse_map[j]], ell),
                inv_mod(kj, ell),
                ell,
            );
            sum = add_mod(sum, term, ell);
        }
        if sum == 0 {
            return Err(DegreeError::Internal("degenerate norm sum".into()));
        }
        let r = mul_mod(order_mod, inv_mod(sum, ell), ell);
        let mut found = None;
        for d in 1..=sqrt_order {
            if order % d as u128 == 0 && mul_mod(d, d, ell) == r {
                found = Some(d);
                break;
            }
        }
        degrees.push(found.ok_or_else(|| {
            DegreeError::Internal("no divisor degree matches the recovered residue".into())
        })?);
    }
    degrees.sort_unstable();

    // invariants: count equals class count and sum of squares is the order
    if degrees.len() != c {
        return Err(DegreeError::Internal("degree count mismatch".into()));
    }
    let sumsq: u128 = degrees.iter().map(|&d| (d as u128) * (d as u128)).sum();
    if sumsq != order {
        return Err(DegreeError::Internal(format!(
            "degree squares sum to {sumsq}, expected {order}"
        )));
    }
    Ok(DegreeList(degrees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::Permutation;

    fn s3() -> PermGroup {
        PermGroup::new(
            3,
            vec![
                Permutation::from_images(vec![1, 0, 2]).unwrap(),
                Permutation::from_images(vec![1, 2, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s3_degrees() {
        assert_eq!(character_degrees(&s3()).unwrap().0, vec![1, 1, 2]);
    }

    #[test]
    fn s4_degrees() {
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(character_degrees(&s4).unwrap().0, vec![1, 1, 2, 3, 3]);
    }

    #[test]
    fn cyclic_c6_degrees() {
        let c6 = PermGroup::new(
            6,
            vec![Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()],
        )
        .unwrap();
        assert_eq!(character_degrees(&c6).unwrap().0, vec![1; 6]);
    }
}
