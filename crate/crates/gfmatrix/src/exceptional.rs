//! The exceptional solvable linear groups that can fail to have many regular
//! orbits on V + V: GL(2,2), SL(2,3), GL(2,3), two extensions of the
//! extraspecial group of order 27 inside GL(6,2), and the maximal central
//! product extension (Q8 o Q8).K inside GL(4,3).
//!
//! Each constructor verifies the computed order of the result and aborts on
//! any mismatch, so a wrong matrix can never leak out quietly.

use std::sync::Arc;

use crate::error::{FieldError, Result};
use crate::field::FieldSpec;
use crate::matrix::{Mat, MatrixGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalTag {
    /// GL(2,2) natural, order 6.
    Gl22,
    /// SL(2,3) natural, order 24.
    Sl23,
    /// GL(2,3) natural, order 48.
    Gl23,
    /// Extraspecial 3^(1+2) extended by SL(2,3), inside GL(6,2), order 648.
    E27Sl23,
    /// Extraspecial 3^(1+2) extended by GL(2,3), inside GL(6,2), order 1296.
    E27Gl23,
    /// (Q8 o Q8).K with K maximal, inside GL(4,3), order 2304 = 32 * 72.
    Q8Q8Max,
}

impl ExceptionalTag {
    pub const ALL: [ExceptionalTag; 6] = [
        ExceptionalTag::Gl22,
        ExceptionalTag::Sl23,
        ExceptionalTag::Gl23,
        ExceptionalTag::E27Sl23,
        ExceptionalTag::E27Gl23,
        ExceptionalTag::Q8Q8Max,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalTag::Gl22 => "gl22",
            ExceptionalTag::Sl23 => "sl23",
            ExceptionalTag::Gl23 => "gl23",
            ExceptionalTag::E27Sl23 => "e27_sl23",
            ExceptionalTag::E27Gl23 => "e27_gl23",
            ExceptionalTag::Q8Q8Max => "q8q8_max",
        }
    }

    pub fn expected_order(self) -> u128 {
        match self {
            ExceptionalTag::Gl22 => 6,
            ExceptionalTag::Sl23 => 24,
            ExceptionalTag::Gl23 => 48,
            ExceptionalTag::E27Sl23 => 648,
            ExceptionalTag::E27Gl23 => 1296,
            ExceptionalTag::Q8Q8Max => 2304,
        }
    }
}

pub fn build_exceptional(tag: ExceptionalTag) -> Result<MatrixGroup> {
    let g = match tag {
        ExceptionalTag::Gl22 => gl22()?,
        ExceptionalTag::Sl23 => sl23()?,
        ExceptionalTag::Gl23 => gl23()?,
        ExceptionalTag::E27Sl23 => extraspecial27(false)?,
        ExceptionalTag::E27Gl23 => extraspecial27(true)?,
        ExceptionalTag::Q8Q8Max => q8q8_max()?,
    };
    let got = g.order()?;
    if got != tag.expected_order() {
        return Err(FieldError::Internal(format!(
            "exceptional group {} has order {got}, expected {}",
            tag.name(),
            tag.expected_order()
        )));
    }
    Ok(g)
}

fn gl22() -> Result<MatrixGroup> {
    let f = Arc::new(FieldSpec::prime_field(2)?);
    MatrixGroup::new(
        f,
        2,
        vec![
            Mat::from_rows(&[vec![1, 1], vec![0, 1]])?,
            Mat::from_rows(&[vec![0, 1], vec![1, 0]])?,
        ],
    )
}

fn sl23() -> Result<MatrixGroup> {
    let f = Arc::new(FieldSpec::prime_field(3)?);
    MatrixGroup::new(
        f,
        2,
        vec![
            Mat::from_rows(&[vec![1, 1], vec![0, 1]])?,
            Mat::from_rows(&[vec![0, 1], vec![2, 0]])?,
        ],
    )
}

fn gl23() -> Result<MatrixGroup> {
    let f = Arc::new(FieldSpec::prime_field(3)?);
    MatrixGroup::new(
        f,
        2,
        vec![
            Mat::from_rows(&[vec![1, 1], vec![0, 1]])?,
            Mat::from_rows(&[vec![0, 1], vec![1, 0]])?,
        ],
    )
}

/// The extraspecial group of order 27 and exponent 3 acts on GF(4)^3 through
/// the diagonal (1, w, w^2) and the coordinate 3-cycle, where w generates
/// GF(4)*. Its normalizer in GL(3,4) supplies a quadratic diagonal and a
/// discrete Fourier matrix that induce SL(2,3) on the quotient by the centre;
/// the coordinatewise GF(4)-Frobenius (only GF(2)-linear) extends this to
/// GL(2,3). Everything is rewritten over GF(2) as 6x6 matrices.
fn extraspecial27(with_frobenius: bool) -> Result<MatrixGroup> {
    let gf4 = FieldSpec::new(2, 2, vec![1, 1, 1])?;
    let w = 2u64; // the class of x, a cube root of unity
    let w2 = gf4.mul(w, w);

    let a = Mat::from_rows(&[vec![1, 0, 0], vec![0, w, 0], vec![0, 0, w2]])?;
    let b = Mat::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])?;
    // diag(w^(j^2)) for j = 0,1,2
    let d = Mat::from_rows(&[vec![1, 0, 0], vec![0, w, 0], vec![0, 0, w]])?;
    // Fourier matrix (w^(ij))
    let fou = Mat::from_rows(&[
        vec![1, 1, 1],
        vec![1, w, w2],
        vec![1, w2, w],
    ])?;

    let mut gens6: Vec<Mat> = [&a, &b, &d, &fou]
        .iter()
        .map(|m| blow_up_gf4(m, &gf4))
        .collect();
    if with_frobenius {
        // coordinatewise x -> x^2: block-diagonal copies of the 2x2 Frobenius
        let frob2 = Mat::from_rows(&[vec![1, 0], vec![1, 1]])?;
        let mut sigma = frob2.clone();
        sigma = sigma.direct_sum(&frob2);
        sigma = sigma.direct_sum(&frob2);
        gens6.push(sigma);
    }
    let f2 = Arc::new(FieldSpec::prime_field(2)?);
    MatrixGroup::new(f2, 6, gens6)
}

/// Rewrites a GF(4) matrix as a GF(2) matrix of twice the dimension by
/// replacing each entry with the 2x2 matrix of multiplication by it on the
/// basis {1, x}. Row-vector convention: the block row for basis element e is
/// the coordinate row of e * entry.
fn blow_up_gf4(m: &Mat, gf4: &FieldSpec) -> Mat {
    let n = m.dim;
    let mut big = vec![0u64; (2 * n) * (2 * n)];
    for i in 0..n {
        for j in 0..n {
            let c = m.at(i, j);
            if c == 0 {
                continue;
            }
            // rows of multiplication-by-c: images of 1 and of x
            for (bi, basis) in [1u64, 2u64].iter().enumerate() {
                let image = gf4.mul(*basis, c);
                let (c0, c1) = (image & 1, image >> 1);
                big[(2 * i + bi) * (2 * n) + 2 * j] = c0;
                big[(2 * i + bi) * (2 * n) + 2 * j + 1] = c1;
            }
        }
    }
    Mat {
        dim: 2 * n,
        entries: big,
    }
}

/// Q8 generators inside SL(2,3).
fn q8_mats() -> Result<(Mat, Mat)> {
    Ok((
        Mat::from_rows(&[vec![0, 2], vec![1, 0]])?,
        Mat::from_rows(&[vec![1, 1], vec![1, 2]])?,
    ))
}

/// The group generated by g (x) 1, 1 (x) h for g, h over GL(2,3) generators
/// together with the coordinate swap of the two tensor factors. It contains
/// the central product Q8 o Q8 of order 32 and has order 32 * 72.
fn q8q8_max() -> Result<MatrixGroup> {
    let f = Arc::new(FieldSpec::prime_field(3)?);
    let id = Mat::identity(2);
    let t = Mat::from_rows(&[vec![1, 1], vec![0, 1]])?;
    let s = Mat::from_rows(&[vec![0, 1], vec![1, 0]])?;
    // swap of tensor coordinates: e_i (x) e_j -> e_j (x) e_i
    let mut swap = vec![0u64; 16];
    for i in 0..2 {
        for j in 0..2 {
            swap[(i * 2 + j) * 4 + (j * 2 + i)] = 1;
        }
    }
    let gens = vec![
        t.kronecker(&id, &f),
        s.kronecker(&id, &f),
        id.kronecker(&t, &f),
        id.kronecker(&s, &f),
        Mat { dim: 4, entries: swap },
    ];
    let g = MatrixGroup::new(f.clone(), 4, gens)?;

    // the central product Q8 o Q8 must sit inside with order 32
    let (qi, qj) = q8_mats()?;
    let sub = MatrixGroup::new(
        f.clone(),
        4,
        vec![
            qi.kronecker(&id, &f),
            qj.kronecker(&id, &f),
            id.kronecker(&qi, &f),
            id.kronecker(&qj, &f),
        ],
    )?;
    let sub_order = sub.order()?;
    if sub_order != 32 {
        return Err(FieldError::Internal(format!(
            "central product Q8 o Q8 has order {sub_order}, expected 32"
        )));
    }
    let outer = g.to_perm()?;
    let inner = sub.to_perm()?;
    if !outer.contains_group(inner) {
        return Err(FieldError::Internal(
            "Q8 o Q8 is not contained in the maximal extension".into(),
        ));
    }
    Ok(g)
}
