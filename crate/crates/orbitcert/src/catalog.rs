//! The shipped verification catalog: classical small permutation groups, the
//! semilinear family up to 2^12, the exceptional constructions, block sums
//! for complete-reducibility coverage, and every affine primitive group of
//! degree at most 64 buildable from the shipped irreducible matrix groups.

use permcore::{PermGroup, Permutation};

use gfmatrix::{
    affine_primitive, build_exceptional, gamma0_group, gamma_group, prime_power, ExceptionalTag,
    Mat, MatrixGroup,
};

use crate::record::{matrix_record, perm_record, GroupRecord};

/// Semilinear family bound: q^n up to 2^12.
pub const GAMMA_CATALOG_LIMIT: u64 = 1 << 12;
/// Affine constructions are shipped for degrees up to 64.
pub const AFFINE_DEGREE_LIMIT: u64 = 64;

fn cycle(n: usize) -> PermGroup {
    let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    PermGroup::new(n, vec![Permutation::from_images(images).unwrap()]).unwrap()
}

fn classics() -> Vec<GroupRecord> {
    let mut out = Vec::new();
    let s3 = PermGroup::new(
        3,
        vec![
            Permutation::from_images(vec![1, 0, 2]).unwrap(),
            Permutation::from_images(vec![1, 2, 0]).unwrap(),
        ],
    )
    .unwrap();
    out.push(perm_record("s3", &s3, &["solvable-expected", "primitive-expected"]));

    let s4 = PermGroup::new(
        4,
        vec![
            Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
            Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
        ],
    )
    .unwrap();
    out.push(perm_record("s4", &s4, &["solvable-expected", "primitive-expected"]));

    let a4 = PermGroup::new(
        4,
        vec![
            Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
        ],
    )
    .unwrap();
    out.push(perm_record("a4", &a4, &["solvable-expected", "primitive-expected"]));

    let d8 = PermGroup::new(
        4,
        vec![
            Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            Permutation::from_images(vec![0, 3, 2, 1]).unwrap(),
        ],
    )
    .unwrap();
    out.push(perm_record("d8", &d8, &["solvable-expected"]));

    // Q8 regular: right multiplication by i and j on 1,i,-1,-i,j,k,-j,-k
    let q8 = PermGroup::new(
        8,
        vec![
            Permutation::from_images(vec![1, 2, 3, 0, 7, 4, 5, 6]).unwrap(),
            Permutation::from_images(vec![4, 5, 6, 7, 2, 3, 0, 1]).unwrap(),
        ],
    )
    .unwrap();
    out.push(perm_record("q8", &q8, &["solvable-expected"]));

    for n in [2usize, 3, 4, 6, 12] {
        let tags: &[&str] = if n == 2 || n == 3 {
            &["solvable-expected", "primitive-expected"]
        } else {
            &["solvable-expected"]
        };
        out.push(perm_record(&format!("c{n}"), &cycle(n), tags));
    }

    // SL(2,3) and GL(2,3) as permutation groups on the 8 nonzero vectors
    for tag in [ExceptionalTag::Sl23, ExceptionalTag::Gl23] {
        let m = build_exceptional(tag).expect("exceptional construction");
        let p = m.to_perm().expect("small bridge");
        out.push(perm_record(tag.name(), p, &["solvable-expected"]));
    }
    out
}

/// All (q, n) semilinear parameters shipped as matrix records: n >= 2 with
/// q^n <= 2^12, plus the scalar groups of prime fields up to 64 (the n = 1
/// case; composite q would duplicate a smaller parameter pair).
fn gamma_parameters() -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in 2..=GAMMA_CATALOG_LIMIT {
        if prime_power(q).is_none() {
            continue;
        }
        if q <= AFFINE_DEGREE_LIMIT && gfmatrix::is_prime(q) {
            out.push((q, 1));
        }
        for n in 2.. {
            match q.checked_pow(n) {
                Some(v) if v <= GAMMA_CATALOG_LIMIT => out.push((q, n)),
                _ => break,
            }
        }
    }
    out.sort_by_key(|&(q, n)| (q.pow(n), q, n));
    out
}

fn gammas() -> Vec<GroupRecord> {
    let mut out = Vec::new();
    for (q, n) in gamma_parameters() {
        let g0 = gamma0_group(q, n).expect("catalog parameters in budget");
        out.push(matrix_record(
            &format!("gamma0_{q}_{n}"),
            &g0,
            &["solvable-expected"],
        ));
        if n > 1 {
            let g = gamma_group(q, n).expect("catalog parameters in budget");
            out.push(matrix_record(
                &format!("gamma_{q}_{n}"),
                &g,
                &["solvable-expected"],
            ));
        }
    }
    out
}

fn exceptionals() -> Vec<GroupRecord> {
    ExceptionalTag::ALL
        .iter()
        .map(|&tag| {
            let g = build_exceptional(tag).expect("exceptional construction");
            matrix_record(&format!("exc_{}", tag.name()), &g, &["solvable-expected"])
        })
        .collect()
}

fn block_sums() -> Vec<GroupRecord> {
    let g = gamma_group(2, 2).expect("small");
    let id = Mat::identity(2);
    // independent product on V1 + V2
    let mut prod_gens = Vec::new();
    for m in g.generators() {
        prod_gens.push(m.direct_sum(&id));
        prod_gens.push(id.direct_sum(m));
    }
    let prod = MatrixGroup::new(g.field.clone(), 4, prod_gens).expect("block sum");
    // diagonal action on both summands
    let diag_gens: Vec<Mat> = g.generators().iter().map(|m| m.direct_sum(m)).collect();
    let diag = MatrixGroup::new(g.field.clone(), 4, diag_gens).expect("block sum");
    vec![
        matrix_record(
            "gamma22_plus_gamma22",
            &prod,
            &["solvable-expected", "blocks=2,2"],
        ),
        matrix_record(
            "gamma22_diag",
            &diag,
            &["solvable-expected", "blocks=2,2"],
        ),
    ]
}

/// Affine primitive groups from every shipped prime-field matrix group whose
/// point count p^dim stays at or below 64.
fn affines() -> Vec<GroupRecord> {
    let mut sources: Vec<(String, MatrixGroup)> = Vec::new();
    for (q, n) in gamma_parameters() {
        let (p, _) = prime_power(q).expect("prime power");
        let dim_points = (q as u128).pow(n);
        if dim_points > AFFINE_DEGREE_LIMIT as u128 {
            continue;
        }
        sources.push((
            format!("gamma0_{q}_{n}"),
            gamma0_group(q, n).expect("in budget"),
        ));
        if n > 1 {
            sources.push((
                format!("gamma_{q}_{n}"),
                gamma_group(q, n).expect("in budget"),
            ));
        }
        let _ = p;
    }
    for tag in [
        ExceptionalTag::Gl22,
        ExceptionalTag::Sl23,
        ExceptionalTag::Gl23,
        ExceptionalTag::E27Sl23,
        ExceptionalTag::E27Gl23,
    ] {
        let g = build_exceptional(tag).expect("exceptional construction");
        let points = g.space_size();
        if points <= AFFINE_DEGREE_LIMIT as u128 {
            sources.push((format!("exc_{}", tag.name()), g));
        }
    }
    sources
        .into_iter()
        .map(|(name, h)| {
            let aff = affine_primitive(&h).expect("shipped sources are irreducible");
            perm_record(
                &format!("aff_{name}"),
                &aff,
                &["solvable-expected", "primitive-expected", "affine"],
            )
        })
        .collect()
}

/// The full shipped catalog, in deterministic order.
pub fn builtin_catalog() -> Vec<GroupRecord> {
    let mut out = classics();
    out.extend(gammas());
    out.extend(exceptionals());
    out.extend(block_sums());
    out.extend(affines());
    out
}
