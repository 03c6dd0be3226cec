//! The Fitting subgroup against an independent exhaustive oracle: the
//! largest normal nilpotent subgroup is generated by every element whose
//! normal closure is nilpotent. The oracle works from full element lists and
//! shares nothing with the p-core path.

use std::collections::HashSet;

use gfmatrix::{affine_primitive, build_exceptional, gamma0_group, ExceptionalTag};
use permcore::{PermGroup, Permutation};
use structure::fitting;

fn closure(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = vec![Permutation::identity(degree)];
    seen.insert(out[0].images().to_vec());
    let mut i = 0;
    while i < out.len() {
        let g = out[i].clone();
        for s in gens {
            let h = g.mul(s);
            if seen.insert(h.images().to_vec()) {
                out.push(h);
            }
        }
        i += 1;
    }
    out
}

/// Nilpotence by element counting: a group is nilpotent iff, for every prime
/// p dividing its order, the p-elements number exactly the p-part.
fn is_nilpotent(elements: &[Permutation]) -> bool {
    let n = elements.len() as u128;
    let mut m = n;
    let mut d = 2u128;
    let mut primes = Vec::new();
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for p in primes {
        let mut part = 1u128;
        let mut nn = n;
        while nn % p == 0 {
            part *= p;
            nn /= p;
        }
        let count = elements
            .iter()
            .filter(|e| {
                let mut o = e.order();
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .count() as u128;
        if count != part {
            return false;
        }
    }
    true
}

/// Largest normal nilpotent subgroup by scanning normal closures of single
/// elements.
fn oracle_fitting_order(g: &PermGroup) -> u128 {
    let all = closure(g.generators(), g.degree());
    let mut fitting_gens: Vec<Permutation> = Vec::new();
    for e in &all {
        if e.is_identity() {
            continue;
        }
        // normal closure of e: conjugates under all elements, then closure
        let conj_seeds: Vec<Permutation> = {
            let mut seen = HashSet::new();
            let mut v = Vec::new();
            for x in &all {
                let c = e.conjugate_by(x);
                if seen.insert(c.images().to_vec()) {
                    v.push(c);
                }
            }
            v
        };
        let nc = closure(&conj_seeds, g.degree());
        if is_nilpotent(&nc) {
            fitting_gens.push(e.clone());
        }
    }
    closure(&fitting_gens, g.degree()).len() as u128
}

#[test]
fn fitting_agrees_with_exhaustive_oracle() {
    let s4 = PermGroup::new(
        4,
        vec![
            Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
            Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
        ],
    )
    .unwrap();
    let s3 = PermGroup::new(
        3,
        vec![
            Permutation::from_images(vec![1, 0, 2]).unwrap(),
            Permutation::from_images(vec![1, 2, 0]).unwrap(),
        ],
    )
    .unwrap();
    let q8 = PermGroup::new(
        8,
        vec![
            Permutation::from_images(vec![1, 2, 3, 0, 7, 4, 5, 6]).unwrap(),
            Permutation::from_images(vec![4, 5, 6, 7, 2, 3, 0, 1]).unwrap(),
        ],
    )
    .unwrap();
    let mut cases: Vec<(String, PermGroup)> = vec![
        ("s4".into(), s4),
        ("s3".into(), s3),
        ("q8".into(), q8),
    ];
    for tag in [ExceptionalTag::Gl22, ExceptionalTag::Sl23, ExceptionalTag::Gl23] {
        let m = build_exceptional(tag).unwrap();
        cases.push((tag.name().into(), m.to_perm().unwrap().clone()));
        cases.push((
            format!("aff_{}", tag.name()),
            affine_primitive(&m).unwrap(),
        ));
    }
    cases.push(("aff_g0_2_3".into(), affine_primitive(&gamma0_group(2, 3).unwrap()).unwrap()));
    cases.push(("e27".into(), build_exceptional(ExceptionalTag::E27Sl23).unwrap().to_perm().unwrap().clone()));

    for (name, g) in cases {
        assert!(g.order() <= 2000, "{name} too large for the oracle");
        let main = fitting(&g).unwrap();
        let oracle = oracle_fitting_order(&g);
        assert_eq!(main.order, oracle, "fitting mismatch on {name}");
    }
}
