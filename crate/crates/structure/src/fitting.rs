//! Fitting and second-Fitting subgroups.

use permcore::{PermGroup, Permutation};

use crate::error::{Result, StructureError};
use crate::sylow::{p_core, p_part, prime_factors};

/// The Fitting subgroup as the product of the p-cores, with per-prime data.
pub struct FittingRecord {
    pub primes: Vec<u64>,
    /// (p, O_p(G)) for each prime dividing the order.
    pub cores: Vec<(u64, PermGroup)>,
    pub fitting: PermGroup,
    pub order: u128,
    pub index: u128,
}

pub fn fitting(g: &PermGroup) -> Result<FittingRecord> {
    let order = g.order();
    let primes = prime_factors(order);
    let mut cores = Vec::new();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut expected = 1u128;
    for &p in &primes {
        let core = p_core(g, p)?;
        expected *= core.order();
        gens.extend(core.generators().iter().cloned());
        cores.push((p, core));
    }
    let fitting = if gens.is_empty() {
        PermGroup::trivial(g.degree())
    } else {
        PermGroup::new(g.degree(), gens)?
    };
    let forder = fitting.order();
    // F(G) is the direct product of its p-cores, so orders must multiply,
    // and each p-core is the full p-part of F
    if forder != expected {
        return Err(StructureError::Internal(format!(
            "Fitting order {forder} differs from the p-core product {expected}"
        )));
    }
    for (p, core) in &cores {
        if core.order() != p_part(forder, *p) {
            return Err(StructureError::Internal(
                "a p-core is not the full p-part of the Fitting subgroup".into(),
            ));
        }
    }
    if !g.normalizes(&fitting) {
        return Err(StructureError::Internal("Fitting subgroup not normal".into()));
    }
    Ok(FittingRecord {
        primes,
        cores,
        fitting,
        order: forder,
        index: order / forder,
    })
}

/// The second Fitting subgroup: the preimage of F(G / F(G)) under the coset
/// action on F(G).
pub struct TowerRecord {
    pub fitting_order: u128,
    pub second_order: u128,
    pub index_fitting: u128,
    pub index_second: u128,
    pub second: PermGroup,
}

pub fn fitting2(g: &PermGroup) -> Result<TowerRecord> {
    let f = fitting(g)?;
    let order = g.order();
    if f.order == order {
        // nilpotent: F = F2 = G
        return Ok(TowerRecord {
            fitting_order: f.order,
            second_order: order,
            index_fitting: 1,
            index_second: 1,
            second: g.clone(),
        });
    }
    let table = g.coset_action(f.fitting.generators())?;
    let quotient = &table.action;
    let fq = fitting(quotient)?;
    let target = f.order * fq.order;

    // preimage scan: adjoin elements whose coset image lies in F(G/F)
    let mut gens: Vec<Permutation> = f.fitting.generators().to_vec();
    let mut second = f.fitting.clone();
    if fq.order > 1 {
        for e in g.elements() {
            if second.order() == target {
                break;
            }
            if second.contains(&e) {
                continue;
            }
            if fq.fitting.contains(&table.image_of(&e)) {
                gens.push(e);
                second = PermGroup::new(g.degree(), gens.clone())?;
            }
        }
    }
    if second.order() != target {
        return Err(StructureError::Internal(format!(
            "second Fitting preimage has order {}, expected {target}",
            second.order()
        )));
    }
    Ok(TowerRecord {
        fitting_order: f.order,
        second_order: target,
        index_fitting: order / f.order,
        index_second: order / target,
        second,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

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
    fn fitting_of_s4_is_klein() {
        let r = fitting(&s4()).unwrap();
        assert_eq!(r.order, 4);
        assert_eq!(r.index, 6);
    }

    #[test]
    fn fitting_of_s3_is_c3() {
        let r = fitting(&s3()).unwrap();
        assert_eq!(r.order, 3);
        assert_eq!(r.index, 2);
    }

    #[test]
    fn fitting_of_nilpotent_is_whole() {
        let d8 = PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
                Permutation::from_images(vec![0, 3, 2, 1]).unwrap(),
            ],
        )
        .unwrap();
        let r = fitting(&d8).unwrap();
        assert_eq!(r.index, 1);
        let t = fitting2(&d8).unwrap();
        assert_eq!(t.index_second, 1);
    }

    #[test]
    fn second_fitting_of_s4_is_a4() {
        let t = fitting2(&s4()).unwrap();
        assert_eq!(t.fitting_order, 4);
        assert_eq!(t.second_order, 12);
        assert_eq!(t.index_second, 2);
        // F2 contains F and is normal
        assert!(t.second.contains_group(&fitting(&s4()).unwrap().fitting));
        assert!(s4().normalizes(&t.second));
    }

    #[test]
    fn second_fitting_of_s3_is_s3() {
        let t = fitting2(&s3()).unwrap();
        assert_eq!(t.fitting_order, 3);
        assert_eq!(t.index_second, 1);
    }
}
