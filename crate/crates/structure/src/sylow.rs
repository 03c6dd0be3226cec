//! Sylow subgroups by p-element seeding and normalizer climbing, and p-cores
//! as stabilized intersections of Sylow conjugates.

use permcore::{PermGroup, Permutation};

use crate::error::{Result, StructureError};

/// Element-enumeration budget for structural computations.
pub const STRUCTURE_ENUM_BUDGET: u128 = 1 << 20;

pub fn prime_factors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

pub fn p_part(mut n: u128, p: u64) -> u128 {
    let mut part = 1u128;
    while n % p as u128 == 0 {
        part *= p as u128;
        n /= p as u128;
    }
    part
}

fn enumerate(g: &PermGroup) -> Result<Vec<Permutation>> {
    let order = g.order();
    if order > STRUCTURE_ENUM_BUDGET {
        return Err(StructureError::Budget(format!(
            "order {order} exceeds the structure enumeration budget"
        )));
    }
    Ok(g.elements().collect())
}

fn is_p_power(mut n: u128, p: u64) -> bool {
    while n % p as u128 == 0 {
        n /= p as u128;
    }
    n == 1
}

/// A Sylow p-subgroup: seed with a p-element, then repeatedly adjoin
/// p-elements of the normalizer until the full p-part is reached. Any
/// p-element normalizing a p-subgroup extends it to a larger p-group, and
/// one always exists below the Sylow order.
pub fn sylow(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = g.order();
    if order % p as u128 != 0 {
        return Err(StructureError::PrimeDoesNotDivide(p, order));
    }
    let target = p_part(order, p);
    let elements = enumerate(g)?;
    // p-elements: each element raised to the cofactor of the p-part of its order
    let mut p_elements: Vec<Permutation> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for e in &elements {
        let o = e.order();
        let pp = p_part(o, p);
        if pp == 1 {
            continue;
        }
        let q = e.pow((o / pp) as u64);
        if !q.is_identity() && seen.insert(q.images().to_vec()) {
            p_elements.push(q);
        }
    }

    let mut h_gens: Vec<Permutation> = vec![p_elements
        .first()
        .ok_or_else(|| StructureError::Internal("no p-elements for a dividing prime".into()))?
        .clone()];
    let mut h = PermGroup::new(g.degree(), h_gens.clone())?;
    while h.order() < target {
        let mut extended = false;
        for x in &p_elements {
            if h.contains(x) {
                continue;
            }
            // x must normalize H for <H, x> to stay a p-group
            let normalizes = h_gens.iter().all(|s| h.contains(&s.conjugate_by(x)));
            if !normalizes {
                continue;
            }
            h_gens.push(x.clone());
            h = PermGroup::new(g.degree(), h_gens.clone())?;
            debug_assert!(is_p_power(h.order(), p));
            extended = true;
            break;
        }
        if !extended {
            return Err(StructureError::Internal(format!(
                "Sylow climb stalled at order {} of target {target}",
                h.order()
            )));
        }
    }
    Ok(h)
}

/// O_p(G): intersect a Sylow p-subgroup with its conjugates until the result
/// is stable under every generator.
pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if g.order() % p as u128 != 0 {
        return Err(StructureError::PrimeDoesNotDivide(p, g.order()));
    }
    let mut k = sylow(g, p)?;
    'outer: loop {
        for gen in g.generators() {
            let stable = k
                .generators()
                .iter()
                .all(|x| k.contains(&x.conjugate_by(gen)));
            if !stable {
                // K = K meet K^gen, via the element list of K
                let elems: Vec<Permutation> = k.elements().collect();
                let mut inter: Vec<Permutation> = Vec::new();
                for e in &elems {
                    // e in K^gen iff gen e gen^-1 in K
                    if k.contains(&gen.mul(e).mul(&gen.inverse())) {
                        inter.push(e.clone());
                    }
                }
                k = PermGroup::new(g.degree(), inter)?;
                continue 'outer;
            }
        }
        break;
    }
    Ok(k)
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

    #[test]
    fn sylow_orders_of_s4() {
        let g = s4();
        assert_eq!(sylow(&g, 2).unwrap().order(), 8);
        assert_eq!(sylow(&g, 3).unwrap().order(), 3);
        assert!(matches!(
            sylow(&g, 5),
            Err(StructureError::PrimeDoesNotDivide(5, 24))
        ));
    }

    #[test]
    fn sylow_of_c6() {
        let c6 = PermGroup::new(
            6,
            vec![Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()],
        )
        .unwrap();
        assert_eq!(sylow(&c6, 2).unwrap().order(), 2);
        assert_eq!(sylow(&c6, 3).unwrap().order(), 3);
    }

    #[test]
    fn p_cores_of_s4() {
        let g = s4();
        assert_eq!(p_core(&g, 2).unwrap().order(), 4); // the Klein subgroup
        assert_eq!(p_core(&g, 3).unwrap().order(), 1);
    }

    #[test]
    fn sylow_subgroups_are_conjugate_spot_check() {
        // all Sylow 3-subgroups of S4 arise as conjugates of one
        let g = s4();
        let p3 = sylow(&g, 3).unwrap();
        for e in g.elements() {
            let conj_gens: Vec<Permutation> = p3
                .generators()
                .iter()
                .map(|x| x.conjugate_by(&e))
                .collect();
            let conj = PermGroup::new(4, conj_gens).unwrap();
            assert_eq!(conj.order(), 3);
        }
    }

    #[test]
    fn p_core_contained_in_sylow() {
        let g = s4();
        let core = p_core(&g, 2).unwrap();
        let syl = sylow(&g, 2).unwrap();
        assert!(syl.contains_group(&core));
        assert!(g.normalizes(&core));
    }
}
