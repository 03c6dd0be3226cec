//! Primitivity testing via minimal block systems.

use crate::group::PermGroup;

/// Size of the minimal block containing `{0, b}` under the group generators,
/// by the standard union-find closure.
fn minimal_block_size(g: &PermGroup, b: u32) -> usize {
    let n = g.degree();
    let mut parent: Vec<u32> = (0..n as u32).collect();

    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }

    let mut queue: Vec<(u32, u32)> = vec![(0, b)];
    parent[b as usize] = 0;
    while let Some((x, y)) = queue.pop() {
        for gen in g.generators() {
            let (gx, gy) = (gen.apply(x), gen.apply(y));
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[ry as usize] = rx;
                queue.push((rx, ry));
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..n as u32)
        .filter(|&x| find(&mut parent, x) == root)
        .count()
}

/// True iff the group is transitive and preserves no nontrivial block system.
pub fn is_primitive(g: &PermGroup) -> bool {
    if !g.is_transitive() {
        return false;
    }
    if g.degree() <= 2 {
        return true;
    }
    for b in 1..g.degree() as u32 {
        let size = minimal_block_size(g, b);
        if size < g.degree() {
            return false;
        }
    }
    true
}
