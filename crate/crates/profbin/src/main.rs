use std::time::Instant;
fn main() {
    let t0 = Instant::now();
    let g = gfmatrix::gamma_group(2, 12).unwrap();
    println!("construct: {:?}", t0.elapsed());
    let t1 = Instant::now();
    let p = g.to_perm().unwrap();
    let order = p.order();
    println!("bridge+order: {:?} (order {order})", t1.elapsed());
    let t2 = Instant::now();
    let s = p.is_solvable();
    println!("solvable: {:?} ({s})", t2.elapsed());
    let t3 = Instant::now();
    let orb = gfmatrix::vector_orbits(&g).unwrap();
    println!("orbits: {:?} (M = {})", t3.elapsed(), orb.largest);
}
