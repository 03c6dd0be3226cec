//! Brute-force oracle mode: answers questions about catalog groups by
//! exhaustive enumeration only, working directly on the raw record data
//! (image arrays, entry matrices, field description) with its own arithmetic.
//! It deliberately shares no code with the main algorithms beyond the record
//! parser, so its answers are an independent cross-check.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};
use thiserror::Error;

use crate::record::GroupRecord;

/// Element budget for closure questions.
pub const CLOSURE_BUDGET: usize = 2000;
/// Vector budget for orbit questions.
pub const ORBIT_BUDGET: u64 = 1 << 14;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("unknown question {0:?}")]
    UnknownQuestion(String),
    #[error("question {question:?} does not apply to kind {kind:?}")]
    WrongKind { question: String, kind: String },
    #[error("malformed question argument: {0}")]
    BadArgument(String),
    #[error("oracle inconsistency: {0}")]
    Inconsistent(String),
}

type Result<T> = std::result::Result<T, OracleError>;

// ---- raw permutation arithmetic ----

type RawPerm = Vec<u32>;

fn raw_compose(a: &RawPerm, b: &RawPerm) -> RawPerm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn raw_identity(n: usize) -> RawPerm {
    (0..n as u32).collect()
}

fn raw_inverse(a: &RawPerm) -> RawPerm {
    let mut out = vec![0u32; a.len()];
    for (i, &y) in a.iter().enumerate() {
        out[y as usize] = i as u32;
    }
    out
}

fn raw_order(a: &RawPerm) -> u128 {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut ord: u128 = 1;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0u128;
        let mut x = s;
        loop {
            seen[x] = true;
            len += 1;
            x = a[x] as usize;
            if x == s {
                break;
            }
        }
        ord = lcm(ord, len);
    }
    ord
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

fn raw_closure(gens: &[RawPerm], degree: usize) -> Result<Vec<RawPerm>> {
    let mut seen: HashSet<RawPerm> = HashSet::new();
    let mut out = vec![raw_identity(degree)];
    seen.insert(out[0].clone());
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let h = raw_compose(&out[i], g);
            if !seen.contains(&h) {
                if out.len() >= CLOSURE_BUDGET {
                    return Err(OracleError::Budget(format!(
                        "closure exceeds {CLOSURE_BUDGET} elements"
                    )));
                }
                seen.insert(h.clone());
                out.push(h);
            }
        }
        i += 1;
    }
    Ok(out)
}

fn closure_of(elems: &[RawPerm], degree: usize) -> Result<Vec<RawPerm>> {
    raw_closure(elems, degree)
}

fn perm_gens(record: &GroupRecord) -> Result<(usize, Vec<RawPerm>)> {
    let degree = record
        .degree
        .ok_or_else(|| OracleError::BadArgument("perm record without degree".into()))?;
    let gens: Vec<RawPerm> = serde_json::from_value(record.generators.clone())
        .map_err(|e| OracleError::BadArgument(e.to_string()))?;
    Ok((degree, gens))
}

// ---- raw field and matrix arithmetic ----

struct RawField {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

impl RawField {
    fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k);
        let mut e = a;
        for _ in 0..self.k {
            out.push(e % self.p);
            e /= self.p;
        }
        out
    }

    fn undigits(&self, c: &[u64]) -> u64 {
        let mut acc = 0u64;
        for &x in c.iter().rev() {
            acc = acc * self.p + x;
        }
        acc
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&sum)
    }

    /// Schoolbook polynomial product reduced by long division.
    fn mul(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.k];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (self.k..2 * self.k).rev() {
            let lead = prod[d];
            if lead == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..self.k {
                let idx = d - self.k + i;
                prod[idx] = (prod[idx] + (self.p - lead % self.p) * self.modulus[i]) % self.p;
            }
        }
        self.undigits(&prod[..self.k])
    }
}

type RawMat = Vec<Vec<u64>>;

fn mat_mul(a: &RawMat, b: &RawMat, f: &RawField) -> RawMat {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                if b[k][j] != 0 {
                    out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
                }
            }
        }
    }
    out
}

fn mat_identity(n: usize) -> RawMat {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

fn vec_apply(v: &[u64], m: &RawMat, f: &RawField) -> Vec<u64> {
    let n = v.len();
    let mut out = vec![0u64; n];
    for (i, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for j in 0..n {
            if m[i][j] != 0 {
                out[j] = f.add(out[j], f.mul(x, m[i][j]));
            }
        }
    }
    out
}

fn matrix_data(record: &GroupRecord) -> Result<(RawField, usize, Vec<RawMat>)> {
    let fd = record
        .field
        .as_ref()
        .ok_or_else(|| OracleError::BadArgument("matrix record without field".into()))?;
    let dim = record
        .dim
        .ok_or_else(|| OracleError::BadArgument("matrix record without dim".into()))?;
    let gens: Vec<RawMat> = serde_json::from_value(record.generators.clone())
        .map_err(|e| OracleError::BadArgument(e.to_string()))?;
    Ok((
        RawField {
            p: fd.p,
            k: fd.k,
            modulus: fd.modulus.clone(),
        },
        dim,
        gens,
    ))
}

fn mat_closure(gens: &[RawMat], dim: usize, f: &RawField) -> Result<Vec<RawMat>> {
    let mut seen: HashSet<RawMat> = HashSet::new();
    let mut out = vec![mat_identity(dim)];
    seen.insert(out[0].clone());
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let h = mat_mul(&out[i], g, f);
            if !seen.contains(&h) {
                if out.len() >= CLOSURE_BUDGET {
                    return Err(OracleError::Budget(format!(
                        "matrix closure exceeds {CLOSURE_BUDGET} elements"
                    )));
                }
                seen.insert(h.clone());
                out.push(h);
            }
        }
        i += 1;
    }
    Ok(out)
}

fn index_to_vec(mut idx: u64, dim: usize, q: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(dim);
    for _ in 0..dim {
        v.push(idx % q);
        idx /= q;
    }
    v
}

fn vec_to_index(v: &[u64], q: u64) -> u64 {
    let mut acc = 0u64;
    for &x in v.iter().rev() {
        acc = acc * q + x;
    }
    acc
}

// ---- perm-group questions ----

fn q_order(record: &GroupRecord) -> Result<Value> {
    match record.kind.as_str() {
        "perm" => {
            let (degree, gens) = perm_gens(record)?;
            Ok(json!(raw_closure(&gens, degree)?.len()))
        }
        "matrix" => {
            let (f, dim, gens) = matrix_data(record)?;
            Ok(json!(mat_closure(&gens, dim, &f)?.len()))
        }
        other => Err(OracleError::WrongKind {
            question: "order".into(),
            kind: other.into(),
        }),
    }
}

/// Derived series over full element lists: commutators of every ordered pair.
fn q_solvable(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let mut cur = raw_closure(&gens, degree)?;
    for _ in 0..40 {
        if cur.len() == 1 {
            return Ok(json!(true));
        }
        let mut comms: HashSet<RawPerm> = HashSet::new();
        for a in &cur {
            let ai = raw_inverse(a);
            for b in &cur {
                let bi = raw_inverse(b);
                let c = raw_compose(&raw_compose(&ai, &bi), &raw_compose(a, b));
                comms.insert(c);
            }
        }
        let seeds: Vec<RawPerm> = comms.into_iter().collect();
        let next = closure_of(&seeds, degree)?;
        if next.len() == cur.len() {
            return Ok(json!(false));
        }
        cur = next;
    }
    Ok(json!(false))
}

fn q_primitive(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    // transitivity
    let mut reach = vec![false; degree];
    for e in &all {
        reach[e[0] as usize] = true;
    }
    if reach.iter().any(|&r| !r) {
        return Ok(json!(false));
    }
    if degree <= 2 {
        return Ok(json!(true));
    }
    for b in 1..degree as u32 {
        // minimal partition merging 0 and b, refined by every element
        let mut part: Vec<u32> = (0..degree as u32).collect();
        fn find(part: &mut [u32], mut x: u32) -> u32 {
            while part[x as usize] != x {
                part[x as usize] = part[part[x as usize] as usize];
                x = part[x as usize];
            }
            x
        }
        part[b as usize] = 0;
        let mut changed = true;
        while changed {
            changed = false;
            for e in &all {
                for x in 0..degree as u32 {
                    let y = find(&mut part, x);
                    if y == x {
                        continue;
                    }
                    let (ex, ey) = (e[x as usize], e[y as usize]);
                    let (rx, ry) = (find(&mut part, ex), find(&mut part, ey));
                    if rx != ry {
                        part[ry.max(rx) as usize] = ry.min(rx);
                        changed = true;
                    }
                }
            }
        }
        let root0 = find(&mut part, 0);
        let size = (0..degree as u32)
            .filter(|&x| find(&mut part, x) == root0)
            .count();
        if size < degree {
            return Ok(json!(false));
        }
    }
    Ok(json!(true))
}

fn normal_closure_of(e: &RawPerm, all: &[RawPerm], degree: usize) -> Result<Vec<RawPerm>> {
    let mut seeds: HashSet<RawPerm> = HashSet::new();
    for x in all {
        let xi = raw_inverse(x);
        seeds.insert(raw_compose(&raw_compose(&xi, e), x));
    }
    closure_of(&seeds.into_iter().collect::<Vec<_>>(), degree)
}

fn q_minimal_normal(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    let mut best: Option<Vec<RawPerm>> = None;
    for e in &all {
        if e == &raw_identity(degree) {
            continue;
        }
        let nc = normal_closure_of(e, &all, degree)?;
        match &best {
            None => best = Some(nc),
            Some(b) if nc.len() < b.len() => best = Some(nc),
            _ => {}
        }
    }
    let minimal = best.ok_or_else(|| OracleError::Inconsistent("trivial group".into()))?;
    // uniqueness: every other minimal-order closure is the same subgroup
    let min_set: HashSet<&RawPerm> = minimal.iter().collect();
    for e in &all {
        if e == &raw_identity(degree) {
            continue;
        }
        let nc = normal_closure_of(e, &all, degree)?;
        if nc.len() == minimal.len() && !nc.iter().all(|x| min_set.contains(x)) {
            return Err(OracleError::Inconsistent(
                "minimal normal subgroup is not unique".into(),
            ));
        }
    }
    let regular = minimal.len() == degree
        && minimal
            .iter()
            .all(|e| e == &raw_identity(degree) || e.iter().enumerate().all(|(i, &y)| i as u32 != y));
    let (p, t) = prime_power_u128(minimal.len() as u128)
        .ok_or_else(|| OracleError::Inconsistent("minimal normal order not a prime power".into()))?;
    Ok(json!({
        "order": minimal.len(),
        "regular": regular,
        "p": p,
        "t": t,
    }))
}

fn prime_power_u128(n: u128) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            let mut m = n;
            let mut t = 0;
            while m % d == 0 {
                m /= d;
                t += 1;
            }
            return if m == 1 { Some((d as u64, t)) } else { None };
        }
        d += 1;
    }
    Some((n as u64, 1))
}

fn q_subset_index(record: &GroupRecord, arg: &str) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    let points: Vec<u32> = if arg.is_empty() {
        Vec::new()
    } else {
        arg.split(',')
            .map(|s| s.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| OracleError::BadArgument(e.to_string()))?
    };
    let base: HashSet<u32> = points.into_iter().collect();
    let mut images: HashSet<Vec<u32>> = HashSet::new();
    for e in &all {
        let mut im: Vec<u32> = base.iter().map(|&x| e[x as usize]).collect();
        im.sort_unstable();
        images.insert(im);
    }
    Ok(json!(images.len()))
}

fn q_class_sizes(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    let mut assigned: HashMap<&RawPerm, usize> = HashMap::new();
    let mut sizes = Vec::new();
    for e in &all {
        if assigned.contains_key(e) {
            continue;
        }
        let class_id = sizes.len();
        let mut members: HashSet<RawPerm> = HashSet::new();
        for x in all.iter() {
            let xi = raw_inverse(x);
            members.insert(raw_compose(&raw_compose(&xi, e), x));
        }
        for m in &members {
            if let Some(found) = all.iter().find(|a| *a == m) {
                assigned.insert(found, class_id);
            }
        }
        sizes.push(members.len());
    }
    sizes.sort_unstable();
    Ok(json!(sizes))
}

fn q_center_order(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    let count = all
        .iter()
        .filter(|e| {
            all.iter()
                .all(|x| raw_compose(e, x) == raw_compose(x, e))
        })
        .count();
    Ok(json!(count))
}

fn is_nilpotent_raw(elements: &[RawPerm]) -> bool {
    let n = elements.len() as u128;
    let mut primes = Vec::new();
    let mut m = n;
    let mut d = 2u128;
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
                let mut o = raw_order(e);
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

fn fitting_elements(all: &[RawPerm], degree: usize) -> Result<Vec<RawPerm>> {
    let mut gens: Vec<RawPerm> = Vec::new();
    for e in all {
        if e == &raw_identity(degree) {
            continue;
        }
        let nc = normal_closure_of(e, all, degree)?;
        if is_nilpotent_raw(&nc) {
            gens.push(e.clone());
        }
    }
    closure_of(&gens, degree)
}

fn q_largest_normal_nilpotent(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    Ok(json!(fitting_elements(&all, degree)?.len()))
}

/// F2 as the closure of all g whose normal closure becomes nilpotent modulo
/// the Fitting subgroup, tested through the lower central series mod F.
fn q_second_fitting_order(record: &GroupRecord) -> Result<Value> {
    let (degree, gens) = perm_gens(record)?;
    let all = raw_closure(&gens, degree)?;
    let f = fitting_elements(&all, degree)?;
    let f_set: HashSet<&RawPerm> = f.iter().collect();

    let nilpotent_mod_f = |h: &[RawPerm]| -> Result<bool> {
        // L_1 = H, L_{i+1} = <[L_i, H], F>; nilpotent mod F iff some L lies in F
        let mut layer: Vec<RawPerm> = h.to_vec();
        for _ in 0..40 {
            if layer.iter().all(|x| f_set.contains(x)) {
                return Ok(true);
            }
            let mut seeds: HashSet<RawPerm> = f.iter().cloned().collect();
            for a in &layer {
                let ai = raw_inverse(a);
                for b in h {
                    let bi = raw_inverse(b);
                    seeds.insert(raw_compose(&raw_compose(&ai, &bi), &raw_compose(a, b)));
                }
            }
            let next = closure_of(&seeds.into_iter().collect::<Vec<_>>(), degree)?;
            if next.len() == layer.len() && next.iter().all(|x| layer.contains(x)) {
                return Ok(false);
            }
            layer = next;
        }
        Ok(false)
    };

    let mut gens2: Vec<RawPerm> = f.clone();
    for e in &all {
        if e == &raw_identity(degree) || f_set.contains(e) {
            continue;
        }
        let mut h = normal_closure_of(e, &all, degree)?;
        for x in &f {
            if !h.contains(x) {
                h.push(x.clone());
            }
        }
        let h = closure_of(&h, degree)?;
        if nilpotent_mod_f(&h)? {
            gens2.push(e.clone());
        }
    }
    Ok(json!(closure_of(&gens2, degree)?.len()))
}

fn q_sylow_order(record: &GroupRecord, arg: &str) -> Result<Value> {
    let p: u128 = arg
        .parse()
        .map_err(|e: std::num::ParseIntError| OracleError::BadArgument(e.to_string()))?;
    let (degree, gens) = perm_gens(record)?;
    let n = raw_closure(&gens, degree)?.len() as u128;
    let mut part = 1u128;
    let mut m = n;
    while m % p == 0 {
        part *= p;
        m /= p;
    }
    Ok(json!(part))
}

// ---- matrix-group questions ----

fn q_orbit_sizes(record: &GroupRecord, largest_only: bool) -> Result<Value> {
    let (f, dim, gens) = matrix_data(record)?;
    let q = f.size();
    let space = (q as u128).pow(dim as u32);
    if space > ORBIT_BUDGET as u128 {
        return Err(OracleError::Budget(format!(
            "orbit space {space} exceeds {ORBIT_BUDGET}"
        )));
    }
    let space = space as u64;
    let elements = mat_closure(&gens, dim, &f)?;
    let mut seen = vec![false; space as usize];
    let mut sizes: Vec<u64> = Vec::new();
    for start in 0..space {
        if seen[start as usize] {
            continue;
        }
        // orbit = distinct images of the start vector under all elements
        let v = index_to_vec(start, dim, q);
        let mut orbit: HashSet<u64> = HashSet::new();
        for m in &elements {
            orbit.insert(vec_to_index(&vec_apply(&v, m, &f), q));
        }
        for &x in &orbit {
            seen[x as usize] = true;
        }
        sizes.push(orbit.len() as u64);
    }
    sizes.sort_unstable();
    if largest_only {
        Ok(json!(sizes.last().copied().unwrap_or(0)))
    } else {
        Ok(json!(sizes))
    }
}

fn q_regular_orbit_count_double(record: &GroupRecord) -> Result<Value> {
    let (f, dim, gens) = matrix_data(record)?;
    let q = f.size();
    let space = (q as u128).pow(dim as u32);
    if space * space > ORBIT_BUDGET as u128 * ORBIT_BUDGET as u128 {
        return Err(OracleError::Budget("pair space too large".into()));
    }
    let space = space as u64;
    let elements = mat_closure(&gens, dim, &f)?;
    let order = elements.len() as u128;
    let mut regular_pairs = 0u128;
    for vi in 0..space {
        let v = index_to_vec(vi, dim, q);
        for ui in 0..space {
            let u = index_to_vec(ui, dim, q);
            let stab = elements
                .iter()
                .filter(|m| vec_apply(&v, m, &f) == v && vec_apply(&u, m, &f) == u)
                .count();
            if stab == 1 {
                regular_pairs += 1;
            }
        }
    }
    if regular_pairs % order != 0 {
        return Err(OracleError::Inconsistent(
            "regular pairs not divisible by order".into(),
        ));
    }
    Ok(json!((regular_pairs / order) as u64))
}

fn q_irreducible(record: &GroupRecord) -> Result<Value> {
    let (f, dim, gens) = matrix_data(record)?;
    let q = f.size();
    let space = (q as u128).pow(dim as u32);
    if space > ORBIT_BUDGET as u128 {
        return Err(OracleError::Budget("spin space too large".into()));
    }
    let space = space as u64;
    let elements = mat_closure(&gens, dim, &f)?;
    for start in 1..space {
        // invariant subspace generated by the vector: close under group
        // images and vector addition, exhaustively
        let mut span: HashSet<u64> = HashSet::new();
        span.insert(0);
        span.insert(start);
        loop {
            let snapshot: Vec<u64> = span.iter().copied().collect();
            let before = span.len();
            for &vi in &snapshot {
                let v = index_to_vec(vi, dim, q);
                for m in &elements {
                    span.insert(vec_to_index(&vec_apply(&v, m, &f), q));
                }
                for &wi in &snapshot {
                    let w = index_to_vec(wi, dim, q);
                    let sum: Vec<u64> = v.iter().zip(&w).map(|(&a, &b)| f.add(a, b)).collect();
                    span.insert(vec_to_index(&sum, q));
                }
                // scalar multiples
                for s in 2..q {
                    let sv: Vec<u64> = v.iter().map(|&a| f.mul(a, s)).collect();
                    span.insert(vec_to_index(&sv, q));
                }
            }
            if span.len() == before {
                break;
            }
        }
        if (span.len() as u128) < space as u128 {
            return Ok(json!(false));
        }
    }
    Ok(json!(true))
}

/// Standalone brute-force product in GF(p^k) with the given modulus, for
/// cross-checking field arithmetic examples.
pub fn gf_mul_bruteforce(p: u64, k: usize, modulus: &[u64], a: u64, b: u64) -> u64 {
    let f = RawField {
        p,
        k,
        modulus: modulus.to_vec(),
    };
    f.mul(a, b)
}

/// Answers a question about a record. Questions take arguments after a
/// colon, e.g. `subset-index:0,1` or `sylow-order:2`.
pub fn answer(record: &GroupRecord, question: &str) -> Result<Value> {
    let (name, arg) = match question.split_once(':') {
        Some((n, a)) => (n, a),
        None => (question, ""),
    };
    let need_perm = |q: &str| -> Result<()> {
        if record.kind == "perm" {
            Ok(())
        } else {
            Err(OracleError::WrongKind {
                question: q.into(),
                kind: record.kind.clone(),
            })
        }
    };
    let need_matrix = |q: &str| -> Result<()> {
        if record.kind == "matrix" {
            Ok(())
        } else {
            Err(OracleError::WrongKind {
                question: q.into(),
                kind: record.kind.clone(),
            })
        }
    };
    match name {
        "order" => q_order(record),
        "solvable" => {
            need_perm(name)?;
            q_solvable(record)
        }
        "primitive" => {
            need_perm(name)?;
            q_primitive(record)
        }
        "minimal-normal" => {
            need_perm(name)?;
            q_minimal_normal(record)
        }
        "subset-index" => {
            need_perm(name)?;
            q_subset_index(record, arg)
        }
        "class-sizes" => {
            need_perm(name)?;
            q_class_sizes(record)
        }
        "center-order" => {
            need_perm(name)?;
            q_center_order(record)
        }
        "largest-normal-nilpotent" => {
            need_perm(name)?;
            q_largest_normal_nilpotent(record)
        }
        "second-fitting-order" => {
            need_perm(name)?;
            q_second_fitting_order(record)
        }
        "sylow-order" => {
            need_perm(name)?;
            q_sylow_order(record, arg)
        }
        "orbit-sizes" => {
            need_matrix(name)?;
            q_orbit_sizes(record, false)
        }
        "largest-orbit" => {
            need_matrix(name)?;
            q_orbit_sizes(record, true)
        }
        "regular-orbit-count-double" => {
            need_matrix(name)?;
            q_regular_orbit_count_double(record)
        }
        "irreducible" => {
            need_matrix(name)?;
            q_irreducible(record)
        }
        other => Err(OracleError::UnknownQuestion(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::parse_catalog;

    fn s4_record() -> GroupRecord {
        parse_catalog(r#"{"id":"s4","kind":"perm","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]}"#)
            .unwrap()
            .remove(0)
            .record
    }

    #[test]
    fn order_and_solvable() {
        let r = s4_record();
        assert_eq!(answer(&r, "order").unwrap(), json!(24));
        assert_eq!(answer(&r, "solvable").unwrap(), json!(true));
    }

    #[test]
    fn a5_not_solvable() {
        let r = parse_catalog(
            r#"{"id":"a5","kind":"perm","degree":5,"generators":[[1,2,0,3,4],[1,2,3,4,0]]}"#,
        )
        .unwrap()
        .remove(0)
        .record;
        assert_eq!(answer(&r, "order").unwrap(), json!(60));
        assert_eq!(answer(&r, "solvable").unwrap(), json!(false));
    }

    #[test]
    fn largest_normal_nilpotent_of_s4() {
        let r = s4_record();
        assert_eq!(answer(&r, "largest-normal-nilpotent").unwrap(), json!(4));
        assert_eq!(answer(&r, "second-fitting-order").unwrap(), json!(12));
    }

    #[test]
    fn class_sizes_of_s4() {
        let r = s4_record();
        assert_eq!(answer(&r, "class-sizes").unwrap(), json!([1, 3, 6, 6, 8]));
    }

    #[test]
    fn minimal_normal_of_s4() {
        let r = s4_record();
        let v = answer(&r, "minimal-normal").unwrap();
        assert_eq!(v["order"], json!(4));
        assert_eq!(v["regular"], json!(true));
        assert_eq!(v["p"], json!(2));
        assert_eq!(v["t"], json!(2));
    }

    #[test]
    fn gf4_product_bruteforce() {
        // x * (x + 1) = 1 in GF(4) with modulus x^2 + x + 1
        assert_eq!(gf_mul_bruteforce(2, 2, &[1, 1, 1], 2, 3), 1);
    }
}
