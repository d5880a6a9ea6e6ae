//! Finite fields, transversal designs, and resolvable classes from them.

use crate::design::{Block, Design, Gdd, Rgdd};
use crate::error::{Error, Result};
use crate::verify::{verify_gdd, verify_resolution};

/// Trial-division primality; inputs stay below 2^16 so this is plenty.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes n = p^e with p prime, if possible.
pub fn is_prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            return if m == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((n, 1))
}

/// Arithmetic in GF(p^e) with elements encoded as integers in 0..p^e,
/// read as polynomial coefficient vectors in base p (constant term in the
/// lowest digit).
#[derive(Clone, Debug)]
pub struct Gf {
    p: usize,
    e: u32,
    q: usize,
    /// Monic irreducible modulus, ascending coefficients, length e+1.
    poly: Vec<usize>,
}

/// Field constructor; the reducing polynomial is the monic irreducible of
/// degree e with the smallest integer encoding.
pub fn gf(p: usize, e: u32) -> Result<Gf> {
    Gf::new(p, e)
}

impl Gf {
    pub fn new(p: usize, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Param(format!("field characteristic {p} is not prime")));
        }
        if e == 0 {
            return Err(Error::Param("field extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(e).filter(|&q| q <= 1 << 16).ok_or_else(|| {
            Error::Range(format!("field order {p}^{e} exceeds 2^16"))
        })? as usize;
        let poly = lowest_irreducible(p, e);
        Ok(Gf { p, e, q, poly })
    }

    pub fn with_order(q: usize) -> Result<Self> {
        let (p, e) = is_prime_power(q)
            .ok_or_else(|| Error::Param(format!("field order {q} is not a prime power")))?;
        Gf::new(p, e)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn modulus(&self) -> &[usize] {
        &self.poly
    }

    fn digits(&self, mut n: usize) -> Vec<usize> {
        let mut d = vec![0; self.e as usize];
        for slot in d.iter_mut() {
            *slot = n % self.p;
            n /= self.p;
        }
        d
    }

    fn pack(&self, d: &[usize]) -> usize {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let da = self.digits(a);
        let neg: Vec<usize> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&neg)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0usize; 2 * self.e as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = poly_rem(&prod, &self.poly, self.p);
        let mut padded = rem;
        padded.resize(self.e as usize, 0);
        self.pack(&padded)
    }

    pub fn pow(&self, mut a: usize, mut n: usize) -> usize {
        let mut acc = 1;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: usize) -> Result<usize> {
        if a == 0 {
            return Err(Error::Param("zero has no multiplicative inverse".into()));
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.q
    }
}

/// Remainder of a / m over F_p, coefficients ascending, m monic.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r: Vec<usize> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    while r.len() > 1 && *r.last().unwrap() == 0 {
        r.pop();
    }
    r
}

/// Smallest monic irreducible of degree e over F_p, ordered by the integer
/// encoding of the non-leading coefficients. Trial division by every monic
/// polynomial of degree at most e/2 suffices at these sizes.
fn lowest_irreducible(p: usize, e: u32) -> Vec<usize> {
    let e = e as usize;
    if e == 1 {
        return vec![0, 1];
    }
    let tail_count = (p as u128).pow(e as u32) as usize;
    'candidates: for enc in 0..tail_count {
        let mut cand = Vec::with_capacity(e + 1);
        let mut n = enc;
        for _ in 0..e {
            cand.push(n % p);
            n /= p;
        }
        cand.push(1);
        for deg in 1..=e / 2 {
            let div_count = p.pow(deg as u32);
            for denc in 0..div_count {
                let mut div = Vec::with_capacity(deg + 1);
                let mut dn = denc;
                for _ in 0..deg {
                    div.push(dn % p);
                    dn /= p;
                }
                div.push(1);
                let rem = poly_rem(&cand, &div, p);
                if rem.iter().all(|&c| c == 0) {
                    continue 'candidates;
                }
            }
        }
        return cand;
    }
    unreachable!("an irreducible of every degree exists over a finite field")
}

/// Transversal design with k groups of side q (q a prime power or 1):
/// points (i, x) flattened as i*q + x, blocks indexed by field pairs
/// (a, b) as {(i, a*c_i + b)}. k = q+1 appends a group of slopes.
pub fn td(k: usize, q: usize) -> Result<Gdd> {
    if k < 2 {
        return Err(Error::Param(format!("a transversal design needs k >= 2, got {k}")));
    }
    if q == 1 {
        let design = Design::new(k, vec![Block::new((0..k).collect())?])?;
        let groups: Vec<Vec<usize>> = (0..k).map(|i| vec![i]).collect();
        return finish_gdd(design, groups, k);
    }
    if k > q + 1 {
        return Err(Error::Range(format!(
            "a transversal design with {k} groups needs side at least {}",
            k - 1
        )));
    }
    let f = Gf::with_order(q)?;
    let mut blocks = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            let mut pts: Vec<usize> = (0..k.min(q))
                .map(|i| i * q + f.add(f.mul(a, i), b))
                .collect();
            if k == q + 1 {
                pts.push(q * q + a);
            }
            blocks.push(Block::new(pts)?);
        }
    }
    let design = Design::new(k * q, blocks)?;
    let groups: Vec<Vec<usize>> = (0..k).map(|i| (i * q..(i + 1) * q).collect()).collect();
    finish_gdd(design, groups, k)
}

fn finish_gdd(design: Design, groups: Vec<Vec<usize>>, k: usize) -> Result<Gdd> {
    let report = verify_gdd(&design, k, &groups)?;
    if !report.valid {
        return Err(Error::Param(format!(
            "constructed design is not a {k}-GDD: {}",
            report.violations.join("; ")
        )));
    }
    Ok(Gdd { design, groups, k })
}

/// Offsets of a block inside each group; `Some` only for transversals.
fn transversal_offsets(gdd: &Gdd, point_group: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let k = gdd.groups.len();
    let mut out = Vec::with_capacity(gdd.design.block_count());
    for block in gdd.design.blocks() {
        let mut offsets = vec![usize::MAX; k];
        for &p in block.points() {
            let (g, off) = point_group[p];
            if offsets[g] != usize::MAX {
                return None;
            }
            offsets[g] = off;
        }
        if offsets.iter().any(|&o| o == usize::MAX) {
            return None;
        }
        out.push(offsets);
    }
    Some(out)
}

fn point_group_map(gdd: &Gdd) -> Vec<(usize, usize)> {
    let mut map = vec![(usize::MAX, usize::MAX); gdd.design.v()];
    for (g, group) in gdd.groups.iter().enumerate() {
        let mut sorted = group.clone();
        sorted.sort_unstable();
        for (off, &p) in sorted.iter().enumerate() {
            map[p] = (g, off);
        }
    }
    map
}

/// Direct product of two transversal designs on the same number of groups:
/// TD(k, m) x TD(k, n) -> TD(k, mn).
pub fn macneish(a: &Gdd, b: &Gdd) -> Result<Gdd> {
    if a.k != b.k {
        return Err(Error::Param(format!(
            "group counts differ: {} versus {}",
            a.k, b.k
        )));
    }
    let k = a.k;
    let ta = a.gdd_type()?;
    let tb = b.gdd_type()?;
    let (m, n) = match (ta.parts(), tb.parts()) {
        ([(m, km)], [(n, kn)]) if *km == k && *kn == k => (*m, *n),
        _ => {
            return Err(Error::Param(format!(
                "inputs must be transversal designs, got types {ta} and {tb}"
            )))
        }
    };
    let offs_a = transversal_offsets(a, &point_group_map(a))
        .ok_or_else(|| Error::Param("left factor has a non-transversal block".into()))?;
    let offs_b = transversal_offsets(b, &point_group_map(b))
        .ok_or_else(|| Error::Param("right factor has a non-transversal block".into()))?;
    let side = m * n;
    let mut blocks = Vec::with_capacity(offs_a.len() * offs_b.len());
    for ba in &offs_a {
        for bb in &offs_b {
            let pts: Vec<usize> = (0..k).map(|i| i * side + ba[i] * n + bb[i]).collect();
            blocks.push(Block::new(pts)?);
        }
    }
    let design = Design::new(k * side, blocks)?;
    let groups: Vec<Vec<usize>> = (0..k).map(|i| (i * side..(i + 1) * side).collect()).collect();
    finish_gdd(design, groups, k)
}

/// TD(k, n) for composite n by factoring into prime powers and taking
/// products. Any prime-power factor below k-1 makes the factor design
/// impossible here, reported as a missing ingredient.
pub fn td_any(k: usize, n: usize) -> Result<Gdd> {
    if n == 1 {
        return td(k, 1);
    }
    let mut factors: Vec<usize> = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut q = 1;
            while rest % p == 0 {
                q *= p;
                rest /= p;
            }
            factors.push(q);
        }
        p += 1;
    }
    if rest > 1 {
        factors.push(rest);
    }
    factors.sort_unstable();
    if factors[0] + 1 < k {
        return Err(Error::Ingredient(format!(
            "transversal design {}^{k} (side {} is a maximal prime-power factor of {n} and is too small)",
            factors[0], factors[0]
        )));
    }
    let mut acc = td(k, factors[0])?;
    for &q in &factors[1..] {
        acc = macneish(&acc, &td(k, q)?)?;
    }
    Ok(acc)
}

/// Resolvable k-GDD of type q^k: build TD(k+1, q) and delete its last
/// group; blocks sharing a deleted point form a parallel class.
pub fn rgdd_from_mols(k: usize, q: usize) -> Result<Rgdd> {
    if k < 2 {
        return Err(Error::Param(format!("need k >= 2 groups, got {k}")));
    }
    if q != 1 && k > q {
        return Err(Error::Range(format!(
            "a resolvable design with {k} groups needs side at least {k}"
        )));
    }
    let full = td(k + 1, q)?;
    let cut = k * q;
    let mut blocks = Vec::with_capacity(full.design.block_count());
    let mut classes = vec![Vec::new(); q];
    for (idx, block) in full.design.blocks().iter().enumerate() {
        let kept: Vec<usize> = block.points().iter().copied().filter(|&p| p < cut).collect();
        let deleted = block.points().iter().copied().find(|&p| p >= cut).unwrap();
        blocks.push(Block::new(kept)?);
        classes[deleted - cut].push(idx);
    }
    let design = Design::new(cut, blocks)?;
    let groups: Vec<Vec<usize>> = (0..k).map(|i| (i * q..(i + 1) * q).collect()).collect();
    let gdd = finish_gdd(design, groups, k)?;
    if !verify_resolution(&gdd.design, &classes) {
        return Err(Error::Resolution(format!(
            "deleted-group classes fail to resolve TD({k},{q})"
        )));
    }
    Ok(Rgdd { gdd, classes })
}
