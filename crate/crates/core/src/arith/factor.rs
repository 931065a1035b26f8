//! Factorization of integer polynomials: squarefree decomposition, factoring
//! modulo a small prime, Hensel lifting and recombination of lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::upoly::{qpoly, UniPoly};
use crate::error::{Error, Result};

/// `unit * prod(f^m)` with every `f` primitive, of positive degree, and with
/// positive lowest-order coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    /// Irreducible in `Z[z]`: one factor of multiplicity one and a unit constant.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1 && self.unit.abs().is_one()
    }
}

/// Complete factorization of a nonzero integer polynomial into irreducibles.
///
/// Factors are ordered by degree, then lexicographically by coefficient list
/// starting from the constant term.
pub fn upoly_factor(d: &UniPoly) -> Result<Factorization> {
    if d.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    if d.deg() > 0 {
        for (sqf, mult) in squarefree_decomposition(&d.primitive_part()) {
            for f in factor_squarefree(&sqf) {
                factors.push((f.normalize_sign(), mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let prod = factors
        .iter()
        .fold(UniPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m)));
    let unit = d.leading_coeff() / prod.leading_coeff();
    let out = Factorization { unit, factors };
    debug_assert_eq!(&out.expand(), d);
    Ok(out)
}

/// True when `f` is irreducible in `Z[z]` (positive degree, primitive, no proper factor).
pub fn is_irreducible(f: &UniPoly) -> bool {
    f.deg() > 0 && upoly_factor(f).map(|fa| fa.is_irreducible()).unwrap_or(false)
}

fn to_q(f: &UniPoly) -> Vec<BigRational> {
    f.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Clears denominators and content; sign normalized to a positive leading coefficient.
fn from_q(v: &[BigRational]) -> UniPoly {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let p = UniPoly::new(v.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
        .primitive_part();
    if p.leading_coeff().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Yun's algorithm over `Q`; returns primitive squarefree parts with multiplicities.
fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let fq = to_q(f);
    let df = qpoly::derivative(&fq);
    let a0 = qpoly::gcd(&fq, &df);
    let mut b = qpoly::divrem(&fq, &a0).0;
    let c = qpoly::divrem(&df, &a0).0;
    let mut d = qpoly::sub(&c, &qpoly::derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = qpoly::gcd(&b, &d);
        let nb = qpoly::divrem(&b, &a).0;
        let nc = qpoly::divrem(&d, &a).0;
        if a.len() > 1 {
            out.push((from_q(&a), i));
        }
        d = qpoly::sub(&nc, &qpoly::derivative(&nb));
        b = nb;
        i += 1;
    }
    out
}

/// Bound on coefficients of `lc(f)/lc(g) * g` for any factor `g` of `f`.
fn factor_coefficient_bound(f: &UniPoly) -> BigInt {
    let norm = f.sum_of_squares().sqrt() + 1u32;
    f.leading_coeff().abs() * (BigInt::one() << f.deg()) * norm
}

fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2u32 > *m {
        r - m
    } else {
        r
    }
}

/// Factors a squarefree integer polynomial of positive degree.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let f = if f.leading_coeff().is_negative() { f.neg() } else { f.clone() };
    if f.deg() <= 1 {
        return vec![f];
    }
    // A root at zero is split off directly.
    if f.constant_term().is_zero() {
        let rest = f.div_exact(&UniPoly::z()).expect("z divides f");
        let mut out = vec![UniPoly::z()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut good_primes = 0;
    for p in (3u64..).filter(|&p| super::coef::is_prime_u64(p)) {
        if (f.leading_coeff() % p).is_zero() {
            continue;
        }
        let fp = modp::reduce(&f, p);
        let dfp = modp::derivative(&fp, p);
        if modp::gcd(&fp, &dfp, p).len() != 1 {
            continue;
        }
        let monic = modp::monic(&fp, p);
        let facs = modp::factor_monic_squarefree(&monic, p, &mut rng);
        good_primes += 1;
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        if good_primes >= 5 || best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
    }
    let (p, modfacs) = best.expect("some prime is good for a squarefree polynomial");
    if modfacs.len() == 1 {
        return vec![f];
    }
    let bound = factor_coefficient_bound(&f) * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel::lift(&f, &modfacs, p, k);
    recombine(&f, lifted, &pk)
}

fn recombine(f: &UniPoly, lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<UniPoly> {
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut fstar = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        for subset in combinations(remaining.len(), s) {
            let lc = fstar.leading_coeff();
            let mut g = vec![lc.mod_floor(pk)];
            for &idx in &subset {
                g = hensel::mul_mod(&g, &lifted[remaining[idx]], pk);
            }
            let cand = UniPoly::new(g.iter().map(|c| symmetric_mod(c, pk)).collect()).primitive_part();
            if cand.deg() == 0 {
                continue;
            }
            if let Some(q) = fstar.div_exact(&cand) {
                out.push(cand);
                fstar = q;
                let chosen: Vec<usize> = subset.iter().map(|&i| remaining[i]).collect();
                remaining.retain(|i| !chosen.contains(i));
                continue 'outer;
            }
        }
        s += 1;
    }
    if fstar.deg() > 0 {
        out.push(fstar);
    }
    out
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 && cur[0] == n - k {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Polynomials over `F_p` as coefficient vectors, constant term first.
pub(crate) mod modp {
    use super::*;
    use crate::arith::coef::mod_pow;

    pub type MP = Vec<u64>;

    pub fn trim(mut a: MP) -> MP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn reduce(f: &UniPoly, p: u64) -> MP {
        let pb = BigInt::from(p);
        trim(
            f.coeffs()
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        mod_pow(a, p - 2, p)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> MP {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> MP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (MP, MP) {
        assert!(!b.is_empty());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let db = b.len() - 1;
        let li = inv(b[db], p);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db] * li % p;
            if c == 0 {
                continue;
            }
            for (i, &bi) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + p - c * bi % p) % p;
            }
            q[k] = c;
        }
        (trim(q), trim(r))
    }

    pub fn monic(a: &[u64], p: u64) -> MP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let li = inv(lc, p);
                a.iter().map(|&c| c * li % p).collect()
            }
        }
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> MP {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !y.is_empty() {
            let r = divrem(&x, &y, p).1;
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (MP, MP, MP) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            let s2 = sub(&s0, &mul(&q, &s1, p), p);
            let t2 = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = inv(*r0.last().expect("nonzero gcd"), p);
        let sc = |v: &MP| trim(v.iter().map(|&c| c * li % p).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(a: &[u64], p: u64) -> MP {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| (i as u64 % p) * c % p)
                .collect(),
        )
    }

    pub fn powmod(base: &[u64], exp: &BigUint, m: &[u64], p: u64) -> MP {
        let mut acc = vec![1u64];
        let b = divrem(base, m, p).1;
        for i in (0..exp.bits()).rev() {
            acc = divrem(&mul(&acc, &acc, p), m, p).1;
            if exp.bit(i) {
                acc = divrem(&mul(&acc, &b, p), m, p).1;
            }
        }
        acc
    }

    /// Distinct-degree then equal-degree factorization of a monic squarefree polynomial.
    pub fn factor_monic_squarefree(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<MP> {
        let mut out = Vec::new();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut rest = f.to_vec();
        let mut d = 0usize;
        let pbig = BigUint::from(p);
        while rest.len() > 2 * (d + 1) {
            d += 1;
            h = powmod(&h, &pbig, &rest, p);
            let g = gcd(&sub(&h, &x, p), &rest, p);
            if g.len() > 1 {
                equal_degree(&g, d, p, rng, &mut out);
                rest = divrem(&rest, &g, p).0;
                h = divrem(&h, &rest, p).1;
            }
        }
        if rest.len() > 1 {
            out.push(monic(&rest, p));
        }
        out.sort();
        out
    }

    fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<MP>) {
        let n = g.len() - 1;
        if n == d {
            out.push(monic(g, p));
            return;
        }
        let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: MP = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = gcd(&a, g, p);
            let split = if b.len() > 1 && b.len() < g.len() {
                b
            } else {
                let c = sub(&powmod(&a, &e, g, p), &[1], p);
                gcd(&c, g, p)
            };
            if split.len() > 1 && split.len() < g.len() {
                let other = divrem(g, &split, p).0;
                equal_degree(&split, d, p, rng, out);
                equal_degree(&other, d, p, rng, out);
                return;
            }
        }
    }
}

/// Linear Hensel lifting of a modular factorization.
mod hensel {
    use super::modp::{self, MP};
    use super::*;

    fn reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }

    pub fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        reduce(&out, m)
    }

    fn lift_mp(a: &[u64]) -> Vec<BigInt> {
        a.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn add_scaled(a: &[BigInt], b: &[u64], s: &BigInt, m: &BigInt) -> Vec<BigInt> {
        let n = a.len().max(b.len());
        let v: Vec<BigInt> = (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_default() + s * BigInt::from(*b.get(i).unwrap_or(&0)))
            .collect();
        reduce(&v, m)
    }

    /// Lifts monic factors `u_i` with `f = lc(f) * prod u_i (mod p)` to the modulus `p^k`.
    pub fn lift(f: &UniPoly, factors: &[MP], p: u64, k: u32) -> Vec<Vec<BigInt>> {
        let pb = BigInt::from(p);
        let pk = pb.pow(k);
        let lc = f.leading_coeff();
        let lc_p = lc.mod_floor(&pb).to_u64().unwrap();
        let mut target: Vec<BigInt> = reduce(f.coeffs(), &pk);
        let mut out = Vec::with_capacity(factors.len());
        for i in 0..factors.len() - 1 {
            let g0 = factors[i].clone();
            let h0 = factors[i + 1..]
                .iter()
                .fold(vec![lc_p], |acc, u| modp::mul(&acc, u, p));
            let (_, _, t) = modp::ext_gcd(&g0, &h0, p);
            let mut g = lift_mp(&g0);
            let mut h = lift_mp(&h0);
            *h.last_mut().unwrap() = target.last().unwrap().clone();
            let mut m = pb.clone();
            for _ in 1..k {
                let gh = mul_mod(&g, &h, &pk);
                let n = target.len().max(gh.len());
                let diff: Vec<BigInt> = (0..n)
                    .map(|j| target.get(j).cloned().unwrap_or_default() - gh.get(j).cloned().unwrap_or_default())
                    .collect();
                let diff = reduce(&diff, &pk);
                let e: MP = modp::trim(
                    diff.iter()
                        .map(|c| {
                            debug_assert!((c % &m).is_zero());
                            (c / &m).mod_floor(&pb).to_u64().unwrap()
                        })
                        .collect(),
                );
                if !e.is_empty() {
                    let dg = modp::divrem(&modp::mul(&t, &e, p), &g0, p).1;
                    let dh = modp::divrem(&modp::sub(&e, &modp::mul(&h0, &dg, p), p), &g0, p).0;
                    g = add_scaled(&g, &dg, &m, &pk);
                    h = add_scaled(&h, &dh, &m, &pk);
                }
                m *= &pb;
            }
            out.push(g);
            target = h;
        }
        // Remaining factor: make it monic modulo p^k.
        let lc_t = target.last().unwrap().clone();
        let inv = mod_inverse(&lc_t, &pk);
        out.push(reduce(&target.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pk));
        out
    }

    fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
        let e = a.extended_gcd(m);
        debug_assert!(e.gcd.is_one());
        e.x.mod_floor(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn difference_of_squares() {
        let fa = upoly_factor(&u(&[1, 0, -1])).unwrap();
        assert_eq!(fa.factors, vec![(u(&[1, -1]), 1), (u(&[1, 1]), 1)]);
        assert_eq!(fa.unit, BigInt::one());
    }

    #[test]
    fn cubic_is_irreducible() {
        // (1 - z)^3 - z
        assert!(is_irreducible(&u(&[1, -4, 3, -1])));
    }

    #[test]
    fn quintic_splits_off_cyclotomic_factor() {
        let f = u(&[1, -1]).pow(5).sub(&UniPoly::z());
        let fa = upoly_factor(&f).unwrap();
        assert_eq!(fa.factors.len(), 2);
        assert_eq!(fa.factors[0], (u(&[1, -1, 1]), 1));
        assert_eq!(fa.factors[1], (u(&[1, -5, 4, -1]), 1));
        assert_eq!(fa.expand(), f);
    }

    #[test]
    fn repeated_and_content_factors() {
        let f = u(&[1, 1]).pow(3).mul(&u(&[2, 0, 1])).scale(&BigInt::from(-6));
        let fa = upoly_factor(&f).unwrap();
        assert_eq!(fa.unit, BigInt::from(-6));
        assert_eq!(fa.factors, vec![(u(&[1, 1]), 3), (u(&[2, 0, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
        let f = u(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f));
        // (x^2 - 2)(x^2 - 3) must be found by recombination.
        let g = u(&[-2, 0, 1]).mul(&u(&[-3, 0, 1]));
        let fa = upoly_factor(&g).unwrap();
        assert_eq!(fa.factors.len(), 2);
        assert_eq!(fa.expand(), g);
    }

    #[test]
    fn constants_and_monomials() {
        let fa = upoly_factor(&u(&[-7])).unwrap();
        assert!(fa.factors.is_empty());
        assert_eq!(fa.unit, BigInt::from(-7));
        let fa = upoly_factor(&u(&[0, 0, 3])).unwrap();
        assert_eq!(fa.factors, vec![(UniPoly::z(), 2)]);
        assert!(upoly_factor(&UniPoly::zero()).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
