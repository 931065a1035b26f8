//! Certified complex root isolation for integer polynomials.
//!
//! Rational roots are found exactly. Other roots are approximated with the
//! Aberth iteration in floating point, then every approximation is given an
//! inclusion radius computed in exact rational arithmetic from the Weierstrass
//! corrections: the disks `D(z_i, n |W_i|)` cover the roots and a disk disjoint
//! from all the others contains exactly one root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::factor::upoly_factor;
use super::upoly::UniPoly;
use crate::error::{Error, Result};

/// A root of a polynomial, known to lie within `radius` of `(re, im)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub re: BigRational,
    pub im: BigRational,
    /// Rational upper bound on the distance to the true root; zero when exact.
    pub radius: BigRational,
    pub exact: bool,
    pub multiplicity: u32,
}

impl Root {
    pub fn approx(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    fn modulus_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

#[derive(Serialize)]
struct RootJson {
    re: f64,
    im: f64,
    radius: f64,
    exact: bool,
    multiplicity: u32,
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RootJson {
            re: self.re.to_f64().unwrap_or(f64::NAN),
            im: self.im.to_f64().unwrap_or(f64::NAN),
            radius: self.radius.to_f64().unwrap_or(f64::NAN),
            exact: self.exact,
            multiplicity: self.multiplicity,
        }
        .serialize(s)
    }
}

/// Default isolation tolerance, `10^-9`.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)))
}

/// All complex roots of `d`, listed once per distinct root with its multiplicity.
pub fn upoly_roots(d: &UniPoly, tol: &BigRational) -> Result<Vec<Root>> {
    if !tol.is_positive() {
        return Err(Error::InvalidTolerance);
    }
    if d.deg() == 0 {
        return Err(Error::InvalidInput("root isolation needs a nonconstant polynomial".into()));
    }
    let fa = upoly_factor(d)?;
    let mut out = Vec::new();
    for (f, mult) in &fa.factors {
        if f.deg() == 1 {
            let re = BigRational::new(-f.coeff(0), f.coeff(1));
            out.push(Root {
                re,
                im: BigRational::zero(),
                radius: BigRational::zero(),
                exact: true,
                multiplicity: *mult,
            });
        } else {
            for mut r in isolate_squarefree(f, tol)? {
                r.multiplicity = *mult;
                out.push(r);
            }
        }
    }
    out.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im)));
    Ok(out)
}

/// Outcome of the minimal-modulus test on the roots of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootCondition {
    /// No root of minimal modulus is a positive real number.
    Holds,
    /// Some root of minimal modulus is a positive real number.
    Fails,
    /// The isolation disks at the given tolerance cannot separate the cases.
    Undecided,
}

/// Decides whether any root of minimal absolute value of `r` is a positive real.
pub fn minimal_modulus_condition(r: &UniPoly, tol: &BigRational) -> Result<RootCondition> {
    let roots = upoly_roots(r, tol)?;
    // r(-z) = ±r(z): the roots come in pairs ±z of equal modulus
    let mirrored = r.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero())
        || r.coeffs().iter().step_by(2).all(|c| c.is_zero());
    Ok(decide_minimal_modulus(&roots, mirrored))
}

/// True if exactly one disk meets the disk of root `i` reflected through 0;
/// the root in that disk is then `-z_i`.
fn is_mirror(roots: &[Root], i: usize, j: usize) -> bool {
    let meets = |k: usize| {
        let (a, b) = (&roots[i], &roots[k]);
        let dx = &a.re + &b.re;
        let dy = &a.im + &b.im;
        let s = &a.radius + &b.radius;
        &dx * &dx + &dy * &dy <= &s * &s
    };
    meets(j) && (0..roots.len()).filter(|&k| meets(k)).count() == 1
}

fn decide_minimal_modulus(roots: &[Root], mirrored: bool) -> RootCondition {
    // Intervals [lo, hi] containing the modulus of each root, compared through squares.
    let lo_sq: Vec<BigRational> = roots.iter().map(|r| modulus_lower_sq(r)).collect();
    let hi_sq: Vec<BigRational> = roots.iter().map(|r| modulus_upper_sq(r)).collect();
    let min_hi = hi_sq.iter().min().cloned().unwrap_or_else(BigRational::zero);
    let candidates: Vec<usize> = (0..roots.len()).filter(|&i| lo_sq[i] <= min_hi).collect();
    let positive_real: Vec<Option<bool>> = roots
        .iter()
        .enumerate()
        .map(|(i, _)| classify_positive_real(roots, i))
        .collect();
    if candidates.iter().all(|&i| positive_real[i] == Some(false)) {
        return RootCondition::Holds;
    }
    for &i in &candidates {
        if positive_real[i] == Some(true) {
            let clear = |j: usize| j == i || hi_sq[i] <= lo_sq[j] || (mirrored && is_mirror(roots, i, j));
            if (0..roots.len()).all(clear) {
                return RootCondition::Fails;
            }
        }
    }
    RootCondition::Undecided
}

fn modulus_upper_sq(r: &Root) -> BigRational {
    // (|c| + rad)^2 <= |c|^2 + 2 rad |c|_1 + rad^2.
    let l1 = r.re.abs() + r.im.abs();
    r.modulus_sq() + BigRational::from_integer(2.into()) * &r.radius * l1 + &r.radius * &r.radius
}

fn modulus_lower_sq(r: &Root) -> BigRational {
    // (|c| - rad)^2 >= |c|^2 - 2 rad |c|_1 + rad^2 once |c| >= rad.
    let m2 = r.modulus_sq();
    let r2 = &r.radius * &r.radius;
    if m2 <= r2 {
        return BigRational::zero();
    }
    let l1 = r.re.abs() + r.im.abs();
    let v = m2 - BigRational::from_integer(2.into()) * &r.radius * l1 + r2;
    if v.is_positive() {
        v
    } else {
        BigRational::zero()
    }
}

/// `Some(true)` if root `i` is certainly a positive real, `Some(false)` if
/// certainly not, `None` if the disks do not decide.
fn classify_positive_real(roots: &[Root], i: usize) -> Option<bool> {
    let r = &roots[i];
    if r.exact {
        return Some(r.im.is_zero() && r.re.is_positive());
    }
    if r.im.abs() > r.radius {
        return Some(false);
    }
    // The conjugate of the root lies in the mirrored disk; the disk of radius
    // 2*radius around the real projection contains both. If it meets no other
    // disk, the root equals its own conjugate and is real.
    let two = BigRational::from_integer(2.into());
    let big = &two * &r.radius;
    let isolated = roots.iter().enumerate().all(|(j, o)| {
        if j == i {
            return true;
        }
        let dx = &o.re - &r.re;
        let dy = o.im.clone();
        let dist_sq = &dx * &dx + &dy * &dy;
        let s = &big + &o.radius;
        dist_sq > &s * &s
    });
    if !isolated {
        return None;
    }
    if r.re.abs() <= big {
        return None;
    }
    Some(r.re.is_positive())
}

/// Roots of a squarefree polynomial of degree at least two, each certified.
fn isolate_squarefree(f: &UniPoly, tol: &BigRational) -> Result<Vec<Root>> {
    let approx = aberth(f);
    let mut centers: Vec<(BigRational, BigRational)> = approx
        .iter()
        .map(|z| (to_rational(z.re), to_rational(z.im)))
        .collect();
    let tol_sq = tol * tol;
    let mut bits = 64u32;
    for _round in 0..12 {
        let radii_sq = inclusion_radii_sq(f, &centers);
        if let Some(radii_sq) = radii_sq {
            let small = radii_sq.iter().all(|r| *r <= tol_sq);
            if small && disjoint(&centers, &radii_sq) {
                return Ok(centers
                    .into_iter()
                    .zip(radii_sq.iter())
                    .map(|((re, im), r2)| Root {
                        re,
                        im,
                        radius: sqrt_upper(r2),
                        exact: false,
                        multiplicity: 1,
                    })
                    .collect());
            }
        }
        bits *= 2;
        centers = centers
            .iter()
            .map(|c| newton_step(f, c, bits))
            .collect();
    }
    Err(Error::ToleranceUndecided(format!(
        "could not isolate the roots of {f} to within the requested tolerance"
    )))
}

fn to_rational(x: f64) -> BigRational {
    BigRational::from_f64(x).unwrap_or_else(BigRational::zero)
}

fn round_to_bits(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let n = (x * BigRational::from_integer(scale.clone())).round().to_integer();
    BigRational::new(n, scale)
}

type QC = (BigRational, BigRational);

fn cmul(a: &QC, b: &QC) -> QC {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn csub(a: &QC, b: &QC) -> QC {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cnorm_sq(a: &QC) -> BigRational {
    &a.0 * &a.0 + &a.1 * &a.1
}

fn ceval(f: &UniPoly, z: &QC) -> QC {
    let mut acc: QC = (BigRational::zero(), BigRational::zero());
    for c in f.coeffs().iter().rev() {
        acc = cmul(&acc, z);
        acc.0 += BigRational::from_integer(c.clone());
    }
    acc
}

/// Squared inclusion radii `n^2 |f(z_i)|^2 / (lc^2 prod |z_i - z_j|^2)`.
fn inclusion_radii_sq(f: &UniPoly, centers: &[QC]) -> Option<Vec<BigRational>> {
    let n = BigRational::from_integer(BigInt::from(centers.len()));
    let lc = BigRational::from_integer(f.leading_coeff());
    let mut out = Vec::with_capacity(centers.len());
    for (i, zi) in centers.iter().enumerate() {
        let mut denom = &lc * &lc;
        for (j, zj) in centers.iter().enumerate() {
            if i != j {
                denom *= cnorm_sq(&csub(zi, zj));
            }
        }
        if denom.is_zero() {
            return None;
        }
        out.push(&n * &n * cnorm_sq(&ceval(f, zi)) / denom);
    }
    Some(out)
}

/// Exact test that all disks with the given squared radii are pairwise disjoint.
fn disjoint(centers: &[QC], radii_sq: &[BigRational]) -> bool {
    let four = BigRational::from_integer(4.into());
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            let d2 = cnorm_sq(&csub(&centers[i], &centers[j]));
            // r_i + r_j < d  <=>  d2 - ri2 - rj2 > 0 and (d2 - ri2 - rj2)^2 > 4 ri2 rj2
            let t = &d2 - &radii_sq[i] - &radii_sq[j];
            if !t.is_positive() || &t * &t <= &four * &radii_sq[i] * &radii_sq[j] {
                return false;
            }
        }
    }
    true
}

/// A rational number at least `sqrt(x)`.
fn sqrt_upper(x: &BigRational) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let approx = x.to_f64().unwrap_or(f64::MAX).sqrt();
    let mut r = to_rational(approx * (1.0 + 1e-12) + f64::MIN_POSITIVE);
    while &r * &r < *x {
        r = &r * BigRational::from_integer(2.into());
    }
    r
}

fn newton_step(f: &UniPoly, z: &QC, bits: u32) -> QC {
    let fz = ceval(f, z);
    let dz = ceval(&f.derivative(), z);
    let den = cnorm_sq(&dz);
    if den.is_zero() {
        return z.clone();
    }
    // fz / dz = fz * conj(dz) / |dz|^2
    let q = cmul(&fz, &(dz.0.clone(), -dz.1.clone()));
    let step = (q.0 / &den, q.1 / &den);
    let nz = csub(z, &step);
    (round_to_bits(&nz.0, bits), round_to_bits(&nz.1, bits))
}

/// Simultaneous approximation of all roots by the Aberth iteration.
fn aberth(f: &UniPoly) -> Vec<Complex64> {
    let n = f.deg();
    let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap_or(0.0)).collect();
    let dc: Vec<f64> = (1..=n).map(|i| c[i] * i as f64).collect();
    let eval = |cs: &[f64], z: Complex64| {
        cs.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    };
    // Initial points on a circle of the Cauchy-type radius.
    let lc = c[n].abs();
    let radius = c[..n]
        .iter()
        .enumerate()
        .map(|(i, a)| (a.abs() / lc).powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let fz = eval(&c, z[i]);
            let dfz = eval(&dc, z[i]);
            if fz.norm() == 0.0 {
                continue;
            }
            let ratio = fz / dfz;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                max_step = max_step.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn tie_with_the_negative_root() {
        let tol = default_tolerance();
        assert_eq!(minimal_modulus_condition(&u(&[-2, 0, 3]), &tol).unwrap(), RootCondition::Fails);
        assert_eq!(minimal_modulus_condition(&u(&[1, -1, 1]), &tol).unwrap(), RootCondition::Holds);
    }

    #[test]
    fn linear_roots_are_exact() {
        let r = upoly_roots(&u(&[1, 1]), &default_tolerance()).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].exact);
        assert_eq!(r[0].re, BigRational::from_integer((-1).into()));
        let r = upoly_roots(&u(&[1, -2]), &default_tolerance()).unwrap();
        assert_eq!(r[0].re, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn sixth_roots_of_unity() {
        let tol = default_tolerance();
        let r = upoly_roots(&u(&[1, -1, 1]), &tol).unwrap();
        assert_eq!(r.len(), 2);
        let s3 = 3f64.sqrt() / 2.0;
        for root in &r {
            let z = root.approx();
            assert!((z.re - 0.5).abs() < 1e-9);
            assert!((z.im.abs() - s3).abs() < 1e-9);
            assert!(root.radius <= tol);
        }
        assert_eq!(minimal_modulus_condition(&u(&[1, -1, 1]), &tol).unwrap(), RootCondition::Holds);
    }

    #[test]
    fn positive_real_minimum_fails() {
        let tol = default_tolerance();
        assert_eq!(minimal_modulus_condition(&u(&[1, -2]), &tol).unwrap(), RootCondition::Fails);
        // 1 - 3z + z^2 has roots (3 +- sqrt 5)/2, both positive reals.
        assert_eq!(minimal_modulus_condition(&u(&[1, -3, 1]), &tol).unwrap(), RootCondition::Fails);
        assert_eq!(minimal_modulus_condition(&u(&[1, 3, 1]), &tol).unwrap(), RootCondition::Holds);
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert_eq!(upoly_roots(&u(&[1, 1]), &BigRational::zero()), Err(Error::InvalidTolerance));
    }

    #[test]
    fn multiplicities_are_reported() {
        let f = u(&[1, 1]).pow(3).mul(&u(&[2, 0, 1]));
        let r = upoly_roots(&f, &default_tolerance()).unwrap();
        let total: u32 = r.iter().map(|x| x.multiplicity).sum();
        assert_eq!(total, 5);
    }
}
