//! Univariate real roots: counting, isolation and power sums.
//!
//! Exact polynomials are handled with Sturm sequences over the rationals
//! (after a squarefree decomposition, so multiplicities are exact). Float
//! polynomials go through companion-matrix eigenvalues followed by Newton
//! polishing and cluster analysis.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, UnivariatePolynomial};
use crate::scalar::{rat_to_f64, CoeffMode, GaussRational, Scalar};

/// Default relative tolerance for classifying a computed root as real.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: u32,
    /// Isolating interval: `(lo, hi]` in exact mode, `(value, value)` in float mode.
    pub bounds: (f64, f64),
}

/// Real roots of a univariate polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootList {
    /// Distinct real roots, strictly increasing.
    pub roots: Vec<RealRoot>,
    /// Number of non-real roots, with multiplicity.
    pub complex_count: usize,
    /// Roots whose imaginary part fell in the band between "clearly real"
    /// and "clearly non-real" (float mode only).
    pub inconclusive_count: usize,
    pub mode: CoeffMode,
    pub tol: f64,
}

/// Three-way answer to "are all roots real?".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rootedness {
    AllReal,
    NotAllReal,
    Inconclusive,
}

impl RootList {
    pub fn degree(&self) -> usize {
        self.real_count() + self.complex_count + self.inconclusive_count
    }

    /// Real roots counted with multiplicity.
    pub fn real_count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }

    pub fn rootedness(&self) -> Rootedness {
        if self.complex_count > 0 {
            Rootedness::NotAllReal
        } else if self.inconclusive_count > 0 {
            Rootedness::Inconclusive
        } else {
            Rootedness::AllReal
        }
    }

    /// Sorted real roots, each repeated according to its multiplicity.
    pub fn expanded(&self) -> Vec<f64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity as usize))
            .collect()
    }
}

pub fn real_roots<S: Scalar>(f: &UnivariatePolynomial<S>, tol: f64) -> Result<RootList> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if S::EXACT {
        let g: UnivariatePolynomial<GaussRational> = f.convert();
        exact_real_roots(&g, tol)
    } else {
        let c: Vec<Complex64> = f.coeffs().iter().map(|v| v.to_c64()).collect();
        Ok(float_real_roots(&c, tol))
    }
}

/// `true` iff every root is real. Inconclusive float verdicts count as
/// `false`; use [`rootedness`] to tell them apart.
pub fn all_real<S: Scalar>(f: &UnivariatePolynomial<S>, tol: f64) -> Result<bool> {
    Ok(rootedness(f, tol)? == Rootedness::AllReal)
}

pub fn rootedness<S: Scalar>(f: &UnivariatePolynomial<S>, tol: f64) -> Result<Rootedness> {
    Ok(root_census(f, tol)?.0)
}

/// Rootedness together with the number of real and non-real roots (with
/// multiplicity). Exact mode counts with Sturm sequences and skips isolation.
pub fn root_census<S: Scalar>(
    f: &UnivariatePolynomial<S>,
    tol: f64,
) -> Result<(Rootedness, usize, usize)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if S::EXACT {
        let g: UnivariatePolynomial<GaussRational> = f.convert();
        let deg = g.degree().unwrap();
        let real: usize = real_part_poly(&g)
            .squarefree_decomposition()
            .iter()
            .map(|(factor, mult)| {
                let seq = sturm_sequence(factor);
                let n = variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true);
                n * *mult as usize
            })
            .sum();
        let verdict = if real == deg {
            Rootedness::AllReal
        } else {
            Rootedness::NotAllReal
        };
        Ok((verdict, real, deg - real))
    } else {
        let rl = real_roots(f, tol)?;
        Ok((rl.rootedness(), rl.real_count(), rl.complex_count + rl.inconclusive_count))
    }
}

/// Power sums `p_0, …, p_{k_max}` of the roots of `f`, by Newton's identities.
pub fn power_sums<S: Scalar>(f: &UnivariatePolynomial<S>, k_max: usize) -> Result<Vec<S>> {
    let coeffs: Vec<Polynomial<S>> = f
        .coeffs()
        .iter()
        .map(|c| Polynomial::constant(0, c.clone()))
        .collect();
    let sums = power_sums_symbolic(&coeffs, k_max)?;
    Ok(sums.iter().map(|p| p.coeff(&[])).collect())
}

/// Power sums of the roots of `Σ_k coeffs[k] t^k`, where the coefficients
/// are polynomials in auxiliary variables and the leading one is a nonzero
/// constant.
pub fn power_sums_symbolic<S: Scalar>(
    coeffs: &[Polynomial<S>],
    k_max: usize,
) -> Result<Vec<Polynomial<S>>> {
    let m = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(Error::ZeroPolynomial)?;
    let nv = coeffs[m].nvars();
    let lead = &coeffs[m];
    if lead.degree() != Some(0) {
        return Err(Error::DegreeMismatch(
            "leading coefficient must be a nonzero constant".into(),
        ));
    }
    let inv = S::one() / lead.coeff(&vec![0; nv]);
    // monic: t^m + a_1 t^{m-1} + … + a_m
    let a: Vec<Polynomial<S>> = (0..=m).map(|k| coeffs[m - k].scale(&inv)).collect();
    let mut p: Vec<Polynomial<S>> = Vec::with_capacity(k_max + 1);
    p.push(Polynomial::constant(nv, S::from_i64(m as i64)));
    for k in 1..=k_max {
        let mut acc = Polynomial::zero(nv);
        for i in 1..=k.min(m) {
            if i < k {
                acc = &acc - &(&a[i] * &p[k - i]);
            } else {
                acc = &acc - &a[k].scale(&S::from_i64(k as i64));
            }
        }
        p.push(acc);
    }
    Ok(p)
}

/// Number of distinct real roots of `f` in `(a, b]`. Exact mode only.
pub fn sturm_count<S: Scalar>(f: &UnivariatePolynomial<S>, a: &S, b: &S) -> Result<usize> {
    if !S::EXACT {
        return Err(Error::NeedsExactMode);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.coeffs().iter().all(|c| c.is_real()) || !a.is_real() || !b.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    for e in [a, b] {
        if f.eval(e).is_zero() {
            return Err(Error::EndpointIsRoot(format!("{:?}", e)));
        }
    }
    let g: UnivariatePolynomial<GaussRational> = f.convert();
    let seq = sturm_sequence(&g);
    let a = a.to_exact().unwrap().re;
    let b = b.to_exact().unwrap().re;
    let va = variations_at(&seq, &a);
    let vb = variations_at(&seq, &b);
    Ok(va.saturating_sub(vb))
}

type QPoly = UnivariatePolynomial<GaussRational>;

fn sturm_sequence(f: &QPoly) -> Vec<QPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        seq.push(r.scale(&-GaussRational::one()));
    }
    seq.pop();
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn rsign(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn variations_at(seq: &[QPoly], x: &BigRational) -> usize {
    let xg = GaussRational::real(x.clone());
    sign_changes(seq.iter().map(|p| rsign(&p.eval(&xg).re)))
}

fn variations_at_infinity(seq: &[QPoly], positive: bool) -> usize {
    sign_changes(seq.iter().map(|p| {
        let s = rsign(&p.leading().unwrap().re);
        let odd = p.degree().unwrap() % 2 == 1;
        if !positive && odd {
            -s
        } else {
            s
        }
    }))
}

/// Polynomial whose roots are the real roots of `f` (with multiplicity):
/// for Gaussian coefficients, the gcd of the real and imaginary parts.
fn real_part_poly(f: &QPoly) -> QPoly {
    if f.coeffs().iter().all(|c| c.is_real()) {
        return f.clone();
    }
    let re = QPoly::new(f.coeffs().iter().map(|c| c.re()).collect());
    let im = QPoly::new(f.coeffs().iter().map(|c| c.im()).collect());
    if re.is_zero() {
        im
    } else if im.is_zero() {
        re
    } else {
        re.gcd(&im)
    }
}

fn exact_real_roots(f: &QPoly, tol: f64) -> Result<RootList> {
    let deg = f.degree().unwrap();
    let real_poly = real_part_poly(f);
    let mut roots = Vec::new();
    for (factor, mult) in real_poly.squarefree_decomposition() {
        for (lo, hi, exact) in isolate_squarefree(&factor) {
            let value = match &exact {
                Some(r) => rat_to_f64(r),
                None => (rat_to_f64(&lo) + rat_to_f64(&hi)) / 2.0,
            };
            roots.push(RealRoot {
                value,
                multiplicity: mult,
                bounds: (rat_to_f64(&lo), rat_to_f64(&hi)),
            });
        }
    }
    roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    let real: usize = roots.iter().map(|r| r.multiplicity as usize).sum();
    Ok(RootList {
        roots,
        complex_count: deg - real,
        inconclusive_count: 0,
        mode: CoeffMode::Rational,
        tol,
    })
}

/// Isolating intervals `(lo, hi]` of the real roots of a squarefree real
/// polynomial, refined to relative width about 1e-15. The third component
/// is the root itself when bisection lands on it exactly.
fn isolate_squarefree(f: &QPoly) -> Vec<(BigRational, BigRational, Option<BigRational>)> {
    let seq = sturm_sequence(f);
    let total = variations_at_infinity(&seq, false) - variations_at_infinity(&seq, true);
    if total == 0 {
        return Vec::new();
    }
    let lead = f.leading().unwrap().re.abs();
    let bound = f
        .coeffs()
        .iter()
        .map(|c| c.re.abs() / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
        + BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let eval = |x: &BigRational| f.eval(&GaussRational::real(x.clone())).re;
    let count = |a: &BigRational, b: &BigRational| variations_at(&seq, a) - variations_at(&seq, b);

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(refine(lo, hi, &eval, &count));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        let left = count(&lo, &mid);
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn refine(
    mut lo: BigRational,
    mut hi: BigRational,
    eval: &impl Fn(&BigRational) -> BigRational,
    count: &impl Fn(&BigRational, &BigRational) -> usize,
) -> (BigRational, BigRational, Option<BigRational>) {
    let two = BigRational::from_integer(2.into());
    if eval(&hi).is_zero() {
        return (lo, hi.clone(), Some(hi));
    }
    // Sign bisection needs a nonzero value at the left end; a left endpoint
    // that is itself a root (of a neighbouring interval) is nudged by Sturm
    // counting first.
    while eval(&lo).is_zero() {
        let mid = (&lo + &hi) / &two;
        if eval(&mid).is_zero() {
            return (lo, hi, Some(mid));
        }
        if count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let left_sign = rsign(&eval(&lo));
    for _ in 0..200 {
        let width = rat_to_f64(&(&hi - &lo));
        let mag = rat_to_f64(&hi).abs().max(rat_to_f64(&lo).abs()).max(1.0);
        if width <= 1e-15 * mag {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let sm = rsign(&eval(&mid));
        if sm == 0 {
            return (lo, hi, Some(mid));
        }
        if sm == left_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi, None)
}

/// All complex roots of `f` with multiplicity, from companion eigenvalues
/// polished by Newton steps. Leading coefficients that are negligible
/// relative to the largest one are dropped first.
pub fn complex_roots<S: Scalar>(f: &UnivariatePolynomial<S>) -> Result<Vec<Complex64>> {
    let mut c: Vec<Complex64> = f.coeffs().iter().map(|v| v.to_c64()).collect();
    let scale = c.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::ZeroPolynomial);
    }
    while c.last().is_some_and(|v| v.norm() <= 1e-14 * scale) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let dc = derivative(&c);
    Ok(companion_eigenvalues(&c)
        .into_iter()
        .map(|z| newton_polish(&c, &dc, z))
        .collect())
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, v| acc * z + v)
}

fn horner_abs(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, v| acc * r + v.norm())
}

fn derivative(c: &[Complex64]) -> Vec<Complex64> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, v)| v * k as f64)
        .collect()
}

fn companion_eigenvalues(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    // complex Schur form: the eigenvalues sit on the diagonal of T
    let (_, t) = nalgebra::Schur::new(m).unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

fn newton_polish(c: &[Complex64], dc: &[Complex64], z: Complex64) -> Complex64 {
    let mut z = z;
    let mut best = horner(c, z).norm();
    for _ in 0..8 {
        let d = horner(dc, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = horner(c, z) / d;
        let cand = z - step;
        let v = horner(c, cand).norm();
        if v < best {
            z = cand;
            best = v;
        } else {
            break;
        }
        if step.norm() <= 1e-16 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

fn float_real_roots(c: &[Complex64], tol: f64) -> RootList {
    let scale = c.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut c: Vec<Complex64> = c.to_vec();
    // Coefficients below roundoff relative to the largest one are noise.
    while c.len() > 1 && c.last().unwrap().norm() <= 1e-14 * scale {
        c.pop();
    }
    let mk = |roots, complex_count, inconclusive_count| RootList {
        roots,
        complex_count,
        inconclusive_count,
        mode: CoeffMode::Float,
        tol,
    };
    if c.len() <= 1 {
        return mk(Vec::new(), 0, 0);
    }
    let real_coeffs = c.iter().all(|v| v.im.abs() <= 1e-15 * scale);
    let dc = derivative(&c);
    let eig: Vec<Complex64> = companion_eigenvalues(&c)
        .into_iter()
        .map(|z| newton_polish(&c, &dc, z))
        .collect();
    let n = eig.len();
    let wide = tol.sqrt();

    // cluster eigenvalues lying within `wide` (relative) of each other
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let s = 1.0 + eig[i].norm().max(eig[j].norm());
            if (eig[i] - eig[j]).norm() <= wide * s {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut clusters: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        clusters.entry(r).or_default().push(i);
    }

    let mut reals: Vec<(f64, u32)> = Vec::new();
    let mut complex = 0;
    let mut unsure = 0;
    let classify = |z: Complex64, reals: &mut Vec<(f64, u32)>, complex: &mut usize, unsure: &mut usize| {
        let s = 1.0 + z.norm();
        if z.im.abs() <= tol * s {
            reals.push((z.re, 1));
        } else if z.im.abs() > wide * s {
            *complex += 1;
        } else {
            *unsure += 1;
        }
    };
    for members in clusters.values() {
        let k = members.len();
        if k == 1 {
            classify(eig[members[0]], &mut reals, &mut complex, &mut unsure);
            continue;
        }
        let mean: Complex64 = members.iter().map(|&i| eig[i]).sum::<Complex64>() / k as f64;
        // Try to confirm a k-fold root: Newton on the (k-1)th derivative
        // from the cluster mean, then check the lower derivatives vanish.
        let mut derivs = vec![c.clone()];
        for _ in 1..k {
            let next = derivative(derivs.last().unwrap());
            derivs.push(next);
        }
        let start = if real_coeffs { Complex64::new(mean.re, 0.0) } else { mean };
        let dk = derivative(&derivs[k - 1]);
        let center = newton_polish(&derivs[k - 1], &dk, start);
        let s = 1.0 + center.norm();
        let vanishes = (0..k - 1).all(|j| {
            horner(&derivs[j], center).norm() <= 1e-10 * horner_abs(&derivs[j], center).max(f64::MIN_POSITIVE)
        });
        if vanishes && center.im.abs() <= tol * s {
            reals.push((center.re, k as u32));
        } else {
            for &i in members {
                classify(eig[i], &mut reals, &mut complex, &mut unsure);
            }
        }
    }
    reals.sort_by(|a, b| a.0.total_cmp(&b.0));
    // merge real roots that coincide within tol
    let mut roots: Vec<RealRoot> = Vec::new();
    for (v, m) in reals {
        if let Some(last) = roots.last_mut() {
            if (v - last.value).abs() <= tol * (1.0 + v.abs()) {
                let total = last.multiplicity + m;
                last.value = (last.value * last.multiplicity as f64 + v * m as f64) / total as f64;
                last.multiplicity = total;
                last.bounds = (last.value, last.value);
                continue;
            }
        }
        roots.push(RealRoot {
            value: v,
            multiplicity: m,
            bounds: (v, v),
        });
    }
    mk(roots, complex, unsure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn up(c: &[i64]) -> UnivariatePolynomial<Q> {
        UnivariatePolynomial::new(c.iter().map(|&v| Q::from_i64(v)).collect())
    }

    fn fp(c: &[f64]) -> UnivariatePolynomial<Complex64> {
        UnivariatePolynomial::new(c.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    #[test]
    fn roots_of_t2_minus_1() {
        for rl in [real_roots(&up(&[-1, 0, 1]), DEFAULT_TOL).unwrap(), real_roots(&fp(&[-1.0, 0.0, 1.0]), DEFAULT_TOL).unwrap()] {
            assert_eq!(rl.roots.len(), 2);
            assert!((rl.roots[0].value + 1.0).abs() < 1e-12);
            assert!((rl.roots[1].value - 1.0).abs() < 1e-12);
            assert_eq!(rl.complex_count, 0);
        }
    }

    #[test]
    fn roots_of_t2_plus_1() {
        let rl = real_roots(&up(&[1, 0, 1]), DEFAULT_TOL).unwrap();
        assert!(rl.roots.is_empty());
        assert_eq!(rl.complex_count, 2);
        let rl = real_roots(&fp(&[1.0, 0.0, 1.0]), DEFAULT_TOL).unwrap();
        assert_eq!(rl.complex_count, 2);
    }

    #[test]
    fn double_root_multiplicity() {
        // (t-2)^2 (t+3) = t^3 - t^2 - 8t + 12
        let c = [12, -8, -1, 1];
        let rl = real_roots(&up(&c), DEFAULT_TOL).unwrap();
        assert_eq!(rl.roots.len(), 2);
        assert_eq!((rl.roots[0].value, rl.roots[0].multiplicity), (-3.0, 1));
        assert_eq!((rl.roots[1].value, rl.roots[1].multiplicity), (2.0, 2));
        let rl = real_roots(&fp(&c.map(|v| v as f64)), DEFAULT_TOL).unwrap();
        assert_eq!(rl.rootedness(), Rootedness::AllReal);
        assert_eq!(rl.roots.len(), 2);
        assert_eq!(rl.roots[1].multiplicity, 2);
        assert!((rl.roots[1].value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn all_real_examples() {
        assert!(all_real(&up(&[1, 0, -2]), DEFAULT_TOL).unwrap());
        assert!(!all_real(&up(&[1, 0, 0, 0, -2]), DEFAULT_TOL).unwrap());
        assert!(all_real(&up(&[5]), DEFAULT_TOL).unwrap());
        assert!(all_real(&fp(&[1.0, 0.0, -2.0]), DEFAULT_TOL).unwrap());
        assert!(!all_real(&fp(&[1.0, 0.0, 0.0, 0.0, -2.0]), DEFAULT_TOL).unwrap());
        assert_eq!(real_roots(&up(&[]), DEFAULT_TOL).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn power_sum_examples() {
        let p = power_sums(&up(&[-1, 0, 1]), 2).unwrap();
        assert_eq!(p, vec![Q::from_i64(2), Q::from_i64(0), Q::from_i64(2)]);
        let p = power_sums(&up(&[1, -2, 1]), 2).unwrap();
        assert_eq!(p, vec![Q::from_i64(2), Q::from_i64(2), Q::from_i64(2)]);
    }

    #[test]
    fn symbolic_power_sums() {
        // t^2 - (a^2 + b^2)
        let a = Polynomial::<Q>::var(2, 0);
        let b = Polynomial::<Q>::var(2, 1);
        let r = &(&a * &a) + &(&b * &b);
        let coeffs = vec![-&r, Polynomial::zero(2), Polynomial::one(2)];
        let p = power_sums_symbolic(&coeffs, 2).unwrap();
        assert_eq!(p[2], r.scale(&Q::from_i64(2)));
        assert!(p[1].is_zero());
    }

    #[test]
    fn sturm_examples() {
        let f = up(&[-1, 0, 1]);
        assert_eq!(sturm_count(&f, &Q::from_i64(-2), &Q::from_i64(2)).unwrap(), 2);
        assert_eq!(sturm_count(&f, &Q::from_i64(0), &Q::from_i64(2)).unwrap(), 1);
        assert_eq!(sturm_count(&up(&[1, 0, 1]), &Q::from_i64(-10), &Q::from_i64(10)).unwrap(), 0);
        assert!(matches!(sturm_count(&f, &Q::from_i64(1), &Q::from_i64(2)), Err(Error::EndpointIsRoot(_))));
        assert_eq!(sturm_count(&fp(&[1.0]), &Complex64::new(0.0, 0.0), &Complex64::new(1.0, 0.0)).unwrap_err(), Error::NeedsExactMode);
    }

    #[test]
    fn complex_coefficients_exact() {
        // (t - 1)(t - i) has exactly one real root
        let f = UnivariatePolynomial::from_roots(&[Q::one(), Q::i()]);
        let rl = real_roots(&f, DEFAULT_TOL).unwrap();
        assert_eq!(rl.roots.len(), 1);
        assert_eq!(rl.complex_count, 1);
    }

    #[test]
    fn irrational_roots_are_refined() {
        let rl = real_roots(&up(&[-2, 0, 1]), DEFAULT_TOL).unwrap();
        assert!((rl.roots[1].value - 2f64.sqrt()).abs() < 1e-14);
    }
}
