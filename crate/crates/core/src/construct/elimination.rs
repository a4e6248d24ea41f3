//! Intersection points of two plane curves by resultant elimination, and
//! the smoothness test built on the same machinery.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{HomogeneousPolynomial, PolyMatrix, Polynomial, ProjectivePoint, UnivariatePolynomial};
use crate::realroots::complex_roots;
use crate::sampling::{normal, stream};
use crate::scalar::{approx_rational, Scalar};

use super::{Divisor, DivisorPoint};

/// Coordinate changes tried before giving up on general position.
pub const CHART_ATTEMPTS: usize = 5;

/// Largest denominator tried when recovering exact intersection coordinates.
const MAX_DENOMINATOR: i64 = 1 << 24;

/// Random invertible 3×3 matrix: small integers in exact mode, Gaussian
/// entries in float mode.
pub(crate) fn random_change<S: Scalar>(rng: &mut ChaCha8Rng) -> Vec<Vec<S>> {
    loop {
        let m: Vec<Vec<S>> = (0..3)
            .map(|_| {
                (0..3)
                    .map(|_| {
                        if S::EXACT {
                            S::from_i64(rng.random_range(-4..=4))
                        } else {
                            S::from_f64(normal(rng))
                        }
                    })
                    .collect()
            })
            .collect();
        let det = crate::linalg::det(&m);
        if !det.negligible(1.0, 1e-3) {
            return m;
        }
    }
}

/// `Y ↦ F(M·Y)`.
pub(crate) fn change_coordinates<S: Scalar>(
    f: &HomogeneousPolynomial<S>,
    m: &[Vec<S>],
) -> Result<HomogeneousPolynomial<S>> {
    let images: Vec<Polynomial<S>> = m
        .iter()
        .map(|row| Polynomial::linear(S::zero(), row))
        .collect();
    HomogeneousPolynomial::new(f.poly().compose(&images)?, f.degree())
}

pub(crate) fn apply<S: Scalar>(m: &[Vec<S>], y: &[S]) -> Vec<S> {
    m.iter()
        .map(|row| row.iter().zip(y).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
        .collect()
}

/// Coefficients of `f(y1, y2)` as a polynomial in `y2`, each a polynomial
/// in `y1` (one variable).
fn coefficients_in_last<S: Scalar>(f: &Polynomial<S>) -> Vec<Polynomial<S>> {
    let deg = f.degree_in(1).unwrap_or(0) as usize;
    let mut out = vec![Polynomial::zero(1); deg + 1];
    for (e, c) in f.terms() {
        let mut t = Polynomial::zero(1);
        t.add_term(vec![e[0]], c.clone());
        out[e[1] as usize] = &out[e[1] as usize] + &t;
    }
    out
}

fn to_univariate<S: Scalar>(p: &Polynomial<S>) -> UnivariatePolynomial<S> {
    let deg = p.degree().unwrap_or(0) as usize;
    UnivariatePolynomial::new((0..=deg).map(|k| p.coeff(&[k as u32])).collect())
}

/// `Res_{y2}(f, g)` as a polynomial in `y1`, via the Sylvester matrix.
pub(crate) fn resultant_last<S: Scalar>(f: &Polynomial<S>, g: &Polynomial<S>) -> Result<UnivariatePolynomial<S>> {
    let fc = coefficients_in_last(f);
    let gc = coefficients_in_last(g);
    let a = fc.len() - 1;
    let b = gc.len() - 1;
    let n = a + b;
    if n == 0 {
        return Ok(UnivariatePolynomial::one());
    }
    let mut syl = PolyMatrix::zeros(n, n, 1);
    for i in 0..b {
        for k in 0..=a {
            syl.set(i, i + k, fc[a - k].clone());
        }
    }
    for i in 0..a {
        for k in 0..=b {
            syl.set(b + i, i + k, gc[b - k].clone());
        }
    }
    Ok(to_univariate(&syl.determinant(n)?))
}

/// Substitute `y1 = v` into a polynomial in `(y1, y2)`.
fn fix_first<S: Scalar>(f: &Polynomial<S>, v: &S) -> UnivariatePolynomial<S> {
    let deg = f.degree_in(1).unwrap_or(0) as usize;
    let mut c = vec![S::zero(); deg + 1];
    for (e, coef) in f.terms() {
        c[e[1] as usize] = c[e[1] as usize].clone() + coef.clone() * v.powi(e[0]);
    }
    UnivariatePolynomial::new(c)
}

fn rel_value(f: &Polynomial<Complex64>, z: &[Complex64]) -> f64 {
    f.eval_c64(z).norm() / f.abs_eval(z).max(f64::MIN_POSITIVE)
}

/// A chart in which both curves have full degree in `y2` and no common
/// point on the line `Y_0 = 0`.
struct Chart<S> {
    m: Vec<Vec<S>>,
    f: Polynomial<S>,
    g: Polynomial<S>,
}

fn leading_ok<S: Scalar>(form: &HomogeneousPolynomial<S>) -> bool {
    let lead = form.poly().coeff(&[0, 0, form.degree()]);
    !lead.negligible(form.poly().max_coeff(), 1e-8)
}

/// `true` when `u` and `v` (univariate) have a common root.
fn share_root<S: Scalar>(u: &UnivariatePolynomial<S>, v: &UnivariatePolynomial<S>) -> Result<bool> {
    if u.is_zero() || v.is_zero() {
        return Ok(true);
    }
    if u.degree() == Some(0) || v.degree() == Some(0) {
        return Ok(false);
    }
    if S::EXACT {
        return Ok(u.gcd(v).degree() != Some(0));
    }
    let vc = v.convert::<Complex64>();
    let vscale = vc.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    for r in complex_roots(u)? {
        let mag: f64 = vc
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.norm() * r.norm().powi(k as i32))
            .sum();
        if vc.eval_c64(r).norm() <= 1e-8 * mag.max(vscale) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn make_chart<S: Scalar>(
    forms: &[&HomogeneousPolynomial<S>],
    rng: &mut ChaCha8Rng,
) -> Result<Option<(Vec<Vec<S>>, Vec<HomogeneousPolynomial<S>>)>> {
    let m = random_change::<S>(rng);
    let moved: Vec<HomogeneousPolynomial<S>> = forms
        .iter()
        .map(|f| change_coordinates(f, &m))
        .collect::<Result<_>>()?;
    if !moved.iter().all(leading_ok) {
        return Ok(None);
    }
    Ok(Some((m, moved)))
}

/// Forms restricted to `Y_0 = 0, Y_1 = 1` as polynomials in `Y_2`.
fn at_infinity<S: Scalar>(f: &HomogeneousPolynomial<S>) -> UnivariatePolynomial<S> {
    let deg = f.degree() as usize;
    let mut c = vec![S::zero(); deg + 1];
    for (e, coef) in f.poly().terms() {
        if e[0] == 0 {
            c[e[2] as usize] = c[e[2] as usize].clone() + coef.clone();
        }
    }
    UnivariatePolynomial::new(c)
}

fn find_chart<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Chart<S>>> {
    let Some((m, moved)) = make_chart(&[p, q], rng)? else {
        return Ok(None);
    };
    if share_root(&at_infinity(&moved[0]), &at_infinity(&moved[1]))? {
        return Ok(None);
    }
    Ok(Some(Chart {
        m,
        f: moved[0].dehomogenize(),
        g: moved[1].dehomogenize(),
    }))
}

/// Newton refinement of a simple common root of `f`, `g` in `(y1, y2)`.
fn newton2(f: &Polynomial<Complex64>, g: &Polynomial<Complex64>, z: [Complex64; 2]) -> [Complex64; 2] {
    let fx = f.partial_derivative(0);
    let fy = f.partial_derivative(1);
    let gx = g.partial_derivative(0);
    let gy = g.partial_derivative(1);
    let resid = |z: &[Complex64; 2]| rel_value(f, z) + rel_value(g, z);
    let mut z = z;
    let mut best = resid(&z);
    for _ in 0..20 {
        let (a, b, c, d) = (fx.eval_c64(&z), fy.eval_c64(&z), gx.eval_c64(&z), gy.eval_c64(&z));
        let det = a * d - b * c;
        if det.norm() < 1e-300 {
            break;
        }
        let (fv, gv) = (f.eval_c64(&z), g.eval_c64(&z));
        let dz0 = (d * fv - b * gv) / det;
        let dz1 = (a * gv - c * fv) / det;
        let cand = [z[0] - dz0, z[1] - dz1];
        let r = resid(&cand);
        if !(r < best) {
            break;
        }
        z = cand;
        best = r;
        if dz0.norm() + dz1.norm() <= 1e-15 * (1.0 + z[0].norm() + z[1].norm()) {
            break;
        }
    }
    z
}

/// Raw intersection points in the chart with multiplicities.
type ChartPoints<S> = Vec<([S; 2], u32)>;

fn exact_points<S: Scalar>(chart: &Chart<S>, res: &UnivariatePolynomial<S>) -> Result<Option<ChartPoints<S>>> {
    let mut out = Vec::new();
    for (factor, mult) in res.squarefree_decomposition() {
        for z in complex_roots(&factor)? {
            let y1 = S::from_parts(
                approx_rational(z.re, MAX_DENOMINATOR),
                approx_rational(z.im, MAX_DENOMINATOR),
            );
            if !factor.eval(&y1).is_zero() {
                return Err(Error::ExactRecovery);
            }
            let common = fix_first(&chart.f, &y1).gcd(&fix_first(&chart.g, &y1));
            if common.degree() != Some(1) {
                return Ok(None);
            }
            let c = common.coeffs();
            let y2 = -c[0].clone() / c[1].clone();
            out.push(([y1, y2], mult));
        }
    }
    Ok(Some(out))
}

fn float_points<S: Scalar>(chart: &Chart<S>, res: &UnivariatePolynomial<S>) -> Result<Option<ChartPoints<S>>> {
    let f = chart.f.convert::<Complex64>();
    let g = chart.g.convert::<Complex64>();
    let mut refined: Vec<(Complex64, [Complex64; 2])> = Vec::new();
    for y1 in complex_roots(res)? {
        let slice = fix_first(&f, &y1);
        let mut cands: Vec<(f64, Complex64)> = complex_roots(&slice)?
            .into_iter()
            .map(|y2| (rel_value(&g, &[y1, y2]), y2))
            .collect();
        cands.sort_by(|a, b| a.0.total_cmp(&b.0));
        let Some(&(best, y2)) = cands.first() else {
            return Ok(None);
        };
        if best > 1e-4 {
            return Ok(None);
        }
        if let Some(&(second, other)) = cands.get(1) {
            let scale = 1.0 + y2.norm();
            if second < 1e-6 && (other - y2).norm() > 1e-4 * scale {
                // two intersection points over the same y1
                return Ok(None);
            }
        }
        refined.push((y1, newton2(&f, &g, [y1, y2])));
    }
    // (centre, multiplicity, spread of the unrefined y1 values)
    let mut clusters: Vec<([Complex64; 2], u32, Vec<Complex64>)> = Vec::new();
    for (y1, z) in refined {
        let scale = 1.0 + z[0].norm() + z[1].norm();
        match clusters
            .iter_mut()
            .find(|(c, _, _)| (c[0] - z[0]).norm() + (c[1] - z[1]).norm() <= 1e-5 * scale)
        {
            Some((c, k, raw)) => {
                let w = *k as f64;
                c[0] = (c[0] * w + z[0]) / (w + 1.0);
                c[1] = (c[1] * w + z[1]) / (w + 1.0);
                *k += 1;
                raw.push(y1);
            }
            None => clusters.push((z, 1, vec![y1])),
        }
    }
    // Newton sending two well-separated resultant roots to one point means
    // the projection mixed up nearby intersection points.
    for (c, _, raw) in &clusters {
        let scale = 1.0 + c[0].norm();
        if raw.iter().any(|y| (y - c[0]).norm() > 1e-4 * scale) {
            return Ok(None);
        }
    }
    let clusters: Vec<([Complex64; 2], u32)> = clusters.into_iter().map(|(c, k, _)| (c, k)).collect();
    Ok(Some(
        clusters
            .into_iter()
            .map(|(z, k)| ([S::from_c64(z[0]), S::from_c64(z[1])], k))
            .collect(),
    ))
}

/// Tolerance on the imaginary part for a float point to count as real.
/// Clustered points are only located to about the square root of the
/// working precision.
fn real_tol(multiplicity: u32) -> f64 {
    if multiplicity > 1 {
        1e-5
    } else {
        1e-8
    }
}

/// Pair each non-real point with its coordinatewise conjugate. Float points
/// judged real are replaced by their real parts.
fn pair_conjugates<S: Scalar>(points: Vec<(ProjectivePoint<S>, u32)>) -> Result<Option<Divisor<S>>> {
    let mut points = points;
    let mut real = Vec::with_capacity(points.len());
    for (p, k) in points.iter_mut() {
        let r = p.is_real(real_tol(*k));
        if r && !S::EXACT {
            *p = ProjectivePoint::new(p.coords().iter().map(|c| c.re()).collect())?;
        }
        real.push(r);
    }
    let mut partner = vec![None; points.len()];
    for i in 0..points.len() {
        if real[i] || partner[i].is_some() {
            continue;
        }
        let target = points[i].0.conj();
        let Some((j, dist)) = (0..points.len())
            .filter(|&j| j != i && !real[j] && partner[j].is_none())
            .map(|j| (j, points[j].0.distance(&target)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
        else {
            return Ok(None);
        };
        let scale = points[i].0.coords().iter().map(|c| c.magnitude()).fold(1.0, f64::max);
        let tol = if S::EXACT { 0.0 } else { real_tol(points[i].1) * scale };
        if dist > tol || points[i].1 != points[j].1 {
            return Ok(None);
        }
        partner[i] = Some(j);
        partner[j] = Some(i);
    }
    Ok(Some(Divisor {
        points: points
            .into_iter()
            .zip(partner)
            .map(|((point, multiplicity), partner)| DivisorPoint {
                point,
                multiplicity,
                partner,
            })
            .collect(),
    }))
}

/// Intersection divisor of the curves `P = 0` (degree `m`) and `Q = 0`
/// (degree `m − 1`): points with multiplicities, total degree `m(m−1)`.
///
/// A seeded random projective change moves the curves into general
/// position; `y2` is eliminated by a resultant, and points are lifted back
/// by a common root in `y2`. Exact mode recovers Gaussian-rational points
/// and fails with [`Error::ExactRecovery`] when they are not.
pub fn intersection_divisor<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    q: &HomogeneousPolynomial<S>,
    seed: u64,
) -> Result<Divisor<S>> {
    if p.nvars() != 3 || q.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: p.nvars() });
    }
    let m = p.degree();
    if q.degree() + 1 != m {
        return Err(Error::DegreeMismatch(format!(
            "interlacer of degree {} for a curve of degree {m}",
            q.degree()
        )));
    }
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let expected = m * (m - 1);
    let mut last_degree = None;
    for attempt in 0..CHART_ATTEMPTS {
        let mut rng = stream(seed, 1000 + attempt as u64);
        let Some(chart) = find_chart(p, q, &mut rng)? else {
            continue;
        };
        let res = resultant_last(&chart.f, &chart.g)?;
        if res.is_zero() {
            return Err(Error::NotRelativelyPrime);
        }
        if res.degree() != Some(expected as usize) {
            last_degree = res.degree();
            continue;
        }
        let pts = if S::EXACT {
            exact_points(&chart, &res)?
        } else {
            float_points(&chart, &res)?
        };
        let Some(pts) = pts else {
            continue;
        };
        let total: u32 = pts.iter().map(|(_, k)| k).sum();
        if total != expected {
            last_degree = Some(total as usize);
            continue;
        }
        let projective = pts
            .into_iter()
            .map(|(y, k)| {
                let x = apply(&chart.m, &[S::one(), y[0].clone(), y[1].clone()]);
                Ok((ProjectivePoint::new(x)?, k))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(div) = pair_conjugates(projective)? {
            return Ok(div);
        }
    }
    match last_degree {
        Some(got) => Err(Error::DivisorDegree {
            expected,
            got: got as u32,
        }),
        None => Err(Error::GeneralPosition(CHART_ATTEMPTS)),
    }
}

/// Fails with [`Error::SingularCurve`] when the partial derivatives of `P`
/// have a common projective zero.
///
/// Singular points are common zeros of three random combinations
/// `g_1, g_2, g_3` of the partials. Their `y1`-coordinates are common roots
/// of `Res(g_1, g_2)` and `Res(g_1, g_3)`: exact mode asks for a nontrivial
/// gcd, float mode lifts candidates and tests all three. A spurious
/// coincidence does not survive a fresh coordinate change, so the curve is
/// declared singular only when every attempt finds a candidate.
pub fn check_smooth<S: Scalar>(p: &HomogeneousPolynomial<S>, seed: u64) -> Result<()> {
    if p.degree() <= 1 {
        return Ok(());
    }
    if p.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: p.nvars() });
    }
    let partials: Vec<Polynomial<S>> = (0..3).map(|a| p.poly().partial_derivative(a)).collect();
    let mut combos_ok = 0;
    for attempt in 0..CHART_ATTEMPTS {
        let mut rng = stream(seed, 2000 + attempt as u64);
        let combos: Vec<HomogeneousPolynomial<S>> = (0..3)
            .map(|_| {
                let mut acc = Polynomial::zero(3);
                for d in &partials {
                    let c = if S::EXACT {
                        S::from_i64(rng.random_range(-5..=5))
                    } else {
                        S::from_f64(normal(&mut rng))
                    };
                    acc = &acc + &d.scale(&c);
                }
                HomogeneousPolynomial::new(acc, p.degree() - 1)
            })
            .collect::<Result<_>>()?;
        if combos.iter().any(|c| c.is_zero()) {
            continue;
        }
        let refs: Vec<&HomogeneousPolynomial<S>> = combos.iter().collect();
        let Some((_, moved)) = make_chart(&refs, &mut rng)? else {
            continue;
        };
        combos_ok += 1;
        let inf: Vec<UnivariatePolynomial<S>> = moved.iter().map(at_infinity).collect();
        let infinite_candidate = if S::EXACT {
            inf[0].gcd(&inf[1]).gcd(&inf[2]).degree() != Some(0)
        } else {
            let mut hit = false;
            for r in complex_roots(&inf[0])? {
                let small = |u: &UnivariatePolynomial<S>| {
                    let uc = u.convert::<Complex64>();
                    let mag: f64 = uc
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| c.norm() * r.norm().powi(k as i32))
                        .sum();
                    uc.eval_c64(r).norm() <= 1e-7 * mag.max(f64::MIN_POSITIVE)
                };
                if small(&inf[1]) && small(&inf[2]) {
                    hit = true;
                }
            }
            hit
        };
        let g: Vec<Polynomial<S>> = moved.iter().map(|f| f.dehomogenize()).collect();
        let r12 = resultant_last(&g[0], &g[1])?;
        let r13 = resultant_last(&g[0], &g[2])?;
        let finite_candidate = if r12.is_zero() || r13.is_zero() {
            true
        } else if S::EXACT {
            r12.gcd(&r13).degree() != Some(0)
        } else {
            let gf: Vec<Polynomial<Complex64>> = g.iter().map(|f| f.convert()).collect();
            let mut hit = false;
            for y1 in complex_roots(&r12)? {
                for y2 in complex_roots(&fix_first(&gf[0], &y1))? {
                    let z = [y1, y2];
                    if gf.iter().all(|f| rel_value(f, &z) <= 1e-7) {
                        hit = true;
                    }
                }
            }
            hit
        };
        if !infinite_candidate && !finite_candidate {
            return Ok(());
        }
    }
    if combos_ok == 0 {
        return Err(Error::GeneralPosition(CHART_ATTEMPTS));
    }
    Err(Error::SingularCurve("the partial derivatives share a common zero".into()))
}
