//! Linear algebra on spaces of ternary forms: splitting the divisor, the
//! forms vanishing on one half, the rank-one completion of `V`, and the
//! pencil read off from its adjugate.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{conj_transpose, mat_mul, nullspace, solve_unique, udu_upper, upper_triangular_inverse};
use crate::poly::{HomogeneousPolynomial, Monomial, PolyMatrix, Polynomial, ProjectivePoint};
use crate::sampling::stream;
use crate::scalar::Scalar;

use super::{Divisor, DivisorPoint};

/// Exponent vectors of all ternary monomials of degree `k`, in a fixed order.
pub fn monomials(k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            out.push(vec![a, b, k - a - b]);
        }
    }
    out
}

fn monomial_value<S: Scalar>(e: &[u32], x: &[S]) -> S {
    e.iter().zip(x).fold(S::one(), |acc, (&k, v)| acc * v.powi(k))
}

/// Derivative of `x^e` along `t` at `x`.
fn monomial_derivative<S: Scalar>(e: &[u32], x: &[S], t: &[S]) -> S {
    let mut acc = S::zero();
    for a in 0..e.len() {
        if e[a] == 0 {
            continue;
        }
        let mut term = S::from_i64(e[a] as i64) * t[a].clone();
        for b in 0..e.len() {
            let k = if a == b { e[b] - 1 } else { e[b] };
            term = term * x[b].clone().powi(k);
        }
        acc = acc + term;
    }
    acc
}

pub(crate) fn form_from_coeffs<S: Scalar>(basis: &[Monomial], coeffs: &[S], degree: u32) -> HomogeneousPolynomial<S> {
    let mut p = Polynomial::zero(3);
    for (e, c) in basis.iter().zip(coeffs) {
        p.add_term(e.clone(), c.clone());
    }
    HomogeneousPolynomial::new(p, degree).expect("monomials share the degree")
}

fn coeffs_of<S: Scalar>(basis: &[Monomial], f: &Polynomial<S>) -> Vec<S> {
    basis.iter().map(|e| f.coeff(e)).collect()
}

/// Split a divisor into halves `D` and `Dτ = conj(D)`, taking one member of
/// each conjugate pair according to `take_first[k]` for the `k`-th pair
/// (ordered by the index of its first member). Real points must meet the
/// curve with multiplicity exactly 2 and go into both halves once.
pub fn split_divisor_with<S: Scalar>(div: &Divisor<S>, take_first: &[bool]) -> Result<(Divisor<S>, Divisor<S>)> {
    let mut half = Vec::new();
    let mut pair = 0;
    for (i, pt) in div.points.iter().enumerate() {
        match pt.partner {
            None => match pt.multiplicity {
                2 => half.push(DivisorPoint {
                    point: pt.point.clone(),
                    multiplicity: 1,
                    partner: None,
                }),
                k if k % 2 == 1 => return Err(Error::OddRealMultiplicity(k)),
                k => return Err(Error::HigherContact(k)),
            },
            Some(j) if j > i => {
                let choice = take_first.get(pair).copied().ok_or_else(|| {
                    Error::Precondition(format!("split needs {} choices", div.pair_count()))
                })?;
                pair += 1;
                let chosen = if choice { pt } else { &div.points[j] };
                half.push(DivisorPoint {
                    point: chosen.point.clone(),
                    multiplicity: chosen.multiplicity,
                    partner: None,
                });
            }
            Some(_) => {}
        }
    }
    let conj = half
        .iter()
        .map(|p| DivisorPoint {
            point: p.point.conj(),
            multiplicity: p.multiplicity,
            partner: None,
        })
        .collect();
    Ok((Divisor { points: half }, Divisor { points: conj }))
}

/// Seeded choice of one member per conjugate pair.
pub fn split_choices(pairs: usize, seed: u64) -> Vec<bool> {
    let mut rng = stream(seed, 3000);
    (0..pairs).map(|_| rng.random::<bool>()).collect()
}

/// [`split_divisor_with`] with choices drawn from `seed`.
pub fn split_divisor<S: Scalar>(div: &Divisor<S>, seed: u64) -> Result<(Divisor<S>, Divisor<S>)> {
    split_divisor_with(div, &split_choices(div.pair_count(), seed))
}

/// Relative singular-value threshold for the interpolation nullspace.
const NULL_TOL: f64 = 1e-7;

/// A basis of the degree-`(m−1)` forms vanishing on `half`, where a point of
/// multiplicity 2 also imposes vanishing of the derivative along the
/// tangent of `P = 0`.
pub fn vanishing_basis<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    half: &Divisor<S>,
) -> Result<Vec<HomogeneousPolynomial<S>>> {
    let m = p.degree();
    let expected_deg = m * (m - 1) / 2;
    if half.degree() != expected_deg {
        return Err(Error::DivisorDegree {
            expected: expected_deg,
            got: half.degree(),
        });
    }
    let basis = monomials(m - 1);
    let grad: Vec<Polynomial<S>> = (0..3).map(|a| p.poly().partial_derivative(a)).collect();
    let mut rows: Vec<Vec<S>> = Vec::new();
    for pt in &half.points {
        let x = pt.point.coords();
        rows.push(basis.iter().map(|e| monomial_value(e, x)).collect());
        match pt.multiplicity {
            1 => {}
            2 => {
                let g: Vec<S> = grad.iter().map(|d| d.evaluate(x)).collect::<Result<_>>()?;
                let t = cross(&g, x);
                rows.push(basis.iter().map(|e| monomial_derivative(e, x, &t)).collect());
            }
            k => return Err(Error::HigherContact(k)),
        }
    }
    let null = nullspace(&rows, basis.len(), NULL_TOL);
    if null.len() != m as usize {
        return Err(Error::BasisDimension {
            expected: m as usize,
            got: null.len(),
        });
    }
    Ok(null
        .iter()
        .map(|v| form_from_coeffs(&basis, v, m - 1))
        .collect())
}

fn cross<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Reorder `basis` so that it starts with `q`: `q` replaces the basis
/// element with the largest coefficient in its expansion.
pub fn rotate_basis<S: Scalar>(
    basis: &[HomogeneousPolynomial<S>],
    q: &HomogeneousPolynomial<S>,
) -> Result<Vec<HomogeneousPolynomial<S>>> {
    let mons = monomials(q.degree());
    let cols: Vec<Vec<S>> = basis.iter().map(|f| coeffs_of(&mons, f.poly())).collect();
    let a: Vec<Vec<S>> = (0..mons.len())
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let b = coeffs_of(&mons, q.poly());
    let x = solve_unique(&a, &b, basis.len(), 1e-10)
        .map_err(|e| Error::Solve(format!("interlacer is not in the span of the vanishing forms: {e}")))?;
    let k = (0..x.len())
        .max_by(|&i, &j| x[i].magnitude().total_cmp(&x[j].magnitude()))
        .unwrap();
    let mut out = vec![q.clone()];
    out.extend(basis.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, f)| f.clone()));
    Ok(out)
}

/// The hermitian matrix `V` of degree-`(m−1)` forms with first column
/// `cols` and first row `conj(cols)`, completed so that every `2 × 2`
/// minor vanishes on `P = 0`: `Q·V_ij + W·P = C_i·conj(C_j)` with
/// `Q = C_1`.
pub fn fill_matrix<S: Scalar>(p: &HomogeneousPolynomial<S>, cols: &[HomogeneousPolynomial<S>]) -> Result<PolyMatrix<S>> {
    let m = p.degree();
    let q = &cols[0];
    let n = cols.len();
    let target = monomials(2 * m - 2);
    let vmons = monomials(m - 1);
    let wmons = if m >= 2 { monomials(m - 2) } else { Vec::new() };
    let index = |e: &Monomial| target.iter().position(|t| t == e).expect("degree 2m−2 monomial");
    let nunk = vmons.len() + wmons.len();
    let mut a = vec![vec![S::zero(); nunk]; target.len()];
    for (k, e) in vmons.iter().enumerate() {
        for (f, c) in q.poly().terms() {
            let s: Monomial = e.iter().zip(f).map(|(x, y)| x + y).collect();
            let r = index(&s);
            a[r][k] = a[r][k].clone() + c.clone();
        }
    }
    for (k, e) in wmons.iter().enumerate() {
        for (f, c) in p.poly().terms() {
            let s: Monomial = e.iter().zip(f).map(|(x, y)| x + y).collect();
            let r = index(&s);
            a[r][vmons.len() + k] = a[r][vmons.len() + k].clone() + c.clone();
        }
    }
    let rows: Vec<HomogeneousPolynomial<S>> = cols.iter().map(|c| c.conj()).collect();
    let mut v = PolyMatrix::zeros(n, n, 3);
    for i in 0..n {
        for j in i..n {
            let rhs = cols[i].mul(&rows[j]);
            let b = coeffs_of(&target, rhs.poly());
            let x = solve_unique(&a, &b, nunk, 1e-11)?;
            let mut vij = form_from_coeffs(&vmons, &x[..vmons.len()], m - 1).into_poly();
            if i == j && !S::EXACT {
                vij = vij.real_part();
            }
            if !S::EXACT {
                vij = vij.chop(1e-13);
            }
            v.set(j, i, vij.conj());
            v.set(i, j, vij);
        }
    }
    Ok(v)
}

/// Output of [`extract_pencil`]: `det V = c·P^{m−1}` and
/// `adj V = P^{m−2}·U(X)` with `U` linear.
#[derive(Debug, Clone)]
pub struct Extracted<S> {
    pub c: S,
    pub u: Vec<Vec<Vec<S>>>,
}

pub fn extract_pencil<S: Scalar>(v: &PolyMatrix<S>, p: &HomogeneousPolynomial<S>) -> Result<Extracted<S>> {
    let m = p.degree();
    let n = v.rows();
    let tol = 1e-8;
    let det = v.determinant(usize::MAX)?;
    let det = det.chop(1e-12);
    if det.is_zero() {
        return Err(Error::DegenerateAdjoint);
    }
    let (quot, exact) = det.exact_divide(&p.poly().pow(m - 1), tol)?;
    let quot = quot.chop(1e-8);
    if !exact {
        return Err(Error::InexactDivision("det V is not a multiple of a power of P".into()));
    }
    if quot.degree().unwrap_or(0) != 0 || quot.is_zero() {
        return Err(Error::DegenerateAdjoint);
    }
    let c = quot.coeff(&[0, 0, 0]);
    let adj = v.adjugate(usize::MAX)?;
    let divisor = p.poly().pow(m.saturating_sub(2));
    let mut u = vec![vec![vec![S::zero(); n]; n]; 3];
    for i in 0..n {
        for j in 0..n {
            let (e, exact) = adj.get(i, j).exact_divide(&divisor, tol)?;
            let e = e.chop(1e-10);
            if !exact || e.degree().unwrap_or(0) > 1 {
                return Err(Error::InexactDivision(format!("adj V entry ({i},{j}) is not P^(m-2) times a linear form")));
            }
            for (a, mat) in u.iter_mut().enumerate() {
                let mut ex = vec![0u32; 3];
                ex[a] = 1;
                mat[i][j] = e.coeff(&ex);
            }
        }
    }
    if !S::EXACT {
        for mat in u.iter_mut() {
            let h = conj_transpose(mat);
            for i in 0..n {
                for j in 0..n {
                    mat[i][j] = (mat[i][j].clone() + h[i][j].clone()) * S::from_ratio(1, 2);
                }
            }
        }
    }
    Ok(Extracted { c, u })
}

/// Congruence bringing `U(X⁰)` to the identity.
#[derive(Debug, Clone)]
pub struct Normalized<S> {
    pub mats: Vec<Vec<Vec<S>>>,
    /// `+1` or `−1`: global sign applied before factoring.
    pub sign: i64,
    /// Diagonal of the factorization `σ·U(X⁰) = W·diag(d)·W*`.
    pub pivots: Vec<S>,
}

/// `A_α = diag(d)^{−1/2}·W⁻¹·(σU_α)·W⁻*·diag(d)^{−1/2}`, where
/// `σU(X⁰) = W·diag(d)·W*` with `W` unit upper triangular. Exact mode needs
/// every `d_i·d_j` to be a rational square.
pub fn normalize_at_basepoint<S: Scalar>(u: &[Vec<Vec<S>>], x0: &[S], tol: f64) -> Result<Normalized<S>> {
    let n = u[0].len();
    let mut base = vec![vec![S::zero(); n]; n];
    for (c, mat) in x0.iter().zip(u) {
        for i in 0..n {
            for j in 0..n {
                base[i][j] = base[i][j].clone() + c.clone() * mat[i][j].clone();
            }
        }
    }
    let spec = crate::linalg::hermitian_eigenvalues(&crate::linalg::to_dmatrix(&base, n));
    let sign = match crate::pencil::classify_spectrum(&spec, tol) {
        crate::pencil::Definiteness::PositiveDefinite => 1,
        crate::pencil::Definiteness::NegativeDefinite => -1,
        _ => return Err(Error::IndefiniteBasePoint),
    };
    let s = S::from_i64(sign);
    let base: Vec<Vec<S>> = base
        .iter()
        .map(|r| r.iter().map(|v| v.clone() * s.clone()).collect())
        .collect();
    let (w, d) = udu_upper(&base)?;
    if S::EXACT && d.iter().any(|v| v.to_c64().re <= 0.0) {
        return Err(Error::IndefiniteBasePoint);
    }
    let winv = upper_triangular_inverse(&w)?;
    let winv_h = conj_transpose(&winv);
    let mut root = vec![vec![S::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            root[i][j] = (d[i].clone() * d[j].clone()).sqrt_real().ok_or(Error::IrrationalScaling)?;
        }
    }
    let mats = u
        .iter()
        .map(|mat| {
            let signed: Vec<Vec<S>> = mat
                .iter()
                .map(|r| r.iter().map(|v| v.clone() * s.clone()).collect())
                .collect();
            let b = mat_mul(&mat_mul(&winv, &signed), &winv_h);
            (0..n)
                .map(|i| (0..n).map(|j| b[i][j].clone() / root[i][j].clone()).collect())
                .collect()
        })
        .collect();
    Ok(Normalized { mats, sign, pivots: d })
}

/// Points of `P = 0` on a few random real lines, for residual checks.
pub(crate) fn curve_points<S: Scalar>(
    p: &HomogeneousPolynomial<S>,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<num_complex::Complex64>>> {
    use num_complex::Complex64;
    let pc = p.poly().convert::<Complex64>();
    let mut out = Vec::new();
    for k in 0..count {
        let mut rng = stream(seed, 4000 + k as u64);
        let a = crate::sampling::unit_sphere(&mut rng, 3);
        let b = crate::sampling::unit_sphere(&mut rng, 3);
        let ac: Vec<Complex64> = a.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let bc: Vec<Complex64> = b.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let line = pc.restrict_to_line(&ac, &bc)?;
        for t in crate::realroots::complex_roots(&line)? {
            out.push((0..3).map(|i| ac[i] + t * bc[i]).collect());
        }
    }
    Ok(out)
}

/// Largest relative `2 × 2` minor of `V` over the given points.
pub(crate) fn rank_one_residual<S: Scalar>(v: &PolyMatrix<S>, points: &[Vec<num_complex::Complex64>]) -> f64 {
    let n = v.rows();
    let mut worst: f64 = 0.0;
    for x in points {
        let vc = v.map(|e| e.convert::<num_complex::Complex64>()).eval_c64(x);
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for l in k + 1..n {
                        let minor = vc[(i, k)] * vc[(j, l)] - vc[(i, l)] * vc[(j, k)];
                        let scale = vc[(i, k)].norm() * vc[(j, l)].norm() + vc[(i, l)].norm() * vc[(j, k)].norm();
                        if scale > 0.0 {
                            worst = worst.max(minor.norm() / scale);
                        }
                    }
                }
            }
        }
    }
    worst
}

/// `true` if the point is (numerically) on `F = 0`.
#[allow(dead_code)]
pub(crate) fn on_form<S: Scalar>(f: &HomogeneousPolynomial<S>, x: &ProjectivePoint<S>, tol: f64) -> bool {
    let z = x.to_c64();
    let pc = f.poly().convert::<num_complex::Complex64>();
    pc.eval_c64(&z).norm() <= tol * pc.abs_eval(&z).max(f64::MIN_POSITIVE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussRational as Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn circle() -> HomogeneousPolynomial<Q> {
        let p = Polynomial::from_terms(
            3,
            vec![(vec![2, 0, 0], q(1)), (vec![0, 2, 0], q(-1)), (vec![0, 0, 2], q(-1))],
        )
        .unwrap();
        HomogeneousPolynomial::new(p, 2).unwrap()
    }

    fn pt(c: Vec<Q>) -> ProjectivePoint<Q> {
        ProjectivePoint::new(c).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(0).len(), 1);
        assert_eq!(monomials(2).len(), 6);
        assert_eq!(monomials(4).len(), 15);
    }

    #[test]
    fn circle_half_basis() {
        let half = Divisor {
            points: vec![DivisorPoint {
                point: pt(vec![q(0), q(1), Q::i()]),
                multiplicity: 1,
                partner: None,
            }],
        };
        let basis = vanishing_basis(&circle(), &half).unwrap();
        assert_eq!(basis.len(), 2);
        for f in &basis {
            assert!(f.evaluate(&[q(0), q(1), Q::i()]).unwrap().is_zero());
        }
    }

    #[test]
    fn real_points_need_even_multiplicity() {
        let div = Divisor {
            points: vec![DivisorPoint {
                point: pt(vec![q(1), q(1), q(0)]),
                multiplicity: 1,
                partner: None,
            }],
        };
        assert_eq!(split_divisor(&div, 0).unwrap_err(), Error::OddRealMultiplicity(1));
        let div2 = Divisor {
            points: vec![DivisorPoint {
                point: pt(vec![q(1), q(1), q(0)]),
                multiplicity: 2,
                partner: None,
            }],
        };
        let (d, dt) = split_divisor(&div2, 0).unwrap();
        assert_eq!(d.degree(), 1);
        assert_eq!(dt.degree(), 1);
        assert_eq!(d.points[0].point, dt.points[0].point);
    }

    #[test]
    fn tangent_condition_at_contact() {
        // the line X0 = X1 touches the circle at [1,1,0]
        let half = Divisor {
            points: vec![DivisorPoint {
                point: pt(vec![q(1), q(1), q(0)]),
                multiplicity: 2,
                partner: None,
            }],
        };
        // one point of the circle with doubled multiplicity has degree 2 > m(m−1)/2 = 1
        assert!(matches!(vanishing_basis(&circle(), &half), Err(Error::DivisorDegree { .. })));
    }
}
