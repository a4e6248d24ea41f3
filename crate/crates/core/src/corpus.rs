//! Named test polynomials and random determinantal instances with known
//! ground truth.

use rand::Rng;
use serde_json::{json, Value};

use crate::construct::check_smooth;
use crate::error::{Error, Result};
use crate::linalg::identity;
use crate::pencil::{det_poly, MatrixPencil, SymmetryClass};
use crate::poly::{HomogeneousPolynomial, Polynomial};
use crate::sampling::{normal, stream};
use crate::scalar::{CoeffMode, GaussRational, Scalar};

type Q = GaussRational;

/// A polynomial with its base point, the expected real-zero verdict, and,
/// when known, a pencil whose determinant it is.
///
/// Coefficients are stored exactly; float instances hold the binary values
/// of their coefficients and are tagged with [`CoeffMode::Float`].
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub name: String,
    pub poly: Polynomial<Q>,
    pub x0: Vec<Q>,
    pub expected_rz: bool,
    pub note: String,
    pub pencil: Option<MatrixPencil<Q>>,
    pub mode: CoeffMode,
}

impl Instance {
    pub fn poly_as<S: Scalar>(&self) -> Polynomial<S> {
        self.poly.convert()
    }

    pub fn x0_as<S: Scalar>(&self) -> Vec<S> {
        self.x0.iter().map(crate::poly::convert_scalar::<Q, S>).collect()
    }

    pub fn pencil_as<S: Scalar>(&self) -> Option<MatrixPencil<S>> {
        self.pencil.as_ref().map(|p| p.convert())
    }

    pub fn dim(&self) -> usize {
        self.poly.nvars()
    }

    /// Polynomial JSON, tagged with the instance mode.
    pub fn poly_json(&self) -> Value {
        match self.mode {
            CoeffMode::Rational => crate::poly::io::to_json_value(&self.poly),
            CoeffMode::Float => crate::poly::io::to_json_value(&self.poly_as::<num_complex::Complex64>()),
        }
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "name": self.name,
            "vars": self.dim(),
            "degree": self.poly.degree(),
            "expected_rz": self.expected_rz,
            "has_pencil": self.pencil.is_some(),
            "note": self.note,
        })
    }
}

fn qi(v: i64) -> Q {
    Q::from_i64(v)
}

fn poly(nvars: usize, terms: Vec<(Vec<u32>, i64)>) -> Polynomial<Q> {
    Polynomial::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, qi(c)))).expect("well-formed terms")
}

/// `1 − x₁² − x₂²`, with a real symmetric pencil.
pub fn circle() -> Instance {
    let pencil = MatrixPencil::new(vec![
        identity(2),
        vec![vec![qi(1), qi(0)], vec![qi(0), qi(-1)]],
        vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]],
    ])
    .expect("symmetric");
    Instance {
        name: "circle".into(),
        poly: poly(2, vec![(vec![0, 0], 1), (vec![2, 0], -1), (vec![0, 2], -1)]),
        x0: vec![qi(0), qi(0)],
        expected_rz: true,
        note: "unit disk; real-zero at every interior point".into(),
        pencil: Some(pencil),
        mode: CoeffMode::Rational,
    }
}

/// `1 − x₁⁴ − x₂⁴`: convex interior, not real-zero.
pub fn tv_screen() -> Instance {
    Instance {
        name: "tv-screen".into(),
        poly: poly(2, vec![(vec![0, 0], 1), (vec![4, 0], -1), (vec![0, 4], -1)]),
        x0: vec![qi(0), qi(0)],
        expected_rz: false,
        note: "convex but not rigidly convex: lines through 0 meet the quartic in non-real points".into(),
        pencil: None,
        mode: CoeffMode::Rational,
    }
}

/// `(x₁ + 1)² − x₂² − … − x_d²`, real-zero at 0.
pub fn bad_quadratic(d: usize) -> Result<Instance> {
    if d < 2 {
        return Err(Error::Precondition(format!("bad_quadratic needs d >= 2, got {d}")));
    }
    let mut terms = vec![(vec![0; d], 1), ({
        let mut e = vec![0; d];
        e[0] = 1;
        e
    }, 2), ({
        let mut e = vec![0; d];
        e[0] = 2;
        e
    }, 1)];
    for k in 1..d {
        let mut e = vec![0; d];
        e[k] = 2;
        terms.push((e, -1));
    }
    Ok(Instance {
        name: format!("bad-quadratic-{d}"),
        poly: poly(d, terms),
        x0: vec![qi(0); d],
        expected_rz: true,
        note: "quadratic with no hermitian determinantal representation of any size when d >= 5, \
               and no real symmetric one when d = 4; these nonexistence claims are not tested here"
            .into(),
        pencil: None,
        mode: CoeffMode::Rational,
    })
}

/// Ground set labels in variable order.
pub const VAMOS_LABELS: [&str; 8] = ["a", "b", "c", "d", "a'", "b'", "c'", "d'"];

/// The five 4-subsets (as variable indices) that are not bases.
pub fn vamos_nonbases() -> Vec<[usize; 4]> {
    // a=0 b=1 c=2 d=3 a'=4 b'=5 c'=6 d'=7
    vec![[0, 4, 1, 5], [1, 5, 2, 6], [2, 6, 3, 7], [3, 7, 0, 4], [0, 4, 2, 6]]
}

/// All 4-subsets of the eight labels that are bases.
pub fn vamos_bases() -> Vec<[usize; 4]> {
    let excluded: Vec<Vec<usize>> = vamos_nonbases()
        .into_iter()
        .map(|s| {
            let mut v = s.to_vec();
            v.sort_unstable();
            v
        })
        .collect();
    let mut out = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                for d in c + 1..8 {
                    if !excluded.contains(&vec![a, b, c, d]) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// `Σ_{B} Π_{j ∈ B} (x_j + 1)` over the bases of the Vámos matroid.
pub fn vamos() -> Instance {
    let factors: Vec<Polynomial<Q>> = (0..8)
        .map(|j| &Polynomial::var(8, j) + &Polynomial::one(8))
        .collect();
    let mut p = Polynomial::zero(8);
    for basis in vamos_bases() {
        let mut term = Polynomial::one(8);
        for &j in &basis {
            term = &term * &factors[j];
        }
        p = &p + &term;
    }
    Instance {
        name: "vamos".into(),
        poly: p,
        x0: vec![qi(0); 8],
        expected_rz: true,
        note: "basis generating polynomial of the Vamos matroid, shifted to 0; real-zero there, \
               yet no power of it has a determinantal representation"
            .into(),
        pencil: None,
        mode: CoeffMode::Rational,
    }
}

const RANDOM_RZ_ATTEMPTS: u64 = 10;

fn random_entry<R: Rng>(rng: &mut R, mode: CoeffMode) -> Q {
    match mode {
        // quarters in [-1, 1]
        CoeffMode::Rational => Q::from_ratio(rng.random_range(-4..=4), 4),
        CoeffMode::Float => Q::from_f64(normal(rng) / 2.0),
    }
}

fn random_matrix<R: Rng>(rng: &mut R, m: usize, mode: CoeffMode, class: SymmetryClass) -> Vec<Vec<Q>> {
    let mut b = vec![vec![Q::zero(); m]; m];
    for i in 0..m {
        b[i][i] = random_entry(rng, mode);
        for j in i + 1..m {
            let re = random_entry(rng, mode);
            let v = match class {
                SymmetryClass::RealSymmetric => re,
                SymmetryClass::Hermitian => re + random_entry(rng, mode) * Q::i(),
            };
            b[j][i] = v.conj();
            b[i][j] = v;
        }
    }
    b
}

/// `det(I + x₁B₁ + x₂B₂)` for random hermitian `B₁, B₂` of size `m`.
pub fn random_rz(m: usize, seed: u64, mode: CoeffMode) -> Result<Instance> {
    random_rz_with(m, seed, mode, SymmetryClass::Hermitian)
}

/// [`random_rz`] with a choice between hermitian and real symmetric
/// matrices. The curve is redrawn until it is smooth (hence irreducible).
pub fn random_rz_with(m: usize, seed: u64, mode: CoeffMode, class: SymmetryClass) -> Result<Instance> {
    if m == 0 {
        return Err(Error::Precondition("random_rz needs m >= 1".into()));
    }
    let class_name = match class {
        SymmetryClass::Hermitian => "hermitian",
        SymmetryClass::RealSymmetric => "real-symmetric",
    };
    for attempt in 0..RANDOM_RZ_ATTEMPTS {
        let mut rng = stream(seed, attempt);
        let b1 = random_matrix(&mut rng, m, mode, class);
        let b2 = random_matrix(&mut rng, m, mode, class);
        let pencil = MatrixPencil::new(vec![identity(m), b1, b2])?;
        let p = det_poly(&pencil)?.0.real_part();
        if p.degree() != Some(m as u32) {
            continue;
        }
        if m >= 2 {
            let form = HomogeneousPolynomial::homogenize(&p, m as u32)?;
            let smooth = match mode {
                CoeffMode::Rational => check_smooth(&form, seed ^ attempt).is_ok(),
                CoeffMode::Float => check_smooth(&form.convert::<num_complex::Complex64>(), seed ^ attempt).is_ok(),
            };
            if !smooth {
                continue;
            }
        }
        return Ok(Instance {
            name: format!("random-rz-{m}-{seed}"),
            poly: p,
            x0: vec![Q::zero(), Q::zero()],
            expected_rz: true,
            note: format!("det(I + x1 B1 + x2 B2) for random {class_name} B1, B2 (draw {attempt})"),
            pencil: Some(pencil),
            mode,
        });
    }
    Err(Error::RetriesExhausted(format!(
        "no smooth random curve of degree {m} in {RANDOM_RZ_ATTEMPTS} draws"
    )))
}

/// Names accepted by [`by_name`], with placeholders for parameters.
pub fn names() -> Vec<&'static str> {
    vec![
        "circle",
        "tv-screen",
        "vamos",
        "bad-quadratic-<d>",
        "random-rz-<m>-<seed>",
        "random-rz-float-<m>-<seed>",
    ]
}

/// Instance by name; see [`names`].
pub fn by_name(name: &str) -> Result<Instance> {
    let bad = || Error::Precondition(format!("unknown corpus instance `{name}` (known: {})", names().join(", ")));
    let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
    match name {
        "circle" => Ok(circle()),
        "tv-screen" | "tv_screen" => Ok(tv_screen()),
        "vamos" => Ok(vamos()),
        _ => {
            if let Some(d) = name.strip_prefix("bad-quadratic-") {
                return bad_quadratic(num(d)? as usize);
            }
            let (rest, mode) = match name.strip_prefix("random-rz-float-") {
                Some(r) => (r, CoeffMode::Float),
                None => (name.strip_prefix("random-rz-").ok_or_else(bad)?, CoeffMode::Rational),
            };
            let (m, seed) = rest.split_once('-').ok_or_else(bad)?;
            let mut inst = random_rz(num(m)? as usize, num(seed)?, mode)?;
            inst.name = name.to_string();
            Ok(inst)
        }
    }
}

/// The fixed named instances (parameterized families at small sizes).
pub fn standard() -> Vec<Instance> {
    let mut out = vec![circle(), tv_screen(), vamos()];
    out.extend((2..=6).map(|d| bad_quadratic(d).expect("d >= 2")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rz::{is_rz_sampled, RzStatus};

    #[test]
    fn circle_values() {
        let c = circle();
        assert_eq!(c.poly.evaluate(&[qi(0), qi(0)]).unwrap(), qi(1));
        assert_eq!(det_poly(c.pencil.as_ref().unwrap()).unwrap().0, c.poly);
        assert!(!tv_screen().expected_rz);
    }

    #[test]
    fn bad_quadratic_shape() {
        let p = bad_quadratic(2).unwrap().poly;
        assert_eq!(p, poly(2, vec![(vec![0, 0], 1), (vec![1, 0], 2), (vec![2, 0], 1), (vec![0, 2], -1)]));
        assert!(bad_quadratic(1).is_err());
        let b5 = bad_quadratic(5).unwrap();
        let v = is_rz_sampled(&b5.poly_as::<num_complex::Complex64>(), &b5.x0_as(), 64, 1e-9, 3).unwrap();
        assert_eq!(v.status, RzStatus::RzConfirmedSampled);
    }

    #[test]
    fn vamos_bookkeeping() {
        assert_eq!(vamos_nonbases().len(), 5);
        assert_eq!(vamos_bases().len(), 65);
        let v = vamos();
        assert_eq!(v.poly.degree(), Some(4));
        assert_eq!(v.poly.evaluate(&vec![qi(0); 8]).unwrap(), qi(65));
    }

    #[test]
    fn random_instances_carry_their_pencil() {
        for m in 1..=3 {
            let inst = random_rz(m, 5, CoeffMode::Rational).unwrap();
            assert_eq!(inst.poly.degree(), Some(m as u32));
            assert_eq!(det_poly(inst.pencil.as_ref().unwrap()).unwrap().0.real_part(), inst.poly);
            let f = random_rz(m, 5, CoeffMode::Float).unwrap();
            assert_eq!(f.mode, CoeffMode::Float);
        }
        let rs = random_rz_with(3, 2, CoeffMode::Rational, SymmetryClass::RealSymmetric).unwrap();
        assert_eq!(rs.pencil.unwrap().class(), SymmetryClass::RealSymmetric);
    }

    #[test]
    fn names_resolve() {
        assert_eq!(by_name("bad-quadratic-3").unwrap().dim(), 3);
        assert_eq!(by_name("random-rz-float-2-9").unwrap().mode, CoeffMode::Float);
        assert!(by_name("nope").is_err());
    }
}
