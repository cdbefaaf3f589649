//! Symmetric-function enumerators attached to the path, lattice, and
//! labelled-path models: characters of the natural permutation actions on
//! parking words and on order-related pairs, the graded character of the
//! polynomial ring, and the area/chain/dinv-weighted sums that refine them.
//!
//! Everything here returns an exact [`SymFunc`] (or [`QSymFunc`] for the
//! finite fundamental-basis forms).  Several quantities admit independent
//! closed formulas; each is implemented separately so that agreement between
//! them is a genuine cross-check, not a tautology.
//!
//! Conventions used throughout:
//!
//! * "dimension" of an expansion `F` means `Σ_d d! · [p_{1^d}] F`, the value
//!   of the underlying (graded) vector-space dimension; it is returned as a
//!   polynomial in `q` and `t` so graded characters yield Hilbert series.
//! * comparisons between differently-assembled expansions normalize to the
//!   Schur basis, where equality is coefficient-wise.

use crate::dyck::{self, DyckPath};
use crate::error::Result;
use crate::parking;
use crate::partitions::{binom, factorial, Partition};
use crate::qsym::{QSymBasis, QSymFunc};
use crate::qt::QTPoly;
use crate::ratpoly::RatPoly;
use crate::series::TruncatedSeries;
use crate::symfunc::{hall_scalar, schur_at_ones, SymBasis, SymFunc};
use crate::tamari::TamariLattice;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// The five independently-defined expressions for the character of the
/// permutation action on parking words with `n` cars and slope parameter
/// `r`.  All five evaluate to the same symmetric function; computing them
/// separately turns that statement into a checkable identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParkingFrobeniusForm {
    /// `Σ_α h_{γ(α)}`, summed over all paths `α` — the orbit decomposition.
    HSum,
    /// `(1/(rn+1)) Σ_{λ⊢n} (rn+1)^{ℓ(λ)} p_λ / z_λ` — the character values.
    PForm,
    /// `(1/(rn+1)) Σ_{λ⊢n} ∏_i C(rn+λ_i, λ_i) · m_λ` — monomial coefficients.
    /// (At `r = 1` the symmetric binomial `C(n+λ_i, λ_i) = C(n+λ_i, n)`
    /// allows an equivalent reading; only the `λ_i` form survives `r ≥ 2`.)
    MForm,
    /// `(1/(rn+1)) Σ_{λ⊢n} s_λ(1^{rn+1}) · s_λ` — Schur coefficients by
    /// principal specialization.
    SForm,
    /// Closed `h`-expansion: the coefficient of `h_λ` is
    /// `rn(rn−1)⋯(rn−ℓ+2) / ∏_v m_v(λ)!`.
    HClosed,
}

/// The two directly-computable expressions for the character of the action
/// on pairs `(α, φ)` where `α` is below the shape of the labelled path `φ`.
/// (A third, exponential form is validated through the series module.)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QPairsForm {
    /// `Σ_β |{α : α ≤ β}| · h_{γ(β)}` over the rotation order.
    HSum,
    /// Closed monomial coefficients
    /// `(1/(rn+1)²) ∏_{j∈λ} (rn+1)/(rn+j+1) · C((r+1)(rn+j+1), j)`.
    MForm,
}

fn rat_from_biguint(x: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn rat_int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Character of the permutation action on parking words, in the requested
/// form.  `cap` bounds the path enumeration used by [`ParkingFrobeniusForm::HSum`];
/// the other forms are closed formulas.
pub fn parking_frobenius(r: u32, n: u32, form: ParkingFrobeniusForm, cap: u64) -> Result<SymFunc> {
    let big_n = u64::from(r) * u64::from(n) + 1;
    match form {
        ParkingFrobeniusForm::HSum => {
            let mut out = SymFunc::zero(SymBasis::Complete);
            for alpha in dyck::enumerate(r, n as usize, cap)? {
                let lambda = Partition::from_unsorted(alpha.gamma().parts().to_vec());
                out.add_term(lambda, &QTPoly::one());
            }
            Ok(out)
        }
        ParkingFrobeniusForm::PForm => {
            let mut out = SymFunc::zero(SymBasis::Power);
            for lambda in Partition::all_of(n) {
                // N^ℓ / (N · z_λ), kept exactly rational.
                let numer = BigInt::from(big_n).pow(lambda.len() as u32);
                let denom = BigInt::from(big_n) * BigInt::from(lambda.z());
                let c = BigRational::new(numer, denom);
                out.add_term(lambda, &QTPoly::from_rational(c));
            }
            Ok(out)
        }
        ParkingFrobeniusForm::MForm => {
            let mut out = SymFunc::zero(SymBasis::Monomial);
            for lambda in Partition::all_of(n) {
                let mut numer = BigUint::one();
                for &part in lambda.parts() {
                    let j = u64::from(part);
                    numer *= binom(u64::from(r) * u64::from(n) + j, j);
                }
                let c = BigRational::new(BigInt::from(numer), BigInt::from(big_n));
                out.add_term(lambda, &QTPoly::from_rational(c));
            }
            Ok(out)
        }
        ParkingFrobeniusForm::SForm => {
            let mut out = SymFunc::zero(SymBasis::Schur);
            for lambda in Partition::all_of(n) {
                let ones = schur_at_ones(&lambda, big_n);
                let c = BigRational::new(BigInt::from(ones), BigInt::from(big_n));
                out.add_term(lambda, &QTPoly::from_rational(c));
            }
            Ok(out)
        }
        ParkingFrobeniusForm::HClosed => {
            let rn = u64::from(r) * u64::from(n);
            let mut out = SymFunc::zero(SymBasis::Complete);
            for lambda in Partition::all_of(n) {
                let ell = lambda.len() as u64;
                let mut numer = BigUint::one();
                for j in 0..ell.saturating_sub(1) {
                    numer *= BigUint::from(rn - j);
                }
                let mut denom = BigUint::one();
                for (_, mult) in lambda.multiplicities() {
                    denom *= factorial(u64::from(mult));
                }
                let c = BigRational::new(BigInt::from(numer), BigInt::from(denom));
                out.add_term(lambda, &QTPoly::from_rational(c));
            }
            Ok(out)
        }
    }
}

/// `Σ_d d! · [p_{1^d}] f` — the dimension of the module with character `f`,
/// one summand per homogeneous component.  Graded characters give their
/// Hilbert polynomial in `q` (and `t`).
pub fn frobenius_dimension(f: &SymFunc) -> Result<QTPoly> {
    let p = f.to_basis(SymBasis::Power)?;
    let mut out = QTPoly::zero();
    for (lambda, c) in p.terms() {
        if lambda.parts().iter().all(|&part| part == 1) {
            let scale = rat_from_biguint(factorial(lambda.len() as u64));
            out = out.add(&c.scale(&scale));
        }
    }
    Ok(out)
}

/// Multiplicity `⟨f, s_λ⟩` of the irreducible indexed by `λ` in the module
/// with character `f`.
pub fn multiplicity(f: &SymFunc, lambda: &Partition) -> Result<QTPoly> {
    hall_scalar(f, &SymFunc::generator(SymBasis::Schur, lambda.clone()))
}

/// Multiplicity of the sign representation in the parking action:
/// `C(rn, n) / ((r−1)n + 1)`, cross-checked against the equivalent
/// `e_n(1^{rn+1}) / (rn+1) = C(rn+1, n) / (rn+1)` before returning.
pub fn sign_multiplicity(r: u32, n: u32) -> BigUint {
    assert!(r >= 1, "slope parameter must be at least 1");
    let (r, n) = (u64::from(r), u64::from(n));
    let lhs = BigRational::new(
        BigInt::from(binom(r * n, n)),
        BigInt::from((r - 1) * n + 1),
    );
    let rhs = BigRational::new(BigInt::from(binom(r * n + 1, n)), BigInt::from(r * n + 1));
    assert!(lhs == rhs, "the two sign-multiplicity formulas must agree");
    assert!(lhs.is_integer(), "sign multiplicity must be an integer");
    lhs.to_integer().to_biguint().expect("non-negative")
}

/// The q-factorial `[n]!_q = ∏_{k=1}^{n} (1 + q + ⋯ + q^{k−1})`.
pub fn q_factorial(n: u32) -> QTPoly {
    let mut out = QTPoly::one();
    for k in 1..=n {
        let mut bracket = QTPoly::zero();
        for i in 0..k {
            bracket = bracket.add(&QTPoly::monomial(i, 0, BigRational::one()));
        }
        out = out.mul(&bracket);
    }
    out
}

fn qtpoly_from_q_coeffs(p: &RatPoly) -> QTPoly {
    let mut out = QTPoly::zero();
    if let Some(d) = p.degree() {
        for i in 0..=d {
            let c = p.coeff(i);
            if !c.is_zero() {
                out = out.add(&QTPoly::monomial(i as u32, 0, c));
            }
        }
    }
    out
}

/// `1 − q^k` as a dense univariate polynomial.
fn one_minus_q_pow(k: u32) -> RatPoly {
    let mut coeffs = vec![BigRational::zero(); k as usize + 1];
    coeffs[0] = BigRational::one();
    coeffs[k as usize] = -BigRational::one();
    RatPoly::from_coeffs(coeffs)
}

/// Graded character of the polynomial ring in `n` variables under the
/// symmetric group, `Σ_{μ⊢n} p_μ / (z_μ ∏_i (1 − q^{μ_i}))`, with each
/// coefficient truncated to a q-polynomial of degree at most `q_cap`.
/// Returned in the Schur basis.
pub fn graded_ring_frobenius(n: u32, q_cap: usize) -> Result<SymFunc> {
    let mut out = SymFunc::zero(SymBasis::Power);
    for mu in Partition::all_of(n) {
        let mut denominator = TruncatedSeries::one(q_cap + 1);
        for &part in mu.parts() {
            let factor = TruncatedSeries::from_fn(q_cap + 1, |i| {
                if i == 0 {
                    BigRational::one()
                } else if i == part as usize {
                    -BigRational::one()
                } else {
                    BigRational::zero()
                }
            });
            denominator = denominator.mul(&factor);
        }
        let series = denominator.invert()?;
        let mut coeff = QTPoly::zero();
        for (i, c) in series.coeffs().iter().enumerate() {
            if !c.is_zero() {
                coeff = coeff.add(&QTPoly::monomial(i as u32, 0, c.clone()));
            }
        }
        let z = rat_from_biguint(mu.z());
        out.add_term(mu, &coeff.scale(&z.recip()));
    }
    out.to_basis(SymBasis::Schur)
}

/// Numerator of the graded ring character: `∏_{k=1}^{n} (1 − q^k)` times
/// [`graded_ring_frobenius`], computed exactly (every per-term quotient of
/// cyclotomic products divides out, so the result is a genuine polynomial
/// in `q` of degree `C(n,2)`).  Returned in the Schur basis.
pub fn graded_ring_frobenius_numerator(n: u32) -> Result<SymFunc> {
    let mut full = RatPoly::from_int(1);
    for k in 1..=n {
        full = full.mul(&one_minus_q_pow(k));
    }
    let mut out = SymFunc::zero(SymBasis::Power);
    for mu in Partition::all_of(n) {
        let mut denom = RatPoly::from_int(1);
        for &part in mu.parts() {
            denom = denom.mul(&one_minus_q_pow(part));
        }
        let quotient = full
            .div_exact(&denom)
            .expect("cyclotomic factors always divide out");
        let z = rat_from_biguint(mu.z());
        out.add_term(mu, &qtpoly_from_q_coeffs(&quotient.scale(&z.recip())));
    }
    out.to_basis(SymBasis::Schur)
}

/// Coefficients of the Hilbert series of the polynomial ring in `n`
/// variables, degrees `0..=q_cap`, read off the graded character.  Each
/// entry must equal `C(n+d−1, d)`; callers assert that independently.
pub fn ring_hilbert_coefficients(n: u32, q_cap: usize) -> Result<Vec<BigUint>> {
    let graded = graded_ring_frobenius(n, q_cap)?;
    let hilbert = frobenius_dimension(&graded)?;
    let mut out = Vec::with_capacity(q_cap + 1);
    for d in 0..=q_cap {
        let c = hilbert.coeff(d as u32, 0);
        assert!(
            c.is_integer() && !c.numer().is_negative(),
            "Hilbert coefficients must be natural numbers"
        );
        out.push(c.to_integer().to_biguint().expect("non-negative"));
    }
    Ok(out)
}

/// Character of the permutation action on pairs `(α, φ)` with `α` below the
/// shape of `φ` in the rotation order, in the requested form.
pub fn q_pairs_frobenius(r: u32, n: usize, form: QPairsForm, cap: u64) -> Result<SymFunc> {
    match form {
        QPairsForm::HSum => {
            let lattice = TamariLattice::new(r, n, cap)?;
            let mut below = vec![0u64; lattice.size()];
            for alpha in 0..lattice.size() {
                for beta in lattice.upset(alpha).iter_ones() {
                    below[beta] += 1;
                }
            }
            let mut out = SymFunc::zero(SymBasis::Complete);
            for (beta, count) in below.iter().enumerate() {
                let lambda =
                    Partition::from_unsorted(lattice.path(beta).gamma().parts().to_vec());
                out.add_term(lambda, &QTPoly::from_rational(rat_int(*count)));
            }
            Ok(out)
        }
        QPairsForm::MForm => {
            let big_n = u64::from(r) * n as u64 + 1;
            let mut out = SymFunc::zero(SymBasis::Monomial);
            for lambda in Partition::all_of(n as u32) {
                let mut c = BigRational::new(BigInt::one(), BigInt::from(big_n).pow(2));
                for &part in lambda.parts() {
                    let j = u64::from(part);
                    let shifted = big_n + j;
                    let factor = BigRational::new(BigInt::from(big_n), BigInt::from(shifted))
                        * rat_from_biguint(binom(u64::from(r + 1) * shifted, j));
                    c *= factor;
                }
                out.add_term(lambda, &QTPoly::from_rational(c));
            }
            Ok(out)
        }
    }
}

/// Area-graded elementary sum `Σ_α q^{area(α)} e_{γ(α)}` over all paths —
/// the single-`q` slice of the bivariate character.  At `q = 1` it is the
/// image of the parking `h`-sum under the `e ↔ h` involution.
pub fn bivariate_q1(r: u32, n: usize, cap: u64) -> Result<SymFunc> {
    let mut out = SymFunc::zero(SymBasis::Elementary);
    for alpha in dyck::enumerate(r, n, cap)? {
        let lambda = Partition::from_unsorted(alpha.gamma().parts().to_vec());
        let area = u32::try_from(alpha.area()).expect("area fits in u32");
        out.add_term(lambda, &QTPoly::monomial(area, 0, BigRational::one()));
    }
    Ok(out)
}

/// For every element `x` of the lattice, the chain-weight polynomial
/// `Σ_{α ≤ x} q^{d(α,x)}`, where `d` is the longest-chain distance.
fn chain_weights(lattice: &TamariLattice) -> Vec<QTPoly> {
    let mut weights = vec![QTPoly::zero(); lattice.size()];
    for alpha in 0..lattice.size() {
        for (x, dist) in lattice.chain_distance_row(alpha).into_iter().enumerate() {
            if let Some(d) = dist {
                weights[x] = weights[x].add(&QTPoly::monomial(d, 0, BigRational::one()));
            }
        }
    }
    weights
}

/// Chain-graded elementary sum `Σ_{α ≤ β} q^{d(α,β)} e_{γ(β)}` over all
/// order relations of the rotation lattice, `d` being the longest-chain
/// distance — the single-`q` slice of the trivariate character.
pub fn trivariate_q1(r: u32, n: usize, cap: u64) -> Result<SymFunc> {
    let lattice = TamariLattice::new(r, n, cap)?;
    let weights = chain_weights(&lattice);
    let mut out = SymFunc::zero(SymBasis::Elementary);
    for (x, w) in weights.iter().enumerate() {
        let lambda = Partition::from_unsorted(lattice.path(x).gamma().parts().to_vec());
        out.add_term(lambda, w);
    }
    Ok(out)
}

/// The dinv-graded fundamental sum `Σ_{φ of shape β} t^{dinv(φ)} F_{θ(φ)}`
/// over all labelled paths of shape `β`, as a quasi-symmetric function.
pub fn d_beta_fundamental(beta: &DyckPath) -> QSymFunc {
    let mut out = QSymFunc::zero(QSymBasis::Fundamental);
    for phi in parking::enumerate_with_shape(beta) {
        let dinv = u32::try_from(phi.dinv()).expect("dinv fits in u32");
        out.add_term(phi.theta(), &QTPoly::monomial(0, dinv, BigRational::one()));
    }
    out
}

/// [`d_beta_fundamental`] collapsed to a symmetric function (monomial
/// basis).  The collapse doubles as the symmetry check: it fails if the
/// fundamental sum is not symmetric.  At `t = 1` the value is `e_{γ(β)}`.
pub fn d_beta(beta: &DyckPath) -> Result<SymFunc> {
    d_beta_fundamental(beta).to_symmetric()
}

/// Area/dinv-graded sum `Σ_β q^{area(β)} Σ_{φ of shape β} t^{dinv(φ)}
/// F_{θ(φ)}`, collapsed to the Schur basis.  The collapse asserts the sum
/// is symmetric; the Schur coefficients land in `ℕ[q,t]`.
pub fn shuffle_sum(r: u32, n: usize, cap: u64) -> Result<SymFunc> {
    let paths = dyck::enumerate(r, n, cap)?;
    let total = paths
        .into_par_iter()
        .map(|beta| {
            let area = u32::try_from(beta.area()).expect("area fits in u32");
            d_beta_fundamental(&beta).scale(&QTPoly::monomial(area, 0, BigRational::one()))
        })
        .reduce(
            || QSymFunc::zero(QSymBasis::Fundamental),
            |a, b| a.add(&b),
        );
    total.to_symmetric()?.to_basis(SymBasis::Schur)
}

/// Chain/dinv-graded double sum `Σ_{α ≤ β} q^{d(α,β)} Σ_{φ of shape β}
/// t^{dinv(φ)} F_{θ(φ)}`, collapsed to the Schur basis.  At `t = 1` it
/// agrees with [`trivariate_q1`].
pub fn trivariate_shuffle_sum(r: u32, n: usize, cap: u64) -> Result<SymFunc> {
    let lattice = TamariLattice::new(r, n, cap)?;
    let weights = chain_weights(&lattice);
    let total = (0..lattice.size())
        .into_par_iter()
        .map(|x| d_beta_fundamental(lattice.path(x)).scale(&weights[x]))
        .reduce(
            || QSymFunc::zero(QSymBasis::Fundamental),
            |a, b| a.add(&b),
        );
    total.to_symmetric()?.to_basis(SymBasis::Schur)
}

/// Outcome of the specialization experiment: the area/dinv sum at `t = 1`
/// against the chain/dinv sum at `t = 0`.  Whether these always agree is an
/// open question, so this is reported as data, never asserted.
#[derive(Debug, Clone)]
pub struct SpecializationComparison {
    /// `shuffle_sum` with `t` set to 1, in the Schur basis.
    pub shuffle_at_t1: SymFunc,
    /// `trivariate_shuffle_sum` with `t` set to 0, in the Schur basis.
    pub chain_at_t0: SymFunc,
    /// Whether the two sides are identical.
    pub agree: bool,
}

/// Run the specialization experiment at `(r, n)`.
pub fn compare_specializations(r: u32, n: usize, cap: u64) -> Result<SpecializationComparison> {
    let one = BigRational::one();
    let zero = BigRational::zero();
    let shuffle_at_t1 = shuffle_sum(r, n, cap)?.map_coeffs(|c| c.specialize_t(&one));
    let chain_at_t0 = trivariate_shuffle_sum(r, n, cap)?.map_coeffs(|c| c.specialize_t(&zero));
    let agree = shuffle_at_t1 == chain_at_t0;
    Ok(SpecializationComparison {
        shuffle_at_t1,
        chain_at_t0,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::fuss_catalan;

    const CAP: u64 = 1_000_000;

    fn all_forms() -> [ParkingFrobeniusForm; 5] {
        [
            ParkingFrobeniusForm::HSum,
            ParkingFrobeniusForm::PForm,
            ParkingFrobeniusForm::MForm,
            ParkingFrobeniusForm::SForm,
            ParkingFrobeniusForm::HClosed,
        ]
    }

    #[test]
    fn five_forms_agree_and_match_known_expansions() {
        assert_eq!(
            parking_frobenius(1, 2, ParkingFrobeniusForm::HSum, CAP)
                .unwrap()
                .to_string(),
            "h[2] + h[1,1]"
        );
        assert_eq!(
            parking_frobenius(1, 2, ParkingFrobeniusForm::MForm, CAP)
                .unwrap()
                .to_string(),
            "2*m[2] + 3*m[1,1]"
        );
        assert_eq!(
            parking_frobenius(1, 3, ParkingFrobeniusForm::HClosed, CAP)
                .unwrap()
                .to_string(),
            "h[3] + 3*h[2,1] + h[1,1,1]"
        );
        for (r, n) in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)] {
            let reference = parking_frobenius(r, n, ParkingFrobeniusForm::HSum, CAP)
                .unwrap()
                .to_basis(SymBasis::Schur)
                .unwrap();
            for form in all_forms() {
                let other = parking_frobenius(r, n, form, CAP)
                    .unwrap()
                    .to_basis(SymBasis::Schur)
                    .unwrap();
                assert!(
                    other == reference,
                    "form {form:?} disagrees at r={r}, n={n}"
                );
            }
        }
    }

    #[test]
    fn dimension_and_multiplicities() {
        // Dimension (rn+1)^{n-1}: 7^2 = 49 at (2,3), 4^2 = 16 at (1,3).
        let f23 = parking_frobenius(2, 3, ParkingFrobeniusForm::PForm, CAP).unwrap();
        assert_eq!(frobenius_dimension(&f23).unwrap().to_string(), "49");
        let f13 = parking_frobenius(1, 3, ParkingFrobeniusForm::SForm, CAP).unwrap();
        assert_eq!(frobenius_dimension(&f13).unwrap().to_string(), "16");

        // Trivial multiplicity is the path count, sign multiplicity has its
        // own closed formula; both are recovered by Schur projection.
        let trivial = multiplicity(&f23, &Partition::new(vec![3]).unwrap()).unwrap();
        assert_eq!(trivial.to_string(), fuss_catalan(2, 3).to_string());
        let sign = multiplicity(&f23, &Partition::new(vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(sign.to_string(), "5");
        assert_eq!(sign_multiplicity(2, 3).to_string(), "5");
        for n in 1..=6 {
            assert_eq!(sign_multiplicity(1, n), BigUint::one());
        }
        for (r, n) in [(1u32, 2u32), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
            let f = parking_frobenius(r, n, ParkingFrobeniusForm::PForm, CAP).unwrap();
            let lambda = Partition::new(vec![1; n as usize]).unwrap();
            assert_eq!(
                multiplicity(&f, &lambda).unwrap().to_string(),
                sign_multiplicity(r, n).to_string(),
                "sign projection disagrees at r={r}, n={n}"
            );
        }
    }

    #[test]
    fn graded_ring_character_matches_known_numerators() {
        assert_eq!(
            graded_ring_frobenius_numerator(2).unwrap().to_string(),
            "s[2] + q*s[1,1]"
        );
        assert_eq!(
            graded_ring_frobenius_numerator(3).unwrap().to_string(),
            "s[3] + (q^2 + q)*s[2,1] + q^3*s[1,1,1]"
        );
        assert_eq!(
            graded_ring_frobenius_numerator(4).unwrap().to_string(),
            "s[4] + (q^3 + q^2 + q)*s[3,1] + (q^4 + q^2)*s[2,2] + \
             (q^5 + q^4 + q^3)*s[2,1,1] + q^6*s[1,1,1,1]"
        );
        // The numerator's dimension polynomial is the q-factorial, and the
        // full character's Hilbert coefficients are C(n+d-1, d).
        for n in 1..=4u32 {
            let numerator = graded_ring_frobenius_numerator(n).unwrap();
            assert!(frobenius_dimension(&numerator).unwrap() == q_factorial(n));
            let hilbert = ring_hilbert_coefficients(n, 8).unwrap();
            for (d, value) in hilbert.iter().enumerate() {
                assert_eq!(
                    value,
                    &binom(u64::from(n) + d as u64 - 1, d as u64),
                    "Hilbert slice dimension disagrees at n={n}, d={d}"
                );
            }
        }
        // Truncating the full character and re-multiplying by the
        // denominator recovers the numerator (up to the truncation order).
        let n = 3u32;
        let graded = graded_ring_frobenius(n, 10).unwrap();
        let numerator = graded_ring_frobenius_numerator(n).unwrap();
        let mut denom = QTPoly::one();
        for k in 1..=n {
            denom = denom.mul(&QTPoly::one().sub(&QTPoly::monomial(k, 0, BigRational::one())));
        }
        let product = graded.scale(&denom);
        for (lambda, c) in numerator.terms() {
            let recovered = product.coeff(lambda);
            for e in 0..=3u32 {
                assert!(recovered.coeff(e, 0) == c.coeff(e, 0));
            }
        }
    }

    #[test]
    fn pair_character_forms_agree() {
        assert_eq!(
            q_pairs_frobenius(1, 2, QPairsForm::HSum, CAP)
                .unwrap()
                .to_string(),
            "2*h[2] + h[1,1]"
        );
        assert_eq!(
            q_pairs_frobenius(1, 2, QPairsForm::MForm, CAP)
                .unwrap()
                .to_string(),
            "3*m[2] + 4*m[1,1]"
        );
        for (r, n) in [(1u32, 1usize), (1, 2), (1, 3), (2, 2), (2, 3)] {
            let h = q_pairs_frobenius(r, n, QPairsForm::HSum, CAP)
                .unwrap()
                .to_basis(SymBasis::Schur)
                .unwrap();
            let m = q_pairs_frobenius(r, n, QPairsForm::MForm, CAP)
                .unwrap()
                .to_basis(SymBasis::Schur)
                .unwrap();
            assert!(h == m, "pair-character forms disagree at r={r}, n={n}");
        }
        // Dimension (r+1)^n (rn+1)^{n-2}: 27 * 7 = 189 at (2,3), 32 at (1,3).
        let f = q_pairs_frobenius(2, 3, QPairsForm::HSum, CAP).unwrap();
        assert_eq!(frobenius_dimension(&f).unwrap().to_string(), "189");
        let f = q_pairs_frobenius(1, 3, QPairsForm::MForm, CAP).unwrap();
        assert_eq!(frobenius_dimension(&f).unwrap().to_string(), "32");
    }

    #[test]
    fn area_and_chain_elementary_sums() {
        assert_eq!(bivariate_q1(1, 2, CAP).unwrap().to_string(), "q*e[2] + e[1,1]");
        assert_eq!(trivariate_q1(1, 1, CAP).unwrap().to_string(), "e[1]");
        assert_eq!(
            trivariate_q1(1, 3, CAP).unwrap().to_string(),
            "(q^3 + q^2 + 2*q + 1)*e[3] + (q^2 + 3*q + 3)*e[2,1] + e[1,1,1]"
        );
        // At q = 1 the area sum is the e/h-swapped parking character.
        let one = BigRational::one();
        for (r, n) in [(1u32, 3usize), (2, 2), (2, 3)] {
            let lhs = bivariate_q1(r, n, CAP)
                .unwrap()
                .map_coeffs(|c| c.specialize_q(&one))
                .to_basis(SymBasis::Schur)
                .unwrap();
            let rhs = parking_frobenius(r, n as u32, ParkingFrobeniusForm::HSum, CAP)
                .unwrap()
                .omega()
                .to_basis(SymBasis::Schur)
                .unwrap();
            assert!(lhs == rhs, "q=1 collapse disagrees at r={r}, n={n}");
        }
        // Dimension readouts at q = 1.
        let dim = |f: &SymFunc| {
            frobenius_dimension(f)
                .unwrap()
                .eval_int(1, 1)
                .to_integer()
                .to_string()
        };
        assert_eq!(dim(&bivariate_q1(1, 3, CAP).unwrap()), "16");
        assert_eq!(dim(&trivariate_q1(1, 3, CAP).unwrap()), "32");
        assert_eq!(dim(&trivariate_q1(2, 3, CAP).unwrap()), "189");
    }

    #[test]
    fn dinv_fundamental_sums_collapse_to_elementary() {
        for (r, n) in [(1u32, 2usize), (1, 3), (1, 4), (2, 2), (2, 3)] {
            let one = BigRational::one();
            for beta in dyck::enumerate(r, n, CAP).unwrap() {
                let collapsed = d_beta(&beta)
                    .unwrap()
                    .map_coeffs(|c| c.specialize_t(&one));
                let gamma = Partition::from_unsorted(beta.gamma().parts().to_vec());
                let expected = SymFunc::generator(SymBasis::Elementary, gamma)
                    .to_basis(SymBasis::Monomial)
                    .unwrap();
                assert!(
                    collapsed == expected,
                    "t=1 collapse disagrees for shape {}",
                    beta.to_compact_string()
                );
            }
        }
        // Schur coefficients are non-negative integer t-polynomials.
        let tall = d_beta(&DyckPath::zero_path(1, 3))
            .unwrap()
            .to_basis(SymBasis::Schur)
            .unwrap();
        assert!(tall.terms().all(|(_, c)| c.has_nonneg_integer_coeffs()));
        assert!(!tall.is_zero());
    }

    #[test]
    fn shuffle_sums_and_qt_symmetry() {
        assert_eq!(shuffle_sum(1, 1, CAP).unwrap().to_string(), "s[1]");
        assert_eq!(
            shuffle_sum(1, 2, CAP).unwrap().to_string(),
            "s[2] + (q + t)*s[1,1]"
        );
        // Schur coefficients in N[q,t].
        let f = shuffle_sum(1, 3, CAP).unwrap();
        assert!(f.terms().all(|(_, c)| c.has_nonneg_integer_coeffs()));
        // t = 1 recovers the area-graded elementary sum.
        let one = BigRational::one();
        for (r, n) in [(1u32, 2usize), (1, 3), (2, 2), (2, 3)] {
            let lhs = shuffle_sum(r, n, CAP)
                .unwrap()
                .map_coeffs(|c| c.specialize_t(&one));
            let rhs = bivariate_q1(r, n, CAP)
                .unwrap()
                .to_basis(SymBasis::Schur)
                .unwrap();
            assert!(lhs == rhs, "t=1 collapse disagrees at r={r}, n={n}");
        }
        // The r = 1 sums are symmetric in q and t.
        for n in [2usize, 3, 4] {
            let f = shuffle_sum(1, n, CAP).unwrap();
            let swapped = f.map_coeffs(|c| c.swap_qt());
            assert!(f == swapped, "q/t swap changes the sum at n={n}");
        }
    }

    #[test]
    fn chain_graded_shuffle_sum_and_specializations() {
        assert_eq!(trivariate_shuffle_sum(1, 1, CAP).unwrap().to_string(), "s[1]");
        let one = BigRational::one();
        for (r, n) in [(1u32, 2usize), (1, 3), (2, 2)] {
            let lhs = trivariate_shuffle_sum(r, n, CAP)
                .unwrap()
                .map_coeffs(|c| c.specialize_t(&one));
            let rhs = trivariate_q1(r, n, CAP)
                .unwrap()
                .to_basis(SymBasis::Schur)
                .unwrap();
            assert!(lhs == rhs, "t=1 collapse disagrees at r={r}, n={n}");
        }
        // The open specialization comparison is reproducible data: record
        // the outcome observed for small cases rather than asserting a law.
        for (r, n, expected) in [(1u32, 2usize, true), (1, 3, true), (2, 2, true)] {
            let report = compare_specializations(r, n, CAP).unwrap();
            assert_eq!(
                report.agree, expected,
                "specialization experiment changed outcome at r={r}, n={n}"
            );
        }
    }
}
