//! Exact real root counting and isolation with Sturm sequences.

use num::bigint::Sign;
use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, Polynomial, Scalar};

/// Canonical Sturm sequence `g, g', -rem(g, g'), ...`, ending at the last
/// nonzero remainder.
pub fn sturm_sequence(g: &Polynomial) -> Result<Vec<Polynomial>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![g.clone()];
    let mut next = g.derivative();
    while !next.is_zero() {
        let r = chain[chain.len() - 1].rem(&next)?;
        chain.push(next);
        next = r.neg();
    }
    Ok(chain)
}

fn exact_div(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero(), "inexact division");
    q
}

/// `g / gcd(g, g')`: same roots as `g`, all simple.
pub fn squarefree_part(g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.degree() == 0 {
        return Ok(Polynomial::constant(int(1)));
    }
    let d = g.gcd(&g.derivative())?;
    Ok(exact_div(g, &d).monic())
}

/// Yun's decomposition: monic squarefree, pairwise coprime `s_1, s_2, ...`
/// with `g = lc(g) * s_1 * s_2^2 * s_3^3 ...`. Entry `i` holds `s_{i+1}`.
pub fn squarefree_decomposition(g: &Polynomial) -> Result<Vec<Polynomial>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if g.degree() == 0 {
        return Ok(factors);
    }
    let g_prime = g.derivative();
    let a = g.gcd(&g_prime)?;
    let mut b = exact_div(g, &a);
    let mut c = exact_div(&g_prime, &a);
    let mut d = c.add(&b.derivative().neg());
    while b.degree() > 0 {
        let s = b.gcd(&d)?;
        b = exact_div(&b, &s);
        c = exact_div(&d, &s);
        d = c.add(&b.derivative().neg());
        factors.push(s);
    }
    Ok(factors)
}

/// Exact bound: every root lies strictly inside `|x| < 1 + max |a_j / a_n|`.
pub fn cauchy_bound(g: &Polynomial) -> Scalar {
    let lead = g.leading().abs();
    let n = g.degree();
    let max = g.coeffs()[..n]
        .iter()
        .map(|a| a.abs() / &lead)
        .max()
        .unwrap_or_else(Scalar::zero);
    max + int(1)
}

/// Positive rescaling of `g` to coprime integer coefficients.
fn primitive(g: &Polynomial) -> Vec<BigInt> {
    let lcm = g.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g.coeffs().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &content).collect()
    }
}

fn from_ints(coeffs: &[BigInt]) -> Polynomial {
    Polynomial::new(coeffs.iter().cloned().map(Scalar::from_integer).collect()).expect("nonempty")
}

/// Sign of `sum c_j (num/den)^j` for `den > 0`, in integers only.
fn sign_at(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> Sign {
    let mut acc = BigInt::zero();
    let mut den_power = BigInt::one();
    for c in coeffs.iter().rev() {
        acc = acc * num + c * &den_power;
        den_power *= den;
    }
    acc.sign()
}

/// Sturm chain of a squarefree polynomial, ready for sign-variation counts.
///
/// Members are stored as primitive integer polynomials; positive rescaling
/// leaves every sign, and so every variation count, unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    /// Builds the chain of the squarefree part of `g`.
    pub fn new(g: &Polynomial) -> Result<Self> {
        let base = squarefree_part(g)?;
        let mut chain = vec![primitive(&base)];
        let mut prev = from_ints(&chain[0]);
        let mut next = base.derivative();
        while !next.is_zero() {
            let current = from_ints(&primitive(&next));
            let r = prev.rem(&current)?;
            chain.push(primitive(&current));
            prev = current;
            next = r.neg();
        }
        Ok(SturmChain { chain })
    }

    pub fn variations(&self, x: &Scalar) -> usize {
        let mut count = 0;
        let mut last: Option<Sign> = None;
        for p in &self.chain {
            let sign = sign_at(p, x.numer(), x.denom());
            if sign == Sign::NoSign {
                continue;
            }
            if last.is_some_and(|l| l != sign) {
                count += 1;
            }
            last = Some(sign);
        }
        count
    }

    /// Distinct roots in the half-open interval `(a, b]`. Holds for any `a < b`,
    /// roots at the endpoints included.
    pub fn count_half_open(&self, a: &Scalar, b: &Scalar) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a) - self.variations(b)
    }

    fn vanishes_at(&self, x: &Scalar) -> bool {
        sign_at(&self.chain[0], x.numer(), x.denom()) == Sign::NoSign
    }
}

/// Distinct real roots of `g` in the open interval `(a, b)`.
pub fn count_real_roots(g: &Polynomial, a: &Scalar, b: &Scalar) -> Result<usize> {
    let chain = SturmChain::new(g)?;
    let at_b = usize::from(g.eval(b).is_zero() && a < b);
    Ok(chain.count_half_open(a, b) - at_b)
}

/// One isolated root in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Scalar,
    pub hi: Scalar,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn overlaps(&self, other: &RootInterval) -> bool {
        self.lo.clone().max(other.lo.clone()) < self.hi.clone().min(other.hi.clone())
    }

    pub fn midpoint(&self) -> Scalar {
        (&self.lo + &self.hi) / int(2)
    }
}

/// Disjoint, ascending isolating intervals of the real roots of a polynomial.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub intervals: Vec<RootInterval>,
    chain: Option<SturmChain>,
}

impl RootIsolation {
    /// Real roots counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }

    pub fn distinct(&self) -> usize {
        self.intervals.len()
    }

    pub fn all_simple(&self) -> bool {
        self.intervals.iter().all(|i| i.multiplicity == 1)
    }

    /// Halves interval `idx`, keeping the half that holds its root.
    pub fn refine(&mut self, idx: usize) {
        let Some(chain) = &self.chain else { return };
        let interval = &mut self.intervals[idx];
        let mid = interval.midpoint();
        if chain.count_half_open(&interval.lo, &mid) == 1 {
            interval.hi = mid;
        } else {
            interval.lo = mid;
        }
    }

    /// Narrows every interval below `width`.
    pub fn refine_to_width(&mut self, width: &Scalar) {
        for idx in 0..self.intervals.len() {
            while &self.intervals[idx].hi - &self.intervals[idx].lo > *width {
                self.refine(idx);
            }
        }
    }

    /// The exact root in interval `idx` if it sits on the right endpoint.
    pub fn exact_root(&self, idx: usize) -> Option<Scalar> {
        let chain = self.chain.as_ref()?;
        let hi = &self.intervals[idx].hi;
        chain.vanishes_at(hi).then(|| hi.clone())
    }
}

impl PartialEq for RootIsolation {
    fn eq(&self, other: &Self) -> bool {
        self.intervals == other.intervals
    }
}

/// Isolates the real roots of `g` by bisection of the Cauchy bound interval.
pub fn isolate_real_roots(g: &Polynomial) -> Result<RootIsolation> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if g.degree() == 0 {
        return Ok(RootIsolation {
            intervals: Vec::new(),
            chain: None,
        });
    }
    let chain = SturmChain::new(g)?;
    let bound = cauchy_bound(g);

    let mut found = Vec::new();
    let mut pending = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = pending.pop() {
        match chain.count_half_open(&lo, &hi) {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / int(2);
                // right half first so the left half is popped next
                pending.push((mid.clone(), hi));
                pending.push((lo, mid));
            }
        }
    }

    let factor_chains = squarefree_decomposition(g)?
        .iter()
        .map(|s| SturmChain::new(s).map(|c| (s.degree() > 0).then_some(c)))
        .collect::<Result<Vec<_>>>()?;
    let intervals = found
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = factor_chains
                .iter()
                .position(|c| c.as_ref().is_some_and(|c| c.count_half_open(&lo, &hi) == 1))
                .map_or(1, |i| i + 1);
            RootInterval { lo, hi, multiplicity }
        })
        .collect();
    Ok(RootIsolation {
        intervals,
        chain: Some(chain),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c).unwrap()
    }

    fn contains(interval: &RootInterval, x: &Scalar) -> bool {
        &interval.lo < x && x <= &interval.hi
    }

    #[test]
    fn sturm_sequence_examples() {
        assert_eq!(
            sturm_sequence(&poly(&[-2, 0, 1])).unwrap(),
            vec![poly(&[-2, 0, 1]), poly(&[0, 2]), poly(&[2])]
        );
        assert_eq!(sturm_sequence(&poly(&[1])).unwrap(), vec![poly(&[1])]);
        assert_eq!(sturm_sequence(&poly(&[0, 1])).unwrap(), vec![poly(&[0, 1]), poly(&[1])]);
        assert!(sturm_sequence(&Polynomial::zero()).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_real_roots(&poly(&[-2, 0, 1]), &int(0), &int(2)).unwrap(), 1);
        assert_eq!(count_real_roots(&poly(&[6, 6]), &int(-2), &int(0)).unwrap(), 1);
        assert_eq!(count_real_roots(&poly(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
    }

    #[test]
    fn count_with_roots_on_endpoints() {
        // (x+1)(x-1)(x-2): open interval excludes both endpoint roots
        let g = poly(&[2, -1, -2, 1]);
        assert_eq!(count_real_roots(&g, &int(-1), &int(2)).unwrap(), 1);
        assert_eq!(count_real_roots(&g, &int(-1), &int(1)).unwrap(), 0);
        assert_eq!(count_real_roots(&g, &int(-2), &int(3)).unwrap(), 3);
        // repeated root does not confuse the count
        let g = poly(&[1, 2, 1]);
        assert_eq!(count_real_roots(&g, &int(-2), &int(0)).unwrap(), 1);
        assert_eq!(count_real_roots(&g, &int(-1), &int(0)).unwrap(), 0);
    }

    #[test]
    fn isolation_examples() {
        let iso = isolate_real_roots(&poly(&[6, 6])).unwrap();
        assert_eq!(iso.distinct(), 1);
        assert!(contains(&iso.intervals[0], &int(-1)));
        assert_eq!(iso.intervals[0].multiplicity, 1);

        let iso = isolate_real_roots(&poly(&[1, 2, 1])).unwrap();
        assert_eq!(iso.distinct(), 1);
        assert!(contains(&iso.intervals[0], &int(-1)));
        assert_eq!(iso.intervals[0].multiplicity, 2);
        assert_eq!(iso.total_multiplicity(), 2);

        let iso = isolate_real_roots(&poly(&[66, 17, 1])).unwrap();
        assert_eq!(iso.distinct(), 2);
        assert!(contains(&iso.intervals[0], &int(-11)));
        assert!(contains(&iso.intervals[1], &int(-6)));
        assert!(!iso.intervals[0].overlaps(&iso.intervals[1]));
        assert!(iso.all_simple());
    }

    #[test]
    fn mixed_multiplicities() {
        // (x - 1/2)^3 (x + 2)^2 (x^2 + 1)
        let cube = poly(&[-1, 2]).mul(&poly(&[-1, 2])).mul(&poly(&[-1, 2]));
        let g = cube.mul(&poly(&[2, 1])).mul(&poly(&[2, 1])).mul(&poly(&[1, 0, 1]));
        let iso = isolate_real_roots(&g).unwrap();
        assert_eq!(iso.distinct(), 2);
        assert_eq!(iso.intervals[0].multiplicity, 2);
        assert_eq!(iso.intervals[1].multiplicity, 3);
        assert_eq!(iso.total_multiplicity(), 5);
        let decomposition = squarefree_decomposition(&g).unwrap();
        assert_eq!(decomposition.len(), 3);
        assert_eq!(decomposition[0], poly(&[1, 0, 1]));
    }

    #[test]
    fn refinement_keeps_root() {
        let mut iso = isolate_real_roots(&poly(&[-2, 0, 1])).unwrap();
        iso.refine_to_width(&rat(1, 1000));
        let positive = &iso.intervals[1];
        assert!(&positive.hi - &positive.lo <= rat(1, 1000));
        assert!(positive.lo.is_positive());
        assert!(&positive.lo * &positive.lo < int(2) && &positive.hi * &positive.hi >= int(2));
    }

    #[test]
    fn exact_rational_roots_are_found() {
        let mut iso = isolate_real_roots(&poly(&[0, -1, 1])).unwrap();
        iso.refine_to_width(&rat(1, 64));
        let exact: Vec<_> = (0..iso.distinct()).filter_map(|i| iso.exact_root(i)).collect();
        assert_eq!(exact, vec![int(0), int(1)]);
    }

    proptest::proptest! {
        #[test]
        fn intervals_hold_one_root_each(roots in proptest::collection::vec(-40i64..40, 1..7)) {
            let g = roots
                .iter()
                .fold(poly(&[1]), |acc, &r| acc.mul(&Polynomial::new(vec![rat(-r, 4), int(1)]).unwrap()));
            let iso = isolate_real_roots(&g).unwrap();
            let chain = SturmChain::new(&g).unwrap();
            for interval in &iso.intervals {
                proptest::prop_assert_eq!(chain.count_half_open(&interval.lo, &interval.hi), 1);
            }
            for pair in iso.intervals.windows(2) {
                proptest::prop_assert!(pair[0].hi <= pair[1].lo);
            }
            let bound = cauchy_bound(&g);
            proptest::prop_assert_eq!(iso.distinct(), count_real_roots(&g, &-bound.clone(), &bound).unwrap());
            proptest::prop_assert_eq!(iso.total_multiplicity(), roots.len());
        }
    }
}
