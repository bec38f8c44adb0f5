//! Certified sign analysis of integer polynomials on rays.
//!
//! [`certify_nonneg_on_ray`] decides whether `p(x) >= 0` for every real
//! `x >= a` and returns a checkable certificate either way. The machinery is
//! exact throughout: square-free reduction, Sturm-sequence root counting with
//! rational interval arithmetic, and one rational sample evaluation inside
//! every sign-constant region of the ray. Rational roots encountered during
//! bisection are split off exactly, so isolating intervals never have roots
//! on their endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::IntPoly;

/// One isolated real root of the analyzed polynomial.
///
/// The root lies in the open interval `(lo, hi)`, or exactly at `lo == hi`
/// when `exact` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub exact: bool,
    /// Whether the root lies in `[ray_start, +inf)`.
    pub inside_ray: bool,
}

/// Outcome of a ray-nonnegativity check.
#[derive(Debug, Clone, PartialEq)]
pub enum RayVerdict {
    NonnegOnRay,
    /// Exact rational witness `w >= ray_start` with `p(w) < 0`.
    NegativeAt(BigRational),
}

/// Proof object for the claim `p(x) >= 0` on `[ray_start, +inf)`.
#[derive(Debug, Clone)]
pub struct NonnegCertificate {
    pub poly: IntPoly,
    pub ray_start: BigRational,
    pub verdict: RayVerdict,
    /// Isolated real roots of the square-free part of `poly`, over the whole
    /// real line, each tagged inside/outside the ray.
    pub evidence: Vec<RootInterval>,
    /// Sign of the leading coefficient of `poly` (0 for the zero polynomial).
    pub leading_sign: i8,
}

impl NonnegCertificate {
    pub fn is_nonneg(&self) -> bool {
        matches!(self.verdict, RayVerdict::NonnegOnRay)
    }

    pub fn negative_witness(&self) -> Option<&BigRational> {
        match &self.verdict {
            RayVerdict::NegativeAt(w) => Some(w),
            RayVerdict::NonnegOnRay => None,
        }
    }

    pub fn is_identically_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// True when the polynomial is nonzero and has no real root on the ray,
    /// i.e. the inequality is strict everywhere on `[ray_start, +inf)`.
    pub fn root_free_on_ray(&self) -> bool {
        !self.poly.is_zero() && self.evidence.iter().all(|r| !r.inside_ray)
    }
}

fn rat_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootInterval", 4)?;
        st.serialize_field("lo", &rat_str(&self.lo))?;
        st.serialize_field("hi", &rat_str(&self.hi))?;
        st.serialize_field("exact", &self.exact)?;
        st.serialize_field("inside_ray", &self.inside_ray)?;
        st.end()
    }
}

impl Serialize for RayVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RayVerdict::NonnegOnRay => s.serialize_str("nonneg_on_ray"),
            RayVerdict::NegativeAt(w) => s.serialize_str(&format!("negative_at {}", rat_str(w))),
        }
    }
}

impl Serialize for NonnegCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NonnegCertificate", 5)?;
        st.serialize_field("poly", &self.poly)?;
        st.serialize_field("ray_start", &rat_str(&self.ray_start))?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("evidence", &self.evidence)?;
        st.serialize_field("leading_sign", &self.leading_sign)?;
        st.end()
    }
}

/// Certifies `q - p >= 0` on `[ray_start, +inf)`, i.e. `p <= q` on the ray.
///
/// Equality throughout the ray shows up as an identically-zero difference;
/// strictness can be read off [`NonnegCertificate::root_free_on_ray`].
pub fn leq_on_ray(p: &IntPoly, q: &IntPoly, ray_start: &BigRational) -> NonnegCertificate {
    certify_nonneg_on_ray(&(q - p), ray_start)
}

/// Decides `p(x) >= 0` for all real `x >= ray_start`, with evidence.
pub fn certify_nonneg_on_ray(p: &IntPoly, ray_start: &BigRational) -> NonnegCertificate {
    let leading_sign = match p.leading_coefficient() {
        None => 0,
        Some(c) if c.is_positive() => 1,
        Some(_) => -1,
    };
    if p.is_zero() {
        return NonnegCertificate {
            poly: p.clone(),
            ray_start: ray_start.clone(),
            verdict: RayVerdict::NonnegOnRay,
            evidence: Vec::new(),
            leading_sign,
        };
    }

    let squarefree = squarefree_part(p);
    let roots = isolate_roots(&squarefree, ray_start);
    let verdict = sample_verdict(p, ray_start, &roots);

    NonnegCertificate {
        poly: p.clone(),
        ray_start: ray_start.clone(),
        verdict,
        evidence: roots,
        leading_sign,
    }
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (internal)
// ---------------------------------------------------------------------------

/// Scales rational coefficients to a primitive integer polynomial with the
/// same sign everywhere (the scalar is always positive).
fn primitive_from_rational(coeffs: &[BigRational]) -> IntPoly {
    let mut lcm = BigInt::one();
    for c in coeffs {
        let d = c.denom();
        let g = gcd_int(&lcm, d);
        lcm = &lcm / &g * d;
    }
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = gcd_int(&content, c);
    }
    if content.is_zero() {
        return IntPoly::zero();
    }
    IntPoly::from_coeffs(ints.iter().map(|c| c / &content).collect())
}

fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn rational_coeffs(p: &IntPoly) -> Vec<BigRational> {
    p.coefficients().iter().map(|c| BigRational::from(c.clone())).collect()
}

/// Remainder of `a` modulo `b` in Q[x], returned as a primitive integer
/// polynomial (scaled by a positive rational, so signs are preserved).
fn primitive_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut rem = rational_coeffs(a);
    let div = rational_coeffs(b);
    let db = div.len() - 1;
    let lead = div.last().unwrap().clone();
    while rem.len() > db {
        let da = rem.len() - 1;
        let factor = rem.last().unwrap() / &lead;
        if !factor.is_zero() {
            for j in 0..=db {
                let t = &factor * &div[j];
                rem[da - db + j] -= t;
            }
        }
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if rem.is_empty() {
            break;
        }
    }
    primitive_from_rational(&rem)
}

fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = primitive_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `p` divided by its gcd with `p'`: same roots, all simple.
fn squarefree_part(p: &IntPoly) -> IntPoly {
    let d = p.derivative();
    if d.is_zero() {
        // degree 0
        return IntPoly::one();
    }
    let g = poly_gcd(p, &d);
    if g.degree() == Some(0) {
        return p.clone();
    }
    // Exact in Q[x]; primitivize to keep Sturm arithmetic on integers.
    let q = rational_div_exact(p, &g);
    primitive_from_rational(&q)
}

/// Quotient of `a / b` in Q[x]; remainder is known to vanish.
fn rational_div_exact(a: &IntPoly, b: &IntPoly) -> Vec<BigRational> {
    let mut rem = rational_coeffs(a);
    let div = rational_coeffs(b);
    let db = div.len() - 1;
    let lead = div.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let factor = rem.last().unwrap() / &lead;
        quot[da - db] = factor.clone();
        for j in 0..=db {
            let t = &factor * &div[j];
            rem[da - db + j] -= t;
        }
        rem.pop();
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    quot
}

/// Exact synthetic division by `(x - r)` for a known rational root `r`.
fn divide_out_root(q: &IntPoly, r: &BigRational) -> IntPoly {
    let coeffs = rational_coeffs(q);
    let n = coeffs.len();
    let mut quot = vec![BigRational::zero(); n - 1];
    let mut carry = BigRational::zero();
    for i in (1..n).rev() {
        carry = &coeffs[i] + &carry;
        quot[i - 1] = carry.clone();
        carry *= r;
    }
    primitive_from_rational(&quot)
}

// ---------------------------------------------------------------------------
// Sturm sequences and root isolation
// ---------------------------------------------------------------------------

struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    fn new(q: &IntPoly) -> Self {
        let mut chain = vec![q.clone(), q.derivative()];
        loop {
            let len = chain.len();
            if chain[len - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = primitive_rem(&chain[len - 2], &chain[len - 1]);
            chain.push(-&r);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, t: &BigRational) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let v = p.eval(t);
            let s: i8 = if v.is_zero() {
                continue;
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the open interval `(a, b)`; requires `q(a), q(b) != 0`.
    fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Strict upper bound on the magnitude of every real root.
fn cauchy_bound(q: &IntPoly) -> BigRational {
    let lead = BigRational::from(q.leading_coefficient().unwrap().abs());
    let mut max = BigRational::zero();
    let deg = q.degree().unwrap();
    for i in 0..deg {
        let c = BigRational::from(q.coefficient(i).abs()) / &lead;
        if c > max {
            max = c;
        }
    }
    max + BigRational::one()
}

#[derive(Debug, Clone)]
struct IsoItem {
    lo: BigRational,
    hi: BigRational,
    exact: bool,
    inside: bool,
}

/// Isolates every real root of square-free `q` into pairwise-disjoint items,
/// tagged by which side of `ray_start` they fall on. Exact rational roots
/// are returned as degenerate items.
fn isolate_roots(q: &IntPoly, ray_start: &BigRational) -> Vec<RootInterval> {
    let mut exact: Vec<(BigRational, bool)> = Vec::new();
    let mut q = q.clone();

    let intervals = 'outer: loop {
        if q.degree().map_or(true, |d| d == 0) {
            break Vec::new();
        }
        if q.eval(ray_start).is_zero() {
            exact.push((ray_start.clone(), true));
            q = divide_out_root(&q, ray_start);
            continue;
        }
        let chain = SturmChain::new(&q);
        let bound = {
            let b = cauchy_bound(&q);
            let pad = ray_start.abs() + BigRational::one();
            &b + &pad
        };
        let neg_bound = -bound.clone();

        // Bisect each side of the ray start independently so every interval
        // is wholly inside or outside the ray.
        let mut work: Vec<(BigRational, BigRational, bool)> = vec![
            (neg_bound, ray_start.clone(), false),
            (ray_start.clone(), bound, true),
        ];
        let mut found: Vec<IsoItem> = Vec::new();
        while let Some((lo, hi, inside)) = work.pop() {
            let count = chain.count_open(&lo, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 {
                found.push(IsoItem { lo, hi, exact: false, inside });
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
            if q.eval(&mid).is_zero() {
                exact.push((mid.clone(), mid >= *ray_start));
                q = divide_out_root(&q, &mid);
                continue 'outer;
            }
            work.push((lo, mid.clone(), inside));
            work.push((mid, hi, inside));
        }

        // Refine until intervals are disjoint from each other and clear of
        // every exact root, so sample points can be chosen between roots.
        found.sort_by(|x, y| (&x.lo, &x.hi).cmp(&(&y.lo, &y.hi)));
        match separate(&q, &chain, &mut found, &exact) {
            Ok(()) => break found,
            Err(root) => {
                exact.push((root.clone(), root >= *ray_start));
                q = divide_out_root(&q, &root);
                continue 'outer;
            }
        }
    };

    let mut items: Vec<RootInterval> = intervals
        .into_iter()
        .map(|it| RootInterval { lo: it.lo, hi: it.hi, exact: false, inside_ray: it.inside })
        .chain(exact.into_iter().map(|(r, inside)| RootInterval {
            lo: r.clone(),
            hi: r,
            exact: true,
            inside_ray: inside,
        }))
        .collect();
    items.sort_by(|x, y| (&x.lo, &x.hi).cmp(&(&y.lo, &y.hi)));
    items
}

/// Shrinks isolating intervals until they are pairwise non-overlapping and no
/// exact root lies in any closed interval. Fails with the root if a bisection
/// midpoint is itself a root of `q`.
fn separate(
    q: &IntPoly,
    chain: &SturmChain,
    items: &mut [IsoItem],
    exact: &[(BigRational, bool)],
) -> Result<(), BigRational> {
    let two = BigRational::from(BigInt::from(2));
    loop {
        let mut dirty = false;
        for i in 0..items.len() {
            let overlaps_next = i + 1 < items.len() && items[i].hi > items[i + 1].lo;
            let hits_exact = exact
                .iter()
                .any(|(r, _)| *r >= items[i].lo && *r <= items[i].hi);
            if overlaps_next || hits_exact {
                let mid = (&items[i].lo + &items[i].hi) / &two;
                if q.eval(&mid).is_zero() {
                    return Err(mid);
                }
                if chain.count_open(&items[i].lo, &mid) == 1 {
                    items[i].hi = mid;
                } else {
                    items[i].lo = mid;
                }
                dirty = true;
            }
        }
        if !dirty {
            return Ok(());
        }
        items.sort_by(|x, y| (&x.lo, &x.hi).cmp(&(&y.lo, &y.hi)));
    }
}

/// Evaluates `p` at one rational point inside every sign-constant region of
/// the ray and derives the verdict.
fn sample_verdict(p: &IntPoly, ray_start: &BigRational, roots: &[RootInterval]) -> RayVerdict {
    let two = BigRational::from(BigInt::from(2));
    let inside: Vec<&RootInterval> = roots.iter().filter(|r| r.inside_ray).collect();

    let mut samples: Vec<BigRational> = vec![ray_start.clone()];
    for (i, item) in inside.iter().enumerate() {
        // One sample strictly between this root and the next (or past the
        // last root, where the sign matches the leading coefficient).
        let sample = if item.exact {
            match inside.get(i + 1) {
                // Separation guarantees item.hi < next.lo for exact items.
                Some(next) if next.exact => (&item.hi + &next.lo) / &two,
                Some(next) => next.lo.clone(),
                None => &item.hi + BigRational::one(),
            }
        } else {
            item.hi.clone()
        };
        samples.push(sample);
    }

    let mut witness: Option<BigRational> = None;
    for s in samples {
        if p.eval(&s).is_negative() {
            match &witness {
                Some(w) if *w <= s => {}
                _ => witness = Some(s),
            }
        }
    }
    match witness {
        Some(w) => RayVerdict::NegativeAt(w),
        None => RayVerdict::NonnegOnRay,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{f_bound, falling_factorial, parse_rational};

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn check_soundness(cert: &NonnegCertificate) {
        match &cert.verdict {
            RayVerdict::NegativeAt(w) => {
                assert!(*w >= cert.ray_start, "witness below ray start");
                assert!(cert.poly.eval(w).is_negative(), "witness not negative");
            }
            RayVerdict::NonnegOnRay => {
                // Exhaustive grid scan: a + j/7 for j = 0..=700.
                let step = rat("1/7");
                let mut x = cert.ray_start.clone();
                for _ in 0..=700 {
                    assert!(
                        !cert.poly.eval(&x).is_negative(),
                        "claimed nonneg but p({x}) < 0 for {}",
                        cert.poly
                    );
                    x += &step;
                }
            }
        }
    }

    #[test]
    fn perfect_square_is_nonneg_from_zero() {
        let cert = certify_nonneg_on_ray(&p(&[0, 0, 1]), &rat("0"));
        assert!(cert.is_nonneg());
        check_soundness(&cert);
        // x^2 has a root at 0, inside the ray, so the bound is not strict.
        assert!(!cert.root_free_on_ray());
    }

    #[test]
    fn quadratic_with_small_roots_is_positive_past_four() {
        // x^2 - 3x + 1 has roots (3 ± sqrt 5)/2 < 4.
        let cert = certify_nonneg_on_ray(&p(&[1, -3, 1]), &rat("4"));
        assert!(cert.is_nonneg());
        assert!(cert.root_free_on_ray());
        assert_eq!(cert.evidence.len(), 2);
        assert!(cert.evidence.iter().all(|r| !r.inside_ray));
        check_soundness(&cert);
    }

    #[test]
    fn negative_leading_linear_is_caught() {
        let cert = certify_nonneg_on_ray(&p(&[10, -1]), &rat("4"));
        let w = cert.negative_witness().expect("must find a witness");
        assert!(p(&[10, -1]).eval(w).is_negative());
        assert!(*w >= rat("4"));
        check_soundness(&cert);
    }

    #[test]
    fn zero_polynomial_is_nonneg_with_empty_evidence() {
        let cert = certify_nonneg_on_ray(&IntPoly::zero(), &rat("-100"));
        assert!(cert.is_nonneg());
        assert!(cert.evidence.is_empty());
        assert!(cert.is_identically_zero());
        assert_eq!(cert.leading_sign, 0);
    }

    #[test]
    fn leq_of_poly_with_itself_is_identically_zero() {
        let q = p(&[3, -2, 5, 1]);
        let cert = leq_on_ray(&q, &q, &rat("2"));
        assert!(cert.is_nonneg());
        assert!(cert.is_identically_zero());
    }

    #[test]
    fn extremal_graph_polynomial_equals_bound_on_whole_ray() {
        // P(G_{5,4}) = (x)_4 (x-2) expands to exactly f_{5,4}.
        let poly = &falling_factorial(4, 0) * &p(&[-2, 1]);
        let cert = leq_on_ray(&poly, &f_bound(5, 4).unwrap(), &rat("4"));
        assert!(cert.is_nonneg());
        assert!(cert.is_identically_zero());
    }

    #[test]
    fn root_exactly_at_ray_start_is_inside_and_nonneg() {
        // (x-4)^2 on [4, inf): nonneg, root at the ray start.
        let sq = p(&[-4, 1]).pow(2);
        let cert = certify_nonneg_on_ray(&sq, &rat("4"));
        assert!(cert.is_nonneg());
        assert!(!cert.root_free_on_ray());
        let inside: Vec<_> = cert.evidence.iter().filter(|r| r.inside_ray).collect();
        assert_eq!(inside.len(), 1);
        assert!(inside[0].exact);
        check_soundness(&cert);
    }

    #[test]
    fn even_multiplicity_root_inside_ray_stays_nonneg() {
        // (x-6)^2 (x^2+1) on [2, inf)
        let q = &p(&[-6, 1]).pow(2) * &p(&[1, 0, 1]);
        let cert = certify_nonneg_on_ray(&q, &rat("2"));
        assert!(cert.is_nonneg());
        check_soundness(&cert);
    }

    #[test]
    fn odd_root_inside_ray_gives_negative_witness() {
        // (x-6)^3 dips negative on [2, 6).
        let q = p(&[-6, 1]).pow(3);
        let cert = certify_nonneg_on_ray(&q, &rat("2"));
        check_soundness(&cert);
        assert!(!cert.is_nonneg());
    }

    #[test]
    fn irrational_roots_straddling_ray_start() {
        // (x^2 - 2)(x^2 - 10): roots ±sqrt2, ±sqrt10; ray from 2 sees sqrt10 only.
        let q = &p(&[-2, 0, 1]) * &p(&[-10, 0, 1]);
        let cert = certify_nonneg_on_ray(&q, &rat("2"));
        check_soundness(&cert);
        assert!(!cert.is_nonneg(), "negative between 2 and sqrt(10)");
        let inside = cert.evidence.iter().filter(|r| r.inside_ray).count();
        assert_eq!(inside, 1);
        assert_eq!(cert.evidence.len(), 4);
    }

    #[test]
    fn dense_rational_roots_are_split_exactly() {
        // (x-2)(x-3)(x-4)(x-5): all roots rational, two coincide with common
        // bisection midpoints.
        let q = falling_factorial(4, 2);
        let cert = certify_nonneg_on_ray(&q, &rat("2"));
        check_soundness(&cert);
        assert!(!cert.is_nonneg(), "product of one positive and three negative factors on (2,3)");
        let cert = certify_nonneg_on_ray(&q, &rat("5"));
        assert!(cert.is_nonneg());
        check_soundness(&cert);
    }

    #[test]
    fn falling_factorial_sign_structure() {
        // (x-2)(x-3) is negative strictly between its roots.
        let q = falling_factorial(2, 2);
        let cert = certify_nonneg_on_ray(&q, &rat("0"));
        check_soundness(&cert);
        assert!(!cert.is_nonneg());
        // and nonnegative from the last root onward
        let cert = certify_nonneg_on_ray(&q, &rat("3"));
        assert!(cert.is_nonneg());
        check_soundness(&cert);
    }

    #[test]
    fn soundness_battery() {
        let polys = vec![
            p(&[1]),
            p(&[-1]),
            p(&[0, 1]),
            p(&[5, -1]),
            p(&[1, -3, 1]),
            p(&[-7, 0, 0, 2]),
            falling_factorial(5, 0),
            falling_factorial(6, -3),
            f_bound(7, 4).unwrap(),
            &f_bound(6, 4).unwrap() - &falling_factorial(6, 0),
            p(&[-6, 1]).pow(4),
            &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]),
        ];
        for q in &polys {
            for start in ["-3", "0", "2", "7/2", "4"] {
                let cert = certify_nonneg_on_ray(q, &rat(start));
                check_soundness(&cert);
            }
        }
    }

    #[test]
    fn certificate_serializes_to_json() {
        let cert = certify_nonneg_on_ray(&p(&[1, -3, 1]), &rat("4"));
        let js = serde_json::to_value(&cert).unwrap();
        assert_eq!(js["verdict"], "nonneg_on_ray");
        assert_eq!(js["leading_sign"], 1);
        assert_eq!(js["evidence"].as_array().unwrap().len(), 2);
    }
}
