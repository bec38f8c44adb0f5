//! Certificates for the three falling-factorial/power inequalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::polyalg::{certify_nonneg_on_ray, falling_factorial, IntPoly, NonnegCertificate};

/// Certificates for one value of `k`:
/// 1. `(x-2)_k  <= (x-1)^k - k(x-1)^{k-1}`
/// 2. `(x-2)^k  <= (x-1)^k - (x-1)^{k-1}`
/// 3. `(x-2)^k  <= (x-1)^k - k(x-1)^{k-1} + (k(k-1)/2)(x-1)^{k-2}`, an
///    equality identically when `k = 2` and strict on the ray for `k >= 3`.
#[derive(Debug, Clone, Serialize)]
pub struct Prop13Report {
    pub k: usize,
    pub ineq1: NonnegCertificate,
    pub ineq2: NonnegCertificate,
    pub ineq3: NonnegCertificate,
    pub ineq3_identically_zero: bool,
    pub ineq3_root_free: bool,
}

/// Certifies all three inequalities for every `k` in `2..=k_max` on
/// `[ray_start, +inf)`. The certificates report whatever is true at the
/// requested ray; callers asserting nonnegativity pick the ray.
pub fn check_proposition_inequalities(k_max: usize, ray_start: &BigRational) -> Vec<Prop13Report> {
    (2..=k_max)
        .map(|k| {
            let xm1 = IntPoly::from_i64_coeffs(&[-1, 1]);
            let xm2 = IntPoly::from_i64_coeffs(&[-2, 1]);
            let k_int = BigInt::from(k as u64);
            let choose2 = BigInt::from((k * (k - 1) / 2) as u64);

            let diff1 = &(&xm1.pow(k) - &xm1.pow(k - 1).scale(&k_int)) - &falling_factorial(k, 2);
            let diff2 = &(&xm1.pow(k) - &xm1.pow(k - 1)) - &xm2.pow(k);
            let diff3 = &(&(&xm1.pow(k) - &xm1.pow(k - 1).scale(&k_int))
                + &xm1.pow(k - 2).scale(&choose2))
                - &xm2.pow(k);

            let ineq3 = certify_nonneg_on_ray(&diff3, ray_start);
            let ineq3_identically_zero = ineq3.is_identically_zero();
            let ineq3_root_free = ineq3.root_free_on_ray();
            Prop13Report {
                k,
                ineq1: certify_nonneg_on_ray(&diff1, ray_start),
                ineq2: certify_nonneg_on_ray(&diff2, ray_start),
                ineq3,
                ineq3_identically_zero,
                ineq3_root_free,
            }
        })
        .collect()
}
