//! Brute-force coloring counts and the interpolation oracle.
//!
//! Everything here avoids the reduction machinery on purpose: a chromatic
//! polynomial has degree n, so n+1 exhaustive counts determine it, giving an
//! independent check on the deletion-contraction path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graphcore::SimpleGraph;
use crate::polyalg::IntPoly;

/// Order cap for exhaustive counting.
pub const MAX_BRUTE_VERTICES: usize = 9;
const MAX_BRUTE_COLORS: u64 = 64;

/// Counts proper colorings of `g` with colors `1..=x` by exhaustive
/// backtracking over assignments.
pub fn count_colorings_brute(g: &SimpleGraph, x: u64) -> Result<BigInt> {
    let n = g.n();
    if n > MAX_BRUTE_VERTICES {
        return Err(Error::TooLarge(format!(
            "brute-force counting supports at most {MAX_BRUTE_VERTICES} vertices, got {n}"
        )));
    }
    if x > MAX_BRUTE_COLORS {
        return Err(Error::TooLarge(format!("at most {MAX_BRUTE_COLORS} colors, got {x}")));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    if x == 0 {
        return Ok(BigInt::zero());
    }

    // Visit each component breadth-first so every vertex after the first
    // has an already-colored neighbor; conflicts then prune immediately.
    let mut order = Vec::with_capacity(n);
    for comp in g.components() {
        let mut queue = std::collections::VecDeque::from([comp[0]]);
        let mut seen = 1u64 << comp[0];
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in g.neighbors(v) {
                if seen & (1 << w) == 0 {
                    seen |= 1 << w;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut colors = vec![0u64; n];
    let count = assign(g, &order, 0, x, &mut colors);
    Ok(BigInt::from(count))
}

fn assign(g: &SimpleGraph, order: &[usize], idx: usize, x: u64, colors: &mut [u64]) -> u64 {
    if idx == order.len() {
        return 1;
    }
    let v = order[idx];
    let mut forbidden = 0u64;
    for w in g.neighbors(v) {
        if order[..idx].contains(&w) {
            forbidden |= 1 << colors[w];
        }
    }
    let mut total = 0;
    for c in 0..x {
        if forbidden & (1 << c) == 0 {
            colors[v] = c;
            total += assign(g, order, idx + 1, x, colors);
        }
    }
    total
}

/// Recovers the chromatic polynomial of `g` from the n+1 brute-force counts
/// at x = 0..=n by exact Lagrange interpolation. Integrality of the result
/// is asserted, not assumed.
pub fn interpolate_chromatic(g: &SimpleGraph) -> Result<IntPoly> {
    let n = g.n();
    if n > MAX_BRUTE_VERTICES {
        return Err(Error::TooLarge(format!(
            "interpolation oracle supports at most {MAX_BRUTE_VERTICES} vertices, got {n}"
        )));
    }
    let points: Vec<(BigRational, BigRational)> = (0..=n as u64)
        .map(|x| {
            let y = count_colorings_brute(g, x)?;
            Ok((BigRational::from(BigInt::from(x)), BigRational::from(y)))
        })
        .collect::<Result<_>>()?;

    // Lagrange basis accumulation over Q[x].
    let mut acc = vec![BigRational::zero(); n + 1];
    for (j, (xj, yj)) in points.iter().enumerate() {
        let mut basis = vec![BigRational::zero(); n + 1];
        basis[0] = BigRational::one();
        let mut deg = 0;
        let mut denom = BigRational::one();
        for (i, (xi, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            // basis *= (x - xi)
            for d in (0..=deg).rev() {
                let c = basis[d].clone();
                basis[d + 1] += &c;
                basis[d] = -c * xi;
            }
            deg += 1;
            denom *= xj - xi;
        }
        let scale = yj / denom;
        for (a, b) in acc.iter_mut().zip(basis.iter()) {
            *a += b * &scale;
        }
    }

    let mut coeffs = Vec::with_capacity(acc.len());
    for (i, c) in acc.iter().enumerate() {
        if !c.denom().is_one() {
            return Err(Error::NonIntegerCoefficient(i));
        }
        coeffs.push(c.numer().clone());
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Proper colorings of the path on `t` vertices with both endpoint colors
/// fixed in advance, equal or distinct, out of `x` available colors.
pub fn path_fixed_endpoint_colorings(t: u64, x: u64, endpoints_equal: bool) -> Result<BigInt> {
    if t < 2 || x < 1 {
        return Err(Error::InvalidParams(format!(
            "path endpoint counts need t >= 2 and x >= 1, got t={t}, x={x}"
        )));
    }
    // e(i): colorings of the first i vertices ending in the first endpoint's
    // color; d(i): ending in one specific other color.
    let xm1 = BigInt::from(x - 1);
    let xm2 = BigInt::from(x as i64 - 2);
    let mut equal = BigInt::one();
    let mut distinct = BigInt::zero();
    for _ in 1..t {
        let next_equal = &xm1 * &distinct;
        let next_distinct = &equal + &xm2 * &distinct;
        equal = next_equal;
        distinct = next_distinct;
    }
    Ok(if endpoints_equal { equal } else { distinct })
}
