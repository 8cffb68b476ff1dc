//! Closed-form predictions for the sizes and counts of full exceptional
//! sequences over the algebra families with known answers. These are the
//! independent oracles the enumerator is checked against.
//!
//! Everything is exact: big integers throughout, rationals for the
//! intermediate `8^k/12` style terms with a final integrality assertion,
//! and the `2 cos(n pi / 3)` factor as an `n mod 6` lookup in `{±1, ±2}`.

use crate::algebra::{AlgebraError, NakayamaAlgebra};
use crate::excseq::Mode;
use num::{BigInt, BigRational, BigUint, One, Zero};
use thiserror::Error;

/// Algebra families with closed-form answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Selfinjective, projective length equal to vertex count: size n, count n^n.
    SelfinjNN,
    /// Selfinjective with projective length n-1: size 2n-2, count n.
    SelfinjN1N,
    /// Selfinjective radical square zero: sizes 3k+1 / 3k-1, odd/even counts.
    Lambda2,
    /// Linearly oriented A_m path algebra: size m, count (m+1)^(m-1).
    HereditaryA,
    /// Linear radical square zero on n vertices: count of idempotent functions.
    LinearRad2,
}

/// A family member, selected by one integer parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub param: usize,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormulaError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn check_range(p: FamilyParams) -> Result<(), FormulaError> {
    let min = match p.family {
        Family::SelfinjNN => 2,
        Family::SelfinjN1N => 3,
        Family::Lambda2 => 2,
        Family::HereditaryA | Family::LinearRad2 => 1,
    };
    if p.param < min {
        return Err(FormulaError::OutOfRange(format!(
            "{:?} needs parameter >= {min}, got {}",
            p.family, p.param
        )));
    }
    Ok(())
}

/// The Nakayama algebra this family member denotes.
pub fn algebra_for(p: FamilyParams) -> Result<NakayamaAlgebra, FormulaError> {
    check_range(p)?;
    let n = p.param;
    let alg = match p.family {
        Family::SelfinjNN => NakayamaAlgebra::selfinjective(n, n)?,
        Family::SelfinjN1N => NakayamaAlgebra::selfinjective(n, n - 1)?,
        Family::Lambda2 => NakayamaAlgebra::selfinjective(n, 2)?,
        Family::HereditaryA => NakayamaAlgebra::hereditary_a(n)?,
        Family::LinearRad2 => {
            let mut series = vec![2; n.saturating_sub(1)];
            series.push(1);
            NakayamaAlgebra::linear(series)?
        }
    };
    Ok(alg)
}

/// The sequence mode whose counts the family's formula predicts.
pub fn mode_for(family: Family) -> Mode {
    match family {
        Family::SelfinjNN | Family::SelfinjN1N | Family::Lambda2 => Mode::Weak,
        Family::HereditaryA | Family::LinearRad2 => Mode::Standard,
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

fn pow(base: usize, exp: usize) -> BigUint {
    num::pow::pow(BigUint::from(base), exp)
}

/// Number of interleavings of two ordered bodies of sizes `x` and `y`:
/// `c(x, y) = sum_{j=2}^{x} C(y+j-2, j-1)`, which telescopes to
/// `C(y+x-1, y) - 1`. Both forms are computed and compared.
pub fn c_bodies(x: usize, y: usize) -> Result<BigUint, FormulaError> {
    if x < 2 || y < 1 {
        return Err(FormulaError::OutOfRange(format!("c_bodies needs x >= 2, y >= 1, got ({x}, {y})")));
    }
    let mut sum = BigUint::zero();
    for j in 2..=x {
        sum += binom(y + j - 2, j - 1);
    }
    let closed = binom(y + x - 1, y) - BigUint::one();
    assert_eq!(sum, closed, "c_bodies forms disagree at ({x}, {y})");
    Ok(sum)
}

/// `sum of C(n, j) over j = 0 mod 3`, checked against the closed form
/// `(2^n + 2 cos(n pi / 3)) / 3` with the cosine term resolved exactly by
/// `n mod 6`.
pub fn mod_three_binomial_sum(n: usize) -> BigUint {
    let mut direct = BigUint::zero();
    let mut j = 0;
    while j <= n {
        direct += binom(n, j);
        j += 3;
    }
    // 2 cos(n pi / 3) for n mod 6 = 0, 1, 2, 3, 4, 5
    const TWO_COS: [i64; 6] = [2, 1, -1, -2, -1, 1];
    let numerator = BigInt::from(2u32).pow(n as u32) + BigInt::from(TWO_COS[n % 6]);
    let (quotient, remainder) = num::Integer::div_rem(&numerator, &BigInt::from(3u32));
    assert!(remainder.is_zero(), "closed form not divisible by 3 at n = {n}");
    let closed = quotient.to_biguint().expect("closed form is nonnegative");
    assert_eq!(direct, closed, "mod-three binomial forms disagree at n = {n}");
    direct
}

/// Rotation-class count of full sequences for the even radical-square-zero
/// selfinjective case: `1 + k + sum_{j=1}^{k-1} c(3j+1, 3k-3j-2)`, checked
/// against the exact rational closed form `1 + 8^k/12 - (-1)^k/3`.
pub fn braid2_total(k: usize) -> Result<BigUint, FormulaError> {
    if k < 1 {
        return Err(FormulaError::OutOfRange(format!("braid2_total needs k >= 1, got {k}")));
    }
    let mut total = BigUint::from(1 + k);
    for j in 1..k {
        total += c_bodies(3 * j + 1, 3 * k - 3 * j - 2)?;
    }
    let eight_pow = BigInt::from(8u32).pow(k as u32);
    let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let closed = BigRational::one() + BigRational::new(eight_pow, BigInt::from(12u32))
        - BigRational::new(sign, BigInt::from(3u32));
    assert!(closed.is_integer(), "closed form is not an integer at k = {k}");
    let closed = closed.to_integer().to_biguint().expect("closed form is nonnegative");
    assert_eq!(total, closed, "braid2 forms disagree at k = {k}");
    Ok(total)
}

/// Predicted number of full sequences for the family member.
pub fn predicted_count(p: FamilyParams) -> Result<BigUint, FormulaError> {
    check_range(p)?;
    let n = p.param;
    let count = match p.family {
        Family::SelfinjNN => pow(n, n),
        Family::SelfinjN1N => BigUint::from(n),
        Family::Lambda2 => {
            if n % 2 == 1 {
                BigUint::from(n)
            } else {
                let k = n / 2;
                BigUint::from(2 * k) * braid2_total(k)?
            }
        }
        Family::HereditaryA => pow(n + 1, n - 1),
        Family::LinearRad2 => {
            let mut total = BigUint::zero();
            for j in 1..=n {
                total += binom(n, j) * pow(j, n - j);
            }
            total
        }
    };
    Ok(count)
}

/// Predicted size of a full sequence for the family member.
pub fn predicted_size(p: FamilyParams) -> Result<usize, FormulaError> {
    check_range(p)?;
    let n = p.param;
    let size = match p.family {
        Family::SelfinjNN => n,
        Family::SelfinjN1N => 2 * n - 2,
        Family::Lambda2 => {
            let k = n / 2;
            if n % 2 == 1 {
                3 * k + 1
            } else {
                3 * k - 1
            }
        }
        Family::HereditaryA => n,
        Family::LinearRad2 => n,
    };
    Ok(size)
}
