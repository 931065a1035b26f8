use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Integer square root of `n` when `n` is a perfect square.
pub fn is_perfect_square(n: &BigInt) -> Result<Option<BigInt>> {
    if n.is_negative() {
        return Err(Error::InvalidInput(format!("{n} is negative")));
    }
    let t = n.sqrt();
    Ok(if &t * &t == *n { Some(t) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(is_perfect_square(&4.into()).unwrap(), Some(2.into()));
        assert_eq!(is_perfect_square(&5.into()).unwrap(), None);
        assert_eq!(is_perfect_square(&0.into()).unwrap(), Some(0.into()));
        assert!(is_perfect_square(&(-1).into()).is_err());
    }

    #[test]
    fn large_square() {
        let t: BigInt = BigInt::from(10).pow(40) + 7;
        assert_eq!(is_perfect_square(&(&t * &t)).unwrap(), Some(t.clone()));
        assert_eq!(is_perfect_square(&(&t * &t + 1)).unwrap(), None);
    }
}
