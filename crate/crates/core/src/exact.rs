//! Serialization of exact integers: values of magnitude at most `2^53` are
//! written as numbers, larger ones as decimal strings.

use num_bigint::BigInt;
use serde::Serializer;

pub const JSON_SAFE_MAX: u64 = 1 << 53;

pub fn big<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(x) {
        Ok(v) if v.unsigned_abs() <= JSON_SAFE_MAX => s.serialize_i64(v),
        _ => s.serialize_str(&x.to_string()),
    }
}

pub fn big_vec<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(Exact))
}

pub fn wide<S: Serializer>(x: &u128, s: S) -> Result<S::Ok, S::Error> {
    if *x <= JSON_SAFE_MAX as u128 {
        s.serialize_u64(*x as u64)
    } else {
        s.serialize_str(&x.to_string())
    }
}

pub fn unsigned<S: Serializer>(x: &u64, s: S) -> Result<S::Ok, S::Error> {
    wide(&(*x as u128), s)
}

/// Wrapper serializing a [`BigInt`] through [`big`].
pub struct Exact<'a>(pub &'a BigInt);

impl serde::Serialize for Exact<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        big(self.0, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(serde::Serialize)]
    struct Row {
        #[serde(serialize_with = "big")]
        x: BigInt,
        #[serde(serialize_with = "wide")]
        y: u128,
    }

    #[test]
    fn threshold() {
        let at = Row { x: BigInt::from(JSON_SAFE_MAX), y: JSON_SAFE_MAX as u128 };
        assert_eq!(serde_json::to_string(&at).unwrap(), r#"{"x":9007199254740992,"y":9007199254740992}"#);
        let above = Row { x: BigInt::from(JSON_SAFE_MAX) + 1, y: JSON_SAFE_MAX as u128 + 1 };
        assert_eq!(
            serde_json::to_string(&above).unwrap(),
            r#"{"x":"9007199254740993","y":"9007199254740993"}"#
        );
        let neg = Row { x: BigInt::from(-5), y: 0 };
        assert_eq!(serde_json::to_string(&neg).unwrap(), r#"{"x":-5,"y":0}"#);
    }
}
