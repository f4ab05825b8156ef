//! The published table of `d_n^{(r)}` for `r ≤ 5`, `n ≤ 6`, kept verbatim so
//! that disagreements with the computed values are reported, not patched.

use num_bigint::BigInt;
use serde::Serialize;

use super::numbers::{CountMethod, CountTable};
use crate::error::CountingError;

/// Rows `r = 1..=5`, columns `n = 0..=6`, as printed.
pub const PUBLISHED_TABLE: [[u64; 7]; 5] = [
    [1, 0, 1, 2, 9, 44, 265],
    [1, 1, 5, 29, 233, 2329, 27949],
    [1, 2, 12, 116, 1393, 20894, 376093],
    [1, 3, 25, 299, 4785, 95699, 2296777],
    [1, 4, 41, 614, 12281, 307024, 9210721],
];

pub fn published_value(r: u32, n: usize) -> Option<u64> {
    let row = PUBLISHED_TABLE.get((r as usize).checked_sub(1)?)?;
    row.get(n).copied()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub r: u32,
    pub n: usize,
    #[serde(serialize_with = "crate::counting::table::as_string")]
    pub published: BigInt,
    #[serde(serialize_with = "crate::counting::table::as_string")]
    pub computed: BigInt,
}

pub(crate) fn as_string<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Every published cell whose value differs from `method`.
pub fn table_discrepancies(
    method: CountMethod,
    bound: u64,
) -> Result<Vec<Discrepancy>, CountingError> {
    let mut out = Vec::new();
    for (i, row) in PUBLISHED_TABLE.iter().enumerate() {
        let r = i as u32 + 1;
        let computed = CountTable::build(method, r, row.len() - 1, bound)?;
        for (n, &printed) in row.iter().enumerate() {
            let c = &computed.values[n];
            if *c != BigInt::from(printed) {
                out.push(Discrepancy {
                    r,
                    n,
                    published: BigInt::from(printed),
                    computed: c.clone(),
                });
            }
        }
    }
    Ok(out)
}
