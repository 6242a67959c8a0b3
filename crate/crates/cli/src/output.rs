use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;
use stripless::{Partition, SchubertClass};

/// Largest integer a JSON consumer can hold exactly in a double.
const MAX_SAFE: i64 = (1 << 53) - 1;

#[derive(Serialize)]
pub struct Record {
    pub r: usize,
    pub n: usize,
    pub formula: &'static str,
    pub degree: usize,
    pub coefficients: Vec<Term>,
}

#[derive(Serialize)]
pub struct Term {
    pub mu: Vec<usize>,
    pub coeff: Value,
}

fn json_integer(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE => Value::from(v),
        _ => Value::String(c.to_string()),
    }
}

pub fn record(class: &SchubertClass, formula: &'static str, degree: usize) -> Record {
    let ctx = class.ctx();
    Record {
        r: ctx.r(),
        n: ctx.n(),
        formula,
        degree,
        coefficients: class
            .iter()
            .map(|(mu, c)| Term {
                mu: mu.parts().to_vec(),
                coeff: json_integer(c),
            })
            .collect(),
    }
}

fn cli_partition(mu: &Partition) -> String {
    if mu.is_empty() {
        return "0".into();
    }
    mu.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn json(class: &SchubertClass, formula: &'static str, degree: usize) -> String {
    let mut s = serde_json::to_string(&record(class, formula, degree)).expect("plain data");
    s.push('\n');
    s
}

pub fn csv(class: &SchubertClass) -> String {
    let mut out = String::from("mu,coeff\n");
    for (mu, c) in class.iter() {
        out.push_str(&format!("\"{}\",{c}\n", cli_partition(mu)));
    }
    out
}

pub fn ascii(class: &SchubertClass, formula: &'static str, degree: usize) -> String {
    let mut out = format!("{} degree {degree} ({formula})\n", class.ctx());
    let width = class.iter().map(|(_, c)| c.to_string().len()).max().unwrap_or(1);
    for (mu, c) in class.iter() {
        out.push_str(&format!("{c:>width$}  s{mu}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use stripless::{FormalClass, GrassmannianContext};

    use super::*;

    #[test]
    fn large_coefficients_become_strings() {
        assert_eq!(json_integer(&BigInt::from(MAX_SAFE)), Value::from(MAX_SAFE));
        assert_eq!(json_integer(&BigInt::from(MAX_SAFE + 1)), Value::String("9007199254740992".into()));
        assert_eq!(json_integer(&BigInt::from(-3)), Value::from(-3));
    }

    #[test]
    fn formats_agree_on_terms() {
        let g = GrassmannianContext::new(2, 5).unwrap();
        let class: SchubertClass = FormalClass::from_terms(
            g,
            [
                (Partition::new(vec![2]).unwrap(), BigInt::from(3)),
                (Partition::new(vec![1, 1]).unwrap(), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(csv(&class), "mu,coeff\n\"1,1\",1\n\"2\",3\n");
        assert_eq!(ascii(&class, "berget-fink", 2), "Gr(2,5) degree 2 (berget-fink)\n1  s(1,1)\n3  s(2)\n");
        let value: Value = serde_json::from_str(&json(&class, "berget-fink", 2)).unwrap();
        assert_eq!(value["coefficients"][1]["mu"], serde_json::json!([2]));
        assert_eq!(value["coefficients"][1]["coeff"], serde_json::json!(3));
    }
}
