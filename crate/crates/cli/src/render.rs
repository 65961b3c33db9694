//! Report-envelope assembly and the text conversions shared by the
//! subcommands: flexible rational parsing (fractions, decimals, scientific
//! notation), the `q` variable alias, and JSON projections of the library's
//! report and certificate types.

use serde_json::{json, Value};
use sturm_core::genus::NiceCertificate;
use sturm_core::poly::{rat, Poly, Rat};
use sturm_core::report::{CheckReport, Clause};
use sturm_core::roots::RootIsolation;

/// One envelope per run. Verdict fields are exact-arithmetic outputs;
/// decimals appear only under `approximations`.
pub fn envelope(
    command: &str,
    inputs: Value,
    result: Value,
    approximations: Option<Value>,
) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "exact": true,
        "approximations": approximations,
    })
}

/// Accepts `x` or `q` as the variable name, normalizing to `x` internally.
pub fn parse_poly(text: &str) -> Result<Poly, String> {
    Poly::parse(&text.replace('q', "x")).map_err(|e| e.to_string())
}

/// Rational from `a/b`, integer, decimal (`0.25`), or scientific (`1e-4`,
/// `2.5e3`) notation.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let s = text.trim();
    let bad = || format!("cannot read {s:?} as a rational number");
    if let Some(epos) = s.find(['e', 'E']) {
        let mantissa = parse_decimal(&s[..epos])?;
        let exp: i32 = s[epos + 1..].parse().map_err(|_| bad())?;
        let pow: Rat = format!("1{}", "0".repeat(exp.unsigned_abs() as usize))
            .parse()
            .map_err(|_| bad())?;
        return Ok(if exp >= 0 {
            mantissa * pow
        } else {
            mantissa / pow
        });
    }
    parse_decimal(s)
}

fn parse_decimal(text: &str) -> Result<Rat, String> {
    let s = text.trim();
    let bad = || format!("cannot read {s:?} as a rational number");
    match s.split_once('.') {
        None => s.parse().map_err(|_| bad()),
        Some((int, frac)) => {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let (sign, digits) = match int.strip_prefix('-') {
                Some(rest) => ("-", rest),
                None => ("", int.strip_prefix('+').unwrap_or(int)),
            };
            if !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            format!("{sign}{digits}{frac}/1{}", "0".repeat(frac.len()))
                .parse()
                .map_err(|_| bad())
        }
    }
}

/// Decimal places needed so that the rendered midpoint is informative for
/// an interval of the given width: the smallest `d` with `10^{-d} ≤ width`,
/// capped at 24.
pub fn digits_for(width: &Rat) -> u32 {
    let one = rat(1);
    let ten = rat(10);
    let mut digits = 1u32;
    let mut scaled = width * &ten;
    while scaled < one && digits < 24 {
        scaled = &scaled * &ten;
        digits += 1;
    }
    digits
}

fn clause_json(c: &Clause) -> Value {
    json!({"name": c.name, "pass": c.pass, "witness": c.witness})
}

pub fn report_json(rep: &CheckReport) -> Value {
    json!({
        "hypotheses": rep.hypotheses.iter().map(clause_json).collect::<Vec<_>>(),
        "conclusions": rep.conclusions.iter().map(clause_json).collect::<Vec<_>>(),
        "constructed": rep
            .constructed
            .iter()
            .map(|(name, value)| json!({"name": name, "value": value}))
            .collect::<Vec<_>>(),
        "notes": rep.notes,
        "hypotheses_pass": rep.hypotheses_pass(),
        "conclusions_pass": rep.conclusions_pass(),
        "all_pass": rep.all_pass(),
        "violation": rep.is_violation(),
    })
}

pub fn certificate_json(cert: &NiceCertificate) -> Value {
    json!({
        "verdict": cert.verdict,
        "clauses": cert.clauses.iter().map(clause_json).collect::<Vec<_>>(),
        "determinant": cert.determinant.to_text("x"),
        "failure_witness": cert.failure_witness.as_ref().map(ToString::to_string),
    })
}

pub fn isolation_json(iso: &RootIsolation) -> Value {
    json!({
        "squarefree": iso.squarefree.to_text("x"),
        "distinct_roots": iso.distinct_count(),
        "roots_with_multiplicity": iso.total_with_multiplicity(),
        "roots": iso
            .roots
            .iter()
            .map(|r| {
                json!({
                    "lo": r.interval.lo.to_string(),
                    "hi": r.interval.hi.to_string(),
                    "multiplicity": r.multiplicity,
                })
            })
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sturm_core::poly::frac;

    #[test]
    fn rational_parsing_accepts_all_advertised_forms() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-7/2").unwrap(), frac(-7, 2));
        assert_eq!(parse_rat("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_rat("-0.5").unwrap(), frac(-1, 2));
        assert_eq!(parse_rat("1e-4").unwrap(), frac(1, 10_000));
        assert_eq!(parse_rat("2.5e3").unwrap(), rat(2500));
        assert_eq!(parse_rat("1.5E-3").unwrap(), frac(3, 2000));
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.2.3").is_err());
        assert!(parse_rat("1.").is_err());
    }

    #[test]
    fn digit_counts_track_the_width() {
        assert_eq!(digits_for(&frac(1, 10_000)), 4);
        assert_eq!(digits_for(&frac(1, 1_000_000)), 6);
        assert_eq!(digits_for(&frac(3, 100)), 2);
        assert_eq!(digits_for(&rat(1)), 1);
    }

    #[test]
    fn the_q_alias_is_normalized() {
        assert_eq!(
            parse_poly("q^2 - 2").unwrap(),
            Poly::parse("x^2 - 2").unwrap()
        );
    }
}
