//! JSON rendering. Exact rationals are written as `"p/q"` strings next to a
//! decimal approximation; integers are written as JSON numbers when they
//! fit in an `i64` and as strings otherwise.

use matradix::linalg::spectral::SpectralCert;
use matradix::norms::NormalModuli;
use matradix::scalar::{format_rational, to_f64};
use matradix::{
    BigInt, BigRational, BoundsReport, ConditionReport, DigitSet, Interval, Matrix, PseudodigitTable,
    Representation, Verdict,
};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vectors(vs: &[Vec<BigInt>]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

pub fn rational(x: &BigRational) -> Value {
    json!({ "exact": format_rational(x), "approx": to_f64(x) })
}

pub fn interval(i: &Interval) -> Value {
    json!({ "lo": rational(&i.lo), "hi": rational(&i.hi) })
}

pub fn int_matrix(m: &Matrix<BigInt>) -> Value {
    Value::Array(m.rows().map(vector).collect())
}

pub fn rat_matrix(m: &Matrix<BigRational>) -> Value {
    Value::Array(m.rows().map(|r| Value::Array(r.iter().map(|x| json!(format_rational(x))).collect())).collect())
}

fn header(name: Option<&str>, a: &Matrix<BigInt>) -> Map<String, Value> {
    let mut m = Map::new();
    if let Some(name) = name {
        m.insert("name".into(), json!(name));
    }
    m.insert("n".into(), json!(a.dim()));
    m.insert("matrix".into(), int_matrix(a));
    m
}

pub fn digit_set(name: Option<&str>, ds: &DigitSet) -> Value {
    let mut m = header(name, ds.matrix());
    m.insert("det".into(), int(ds.det()));
    m.insert("q".into(), json!(ds.q()));
    m.insert("convention".into(), json!(convention_name(ds)));
    m.insert("smith_diagonal".into(), vector(&ds.smith().diag));
    m.insert("digits".into(), vectors(ds.digits()));
    Value::Object(m)
}

fn convention_name(ds: &DigitSet) -> &'static str {
    if !ds.is_canonical() {
        return "explicit";
    }
    match ds.convention() {
        matradix::BoxConvention::F => "f",
        matradix::BoxConvention::U => "u",
    }
}

fn normal(nm: &NormalModuli) -> Value {
    json!({
        "exact": nm.exact,
        "m": interval(&nm.m()),
        "M": interval(&nm.big_m()),
    })
}

pub fn bounds(b: &BoundsReport) -> Value {
    json!({
        "c_upper": rational(&b.c_upper),
        "sigma_min_lower": rational(&b.sigma_min_lb),
        "sigma_max_upper": rational(&b.sigma_max_ub),
        "m_lower": rational(&b.m_lower),
        "M_upper": rational(&b.m_upper),
        "rho_upper": rational(&b.rho_upper),
        "R_upper": rational(&b.r_upper),
        "closed_form_R_upper": b.closed_form_r.as_ref().map(rational),
        "normal": b.normal_exact.as_ref().map(normal),
        "truncation_block": b.block_len,
        "theta_sq": rational(&b.theta_sq),
    })
}

pub const YIELDS_RADIX: &str = "yields radix representation";
pub const YIELDS_PSEUDO: &str = "yields pseudodigit representation";

pub fn table(name: Option<&str>, ds: &DigitSet, t: &PseudodigitTable) -> Value {
    let mut m = header(name, ds.matrix());
    m.insert("summary".into(), json!(if t.is_empty() { YIELDS_RADIX } else { YIELDS_PSEUDO }));
    m.insert("digits".into(), vectors(ds.digits()));
    m.insert("convention".into(), json!(convention_name(ds)));
    m.insert("pseudodigits".into(), vectors(t.s()));
    m.insert(
        "cycles".into(),
        Value::Array(t.cycles.iter().map(|c| json!({ "length": c.len(), "elements": vectors(c) })).collect()),
    );
    m.insert("search".into(), json!({
        "ball_radius": t.ball_radius_used.as_ref().map(rational),
        "box": Value::Array(t.search_box.iter().map(|(lo, hi)| json!([int(lo), int(hi)])).collect()),
        "points_searched": t.points_searched,
    }));
    m.insert("bounds".into(), bounds(&t.bounds));
    Value::Object(m)
}

pub fn representation(rep: &Representation) -> Value {
    match rep {
        Representation::Radix { digits } => json!({
            "kind": "radix",
            "N": digits.len() - 1,
            "digits": vectors(digits),
        }),
        Representation::Pseudo { digits, pseudodigit } => json!({
            "kind": "pseudo",
            "N": digits.len(),
            "digits": vectors(digits),
            "pseudodigit": vector(pseudodigit),
        }),
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::GuaranteedRadix => "guaranteed_radix",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn certificate(c: &SpectralCert) -> Value {
    json!({
        "abs_det": int(&c.q_abs_det),
        "is_dilation": c.is_dilation,
        "unit_circle_root": c.unit_circle_root,
        "sigma_min_lower": rational(&c.sigma_min_lb),
        "sigma_min_upper": rational(&c.sigma_min_ub),
        "sigma_max_upper": rational(&c.sigma_max_ub),
        "sigma_min_sq_exceeds": Value::Object(
            c.mu_gt_threshold_results.iter().map(|(t, b)| (format_rational(t), json!(b))).collect()
        ),
    })
}

pub fn conditions(name: Option<&str>, a: &Matrix<BigInt>, r: &ConditionReport) -> Map<String, Value> {
    let mut m = header(name, a);
    m.insert("is_dilation".into(), json!(r.is_dilation));
    m.insert("mu_gt_2sqrtn".into(), json!(r.mu_gt_2sqrtn));
    m.insert("mu_gt_2".into(), json!(r.mu_gt_2));
    m.insert("jeong_c_in_au".into(), json!(r.jeong_c_in_au));
    m.insert("jeong_c_in_af".into(), json!(r.jeong_c_in_af));
    m.insert("verdict".into(), json!(verdict(r.verdict)));
    m.insert("certificate".into(), certificate(&r.certificate));
    m
}

pub fn consistency(c: &matradix::Consistency) -> Value {
    json!({
        "verdict": verdict(c.verdict),
        "yields_radix": c.yields_radix,
        "pseudodigit_count": c.pseudodigit_count,
        "consistent": true,
    })
}

/// Pretty JSON with a trailing LF.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
