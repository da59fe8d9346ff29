//! The invariant cone family `±W_d`, the defining function `f_d`, the
//! Ad-invariant Cartan projection `F`, and barrier functions `h_d`.
//!
//! `W_∞ = ℝ × V × (0,∞)` and, for finite `d`,
//! `W_d = {(t,x,s) ∈ W_∞ : f_d(t,x,s) > 0}` with
//! `f_d(t,x,s) = t + ds − ‖x‖²/(2s)`. Membership reports are tri-state
//! (inside / boundary band / outside) with a `1e-12` band so invariance tests
//! stay robust at orbit boundaries.

use serde::{Deserialize, Serialize};

use crate::group_real::AlgebraElement;
use crate::spectral::ModeVector;
use crate::{Error, Result};

/// Half-width of the boundary band used in tri-state membership reports.
pub const MEMBERSHIP_BAND: f64 = 1e-12;

/// Cone parameter `d ∈ ℝ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConeD {
    Finite(f64),
    Infinite,
}

impl ConeD {
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.eq_ignore_ascii_case("inf") || trimmed.eq_ignore_ascii_case("infinity") {
            return Ok(ConeD::Infinite);
        }
        trimmed
            .parse::<f64>()
            .map(ConeD::Finite)
            .map_err(|_| Error::InvalidJson(format!("cone parameter {text:?} is not a number or \"inf\"")))
    }
}

impl std::fmt::Display for ConeD {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConeD::Finite(d) => write!(f, "{d}"),
            ConeD::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ConeD {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ConeD::Finite(d) => ser.serialize_f64(*d),
            ConeD::Infinite => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ConeD {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(d) => Ok(ConeD::Finite(d)),
            Raw::Text(s) => ConeD::parse(&s).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// A cone `sign·W_d` from the invariant family.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConeParameter {
    pub d: ConeD,
    pub sign: Sign,
}

impl ConeParameter {
    pub fn positive(d: ConeD) -> Self {
        ConeParameter { d, sign: Sign::Plus }
    }
}

/// Tri-state membership classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Inside,
    Boundary,
    Outside,
}

/// Machine-readable cone query result.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeQuery {
    pub member: bool,
    pub margin: f64,
    pub f_d: Option<f64>,
    pub state: Membership,
}

/// `f_d(t,x,s) = t + ds − ‖x‖²/(2s)`; requires `s > 0`.
pub fn f_d(x: &AlgebraElement, d: f64) -> Result<f64> {
    if x.s <= 0.0 {
        return Err(Error::Domain(format!("f_d needs s > 0, got s = {}", x.s)));
    }
    Ok(x.t + d * x.s - x.x.norm_sqr() / (2.0 * x.s))
}

/// Tri-state membership of `sign·W_d` with the boundary band.
///
/// The margin is `s` for `d = ∞` and `min(s, f_d)` for finite `d`; both
/// constraints are active on the open cone.
pub fn membership(x: &AlgebraElement, cone: &ConeParameter) -> ConeQuery {
    let probe = match cone.sign {
        Sign::Plus => x.clone(),
        Sign::Minus => x.neg(),
    };
    let (margin, fd) = match cone.d {
        ConeD::Infinite => (probe.s, None),
        ConeD::Finite(d) => {
            if probe.s <= 0.0 {
                (probe.s, None)
            } else {
                let fd = probe.t + d * probe.s - probe.x.norm_sqr() / (2.0 * probe.s);
                (probe.s.min(fd), Some(fd))
            }
        }
    };
    let state = if margin > MEMBERSHIP_BAND {
        Membership::Inside
    } else if margin < -MEMBERSHIP_BAND {
        Membership::Outside
    } else {
        Membership::Boundary
    };
    ConeQuery { member: margin > 0.0, margin, f_d: fd, state }
}

/// Open-cone membership of `sign·W_d`.
pub fn in_cone(x: &AlgebraElement, cone: &ConeParameter) -> bool {
    membership(x, cone).member
}

/// Ad-invariant projection `F(t,x,s) = (t − ‖x‖²/(2s), 0, s)` onto the
/// Cartan subalgebra; restricts to the identity on Cartan inputs.
pub fn f_project(x: &AlgebraElement) -> Result<AlgebraElement> {
    if x.s == 0.0 {
        return Err(Error::Domain("F projection needs s != 0".into()));
    }
    Ok(AlgebraElement::new(
        x.t - x.x.norm_sqr() / (2.0 * x.s),
        ModeVector::zeros(x.x.len()),
        x.s,
    ))
}

/// Barrier function on the open cone.
///
/// Concrete choice: `h̃_d(t,0,s) = 1/s + 1/(t+ds)` for finite `d` and `1/s`
/// for `d = ∞`, precomposed with the Cartan projection, i.e.
/// `h_d(X) = 1/s + 1/f_d(X)`. Both `s` and `f_d` strictly increase under cone
/// addition, which yields the monotonicity `h_d(w+w') ≤ h_d(w)`; both blow up
/// at the respective boundary pieces.
pub fn h_d(x: &AlgebraElement, cone: &ConeParameter) -> Result<f64> {
    let query = membership(x, cone);
    if query.margin <= 0.0 {
        return Err(Error::NotInCone { margin: query.margin });
    }
    let probe = match cone.sign {
        Sign::Plus => x.clone(),
        Sign::Minus => x.neg(),
    };
    Ok(match cone.d {
        ConeD::Infinite => 1.0 / probe.s,
        ConeD::Finite(_) => {
            1.0 / probe.s + 1.0 / query.f_d.expect("finite d inside the cone has f_d")
        }
    })
}
