//! The JSON scenario format. Rationals are strings such as `"3/5"`, never
//! JSON numbers.

use std::collections::BTreeMap;
use std::fmt;

use anyhow::{anyhow, bail, Context, Result};
use kwall::exact::{fmt_rat, parse_rat, Bound, Interval, Rat, Vec2, Vec3};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational in `"p/q"` form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R(pub Rat);

impl Serialize for R {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for R {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = R;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"3/5\"")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<R, E> {
                parse_rat(v).map(R).map_err(E::custom)
            }
        }
        d.deserialize_str(V)
    }
}

impl From<&Rat> for R {
    fn from(r: &Rat) -> Self {
        R(r.clone())
    }
}

pub fn v2(p: &[R; 2]) -> Vec2 {
    Vec2::new(p[0].0.clone(), p[1].0.clone())
}

pub fn v3(p: &[R; 3]) -> Vec3 {
    Vec3::new(p[0].0.clone(), p[1].0.clone(), p[2].0.clone())
}

pub fn r2(v: &Vec2) -> [R; 2] {
    [R(v.x.clone()), R(v.y.clone())]
}

pub fn r3(v: &Vec3) -> [R; 3] {
    [R(v.x.clone()), R(v.y.clone()), R(v.z.clone())]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    TwoRay,
    Toric,
    WallCase,
    Delta,
    Centroid,
    GitBinary,
    GitPlane,
    Lct,
    Index,
    Cm,
    Stratum,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// One scenario file.
///
/// `expect` holds optional annotations of report fields; they are compared
/// against the computed report and never used as results.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub kind: Kind,
    pub payload: serde_json::Value,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub provenance: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expect: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoRayPayload {
    pub h2: R,
    pub e: R,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross: Option<R>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg_curve: Option<[R; 2]>,
    pub polarization: [R; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToricPayload {
    pub rays: [[R; 2]; 3],
    pub offsets: [R; 3],
    pub cone: [usize; 2],
    pub w: [R; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "engine", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum ProfilePayload {
    TwoRay(TwoRayPayload),
    Toric(ToricPayload),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointPayload {
    pub n: u64,
    pub a: i64,
    pub b: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValuationPayload {
    pub point: PointPayload,
    pub w1: R,
    pub w2: R,
    pub scale: R,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RangePayload {
    pub lo: R,
    pub hi: R,
    #[serde(default)]
    pub lo_closed: bool,
    #[serde(default)]
    pub hi_closed: bool,
}

impl RangePayload {
    pub fn interval(&self) -> Result<Interval> {
        Interval::new(
            Bound { value: self.lo.0.clone(), closed: self.lo_closed },
            Bound { value: self.hi.0.clone(), closed: self.hi_closed },
        )
        .context("range: interval is empty")
    }

    pub fn from_interval(i: &Interval) -> Self {
        RangePayload {
            lo: R(i.lo.value.clone()),
            hi: R(i.hi.value.clone()),
            lo_closed: i.lo.closed,
            hi_closed: i.hi.closed,
        }
    }
}

/// A divisor over a pair. Give either `valuation`, `germ` and `profile`,
/// so the engines derive `A0`, `ordD` and `S0`, or the three numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallPayload {
    pub alpha: R,
    pub beta: R,
    pub range: RangePayload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<ValuationPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub germ: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfilePayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<R>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ord_d: Option<R>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s0: Option<R>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedWall {
    pub label: String,
    pub case: WallPayload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaPayload {
    pub candidates: Vec<NamedWall>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CentroidPayload {
    pub generators: [[R; 3]; 3],
    pub xi0: [R; 3],
    pub eta0_star: [R; 3],
    pub u1: [R; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u0: Option<[R; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockPayload {
    pub j: u32,
    /// `(i, c)` for `c x^i y^(deg - i)`.
    pub terms: Vec<(u32, R)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GitBinaryPayload {
    pub d: u32,
    pub blocks: Vec<BlockPayload>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GitPlanePayload {
    pub degree: u32,
    pub monomials: Vec<[u32; 3]>,
    pub one_ps: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuasiHomogPayload {
    pub w1: u64,
    pub w2: u64,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LctPayload {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub germ: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasi_homogeneous: Option<QuasiHomogPayload>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexPayload {
    pub degree: u64,
    pub coeff: R,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<PointPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ord_d: Option<R>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CmPayload {
    pub n: u32,
    pub degree: u32,
    pub coeff: R,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumPointPayload {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jet: Option<[R; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d6: Option<[R; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumPayload {
    pub points: Vec<StratumPointPayload>,
}

/// A scenario payload decoded according to its kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    TwoRay(TwoRayPayload),
    Toric(ToricPayload),
    WallCase(WallPayload),
    Delta(DeltaPayload),
    Centroid(CentroidPayload),
    GitBinary(GitBinaryPayload),
    GitPlane(GitPlanePayload),
    Lct(LctPayload),
    Index(IndexPayload),
    Cm(CmPayload),
    Stratum(StratumPayload),
}

fn decode<T: serde::de::DeserializeOwned>(kind: Kind, v: &serde_json::Value) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        let at = if path == "." { "payload".to_string() } else { format!("payload.{path}") };
        anyhow!("invalid {kind} scenario at {at}: {}", e.into_inner())
    })
}

fn encode<T: Serialize>(p: &T) -> serde_json::Value {
    serde_json::to_value(p).expect("payloads serialize")
}

impl Body {
    pub fn kind(&self) -> Kind {
        match self {
            Body::TwoRay(_) => Kind::TwoRay,
            Body::Toric(_) => Kind::Toric,
            Body::WallCase(_) => Kind::WallCase,
            Body::Delta(_) => Kind::Delta,
            Body::Centroid(_) => Kind::Centroid,
            Body::GitBinary(_) => Kind::GitBinary,
            Body::GitPlane(_) => Kind::GitPlane,
            Body::Lct(_) => Kind::Lct,
            Body::Index(_) => Kind::Index,
            Body::Cm(_) => Kind::Cm,
            Body::Stratum(_) => Kind::Stratum,
        }
    }

    pub fn payload(&self) -> serde_json::Value {
        match self {
            Body::TwoRay(p) => encode(p),
            Body::Toric(p) => encode(p),
            Body::WallCase(p) => encode(p),
            Body::Delta(p) => encode(p),
            Body::Centroid(p) => encode(p),
            Body::GitBinary(p) => encode(p),
            Body::GitPlane(p) => encode(p),
            Body::Lct(p) => encode(p),
            Body::Index(p) => encode(p),
            Body::Cm(p) => encode(p),
            Body::Stratum(p) => encode(p),
        }
    }
}

impl Scenario {
    pub fn new(name: &str, body: Body, provenance: &str) -> Self {
        Scenario {
            name: name.into(),
            kind: body.kind(),
            payload: body.payload(),
            provenance: provenance.into(),
            expect: BTreeMap::new(),
        }
    }

    pub fn expecting(mut self, key: &str, value: &str) -> Self {
        self.expect.insert(key.into(), value.into());
        self
    }

    /// Validates the payload against the schema of its kind.
    pub fn body(&self) -> Result<Body> {
        let p = &self.payload;
        Ok(match self.kind {
            Kind::TwoRay => Body::TwoRay(decode(self.kind, p)?),
            Kind::Toric => Body::Toric(decode(self.kind, p)?),
            Kind::WallCase => Body::WallCase(decode(self.kind, p)?),
            Kind::Delta => Body::Delta(decode(self.kind, p)?),
            Kind::Centroid => Body::Centroid(decode(self.kind, p)?),
            Kind::GitBinary => Body::GitBinary(decode(self.kind, p)?),
            Kind::GitPlane => Body::GitPlane(decode(self.kind, p)?),
            Kind::Lct => Body::Lct(decode(self.kind, p)?),
            Kind::Index => Body::Index(decode(self.kind, p)?),
            Kind::Cm => Body::Cm(decode(self.kind, p)?),
            Kind::Stratum => Body::Stratum(decode(self.kind, p)?),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            bail!("scenario file is empty; expected an object with fields name, kind, payload");
        }
        let de = &mut serde_json::Deserializer::from_str(text);
        let s: Scenario = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            anyhow!("invalid scenario at {path}: {}", e.into_inner())
        })?;
        s.body()?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenarios serialize")
    }
}
