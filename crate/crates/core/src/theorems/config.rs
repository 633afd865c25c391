use serde::{Deserialize, Serialize};

use crate::arith::{sample_rational, BigRat, RatFun, SampleKey};
use crate::centers::Triangle;
use crate::field::Field;
use crate::geometry::{midpoint, Point};

/// `P(0,0)`, `A(a,b)`, `B(c,b)`, `C(c,d)`, `D(a,d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RectConfig<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

/// Two rectangles sharing their center. The second is completed by
/// `c2 = a1 + c1 − a2`, `d2 = b1 + d1 − b2`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoRectConfig<T> {
    pub a1: T,
    pub b1: T,
    pub c1: T,
    pub d1: T,
    pub a2: T,
    pub b2: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigKind {
    Rect,
    TwoRect,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Config<T> {
    Rect(RectConfig<T>),
    TwoRect(TwoRectConfig<T>),
}

impl<T: Field> RectConfig<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        RectConfig { a, b, c, d }
    }

    pub fn params(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn p(&self) -> Point<T> {
        Point::new(self.a.zero_like(), self.a.zero_like())
    }

    pub fn pa(&self) -> Point<T> {
        Point::new(self.a.clone(), self.b.clone())
    }

    pub fn pb(&self) -> Point<T> {
        Point::new(self.c.clone(), self.b.clone())
    }

    pub fn pc(&self) -> Point<T> {
        Point::new(self.c.clone(), self.d.clone())
    }

    pub fn pd(&self) -> Point<T> {
        Point::new(self.a.clone(), self.d.clone())
    }

    /// Corners in order `A, B, C, D`.
    pub fn corners(&self) -> [Point<T>; 4] {
        [self.pa(), self.pb(), self.pc(), self.pd()]
    }

    pub fn center(&self) -> Point<T> {
        midpoint(&self.pa(), &self.pc())
    }

    /// `PAB`, `PBC`, `PCD`, `PDA`.
    pub fn triangles(&self) -> [Triangle<T>; 4] {
        let [a, b, c, d] = self.corners();
        let p = self.p();
        [
            Triangle::new(p.clone(), a.clone(), b.clone()),
            Triangle::new(p.clone(), b, c.clone()),
            Triangle::new(p.clone(), c, d.clone()),
            Triangle::new(p, d, a),
        ]
    }

    /// Proper rectangle: `a ≠ c` and `b ≠ d`.
    pub fn is_proper(&self) -> bool {
        !(self.a.clone() - &self.c).vanishes() && !(self.b.clone() - &self.d).vanishes()
    }

    /// Proper, and `P` off all four side lines.
    pub fn is_sampleable(&self) -> bool {
        self.is_proper() && self.params().iter().all(|x| !x.vanishes())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> RectConfig<U> {
        RectConfig::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

impl RectConfig<RatFun> {
    /// `a, b, c, d` as the variables of the arity-4 ring.
    pub fn symbolic() -> Self {
        let [a, b, c, d]: [RatFun; 4] = RatFun::vars(4).try_into().expect("four variables");
        RectConfig::new(a, b, c, d)
    }
}

impl<T: Field> TwoRectConfig<T> {
    pub fn new(a1: T, b1: T, c1: T, d1: T, a2: T, b2: T) -> Self {
        TwoRectConfig {
            a1,
            b1,
            c1,
            d1,
            a2,
            b2,
        }
    }

    pub fn params(&self) -> [&T; 6] {
        [&self.a1, &self.b1, &self.c1, &self.d1, &self.a2, &self.b2]
    }

    pub fn c2(&self) -> T {
        self.a1.clone() + &self.c1 - &self.a2
    }

    pub fn d2(&self) -> T {
        self.b1.clone() + &self.d1 - &self.b2
    }

    pub fn first(&self) -> RectConfig<T> {
        RectConfig::new(
            self.a1.clone(),
            self.b1.clone(),
            self.c1.clone(),
            self.d1.clone(),
        )
    }

    pub fn second(&self) -> RectConfig<T> {
        RectConfig::new(self.a2.clone(), self.b2.clone(), self.c2(), self.d2())
    }

    pub fn is_proper(&self) -> bool {
        self.first().is_proper() && self.second().is_proper()
    }

    pub fn is_sampleable(&self) -> bool {
        self.first().is_sampleable() && self.second().is_sampleable()
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> TwoRectConfig<U> {
        TwoRectConfig::new(
            f(&self.a1),
            f(&self.b1),
            f(&self.c1),
            f(&self.d1),
            f(&self.a2),
            f(&self.b2),
        )
    }
}

impl TwoRectConfig<RatFun> {
    /// `a1, b1, c1, d1, a2, b2` as the variables of the arity-6 ring.
    pub fn symbolic() -> Self {
        let [a1, b1, c1, d1, a2, b2]: [RatFun; 6] =
            RatFun::vars(6).try_into().expect("six variables");
        TwoRectConfig::new(a1, b1, c1, d1, a2, b2)
    }
}

impl<T: Field> Config<T> {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Config::Rect(_) => ConfigKind::Rect,
            Config::TwoRect(_) => ConfigKind::TwoRect,
        }
    }

    pub fn params(&self) -> Vec<&T> {
        match self {
            Config::Rect(r) => r.params().to_vec(),
            Config::TwoRect(r) => r.params().to_vec(),
        }
    }

    pub fn is_proper(&self) -> bool {
        match self {
            Config::Rect(r) => r.is_proper(),
            Config::TwoRect(r) => r.is_proper(),
        }
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Config<U> {
        match self {
            Config::Rect(r) => Config::Rect(r.map(f)),
            Config::TwoRect(r) => Config::TwoRect(r.map(f)),
        }
    }

    /// Builds a configuration of `kind` from 4 or 6 parameters.
    pub fn from_params(kind: ConfigKind, params: Vec<T>) -> Option<Self> {
        match (kind, params.len()) {
            (ConfigKind::Rect, 4) => {
                let [a, b, c, d]: [T; 4] = params.try_into().ok()?;
                Some(Config::Rect(RectConfig::new(a, b, c, d)))
            }
            (ConfigKind::TwoRect, 6) => {
                let [a1, b1, c1, d1, a2, b2]: [T; 6] = params.try_into().ok()?;
                Some(Config::TwoRect(TwoRectConfig::new(a1, b1, c1, d1, a2, b2)))
            }
            _ => None,
        }
    }
}

impl Config<RatFun> {
    pub fn symbolic(kind: ConfigKind) -> Self {
        match kind {
            ConfigKind::Rect => Config::Rect(RectConfig::symbolic()),
            ConfigKind::TwoRect => Config::TwoRect(TwoRectConfig::symbolic()),
        }
    }
}

/// Configurations rejected for failing their invariants before this many
/// internal draws make the generator give up; never reached in practice
/// (a draw fails with probability below 15%).
const INTERNAL_RETRIES: u64 = 1_000;

/// Attempt numbers are split between internal rejection retries and the
/// caller-visible resamples.
const ATTEMPT_STRIDE: u64 = INTERNAL_RETRIES;

/// The configuration for `(seed, index)` at caller attempt `attempt`.
///
/// Draws are rejected internally until the sampling invariants hold: a
/// proper rectangle with no zero coordinate, so `P` is off every side line.
pub fn sample_config_attempt(
    kind: ConfigKind,
    seed: u64,
    index: u64,
    attempt: u64,
) -> Config<BigRat> {
    for retry in 0..INTERNAL_RETRIES {
        let key = SampleKey::new(seed, index, attempt * ATTEMPT_STRIDE + retry);
        let slots = match kind {
            ConfigKind::Rect => 4,
            ConfigKind::TwoRect => 6,
        };
        let params: Vec<BigRat> = (0..slots).map(|s| sample_rational(key, s)).collect();
        let cfg = Config::from_params(kind, params).expect("slot count matches kind");
        let ok = match &cfg {
            Config::Rect(r) => r.is_sampleable(),
            Config::TwoRect(r) => r.is_sampleable(),
        };
        if ok {
            return cfg;
        }
    }
    panic!("no valid configuration after {INTERNAL_RETRIES} draws");
}

/// Deterministic exact-rational configuration for `(seed, index)`.
pub fn sample_config(kind: ConfigKind, seed: u64, index: u64) -> Config<BigRat> {
    sample_config_attempt(kind, seed, index, 0)
}
