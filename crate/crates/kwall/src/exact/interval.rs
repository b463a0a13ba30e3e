use std::fmt;

use super::{fmt_rat, ExactError, Rat};

/// One end of an interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: Rat,
    pub closed: bool,
}

/// A bounded interval of rationals with independently open or closed ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Result<Self, ExactError> {
        let ok = lo.value < hi.value || (lo.value == hi.value && lo.closed && hi.closed);
        if !ok {
            return Err(ExactError::EmptyInterval);
        }
        Ok(Interval { lo, hi })
    }

    /// `(a, b)`
    pub fn open(a: Rat, b: Rat) -> Result<Self, ExactError> {
        Self::new(Bound { value: a, closed: false }, Bound { value: b, closed: false })
    }

    /// `[a, b)`
    pub fn closed_open(a: Rat, b: Rat) -> Result<Self, ExactError> {
        Self::new(Bound { value: a, closed: true }, Bound { value: b, closed: false })
    }

    /// `[a, b]`
    pub fn closed(a: Rat, b: Rat) -> Result<Self, ExactError> {
        Self::new(Bound { value: a, closed: true }, Bound { value: b, closed: true })
    }

    pub fn contains(&self, c: &Rat) -> bool {
        let above = if self.lo.closed { c >= &self.lo.value } else { c > &self.lo.value };
        let below = if self.hi.closed { c <= &self.hi.value } else { c < &self.hi.value };
        above && below
    }

    pub fn contains_interior(&self, c: &Rat) -> bool {
        c > &self.lo.value && c < &self.hi.value
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo.value + &self.hi.value) / Rat::from_integer(2.into())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo.closed { '[' } else { '(' },
            fmt_rat(&self.lo.value),
            fmt_rat(&self.hi.value),
            if self.hi.closed { ']' } else { ')' }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn membership_respects_openness() {
        let i = Interval::closed_open(rat(3, 7), rat(3, 5)).unwrap();
        assert!(i.contains(&rat(3, 7)));
        assert!(!i.contains(&rat(3, 5)));
        assert_eq!(i.to_string(), "[3/7, 3/5)");
    }

    #[test]
    fn point_interval_must_be_closed() {
        assert!(Interval::closed(int(1), int(1)).is_ok());
        assert!(Interval::closed_open(int(1), int(1)).is_err());
        assert!(Interval::open(int(2), int(1)).is_err());
    }
}
