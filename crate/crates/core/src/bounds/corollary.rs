//! Graph classes with few triangles and the edge counts above which the
//! generalized square-sum conjecture is guaranteed for them.
//!
//! Each class bounds `t(G)` linearly in `m`, so it sits in the family with
//! `ε = 1/2`; its clique number is capped by a forbidden subgraph.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{remark24_threshold, BoundsError, FamilyParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", content = "k", rename_all = "snake_case")]
pub enum CorollaryTag {
    Planar,
    Outerplanar,
    /// No book `B_k`; requires `k >= 2`.
    BookFree(usize),
    /// No cycle `C_k`; requires `k >= 4`.
    CycleFree(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorollaryClass {
    pub tag: CorollaryTag,
    pub params: FamilyParams,
    pub omega_cap: usize,
    pub triangle_bound: String,
    /// `(10.06 c √ω_cap)^{1/ε}` before rounding.
    pub raw_threshold: f64,
    /// Smallest edge count at or above `raw_threshold`.
    pub edge_threshold: u64,
}

pub fn corollary_class(tag: CorollaryTag) -> Result<CorollaryClass, BoundsError> {
    let (c, omega_cap, triangle_bound) = match tag {
        CorollaryTag::Planar => (1.0, 4, "t <= m - 2".to_string()),
        CorollaryTag::Outerplanar => (0.5, 3, "t <= (m - 1)/2".to_string()),
        CorollaryTag::BookFree(k) if k >= 2 => ((k - 1) as f64 / 3.0, k + 1, format!("t <= ({} - 1)m/3", k)),
        CorollaryTag::CycleFree(k) if k >= 4 => ((k - 3) as f64 / 3.0, k, format!("t <= ({} - 3)m/3", k)),
        CorollaryTag::BookFree(k) => return Err(BoundsError::InvalidClass(format!("book_free needs k >= 2, got {k}"))),
        CorollaryTag::CycleFree(k) => {
            return Err(BoundsError::InvalidClass(format!("cycle_free needs k >= 4, got {k}")))
        }
    };
    let params = FamilyParams::new(0.5, c)?;
    let raw_threshold = remark24_threshold(&params, omega_cap)?;
    Ok(CorollaryClass {
        tag,
        params,
        omega_cap,
        triangle_bound,
        raw_threshold,
        edge_threshold: raw_threshold.ceil() as u64,
    })
}

impl fmt::Display for CorollaryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorollaryTag::Planar => f.write_str("planar"),
            CorollaryTag::Outerplanar => f.write_str("outerplanar"),
            CorollaryTag::BookFree(k) => write!(f, "book:{k}"),
            CorollaryTag::CycleFree(k) => write!(f, "cycle:{k}"),
        }
    }
}

/// `planar`, `outerplanar`, `book:K` or `cycle:K`.
impl FromStr for CorollaryTag {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, BoundsError> {
        let bad = || {
            BoundsError::InvalidClass(format!(
                "unknown family {s:?} (expected planar, outerplanar, book:K, cycle:K)"
            ))
        };
        let param = |raw: &str| raw.parse::<usize>().map_err(|_| bad());
        let tag = match s.trim().split_once(':') {
            None if s.trim() == "planar" => CorollaryTag::Planar,
            None if s.trim() == "outerplanar" => CorollaryTag::Outerplanar,
            Some(("book", k)) => CorollaryTag::BookFree(param(k)?),
            Some(("cycle", k)) => CorollaryTag::CycleFree(param(k)?),
            _ => return Err(bad()),
        };
        corollary_class(tag)?;
        Ok(tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar() {
        let class = corollary_class(CorollaryTag::Planar).unwrap();
        assert_eq!(
            (
                class.params.c,
                class.params.epsilon,
                class.omega_cap,
                class.edge_threshold
            ),
            (1.0, 0.5, 4, 405)
        );
    }

    #[test]
    fn outerplanar() {
        let class = corollary_class(CorollaryTag::Outerplanar).unwrap();
        assert_eq!((class.params.c, class.omega_cap, class.edge_threshold), (0.5, 3, 76));
    }

    #[test]
    fn book_free() {
        assert_eq!(corollary_class(CorollaryTag::BookFree(2)).unwrap().edge_threshold, 34);
        for k in 2..12 {
            let class = corollary_class(CorollaryTag::BookFree(k)).unwrap();
            let closed = (10.06 * (k - 1) as f64 * ((k + 1) as f64).sqrt() / 3.0).powi(2);
            assert!((class.raw_threshold - closed).abs() <= 1e-9 * closed);
            assert_eq!(class.edge_threshold, closed.ceil() as u64);
            assert_eq!(class.omega_cap, k + 1);
        }
        assert!(corollary_class(CorollaryTag::BookFree(1)).is_err());
    }

    #[test]
    fn cycle_free() {
        let c4 = corollary_class(CorollaryTag::CycleFree(4)).unwrap();
        assert!((c4.params.c - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!((c4.omega_cap, c4.edge_threshold), (4, 45));
        assert!((c4.raw_threshold - 44.98).abs() < 0.01);
        for k in 4..12 {
            let class = corollary_class(CorollaryTag::CycleFree(k)).unwrap();
            let closed = (10.06 * (k - 3) as f64 * (k as f64).sqrt() / 3.0).powi(2);
            assert!((class.raw_threshold - closed).abs() <= 1e-9 * closed);
        }
        assert!(corollary_class(CorollaryTag::CycleFree(3)).is_err());
    }

    #[test]
    fn parse_tags() {
        assert_eq!("planar".parse::<CorollaryTag>().unwrap(), CorollaryTag::Planar);
        assert_eq!("book:3".parse::<CorollaryTag>().unwrap(), CorollaryTag::BookFree(3));
        assert_eq!("cycle:5".parse::<CorollaryTag>().unwrap(), CorollaryTag::CycleFree(5));
        for bad in ["book:1", "cycle:3", "tree", "book:x", "planar:2"] {
            assert!(bad.parse::<CorollaryTag>().is_err(), "{bad}");
        }
        assert_eq!(CorollaryTag::BookFree(3).to_string(), "book:3");
    }
}
