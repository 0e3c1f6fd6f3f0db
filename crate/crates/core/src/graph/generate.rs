//! Deterministic graph families.
//!
//! Random families draw from a SplitMix64 stream seeded directly with the
//! user seed, and only sample through `u64`/`f64` so the output does not
//! depend on pointer width.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Two adjacent hubs sharing `k` common neighbors (`k` pages).
    Book {
        k: usize,
    },
    /// Path on `n - 1` vertices plus an apex joined to all of them.
    Fan {
        n: usize,
    },
    /// Apollonian network grown from `K_4` by repeated face insertion.
    StackedPlanar {
        n: usize,
        seed: u64,
    },
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    Petersen,
    /// Vertices are the `b`-subsets of `{0..a}`, adjacent when disjoint.
    Kneser {
        a: usize,
        b: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

fn binomial(a: usize, b: usize) -> Option<usize> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: usize = 1;
    for i in 0..b {
        acc = acc.checked_mul(a - i)? / (i + 1);
    }
    Some(acc)
}

impl GeneratorSpec {
    /// Vertex count of the generated graph.
    pub fn vertex_count(&self) -> Option<usize> {
        match self {
            GeneratorSpec::Complete { n }
            | GeneratorSpec::Cycle { n }
            | GeneratorSpec::Path { n }
            | GeneratorSpec::Fan { n }
            | GeneratorSpec::StackedPlanar { n, .. }
            | GeneratorSpec::Gnp { n, .. } => Some(*n),
            GeneratorSpec::Book { k } => k.checked_add(2),
            GeneratorSpec::Petersen => Some(10),
            GeneratorSpec::Kneser { a, b } => binomial(*a, *b),
            GeneratorSpec::CompleteMultipartite { parts } => {
                parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p))
            }
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        match self {
            GeneratorSpec::Complete { n } | GeneratorSpec::Path { n } if *n < 1 => return Err(invalid("need n >= 1")),
            GeneratorSpec::Cycle { n } | GeneratorSpec::Fan { n } if *n < 3 => return Err(invalid("need n >= 3")),
            GeneratorSpec::StackedPlanar { n, .. } if *n < 4 => return Err(invalid("stacked_planar needs n >= 4")),
            GeneratorSpec::Book { k } if *k < 1 => return Err(invalid("book needs k >= 1")),
            GeneratorSpec::Gnp { p, .. } if !(0.0..=1.0).contains(p) => {
                return Err(invalid(format!("gnp probability {p} outside [0, 1]")))
            }
            GeneratorSpec::Kneser { a, b } if *b < 1 || *a < *b => return Err(invalid("kneser needs 1 <= b <= a")),
            GeneratorSpec::CompleteMultipartite { parts } if parts.is_empty() || parts.contains(&0) => {
                return Err(invalid("complete_multipartite needs at least one part, all non-empty"))
            }
            _ => {}
        }
        match self.vertex_count() {
            Some(n) if n <= MAX_VERTICES => Ok(()),
            Some(n) => Err(GraphError::TooManyVertices(n)),
            None => Err(GraphError::TooManyVertices(usize::MAX)),
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            GeneratorSpec::StackedPlanar { seed, .. } | GeneratorSpec::Gnp { seed, .. } => Some(*seed),
            _ => None,
        }
    }

    /// Replaces the seed of a random family; deterministic families are
    /// returned unchanged.
    pub fn with_seed(mut self, new_seed: u64) -> Self {
        if let GeneratorSpec::StackedPlanar { seed, .. } | GeneratorSpec::Gnp { seed, .. } = &mut self {
            *seed = new_seed;
        }
        self
    }

    /// The `i`-th member of a sequence starting at `self`: random families
    /// advance the seed, sized families grow their size parameter.
    pub fn step(&self, i: usize) -> Result<Self, GraphError> {
        let grow = |x: usize| x.checked_add(i).ok_or_else(|| invalid("size overflow"));
        let i64_ = i as u64;
        Ok(match self {
            GeneratorSpec::Complete { n } => GeneratorSpec::Complete { n: grow(*n)? },
            GeneratorSpec::Cycle { n } => GeneratorSpec::Cycle { n: grow(*n)? },
            GeneratorSpec::Path { n } => GeneratorSpec::Path { n: grow(*n)? },
            GeneratorSpec::Book { k } => GeneratorSpec::Book { k: grow(*k)? },
            GeneratorSpec::Fan { n } => GeneratorSpec::Fan { n: grow(*n)? },
            GeneratorSpec::Kneser { a, b } => GeneratorSpec::Kneser { a: grow(*a)?, b: *b },
            GeneratorSpec::StackedPlanar { n, seed } => GeneratorSpec::StackedPlanar {
                n: *n,
                seed: seed.wrapping_add(i64_),
            },
            GeneratorSpec::Gnp { n, p, seed } => GeneratorSpec::Gnp {
                n: *n,
                p: *p,
                seed: seed.wrapping_add(i64_),
            },
            GeneratorSpec::Petersen | GeneratorSpec::CompleteMultipartite { .. } if i == 0 => self.clone(),
            GeneratorSpec::Petersen | GeneratorSpec::CompleteMultipartite { .. } => {
                return Err(invalid(format!("{self} has no size parameter to step")))
            }
        })
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let n = spec.vertex_count().expect("validated");
    let mut g = Graph::empty(n)?;
    match spec {
        GeneratorSpec::Complete { n } => {
            for j in 1..*n {
                for i in 0..j {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        GeneratorSpec::Path { n } => {
            for v in 1..*n {
                g.add_edge_unchecked(v - 1, v);
            }
        }
        GeneratorSpec::Cycle { n } => {
            for v in 0..*n {
                g.add_edge_unchecked(v, (v + 1) % n);
            }
        }
        GeneratorSpec::Book { k } => {
            g.add_edge_unchecked(0, 1);
            for page in 2..k + 2 {
                g.add_edge_unchecked(0, page);
                g.add_edge_unchecked(1, page);
            }
        }
        GeneratorSpec::Fan { n } => {
            // apex is vertex 0, the path is 1..n
            for v in 1..*n {
                g.add_edge_unchecked(0, v);
                if v > 1 {
                    g.add_edge_unchecked(v - 1, v);
                }
            }
        }
        GeneratorSpec::StackedPlanar { n, seed } => {
            let mut rng = SplitMix64::seed_from_u64(*seed);
            for j in 1..4 {
                for i in 0..j {
                    g.add_edge_unchecked(i, j);
                }
            }
            let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
            for v in 4..*n {
                let f = rng.gen_range(0..faces.len() as u64) as usize;
                let [a, b, c] = faces[f];
                g.add_edge_unchecked(a, v);
                g.add_edge_unchecked(b, v);
                g.add_edge_unchecked(c, v);
                faces[f] = [a, b, v];
                faces.push([a, c, v]);
                faces.push([b, c, v]);
            }
        }
        GeneratorSpec::Gnp { n, p, seed } => {
            let mut rng = SplitMix64::seed_from_u64(*seed);
            for j in 1..*n {
                for i in 0..j {
                    if rng.gen::<f64>() < *p {
                        g.add_edge_unchecked(i, j);
                    }
                }
            }
        }
        GeneratorSpec::Petersen => return generate(&GeneratorSpec::Kneser { a: 5, b: 2 }),
        GeneratorSpec::Kneser { a, b } => {
            // b-subsets of {0..a} as bitmasks in increasing numeric order
            // (Gosper's hack)
            if *a > 64 {
                return Err(invalid("kneser needs a <= 64"));
            }
            let limit = 1u128 << a;
            let mut subsets: Vec<u128> = Vec::with_capacity(n);
            let mut s: u128 = (1 << b) - 1;
            while s < limit {
                subsets.push(s);
                let low = s & s.wrapping_neg();
                let ripple = s + low;
                s = (((ripple ^ s) >> 2) / low) | ripple;
            }
            for j in 0..subsets.len() {
                for i in 0..j {
                    if subsets[i] & subsets[j] == 0 {
                        g.add_edge_unchecked(i, j);
                    }
                }
            }
        }
        GeneratorSpec::CompleteMultipartite { parts } => {
            let mut part_of = Vec::with_capacity(n);
            for (idx, &size) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(idx, size));
            }
            for j in 1..n {
                for i in 0..j {
                    if part_of[i] != part_of[j] {
                        g.add_edge_unchecked(i, j);
                    }
                }
            }
        }
    }
    Ok(g)
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Complete { n } => write!(f, "complete:{n}"),
            GeneratorSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GeneratorSpec::Path { n } => write!(f, "path:{n}"),
            GeneratorSpec::Book { k } => write!(f, "book:{k}"),
            GeneratorSpec::Fan { n } => write!(f, "fan:{n}"),
            GeneratorSpec::StackedPlanar { n, seed } => write!(f, "stacked_planar:{n}:{seed}"),
            GeneratorSpec::Gnp { n, p, seed } => write!(f, "gnp:{n}:{p}:{seed}"),
            GeneratorSpec::Petersen => write!(f, "petersen"),
            GeneratorSpec::Kneser { a, b } => write!(f, "kneser:{a}:{b}"),
            GeneratorSpec::CompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_multipartite:{}", parts.join(","))
            }
        }
    }
}

/// Parses `family[:param...]`, e.g. `fan:60`, `gnp:10:0.5`, `gnp:10:0.5:7`,
/// `kneser:5:2`, `complete_multipartite:2,3,4`. Seeds default to 0.
impl FromStr for GeneratorSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let mut fields = s.trim().split(':');
        let family = fields.next().unwrap_or("");
        let args: Vec<&str> = fields.collect();
        let int = |i: usize| -> Result<usize, GraphError> {
            let raw = args
                .get(i)
                .ok_or_else(|| invalid(format!("{family}: missing parameter {}", i + 1)))?;
            raw.parse()
                .map_err(|_| invalid(format!("{family}: bad integer {raw:?}")))
        };
        let seed = |i: usize| -> Result<u64, GraphError> {
            match args.get(i) {
                None => Ok(0),
                Some(raw) => raw.parse().map_err(|_| invalid(format!("{family}: bad seed {raw:?}"))),
            }
        };
        let arity = |min: usize, max: usize| -> Result<(), GraphError> {
            if args.len() < min || args.len() > max {
                Err(invalid(format!(
                    "{family}: expected {min}..={max} parameters, got {}",
                    args.len()
                )))
            } else {
                Ok(())
            }
        };
        let spec = match family {
            "complete" => {
                arity(1, 1)?;
                GeneratorSpec::Complete { n: int(0)? }
            }
            "cycle" => {
                arity(1, 1)?;
                GeneratorSpec::Cycle { n: int(0)? }
            }
            "path" => {
                arity(1, 1)?;
                GeneratorSpec::Path { n: int(0)? }
            }
            "book" => {
                arity(1, 1)?;
                GeneratorSpec::Book { k: int(0)? }
            }
            "fan" => {
                arity(1, 1)?;
                GeneratorSpec::Fan { n: int(0)? }
            }
            "stacked_planar" => {
                arity(1, 2)?;
                GeneratorSpec::StackedPlanar {
                    n: int(0)?,
                    seed: seed(1)?,
                }
            }
            "gnp" => {
                arity(2, 3)?;
                let p = args[1]
                    .parse()
                    .map_err(|_| invalid(format!("gnp: bad probability {:?}", args[1])))?;
                GeneratorSpec::Gnp {
                    n: int(0)?,
                    p,
                    seed: seed(2)?,
                }
            }
            "petersen" => {
                arity(0, 0)?;
                GeneratorSpec::Petersen
            }
            "kneser" => {
                arity(2, 2)?;
                GeneratorSpec::Kneser { a: int(0)?, b: int(1)? }
            }
            "complete_multipartite" => {
                arity(1, 1)?;
                let parts = args[0]
                    .split(',')
                    .map(|p| {
                        p.parse()
                            .map_err(|_| invalid(format!("complete_multipartite: bad part {p:?}")))
                    })
                    .collect::<Result<Vec<usize>, _>>()?;
                GeneratorSpec::CompleteMultipartite { parts }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{encode_graph6, max_triangles_per_edge};

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn fixed_families() {
        let k5 = gen("complete:5");
        assert_eq!(k5.m(), 10);
        let c6 = gen("cycle:6");
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert_eq!(gen("path:4").m(), 3);
        assert_eq!(encode_graph6(&gen("cycle:3")).unwrap(), "Bw");
    }

    #[test]
    fn book_and_fan() {
        let b1 = gen("book:1");
        assert_eq!((b1.n(), b1.m()), (3, 3));
        assert!(b1.is_complete());
        let b4 = gen("book:4");
        assert_eq!((b4.n(), b4.m()), (6, 9));
        let fan5 = gen("fan:5");
        assert_eq!((fan5.n(), fan5.m()), (5, 7));
        assert_eq!(gen("fan:60").m(), 117);
    }

    #[test]
    fn stacked_planar_is_maximal_planar() {
        for seed in 0..20 {
            let g = generate(&GeneratorSpec::StackedPlanar {
                n: 6 + seed as usize,
                seed,
            })
            .unwrap();
            assert_eq!(g.m(), 3 * g.n() - 6);
            assert!(max_triangles_per_edge(&g) >= 2);
            assert!(g.is_consistent());
        }
        let a = generate(&GeneratorSpec::StackedPlanar { n: 30, seed: 9 }).unwrap();
        let b = generate(&GeneratorSpec::StackedPlanar { n: 30, seed: 9 }).unwrap();
        assert_eq!(a, b);
        assert_eq!(gen("stacked_planar:4").m(), 6);
    }

    #[test]
    fn gnp_reproducible_and_extreme_probabilities() {
        let a = gen("gnp:10:0.5:7");
        assert_eq!(a, gen("gnp:10:0.5:7"));
        assert_ne!(a, gen("gnp:10:0.5:8"));
        assert_eq!(gen("gnp:12:0:3").m(), 0);
        assert_eq!(gen("gnp:12:1:3").m(), 66);
    }

    #[test]
    fn kneser_and_petersen() {
        let p = gen("petersen");
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p, gen("kneser:5:2"));
        // K(a, 1) is the complete graph
        assert!(gen("kneser:6:1").is_complete());
    }

    #[test]
    fn multipartite() {
        let g = gen("complete_multipartite:2,3,4");
        assert_eq!((g.n(), g.m()), (9, 6 + 8 + 12));
    }

    #[test]
    fn invalid_parameters() {
        for bad in [
            "cycle:2",
            "fan:2",
            "book:0",
            "gnp:5:1.5",
            "gnp:5:-0.1",
            "kneser:2:3",
            "kneser:3:0",
            "complete_multipartite:2,0",
            "stacked_planar:3",
            "complete:0",
            "complete:5000",
            "cube:3",
            "fan",
            "fan:x",
            "petersen:1",
            "gnp:5",
        ] {
            assert!(bad.parse::<GeneratorSpec>().is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn display_roundtrip_and_step() {
        for s in [
            "fan:5",
            "gnp:10:0.25:3",
            "stacked_planar:9:4",
            "kneser:7:3",
            "complete_multipartite:1,2",
            "petersen",
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let fan: GeneratorSpec = "fan:51".parse().unwrap();
        assert_eq!(fan.step(3).unwrap(), GeneratorSpec::Fan { n: 54 });
        let gnp = GeneratorSpec::Gnp { n: 4, p: 0.5, seed: 10 };
        assert_eq!(gnp.step(2).unwrap().seed(), Some(12));
        assert!(GeneratorSpec::Petersen.step(1).is_err());
        assert_eq!(gnp.with_seed(1).seed(), Some(1));
    }
}
