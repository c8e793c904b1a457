//! Named graph families for the CLI and the test corpus. A family spec is
//! a compact string like `Kmn:3,5` or `regbip:r=3,n=5,seed=7`; randomized
//! families are deterministic for a fixed seed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed family description.
///
/// Syntax accepted by [`FamilySpec::parse`]:
/// - `Kmn:3,5` complete bipartite
/// - `C:6` cycle
/// - `Q:3` hypercube
/// - `theta:3,3,3` two hubs joined by internally disjoint paths of the
///   given edge lengths
/// - `regbip:r=3,n=5,seed=7` union of `r` random perfect matchings on
///   `n + n` vertices, rejected until simple
/// - `randbip:m=3,n=4,p=0.5,seed=1` bipartite with independent edges
/// - `rand3nrb:n=12,seed=5` random 3-connected non-regular bipartite,
///   by rejection
///
/// `seed` may be omitted from the randomized families; the seed passed to
/// [`FamilySpec::build`] then fills in.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Hypercube { d: usize },
    Theta { lengths: Vec<usize> },
    RegularBipartite { r: usize, half: usize, seed: Option<u64> },
    RandomBipartite { a: usize, b: usize, p: f64, seed: Option<u64> },
    RandomThreeConnected { n: usize, seed: Option<u64> },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadFamily(msg.into())
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| bad(format!("{what}: expected an integer, got {s:?}")))
}

fn parse_keyed(body: &str) -> Result<Vec<(&str, &str)>> {
    body.split(',')
        .map(|part| {
            part.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| bad(format!("expected key=value, got {part:?}")))
        })
        .collect()
}

impl FamilySpec {
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("missing ':' in family spec {s:?}")))?;
        match head {
            "Kmn" => {
                let (a, b) = body
                    .split_once(',')
                    .ok_or_else(|| bad("Kmn takes two sizes"))?;
                Ok(FamilySpec::CompleteBipartite {
                    a: parse_usize(a, "Kmn")?,
                    b: parse_usize(b, "Kmn")?,
                })
            }
            "C" => Ok(FamilySpec::Cycle {
                n: parse_usize(body, "C")?,
            }),
            "Q" => Ok(FamilySpec::Hypercube {
                d: parse_usize(body, "Q")?,
            }),
            "theta" => {
                let lengths = body
                    .split(',')
                    .map(|x| parse_usize(x, "theta"))
                    .collect::<Result<Vec<_>>>()?;
                Ok(FamilySpec::Theta { lengths })
            }
            "regbip" | "randbip" | "rand3nrb" => {
                let mut r = None;
                let mut half = None;
                let mut a = None;
                let mut b = None;
                let mut p = None;
                let mut n = None;
                let mut seed = None;
                for (key, value) in parse_keyed(body)? {
                    match (head, key) {
                        ("regbip", "r") => r = Some(parse_usize(value, "r")?),
                        ("regbip", "n") => half = Some(parse_usize(value, "n")?),
                        ("randbip", "m") => a = Some(parse_usize(value, "m")?),
                        ("randbip", "n") => b = Some(parse_usize(value, "n")?),
                        ("randbip", "p") => {
                            p = Some(value.parse::<f64>().map_err(|_| {
                                bad(format!("p: expected a probability, got {value:?}"))
                            })?)
                        }
                        ("rand3nrb", "n") => n = Some(parse_usize(value, "n")?),
                        (_, "seed") => {
                            seed = Some(value.parse::<u64>().map_err(|_| {
                                bad(format!("seed: expected an integer, got {value:?}"))
                            })?)
                        }
                        _ => return Err(bad(format!("{head} does not take {key:?}"))),
                    }
                }
                match head {
                    "regbip" => Ok(FamilySpec::RegularBipartite {
                        r: r.ok_or_else(|| bad("regbip needs r="))?,
                        half: half.ok_or_else(|| bad("regbip needs n="))?,
                        seed,
                    }),
                    "randbip" => Ok(FamilySpec::RandomBipartite {
                        a: a.ok_or_else(|| bad("randbip needs m="))?,
                        b: b.ok_or_else(|| bad("randbip needs n="))?,
                        p: p.ok_or_else(|| bad("randbip needs p="))?,
                        seed,
                    }),
                    _ => Ok(FamilySpec::RandomThreeConnected {
                        n: n.ok_or_else(|| bad("rand3nrb needs n="))?,
                        seed,
                    }),
                }
            }
            other => Err(bad(format!("unknown family {other:?}"))),
        }
    }

    /// Builds the graph. `default_seed` is used by randomized families
    /// whose spec did not pin one.
    pub fn build(&self, default_seed: u64) -> Result<Graph> {
        match self {
            FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Hypercube { d } => hypercube(*d),
            FamilySpec::Theta { lengths } => theta(lengths),
            FamilySpec::RegularBipartite { r, half, seed } => {
                regular_bipartite(*r, *half, seed.unwrap_or(default_seed))
            }
            FamilySpec::RandomBipartite { a, b, p, seed } => {
                random_bipartite(*a, *b, *p, seed.unwrap_or(default_seed))
            }
            FamilySpec::RandomThreeConnected { n, seed } => {
                random_three_connected(*n, seed.unwrap_or(default_seed))
            }
        }
    }
}

fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(bad("Kmn sides must be positive"));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::new(a + b, &edges)
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycles need at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 10 {
        return Err(bad("hypercube dimension must be in 1..=10"));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for i in 0..n {
        for bit in 0..d {
            let j = i ^ (1 << bit);
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::new(n, &edges)?;
    assert!(g.is_bipartite());
    assert!(g.is_regular() && g.min_degree() == d);
    if d <= 5 {
        assert_eq!(g.vertex_connectivity(), d);
    }
    Ok(g)
}

/// Two hubs joined by internally disjoint paths; `lengths[i]` is the number
/// of edges on path `i`. Bipartite exactly when all lengths share parity.
fn theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.len() < 3 {
        return Err(bad("theta needs at least 3 paths"));
    }
    if lengths.iter().any(|&l| l == 0) {
        return Err(bad("theta path lengths must be positive"));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(bad("theta allows at most one direct hub-hub edge"));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        if len == 1 {
            edges.push((0, 1));
            continue;
        }
        let mut prev = 0;
        for _ in 0..len - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    let g = Graph::new(next, &edges)?;
    assert_eq!(g.vertex_connectivity(), 2);
    Ok(g)
}

fn regular_bipartite(r: usize, half: usize, seed: u64) -> Result<Graph> {
    if r == 0 || half == 0 {
        return Err(bad("regbip needs positive r and n"));
    }
    if r > half {
        return Err(bad(format!(
            "cannot be {r}-regular with only {half} partners"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 1000;
    for _ in 0..attempts {
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for _ in 0..r {
            let mut perm: Vec<usize> = (0..half).collect();
            perm.shuffle(&mut rng);
            for (i, &j) in perm.iter().enumerate() {
                edges.insert((i, half + j));
            }
        }
        // a repeated pair across matchings collapses in the set
        if edges.len() != r * half {
            continue;
        }
        let edge_vec: Vec<_> = edges.into_iter().collect();
        let g = Graph::new(2 * half, &edge_vec)?;
        assert!(g.is_regular() && g.min_degree() == r);
        assert!(g.is_bipartite());
        return Ok(g);
    }
    Err(Error::GenerationFailed { attempts })
}

fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(bad("randbip sides must be positive"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(bad(format!("p must be a probability, got {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if rng.random::<f64>() < p {
                edges.push((i, a + j));
            }
        }
    }
    let g = Graph::new(a + b, &edges)?;
    assert!(g.is_bipartite());
    Ok(g)
}

/// Rejection-samples dense bipartite graphs until one is 3-connected and
/// not regular. Needs at least 7 vertices: on 6 the only 3-connected
/// bipartite graph is the regular K(3,3).
fn random_three_connected(n: usize, seed: u64) -> Result<Graph> {
    if n < 7 {
        return Err(bad("rand3nrb needs at least 7 vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 5000;
    for _ in 0..attempts {
        let a = rng.random_range(3..=n / 2);
        let b = n - a;
        let p = 0.55 + rng.random::<f64>() * 0.35;
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                if rng.random::<f64>() < p {
                    edges.push((i, a + j));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_regular() || g.vertex_connectivity() < 3 {
            continue;
        }
        assert!(g.is_bipartite());
        return Ok(g);
    }
    Err(Error::GenerationFailed { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        let g = FamilySpec::parse("Kmn:3,5").unwrap().build(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 15));

        let g = FamilySpec::parse("C:6").unwrap().build(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert!(g.is_bipartite());

        let g = FamilySpec::parse("Q:3").unwrap().build(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        assert!(g.is_regular() && g.min_degree() == 3);
    }

    #[test]
    fn theta_shapes() {
        let g = FamilySpec::parse("theta:3,3,3").unwrap().build(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 9));
        assert!(g.is_bipartite());
        assert_eq!(g.vertex_connectivity(), 2);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);

        // mixed parity lengths produce an odd cycle
        let g = FamilySpec::parse("theta:1,2,3").unwrap().build(0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        assert!(!g.is_bipartite());
    }

    #[test]
    fn family_errors() {
        for s in [
            "nope:1",
            "Kmn:3",
            "Kmn:0,5",
            "C:2",
            "Q:0",
            "theta:3,3",
            "theta:1,1,3",
            "theta:0,3,3",
            "regbip:r=4,n=3",
            "randbip:m=3,n=4,p=1.5",
            "rand3nrb:n=6",
            "regbip:r=3",
            "randbip:m=3,n=4",
            "regbip:x=1,r=3,n=3",
        ] {
            let result = FamilySpec::parse(s).and_then(|f| f.build(0));
            assert!(result.is_err(), "{s} should fail");
        }
    }

    #[test]
    fn regular_bipartite_generation() {
        let g = FamilySpec::parse("regbip:r=3,n=5,seed=7")
            .unwrap()
            .build(0)
            .unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_regular() && g.min_degree() == 3);
    }

    #[test]
    fn random_families_are_seed_deterministic() {
        let a = FamilySpec::parse("randbip:m=4,n=5,p=0.6,seed=11")
            .unwrap()
            .build(0)
            .unwrap();
        let b = FamilySpec::parse("randbip:m=4,n=5,p=0.6,seed=11")
            .unwrap()
            .build(99)
            .unwrap();
        assert_eq!(a.edges(), b.edges());

        // omitted seed falls back to the build argument
        let c = FamilySpec::parse("randbip:m=4,n=5,p=0.6")
            .unwrap()
            .build(11)
            .unwrap();
        assert_eq!(a.edges(), c.edges());
    }

    #[test]
    fn tough_random_family_meets_its_contract() {
        for seed in 0..5 {
            let g = random_three_connected(11, seed).unwrap();
            assert_eq!(g.vertex_count(), 11);
            assert!(g.is_bipartite());
            assert!(!g.is_regular());
            assert!(g.vertex_connectivity() >= 3);
        }
    }
}
