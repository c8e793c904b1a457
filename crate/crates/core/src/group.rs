//! Finite abelian groups as products of cyclic factors, with the halving
//! operation the realization algorithms depend on.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A finite abelian group `Z_{m1} x ... x Z_{mk}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    moduli: Vec<u64>,
}

/// An element of a [`GroupSpec`], one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl GroupSpec {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::BadGroup(String::from("empty modulus list")));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::BadGroup(format!("cyclic order {m} below 2")));
        }
        Ok(GroupSpec {
            moduli: moduli.to_vec(),
        })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn arity(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    /// True for the group `Z2`, the one weightings lift from.
    pub fn is_binary(&self) -> bool {
        self.moduli == [2]
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.arity()],
        }
    }

    /// Builds an element, reducing each coordinate by its modulus.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.arity() {
            return Err(Error::ElementShapeMismatch {
                expected: self.arity(),
                got: coords.len(),
            });
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &m)| c % m)
                .collect(),
        })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert_eq!(a.coords.len(), self.arity());
        debug_assert_eq!(b.coords.len(), self.arity());
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn double(&self, a: &GroupElement) -> GroupElement {
        self.add(a, a)
    }

    /// All `h` with `h + h = g`, in increasing coordinate order. Per cyclic
    /// factor of odd modulus there is exactly one solution; for even modulus
    /// there are two when the residue is even and none otherwise.
    pub fn halvings(&self, g: &GroupElement) -> Vec<GroupElement> {
        let mut per_coord: Vec<Vec<u64>> = Vec::with_capacity(self.arity());
        for (&gi, &m) in g.coords.iter().zip(&self.moduli) {
            let sols: Vec<u64> = (0..m).filter(|&r| (2 * r) % m == gi).collect();
            if sols.is_empty() {
                return Vec::new();
            }
            per_coord.push(sols);
        }
        let mut out = vec![Vec::new()];
        for sols in &per_coord {
            let mut next = Vec::with_capacity(out.len() * sols.len());
            for prefix in &out {
                for &s in sols {
                    let mut ext = prefix.clone();
                    ext.push(s);
                    next.push(ext);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|coords| GroupElement { coords })
            .collect()
    }

    /// Every element, in increasing coordinate order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for &m in &self.moduli {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for prefix in &out {
                for r in 0..m {
                    let mut ext = prefix.clone();
                    ext.push(r);
                    next.push(ext);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|coords| GroupElement { coords })
            .collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

/// Parses specs like `Z3`, `z4`, or `Z2xZ2` (factor separator `x` or `X`).
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut moduli = Vec::new();
        for token in s.split(['x', 'X']) {
            let token = token.trim();
            let digits = token
                .strip_prefix('Z')
                .or_else(|| token.strip_prefix('z'))
                .ok_or_else(|| Error::BadGroup(format!("factor {token:?} must look like Z<k>")))?;
            let m: u64 = digits
                .parse()
                .map_err(|_| Error::BadGroup(format!("bad modulus {digits:?}")))?;
            moduli.push(m);
        }
        GroupSpec::new(&moduli)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        let g: GroupSpec = "Z2xZ2".parse().unwrap();
        assert_eq!(g.moduli(), &[2, 2]);
        assert_eq!(format!("{g}"), "Z2xZ2");
        let g: GroupSpec = "z5".parse().unwrap();
        assert_eq!(g.moduli(), &[5]);
        assert!("".parse::<GroupSpec>().is_err());
        assert!("Z0".parse::<GroupSpec>().is_err());
        assert!("Y3".parse::<GroupSpec>().is_err());
        assert!("Z2x".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn halvings_odd_group_unique() {
        let g = GroupSpec::new(&[5]).unwrap();
        for target in g.elements() {
            let hs = g.halvings(&target);
            assert_eq!(hs.len(), 1);
            assert_eq!(g.double(&hs[0]), target);
        }
    }

    #[test]
    fn halvings_z4() {
        let g = GroupSpec::new(&[4]).unwrap();
        let two = g.element(&[2]).unwrap();
        let hs = g.halvings(&two);
        assert_eq!(hs, vec![g.element(&[1]).unwrap(), g.element(&[3]).unwrap()]);
        let one = g.element(&[1]).unwrap();
        assert!(g.halvings(&one).is_empty());
    }

    fn arb_group() -> impl Strategy<Value = GroupSpec> {
        prop::collection::vec(2u64..=8, 1..=3).prop_map(|m| GroupSpec::new(&m).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(spec in arb_group(), seed in any::<u64>()) {
            let elems = spec.elements();
            prop_assert_eq!(elems.len() as u128, spec.order());
            let pick = |s: u64| elems[(s % elems.len() as u64) as usize].clone();
            let (a, b, c) = (pick(seed), pick(seed / 7 + 1), pick(seed / 13 + 2));
            let ab_c = spec.add(&spec.add(&a, &b), &c);
            let a_bc = spec.add(&a, &spec.add(&b, &c));
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(spec.add(&a, &spec.zero()), a.clone());
            prop_assert_eq!(spec.add(&a, &spec.neg(&a)), spec.zero());
            prop_assert_eq!(spec.add(&a, &b), spec.add(&b, &a));
        }

        #[test]
        fn halvings_are_complete_and_correct(spec in arb_group(), seed in any::<u64>()) {
            let elems = spec.elements();
            let g = elems[(seed % elems.len() as u64) as usize].clone();
            let hs = spec.halvings(&g);
            // every claimed halving doubles back
            for h in &hs {
                prop_assert_eq!(spec.double(h), g.clone());
            }
            // and nothing is missed
            let brute: alloc::vec::Vec<_> =
                elems.iter().filter(|h| spec.double(h) == g).cloned().collect();
            prop_assert_eq!(hs, brute);
        }
    }
}
