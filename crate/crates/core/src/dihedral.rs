//! The dihedral Coxeter group W(I₂ⁿ) of order `2n`, generated by the
//! involutions `r0` and `r1`.
//!
//! Elements are kept as alternating words in normal form: the shorter of
//! the two alternating spellings, with the length-`n` tie resolved to the
//! word starting with `r0`.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Smallest `n` handled; smaller dihedral types are outside scope.
pub const MIN_N: usize = 5;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n < MIN_N {
        return Err(invalid(format!("n must be at least {MIN_N}, got {n}")));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Gen {
    R0,
    R1,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::R0 => Gen::R1,
            Gen::R1 => Gen::R0,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Gen::R0 => 0,
            Gen::R1 => 1,
        }
    }

    pub fn from_index(i: usize) -> Result<Gen> {
        match i {
            0 => Ok(Gen::R0),
            1 => Ok(Gen::R1),
            _ => Err(invalid(format!("generator index must be 0 or 1, got {i}"))),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gen::R0 => "r0",
            Gen::R1 => "r1",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DihedralElement {
    n: usize,
    start: Option<Gen>,
    len: usize,
}

impl DihedralElement {
    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(DihedralElement {
            n,
            start: None,
            len: 0,
        })
    }

    pub fn generator(n: usize, g: Gen) -> Result<Self> {
        check_n(n)?;
        Ok(DihedralElement {
            n,
            start: Some(g),
            len: 1,
        })
    }

    /// The alternating word `[start other start …]` of length `len`,
    /// reduced to normal form. `len` may exceed `n`.
    pub fn alternating(n: usize, start: Gen, len: usize) -> Result<Self> {
        check_n(n)?;
        let (mut k, mut f) = (0, false);
        let mut g = start;
        for _ in 0..len {
            (k, f) = rot_mul(n, (k, f), letter_rot(n, g));
            g = g.other();
        }
        Ok(from_rot(n, k, f))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> Option<Gen> {
        self.start
    }

    /// Length of the reduced word.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn letters(&self) -> Vec<Gen> {
        let mut out = Vec::with_capacity(self.len);
        if let Some(mut g) = self.start {
            for _ in 0..self.len {
                out.push(g);
                g = g.other();
            }
        }
        out
    }

    /// `ρ^k r0^f` with `ρ = r0 r1`.
    fn to_rot(self) -> (usize, bool) {
        self.letters().into_iter().fold((0, false), |acc, g| {
            rot_mul(self.n, acc, letter_rot(self.n, g))
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(invalid(format!(
                "cannot multiply elements of orders {} and {}",
                2 * self.n,
                2 * other.n
            )));
        }
        let (k, f) = rot_mul(self.n, self.to_rot(), other.to_rot());
        Ok(from_rot(self.n, k, f))
    }

    /// Inverse, which is also the word reversal `x ↦ x^op`.
    pub fn inverse(&self) -> Self {
        let letters = self.letters();
        match letters.last() {
            None => *self,
            Some(&last) => {
                DihedralElement::alternating(self.n, last, self.len).expect("n already validated")
            }
        }
    }

    /// Parses `"1"` or a space-separated alternating word such as `"r0 r1 r0"`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_n(n)?;
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Self::identity(n);
        }
        let mut acc = Self::identity(n)?;
        for (pos, tok) in text.split_whitespace().enumerate() {
            let g = match tok {
                "r0" => Gen::R0,
                "r1" => Gen::R1,
                _ => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unknown letter {tok:?}"),
                    })
                }
            };
            acc = acc.multiply(&Self::generator(n, g)?)?;
        }
        Ok(acc)
    }

    /// Sort key used for canonical ordering and coset representatives:
    /// shorter first, then `r0`-start before `r1`-start.
    pub fn order_key(&self) -> (usize, Option<Gen>) {
        (self.len, self.start)
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return f.write_str("1");
        }
        let words: Vec<String> = self.letters().iter().map(Gen::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

impl Serialize for DihedralElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn letter_rot(n: usize, g: Gen) -> (usize, bool) {
    match g {
        Gen::R0 => (0, true),
        // r1 = r0 ρ = ρ⁻¹ r0
        Gen::R1 => (n - 1, true),
    }
}

/// `(ρ^a r0^f)(ρ^b r0^g) = ρ^{a ± b} r0^{f+g}`.
fn rot_mul(n: usize, (a, f): (usize, bool), (b, g): (usize, bool)) -> (usize, bool) {
    let k = if f { (a + n - b) % n } else { (a + b) % n };
    (k, f ^ g)
}

fn from_rot(n: usize, k: usize, f: bool) -> DihedralElement {
    let (start, len) = match (k, f) {
        (0, false) => (None, 0),
        (k, false) if 2 * k <= n => (Some(Gen::R0), 2 * k),
        (k, false) => (Some(Gen::R1), 2 * (n - k)),
        (k, true) if 2 * k < n => (Some(Gen::R0), 2 * k + 1),
        (k, true) => (Some(Gen::R1), 2 * (n - k) - 1),
    };
    DihedralElement { n, start, len }
}

/// All `2n` elements, shortest first, `r0`-start before `r1`-start.
pub fn enumerate_group(n: usize) -> Result<Vec<DihedralElement>> {
    check_n(n)?;
    let mut out = vec![DihedralElement::identity(n)?];
    for len in 1..=n {
        out.push(DihedralElement {
            n,
            start: Some(Gen::R0),
            len,
        });
        if len < n {
            out.push(DihedralElement {
                n,
                start: Some(Gen::R1),
                len,
            });
        }
    }
    Ok(out)
}

/// Subgroup generated by `gens`, in canonical order.
pub fn generated_subgroup(n: usize, gens: &[DihedralElement]) -> Result<Vec<DihedralElement>> {
    let id = DihedralElement::identity(n)?;
    let mut seen: HashSet<DihedralElement> = HashSet::from([id]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.multiply(g)?;
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(DihedralElement::order_key);
    Ok(out)
}

/// `(N_i, K_i)`.
///
/// For odd `n`: `N_i = ⟨r_i⟩` and `K_i` is trivial. For `n = 2m`:
/// `N_0 = ⟨r0, [r1 r0 …]_{2m−1}⟩`, `N_1 = ⟨r1, [r0 r1 …]_{2m−1}⟩`,
/// `K_0 = ⟨[r1 r0 …]_{2m−1}⟩` and `K_1` trivial.
pub fn standard_subgroups(
    n: usize,
    i: usize,
) -> Result<(Vec<DihedralElement>, Vec<DihedralElement>)> {
    check_n(n)?;
    let g = Gen::from_index(i)?;
    let r = DihedralElement::generator(n, g)?;
    let id = DihedralElement::identity(n)?;
    if n % 2 == 1 {
        return Ok((generated_subgroup(n, &[r])?, vec![id]));
    }
    let long = DihedralElement::alternating(n, g.other(), n - 1)?;
    let big = generated_subgroup(n, &[r, long])?;
    let small = match g {
        Gen::R0 => generated_subgroup(n, &[long])?,
        Gen::R1 => vec![id],
    };
    Ok((big, small))
}

#[derive(Clone, Debug)]
pub struct CosetSystem {
    pub n: usize,
    pub subgroup: Vec<DihedralElement>,
    /// Left coset representatives, shortest element of each coset.
    pub representatives: Vec<DihedralElement>,
}

impl CosetSystem {
    /// The representatives' op-images `{d^op}`, representatives of the right cosets.
    pub fn op_representatives(&self) -> Vec<DihedralElement> {
        self.representatives
            .iter()
            .map(DihedralElement::inverse)
            .collect()
    }
}

/// Left coset representatives of `subgroup`, each the minimum of its coset
/// under [`DihedralElement::order_key`].
pub fn coset_representatives(n: usize, subgroup: &[DihedralElement]) -> Result<CosetSystem> {
    check_n(n)?;
    if subgroup.is_empty() {
        return Err(Error::InvalidSubgroup("empty set".into()));
    }
    if subgroup.iter().any(|h| h.n != n) {
        return Err(Error::InvalidSubgroup(format!(
            "element not in the group of order {}",
            2 * n
        )));
    }
    let members: HashSet<DihedralElement> = subgroup.iter().copied().collect();
    for a in &members {
        for b in &members {
            if !members.contains(&a.multiply(b)?) {
                return Err(Error::InvalidSubgroup(format!("{a} · {b} leaves the set")));
            }
        }
    }
    let mut covered: HashSet<DihedralElement> = HashSet::new();
    let mut representatives = Vec::new();
    for g in enumerate_group(n)? {
        if covered.contains(&g) {
            continue;
        }
        for h in &members {
            covered.insert(g.multiply(h)?);
        }
        representatives.push(g);
    }
    let mut subgroup: Vec<_> = members.into_iter().collect();
    subgroup.sort_by_key(DihedralElement::order_key);
    Ok(CosetSystem {
        n,
        subgroup,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(n: usize, text: &str) -> DihedralElement {
        DihedralElement::parse(n, text).unwrap()
    }

    #[test]
    fn basic_products() {
        let r0 = el(5, "r0");
        assert!(r0.multiply(&r0).unwrap().is_identity());
        let a = el(5, "r0 r1 r0 r1 r0");
        let b = DihedralElement::alternating(5, Gen::R1, 5).unwrap();
        assert_eq!(
            a.multiply(&DihedralElement::identity(5).unwrap()).unwrap(),
            b
        );
        assert_eq!(b.start(), Some(Gen::R0));
        let rot = el(6, "r0 r1");
        let mut acc = DihedralElement::identity(6).unwrap();
        for k in 1..=6 {
            acc = acc.multiply(&rot).unwrap();
            assert_eq!(acc.is_identity(), k == 6);
        }
        assert!(r0.multiply(&el(6, "r0")).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!(el(7, "1").to_string(), "1");
        assert_eq!(el(7, "r1 r0 r1").to_string(), "r1 r0 r1");
        assert_eq!(el(7, "r0 r0 r1").to_string(), "r1");
        // r1 r0 r1 r0 r1 r0 r1 r0 = [r0 r1]_6 at n = 7
        assert_eq!(
            el(7, "r1 r0 r1 r0 r1 r0 r1 r0").to_string(),
            "r0 r1 r0 r1 r0 r1"
        );
        assert!(DihedralElement::parse(7, "r0 e0").is_err());
    }

    #[test]
    fn group_enumeration() {
        assert_eq!(enumerate_group(5).unwrap().len(), 10);
        assert_eq!(enumerate_group(6).unwrap().len(), 12);
        assert!(enumerate_group(4).is_err());
        let g = enumerate_group(5).unwrap();
        let set: HashSet<_> = g.iter().copied().collect();
        assert_eq!(set.len(), 10);
        for a in &g {
            for b in &g {
                assert!(set.contains(&a.multiply(b).unwrap()));
            }
        }
    }

    #[test]
    fn group_axioms_exhaustive() {
        for n in 5..=12 {
            let g = enumerate_group(n).unwrap();
            let id = DihedralElement::identity(n).unwrap();
            for a in &g {
                assert_eq!(a.multiply(&a.inverse()).unwrap(), id);
                assert_eq!(a.inverse().multiply(a).unwrap(), id);
                for b in &g {
                    for c in &g {
                        let left = a.multiply(b).unwrap().multiply(c).unwrap();
                        let right = a.multiply(&b.multiply(c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
            // word length matches the normal form everywhere
            for a in &g {
                assert_eq!(
                    DihedralElement::alternating(n, a.start().unwrap_or(Gen::R0), a.len()).unwrap(),
                    *a
                );
            }
        }
    }

    #[test]
    fn braid_identification() {
        for n in 5..=12 {
            let a = DihedralElement::alternating(n, Gen::R0, n).unwrap();
            let b = DihedralElement::alternating(n, Gen::R1, n).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.start(), Some(Gen::R0));
        }
    }

    fn centralizer(n: usize, g: Gen) -> Vec<DihedralElement> {
        let r = DihedralElement::generator(n, g).unwrap();
        let mut out: Vec<_> = enumerate_group(n)
            .unwrap()
            .into_iter()
            .filter(|a| a.multiply(&r).unwrap().multiply(&a.inverse()).unwrap() == r)
            .collect();
        out.sort_by_key(DihedralElement::order_key);
        out
    }

    #[test]
    fn subgroups_match_brute_force_stabilizers() {
        for n in 5..=12 {
            for i in 0..=1 {
                let (big, small) = standard_subgroups(n, i).unwrap();
                // stabilizer of ±β_i is the centralizer of the reflection r_i
                assert_eq!(big, centralizer(n, Gen::from_index(i).unwrap()));
                if n % 2 == 0 {
                    assert_eq!(big.len(), 4);
                    assert_eq!(small.len(), if i == 0 { 2 } else { 1 });
                    let long =
                        DihedralElement::alternating(n, Gen::from_index(1 - i).unwrap(), n - 1)
                            .unwrap();
                    assert!(long.multiply(&long).unwrap().is_identity());
                } else {
                    assert_eq!(big.len(), 2);
                    assert_eq!(small.len(), 1);
                }
            }
        }
        assert_eq!(
            standard_subgroups(5, 0).unwrap().0,
            vec![el(5, "1"), el(5, "r0")]
        );
        assert!(standard_subgroups(6, 2).is_err());
        assert!(standard_subgroups(4, 0).is_err());
    }

    #[test]
    fn coset_systems() {
        let (n0, _) = standard_subgroups(5, 0).unwrap();
        assert_eq!(
            coset_representatives(5, &n0).unwrap().representatives.len(),
            5
        );
        let (n0, _) = standard_subgroups(6, 0).unwrap();
        assert_eq!(
            coset_representatives(6, &n0).unwrap().representatives.len(),
            3
        );
        let trivial = vec![DihedralElement::identity(6).unwrap()];
        assert_eq!(
            coset_representatives(6, &trivial)
                .unwrap()
                .representatives
                .len(),
            12
        );
        let not_closed = vec![el(6, "1"), el(6, "r0 r1")];
        assert!(matches!(
            coset_representatives(6, &not_closed),
            Err(Error::InvalidSubgroup(_))
        ));
    }

    #[test]
    fn cosets_partition_the_group() {
        for n in 5..=12 {
            for i in 0..=1 {
                let (big, small) = standard_subgroups(n, i).unwrap();
                for h in [big, small] {
                    let sys = coset_representatives(n, &h).unwrap();
                    assert_eq!(sys.representatives.len() * sys.subgroup.len(), 2 * n);
                    let mut hit = HashSet::new();
                    for rep in &sys.representatives {
                        for x in &sys.subgroup {
                            assert!(hit.insert(rep.multiply(x).unwrap()));
                        }
                        let coset_min = sys
                            .subgroup
                            .iter()
                            .map(|x| rep.multiply(x).unwrap())
                            .min_by_key(DihedralElement::order_key)
                            .unwrap();
                        assert_eq!(coset_min, *rep);
                    }
                    assert_eq!(hit.len(), 2 * n);
                }
            }
        }
    }
}
