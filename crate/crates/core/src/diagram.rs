//! Brauer diagrams of type A_t and their monoid.
//!
//! A diagram on `t + 1` strands has `2(t + 1)` dots. Top dots carry the
//! labels `1..=t+1` from left to right, bottom dots carry `t+2..=2t+2`, so
//! bottom position `j` is label `t + 1 + j`. Every dot lies on exactly one
//! strand. A power of δ rides along as an integer exponent.
//!
//! Internally dots are 0-based: dot `p < t + 1` is top position `p + 1`,
//! dot `p >= t + 1` is bottom position `p - t`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Largest supported `t`. Dot indices are stored as `u16`.
pub const MAX_T: usize = 1000;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct BrauerDiagram {
    t: usize,
    partner: Vec<u16>,
    delta_exp: i64,
}

/// Wire form: `{"t":..,"delta":..,"pairs":[[a,b],..]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramJson {
    t: usize,
    delta: i64,
    pairs: Vec<[usize; 2]>,
}

impl From<BrauerDiagram> for DiagramJson {
    fn from(d: BrauerDiagram) -> Self {
        DiagramJson {
            t: d.t,
            delta: d.delta_exp,
            pairs: d.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<DiagramJson> for BrauerDiagram {
    type Error = Error;

    fn try_from(j: DiagramJson) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = j.pairs.iter().map(|p| (p[0], p[1])).collect();
        BrauerDiagram::from_pairs(j.t, &pairs, j.delta)
    }
}

fn check_t(t: usize) -> Result<()> {
    if t < 1 {
        return Err(invalid(format!("t must be at least 1, got {t}")));
    }
    if t > MAX_T {
        return Err(invalid(format!("t must be at most {MAX_T}, got {t}")));
    }
    Ok(())
}

fn check_node(t: usize, i: usize) -> Result<()> {
    check_t(t)?;
    if i < 1 || i > t {
        return Err(invalid(format!("node index {i} outside 1..={t}")));
    }
    Ok(())
}

impl BrauerDiagram {
    pub fn identity(t: usize) -> Result<Self> {
        check_t(t)?;
        let n = t + 1;
        let partner = (0..2 * n).map(|p| ((p + n) % (2 * n)) as u16).collect();
        Ok(BrauerDiagram {
            t,
            partner,
            delta_exp: 0,
        })
    }

    /// The crossing `R_i`: top `i` to bottom `i+1` and top `i+1` to bottom `i`.
    pub fn generator_r(t: usize, i: usize) -> Result<Self> {
        check_node(t, i)?;
        let mut d = Self::identity(t)?;
        let n = t + 1;
        let (a, b) = (i - 1, i);
        d.link(a, n + b);
        d.link(b, n + a);
        Ok(d)
    }

    /// The cup-cap `E_i`: joins top `i` to `i+1` and bottom `i` to `i+1`.
    pub fn generator_e(t: usize, i: usize) -> Result<Self> {
        check_node(t, i)?;
        let mut d = Self::identity(t)?;
        let n = t + 1;
        let (a, b) = (i - 1, i);
        d.link(a, b);
        d.link(n + a, n + b);
        Ok(d)
    }

    /// Permutation diagram joining top position `j` to bottom position
    /// `images[j - 1]` (all 1-based).
    pub fn permutation(t: usize, images: &[usize]) -> Result<Self> {
        check_t(t)?;
        let n = t + 1;
        if images.len() != n {
            return Err(invalid(format!(
                "expected {n} images, got {}",
                images.len()
            )));
        }
        let pairs: Vec<(usize, usize)> = images
            .iter()
            .enumerate()
            .map(|(j, &img)| (j + 1, n + img))
            .collect();
        if images.iter().any(|&img| img < 1 || img > n) {
            return Err(invalid("permutation image out of range"));
        }
        Self::from_pairs(t, &pairs, 0).map_err(|_| invalid("images do not form a permutation"))
    }

    /// Builds a diagram from 1-based dot pairs in any order.
    pub fn from_pairs(t: usize, pairs: &[(usize, usize)], delta_exp: i64) -> Result<Self> {
        let bad = |position: usize, message: String| Error::Parse { position, message };
        check_t(t).map_err(|e| bad(0, e.to_string()))?;
        let n = t + 1;
        let mut partner = vec![u16::MAX; 2 * n];
        for (idx, &(a, b)) in pairs.iter().enumerate() {
            for x in [a, b] {
                if x < 1 || x > 2 * n {
                    return Err(bad(idx, format!("label {x} outside 1..={}", 2 * n)));
                }
            }
            if a == b {
                return Err(bad(idx, format!("label {a} paired with itself")));
            }
            for x in [a, b] {
                if partner[x - 1] != u16::MAX {
                    return Err(bad(idx, format!("label {x} repeated")));
                }
            }
            partner[a - 1] = (b - 1) as u16;
            partner[b - 1] = (a - 1) as u16;
        }
        if let Some(missing) = partner.iter().position(|&p| p == u16::MAX) {
            return Err(bad(
                pairs.len(),
                format!("label {} not covered by any pair", missing + 1),
            ));
        }
        Ok(BrauerDiagram {
            t,
            partner,
            delta_exp,
        })
    }

    fn link(&mut self, a: usize, b: usize) {
        self.partner[a] = b as u16;
        self.partner[b] = a as u16;
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of strands, `t + 1`.
    pub fn strands(&self) -> usize {
        self.t + 1
    }

    pub fn delta_exp(&self) -> i64 {
        self.delta_exp
    }

    pub fn with_delta(mut self, delta_exp: i64) -> Self {
        self.delta_exp = delta_exp;
        self
    }

    /// Multiplies by δ^`k`.
    pub fn scaled(mut self, k: i64) -> Self {
        self.delta_exp += k;
        self
    }

    /// The 1-based partner of the 1-based `label`.
    pub fn partner_of(&self, label: usize) -> usize {
        self.partner[label - 1] as usize + 1
    }

    /// The matching without the δ exponent, usable as a hash key.
    pub fn matching(&self) -> &[u16] {
        &self.partner
    }

    /// Canonical pair list: smaller label first, sorted by first label.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p < q as usize)
            .map(|(p, &q)| (p + 1, q as usize + 1))
            .collect()
    }

    /// Pairs of top positions joined by a horizontal strand, `a < b`.
    pub fn top_cups(&self) -> Vec<(usize, usize)> {
        let n = self.strands();
        (0..n)
            .filter_map(|p| {
                let q = self.partner[p] as usize;
                (q < n && p < q).then_some((p + 1, q + 1))
            })
            .collect()
    }

    /// Pairs of bottom positions joined by a horizontal strand, `a < b`.
    pub fn bottom_cups(&self) -> Vec<(usize, usize)> {
        let n = self.strands();
        (n..2 * n)
            .filter_map(|p| {
                let q = self.partner[p] as usize;
                (q >= n && p < q).then(|| (p - n + 1, q - n + 1))
            })
            .collect()
    }

    /// Vertical strands as (top position, bottom position), sorted by top.
    pub fn through_strands(&self) -> Vec<(usize, usize)> {
        let n = self.strands();
        (0..n)
            .filter_map(|p| {
                let q = self.partner[p] as usize;
                (q >= n).then(|| (p + 1, q - n + 1))
            })
            .collect()
    }

    pub fn is_permutation(&self) -> bool {
        let n = self.strands();
        (0..n).all(|p| self.partner[p] as usize >= n)
    }

    /// Product `self · other` (self on top) together with the number of
    /// closed loops removed.
    pub fn multiply_counting(&self, other: &Self) -> Result<(Self, usize)> {
        if self.t != other.t {
            return Err(invalid(format!(
                "cannot multiply diagrams with t = {} and t = {}",
                self.t, other.t
            )));
        }
        let (partner, loops) = compose(&self.partner, &other.partner, self.strands());
        let d = BrauerDiagram {
            t: self.t,
            partner,
            delta_exp: self.delta_exp + other.delta_exp + loops as i64,
        };
        Ok((d, loops))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_counting(other).map(|(d, _)| d)
    }

    /// Vertical flip, the anti-involution `x ↦ x^op`.
    pub fn op_involution(&self) -> Self {
        let n = self.strands();
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0u16; 2 * n];
        for (p, &q) in self.partner.iter().enumerate() {
            partner[flip(p)] = flip(q as usize) as u16;
        }
        BrauerDiagram {
            t: self.t,
            partner,
            delta_exp: self.delta_exp,
        }
    }

    /// `Some(self.delta - other.delta)` when the matchings agree.
    pub fn equals_up_to_delta(&self, other: &Self) -> Result<Option<i64>> {
        if self.t != other.t {
            return Err(invalid(format!(
                "cannot compare diagrams with t = {} and t = {}",
                self.t, other.t
            )));
        }
        Ok((self.partner == other.partner).then(|| self.delta_exp - other.delta_exp))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DiagramJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            position: e.column(),
            message: format!("line {}: {e}", e.line()),
        })?;
        BrauerDiagram::try_from(raw)
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BrauerDiagram({})", self.to_json())
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BrauerDiagram::from_json(s)
    }
}

/// Panics if the two diagrams have different `t`; use
/// [`BrauerDiagram::multiply`] for a checked product.
impl Mul for &BrauerDiagram {
    type Output = BrauerDiagram;

    fn mul(self, rhs: &BrauerDiagram) -> BrauerDiagram {
        self.multiply(rhs).expect("diagram product needs equal t")
    }
}

/// Stacks `upper` over `lower` (`n` strands each). Returns the resulting
/// partner table and the number of closed loops in the glued middle row.
fn compose(upper: &[u16], lower: &[u16], n: usize) -> (Vec<u16>, usize) {
    let mut out = vec![u16::MAX; 2 * n];
    let mut middle_seen = vec![false; n];

    for start in 0..2 * n {
        if out[start] != u16::MAX {
            continue;
        }
        let end = if start < n {
            // enter the upper diagram at its top dot
            let mut dot = start;
            loop {
                let e = upper[dot] as usize;
                if e < n {
                    break e;
                }
                let mid = e - n;
                middle_seen[mid] = true;
                let f = lower[mid] as usize;
                if f >= n {
                    break f;
                }
                middle_seen[f] = true;
                dot = n + f;
            }
        } else {
            // enter the lower diagram at its bottom dot
            let mut dot = start;
            loop {
                let f = lower[dot] as usize;
                if f >= n {
                    break f;
                }
                middle_seen[f] = true;
                let e = upper[n + f] as usize;
                if e < n {
                    break e;
                }
                let mid = e - n;
                middle_seen[mid] = true;
                dot = mid;
            }
        };
        out[start] = end as u16;
        out[end] = start as u16;
    }

    let mut loops = 0;
    for j in 0..n {
        if middle_seen[j] {
            continue;
        }
        loops += 1;
        let mut cur = j;
        loop {
            middle_seen[cur] = true;
            let f = lower[cur] as usize;
            middle_seen[f] = true;
            cur = upper[n + f] as usize - n;
            if cur == j {
                break;
            }
        }
    }
    (out, loops)
}

/// A set of matchings sharing one `t`; δ exponents are dropped on insert.
#[derive(Clone, Debug)]
pub struct DiagramSet {
    t: usize,
    members: HashSet<Vec<u16>>,
}

impl DiagramSet {
    pub fn new(t: usize) -> Self {
        DiagramSet {
            t,
            members: HashSet::new(),
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Returns `true` if the matching was not present yet.
    pub fn insert(&mut self, d: &BrauerDiagram) -> Result<bool> {
        if d.t != self.t {
            return Err(invalid(format!(
                "diagram t = {} in set of t = {}",
                d.t, self.t
            )));
        }
        Ok(self.members.insert(d.partner.clone()))
    }

    pub fn contains(&self, d: &BrauerDiagram) -> bool {
        d.t == self.t && self.members.contains(&d.partner)
    }

    /// Members as diagrams with δ exponent 0, in no particular order.
    pub fn iter(&self) -> impl Iterator<Item = BrauerDiagram> + '_ {
        self.members.iter().map(move |p| BrauerDiagram {
            t: self.t,
            partner: p.clone(),
            delta_exp: 0,
        })
    }

    /// Members sorted by matching, for reproducible output.
    pub fn sorted(&self) -> Vec<BrauerDiagram> {
        let mut v: Vec<BrauerDiagram> = self.iter().collect();
        v.sort_by(|a, b| a.partner.cmp(&b.partner));
        v
    }
}

/// Closure of `{1} ∪ generators` under multiplication, by breadth-first
/// search with matching-level dedup. Frontier expansion runs in parallel;
/// candidates are merged in frontier order so the result is deterministic.
pub fn closure(t: usize, generators: &[BrauerDiagram]) -> Result<DiagramSet> {
    check_t(t)?;
    if let Some(g) = generators.iter().find(|g| g.t != t) {
        return Err(invalid(format!(
            "generator with t = {} in closure over t = {t}",
            g.t
        )));
    }
    let n = t + 1;
    let gens: Vec<&[u16]> = generators.iter().map(|g| g.matching()).collect();
    let start = BrauerDiagram::identity(t)?.partner;

    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let candidates: Vec<Vec<u16>> = frontier
            .par_iter()
            .flat_map_iter(|d| gens.iter().map(move |g| compose(d, g, n).0))
            .collect();
        let mut next = Vec::new();
        for c in candidates {
            if !seen.contains(&c) {
                seen.insert(c.clone());
                next.push(c);
            }
        }
        frontier = next;
    }
    Ok(DiagramSet { t, members: seen })
}

/// The Brauer monoid of type A_t, generated by all `R_i` and `E_i`.
pub fn enumerate_monoid(t: usize) -> Result<DiagramSet> {
    check_t(t)?;
    let mut gens = Vec::with_capacity(2 * t);
    for i in 1..=t {
        gens.push(BrauerDiagram::generator_r(t, i)?);
        gens.push(BrauerDiagram::generator_e(t, i)?);
    }
    closure(t, &gens)
}

/// `(t+1)!!` in the sense of the product of the first `t + 1` odd numbers.
pub fn odd_double_factorial(count: usize) -> u128 {
    (0..count as u128).map(|k| 2 * k + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(t: usize, i: usize) -> BrauerDiagram {
        BrauerDiagram::generator_r(t, i).unwrap()
    }

    fn e(t: usize, i: usize) -> BrauerDiagram {
        BrauerDiagram::generator_e(t, i).unwrap()
    }

    fn id(t: usize) -> BrauerDiagram {
        BrauerDiagram::identity(t).unwrap()
    }

    #[test]
    fn identity_pairs() {
        assert_eq!(id(1).pairs(), vec![(1, 3), (2, 4)]);
        assert_eq!(id(2).pairs(), vec![(1, 4), (2, 5), (3, 6)]);
        assert_eq!(id(1).delta_exp(), 0);
        assert!(BrauerDiagram::identity(0).is_err());
    }

    #[test]
    fn generators() {
        assert_eq!(r(1, 1).pairs(), vec![(1, 4), (2, 3)]);
        assert_eq!(e(1, 1).pairs(), vec![(1, 2), (3, 4)]);
        assert!(BrauerDiagram::generator_r(2, 3).is_err());
        assert!(BrauerDiagram::generator_e(2, 0).is_err());
        for g in [r(2, 1), r(2, 2), e(2, 1), e(2, 2)] {
            assert_eq!(&id(2) * &g, g);
            assert_eq!(&g * &id(2), g);
        }
    }

    #[test]
    fn small_products() {
        assert_eq!(&r(2, 1) * &r(2, 1), id(2));
        assert_eq!(
            &(&r(2, 1) * &r(2, 2)) * &r(2, 1),
            &(&r(2, 2) * &r(2, 1)) * &r(2, 2)
        );
        assert_eq!(&e(1, 1) * &e(1, 1), e(1, 1).with_delta(1));
        assert_eq!(&r(1, 1) * &e(1, 1), e(1, 1));
        assert_eq!(&(&r(2, 2) * &r(2, 1)) * &e(2, 2), &e(2, 1) * &e(2, 2));
        // E1 E2 E1: every middle dot lies on a through path, no loop closes
        assert_eq!(&e(2, 1) * &(&e(2, 2) * &e(2, 1)), e(2, 1).with_delta(0));
        assert_eq!(
            e(2, 1).multiply_counting(&(&e(2, 2) * &e(2, 1))).unwrap().1,
            0
        );
    }

    #[test]
    fn mismatched_t_is_rejected() {
        assert!(id(1).multiply(&id(2)).is_err());
        assert!(id(1).equals_up_to_delta(&id(2)).is_err());
    }

    #[test]
    fn op_on_generators() {
        assert_eq!(e(1, 1).op_involution(), e(1, 1));
        assert_eq!(r(2, 1).op_involution(), r(2, 1));
        assert_eq!((&e(2, 1) * &r(2, 2)).op_involution(), &r(2, 2) * &e(2, 1));
    }

    #[test]
    fn equals_up_to_delta_cases() {
        assert_eq!(
            (&e(1, 1) * &e(1, 1)).equals_up_to_delta(&e(1, 1)).unwrap(),
            Some(1)
        );
        assert_eq!(r(1, 1).equals_up_to_delta(&e(1, 1)).unwrap(), None);
        let d = r(3, 2);
        assert_eq!(d.equals_up_to_delta(&d).unwrap(), Some(0));
    }

    #[test]
    fn json_format() {
        assert_eq!(
            e(1, 1).to_json(),
            r#"{"t":1,"delta":0,"pairs":[[1,2],[3,4]]}"#
        );
        let d = r(3, 2).with_delta(-2);
        assert_eq!(BrauerDiagram::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn json_errors() {
        let err = BrauerDiagram::from_json(r#"{"t":1,"delta":0,"pairs":[[1,2],[2,4]]}"#);
        assert!(
            matches!(err, Err(Error::Parse { position: 1, .. })),
            "{err:?}"
        );
        assert!(BrauerDiagram::from_json(r#"{"t":1,"delta":0,"pairs":[[1,2],[3,5]]}"#).is_err());
        assert!(BrauerDiagram::from_json(r#"{"t":1,"delta":0,"pairs":[[1,2]]}"#).is_err());
        assert!(BrauerDiagram::from_json(r#"{"t":1,"delta":0,"pairs":[[1,1],[3,4]]}"#).is_err());
        let syntax = BrauerDiagram::from_json(r#"{"t":1,"delta":0,"pairs":[[1,2],[3,4]"#);
        assert!(matches!(syntax, Err(Error::Parse { .. })));
        assert!(
            BrauerDiagram::from_json(r#"{"t":1,"delta":0,"pairs":[[1,2],[3,4]],"x":1}"#).is_err()
        );
    }

    #[test]
    fn permutation_constructor() {
        assert_eq!(BrauerDiagram::permutation(2, &[2, 1, 3]).unwrap(), r(2, 1));
        assert!(BrauerDiagram::permutation(2, &[1, 1, 3]).is_err());
        assert!(BrauerDiagram::permutation(2, &[1, 2]).is_err());
    }

    #[test]
    fn monoid_sizes() {
        for (t, expected) in [(1, 3), (2, 15), (3, 105), (4, 945), (5, 10395)] {
            let set = enumerate_monoid(t).unwrap();
            assert_eq!(set.len() as u128, expected);
            assert_eq!(odd_double_factorial(t + 1), expected);
        }
    }

    #[test]
    fn brauer_relations_exhaustive() {
        for t in 1..=5 {
            let d = id(t);
            for i in 1..=t {
                assert_eq!(&r(t, i) * &r(t, i), d);
                assert_eq!(&r(t, i) * &e(t, i), e(t, i));
                assert_eq!(&e(t, i) * &r(t, i), e(t, i));
                assert_eq!(&e(t, i) * &e(t, i), e(t, i).with_delta(1));
                for j in 1..=t {
                    if i == j {
                        continue;
                    }
                    let adjacent = i.abs_diff(j) == 1;
                    let (ri, rj, ei, ej) = (r(t, i), r(t, j), e(t, i), e(t, j));
                    if adjacent {
                        assert_eq!(&(&ri * &rj) * &ri, &(&rj * &ri) * &rj);
                        assert_eq!(&(&rj * &ri) * &ej, &ei * &ej);
                        assert_eq!(&(&ri * &ej) * &ri, &(&rj * &ei) * &rj);
                    } else {
                        assert_eq!(&ri * &rj, &rj * &ri);
                        assert_eq!(&ei * &rj, &rj * &ei);
                        assert_eq!(&ei * &ej, &ej * &ei);
                    }
                }
            }
        }
    }

    fn arb_diagram(t: usize) -> impl Strategy<Value = BrauerDiagram> {
        let n = 2 * (t + 1);
        (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), -3i64..4).prop_map(move |(labels, d)| {
            let pairs: Vec<_> = labels.chunks(2).map(|c| (c[0], c[1])).collect();
            BrauerDiagram::from_pairs(t, &pairs, d).unwrap()
        })
    }

    fn arb_triple() -> impl Strategy<Value = (BrauerDiagram, BrauerDiagram, BrauerDiagram)> {
        (1usize..=6).prop_flat_map(|t| (arb_diagram(t), arb_diagram(t), arb_diagram(t)))
    }

    proptest! {
        #[test]
        fn associative((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn op_reverses_products((a, b, _c) in arb_triple()) {
            prop_assert_eq!((&a * &b).op_involution(), &b.op_involution() * &a.op_involution());
            prop_assert_eq!(a.op_involution().op_involution(), a);
        }

        #[test]
        fn loops_bounded((a, b, _c) in arb_triple()) {
            let (_, loops) = a.multiply_counting(&b).unwrap();
            prop_assert!(loops <= a.strands());
        }

        #[test]
        fn json_round_trip(d in (1usize..=6).prop_flat_map(arb_diagram)) {
            let text = d.to_json();
            prop_assert_eq!(BrauerDiagram::from_json(&text).unwrap(), d.clone());
            prop_assert_eq!(text, d.clone().to_json());
        }
    }
}
