//! Positive roots of type A_t, admissible sets, and the action of the
//! Brauer monoid on admissible sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::BrauerDiagram;
use crate::error::{invalid, Error, Result};

/// The positive root `ε_i − ε_j`, `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Root {
    i: usize,
    j: usize,
}

impl TryFrom<[usize; 2]> for Root {
    type Error = Error;

    fn try_from(v: [usize; 2]) -> Result<Self> {
        Root::new(v[0], v[1])
    }
}

impl From<Root> for [usize; 2] {
    fn from(r: Root) -> Self {
        [r.i, r.j]
    }
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i < 1 || i >= j {
            return Err(invalid(format!("root needs 1 <= i < j, got ({i}, {j})")));
        }
        Ok(Root { i, j })
    }

    /// `±(ε_a − ε_b)` made positive.
    fn from_indices(a: usize, b: usize) -> Self {
        debug_assert!(a != b);
        Root {
            i: a.min(b),
            j: a.max(b),
        }
    }

    /// `α_i = ε_i − ε_{i+1}`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1, "simple roots are indexed from 1");
        Root { i, j: i + 1 }
    }

    /// `α = α_1 + … + α_t = ε_1 − ε_{t+1}`.
    pub fn highest(t: usize) -> Self {
        Root { i: 1, j: t + 1 }
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    pub fn meets(&self, other: &Root) -> bool {
        self.i == other.i || self.i == other.j || self.j == other.i || self.j == other.j
    }

    pub fn is_orthogonal(&self, other: &Root) -> bool {
        !self.meets(other)
    }

    /// Applies a permutation of the indices and renormalizes the sign.
    fn map(&self, f: impl Fn(usize) -> usize) -> Root {
        Root::from_indices(f(self.i), f(self.j))
    }

    /// Image under the reflection in `self`, which swaps indices `i` and `j`.
    fn reflect(&self, r: &Root) -> Root {
        let (a, b) = (self.i, self.j);
        r.map(|x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.i, self.j)
    }
}

/// A set of mutually orthogonal positive roots of A_t.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "AdmissibleJson", into = "AdmissibleJson")]
pub struct AdmissibleSet {
    t: usize,
    roots: BTreeSet<Root>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AdmissibleJson {
    t: usize,
    roots: Vec<Root>,
}

impl From<AdmissibleSet> for AdmissibleJson {
    fn from(b: AdmissibleSet) -> Self {
        AdmissibleJson {
            t: b.t,
            roots: b.roots.into_iter().collect(),
        }
    }
}

impl TryFrom<AdmissibleJson> for AdmissibleSet {
    type Error = Error;

    fn try_from(j: AdmissibleJson) -> Result<Self> {
        AdmissibleSet::new(j.t, j.roots)
    }
}

impl AdmissibleSet {
    pub fn new(t: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        if t < 1 {
            return Err(invalid("t must be at least 1"));
        }
        let mut set = AdmissibleSet::empty(t);
        let mut used = vec![false; t + 2];
        for r in roots {
            if r.j > t + 1 {
                return Err(invalid(format!("root {r} outside A_{t}")));
            }
            if used[r.i] || used[r.j] {
                return Err(invalid(format!("root {r} is not orthogonal to the others")));
            }
            used[r.i] = true;
            used[r.j] = true;
            set.roots.insert(r);
        }
        Ok(set)
    }

    pub fn empty(t: usize) -> Self {
        AdmissibleSet {
            t,
            roots: BTreeSet::new(),
        }
    }

    /// `{α_i : i ∈ indices}`.
    pub fn simple(t: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let roots: Vec<Root> = indices
            .into_iter()
            .map(|i| {
                if i < 1 || i > t {
                    Err(invalid(format!("simple root α_{i} outside A_{t}")))
                } else {
                    Ok(Root::simple(i))
                }
            })
            .collect::<Result<_>>()?;
        Self::new(t, roots)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn roots(&self) -> impl DoubleEndedIterator<Item = &Root> + '_ {
        self.roots.iter()
    }

    pub fn max_height(&self) -> Option<usize> {
        self.roots.iter().map(Root::height).max()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("admissible set serialization is infallible")
    }

    fn map(&self, f: impl Fn(&Root) -> Root) -> AdmissibleSet {
        AdmissibleSet {
            t: self.t,
            roots: self.roots.iter().map(f).collect(),
        }
    }

    /// Every admissible set of A_t (all partial matchings of `t + 1` points).
    pub fn all(t: usize) -> Vec<AdmissibleSet> {
        fn rec(
            next: usize,
            top: usize,
            used: &mut Vec<bool>,
            cur: &mut Vec<Root>,
            out: &mut Vec<Vec<Root>>,
        ) {
            if next > top {
                out.push(cur.clone());
                return;
            }
            if used[next] {
                return rec(next + 1, top, used, cur, out);
            }
            rec(next + 1, top, used, cur, out);
            used[next] = true;
            for j in next + 1..=top {
                if !used[j] {
                    used[j] = true;
                    cur.push(Root { i: next, j });
                    rec(next + 1, top, used, cur, out);
                    cur.pop();
                    used[j] = false;
                }
            }
            used[next] = false;
        }
        let mut out = Vec::new();
        rec(1, t + 1, &mut vec![false; t + 2], &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|roots| AdmissibleSet {
                t,
                roots: roots.into_iter().collect(),
            })
            .collect()
    }
}

fn check_node(t: usize, i: usize) -> Result<()> {
    if i < 1 || i > t {
        return Err(invalid(format!("node index {i} outside 1..={t}")));
    }
    Ok(())
}

/// Action of `R_i`: the simple reflection `s_i`, negatives negated back.
pub fn act_r(i: usize, b: &AdmissibleSet) -> Result<AdmissibleSet> {
    check_node(b.t, i)?;
    Ok(b.map(|r| Root::simple(i).reflect(r)))
}

/// Action of `E_i`.
///
/// When `α_i` meets `B` without belonging to it, the result is
/// `R_β R_i B` where `β` is the root of `B` through index `i`, or through
/// `i + 1` if no root of `B` uses `i`.
pub fn act_e(i: usize, b: &AdmissibleSet) -> Result<AdmissibleSet> {
    check_node(b.t, i)?;
    let alpha = Root::simple(i);
    if b.contains(&alpha) {
        return Ok(b.clone());
    }
    let through = |x: usize| b.roots().find(|r| r.i == x || r.j == x).copied();
    let Some(beta) = through(i).or_else(|| through(i + 1)) else {
        let mut out = b.clone();
        out.roots.insert(alpha);
        return Ok(out);
    };
    let ri_b = act_r(i, b)?;
    Ok(ri_b.map(|r| beta.reflect(r)))
}

/// Horizontal strands of the top row of `d`.
pub fn top_of(d: &BrauerDiagram) -> AdmissibleSet {
    AdmissibleSet {
        t: d.t(),
        roots: d
            .top_cups()
            .into_iter()
            .map(|(i, j)| Root { i, j })
            .collect(),
    }
}

/// A diagram whose top is `b` and which has no other top cups. Leftover top
/// dots go to the leftmost bottom dots in order; the remaining bottom dots
/// are paired off left to right.
pub fn complete(b: &AdmissibleSet) -> BrauerDiagram {
    let n = b.t + 1;
    let mut pairs: Vec<(usize, usize)> = b.roots().map(|r| (r.i, r.j)).collect();
    let mut used = vec![false; n + 1];
    for r in b.roots() {
        used[r.i] = true;
        used[r.j] = true;
    }
    let free: Vec<usize> = (1..=n).filter(|&x| !used[x]).collect();
    for (k, &top) in free.iter().enumerate() {
        pairs.push((top, n + k + 1));
    }
    let rest: Vec<usize> = (free.len() + 1..=n).collect();
    for c in rest.chunks(2) {
        pairs.push((n + c[0], n + c[1]));
    }
    BrauerDiagram::from_pairs(b.t, &pairs, 0).expect("completion is a perfect matching")
}

/// `a·B`, read off as the top of the product `a · complete(B)`.
pub fn act_diagram(a: &BrauerDiagram, b: &AdmissibleSet) -> Result<AdmissibleSet> {
    Ok(top_of(&a.multiply(&complete(b))?))
}

fn check_root(t: usize, r: &Root) -> Result<()> {
    if t < 1 || r.j > t + 1 {
        return Err(invalid(format!("root {r} outside A_{t}")));
    }
    Ok(())
}

/// `E_β = w E_1 w⁻¹` for a permutation diagram `w` carrying `α_1` to `β`.
///
/// The witness sends top dot `β.i` to bottom 1, `β.j` to bottom 2 and the
/// remaining dots to bottoms `3..` in increasing order.
pub fn e_beta(t: usize, r: &Root) -> Result<BrauerDiagram> {
    check_root(t, r)?;
    let n = t + 1;
    let mut images = vec![0; n];
    images[r.i - 1] = 1;
    images[r.j - 1] = 2;
    for (next, slot) in (3..).zip(images.iter_mut().filter(|x| **x == 0)) {
        *slot = next;
    }
    let w = BrauerDiagram::permutation(t, &images)?;
    let e1 = BrauerDiagram::generator_e(t, 1)?;
    Ok(&(&w * &e1) * &w.op_involution())
}

/// `Ê_B = δ^{-|B|} ∏_{β ∈ B} E_β`.
pub fn e_hat(b: &AdmissibleSet) -> Result<BrauerDiagram> {
    let mut acc = BrauerDiagram::identity(b.t)?;
    for r in b.roots() {
        acc = &acc * &e_beta(b.t, r)?;
    }
    Ok(acc.scaled(-(b.len() as i64)))
}

/// Counts of 2-element orbits and fixed roots of `B` under the index
/// reversal `i ↦ t + 2 − i`. Fails unless `B` is stable under it.
pub fn symmetry_profile(b: &AdmissibleSet) -> Result<(usize, usize)> {
    let top = b.t + 2;
    let sigma = |r: &Root| r.map(|x| top - x);
    let mut pairs = 0;
    let mut fixed = 0;
    for r in b.roots() {
        let s = sigma(r);
        if !b.contains(&s) {
            return Err(Error::NotSymmetric);
        }
        if s == *r {
            fixed += 1;
        } else if r < &s {
            pairs += 1;
        }
    }
    Ok((pairs, fixed))
}
