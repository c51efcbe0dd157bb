//! Defining relations of the Brauer algebra of type I₂ⁿ, its δ-exponent
//! parameters, and the normal-form families of its monomials.
//!
//! Relations carry a `source` tag naming the relation family they
//! instantiate ("0.1.x" for even `n`, "0.2.x" for odd `n`).

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::dihedral::{
    check_n, coset_representatives, enumerate_group, standard_subgroups, DihedralElement, Gen,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    R0,
    R1,
    E0,
    E1,
}

impl From<Gen> for Letter {
    fn from(g: Gen) -> Self {
        match g {
            Gen::R0 => Letter::R0,
            Gen::R1 => Letter::R1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::R0 => "r0",
            Letter::R1 => "r1",
            Letter::E0 => "e0",
            Letter::E1 => "e1",
        })
    }
}

/// A monomial `δ^delta_exp · letters` of BrM(I₂ⁿ), as a formal word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorWord {
    pub n: usize,
    pub letters: Vec<Letter>,
    pub delta_exp: i64,
}

impl GeneratorWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Self {
        GeneratorWord {
            n,
            letters,
            delta_exp: 0,
        }
    }

    pub fn with_delta(mut self, delta_exp: i64) -> Self {
        self.delta_exp = delta_exp;
        self
    }

    /// Parses `"1"` or space-separated letters from `r0 r1 e0 e1`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_n(n)?;
        let text = text.trim();
        if text == "1" {
            return Ok(GeneratorWord::new(n, Vec::new()));
        }
        let letters = text
            .split_whitespace()
            .enumerate()
            .map(|(pos, tok)| match tok {
                "r0" => Ok(Letter::R0),
                "r1" => Ok(Letter::R1),
                "e0" => Ok(Letter::E0),
                "e1" => Ok(Letter::E1),
                _ => Err(Error::Parse {
                    position: pos,
                    message: format!("unknown letter {tok:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorWord::new(n, letters))
    }

    pub fn from_element(g: &DihedralElement) -> Self {
        GeneratorWord::new(g.n(), g.letters().into_iter().map(Letter::from).collect())
    }

    /// The op anti-involution: reversed letters, same δ power.
    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        GeneratorWord {
            n: self.n,
            letters,
            delta_exp: self.delta_exp,
        }
    }

    pub fn then(mut self, other: &GeneratorWord) -> Self {
        self.letters.extend_from_slice(&other.letters);
        self.delta_exp += other.delta_exp;
        self
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A δ-exponent left open by the presentation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Slot {
    Kappa(usize),
    Eta(usize),
    Xi(usize),
    Theta(usize),
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Kappa(i) => write!(f, "kappa_{i}"),
            Slot::Eta(k) => write!(f, "eta_{k}"),
            Slot::Xi(k) => write!(f, "xi_{k}"),
            Slot::Theta(k) => write!(f, "theta_{k}"),
        }
    }
}

/// `lhs = δ^slot · rhs`, or `lhs = rhs` (with `rhs.delta_exp` fixed) when
/// there is no slot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub source: &'static str,
    pub lhs: GeneratorWord,
    pub rhs: GeneratorWord,
    pub slot: Option<Slot>,
}

impl Relation {
    /// Both sides reversed.
    pub fn op(&self) -> Relation {
        Relation {
            source: self.source,
            lhs: self.lhs.reversed(),
            rhs: self.rhs.reversed(),
            slot: self.slot,
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fixed_delta = self.rhs.delta_exp != 0;
        let mut st = s.serialize_struct("Relation", if fixed_delta { 5 } else { 4 })?;
        st.serialize_field("source", self.source)?;
        st.serialize_field("lhs", &self.lhs.to_string())?;
        st.serialize_field("rhs", &self.rhs.to_string())?;
        st.serialize_field("slot", &self.slot.map(|s| s.to_string()))?;
        if fixed_delta {
            st.serialize_field("delta", &self.rhs.delta_exp)?;
        }
        st.end()
    }
}

/// Solved values of the δ-exponent parameters.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ThetaParameters {
    #[serde(skip)]
    pub n: usize,
    pub kappa0: u32,
    pub kappa1: u32,
    pub eta: BTreeMap<usize, u32>,
    pub xi: BTreeMap<usize, u32>,
    pub theta: BTreeMap<usize, u32>,
}

impl ThetaParameters {
    pub fn get(&self, slot: Slot) -> Option<u32> {
        match slot {
            Slot::Kappa(0) => Some(self.kappa0),
            Slot::Kappa(1) => Some(self.kappa1),
            Slot::Kappa(_) => None,
            Slot::Eta(k) => self.eta.get(&k).copied(),
            Slot::Xi(k) => self.xi.get(&k).copied(),
            Slot::Theta(k) => self.theta.get(&k).copied(),
        }
    }
}

fn alt(start: Letter, len: usize) -> Vec<Letter> {
    let other = match start {
        Letter::R0 => Letter::R1,
        Letter::R1 => Letter::R0,
        _ => unreachable!("alternating words use r0 and r1"),
    };
    (0..len)
        .map(|p| if p % 2 == 0 { start } else { other })
        .collect()
}

fn cat(parts: &[&[Letter]]) -> Vec<Letter> {
    parts.concat()
}

/// Every parameter the presentation declares. For odd `n = 2m − 1` this
/// includes `xi_m`, which no relation uses.
pub fn declared_slots(n: usize) -> Result<Vec<Slot>> {
    check_n(n)?;
    let mut out = vec![Slot::Kappa(0), Slot::Kappa(1)];
    if n.is_multiple_of(2) {
        let half = n / 2 / 2;
        out.extend((1..=half).map(Slot::Eta));
        out.extend((1..=half).map(Slot::Xi));
        out.extend((1..=half).map(Slot::Theta));
    } else {
        let m = n.div_ceil(2);
        out.extend((1..=m).map(Slot::Xi));
    }
    Ok(out)
}

/// The ξ_k relation selected by the parities of `l/m` and `l/k`,
/// `l = lcm(k, m)`.
pub fn xi_relation_tag(m: usize, k: usize) -> &'static str {
    let l = k.lcm(&m);
    match ((l / m).is_odd(), (l / k).is_odd()) {
        (true, true) => "0.1.13",
        (false, _) => "0.1.14",
        (true, false) => "0.1.15",
    }
}

/// The ξ_k relation with the right-hand side named by `tag`, whether or
/// not the parity rule selects it.
pub fn xi_relation(n: usize, k: usize, tag: &'static str) -> Result<Relation> {
    check_n(n)?;
    let m = n / 2;
    use Letter::*;
    let lhs = cat(&[&[E0], &alt(R1, 2 * k - 1), &[E0]]);
    let rhs = match tag {
        "0.1.13" => cat(&[&alt(R1, 2 * m - 1), &[E0]]),
        "0.1.14" => vec![E0],
        "0.1.15" => vec![E0, E1, E0],
        _ => return Err(crate::error::invalid(format!("unknown ξ relation {tag}"))),
    };
    Ok(Relation {
        source: tag,
        lhs: GeneratorWord::new(n, lhs),
        rhs: GeneratorWord::new(n, rhs),
        slot: Some(Slot::Xi(k)),
    })
}

/// All instantiated defining relations for type I₂ⁿ.
pub fn relation_schema(n: usize) -> Result<Vec<Relation>> {
    check_n(n)?;
    use Letter::*;
    let word = |letters: Vec<Letter>| GeneratorWord::new(n, letters);
    let rel = |source, lhs: Vec<Letter>, rhs: Vec<Letter>, slot| Relation {
        source,
        lhs: word(lhs),
        rhs: word(rhs),
        slot,
    };
    let (r, e) = ([R0, R1], [E0, E1]);
    let even = n.is_multiple_of(2);
    let tag = |even_tag, odd_tag| if even { even_tag } else { odd_tag };

    let mut out = Vec::new();
    for ri in r {
        out.push(rel(tag("0.1.3", "0.2.3"), vec![ri, ri], vec![], None));
    }
    for (ri, ei) in r.into_iter().zip(e) {
        out.push(rel(tag("0.1.4", "0.2.4"), vec![ri, ei], vec![ei], None));
        out.push(rel(tag("0.1.4", "0.2.4"), vec![ei, ri], vec![ei], None));
    }
    for (i, ei) in e.into_iter().enumerate() {
        out.push(rel(
            tag("0.1.5", "0.2.5"),
            vec![ei, ei],
            vec![ei],
            Some(Slot::Kappa(i)),
        ));
    }

    if even {
        let m = n / 2;
        let half = m / 2;
        out.push(Relation {
            source: "0.1.6",
            lhs: word(vec![E1, E0, E1]),
            rhs: word(vec![E1]).with_delta(1),
            slot: None,
        });
        let long10 = alt(R1, 2 * m - 1);
        let long01 = alt(R0, 2 * m - 1);
        out.push(rel(
            "0.1.7",
            cat(&[&[E0], &long10]),
            cat(&[&long10, &[E0]]),
            None,
        ));
        out.push(rel("0.1.8", cat(&[&[E1], &long01]), vec![E1], None));
        out.push(rel("0.1.9", cat(&[&long01, &[E1]]), vec![E1], None));
        for k in 1..=half {
            out.push(rel(
                "0.1.10",
                cat(&[&[E0], &alt(R1, 2 * k), &[E1]]),
                vec![E0, E1],
                Some(Slot::Theta(k)),
            ));
            out.push(rel(
                "0.1.11",
                cat(&[&[E1], &alt(R0, 2 * k), &[E0]]),
                vec![E1, E0],
                Some(Slot::Theta(k)),
            ));
            out.push(rel(
                "0.1.12",
                cat(&[&[E1], &alt(R0, 2 * k - 1), &[E1]]),
                vec![E1],
                Some(Slot::Eta(k)),
            ));
        }
        out.push(rel("0.1.20", alt(R1, 2 * m), alt(R0, 2 * m), None));
        for k in 1..=half {
            out.push(xi_relation(n, k, xi_relation_tag(m, k))?);
        }
    } else {
        let m = n.div_ceil(2);
        let w = alt(R0, 2 * m - 2);
        out.push(rel("0.2.6", cat(&[&w, &[E0]]), cat(&[&[E1], &w]), None));
        for k in 1..m {
            out.push(rel(
                "0.2.7",
                cat(&[&[E0], &alt(R1, 2 * k - 1), &[E0]]),
                vec![E0],
                Some(Slot::Xi(k)),
            ));
        }
        out.push(rel("0.2.8", alt(R1, 2 * m - 1), alt(R0, 2 * m - 1), None));
    }
    Ok(out)
}

/// The shape of a normal-form monomial. `left · core · middle · right`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    /// A group element.
    Group,
    /// `u e0 w` (odd `n`).
    E0,
    /// `u e_i v w` with `v ∈ K_i` (even `n`).
    Ei(usize),
    /// `u e0 e1 w`
    E0E1,
    /// `u e1 e0 w`
    E1E0,
    /// `u e0 e1 e0 w`
    E0E1E0,
}

impl Family {
    fn core(&self) -> &'static [Letter] {
        use Letter::*;
        match self {
            Family::Group => &[],
            Family::E0 | Family::Ei(0) => &[E0],
            Family::Ei(_) => &[E1],
            Family::E0E1 => &[E0, E1],
            Family::E1E0 => &[E1, E0],
            Family::E0E1E0 => &[E0, E1, E0],
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Group => "group".into(),
            Family::E0 => "u e0 w".into(),
            Family::Ei(i) => format!("u e{i} v w"),
            Family::E0E1 => "u e0 e1 w".into(),
            Family::E1E0 => "u e1 e0 w".into(),
            Family::E0E1E0 => "u e0 e1 e0 w".into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct I2nMonomial {
    pub n: usize,
    pub delta_exp: i64,
    pub family: Family,
    /// `u`, or the group element itself for [`Family::Group`].
    pub left: DihedralElement,
    /// `v ∈ K_i`; identity outside [`Family::Ei`].
    pub middle: DihedralElement,
    /// `w`, taken from the op-image of a coset system.
    pub right: DihedralElement,
}

impl I2nMonomial {
    pub fn to_word(&self) -> GeneratorWord {
        let mut w = GeneratorWord::from_element(&self.left);
        w.letters.extend_from_slice(self.family.core());
        w = w.then(&GeneratorWord::from_element(&self.middle));
        w = w.then(&GeneratorWord::from_element(&self.right));
        w.with_delta(self.delta_exp)
    }
}

impl fmt::Display for I2nMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// Rank of the algebra: `2n + n²` for odd `n`, `2n + 3n²/2` for even `n`.
pub fn rank_formula(n: usize) -> usize {
    if n % 2 == 1 {
        2 * n + n * n
    } else {
        2 * n + 3 * n * n / 2
    }
}

/// Normal-form monomials, one per basis element of the algebra.
pub fn normal_forms(n: usize) -> Result<Vec<I2nMonomial>> {
    check_n(n)?;
    let id = DihedralElement::identity(n)?;
    let mono = |family, left, middle, right| I2nMonomial {
        n,
        delta_exp: 0,
        family,
        left,
        middle,
        right,
    };

    let mut out: Vec<I2nMonomial> = enumerate_group(n)?
        .into_iter()
        .map(|g| mono(Family::Group, g, id, id))
        .collect();

    let cosets = |i: usize| -> Result<_> {
        let (big, small) = standard_subgroups(n, i)?;
        Ok((coset_representatives(n, &big)?, small))
    };

    if n % 2 == 1 {
        let (d0, _) = cosets(0)?;
        for u in &d0.representatives {
            for w in d0.op_representatives() {
                out.push(mono(Family::E0, *u, id, w));
            }
        }
    } else {
        let (d0, k0) = cosets(0)?;
        let (d1, k1) = cosets(1)?;
        for (i, d, k) in [(0, &d0, &k0), (1, &d1, &k1)] {
            for u in &d.representatives {
                for v in k {
                    for w in d.op_representatives() {
                        out.push(mono(Family::Ei(i), *u, *v, w));
                    }
                }
            }
        }
        for (family, du, dw) in [
            (Family::E0E1, &d0, &d1),
            (Family::E1E0, &d1, &d0),
            (Family::E0E1E0, &d0, &d0),
        ] {
            for u in &du.representatives {
                for w in dw.op_representatives() {
                    out.push(mono(family, *u, id, w));
                }
            }
        }
    }
    debug_assert_eq!(out.iter().collect::<HashSet<_>>().len(), out.len());
    Ok(out)
}
