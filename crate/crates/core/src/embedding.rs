//! The homomorphism φ from BrM(I₂ⁿ) into the Brauer algebra of type
//! A_{n−1}, the solver for the δ-exponent parameters, and the orbit counts
//! of admissible sets under φ(W(I₂ⁿ)).
//!
//! On generators, φ sends `r0`, `r1` to the products of `R_i` over even and
//! odd `0 < i < n` respectively, and `e0`, `e1` to the corresponding
//! products of `E_i`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::diagram::{closure, BrauerDiagram};
use crate::dihedral::{check_n, enumerate_group, DihedralElement};
use crate::error::{invalid, Error, Result};
use crate::presentation::{
    normal_forms, rank_formula, relation_schema, GeneratorWord, I2nMonomial, Letter, Relation,
    Slot, ThetaParameters,
};
use crate::roots::{act_diagram, AdmissibleSet};

/// Correction applied to the printed generator images.
pub const ERRATUM_E1: &str =
    "phi(e1) is the product of E_i over odd i, not of R_i: a product of R_i is invertible and cannot satisfy e1^2 = delta^kappa1 e1";

/// Images of the four generators at `t = n − 1`.
#[derive(Clone, Debug)]
pub struct PhiImage {
    pub n: usize,
    pub r0: BrauerDiagram,
    pub r1: BrauerDiagram,
    pub e0: BrauerDiagram,
    pub e1: BrauerDiagram,
}

impl PhiImage {
    pub fn get(&self, letter: Letter) -> &BrauerDiagram {
        match letter {
            Letter::R0 => &self.r0,
            Letter::R1 => &self.r1,
            Letter::E0 => &self.e0,
            Letter::E1 => &self.e1,
        }
    }

    pub fn t(&self) -> usize {
        self.n - 1
    }

    pub fn word(&self, w: &GeneratorWord) -> Result<BrauerDiagram> {
        if w.n != self.n {
            return Err(invalid(format!(
                "word over n = {} evaluated at n = {}",
                w.n, self.n
            )));
        }
        let mut acc = BrauerDiagram::identity(self.t())?;
        for &l in &w.letters {
            acc = acc.multiply(self.get(l))?;
        }
        Ok(acc.scaled(w.delta_exp))
    }

    pub fn element(&self, g: &DihedralElement) -> Result<BrauerDiagram> {
        self.word(&GeneratorWord::from_element(g))
    }
}

pub fn phi_generators(n: usize) -> Result<PhiImage> {
    check_n(n)?;
    let t = n - 1;
    let product =
        |parity: usize, gen: fn(usize, usize) -> Result<BrauerDiagram>| -> Result<BrauerDiagram> {
            let mut acc = BrauerDiagram::identity(t)?;
            for i in (1..n).filter(|i| i % 2 == parity) {
                acc = acc.multiply(&gen(t, i)?)?;
            }
            Ok(acc)
        };
    Ok(PhiImage {
        n,
        r0: product(0, BrauerDiagram::generator_r)?,
        r1: product(1, BrauerDiagram::generator_r)?,
        e0: product(0, BrauerDiagram::generator_e)?,
        e1: product(1, BrauerDiagram::generator_e)?,
    })
}

pub fn phi_word(n: usize, w: &GeneratorWord) -> Result<BrauerDiagram> {
    phi_generators(n)?.word(w)
}

pub fn phi_element(g: &DihedralElement) -> Result<BrauerDiagram> {
    phi_generators(g.n())?.element(g)
}

/// What φ does to one relation: the δ power `lhs / rhs` when the matchings
/// agree. The rhs is taken without its fixed δ shift.
#[derive(Clone, Debug)]
struct Observation {
    relation: Relation,
    exponent: Option<i64>,
}

fn observe(phi: &PhiImage, relations: Vec<Relation>) -> Result<Vec<Observation>> {
    relations
        .into_iter()
        .map(|relation| {
            let lhs = phi.word(&relation.lhs)?;
            let rhs = phi.word(&relation.rhs.clone().with_delta(0))?;
            let exponent = lhs.equals_up_to_delta(&rhs)?;
            Ok(Observation { relation, exponent })
        })
        .collect()
}

fn assign(obs: &[Observation], n: usize) -> Result<ThetaParameters> {
    let mut values: BTreeMap<Slot, i64> = BTreeMap::new();
    for o in obs {
        let Some(exp) = o.exponent else {
            return Err(Error::RelationFailure {
                source_tag: o.relation.source.to_string(),
            });
        };
        let Some(slot) = o.relation.slot else {
            if exp != o.relation.rhs.delta_exp {
                return Err(Error::RelationFailure {
                    source_tag: o.relation.source.to_string(),
                });
            }
            continue;
        };
        if exp < 0 {
            return Err(Error::ThetaInconsistency {
                parameter: slot.to_string(),
                values: vec![exp],
            });
        }
        match values.get(&slot) {
            Some(&prev) if prev != exp => {
                return Err(Error::ThetaInconsistency {
                    parameter: slot.to_string(),
                    values: vec![prev, exp],
                });
            }
            _ => {
                values.insert(slot, exp);
            }
        }
    }
    let kappa = |i| values.get(&Slot::Kappa(i)).copied().unwrap_or(0);
    if n % 2 == 1 && kappa(0) != kappa(1) {
        return Err(Error::ThetaInconsistency {
            parameter: "kappa_0 = kappa_1".into(),
            values: vec![kappa(0), kappa(1)],
        });
    }
    let family = |pick: fn(Slot) -> Option<usize>| -> BTreeMap<usize, u32> {
        values
            .iter()
            .filter_map(|(s, v)| pick(*s).map(|k| (k, *v as u32)))
            .collect()
    };
    Ok(ThetaParameters {
        n,
        kappa0: kappa(0) as u32,
        kappa1: kappa(1) as u32,
        eta: family(|s| if let Slot::Eta(k) = s { Some(k) } else { None }),
        xi: family(|s| if let Slot::Xi(k) = s { Some(k) } else { None }),
        theta: family(|s| {
            if let Slot::Theta(k) = s {
                Some(k)
            } else {
                None
            }
        }),
    })
}

/// Reads every parameter off the δ powers φ produces.
pub fn solve_theta(n: usize) -> Result<ThetaParameters> {
    let phi = phi_generators(n)?;
    assign(&observe(&phi, relation_schema(n)?)?, n)
}

/// Checks a list of relations under φ against known parameter values.
pub fn check_relations(
    n: usize,
    relations: Vec<Relation>,
    theta: Option<&ThetaParameters>,
) -> Result<Vec<RelationResult>> {
    let phi = phi_generators(n)?;
    Ok(observe(&phi, relations)?
        .into_iter()
        .map(|o| judge(o, theta))
        .collect())
}

fn judge(o: Observation, theta: Option<&ThetaParameters>) -> RelationResult {
    let expected = match o.relation.slot {
        None => Some(o.relation.rhs.delta_exp),
        Some(slot) => theta.and_then(|th| th.get(slot)).map(i64::from),
    };
    RelationResult {
        source: o.relation.source,
        holds: o.exponent.is_some() && o.exponent == expected,
        exponent: o.exponent,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub source: &'static str,
    pub holds: bool,
    pub exponent: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub theta: Option<ThetaParameters>,
    pub relations: Vec<RelationResult>,
    pub image_rank: usize,
    pub formula_rank: usize,
    pub injective: bool,
    pub errata: Vec<&'static str>,
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }

    /// Solver succeeded, every relation holds, and the rank agrees with the
    /// formula on an injective set of normal forms.
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.all_hold()
            && self.injective
            && self.image_rank == self.formula_rank
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}\n", self.n);
        match &self.theta {
            Some(th) => {
                out.push_str(&format!("kappa0 = {}, kappa1 = {}\n", th.kappa0, th.kappa1));
                for (name, map) in [("eta", &th.eta), ("xi", &th.xi), ("theta", &th.theta)] {
                    for (k, v) in map {
                        out.push_str(&format!("{name}_{k} = {v}\n"));
                    }
                }
            }
            None => out.push_str("theta: unsolved\n"),
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        for r in &self.relations {
            let exp = r.exponent.map_or("-".to_string(), |e| e.to_string());
            let verdict = if r.holds { "holds" } else { "FAILS" };
            out.push_str(&format!("({}) {verdict}, exponent {exp}\n", r.source));
        }
        out.push_str(&format!(
            "image rank {} (formula {}), injective on normal forms: {}\n",
            self.image_rank, self.formula_rank, self.injective
        ));
        for e in &self.errata {
            out.push_str(&format!("erratum: {e}\n"));
        }
        out
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("VerificationReport", 9)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("theta", &self.theta)?;
        st.serialize_field("relations", &self.relations)?;
        st.serialize_field("image_rank", &self.image_rank)?;
        st.serialize_field("formula_rank", &self.formula_rank)?;
        st.serialize_field("injective", &self.injective)?;
        st.serialize_field("errata", &self.errata)?;
        if let Some(e) = &self.error {
            st.serialize_field("error", e)?;
        }
        st.end()
    }
}

/// Solves Θ, re-checks every relation, and compares the image rank with
/// the rank formula. Solver errors are recorded in the report.
pub fn verify_presentation(n: usize) -> Result<VerificationReport> {
    let phi = phi_generators(n)?;
    let obs = observe(&phi, relation_schema(n)?)?;
    let (theta, error) = match assign(&obs, n) {
        Ok(th) => (Some(th), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let relations = obs.into_iter().map(|o| judge(o, theta.as_ref())).collect();
    let image_rank = image_rank(n)?;
    Ok(VerificationReport {
        n,
        theta,
        relations,
        image_rank,
        formula_rank: rank_formula(n),
        injective: check_normal_form_injectivity(n)?,
        errata: vec![ERRATUM_E1],
        error,
    })
}

/// Number of distinct matchings in the monoid generated by the four images.
pub fn image_rank(n: usize) -> Result<usize> {
    let phi = phi_generators(n)?;
    Ok(closure(
        phi.t(),
        &[
            phi.r0.clone(),
            phi.r1.clone(),
            phi.e0.clone(),
            phi.e1.clone(),
        ],
    )?
    .len())
}

/// Each normal form with its image under φ.
pub fn normal_form_images(n: usize) -> Result<Vec<(I2nMonomial, BrauerDiagram)>> {
    let phi = phi_generators(n)?;
    normal_forms(n)?
        .into_iter()
        .map(|m| {
            let d = phi.word(&m.to_word())?;
            Ok((m, d))
        })
        .collect()
}

/// Whether the normal forms map to pairwise distinct matchings, as many as
/// the image rank.
pub fn check_normal_form_injectivity(n: usize) -> Result<bool> {
    let images = normal_form_images(n)?;
    let distinct: HashSet<&[u16]> = images.iter().map(|(_, d)| d.matching()).collect();
    Ok(distinct.len() == images.len() && distinct.len() == image_rank(n)?)
}

/// The φ(W(I₂ⁿ))-orbit of `seed`, breadth first from the seed.
pub fn orbit(n: usize, seed: &AdmissibleSet) -> Result<Vec<AdmissibleSet>> {
    let phi = phi_generators(n)?;
    if seed.t() != phi.t() {
        return Err(invalid(format!("seed over A_{} used at n = {n}", seed.t())));
    }
    let mut seen: HashSet<AdmissibleSet> = HashSet::from([seed.clone()]);
    let mut out = vec![seed.clone()];
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(b) = queue.pop_front() {
        for g in [&phi.r0, &phi.r1] {
            let c = act_diagram(g, &b)?;
            if seen.insert(c.clone()) {
                out.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    Ok(out)
}

/// Group elements whose image fixes `seed`, found by trying all `2n`.
pub fn stabilizer(n: usize, seed: &AdmissibleSet) -> Result<Vec<DihedralElement>> {
    let phi = phi_generators(n)?;
    let mut out = Vec::new();
    for g in enumerate_group(n)? {
        if act_diagram(&phi.element(&g)?, seed)? == *seed {
            out.push(g);
        }
    }
    Ok(out)
}

/// The seeds `Y0 = {α_2, α_4, …}`, and for even `n` also
/// `Y1 = {α_1, α_3, …}` and `Y2 = φ(e0)·Y1`.
pub fn orbit_seeds(n: usize) -> Result<Vec<(&'static str, AdmissibleSet)>> {
    let phi = phi_generators(n)?;
    let t = phi.t();
    let y0 = AdmissibleSet::simple(t, (2..=t).step_by(2))?;
    if n % 2 == 1 {
        return Ok(vec![("Y0", y0)]);
    }
    let y1 = AdmissibleSet::simple(t, (1..=t).step_by(2))?;
    let y2 = act_diagram(&phi.e0, &y1)?;
    Ok(vec![("Y0", y0), ("Y1", y1), ("Y2", y2)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: usize,
    pub orbit_sizes: BTreeMap<String, usize>,
    #[serde(rename = "disjoint_Y1_Y2", skip_serializing_if = "Option::is_none")]
    pub disjoint_y1_y2: Option<bool>,
}

pub fn orbit_report(n: usize) -> Result<OrbitReport> {
    let mut orbits: HashMap<&str, Vec<AdmissibleSet>> = HashMap::new();
    for (name, seed) in orbit_seeds(n)? {
        orbits.insert(name, orbit(n, &seed)?);
    }
    let disjoint_y1_y2 = match (orbits.get("Y1"), orbits.get("Y2")) {
        (Some(a), Some(b)) => Some(a.iter().all(|x| !b.contains(x))),
        _ => None,
    };
    Ok(OrbitReport {
        n,
        orbit_sizes: orbits
            .iter()
            .map(|(k, v)| (k.to_string(), v.len()))
            .collect(),
        disjoint_y1_y2,
    })
}
