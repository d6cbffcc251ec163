//! Right complements, right reversing and the cube check.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{Congruence, Letters};
use crate::error::{Error, Result};
use crate::presentation::{Atom, Presentation, Word};

/// Default reversing step bound per call.
pub const DEFAULT_STEP_BOUND: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairDiagnostic {
    pub x: String,
    pub y: String,
    pub detail: String,
}

/// `f(x, y)` for every ordered pair of distinct atoms, read off the
/// relations: `x f(x,y) = y f(y,x)`.
#[derive(Debug, Clone)]
pub struct ComplementTable {
    congruence: Congruence,
    entries: HashMap<(u16, u16), Letters>,
    missing: Vec<PairDiagnostic>,
    ambiguous: Vec<PairDiagnostic>,
    derived: Vec<PairDiagnostic>,
    unresolved: Vec<PairDiagnostic>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl ComplementTable {
    /// Builds the table. Relation sides are grouped into the components of
    /// the relation graph, so the closing equation of a bracket family also
    /// yields a pair. When several candidates exist the shortest wins, and
    /// candidates of the same length must be congruent.
    pub fn new(p: &Presentation) -> Result<Self> {
        let congruence = Congruence::new(p);
        let mut sides: Vec<Letters> = Vec::new();
        let mut side_index: HashMap<Letters, usize> = HashMap::new();
        let mut id = |w: Letters, sides: &mut Vec<Letters>| -> usize {
            *side_index.entry(w.clone()).or_insert_with(|| {
                sides.push(w);
                sides.len() - 1
            })
        };
        let mut edges = Vec::new();
        for r in p.relations() {
            let a = id(congruence.encode(r.lhs())?, &mut sides);
            let b = id(congruence.encode(r.rhs())?, &mut sides);
            edges.push((a, b));
        }
        let mut parent: Vec<usize> = (0..sides.len()).collect();
        for (a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut components: HashMap<usize, Vec<usize>> = HashMap::new();
        for k in 0..sides.len() {
            components.entry(find(&mut parent, k)).or_default().push(k);
        }

        let mut candidates: HashMap<(u16, u16), Vec<(Letters, Letters)>> = HashMap::new();
        for members in components.values() {
            for &a in members {
                for &b in members {
                    let (u, v) = (&sides[a], &sides[b]);
                    if u[0] == v[0] {
                        continue;
                    }
                    candidates
                        .entry((u[0], v[0]))
                        .or_default()
                        .push((u[1..].to_vec(), v[1..].to_vec()));
                }
            }
        }

        let atoms = p.atoms();
        let mut entries = HashMap::new();
        let mut missing = Vec::new();
        let mut ambiguous = Vec::new();
        for x in 0..atoms.len() as u16 {
            for y in 0..atoms.len() as u16 {
                if x == y {
                    continue;
                }
                let name = |k: u16| atoms[k as usize].to_string();
                let Some(list) = candidates.get_mut(&(x, y)) else {
                    if x < y {
                        missing.push(PairDiagnostic {
                            x: name(x),
                            y: name(y),
                            detail: "no relation starts with this pair".into(),
                        });
                    }
                    continue;
                };
                let shortest = list.iter().map(|c| c.0.len()).min().unwrap_or(0);
                list.retain(|c| c.0.len() == shortest);
                list.sort();
                list.dedup();
                let first = list[0].clone();
                if x < y {
                    let mut lead = vec![x];
                    lead.extend_from_slice(&first.0);
                    for other in &list[1..] {
                        let mut w = vec![x];
                        w.extend_from_slice(&other.0);
                        if !congruence.equivalent_letters(&lead, &w)? {
                            ambiguous.push(PairDiagnostic {
                                x: name(x),
                                y: name(y),
                                detail: format!(
                                    "`{}` and `{}` are both candidate lcms",
                                    congruence.decode(&lead),
                                    congruence.decode(&w)
                                ),
                            });
                        }
                    }
                }
                entries.insert((x, y), first.0);
            }
        }
        Ok(ComplementTable {
            congruence,
            entries,
            unresolved: missing.clone(),
            missing,
            ambiguous,
            derived: Vec::new(),
        })
    }

    pub fn congruence(&self) -> &Congruence {
        &self.congruence
    }

    /// Unordered pairs without any candidate relation.
    pub fn missing(&self) -> &[PairDiagnostic] {
        &self.missing
    }

    /// Pairs whose shortest candidates disagree.
    pub fn ambiguous(&self) -> &[PairDiagnostic] {
        &self.ambiguous
    }

    /// Pairs whose complements were found by [`fill_derived`](Self::fill_derived).
    pub fn derived(&self) -> &[PairDiagnostic] {
        &self.derived
    }

    /// Missing pairs that are still without a complement.
    pub fn unresolved(&self) -> &[PairDiagnostic] {
        &self.unresolved
    }

    /// Whether every ordered pair of distinct atoms has a complement.
    pub fn is_total(&self) -> bool {
        self.unresolved.is_empty()
    }

    /// Fills missing pairs with complements read off the shortest common
    /// right multiple found in the congruence, searching words up to
    /// `max_len`. Each filled pair is a derived relation of the
    /// presentation; it is recorded in [`derived`](Self::derived) and leaves
    /// [`missing`](Self::missing) untouched. Pairs whose shortest common
    /// multiples are not unique are added to the ambiguous list.
    pub fn fill_derived(&mut self, max_len: usize) -> Result<()> {
        let atoms = self.congruence.atoms.clone();
        let code = |a: &str| atoms.iter().position(|b| b.to_string() == a).unwrap() as u16;
        let pairs: Vec<(u16, u16)> = self.missing.iter().map(|d| (code(&d.x), code(&d.y))).collect();
        type Multiples = Result<Option<Vec<(Letters, Letters)>>>;
        let found: Vec<Multiples> = pairs
            .par_iter()
            .map(|&(x, y)| self.common_multiples(x, y, max_len))
            .collect();
        let mut still_missing = Vec::new();
        for ((x, y), result) in pairs.into_iter().zip(found) {
            let diagnostic = |detail: String| PairDiagnostic {
                x: atoms[x as usize].to_string(),
                y: atoms[y as usize].to_string(),
                detail,
            };
            let Some(multiples) = result? else {
                still_missing.push(diagnostic(format!("no common multiple of length <= {max_len}")));
                continue;
            };
            let (u, v) = multiples[0].clone();
            if multiples.len() > 1 {
                self.ambiguous.push(diagnostic(format!(
                    "{} distinct shortest common multiples",
                    multiples.len()
                )));
            }
            self.derived.push(diagnostic(format!(
                "{} = {}",
                self.congruence.decode(&u),
                self.congruence.decode(&v)
            )));
            self.entries.insert((x, y), u[1..].to_vec());
            self.entries.insert((y, x), v[1..].to_vec());
        }
        self.unresolved = still_missing;
        Ok(())
    }

    /// Classes of the shortest words that have both a member starting with
    /// `x` and one starting with `y`, as (least x-word, least y-word).
    fn common_multiples(&self, x: u16, y: u16, max_len: usize) -> Result<Option<Vec<(Letters, Letters)>>> {
        let k = self.congruence.atoms.len() as u16;
        for len in 2..=max_len {
            let mut seen = std::collections::HashSet::new();
            let mut hits = Vec::new();
            let mut tail = vec![0u16; len - 1];
            loop {
                let mut w = vec![x];
                w.extend_from_slice(&tail);
                if !seen.contains(&w) {
                    let class = self.congruence.class_letters(w)?;
                    let least = |lead: u16| class.iter().filter(|m| m[0] == lead).min().cloned();
                    if let (Some(u), Some(v)) = (least(x), least(y)) {
                        hits.push((u, v));
                    }
                    seen.extend(class);
                }
                // Next tail in lexicographic order.
                let mut p = tail.len();
                loop {
                    if p == 0 {
                        break;
                    }
                    p -= 1;
                    tail[p] += 1;
                    if tail[p] < k {
                        break;
                    }
                    tail[p] = 0;
                    if p == 0 {
                        p = usize::MAX;
                        break;
                    }
                }
                if p == usize::MAX || tail.is_empty() {
                    break;
                }
            }
            if !hits.is_empty() {
                hits.sort();
                return Ok(Some(hits));
            }
        }
        Ok(None)
    }

    /// `f(x, y)`; the empty word when `x = y`, `None` for a missing pair.
    pub fn get(&self, x: &Atom, y: &Atom) -> Option<Word> {
        let code = |a: &Atom| self.congruence.index.get(a).copied();
        let (cx, cy) = (code(x)?, code(y)?);
        self.get_letters(cx, cy).map(|w| self.congruence.decode(&w))
    }

    fn get_letters(&self, x: u16, y: u16) -> Option<Letters> {
        if x == y {
            Some(Vec::new())
        } else {
            self.entries.get(&(x, y)).cloned()
        }
    }

    /// Pairs `(x, y)` with `x f(x,y)` not congruent to `y f(y,x)`.
    pub fn unsound_pairs(&self) -> Result<Vec<PairDiagnostic>> {
        let mut keys: Vec<&(u16, u16)> = self.entries.keys().filter(|(x, y)| x < y).collect();
        keys.sort();
        let mut out = Vec::new();
        for &(x, y) in keys {
            let (Some(fx), Some(fy)) = (self.get_letters(x, y), self.get_letters(y, x)) else {
                continue;
            };
            let mut u = vec![x];
            u.extend(fx);
            let mut v = vec![y];
            v.extend(fy);
            if !self.congruence.equivalent_letters(&u, &v)? {
                out.push(PairDiagnostic {
                    x: self.congruence.atoms[x as usize].to_string(),
                    y: self.congruence.atoms[y as usize].to_string(),
                    detail: format!(
                        "{} != {}",
                        self.congruence.decode(&u),
                        self.congruence.decode(&v)
                    ),
                });
            }
        }
        Ok(out)
    }
}

/// Result of reversing `u^-1 v` to `v' u'^-1`, so that `u v' = v u'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reversal {
    pub u_prime: Word,
    pub v_prime: Word,
    pub steps: usize,
}

fn reverse_letters(
    table: &ComplementTable,
    u: &[u16],
    v: &[u16],
    step_bound: usize,
) -> std::result::Result<(Letters, Letters, usize), String> {
    // Signed letters; negative letters come first as u^-1.
    let mut word: Vec<(u16, bool)> = u.iter().rev().map(|&x| (x, false)).collect();
    word.extend(v.iter().map(|&y| (y, true)));
    let mut steps = 0;
    while let Some(p) = word.windows(2).position(|w| !w[0].1 && w[1].1) {
        if steps >= step_bound {
            return Err(format!("no termination within {step_bound} steps"));
        }
        steps += 1;
        let (x, y) = (word[p].0, word[p + 1].0);
        let fx = table.get_letters(x, y).ok_or_else(|| {
            format!(
                "missing complement for ({}, {})",
                table.congruence.atoms[x as usize], table.congruence.atoms[y as usize]
            )
        })?;
        let fy = table.get_letters(y, x).ok_or_else(|| {
            format!(
                "missing complement for ({}, {})",
                table.congruence.atoms[y as usize], table.congruence.atoms[x as usize]
            )
        })?;
        let replacement: Vec<(u16, bool)> = fx
            .iter()
            .map(|&a| (a, true))
            .chain(fy.iter().rev().map(|&a| (a, false)))
            .collect();
        word.splice(p..p + 2, replacement);
    }
    let split = word.iter().position(|l| !l.1).unwrap_or(word.len());
    let v_prime: Letters = word[..split].iter().map(|l| l.0).collect();
    let u_prime: Letters = word[split..].iter().rev().map(|l| l.0).collect();
    Ok((u_prime, v_prime, steps))
}

/// Right reversing of `u^-1 v`. Fails on a missing complement or when the
/// step bound is reached.
pub fn reverse(table: &ComplementTable, u: &Word, v: &Word, step_bound: usize) -> Result<Reversal> {
    let cu = table.congruence.encode(u)?;
    let cv = table.congruence.encode(v)?;
    let (up, vp, steps) =
        reverse_letters(table, &cu, &cv, step_bound).map_err(Error::Structure)?;
    Ok(Reversal {
        u_prime: table.congruence.decode(&up),
        v_prime: table.congruence.decode(&vp),
        steps,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeFailure {
    pub triple: [String; 3],
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CubeReport {
    pub check: &'static str,
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: u32,
    pub flavor: String,
    pub atoms: usize,
    pub triples: usize,
    /// Pairs with no relation in the presentation.
    pub missing_pairs: Vec<PairDiagnostic>,
    /// Complements for missing pairs taken from the congruence.
    pub derived_pairs: Vec<PairDiagnostic>,
    pub unresolved_pairs: Vec<PairDiagnostic>,
    pub ambiguous_pairs: Vec<PairDiagnostic>,
    pub failures: Vec<CubeFailure>,
    pub pass: bool,
}

/// Right lcm word of `x` and `y` extended by `z`, i.e. `L v'` where
/// `L = x f(x,y)` and `L^-1 z` reverses to `v' u'^-1`.
fn triple_lcm(table: &ComplementTable, x: u16, y: u16, z: u16, bound: usize) -> std::result::Result<Letters, String> {
    let mut lcm = vec![x];
    lcm.extend(
        table
            .get_letters(x, y)
            .ok_or_else(|| "missing complement".to_string())?,
    );
    let (_, v_prime, _) = reverse_letters(table, &lcm, &[z], bound)?;
    lcm.extend(v_prime);
    Ok(lcm)
}

/// Compares `lcm(lcm(x,y), z)` with `lcm(lcm(y,z), x)` over every unordered
/// triple of distinct atoms. Pairs without a relation get derived
/// complements first (see [`ComplementTable::fill_derived`]).
pub fn cube_check(p: &Presentation, step_bound: usize) -> Result<CubeReport> {
    let mut table = ComplementTable::new(p)?;
    table.fill_derived(p.coxeter_type().rank() as usize)?;
    let n = p.atoms().len() as u16;
    let mut triples = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                triples.push((x, y, z));
            }
        }
    }
    let name = |k: u16| p.atoms()[k as usize].to_string();
    let mut failures: Vec<CubeFailure> = triples
        .par_iter()
        .filter_map(|&(x, y, z)| {
            let fail = |reason: String| {
                Some(CubeFailure {
                    triple: [name(x), name(y), name(z)],
                    reason,
                })
            };
            let first = match triple_lcm(&table, x, y, z, step_bound) {
                Ok(w) => w,
                Err(e) => return fail(e),
            };
            let second = match triple_lcm(&table, y, z, x, step_bound) {
                Ok(w) => w,
                Err(e) => return fail(e),
            };
            match table.congruence.equivalent_letters(&first, &second) {
                Ok(true) => None,
                Ok(false) => fail(format!(
                    "`{}` and `{}` are not congruent",
                    table.congruence.decode(&first),
                    table.congruence.decode(&second)
                )),
                Err(e) => fail(e.to_string()),
            }
        })
        .collect();
    failures.sort_by(|a, b| a.triple.cmp(&b.triple));
    let ty = p.coxeter_type();
    let pass = failures.is_empty() && table.is_total() && table.ambiguous.is_empty();
    Ok(CubeReport {
        check: "cube",
        ty: ty.family().to_string(),
        rank: ty.parameter(),
        flavor: p.flavor().to_string(),
        atoms: p.atoms().len(),
        triples: triples.len(),
        missing_pairs: table.missing.clone(),
        derived_pairs: table.derived.clone(),
        unresolved_pairs: table.unresolved.clone(),
        ambiguous_pairs: table.ambiguous.clone(),
        failures,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{completed_dual_presentation, dual_presentation, parse_word};
    use crate::types::CoxeterType;

    #[test]
    fn b2_complements() {
        let p = completed_dual_presentation(CoxeterType::B(2)).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        let w = |s: &str| parse_word(s, &p).unwrap();
        let (a21, t1) = (Atom::alpha(2, 1), Atom::tau(1));
        assert_eq!(t.get(&a21, &t1), Some(w("t[1]")));
        assert_eq!(t.get(&t1, &a21), Some(w("b[2,1]")));
        assert_eq!(t.get(&t1, &t1), Some(Word::empty()));
        assert!(t.is_total());
        assert!(t.unsound_pairs().unwrap().is_empty());
    }

    #[test]
    fn a2_complements() {
        let p = dual_presentation(CoxeterType::A(2)).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        let (a32, a21) = (Atom::band(3, 2), Atom::band(2, 1));
        assert_eq!(t.get(&a32, &a21), Some(Word(vec![a21])));
        assert_eq!(t.get(&a21, &a32), Some(Word(vec![Atom::band(3, 1)])));
    }

    #[test]
    fn reversing_examples() {
        let p = completed_dual_presentation(CoxeterType::B(2)).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        let w = |s: &str| parse_word(s, &p).unwrap();
        let r = reverse(&t, &w("a[2,1]"), &w("a[2,1]"), 10).unwrap();
        assert!(r.u_prime.is_empty() && r.v_prime.is_empty());
        let r = reverse(&t, &w("a[2,1]"), &w("t[1]"), 10).unwrap();
        assert_eq!(r.u_prime, w("b[2,1]"));
        assert_eq!(r.v_prime, w("t[1]"));

        let p = dual_presentation(CoxeterType::A(2)).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        let w = |s: &str| parse_word(s, &p).unwrap();
        let (u, v) = (w("a[3,2]"), w("a[2,1]"));
        let r = reverse(&t, &u, &v, 10).unwrap();
        let c = t.congruence();
        assert!(c.equivalent(&u.concat(&r.v_prime), &v.concat(&r.u_prime)).unwrap());
        assert_eq!(u.concat(&r.v_prime), w("a[3,2] a[2,1]"));
    }

    #[test]
    fn step_bound_is_reported() {
        let p = dual_presentation(CoxeterType::A(3)).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        let w = |s: &str| parse_word(s, &p).unwrap();
        assert!(reverse(&t, &w("a[2,1] a[4,3]"), &w("a[3,2] a[4,1]"), 1).is_err());
    }

    #[test]
    fn uncompleted_b3_has_missing_pairs() {
        let p = dual_presentation(CoxeterType::B(3)).unwrap();
        let t = ComplementTable::new(&p).unwrap();
        assert!(!t.is_total());
        assert!(t.missing().iter().any(|d| d.x == "t[1]" && d.y == "b[3,2]"));
        let mut t = ComplementTable::new(&completed_dual_presentation(CoxeterType::B(3)).unwrap()).unwrap();
        t.fill_derived(3).unwrap();
        assert!(t.is_total());
        assert!(t.ambiguous().is_empty());
        assert!(t.unsound_pairs().unwrap().is_empty());
    }

    #[test]
    fn small_cube_checks() {
        for ty in [CoxeterType::A(2), CoxeterType::A(3), CoxeterType::I2(5)] {
            let p = dual_presentation(ty).unwrap();
            let r = cube_check(&p, DEFAULT_STEP_BOUND).unwrap();
            assert!(r.pass, "{ty}: {:?}", r.failures);
        }
        let p = completed_dual_presentation(CoxeterType::B(3)).unwrap();
        assert!(cube_check(&p, DEFAULT_STEP_BOUND).unwrap().pass);
    }
}
