use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear combination stored as an explicit term list; used for rule
/// right-hand sides and involution images, which live inside the preset.
pub type Terms = Vec<(Word, Scalar)>;

/// Names of the available algebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresetId {
    /// `Pol(C^n)_q`.
    PolC(usize),
    /// `C[SU_2]_q`.
    Csu2,
    /// `Pol(Mat_2)_q`.
    PolMat2,
    /// Free *-algebra on `S, C, d` used for shift-operator expressions.
    Scd,
    Tensor(Vec<PresetId>),
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetId::PolC(n) => write!(f, "polC({n})"),
            PresetId::Csu2 => write!(f, "csu2"),
            PresetId::PolMat2 => write!(f, "polMat2"),
            PresetId::Scd => write!(f, "scd"),
            PresetId::Tensor(list) => {
                let inner: Vec<String> = list.iter().map(|p| p.to_string()).collect();
                write!(f, "tensor({})", inner.join(","))
            }
        }
    }
}

impl FromStr for PresetId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "csu2" => return Ok(PresetId::Csu2),
            "polmat2" => return Ok(PresetId::PolMat2),
            "scd" => return Ok(PresetId::Scd),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("polc") {
            let digits = rest.trim_start_matches('(').trim_end_matches(')');
            let n: usize = digits
                .parse()
                .map_err(|_| Error::UnknownPreset(s.to_string()))?;
            return Ok(PresetId::PolC(n));
        }
        if let Some(rest) = lower.strip_prefix("tensor(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownPreset(s.to_string()))?;
            let factors = split_top_level(inner)
                .into_iter()
                .map(|f| f.parse())
                .collect::<Result<Vec<_>>>()?;
            return Ok(PresetId::Tensor(factors));
        }
        Err(Error::UnknownPreset(s.to_string()))
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterInfo {
    pub name: String,
    /// Tensor factor this letter belongs to (0 for single algebras).
    pub factor: usize,
    pub star: bool,
    /// The letter's star counterpart (starred <-> unstarred).
    pub partner: Letter,
}

/// Oriented rewrite rule `lhs -> rhs`; `lhs` has length 1 or 2.
#[derive(Debug, Clone)]
pub struct Rule {
    pub label: String,
    pub lhs: Word,
    pub rhs: Terms,
}

/// A defining relation `lhs = rhs` as stated for the algebra.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub lhs: Terms,
    pub rhs: Terms,
}

/// Alphabet, letter order, oriented rules and involution of one algebra.
///
/// Letter codes are indices into `letters` and the letter order is the code
/// order, so degree-lex comparison of words is comparison of code sequences.
#[derive(Debug)]
pub struct AlgebraPreset {
    pub id: PresetId,
    pub letters: Vec<LetterInfo>,
    pub rules: Vec<Rule>,
    pub relations: Vec<Relation>,
    /// Image of each letter under the involution.
    pub involution: Vec<Terms>,
    /// Unstarred generators in canonical order (used by homomorphisms and
    /// representations).
    pub generators: Vec<Letter>,
    pub factors: Vec<Arc<AlgebraPreset>>,
    pub offsets: Vec<Letter>,
    pair_rules: HashMap<(Letter, Letter), usize>,
    single_rules: HashMap<Letter, usize>,
}

impl AlgebraPreset {
    pub fn name(&self) -> String {
        self.id.to_string()
    }

    pub fn is_tensor(&self) -> bool {
        !self.factors.is_empty()
    }

    pub fn letter_count(&self) -> usize {
        self.letters.len()
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.letters
            .iter()
            .position(|l| l.name == name)
            .map(|i| i as Letter)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Parses a whitespace-separated product of letter names.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.split_whitespace().map(|n| self.letter(n)).collect()
    }

    pub fn letter_name(&self, l: Letter) -> &str {
        &self.letters[l as usize].name
    }

    pub fn word_name(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|&l| self.letter_name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Index of the rule whose left side is the single letter `l`.
    pub fn single_rule(&self, l: Letter) -> Option<usize> {
        self.single_rules.get(&l).copied()
    }

    /// Index of the rule whose left side is the pair `a b`.
    pub fn pair_rule(&self, a: Letter, b: Letter) -> Option<usize> {
        self.pair_rules.get(&(a, b)).copied()
    }

    /// Splits a word of a tensor preset into local per-factor words.
    pub fn split_factors(&self, w: &Word) -> Vec<Word> {
        let mut parts = vec![Word::new(); self.factors.len()];
        for &l in w.iter() {
            let f = self.letters[l as usize].factor;
            parts[f].push(l - self.offsets[f]);
        }
        parts
    }

    /// Inverse of [`split_factors`](Self::split_factors).
    pub fn join_factors(&self, parts: &[Word]) -> Word {
        let mut w = Word::new();
        for (f, part) in parts.iter().enumerate() {
            for &l in part.iter() {
                w.push(l + self.offsets[f]);
            }
        }
        w
    }

    /// Every rule's right side must precede its left side in degree-lex order.
    pub fn orientation_violations(&self) -> Vec<String> {
        self.rules
            .iter()
            .filter(|r| r.rhs.iter().any(|(w, _)| w >= &r.lhs))
            .map(|r| r.label.clone())
            .collect()
    }

    fn finish(mut self) -> Self {
        for (i, r) in self.rules.iter().enumerate() {
            match r.lhs.len() {
                1 => {
                    self.single_rules.insert(r.lhs[0], i);
                }
                2 => {
                    self.pair_rules.insert((r.lhs[0], r.lhs[1]), i);
                }
                n => panic!("rule `{}` has lhs of length {n}", r.label),
            }
        }
        self
    }
}

/// Builds a preset by id. Presets are immutable and shared.
pub fn build_preset(id: &PresetId) -> Result<Arc<AlgebraPreset>> {
    let preset = match id {
        PresetId::PolC(n) => {
            if *n == 0 {
                return Err(Error::InvalidPreset("polC(n) requires n >= 1".into()));
            }
            pol_c(*n)
        }
        PresetId::Csu2 => csu2(),
        PresetId::PolMat2 => pol_mat2(),
        PresetId::Scd => scd(),
        PresetId::Tensor(list) => {
            if list.is_empty() {
                return Err(Error::InvalidPreset("empty tensor product".into()));
            }
            let factors = list.iter().map(build_preset).collect::<Result<Vec<_>>>()?;
            tensor(id.clone(), factors)
        }
    };
    Ok(Arc::new(preset.finish()))
}

/// Convenience: parse and build.
pub fn preset_by_name(name: &str) -> Result<Arc<AlgebraPreset>> {
    build_preset(&name.parse()?)
}

/// Helper that writes rules and relations in terms of letter names.
struct Spec<'a> {
    names: &'a [String],
}

impl Spec<'_> {
    fn w(&self, text: &str) -> Word {
        text.split_whitespace()
            .map(|n| {
                self.names
                    .iter()
                    .position(|x| x == n)
                    .unwrap_or_else(|| panic!("letter `{n}` not in alphabet")) as Letter
            })
            .collect()
    }

    fn terms(&self, items: &[(Scalar, &str)]) -> Terms {
        items
            .iter()
            .filter(|(s, _)| !s.is_zero())
            .map(|(s, t)| (self.w(t), s.clone()))
            .collect()
    }
}

fn letters_with_partners(names: &[String], star_flags: &[bool], partner: &[usize]) -> Vec<LetterInfo> {
    names
        .iter()
        .enumerate()
        .map(|(i, n)| LetterInfo {
            name: n.clone(),
            factor: 0,
            star: star_flags[i],
            partner: partner[i] as Letter,
        })
        .collect()
}

/// Default involution for presets whose starred letters are formal:
/// `x -> x*` and `x* -> x`.
fn formal_involution(letters: &[LetterInfo]) -> Vec<Terms> {
    letters
        .iter()
        .map(|l| vec![(Word::from_slice(&[l.partner]), Scalar::one())])
        .collect()
}

fn relations_from_rules(rules: &[Rule]) -> Vec<Relation> {
    rules
        .iter()
        .map(|r| Relation {
            label: r.label.clone(),
            lhs: vec![(r.lhs.clone(), Scalar::one())],
            rhs: r.rhs.clone(),
        })
        .collect()
}

fn empty_preset(id: PresetId) -> AlgebraPreset {
    AlgebraPreset {
        id,
        letters: Vec::new(),
        rules: Vec::new(),
        relations: Vec::new(),
        involution: Vec::new(),
        generators: Vec::new(),
        factors: Vec::new(),
        offsets: Vec::new(),
        pair_rules: HashMap::new(),
        single_rules: HashMap::new(),
    }
}

fn pol_c(n: usize) -> AlgebraPreset {
    // unstarred z_n < ... < z_1, then z_1* < ... < z_n*
    let mut names = Vec::with_capacity(2 * n);
    for i in 0..n {
        names.push(format!("z{}", n - i));
    }
    for j in 1..=n {
        names.push(format!("z{j}*"));
    }
    let star: Vec<bool> = (0..2 * n).map(|i| i >= n).collect();
    let partner: Vec<usize> = (0..2 * n)
        .map(|i| if i < n { n + (n - 1 - i) } else { n - 1 - (i - n) })
        .collect();
    let letters = letters_with_partners(&names, &star, &partner);
    let sp = Spec { names: &names };
    let q = Scalar::q;
    let mut rules = Vec::new();
    for j in 1..=n {
        for k in (j + 1)..=n {
            rules.push(Rule {
                label: format!("z{j} z{k} = q z{k} z{j}"),
                lhs: sp.w(&format!("z{j} z{k}")),
                rhs: sp.terms(&[(q(), &format!("z{k} z{j}"))]),
            });
        }
    }
    for j in 1..=n {
        for k in (j + 1)..=n {
            rules.push(Rule {
                label: format!("z{k}* z{j}* = q z{j}* z{k}*"),
                lhs: sp.w(&format!("z{k}* z{j}*")),
                rhs: sp.terms(&[(q(), &format!("z{j}* z{k}*"))]),
            });
        }
    }
    for j in 1..=n {
        for k in 1..=n {
            if j == k {
                continue;
            }
            rules.push(Rule {
                label: format!("z{j}* z{k} = q z{k} z{j}*"),
                lhs: sp.w(&format!("z{j}* z{k}")),
                rhs: sp.terms(&[(q(), &format!("z{k} z{j}*"))]),
            });
        }
    }
    for j in 1..=n {
        let c = Scalar::one_minus_q2();
        let mut rhs = sp.terms(&[(Scalar::q_pow(2), &format!("z{j} z{j}*")), (c.clone(), "")]);
        for k in (j + 1)..=n {
            rhs.extend(sp.terms(&[(-&c, &format!("z{k} z{k}*"))]));
        }
        rules.push(Rule {
            label: format!("z{j}* z{j} = q^2 z{j} z{j}* + (1-q^2)(1 - sum_{{k>{j}}} z_k z_k*)"),
            lhs: sp.w(&format!("z{j}* z{j}")),
            rhs,
        });
    }
    let mut p = empty_preset(PresetId::PolC(n));
    p.relations = relations_from_rules(&rules);
    p.rules = rules;
    p.involution = formal_involution(&letters);
    p.generators = (1..=n).map(|j| (n - j) as Letter).collect();
    p.letters = letters;
    p
}

fn csu2() -> AlgebraPreset {
    let names: Vec<String> = ["t12", "t21", "t11", "t22", "t12*", "t21*", "t11*", "t22*"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let star = [false, false, false, false, true, true, true, true];
    let partner = [4, 5, 6, 7, 0, 1, 2, 3];
    let letters = letters_with_partners(&names, &star, &partner);
    let sp = Spec { names: &names };
    let q = Scalar::q;
    let qi = || Scalar::q_pow(-1);
    let one = Scalar::one;
    let rule = |label: &str, lhs: &str, rhs: &[(Scalar, &str)]| Rule {
        label: label.to_string(),
        lhs: sp.w(lhs),
        rhs: sp.terms(rhs),
    };
    let rules = vec![
        rule("t21 t12 = t12 t21", "t21 t12", &[(one(), "t12 t21")]),
        rule("t11 t12 = q t12 t11", "t11 t12", &[(q(), "t12 t11")]),
        rule("t11 t21 = q t21 t11", "t11 t21", &[(q(), "t21 t11")]),
        rule("t22 t12 = q^-1 t12 t22", "t22 t12", &[(qi(), "t12 t22")]),
        rule("t22 t21 = q^-1 t21 t22", "t22 t21", &[(qi(), "t21 t22")]),
        rule("t11 t22 = 1 + q t12 t21", "t11 t22", &[(one(), ""), (q(), "t12 t21")]),
        rule("t22 t11 = 1 + q^-1 t12 t21", "t22 t11", &[(one(), ""), (qi(), "t12 t21")]),
        rule("t11* = t22", "t11*", &[(one(), "t22")]),
        rule("t22* = t11", "t22*", &[(one(), "t11")]),
        rule("t12* = -q t21", "t12*", &[(-q(), "t21")]),
        rule("t21* = -q^-1 t12", "t21*", &[(-qi(), "t12")]),
    ];
    let rel = |label: &str, lhs: &[(Scalar, &str)], rhs: &[(Scalar, &str)]| Relation {
        label: label.to_string(),
        lhs: sp.terms(lhs),
        rhs: sp.terms(rhs),
    };
    let relations = vec![
        rel("t11 t21 = q t21 t11", &[(one(), "t11 t21")], &[(q(), "t21 t11")]),
        rel("t11 t12 = q t12 t11", &[(one(), "t11 t12")], &[(q(), "t12 t11")]),
        rel("t12 t21 = t21 t12", &[(one(), "t12 t21")], &[(one(), "t21 t12")]),
        rel("t22 t21 = q^-1 t21 t22", &[(one(), "t22 t21")], &[(qi(), "t21 t22")]),
        rel("t22 t12 = q^-1 t12 t22", &[(one(), "t22 t12")], &[(qi(), "t12 t22")]),
        rel(
            "t11 t22 - t22 t11 = (q - q^-1) t12 t21",
            &[(one(), "t11 t22"), (-one(), "t22 t11")],
            &[(Scalar::q_minus_qinv(), "t12 t21")],
        ),
        rel(
            "t11 t22 - q t12 t21 = 1",
            &[(one(), "t11 t22"), (-q(), "t12 t21")],
            &[(one(), "")],
        ),
        rel("t11* = t22", &[(one(), "t11*")], &[(one(), "t22")]),
        rel("t22* = t11", &[(one(), "t22*")], &[(one(), "t11")]),
        rel("t12* = -q t21", &[(one(), "t12*")], &[(-q(), "t21")]),
        rel("t21* = -q^-1 t12", &[(one(), "t21*")], &[(-qi(), "t12")]),
    ];
    // stars are eliminated through the involution table
    let involution = vec![
        sp.terms(&[(-q(), "t21")]),
        sp.terms(&[(-qi(), "t12")]),
        sp.terms(&[(one(), "t22")]),
        sp.terms(&[(one(), "t11")]),
        sp.terms(&[(one(), "t12")]),
        sp.terms(&[(one(), "t21")]),
        sp.terms(&[(one(), "t11")]),
        sp.terms(&[(one(), "t22")]),
    ];
    let mut p = empty_preset(PresetId::Csu2);
    p.rules = rules;
    p.relations = relations;
    p.involution = involution;
    // canonical generator order t11, t12, t21, t22
    p.generators = vec![2, 0, 1, 3];
    p.letters = letters;
    p
}

/// Letter names of `Pol(Mat_2)_q`: `z_a^alpha` has subscript `a`, superscript `alpha`.
pub const POLMAT2_LETTERS: [&str; 8] = [
    "z_2^2", "z_1^2", "z_2^1", "z_1^1", "z_1^1*", "z_2^1*", "z_1^2*", "z_2^2*",
];

fn pol_mat2() -> AlgebraPreset {
    let names: Vec<String> = POLMAT2_LETTERS.iter().map(|s| s.to_string()).collect();
    let star = [false, false, false, false, true, true, true, true];
    // z22 <-> z22*, z12 <-> z12*, z21 <-> z21*, z11 <-> z11*
    let partner = [7, 6, 5, 4, 3, 2, 1, 0];
    let letters = letters_with_partners(&names, &star, &partner);
    let sp = Spec { names: &names };
    let q = Scalar::q;
    let q2 = || Scalar::q_pow(2);
    let one = Scalar::one;
    let c = Scalar::one_minus_q2;
    let dq = Scalar::q_minus_qinv;
    let rule = |label: &str, lhs: &str, rhs: &[(Scalar, &str)]| Rule {
        label: label.to_string(),
        lhs: sp.w(lhs),
        rhs: sp.terms(rhs),
    };
    let c2q = &(&c() * &c()) * &Scalar::q_pow(-2);
    let rules = vec![
        // holomorphic exchange relations
        rule("z_1^1 z_2^1 = q z_2^1 z_1^1", "z_1^1 z_2^1", &[(q(), "z_2^1 z_1^1")]),
        rule("z_2^1 z_1^2 = z_1^2 z_2^1", "z_2^1 z_1^2", &[(one(), "z_1^2 z_2^1")]),
        rule("z_1^1 z_1^2 = q z_1^2 z_1^1", "z_1^1 z_1^2", &[(q(), "z_1^2 z_1^1")]),
        rule("z_2^1 z_2^2 = q z_2^2 z_2^1", "z_2^1 z_2^2", &[(q(), "z_2^2 z_2^1")]),
        rule(
            "z_1^1 z_2^2 - z_2^2 z_1^1 = (q - q^-1) z_1^2 z_2^1",
            "z_1^1 z_2^2",
            &[(one(), "z_2^2 z_1^1"), (dq(), "z_1^2 z_2^1")],
        ),
        rule("z_1^2 z_2^2 = q z_2^2 z_1^2", "z_1^2 z_2^2", &[(q(), "z_2^2 z_1^2")]),
        // their adjoints
        rule("z_2^1* z_1^1* = q z_1^1* z_2^1*", "z_2^1* z_1^1*", &[(q(), "z_1^1* z_2^1*")]),
        rule("z_1^2* z_2^1* = z_2^1* z_1^2*", "z_1^2* z_2^1*", &[(one(), "z_2^1* z_1^2*")]),
        rule("z_1^2* z_1^1* = q z_1^1* z_1^2*", "z_1^2* z_1^1*", &[(q(), "z_1^1* z_1^2*")]),
        rule("z_2^2* z_2^1* = q z_2^1* z_2^2*", "z_2^2* z_2^1*", &[(q(), "z_2^1* z_2^2*")]),
        rule(
            "z_2^2* z_1^1* - z_1^1* z_2^2* = (q - q^-1) z_2^1* z_1^2*",
            "z_2^2* z_1^1*",
            &[(one(), "z_1^1* z_2^2*"), (dq(), "z_2^1* z_1^2*")],
        ),
        rule("z_2^2* z_1^2* = q z_1^2* z_2^2*", "z_2^2* z_1^2*", &[(q(), "z_1^2* z_2^2*")]),
        // z* z relations
        rule(
            "z_1^1* z_1^1 = q^2 z_1^1 z_1^1* - (1-q^2)(z_2^1 z_2^1* + z_1^2 z_1^2*) + q^-2 (1-q^2)^2 z_2^2 z_2^2* + 1 - q^2",
            "z_1^1* z_1^1",
            &[
                (q2(), "z_1^1 z_1^1*"),
                (-c(), "z_2^1 z_2^1*"),
                (-c(), "z_1^2 z_1^2*"),
                (c2q.clone(), "z_2^2 z_2^2*"),
                (c(), ""),
            ],
        ),
        rule(
            "z_2^1* z_2^1 = q^2 z_2^1 z_2^1* - (1-q^2) z_2^2 z_2^2* + 1 - q^2",
            "z_2^1* z_2^1",
            &[(q2(), "z_2^1 z_2^1*"), (-c(), "z_2^2 z_2^2*"), (c(), "")],
        ),
        rule(
            "z_1^2* z_1^2 = q^2 z_1^2 z_1^2* - (1-q^2) z_2^2 z_2^2* + 1 - q^2",
            "z_1^2* z_1^2",
            &[(q2(), "z_1^2 z_1^2*"), (-c(), "z_2^2 z_2^2*"), (c(), "")],
        ),
        rule(
            "z_2^2* z_2^2 = q^2 z_2^2 z_2^2* + 1 - q^2",
            "z_2^2* z_2^2",
            &[(q2(), "z_2^2 z_2^2*"), (c(), "")],
        ),
        // mixed relations as listed
        rule(
            "z_1^1* z_2^1 - q z_2^1 z_1^1* = (q - q^-1) z_2^2 z_1^2*",
            "z_1^1* z_2^1",
            &[(q(), "z_2^1 z_1^1*"), (dq(), "z_2^2 z_1^2*")],
        ),
        rule("z_2^2* z_2^1 = q z_2^1 z_2^2*", "z_2^2* z_2^1", &[(q(), "z_2^1 z_2^2*")]),
        rule(
            "z_1^1* z_1^2 - q z_1^2 z_1^1* = (q - q^-1) z_2^2 z_2^1*",
            "z_1^1* z_1^2",
            &[(q(), "z_1^2 z_1^1*"), (dq(), "z_2^2 z_2^1*")],
        ),
        rule("z_2^2* z_1^2 = q z_1^2 z_2^2*", "z_2^2* z_1^2", &[(q(), "z_1^2 z_2^2*")]),
        rule("z_1^1* z_2^2 = z_2^2 z_1^1*", "z_1^1* z_2^2", &[(one(), "z_2^2 z_1^1*")]),
        rule("z_2^1* z_1^2 = z_1^2 z_2^1*", "z_2^1* z_1^2", &[(one(), "z_1^2 z_2^1*")]),
        // adjoints of the listed mixed relations
        rule(
            "z_2^1* z_1^1 - q z_1^1 z_2^1* = (q - q^-1) z_1^2 z_2^2*",
            "z_2^1* z_1^1",
            &[(q(), "z_1^1 z_2^1*"), (dq(), "z_1^2 z_2^2*")],
        ),
        rule("z_2^1* z_2^2 = q z_2^2 z_2^1*", "z_2^1* z_2^2", &[(q(), "z_2^2 z_2^1*")]),
        rule(
            "z_1^2* z_1^1 - q z_1^1 z_1^2* = (q - q^-1) z_2^1 z_2^2*",
            "z_1^2* z_1^1",
            &[(q(), "z_1^1 z_1^2*"), (dq(), "z_2^1 z_2^2*")],
        ),
        rule("z_1^2* z_2^2 = q z_2^2 z_1^2*", "z_1^2* z_2^2", &[(q(), "z_2^2 z_1^2*")]),
        rule("z_2^2* z_1^1 = z_1^1 z_2^2*", "z_2^2* z_1^1", &[(one(), "z_1^1 z_2^2*")]),
        rule("z_1^2* z_2^1 = z_2^1 z_1^2*", "z_1^2* z_2^1", &[(one(), "z_2^1 z_1^2*")]),
    ];
    let mut p = empty_preset(PresetId::PolMat2);
    p.relations = relations_from_rules(&rules);
    p.rules = rules;
    p.involution = formal_involution(&letters);
    // canonical generator order z_1^1, z_1^2, z_2^1, z_2^2
    p.generators = vec![3, 1, 2, 0];
    p.letters = letters;
    p
}

fn scd() -> AlgebraPreset {
    let names: Vec<String> = ["S", "C", "d", "S*", "C*", "d*"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let star = [false, false, false, true, true, true];
    let partner = [3, 4, 5, 0, 1, 2];
    let letters = letters_with_partners(&names, &star, &partner);
    let sp = Spec { names: &names };
    let rules = vec![
        Rule { label: "C* = C".into(), lhs: sp.w("C*"), rhs: sp.terms(&[(Scalar::one(), "C")]) },
        Rule { label: "d* = d".into(), lhs: sp.w("d*"), rhs: sp.terms(&[(Scalar::one(), "d")]) },
    ];
    let mut p = empty_preset(PresetId::Scd);
    p.relations = relations_from_rules(&rules);
    p.rules = rules;
    p.involution = formal_involution(&letters);
    p.generators = vec![0, 1, 2];
    p.letters = letters;
    p
}

fn tensor(id: PresetId, factors: Vec<Arc<AlgebraPreset>>) -> AlgebraPreset {
    let mut p = empty_preset(id);
    let mut offset: Letter = 0;
    for (f, fac) in factors.iter().enumerate() {
        p.offsets.push(offset);
        for l in &fac.letters {
            p.letters.push(LetterInfo {
                name: format!("{}@{f}", l.name),
                factor: f,
                star: l.star,
                partner: l.partner + offset,
            });
        }
        let shift = |terms: &Terms| -> Terms {
            terms
                .iter()
                .map(|(w, s)| (w.iter().map(|&l| l + offset).collect(), s.clone()))
                .collect()
        };
        for r in &fac.rules {
            p.rules.push(Rule {
                label: format!("[{f}] {}", r.label),
                lhs: r.lhs.iter().map(|&l| l + offset).collect(),
                rhs: shift(&r.rhs),
            });
        }
        for r in &fac.relations {
            p.relations.push(Relation {
                label: format!("[{f}] {}", r.label),
                lhs: shift(&r.lhs),
                rhs: shift(&r.rhs),
            });
        }
        for inv in &fac.involution {
            p.involution.push(shift(inv));
        }
        p.generators.extend(fac.generators.iter().map(|&g| g + offset));
        offset += fac.letters.len() as Letter;
    }
    p.factors = factors;
    p
}
