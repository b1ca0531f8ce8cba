use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groups::{Letter, Word};

/// Finitely presented group. Every relator is stored as a single word `r`
/// meaning `r = 1`; a relation `lhs = rhs` becomes `lhs rhs^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    longitude: Option<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= generators.len() {
                    return Err(Error::UnknownGenerator(g));
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
            longitude: None,
        })
    }

    /// Presentation from relations `lhs = rhs`.
    pub fn from_relations(generators: &[&str], relations: &[(Word, Word)]) -> Result<Self> {
        let relators = relations.iter().map(|(l, r)| l.concat(&r.inverse())).collect();
        Self::new(generators.iter().map(|s| s.to_string()).collect(), relators)
    }

    pub fn with_longitude(mut self, longitude: Word) -> Result<Self> {
        if let Some(g) = longitude.max_generator() {
            if g >= self.generators.len() {
                return Err(Error::UnknownGenerator(g));
            }
        }
        self.longitude = Some(longitude);
        Ok(self)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn longitude(&self) -> Option<&Word> {
        self.longitude.as_ref()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Same group with generators 0 and 1 exchanged.
    pub fn swap_first_two(&self) -> Self {
        let swap = |w: &Word| {
            Word::new(w.letters().iter().map(|l| Letter {
                gen: match l.gen {
                    0 => 1,
                    1 => 0,
                    g => g,
                },
                inverse: l.inverse,
            }))
        };
        let mut generators = self.generators.clone();
        generators.swap(0, 1);
        Presentation {
            generators,
            relators: self.relators.iter().map(swap).collect(),
            longitude: self.longitude.as_ref().map(swap),
        }
    }

    /// `⟨alpha, beta | omega^n alpha = beta omega^n⟩`, `omega = [alpha, beta]`.
    pub fn twist_knot(n: i64) -> Self {
        let (a, b) = (Word::gen(0), Word::gen(1));
        let omega = Word::commutator(&a, &b);
        let wn = omega.pow(n);
        Self::from_relations(&["alpha", "beta"], &[(wn.concat(&a), b.concat(&wn))]).expect("well-formed")
    }

    /// `⟨a, b, x, y | a^2 = b^(2n+1), x^-1 y x = y^-1, mu = y^-1, h = y^-1 x^2⟩`
    /// with `mu = b^-n a` and the fiber `h = a^2`.
    pub fn graph_manifold(n: i64) -> Self {
        let (a, b, x, y) = (Word::gen(0), Word::gen(1), Word::gen(2), Word::gen(3));
        let mu = Word::gen_pow(1, -n).concat(&a);
        let h = a.pow(2);
        let rels = [
            (a.pow(2), b.pow(2 * n + 1)),
            (x.inverse().concat(&y).concat(&x), y.inverse()),
            (mu, y.inverse()),
            (h, y.inverse().concat(&x.pow(2))),
        ];
        Self::from_relations(&["a", "b", "x", "y"], &rels).expect("well-formed")
    }

    /// `⟨a, b | a^2 = b^(2n+1)⟩`, the exterior of T(2, 2n+1).
    pub fn torus_knot(n: i64) -> Self {
        Self::from_relations(&["a", "b"], &[(Word::gen_pow(0, 2), Word::gen_pow(1, 2 * n + 1))]).expect("well-formed")
    }

    /// `⟨x, y | y x = x y^-1⟩`.
    pub fn klein_bottle() -> Self {
        let (x, y) = (Word::gen(0), Word::gen(1));
        Self::from_relations(&["x", "y"], &[(y.concat(&x), x.concat(&y.inverse()))]).expect("well-formed")
    }

    /// `⟨u, v | u v u^-1 v^-1⟩`.
    pub fn torus() -> Self {
        Self::new(
            vec!["u".into(), "v".into()],
            vec![Word::commutator(&Word::gen(0), &Word::gen(1))],
        )
        .expect("well-formed")
    }

    /// Parses the plain-text format:
    ///
    /// ```text
    /// gens: a,b,x,y
    /// rel: a a = b b b
    /// rel: x^-1 y x y
    /// longitude: a b^-1
    /// ```
    ///
    /// Tokens are whitespace separated generator names with an optional
    /// `^-1` suffix; `1` is the empty word. A relator without `=` means
    /// `word = 1`. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        let mut longitude = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let (key, body) = line
                .split_once(':')
                .ok_or_else(|| err("expected `gens:`, `rel:` or `longitude:`".into()))?;
            match key.trim() {
                "gens" => {
                    if gens.is_some() {
                        return Err(err("duplicate `gens:` line".into()));
                    }
                    let names: Vec<String> = body
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect();
                    for n in &names {
                        if !n.chars().all(|c| c.is_ascii_lowercase()) {
                            return Err(err(format!("generator name `{n}` must be lowercase letters")));
                        }
                    }
                    gens = Some(names);
                }
                "rel" | "longitude" => {
                    let names = gens.as_ref().ok_or_else(|| err("`gens:` must come first".into()))?;
                    let word = match body.split_once('=') {
                        Some((l, r)) => {
                            let l = parse_word(l, names).map_err(err)?;
                            let r = parse_word(r, names).map_err(err)?;
                            l.concat(&r.inverse())
                        }
                        None => parse_word(body, names).map_err(err)?,
                    };
                    if key.trim() == "rel" {
                        relators.push(word);
                    } else {
                        longitude = Some(word);
                    }
                }
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        let gens = gens.ok_or(Error::Parse {
            line: 0,
            msg: "missing `gens:` line".into(),
        })?;
        let mut p = Presentation::new(gens, relators)?;
        p.longitude = longitude;
        Ok(p)
    }

    /// Inverse of [`Presentation::parse`]; relators are written `word = 1`.
    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.generators.join(","));
        for r in &self.relators {
            let _ = writeln!(s, "rel: {} = 1", r.to_text(&self.generators));
        }
        if let Some(l) = &self.longitude {
            let _ = writeln!(s, "longitude: {}", l.to_text(&self.generators));
        }
        s
    }
}

fn parse_word(text: &str, names: &[String]) -> std::result::Result<Word, String> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (name, inverse) = match tok.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let gen = names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| format!("unknown generator `{name}`"))?;
        letters.push(Letter { gen, inverse });
    }
    Ok(Word::new(letters))
}
