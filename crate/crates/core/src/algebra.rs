//! Bound quiver algebras kQ/I over an exact field.
//!
//! The ideal I is generated by linear combinations of parallel paths,
//! optionally together with all paths of a fixed length (truncation). The
//! path basis of the quotient is computed degree by degree: ideal elements
//! are spanned inside the path space of all words below a working length,
//! row-reduced per (source, target) block with longer words eliminated
//! first, and the computation is accepted once no basis word survives in a
//! top window of degrees. That certifies a nilpotency length L with J^L = 0
//! in the quotient, which is exact for admissible ideals.
//!
//! Words are stored in application order: `[a, b]` is the path that applies
//! arrow `a` first, written `b*a` in composition notation.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::Error;

/// Default bound on certified path lengths.
pub const DEFAULT_LENGTH_BOUND: usize = 64;
/// Safety cap on the number of enumerated words.
const PATH_SPACE_CAP: usize = 500_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// True when some oriented cycle exists.
    pub fn has_oriented_cycle(&self) -> bool {
        // DFS three-color cycle detection.
        let n = self.vertices.len();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for a in &self.arrows {
            out[a.source].push(a.target);
        }
        let mut state = vec![0u8; n]; // 0 white, 1 gray, 2 black
        fn visit(v: usize, out: &[Vec<usize>], state: &mut [u8]) -> bool {
            state[v] = 1;
            for &w in &out[v] {
                if state[w] == 1 || (state[w] == 0 && visit(w, out, state)) {
                    return true;
                }
            }
            state[v] = 2;
            false
        }
        (0..n).any(|v| state[v] == 0 && visit(v, &mut out.clone(), &mut state))
    }

    /// Every vertex has at most one incoming and one outgoing arrow.
    pub fn is_nakayama(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for a in &self.arrows {
            outdeg[a.source] += 1;
            indeg[a.target] += 1;
        }
        indeg.iter().all(|&d| d <= 1) && outdeg.iter().all(|&d| d <= 1)
    }
}

/// A relation: a linear combination of parallel words, in application order.
#[derive(Clone, Debug)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
    pub source: usize,
    pub target: usize,
}

/// One surviving path class of the quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub word: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl BasisPath {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Reduction data for one (source, target) block.
struct Block {
    /// All words below the working length, longest first.
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    /// Row-reduced ideal span over the `words` columns.
    reduced: Matrix,
    /// pivot column -> row of `reduced`.
    pivot_row: HashMap<usize, usize>,
    /// non-pivot column -> global basis index.
    global: HashMap<usize, usize>,
}

pub struct Algebra {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub truncate: Option<usize>,
    /// Path basis sorted by (length, source, word).
    pub basis: Vec<BasisPath>,
    /// J^nilpotency = 0 in the quotient.
    pub nilpotency: usize,
    pub warnings: Vec<String>,
    hash: String,
    by_pair: BTreeMap<(usize, usize), Vec<usize>>,
    by_source: Vec<Vec<usize>>,
    blocks: BTreeMap<(usize, usize), Block>,
    /// arrow -> (basis index with matching target) -> reduced coefficients.
    arrow_action: Vec<HashMap<usize, Vec<(usize, Scalar)>>>,
}

struct PathEnum {
    /// (source, target, word) for every word of length < level, enumeration
    /// order: by length, then by construction order.
    paths: Vec<(usize, usize, Vec<usize>)>,
}

fn enumerate_paths(q: &Quiver, level: usize) -> Result<PathEnum, Error> {
    let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut frontier: Vec<(usize, usize, Vec<usize>)> = (0..q.vertices.len())
        .map(|v| (v, v, Vec::new()))
        .collect();
    for len in 0..level {
        if len > 0 {
            let mut next = Vec::new();
            for (s, t, w) in &frontier {
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.source == *t {
                        let mut w2 = w.clone();
                        w2.push(ai);
                        next.push((*s, a.target, w2));
                    }
                }
            }
            frontier = next;
        }
        paths.extend(frontier.iter().cloned());
        if paths.len() > PATH_SPACE_CAP {
            return Err(Error::PathSpaceExceeded {
                cap: PATH_SPACE_CAP,
            });
        }
    }
    Ok(PathEnum { paths })
}

struct LevelData {
    blocks: BTreeMap<(usize, usize), Block>,
    /// surviving (length, source, word), sorted.
    survivors: Vec<(usize, usize, Vec<usize>)>,
}

fn compute_level(
    field: FieldSpec,
    q: &Quiver,
    relations: &[Relation],
    truncate: Option<usize>,
    level: usize,
) -> Result<LevelData, Error> {
    let all = enumerate_paths(q, level)?;
    // Group words per block, longest first so that elimination prefers to
    // keep short words as basis representatives.
    let mut block_words: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for (s, t, w) in &all.paths {
        block_words.entry((*s, *t)).or_default().push(w.clone());
    }
    for words in block_words.values_mut() {
        words.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    }
    let mut blocks = BTreeMap::new();
    let mut survivors = Vec::new();
    for ((s, t), words) in block_words {
        let index: HashMap<Vec<usize>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        // u * r * w with w applied first: word = w ++ term ++ u.
        for r in relations {
            let min_len = r.terms.iter().map(|(_, w)| w.len()).min().unwrap_or(0);
            for (ws, wt, ww) in &all.paths {
                if *wt != r.source || *ws != s {
                    continue;
                }
                for (us, ut, uw) in &all.paths {
                    if *us != r.target || *ut != t {
                        continue;
                    }
                    if ww.len() + min_len + uw.len() >= level {
                        continue;
                    }
                    let mut row = vec![field.zero(); words.len()];
                    let mut nonzero = false;
                    for (c, term) in &r.terms {
                        if ww.len() + term.len() + uw.len() >= level {
                            continue;
                        }
                        let mut word = ww.clone();
                        word.extend_from_slice(term);
                        word.extend_from_slice(uw);
                        let col = index[&word];
                        row[col] = &row[col] + c;
                        nonzero = true;
                    }
                    if nonzero {
                        rows.push(row);
                    }
                }
            }
        }
        if let Some(tr) = truncate {
            for (i, w) in words.iter().enumerate() {
                if w.len() >= tr {
                    let mut row = vec![field.zero(); words.len()];
                    row[i] = field.one();
                    rows.push(row);
                }
            }
        }
        let mat = if rows.is_empty() {
            Matrix::zero(field, 0, words.len())
        } else {
            Matrix::from_rows(field, rows)
        };
        let rref = mat.rref();
        let pivot_row: HashMap<usize, usize> =
            rref.pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        for (i, w) in words.iter().enumerate() {
            if !pivot_row.contains_key(&i) {
                survivors.push((w.len(), s, w.clone()));
            }
        }
        blocks.insert(
            (s, t),
            Block {
                words,
                index,
                reduced: rref.reduced,
                pivot_row,
                global: HashMap::new(),
            },
        );
    }
    survivors.sort();
    Ok(LevelData { blocks, survivors })
}

impl Algebra {
    /// Builds the quotient algebra, certifying finite dimensionality.
    pub fn new(
        field: FieldSpec,
        quiver: Quiver,
        relations: Vec<Relation>,
        truncate: Option<usize>,
        length_bound: usize,
    ) -> Result<Algebra, Error> {
        let mut warnings = Vec::new();
        for (i, r) in relations.iter().enumerate() {
            if r.terms.iter().any(|(_, w)| w.len() <= 1) {
                warnings.push(format!(
                    "relation {} has a component of length 0 or 1; the ideal is not admissible",
                    i + 1
                ));
            }
        }
        if let Some(t) = truncate {
            if t <= 1 {
                warnings.push(format!(
                    "truncation at length {t} kills arrows or idempotents; the ideal is not admissible"
                ));
            }
        }
        let maxrel = relations
            .iter()
            .flat_map(|r| r.terms.iter().map(|(_, w)| w.len()))
            .max()
            .unwrap_or(0);
        let slack = maxrel.max(2);
        let mut level = 2;
        let data = loop {
            let data = compute_level(field, &quiver, &relations, truncate, level)?;
            let lmax = data.survivors.last().map_or(0, |(l, _, _)| *l);
            if lmax >= length_bound {
                return Err(Error::InfiniteDimensional {
                    bound: length_bound,
                });
            }
            let needed = lmax + 1 + slack;
            if needed <= level {
                break data;
            }
            level = needed.max(level + 1);
            if level > length_bound + slack {
                return Err(Error::InfiniteDimensional {
                    bound: length_bound,
                });
            }
        };
        let mut blocks = data.blocks;
        let basis: Vec<BasisPath> = data
            .survivors
            .iter()
            .map(|(_, s, w)| {
                let t = if w.is_empty() {
                    *s
                } else {
                    quiver.arrows[*w.last().unwrap()].target
                };
                BasisPath {
                    word: w.clone(),
                    source: *s,
                    target: t,
                }
            })
            .collect();
        let nilpotency = basis.iter().map(|b| b.len()).max().unwrap_or(0) + 1;
        let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); quiver.vertices.len()];
        for (i, b) in basis.iter().enumerate() {
            by_pair.entry((b.source, b.target)).or_default().push(i);
            by_source[b.source].push(i);
            let block = blocks.get_mut(&(b.source, b.target)).expect("block exists");
            let col = block.index[&b.word];
            block.global.insert(col, i);
        }
        let mut alg = Algebra {
            field,
            quiver,
            relations,
            truncate,
            basis,
            nilpotency,
            warnings,
            hash: String::new(),
            by_pair,
            by_source,
            blocks,
            arrow_action: Vec::new(),
        };
        let mut action: Vec<HashMap<usize, Vec<(usize, Scalar)>>> =
            vec![HashMap::new(); alg.quiver.arrows.len()];
        for (pi, b) in alg.basis.iter().enumerate() {
            for (ai, a) in alg.quiver.arrows.iter().enumerate() {
                if a.source == b.target {
                    let mut word = b.word.clone();
                    word.push(ai);
                    action[ai].insert(pi, alg.reduce_word(b.source, &word));
                }
            }
        }
        alg.arrow_action = action;
        alg.hash = {
            let mut h = Sha256::new();
            h.update(alg.canonical_text().as_bytes());
            let digest = h.finalize();
            let mut s = String::new();
            for byte in digest.iter().take(8) {
                write!(s, "{byte:02x}").unwrap();
            }
            s
        };
        Ok(alg)
    }

    /// Residue of a word in the path basis. Words of length at or above the
    /// certified nilpotency reduce to zero.
    pub fn reduce_word(&self, source: usize, word: &[usize]) -> Vec<(usize, Scalar)> {
        if word.len() >= self.nilpotency {
            return Vec::new();
        }
        let target = if word.is_empty() {
            source
        } else {
            self.quiver.arrows[*word.last().unwrap()].target
        };
        let block = self
            .blocks
            .get(&(source, target))
            .expect("block for reachable pair");
        let col = *block.index.get(word).expect("word below working length");
        match block.pivot_row.get(&col) {
            None => vec![(block.global[&col], self.field.one())],
            Some(&row) => {
                let mut out = Vec::new();
                for (c, &g) in block.global.iter() {
                    let e = block.reduced.get(row, *c);
                    if !e.is_zero() {
                        out.push((g, -e));
                    }
                }
                out.sort_by_key(|(g, _)| *g);
                out
            }
        }
    }

    /// Product of two basis classes: `first` applied first, then `second`.
    /// `None` when the endpoints do not compose.
    pub fn multiply(&self, second: usize, first: usize) -> Option<Vec<(usize, Scalar)>> {
        let f = &self.basis[first];
        let s = &self.basis[second];
        if f.target != s.source {
            return None;
        }
        let mut word = f.word.clone();
        word.extend_from_slice(&s.word);
        Some(self.reduce_word(f.source, &word))
    }

    /// Left action of an arrow on a basis class with matching target.
    pub fn arrow_act(&self, arrow: usize, basis_idx: usize) -> Option<&[(usize, Scalar)]> {
        self.arrow_action[arrow].get(&basis_idx).map(|v| v.as_slice())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn basis_with_source(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    pub fn basis_at_pair(&self, source: usize, target: usize) -> &[usize] {
        self.by_pair
            .get(&(source, target))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn hash(&self) -> &str {
        &self.hash
    }

    pub fn word_name(&self, word: &[usize], source: usize) -> String {
        if word.is_empty() {
            return format!("e_{}", self.quiver.vertices[source]);
        }
        word.iter()
            .rev()
            .map(|&a| self.quiver.arrows[a].name.clone())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Canonical structured-text form; also the hashing preimage.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "field {}", self.field).unwrap();
        writeln!(s, "vertices {}", self.quiver.vertices.join(" ")).unwrap();
        for a in &self.quiver.arrows {
            writeln!(
                s,
                "arrow {} {} {}",
                a.name, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            )
            .unwrap();
        }
        for r in &self.relations {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|(c, w)| format!("{}*{}", c, self.word_name(w, r.source)))
                .collect();
            writeln!(s, "relation {}", terms.join(" + ")).unwrap();
        }
        if let Some(t) = self.truncate {
            writeln!(s, "truncate {t}").unwrap();
        }
        for ((src, tgt), idxs) in &self.by_pair {
            let words: Vec<String> = idxs
                .iter()
                .map(|&i| self.word_name(&self.basis[i].word, self.basis[i].source))
                .collect();
            writeln!(
                s,
                "basis {} {} : {}",
                self.quiver.vertices[*src],
                self.quiver.vertices[*tgt],
                words.join(" | ")
            )
            .unwrap();
        }
        s
    }

    /// Parses the line-oriented algebra definition format.
    pub fn parse(text: &str) -> Result<Arc<Algebra>, Error> {
        Algebra::parse_with_bound(text, DEFAULT_LENGTH_BOUND)
    }

    pub fn parse_with_bound(text: &str, length_bound: usize) -> Result<Arc<Algebra>, Error> {
        let mut field: Option<FieldSpec> = None;
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut raw_relations: Vec<(usize, Vec<String>)> = Vec::new();
        let mut truncate: Option<usize> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let err = |msg: String| Error::Parse { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens[0] {
                "field" => {
                    if field.is_some() {
                        return Err(err("duplicate field directive".into()));
                    }
                    field = Some(match tokens.get(1) {
                        Some(&"Q") => FieldSpec::Q,
                        Some(&"Fp") => {
                            let p: u32 = tokens
                                .get(2)
                                .and_then(|t| t.parse().ok())
                                .ok_or_else(|| err("expected: field Fp <prime>".into()))?;
                            FieldSpec::fp(p)?
                        }
                        _ => return Err(err("expected: field Q | field Fp <prime>".into())),
                    });
                }
                "vertices" => {
                    if vertices.is_some() {
                        return Err(err("duplicate vertices directive".into()));
                    }
                    if tokens.len() < 2 {
                        return Err(err("expected at least one vertex".into()));
                    }
                    let vs: Vec<String> = tokens[1..].iter().map(|s| s.to_string()).collect();
                    for (i, v) in vs.iter().enumerate() {
                        if vs[..i].contains(v) {
                            return Err(err(format!("duplicate vertex {v}")));
                        }
                    }
                    vertices = Some(vs);
                }
                "arrow" => {
                    let vs = vertices
                        .as_ref()
                        .ok_or_else(|| err("arrow before vertices".into()))?;
                    if tokens.len() != 4 {
                        return Err(err("expected: arrow <name> <source> <target>".into()));
                    }
                    let name = tokens[1].to_string();
                    if arrows.iter().any(|a| a.name == name) {
                        return Err(err(format!("duplicate arrow {name}")));
                    }
                    let source = vs
                        .iter()
                        .position(|v| v == tokens[2])
                        .ok_or_else(|| Error::UnknownVertex(tokens[2].into()))?;
                    let target = vs
                        .iter()
                        .position(|v| v == tokens[3])
                        .ok_or_else(|| Error::UnknownVertex(tokens[3].into()))?;
                    arrows.push(Arrow {
                        name,
                        source,
                        target,
                    });
                }
                "relation" => {
                    raw_relations.push((line, tokens[1..].iter().map(|s| s.to_string()).collect()));
                }
                "truncate" => {
                    let t: usize = tokens
                        .get(1)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("expected: truncate <length>".into()))?;
                    truncate = Some(t);
                }
                other => return Err(err(format!("unknown directive {other}"))),
            }
        }
        let field = field.ok_or(Error::Parse {
            line: 0,
            msg: "missing field directive".into(),
        })?;
        let vertices = vertices.ok_or(Error::Parse {
            line: 0,
            msg: "missing vertices directive".into(),
        })?;
        let quiver = Quiver { vertices, arrows };
        let mut relations = Vec::new();
        for (line, tokens) in raw_relations {
            relations.push(parse_relation(&quiver, field, line, &tokens)?);
        }
        Ok(Arc::new(Algebra::new(
            field,
            quiver,
            relations,
            truncate,
            length_bound,
        )?))
    }
}

/// Parses "term [+ term | - term]*" where term is `[coeff*]a*b*c` in
/// composition order (rightmost arrow applies first).
fn parse_relation(
    quiver: &Quiver,
    field: FieldSpec,
    line: usize,
    tokens: &[String],
) -> Result<Relation, Error> {
    let err = |msg: String| Error::Parse { line, msg };
    if tokens.is_empty() {
        return Err(err("empty relation".into()));
    }
    let mut terms: Vec<(Scalar, Vec<usize>)> = Vec::new();
    let mut sign = field.one();
    let mut expect_term = true;
    for tok in tokens {
        match tok.as_str() {
            "+" | "-" => {
                if expect_term {
                    return Err(err("misplaced sign".into()));
                }
                sign = if tok == "+" {
                    field.one()
                } else {
                    -&field.one()
                };
                expect_term = true;
            }
            term => {
                if !expect_term {
                    return Err(err(format!("expected + or - before {term}")));
                }
                let parts: Vec<&str> = term.split('*').collect();
                let (coeff, names) = match field.parse_scalar(parts[0]) {
                    Ok(c) if parts.len() > 1 => (c, &parts[1..]),
                    _ => (field.one(), &parts[..]),
                };
                let mut ids = Vec::new();
                for name in names.iter().rev() {
                    let id = quiver
                        .arrow_index(name)
                        .ok_or_else(|| err(format!("unknown arrow {name}")))?;
                    ids.push(id);
                }
                for pair in ids.windows(2) {
                    if quiver.arrows[pair[0]].target != quiver.arrows[pair[1]].source {
                        return Err(Error::BadRelation(format!(
                            "line {line}: term {term} is not composable"
                        )));
                    }
                }
                terms.push((&coeff * &sign, ids));
                sign = field.one();
                expect_term = false;
            }
        }
    }
    if expect_term {
        return Err(err("dangling sign".into()));
    }
    let (s0, t0) = {
        let w = &terms[0].1;
        if w.is_empty() {
            return Err(Error::BadRelation(format!(
                "line {line}: empty path term"
            )));
        }
        (
            quiver.arrows[w[0]].source,
            quiver.arrows[*w.last().unwrap()].target,
        )
    };
    for (_, w) in &terms {
        let s = quiver.arrows[w[0]].source;
        let t = quiver.arrows[*w.last().unwrap()].target;
        if (s, t) != (s0, t0) {
            return Err(Error::BadRelation(format!(
                "line {line}: relation terms are not parallel"
            )));
        }
    }
    Ok(Relation {
        terms,
        source: s0,
        target: t0,
    })
}

/// The opposite algebra: arrows and relation words reversed, same vertex
/// order. Applying it twice reproduces the original algebra verbatim.
pub fn opposite_algebra(alg: &Algebra) -> Result<Arc<Algebra>, Error> {
    let quiver = Quiver {
        vertices: alg.quiver.vertices.clone(),
        arrows: alg
            .quiver
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                source: a.target,
                target: a.source,
            })
            .collect(),
    };
    let relations = alg
        .relations
        .iter()
        .map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), w.iter().rev().cloned().collect()))
                .collect(),
            source: r.target,
            target: r.source,
        })
        .collect();
    Ok(Arc::new(Algebra::new(
        alg.field,
        quiver,
        relations,
        alg.truncate,
        DEFAULT_LENGTH_BOUND,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn a2_text() -> &'static str {
        "field Q\nvertices 1 2\narrow a 1 2\n"
    }

    pub fn ex37_text() -> &'static str {
        // Oriented 3-cycle with the composite b*a killed.
        "field Q\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\nrelation b*a\n"
    }

    #[test]
    fn a2_basis() {
        let alg = Algebra::parse(a2_text()).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.basis_with_source(0).len(), 2); // e_1, a
        assert_eq!(alg.basis_with_source(1).len(), 1); // e_2
        assert_eq!(alg.nilpotency, 2);
        assert!(alg.warnings.is_empty());
    }

    #[test]
    fn three_cycle_with_composite_relation() {
        let alg = Algebra::parse(ex37_text()).unwrap();
        assert_eq!(alg.dim(), 9);
        let counts: Vec<usize> = (0..3).map(|v| alg.basis_with_source(v).len()).collect();
        assert_eq!(counts, vec![2, 4, 3]);
        // b*a reduces to zero, c*b survives.
        let (a, b, c) = (0, 1, 2);
        assert!(alg.reduce_word(0, &[a, b]).is_empty());
        let cb = alg.reduce_word(1, &[b, c]);
        assert_eq!(cb.len(), 1);
        assert!(cb[0].1.is_one());
        let _ = c;
    }

    #[test]
    fn truncated_three_cycle() {
        let text = "field Q\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\ntruncate 5\n";
        let alg = Algebra::parse(text).unwrap();
        assert_eq!(alg.dim(), 15);
        assert_eq!(alg.nilpotency, 5);
        let text4 = "field Fp 2\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\ntruncate 4\n";
        let alg4 = Algebra::parse(text4).unwrap();
        assert_eq!(alg4.dim(), 12);
    }

    #[test]
    fn unbounded_cycle_is_rejected() {
        let text = "field Q\nvertices 1\narrow x 1 1\n";
        match Algebra::parse_with_bound(text, 16) {
            Err(Error::InfiniteDimensional { .. }) => {}
            other => panic!("expected infinite dimensional, got {other:?}"),
        }
    }

    #[test]
    fn dual_numbers() {
        let text = "field Q\nvertices 1\narrow x 1 1\nrelation x*x\n";
        let alg = Algebra::parse(text).unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.nilpotency, 2);
        // x * x = 0, e * x = x.
        assert_eq!(alg.multiply(1, 1), Some(vec![]));
        let ex = alg.multiply(0, 1).unwrap();
        assert_eq!(ex.len(), 1);
        assert_eq!(ex[0].0, 1);
    }

    #[test]
    fn non_admissible_warning() {
        let text = "field Q\nvertices 1 2\narrow a 1 2\narrow b 1 2\nrelation a - b\n";
        let alg = Algebra::parse(text).unwrap();
        assert!(!alg.warnings.is_empty());
        assert_eq!(alg.dim(), 3); // e_1, e_2, and the identified arrow class
    }

    #[test]
    fn mixed_length_admissible_relation() {
        // Commutativity-style relation identifying a length-2 path with a
        // length-3 path; both sides die at the truncation stage.
        let text = "field Q\nvertices 1 2\narrow a 1 2\narrow b 2 1\nrelation b*a*b*a - a*b*a\ntruncate 5\n";
        let alg = Algebra::parse(text).unwrap();
        // words of length < 5 from each vertex, alternating arrows, minus
        // the identification of (ba)^2 with aba... one class collapses.
        assert!(alg.dim() > 0);
        assert!(alg.warnings.is_empty());
    }

    #[test]
    fn opposite_round_trip() {
        let alg = Algebra::parse(ex37_text()).unwrap();
        let op = opposite_algebra(&alg).unwrap();
        assert_eq!(op.dim(), 9);
        let opop = opposite_algebra(&op).unwrap();
        assert_eq!(opop.hash(), alg.hash());
        assert_eq!(opop.canonical_text(), alg.canonical_text());
        // Path counts by source flip to counts by target.
        let by_target = |a: &Algebra, v: usize| {
            a.basis.iter().filter(|b| b.target == v).count()
        };
        for v in 0..3 {
            assert_eq!(alg.basis_with_source(v).len(), by_target(&op, v));
        }
    }

    #[test]
    fn one_vertex_semisimple() {
        let alg = Algebra::parse("field Fp 5\nvertices z\n").unwrap();
        let op = opposite_algebra(&alg).unwrap();
        assert_eq!(alg.hash(), op.hash());
        assert_eq!(alg.dim(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Algebra::parse("vertices 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Algebra::parse("field Q\nvertices 1\narrow a 1 2\n"),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            Algebra::parse("field Fp 4\nvertices 1\n"),
            Err(Error::BadField(_))
        ));
        // Non-parallel relation terms.
        let bad = "field Q\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\nrelation b*a - a\n";
        assert!(matches!(Algebra::parse(bad), Err(Error::BadRelation(_))));
    }

    #[test]
    fn canonical_text_lists_basis() {
        let alg = Algebra::parse(a2_text()).unwrap();
        let text = alg.canonical_text();
        assert!(text.contains("basis 1 1 : e_1"));
        assert!(text.contains("basis 1 2 : a"));
        assert_eq!(alg.hash().len(), 16);
    }
}
