//! Line-oriented text formats for complexes, actions and bundles.
//!
//! ```text
//! complex octahedron dim=2
//! simplex 1 2 0          # orientation is the listed order
//! group Z2 order=2
//! 0 1                    # multiplication table rows
//! 1 0
//! act 1 0 -> 5
//! edge 0 1 = 1/8         # connection on the edge traversed 0 -> 1
//! phase 1 0 = 0/1
//! chern 1 2 0 = 0        # integer on the face in the listed orientation
//! ```
//!
//! Several sections may share one file or be spread over several; each parser
//! skips the other sections' lines. `#` starts a comment. Missing `edge`,
//! `phase` and `chern` entries default to zero, and `act` lines for the
//! identity may be omitted.

use std::collections::HashMap;
use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::groupoid::{FiniteGroup, GroupAction};
use crate::prequantize::DiscreteBundle;
use crate::rational::{parse_q, Phase, Q};
use crate::report::q_string;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Loc {
    file: usize,
    line: usize,
}

/// The parsed, not yet validated contents of one or more input files.
#[derive(Debug, Default, Clone)]
pub struct Document {
    files: Vec<String>,
    complex: Option<(Loc, String, usize)>,
    simplices: Vec<(Loc, Vec<usize>)>,
    group: Option<(Loc, String, usize)>,
    rows: Vec<(Loc, Vec<usize>)>,
    acts: Vec<(Loc, usize, usize, usize)>,
    edges: Vec<(Loc, [usize; 2], Q)>,
    phases: Vec<(Loc, usize, usize, Q)>,
    cherns: Vec<(Loc, [usize; 3], i64)>,
}

fn int(tok: &str) -> Result<usize, String> {
    tok.parse().map_err(|_| format!("expected a nonnegative integer, found `{tok}`"))
}

fn keyed<'a>(tok: &'a str, key: &str) -> Result<&'a str, String> {
    tok.strip_prefix(key).and_then(|r| r.strip_prefix('=')).ok_or_else(|| format!("expected `{key}=<n>`, found `{tok}`"))
}

fn rational(tok: &str) -> Result<Q, String> {
    parse_q(tok).map_err(|e| format!("invalid rational `{}`", e.0))
}

/// Splits `a b c = value` into the vertex list and the value token.
fn assignment<'a>(toks: &[&'a str], arity: usize) -> Result<(Vec<usize>, &'a str), String> {
    if toks.len() != arity + 2 || toks[arity] != "=" {
        return Err(format!("expected {arity} indices, `=` and a value"));
    }
    let idx = toks[..arity].iter().map(|t| int(t)).collect::<Result<_, _>>()?;
    Ok((idx, toks[arity + 1]))
}

/// Sign of the permutation sorting `v`.
fn permutation_sign(v: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                sign = -sign;
            }
        }
    }
    sign
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `path` and adds its contents.
    pub fn add_file(&mut self, path: &Path) -> Result<(), Error> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse { file: name.clone(), line: 0, message: e.to_string() })?;
        self.add_text(&name, &text)
    }

    pub fn from_text(file: &str, text: &str) -> Result<Self, Error> {
        let mut d = Self::new();
        d.add_text(file, text)?;
        Ok(d)
    }

    pub fn add_text(&mut self, file: &str, text: &str) -> Result<(), Error> {
        let fi = self.files.len();
        self.files.push(file.to_string());
        for (n, raw) in text.lines().enumerate() {
            let loc = Loc { file: fi, line: n + 1 };
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            self.line(loc, &toks).map_err(|message| self.error(loc, message))?;
        }
        Ok(())
    }

    fn line(&mut self, loc: Loc, toks: &[&str]) -> Result<(), String> {
        let rest = &toks[1..];
        match toks[0] {
            "complex" => {
                if self.complex.is_some() {
                    return Err("second `complex` header".into());
                }
                let [name, dim] = rest else { return Err("expected `complex <name> dim=<d>`".into()) };
                self.complex = Some((loc, name.to_string(), int(keyed(dim, "dim")?)?));
            }
            "simplex" => {
                if !(1..=3).contains(&rest.len()) {
                    return Err("a simplex has one to three vertices".into());
                }
                self.simplices.push((loc, rest.iter().map(|t| int(t)).collect::<Result<_, _>>()?));
            }
            "group" => {
                if self.group.is_some() {
                    return Err("second `group` header".into());
                }
                let [name, order] = rest else { return Err("expected `group <name> order=<n>`".into()) };
                let order = int(keyed(order, "order")?)?;
                if order == 0 {
                    return Err("a group has at least one element".into());
                }
                self.group = Some((loc, name.to_string(), order));
            }
            "act" => {
                let [g, v, "->", w] = rest else { return Err("expected `act <g> <v> -> <w>`".into()) };
                self.acts.push((loc, int(g)?, int(v)?, int(w)?));
            }
            "edge" => {
                let (v, val) = assignment(rest, 2)?;
                self.edges.push((loc, [v[0], v[1]], rational(val)?));
            }
            "phase" => {
                let (v, val) = assignment(rest, 2)?;
                self.phases.push((loc, v[0], v[1], rational(val)?));
            }
            "chern" => {
                let (v, val) = assignment(rest, 3)?;
                let k = val.parse::<i64>().map_err(|_| format!("expected an integer, found `{val}`"))?;
                self.cherns.push((loc, [v[0], v[1], v[2]], k));
            }
            first if first.bytes().all(|b| b.is_ascii_digit()) => {
                let Some((_, _, order)) = self.group else {
                    return Err("table row outside a `group` section".into());
                };
                if self.rows.len() >= order {
                    return Err(format!("more than {order} table rows"));
                }
                self.rows.push((loc, toks.iter().map(|t| int(t)).collect::<Result<_, _>>()?));
            }
            other => return Err(format!("unknown keyword `{other}`")),
        }
        Ok(())
    }

    fn error(&self, loc: Loc, message: impl Into<String>) -> Error {
        Error::Parse { file: self.files[loc.file].clone(), line: loc.line, message: message.into() }
    }

    fn wrap(&self, loc: Loc, e: Error) -> Error {
        match e {
            Error::Parse { .. } => e,
            other => self.error(loc, other.to_string()),
        }
    }

    pub fn has_group(&self) -> bool {
        self.group.is_some()
    }

    pub fn has_bundle(&self) -> bool {
        !(self.edges.is_empty() && self.phases.is_empty() && self.cherns.is_empty())
    }

    pub fn complex(&self) -> Result<SimplicialComplex, Error> {
        let Some((loc, name, dim)) = &self.complex else {
            return Err(Error::Validation("no `complex` header".into()));
        };
        let n = self.simplices.iter().flat_map(|(_, s)| s.iter().map(|v| v + 1)).max().unwrap_or(0);
        let simplices: Vec<Vec<usize>> = self.simplices.iter().map(|(_, s)| s.clone()).collect();
        let cx = SimplicialComplex::new(name, n, &simplices).map_err(|e| self.wrap(*loc, e))?;
        if cx.dimension() != *dim {
            return Err(self.error(*loc, format!("declared dim={dim} but the simplices span dimension {}", cx.dimension())));
        }
        Ok(cx)
    }

    /// The action, or the trivial group action when no `group` section exists.
    pub fn action(&self) -> Result<GroupAction, Error> {
        let cx = self.complex()?;
        let Some((loc, name, order)) = &self.group else {
            return Ok(GroupAction::trivial(FiniteGroup::trivial(), cx));
        };
        if self.rows.len() != *order {
            return Err(self.error(*loc, format!("expected {order} table rows, found {}", self.rows.len())));
        }
        let table: Vec<Vec<usize>> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        let group = FiniteGroup::from_table(name, table).map_err(|e| self.wrap(*loc, e))?;
        let nv = cx.n_vertices();
        let mut map: Vec<Vec<Option<usize>>> = vec![vec![None; nv]; *order];
        let e = group.identity();
        for v in 0..nv {
            map[e][v] = Some(v);
        }
        for &(l, g, v, w) in &self.acts {
            if g >= *order || v >= nv || w >= nv {
                return Err(self.error(l, "index out of range"));
            }
            if g == e {
                if w != v {
                    return Err(self.error(l, "the identity must act trivially"));
                }
                continue;
            }
            if map[g][v].replace(w).is_some() {
                return Err(self.error(l, format!("duplicate image for {g}·{v}")));
            }
        }
        let mut vertex_map = Vec::with_capacity(*order);
        for (g, row) in map.into_iter().enumerate() {
            let row: Option<Vec<usize>> = row.into_iter().collect();
            vertex_map.push(row.ok_or_else(|| self.error(*loc, format!("element {g} does not act on every vertex")))?);
        }
        let first_act = self.acts.first().map_or(*loc, |a| a.0);
        GroupAction::new(group, cx, vertex_map).map_err(|e| self.wrap(first_act, e))
    }

    /// The bundle over `act`, validated against the cocycle law.
    pub fn bundle(&self, act: &GroupAction) -> Result<DiscreteBundle, Error> {
        let cx = act.complex();
        let nv = cx.n_vertices();
        let mut b = DiscreteBundle::trivial(act);
        let mut seen: HashMap<(u8, usize), Loc> = HashMap::new();
        let mut claim = |kind: u8, idx: usize, loc: Loc| -> Result<(), Error> {
            if seen.insert((kind, idx), loc).is_some() {
                return Err(self.error(loc, "duplicate entry"));
            }
            Ok(())
        };
        for &(loc, [u, v], val) in &self.edges {
            let (i, sign) = cx.oriented_edge(u, v).ok_or_else(|| self.error(loc, format!("[{u}, {v}] is not an edge")))?;
            claim(0, i, loc)?;
            b.connection[i] = Phase::new(val * Q::from_integer(sign));
        }
        for &(loc, g, v, val) in &self.phases {
            if g >= act.group().order() || v >= nv {
                return Err(self.error(loc, "index out of range"));
            }
            claim(1, g * nv + v, loc)?;
            b.equivariance[g * nv + v] = Phase::new(val);
        }
        for &(loc, f, k) in &self.cherns {
            let mut sorted = f;
            sorted.sort_unstable();
            let i = cx.face_index(sorted).ok_or_else(|| self.error(loc, format!("{f:?} is not a face")))?;
            claim(2, i, loc)?;
            b.chern[i] = k * permutation_sign(&f);
        }
        let first = self.phases.first().map(|p| p.0).or(self.edges.first().map(|e| e.0));
        match b.validate(act) {
            Ok(()) => Ok(b),
            Err(e) => Err(match first {
                Some(loc) => self.wrap(loc, e),
                None => e,
            }),
        }
    }
}

pub fn parse_complex(file: &str, text: &str) -> Result<SimplicialComplex, Error> {
    Document::from_text(file, text)?.complex()
}

pub fn parse_action(file: &str, text: &str) -> Result<GroupAction, Error> {
    Document::from_text(file, text)?.action()
}

/// Loads and merges several files.
pub fn load(paths: &[impl AsRef<Path>]) -> Result<Document, Error> {
    let mut d = Document::new();
    for p in paths {
        d.add_file(p.as_ref())?;
    }
    Ok(d)
}

pub fn emit_complex(cx: &SimplicialComplex) -> String {
    let mut s = format!("complex {} dim={}\n", cx.name(), cx.dimension());
    for v in 0..cx.n_vertices() {
        s += &format!("simplex {v}\n");
    }
    for [a, b] in cx.edges() {
        s += &format!("simplex {a} {b}\n");
    }
    for (i, &[a, b, c]) in cx.faces().iter().enumerate() {
        if cx.face_orientation(i) > 0 {
            s += &format!("simplex {a} {b} {c}\n");
        } else {
            s += &format!("simplex {b} {a} {c}\n");
        }
    }
    s
}

/// The `group` section and every non-identity `act` line.
pub fn emit_action(act: &GroupAction) -> String {
    let g = act.group();
    let mut s = format!("group {} order={}\n", g.name(), g.order());
    for row in g.table() {
        s += &row.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        s.push('\n');
    }
    for e in 0..g.order() {
        if e == g.identity() {
            continue;
        }
        for v in 0..act.complex().n_vertices() {
            s += &format!("act {e} {v} -> {}\n", act.act(e, v));
        }
    }
    s
}

/// Every entry of the bundle, edges and faces in sorted vertex order.
pub fn emit_bundle(act: &GroupAction, b: &DiscreteBundle) -> String {
    let cx = act.complex();
    let mut s = String::new();
    for (i, [u, v]) in cx.edges().iter().enumerate() {
        s += &format!("edge {u} {v} = {}\n", q_string(&b.connection[i].lift()));
    }
    let nv = cx.n_vertices();
    for g in 0..act.group().order() {
        for v in 0..nv {
            s += &format!("phase {g} {v} = {}\n", q_string(&b.equivariance[g * nv + v].lift()));
        }
    }
    for (i, [x, y, z]) in cx.faces().iter().enumerate() {
        s += &format!("chern {x} {y} {z} = {}\n", b.chern[i]);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{octahedron_antipodal, octahedron_rotation};
    use crate::generate::random_bundle;
    use rand::SeedableRng;

    #[test]
    fn round_trip_is_byte_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for act in [octahedron_rotation(), octahedron_antipodal()] {
            let b = random_bundle(&act, &mut rng);
            let text = emit_complex(act.complex()) + &emit_action(&act) + &emit_bundle(&act, &b);
            let doc = Document::from_text("mem", &text).unwrap();
            let act2 = doc.action().unwrap();
            let b2 = doc.bundle(&act2).unwrap();
            assert_eq!(b2, b);
            let again = emit_complex(act2.complex()) + &emit_action(&act2) + &emit_bundle(&act2, &b2);
            assert_eq!(again, text);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "complex c dim=1\nsimplex 0 1\nsimplex 1 x\n";
        match parse_complex("c.txt", text) {
            Err(Error::Parse { file, line, .. }) => assert_eq!((file.as_str(), line), ("c.txt", 3)),
            other => panic!("{other:?}"),
        }
        let text = "complex c dim=2\nsimplex 0 1\n";
        assert!(matches!(parse_complex("c", text), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("c", "complex e dim=0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn reversed_listing_negates() {
        let text = "complex c dim=2\nsimplex 0 1 2\nedge 1 0 = 1/4\nchern 1 0 2 = 1\n";
        let doc = Document::from_text("c", text).unwrap();
        let act = doc.action().unwrap();
        let b = doc.bundle(&act).unwrap();
        assert_eq!(b.connection[0], Phase::new(crate::rational::q(3, 4)));
        assert_eq!(b.chern[0], -1);
    }

    #[test]
    fn bad_phase_table_is_rejected() {
        let act = octahedron_rotation();
        let text = emit_complex(act.complex()) + &emit_action(&act) + "phase 1 0 = 1/3\n";
        let doc = Document::from_text("b", &text).unwrap();
        assert!(doc.bundle(&doc.action().unwrap()).is_err());
    }
}
