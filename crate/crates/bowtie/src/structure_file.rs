//! A line-based file format for the structures the tools work on.
//!
//! A file is a sequence of blocks separated by blank lines; `#` starts a
//! comment line. Every block opens with its kind and name, and later
//! blocks refer to earlier ones by name:
//!
//! ```text
//! lattice two
//! elements 0 1
//! le 0 1
//!
//! dframe both
//! plus two
//! minus two
//! relations twist
//! ```
//!
//! A `dframe` block seeds its consistency and totality relations with
//! `relations twist` or `relations trivial`, or lists `con a b` and
//! `tot a b` pairs outright; `drop con a b` removes a pair afterwards,
//! which is how deliberately broken fixtures are written. Adding bridge
//! lines (`maps identity`, or explicit `p a b` and `m a b`) or building
//! the whole thing with `from map <name>` turns the block into an
//! nd-frame. `map` blocks list `send a b` lines, `schedule` blocks carry
//! a flat lattice and `thread:` lines, and `term` blocks declare their
//! carriers and end in one cast expression.
//!
//! Rendering writes every block in a canonical explicit form, and
//! reparsing the result reconstructs an equal file.

use thiserror::Error;

use crate::blame::eval::CastTerm;
use crate::blame::parse::{parse_term, render_term};
use crate::blame::{BaseCarrier, TypeConfig};
use crate::dframe::ndframe::{ndframe_from_injection, NdFrame};
use crate::dframe::{canonical_relations, DFrame, RelationKind};
use crate::lvar::{freely_add_order, JoinSemilattice, Op, Schedule, ThresholdSet};
use crate::order::{build_lattice, FiniteLattice, LatticeMap};

/// Errors from reading a structure file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    /// A line failed to parse; numbering starts at one.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A block refers to a name no earlier block declared.
    #[error("unresolved reference: {0}")]
    Unresolved(String),
}

fn bad(line: usize, message: impl Into<String>) -> StructureError {
    StructureError::Parse {
        line,
        message: message.into(),
    }
}

/// A schedule with the lattice it runs over. Only flat lattices appear
/// in files, so the value list is kept for rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleBlock {
    /// The proper values, without the added bounds.
    pub values: Vec<String>,
    /// The flat semilattice over them.
    pub lattice: JoinSemilattice,
    /// Per-thread operations.
    pub schedule: Schedule,
}

/// A term with the carriers it is typed against.
#[derive(Debug, Clone, PartialEq)]
pub struct TermBlock {
    /// Carriers declared in the block.
    pub config: TypeConfig,
    /// The expression to evaluate.
    pub term: CastTerm,
}

/// One parsed block.
#[derive(Debug, Clone, PartialEq)]
pub enum Block {
    /// A finite lattice.
    Lattice(FiniteLattice),
    /// A d-frame without bridges.
    DFrame(DFrame),
    /// A d-frame with bridges.
    NdFrame(NdFrame),
    /// A lattice map.
    Map(LatticeMap),
    /// A schedule over a flat lattice.
    Schedule(ScheduleBlock),
    /// A cast term.
    Term(TermBlock),
}

impl Block {
    /// The block kind's keyword.
    pub fn kind(&self) -> &'static str {
        match self {
            Block::Lattice(_) => "lattice",
            Block::DFrame(_) => "dframe",
            Block::NdFrame(_) => "dframe",
            Block::Map(_) => "map",
            Block::Schedule(_) => "schedule",
            Block::Term(_) => "term",
        }
    }
}

/// An ordered list of named blocks.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StructureFile {
    /// Blocks with their declared names, in file order.
    pub blocks: Vec<(String, Block)>,
}

impl StructureFile {
    /// A named lattice, if declared.
    pub fn lattice(&self, name: &str) -> Option<&FiniteLattice> {
        self.blocks.iter().find_map(|(n, b)| match b {
            Block::Lattice(l) if n == name => Some(l),
            _ => None,
        })
    }

    /// A named map, if declared.
    pub fn map(&self, name: &str) -> Option<&LatticeMap> {
        self.blocks.iter().find_map(|(n, b)| match b {
            Block::Map(m) if n == name => Some(m),
            _ => None,
        })
    }

    /// The first lattice in the file.
    pub fn first_lattice(&self) -> Option<&FiniteLattice> {
        self.blocks.iter().find_map(|(_, b)| match b {
            Block::Lattice(l) => Some(l),
            _ => None,
        })
    }

    /// The first d-frame, bridged or not.
    pub fn first_dframe(&self) -> Option<&DFrame> {
        self.blocks.iter().find_map(|(_, b)| match b {
            Block::DFrame(d) => Some(d),
            Block::NdFrame(n) => Some(&n.base),
            _ => None,
        })
    }

    /// The first bridged d-frame.
    pub fn first_ndframe(&self) -> Option<&NdFrame> {
        self.blocks.iter().find_map(|(_, b)| match b {
            Block::NdFrame(n) => Some(n),
            _ => None,
        })
    }

    /// The first schedule.
    pub fn first_schedule(&self) -> Option<&ScheduleBlock> {
        self.blocks.iter().find_map(|(_, b)| match b {
            Block::Schedule(s) => Some(s),
            _ => None,
        })
    }

    /// The first term.
    pub fn first_term(&self) -> Option<&TermBlock> {
        self.blocks.iter().find_map(|(_, b)| match b {
            Block::Term(t) => Some(t),
            _ => None,
        })
    }
}

/// The lines of one block, each with its one-based file line number.
type BlockLines<'a> = Vec<(usize, &'a str)>;

/// Parses a structure file.
pub fn parse_structure_file(text: &str) -> Result<StructureFile, StructureError> {
    let mut file = StructureFile::default();
    let mut current: BlockLines = Vec::new();
    for (at, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !current.is_empty() {
                parse_block(&mut file, std::mem::take(&mut current))?;
            }
            continue;
        }
        current.push((at + 1, line));
    }
    if !current.is_empty() {
        parse_block(&mut file, current)?;
    }
    Ok(file)
}

fn parse_block(file: &mut StructureFile, lines: BlockLines) -> Result<(), StructureError> {
    let (at, head) = lines[0];
    let mut words = head.split_whitespace();
    let kind = words.next().unwrap();
    let name = words
        .next()
        .ok_or_else(|| bad(at, format!("{kind} needs a name")))?
        .to_string();
    if words.next().is_some() {
        return Err(bad(at, "trailing words after the block name"));
    }
    if file.blocks.iter().any(|(n, _)| *n == name) {
        return Err(bad(at, format!("duplicate block name {name}")));
    }
    let body = &lines[1..];
    let block = match kind {
        "lattice" => Block::Lattice(parse_lattice(&name, at, body)?),
        "dframe" => parse_dframe(file, &name, at, body)?,
        "map" => Block::Map(parse_map(file, at, body)?),
        "schedule" => Block::Schedule(parse_schedule(at, body)?),
        "term" => Block::Term(parse_term_block(at, body)?),
        other => return Err(bad(at, format!("unknown block kind {other}"))),
    };
    file.blocks.push((name, block));
    Ok(())
}

fn parse_lattice(name: &str, at: usize, body: &[(usize, &str)]) -> Result<FiniteLattice, StructureError> {
    let mut elements: Vec<&str> = Vec::new();
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    for &(ln, line) in body {
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "elements" => elements.extend(words),
            "le" => {
                let a = words.next().ok_or_else(|| bad(ln, "le needs two elements"))?;
                let b = words.next().ok_or_else(|| bad(ln, "le needs two elements"))?;
                pairs.push((a, b));
            }
            other => return Err(bad(ln, format!("unknown lattice line {other}"))),
        }
    }
    build_lattice(name, &elements, &pairs).map_err(|e| bad(at, e.to_string()))
}

fn parse_dframe(
    file: &StructureFile,
    name: &str,
    at: usize,
    body: &[(usize, &str)],
) -> Result<Block, StructureError> {
    let mut plus: Option<&FiniteLattice> = None;
    let mut minus: Option<&FiniteLattice> = None;
    let mut seed: Option<(usize, RelationKind)> = None;
    let mut from_map: Option<&LatticeMap> = None;
    let mut con_add: Vec<(usize, String, String)> = Vec::new();
    let mut tot_add: Vec<(usize, String, String)> = Vec::new();
    let mut con_drop: Vec<(usize, String, String)> = Vec::new();
    let mut tot_drop: Vec<(usize, String, String)> = Vec::new();
    let mut p_sends: Vec<(String, String)> = Vec::new();
    let mut m_sends: Vec<(String, String)> = Vec::new();
    let mut identity_maps = false;

    let resolve = |ln: usize, which: &str, id: &str| -> Result<&FiniteLattice, StructureError> {
        let _ = ln;
        let _ = which;
        file.lattice(id)
            .ok_or_else(|| StructureError::Unresolved(id.to_string()))
    };
    fn two(
        words: &mut std::str::SplitWhitespace,
        ln: usize,
        what: &str,
    ) -> Result<(String, String), StructureError> {
        let a = words
            .next()
            .ok_or_else(|| bad(ln, format!("{what} needs two elements")))?;
        let b = words
            .next()
            .ok_or_else(|| bad(ln, format!("{what} needs two elements")))?;
        Ok((a.to_string(), b.to_string()))
    }
    for &(ln, line) in body {
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        match keyword {
            "plus" => {
                let id = words.next().ok_or_else(|| bad(ln, "plus needs a lattice name"))?;
                plus = Some(resolve(ln, "plus", id)?);
            }
            "minus" => {
                let id = words.next().ok_or_else(|| bad(ln, "minus needs a lattice name"))?;
                minus = Some(resolve(ln, "minus", id)?);
            }
            "relations" => {
                let id = words.next().ok_or_else(|| bad(ln, "relations needs a kind"))?;
                let kind = RelationKind::parse(id)
                    .ok_or_else(|| bad(ln, format!("unknown relation kind {id}")))?;
                seed = Some((ln, kind));
            }
            "from" => {
                let sub = words.next();
                if sub != Some("map") {
                    return Err(bad(ln, "expected: from map <name>"));
                }
                let id = words.next().ok_or_else(|| bad(ln, "from map needs a name"))?;
                from_map = Some(
                    file.map(id)
                        .ok_or_else(|| StructureError::Unresolved(id.to_string()))?,
                );
            }
            "con" => {
                let (a, b) = two(&mut words, ln, "con")?;
                con_add.push((ln, a, b));
            }
            "tot" => {
                let (a, b) = two(&mut words, ln, "tot")?;
                tot_add.push((ln, a, b));
            }
            "drop" => {
                let which = words.next();
                let (a, b) = two(&mut words, ln, "drop")?;
                match which {
                    Some("con") => con_drop.push((ln, a, b)),
                    Some("tot") => tot_drop.push((ln, a, b)),
                    _ => return Err(bad(ln, "expected: drop con|tot <a> <b>")),
                }
            }
            "p" => {
                let (a, b) = two(&mut words, ln, "p")?;
                p_sends.push((a, b));
            }
            "m" => {
                let (a, b) = two(&mut words, ln, "m")?;
                m_sends.push((a, b));
            }
            "maps" => {
                if words.next() != Some("identity") {
                    return Err(bad(ln, "expected: maps identity"));
                }
                identity_maps = true;
            }
            other => return Err(bad(ln, format!("unknown dframe line {other}"))),
        }
    }

    if let Some(m) = from_map {
        let mut n = ndframe_from_injection(m).map_err(|e| bad(at, e.to_string()))?;
        n.base.name = name.to_string();
        return Ok(Block::NdFrame(n));
    }
    let plus = plus.ok_or_else(|| bad(at, "dframe needs a plus lattice"))?.clone();
    let minus = minus.ok_or_else(|| bad(at, "dframe needs a minus lattice"))?.clone();

    let mut frame = match seed {
        Some((ln, kind)) => {
            let mut d = canonical_relations(&plus, &minus, kind).map_err(|e| bad(ln, e.to_string()))?;
            d.name = name.to_string();
            d
        }
        None => DFrame {
            name: name.to_string(),
            con: vec![false; plus.len() * minus.len()],
            tot: vec![false; plus.len() * minus.len()],
            plus: plus.clone(),
            minus: minus.clone(),
        },
    };
    let set = |entries: &[(usize, String, String)],
               value: bool,
               to_con: bool,
               frame: &mut DFrame|
     -> Result<(), StructureError> {
        for (ln, a, b) in entries {
            let i = frame
                .plus
                .element_index(a)
                .map_err(|e| bad(*ln, e.to_string()))?;
            let j = frame
                .minus
                .element_index(b)
                .map_err(|e| bad(*ln, e.to_string()))?;
            let slot = i * frame.minus.len() + j;
            if to_con {
                frame.con[slot] = value;
            } else {
                frame.tot[slot] = value;
            }
        }
        Ok(())
    };
    set(&con_add, true, true, &mut frame)?;
    set(&tot_add, true, false, &mut frame)?;
    set(&con_drop, false, true, &mut frame)?;
    set(&tot_drop, false, false, &mut frame)?;

    if !identity_maps && p_sends.is_empty() && m_sends.is_empty() {
        return Ok(Block::DFrame(frame));
    }
    let (p, m) = if identity_maps {
        if frame.plus != frame.minus {
            return Err(bad(at, "maps identity needs equal plus and minus"));
        }
        (
            LatticeMap::identity(&frame.minus),
            LatticeMap::identity(&frame.plus),
        )
    } else {
        fn borrow(sends: &[(String, String)]) -> Vec<(&str, &str)> {
            sends.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
        }
        let p = LatticeMap::from_pairs(frame.minus.clone(), frame.plus.clone(), &borrow(&p_sends))
            .map_err(|e| bad(at, e.to_string()))?;
        let m = LatticeMap::from_pairs(frame.plus.clone(), frame.minus.clone(), &borrow(&m_sends))
            .map_err(|e| bad(at, e.to_string()))?;
        (p, m)
    };
    Ok(Block::NdFrame(NdFrame { base: frame, p, m }))
}

fn parse_map(
    file: &StructureFile,
    at: usize,
    body: &[(usize, &str)],
) -> Result<LatticeMap, StructureError> {
    let mut source: Option<&FiniteLattice> = None;
    let mut target: Option<&FiniteLattice> = None;
    let mut sends: Vec<(String, String)> = Vec::new();
    for &(ln, line) in body {
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "source" => {
                let id = words.next().ok_or_else(|| bad(ln, "source needs a lattice name"))?;
                source = Some(
                    file.lattice(id)
                        .ok_or_else(|| StructureError::Unresolved(id.to_string()))?,
                );
            }
            "target" => {
                let id = words.next().ok_or_else(|| bad(ln, "target needs a lattice name"))?;
                target = Some(
                    file.lattice(id)
                        .ok_or_else(|| StructureError::Unresolved(id.to_string()))?,
                );
            }
            "send" => {
                let a = words.next().ok_or_else(|| bad(ln, "send needs two elements"))?;
                let b = words.next().ok_or_else(|| bad(ln, "send needs two elements"))?;
                sends.push((a.to_string(), b.to_string()));
            }
            other => return Err(bad(ln, format!("unknown map line {other}"))),
        }
    }
    let source = source.ok_or_else(|| bad(at, "map needs a source"))?.clone();
    let target = target.ok_or_else(|| bad(at, "map needs a target"))?.clone();
    let borrowed: Vec<(&str, &str)> = sends.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    LatticeMap::from_pairs(source, target, &borrowed).map_err(|e| bad(at, e.to_string()))
}

fn parse_schedule(at: usize, body: &[(usize, &str)]) -> Result<ScheduleBlock, StructureError> {
    let mut values: Vec<String> = Vec::new();
    let mut lattice: Option<JoinSemilattice> = None;
    let mut threads: Vec<Vec<Op>> = Vec::new();
    for &(ln, line) in body {
        if let Some(rest) = line.strip_prefix("lattice") {
            let mut words = rest.split_whitespace();
            if words.next() != Some("free") {
                return Err(bad(ln, "expected: lattice free <values>"));
            }
            values = words.map(str::to_string).collect();
            if values.is_empty() {
                return Err(bad(ln, "lattice free needs at least one value"));
            }
            let refs: Vec<&str> = values.iter().map(String::as_str).collect();
            lattice = Some(freely_add_order(&refs).map_err(|e| bad(ln, e.to_string()))?);
        } else if let Some(rest) = line.strip_prefix("thread:") {
            let lat = lattice
                .as_ref()
                .ok_or_else(|| bad(ln, "thread before its lattice"))?;
            let mut ops = Vec::new();
            for op in rest.split(';') {
                let op = op.trim();
                if op.is_empty() {
                    continue;
                }
                if let Some(v) = op.strip_prefix("put ") {
                    let idx = lat
                        .element_index(v.trim())
                        .map_err(|e| bad(ln, e.to_string()))?;
                    ops.push(Op::Put(idx));
                } else if let Some(ts) = op.strip_prefix("get ") {
                    let mut elems = Vec::new();
                    for t in ts.split(',') {
                        elems.push(
                            lat.element_index(t.trim())
                                .map_err(|e| bad(ln, e.to_string()))?,
                        );
                    }
                    let set = ThresholdSet::new(lat, &elems).map_err(|e| bad(ln, e.to_string()))?;
                    ops.push(Op::Get(set));
                } else {
                    return Err(bad(ln, format!("unknown operation {op}")));
                }
            }
            threads.push(ops);
        } else {
            return Err(bad(ln, "expected a lattice or thread line"));
        }
    }
    let lattice = lattice.ok_or_else(|| bad(at, "schedule needs a lattice"))?;
    Ok(ScheduleBlock {
        values,
        lattice,
        schedule: Schedule { threads },
    })
}

fn parse_term_block(at: usize, body: &[(usize, &str)]) -> Result<TermBlock, StructureError> {
    let mut carriers: Vec<BaseCarrier> = Vec::new();
    let mut expr = String::new();
    let mut expr_line = at;
    for &(ln, line) in body {
        if let Some(rest) = line.strip_prefix("carrier ") {
            if !expr.is_empty() {
                return Err(bad(ln, "carrier lines belong before the term"));
            }
            let (name, values) = rest
                .split_once(':')
                .ok_or_else(|| bad(ln, "expected: carrier <name>: <values>"))?;
            let values: Vec<&str> = values.split_whitespace().collect();
            if values.is_empty() {
                return Err(bad(ln, "a carrier needs values"));
            }
            carriers.push(BaseCarrier::new(name.trim(), &values));
        } else {
            if expr.is_empty() {
                expr_line = ln;
            }
            expr.push_str(line);
            expr.push(' ');
        }
    }
    if carriers.is_empty() {
        return Err(bad(at, "term needs at least one carrier"));
    }
    let config = TypeConfig::new(carriers);
    let term = parse_term(&config, &expr).map_err(|e| bad(expr_line, e.to_string()))?;
    Ok(TermBlock { config, term })
}

/// Writes a file back in canonical form: lattices as their covering
/// pairs, relations and bridges spelled out, everything else as it was
/// declared.
pub fn render_structure_file(file: &StructureFile) -> String {
    let mut out = String::new();
    for (name, block) in &file.blocks {
        if !out.is_empty() {
            out.push('\n');
        }
        match block {
            Block::Lattice(l) => render_lattice(&mut out, name, l),
            Block::DFrame(d) => {
                out.push_str(&format!("dframe {name}\n"));
                render_dframe_body(&mut out, d);
            }
            Block::NdFrame(n) => {
                out.push_str(&format!("dframe {name}\n"));
                render_dframe_body(&mut out, &n.base);
                for b in 0..n.base.minus.len() {
                    out.push_str(&format!(
                        "p {} {}\n",
                        n.base.minus.element_name(b),
                        n.base.plus.element_name(n.p(b))
                    ));
                }
                for a in 0..n.base.plus.len() {
                    out.push_str(&format!(
                        "m {} {}\n",
                        n.base.plus.element_name(a),
                        n.base.minus.element_name(n.m(a))
                    ));
                }
            }
            Block::Map(m) => {
                out.push_str(&format!("map {name}\n"));
                out.push_str(&format!("source {}\n", m.source.name()));
                out.push_str(&format!("target {}\n", m.target.name()));
                for a in 0..m.source.len() {
                    out.push_str(&format!(
                        "send {} {}\n",
                        m.source.element_name(a),
                        m.target.element_name(m.apply(a))
                    ));
                }
            }
            Block::Schedule(s) => {
                out.push_str(&format!("schedule {name}\n"));
                out.push_str(&format!("lattice free {}\n", s.values.join(" ")));
                for thread in &s.schedule.threads {
                    let ops: Vec<String> = thread
                        .iter()
                        .map(|op| match op {
                            Op::Put(v) => format!("put {}", s.lattice.element_name(*v)),
                            Op::Get(ts) => {
                                let names: Vec<&str> = ts
                                    .elements()
                                    .iter()
                                    .map(|&t| s.lattice.element_name(t))
                                    .collect();
                                format!("get {}", names.join(","))
                            }
                        })
                        .collect();
                    out.push_str(&format!("thread: {}\n", ops.join("; ")));
                }
            }
            Block::Term(t) => {
                out.push_str(&format!("term {name}\n"));
                for c in &t.config.carriers {
                    out.push_str(&format!("carrier {}: {}\n", c.name, c.values.join(" ")));
                }
                out.push_str(&render_term(&t.config, &t.term));
                out.push('\n');
            }
        }
    }
    out
}

fn render_lattice(out: &mut String, name: &str, l: &FiniteLattice) {
    out.push_str(&format!("lattice {name}\n"));
    let names: Vec<&str> = l.element_names().iter().map(String::as_str).collect();
    out.push_str(&format!("elements {}\n", names.join(" ")));
    // Covering pairs only: a <= b strictly with nothing strictly between.
    for a in 0..l.len() {
        for b in 0..l.len() {
            if a == b || !l.leq(a, b) {
                continue;
            }
            let covered = (0..l.len())
                .any(|c| c != a && c != b && l.leq(a, c) && l.leq(c, b));
            if !covered {
                out.push_str(&format!("le {} {}\n", names[a], names[b]));
            }
        }
    }
}

fn render_dframe_body(out: &mut String, d: &DFrame) {
    out.push_str(&format!("plus {}\n", d.plus.name()));
    out.push_str(&format!("minus {}\n", d.minus.name()));
    for a in 0..d.plus.len() {
        for b in 0..d.minus.len() {
            if d.con(a, b) {
                out.push_str(&format!(
                    "con {} {}\n",
                    d.plus.element_name(a),
                    d.minus.element_name(b)
                ));
            }
        }
    }
    for a in 0..d.plus.len() {
        for b in 0..d.minus.len() {
            if d.tot(a, b) {
                out.push_str(&format!(
                    "tot {} {}\n",
                    d.plus.element_name(a),
                    d.minus.element_name(b)
                ));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dframe::check_dframe;
    use crate::lvar::determinism_check;
    use crate::order::fixtures::chain;
    use crate::order::{find_isomorphism, Structure};

    const TWO_TWIST: &str = "\
lattice two
elements 0 1
le 0 1

dframe both
plus two
minus two
relations twist
maps identity
";

    #[test]
    fn a_lattice_block_parses_and_round_trips() {
        let file = parse_structure_file("lattice two\nelements 0 1\nle 0 1\n").unwrap();
        let l = file.first_lattice().unwrap();
        assert_eq!(l.name(), "two");
        assert!(l.same_structure(&chain(2)));
        let again = parse_structure_file(&render_structure_file(&file)).unwrap();
        assert_eq!(file, again);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a comment\n\nlattice two\n# inside\nelements 0 1\nle 0 1\n\n";
        assert!(parse_structure_file(text).unwrap().first_lattice().is_some());
    }

    #[test]
    fn a_twist_dframe_block_passes_its_axioms() {
        let file = parse_structure_file(TWO_TWIST).unwrap();
        let n = file.first_ndframe().unwrap();
        assert_eq!(n.base.name, "both");
        assert!(check_dframe(&n.base).passed());
        let again = parse_structure_file(&render_structure_file(&file)).unwrap();
        assert_eq!(file, again);
    }

    #[test]
    fn dropping_a_pair_breaks_the_first_axiom() {
        let text = format!("{TWO_TWIST}drop con 0 1\n");
        let file = parse_structure_file(&text).unwrap();
        let d = &file.first_ndframe().unwrap().base;
        let report = check_dframe(d);
        assert!(report.first_failure().unwrap().name.starts_with("axiom1"));
    }

    #[test]
    fn unresolved_references_are_their_own_error() {
        let text = "dframe d\nplus ghost\nminus ghost\n";
        assert_eq!(
            parse_structure_file(text).unwrap_err(),
            StructureError::Unresolved("ghost".to_string())
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_structure_file("lattice two\nelements 0 1\nle 0\n").unwrap_err();
        assert_eq!(
            err,
            StructureError::Parse {
                line: 3,
                message: "le needs two elements".to_string()
            }
        );
    }

    #[test]
    fn four_from_hasse_pairs_matches_the_twist_of_two() {
        let text = "\
lattice four
elements bot f t top
le bot f
le bot t
le f top
le t top
";
        let file = parse_structure_file(text).unwrap();
        let four = file.first_lattice().unwrap();
        let twist = crate::bilattice::twist_construct(&chain(2), &chain(2));
        let pairs = twist.pairs();
        let slot = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
        let mut meet = Vec::new();
        let mut join = Vec::new();
        for &x in &pairs {
            for &y in &pairs {
                meet.push(slot(twist.meet(x, y)));
                join.push(slot(twist.join(x, y)));
            }
        }
        let twist_info = Structure::new(pairs.len())
            .with_binary("meet", meet)
            .with_binary("join", join);
        let mut four_meet = Vec::new();
        let mut four_join = Vec::new();
        for a in 0..four.len() {
            for b in 0..four.len() {
                four_meet.push(four.meet(a, b));
                four_join.push(four.join(a, b));
            }
        }
        let four_info = Structure::new(four.len())
            .with_binary("meet", four_meet)
            .with_binary("join", four_join);
        assert!(find_isomorphism(&four_info, &twist_info).is_some());
    }

    #[test]
    fn an_injection_built_dframe_parses_from_a_map() {
        let text = "\
lattice two
elements 0 1
le 0 1

lattice three
elements 0 1 2
le 0 1
le 1 2

map into
source two
target three
send 0 0
send 1 2

dframe skew
from map into
";
        let file = parse_structure_file(text).unwrap();
        let n = file.first_ndframe().unwrap();
        assert_eq!(n.base.name, "skew");
        assert!(crate::dframe::ndframe::check_ndframe(n).passed());
        let again = parse_structure_file(&render_structure_file(&file)).unwrap();
        assert_eq!(file, again);
    }

    #[test]
    fn schedules_parse_and_run() {
        let text = "\
schedule quiet
lattice free 3 5
thread: put 3
thread: get 3,5
";
        let file = parse_structure_file(text).unwrap();
        let s = file.first_schedule().unwrap();
        assert_eq!(s.schedule.op_count(), 2);
        let report = determinism_check(&s.lattice, &s.schedule);
        assert!(report.passed(), "{report}");
        let again = parse_structure_file(&render_structure_file(&file)).unwrap();
        assert_eq!(file, again);
    }

    #[test]
    fn terms_parse_with_their_carriers() {
        let text = "\
term reject
carrier int: -1 0 1 2
(cast {int: 0,1,2} int p
  (value -1))
";
        let file = parse_structure_file(text).unwrap();
        let t = file.first_term().unwrap();
        let out = crate::blame::eval::eval_cast(&t.config, &t.term).unwrap();
        assert_eq!(
            out,
            crate::blame::eval::Outcome::Blame(crate::blame::BlameLabel::positive("p"))
        );
        let again = parse_structure_file(&render_structure_file(&file)).unwrap();
        assert_eq!(file, again);
    }

    #[test]
    fn duplicate_block_names_are_rejected() {
        let text = "lattice a\nelements 0\n\nlattice a\nelements 0\n";
        assert!(matches!(
            parse_structure_file(text),
            Err(StructureError::Parse { line: 4, .. })
        ));
    }
}
