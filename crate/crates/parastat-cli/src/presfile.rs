//! The line-oriented presentation interchange format.
//!
//! ```text
//! algebra pbg:1
//! flavor plain
//! generator b1+ parity=odd
//! generator g parity=even
//! relation g*g - 1
//! coproduct b1+ = b1+ ox 1 + g ox b1+
//! counit b1+ = 0
//! antipode b1+ = b1+*g
//! ```
//!
//! `algebra` comes first; `generator` lines fix the alphabet and its order;
//! `relation` lines and the optional structure-map lines use the expression
//! grammar.  Blank lines and `#` comments are ignored.  Structure maps are
//! all-or-nothing: if any map line appears, every generator needs all three.

use std::fmt;

use parastat::kernel::{Alphabet, Element, Generator, Sign, TensorElement};
use parastat::quotient::Presentation;
use parastat::scalar::{self, Scalar};
use parastat::superhopf::{Flavor, StructureMaps};

use crate::ast;
use crate::eval::{self, Value};

/// A presentation plus, when the source provides them, its structure maps.
#[derive(Debug)]
pub struct LoadedAlgebra {
    pub presentation: Presentation,
    pub maps: Option<StructureMaps>,
}

#[derive(Debug, Clone)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn generator_from_token(token: &str) -> Option<Generator> {
    match token {
        "g" => return Some(Generator::group_like_g()),
        "K+" => return Some(Generator::k(Sign::Plus)),
        "K-" => return Some(Generator::k(Sign::Minus)),
        _ => {}
    }
    let mut chars = token.chars();
    let family = chars.next()?;
    let body: String = chars.collect();
    let (digits, sign) = body.split_at(body.len().checked_sub(1)?);
    let index: u32 = digits.parse().ok()?;
    let sign = match sign {
        "+" => Sign::Plus,
        "-" => Sign::Minus,
        _ => return None,
    };
    match family {
        'b' => Some(Generator::boson(index, sign)),
        'f' => Some(Generator::fermion(index, sign)),
        _ => None,
    }
}

fn parse_element(src: &str, p: &Presentation, line: usize) -> Result<Element, FormatError> {
    let ast = ast::parse(src).map_err(|e| err(line, e.to_string()))?;
    match eval::lower_raw(&ast, p).map_err(|e| err(line, e.to_string()))? {
        Value::Element(e) => Ok(e),
        Value::Tensor(_) => Err(err(line, "expected a plain element, found a tensor")),
    }
}

fn parse_tensor(src: &str, p: &Presentation, line: usize) -> Result<TensorElement, FormatError> {
    let ast = ast::parse(src).map_err(|e| err(line, e.to_string()))?;
    match eval::lower_raw(&ast, p).map_err(|e| err(line, e.to_string()))? {
        Value::Tensor(t) if t.rank() == 2 => Ok(t),
        Value::Tensor(_) => Err(err(line, "coproduct images must have rank 2")),
        // a single term like `g ox g` parses as a tensor, but e.g. `0` does
        // not; promote a plain element to x (x) 1 only when it is scalar zero
        Value::Element(e) if e.is_zero() => {
            TensorElement::zero(p.alphabet().clone(), 2).map_err(|e| err(line, e.to_string()))
        }
        Value::Element(_) => Err(err(line, "expected a rank-2 tensor (use `ox`)")),
    }
}

fn parse_scalar(src: &str, p: &Presentation, line: usize) -> Result<Scalar, FormatError> {
    let e = parse_element(src, p, line)?;
    if e.is_zero() {
        return Ok(scalar::zero());
    }
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if w.is_unit() => Ok(c.clone()),
        _ => Err(err(line, "counit images must be scalars")),
    }
}

/// Parses the interchange format.
pub fn parse_text(source: &str) -> Result<LoadedAlgebra, FormatError> {
    let mut name: Option<String> = None;
    let mut flavor = Flavor::Plain;
    let mut generators: Vec<Generator> = Vec::new();
    // body lines are deferred until the alphabet is complete
    let mut body: Vec<(usize, String, String)> = Vec::new();

    for (lineno, raw) in source.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(lineno, format!("malformed line `{line}`")))?;
        let rest = rest.trim();
        match keyword {
            "algebra" => {
                if name.is_some() {
                    return Err(err(lineno, "duplicate `algebra` line"));
                }
                name = Some(rest.to_string());
            }
            "flavor" => {
                flavor = match rest {
                    "braided" => Flavor::Braided,
                    "plain" => Flavor::Plain,
                    other => return Err(err(lineno, format!("unknown flavor `{other}`"))),
                };
            }
            "generator" => {
                let (token, parity_field) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err(lineno, "generator lines need `<token> parity=...`"))?;
                let gen = generator_from_token(token)
                    .ok_or_else(|| err(lineno, format!("unrecognized generator token `{token}`")))?;
                let declared_odd = match parity_field.trim() {
                    "parity=odd" => true,
                    "parity=even" => false,
                    other => return Err(err(lineno, format!("bad parity field `{other}`"))),
                };
                if gen.parity().is_odd() != declared_odd {
                    return Err(err(
                        lineno,
                        format!("generator `{token}` has the wrong declared parity"),
                    ));
                }
                generators.push(gen);
            }
            "relation" | "coproduct" | "counit" | "antipode" => {
                body.push((lineno, keyword.to_string(), rest.to_string()));
            }
            other => return Err(err(lineno, format!("unknown keyword `{other}`"))),
        }
    }

    let name = name.ok_or_else(|| err(1, "missing `algebra` line"))?;
    if generators.is_empty() {
        return Err(err(1, "no `generator` lines"));
    }
    let alphabet = Alphabet::new(generators);
    // a relation-free scratch presentation so the expression parser can
    // resolve generator tokens
    let scratch = Presentation::new(name.clone(), alphabet.clone(), Vec::new(), 4);

    let mut relations = Vec::new();
    let mut maps = StructureMaps::empty(alphabet.clone(), flavor);
    type PendingMaps = (u8, Option<TensorElement>, Option<Scalar>, Option<Element>);
    let mut pending: Vec<PendingMaps> =
        (0..alphabet.len() as u8).map(|i| (i, None, None, None)).collect();
    let mut any_map_line = false;

    for (lineno, keyword, rest) in body {
        if keyword == "relation" {
            let e = parse_element(&rest, &scratch, lineno)?;
            if e.is_zero() {
                return Err(err(lineno, "zero relation"));
            }
            relations.push(e);
            continue;
        }
        any_map_line = true;
        let (token, expr) = rest
            .split_once('=')
            .ok_or_else(|| err(lineno, format!("{keyword} lines need `<token> = <expr>`")))?;
        let token = token.trim();
        let idx = alphabet
            .index_of(token)
            .ok_or_else(|| err(lineno, format!("unknown generator `{token}`")))?;
        let slot = &mut pending[idx as usize];
        match keyword.as_str() {
            "coproduct" => slot.1 = Some(parse_tensor(expr.trim(), &scratch, lineno)?),
            "counit" => slot.2 = Some(parse_scalar(expr.trim(), &scratch, lineno)?),
            "antipode" => slot.3 = Some(parse_element(expr.trim(), &scratch, lineno)?),
            _ => unreachable!(),
        }
    }

    let maps = if any_map_line {
        for (idx, cop, cou, ant) in pending {
            let token = alphabet.generator(idx).token();
            let cop = cop.ok_or_else(|| err(1, format!("missing coproduct for `{token}`")))?;
            let cou = cou.ok_or_else(|| err(1, format!("missing counit for `{token}`")))?;
            let ant = ant.ok_or_else(|| err(1, format!("missing antipode for `{token}`")))?;
            maps.set(idx, cop, cou, ant);
        }
        Some(maps)
    } else {
        None
    };

    Ok(LoadedAlgebra {
        presentation: Presentation::new(name, alphabet, relations, 4),
        maps,
    })
}

/// Renders a presentation (and its maps, when given) in the interchange
/// format.  `parse_text` inverts this exactly.
pub fn export_text(p: &Presentation, maps: Option<&StructureMaps>) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", p.name()));
    if let Some(m) = maps {
        let flavor = match m.flavor() {
            Flavor::Braided => "braided",
            Flavor::Plain => "plain",
        };
        out.push_str(&format!("flavor {flavor}\n"));
    }
    for g in p.generators() {
        let parity = if g.parity().is_odd() { "odd" } else { "even" };
        out.push_str(&format!("generator {} parity={parity}\n", g.token()));
    }
    for r in p.relations() {
        out.push_str(&format!("relation {}\n", r.render()));
    }
    if let Some(m) = maps {
        for i in 0..p.alphabet().len() as u8 {
            let token = p.alphabet().generator(i).token();
            if let Ok(t) = m.coproduct_image(i) {
                out.push_str(&format!("coproduct {token} = {}\n", t.render()));
            }
            if let Ok(c) = m.counit_image(i) {
                out.push_str(&format!("counit {token} = {}\n", scalar::render(c)));
            }
            if let Ok(e) = m.antipode_image(i) {
                out.push_str(&format!("antipode {token} = {}\n", e.render()));
            }
        }
    }
    out
}

/// JSON mirror of the interchange format.
pub fn export_json(p: &Presentation, maps: Option<&StructureMaps>) -> serde_json::Value {
    let generators: Vec<serde_json::Value> = p
        .generators()
        .iter()
        .map(|g| {
            serde_json::json!({
                "token": g.token(),
                "parity": if g.parity().is_odd() { "odd" } else { "even" },
            })
        })
        .collect();
    let relations: Vec<String> = p.relations().iter().map(|r| r.render()).collect();
    let mut doc = serde_json::json!({
        "algebra": p.name(),
        "generators": generators,
        "relations": relations,
    });
    if let Some(m) = maps {
        let flavor = match m.flavor() {
            Flavor::Braided => "braided",
            Flavor::Plain => "plain",
        };
        let mut entries = Vec::new();
        for i in 0..p.alphabet().len() as u8 {
            entries.push(serde_json::json!({
                "generator": p.alphabet().generator(i).token(),
                "coproduct": m.coproduct_image(i).map(|t| t.render()).unwrap_or_default(),
                "counit": m.counit_image(i).map(scalar::render).unwrap_or_default(),
                "antipode": m.antipode_image(i).map(|e| e.render()).unwrap_or_default(),
            }));
        }
        doc["flavor"] = serde_json::json!(flavor);
        doc["maps"] = serde_json::json!(entries);
    }
    doc
}

fn is_preset_name(spec: &str) -> bool {
    matches!(spec.split_once(':'), Some((kind, n))
        if matches!(kind, "pb" | "pf" | "pbg" | "pbk")
            && !n.is_empty()
            && n.bytes().all(|b| b.is_ascii_digit()))
}

/// Resolves `--algebra`: a preset pattern like `pb:2` or a path to a
/// presentation file.
pub fn load_algebra(spec: &str) -> Result<LoadedAlgebra, String> {
    if is_preset_name(spec) {
        let (presentation, maps) = parastat::presets::load(spec).map_err(|e| e.to_string())?;
        return Ok(LoadedAlgebra {
            presentation,
            maps: Some(maps),
        });
    }
    let source = std::fs::read_to_string(spec)
        .map_err(|e| format!("cannot read presentation file `{spec}`: {e}"))?;
    parse_text(&source).map_err(|e| format!("{spec}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use parastat::presets;
    use parastat::quotient;

    #[test]
    fn export_parse_round_trip_pb() {
        let (p, m) = presets::load("pb:1").unwrap();
        let text = export_text(&p, Some(&m));
        let loaded = parse_text(&text).unwrap();
        assert_eq!(loaded.presentation.name(), "pb:1");
        assert_eq!(loaded.presentation.relations(), p.relations());
        let lm = loaded.maps.unwrap();
        assert_eq!(lm.flavor(), Flavor::Braided);
        for i in 0..p.alphabet().len() as u8 {
            assert_eq!(lm.coproduct_image(i).unwrap(), m.coproduct_image(i).unwrap());
            assert_eq!(lm.counit_image(i).unwrap(), m.counit_image(i).unwrap());
            assert_eq!(lm.antipode_image(i).unwrap(), m.antipode_image(i).unwrap());
        }
    }

    #[test]
    fn export_parse_round_trip_pbg() {
        let (p, m) = presets::load("pbg:1").unwrap();
        let text = export_text(&p, Some(&m));
        let loaded = parse_text(&text).unwrap();
        assert_eq!(loaded.presentation.relations(), p.relations());
        let lm = loaded.maps.unwrap();
        let g = p.alphabet().index_of("g").unwrap();
        assert_eq!(lm.antipode_image(g).unwrap(), m.antipode_image(g).unwrap());
        // the reloaded presentation computes the same normal forms
        let b = loaded.presentation.generator_element("b1+").unwrap();
        let gel = loaded.presentation.generator_element("g").unwrap();
        let gbg = gel.multiply(&b).unwrap().multiply(&gel).unwrap();
        let nf = quotient::normal_form(&gbg, &loaded.presentation, 3).unwrap();
        assert_eq!(nf.render(), "-b1+");
    }

    #[test]
    fn incomplete_maps_are_rejected() {
        let (p, m) = presets::load("pb:1").unwrap();
        let mut text = export_text(&p, Some(&m));
        let cut = text.find("antipode b1-").unwrap();
        text.truncate(cut);
        let e = parse_text(&text).unwrap_err();
        assert!(e.message.contains("missing antipode"), "{e}");
    }

    #[test]
    fn parity_mismatch_is_rejected() {
        let text = "algebra x\ngenerator b1+ parity=even\n";
        let e = parse_text(text).unwrap_err();
        assert!(e.message.contains("parity"), "{e}");
    }

    #[test]
    fn preset_names_do_not_hit_the_filesystem() {
        assert!(is_preset_name("pbk:2"));
        assert!(!is_preset_name("pb:x"));
        assert!(!is_preset_name("./pb:1.txt"));
        assert!(load_algebra("does-not-exist.alg").is_err());
    }
}
