//! Reader and writer for the RevLib `.real` circuit format.
//!
//! Supported gate lines are `t<k>` (multiple-controlled Toffoli with the last
//! operand as target) and `f2` (SWAP). Negative controls and larger Fredkin
//! gates are rejected.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::circuit::{Circuit, Gate, GateKind, Line};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line_number}: {message}{}", token.as_ref().map(|t| format!(" (`{t}`)")).unwrap_or_default())]
pub struct ParseError {
    pub line_number: usize,
    pub message: String,
    pub token: Option<String>,
}

impl ParseError {
    fn new(line_number: usize, message: impl Into<String>) -> Self {
        ParseError { line_number: line_number.max(1), message: message.into(), token: None }
    }

    fn at(line_number: usize, message: impl Into<String>, token: &str) -> Self {
        ParseError { token: Some(token.to_string()), ..Self::new(line_number, message) }
    }
}

/// Header directives as they appear in the file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RealHeader {
    pub version: Option<String>,
    pub numvars: Option<usize>,
    pub variables: Vec<String>,
    pub inputs: Option<Vec<String>>,
    pub outputs: Option<Vec<String>>,
    pub constants: Option<String>,
    pub garbage: Option<String>,
}

/// A parsed `.real` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealDocument {
    pub header: RealHeader,
    pub circuit: Circuit,
    /// Quantum cost stated in a `# ... quantum cost(s): N` comment, if any.
    pub cost_annotation: Option<u64>,
}

pub fn parse_real(text: &str) -> Result<Circuit, ParseError> {
    parse_document(text).map(|d| d.circuit)
}

pub fn parse_document(text: &str) -> Result<RealDocument, ParseError> {
    let mut header = RealHeader::default();
    let mut cost_annotation = None;
    let mut index: Option<HashMap<String, usize>> = None;
    let mut lines_meta: Vec<Line> = Vec::new();
    let mut gates = Vec::new();
    let mut ended = false;
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let (content, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(comment) = comment {
            if cost_annotation.is_none() {
                cost_annotation = cost_from_comment(comment);
            }
        }
        let mut tokens = content.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        if ended {
            return Err(ParseError::at(lineno, "content after .end", head));
        }
        let args: Vec<&str> = tokens.collect();

        if let Some(directive) = head.strip_prefix('.') {
            match directive.to_ascii_lowercase().as_str() {
                "version" => header.version = Some(args.join(" ")),
                "numvars" => {
                    let [n] = args[..] else {
                        return Err(ParseError::new(lineno, ".numvars takes one argument"));
                    };
                    let n: usize = n.parse().map_err(|_| ParseError::at(lineno, "invalid .numvars", n))?;
                    if n == 0 {
                        return Err(ParseError::at(lineno, ".numvars must be positive", "0"));
                    }
                    header.numvars = Some(n);
                }
                "variables" => header.variables = args.iter().map(|s| s.to_string()).collect(),
                "inputs" => header.inputs = Some(args.iter().map(|s| s.to_string()).collect()),
                "outputs" => header.outputs = Some(args.iter().map(|s| s.to_string()).collect()),
                "constants" => header.constants = Some(args.concat()),
                "garbage" => header.garbage = Some(args.concat()),
                "begin" => {
                    if index.is_some() {
                        return Err(ParseError::at(lineno, "repeated .begin", head));
                    }
                    lines_meta = build_lines(&header, lineno)?;
                    index = Some(lines_meta.iter().enumerate().map(|(i, l)| (l.name.clone(), i)).collect());
                }
                "end" => {
                    if index.is_none() {
                        return Err(ParseError::at(lineno, ".end before .begin", head));
                    }
                    ended = true;
                }
                _ => return Err(ParseError::at(lineno, "unsupported directive", head)),
            }
            continue;
        }

        let Some(index) = &index else {
            return Err(ParseError::at(lineno, "gate before .begin", head));
        };
        gates.push(parse_gate(head, &args, index, lineno)?);
    }

    if index.is_none() {
        if header.numvars.is_none() {
            return Err(ParseError::new(last_line, "missing .numvars"));
        }
        return Err(ParseError::new(last_line, "missing .begin"));
    }
    if !ended {
        return Err(ParseError::new(last_line, "missing .end"));
    }
    let circuit = Circuit::from_parts(lines_meta, gates).map_err(|e| ParseError::new(last_line, e.to_string()))?;
    Ok(RealDocument { header, circuit, cost_annotation })
}

fn cost_from_comment(comment: &str) -> Option<u64> {
    let lower = comment.to_ascii_lowercase();
    let at = lower.find("quantum cost")?;
    let rest = &lower[at..];
    let rest = &rest[rest.find(':')? + 1..];
    let digits: String = rest.trim_start().chars().take_while(|c| c.is_ascii_digit()).collect();
    digits.parse().ok()
}

fn build_lines(header: &RealHeader, lineno: usize) -> Result<Vec<Line>, ParseError> {
    let n = header.numvars.ok_or_else(|| ParseError::new(lineno, "missing .numvars"))?;
    let check = |what: &str, len: usize| {
        if len != n {
            Err(ParseError::new(lineno, format!("{what} lists {len} entries but .numvars is {n}")))
        } else {
            Ok(())
        }
    };
    check(".variables", header.variables.len())?;
    let mut seen = HashSet::new();
    for v in &header.variables {
        if !seen.insert(v.as_str()) {
            return Err(ParseError::at(lineno, "duplicate variable", v));
        }
    }
    if let Some(inputs) = &header.inputs {
        check(".inputs", inputs.len())?;
    }
    if let Some(outputs) = &header.outputs {
        check(".outputs", outputs.len())?;
    }
    let constants: Vec<char> = header.constants.as_deref().map(|s| s.chars().collect()).unwrap_or_else(|| vec!['-'; n]);
    check(".constants", constants.len())?;
    let garbage: Vec<char> = header.garbage.as_deref().map(|s| s.chars().collect()).unwrap_or_else(|| vec!['-'; n]);
    check(".garbage", garbage.len())?;

    header
        .variables
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let constant = match constants[i] {
                '-' => None,
                '0' => Some(false),
                '1' => Some(true),
                c => return Err(ParseError::at(lineno, "invalid .constants entry", &c.to_string())),
            };
            let garbage = match garbage[i] {
                '-' => false,
                '1' => true,
                c => return Err(ParseError::at(lineno, "invalid .garbage entry", &c.to_string())),
            };
            Ok(Line {
                name: name.clone(),
                input_label: header.inputs.as_ref().map_or_else(|| name.clone(), |v| v[i].clone()),
                output_label: header.outputs.as_ref().map_or_else(|| name.clone(), |v| v[i].clone()),
                constant,
                garbage,
            })
        })
        .collect()
}

fn parse_gate(head: &str, args: &[&str], index: &HashMap<String, usize>, lineno: usize) -> Result<Gate, ParseError> {
    let lower = head.to_ascii_lowercase();
    let (family, arity) = lower.split_at(1.min(lower.len()));
    let arity: usize = match (family, arity.parse()) {
        ("t" | "f", Ok(k)) if k >= 1 => k,
        _ => return Err(ParseError::at(lineno, "unknown gate mnemonic", head)),
    };
    if args.len() != arity {
        return Err(ParseError::at(lineno, format!("gate expects {arity} operands, found {}", args.len()), head));
    }
    let mut operands = Vec::with_capacity(arity);
    for &a in args {
        if a.starts_with('-') || a.ends_with('\'') {
            return Err(ParseError::at(lineno, "negative controls are not supported", a));
        }
        let line = *index.get(a).ok_or_else(|| ParseError::at(lineno, "undeclared variable", a))?;
        if operands.contains(&line) {
            return Err(ParseError::at(lineno, "line used twice in one gate", a));
        }
        operands.push(line);
    }
    match family {
        "t" => {
            let target = operands.pop().expect("arity >= 1");
            Gate::controlled(operands, target).map_err(|e| ParseError::at(lineno, e.to_string(), head))
        }
        _ if arity == 2 => {
            Gate::swap(operands[0], operands[1]).map_err(|e| ParseError::at(lineno, e.to_string(), head))
        }
        _ => Err(ParseError::at(lineno, "only two-line Fredkin (f2) gates are supported", head)),
    }
}

/// Serializes `c` as a `.real` document.
pub fn write_real(c: &Circuit) -> String {
    let mut out = String::new();
    let names: Vec<&str> = c.lines().iter().map(|l| l.name.as_str()).collect();
    let join = |f: &dyn Fn(&Line) -> String| c.lines().iter().map(f).collect::<Vec<_>>().join(" ");
    out.push_str(".version 1.0\n");
    let _ = writeln!(out, ".numvars {}", c.num_lines());
    let _ = writeln!(out, ".variables {}", names.join(" "));
    let _ = writeln!(out, ".inputs {}", join(&|l| l.input_label.clone()));
    let _ = writeln!(out, ".outputs {}", join(&|l| l.output_label.clone()));
    let constants: String = c
        .lines()
        .iter()
        .map(|l| match l.constant {
            None => '-',
            Some(false) => '0',
            Some(true) => '1',
        })
        .collect();
    let garbage: String = c.lines().iter().map(|l| if l.garbage { '1' } else { '-' }).collect();
    let _ = writeln!(out, ".constants {constants}");
    let _ = writeln!(out, ".garbage {garbage}");
    out.push_str(".begin\n");
    for g in c.gates() {
        match g.kind() {
            GateKind::Swap => {
                let _ = writeln!(out, "f2 {} {}", names[g.controls()[0]], names[g.target()]);
            }
            _ => {
                let _ = write!(out, "t{}", g.num_lines());
                for l in g.lines() {
                    let _ = write!(out, " {}", names[l]);
                }
                out.push('\n');
            }
        }
    }
    out.push_str(".end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
# small example
.version 1.0
.numvars 3
.variables a b c
.inputs a b c
.outputs a b c
.constants ---
.garbage ---
.begin
t3 a b c
t1 a
.end
";

    fn err_of(text: &str) -> ParseError {
        parse_real(text).unwrap_err()
    }

    fn wrap(gates: &str) -> String {
        format!(".numvars 3\n.variables a b c\n.begin\n{gates}\n.end\n")
    }

    #[test]
    fn parses_small_circuit() {
        let c = parse_real(SMALL).unwrap();
        assert_eq!(c.num_lines(), 3);
        assert_eq!(c.gates(), &[Gate::toffoli(0, 1, 2).unwrap(), Gate::not(0)]);
    }

    #[test]
    fn last_operand_is_target() {
        let c = parse_real(&wrap("t3 c a b\nt2 c a\nf2 c a")).unwrap();
        assert_eq!(c.gates()[0], Gate::toffoli(0, 2, 1).unwrap());
        assert_eq!(c.gates()[1], Gate::cnot(2, 0).unwrap());
        assert_eq!(c.gates()[2], Gate::swap(2, 0).unwrap());
    }

    #[test]
    fn mct_from_t4() {
        let c = parse_real(".numvars 4\n.variables a b c d\n.begin\nt4 a b c d\n.end\n").unwrap();
        assert_eq!(c.gates()[0].kind(), GateKind::Mct);
    }

    #[test]
    fn repeated_line_in_gate() {
        let e = err_of(&wrap("t2 a a"));
        assert_eq!(e.line_number, 4);
        assert_eq!(e.token.as_deref(), Some("a"));
    }

    #[test]
    fn unknown_mnemonic() {
        let e = err_of(&wrap("v a b"));
        assert_eq!(e.line_number, 4);
        assert!(e.message.contains("mnemonic"));
        assert!(err_of(&wrap("t0")).message.contains("mnemonic"));
        assert!(err_of(&wrap("p a b c")).message.contains("mnemonic"));
    }

    #[test]
    fn undeclared_variable() {
        let e = err_of(&wrap("t2 a z"));
        assert_eq!(e.token.as_deref(), Some("z"));
    }

    #[test]
    fn missing_numvars() {
        let e = err_of(".variables a b\n.begin\nt1 a\n.end\n");
        assert_eq!(e.line_number, 2);
        assert!(e.message.contains(".numvars"));
        assert!(err_of("# nothing here\n").message.contains(".numvars"));
    }

    #[test]
    fn gate_before_begin() {
        let e = err_of(".numvars 2\n.variables a b\nt1 a\n.begin\n.end\n");
        assert_eq!(e.line_number, 3);
        assert!(e.message.contains(".begin"));
    }

    #[test]
    fn negative_controls_rejected() {
        assert!(err_of(&wrap("t2 -a b")).message.contains("negative"));
    }

    #[test]
    fn large_fredkin_rejected() {
        assert!(err_of(&wrap("f3 a b c")).message.contains("Fredkin"));
    }

    #[test]
    fn arity_mismatch() {
        assert!(err_of(&wrap("t3 a b")).message.contains("operands"));
    }

    #[test]
    fn list_length_mismatch() {
        let e = err_of(".numvars 3\n.variables a b\n.begin\n.end\n");
        assert!(e.message.contains(".variables"));
        let e = err_of(".numvars 2\n.variables a b\n.constants 0\n.begin\n.end\n");
        assert!(e.message.contains(".constants"));
    }

    #[test]
    fn missing_end() {
        assert!(err_of(".numvars 1\n.variables a\n.begin\nt1 a\n").message.contains(".end"));
    }

    #[test]
    fn header_defaults_and_metadata() {
        let doc = parse_document(
            "# Used Library: MCT (gates: 2, quantum costs: 6)\n.numvars 2\n.variables a b\n.inputs a 0\n.outputs f g\n.constants -0\n.garbage -1\n.begin\nt2 a b\nt1 b\n.end\n",
        )
        .unwrap();
        assert_eq!(doc.cost_annotation, Some(6));
        let l = &doc.circuit.lines()[1];
        assert_eq!(l.constant, Some(false));
        assert!(l.garbage);
        assert_eq!(l.input_label, "0");
        assert_eq!(l.output_label, "g");
        let plain = parse_real(&wrap("t1 a")).unwrap();
        assert!(plain.lines().iter().all(|l| l.constant.is_none() && !l.garbage));
    }

    #[test]
    fn writes_swap_as_f2() {
        let c = Circuit::with_gates(2, [Gate::swap(0, 1).unwrap()]).unwrap();
        let text = write_real(&c);
        assert!(text.lines().any(|l| l == "f2 x0 x1"));
        assert_eq!(parse_real(&text).unwrap(), c);
    }

    #[test]
    fn empty_circuit_document() {
        let c = Circuit::new(1).unwrap();
        let text = write_real(&c);
        assert!(text.contains(".numvars 1\n"));
        assert!(text.contains(".begin\n.end\n"));
        assert_eq!(parse_real(&text).unwrap(), c);
    }

    #[test]
    fn round_trip_small() {
        let c = parse_real(SMALL).unwrap();
        assert_eq!(parse_real(&write_real(&c)).unwrap(), c);
    }
}
