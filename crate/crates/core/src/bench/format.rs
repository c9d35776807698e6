//! Plain-text instance files and extreme-point reports.
//!
//! Instance files start with a header `MOMWB 1 <graphic|uniform> <k>`.
//! A graphic body is the vertex count followed by one line `u v w1 … wk` per
//! edge with 1-based endpoints. A uniform body is `m K` followed by one line
//! `w1 … wk` per element. Blank lines and lines starting with `#` are skipped.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::extreme::ExtremeResult;
use crate::matroid::{Matroid, Solution};
use crate::scalarize::{ObjectivePoint, TradeOff, WeightedInstance};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "MOMWB";

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn int<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{tok}`")))
}

fn expect_len(line: usize, toks: &[&str], n: usize) -> Result<()> {
    if toks.len() != n {
        return Err(Error::parse(line, format!("expected {n} fields, found {}", toks.len())));
    }
    Ok(())
}

fn check_weight(line: usize, w: u64) -> Result<u64> {
    if w == 0 {
        return Err(Error::parse(line, "weights must be at least 1"));
    }
    Ok(w)
}

pub fn parse_instance(text: &str) -> Result<WeightedInstance> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "empty instance file"))?;
    expect_len(hl, &header, 4)?;
    if header[0] != MAGIC {
        return Err(Error::parse(hl, format!("expected `{MAGIC}` header")));
    }
    let version: u32 = int(hl, header[1], "format version")?;
    if version != FORMAT_VERSION {
        return Err(Error::parse(hl, format!("unsupported format version {version}")));
    }
    let k: usize = int(hl, header[3], "objective count")?;
    if k == 0 {
        return Err(Error::parse(hl, "objective count must be positive"));
    }
    let mut weights = vec![Vec::new(); k];
    let matroid = match header[2] {
        "graphic" => {
            let (l, t) = lines.next().ok_or_else(|| Error::parse(hl, "missing vertex count"))?;
            expect_len(l, &t, 1)?;
            let vertex_count: usize = int(l, t[0], "vertex count")?;
            let mut edges = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for (l, t) in lines.by_ref() {
                expect_len(l, &t, 2 + k)?;
                let u: usize = int(l, t[0], "vertex")?;
                let v: usize = int(l, t[1], "vertex")?;
                if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                    return Err(Error::parse(l, format!("vertex out of range 1..={vertex_count}")));
                }
                if u == v {
                    return Err(Error::parse(l, "self-loop"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::parse(l, format!("parallel edge {u} {v}")));
                }
                edges.push((u - 1, v - 1));
                for (i, tok) in t[2..].iter().enumerate() {
                    weights[i].push(check_weight(l, int(l, tok, "weight")?)?);
                }
            }
            Matroid::graphic(vertex_count, edges)?
        }
        "uniform" => {
            let (l, t) = lines.next().ok_or_else(|| Error::parse(hl, "missing `m K` line"))?;
            expect_len(l, &t, 2)?;
            let m: usize = int(l, t[0], "ground set size")?;
            let capacity: usize = int(l, t[1], "capacity")?;
            let mut count = 0;
            for (l, t) in lines.by_ref() {
                expect_len(l, &t, k)?;
                for (i, tok) in t.iter().enumerate() {
                    weights[i].push(check_weight(l, int(l, tok, "weight")?)?);
                }
                count += 1;
            }
            if count != m {
                return Err(Error::parse(l, format!("declared {m} elements, found {count}")));
            }
            Matroid::uniform(m, capacity)?
        }
        other => return Err(Error::parse(hl, format!("unknown matroid kind `{other}`"))),
    };
    WeightedInstance::new(matroid, weights)
}

pub fn serialize_instance(inst: &WeightedInstance) -> String {
    let k = inst.objectives();
    let w = inst.weights();
    let row = |e: usize| (0..k).map(|i| w[i][e].to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    match inst.matroid() {
        Matroid::Graphic(g) => {
            writeln!(out, "{MAGIC} {FORMAT_VERSION} graphic {k}").unwrap();
            writeln!(out, "{}", g.vertex_count()).unwrap();
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                writeln!(out, "{} {} {}", u + 1, v + 1, row(e)).unwrap();
            }
        }
        Matroid::Uniform(u) => {
            writeln!(out, "{MAGIC} {FORMAT_VERSION} uniform {k}").unwrap();
            writeln!(out, "{} {}", inst.ground_size(), u.capacity()).unwrap();
            for e in 0..inst.ground_size() {
                writeln!(out, "{}", row(e)).unwrap();
            }
        }
    }
    out
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<WeightedInstance> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn write_instance(path: impl AsRef<Path>, inst: &WeightedInstance) -> Result<()> {
    fs::write(path, serialize_instance(inst))?;
    Ok(())
}

/// Extreme points with witnesses and a trade-off set, as read back from a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeReport {
    pub points: Vec<(ObjectivePoint, Solution)>,
    pub tradeoffs: Vec<TradeOff>,
}

impl From<&ExtremeResult> for ExtremeReport {
    fn from(r: &ExtremeResult) -> Self {
        ExtremeReport {
            points: r.images.iter().cloned().zip(r.solutions.iter().cloned()).collect(),
            tradeoffs: r.tradeoffs.clone(),
        }
    }
}

/// One `point <y1 … yk> <bitstring>` line per extreme point and one
/// `tradeoff <n1 … nk> / <d>` line per trade-off.
pub fn serialize_extreme_report(report: &ExtremeReport) -> String {
    let mut out = String::new();
    for (y, x) in &report.points {
        let coords: Vec<String> = y.coords().iter().map(i64::to_string).collect();
        writeln!(out, "point {} {}", coords.join(" "), x.to_bitstring()).unwrap();
    }
    for t in &report.tradeoffs {
        writeln!(out, "tradeoff {t}").unwrap();
    }
    out
}

pub fn parse_extreme_report(text: &str) -> Result<ExtremeReport> {
    let mut report = ExtremeReport {
        points: Vec::new(),
        tradeoffs: Vec::new(),
    };
    for (l, t) in content_lines(text) {
        match t[0] {
            "point" if t.len() >= 3 => {
                let coords = t[1..t.len() - 1]
                    .iter()
                    .map(|tok| int(l, tok, "coordinate"))
                    .collect::<Result<Vec<i64>>>()?;
                let x = Solution::from_bitstring(t[t.len() - 1])
                    .ok_or_else(|| Error::parse(l, "witness is not a bit string"))?;
                report.points.push((ObjectivePoint::new(coords), x));
            }
            "tradeoff" if t.len() >= 4 && t[t.len() - 2] == "/" => {
                let nums = t[1..t.len() - 2]
                    .iter()
                    .map(|tok| int(l, tok, "numerator"))
                    .collect::<Result<Vec<u64>>>()?;
                let den = int(l, t[t.len() - 1], "denominator")?;
                let tradeoff = TradeOff::new(nums, den).map_err(|e| Error::parse(l, e.to_string()))?;
                report.tradeoffs.push(tradeoff);
            }
            _ => return Err(Error::parse(l, format!("unrecognised line `{}`", t.join(" ")))),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarize::tests::triangle_instance;
    use proptest::prelude::*;

    const TRIANGLE: &str = "MOMWB 1 graphic 2\n3\n1 2 1 3\n2 3 3 1\n1 3 2 2\n";

    #[test]
    fn triangle_text() {
        assert_eq!(serialize_instance(&triangle_instance()), TRIANGLE);
        let back = parse_instance(TRIANGLE).unwrap();
        assert_eq!(back.weights(), triangle_instance().weights());
        assert_eq!(back.rank(), 2);
    }

    #[test]
    fn uniform_roundtrip_with_comments() {
        let text = "# U(1,3)\nMOMWB 1 uniform 2\n\n3 1\n1 6\n6 7\n11 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.rank(), 1);
        let again = parse_instance(&serialize_instance(&inst)).unwrap();
        assert_eq!(serialize_instance(&again), serialize_instance(&inst));
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            ("", 0),
            ("MOMWB 2 graphic 2\n3\n", 1),
            ("MOMWB 1 graphic 2\n3\n1 2 0 3\n", 3),
            ("MOMWB 1 graphic 2\n3\n1 2 1 3\n2 1 1 1\n", 4),
            ("MOMWB 1 graphic 2\n3\n1 4 1 3\n", 3),
            ("MOMWB 1 graphic 2\n3\n1 2 1\n", 3),
            ("MOMWB 1 uniform 1\n3 1\n1\n2\n", 2),
            ("MOMWB 1 matrix 1\n", 1),
        ];
        for (text, line) in cases {
            match parse_instance(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn extreme_report_roundtrip() {
        let r = crate::extreme::extreme_biobjective(&triangle_instance()).unwrap();
        let report = ExtremeReport::from(&r);
        let text = serialize_extreme_report(&report);
        assert!(text.starts_with("point 3 5 "));
        assert!(text.contains("tradeoff 1 1 / 2"));
        assert_eq!(parse_extreme_report(&text).unwrap(), report);
    }

    proptest! {
        #[test]
        fn instance_roundtrip(
            edges in proptest::collection::btree_set((0usize..6, 0usize..6), 1..12),
            seed_weights in proptest::collection::vec((1u64..1000, 1u64..1000, 1u64..1000), 12),
        ) {
            let edges: Vec<(usize, usize)> = edges.into_iter().filter(|(u, v)| u < v).collect();
            prop_assume!(!edges.is_empty());
            let m = edges.len();
            let weights = vec![
                seed_weights[..m].iter().map(|w| w.0).collect(),
                seed_weights[..m].iter().map(|w| w.1).collect(),
                seed_weights[..m].iter().map(|w| w.2).collect(),
            ];
            let inst = WeightedInstance::new(Matroid::graphic(6, edges).unwrap(), weights).unwrap();
            let text = serialize_instance(&inst);
            let back = parse_instance(&text).unwrap();
            prop_assert_eq!(back.weights(), inst.weights());
            prop_assert_eq!(back.matroid(), inst.matroid());
            prop_assert_eq!(serialize_instance(&back), text);
        }
    }
}
